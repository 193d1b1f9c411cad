"""The Euclidean motion group E(2) and its complexification C^2 x C*.

The representation ``pi^r`` acts on ``L^2(T)``, identified with ``l^2(Z)``
through the basis ``e_n = exp(i n theta)``, by
``pi^r(x, y, z) F(theta) = exp(i r (x cos theta + y sin theta)) F(theta - s)``
with ``z = exp(i s)``. For complex points the first factor is a
multiplication operator of norm ``exp(r A)``, ``A = |Im(x, y)|``, and the
shift becomes the diagonal ``e_n -> exp(-i n s) e_n``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
import scipy.sparse as sp
from scipy.linalg import eigvalsh_tridiagonal

from .descriptors import WeightDescriptor
from .verdict import Report, Status, Verdict

DEFAULT_BAND = 1e-3


class WindowTooSmall(ValueError):
    """The supremum over the basis window has not stabilised."""


@dataclass(frozen=True)
class E2CPoint:
    """Point ``(x, y, z)`` of ``E(2)_C``; real points have real x, y and ``|z| = 1``."""

    x: complex
    y: complex
    z: complex

    def __post_init__(self) -> None:
        if complex(self.z) == 0:
            raise ValueError("z must be nonzero")

    @property
    def s(self) -> complex:
        """``s`` with ``z = exp(i s)`` and ``0 <= Re s < 2 pi``."""
        z = complex(self.z)
        arg = cmath.phase(z) % (2 * math.pi)
        return complex(arg, -math.log(abs(z)))

    @property
    def A(self) -> float:
        return math.hypot(complex(self.x).imag, complex(self.y).imag)

    @property
    def is_real(self) -> bool:
        return complex(self.x).imag == 0 and complex(self.y).imag == 0 and abs(abs(complex(self.z)) - 1) < 1e-15


def rho(z: complex) -> np.ndarray:
    """Holomorphic rotation matrix: ``cos s = (z + 1/z)/2``, ``sin s = (z - 1/z)/(2i)``."""
    z = complex(z)
    c = (z + 1 / z) / 2
    s = (z - 1 / z) / 2j
    return np.array([[c, -s], [s, c]], dtype=complex)


def e2_mul(p: E2CPoint, q: E2CPoint) -> E2CPoint:
    xy = np.array([p.x, p.y], dtype=complex) + rho(p.z) @ np.array([q.x, q.y], dtype=complex)
    return E2CPoint(complex(xy[0]), complex(xy[1]), complex(p.z) * complex(q.z))


def e2_exp(s: complex, x: complex, y: complex) -> E2CPoint:
    """``exp(sS + xX + yY)``, with the removable singularity at ``s = 0`` handled by series."""
    s = complex(s)
    if abs(s) < 1e-4:
        s2 = s * s
        sinc = 1 - s2 / 6 + s2 * s2 / 120
        cosc = -s / 2 + s * s2 / 24            # (cos s - 1) / s
    else:
        sinc = cmath.sin(s) / s
        cosc = (cmath.cos(s) - 1) / s
    X = sinc * x + cosc * y
    Y = -cosc * x + sinc * y
    z = cmath.exp(1j * s)
    return E2CPoint(_tidy(X), _tidy(Y), _tidy(z))


def _tidy(v: complex) -> complex:
    return complex(v.real, v.imag)


# ------------------------------------------------------------ Lie derivatives

def _window(N: int) -> np.ndarray:
    if N < 0:
        raise ValueError("window must be non-negative")
    return np.arange(-N, N + 1)


def e2_lie_op(T: str, r: float, N: int) -> np.ndarray:
    """Matrix of ``d pi^r(T)`` on ``span{e_n : |n| <= N}``, rows and columns ordered by n."""
    if r <= 0:
        raise ValueError("r must be positive")
    n = _window(N)
    size = n.size
    T = T.upper()
    if T == "S":
        return np.diag(-1j * n.astype(float))
    M = np.zeros((size, size), dtype=complex)
    idx = np.arange(size - 1)
    if T == "X":
        M[idx + 1, idx] = 0.5j * r     # e_n -> e_{n+1}
        M[idx, idx + 1] = 0.5j * r     # e_n -> e_{n-1}
    elif T == "Y":
        M[idx + 1, idx] = 0.5 * r
        M[idx, idx + 1] = -0.5 * r
    else:
        raise ValueError(f"unknown generator {T!r}; use S, X or Y")
    return M


def e2_laplacian_diag(r: float, N: int) -> np.ndarray:
    n = _window(N)
    return (n * n + r * r).astype(float)


def e2_laplacian_weight(kind: str, r: float, n, *, m: float = 1, t: float = 1.0):
    """``(1 + n^2 + r^2)^m`` for ``kind='poly'``, ``exp(t sqrt(n^2 + r^2))`` for ``kind='exp'``."""
    if r <= 0:
        raise ValueError("r must be positive")
    n = np.asarray(n, dtype=float)
    if kind == "poly":
        if m < 1:
            raise ValueError("m must be >= 1")
        out = (1 + n * n + r * r) ** m
    elif kind == "exp":
        if t <= 0:
            raise ValueError("t must be positive")
        out = np.exp(t * np.sqrt(n * n + r * r))
    else:
        raise ValueError(f"unknown kind {kind!r}; use 'poly' or 'exp'")
    return float(out) if out.ndim == 0 else out


# ------------------------------------------------------- complexified action

@dataclass
class ComplexifiedNorm:
    bound: float
    truncated_norm: float
    argmax_n: int
    window: int
    theta_nodes: int

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def _log_shift_factor(p: E2CPoint, t: float, r: float, n: np.ndarray) -> np.ndarray:
    return n * p.s.imag - t * np.sqrt(n * n + r * r)


def e2_complexified_norm(p: E2CPoint, t: float, r: float, N: int, stab_tol: float = DEFAULT_BAND) -> ComplexifiedNorm:
    """Bound ``exp(rA) sup_n exp(n Im s - t sqrt(n^2 + r^2))`` and the truncated operator norm.

    The truncated matrix is ``M T W^-1`` on ``|n| <= N``: ``M`` is the
    multiplication by ``exp(i r (x cos theta + y sin theta))`` assembled from
    its Fourier coefficients on ``4N + 1`` theta nodes, ``T`` the diagonal
    shift and ``W`` the exponential Laplacian weight. ``WindowTooSmall`` is
    raised when the edge value of the sup exceeds the value over
    ``|n| <= N/2`` by more than ``stab_tol`` relatively.
    """
    if t <= 0 or r <= 0:
        raise ValueError("t and r must be positive")
    n = _window(N)
    logs = _log_shift_factor(p, t, r, n)
    k = int(np.argmax(logs))
    half = np.abs(n) <= N // 2
    drift = float(np.max(logs) - np.max(logs[half]))
    if math.expm1(drift) > stab_tol:
        raise WindowTooSmall(
            f"sup over |n| <= {N} still grows at the edge (relative drift {math.expm1(drift):.3g}); enlarge the window"
        )
    bound = math.exp(r * p.A + float(logs[k]))

    nodes = 4 * N + 1
    theta = 2 * math.pi * np.arange(nodes) / nodes
    mult = np.exp(1j * r * (complex(p.x) * np.cos(theta) + complex(p.y) * np.sin(theta)))
    coef = np.fft.fft(mult) / nodes                  # coef[j] ~ hat m_j, j mod nodes
    diff = n[:, None] - n[None, :]
    M = coef[diff % nodes]
    col = np.exp(-1j * n * p.s - t * np.sqrt(n * n + r * r))
    op = M * col[None, :]
    trunc = float(np.linalg.norm(op, 2))
    return ComplexifiedNorm(bound, trunc, int(n[k]), N, nodes)


# ------------------------------------------------------------------ spectrum

def laplacian_ball_value(p: E2CPoint) -> float:
    """``(Im x)^2 + (Im y)^2 + (log|z|)^2``."""
    return p.A**2 + math.log(abs(complex(p.z))) ** 2


def e2_laplacian_sweep(
    p: E2CPoint,
    t: float,
    n_max: int = 200,
    r_max: float = 50.0,
    r_points: int = 50,
    r_min: float = 1e-2,
    band: float = DEFAULT_BAND,
) -> Verdict:
    """Numeric membership from ``g(n, r) = n Im s + r A - t sqrt(n^2 + r^2)``.

    ``sup g`` over ``|n| <= n_max`` and a geometric r-grid is compared with
    the sup over the half-size grid: growth above ``band`` means out, a sup
    not above ``band`` means in, anything else is inconclusive.
    """
    n = np.arange(-n_max, n_max + 1, dtype=float)
    r = np.geomspace(r_min, r_max, r_points)
    g = n[:, None] * p.s.imag + r[None, :] * p.A - t * np.sqrt(n[:, None] ** 2 + r[None, :] ** 2)
    half = (np.abs(n)[:, None] <= n_max / 2) & (r[None, :] <= r_max / 2)
    full_sup = float(np.max(g))
    half_sup = float(np.max(g[half]))
    if full_sup - half_sup > band:
        status = Status.OUT
    elif full_sup <= band:
        status = Status.IN
    else:
        status = Status.INCONCLUSIVE
    i, j = np.unravel_index(int(np.argmax(g)), g.shape)
    return Verdict(
        status,
        evidence={
            "log_sup": full_sup,
            "log_sup_half_grid": half_sup,
            "argmax": {"n": int(n[i]), "r": float(r[j])},
            "n_max": n_max,
            "r_grid": {"min": r_min, "max": r_max, "points": r_points},
            "band": band,
        },
    )


def e2_spectrum_member(p: E2CPoint, d: WeightDescriptor, rel_tol: float = 1e-12, unit_tol: float = 1e-12) -> Verdict:
    """Closed-form membership for the built-in E(2) weights.

    * ``e2lap(t)``: the ball ``(Im x)^2 + (Im y)^2 + (log|z|)^2 <= t^2``;
    * ``abelradial(beta)`` / ``abelexp(beta1, beta2)`` read as weights on the
      translation subgroup: ``|z| = 1`` and ``(x', y') = rho(conj z) Im(x, y)``
      in the disc of radius ``log beta`` or the box ``|x'| <= log beta1``,
      ``|y'| <= log beta2``;
    * ``torus(beta1)`` read as a weight on the rotation subgroup: real
      ``x, y`` and ``1/beta <= |z| <= beta``.
    """
    z = complex(p.z)
    logz = math.log(abs(z))
    if d.family == "e2lap":
        t = d.get("t")
        val = laplacian_ball_value(p)
        ok = val <= t * t * (1 + rel_tol)
        return Verdict(Status.IN if ok else Status.OUT, evidence={"rule": "ball", "value": val, "t2": t * t})
    if d.family in ("abelradial", "abelexp"):
        im = np.array([complex(p.x).imag, complex(p.y).imag])
        ev = {"rule": "translation subgroup", "abs_z": abs(z)}
        if abs(abs(z) - 1) > unit_tol:
            return Verdict(Status.OUT, evidence=ev, reason="|z| != 1: rotation direction outside the subgroup")
        # on |z| = 1, rho(conj z) = rho(1/z) undoes the rotation of the real factor
        xp, yp = (rho(1 / z) @ im).real
        ev.update(x_prime=float(xp), y_prime=float(yp))
        if d.family == "abelradial":
            lb = math.log(d.get("beta"))
            ok = math.hypot(xp, yp) <= lb * (1 + rel_tol) + rel_tol
        else:
            betas = d.betas + (1.0,) * max(0, 2 - len(d.betas))
            ok = abs(xp) <= math.log(betas[0]) * (1 + rel_tol) + rel_tol and abs(yp) <= math.log(betas[1]) * (1 + rel_tol) + rel_tol
        return Verdict(Status.IN if ok else Status.OUT, evidence=ev)
    if d.family == "torus":
        beta = d.betas[0]
        ev = {"rule": "rotation subgroup", "abs_z": abs(z), "beta": beta}
        if complex(p.x).imag != 0 or complex(p.y).imag != 0:
            return Verdict(Status.OUT, evidence=ev, reason="imaginary translation outside the subgroup")
        ok = abs(logz) <= math.log(beta) * (1 + rel_tol) + rel_tol
        return Verdict(Status.IN if ok else Status.OUT, evidence=ev)
    raise ValueError(f"no E(2) membership rule for {d}")


# ------------------------------------------------------------------ coproduct

@dataclass
class CoproductLaplacian:
    """``A + B`` with ``A e_{m,n} = ((m+n)^2 + r^2 + s^2) e_{m,n}`` and
    ``B e_{m,n} = rs (e_{m-1,n+1} + e_{m+1,n-1})`` on ``|m|, |n| <= N``.

    Basis order is row-major in ``(m, n)``.
    """

    N: int
    r: float
    s: float
    A_diag: np.ndarray
    B: sp.csr_matrix

    def index(self, m: int, n: int) -> int:
        size = 2 * self.N + 1
        return (m + self.N) * size + (n + self.N)


def e2_coproduct_laplacian(r: float, s: float, N: int) -> CoproductLaplacian:
    if r <= 0 or s <= 0:
        raise ValueError("r and s must be positive")
    idx = _window(N)
    size = idx.size
    M, Nn = np.meshgrid(idx, idx, indexing="ij")
    A = ((M + Nn) ** 2 + r * r + s * s).astype(float).ravel()
    rows, cols = [], []
    flat = np.arange(size * size).reshape(size, size)
    # e_{m,n} -> e_{m-1,n+1} and e_{m+1,n-1}
    src = flat[1:, :-1].ravel()
    dst = flat[:-1, 1:].ravel()
    rows += [dst, src]
    cols += [src, dst]
    B = sp.csr_matrix(
        (np.full(2 * src.size, r * s), (np.concatenate(rows), np.concatenate(cols))),
        shape=(size * size, size * size),
    )
    return CoproductLaplacian(N, r, s, A, B)


def coproduct_b_norm(r: float, s: float, N: int) -> float:
    """Operator norm of the truncated ``B_{r,s}``.

    B preserves ``m + n``; each anti-diagonal block is a path adjacency
    matrix scaled by ``rs``, so the norm is the largest block eigenvalue.
    """
    best = 0.0
    for k in range(-2 * N, 2 * N + 1):
        length = 2 * N + 1 - abs(k)
        if length < 2:
            continue
        ev = eigvalsh_tridiagonal(np.zeros(length), np.full(length - 1, r * s))
        best = max(best, float(np.max(np.abs(ev))))
    return best


def coproduct_scalar_slack(m, n, r, s) -> np.ndarray:
    """``sqrt(m^2 + r^2) + sqrt(n^2 + s^2) - sqrt((m + n)^2 + (r + s)^2)``; never negative."""
    m, n, r, s = (np.asarray(v, dtype=float) for v in (m, n, r, s))
    return np.hypot(m, r) + np.hypot(n, s) - np.hypot(m + n, r + s)


def e2_radial_submult(
    wfun: Callable[[np.ndarray], np.ndarray],
    rs_samples: Sequence[tuple[float, float]],
    a_resolution: int = 201,
    tol: float = 1e-12,
) -> Report:
    """Check ``sup_{|r-s| <= a <= r+s} w(a) <= w(r) w(s)`` on sampled pairs.

    The sup is taken over ``a_resolution`` equispaced points including both
    endpoints; comparisons are made on logarithms.
    """
    violations = []
    for r, s in rs_samples:
        a = np.linspace(abs(r - s), r + s, a_resolution)
        vals = np.asarray(wfun(a), dtype=float)
        if np.any(vals <= 0):
            raise ValueError("weight must be positive on the sampled range")
        lhs = float(np.max(np.log(vals)))
        rhs = math.log(float(wfun(np.array([r]))[0])) + math.log(float(wfun(np.array([s]))[0]))
        if lhs > rhs + tol * max(1.0, abs(rhs)):
            violations.append({"r": r, "s": s, "a_at_sup": float(a[int(np.argmax(vals))]), "log_slack": rhs - lhs})
    return Report(not violations, len(rs_samples), violations, {"a_resolution": a_resolution})
