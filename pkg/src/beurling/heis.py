"""Heisenberg group and reduced Heisenberg group computations.

Points are triples ``(y, z, x)`` with the product
``(y, z, x)(y', z', x') = (y + y', z + z' + x y', x + x')``; complex
coordinates give the complexification C^3 with the same formulas.

The Schrodinger-type representation with parameter ``a != 0`` acts on
``L^2(R)`` by ``pi^a(y, z, x) xi(t) = exp(-i a (t y - z)) xi(t - x)``.
Its Fourier transform at ``a`` of a separable test function is an integral
operator whose matrix is computed here on a Hermite-function window in two
independent ways (closed-form kernel and direct quadrature).

Fourier transforms on R use ``F[g](w) = (2 pi)^(-1/2) int g(u) exp(i w u) du``.
With that convention the kernel of ``f(a)`` is
``K(t, x) = 2 pi F_yz[f](-a t, a, t - x)``, the constant 2 pi being the one
that makes the two methods agree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from numpy.polynomial import hermite as _H

from .descriptors import WeightDescriptor, as_log_weight_function
from .verdict import Report, Status, Verdict

KERNEL_CONSTANT = 2 * math.pi
DEFAULT_WINDOW = 8
DEFAULT_NODES = 64
DEFAULT_QUAD_TOL = 1e-6
DEFAULT_BAND = 1e-3


# ------------------------------------------------------------------ group law

@dataclass(frozen=True)
class HeisPoint:
    """Point ``(y, z, x)`` of the Heisenberg group or its complexification."""

    y: complex = 0.0
    z: complex = 0.0
    x: complex = 0.0

    def as_tuple(self) -> tuple[complex, complex, complex]:
        return (self.y, self.z, self.x)

    @property
    def is_real(self) -> bool:
        return all(complex(v).imag == 0 for v in self.as_tuple())

    def __mul__(self, other: "HeisPoint") -> "HeisPoint":
        return heis_mul(self, other)


IDENTITY = HeisPoint(0.0, 0.0, 0.0)


def heis_mul(g: HeisPoint, h: HeisPoint) -> HeisPoint:
    return HeisPoint(g.y + h.y, g.z + h.z + g.x * h.y, g.x + h.x)


def heis_inv(g: HeisPoint) -> HeisPoint:
    return HeisPoint(-g.y, -g.z + g.x * g.y, -g.x)


def heis_exp(x: complex, y: complex, z: complex) -> HeisPoint:
    """``exp(xX + yY + zZ) = (y, z + xy/2, x)``."""
    return HeisPoint(y, z + 0.5 * x * y, x)


def heis_bracket(u: Sequence[complex], v: Sequence[complex]) -> tuple[complex, complex, complex]:
    """Lie bracket in ``(x, y, z)`` coordinates, with ``[X, Y] = Z``."""
    return (0.0, 0.0, u[0] * v[1] - u[1] * v[0])


# -------------------------------------------------------------- weight symbol

def _log_w2(wfun) -> Callable[[np.ndarray], np.ndarray]:
    return as_log_weight_function(wfun)


def heis_weight_symbol(wfun, a: float, t) -> np.ndarray | float:
    """Multiplier of the extended weight on ``L^2(R)``: ``w(a t, -a)``."""
    if a == 0:
        raise ValueError("a must be nonzero")
    t_arr = np.atleast_1d(np.asarray(t, dtype=float))
    pts = np.stack([a * t_arr, np.full_like(t_arr, -a)], axis=-1)
    vals = np.exp(_log_w2(wfun)(pts))
    return float(vals[0]) if np.ndim(t) == 0 else vals


# ------------------------------------------------------------ test functions

@dataclass(frozen=True)
class GaussFactor:
    """``g(u) = P(u - c) exp(-(u - c)^2 / (2 s^2)) exp(i k u)``.

    ``coeffs`` are the monomial coefficients of P in increasing degree.
    """

    coeffs: tuple[complex, ...] = (1.0,)
    center: float = 0.0
    width: float = 1.0
    freq: float = 0.0

    def __post_init__(self) -> None:
        if self.width <= 0:
            raise ValueError("width must be positive")

    def __call__(self, u) -> np.ndarray:
        u = np.asarray(u, dtype=float)
        v = u - self.center
        poly = np.polynomial.polynomial.polyval(v, np.asarray(self.coeffs, dtype=complex))
        return poly * np.exp(-v * v / (2 * self.width**2)) * np.exp(1j * self.freq * u)

    def fourier(self, w) -> np.ndarray:
        """Closed-form ``(2 pi)^(-1/2) int g(u) exp(i w u) du``.

        Uses ``F[v^m exp(-v^2/2s^2)](w) = s i^m (s/sqrt 2)^m H_m(s w/sqrt 2) exp(-s^2 w^2/2)``
        with physicists' Hermite polynomials, then the shift and modulation rules.
        """
        w = np.asarray(w, dtype=float)
        s = self.width
        om = w + self.freq
        arg = s * om / math.sqrt(2)
        total = np.zeros(np.shape(om), dtype=complex)
        for m, cm in enumerate(self.coeffs):
            if cm == 0:
                continue
            basis = np.zeros(m + 1)
            basis[m] = 1.0
            total = total + cm * (1j**m) * (s / math.sqrt(2)) ** m * _H.hermval(arg, basis)
        return s * total * np.exp(-0.5 * (s * om) ** 2) * np.exp(1j * om * self.center)

    @property
    def is_odd(self) -> bool:
        return self.center == 0 and self.freq == 0 and all(c == 0 for c in self.coeffs[0::2])


@dataclass(frozen=True)
class SeparableTerm:
    gy: GaussFactor
    gz: GaussFactor
    gx: GaussFactor
    weight: complex = 1.0


@dataclass(frozen=True)
class SeparableFunction:
    """``f(y, z, x) = sum_k c_k gy_k(y) gz_k(z) gx_k(x)``."""

    terms: tuple[SeparableTerm, ...] = ()

    def __call__(self, y, z, x) -> np.ndarray:
        out = 0
        for term in self.terms:
            out = out + term.weight * term.gy(y) * term.gz(z) * term.gx(x)
        return np.asarray(out, dtype=complex)


def gaussian_test_function(width: float = 1.0) -> SeparableFunction:
    g = GaussFactor(width=width)
    return SeparableFunction((SeparableTerm(g, g, g),))


def mixed_test_function() -> SeparableFunction:
    """A less symmetric member of the family, used for cross-checks."""
    return SeparableFunction((
        SeparableTerm(GaussFactor(), GaussFactor(width=0.8, center=0.3), GaussFactor((0.0, 1.0))),
        SeparableTerm(GaussFactor((1.0, 0.0, 0.5), width=0.7, freq=0.4), GaussFactor(freq=-0.5), GaussFactor(center=-0.4, width=1.2), 0.5 - 0.25j),
    ))


# ---------------------------------------------------------------- quadrature

class QuadratureError(ValueError):
    """Estimated quadrature error exceeds the requested tolerance."""


@dataclass(frozen=True)
class QuadSpec:
    """Hermite basis window and Gauss-Hermite node count per axis."""

    window: int = DEFAULT_WINDOW
    nodes: int = DEFAULT_NODES
    tol: float = DEFAULT_QUAD_TOL

    def coarse(self) -> "QuadSpec":
        return QuadSpec(self.window, max(2, math.ceil(3 * self.nodes / 4)), self.tol)

    def to_dict(self) -> dict:
        return {"window": self.window, "nodes": self.nodes, "tol": self.tol}


def hermite_functions(n: int, t) -> np.ndarray:
    """``phi_0 .. phi_{n-1}`` at ``t`` by the normalized three-term recurrence."""
    t = np.asarray(t, dtype=float)
    out = np.empty((n,) + t.shape)
    out[0] = math.pi ** -0.25 * np.exp(-0.5 * t * t)
    if n > 1:
        out[1] = math.sqrt(2.0) * t * out[0]
    for j in range(1, n - 1):
        out[j + 1] = math.sqrt(2.0 / (j + 1)) * t * out[j] - math.sqrt(j / (j + 1)) * out[j - 1]
    return out


def hermite_function_derivatives(n: int, t) -> np.ndarray:
    """``phi_j' = sqrt(j/2) phi_{j-1} - sqrt((j+1)/2) phi_{j+1}``."""
    phi = hermite_functions(n + 1, t)
    out = np.empty((n,) + np.shape(t))
    for j in range(n):
        lower = math.sqrt(j / 2) * phi[j - 1] if j > 0 else 0.0
        out[j] = lower - math.sqrt((j + 1) / 2) * phi[j + 1]
    return out


def gauss_hermite_rule(nodes: int, center: float = 0.0, scale: float = 1.0) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights for ``int F(u) du`` with envelope ``exp(-((u - c)/scale)^2)``.

    The weights absorb ``exp(+v^2)`` so the rule applies to ``F`` itself.
    """
    v, wts = _H.hermgauss(nodes)
    return center + scale * v, scale * np.exp(np.log(wts) + v * v)


def _t_rule(nodes: int, base_precision: float, gy: GaussFactor, a: float) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Hermite rule in t matched to the Gaussian envelope of the integrand.

    The y-factor contributes ``exp(-(s a)^2 (t - k/a)^2 / 2)``.
    """
    extra = (gy.width * a) ** 2
    precision = base_precision + extra
    center = extra * (gy.freq / a) / precision
    return gauss_hermite_rule(nodes, center, math.sqrt(2.0 / precision))


def _fourier_matrix_kernel(f: SeparableFunction, a: float, spec: QuadSpec) -> np.ndarray:
    # variables (t, v) with v = t - x; x = t - v
    n = spec.window
    M = np.zeros((n, n), dtype=complex)
    for term in f.terms:
        gx = term.gx
        # phi_i(t) phi_j(t - v) contribute precision 2, F[g_y](-a t) adds (s_y a)^2
        t, wt = _t_rule(spec.nodes, 2.0, term.gy, a)
        phi_t = hermite_functions(n, t)
        v, wv = gauss_hermite_rule(spec.nodes, gx.center, math.sqrt(2.0) * gx.width)
        const = KERNEL_CONSTANT * term.weight * complex(term.gz.fourier(a))
        ky = term.gy.fourier(-a * t)                      # (T,)
        kernel = const * ky[:, None] * gx(v)[None, :]     # K(t, t - v) at (T, V)
        phi_x = hermite_functions(n, t[:, None] - v[None, :])  # (n, T, V)
        inner = np.einsum("jtv,tv,v->tj", phi_x, kernel, wv)
        M += np.einsum("it,t,tj->ij", phi_t, wt, inner)
    return M


def _fourier_matrix_direct(f: SeparableFunction, a: float, spec: QuadSpec) -> np.ndarray:
    n = spec.window
    M = np.zeros((n, n), dtype=complex)
    for term in f.terms:
        gy, gz, gx = term.gy, term.gz, term.gx
        # phi_i(t) gives precision 1, X_j(t) roughly 1/(1 + s_x^2)
        t, wt = _t_rule(spec.nodes, 1.0 + 1.0 / (1.0 + gx.width**2), gy, a)
        phi_t = hermite_functions(n, t)
        y, wy = gauss_hermite_rule(spec.nodes, gy.center, math.sqrt(2.0) * gy.width)
        z, wz = gauss_hermite_rule(spec.nodes, gz.center, math.sqrt(2.0) * gz.width)
        # Y(t) = int g_y(y) exp(-i a t y) dy,  Z = int g_z(z) exp(i a z) dz
        Y = (gy(y)[None, :] * np.exp(-1j * a * t[:, None] * y[None, :])) @ wy
        Z = complex(np.dot(gz(z) * np.exp(1j * a * z), wz))
        # X_j(t) = int g_x(x) phi_j(t - x) dx; envelope precision 1/s^2 + 1
        s2 = gx.width**2
        scale = math.sqrt(2.0 * s2 / (s2 + 1.0))
        X = np.empty((n, t.size), dtype=complex)
        for k, tk in enumerate(t):
            center = (gx.center + s2 * tk) / (s2 + 1.0)
            x, wx = gauss_hermite_rule(spec.nodes, center, scale)
            X[:, k] = hermite_functions(n, tk - x) @ (gx(x) * wx)
        M += term.weight * Z * np.einsum("it,t,t,jt->ij", phi_t, wt, Y, X)
    return M


@dataclass
class TruncatedOperator:
    """Matrix of an operator on a basis window, with how it was obtained."""

    matrix: np.ndarray
    window: int
    method: str
    quad: dict = field(default_factory=dict)
    error_estimate: float = 0.0

    def to_dict(self) -> dict:
        return {
            "window": self.window,
            "method": self.method,
            "quad": self.quad,
            "error_estimate": self.error_estimate,
            "real": self.matrix.real.tolist(),
            "imag": self.matrix.imag.tolist(),
        }


def heis_fourier(
    f: SeparableFunction,
    a: float,
    spec: QuadSpec | None = None,
    method: str = "kernel",
) -> TruncatedOperator:
    """Matrix ``<f(a) phi_j, phi_i>`` on the first ``spec.window`` Hermite functions.

    The error estimate compares the result with a rule using 3/4 of the
    nodes; ``QuadratureError`` is raised when it exceeds ``spec.tol``.
    """
    if a == 0:
        raise ValueError("a must be nonzero")
    spec = spec or QuadSpec()
    if method == "kernel":
        build = _fourier_matrix_kernel
    elif method == "direct":
        build = _fourier_matrix_direct
    else:
        raise ValueError(f"unknown method {method!r}; use 'kernel' or 'direct'")
    M = build(f, a, spec)
    M_coarse = build(f, a, spec.coarse())
    scale = max(np.linalg.norm(M), 1e-300)
    err = float(np.linalg.norm(M - M_coarse) / scale) if np.any(M) else 0.0
    if err > spec.tol:
        raise QuadratureError(
            f"estimated quadrature error {err:.3g} exceeds tolerance {spec.tol:g}; increase the node count"
        )
    return TruncatedOperator(M, spec.window, method, spec.to_dict(), err)


def heis_kernel(f: SeparableFunction, a: float, t, x) -> np.ndarray:
    """Kernel ``K(t, x) = 2 pi F_yz[f](-a t, a, t - x)`` of ``f(a)``."""
    t = np.asarray(t, dtype=float)
    x = np.asarray(x, dtype=float)
    out = np.zeros(np.broadcast(t, x).shape, dtype=complex)
    for term in f.terms:
        out = out + KERNEL_CONSTANT * term.weight * term.gy.fourier(-a * t) * complex(term.gz.fourier(a)) * term.gx(t - x)
    return out


def relative_frobenius(A: np.ndarray, B: np.ndarray) -> float:
    denom = max(np.linalg.norm(A), np.linalg.norm(B))
    return 0.0 if denom == 0 else float(np.linalg.norm(A - B) / denom)


def dilation_norms(N: float, j: int = 0, half_width: float = 12.0, points: int = 20001) -> tuple[float, float]:
    """``(||phi_N||_2, ||phi_N'||_2)`` for ``phi_N(t) = sqrt(N) phi_j(N t)`` on a fixed grid.

    The grid does not depend on N, so the scaling is genuinely measured.
    """
    t = np.linspace(-half_width, half_width, points)
    phi = math.sqrt(N) * hermite_functions(j + 1, N * t)[j]
    dphi = N**1.5 * hermite_function_derivatives(j + 1, N * t)[j]
    h = t[1] - t[0]
    norm = math.sqrt(math.fsum(phi * phi) * h)
    dnorm = math.sqrt(math.fsum(dphi * dphi) * h)
    return norm, dnorm


# ---------------------------------------------------------------- spectrum

@dataclass(frozen=True)
class CartanForm:
    """``p = g . (i y', i z', 0)`` with real ``g``; ``x_imag`` nonzero means outside."""

    g: HeisPoint
    y_imag: float
    z_imag: float
    x_imag: float


def heis_cartan_decompose(p: HeisPoint) -> CartanForm:
    y, z, x = (complex(v) for v in p.as_tuple())
    gx, xi = x.real, x.imag
    y_im = y.imag
    z_im = z.imag - gx * y_im
    g = HeisPoint(y.real, z.real, gx)
    return CartanForm(g, y_im, z_im, xi)


def _closed_form_heis(d: WeightDescriptor, y_im: float, z_im: float, rel_tol: float) -> tuple[Status, dict] | None:
    if d.family == "abelexp":
        betas = d.betas + (1.0,) * max(0, 2 - len(d.betas))
        ly, lz = math.log(betas[0]), math.log(betas[1])
        ok = abs(y_im) <= ly * (1 + rel_tol) + rel_tol and abs(z_im) <= lz * (1 + rel_tol) + rel_tol
        return (Status.IN if ok else Status.OUT), {"rule": "box", "log_beta": [ly, lz]}
    if d.family == "abelradial":
        lb = math.log(d.get("beta"))
        r = math.hypot(y_im, z_im)
        ok = r <= lb * (1 + rel_tol) + rel_tol
        return (Status.IN if ok else Status.OUT), {"rule": "disc", "log_beta": lb, "radius": r}
    if d.family in ("polyw", "shilov", "const"):
        ok = y_im == 0 and z_im == 0
        return (Status.IN if ok else Status.OUT), {"rule": "subexponential"}
    return None


def heis_grid_sup(wfun, y_im: float, z_im: float, R: float = 40.0, points: int = 161, band: float = DEFAULT_BAND) -> tuple[Status, dict]:
    """Bounded-ness of ``Phi(a, b) = exp(y' a + z' b) / w(a, b)`` from a grid.

    Compares ``log sup Phi`` over ``[-R, R]^2`` and ``[-2R, 2R]^2``. A sup that
    does not move is read as bounded, growth faster than ``band`` per unit
    length as unbounded, anything between as inconclusive.
    """
    log_w = _log_w2(wfun)
    ax = np.linspace(-2 * R, 2 * R, 2 * points - 1)
    A, B = np.meshgrid(ax, ax, indexing="ij")
    logphi = y_im * A + z_im * B - log_w(np.stack([A, B], axis=-1))
    inner = (np.abs(A) <= R) & (np.abs(B) <= R)
    s_inner = float(np.max(logphi[inner]))
    s_outer = float(np.max(logphi))
    slope = (s_outer - s_inner) / R
    if slope > band:
        status = Status.OUT
    elif s_outer - s_inner <= 1e-9 * max(1.0, abs(s_outer)):
        status = Status.IN
    else:
        status = Status.INCONCLUSIVE
    return status, {"R": R, "log_sup_R": s_inner, "log_sup_2R": s_outer, "growth_per_unit": slope}


def heis_spectrum_member(p: HeisPoint, wfun, grid: dict | None = None, rel_tol: float = 1e-12) -> Verdict:
    """Membership of ``p`` in the spectrum for a weight extended from the (y, z) subgroup.

    Closed forms decide the built-in families; the grid sup is always computed
    as a cross-check and decides when no closed form is known.
    """
    grid = dict(grid or {})
    form = heis_cartan_decompose(p)
    base = {
        "g": [complex(v).real for v in form.g.as_tuple()],
        "y_imag": form.y_imag,
        "z_imag": form.z_imag,
        "x_imag": form.x_imag,
    }
    if form.x_imag != 0:
        return Verdict(Status.OUT, evidence=base, reason="direction outside 𝔥")
    grid_status, grid_ev = heis_grid_sup(wfun, form.y_imag, form.z_imag, **grid)
    base["grid"] = {"status": grid_status.value, **grid_ev}
    closed = _closed_form_heis(wfun, form.y_imag, form.z_imag, rel_tol) if isinstance(wfun, WeightDescriptor) else None
    if closed is not None:
        status, ev = closed
        base["closed_form"] = ev
        return Verdict(status, evidence=base)
    return Verdict(grid_status, evidence=base)


# -------------------------------------------------------- reduced Heisenberg

@dataclass(frozen=True)
class RHeisLabel:
    """Dual label of the reduced Heisenberg group.

    ``kind`` is ``"pi"`` (discrete series ``pi^n``, n != 0), ``"chi"``
    (character ``chi_{r,s}``) or ``"pi0"`` (the aggregate ``pi^0``).
    """

    kind: str
    n: int = 0
    r: float = 0.0
    s: float = 0.0

    def __post_init__(self) -> None:
        if self.kind not in ("pi", "chi", "pi0"):
            raise ValueError(f"unknown label kind {self.kind!r}")
        if self.kind == "pi" and self.n == 0:
            raise ValueError("discrete label must be nonzero; use pi0 for the aggregate")

    @classmethod
    def pi(cls, n: int) -> "RHeisLabel":
        return cls("pi", n=int(n))

    @classmethod
    def chi(cls, r: float, s: float) -> "RHeisLabel":
        return cls("chi", r=float(r), s=float(s))

    @classmethod
    def pi0(cls) -> "RHeisLabel":
        return cls("pi0")

    def __str__(self) -> str:
        if self.kind == "pi":
            return f"pi^{self.n}"
        if self.kind == "chi":
            return f"chi_{{{self.r:g},{self.s:g}}}"
        return "pi^0"


def rheis_tensor(l1: RHeisLabel, l2: RHeisLabel) -> RHeisLabel:
    """Fusion of two dual labels of the reduced Heisenberg group."""
    if l1.kind == "pi0" or l2.kind == "pi0":
        raise ValueError("pi^0 is a direct integral, not an irreducible input")
    if l1.kind == "pi" and l2.kind == "pi":
        total = l1.n + l2.n
        return RHeisLabel.pi0() if total == 0 else RHeisLabel.pi(total)
    if l1.kind == "pi":
        return l1
    if l2.kind == "pi":
        return l2
    return RHeisLabel.chi(l1.r + l2.r, l1.s + l2.s)


def rheis_plancherel_atom(n: int) -> float:
    """Plancherel mass ``|n| / (2 pi)`` of the discrete series ``pi^n``."""
    if n == 0:
        raise ValueError("n must be nonzero")
    return abs(n) / (2 * math.pi)


def rheis_central_weight_check(
    wZ: Callable[[int], float],
    wC: Callable[[np.ndarray, np.ndarray], np.ndarray],
    window: int = 10,
    rs_grid: Sequence[float] | None = None,
    tol: float = 1e-12,
) -> Report:
    """Check the four inequalities of a central weight on the reduced Heisenberg dual.

    1. ``w(n + m) <= w(n) w(m)`` for nonzero n, m with n != -m;
    2. ``sup w(r, s) <= w(n) w(-n)``;
    3. ``1 <= w(r, s)``;
    4. ``w(r + r', s + s') <= w(r, s) w(r', s')``.

    ``wZ(0)`` is never called: its role is played by the sup of ``wC`` over
    the sample grid.
    """
    grid = np.asarray(rs_grid if rs_grid is not None else np.linspace(-5, 5, 11), dtype=float)
    R, S = np.meshgrid(grid, grid, indexing="ij")
    r, s = R.ravel(), S.ravel()
    logC = np.log(np.asarray(wC(r, s), dtype=float) * np.ones_like(r))
    sup_c = float(np.max(logC))
    ns = [n for n in range(-window, window + 1) if n != 0]
    logZ = {n: math.log(wZ(n)) for n in range(-2 * window, 2 * window + 1) if n != 0}
    violations: list[dict] = []
    checked = 0

    def slack_ok(lhs: float, rhs: float) -> bool:
        return lhs <= rhs + tol * max(1.0, abs(rhs))

    for n in ns:
        for m in ns:
            if n + m == 0:
                continue
            checked += 1
            if not slack_ok(logZ[n + m], logZ[n] + logZ[m]):
                violations.append({"rule": 1, "n": n, "m": m, "log_slack": logZ[n] + logZ[m] - logZ[n + m]})
    for n in ns:
        checked += 1
        if not slack_ok(sup_c, logZ[n] + logZ[-n]):
            violations.append({"rule": 2, "n": n, "log_slack": logZ[n] + logZ[-n] - sup_c})
    checked += r.size
    low = np.flatnonzero(logC < -tol)
    for idx in low[:20]:
        violations.append({"rule": 3, "r": float(r[idx]), "s": float(s[idx]), "log_value": float(logC[idx])})
    lhs = np.log(np.asarray(wC((r[:, None] + r[None, :]).ravel(), (s[:, None] + s[None, :]).ravel()), dtype=float)
                 * np.ones(r.size * r.size)).reshape(r.size, r.size)
    rhs = logC[:, None] + logC[None, :]
    checked += lhs.size
    bad = np.argwhere(lhs > rhs + tol * np.maximum(1.0, np.abs(rhs)))
    for i, j in bad[:20]:
        violations.append({
            "rule": 4,
            "rs": [float(r[i]), float(s[i])],
            "rs_prime": [float(r[j]), float(s[j])],
            "log_slack": float(rhs[i, j] - lhs[i, j]),
        })
    return Report(
        passed=not violations,
        checked=checked,
        violations=violations,
        details={"window": window, "grid": grid.tolist(), "log_sup_wC": sup_c, "violation_count_rule4": int(len(bad))},
    )
