"""Beurling norms and spectrum membership for SU(n).

For a central weight the operator norm of the extended representation at a
point of SL(n, C) only depends on the singular values (the unitary factors
of the KAK decomposition drop out), which reduces membership to products of
the leading singular values.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .descriptors import WeightDescriptor
from .repsu import (
    ComplexDiagonal,
    HighestWeight,
    log_complexified_norm,
    su2_character,
    tensor_decompose_su2,
    weights_up_to,
)
from .verdict import Status, Verdict
from .weights import CentralWeight, log_central_weight, log_torus_extended_weight

DEFAULT_DELTA = 1e-3
DEFAULT_DET_TOL = 1e-8


class SingularMatrixError(ValueError):
    pass


class DeterminantError(ValueError):
    pass


@dataclass
class FourierCoefficients:
    """Finitely supported family of Fourier coefficient matrices ``f(pi)``."""

    coeffs: dict[HighestWeight, np.ndarray] = field(default_factory=dict)

    def __post_init__(self) -> None:
        fixed = {}
        for w, m in self.coeffs.items():
            m = np.atleast_2d(np.asarray(m, dtype=complex))
            if m.shape != (w.dim, w.dim):
                raise ValueError(f"coefficient at {w} has shape {m.shape}, expected ({w.dim}, {w.dim})")
            fixed[w] = m
        self.coeffs = fixed

    def items(self):
        return sorted(self.coeffs.items())


def trace_norm(m: np.ndarray) -> float:
    return float(np.sum(np.linalg.svd(np.atleast_2d(m), compute_uv=False)))


def beurling_norm(c: FourierCoefficients | Mapping[HighestWeight, np.ndarray], d) -> float:
    """``sum_pi d_pi ||W(pi) f(pi)||_1`` for a central or torus-extended weight.

    ``d`` is a central descriptor or callable, or an abelian descriptor /
    callable on ``Z^(n-1)`` read as a torus-extended weight (diagonal on the
    tableau basis).
    """
    if not isinstance(c, FourierCoefficients):
        c = FourierCoefficients(dict(c))
    total = []
    for w, m in c.items():
        if _is_central(d):
            total.append(w.dim * math.exp(log_central_weight(d, w)) * trace_norm(m))
        else:
            diag = np.exp(log_torus_extended_weight(d, w))
            total.append(w.dim * trace_norm(diag[:, None] * m))
    return math.fsum(total)


def _is_central(d) -> bool:
    if isinstance(d, WeightDescriptor):
        return d.kind == "central"
    return getattr(d, "central", True)


def singular_values(A) -> np.ndarray:
    """Singular values in descending order; rejects singular input."""
    A = np.atleast_2d(np.asarray(A, dtype=complex))
    if A.shape[0] != A.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {A.shape}")
    s = np.linalg.svd(A, compute_uv=False)
    if s[-1] <= s[0] * 1e-14 or s[-1] == 0:
        raise SingularMatrixError("matrix is singular to working precision")
    return s


def _check_det(A: np.ndarray, det_tol: float) -> complex:
    det = complex(np.linalg.det(A))
    if abs(abs(det) - 1.0) > det_tol:
        raise DeterminantError(f"|det A| = {abs(det):.12g} differs from 1 by more than {det_tol:g}")
    return det


def spectrum_member_central_exp(A, beta: float, det_tol: float = DEFAULT_DET_TOL, rel_tol: float = 1e-12) -> Verdict:
    """Membership for ``lenexp(beta)``: in iff ``s_1 ... s_k <= beta`` for all k < n.

    The comparison allows relative slack ``rel_tol`` so that boundary points,
    which belong to the spectrum, are not lost to rounding.
    """
    if beta < 1:
        raise ValueError("beta must be >= 1")
    A = np.atleast_2d(np.asarray(A, dtype=complex))
    det = _check_det(A, det_tol)
    s = singular_values(A)
    partial = np.cumprod(s)[:-1]
    ok = partial <= beta * (1 + rel_tol)
    status = Status.IN if bool(np.all(ok)) else Status.OUT
    first_bad = None if status is Status.IN else int(np.argmin(ok)) + 1
    return Verdict(
        status,
        evidence={
            "singular_values": s.tolist(),
            "partial_products": partial.tolist(),
            "beta": beta,
            "det": [det.real, det.imag],
        },
        witness=None if first_bad is None else {"k": first_bad},
        reason=None if first_bad is None else f"s_1...s_{first_bad} = {partial[first_bad - 1]:.6g} > beta",
    )


def spectrum_member_torus_extended(D, betas: Sequence[float], det_tol: float = DEFAULT_DET_TOL, rel_tol: float = 1e-12) -> Verdict:
    """Membership for the torus-extended exponential weight on a diagonal point."""
    if isinstance(D, ComplexDiagonal):
        x = np.asarray(D.entries)
    else:
        arr = np.asarray(D, dtype=complex)
        if arr.ndim == 2:
            if np.any(np.abs(arr - np.diag(np.diag(arr))) > 0):
                raise ValueError("torus-extended membership is only offered on diagonal points")
            arr = np.diag(arr)
        x = arr
    if len(betas) != x.size - 1:
        raise ValueError(f"expected {x.size - 1} betas, got {len(betas)}")
    if any(b < 1 for b in betas):
        raise ValueError("betas must be >= 1")
    det = complex(np.prod(x))
    if abs(abs(det) - 1) > det_tol:
        raise DeterminantError(f"|det D| = {abs(det):.12g} differs from 1 by more than {det_tol:g}")
    mods = np.abs(x[:-1])
    bad = [
        j + 1 for j, (m, b) in enumerate(zip(mods, betas))
        if not (1.0 / b * (1 - rel_tol) <= m <= b * (1 + rel_tol))
    ]
    return Verdict(
        Status.OUT if bad else Status.IN,
        evidence={"moduli": mods.tolist(), "betas": list(betas)},
        witness={"j": bad[0]} if bad else None,
        reason=f"|x_{bad[0]}| outside [1/beta, beta]" if bad else None,
    )


def _ray_directions(n: int) -> list[tuple[int, ...]]:
    return [a for a in itertools.product((0, 1), repeat=n - 1) if any(a)]


def spectrum_sweep(D, d: CentralWeight, L: int = 200, delta: float = DEFAULT_DELTA) -> Verdict:
    """Numerical membership: growth of ``||pi(D)|| / w(pi)`` along rays ``k*a``.

    Rays run through every 0/1 a-vector. Along each ray the per-step growth
    factor is fitted by least squares on the log-ratios over ``k in [K/2, K]``
    with ``K = floor(L / |a|)``. Any factor above ``1 + delta`` means out, all
    factors below ``1 - delta`` mean in, anything else is inconclusive.
    The full log-ratio table over ``lam_1 <= L`` on SU(2), or the ray traces
    otherwise, is kept as evidence.
    """
    x = np.asarray(D.entries if isinstance(D, ComplexDiagonal) else D, dtype=complex)
    n = x.size
    factors = {}
    traces = {}
    for a in _ray_directions(n):
        K = L // sum(a)
        if K < 2:
            continue
        ks = np.arange(0, K + 1)
        logs = np.array([
            log_complexified_norm(HighestWeight(n, tuple(k * v for v in a)), x)
            - log_central_weight(d, HighestWeight(n, tuple(k * v for v in a)))
            for k in ks
        ])
        tail = ks >= K // 2
        slope = float(np.polyfit(ks[tail], logs[tail], 1)[0])
        factors[a] = math.exp(slope)
        traces[a] = logs[:: max(1, K // 20)].tolist()
    vals = list(factors.values())
    if any(f > 1 + delta for f in vals):
        status = Status.OUT
    elif all(f < 1 - delta for f in vals):
        status = Status.IN
    else:
        status = Status.INCONCLUSIVE
    key = max(factors, key=factors.get)
    return Verdict(
        status,
        evidence={
            "horizon": L,
            "delta": delta,
            "growth_factors": {str(list(a)): f for a, f in factors.items()},
            "log_ratio_traces": {str(list(a)): t for a, t in traces.items()},
        },
        witness={"ray": list(key), "growth_factor": factors[key]},
    )


def evaluation_multiplicativity_check(x: complex, a: int, b: int) -> float:
    """Relative residual of ``chi_a(x) chi_b(x) = sum_c chi_c(x)``."""
    lhs = su2_character(a, x) * su2_character(b, x)
    parts = [su2_character(c, x) for c in tensor_decompose_su2(a, b)]
    rhs = complex(math.fsum(p.real for p in parts), math.fsum(p.imag for p in parts))
    return abs(lhs - rhs) / (1 + abs(lhs))


def sup_ratio_table(D, d: CentralWeight, L: int) -> list[tuple[list[int], float]]:
    """``log(||pi(D)|| / w(pi))`` for every highest weight with ``lam_1 <= L``."""
    x = np.asarray(D.entries if isinstance(D, ComplexDiagonal) else D, dtype=complex)
    n = x.size
    return [
        (list(w.a), log_complexified_norm(w, x) - log_central_weight(d, w))
        for w in weights_up_to(n, L)
    ]
