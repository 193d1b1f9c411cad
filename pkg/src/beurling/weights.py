"""Weight families on group duals and checks of their defining inequalities.

Central weights on SU(n) are scalars per irreducible. Values are computed in
log space (``log_central_weight``) so that ``beta ** lam_1`` never overflows;
``central_weight`` exponentiates at the end.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .descriptors import WeightDescriptor, as_log_weight_function
from .repsu import (
    DEFAULT_TABLEAU_CAP,
    HighestWeight,
    branch_to_sun1,
    contents,
    tensor_decompose_su2,
    tensor_with_fundamental,
    weights_up_to,
)
from .verdict import Report


class WeightError(ValueError):
    """A weight family was paired with a group it does not apply to."""


CentralWeight = WeightDescriptor | Callable[[HighestWeight], float]


def log_central_weight(d: CentralWeight, w: HighestWeight) -> float:
    """``log w(pi)`` for a central descriptor or a positive callable."""
    if not isinstance(d, WeightDescriptor):
        value = float(d(w))
        if not value > 0:
            raise WeightError(f"weight must be positive, got {value} at {w}")
        return math.log(value)
    if d.kind != "central":
        raise WeightError(f"{d} is not a central weight on SU(n)")
    fam = d.family
    if fam == "dim":
        return d.get("alpha") * math.log(w.dim)
    if fam == "lenpoly":
        return d.get("alpha") * math.log1p(w.length)
    if fam == "lenexp":
        return w.length * math.log(d.get("beta"))
    if fam in ("lapexp", "lappoly"):
        if w.n != 2:
            raise WeightError(f"{fam} is only available on SU(2); Casimir values for SU({w.n}) are not implemented")
        k = w.a[0]
        omega = k * (k + 2)
        if fam == "lapexp":
            return math.sqrt(omega) * math.log(d.get("beta"))
        return d.get("m") * math.log1p(omega)
    raise WeightError(f"no central evaluation for {fam}")


def central_weight(d: CentralWeight, w: HighestWeight) -> float:
    """``w(pi)`` for a central weight family."""
    return math.exp(log_central_weight(d, w))


def _log_wfun(wfun) -> Callable[[np.ndarray], np.ndarray]:
    return as_log_weight_function(wfun)


def log_torus_extended_weight(wfun, w: HighestWeight, cap: int = DEFAULT_TABLEAU_CAP) -> np.ndarray:
    t = contents(w, cap)
    j = t[:, -1:] - t[:, :-1]
    vals = np.asarray(_log_wfun(wfun)(j.astype(float)), dtype=float)
    return np.broadcast_to(vals, (t.shape[0],)).copy()


def torus_extended_weight(wfun, w: HighestWeight, cap: int = DEFAULT_TABLEAU_CAP) -> np.ndarray:
    """Diagonal of the torus-extended weight: ``w(t_n - t_1, ..., t_n - t_{n-1})`` per tableau.

    ``wfun`` is an abelian descriptor (``torus(beta1=..)``) or a callable taking
    an integer array of shape ``(m, n-1)`` and returning ``m`` positive values.
    """
    return np.exp(log_torus_extended_weight(wfun, w, cap))


def sun1_extended_weight(inner: CentralWeight, w: HighestWeight) -> list[float]:
    """Block values of the weight extended from SU(n-1), one per branching summand."""
    if isinstance(inner, WeightDescriptor) and inner.family == "sun1":
        inner = inner.inner
    return [central_weight(inner, mu) for mu in branch_to_sun1(w)]


def check_submultiplicative_compact(d: CentralWeight, n: int, L: int, tol: float = 1e-12) -> Report:
    """Check ``w(b) <= w(a) w(fund k)`` over Pieri triples with ``lam_1(a) <= L``.

    On SU(2) every Clebsch-Gordan triple ``c in a (x) b`` with ``a, b <= L`` is
    checked as well. The comparison is done on logarithms with relative slack
    ``tol``.
    """
    violations: list[dict] = []
    checked = 0
    cache: dict[HighestWeight, float] = {}

    def lw(h: HighestWeight) -> float:
        if h not in cache:
            cache[h] = log_central_weight(d, h)
        return cache[h]

    def record(kind: str, lhs: HighestWeight, parts: tuple, rhs: float) -> None:
        nonlocal checked
        checked += 1
        slack = rhs - lw(lhs)
        if slack < -tol * max(1.0, abs(rhs)):
            violations.append({
                "kind": kind,
                "triple": [list(p.a) if isinstance(p, HighestWeight) else p for p in parts],
                "log_slack": slack,
            })

    funds = [HighestWeight.fundamental(n, k) for k in range(1, n)]
    for a in weights_up_to(n, L):
        for k, fund in enumerate(funds, start=1):
            rhs = lw(a) + lw(fund)
            for b in tensor_with_fundamental(a.a, k):
                hb = HighestWeight(n, b)
                record("pieri", hb, (a, k, hb), rhs)
    if n == 2:
        for a in range(L + 1):
            for b in range(L + 1):
                ha, hb = HighestWeight(2, (a,)), HighestWeight(2, (b,))
                rhs = lw(ha) + lw(hb)
                for c in tensor_decompose_su2(a, b):
                    hc = HighestWeight(2, (c,))
                    record("clebsch-gordan", hc, (a, b, c), rhs)
    return Report(
        passed=not violations,
        checked=checked,
        violations=violations,
        details={"n": n, "window": L, "tol": tol},
    )


class GrowthBoundViolation(ValueError):
    """A sample exceeds the fitted exponential bound."""

    def __init__(self, message: str, bound: "GrowthBound"):
        super().__init__(message)
        self.bound = bound


@dataclass
class GrowthBound:
    """``w(x) <= C * prod rho_i^|x_i|`` with ``C = prod m_i`` and ``rho_i = m_i``."""

    C: float
    rho: tuple[float, ...]
    holds: bool
    worst_log_slack: float
    witness: tuple[float, ...] | None = None
    local_sups: tuple[float, ...] = field(default_factory=tuple)


def exponential_growth_bound(
    wfun,
    samples,
    *,
    lattice: bool = True,
    local_grid: int = 201,
    tol: float = 1e-12,
    raise_on_failure: bool = True,
) -> GrowthBound:
    """Fit the exponential envelope of a weight from its local suprema.

    ``m_i`` is the sup of ``w`` along the i-th axis over ``|t| <= 1`` (the
    points -1, 0, 1 on a lattice, ``local_grid`` points on the real line).
    Sub-multiplicativity gives ``w(x) <= prod_i m_i^(|x_i| + 1)``; the bound is
    then tested on every sample.
    """
    log_w = _log_wfun(wfun)
    pts = np.asarray(samples, dtype=float)
    if pts.ndim == 1:
        pts = pts[:, None]
    k = pts.shape[1]
    ts = np.array([-1.0, 0.0, 1.0]) if lattice else np.linspace(-1.0, 1.0, local_grid)
    log_m = []
    for i in range(k):
        axis = np.zeros((ts.size, k))
        axis[:, i] = ts
        log_m.append(float(np.max(log_w(axis))))
    log_m = np.maximum(np.asarray(log_m), 0.0)
    rhs = (np.abs(pts) + 1.0) @ log_m
    lhs = np.asarray(log_w(pts), dtype=float)
    slack = rhs - lhs
    worst = int(np.argmin(slack))
    holds = bool(slack[worst] >= -tol * max(1.0, abs(rhs[worst])))
    result = GrowthBound(
        C=float(np.exp(log_m.sum())),
        rho=tuple(float(v) for v in np.exp(log_m)),
        holds=holds,
        worst_log_slack=float(slack[worst]),
        witness=None if holds else tuple(float(v) for v in pts[worst]),
        local_sups=tuple(float(v) for v in np.exp(log_m)),
    )
    if not holds and raise_on_failure:
        raise GrowthBoundViolation(
            f"sample {result.witness} exceeds the exponential envelope by log-margin {-result.worst_log_slack:.3g}",
            result,
        )
    return result


def central_along_ray(d: CentralWeight, n: int = 2) -> Callable[[np.ndarray], np.ndarray]:
    """View a central SU(n) weight as a function of ``k`` along ``pi_{k*fund_1}``.

    Negative ``k`` maps to the contragredient direction, so the result is even.
    """
    def w_of_k(x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        flat = np.abs(x.reshape(x.shape[0], -1)[:, 0]).round().astype(int)
        out = np.empty(flat.shape)
        for i, kk in enumerate(flat):
            a = (int(kk),) + (0,) * (n - 2)
            out[i] = log_central_weight(d, HighestWeight(n, a))
        return np.exp(out)

    return w_of_k


__all__: Sequence[str] = (
    "WeightError",
    "central_weight",
    "log_central_weight",
    "torus_extended_weight",
    "log_torus_extended_weight",
    "sun1_extended_weight",
    "check_submultiplicative_compact",
    "exponential_growth_bound",
    "GrowthBound",
    "GrowthBoundViolation",
    "central_along_ray",
)
