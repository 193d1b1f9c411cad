"""Quasianalyticity of abelian weights and Shilov radii for torus annuli.

A weight ``w >= 1`` on ``R^k`` or ``Z^k`` is non-quasianalytic along ``x``
when ``sum_n log w(n x) / (1 + n^2)`` converges. Divergence of series like
``sum 1/(n log n)`` is far too slow to see in partial sums, so the
classification fits the decay of the terms to ``c / (n^p (log n)^q)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .descriptors import as_log_weight_function, describe
from .verdict import Status, Verdict

DEFAULT_TOL = 0.05
DEFAULT_DELTA = 1e-3
DEFAULT_K = 10**6


def _log_w(wfun):
    return as_log_weight_function(wfun)


def _ray(x, ns: np.ndarray) -> np.ndarray:
    x = np.atleast_1d(np.asarray(x, dtype=float))
    return ns[:, None] * x[None, :]


@dataclass
class SeriesDiagnostics:
    """Partial sums and term-decay fit of ``sum log w(n x) / (1 + n^2)``."""

    checkpoints: list[int]
    partial_sums: list[float]
    p: float
    q: float
    classification: str
    fit_window: tuple[int, int]
    sub_fits: list[tuple[float, float, str]] = field(default_factory=list)
    shift: float = 0.0
    tol: float = DEFAULT_TOL

    def to_dict(self) -> dict:
        return {
            "checkpoints": self.checkpoints,
            "partial_sums": self.partial_sums,
            "p": self.p,
            "q": self.q,
            "classification": self.classification,
            "fit_window": list(self.fit_window),
            "sub_fits": [list(f) for f in self.sub_fits],
            "shift": self.shift,
            "tol": self.tol,
        }


def _classify(p: float, q: float, tol: float) -> str:
    if p > 1 + tol:
        return "convergent"
    if p < 1 - tol:
        return "divergent"
    return "convergent" if q > 1 + tol else "divergent"


def _fit(ns: np.ndarray, terms: np.ndarray) -> tuple[float, float]:
    """Least squares for ``log t = log c - p log n - q log log n``."""
    ln = np.log(ns)
    design = np.column_stack([np.ones_like(ln), -ln, -np.log(ln)])
    coef, *_ = np.linalg.lstsq(design, np.log(terms), rcond=None)
    return float(coef[1]), float(coef[2])


def quasianalytic_test(wfun, x=1.0, N: int = 10**5, tol: float = DEFAULT_TOL, fit_points: int = 200) -> SeriesDiagnostics:
    """Classify ``sum_{n in Z} log w(n x) / (1 + n^2)`` as convergent or divergent.

    The terms for ``n`` and ``-n`` are combined. If ``w < 1`` somewhere on the
    sampled ray the weight is divided by its minimum first and the shift (in
    log scale) is recorded. The fit uses ``fit_points`` geometrically spaced
    indices in ``[N/100, N]``; the two halves of that window are fitted
    separately and a disagreement makes the result inconclusive.
    """
    if N < 1000:
        raise ValueError("N must be at least 1000 for a meaningful fit")
    log_w = _log_w(wfun)
    ns = np.arange(0, N + 1, dtype=float)
    lw_pos = np.asarray(log_w(_ray(x, ns)), dtype=float)
    lw_neg = np.asarray(log_w(_ray(x, -ns)), dtype=float)
    low = min(float(lw_pos.min()), float(lw_neg.min()))
    shift = -low if low < 0 else 0.0
    lw_pos = lw_pos + shift
    lw_neg = lw_neg + shift
    combined = np.where(ns == 0, lw_pos, lw_pos + lw_neg) / (1 + ns * ns)

    checkpoints = sorted({int(v) for v in np.geomspace(10, N, int(round(math.log10(N)))).round()} | {N})
    partial = [math.fsum(combined[: c + 1]) for c in checkpoints]

    lo = max(2, N // 100)
    idx = np.unique(np.geomspace(lo, N, fit_points).astype(int))
    terms = combined[idx]
    if np.all(combined == 0):
        return SeriesDiagnostics(checkpoints, partial, math.inf, 0.0, "convergent", (lo, N), [], shift, tol)
    if np.any(terms <= 0):
        return SeriesDiagnostics(checkpoints, partial, math.nan, math.nan, "inconclusive", (lo, N), [], shift, tol)
    p, q = _fit(idx.astype(float), terms)
    label = _classify(p, q, tol)
    half = idx.size // 2
    subs = []
    for part in (slice(0, half), slice(half, None)):
        sp_, sq_ = _fit(idx[part].astype(float), terms[part])
        subs.append((sp_, sq_, _classify(sp_, sq_, tol)))
    if any(s[2] != label for s in subs):
        label = "inconclusive"
    return SeriesDiagnostics(checkpoints, partial, p, q, label, (lo, N), subs, shift, tol)


@dataclass
class ShilovRadius:
    rho: float
    monotone: bool
    dyadic: list[tuple[int, float]]
    K: int

    def to_dict(self) -> dict:
        return {"rho": self.rho, "monotone": self.monotone, "K": self.K, "dyadic": [list(d) for d in self.dyadic]}


def shilov_radius(wfun, mu=1.0, K: int = DEFAULT_K, slack: float = 1e-12) -> ShilovRadius:
    """``w(K mu)^(1/K)`` with the dyadic trace ``w(2^j mu)^(2^-j)``.

    For a sub-multiplicative weight the dyadic values are non-increasing
    and the limit is their infimum; the flag records whether the trace
    actually decreased (within relative ``slack``).
    """
    if K < 1:
        raise ValueError("K must be positive")
    log_w = _log_w(wfun)
    ks = [2**j for j in range(int(math.log2(K)) + 1)]
    vals = np.asarray(log_w(_ray(mu, np.asarray(ks, dtype=float))), dtype=float) / np.asarray(ks, dtype=float)
    dyadic = [(k, float(math.exp(v))) for k, v in zip(ks, vals)]
    monotone = all(b <= a * (1 + slack) for (_, a), (_, b) in zip(dyadic, dyadic[1:]))
    rho = math.exp(float(np.asarray(log_w(_ray(mu, np.array([float(K)]))))[0]) / K)
    return ShilovRadius(rho, monotone, dyadic, K)


def torus_annulus_member(
    z: Sequence[complex],
    wfun,
    directions: Sequence[Sequence[int]] | None = None,
    K: int = DEFAULT_K,
    delta: float = DEFAULT_DELTA,
) -> Verdict:
    """Membership of ``z`` in ``{1/rho(-mu) <= |z^mu| <= rho(mu)}`` for every tested mu.

    The estimate ``rho_hat = w(K mu)^(1/K)`` is an upper bound for the true
    radius of a sub-multiplicative weight, so ``|z^mu| > rho_hat (1 + delta)``
    is a certain exclusion. ``rho >= 1`` holds whenever ``w >= 1`` on the
    ray, which certifies the unit torus. Values at or below
    ``rho_hat (1 - delta)`` are accepted; everything else is inconclusive.
    """
    zs = np.atleast_1d(np.asarray(z, dtype=complex))
    if np.any(zs == 0):
        raise ValueError("z must have nonzero entries")
    k = zs.size
    if directions is None:
        directions = [tuple(int(i == j) for j in range(k)) for i in range(k)]
    if len(directions) == 0:
        raise ValueError("need at least one direction")
    log_w = _log_w(wfun)
    logs = np.log(np.abs(zs))
    checks = []
    status = Status.IN
    for mu in directions:
        mu_arr = np.asarray(mu, dtype=float)
        if mu_arr.size != k:
            raise ValueError(f"direction {mu} has wrong length")
        log_u = float(logs @ mu_arr)
        for sign in (1, -1):
            rad = shilov_radius(wfun, sign * mu_arr, K)
            ray = np.asarray(log_w(_ray(sign * mu_arr, np.arange(0, 65, dtype=float))), dtype=float)
            floor = 0.0 if float(ray.min()) >= 0 else -math.inf
            log_rho = math.log(rad.rho)
            value = sign * log_u
            accept = max(floor, log_rho + math.log1p(-delta))
            if value > log_rho + math.log1p(delta):
                side = Status.OUT
            elif value <= accept + 1e-15:
                side = Status.IN
            else:
                side = Status.INCONCLUSIVE
            checks.append({
                "mu": [int(v) for v in mu_arr * sign],
                "log_abs_z_mu": value,
                "rho_hat": rad.rho,
                "monotone": rad.monotone,
                "side": side.value,
            })
            if side is Status.OUT:
                status = Status.OUT
            elif side is Status.INCONCLUSIVE and status is Status.IN:
                status = Status.INCONCLUSIVE
    return Verdict(status, evidence={"weight": describe(wfun), "K": K, "delta": delta, "checks": checks})
