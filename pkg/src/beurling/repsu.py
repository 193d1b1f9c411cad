"""SU(n) representation combinatorics.

Irreducibles are labelled by a-coordinates ``a = (a_1, ..., a_{n-1})`` or
equivalently by partitions ``lam`` with ``lam_k = a_k + ... + a_{n-1}`` and
``lam_n = 0``. The basis of each irreducible is indexed by semistandard
tableaux, and the diagonal torus acts on the basis vector of a tableau with
content ``t`` by the monomial ``x_1^t_1 ... x_n^t_n``.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

DEFAULT_TABLEAU_CAP = 10**6


class InstanceTooLarge(ValueError):
    """The requested enumeration exceeds the configured size guard."""


@dataclass(frozen=True, order=True)
class HighestWeight:
    """Label of an irreducible representation of SU(n)."""

    n: int
    a: tuple[int, ...]

    def __post_init__(self) -> None:
        a = tuple(int(v) for v in self.a)
        object.__setattr__(self, "a", a)
        if self.n < 2:
            raise ValueError(f"SU(n) needs n >= 2, got {self.n}")
        if len(a) != self.n - 1:
            raise ValueError(f"expected {self.n - 1} a-coordinates, got {len(a)}")
        if any(v < 0 for v in a):
            raise ValueError(f"a-coordinates must be non-negative, got {a}")

    @classmethod
    def from_lambda(cls, lam: Sequence[int]) -> "HighestWeight":
        lam = [int(v) for v in lam]
        if lam[-1] != 0:
            raise ValueError(f"last partition entry must be 0, got {lam}")
        if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
            raise ValueError(f"partition must be weakly decreasing, got {lam}")
        return cls(len(lam), tuple(lam[i] - lam[i + 1] for i in range(len(lam) - 1)))

    @classmethod
    def fundamental(cls, n: int, k: int) -> "HighestWeight":
        if not 1 <= k <= n - 1:
            raise ValueError(f"fundamental index must lie in 1..{n - 1}, got {k}")
        return cls(n, tuple(int(i == k - 1) for i in range(n - 1)))

    @classmethod
    def trivial(cls, n: int) -> "HighestWeight":
        return cls(n, (0,) * (n - 1))

    @property
    def lam(self) -> tuple[int, ...]:
        tail = list(itertools.accumulate(reversed(self.a)))
        return tuple(reversed(tail)) + (0,)

    @property
    def length(self) -> int:
        """Word length ``lam_1 = a_1 + ... + a_{n-1}``."""
        return sum(self.a)

    @property
    def boxes(self) -> int:
        return sum(self.lam)

    @property
    def dim(self) -> int:
        """Weyl dimension formula, exact in integers."""
        lam = self.lam
        num = den = 1
        for i in range(self.n):
            for j in range(i + 1, self.n):
                num *= lam[i] - lam[j] + j - i
                den *= j - i
        return num // den

    def __str__(self) -> str:
        return f"SU({self.n}){list(self.a)}"


def weights_up_to(n: int, length: int) -> list[HighestWeight]:
    """All highest weights of SU(n) with ``lam_1 <= length``, in a fixed order."""
    out = []
    for a in itertools.product(range(length + 1), repeat=n - 1):
        if sum(a) <= length:
            out.append(HighestWeight(n, a))
    return out


@dataclass(frozen=True)
class Tableau:
    """A semistandard tableau of a given shape, stored row by row."""

    shape: HighestWeight
    rows: tuple[tuple[int, ...], ...]

    @property
    def content(self) -> tuple[int, ...]:
        t = [0] * self.shape.n
        for row in self.rows:
            for v in row:
                t[v - 1] += 1
        return tuple(t)

    def is_semistandard(self) -> bool:
        lam = self.shape.lam
        if tuple(len(r) for r in self.rows) != tuple(x for x in lam if x > 0):
            return False
        for r, row in enumerate(self.rows):
            if any(v < 1 or v > self.shape.n for v in row):
                return False
            if any(row[c] > row[c + 1] for c in range(len(row) - 1)):
                return False
            if r > 0 and any(self.rows[r - 1][c] >= row[c] for c in range(len(row))):
                return False
        return True


@dataclass(frozen=True)
class ComplexDiagonal:
    """Diagonal element ``diag(x_1, ..., x_n)`` of GL(n, C)."""

    entries: tuple[complex, ...]
    special: bool = False
    det_tol: float = 1e-12

    def __post_init__(self) -> None:
        entries = tuple(complex(v) for v in self.entries)
        object.__setattr__(self, "entries", entries)
        if any(v == 0 for v in entries):
            raise ValueError("diagonal entries must be nonzero")
        if self.special:
            det = complex(np.prod(entries))
            if abs(det - 1) > self.det_tol:
                raise ValueError(f"determinant {det} is not 1 within {self.det_tol:g}")

    @classmethod
    def sl(cls, entries: Sequence[complex], det_tol: float = 1e-12) -> "ComplexDiagonal":
        return cls(tuple(entries), special=True, det_tol=det_tol)

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def moduli(self) -> np.ndarray:
        return np.abs(np.asarray(self.entries))


def _as_entries(D) -> np.ndarray:
    if isinstance(D, ComplexDiagonal):
        return np.asarray(D.entries, dtype=complex)
    return np.asarray(D, dtype=complex)


def _check_size(w: HighestWeight, cap: int) -> None:
    d = w.dim
    if d > cap:
        raise InstanceTooLarge(f"instance too large: {w} has {d} tableaux, cap is {cap}")


@lru_cache(maxsize=256)
def _tableau_rows(n: int, lam: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], ...], ...]:
    shape = [x for x in lam if x > 0]
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    heights = [sum(1 for x in shape if x > c) for c in range(shape[0])] if shape else []
    grid = [[0] * length for length in shape]
    found = []

    def fill(idx: int) -> None:
        if idx == len(cells):
            found.append(tuple(tuple(row) for row in grid))
            return
        r, c = cells[idx]
        lo = 1
        if c > 0:
            lo = grid[r][c - 1]
        if r > 0:
            lo = max(lo, grid[r - 1][c] + 1)
        # leave room for the strictly increasing entries below in this column
        hi = n - (heights[c] - 1 - r)
        for v in range(lo, hi + 1):
            grid[r][c] = v
            fill(idx + 1)

    fill(0)
    return tuple(found)


def enumerate_tableaux(w: HighestWeight, cap: int = DEFAULT_TABLEAU_CAP) -> list[Tableau]:
    """Semistandard tableaux of shape ``w.lam`` in lexicographic row-major order."""
    _check_size(w, cap)
    return [Tableau(w, rows) for rows in _tableau_rows(w.n, w.lam)]


@lru_cache(maxsize=256)
def _contents(w: HighestWeight) -> np.ndarray:
    rows = _tableau_rows(w.n, w.lam)
    t = np.zeros((len(rows), w.n), dtype=np.int64)
    for i, tab in enumerate(rows):
        for row in tab:
            for v in row:
                t[i, v - 1] += 1
    t.setflags(write=False)
    return t


def contents(w: HighestWeight, cap: int = DEFAULT_TABLEAU_CAP) -> np.ndarray:
    """Content vectors ``(t_1..t_n)`` of all tableaux, one row each."""
    _check_size(w, cap)
    return _contents(w)


def torus_action(w: HighestWeight, D, cap: int = DEFAULT_TABLEAU_CAP) -> np.ndarray:
    """Eigenvalues of the (complexified) torus element D on the tableau basis.

    Returned as the diagonal vector, one complex entry per tableau.
    """
    x = _as_entries(D)
    if x.size != w.n:
        raise ValueError(f"diagonal has {x.size} entries, SU({w.n}) needs {w.n}")
    if np.any(x == 0):
        raise ValueError("diagonal entries must be nonzero")
    t = contents(w, cap)
    return np.prod(x[None, :] ** t, axis=1)


def lie_derivative_diag(w: HighestWeight, j: int, cap: int = DEFAULT_TABLEAU_CAP) -> np.ndarray:
    """Diagonal of the derivative along ``X_jj``: entries ``i (t_j - t_n)``."""
    if not 1 <= j <= w.n - 1:
        raise ValueError(f"j must lie in 1..{w.n - 1}, got {j}")
    t = contents(w, cap)
    return 1j * (t[:, j - 1] - t[:, -1]).astype(float)


def complexified_norm(w: HighestWeight, D, method: str = "closed", cap: int = DEFAULT_TABLEAU_CAP) -> float:
    """Operator norm of the holomorphically extended representation at D."""
    return math.exp(log_complexified_norm(w, D, method, cap))


def log_complexified_norm(w: HighestWeight, D, method: str = "closed", cap: int = DEFAULT_TABLEAU_CAP) -> float:
    logs = np.log(np.abs(_as_entries(D)))
    if logs.size != w.n:
        raise ValueError(f"diagonal has {logs.size} entries, SU({w.n}) needs {w.n}")
    if method == "brute":
        t = contents(w, cap)
        return float(np.max(t @ logs))
    if method == "closed":
        partial = np.cumsum(np.sort(logs)[::-1])[: w.n - 1]
        return float(np.dot(np.asarray(w.a, dtype=float), partial))
    raise ValueError(f"unknown method {method!r}; use 'brute' or 'closed'")


def tensor_with_fundamental(a: Sequence[int], k: int) -> list[tuple[int, ...]]:
    """Pieri rule: summands of ``pi_a (x) pi_{fund k}``, multiplicities kept.

    One output per admissible k-subset J of {1..n}, in lexicographic order of J.
    """
    a = tuple(int(v) for v in a)
    n = len(a) + 1
    if not 1 <= k <= n - 1:
        raise ValueError(f"k must lie in 1..{n - 1}, got {k}")
    out = []
    for J in itertools.combinations(range(1, n + 1), k):
        js = set(J)
        b = []
        for i in range(1, n):
            if i not in js and i + 1 in js:
                if a[i - 1] == 0:
                    break
                b.append(a[i - 1] - 1)
            elif i in js and i + 1 not in js:
                b.append(a[i - 1] + 1)
            else:
                b.append(a[i - 1])
        else:
            out.append(tuple(b))
    return out


@lru_cache(maxsize=4096)
def _cg(a: int, b: int) -> tuple[tuple[int, int], ...]:
    if b == 0:
        return ((a, 1),)
    acc: Counter = Counter()
    for c, mult in _cg(a, b - 1):
        for (d,) in tensor_with_fundamental((c,), 1):
            acc[d] += mult
    if b >= 2:
        acc.subtract(dict(_cg(a, b - 2)))
    return tuple(sorted((c, m) for c, m in acc.items() if m))


def tensor_decompose_su2(a: int, b: int) -> list[int]:
    """Clebsch-Gordan multiset of ``pi_a (x) pi_b`` by recursion on b.

    Uses ``pi_c (x) pi_1 = pi_{c+1} + pi_{c-1}``, so
    ``pi_a (x) pi_b = (pi_a (x) pi_{b-1}) (x) pi_1 - pi_a (x) pi_{b-2}``.
    """
    if a < 0 or b < 0:
        raise ValueError("labels must be non-negative")
    out = []
    for c, mult in _cg(int(a), int(b)):
        if mult < 0:
            raise AssertionError(f"negative multiplicity for {c} in {a} x {b}")
        out.extend([c] * mult)
    return out


def branch_to_sun1(w: HighestWeight) -> list[HighestWeight]:
    """Restriction to SU(n-1) via interlacing patterns, multiplicities kept."""
    if w.n < 3:
        raise ValueError("branching to SU(n-1) needs n >= 3")
    lam = w.lam
    ranges = [range(lam[i + 1], lam[i] + 1) for i in range(w.n - 1)]
    out = []
    for mu in itertools.product(*ranges):
        shift = mu[-1]
        out.append(HighestWeight.from_lambda([m - shift for m in mu]))
    return out


def multiset(items) -> Counter:
    return Counter(items)


def su2_character(a: int, x: complex) -> complex:
    """``chi_a(x) = sum_{k=0..a} x^(a-2k)``, the trace of ``pi_a(diag(x, 1/x))``."""
    if x == 0:
        raise ValueError("x must be nonzero")
    if a < 0:
        raise ValueError("a must be non-negative")
    x = complex(x)
    powers = x ** np.arange(a, -a - 1, -2, dtype=float)
    return complex(math.fsum(powers.real) + 1j * math.fsum(powers.imag))
