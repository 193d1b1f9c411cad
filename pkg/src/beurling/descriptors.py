"""Weight descriptors: a small key=value language naming built-in weight families.

Grammar (case-insensitive)::

    descriptor := NAME "(" [ arg ("," arg)* ] ")"
    arg        := KEY "=" NUMBER | ["inner" "="] descriptor
    NUMBER     := float literal | "e" | "e^" float literal

Examples: ``dim(alpha=2)``, ``lenexp(beta=2)``, ``torus(beta1=2,beta2=1)``,
``sun1(lenexp(beta=2))``, ``abelexp(beta1=e^2,beta2=e^1)``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable

import numpy as np


class DescriptorError(ValueError):
    """Malformed descriptor text or out-of-range parameters."""


# family -> (kind, required keys, optional keys with defaults)
_FAMILIES: dict[str, tuple[str, tuple[str, ...], dict[str, float]]] = {
    "dim": ("central", ("alpha",), {}),
    "lenpoly": ("central", ("alpha",), {}),
    "lenexp": ("central", ("beta",), {}),
    "lapexp": ("central", ("beta",), {}),
    "lappoly": ("central", ("m",), {}),
    "sun1": ("extended", (), {}),
    "torus": ("abelian", (), {}),
    "abelexp": ("abelian", (), {}),
    "abelradial": ("abelian", ("beta",), {}),
    "shilov": ("abelian", (), {}),
    "polyw": ("abelian", ("s",), {}),
    "const": ("abelian", (), {"c": 1.0}),
    "e2lap": ("laplacian", ("t",), {}),
}

_BETA_KEY = re.compile(r"^beta\d+$")


@dataclass(frozen=True)
class WeightDescriptor:
    """A named weight family plus its parameters.

    ``params`` is kept as a sorted tuple of pairs so descriptors hash and
    compare by value. ``inner`` is only used by ``sun1``.
    """

    family: str
    params: tuple[tuple[str, float], ...] = ()
    inner: "WeightDescriptor | None" = None

    def __post_init__(self) -> None:
        if self.family not in _FAMILIES:
            raise DescriptorError(f"unknown weight family {self.family!r}")
        object.__setattr__(self, "params", tuple(sorted(self.params)))
        _validate(self)

    @classmethod
    def make(cls, family: str, inner: "WeightDescriptor | None" = None, **params: float):
        return cls(family.lower(), tuple((k.lower(), float(v)) for k, v in params.items()), inner)

    @property
    def kind(self) -> str:
        return _FAMILIES[self.family][0]

    def get(self, key: str, default: float | None = None) -> float:
        for k, v in self.params:
            if k == key:
                return v
        if default is None:
            defaults = _FAMILIES[self.family][2]
            if key in defaults:
                return defaults[key]
            raise KeyError(key)
        return default

    @property
    def betas(self) -> tuple[float, ...]:
        """Per-axis bases ``beta1, beta2, ...`` of a product exponential weight."""
        found = sorted((int(k[4:]), v) for k, v in self.params if _BETA_KEY.match(k))
        return tuple(v for _, v in found)

    def __str__(self) -> str:
        parts = [f"{k}={_fmt(v)}" for k, v in self.params]
        if self.inner is not None:
            parts.insert(0, str(self.inner))
        return f"{self.family}({','.join(parts)})"


def _fmt(v: float) -> str:
    return repr(int(v)) if float(v).is_integer() and abs(v) < 1e15 else repr(float(v))


def _validate(d: WeightDescriptor) -> None:
    kind, required, optional = _FAMILIES[d.family]
    keys = {k for k, _ in d.params}
    for key in required:
        if key not in keys:
            raise DescriptorError(f"{d.family}: missing parameter {key!r}")
    allowed = set(required) | set(optional)
    for key, value in d.params:
        if d.family in ("torus", "abelexp") and _BETA_KEY.match(key):
            if value < 1:
                raise DescriptorError(f"{d.family}: {key} must be >= 1, got {value}")
            continue
        if key not in allowed:
            raise DescriptorError(f"{d.family}: unexpected parameter {key!r}")
        if not math.isfinite(value):
            raise DescriptorError(f"{d.family}: {key} must be finite")
        if key in ("alpha", "s") and value < 0:
            raise DescriptorError(f"{d.family}: {key} must be >= 0, got {value}")
        if key == "beta" and value < 1:
            raise DescriptorError(f"{d.family}: beta must be >= 1, got {value}")
        if key == "m" and value < 1:
            raise DescriptorError(f"{d.family}: m must be >= 1, got {value}")
        if key in ("t", "c") and value <= 0:
            raise DescriptorError(f"{d.family}: {key} must be > 0, got {value}")
    if d.family in ("torus", "abelexp") and not d.betas:
        raise DescriptorError(f"{d.family}: needs at least beta1")
    if d.family == "sun1":
        if d.inner is None or d.inner.kind != "central":
            raise DescriptorError("sun1: needs a central inner descriptor, e.g. sun1(lenexp(beta=2))")
    elif d.inner is not None:
        raise DescriptorError(f"{d.family}: does not take a nested descriptor")


# ---------------------------------------------------------------- parsing

# numbers go first so that ``e^2`` is not read as the name ``e``
_TOKEN = re.compile(
    r"\s*(?:(?P<num>e\^[-+]?(?:\d+\.?\d*|\.\d+)(?:e[-+]?\d+)?|[-+]?(?:\d+\.?\d*|\.\d+)(?:e[-+]?\d+)?)"
    r"|(?P<name>[a-z_][a-z0-9_]*)|(?P<sym>[(),=]))"
)


def parse_number(text: str) -> float:
    """Parse a float literal, ``e`` or the shorthand ``e^x``."""
    t = text.strip().lower()
    if t == "e":
        return math.e
    if t.startswith("e^"):
        return math.exp(float(t[2:]))
    return float(t)


def _tokenize(text: str) -> list[str]:
    pos, out = 0, []
    src = text.lower()
    while pos < len(src):
        if src[pos:].strip() == "":
            break
        m = _TOKEN.match(src, pos)
        if not m or m.end() == pos:
            raise DescriptorError(f"cannot parse descriptor {text!r} at position {pos}")
        out.append(m.group(m.lastgroup))
        pos = m.end()
    return out


def parse_descriptor(text: str) -> WeightDescriptor:
    """Parse descriptor text such as ``lenexp(beta=2)``."""
    tokens = _tokenize(text)
    desc, i = _parse(tokens, 0, text)
    if i != len(tokens):
        raise DescriptorError(f"trailing input in descriptor {text!r}")
    return desc


def _parse(tokens: list[str], i: int, text: str) -> tuple[WeightDescriptor, int]:
    def expect(sym: str, j: int) -> int:
        if j >= len(tokens) or tokens[j] != sym:
            raise DescriptorError(f"expected {sym!r} in descriptor {text!r}")
        return j + 1

    if i >= len(tokens) or not re.match(r"^[a-z_]", tokens[i]) or tokens[i].startswith("e^"):
        raise DescriptorError(f"expected a family name in {text!r}")
    name = tokens[i]
    if name not in _FAMILIES:
        raise DescriptorError(f"unknown weight family {name!r}")
    i = expect("(", i + 1)
    params: list[tuple[str, float]] = []
    inner = None
    while i < len(tokens) and tokens[i] != ")":
        if tokens[i] == "inner" and i + 1 < len(tokens) and tokens[i + 1] == "=":
            inner, i = _parse(tokens, i + 2, text)
        elif i + 1 < len(tokens) and tokens[i + 1] == "=":
            key = tokens[i]
            if i + 2 >= len(tokens):
                raise DescriptorError(f"missing value for {key!r} in {text!r}")
            try:
                value = parse_number(tokens[i + 2])
            except ValueError as exc:
                raise DescriptorError(f"bad number {tokens[i + 2]!r} in {text!r}") from exc
            params.append((key, value))
            i += 3
        else:
            inner, i = _parse(tokens, i, text)
        if i < len(tokens) and tokens[i] == ",":
            i += 1
    i = expect(")", i)
    return WeightDescriptor(name, tuple(params), inner), i


# ------------------------------------------------------------- evaluation

def abelian_log_weight(d: WeightDescriptor, x) -> np.ndarray:
    """log w(x) for an abelian family; ``x`` has shape (..., k) or is scalar.

    Product families read one base per axis (missing axes count as base 1).
    Radial-type families (``abelradial``, ``shilov``, ``polyw``) use the
    Euclidean norm of ``x``.
    """
    if d.kind != "abelian":
        raise DescriptorError(f"{d.family} is not a weight function on R^k or Z^k")
    arr = np.asarray(x, dtype=float)
    if arr.ndim == 0:
        arr = arr[..., None]
    if d.family in ("torus", "abelexp"):
        given = np.log(np.asarray(d.betas[: arr.shape[-1]]))
        logs = np.zeros(arr.shape[-1])
        logs[: given.size] = given
        return np.abs(arr) @ logs
    r = np.sqrt(np.sum(arr * arr, axis=-1))
    if d.family == "abelradial":
        return r * math.log(d.get("beta"))
    if d.family == "shilov":
        return r / np.log(math.e + r)
    if d.family == "polyw":
        return d.get("s") * np.log1p(r)
    if d.family == "const":
        return np.full(r.shape, math.log(d.get("c")))
    raise DescriptorError(f"no abelian evaluation for {d.family}")


def abelian_weight(d: WeightDescriptor, x) -> np.ndarray:
    return np.exp(abelian_log_weight(d, x))


def as_log_weight_function(w) -> "callable":
    """Turn a descriptor or a positive callable into ``x -> log w(x)``."""
    if isinstance(w, WeightDescriptor):
        return lambda x: abelian_log_weight(w, x)
    if isinstance(w, str):
        d = parse_descriptor(w)
        return lambda x: abelian_log_weight(d, x)

    def log_w(x):
        vals = np.asarray(w(x), dtype=float)
        if np.any(vals <= 0) or not np.all(np.isfinite(vals)):
            raise ValueError("weight function must be finite and strictly positive on the samples")
        return np.log(vals)

    return log_w


def describe(w) -> str:
    if isinstance(w, WeightDescriptor):
        return str(w)
    return getattr(w, "__name__", repr(w))


def families() -> Iterable[str]:
    return tuple(_FAMILIES)
