"""Command line front end.

Every invocation prints one JSON document (or a CSV table with
``--format csv``) holding the command echo, the parsed inputs, the result
and the numeric evidence behind it. Exit codes: 0 success, 2 invalid input,
3 inconclusive verdict under ``--strict``.
"""

from __future__ import annotations

import argparse
import cmath
import csv
import io
import json
import math
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Sequence

import numpy as np

from . import __version__
from .descriptors import DescriptorError, WeightDescriptor, parse_descriptor
from .verdict import Status, Verdict

SCHEMA_VERSION = 1
JOBS_ENV = "BEURLING_JOBS"


class UsageError(ValueError):
    """Input that parses but cannot be used (bad pairing, bad point)."""


# ------------------------------------------------------------------ parsing

_COMPLEX_RE = re.compile(r"^[-+0-9.eij()\s]+$")


def parse_complex(text: str) -> complex:
    """Parse ``1.5``, ``2-0.5i``, ``i``, ``-3i`` or ``e^x`` with x real or complex."""
    t = text.strip().lower().replace(" ", "")
    if t.startswith(("e^", "+e^", "-e^")):
        sign = -1 if t.startswith("-") else 1
        expo = t.split("^", 1)[1].strip("()")
        return sign * cmath.exp(parse_complex(expo))
    if not t or not _COMPLEX_RE.match(t):
        raise UsageError(f"cannot parse complex number {text!r}")
    t = t.replace("i", "j")
    t = re.sub(r"(^|[+-])j", r"\g<1>1j", t)
    try:
        return complex(t)
    except ValueError as exc:
        raise UsageError(f"cannot parse complex number {text!r}") from exc


def parse_list(text: str) -> list[complex]:
    return [parse_complex(p) for p in _split_top(text)]


def _split_top(text: str) -> list[str]:
    parts, depth, cur = [], 0, ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    parts.append(cur)
    return [p for p in (s.strip() for s in parts) if p]


def parse_matrix_point(text: str) -> np.ndarray:
    """``diag:x1,...,xn`` or ``matrix:a,b;c,d`` (rows separated by ``;``)."""
    kind, _, body = text.partition(":")
    kind = kind.strip().lower()
    if kind == "diag":
        return np.diag(np.asarray(parse_list(body), dtype=complex))
    if kind == "matrix":
        rows = [parse_list(r) for r in body.split(";")]
        if len({len(r) for r in rows}) != 1 or len(rows) != len(rows[0]):
            raise UsageError("matrix point must be square")
        return np.asarray(rows, dtype=complex)
    raise UsageError(f"SU(n) points are written diag:x1,..,xn or matrix:a,b;c,d, got {text!r}")


def parse_group(text: str) -> tuple[str, int | None]:
    t = text.strip().lower()
    m = re.fullmatch(r"su(\d+)", t)
    if m:
        n = int(m.group(1))
        if n < 2:
            raise UsageError("SU(n) needs n >= 2")
        return "su", n
    if t in ("heis", "rheis", "e2", "torus", "abelian"):
        return t, None
    raise UsageError(f"unknown group {text!r}; use suN, heis, rheis, e2, torus or abelian")


def parse_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.split(",") if v.strip())
    except ValueError as exc:
        raise UsageError(f"expected comma separated integers, got {text!r}") from exc


def _c(v: complex) -> list[float]:
    v = complex(v)
    return [v.real, v.imag]


# ---------------------------------------------------------------- commands

def _highest_weight(n: int, args) -> "HighestWeight":
    from .repsu import HighestWeight

    if getattr(args, "lam", None):
        lam = parse_ints(args.lam)
        if len(lam) != n:
            raise UsageError(f"SU({n}) needs {n} partition entries")
        return HighestWeight.from_lambda(lam)
    if getattr(args, "a", None) is None:
        raise UsageError("give the highest weight with --a or --lambda")
    return HighestWeight(n, parse_ints(args.a))


def cmd_tableaux(args) -> dict:
    from .repsu import enumerate_tableaux

    group, n = parse_group(args.group)
    if group != "su":
        raise UsageError("tableaux are only defined for SU(n)")
    w = _highest_weight(n, args)
    tabs = enumerate_tableaux(w, cap=args.cap)
    rows = [{"index": i, "rows": [list(r) for r in t.rows], "content": list(t.content)} for i, t in enumerate(tabs)]
    return {
        "inputs": {"group": f"su{n}", "a": list(w.a), "lambda": list(w.lam), "cap": args.cap},
        "result": {"dimension": len(tabs), "tableaux": rows},
        "evidence": {"weyl_dimension": w.dim},
        "table": [{"index": r["index"], "rows": json.dumps(r["rows"]), "content": json.dumps(r["content"])} for r in rows],
    }


def _sl_point(text: str, det_tol: float) -> tuple[np.ndarray, dict]:
    A = parse_matrix_point(text)
    det = complex(np.linalg.det(A))
    if det == 0:
        raise UsageError("point is singular")
    n = A.shape[0]
    info = {"det": _c(det), "normalized": False}
    if abs(det - 1) > 1e-12:
        if abs(abs(det) - 1) > det_tol:
            raise UsageError(f"|det| = {abs(det):.10g} is not 1 within --det-tol {det_tol:g}")
        A = A / det ** (1.0 / n)
        info["normalized"] = True
    return A, info


def cmd_norm(args) -> dict:
    group, n = parse_group(args.group)
    if group == "su":
        from .repsu import complexified_norm

        w = _highest_weight(n, args)
        A, info = _sl_point(args.point, args.det_tol)
        if not np.allclose(A, np.diag(np.diag(A)), atol=0):
            from .speccompact import singular_values

            diag = singular_values(A)
            info["reduced_to_singular_values"] = True
        else:
            diag = np.diag(A)
        out = {"closed": complexified_norm(w, diag, "closed")}
        if args.method in ("brute", "both"):
            out["brute"] = complexified_norm(w, diag, "brute", cap=args.cap)
        if args.method == "brute":
            out.pop("closed")
        return {
            "inputs": {"group": f"su{n}", "a": list(w.a), "point": args.point, "method": args.method, **info},
            "result": out,
            "evidence": {"moduli": np.sort(np.abs(diag))[::-1].tolist()},
        }
    if group == "e2":
        from .emotion import E2CPoint, e2_complexified_norm

        x, y, z = _three(args.point)
        p = E2CPoint(x, y, z)
        res = e2_complexified_norm(p, args.t, args.r, args.window, stab_tol=args.band)
        return {
            "inputs": {"group": "e2", "point": [_c(x), _c(y), _c(z)], "t": args.t, "r": args.r, "window": args.window},
            "result": {"bound": res.bound, "truncated_norm": res.truncated_norm},
            "evidence": {"argmax_n": res.argmax_n, "theta_nodes": res.theta_nodes, "A": p.A, "im_s": p.s.imag},
        }
    raise UsageError(f"norm is available for suN and e2, not {args.group}")


def _three(text: str) -> tuple[complex, complex, complex]:
    vals = parse_list(text)
    if len(vals) != 3:
        raise UsageError(f"expected three coordinates, got {len(vals)}")
    return vals[0], vals[1], vals[2]


def cmd_weight_check(args) -> dict:
    group, n = parse_group(args.group)
    d = parse_descriptor(args.weight)
    if group == "su":
        from .weights import check_submultiplicative_compact

        if d.kind != "central":
            raise UsageError(f"{d} is not a central weight; weight-check on suN needs dim, lenpoly, lenexp, lapexp or lappoly")
        rep = check_submultiplicative_compact(d, n, args.window, tol=args.exact_tol)
        return {
            "inputs": {"group": f"su{n}", "weight": str(d), "window": args.window},
            "result": {"passed": rep.passed, "checked": rep.checked, "violations": rep.violations},
            "evidence": rep.details,
            "passed": rep.passed,
        }
    if group in ("abelian", "torus", "heis"):
        from .weights import exponential_growth_bound

        if d.kind != "abelian":
            raise UsageError(f"{d} is not a weight function on R^k or Z^k")
        k = args.dim or max(1, len(d.betas))
        axis = np.arange(-args.window, args.window + 1, dtype=float)
        pts = np.stack(np.meshgrid(*([axis] * k), indexing="ij"), axis=-1).reshape(-1, k)
        gb = exponential_growth_bound(d, pts, lattice=(group == "torus"), raise_on_failure=False)
        return {
            "inputs": {"group": group, "weight": str(d), "window": args.window, "dim": k},
            "result": {"passed": gb.holds, "C": gb.C, "rho": list(gb.rho)},
            "evidence": {"worst_log_slack": gb.worst_log_slack, "witness": gb.witness},
            "passed": gb.holds,
        }
    if group == "e2":
        from .descriptors import abelian_weight
        from .emotion import e2_radial_submult

        if d.kind != "abelian":
            raise UsageError(f"{d} is not a radial weight function")
        grid = np.linspace(0.25, args.window, 12)
        pairs = [(float(r), float(s)) for r in grid for s in grid]
        rep = e2_radial_submult(lambda a: np.atleast_1d(abelian_weight(d, np.asarray(a, dtype=float)[:, None])), pairs)
        return {
            "inputs": {"group": "e2", "weight": str(d), "window": args.window},
            "result": {"passed": rep.passed, "checked": rep.checked, "violations": rep.violations},
            "evidence": rep.details,
            "passed": rep.passed,
        }
    raise UsageError(f"weight-check is not available for {args.group}")


def cmd_spectrum(args) -> dict:
    group, n = parse_group(args.group)
    d = parse_descriptor(args.weight)
    if group == "su":
        return _spectrum_su(n, d, args)
    if group == "heis":
        from .heis import HeisPoint, heis_spectrum_member

        y, z, x = _three(args.point)
        v = heis_spectrum_member(HeisPoint(y, z, x), d, rel_tol=args.exact_tol)
        return _verdict_payload({"group": "heis", "weight": str(d), "point": [_c(y), _c(z), _c(x)]}, v)
    if group == "e2":
        from .emotion import E2CPoint, e2_laplacian_sweep, e2_spectrum_member

        x, y, z = _three(args.point)
        p = E2CPoint(x, y, z)
        v = e2_spectrum_member(p, d, rel_tol=args.exact_tol)
        if d.family == "e2lap" and args.sweep:
            sw = e2_laplacian_sweep(p, d.get("t"), band=args.band)
            v.evidence["sweep"] = sw.to_dict()
        return _verdict_payload({"group": "e2", "weight": str(d), "point": [_c(x), _c(y), _c(z)]}, v)
    if group == "torus":
        from .regularity import torus_annulus_member

        zs = parse_list(args.point)
        v = torus_annulus_member(zs, d, K=args.K, delta=args.band)
        return _verdict_payload({"group": "torus", "weight": str(d), "point": [_c(v_) for v_ in zs]}, v)
    raise UsageError(f"spectrum is not available for {args.group}")


def _spectrum_su(n: int, d: WeightDescriptor, args) -> dict:
    from .speccompact import spectrum_member_central_exp, spectrum_member_torus_extended, spectrum_sweep

    A, info = _sl_point(args.point, args.det_tol)
    if A.shape[0] != n:
        raise UsageError(f"SU({n}) point must be {n}x{n}")
    inputs = {"group": f"su{n}", "weight": str(d), "point": args.point, **info}
    if d.family == "lenexp":
        v = spectrum_member_central_exp(A, d.get("beta"), det_tol=max(args.det_tol, 1e-8), rel_tol=args.exact_tol)
        if args.sweep_horizon > 0 and np.allclose(A, np.diag(np.diag(A)), atol=0):
            sw = spectrum_sweep(np.diag(A), d, L=args.sweep_horizon, delta=args.band)
            v.evidence["sweep"] = sw.to_dict()
        return _verdict_payload(inputs, v)
    if d.family == "torus":
        betas = list(d.betas) + [1.0] * (n - 1 - len(d.betas))
        v = spectrum_member_torus_extended(A, betas[: n - 1], det_tol=max(args.det_tol, 1e-8), rel_tol=args.exact_tol)
        return _verdict_payload(inputs, v)
    if d.kind == "central":
        diag = np.diag(A) if np.allclose(A, np.diag(np.diag(A)), atol=0) else None
        if diag is None:
            from .speccompact import singular_values

            diag = singular_values(A)
        v = spectrum_sweep(diag, d, L=args.sweep_horizon or 200, delta=args.band)
        return _verdict_payload(inputs, v)
    raise UsageError(f"{d} cannot be used for SU({n}) spectra")


def _verdict_payload(inputs: dict, v: Verdict) -> dict:
    result: dict[str, Any] = {"status": v.status.value}
    if v.reason:
        result["reason"] = v.reason
    if v.witness is not None:
        result["witness"] = v.witness
    return {"inputs": inputs, "result": result, "evidence": v.evidence, "status": v.status}


def _parse_rheis_label(text: str):
    from .heis import RHeisLabel

    kind, _, body = text.strip().lower().partition(":")
    if kind == "pi":
        return RHeisLabel.pi(int(body))
    if kind == "chi":
        r, s = (float(v) for v in body.split(","))
        return RHeisLabel.chi(r, s)
    if kind == "pi0":
        return RHeisLabel.pi0()
    raise UsageError(f"labels are pi:n, chi:r,s or pi0, got {text!r}")


def cmd_fusion(args) -> dict:
    group, n = parse_group(args.group)
    if group == "su":
        from collections import Counter

        from .repsu import HighestWeight, branch_to_sun1, tensor_decompose_su2, tensor_with_fundamental

        w = _highest_weight(n, args)
        if args.branch:
            parts = Counter(branch_to_sun1(w))
            rows = [{"a": list(mu.a), "multiplicity": m, "dim": mu.dim} for mu, m in sorted(parts.items())]
            return {
                "inputs": {"group": f"su{n}", "a": list(w.a), "operation": "branch"},
                "result": {"summands": rows},
                "evidence": {"dim": w.dim, "sum_of_dims": sum(r["dim"] * r["multiplicity"] for r in rows)},
                "table": rows,
            }
        if args.b is not None:
            if n != 2:
                raise UsageError("--b (full tensor product) is only available on su2; use --k for Pieri steps")
            b = int(args.b)
            parts = Counter(tensor_decompose_su2(w.a[0], b))
            rows = [{"c": c, "multiplicity": m} for c, m in sorted(parts.items())]
            return {
                "inputs": {"group": "su2", "a": w.a[0], "b": b},
                "result": {"summands": rows},
                "evidence": {"dim_product": (w.a[0] + 1) * (b + 1), "sum_of_dims": sum((r["c"] + 1) * r["multiplicity"] for r in rows)},
                "table": rows,
            }
        k = args.k or 1
        parts = Counter(tensor_with_fundamental(w.a, k))
        rows = [{"a": list(b), "multiplicity": m, "dim": HighestWeight(n, b).dim} for b, m in sorted(parts.items())]
        return {
            "inputs": {"group": f"su{n}", "a": list(w.a), "k": k},
            "result": {"summands": rows},
            "evidence": {"dim_product": w.dim * HighestWeight.fundamental(n, k).dim, "sum_of_dims": sum(r["dim"] * r["multiplicity"] for r in rows)},
            "table": rows,
        }
    if group == "rheis":
        from .heis import rheis_plancherel_atom, rheis_tensor

        if not (args.left and args.right):
            raise UsageError("rheis fusion needs --left and --right labels")
        l1, l2 = _parse_rheis_label(args.left), _parse_rheis_label(args.right)
        out = rheis_tensor(l1, l2)
        ev = {}
        for lab in (l1, l2, out):
            if lab.kind == "pi":
                ev[str(lab)] = {"plancherel_atom": rheis_plancherel_atom(lab.n)}
        return {"inputs": {"left": str(l1), "right": str(l2)}, "result": {"product": str(out)}, "evidence": ev}
    if group == "e2":
        if args.r is None or args.s is None:
            raise UsageError("e2 fusion needs --r and --s")
        return {
            "inputs": {"r": args.r, "s": args.s},
            "result": {"interval": [abs(args.r - args.s), args.r + args.s]},
            "evidence": {},
        }
    raise UsageError(f"fusion is not available for {args.group}")


def cmd_fourier(args) -> dict:
    from .heis import QuadSpec, gaussian_test_function, heis_fourier, mixed_test_function, relative_frobenius

    group, _ = parse_group(args.group)
    if group != "heis":
        raise UsageError("fourier is available for heis only")
    f = {"gaussian": gaussian_test_function(), "mixed": mixed_test_function()}[args.function]
    spec = QuadSpec(args.window, args.nodes, args.quad_tol)
    a_values = [float(v) for v in args.a.split(",")]
    methods = ["kernel", "direct"] if args.method == "both" else [args.method]
    jobs = [(a, m) for a in a_values for m in methods]
    with ThreadPoolExecutor(max_workers=max(1, args.jobs)) as pool:
        results = list(pool.map(lambda am: heis_fourier(f, am[0], spec, am[1]), jobs))
    by = {(a, m): r for (a, m), r in zip(jobs, results)}
    out, table = {}, []
    for a in a_values:
        entry = {m: by[(a, m)].to_dict() for m in methods}
        if len(methods) == 2:
            entry["relative_frobenius"] = relative_frobenius(by[(a, "kernel")].matrix, by[(a, "direct")].matrix)
            table.append({"a": a, "relative_frobenius": entry["relative_frobenius"]})
        out[repr(a)] = entry
    return {
        "inputs": {"function": args.function, "a": a_values, "method": args.method, "quad": spec.to_dict()},
        "result": out,
        "evidence": {"kernel_constant": "2*pi"},
        "table": table or None,
    }


def cmd_regularity(args) -> dict:
    from .regularity import quasianalytic_test, shilov_radius

    d = parse_descriptor(args.weight)
    if d.kind != "abelian":
        raise UsageError(f"{d} is not a weight function on R^k or Z^k")
    x = [float(v.real) for v in parse_list(args.x)]
    diag = quasianalytic_test(d, x, args.N)
    plus = shilov_radius(d, np.asarray(x), args.K)
    minus = shilov_radius(d, -np.asarray(x), args.K)
    return {
        "inputs": {"weight": str(d), "x": x, "N": args.N, "K": args.K},
        "result": {
            "classification": diag.classification,
            "p": diag.p,
            "q": diag.q,
            "rho_plus": plus.rho,
            "rho_minus": minus.rho,
        },
        "evidence": {"series": diag.to_dict(), "shilov_plus": plus.to_dict(), "shilov_minus": minus.to_dict()},
        "table": [{"checkpoint": c, "partial_sum": s} for c, s in zip(diag.checkpoints, diag.partial_sums)],
        "status": Status.INCONCLUSIVE if diag.classification == "inconclusive" else None,
    }


# --------------------------------------------------------------- rendering

def _clean(obj):
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if isinstance(obj, Status):
        return obj.value
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating, float)):
        v = float(obj)
        if math.isnan(v):
            return "nan"
        if math.isinf(v):
            return "inf" if v > 0 else "-inf"
        return v
    if isinstance(obj, (complex, np.complexfloating)):
        return _c(obj)
    if isinstance(obj, np.ndarray):
        return _clean(obj.tolist())
    return obj


def render_json(doc: dict) -> str:
    return json.dumps(_clean(doc), sort_keys=True, indent=2, ensure_ascii=False)


def render_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    keys = sorted({k for r in rows for k in r})
    writer = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
    writer.writeheader()
    for r in rows:
        writer.writerow(_clean(r))
    return buf.getvalue()


def _flatten(prefix: str, obj, out: list[dict]) -> None:
    if isinstance(obj, dict):
        for k in sorted(obj):
            _flatten(f"{prefix}.{k}" if prefix else str(k), obj[k], out)
    else:
        out.append({"key": prefix, "value": json.dumps(_clean(obj))})


# ------------------------------------------------------------------- main

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--strict", action="store_true", help="exit with code 3 on an inconclusive verdict")
    common.add_argument("--jobs", type=int, default=int(os.environ.get(JOBS_ENV, "1")), help=f"worker threads (default from ${JOBS_ENV}, else 1)")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--seed", type=int, default=0, help="recorded in the report; all computations are deterministic")
    common.add_argument("--exact-tol", type=float, default=1e-12, help="slack for exact comparisons")
    common.add_argument("--band", type=float, default=1e-3, help="inconclusive band for numeric sweeps")
    common.add_argument("--det-tol", type=float, default=1e-3, help="allowed deviation of |det| from 1 before rejecting an SL(n) point")
    common.add_argument("--quad-tol", type=float, default=1e-6, help="quadrature error tolerance")

    parser = argparse.ArgumentParser(prog="beurling", description="Spectra of Beurling-Fourier algebras")
    parser.add_argument("--version", action="version", version=f"beurling {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tableaux", parents=[common], help="enumerate semistandard tableaux of an SU(n) irreducible")
    p.add_argument("group")
    p.add_argument("--a")
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--cap", type=int, default=10**6)
    p.set_defaults(func=cmd_tableaux)

    p = sub.add_parser("norm", parents=[common], help="complexified operator norms")
    p.add_argument("group")
    p.add_argument("--a")
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--point", required=True)
    p.add_argument("--method", choices=("closed", "brute", "both"), default="closed")
    p.add_argument("--cap", type=int, default=10**6)
    p.add_argument("--t", type=float, default=1.0)
    p.add_argument("--r", type=float, default=1.0)
    p.add_argument("--window", type=int, default=50)
    p.set_defaults(func=cmd_norm)

    p = sub.add_parser("weight-check", parents=[common], help="verify the defining inequalities of a weight")
    p.add_argument("group")
    p.add_argument("--weight", required=True)
    p.add_argument("--window", type=int, default=8)
    p.add_argument("--dim", type=int, default=0, help="dimension of the abelian dual (default: number of betas)")
    p.set_defaults(func=cmd_weight_check)

    p = sub.add_parser("spectrum", parents=[common], help="spectrum membership of a complexified point")
    p.add_argument("group")
    p.add_argument("--weight", required=True)
    p.add_argument("--point", required=True)
    p.add_argument("--sweep-horizon", type=int, default=200, help="SU(n) sweep horizon L (0 disables)")
    p.add_argument("--sweep", action="store_true", help="add the numeric (n, r) sweep for E(2)")
    p.add_argument("--K", type=int, default=10**6, help="horizon for Shilov radius estimates")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("fusion", parents=[common], help="tensor product and branching rules")
    p.add_argument("group")
    p.add_argument("--a")
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--b", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--branch", action="store_true")
    p.add_argument("--left")
    p.add_argument("--right")
    p.add_argument("--r", type=float)
    p.add_argument("--s", type=float)
    p.set_defaults(func=cmd_fusion)

    p = sub.add_parser("fourier", parents=[common], help="Heisenberg group Fourier transform matrices")
    p.add_argument("group")
    p.add_argument("--a", required=True, help="comma separated nonzero parameters")
    p.add_argument("--method", choices=("kernel", "direct", "both"), default="both")
    p.add_argument("--function", choices=("gaussian", "mixed"), default="gaussian")
    p.add_argument("--window", type=int, default=8)
    p.add_argument("--nodes", type=int, default=64)
    p.set_defaults(func=cmd_fourier)

    p = sub.add_parser("regularity", parents=[common], help="quasianalyticity and Shilov radius of an abelian weight")
    p.add_argument("--weight", required=True)
    p.add_argument("--x", default="1")
    p.add_argument("--N", type=int, default=10**5)
    p.add_argument("--K", type=int, default=10**6)
    p.set_defaults(func=cmd_regularity)
    return parser


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        payload = args.func(args)
    except (DescriptorError, UsageError, ValueError) as exc:
        err = {"schema_version": SCHEMA_VERSION, "command": argv, "error": {"type": type(exc).__name__, "message": str(exc)}}
        stderr.write(render_json(err) + "\n")
        return 2
    status = payload.pop("status", None)
    table = payload.pop("table", None)
    payload.pop("passed", None)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "tool": {"name": "beurling", "version": __version__},
        "command": argv,
        "seed": args.seed,
        "settings": {
            "exact_tol": args.exact_tol,
            "band": args.band,
            "det_tol": args.det_tol,
            "quad_tol": args.quad_tol,
            "jobs": args.jobs,
        },
        **payload,
    }
    if args.format == "csv":
        rows = table
        if not rows:
            rows = []
            _flatten("", {"result": doc["result"]}, rows)
        stdout.write(render_csv(rows))
    else:
        stdout.write(render_json(doc) + "\n")
    if args.strict and status is Status.INCONCLUSIVE:
        return 3
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
