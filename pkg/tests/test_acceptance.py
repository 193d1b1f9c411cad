"""Acceptance criteria, each with its tolerance and runtime budget.

Every criterion records one PASS/FAIL line; the lines are printed in the
terminal summary (see conftest.py) and when this file is run as a script.
"""

import math
import time
from collections import Counter

import numpy as np
import pytest

from beurling.descriptors import families, parse_descriptor
from beurling.emotion import (
    E2CPoint,
    coproduct_b_norm,
    coproduct_scalar_slack,
    e2_laplacian_sweep,
    e2_spectrum_member,
    laplacian_ball_value,
)
from beurling.heis import (
    HeisPoint,
    QuadSpec,
    RHeisLabel,
    dilation_norms,
    gaussian_test_function,
    heis_fourier,
    heis_spectrum_member,
    relative_frobenius,
    rheis_plancherel_atom,
    rheis_tensor,
)
from beurling.regularity import quasianalytic_test, shilov_radius
from beurling.repsu import (
    HighestWeight,
    branch_to_sun1,
    complexified_norm,
    su2_character,
    tensor_decompose_su2,
    weights_up_to,
)
from beurling.speccompact import spectrum_member_central_exp, spectrum_sweep
from beurling.verdict import Status

RESULTS: list[str] = []


def record(number, title, budget, func):
    start = time.perf_counter()
    ok, detail = func()
    elapsed = time.perf_counter() - start
    in_time = elapsed < budget
    passed = bool(ok) and in_time
    line = f"[{'PASS' if passed else 'FAIL'}] criterion {number:2d}: {title} ({detail}; {elapsed:.2f} s < {budget:g} s: {in_time})"
    RESULTS.append(line)
    return passed, line


# ------------------------------------------------------------------ 1

def criterion_1():
    d = parse_descriptor("lenexp(beta=2)")
    rhos = [0.4, 0.5, 1, 1.5, 2, 2.5]
    expected = [Status.OUT, Status.IN, Status.IN, Status.IN, Status.IN, Status.OUT]
    closed = [spectrum_member_central_exp(np.diag([r, 1 / r]), 2).status for r in rhos]
    sweep = [spectrum_sweep([r, 1 / r], d, 200).status for r in rhos]
    agree = all(
        s is c for r, s, c in zip(rhos, sweep, closed) if abs(abs(math.log(r)) - math.log(2)) >= 1e-3
    )
    labels = "/".join(s.value for s in sweep)
    return closed == expected and agree, f"closed ok={closed == expected}, sweep {labels}"


# ------------------------------------------------------------------ 2

def criterion_2():
    rng = np.random.default_rng(2024)
    worst = 0.0
    for n in (3, 4):
        ds = []
        for _ in range(20):
            x = np.exp(rng.normal(size=n) + 1j * rng.uniform(0, 2 * np.pi, size=n))
            x[-1] = 1 / np.prod(x[:-1])
            ds.append(x)
        for w in weights_up_to(n, 5):
            for x in ds:
                b = complexified_norm(w, x, "brute")
                c = complexified_norm(w, x, "closed")
                worst = max(worst, abs(b - c) / c)
    return worst <= 1e-12, f"max rel diff {worst:.2e}"


# ------------------------------------------------------------------ 3

def criterion_3():
    rng = np.random.default_rng(3)
    xs = rng.uniform(0.5, 2, 50) * np.exp(1j * rng.uniform(0, 2 * np.pi, 50))
    worst = 0.0
    for x in xs:
        chars = [su2_character(a, x) for a in range(21)]
        for a in range(11):
            for b in range(11):
                lhs = chars[a] * chars[b]
                rhs = sum(chars[c] for c in tensor_decompose_su2(a, b))
                worst = max(worst, abs(lhs - rhs) / max(1.0, abs(lhs)))
    return worst <= 1e-9, f"max residual {worst:.2e}"


# ------------------------------------------------------------------ 4

def criterion_4():
    bad = [
        w for n in (3, 4) for w in weights_up_to(n, 4)
        if sum(m.dim for m in branch_to_sun1(w)) != w.dim
    ]
    return not bad, f"{len(bad)} mismatches"


# ------------------------------------------------------------------ 5

def criterion_5():
    f = gaussian_test_function()
    spec = QuadSpec(window=6, nodes=64)
    errs = []
    for a in (0.5, -0.5, 1.0, -1.0, 2.0):
        k = heis_fourier(f, a, spec, "kernel").matrix
        d = heis_fourier(f, a, spec, "direct").matrix
        errs.append(relative_frobenius(k, d))
    return max(errs) <= 1e-4, f"max rel Frobenius {max(errs):.2e}"


# ------------------------------------------------------------------ 6

def criterion_6():
    w = parse_descriptor("abelexp(beta1=e^2,beta2=e)")
    wrong = 0
    for yp in (0, 1, 1.9, 2.1, 3):
        for zp in (0, 0.5, 0.9, 1.1, 2):
            expected = Status.IN if abs(yp) <= 2 and abs(zp) <= 1 else Status.OUT
            v = heis_spectrum_member(HeisPoint(1j * yp, 1j * zp, 0), w)
            if v.status is not expected or v.evidence["grid"]["status"] != expected.value:
                wrong += 1
    return wrong == 0, f"{wrong}/25 misclassified"


# ------------------------------------------------------------------ 7

def criterion_7():
    lap = parse_descriptor("e2lap(t=1)")
    im = np.linspace(-1.2, 1.2, 7)
    logs = np.linspace(-1.0, 1.0, 5)
    compared = wrong = 0
    for a in im:
        for b in im:
            for lz in logs:
                p = E2CPoint(1j * a, 1j * b, math.exp(lz))
                if abs(math.sqrt(laplacian_ball_value(p)) - 1.0) < 0.05:
                    continue
                compared += 1
                sweep = e2_laplacian_sweep(p, 1.0, n_max=200, r_max=50.0, r_points=50)
                wrong += sweep.status is not e2_spectrum_member(p, lap).status
    return wrong == 0 and compared > 0, f"{wrong}/{compared} disagree"


# ------------------------------------------------------------------ 8

def criterion_8():
    ok = True
    low = math.inf
    for r, s in [(1, 1), (1, 2), (3, 0.5)]:
        for N in (10, 50, 100):
            ok &= coproduct_b_norm(r, s, N) <= 2 * r * s
        ratio = coproduct_b_norm(r, s, 100) / (r * s)
        low = min(low, ratio)
        ok &= ratio >= 1.99
    rng = np.random.default_rng(8)
    m, n = rng.integers(-100, 101, size=(2, 10_000))
    r, s = rng.uniform(1e-3, 100, size=(2, 10_000))
    scalar = bool(np.all(coproduct_scalar_slack(m, n, r, s) >= -1e-12))
    return ok and scalar, f"min ||B||/rs at N=100 {low:.5f}, scalar ok={scalar}"


# ------------------------------------------------------------------ 9

def displayed_rule(l1, l2):
    if l1.kind == "pi" and l2.kind == "pi":
        return RHeisLabel.pi0() if l1.n == -l2.n else RHeisLabel.pi(l1.n + l2.n)
    if l1.kind == "pi":
        return l1
    if l2.kind == "pi":
        return l2
    return RHeisLabel.chi(l1.r + l2.r, l1.s + l2.s)


def criterion_9():
    rng = np.random.default_rng(9)

    def draw():
        if rng.random() < 0.5:
            n = int(rng.integers(1, 6)) * (1 if rng.random() < 0.5 else -1)
            return RHeisLabel.pi(n)
        return RHeisLabel.chi(*rng.integers(-5, 6, size=2))

    wrong = sum(rheis_tensor(a, b) != displayed_rule(a, b) for a, b in ((draw(), draw()) for _ in range(100)))
    atoms = all(rheis_plancherel_atom(n) == abs(n) / (2 * math.pi) for n in range(-50, 51) if n)
    return wrong == 0 and atoms, f"{wrong}/100 rule mismatches, atoms exact={atoms}"


# ------------------------------------------------------------------ 10

def criterion_10():
    poly = quasianalytic_test(parse_descriptor("polyw(s=2)"), 1.0, 10**5)
    shil = quasianalytic_test(parse_descriptor("shilov()"), 1.0, 10**5)
    sr = shilov_radius(parse_descriptor("shilov()"), 1.0, 10**6)
    fit_ok = abs(shil.p - 1) <= 0.05 and abs(shil.q - 1) <= 0.05
    builtins = ["torus(beta1=2)", "abelexp(beta1=3,beta2=1.5)", "abelradial(beta=2)", "shilov()", "polyw(s=2)", "const()"]
    products = []
    for text in builtins:
        d = parse_descriptor(text)
        k = max(1, len(d.betas))
        mu = np.eye(k)[0]
        products.append(shilov_radius(d, mu).rho * shilov_radius(d, -mu).rho)
    ok = (
        poly.classification == "convergent"
        and shil.classification == "divergent"
        and fit_ok
        and sr.rho <= 1.08
        and sr.monotone
        and min(products) >= 1 - 1e-9
    )
    return ok, (
        f"poly {poly.classification}, shilov {shil.classification} p={shil.p:.4f} q={shil.q:.4f}, "
        f"rho_hat={sr.rho:.5f} monotone={sr.monotone}, min rho+rho- {min(products):.6f}"
    )


# ------------------------------------------------------------------ 11

def criterion_11():
    n1, d1 = dilation_norms(1)
    worst = 0.0
    for N in (1, 2, 4, 8, 16):
        nN, dN = dilation_norms(N)
        worst = max(worst, abs(dN - N * d1) / (N * d1), abs(nN - n1) / n1)
    return worst <= 1e-6, f"max rel error {worst:.2e}"


CRITERIA = [
    (1, "SU(2) central exponential spectrum", 1, criterion_1),
    (2, "brute vs closed complexified norm", 10, criterion_2),
    (3, "SU(2) character multiplicativity", 2, criterion_3),
    (4, "branching dimension conservation", 2, criterion_4),
    (5, "Heisenberg kernel vs direct quadrature", 60, criterion_5),
    (6, "Heisenberg spectrum 5x5 grid", 1, criterion_6),
    (7, "E(2) Laplacian spectrum sweep vs ball", 30, criterion_7),
    (8, "coproduct B-norm and scalar inequality", 5, criterion_8),
    (9, "reduced Heisenberg fusion and Plancherel atoms", 1, criterion_9),
    (10, "quasianalyticity and Shilov radius", 10, criterion_10),
    (11, "dilation scaling of derivative norms", 1, criterion_11),
]


@pytest.mark.parametrize("number,title,budget,func", CRITERIA, ids=[f"criterion_{c[0]:02d}" for c in CRITERIA])
def test_criterion(number, title, budget, func):
    passed, line = record(number, title, budget, func)
    print(line)
    assert passed, line


if __name__ == "__main__":
    for c in CRITERIA:
        print(record(*c)[1])
