import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from beurling.descriptors import parse_descriptor
from beurling.regularity import quasianalytic_test, shilov_radius, torus_annulus_member
from beurling.verdict import Status

POLY = parse_descriptor("polyw(s=2)")
SHILOV = parse_descriptor("shilov()")
BUILTINS = ["torus(beta1=2)", "abelradial(beta=3)", "shilov()", "polyw(s=2)", "polyw(s=0.5)", "const()"]


def test_polynomial_weight_converges():
    diag = quasianalytic_test(POLY, 1.0, 10**5)
    assert diag.classification == "convergent"
    assert diag.p == pytest.approx(2.0, abs=0.05)
    assert diag.checkpoints == [10, 100, 1000, 10**4, 10**5]
    # integral test: both signs together contribute at most 4 (log n0 + 1) / n0 beyond n0
    n0 = 10**4
    tail = diag.partial_sums[-1] - diag.partial_sums[3]
    assert 0 < tail <= 4 * (math.log(n0) + 1) / n0


def test_shilov_weight_diverges():
    diag = quasianalytic_test(SHILOV, 1.0, 10**5)
    assert diag.classification == "divergent"
    assert diag.p == pytest.approx(1.0, abs=0.05)
    assert diag.q == pytest.approx(1.0, abs=0.05)


def test_constant_weight_sums_to_zero():
    diag = quasianalytic_test(parse_descriptor("const()"), 1.0, 10**4)
    assert diag.classification == "convergent"
    assert diag.partial_sums[-1] == 0.0


def test_exponential_weight_diverges():
    assert quasianalytic_test(parse_descriptor("abelradial(beta=2)"), 1.0, 10**4).classification == "divergent"


def test_weight_below_one_is_shifted():
    diag = quasianalytic_test(lambda x: 0.5 * (1 + np.abs(x[..., 0])) ** 2, 1.0, 10**4)
    assert diag.shift == pytest.approx(math.log(2))
    assert diag.classification == "convergent"


def test_small_horizon_rejected():
    with pytest.raises(ValueError):
        quasianalytic_test(POLY, 1.0, 100)


@pytest.mark.parametrize("text", BUILTINS)
def test_classification_stable_under_horizon_change(text):
    d = parse_descriptor(text)
    assert quasianalytic_test(d, 1.0, 10**4).classification == quasianalytic_test(d, 1.0, 10**5).classification


@pytest.mark.parametrize("text", BUILTINS)
def test_partial_sums_nondecreasing(text):
    sums = quasianalytic_test(parse_descriptor(text), 1.0, 10**4).partial_sums
    assert all(b >= a for a, b in zip(sums, sums[1:]))


def test_shilov_radius_examples():
    for K in (1, 10, 1000, 10**6):
        assert shilov_radius(parse_descriptor("torus(beta1=2)"), 1.0, K).rho == pytest.approx(2.0, rel=1e-12)
    sr = shilov_radius(SHILOV, 1.0, 10**6)
    assert sr.rho == pytest.approx(math.exp(1 / math.log(math.e + 10**6)), rel=1e-12)
    assert sr.rho <= 1.08 and sr.monotone
    cubic = [shilov_radius(lambda x: (1 + np.abs(x[..., 0])) ** 3, 1.0, K).rho for K in (10, 10**3, 10**6)]
    assert cubic[0] > cubic[1] > cubic[2] > 1 and cubic[2] < 1.0001


@pytest.mark.parametrize("text", BUILTINS)
def test_radius_product_at_least_one(text):
    d = parse_descriptor(text)
    plus = shilov_radius(d, 1.0).rho
    minus = shilov_radius(d, -1.0).rho
    assert plus * minus >= 1 - 1e-9


def test_annulus_examples():
    w = parse_descriptor("torus(beta1=2)")
    assert torus_annulus_member([1.5], w).status is Status.IN
    assert torus_annulus_member([3.0], w).status is Status.OUT
    assert torus_annulus_member([0.4], w).status is Status.OUT
    assert torus_annulus_member([np.exp(0.3j)], w).status is Status.IN


def test_annulus_near_boundary_is_inconclusive():
    w = parse_descriptor("torus(beta1=2)")
    assert torus_annulus_member([2.0 * (1 + 2e-4)], w).status is Status.INCONCLUSIVE
    with pytest.raises(ValueError):
        torus_annulus_member([0.0], w)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.floats(0, 2 * math.pi), min_size=1, max_size=3), st.sampled_from(BUILTINS))
def test_unit_torus_always_in(phases, text):
    z = np.exp(1j * np.asarray(phases))
    assert torus_annulus_member(z, parse_descriptor(text), K=10**4).status is Status.IN


@settings(max_examples=30, deadline=None)
@given(st.floats(-3, 3).filter(lambda v: abs(v) > 0.01), st.floats(0, 2 * math.pi))
def test_polynomial_annulus_is_the_torus(logr, phase):
    z = math.exp(logr) * complex(math.cos(phase), math.sin(phase))
    assert torus_annulus_member([z], parse_descriptor("polyw(s=3)")).status is Status.OUT
