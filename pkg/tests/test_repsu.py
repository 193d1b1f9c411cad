import itertools
import math
from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from beurling.repsu import (
    ComplexDiagonal,
    HighestWeight,
    InstanceTooLarge,
    branch_to_sun1,
    complexified_norm,
    contents,
    enumerate_tableaux,
    lie_derivative_diag,
    su2_character,
    tensor_decompose_su2,
    tensor_with_fundamental,
    torus_action,
    weights_up_to,
)


# ---------------------------------------------------------------- oracles

def brute_tableaux(n, lam):
    """Every filling of the shape checked for semistandardness."""
    cells = [(r, c) for r, length in enumerate(lam) for c in range(length)]
    found = []
    for vals in itertools.product(range(1, n + 1), repeat=len(cells)):
        grid = dict(zip(cells, vals))
        ok = all(grid[(r, c)] <= grid[(r, c + 1)] for (r, c) in cells if (r, c + 1) in grid)
        ok = ok and all(grid[(r, c)] < grid[(r + 1, c)] for (r, c) in cells if (r + 1, c) in grid)
        if ok:
            found.append(tuple(tuple(grid[(r, c)] for c in range(lam[r])) for r in range(len(lam)) if lam[r]))
    return found


def hook_content_dim(n, lam):
    num = den = 1
    for r, length in enumerate(lam):
        for c in range(length):
            num *= n + c - r
            arm = length - c - 1
            leg = sum(1 for rr in range(r + 1, len(lam)) if lam[rr] > c)
            den *= arm + leg + 1
    return num // den


def random_diagonal(rng, n):
    x = np.exp(rng.normal(size=n) + 1j * rng.uniform(0, 2 * np.pi, size=n))
    x[-1] = 1 / np.prod(x[:-1])
    return x


# ---------------------------------------------------------------- examples

def test_single_box_su2():
    tabs = enumerate_tableaux(HighestWeight(2, (1,)))
    assert [t.content for t in tabs] == [(1, 0), (0, 1)]


@pytest.mark.parametrize("a1", range(8))
def test_su2_count(a1):
    assert len(enumerate_tableaux(HighestWeight(2, (a1,)))) == a1 + 1


def test_two_box_column_su3():
    tabs = enumerate_tableaux(HighestWeight.from_lambda((1, 1, 0)))
    assert [t.rows for t in tabs] == [((1,), (2,)), ((1,), (3,)), ((2,), (3,))]


def test_tableau_order_is_lexicographic():
    w = HighestWeight(3, (1, 1))
    rows = [t.rows for t in enumerate_tableaux(w)]
    assert rows == sorted(rows)
    assert all(t.is_semistandard() for t in enumerate_tableaux(w))


@pytest.mark.parametrize("n,lam", [(3, (2, 1, 0)), (3, (3, 1, 0)), (4, (2, 1, 1, 0)), (4, (2, 2, 0, 0)), (3, (2, 2, 0))])
def test_enumeration_matches_brute_force(n, lam):
    w = HighestWeight.from_lambda(lam)
    got = sorted(t.rows for t in enumerate_tableaux(w))
    assert got == sorted(brute_tableaux(n, lam))
    assert w.dim == hook_content_dim(n, lam) == len(got)


def test_size_guard():
    with pytest.raises(InstanceTooLarge):
        enumerate_tableaux(HighestWeight(4, (3, 3, 3)), cap=100)


def test_torus_action_examples():
    x = 1.7 + 0.2j
    np.testing.assert_allclose(torus_action(HighestWeight(2, (1,)), [x, 1 / x]), [x, 1 / x], rtol=1e-15)
    np.testing.assert_allclose(torus_action(HighestWeight(2, (2,)), [x, 1 / x]), [x**2, 1, x**-2], rtol=1e-14)
    np.testing.assert_allclose(torus_action(HighestWeight(3, (1, 0)), [2, 1, 0.5]), [2, 1, 0.5])


def test_lie_derivative_examples():
    np.testing.assert_allclose(lie_derivative_diag(HighestWeight(2, (1,)), 1), [1j, -1j])
    np.testing.assert_allclose(lie_derivative_diag(HighestWeight(2, (2,)), 1), [2j, 0, -2j])


@pytest.mark.parametrize("rho,nbar", [(1.0, 3), (1.5, 4), (2.0, 5), (3.0, 1)])
def test_su2_norm_is_power(rho, nbar):
    w = HighestWeight(2, (nbar,))
    assert complexified_norm(w, [rho, 1 / rho]) == pytest.approx(rho**nbar, rel=1e-12)
    assert complexified_norm(w, [rho, 1 / rho], "brute") == pytest.approx(rho**nbar, rel=1e-12)


def test_su3_norm_example():
    w = HighestWeight(3, (1, 1))
    assert complexified_norm(w, [2, 1, 0.5], "brute") == pytest.approx(4.0, rel=1e-15)
    assert complexified_norm(w, [2, 1, 0.5], "closed") == pytest.approx(4.0, rel=1e-15)


def test_unitary_norm_is_one():
    phases = np.exp(1j * np.array([0.3, 1.1, -1.4]))
    for w in weights_up_to(3, 4):
        assert complexified_norm(w, phases) == pytest.approx(1.0, abs=1e-13)


def test_closed_norm_sorts_moduli():
    w = HighestWeight(3, (2, 1))
    assert complexified_norm(w, [0.5, 2, 1]) == pytest.approx(complexified_norm(w, [2, 1, 0.5]), rel=1e-14)


def test_pieri_examples():
    assert Counter(tensor_with_fundamental((3,), 1)) == Counter({(2,): 1, (4,): 1})
    assert Counter(tensor_with_fundamental((1, 0), 1)) == Counter({(2, 0): 1, (0, 1): 1})
    assert tensor_with_fundamental((0,), 1) == [(1,)]


def test_cg_examples():
    assert sorted(tensor_decompose_su2(1, 1)) == [0, 2]
    assert tensor_decompose_su2(3, 0) == [3]
    assert sorted(tensor_decompose_su2(2, 2)) == [0, 2, 4]


def test_cg_matches_range_formula():
    for a in range(9):
        for b in range(9):
            assert sorted(tensor_decompose_su2(a, b)) == list(range(abs(a - b), a + b + 1, 2))


def test_branching_examples():
    assert Counter(branch_to_sun1(HighestWeight.from_lambda((2, 1, 0)))) == Counter(
        {HighestWeight(2, (2,)): 1, HighestWeight(2, (1,)): 2, HighestWeight(2, (0,)): 1}
    )
    assert Counter(branch_to_sun1(HighestWeight.from_lambda((1, 0, 0)))) == Counter(
        {HighestWeight(2, (1,)): 1, HighestWeight(2, (0,)): 1}
    )
    assert branch_to_sun1(HighestWeight.trivial(3)) == [HighestWeight.trivial(2)]


def test_character_examples():
    assert su2_character(1, 2) == pytest.approx(2.5)
    assert su2_character(0, 0.3 + 4j) == 1
    assert su2_character(2, 1) == pytest.approx(3)


def test_lambda_round_trip():
    for w in weights_up_to(4, 3):
        assert HighestWeight.from_lambda(w.lam) == w


def test_sl_diagonal_rejects_bad_determinant():
    with pytest.raises(ValueError):
        ComplexDiagonal.sl([2, 2])
    assert ComplexDiagonal.sl([2, 0.5]).n == 2


# ------------------------------------------------------------- invariants

@pytest.mark.parametrize("a", range(0, 51, 7))
def test_su2_dimension_law(a):
    assert len(enumerate_tableaux(HighestWeight(2, (a,)))) == a + 1


@pytest.mark.parametrize("n", [2, 3, 4])
def test_norm_agreement(n):
    rng = np.random.default_rng(100 + n)
    ds = [random_diagonal(rng, n) for _ in range(20)]
    for w in weights_up_to(n, 6):
        for x in ds:
            brute = complexified_norm(w, x, "brute")
            closed = complexified_norm(w, x, "closed")
            assert abs(brute - closed) <= 1e-12 * closed


@pytest.mark.parametrize("n", [2, 3, 4])
def test_pieri_dimension_conservation(n):
    for w in weights_up_to(n, 5):
        for k in range(1, n):
            total = sum(HighestWeight(n, b).dim for b in tensor_with_fundamental(w.a, k))
            assert total == w.dim * HighestWeight.fundamental(n, k).dim


def test_cg_dimension_conservation():
    for a in range(13):
        for b in range(13):
            assert sum(c + 1 for c in tensor_decompose_su2(a, b)) == (a + 1) * (b + 1)


@pytest.mark.parametrize("n", [3, 4])
def test_branching_dimension_conservation(n):
    for w in weights_up_to(n, 4):
        assert sum(m.dim for m in branch_to_sun1(w)) == w.dim


@settings(max_examples=50, deadline=None)
@given(
    a=st.integers(0, 10),
    b=st.integers(0, 10),
    modulus=st.floats(0.5, 2.0),
    phase=st.floats(0, 2 * math.pi),
)
def test_character_multiplicativity(a, b, modulus, phase):
    x = modulus * complex(math.cos(phase), math.sin(phase))
    lhs = su2_character(a, x) * su2_character(b, x)
    rhs = sum(su2_character(c, x) for c in tensor_decompose_su2(a, b))
    assert abs(lhs - rhs) <= 1e-9 * max(1.0, abs(lhs))


@settings(max_examples=40, deadline=None)
@given(
    n=st.integers(2, 4),
    data=st.data(),
    logs=st.lists(st.floats(-2, 2), min_size=3, max_size=3),
)
def test_norm_submultiplicative_under_pieri(n, data, logs):
    a = tuple(data.draw(st.lists(st.integers(0, 3), min_size=n - 1, max_size=n - 1)))
    k = data.draw(st.integers(1, n - 1))
    x = np.exp(np.array(logs[: n - 1] + [-sum(logs[: n - 1])]))
    na = complexified_norm(HighestWeight(n, a), x)
    nk = complexified_norm(HighestWeight.fundamental(n, k), x)
    for b in tensor_with_fundamental(a, k):
        assert complexified_norm(HighestWeight(n, b), x) <= na * nk * (1 + 1e-12)


@settings(max_examples=30, deadline=None)
@given(n=st.integers(2, 4), data=st.data())
def test_contents_sum_to_boxes(n, data):
    a = tuple(data.draw(st.lists(st.integers(0, 2), min_size=n - 1, max_size=n - 1)))
    w = HighestWeight(n, a)
    c = contents(w)
    assert c.shape == (w.dim, n)
    assert np.all(c.sum(axis=1) == w.boxes)
