from math import factorial

import pytest
from hypothesis import given, strategies as st

from starkit.errors import DomainError
from starkit.formulas import (
    an_formula,
    eq1_1,
    eq1_2,
    eq3_5,
    formula,
    kappa_nkstar_formula,
    lambda_nkstar_formula,
    star_formula,
)
from starkit.topology import FamilyParams


def K(n, k, h):
    return kappa_nkstar_formula(FamilyParams(n, k, h))


def L(n, k, h):
    return lambda_nkstar_formula(FamilyParams(n, k, h))


def test_kappa_examples():
    assert (K(4, 2, 2).value, K(4, 2, 2).branch) == (3, "eq3_5")
    assert (K(4, 2, 1).value, K(4, 2, 1).branch) == (3, "eq1_1")
    assert K(5, 3, 2).value == 6 == eq1_1(5, 3, 2) == eq3_5(5, 3, 2)


def test_lambda_examples():
    assert (L(5, 3, 1).value, L(5, 3, 1).branch) == (6, "eq1_2_low")
    assert (L(4, 2, 1).value, L(4, 2, 1).branch) == (3, "eq1_2_high")
    assert L(5, 2, 3).value == 4


def test_star_examples():
    assert [star_formula(4, h).value for h in range(3)] == [3, 4, 6]
    assert star_formula(4, 0).branch == "lemma2_1"


def test_an_examples():
    assert an_formula(5, 2) == an_formula(5, 2, "kappa")
    assert an_formula(5, 2).value == 6
    assert an_formula(5, 3).value == 12 == 12 * (5 - 4)
    assert an_formula(4, 2).value == 3
    assert an_formula(5, 3).branch == "cor3_5"
    # low h goes through the (n,k)-star formulas with k = n - 2
    assert an_formula(5, 1, "lambda") == L(5, 3, 1)
    assert an_formula(5, 0) == K(5, 3, 0)


@pytest.mark.parametrize(
    "call",
    [
        lambda: K(4, 1, 0),
        lambda: K(4, 4, 0),
        lambda: K(4, 2, 3),
        lambda: K(4, 2, -2),
        lambda: L(21, 2, 1),
        lambda: star_formula(4, 3),
        lambda: an_formula(3, 1),
        lambda: an_formula(5, 4),
        lambda: formula("hypercube", 4, 1),
        lambda: formula("nkstar", 4, 1),
        lambda: formula("star", 4, 1, measure="other"),
    ],
)
def test_domain_errors(call):
    with pytest.raises(DomainError):
        call()


@pytest.mark.parametrize("n", range(3, 13))
def test_branch_consistency_at_overlap(n):
    for k in range(2, n):
        h = n - k
        want = (n - k + 1) * (k - 1)
        assert eq1_1(n, k, h) == eq1_2(n, k, h)[0] == eq3_5(n, k, h) == want
        assert K(n, k, h).value == L(n, k, h).value == want


@pytest.mark.parametrize("n", range(3, 13))
def test_star_specialization(n):
    for h in range(1, n - 1):
        assert K(n, n - 1, h).value == star_formula(n, h).value == factorial(h + 1) * (n - h - 1)


@pytest.mark.parametrize("n", range(4, 13))
def test_an_specialization(n):
    for h in range(2, n - 1):
        assert K(n, n - 2, h).value == an_formula(n, h).value


@given(st.integers(3, 20).flatmap(lambda n: st.tuples(st.just(n), st.integers(2, n - 1))).flatmap(
    lambda nk: st.tuples(st.just(nk[0]), st.just(nk[1]), st.integers(0, nk[0] - 2))))
def test_piecewise_properties(nkh):
    n, k, h = nkh
    kv, lv = K(n, k, h), L(n, k, h)
    assert kv.value >= 0 and lv.value >= 0
    if h > n - k:
        assert kv.branch == lv.branch == "eq3_5"
        # exact division
        assert kv.value * factorial(n - k) == factorial(h + 1) * (n - h - 1)
    elif h < n - k:
        assert kv.branch == "eq1_1"
        assert lv.branch in ("eq1_2_low", "eq1_2_high")
        low = h <= k - 2 and 2 * h <= n - 2
        assert (lv.branch == "eq1_2_low") == low


def test_fraction_condition_exact():
    # n = 7: n/2 - 1 = 2.5 admits h = 2 but not h = 3
    assert eq1_2(7, 6, 2)[1] == "eq1_2_low"
    assert eq1_2(7, 6, 3)[1] == "eq1_2_high"
    # n = 8: h = 3 equals n/2 - 1 and is admitted
    assert eq1_2(8, 6, 3)[1] == "eq1_2_low"
    assert L(9, 5, 3).branch == "eq1_2_low"


def test_dispatch_and_str():
    assert str(formula("nkstar", 4, 2, 2, "kappa")) == "3 (eq3_5)"
    assert str(formula("star", 4, 2)) == "6 (lemma2_1)"
    assert str(formula("an", 5, 3)) == "12 (cor3_5)"
