import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from superlevel.branch import BranchConfiguration, make_configuration, random_kappa_one_configuration
from superlevel.divisors import (ConfigMismatch, EqualIndices, NonInvertibleLeading, NotNormalized,
                                 delta_rank, normal_form, pairing_exponent, rational_eval_poly,
                                 shifted_poly, unit_class, weil_ratio_ramified)

t = sympy.Symbol("t")


def test_normal_form_inverse_leading():
    # k_5 = 2: D_5 = -(2^-1)(D_1+..+D_4) = D_1+..+D_4 mod 3
    assert normal_form([0, 0, 0, 0, 1], [1, 1, 1, 1, 2], 3).coeffs == (1, 1, 1, 1, 0)


def test_normal_form_all_ones():
    # D_{m-1} = 2 (D_1 + ... + D_{m-2})
    assert normal_form([0, 0, 0, 0, 1], [1] * 5, 3).coeffs == (2, 2, 2, 2, 0)


def test_normal_form_zero():
    assert normal_form([0] * 5, [1] * 5, 3).coeffs == (0,) * 5


def test_normal_form_bad_leading():
    with pytest.raises(NonInvertibleLeading):
        normal_form([1, 0, 0], [1, 2, 3], 3)


def exps_strategy():
    return st.integers(3, 9).flatmap(lambda n: st.tuples(
        st.lists(st.integers(1, 2), min_size=n - 1, max_size=n - 1),
        st.lists(st.integers(0, 2), min_size=n - 1, max_size=n - 1),
        st.lists(st.integers(0, 2), min_size=n - 1, max_size=n - 1)))


@given(exps_strategy())
def test_normal_form_idempotent_and_linear(data):
    ks, x, y = data
    nx, ny = normal_form(x, ks, 3), normal_form(y, ks, 3)
    assert normal_form(nx.coeffs, ks, 3) == nx
    assert normal_form([a + b for a, b in zip(x, y)], ks, 3) == nx + ny
    # the normal form differs from the input by a multiple of the relation
    diff = [(a - b) % 3 for a, b in zip(x, nx.coeffs)]
    c = diff[-1] * pow(ks[-1], -1, 3) % 3
    assert diff == [c * k % 3 for k in ks]


@pytest.mark.parametrize("m, p, rank", [(6, 3, 4), (6, 2, 4), (3, 3, 1)])
def test_delta_rank(m, p, rank):
    assert delta_rank(m, p) == rank


def test_delta_rank_is_genus_for_p3():
    for g in range(1, 30):
        assert delta_rank(g + 2, 3) == g


def test_pairing_examples():
    ks3 = [1] * 5
    assert pairing_exponent(unit_class(1, ks3, 3), unit_class(2, ks3, 3)) == 0
    ks2 = [1] * 5
    assert pairing_exponent(unit_class(1, ks2, 2), unit_class(2, ks2, 2)) == 1
    assert pairing_exponent(unit_class(1, ks2, 2), unit_class(1, ks2, 2)) == 0
    with pytest.raises(ConfigMismatch):
        pairing_exponent(unit_class(1, ks2, 2), unit_class(1, [1] * 3, 2))


def test_pairing_p2_table_on_all_generators():
    # includes D_{m-1}, which is stored via the relation
    ks = [1] * 7
    for i in range(1, 8):
        for j in range(1, 8):
            e = pairing_exponent(unit_class(i, ks, 2), unit_class(j, ks, 2))
            assert e == (0 if i == j else 1)


@given(st.lists(st.integers(0, 1), min_size=5, max_size=5), st.lists(st.integers(0, 1), min_size=5, max_size=5),
       st.lists(st.integers(0, 1), min_size=5, max_size=5))
def test_pairing_p2_bilinear_symmetric(x, y, z):
    ks = [1] * 5
    X, Y, Z = (normal_form(v, ks, 2) for v in (x, y, z))
    assert pairing_exponent(X, Y) == pairing_exponent(Y, X)
    assert pairing_exponent(X, X) == 0
    assert pairing_exponent(X + Y, Z) == (pairing_exponent(X, Z) + pairing_exponent(Y, Z)) % 2


def root_product_oracle(config, i):
    """prod_alpha (b_alpha - a_i)^lambda as a resultant, computed by sympy."""
    p = config.p
    f = sympy.prod([(t - sympy.Rational(a.numerator, a.denominator)) ** k
                    for a, k in zip(config.points, config.exponents)])
    n = (sum(config.exponents) + 1) // p
    G = sympy.Poly(sympy.expand(f - t ** (p * (n - 1))), t)
    a = config.points[i - 1]
    res = sympy.resultant(G, sympy.Poly(t - sympy.Rational(a.numerator, a.denominator), t))
    return Fraction(int(sympy.fraction(res)[0]), int(sympy.fraction(res)[1]))


def ratio_oracle(config, i, j):
    p = config.p
    n = (sum(config.exponents) + 1) // p
    ai, aj = config.points[i - 1], config.points[j - 1]
    psi = (ai - aj) / (-ai) ** p
    phi = (aj - ai) * root_product_oracle(config, i) / (-ai) ** (p * n)
    return psi / phi


def test_weil_examples():
    c = BranchConfiguration([1, 2, 3, 4, 5], [1] * 5, 1, 3)
    assert weil_ratio_ramified(c, 1, 2) == 1
    assert ratio_oracle(c, 1, 2) == 1
    c = BranchConfiguration([1, 2, 3], [1] * 3, 1, 2)
    assert weil_ratio_ramified(c, 1, 2) == -1
    assert ratio_oracle(c, 1, 2) == -1
    with pytest.raises(EqualIndices):
        weil_ratio_ramified(c, 2, 2)


def test_weil_requires_normalization():
    with pytest.raises(NotNormalized):
        weil_ratio_ramified(make_configuration([1, 2, 3], [1, 1, 1], 3), 1, 2)
    with pytest.raises(NotNormalized):
        weil_ratio_ramified(BranchConfiguration([0, 2, 3], [1] * 3, 1, 2), 1, 2)


@pytest.mark.parametrize("p", [2, 3])
def test_weil_randomized(p):
    rng = random.Random(100 + p)
    for _ in range(100):
        c = random_kappa_one_configuration(rng, p)
        i, j = rng.sample(range(1, len(c.points) + 1), 2)
        assert weil_ratio_ramified(c, i, j) == (-1) ** (p - 1)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_weil_against_resultant_oracle(p):
    rng = random.Random(7 * p)
    for _ in range(15):
        c = random_kappa_one_configuration(rng, p, max_points=6)
        i, j = rng.sample(range(1, len(c.points) + 1), 2)
        assert weil_ratio_ramified(c, i, j) == ratio_oracle(c, i, j) == (-1) ** (p - 1)


def test_shifted_poly_at_branch_points():
    rng = random.Random(3)
    for p in (2, 3, 5):
        for _ in range(20):
            c = random_kappa_one_configuration(rng, p)
            G, n = shifted_poly(c)
            assert G[-1] == 1 and len(G) == p * n
            for a in c.points:
                assert rational_eval_poly(G, a) == -a ** (p * (n - 1))
