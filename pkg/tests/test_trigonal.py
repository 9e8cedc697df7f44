import itertools
import math

import numpy as np
import pytest

from superlevel.branch import MultiplicityVector, compose, identity_perm, transposition
from superlevel.symplectic import FpMatrix, SymplecticForm, TooLarge, enumerate_sp, is_symplectic, left_coset_count
from superlevel.trigonal import (UnknownGenerator, aut_group, block_swap, brute_force_indexing_set,
                                 census_rows, census_sum, component_count_formula, perm_closure,
                                 psi_generator_image, psi_image, psi_kernel, psi_subgroup,
                                 trigonal_indexing_set)
from superlevel.symplectic import sp_group_order

TABLE_1 = {
    1: [(3, 0)], 2: [(2, 2)], 3: [(4, 1)], 4: [(6, 0), (3, 3)], 5: [(5, 2)], 6: [(7, 1), (4, 4)],
    7: [(9, 0), (6, 3)], 8: [(8, 2), (5, 5)], 9: [(10, 1), (7, 4)], 10: [(12, 0), (9, 3), (6, 6)],
    11: [(11, 2), (8, 5)], 12: [(13, 1), (10, 4), (7, 7)],
}
BOLD = {(2, 2), (3, 3), (4, 4), (5, 5), (6, 6), (7, 7)}


def mv(a, b):
    return MultiplicityVector((a, b), 3)


@pytest.mark.parametrize("g", sorted(TABLE_1))
def test_table_1(g):
    vecs = trigonal_indexing_set(g).vectors
    assert [v.counts for v in vecs] == TABLE_1[g]
    assert {v.counts for v in vecs if v[0] == v[1]} == {v for v in TABLE_1[g] if v in BOLD}


def test_closed_form_matches_brute_force():
    for g in range(1, 60):
        assert trigonal_indexing_set(g).vectors == brute_force_indexing_set(g)


@pytest.mark.parametrize("v, order", [((3, 0), 6), ((2, 2), 8), ((5, 2), 240), ((3, 3), 72), ((4, 1), 24)])
def test_aut_group_order(v, order):
    aut = aut_group(mv(*v))
    assert aut.order == order
    assert len(perm_closure(aut.generators, sum(v))) == order


def test_aut_group_orders_generated():
    for g in range(1, 7):
        for v in trigonal_indexing_set(g).vectors:
            aut = aut_group(v)
            assert len(perm_closure(aut.generators, v.m)) == aut.order


# -- Psi against the displayed generator formulas -------------------------

def d_last(v):
    """D_{m-1} on D_1..D_{m-2}, from the horizontal relation written out by cases."""
    a, b = v.counts
    m = a + b
    if b <= 1:
        return np.array([2] * (m - 2))
    return np.array([1] * a + [2] * (m - 2 - a))


def unit(j, g):
    e = np.zeros(g, dtype=np.int64)
    e[j - 1] = 1
    return e


def displayed_image(v, sigma):
    """Images of D_1..D_g under a generator, following the case-by-case rules."""
    a, b = v.counts
    m = a + b
    g = m - 2
    D = lambda j: d_last(v) if j == m - 1 else (np.zeros(g, dtype=np.int64) if j == m else unit(j, g))
    cols = []
    if a == b and tuple(sigma) == block_swap(v):
        h = m // 2
        for j in range(1, g + 1):
            if j < h:
                cols.append(D(j + h) + 2 * D(h))
            elif j == h:
                cols.append(2 * D(h))
            else:
                cols.append(D(j - h) + 2 * D(h))
    else:
        i = next(k for k in range(m) if sigma[k] != k) + 1
        if i + 1 <= m - 2:
            for j in range(1, g + 1):
                cols.append(D({i: i + 1, i + 1: i}.get(j, j)))
        elif i == m - 2:
            for j in range(1, g + 1):
                cols.append(D(m - 1) if j == g else D(j))
        else:
            assert i == m - 1
            for j in range(1, g + 1):
                cols.append(D(j) + 2 * D(m - 1))
    return np.array(cols).T % 3


@pytest.mark.parametrize("v", [(3, 0), (2, 2), (4, 1), (6, 0), (3, 3), (5, 2), (7, 1), (4, 4), (9, 0), (6, 3), (5, 5)])
def test_generators_match_displayed_rules(v):
    v = mv(*v)
    form = SymplecticForm(v.m - 2, 3)
    for s in aut_group(v).generators:
        img = psi_generator_image(v, s)
        assert (img.delta_block.a == displayed_image(v, s)).all(), s
        assert is_symplectic(img.full_matrix, form)
        assert img.delta_block.det() != 0


def test_row_swap_generator():
    img = psi_generator_image(mv(6, 0), transposition(6, 1, 2))
    assert (img.delta_block.a == np.eye(4, dtype=np.int64)[[1, 0, 2, 3]]).all()


def test_case_ii_m2_zero():
    # (m-2, m-1) = (4, 5): D_4 -> D_5 = 2(D_1 + ... + D_4)
    A = psi_generator_image(mv(6, 0), transposition(6, 4, 5)).delta_block.a
    assert A[:, 3].tolist() == [2, 2, 2, 2]
    assert (A[:, :3] == np.eye(4, dtype=np.int64)[:, :3]).all()


def test_case_iii_m2_zero():
    # (m-1, m) = (5, 6): D_j -> D_j + 2 D_5 = D_j + (D_1 + ... + D_4)
    A = psi_generator_image(mv(6, 0), transposition(6, 5, 6)).delta_block.a
    assert (A == (np.eye(4, dtype=np.int64) + 1) % 3).all()


def test_unknown_generator():
    with pytest.raises(UnknownGenerator):
        psi_generator_image(mv(4, 1), transposition(5, 4, 5))
    with pytest.raises(UnknownGenerator):
        psi_generator_image(mv(6, 0), transposition(6, 1, 3))
    with pytest.raises(UnknownGenerator):
        psi_image(mv(4, 1), transposition(5, 4, 5))


def words(gens, n, max_len):
    for L in range(max_len + 1):
        for w in itertools.product(gens, repeat=L):
            out = identity_perm(n)
            for s in w:
                out = compose(out, s)
            yield L, out


@pytest.mark.parametrize("g", range(1, 7))
def test_psi_homomorphism_on_words(g):
    for v in trigonal_indexing_set(g).vectors:
        gens = aut_group(v).generators
        ws = list(words(gens, v.m, 4))
        cache = {}

        def img(s):
            if s not in cache:
                cache[s] = psi_image(v, s).full_matrix
            return cache[s]

        for (la, s), (lb, t) in itertools.product(ws, ws):
            if la + lb <= 4:
                assert img(compose(s, t)) == img(s) @ img(t)


@pytest.mark.parametrize("v", [(2, 2), (4, 1), (6, 0), (3, 3), (5, 2), (7, 1), (4, 4)])
def test_psi_injective(v):
    v = mv(*v)
    S = psi_subgroup(v)
    assert len(S) == aut_group(v).order
    form = SymplecticForm(v.m - 2, 3)
    assert all(is_symplectic(M, form) for M in S)
    assert psi_kernel(v) == {identity_perm(v.m)}


def test_psi_subgroup_too_large():
    with pytest.raises(TooLarge):
        psi_subgroup(mv(9, 0))


def test_genus_one_image_has_order_two():
    # the Lagrangian is a line: each transposition acts by -1
    v = mv(3, 0)
    S = psi_subgroup(v)
    assert S == {FpMatrix.identity(2, 3), FpMatrix([[2, 0], [0, 2]], 3)}
    assert len(psi_kernel(v)) == 3
    assert left_coset_count(S, enumerate_sp(1, 3)) == 12


def test_no_order_six_image_of_s3_in_sp2_f3():
    """Sp(2, F_3) has a single involution, so S_3 has no faithful image in it."""
    G = enumerate_sp(1, 3)
    I = FpMatrix.identity(2, 3)
    involutions = [M for M in G if M != I and M @ M == I]
    assert involutions == [FpMatrix([[2, 0], [0, 2]], 3)]


# -- counting ----------------------------------------------------------------

@pytest.mark.parametrize("g, count", [(1, 4), (2, 6480)])
def test_formula_small(g, count):
    assert component_count_formula(g) == count
    assert census_sum(g) == count


def test_formula_genus_four():
    sp = sp_group_order(4, 3)
    assert component_count_formula(4) == sp // 720 + sp // 72 == census_sum(4)


def test_census_genus_seven():
    sp = sp_group_order(7, 3)
    expected = sp // math.factorial(9) + sp // (math.factorial(6) * math.factorial(3))
    assert census_sum(7) == expected


def test_formula_census_identity():
    for g in range(1, 41):
        assert component_count_formula(g) == census_sum(g) > 0


def test_census_rows_schema():
    rows = census_rows(4)
    assert [r.to_dict()["m_vector"] for r in rows] == [[6, 0], [3, 3]]
    assert set(rows[0].to_dict()) == {"g", "m_vector", "aut_order", "sp_order", "components"}
