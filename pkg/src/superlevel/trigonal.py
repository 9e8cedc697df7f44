"""
Level-3 structure on trigonal superelliptic curves (p = 3).

For a multiplicity vector (m_1, m_2) the m = g + 2 branch points are
labelled in blocks: Q_1..Q_{m_1} carry exponent 1, the rest exponent 2.
Q_m is the base point, D_j = [Q_j - Q_m], and D_1..D_g is the basis of the
Lagrangian subspace.  A relabelling sigma acts by

    D_j  ->  [Q_sigma(j) - Q_sigma(m)] = D_sigma(j) - D_sigma(m),

which covers block transpositions as well as the block swap in the
stabilizer.  The action is extended to Sp(2g, F_3) as diag(A, A^-T).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .branch import (MultiplicityVector, compose, identity_perm, invert,
                     normalize_multiplicity_vector, stabilizer, transposition)
from .divisors import normal_form
from .symplectic import (FpMatrix, SymplecticForm, TooLarge, block_diag,
                         is_symplectic, mulclose, sp_group_order)

P = 3
SUBGROUP_BOUND = 10**5


class UnknownGenerator(ValueError):
    pass


class NonIntegral(ArithmeticError):
    pass


def trigonal_vector(m1: int, m2: int) -> MultiplicityVector:
    return MultiplicityVector((m1, m2), P)


@dataclass(frozen=True)
class TrigonalIndex:
    g: int
    vectors: tuple

    @property
    def m(self) -> int:
        return self.g + 2


def closed_form_split(m: int) -> tuple[int, int]:
    """The (n, r) with m = 3n - r and 0 <= r <= 2."""
    n = -(-m // 3)
    return n, 3 * n - m


def trigonal_indexing_set(g: int) -> TrigonalIndex:
    """
    All (m - 3i - r, 3i + r) with m = g + 2 = 3n - r and 0 <= i <= (m - 2r)/6.
    """
    if g < 1:
        raise ValueError("g must be positive")
    m = g + 2
    _, r = closed_form_split(m)
    vectors = []
    i = 0
    while 6 * i <= m - 2 * r:
        vectors.append(trigonal_vector(m - 3 * i - r, 3 * i + r))
        i += 1
    return TrigonalIndex(g, tuple(vectors))


def brute_force_indexing_set(g: int) -> tuple:
    """Scan all splittings of m = g + 2 and keep the normalized ones."""
    m = g + 2
    out = set()
    for m1 in range(m + 1):
        raw = (m1, m - m1)
        if (raw[0] + 2 * raw[1]) % 3 == 0:
            out.add(normalize_multiplicity_vector(raw, 3))
    return tuple(sorted(out, key=lambda v: v.counts, reverse=True))


def has_block_swap(mv: MultiplicityVector) -> bool:
    return len(stabilizer(mv)) > 1


# -- the group A_m -----------------------------------------------------------

@dataclass(frozen=True)
class AutGroup:
    m_vector: MultiplicityVector
    order: int
    generators: tuple


def block_swap(mv: MultiplicityVector) -> tuple:
    """The permutation Q_k <-> Q_{k + m/2} realizing zeta = 2 when m_1 = m_2."""
    a, b = mv.counts
    if a != b:
        raise UnknownGenerator("%s has trivial stabilizer" % (mv.counts,))
    return tuple((i + a) % (2 * a) for i in range(2 * a))


def aut_group(mv: MultiplicityVector) -> AutGroup:
    a, b = mv.counts
    m = a + b
    gens = [transposition(m, i, i + 1) for i in range(1, a)]
    gens += [transposition(m, i, i + 1) for i in range(a + 1, m)]
    if a == b:
        gens.append(block_swap(mv))
        order = 2 * math.factorial(a) ** 2
    else:
        order = math.factorial(a) * math.factorial(b)
    return AutGroup(mv, order, tuple(gens))


def perm_closure(gens, n: int) -> frozenset:
    found = {identity_perm(n)}
    frontier = list(found)
    while frontier:
        nxt = []
        for s in frontier:
            for t in gens:
                u = compose(s, t)
                if u not in found:
                    found.add(u)
                    nxt.append(u)
        frontier = nxt
    return frozenset(found)


def preserves_exponent_classes(mv: MultiplicityVector, sigma) -> bool:
    """sigma maps every block into a single block (it lies in A_m)."""
    ks = mv.exponents()
    ratio = {}
    for i, s in enumerate(sigma):
        # k_sigma(i) = zeta * k_i with one zeta for all i
        z = (ks[s] * pow(ks[i], -1, P)) % P
        ratio[z] = True
    return len(ratio) == 1


# -- Psi ---------------------------------------------------------------------

@dataclass(frozen=True)
class PsiImage:
    delta_block: FpMatrix
    full_matrix: FpMatrix


def delta_action(mv: MultiplicityVector, sigma) -> FpMatrix:
    """Matrix of D_j -> D_sigma(j) - D_sigma(m) on D_1..D_g (columns are images)."""
    m = mv.m
    g = m - 2
    ks = mv.exponents()[: m - 1]
    base = sigma[m - 1]
    cols = []
    for j in range(g):
        raw = [0] * (m - 1)
        if sigma[j] != m - 1:
            raw[sigma[j]] += 1
        if base != m - 1:
            raw[base] -= 1
        cols.append(normal_form(raw, ks, P).basis_coords())
    return FpMatrix(np.array(cols, dtype=np.int64).T, P)


def psi_image(mv: MultiplicityVector, sigma) -> PsiImage:
    """Psi(sigma) for any sigma in A_m."""
    sigma = tuple(sigma)
    if len(sigma) != mv.m or not preserves_exponent_classes(mv, sigma):
        raise UnknownGenerator("%s does not lie in A_m for %s" % (sigma, mv.counts))
    A = delta_action(mv, sigma)
    full = block_diag(A, A.T.inverse())
    assert is_symplectic(full, SymplecticForm(mv.m - 2, P))
    return PsiImage(A, full)


def psi_generator_image(mv: MultiplicityVector, generator) -> PsiImage:
    if tuple(generator) not in aut_group(mv).generators:
        raise UnknownGenerator("%s is not a generator of A_m for %s" % (tuple(generator), mv.counts))
    return psi_image(mv, generator)


def psi_subgroup(mv: MultiplicityVector) -> frozenset:
    """Closure of the generator images inside Sp(2g, F_3)."""
    aut = aut_group(mv)
    if aut.order > SUBGROUP_BOUND:
        raise TooLarge("|A_m| = %d exceeds %d" % (aut.order, SUBGROUP_BOUND))
    g = mv.m - 2
    gens = [psi_image(mv, s).full_matrix for s in aut.generators]
    if not gens:
        return frozenset([FpMatrix.identity(2 * g, P)])
    return mulclose(gens, bound=aut.order)


def psi_kernel(mv: MultiplicityVector) -> frozenset:
    """Elements of A_m acting trivially on the Lagrangian (small A_m only)."""
    aut = aut_group(mv)
    if aut.order > SUBGROUP_BOUND:
        raise TooLarge("|A_m| = %d exceeds %d" % (aut.order, SUBGROUP_BOUND))
    elems = perm_closure(aut.generators, mv.m)
    return frozenset(s for s in elems if delta_action(mv, s).is_identity())


# -- counting ----------------------------------------------------------------

@dataclass(frozen=True)
class CensusRow:
    g: int
    m_vector: tuple
    aut_order: int
    sp_order: int
    components: int

    def to_dict(self) -> dict:
        return {"g": self.g, "m_vector": list(self.m_vector), "aut_order": self.aut_order,
                "sp_order": self.sp_order, "components": self.components}


def census_rows(g: int) -> list:
    sp = sp_group_order(g, P)
    rows = []
    for mv in trigonal_indexing_set(g).vectors:
        aut = aut_group(mv).order
        q, r = divmod(sp, aut)
        if r:
            raise NonIntegral("|A_m| = %d does not divide |Sp(%d, F_3)|" % (aut, 2 * g))
        rows.append(CensusRow(g, mv.counts, aut, sp, q))
    return rows


def census_sum(g: int) -> int:
    return sum(row.components for row in census_rows(g))


def component_count_formula(g: int) -> int:
    """
    |Sp(2g, F_3)| * (sum_{0 <= i < ceil((g+2-2k)/6)} 1/((3i+k)! (g+2-3i-k)!)
                      + [g even] / (2 ((g/2+1)!)^2)),
    with g + 2 = 3n - k, 0 <= k <= 2.
    """
    if g < 1:
        raise ValueError("g must be positive")
    m = g + 2
    _, k = closed_form_split(m)
    upper = -(-(m - 2 * k) // 6)
    total = Fraction(0)
    for i in range(upper):
        total += Fraction(1, math.factorial(3 * i + k) * math.factorial(m - 3 * i - k))
    if g % 2 == 0:
        total += Fraction(1, 2 * math.factorial(g // 2 + 1) ** 2)
    count = sp_group_order(g, P) * total
    if count.denominator != 1:
        raise NonIntegral("formula gives non-integer %s for g=%d" % (count, g))
    return count.numerator
