"""
Level-2 structure on hyperelliptic curves.

Points Q_1..Q_{2g+1} are finite, point 2g+2 is Q_inf.  Coordinates are on
D_1..D_{2g}, with D_{2g+1} = D_1 + ... + D_{2g}.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .branch import is_permutation
from .divisors import DivisorClass, gram_matrix, normal_form
from .symplectic import FpMatrix, SymplecticForm, is_symplectic, sp_group_order


class DomainWarning(UserWarning):
    """Genus 1 is outside the hyperelliptic range (g > 1); the map is not injective there."""


class NonIntegral(ArithmeticError):
    pass


def _exponents(g):
    return (1,) * (2 * g + 1)


@dataclass(frozen=True)
class HyperellipticBasis:
    g: int
    A: tuple  # DivisorClass
    B: tuple

    def classes(self) -> list:
        return list(self.A) + list(self.B)

    def matrix(self) -> np.ndarray:
        """Columns are A_1..A_g, B_1..B_g in D_1..D_{2g} coordinates."""
        return np.array([c.basis_coords() for c in self.classes()], dtype=np.int64).T

    @property
    def A_vectors(self):
        return [c.basis_coords() for c in self.A]

    @property
    def B_vectors(self):
        return [c.basis_coords() for c in self.B]


def build_basis(g: int) -> HyperellipticBasis:
    """A_i = D_{2i-1} + D_{2i}, B_i = D_{2i} + ... + D_{2g+1}."""
    if g < 1:
        raise ValueError("g must be positive")
    ks = _exponents(g)
    size = 2 * g + 1
    A, B = [], []
    for i in range(1, g + 1):
        raw = [0] * size
        raw[2 * i - 2] = raw[2 * i - 1] = 1
        A.append(normal_form(raw, ks, 2))
        raw = [0] * size
        for j in range(2 * i, size + 1):
            raw[j - 1] = 1
        B.append(normal_form(raw, ks, 2))
    return HyperellipticBasis(g, tuple(A), tuple(B))


def basis_gram(g: int) -> np.ndarray:
    return gram_matrix(build_basis(g).classes())


def _action_on_delta(g: int, sigma) -> np.ndarray:
    """Matrix (in D-coordinates) of D_i -> D_{sigma(i)} + D_{sigma(inf)}."""
    n = 2 * g + 2
    ks = _exponents(g)
    inf = n - 1
    cols = []
    for i in range(2 * g):
        raw = [0] * (n - 1)
        for target in (sigma[i], sigma[inf]):
            if target != inf:
                raw[target] += 1
        cols.append(normal_form(raw, ks, 2).basis_coords())
    return np.array(cols, dtype=np.int64).T % 2


_BASIS_CACHE: dict = {}


def _basis_change(g):
    if g not in _BASIS_CACHE:
        P = FpMatrix(build_basis(g).matrix(), 2)
        _BASIS_CACHE[g] = (P, P.inverse())
    return _BASIS_CACHE[g]


def embed_symmetric_group(g: int, sigma) -> FpMatrix:
    """
    Image of a permutation of the 2g+2 branch points in Sp(2g, F_2), written
    in the (A, B) basis.  ``sigma`` is a 0-based image tuple; index 2g+1 is Q_inf.
    """
    sigma = tuple(sigma)
    if len(sigma) != 2 * g + 2 or not is_permutation(sigma):
        raise ValueError("need a permutation of %d points" % (2 * g + 2))
    if g < 2:
        warnings.warn("hyperelliptic curves need genus g > 1; S_4 -> Sp(2, F_2) is not injective",
                      DomainWarning, stacklevel=2)
    P, Pinv = _basis_change(g)
    T = FpMatrix(_action_on_delta(g, sigma), 2)
    M = Pinv @ T @ P
    assert is_symplectic(M, SymplecticForm(g, 2))
    return M


def hyp_component_count(g: int) -> int:
    """|Sp(2g, F_2)| / (2g+2)!"""
    if g < 2:
        raise ValueError("hyperelliptic curves need genus g > 1, got %d" % g)
    sp = sp_group_order(g, 2)
    q, r = divmod(sp, math.factorial(2 * g + 2))
    if r:
        raise NonIntegral("|Sp(%d, F_2)| is not divisible by %d!" % (2 * g, 2 * g + 2))
    return q
