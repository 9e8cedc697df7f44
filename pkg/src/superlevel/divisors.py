"""
The subgroup of Jac(C)[p] spanned by ramification classes D_i = [Q_i - Q_inf].

A class is a coefficient vector on D_1..D_{m-1} over F_p.  The horizontal
relation sum k_i D_i = 0 is used to clear the last slot, which leaves
coordinates on the basis D_1..D_{m-2}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .branch import BranchConfiguration
from .exact import check_prime, inv_mod, poly_from_roots, rational_eval_poly


class NonInvertibleLeading(ValueError):
    pass


class ConfigMismatch(ValueError):
    pass


class EqualIndices(ValueError):
    pass


class NotNormalized(ValueError):
    pass


@dataclass(frozen=True)
class DivisorClass:
    coeffs: tuple
    exponents: tuple
    p: int

    @property
    def m(self) -> int:
        return len(self.coeffs) + 1

    def basis_coords(self) -> tuple:
        """Coordinates on D_1..D_{m-2}."""
        return self.coeffs[:-1]

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        _same_config(self, other)
        return normal_form([a + b for a, b in zip(self.coeffs, other.coeffs)], self.exponents, self.p)

    def scale(self, c: int) -> "DivisorClass":
        return normal_form([c * a for a in self.coeffs], self.exponents, self.p)

    def to_json(self) -> list:
        return list(self.coeffs)


def _same_config(x, y):
    if x.p != y.p or x.exponents != y.exponents:
        raise ConfigMismatch("classes live on different configurations")


def relation_for_last(exponents: Sequence[int], p: int) -> np.ndarray:
    """Coefficients c with D_{m-1} = sum_{i<m-1} c_i D_i."""
    check_prime(p)
    ks = np.array(exponents, dtype=np.int64) % p
    lead = int(ks[-1])
    if lead == 0:
        raise NonInvertibleLeading("exponent of D_{m-1} is 0 mod %d" % p)
    return (-inv_mod(lead, p) * ks[:-1]) % p


def normal_form(raw: Sequence[int], exponents: Sequence[int], p: int) -> DivisorClass:
    raw = np.array([int(c) for c in raw], dtype=np.int64) % p
    if len(raw) != len(exponents):
        raise ConfigMismatch("need one coefficient per exponent")
    rel = relation_for_last(exponents, p)
    out = raw.copy()
    out[:-1] = (out[:-1] + out[-1] * rel) % p
    out[-1] = 0
    return DivisorClass(tuple(int(c) for c in out), tuple(int(k) for k in exponents), p)


def unit_class(i: int, exponents, p: int) -> DivisorClass:
    """D_i (1-based) in normal form."""
    raw = [0] * len(exponents)
    raw[i - 1] = 1
    return normal_form(raw, exponents, p)


def delta_rank(m: int, p: int) -> int:
    check_prime(p)
    if m < 3:
        raise ValueError("need at least 3 branch points")
    return m - 2


def pairing_exponent(x: DivisorClass, y: DivisorClass) -> int:
    """
    Exponent e with w(x, y) = exp(2 pi i e / p).

    Zero for odd p.  For p = 2, the bilinear extension of e(D_i, D_j) = 1 for
    i != j and e(D_i, D_i) = 0.
    """
    _same_config(x, y)
    if x.p != 2:
        return 0
    a, b = x.coeffs, y.coeffs
    return (sum(a) * sum(b) - sum(u * v for u, v in zip(a, b))) % 2


def gram_matrix(classes: Sequence[DivisorClass]) -> np.ndarray:
    n = len(classes)
    G = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            G[i, j] = pairing_exponent(classes[i], classes[j])
    return G


def _check_normalized(config: BranchConfiguration):
    if config.kappa != 1:
        raise NotNormalized("verifier needs kappa = 1, got %d" % config.kappa)
    if any(a == 0 for a in config.points):
        raise NotNormalized("branch points must be nonzero")


def shifted_poly(config: BranchConfiguration) -> tuple[list[Fraction], int]:
    """
    G(t) = f(t) - t^(p(n-1)) for f = prod (t - a_i)^k_i of degree pn - 1.

    Returns (coefficients of G, n).
    """
    _check_normalized(config)
    p = config.p
    deg = config.degree()
    n, rem = divmod(deg + 1, p)
    assert rem == 0
    coeffs = poly_from_roots(config.points, config.exponents)
    coeffs[p * (n - 1)] -= 1
    return coeffs, n


def weil_ratio_ramified(config: BranchConfiguration, i: int, j: int) -> Fraction:
    """
    psi(E_i) / phi(F_j) for the ramification classes D_i, D_j (1-based labels),
    evaluated exactly.  The result should be (-1)^(p-1).

    The roots b of G(t) = f(t) - t^(p(n-1)) are never computed:
    prod (b - a_i)^lambda = (-1)^deg(G) * G(a_i).
    """
    if i == j:
        raise EqualIndices("need i != j")
    _check_normalized(config)
    p = config.p
    ai, aj = config.points[i - 1], config.points[j - 1]
    G, n = shifted_poly(config)
    deg_G = p * n - 1

    psi = (ai - aj) / (-ai) ** p
    root_product = (-1) ** deg_G * rational_eval_poly(G, ai)
    phi = (aj - ai) * root_product / (-ai) ** (p * n)
    return psi / phi
