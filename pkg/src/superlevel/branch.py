"""
Branch data of cyclic degree-p covers of the projective line.

A configuration is an ordered list of finite branch points a_i with
exponents k_i, so the affine model is s^p = prod (t - a_i)^k_i, plus the
exponent kappa at infinity.  Points are labelled 1..m in the order given.

Permutations are tuples ``sigma`` of 0-based images, ``sigma[i]`` being the
image of point i+1 (minus one).  ``compose(s, t)`` applies ``t`` first.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import check_prime


class Infeasible(ValueError):
    """No superelliptic curve with this (g, p) exists."""


class InvalidVector(ValueError):
    pass


class DuplicatePoints(ValueError):
    pass


class InvalidConfiguration(ValueError):
    pass


# -- permutations ------------------------------------------------------------

def identity_perm(n: int) -> tuple:
    return tuple(range(n))


def compose(s: Sequence[int], t: Sequence[int]) -> tuple:
    """(s t)(x) = s(t(x))."""
    return tuple(s[x] for x in t)


def invert(s: Sequence[int]) -> tuple:
    out = [0] * len(s)
    for i, x in enumerate(s):
        out[x] = i
    return tuple(out)


def transposition(n: int, i: int, j: int) -> tuple:
    """The transposition (i j) of the labels 1..n."""
    s = list(range(n))
    s[i - 1], s[j - 1] = j - 1, i - 1
    return tuple(s)


def is_permutation(s: Sequence[int]) -> bool:
    return sorted(s) == list(range(len(s)))


# -- multiplicity vectors ----------------------------------------------------

@dataclass(frozen=True)
class MultiplicityVector:
    """(m_1, ..., m_{p-1}): m_k branch points carry exponent k."""

    counts: tuple
    p: int

    def __post_init__(self):
        check_prime(self.p)
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))
        if len(self.counts) != self.p - 1:
            raise InvalidVector("need %d entries for p=%d" % (self.p - 1, self.p))
        if any(c < 0 for c in self.counts):
            raise InvalidVector("negative count in %s" % (self.counts,))
        if weighted_sum(self.counts) % self.p:
            raise InvalidVector("sum k*m_k = %d is not 0 mod %d" % (weighted_sum(self.counts), self.p))
        if self.counts[0] != max(self.counts):
            raise InvalidVector("%s is not normalized (m_1 must be maximal)" % (self.counts,))

    @property
    def m(self) -> int:
        return sum(self.counts)

    def exponents(self) -> tuple:
        """Exponent of each labelled point, in block order."""
        return tuple(k for k, c in enumerate(self.counts, start=1) for _ in range(c))

    def __iter__(self):
        return iter(self.counts)

    def __getitem__(self, i):
        return self.counts[i]

    def __len__(self):
        return len(self.counts)


def weighted_sum(counts) -> int:
    return sum(k * c for k, c in enumerate(counts, start=1))


def zeta_translate(counts, zeta: int, p: int) -> tuple:
    """zeta . (m_1..m_{p-1}) = (m_{zeta*1}, ..., m_{zeta*(p-1)})."""
    return tuple(counts[(zeta * k) % p - 1] for k in range(1, p))


def normalize_multiplicity_vector(raw, p: int) -> MultiplicityVector:
    """
    Pick the zeta-translate of ``raw`` whose first entry is maximal.

    When several zeta achieve the maximum, the lexicographically greatest
    translate wins.
    """
    check_prime(p)
    raw = tuple(int(c) for c in raw)
    if len(raw) != p - 1:
        raise InvalidVector("need %d entries for p=%d" % (p - 1, p))
    if weighted_sum(raw) % p:
        raise InvalidVector("sum k*m_k = %d is not 0 mod %d" % (weighted_sum(raw), p))
    best = max(zeta_translate(raw, z, p) for z in range(1, p))
    return MultiplicityVector(best, p)


def stabilizer(mv: MultiplicityVector) -> tuple:
    """The zeta in F_p^* fixing mv."""
    return tuple(z for z in range(1, mv.p) if zeta_translate(mv.counts, z, mv.p) == mv.counts)


# -- configurations ----------------------------------------------------------

def ramification_count(g: int, p: int) -> int:
    """m = 2g/(p-1) + 2, the number of branch points."""
    check_prime(p)
    if g < 1:
        raise ValueError("g must be positive")
    if (2 * g) % (p - 1):
        raise Infeasible("no degree-%d cyclic cover of genus %d: %d does not divide %d" % (p, g, p - 1, 2 * g))
    return 2 * g // (p - 1) + 2


@dataclass(frozen=True)
class BranchConfiguration:
    points: tuple
    exponents: tuple
    kappa: int
    p: int

    def __post_init__(self):
        check_prime(self.p)
        object.__setattr__(self, "points", tuple(Fraction(a) for a in self.points))
        object.__setattr__(self, "exponents", tuple(int(k) for k in self.exponents))
        if len(self.points) != len(self.exponents):
            raise InvalidConfiguration("points and exponents differ in length")
        if len(set(self.points)) != len(self.points):
            raise DuplicatePoints("branch points must be distinct")
        if any(not 1 <= k <= self.p - 1 for k in self.exponents):
            raise InvalidConfiguration("exponents must lie in 1..p-1")
        if not 0 <= self.kappa <= self.p - 1:
            raise InvalidConfiguration("kappa must lie in 0..p-1")
        if (self.kappa + sum(self.exponents)) % self.p:
            raise InvalidConfiguration("kappa + sum k_i is not 0 mod p")

    @property
    def branched_at_infinity(self) -> bool:
        return self.kappa != 0

    @property
    def m(self) -> int:
        return len(self.points) + (1 if self.kappa else 0)

    def degree(self) -> int:
        return sum(self.exponents)

    def to_json(self) -> str:
        return json.dumps({
            "p": self.p,
            "points": [{"num": a.numerator, "den": a.denominator, "exp": k}
                       for a, k in zip(self.points, self.exponents)],
            "kappa": self.kappa,
        }, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "BranchConfiguration":
        obj = json.loads(text)
        pts = obj["points"]
        return cls(
            points=[Fraction(q["num"], q["den"]) for q in pts],
            exponents=[q["exp"] for q in pts],
            kappa=obj["kappa"],
            p=obj["p"],
        )


def make_configuration(points, exponents, p: int) -> BranchConfiguration:
    """Configuration with kappa chosen so the total exponent is 0 mod p."""
    return BranchConfiguration(points, exponents, (-sum(exponents)) % p, p)


def affine_model(points, m: MultiplicityVector) -> BranchConfiguration:
    """
    Assign exponents blockwise: the first m_1 points get exponent 1, the next
    m_2 exponent 2, and so on.
    """
    points = [Fraction(a) for a in points]
    if len(set(points)) != len(points):
        raise DuplicatePoints("branch points must be distinct")
    if len(points) != m.m:
        raise InvalidConfiguration("need %d points for %s, got %d" % (m.m, m.counts, len(points)))
    return make_configuration(points, m.exponents(), m.p)


@dataclass(frozen=True)
class MonodromyDatum:
    cycles: tuple
    p: int

    def product(self) -> tuple:
        out = identity_perm(self.p)
        for c in self.cycles:
            out = compose(c, out)
        return out


def shift_perm(k: int, p: int) -> tuple:
    """The sheet permutation n -> n + k (mod p)."""
    return tuple((n + k) % p for n in range(p))


def monodromy_cycles(config: BranchConfiguration) -> MonodromyDatum:
    ks = list(config.exponents)
    if config.kappa:
        ks.append(config.kappa)
    return MonodromyDatum(tuple(shift_perm(k, config.p) for k in ks), config.p)


def genus_of(config: BranchConfiguration) -> int:
    num = (config.p - 1) * (config.m - 2)
    if num < 0 or num % 2:
        raise InvalidConfiguration("(p-1)(m-2) = %d is not a valid genus numerator" % num)
    return num // 2


def random_rational(rng, height: int = 50) -> Fraction:
    return Fraction(rng.randint(-height, height), rng.randint(1, height))


def random_points(rng, count: int, nonzero: bool = False, height: int = 50) -> list:
    pts: list = []
    while len(pts) < count:
        a = random_rational(rng, height)
        if a in pts or (nonzero and a == 0):
            continue
        pts.append(a)
    return pts


def random_configuration(rng, p: int, max_points: int = 12) -> BranchConfiguration:
    """Random valid configuration; kappa is whatever balances the exponents."""
    while True:
        count = rng.randint(1, max_points)
        ks = [rng.randint(1, p - 1) for _ in range(count)]
        config = make_configuration(random_points(rng, count), ks, p)
        if config.m >= 2:
            return config


def random_kappa_one_configuration(rng, p: int, max_points: int = 10) -> BranchConfiguration:
    """Random configuration with kappa = 1, at least two finite points, all nonzero."""
    while True:
        count = rng.randint(2, max_points)
        ks = [rng.randint(1, p - 1) for _ in range(count)]
        if (sum(ks) + 1) % p == 0:
            return BranchConfiguration(random_points(rng, count, nonzero=True), ks, 1, p)
