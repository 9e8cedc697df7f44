"""Verification suites behind ``superlevel verify``; each returns a SuiteResult."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .branch import compose, random_kappa_one_configuration
from .divisors import weil_ratio_ramified
from .hyperelliptic import embed_symmetric_group
from .symplectic import SymplecticForm, is_symplectic
from .trigonal import (SUBGROUP_BOUND, aut_group, census_sum, component_count_formula,
                       perm_closure, psi_image, psi_kernel, psi_subgroup, trigonal_indexing_set)

DEFAULT_SEED = 0
SUITES = ("weil", "psi", "embedding", "formula")


class UnknownSuite(ValueError):
    pass


@dataclass
class SuiteResult:
    name: str
    lines: list = field(default_factory=list)
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def render(self) -> str:
        out = ["[%s] %s" % (self.name, "PASS" if self.passed else "FAIL")]
        out += ["  " + s for s in self.lines]
        out += ["  counterexample: " + s for s in self.failures]
        return "\n".join(out)


def verify_weil(seed: int = DEFAULT_SEED, trials: int = 100) -> SuiteResult:
    res = SuiteResult("weil")
    rng = random.Random(seed)
    for p in (2, 3):
        expected = (-1) ** (p - 1)
        good = 0
        for _ in range(trials):
            config = random_kappa_one_configuration(rng, p)
            i, j = rng.sample(range(1, len(config.points) + 1), 2)
            ratio = weil_ratio_ramified(config, i, j)
            if ratio == expected:
                good += 1
            else:
                res.failures.append("p=%d i=%d j=%d ratio=%s config=%s" % (p, i, j, ratio, config.to_json()))
        res.lines.append("p=%d: %d/%d ratios = %d" % (p, good, trials, expected))
    return res


def verify_psi(seed: int = DEFAULT_SEED, max_genus: int = 6) -> SuiteResult:
    res = SuiteResult("psi")
    rng = random.Random(seed)
    for g in range(1, max_genus + 1):
        form = SymplecticForm(g, 3)
        for mv in trigonal_indexing_set(g).vectors:
            aut = aut_group(mv)
            gens_ok = all(is_symplectic(psi_image(mv, s).full_matrix, form) for s in aut.generators)
            if not gens_ok:
                res.failures.append("g=%d m=%s: non-symplectic generator image" % (g, mv.counts))
            if aut.order > SUBGROUP_BOUND:
                res.lines.append("g=%d m=%s: |A_m|=%d above bound, skipped" % (g, mv.counts, aut.order))
                continue
            size = len(psi_subgroup(mv))
            # homomorphism check on random words in the generators
            hom_ok = True
            for _ in range(20):
                s = _random_word(rng, aut.generators, mv.m)
                t = _random_word(rng, aut.generators, mv.m)
                lhs = psi_image(mv, compose(s, t)).full_matrix
                rhs = psi_image(mv, s).full_matrix @ psi_image(mv, t).full_matrix
                if lhs != rhs:
                    hom_ok = False
                    res.failures.append("g=%d m=%s: Psi(st) != Psi(s)Psi(t) for s=%s t=%s" % (g, mv.counts, s, t))
                    break
            res.lines.append("g=%d m=%s: |A_m|=%d |image|=%d symplectic=%s homomorphism=%s"
                             % (g, mv.counts, aut.order, size, gens_ok, hom_ok))
            if size != aut.order:
                kernel = sorted(psi_kernel(mv))
                res.failures.append("g=%d m=%s: image order %d != |A_m| = %d; kernel %s"
                                    % (g, mv.counts, size, aut.order, kernel))
    return res


def _random_word(rng, gens, n, max_len=4):
    w = tuple(range(n))
    for _ in range(rng.randint(0, max_len)):
        w = compose(w, rng.choice(gens))
    return w


def verify_embedding(seed: int = DEFAULT_SEED, max_genus: int = 5, trials: int = 50) -> SuiteResult:
    res = SuiteResult("embedding")
    rng = random.Random(seed)

    perms = list(itertools.permutations(range(6)))
    images = {s: embed_symmetric_group(2, s) for s in perms}
    distinct = len(set(images.values()))
    res.lines.append("g=2: %d/%d distinct images" % (distinct, len(perms)))
    if distinct != len(perms):
        res.failures.append("g=2: S_6 -> Sp(4, F_2) not injective")

    for g in range(2, max_genus + 1):
        n = 2 * g + 2
        form = SymplecticForm(g, 2)
        good = 0
        for _ in range(trials):
            s = tuple(rng.sample(range(n), n))
            t = tuple(rng.sample(range(n), n))
            Ms, Mt = embed_symmetric_group(g, s), embed_symmetric_group(g, t)
            Mst = embed_symmetric_group(g, compose(s, t))
            if Mst == Ms @ Mt and is_symplectic(Mst, form):
                good += 1
            else:
                res.failures.append("g=%d: s=%s t=%s" % (g, s, t))
        res.lines.append("g=%d: %d/%d homomorphism pairs" % (g, good, trials))
    return res


def verify_formula(seed: int = DEFAULT_SEED, g_max: int = 40) -> SuiteResult:
    res = SuiteResult("formula")
    good = 0
    for g in range(1, g_max + 1):
        a, b = component_count_formula(g), census_sum(g)
        if a == b and a > 0:
            good += 1
        else:
            res.failures.append("g=%d: formula %d vs census %d" % (g, a, b))
    res.lines.append("g=1..%d: %d/%d identities hold" % (g_max, good, g_max))
    return res


_RUNNERS = {
    "weil": verify_weil,
    "psi": verify_psi,
    "embedding": verify_embedding,
    "formula": verify_formula,
}


def run_suite(name: str, seed: int = DEFAULT_SEED) -> list:
    if name == "all":
        return [_RUNNERS[s](seed) for s in SUITES]
    if name not in _RUNNERS:
        raise UnknownSuite("unknown suite %r; choose from %s or all" % (name, ", ".join(SUITES)))
    return [_RUNNERS[name](seed)]
