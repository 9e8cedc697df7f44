"""
Weil pairing on ramification classes
====================================

The ratio psi(E_i) / phi(F_j) is evaluated in exact rational arithmetic.
For p = 2 it is -1, for odd p it is 1.
"""

import random
from fractions import Fraction

from superlevel.branch import BranchConfiguration, random_kappa_one_configuration
from superlevel.divisors import shifted_poly, weil_ratio_ramified

###############################################################################
# s^3 = (t-1)(t-2)(t-3)(t-4)(t-5): degree 5 = 3*2 - 1, so kappa = 1.
c = BranchConfiguration([1, 2, 3, 4, 5], [1] * 5, 1, 3)
print(weil_ratio_ramified(c, 1, 2))

###############################################################################
# The auxiliary polynomial G(t) = f(t) - t^(p(n-1)) is monic of degree pn - 1.
G, n = shifted_poly(c)
print("n =", n, "G =", [str(x) for x in G])

###############################################################################
# Random rational configurations.
rng = random.Random(0)
for p in (2, 3, 5):
    c = random_kappa_one_configuration(rng, p)
    print(p, [str(a) for a in c.points[:4]], "...", weil_ratio_ramified(c, 1, 2))

###############################################################################
# Hyperelliptic example with fractional branch points.
c = BranchConfiguration([Fraction(1, 3), Fraction(-5, 2), 7], [1, 1, 1], 1, 2)
print(weil_ratio_ramified(c, 1, 3))
