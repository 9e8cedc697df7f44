"""
Level 2 structure on hyperelliptic curves
=========================================

A symplectic basis of the 2-torsion built from branch points, and the
resulting embedding of S_{2g+2} into Sp(2g, F_2).
"""

import itertools

from superlevel.branch import transposition
from superlevel.hyperelliptic import basis_gram, build_basis, embed_symmetric_group, hyp_component_count

###############################################################################
# The basis for g = 2, in coordinates on D_1..D_4.
b = build_basis(2)
print("A:", b.A_vectors)
print("B:", b.B_vectors)
print(basis_gram(2))

###############################################################################
# Image of the transposition (1 2) in the (A, B) basis.
print(embed_symmetric_group(2, transposition(6, 1, 2)))

###############################################################################
# S_6 -> Sp(4, F_2) is a bijection.
images = {embed_symmetric_group(2, s) for s in itertools.permutations(range(6))}
print(len(images))

###############################################################################
# Number of components of Hyp_g[2].
print([hyp_component_count(g) for g in range(2, 7)])
