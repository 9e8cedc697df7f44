"""
Relabelling branch points acts on the 3-torsion
===============================================

Generators of A_m act on the Lagrangian spanned by D_1..D_g; the action
extends to Sp(2g, F_3) as diag(A, A^-T).  For g >= 2 the image has order
|A_m|.  For g = 1 the Lagrangian is a line and S_3 acts through its sign.
"""

from superlevel.branch import MultiplicityVector, transposition
from superlevel.symplectic import enumerate_sp, left_coset_count
from superlevel.trigonal import aut_group, psi_generator_image, psi_kernel, psi_subgroup

###############################################################################
# m = (6, 0): generator images on D_1..D_4.
v = MultiplicityVector((6, 0), 3)
for s in aut_group(v).generators:
    print(s, psi_generator_image(v, s).delta_block.tolist())

###############################################################################
# m = (3, 3) has the extra block swap.
v = MultiplicityVector((3, 3), 3)
print(psi_generator_image(v, aut_group(v).generators[-1]).delta_block.tolist())
print(len(psi_subgroup(v)), aut_group(v).order)

###############################################################################
# Genus 1: the image of S_3 is {I, -I} and the 3-cycles act trivially.
v = MultiplicityVector((3, 0), 3)
print(sorted(M.tolist() for M in psi_subgroup(v)))
print(sorted(psi_kernel(v)))
print(left_coset_count(psi_subgroup(v), enumerate_sp(1, 3)))
