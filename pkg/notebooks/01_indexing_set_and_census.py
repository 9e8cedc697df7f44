"""
Components of trigonal curves with level 3 structure
====================================================

Multiplicity vectors for p = 3, the groups A_m, and the component count
as a sum over the indexing set versus the closed formula.
"""

from superlevel.cli import render_table1, sci
from superlevel.symplectic import sp_group_order
from superlevel.trigonal import aut_group, census_rows, census_sum, component_count_formula, trigonal_indexing_set

###############################################################################
# The indexing set for small genus; starred entries have a block swap.
print(render_table1())

###############################################################################
# For g = 4 there are two components of Sup_4: (6,0) and (3,3).
for v in trigonal_indexing_set(4).vectors:
    print(v.counts, "|A_m| =", aut_group(v).order)

###############################################################################
# Each m contributes |Sp(2g, F_3)| / |A_m| components.
for row in census_rows(4):
    print(row.m_vector, row.components)
print("|Sp(8, F_3)| =", sp_group_order(4, 3))

###############################################################################
# The sum agrees with the closed formula, exactly.
for g in (1, 2, 3, 10, 40):
    a, b = census_sum(g), component_count_formula(g)
    print(g, a == b, sci(a))
