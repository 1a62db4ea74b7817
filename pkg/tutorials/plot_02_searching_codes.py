"""
Searching for codes on the ring
===============================

Codewords are found as a maximum clique in a compatibility graph over
binary words. This script runs a few searches, compares the two degeneracy
rules and tries other placements of the ancilla, ebit and gauge roles.
"""

###############################################################################
# A plain search
# --------------
# ``detect`` mode asks every error of weight up to d-1 to be detectable.

from eaocws.clique import Budget
from eaocws.pipeline import find_ring_code, reproduce_cell, table_cells
from eaocws.structure import CodeLayout
from eaocws.verify import symplectic_verify

out = find_ring_code(CodeLayout(6, c=2, r=1), d=3)
print(out.code.parameters(), [str(w) for w in out.code.selected_codewords])
print("optimal:", out.codewords.optimal, "verified:", symplectic_verify(out.code, 3).passed)

###############################################################################
# Two degeneracy rules
# --------------------
# The ``single`` rule only asks single zero-reducing errors to commute with
# codeword differences. The ``pairs`` rule also covers products of two
# errors that share a reduced word, which is what correcting them needs.
# The looser rule finds more codewords, but the codes fail the distance
# check.

layout = CodeLayout(6, c=3, r=1)
for rule in ("single", "pairs"):
    res = find_ring_code(layout, 3, "correct", degeneracy=rule)
    print(rule, res.K, symplectic_verify(res.code, 3).verdict)

###############################################################################
# Moving the roles around the ring
# --------------------------------
# The ring has n!/(2n) distinct labellings. Trying each one can raise K.

best = find_ring_code(layout, 3, placement="best", budget=Budget(max_seconds=60))
print(best.K, [p + 1 for p in best.placement], best.placements_tried)

###############################################################################
# A few table cells
# -----------------
# Each row reports the best K found and whether the search was complete.

for n, c, r, d, target in table_cells(1, [(6, 1), (6, 2), (7, 1)]):
    cell = reproduce_cell(n, c, r, d, target, placement="best", budget=Budget(max_seconds=60))
    print(cell.to_json())
