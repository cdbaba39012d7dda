"""Deterministic subgroup pickers and the coordinate-point graph.

Given integer torus weights, the pickers produce exponent vectors whose
pairings against every weight (and every difference of distinct weights)
avoid zero, then recheck themselves; the constrained variant searches the
arithmetic-progression forms compatible with the unipotent action.
"""

from agraph import (
    WeightMatrix,
    export_dot,
    pick_compatible_pair,
    pick_one_ps,
    pick_two_ps,
    simplex_tgraph,
    verify_separation,
)
from agraph.errors import IncompatibleWeightsError
from agraph.subgroups import picker_audit

W = WeightMatrix.from_rows([(1, 0), (0, 1), (1, -1)])
a = pick_one_ps(W)
print("weights:", W.rows)
print("one-parameter exponents:", a, "| verified:", verify_separation(W, a)[0])
print("audit:", picker_audit(W, a))

a2, b2 = pick_two_ps(W)
print("\ntwo-parameter exponents:", a2, b2,
      "| verified:", verify_separation(W, a2, b2)[0])

first, second = pick_compatible_pair(W)
print("\ncompatible diagonal forms: (c, p) =", (first.c, first.p), (second.c, second.p))
print("as exponent vectors:", first.exponents(W.n), second.exponents(W.n))

try:
    pick_compatible_pair(WeightMatrix.from_rows([(1, -2, 1)]))
except IncompatibleWeightsError as err:
    print("\ninfeasible instance detected, violating vector:", err.vector)

print("\ncomplete graph on the coordinate points of the projective plane:\n")
print(export_dot(simplex_tgraph(2)))
