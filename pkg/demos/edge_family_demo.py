"""Pencil families joining a vertex to its successor.

A family replaces each moved generator by a two-term pencil whose
coefficient is read off the factorial formula.  The demo shows a one-pair
family, then a two-pair family where the coefficient ratio is forced: the
unipotent substitution must map each pencil generator into the span of the
others, and only (6, 24) balances the bookkeeping here.
"""

from fractions import Fraction

from agraph import build_edge_family, canonical_successor, minimalize, verify_family
from agraph.families import generators_at
from agraph.groebner import buchberger, poly_colength
from agraph.monomials import monomials_of_degree
from agraph.polynomials import ga_coefficients

print("== one moved pair ==")
I = minimalize(2, [(2, 0), (1, 1), (0, 2)])
move, _ = canonical_successor(I)
family = build_edge_family(I, move)
print("base", I, "| move", move, "| coefficient", family.coeffs[0])
for t in (0, 1, Fraction(1, 2)):
    gens = generators_at(family, t)
    print(f"  fibre at t={t}: {[str(g) for g in gens]}")
print("unipotent expansion of the pencil generator at t=1:")
for k, c in enumerate(ga_coefficients(generators_at(family, 1)[0])):
    print(f"  parameter^{k}: {c}")
print("verification:", verify_family(family).to_dict())

print("\n== two moved pairs ==")
gens = [(0, 0, 3)] + [m for m in monomials_of_degree(3, 4) if m[2] <= 2]
I = minimalize(3, gens)
move, _ = canonical_successor(I)
family = build_edge_family(I, move)
print("base has", len(I.gens), "generators; move:", move)
print("x1-valuations", family.a_vals, "->", "coefficients", family.coeffs)
fibre = generators_at(family, 1)
print("pencil generators at t=1:", [str(g) for g in fibre[:2]])
print("colength along the family:",
      [poly_colength(buchberger(generators_at(family, t))) for t in (1, 2, 3)])
print("verification:", verify_family(family, t_samples=(1, 2, 3)).to_dict())
