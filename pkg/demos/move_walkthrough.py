"""Walk one canonical move, end to end.

Start from the fat-point ideal of 10 points on a line thickened at the
origin of affine 3-space: the cube of the maximal ideal, whose generators
are the ten monomials of degree three.  The toolkit picks a generator
exchange, performs it, and reports the bookkeeping that makes the exchange
colength-preserving.
"""

from agraph import canonical_successor, is_valid_move, minimalize, path_to_terminal
from agraph.monomials import mono_str, monomials_of_degree
from agraph.moves import selection_data

I = minimalize(3, list(monomials_of_degree(3, 3)))
print("base ideal        ", I)
print("colength          ", I.colength())
print("socle             ", sorted(mono_str(m) for m in I.socle()))
print("socle weight      ", I.weight())
print("standard weight   ", I.standard_weight())

sel = selection_data(I)
print("\nselection: top degree", sel.d_star, "| pivot variable x%d" % sel.j,
      "| shared power", sel.l)
print("candidates:", [mono_str(m) for m in sel.s_hat])

move, J = canonical_successor(I)
print("\ncanonical move    ", move)
print("successor         ", J)

report = is_valid_move(I, move)
print("\nvalidation:")
for name, ok, _ in report.checks:
    print(f"  {name:28s} {'ok' if ok else 'FAILED'}")
print("socle sizes        %d -> %d   (the socle can shrink...)"
      % (report.socle_size_before, report.socle_size_after))
print("socle weights      %d -> %d" % (report.socle_weight_before,
                                       report.socle_weight_after))
print("standard weights   %d -> %d   (...but this potential always climbs)"
      % (report.standard_weight_before, report.standard_weight_after))

print("\nfull descent to the terminal ideal:")
for k, (mv, step) in enumerate(path_to_terminal(I), start=1):
    print(f"  step {k}: {mv}  ->  {step}")
