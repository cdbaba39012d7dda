"""One-parameter families of ideals realizing graph edges.

For a canonical move with pairs (m_i, m_i') the family replaces each moved
target parent m_i'/x1 by the pencil m_i'/x1 + c_i * t * m_i/x1 and keeps every
other minimal generator of the base ideal.  The coefficient

    c_i = (a_i + l)! / (a_i - 1)! = a_i * (a_i + 1) * ... * (a_i + l)

depends only on the x1-valuation a_i of the source and the number l of xj
powers the move transfers; those are exactly the ratios that make the
unipotent action send one pencil generator into the span of the others, so
the whole family stays fixed for every t.

verify_family checks the four facts that make a family an edge: the t = 0
fibre is the base ideal, fixedness at every sample t, constant colength, and
the two limit memberships in the move's result.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .errors import (
    InvalidParameterError,
    NonArtinianError,
    VerificationError,
    ZeroIdealError,
)
from .groebner import (
    DEFAULT_STEP_CAP,
    buchberger,
    is_ga_fixed_poly_ideal,
    poly_colength,
)
from .monomials import Monomial, MonomialIdeal, minimalize, mono_div, mono_str
from .moves import Move, apply_move, is_valid_move
from .polynomials import Polynomial

DEFAULT_T_SAMPLES = (Fraction(1), Fraction(2), Fraction(3), Fraction(5), Fraction(7))


def transfer_coefficient(a: int, l: int) -> int:
    """(a + l)! / (a - 1)! for a >= 1, l >= 0; always a positive integer."""
    if a < 1 or l < 0:
        raise InvalidParameterError(f"need a >= 1 and l >= 0, got a={a}, l={l}")
    return factorial(a + l) // factorial(a - 1)


@dataclass(frozen=True)
class EdgeFamily:
    """The data of one pencil family: base ideal, move, and derived pieces."""

    base: MonomialIdeal
    move: Move
    l: int
    a_vals: tuple[int, ...]
    coeffs: tuple[int, ...]
    moving: tuple[tuple[Monomial, Monomial], ...]  # (target parent m'/x1, source m/x1)
    fixed: tuple[Monomial, ...]

    def to_dict(self) -> dict:
        return {
            "base": self.base.to_dict(),
            "move": self.move.to_dict(),
            "l": self.l,
            "a_vals": list(self.a_vals),
            "coeffs": [str(c) for c in self.coeffs],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @staticmethod
    def from_dict(data: dict) -> "EdgeFamily":
        base = MonomialIdeal.from_dict(data["base"])
        return build_edge_family(base, Move.from_dict(data["move"]))

    @staticmethod
    def from_json(text: str) -> "EdgeFamily":
        return EdgeFamily.from_dict(json.loads(text))


def build_edge_family(I: MonomialIdeal, mv: Move) -> EdgeFamily:
    """Construct the family for a valid move on I.

    The transferred power l and the pivot variable are read off the move
    itself (the exponent drop outside x1), so families exist for single-pair
    moves too, where the coefficient merely reparametrizes t.
    """
    report = is_valid_move(I, mv)
    if not report.ok:
        raise VerificationError(f"move {mv} is not valid on {I}", report.to_dict())

    n = I.n
    x1 = tuple(1 if k == 0 else 0 for k in range(n))

    drops = set()
    for src, dst in mv.pairs:
        drop = [(i, src[i] - dst[i]) for i in range(1, n) if src[i] != dst[i]]
        if len(drop) != 1 or drop[0][1] <= 0:
            raise InvalidParameterError(
                f"pair {mono_str(src)} -> {mono_str(dst)} does not transfer a single variable")
        drops.add(drop[0])
    if len(drops) > 1:
        raise InvalidParameterError(f"move pairs transfer different variables: {drops}")
    (_, l), = drops

    a_vals = tuple(src[0] for src, _ in mv.pairs)
    coeffs = tuple(transfer_coefficient(a, l) for a in a_vals)
    moving = tuple(
        (mono_div(dst, x1), mono_div(src, x1)) for src, dst in mv.pairs
    )
    parents = {p for p, _ in moving}
    fixed = tuple(g for g in I.gens if g not in parents)
    return EdgeFamily(I, mv, l, a_vals, coeffs, moving, fixed)


def generators_at(F: EdgeFamily, t) -> list[Polynomial]:
    """The pencil generators m'/x1 + c*t*m/x1 followed by the untouched ones."""
    t = Fraction(t)
    n = F.base.n
    out = []
    for (parent, src_over), c in zip(F.moving, F.coeffs):
        out.append(Polynomial.monomial(n, parent)
                   + Polynomial.monomial(n, src_over, Fraction(c) * t))
    out.extend(Polynomial.monomial(n, g) for g in F.fixed)
    return out


@dataclass
class FamilyReport:
    """Per-verdict outcome of the four edge checks."""

    base_ok: bool = False
    fixed_ok: bool = False
    colength_ok: bool = False
    limit_ok: bool = False
    t_samples: tuple[Fraction, ...] = ()
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.base_ok and self.fixed_ok and self.colength_ok and self.limit_ok

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "base_ok": self.base_ok,
            "fixed_ok": self.fixed_ok,
            "colength_ok": self.colength_ok,
            "limit_ok": self.limit_ok,
            "t_samples": [str(t) for t in self.t_samples],
            "failures": list(self.failures),
        }


def verify_family(F: EdgeFamily, t_samples=DEFAULT_T_SAMPLES,
                  max_gb_steps: int = DEFAULT_STEP_CAP) -> FamilyReport:
    """Check base fibre, fixedness, colength, and limit membership.

    Fixedness and colength are tested at each sample value of t (symbolically
    in the unipotent parameter, exactly in t); the limit verdict checks that
    every target and every source/x1 lies in the move's result ideal.
    """
    samples = tuple(Fraction(t) for t in t_samples)
    if not samples or len(set(samples)) != len(samples) or any(t == 0 for t in samples):
        raise InvalidParameterError("t samples must be nonzero and pairwise distinct")

    report = FamilyReport(t_samples=samples)
    n = F.base.n

    # (a) the t = 0 fibre minimalizes back to the base ideal
    at_zero = [p.sorted_terms()[0][0] for p in generators_at(F, 0)]
    report.base_ok = minimalize(n, at_zero) == F.base
    if not report.base_ok:
        report.failures.append("t=0 fibre differs from the base ideal")

    # (b) fixedness and (c) colength at each sample
    expected = F.base.colength()
    report.fixed_ok = True
    report.colength_ok = True
    for t in samples:
        gens = generators_at(F, t)
        if not is_ga_fixed_poly_ideal(gens, max_steps=max_gb_steps):
            report.fixed_ok = False
            report.failures.append(f"not fixed at t={t}")
        try:
            colen = poly_colength(buchberger(gens, max_steps=max_gb_steps))
        except (NonArtinianError, ZeroIdealError):
            colen = None
        if colen != expected:
            report.colength_ok = False
            report.failures.append(f"colength {colen} != {expected} at t={t}")

    # (d) limit membership in the move's result
    J = apply_move(F.base, F.move)
    report.limit_ok = True
    for src, dst in F.move.pairs:
        src_over = mono_div(src, tuple(1 if k == 0 else 0 for k in range(n)))
        if not J.contains(dst) or not J.contains(src_over):
            report.limit_ok = False
            report.failures.append(
                f"limit membership fails for {mono_str(src)} -> {mono_str(dst)}")
    return report
