"""Buchberger's algorithm, normal forms, and the exact fixedness test.

Both supported term orders put x1 > x2 > ... > xn.  The computation is fully
deterministic: inputs are made monic and sorted, pairs are processed by the
normal selection strategy with a fixed tie-break, and the final basis is
inter-reduced, monic, and sorted by leading term.  A reduced Groebner basis
is mathematically unique for a given ideal and order, so the serialized
output is byte-stable no matter how the generators were presented.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import InvalidParameterError, StepCapExceeded
from .monomials import Monomial, MonomialIdeal, divides, minimalize, mono_div, mono_mul
from .polynomials import Polynomial, ga_coefficients

DEFAULT_STEP_CAP = 200_000

ORDERS = ("degrevlex", "lex")


def order_key(order: str) -> Callable[[Monomial], tuple]:
    """Sort key realizing the term order; larger key = larger monomial."""
    if order == "lex":
        return lambda m: tuple(m)
    if order == "degrevlex":
        return lambda m: (sum(m), tuple(-e for e in reversed(m)))
    raise InvalidParameterError(f"unknown term order {order!r}; use one of {ORDERS}")


def leading_monomial(p: Polynomial, order: str) -> Monomial:
    if p.is_zero():
        raise InvalidParameterError("the zero polynomial has no leading monomial")
    key = order_key(order)
    return max(p.terms(), key=key)


def _monic(p: Polynomial, order: str) -> Polynomial:
    lc = p.coeff(leading_monomial(p, order))
    return p * (Fraction(1) / lc)


def normal_form_list(p: Polynomial, basis: Sequence[Polynomial], order: str) -> Polynomial:
    """Complete reduction of p modulo a list of nonzero polynomials.

    Deterministic: at each step the first basis element (in list order) whose
    leading monomial divides the current leading monomial is used.
    """
    key = order_key(order)
    lms = [leading_monomial(g, order) for g in basis]
    remainder = Polynomial.zero(p.n)
    work = p
    while not work.is_zero():
        lm = max(work.terms(), key=key)
        lc = work.coeff(lm)
        for g, glm in zip(basis, lms):
            if divides(glm, lm):
                factor = mono_div(lm, glm)
                work = work - g.mul_monomial(factor, lc / g.coeff(glm))
                break
        else:
            remainder = remainder + Polynomial.monomial(p.n, lm, lc)
            work = work - Polynomial.monomial(p.n, lm, lc)
    return remainder


def _s_polynomial(f: Polynomial, g: Polynomial, order: str) -> Polynomial:
    lmf = leading_monomial(f, order)
    lmg = leading_monomial(g, order)
    lcm = tuple(max(a, b) for a, b in zip(lmf, lmg))
    sf = f.mul_monomial(mono_div(lcm, lmf), Fraction(1) / f.coeff(lmf))
    sg = g.mul_monomial(mono_div(lcm, lmg), Fraction(1) / g.coeff(lmg))
    return sf - sg


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Groebner basis: monic, inter-reduced, sorted by leading term."""

    order: str
    n: int
    polys: tuple[Polynomial, ...]

    def leading_ideal(self) -> MonomialIdeal:
        return minimalize(self.n, [leading_monomial(g, self.order) for g in self.polys])

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "n": self.n,
            "polys": [g.to_dict() for g in self.polys],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def buchberger(gens: Iterable[Polynomial], order: str = "degrevlex",
               max_steps: int = DEFAULT_STEP_CAP) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by gens.

    Normal selection strategy (smallest pair lcm in the order), coprime-lcm
    pairs skipped, every reduction counted against max_steps.
    """
    gens = list(gens)
    if not gens:
        raise InvalidParameterError("need at least one generator")
    n = gens[0].n
    for g in gens:
        if g.n != n:
            raise InvalidParameterError("generators over different variable counts")
        if g.is_zero():
            raise InvalidParameterError("zero polynomial among the generators")
    key = order_key(order)

    basis: list[Polynomial] = []
    for g in sorted((_monic(g, order) for g in gens),
                    key=lambda p: [(key(m), c) for m, c in p.sorted_terms()]):
        if g not in basis:
            basis.append(g)

    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    steps = 0

    def lcm_of(i: int, j: int) -> Monomial:
        a = leading_monomial(basis[i], order)
        b = leading_monomial(basis[j], order)
        return tuple(max(x, y) for x, y in zip(a, b))

    while pairs:
        i, j = min(pairs, key=lambda ij: (key(lcm_of(*ij)), ij))
        pairs.discard((i, j))
        lmi = leading_monomial(basis[i], order)
        lmj = leading_monomial(basis[j], order)
        if mono_mul(lmi, lmj) == lcm_of(i, j):
            continue  # coprime leading terms: S-polynomial reduces to zero
        steps += 1
        if steps > max_steps:
            raise StepCapExceeded(f"Groebner step cap {max_steps} exceeded")
        s = _s_polynomial(basis[i], basis[j], order)
        r = normal_form_list(s, basis, order)
        if not r.is_zero():
            r = _monic(r, order)
            basis.append(r)
            pairs.update((k, len(basis) - 1) for k in range(len(basis) - 1))

    # minimalize: drop elements whose leading term another leading term divides;
    # divisors sort strictly earlier in both orders, so one greedy pass suffices
    basis.sort(key=lambda g: key(leading_monomial(g, order)))
    minimal: list[Polynomial] = []
    for g in basis:
        lm = leading_monomial(g, order)
        if not any(divides(leading_monomial(h, order), lm) for h in minimal):
            minimal.append(g)

    # inter-reduce: tails reduced against the other elements
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        r = normal_form_list(g, others, order) if others else g
        reduced.append(_monic(r, order))
    reduced.sort(key=lambda g: key(leading_monomial(g, order)))
    return GroebnerBasis(order, n, tuple(reduced))


def normal_form(p: Polynomial, G: GroebnerBasis) -> Polynomial:
    """Unique remainder of p modulo the reduced basis; zero iff p is a member."""
    if p.n != G.n:
        raise InvalidParameterError("polynomial and basis over different variable counts")
    return normal_form_list(p, G.polys, G.order)


def ideal_member(p: Polynomial, G: GroebnerBasis) -> bool:
    return normal_form(p, G).is_zero()


def poly_colength(G: GroebnerBasis) -> int:
    """Colength of the initial ideal, i.e. the vector-space codimension of the ideal."""
    return G.leading_ideal().colength()


def is_ga_fixed_poly_ideal(gens: Sequence[Polynomial], order: str = "degrevlex",
                           max_steps: int = DEFAULT_STEP_CAP) -> bool:
    """Exact, sample-free fixedness test under the unipotent action.

    The substitution is expanded symbolically in the parameter, and every
    coefficient polynomial of every generator is membership-tested.  Because
    the substitution is a ring automorphism it suffices to test generators.
    """
    G = buchberger(gens, order=order, max_steps=max_steps)
    for g in gens:
        for coeff_poly in ga_coefficients(g):
            if not coeff_poly.is_zero() and not ideal_member(coeff_poly, G):
                return False
    return True
