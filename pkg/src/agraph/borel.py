"""Borel-fixed monomial ideals and exhaustive vertex enumeration.

A monomial ideal is Borel-fixed (in characteristic zero) when for every
member m divisible by x_i the exchange m * x_{i+1} / x_i stays in the ideal.
Equivalently, the standard-monomial set is closed under the reverse exchange
that replaces one x_{i+1} by x_i.  Checking minimal generators suffices
because the exchange commutes with multiplication by the cofactor; the test
suite asserts this reduction against the all-members definition.

Enumeration works on complements: the standard-monomial sets of colength-d
Borel ideals are exactly the size-d sets that contain 1 and are closed under
both division and the reverse exchange.  Those closure conditions are local,
so a depth-first search that inserts monomials in a fixed linear extension
visits every admissible set exactly once.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import InvalidParameterError, VertexCapExceeded
from .monomials import (
    Monomial,
    MonomialIdeal,
    minimalize,
    times_var,
    unit,
)

DEFAULT_VERTEX_CAP = 10 ** 6


def _exchange_up(m: Monomial, i: int) -> Monomial:
    """m * x_{i+1} / x_i with i 1-based; caller guarantees x_i | m."""
    e = list(m)
    e[i - 1] -= 1
    e[i] += 1
    return tuple(e)


def _exchange_down(m: Monomial, i: int) -> Monomial:
    """m * x_i / x_{i+1} with i 1-based; caller guarantees x_{i+1} | m."""
    e = list(m)
    e[i] -= 1
    e[i - 1] += 1
    return tuple(e)


def is_borel_fixed(I: MonomialIdeal) -> bool:
    """Generator criterion: every x_i -> x_{i+1} exchange of a generator stays inside."""
    for g in I.gens:
        for i in range(1, I.n):
            if g[i - 1] > 0 and not I.contains(_exchange_up(g, i)):
                return False
    return True


def is_borel_fixed_members(I: MonomialIdeal, extra_degrees: int = 2) -> bool:
    """Definition quantified over all members up to max generator degree + extra_degrees.

    Exponentially slower than :func:`is_borel_fixed`; kept as the independent
    formulation for equivalence tests at oracle scale.
    """
    from .monomials import monomials_up_to_degree

    top = I.max_gen_degree() + extra_degrees
    for m in monomials_up_to_degree(I.n, top):
        if not I.contains(m):
            continue
        for i in range(1, I.n):
            if m[i - 1] > 0 and not I.contains(_exchange_up(m, i)):
                return False
    return True


def is_borel_fixed_by_complement(I: MonomialIdeal) -> bool:
    """Complement criterion: standard monomials closed under replacing one x_{i+1} by x_i."""
    std = I.standard_monomials()
    for m in std:
        for i in range(1, I.n):
            if m[i] > 0 and _exchange_down(m, i) not in std:
                return False
    return True


def terminal_ideal(n: int, d: int) -> MonomialIdeal:
    """The sink of the move dynamics: <x1^d, x2, ..., xn>."""
    if n < 1 or d < 1:
        raise InvalidParameterError("need n >= 1 and d >= 1")
    gens = [tuple(d if k == 0 else 0 for k in range(n))]
    for i in range(2, n + 1):
        gens.append(tuple(1 if k == i - 1 else 0 for k in range(n)))
    return MonomialIdeal(n, tuple(sorted(gens, reverse=True)))


@dataclass(frozen=True)
class VertexSet:
    """All Borel-fixed Artinian monomial ideals of colength d, canonically ordered."""

    n: int
    d: int
    ideals: tuple[MonomialIdeal, ...]

    def __len__(self) -> int:
        return len(self.ideals)

    def to_dict(self) -> dict:
        return {"n": self.n, "d": self.d, "ideals": [I.to_dict() for I in self.ideals]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @staticmethod
    def from_dict(data: dict) -> "VertexSet":
        return VertexSet(
            int(data["n"]),
            int(data["d"]),
            tuple(MonomialIdeal.from_dict(e) for e in data["ideals"]),
        )

    @staticmethod
    def from_json(text: str) -> "VertexSet":
        return VertexSet.from_dict(json.loads(text))


def _ideal_from_standard_set(n: int, std: frozenset[Monomial]) -> MonomialIdeal:
    """Minimal generators of the ideal whose standard monomials are std."""
    candidates = set()
    for m in std:
        for i in range(1, n + 1):
            nxt = times_var(m, i)
            if nxt not in std:
                candidates.add(nxt)
    gens = [
        m for m in candidates
        if all(m[i] == 0 or tuple(e - (1 if k == i else 0) for k, e in enumerate(m)) in std
               for i in range(n))
    ]
    return minimalize(n, gens)


def _insertion_key(m: Monomial) -> tuple:
    # linear extension: degree first, lex-descending inside a degree, so both
    # the divisors and the reverse-exchange targets of m come before m
    return (sum(m), tuple(-e for e in m))


def enumerate_borel_fixed(n: int, d: int,
                          max_vertices: int = DEFAULT_VERTEX_CAP) -> VertexSet:
    """Every Borel-fixed Artinian monomial ideal of colength d in n variables.

    Depth-first construction of the standard-monomial sets: a monomial may be
    added once all its one-step divisors and all its reverse-exchange targets
    are present, and additions follow the fixed linear extension so each set
    is produced exactly once.  Raises :class:`VertexCapExceeded` (with the
    partial count) instead of truncating silently.
    """
    if n < 1 or d < 1:
        raise InvalidParameterError("need n >= 1 and d >= 1")

    found: list[MonomialIdeal] = []

    def addable(m: Monomial, have: set[Monomial]) -> bool:
        for i in range(n):
            if m[i] > 0:
                div = tuple(e - (1 if k == i else 0) for k, e in enumerate(m))
                if div not in have:
                    return False
        for i in range(1, n):
            if m[i] > 0 and _exchange_down(m, i) not in have:
                return False
        return True

    def grow(std: set[Monomial], frontier: set[Monomial], last_key: tuple) -> None:
        if len(std) == d:
            if len(found) >= max_vertices:
                raise VertexCapExceeded(
                    f"vertex cap {max_vertices} hit while enumerating ({n}, {d})",
                    partial_count=len(found),
                )
            found.append(_ideal_from_standard_set(n, frozenset(std)))
            return
        for m in sorted(frontier, key=_insertion_key):
            key = _insertion_key(m)
            if key <= last_key or not addable(m, std):
                continue
            std.add(m)
            added = {times_var(m, i) for i in range(1, n + 1)} - std
            grow(std, (frontier | added) - {m}, key)
            std.remove(m)

    start = unit(n)
    grow({start}, {times_var(start, i) for i in range(1, n + 1)}, _insertion_key(start))

    found.sort(key=lambda I: I.gens)
    return VertexSet(n, d, tuple(found))


ORACLE_LIMIT = (4, 10)  # (max n, max d) for the brute-force route


def brute_force_enumerate(n: int, d: int) -> VertexSet:
    """Independent oracle: all Artinian monomial ideals of colength d, Borel-filtered.

    Enumerates every divisibility-closed size-d standard set by breadth-first
    growth with frozenset deduplication (no canonical-order pruning, no
    exchange closure), builds each complement ideal, then filters with
    :func:`is_borel_fixed`.  Deliberately a different algorithm from
    :func:`enumerate_borel_fixed` so the two can check each other.
    """
    if n < 1 or d < 1:
        raise InvalidParameterError("need n >= 1 and d >= 1")
    if n > ORACLE_LIMIT[0] or d > ORACLE_LIMIT[1]:
        raise InvalidParameterError(
            f"brute-force oracle is capped at n <= {ORACLE_LIMIT[0]}, d <= {ORACLE_LIMIT[1]}")

    level: set[frozenset[Monomial]] = {frozenset({unit(n)})}
    for _ in range(d - 1):
        nxt: set[frozenset[Monomial]] = set()
        for S in level:
            for m in S:
                for i in range(1, n + 1):
                    cand = times_var(m, i)
                    if cand in S:
                        continue
                    ok = all(
                        cand[k] == 0
                        or tuple(e - (1 if j == k else 0) for j, e in enumerate(cand)) in S
                        for k in range(n)
                    )
                    if ok:
                        nxt.add(S | {cand})
        level = nxt

    ideals = [_ideal_from_standard_set(n, S) for S in level]
    borel = [I for I in ideals if is_borel_fixed(I)]
    borel.sort(key=lambda I: I.gens)
    return VertexSet(n, d, tuple(borel))
