"""Monomials and Artinian monomial ideals with exact combinatorics.

Monomials are plain tuples of non-negative integer exponents over the
variables x1 > x2 > ... > xn (left-to-right, largest first).  Ideals are kept
canonical: the stored generators are always a divisibility antichain sorted
descending in lex, which makes ideal equality and every serialization
deterministic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    InvalidParameterError,
    LengthMismatchError,
    NonArtinianError,
    ZeroIdealError,
)

Monomial = tuple[int, ...]

# verdicts of lex_compare
LT, EQ, GT = -1, 0, 1


def _check_monomial(m: Monomial, n: int | None = None) -> Monomial:
    m = tuple(int(e) for e in m)
    if len(m) < 1:
        raise InvalidParameterError("monomial needs at least one variable")
    if any(e < 0 for e in m):
        raise InvalidParameterError(f"negative exponent in {m}")
    if n is not None and len(m) != n:
        raise LengthMismatchError(f"expected {n} exponents, got {len(m)}")
    return m


def lex_compare(a: Monomial, b: Monomial) -> int:
    """Compare two monomials in lex order with x1 > x2 > ... > xn.

    Returns LT, EQ or GT.  The exponent vectors compare like tuples: the
    leftmost differing exponent decides, larger wins.
    """
    if len(a) != len(b):
        raise LengthMismatchError(f"cannot compare lengths {len(a)} and {len(b)}")
    if a == b:
        return EQ
    return GT if tuple(a) > tuple(b) else LT


def divides(a: Monomial, b: Monomial) -> bool:
    """True iff monomial a divides monomial b (componentwise <=)."""
    if len(a) != len(b):
        raise LengthMismatchError(f"cannot divide lengths {len(a)} and {len(b)}")
    return all(x <= y for x, y in zip(a, b))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if len(a) != len(b):
        raise LengthMismatchError("monomial product needs equal lengths")
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """Quotient a / b; requires b | a."""
    if not divides(b, a):
        raise InvalidParameterError(f"{b} does not divide {a}")
    return tuple(x - y for x, y in zip(a, b))


def degree(m: Monomial) -> int:
    return sum(m)


def unit(n: int) -> Monomial:
    return (0,) * n


def variable(n: int, i: int) -> Monomial:
    """The monomial x_i (1-based) in n variables."""
    if not 1 <= i <= n:
        raise InvalidParameterError(f"variable index {i} out of range 1..{n}")
    return tuple(1 if k == i - 1 else 0 for k in range(n))


def times_var(m: Monomial, i: int) -> Monomial:
    """m * x_i with i 1-based."""
    return tuple(e + 1 if k == i - 1 else e for k, e in enumerate(m))


def monomial_weight(m: Monomial) -> int:
    """Weight of a monomial: sum of a_j * (n - j) over the exponents a_j."""
    n = len(m)
    return sum(e * (n - 1 - k) for k, e in enumerate(m))


def mono_str(m: Monomial) -> str:
    """Readable form like 'x1^2*x3'; the unit renders as '1'."""
    parts = []
    for k, e in enumerate(m):
        if e == 1:
            parts.append(f"x{k + 1}")
        elif e > 1:
            parts.append(f"x{k + 1}^{e}")
    return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators, stored canonically.

    Use :func:`minimalize` (or ``from_gens``) to build one from an arbitrary
    generating set; the constructor trusts its arguments.
    """

    n: int
    gens: tuple[Monomial, ...]

    @staticmethod
    def from_gens(n: int, gens: Iterable[Monomial]) -> "MonomialIdeal":
        return minimalize(n, gens)

    def __str__(self) -> str:
        if not self.gens:
            return "<0>"
        return "<" + ", ".join(mono_str(g) for g in self.gens) + ">"

    def is_zero(self) -> bool:
        return not self.gens

    def contains(self, m: Monomial) -> bool:
        """True iff some minimal generator divides m."""
        m = _check_monomial(m, self.n)
        return any(divides(g, m) for g in self.gens)

    def is_artinian(self) -> bool:
        """True iff the ideal contains a pure power of every variable."""
        if not self.gens:
            return False
        for i in range(self.n):
            if not any(all(e == 0 for k, e in enumerate(g) if k != i) for g in self.gens):
                return False
        return True

    def _require_artinian(self) -> None:
        if not self.gens:
            raise ZeroIdealError("the zero ideal has no finite colength")
        if not self.is_artinian():
            raise NonArtinianError(f"{self} misses a pure power of some variable")

    def standard_monomials(self) -> frozenset[Monomial]:
        """All monomials outside the ideal; finite because the ideal is Artinian.

        Breadth-first over the divisibility poset from the unit, pruning at
        ideal members.
        """
        self._require_artinian()
        std: set[Monomial] = set()
        frontier = [unit(self.n)]
        seen = {unit(self.n)}
        while frontier:
            m = frontier.pop()
            if self.contains(m):
                continue
            std.add(m)
            for i in range(1, self.n + 1):
                nxt = times_var(m, i)
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
        return frozenset(std)

    def colength(self) -> int:
        """Number of standard monomials (the constant Hilbert polynomial)."""
        return len(self.standard_monomials())

    def socle(self) -> frozenset[Monomial]:
        """Standard monomials m with x_i * m in the ideal for every i."""
        std = self.standard_monomials()
        return frozenset(
            m for m in std
            if all(self.contains(times_var(m, i)) for i in range(1, self.n + 1))
        )

    def weight(self) -> int:
        """Sum of the monomial weights over the socle."""
        return sum(monomial_weight(m) for m in self.socle())

    def standard_weight(self) -> int:
        """Sum of the monomial weights over all standard monomials.

        Unlike the socle weight this strictly increases along every canonical
        move: the standard set exchanges each source/x1 for the lex-larger,
        higher-weight target/x1 and nothing else, so it is the potential used
        for termination arguments.  (A socle element can stop being socle as
        a side effect of a move, which is why the socle weight can tie.)
        """
        return sum(monomial_weight(m) for m in self.standard_monomials())

    def max_gen_degree(self) -> int:
        return max((degree(g) for g in self.gens), default=0)

    def to_dict(self) -> dict:
        return {"n": self.n, "gens": [list(g) for g in self.gens]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @staticmethod
    def from_dict(data: dict) -> "MonomialIdeal":
        if not isinstance(data, dict) or "n" not in data or "gens" not in data:
            raise InvalidParameterError("ideal JSON needs 'n' and 'gens'")
        n = int(data["n"])
        if n < 1:
            raise InvalidParameterError("variable count must be >= 1")
        return minimalize(n, [tuple(g) for g in data["gens"]])

    @staticmethod
    def from_json(text: str) -> "MonomialIdeal":
        return MonomialIdeal.from_dict(json.loads(text))


def minimalize(n: int, gens: Iterable[Monomial]) -> MonomialIdeal:
    """The divisibility antichain generating the same ideal, canonically sorted.

    Empty input yields the zero ideal.
    """
    if n < 1:
        raise InvalidParameterError("variable count must be >= 1")
    unique = {_check_monomial(g, n) for g in gens}
    minimal = [
        g for g in unique
        if not any(h != g and divides(h, g) for h in unique)
    ]
    minimal.sort(reverse=True)
    return MonomialIdeal(n, tuple(minimal))


def monomials_of_degree(n: int, d: int) -> Iterator[Monomial]:
    """All exponent vectors of total degree d in n variables, lex descending."""
    if n == 1:
        yield (d,)
        return
    for e in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - e):
            yield (e,) + rest


def monomials_up_to_degree(n: int, d: int) -> Iterator[Monomial]:
    for k in range(d + 1):
        yield from monomials_of_degree(n, k)
