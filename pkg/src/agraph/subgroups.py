"""Generic one- and two-parameter subgroup selection against integer weights.

Given torus weights e_i (rows of a matrix), a one-parameter subgroup with
exponent vector a keeps all weights nontrivial iff <a, e_i> != 0 for every
row; a two-parameter subgroup additionally has to separate distinct rows.
Instead of sampling, the pickers build a deterministic witness: with
M = 1 + max |entry|, the vector (M^(n-1), ..., M, 1) pairs to a base-M
expansion with digits below M, which cannot vanish on a nonzero row.

The constrained pickers look for arithmetic-progression exponent vectors
(c, c-p, ..., c-(n-1)p) with p >= 1, the diagonal forms that commute with
the unipotent action up to the scaling u -> t^p u.  For those, feasibility
of a constraint vector v depends only on (sum v_j, sum (j-1) v_j); when both
vanish the constraint is unsatisfiable and is reported by name.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .errors import (
    IncompatibleWeightsError,
    InvalidParameterError,
    ZeroRowError,
)


@dataclass(frozen=True)
class WeightMatrix:
    """Integer torus weights, one row per eigencoordinate."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_rows(rows) -> "WeightMatrix":
        rows = tuple(tuple(int(e) for e in r) for r in rows)
        if not rows:
            raise InvalidParameterError("weight matrix needs at least one row")
        n = len(rows[0])
        if n < 1 or any(len(r) != n for r in rows):
            raise InvalidParameterError("rows must share a positive length")
        return WeightMatrix(n, rows)

    def zero_rows(self) -> list[int]:
        return [i for i, r in enumerate(self.rows) if all(e == 0 for e in r)]

    def duplicate_pairs(self) -> list[tuple[int, int]]:
        out = []
        for i in range(len(self.rows)):
            for k in range(i + 1, len(self.rows)):
                if self.rows[i] == self.rows[k]:
                    out.append((i, k))
        return out

    def to_dict(self) -> dict:
        return {"n": self.n, "rows": [list(r) for r in self.rows]}

    @staticmethod
    def from_dict(data: dict) -> "WeightMatrix":
        return WeightMatrix.from_rows(data["rows"])

    @staticmethod
    def from_json(text: str) -> "WeightMatrix":
        return WeightMatrix.from_dict(json.loads(text))


@dataclass(frozen=True)
class CompatiblePair:
    """Encodes the diagonal subgroup diag(t^c, t^(c-p), ..., t^(c-(n-1)p))."""

    c: int
    p: int

    def __post_init__(self):
        if self.p < 1:
            raise InvalidParameterError("compatibility exponent p must be >= 1")

    def exponents(self, n: int) -> tuple[int, ...]:
        return tuple(self.c - i * self.p for i in range(n))

    def to_dict(self) -> dict:
        return {"c": self.c, "p": self.p}


def _dot(a, v) -> int:
    return sum(x * y for x, y in zip(a, v))


def _constraints(W: WeightMatrix) -> list[tuple[str, tuple[int, ...]]]:
    """Rows plus all differences of distinct rows, each tagged for reporting."""
    out: list[tuple[str, tuple[int, ...]]] = [
        (f"row {i}", r) for i, r in enumerate(W.rows)
    ]
    for i in range(len(W.rows)):
        for k in range(i + 1, len(W.rows)):
            if W.rows[i] != W.rows[k]:
                diff = tuple(x - y for x, y in zip(W.rows[i], W.rows[k]))
                out.append((f"rows {i}-{k}", diff))
    return out


def pick_one_ps(W: WeightMatrix) -> tuple[int, ...]:
    """Deterministic exponent vector pairing nonzero against every row."""
    if W.zero_rows():
        raise ZeroRowError(f"zero rows at indices {W.zero_rows()}")
    M = 1 + max(abs(e) for r in W.rows for e in r)
    return tuple(M ** (W.n - 1 - i) for i in range(W.n))


def pick_two_ps(W: WeightMatrix) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Two exponent vectors jointly separating rows and row differences.

    The base-M vector already pairs nonzero against every constraint, so no
    joint condition can degenerate whatever the second vector is; all-ones is
    the canonical companion.  Identical rows cannot be separated and are
    excluded from the constraints, mirroring the distinctness hypothesis.
    """
    if W.zero_rows():
        raise ZeroRowError(f"zero rows at indices {W.zero_rows()}")
    entries = [abs(e) for _, v in _constraints(W) for e in v]
    M = 1 + max(entries)
    a = tuple(M ** (W.n - 1 - i) for i in range(W.n))
    b = (1,) * W.n
    return a, b


def verify_separation(W: WeightMatrix, a, b=None) -> tuple[bool, list[dict]]:
    """Independent recheck of every inequality, however (a, b) were produced.

    With a alone, every row must pair nonzero (the fixed-point condition);
    with b given, rows and distinct-row differences must avoid the joint zero
    (the edge-separation condition).  Returns (ok, violations).
    """
    a = tuple(int(x) for x in a)
    if len(a) != W.n:
        raise InvalidParameterError(f"expected {W.n} exponents, got {len(a)}")
    if b is not None:
        b = tuple(int(x) for x in b)
        if len(b) != W.n:
            raise InvalidParameterError(f"expected {W.n} exponents, got {len(b)}")
    violations = []
    if b is None:
        for i, row in enumerate(W.rows):
            if _dot(a, row) == 0:
                violations.append({"constraint": f"row {i}", "vector": list(row),
                                   "pairing": 0})
    else:
        for tag, v in _constraints(W):
            if _dot(a, v) == 0 and _dot(b, v) == 0:
                violations.append({"constraint": tag, "vector": list(v),
                                   "pairing": [0, 0]})
    return not violations, violations


def _sigma_tau(v: tuple[int, ...]) -> tuple[int, int]:
    return sum(v), sum(i * e for i, e in enumerate(v))


def pick_compatible_pair(W: WeightMatrix) -> tuple[CompatiblePair, CompatiblePair]:
    """Two arithmetic-progression subgroups avoiding every constraint.

    An exponent vector (c, c-p, ..., c-(n-1)p) pairs with v to
    c*sigma(v) - p*tau(v) where sigma sums the entries and tau weights them
    by position; when both functionals vanish on some v no choice works and
    that vector is reported.  Otherwise a small verified search over p >= 1
    and c = 0, 1, -1, 2, -2, ... returns the first two witnesses.
    """
    if W.zero_rows():
        raise ZeroRowError(f"zero rows at indices {W.zero_rows()}")
    constraints = _constraints(W)
    for tag, v in constraints:
        if _sigma_tau(v) == (0, 0):
            raise IncompatibleWeightsError(
                f"constraint {tag} has vanishing sum and position-weighted sum", v)

    def valid(c: int, p: int) -> bool:
        return all(c * s - p * t != 0 for s, t in map(_sigma_tau, (v for _, v in constraints)))

    found: list[CompatiblePair] = []
    limit = 2 * len(constraints) + 4
    for p in range(1, limit):
        for c in [0] + [s * k for k in range(1, limit) for s in (1, -1)]:
            if valid(c, p):
                pair = CompatiblePair(c, p)
                if pair not in found:
                    found.append(pair)
                if len(found) == 2:
                    return found[0], found[1]
    raise InvalidParameterError("no compatible pair found in the search window")


def simplex_tgraph(n: int):
    """Fixed-point graph of the diagonal action on projective n-space.

    The n+1 coordinate points are the fixed points and every coordinate line
    joins two of them, so the graph is the complete graph K_{n+1}, the
    1-skeleton of the standard n-simplex.
    """
    from .graphs import complete_graph

    if n < 1:
        raise InvalidParameterError("need n >= 1")
    return complete_graph([f"p{i}" for i in range(n + 1)])


def picker_audit(W: WeightMatrix, a, b=None,
                 pairs: Optional[tuple[CompatiblePair, CompatiblePair]] = None) -> dict:
    """Machine-readable audit: pairings per constraint, duplicates, verdict."""
    ok, violations = verify_separation(W, a, b)
    scope = W.rows if b is None else [v for _, v in _constraints(W)]
    audit = {
        "n": W.n,
        "a": list(a),
        "pairings_a": [_dot(a, v) for v in scope],
        "duplicate_rows": [list(p) for p in W.duplicate_pairs()],
        "verified": ok,
        "violations": violations,
    }
    if b is not None:
        audit["b"] = list(b)
        audit["pairings_b"] = [_dot(b, v) for v in scope]
    if pairs is not None:
        audit["compatible_pairs"] = [pairs[0].to_dict(), pairs[1].to_dict()]
    return audit
