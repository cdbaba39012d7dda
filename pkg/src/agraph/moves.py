"""The move calculus on Borel-fixed ideals.

A move exchanges generators in a colength-preserving way: each source m is
replaced by m/x1 and each target parent m'/x1 by the fan {m'*xj/x1 : j}.  On
standard monomials this swaps m/x1 out for m'/x1, which is why colength is
preserved while the socle weight strictly increases.  Iterating the canonical
successor drives every Borel-fixed ideal to the terminal ideal
<x1^d, x2, ..., xn>, which is what the spanning tree is built from.

Successor selection picks the top degree whose generator stratum holds more
than the pure power x1^d*, the largest variable xj seen there, and a shared
xj-power l.  When no positive power of xj is shared by two stratum
generators, l falls back to the largest xj-valuation among stratum
generators divisible by both x1 and xj; without the fallback, ideals such as
<x1^3, x1^2*x2, x2^2, x3> (whose top stratum is {x1^3, x1^2*x2}) would have
no valid successor at all.  Configurations outside the calculus raise
UncoveredCaseError with the offending ideal serialized; they are surfaced,
never guessed at.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .borel import is_borel_fixed, terminal_ideal
from .errors import (
    EmptySHatError,
    LexOrderViolation,
    MoveValidationError,
    PathCapExceeded,
    SourceNotDivisible,
    SourceNotGenerator,
    TargetNotDivisible,
    TargetParentNotGenerator,
    TerminalVertexError,
    UncoveredCaseError,
)
from .monomials import (
    Monomial,
    MonomialIdeal,
    degree,
    minimalize,
    mono_div,
    mono_str,
    times_var,
)

MULTIPLE = "multiple"
SINGLE = "single"


@dataclass(frozen=True)
class Derivation:
    """How a canonical move was selected; kept for audit and serialization."""

    case: str
    d_star: int
    j: int
    l: int
    s: Optional[int] = None        # multiple case: moved prefix length
    h: Optional[int] = None        # single case: xj-power transferred
    k: Optional[int] = None        # single case: x1-power granted
    d_prime: Optional[int] = None  # single case with l = 1: least pure x1-power in the ideal

    def to_dict(self) -> dict:
        out = {"case": self.case, "d_star": self.d_star, "j": self.j, "l": self.l}
        for name in ("s", "h", "k", "d_prime"):
            value = getattr(self, name)
            if value is not None:
                out[name] = value
        return out

    @staticmethod
    def from_dict(data: dict) -> "Derivation":
        return Derivation(
            case=data["case"], d_star=int(data["d_star"]), j=int(data["j"]),
            l=int(data["l"]),
            s=data.get("s"), h=data.get("h"), k=data.get("k"),
            d_prime=data.get("d_prime"),
        )


@dataclass(frozen=True)
class Move:
    """Ordered source/target pairs, each source lex-smaller than its target."""

    pairs: tuple[tuple[Monomial, Monomial], ...]
    derivation: Optional[Derivation] = None

    def __str__(self) -> str:
        return "; ".join(f"{mono_str(a)} -> {mono_str(b)}" for a, b in self.pairs)

    def to_dict(self) -> dict:
        out: dict = {"pairs": [{"src": list(a), "dst": list(b)} for a, b in self.pairs]}
        if self.derivation is not None:
            out["derivation"] = self.derivation.to_dict()
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @staticmethod
    def from_dict(data: dict) -> "Move":
        pairs = tuple((tuple(p["src"]), tuple(p["dst"])) for p in data["pairs"])
        deriv = Derivation.from_dict(data["derivation"]) if "derivation" in data else None
        return Move(pairs, deriv)

    @staticmethod
    def from_json(text: str) -> "Move":
        return Move.from_dict(json.loads(text))


def _check_move_structure(I: MonomialIdeal, mv: Move) -> None:
    """Raise the named validation error for the first violated precondition."""
    if not mv.pairs:
        raise MoveValidationError("a move needs at least one pair")
    gens = set(I.gens)
    seen_sources = set()
    for src, dst in mv.pairs:
        if len(src) != I.n or len(dst) != I.n:
            raise MoveValidationError("pair length does not match the ideal")
        if not tuple(src) < tuple(dst):
            raise LexOrderViolation(
                f"source {mono_str(src)} is not lex-smaller than target {mono_str(dst)}")
        if src[0] < 1:
            raise SourceNotDivisible(f"source {mono_str(src)} is not divisible by x1")
        if dst[0] < 1:
            raise TargetNotDivisible(f"target {mono_str(dst)} is not divisible by x1")
        if tuple(src) not in gens:
            raise SourceNotGenerator(
                f"source {mono_str(src)} is not a minimal generator of {I}")
        parent = tuple(e - (1 if k == 0 else 0) for k, e in enumerate(dst))
        if parent not in gens:
            raise TargetParentNotGenerator(
                f"target parent {mono_str(parent)} is not a minimal generator of {I}")
        if tuple(src) in seen_sources:
            raise MoveValidationError(f"duplicate source {mono_str(src)}")
        seen_sources.add(tuple(src))


def apply_move(I: MonomialIdeal, mv: Move) -> MonomialIdeal:
    """The ideal obtained by performing the exchange, minimalized.

    For each pair (m, m'): m is removed and m/x1 added; m'/x1 is removed and
    every m'*xj/x1 added.
    """
    _check_move_structure(I, mv)
    gens = set(I.gens)
    x1 = tuple(1 if k == 0 else 0 for k in range(I.n))
    for src, dst in mv.pairs:
        src, dst = tuple(src), tuple(dst)
        parent = mono_div(dst, x1)
        if src not in gens:
            raise SourceNotGenerator(
                f"source {mono_str(src)} already consumed by an earlier pair")
        gens.discard(src)
        if parent not in gens and parent != src:
            raise TargetParentNotGenerator(
                f"target parent {mono_str(parent)} already consumed by an earlier pair")
        gens.discard(parent)
        gens.add(mono_div(src, x1))
        for j in range(1, I.n + 1):
            gens.add(times_var(parent, j))
    return minimalize(I.n, gens)


@dataclass
class MoveReport:
    """Verdict-carrying validation result; every check is listed by name.

    Socle sizes and both weights are recorded informationally on both sides:
    the socle weight can tie or drop along a valid move (a socle element may
    stop being socle as a side effect), the standard weight cannot.
    """

    checks: list[tuple[str, bool, str]] = field(default_factory=list)
    socle_size_before: Optional[int] = None
    socle_size_after: Optional[int] = None
    socle_weight_before: Optional[int] = None
    socle_weight_after: Optional[int] = None
    standard_weight_before: Optional[int] = None
    standard_weight_after: Optional[int] = None

    @property
    def ok(self) -> bool:
        return all(passed for _, passed, _ in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append((name, passed, detail))

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "checks": [{"name": n, "ok": p, "detail": d} for n, p, d in self.checks],
            "socle_size_before": self.socle_size_before,
            "socle_size_after": self.socle_size_after,
            "socle_weight_before": self.socle_weight_before,
            "socle_weight_after": self.socle_weight_after,
            "standard_weight_before": self.standard_weight_before,
            "standard_weight_after": self.standard_weight_after,
        }


def is_valid_move(I: MonomialIdeal, mv: Move) -> MoveReport:
    """Structural checks plus: result Artinian, Borel-fixed, colength preserved.

    Also records the socle sizes on both sides and verifies that the standard
    monomials were exchanged exactly as the move promises (each src/x1 leaves,
    each dst/x1 enters).
    """
    report = MoveReport()
    try:
        _check_move_structure(I, mv)
        report.add("structure", True)
    except MoveValidationError as exc:
        report.add(getattr(exc, "check", "structure"), False, str(exc))
        return report

    try:
        J = apply_move(I, mv)
    except MoveValidationError as exc:
        report.add(getattr(exc, "check", "structure"), False, str(exc))
        return report

    report.add("artinian", J.is_artinian(), str(J))
    if not J.is_artinian():
        return report
    report.add("borel_fixed", is_borel_fixed(J), str(J))

    std_I = I.standard_monomials()
    std_J = J.standard_monomials()
    report.add("colength_preserved", len(std_I) == len(std_J),
               f"{len(std_I)} vs {len(std_J)}")

    x1 = tuple(1 if k == 0 else 0 for k in range(I.n))
    removed = {mono_div(src, x1) for src, _ in mv.pairs}
    added = {mono_div(dst, x1) for _, dst in mv.pairs}
    report.add("standard_monomial_exchange", std_J == (std_I - removed) | added)

    report.socle_size_before = len(I.socle())
    report.socle_size_after = len(J.socle())
    report.socle_weight_before = I.weight()
    report.socle_weight_after = J.weight()
    report.standard_weight_before = I.standard_weight()
    report.standard_weight_after = J.standard_weight()
    return report


@dataclass(frozen=True)
class SelectionData:
    """Top relevant degree, pivot variable, shared power, and the candidate list."""

    d_star: int
    j: int
    l: int
    s_hat: tuple[Monomial, ...]  # lex-increasing

    def to_dict(self) -> dict:
        return {"d_star": self.d_star, "j": self.j, "l": self.l,
                "s_hat": [list(m) for m in self.s_hat]}


def selection_data(I: MonomialIdeal) -> SelectionData:
    """Pick the stratum and candidates the canonical successor works on.

    Deterministic and independent of generator input order (generators are
    stored canonically).  Raises TerminalVertexError on the sink, which must
    be recognized before selection: running the selection on the terminal
    ideal itself would land in the uncovered empty-candidate case.
    """
    I._require_artinian()
    if I == terminal_ideal(I.n, I.colength()):
        raise TerminalVertexError(f"{I} is the terminal vertex")

    strata: dict[int, list[Monomial]] = {}
    for g in I.gens:
        strata.setdefault(degree(g), []).append(g)

    d_star = max(
        (deg for deg, gs in strata.items() if any(m[0] != deg for m in gs)),
        default=None,
    )
    if d_star is None:
        raise EmptySHatError(f"no generator stratum of {I} has a candidate")
    stratum = strata[d_star]

    j = max(i + 1 for m in stratum for i in range(I.n) if m[i] > 0)

    # largest power of xj dividing two stratum generators; when no positive
    # power is shared, fall back to the largest xj-valuation among stratum
    # generators divisible by both x1 and xj
    shared = [l for l in range(1, d_star + 1)
              if sum(1 for m in stratum if m[j - 1] >= l) >= 2]
    if shared:
        l = max(shared)
    else:
        vals = [m[j - 1] for m in stratum if m[0] > 0 and m[j - 1] > 0]
        l = max(vals, default=0)

    s_hat = tuple(sorted(m for m in stratum if m[j - 1] >= l and m[0] > 0))
    if not s_hat or l == 0:
        raise EmptySHatError(
            f"selection on {I} produced l={l} with candidates {[mono_str(m) for m in s_hat]}")
    return SelectionData(d_star, j, l, s_hat)


def _multiple_case(I: MonomialIdeal, sel: SelectionData) -> tuple[Move, MonomialIdeal]:
    """Grow the moved prefix until the result is Borel-fixed again.

    Each pair sends m to (x1/xj)^l * x1 * m.  When the prefix of length s
    fails the Borel criterion, the maximal variable index i with
    (x1/xi)*(x1/xj)^l * m_top in the ideal names the next candidate
    (x1/xi) * m_top, which must already sit in the candidate list.
    """
    j, l = sel.j, sel.l

    def target(m: Monomial) -> Monomial:
        e = list(m)
        e[0] += l + 1
        e[j - 1] -= l
        return tuple(e)

    s = 1
    for _ in range(len(sel.s_hat)):
        prefix = sel.s_hat[:s]
        mv = Move(tuple((m, target(m)) for m in prefix),
                  Derivation(MULTIPLE, sel.d_star, j, l, s=s))
        try:
            J = apply_move(I, mv)
        except MoveValidationError as exc:
            raise UncoveredCaseError(
                f"multiple-case move invalid at prefix {s}: {exc}", I.to_json()) from exc
        if is_borel_fixed(J):
            return mv, J
        top = prefix[-1]
        offender = None
        for i in range(j - 1, 1, -1):
            # (x1/xi) * (x1/xj)^l * m_top, i.e. the target with one xi stripped
            probe = list(target(top))
            probe[i - 1] -= 1
            if probe[i - 1] >= 0 and I.contains(tuple(probe)):
                offender = i
                break
        if offender is None:
            raise UncoveredCaseError(
                f"prefix {s} not Borel-fixed yet no offending index found", I.to_json())
        nxt = list(top)
        nxt[0] += 1
        nxt[offender - 1] -= 1
        nxt_m = tuple(nxt)
        if nxt_m not in sel.s_hat:
            raise UncoveredCaseError(
                f"continuation {mono_str(nxt_m)} missing from the candidate list", I.to_json())
        s = sel.s_hat.index(nxt_m) + 1
    raise UncoveredCaseError(
        f"prefix growth did not stabilize within {len(sel.s_hat)} steps", I.to_json())


def _single_case(I: MonomialIdeal, sel: SelectionData) -> tuple[Move, MonomialIdeal]:
    m1 = sel.s_hat[0]
    j, l, d_star = sel.j, sel.l, sel.d_star

    def shift(m: Monomial, k: int, h: int) -> Monomial:
        e = list(m)
        e[0] += k + 1
        e[j - 1] -= h
        return tuple(e)

    if l >= 2:
        probe = list(m1)
        probe[0] += l
        probe[j - 1] -= l
        if I.contains(tuple(probe)):
            h = k = l
        else:
            h = k = l - 1
        deriv = Derivation(SINGLE, d_star, j, l, h=h, k=k)
        mv = Move(((m1, shift(m1, k, h)),), deriv)
    elif l == 1:
        d_prime = next(
            e for e in range(1, I.colength() + 1)
            if I.contains(tuple(e if t == 0 else 0 for t in range(I.n))))
        k = d_prime - d_star + 1
        deriv = Derivation(SINGLE, d_star, j, l, h=1, k=k, d_prime=d_prime)
        mv = Move(((m1, shift(m1, k, 1)),), deriv)
    else:
        raise UncoveredCaseError(f"single candidate with l = 0 on {I}", I.to_json())

    try:
        J = apply_move(I, mv)
    except MoveValidationError as exc:
        raise UncoveredCaseError(f"single-case move invalid: {exc}", I.to_json()) from exc
    return mv, J


def canonical_successor(I: MonomialIdeal) -> tuple[Move, MonomialIdeal]:
    """The canonical move out of a non-terminal Borel-fixed vertex and its result.

    The returned ideal always passes :func:`is_valid_move`; anything else is
    raised as UncoveredCaseError carrying the ideal.
    """
    try:
        sel = selection_data(I)
    except EmptySHatError as exc:
        raise UncoveredCaseError(str(exc), I.to_json()) from exc

    if len(sel.s_hat) >= 2:
        mv, J = _multiple_case(I, sel)
    else:
        mv, J = _single_case(I, sel)

    report = is_valid_move(I, mv)
    if not report.ok:
        raise UncoveredCaseError(
            f"canonical move {mv} failed validation: {report.to_dict()}", I.to_json())
    return mv, J


def path_to_terminal(I: MonomialIdeal,
                     max_steps: int | None = None) -> list[tuple[Move, MonomialIdeal]]:
    """Iterate canonical successors down to the terminal ideal.

    The standard-monomial weight strictly increases along every step
    (asserted); the cap defaults to d*d*n, an upper bound for the attainable
    weight range, so hitting it would mean the monotonicity argument failed.
    """
    I._require_artinian()
    d = I.colength()
    if max_steps is None:
        max_steps = max(1, d * d * I.n)
    sink = terminal_ideal(I.n, d)
    path: list[tuple[Move, MonomialIdeal]] = []
    current = I
    weight = current.standard_weight()
    while current != sink:
        if len(path) >= max_steps:
            raise PathCapExceeded(
                f"no terminal ideal within {max_steps} moves from {I}; "
                "this would contradict weight monotonicity")
        mv, nxt = canonical_successor(current)
        nxt_weight = nxt.standard_weight()
        if nxt_weight <= weight:
            raise PathCapExceeded(
                f"standard weight did not increase along {mv}: {weight} -> {nxt_weight}")
        path.append((mv, nxt))
        current, weight = nxt, nxt_weight
    return path


def path_to_dict(I: MonomialIdeal, path: list[tuple[Move, MonomialIdeal]]) -> dict:
    return {
        "n": I.n,
        "start": I.to_dict(),
        "steps": [{"move": mv.to_dict(), "ideal": J.to_dict()} for mv, J in path],
    }
