"""Exception types shared across the package.

Every error that the command line maps to an exit code lives here, so the
mapping stays in one place: invalid input, verification failure, uncovered
case, resource cap.
"""

from __future__ import annotations


class AGraphError(Exception):
    """Base class for all package errors."""


class InvalidParameterError(AGraphError, ValueError):
    """A caller-supplied parameter violates a documented precondition."""


class LengthMismatchError(InvalidParameterError):
    """Exponent vectors of different lengths were combined."""


class ZeroIdealError(AGraphError):
    """The zero ideal (no generators) was passed to an Artinian-gated operation."""


class NonArtinianError(AGraphError):
    """The ideal misses a pure power of some variable, so its colength is infinite."""


class MoveValidationError(AGraphError):
    """A move fails one of its structural preconditions."""

    check = "move_structure"


class SourceNotGenerator(MoveValidationError):
    """A move source is not a minimal generator of the base ideal."""

    check = "source_is_generator"


class TargetParentNotGenerator(MoveValidationError):
    """A move target divided by x1 is not a minimal generator of the base ideal."""

    check = "target_parent_is_generator"


class LexOrderViolation(MoveValidationError):
    """A move pair has source >= target in the lexicographic order."""

    check = "lex_order"


class SourceNotDivisible(MoveValidationError):
    """A move source is not divisible by x1, so source/x1 is undefined."""

    check = "source_divisible_by_x1"


class TargetNotDivisible(MoveValidationError):
    """A move target is not divisible by x1, so target/x1 is undefined."""

    check = "target_divisible_by_x1"


class TerminalVertexError(AGraphError):
    """Successor selection was attempted on the terminal ideal <x1^d, x2, ..., xn>."""


class EmptySHatError(AGraphError):
    """Successor selection produced an empty candidate set; not covered by the move calculus."""


class UncoveredCaseError(AGraphError):
    """The canonical successor construction ran into a configuration the move
    calculus does not cover.  Carries the offending ideal serialized as JSON so
    the instance can be reproduced and analyzed."""

    def __init__(self, message: str, ideal_json: str | None = None,
                 instances: list["UncoveredCaseError"] | None = None):
        super().__init__(message)
        self.ideal_json = ideal_json
        self.instances = instances or []


class ResourceCapExceeded(AGraphError):
    """A configurable resource bound was hit before the computation finished."""


class VertexCapExceeded(ResourceCapExceeded):
    """Vertex enumeration hit its cap; carries the partial count, never a silent truncation."""

    def __init__(self, message: str, partial_count: int):
        super().__init__(message)
        self.partial_count = partial_count


class StepCapExceeded(ResourceCapExceeded):
    """A Groebner basis computation exceeded its reduction-step cap."""


class PathCapExceeded(ResourceCapExceeded):
    """A move path exceeded the iteration cap; would indicate a weight-monotonicity failure."""


class ZeroRowError(AGraphError):
    """A weight matrix row is zero; no subgroup can pair nontrivially against it."""


class IncompatibleWeightsError(AGraphError):
    """No arithmetic-progression subgroup exists; names the violating constraint vector."""

    def __init__(self, message: str, vector: tuple[int, ...]):
        super().__init__(message)
        self.vector = vector


class VerificationError(AGraphError):
    """A certified property failed; carries a serializable report of the failure."""

    def __init__(self, message: str, report: object = None):
        super().__init__(message)
        self.report = report
