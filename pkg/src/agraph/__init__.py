"""Exact toolkit for Borel-fixed monomial ideals and connectedness certificates.

The package enumerates the Borel-fixed Artinian monomial ideals of a given
colength, computes the canonical colength-preserving moves between them and
the one-parameter ideal families realizing those moves, verifies everything
with an exact-rational Groebner engine, and assembles the results into a
certified spanning tree.
"""

from .borel import (
    VertexSet,
    brute_force_enumerate,
    enumerate_borel_fixed,
    is_borel_fixed,
    terminal_ideal,
)
from .errors import (
    AGraphError,
    EmptySHatError,
    IncompatibleWeightsError,
    InvalidParameterError,
    LengthMismatchError,
    LexOrderViolation,
    NonArtinianError,
    PathCapExceeded,
    ResourceCapExceeded,
    SourceNotGenerator,
    StepCapExceeded,
    TargetParentNotGenerator,
    TerminalVertexError,
    UncoveredCaseError,
    VerificationError,
    VertexCapExceeded,
    ZeroIdealError,
    ZeroRowError,
)
from .families import (
    DEFAULT_T_SAMPLES,
    EdgeFamily,
    FamilyReport,
    build_edge_family,
    generators_at,
    transfer_coefficient,
    verify_family,
)
from .graphs import (
    AGraph,
    Edge,
    agraph_from_json,
    build_spanning_tree,
    complete_graph,
    export_dot,
    export_json,
    is_connected,
)
from .groebner import (
    GroebnerBasis,
    buchberger,
    ideal_member,
    is_ga_fixed_poly_ideal,
    leading_monomial,
    normal_form,
    poly_colength,
)
from .monomials import (
    EQ,
    GT,
    LT,
    Monomial,
    MonomialIdeal,
    divides,
    lex_compare,
    minimalize,
    monomial_weight,
)
from .moves import (
    Derivation,
    Move,
    MoveReport,
    SelectionData,
    apply_move,
    canonical_successor,
    is_valid_move,
    path_to_terminal,
    selection_data,
)
from .polynomials import (
    Polynomial,
    compatible_scales,
    ga_apply,
    ga_coefficients,
    torus_apply,
)
from .subgroups import (
    CompatiblePair,
    WeightMatrix,
    pick_compatible_pair,
    pick_one_ps,
    pick_two_ps,
    simplex_tgraph,
    verify_separation,
)

__version__ = "0.1.0"
