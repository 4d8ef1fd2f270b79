"""Exact-arithmetic workbench for finite matroid theory."""

from .errors import (
    DimensionMismatch,
    ElementInBase,
    ElementNotInBase,
    ElementOutOfRange,
    ElementsNotInCircuit,
    GroundTooLarge,
    InvalidOperator,
    MatroidLabError,
    NotABase,
    NotACircuit,
    NotAMatroid,
    NotAMinorCircuit,
    NotAPartition,
    ParseError,
    ZeroInverse,
)
from .linalg import (
    GF2,
    GF3,
    GF5,
    Q,
    FieldSpec,
    Matrix,
    format_matrix,
    kernel_basis,
    parse_matrix,
    rank,
    rref,
    solve,
)
from .matroids import (
    AxiomReport,
    DualMatroid,
    ExplicitMatroid,
    GroundSet,
    LinearMatroid,
    Matroid,
    MinorMatroid,
    Position,
    Tameness,
    check_axioms,
    format_set,
    format_set_system,
    mask_of,
    oracle_difference,
    parse_set,
    parse_set_system,
    uniform_matroid,
)
from .spaces import (
    SpaceOperator,
    dual_operator,
    find_non_matroidal_ie,
    format_operator_table,
    is_exchange,
    is_idempotent,
    is_ie,
    operators_equal,
    parse_operator_table,
    span,
)
from .representation import (
    VectorFamily,
    ThinSumsMatroid,
    dual_representation,
    is_thin_family,
    support,
    thin_sums_system,
    vector_matroid,
    verify_ts_duality,
)
from .graphs import (
    GraphicMatroid,
    MultiGraph,
    bond_matroid,
    component_count,
    cycle_matroid,
    format_graph,
    minimal_edge_cuts,
    parse_graph,
    signed_incidence,
    verify_graphic_representable,
)
from .corpus import CorpusSpec, Instance, Lcg, generate_corpus
from .verify import ReportLine, acceptance_spec, render_report, verify_corpus

__version__ = "0.1.0"
