"""Hardness gadgetry for simultaneous graph drawing, materialized: exact
3-Partition reductions, integer-grid drawings with verified right-angle
crossings, and checkable bounded-crossing certificates."""

from .certificates import (
    CrossingStructure,
    construct_certificate_1sefe,
    min_private_edge_crossings,
    planarize,
    planarize_detailed,
    verify_certificate,
)
from .drawing import (
    CrossingRecord,
    CrossingReport,
    GridDrawing,
    Violation,
    construct_drawing,
    decode_solution,
    verify_drawing,
)
from .errors import (
    FormatError,
    InconsistentStructure,
    InfeasibleParameters,
    InstanceValidationError,
    MalformedDrawing,
    NotAReducedInstance,
    SimgadgetError,
    SizeLimitExceeded,
    SolutionMismatch,
    UnknownEdge,
    UnmappedVertex,
    UnsupportedMode,
)
from .geometry import Crossing, Overlap, segments_properly_cross
from .gracsim import (
    GadgetIndex,
    SliceSpec,
    TransversalPath,
    build_pumpkin_subdivided,
    build_slice_subdivided,
    reduce_gracsim,
)
from .graphs import (
    LABELS,
    P1,
    P2,
    SHARED,
    Multigraph,
    SefeInstance,
    edge_key,
    parse_edge_key,
    planarity_test,
    simplify,
    split_layers,
)
from .sefe import (
    KSefeGadgetIndex,
    KSlice,
    KTransversalPath,
    expand_to_k,
    reduce_1sefe,
    wheel_instance,
)
from .svg import emit_svg
from .threep import (
    ThreePartitionInstance,
    ThreePartitionSolution,
    check_solution,
    generate_yes_instance,
    solve_brute_force,
    validate_instance,
    value_triples,
    verify_solution,
)

__version__ = "0.1.0"

__all__ = [
    "CrossingRecord",
    "CrossingReport",
    "Crossing",
    "CrossingStructure",
    "FormatError",
    "GadgetIndex",
    "GridDrawing",
    "InconsistentStructure",
    "InfeasibleParameters",
    "InstanceValidationError",
    "KSefeGadgetIndex",
    "KSlice",
    "KTransversalPath",
    "LABELS",
    "MalformedDrawing",
    "Multigraph",
    "NotAReducedInstance",
    "Overlap",
    "P1",
    "P2",
    "SHARED",
    "SefeInstance",
    "SimgadgetError",
    "SizeLimitExceeded",
    "SliceSpec",
    "SolutionMismatch",
    "ThreePartitionInstance",
    "ThreePartitionSolution",
    "TransversalPath",
    "UnknownEdge",
    "UnmappedVertex",
    "UnsupportedMode",
    "Violation",
    "build_pumpkin_subdivided",
    "build_slice_subdivided",
    "check_solution",
    "construct_certificate_1sefe",
    "construct_drawing",
    "decode_solution",
    "edge_key",
    "emit_svg",
    "expand_to_k",
    "generate_yes_instance",
    "min_private_edge_crossings",
    "parse_edge_key",
    "planarity_test",
    "planarize",
    "planarize_detailed",
    "reduce_1sefe",
    "reduce_gracsim",
    "segments_properly_cross",
    "simplify",
    "solve_brute_force",
    "split_layers",
    "validate_instance",
    "value_triples",
    "verify_certificate",
    "verify_drawing",
    "verify_solution",
    "wheel_instance",
]
