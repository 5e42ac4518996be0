"""Exact l1 filling norms, order homotopies, and acyclicity witnesses.

The package works with finite truncated semisimplicial sets over exact
rational arithmetic: homology via integer normal forms, minimal fillings
via an exact simplex method, the W property and its constructive filling
pipeline on finite posets, interweaving of cofinal sequences, the monoid
of co-finite order embeddings with its bar-construction combinatorics, and
binate-structure witnesses in an eventually-constant lamplighter.
"""

from .complexes import (
    Chain,
    Cone,
    SemisimplicialSet,
    SimplicialMap,
    augment,
    boundary,
    build_complex,
    cone,
    cone_fill,
    format_fraction,
    is_reduced_cycle,
    nerve_of_monoid,
    nerve_of_poset,
    parse_fraction,
)
from .embeddings import (
    CofiniteEmbedding,
    IndexedSequence,
    StreamEmbedding,
    SubsequenceChain,
    bar_face,
    compose,
    embeddings_equal,
    monoid_simplicial_identities,
    orbit_index,
    relative_embedding,
    verify_face_commutation,
)
from .errors import (
    CarrierViolation,
    CheckError,
    DanglingFace,
    DimensionCapExceeded,
    FillerFailure,
    HorizonExhausted,
    IdentityViolation,
    InfiniteSupport,
    InputError,
    InvalidWitness,
    L1FillError,
    LevelMismatch,
    NoIdentity,
    NotABoundary,
    NotACycle,
    NotAssociative,
    NotComparable,
    TruncationTooShallow,
    WindowTooShort,
    WPropertyFailure,
)
from .filling import (
    INFINITE,
    FillingCertificate,
    UniformConstantReport,
    cycle_space,
    min_l1_fill,
    uniform_constant,
    verify_constant,
)
from .homology import (
    HomologyResult,
    boundary_matrix,
    cohomology_betti,
    is_boundary,
    reduced_homology,
    smith_normal_form,
)
from .homotopy import (
    Carrier,
    HomotopyTables,
    SubComplex,
    bottom_vertex_filler,
    carrier_homotopy,
    join_fill_right,
    lp_filler,
    order_carrier,
    order_homotopy,
    transfer_filling,
    w_pipeline,
    whole_complex_carrier,
)
from .lamplighter import (
    BinateWitness,
    LampElement,
    commutator,
    lamp_compose,
    make_binate_witness,
    perm_compose,
    perm_identity,
    perm_inverse,
    validate_perm,
    verify_binate,
    verify_commuting_conjugates,
)
from .posets import (
    BUILTIN_SYSTEMS,
    CofinalSequence,
    FinitePoset,
    SequenceSystem,
    WWitnessTable,
    check_subposet_closure,
    check_w,
    find_witness_table,
    inclusion_map,
    integer_blocks,
    integer_line,
    interweave,
    is_subsequence,
    product_system,
    witness_map,
)

__version__ = "0.1.0"

__all__ = [
    "augment",
    "bar_face",
    "BinateWitness",
    "bottom_vertex_filler",
    "boundary",
    "boundary_matrix",
    "build_complex",
    "BUILTIN_SYSTEMS",
    "Carrier",
    "carrier_homotopy",
    "CarrierViolation",
    "Chain",
    "check_subposet_closure",
    "check_w",
    "CheckError",
    "CofinalSequence",
    "CofiniteEmbedding",
    "cohomology_betti",
    "commutator",
    "compose",
    "cone",
    "Cone",
    "cone_fill",
    "cycle_space",
    "DanglingFace",
    "DimensionCapExceeded",
    "embeddings_equal",
    "FillerFailure",
    "FillingCertificate",
    "find_witness_table",
    "FinitePoset",
    "format_fraction",
    "HomologyResult",
    "HomotopyTables",
    "HorizonExhausted",
    "IdentityViolation",
    "inclusion_map",
    "IndexedSequence",
    "INFINITE",
    "InfiniteSupport",
    "InputError",
    "integer_blocks",
    "integer_line",
    "interweave",
    "InvalidWitness",
    "is_boundary",
    "is_reduced_cycle",
    "is_subsequence",
    "join_fill_right",
    "L1FillError",
    "lamp_compose",
    "LampElement",
    "LevelMismatch",
    "lp_filler",
    "make_binate_witness",
    "min_l1_fill",
    "monoid_simplicial_identities",
    "nerve_of_monoid",
    "nerve_of_poset",
    "NoIdentity",
    "NotABoundary",
    "NotACycle",
    "NotAssociative",
    "NotComparable",
    "orbit_index",
    "order_carrier",
    "order_homotopy",
    "parse_fraction",
    "perm_compose",
    "perm_identity",
    "perm_inverse",
    "product_system",
    "reduced_homology",
    "relative_embedding",
    "SemisimplicialSet",
    "SequenceSystem",
    "SimplicialMap",
    "smith_normal_form",
    "StreamEmbedding",
    "SubComplex",
    "SubsequenceChain",
    "transfer_filling",
    "TruncationTooShallow",
    "uniform_constant",
    "UniformConstantReport",
    "validate_perm",
    "verify_binate",
    "verify_commuting_conjugates",
    "verify_constant",
    "verify_face_commutation",
    "w_pipeline",
    "whole_complex_carrier",
    "WindowTooShort",
    "witness_map",
    "WPropertyFailure",
    "WWitnessTable",
]
