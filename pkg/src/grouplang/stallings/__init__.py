"""Free groups: segment graphs, the primitive-set recognizer and its oracles."""

from .freewords import (
    FreeWord,
    commutator,
    cyclic_reduce,
    cyclically_equal,
    format_word,
    free_reduce,
    inverse,
    is_reduced,
    parse_word,
    parse_word_set,
    reduced_words,
)
from .graph import (
    EdgeEdge,
    NormalizeReport,
    PinchMove,
    SegmentGraph,
    VertexEdge,
    VertexVertex,
    apply_pinch,
    bouquet,
    enumerate_pinches,
    fold,
    fold_once,
    is_elementary_wedge,
    merge,
    normalize,
    prune,
)
from .oracles import (
    abelianization_minor_gcd,
    apply_automorphism,
    is_basis_f2,
    whitehead_automorphisms,
    whitehead_minimize,
    whitehead_primitive,
)
from .recognizer import RecognizerResult, SearchStats, clear_memo, is_primitive_set, recognize

__all__ = [
    "EdgeEdge",
    "FreeWord",
    "NormalizeReport",
    "PinchMove",
    "RecognizerResult",
    "SearchStats",
    "SegmentGraph",
    "VertexEdge",
    "VertexVertex",
    "abelianization_minor_gcd",
    "apply_automorphism",
    "apply_pinch",
    "bouquet",
    "clear_memo",
    "commutator",
    "cyclic_reduce",
    "cyclically_equal",
    "enumerate_pinches",
    "fold",
    "fold_once",
    "format_word",
    "free_reduce",
    "inverse",
    "is_basis_f2",
    "is_elementary_wedge",
    "is_primitive_set",
    "is_reduced",
    "merge",
    "normalize",
    "parse_word",
    "parse_word_set",
    "prune",
    "recognize",
    "reduced_words",
    "whitehead_automorphisms",
    "whitehead_minimize",
    "whitehead_primitive",
]
