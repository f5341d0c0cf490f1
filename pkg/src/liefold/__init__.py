"""Exact representation-theoretic computations for types A, B, C.

The engine decomposes tensor products of irreducible representations
of the complex simple Lie algebras sl_n, so_{2n+1} and sp_{2n} in
exact integer arithmetic, and studies the folding correspondence that
matches selfdual SL representations with Spin/Sp representations:
A_{2n-1} with B_n (the even pair) and A_{2n} with C_n (the odd pair).
On top of the engine sit triple invariant counts, pair tables, lattice
scans for missing triples, and the comparisons the tables suggest.
"""

from .errors import (
    LieFoldError,
    MultiplicityOverflow,
    NotSelfdual,
    ResourceLimitExceeded,
    WeightParseError,
)
from .rootdata import (
    DominantWeight,
    Family,
    RootDatum,
    Weight,
    build_root_datum,
    inner_product,
    make_dominant_shifted,
    simple_reflection,
)
from .characters import (
    DEFAULT_CACHE_CAPACITY,
    WeightTable,
    cache_stats,
    dominant_weight_multiplicities,
    full_weight_system,
    set_cache_capacity,
    weyl_dimension,
    weyl_orbit,
)
from .tensor import (
    Decomposition,
    decomposition_cache_stats,
    dual_weight,
    multiplicity_of_trivial,
    set_decomposition_cache_capacity,
    tensor_decompose,
    tensor_decompose_oracle,
)
from .folding import (
    CentralCharacter,
    PairKind,
    TwistedCharacterReport,
    central_char_sl_even,
    central_char_sl_odd,
    central_char_sp,
    central_char_spin,
    fold_even,
    fold_odd,
    twisted_spin_character,
    unfold_even,
    unfold_odd,
)
from .analysis import (
    DEFAULT_CELL_LIMIT,
    DEFAULT_TRIPLE_LIMIT,
    PairTableCell,
    QuestionOneReport,
    QuestionTwoReport,
    ScanReport,
    SpecialCaseReport,
    TripleReport,
    build_table,
    even_multiplicity_check,
    pair_table_cell,
    question1_compare,
    question2_compare,
    scan_missing,
    special_case_counts,
    triple_report,
    verify_conjecture,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # errors
    "LieFoldError",
    "WeightParseError",
    "NotSelfdual",
    "MultiplicityOverflow",
    "ResourceLimitExceeded",
    # root data
    "Weight",
    "DominantWeight",
    "Family",
    "RootDatum",
    "build_root_datum",
    "simple_reflection",
    "make_dominant_shifted",
    "inner_product",
    # characters
    "DEFAULT_CACHE_CAPACITY",
    "WeightTable",
    "weyl_dimension",
    "dominant_weight_multiplicities",
    "full_weight_system",
    "weyl_orbit",
    "set_cache_capacity",
    "cache_stats",
    # tensor products
    "Decomposition",
    "tensor_decompose",
    "tensor_decompose_oracle",
    "dual_weight",
    "multiplicity_of_trivial",
    "decomposition_cache_stats",
    "set_decomposition_cache_capacity",
    # folding
    "PairKind",
    "CentralCharacter",
    "fold_even",
    "unfold_even",
    "fold_odd",
    "unfold_odd",
    "central_char_sl_even",
    "central_char_sl_odd",
    "central_char_spin",
    "central_char_sp",
    "TwistedCharacterReport",
    "twisted_spin_character",
    # analysis
    "DEFAULT_TRIPLE_LIMIT",
    "DEFAULT_CELL_LIMIT",
    "TripleReport",
    "PairTableCell",
    "ScanReport",
    "SpecialCaseReport",
    "QuestionOneReport",
    "QuestionTwoReport",
    "triple_report",
    "pair_table_cell",
    "scan_missing",
    "verify_conjecture",
    "even_multiplicity_check",
    "special_case_counts",
    "question1_compare",
    "question2_compare",
    "build_table",
]
