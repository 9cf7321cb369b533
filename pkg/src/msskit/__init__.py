"""msskit: combinatorics of superstable-orbit symbol sequences in unimodal maps.

The package covers the full tool chain for MSS-sequences (U-sequences):
parity-lexicographic ordering and shift-maximality (``sequences``), the
canonical block form and a structured maximality test (``structure``),
constructive and brute-force enumeration (``generators``), orbit
composition and factorization into primary sequences (``composition``),
closed-form counting (``counting``), and numerical location of each
sequence's superstable parameter in the logistic family (``locator``).
"""

__version__ = "1.0.0"

from .errors import (
    LocateError,
    MssKitError,
    NotAdmissibleError,
    NotMssError,
    RunLengthError,
    ShapeError,
)
from .sequences import (
    AdmissibleSeq,
    Ordering,
    compress_exponents,
    decode_signs,
    expand_exponents,
    is_shift_maximal,
    is_shift_maximal_signs,
    max_l_run,
    parity_lex_cmp,
    parse_sequence,
    r_count_before,
    shift,
    sign_sequence,
    sort_parity_lex,
)
from .structure import (
    BlockForm,
    StructuredVerdict,
    block_decompose,
    check_block_constraints,
    check_run_bound,
    is_mss_structured,
)
from .generators import (
    PeriodEnumeration,
    derive_later_blocks,
    enumerate_blocks,
    enumerate_mss_bruteforce,
    enumerate_mss_structured,
)
from .composition import (
    FactorTree,
    Parity,
    check_stem_shape,
    compose,
    factor_all,
    factor_interleaved_core,
    factor_once,
    factor_tree,
    is_primary,
    r_parity,
)
from .counting import (
    CountReport,
    DivisorSet,
    count_blocks,
    count_nonprimary_cores,
    count_nonprimary_single_group,
    divisor_set,
    proper_divisors,
)
from .locator import (
    LocatedSequence,
    MapParam,
    itinerary,
    locate,
    order_report,
    verify_order,
)

__all__ = [
    "__version__",
    "MssKitError",
    "NotAdmissibleError",
    "RunLengthError",
    "NotMssError",
    "ShapeError",
    "LocateError",
    "AdmissibleSeq",
    "Ordering",
    "parse_sequence",
    "expand_exponents",
    "compress_exponents",
    "r_count_before",
    "sign_sequence",
    "decode_signs",
    "shift",
    "parity_lex_cmp",
    "is_shift_maximal",
    "is_shift_maximal_signs",
    "max_l_run",
    "sort_parity_lex",
    "BlockForm",
    "StructuredVerdict",
    "block_decompose",
    "check_run_bound",
    "check_block_constraints",
    "is_mss_structured",
    "PeriodEnumeration",
    "enumerate_blocks",
    "derive_later_blocks",
    "enumerate_mss_structured",
    "enumerate_mss_bruteforce",
    "Parity",
    "r_parity",
    "compose",
    "factor_once",
    "factor_all",
    "is_primary",
    "FactorTree",
    "factor_tree",
    "check_stem_shape",
    "factor_interleaved_core",
    "DivisorSet",
    "divisor_set",
    "proper_divisors",
    "count_nonprimary_single_group",
    "count_blocks",
    "count_nonprimary_cores",
    "CountReport",
    "MapParam",
    "LocatedSequence",
    "itinerary",
    "locate",
    "verify_order",
    "order_report",
]
