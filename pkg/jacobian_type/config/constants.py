# Standard library imports
import os

TOOL_VERSION = "0.1.0"
SCHEMA_VERSION = "1.0"

RATIONALS = "rationals"
PRIME_FIELD = "prime_field"
FIELD_KINDS = (RATIONALS, PRIME_FIELD)

DEFAULT_FIELD = "q"

# Memoized monomial order keys per order before the cache is reset.
KEY_CACHE_LIMIT = 1_000_000

# S-pair selection of the Groebner engine; the reduced basis is the same for both.
PAIR_STRATEGIES = ("sugar", "normal")
DEFAULT_PAIR_STRATEGY = "sugar"

EXACT_LABEL = "exact"
CHAR_P_LABEL = "characteristic-p evidence"
LOCAL_SEMANTICS_LABEL = "local"
GLOBAL_SEMANTICS_LABEL = "global (non-germ semantics)"

DEFAULT_ANALYSIS_CONFIG = {
    "DMAX_FLOOR": 8,
    "DMAX_MARGIN": 3,
    "MAX_R": 50,
    "LOCAL": True,
    "T_ROWS": None,
    "WORKERS": 1,
}

DEFAULT_PRESENTATION_NAMES = {
    "PREFIX": "u",
    "F_SLOT": "s",
}
AUXILIARY_VARIABLE = "t"

LINEAR_JACOBIAN_TYPE = "linear_jacobian_type"
EXPECTED_JACOBIAN_TYPE = "expected_jacobian_type"
NEITHER = "neither"
VERDICTS = (LINEAR_JACOBIAN_TYPE, EXPECTED_JACOBIAN_TYPE, NEITHER)

CHECK_NAMES = (
    "t_table",
    "rn",
    "rt",
    "classify",
    "top_equation",
    "cross_validate",
)

# Checks that select classify steps; "cross_validate" gates the theorem checks.
ANALYSIS_STEPS = ("t_table", "rn", "rt", "classify", "top_equation")

CROSS_VALIDATION_CHECKS = {
    "reduction_bound": "rn + 1 <= rt (reduction number bounds relation type)",
    "id_equals_rn_plus_one": "id(f) = rn + 1",
    "r_at_most_id": "r(f) <= id(f)",
    "finite_range_expected_type": (
        "T_{i,d} = 0 for i <= n and 2 <= d <= dmax with dmax >= rt + 1 forces rt = rn + 1"
    ),
    "degreewise_quotient": (
        "T_{i,d} = 0 for all i <= n gives E(I)_d = 0 iff the effective quotient vanishes"
    ),
    "colon_equivalence": (
        "plane curves with (f_1:f_2) in (f_1:f): T_{2,d'} = 0 up to d gives "
        "E(I)_d = 0 iff the effective quotient vanishes"
    ),
    "left_term_sequence": (
        "plane curves: E(I)_d = 0 iff the left term and the effective quotient vanish"
    ),
    "effective_surjection": "E(I)_d = 0 forces the effective quotient to vanish",
    "t_first_row_zero": "T_{1,d} = 0 for every computed d",
    "verdict_logic": "linear implies expected; expected implies rt = rn + 1",
    "top_equation": "top equation is monic of degree id(f) in s and lies in Q",
    "published_bound": "id(f) <= L(f), and rt(I) <= L(f) for expected type",
}

STAGES = (
    "ingest",
    "build_divisor",
    "classify",
    "rees",
    "top_equation",
    "cross_validate",
    "compare",
    "write",
)

EXIT_CODES = {
    "OK": 0,
    "USAGE": 1,
    "THEOREM": 2,
    "MISMATCH": 3,
}

DEFAULT_WORKERS = 1
SLOW_TAG = "slow"

CORPUS_PATH = os.path.join(os.path.dirname(__file__), "corpus.txt")
