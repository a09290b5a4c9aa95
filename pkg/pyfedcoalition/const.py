PYFEDCOALITION_VERSION = "0.1.0"

SENTRY_URL = None

# guards
DEFAULT_MAX_CLIQUE_NODES = 128
DEFAULT_ENUM_LIMIT = 10**6
DEFAULT_ORACLE_CAP = 15
UTILITY_TOLERANCE = 1e-9

# clique cover tie-breaks
TIE_BREAK_MAX_CARDINALITY = "max-cardinality"
TIE_BREAK_LEXICOGRAPHIC = "lexicographic"
TIE_BREAKS = (TIE_BREAK_MAX_CARDINALITY, TIE_BREAK_LEXICOGRAPHIC)

MERGE_KIND_CYCLE = "cycle"
MERGE_KIND_PATH = "path"
MERGE_KIND_NEIGHBORS = "neighbors"
MERGE_KINDS = (MERGE_KIND_CYCLE, MERGE_KIND_PATH, MERGE_KIND_NEIGHBORS)

MERGE_MODE_STRICT = "strict-independence"
MERGE_MODE_REACHABILITY = "reachability"
MERGE_MODES = (MERGE_MODE_STRICT, MERGE_MODE_REACHABILITY)

FINDING_FREE_RIDER = "free-rider"
FINDING_CONFLICT = "conflict"
FINDING_BLOCKING_MERGE = "blocking-merge"

DIRECTION_INCOMING = "incoming"
DIRECTION_OUTGOING = "outgoing"

# instance generation
WEIGHT_DIST_UNIFORM = "uniform"
WEIGHT_DIST_CONSTANT = "constant"
DEFAULT_BENEFIT_DENSITY = 0.5
DEFAULT_WEIGHT_LO = 0.1
DEFAULT_WEIGHT_HI = 1.0
DEFAULT_SEED = 0

DEFAULT_SWEEP_ALPHAS = (0.05, 0.1, 0.2, 0.3, 0.4)
DEFAULT_SWEEP_TRIALS = 5
DEFAULT_SWEEP_N = 10

OUTPUT_JSON = "json"
OUTPUT_TEXT = "text"

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_LIMIT = 3
EXIT_IO = 4

# instance JSON keys
KEY_N = "n"
KEY_BENEFIT = "benefit"
KEY_COMPETING = "competing"
KEY_LABELS = "labels"
KEY_SRC = "src"
KEY_DST = "dst"
KEY_WEIGHT = "w"

DOT_BENEFIT_COLOR = "black"
DOT_COMPETING_COLOR = "red"
