"""Define constants for hetcat."""

DOMAIN = "hetcat"

# Exit statuses
EXIT_OK = 0
EXIT_NEGATIVE = 1  # Not representable, claimed adjunction false, expectation mismatch
EXIT_INPUT_ERROR = 2  # Malformed spec, law violation, unknown name

# Configuration keys
CONF_LOGGER = "logger"
CONF_DEFAULT = "default"
CONF_LOGS = "logs"
CONF_WORKERS = "workers"
CONF_DOT_RANKDIR = "dot_rankdir"

DEFAULT_CONFIG_PATH = "config/configuration.yaml"
DEFAULT_LOG_LEVEL = "warning"
DEFAULT_WORKERS = 1
DEFAULT_DOT_RANKDIR = "LR"

# Largest poset-chain and poset-powerset accepted in spec files
MAX_CHAIN_SIZE = 64
MAX_POWERSET_SIZE = 5

LOG_LEVELS = ["critical", "error", "warning", "info", "debug"]
DOT_RANKDIRS = ["LR", "RL", "TB", "BT"]

LOG_FORMAT = "%(log_color)s%(levelname)-8s%(reset)s %(name)s: %(message)s"

# Gallery fixtures
FIXTURE_CHAIN_GALOIS = "chain-galois"
FIXTURE_POWERSET_DIAGONAL = "powerset-diagonal"
FIXTURE_FREE_DISCRETE_PREORDER = "free-discrete-preorder"
FIXTURE_COORDINATE_CODING = "coordinate-coding"
FIXTURE_HOM_IDENTITY = "hom-identity"

# DOT styling
DOT_HET_STYLE = "dashed"
DOT_HOM_STYLE = "solid"
DOT_FONT = "Helvetica"

# Spec file keywords for derived values
DIRECTIVE_OPPOSITE = "opposite"
DIRECTIVE_PRODUCT = "product"
DIRECTIVE_HOM = "hom"
DIRECTIVE_INDUCED_LEFT = "induced-left"
DIRECTIVE_INDUCED_RIGHT = "induced-right"
