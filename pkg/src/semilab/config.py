import enum
import os
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()


# Directories
ROOT_DIR = Path(__file__).resolve().parents[2]

CONFIG_DIR = ROOT_DIR / "config"
SEMIGROUPS_CONFIG_DIR = CONFIG_DIR / "semigroups"
SCHEMAS_DIR = CONFIG_DIR / "schemas"
DOSSIER_SCHEMA_PATH = SCHEMAS_DIR / "dossier_schema.json"


# Versions
TOOL_VERSION = "0.1.0"
DOSSIER_SCHEMA_VERSION = 1


# Constants
class GroupKind(enum.Enum):
    FREE = "free_group"
    LATTICE = "lattice"
    INTEGER = "integers"
    AFFINE = "affine_rationals"


class Condition(enum.Enum):
    TOEPLITZ = "toeplitz"
    QUASI_LATTICE = "ql"
    ORE = "ore"
    REVERSIBLE = "reversible"


# Budgets
MAX_IDEALS = int(os.getenv("SEMILAB_MAX_IDEALS", "10000"))
MAX_FILTER_CANDIDATES = int(os.getenv("SEMILAB_MAX_FILTER_CANDIDATES", "100000"))
MAX_HULL_DEPTH = int(os.getenv("SEMILAB_MAX_HULL_DEPTH", "6"))
MAX_HULL_ELEMENTS = int(os.getenv("SEMILAB_MAX_HULL_ELEMENTS", "20000"))
MAX_JOIN_MEMBERS = 16
MAX_DECOMPOSITION_CANDIDATES = int(os.getenv("SEMILAB_MAX_DECOMPOSITION_CANDIDATES", "100000"))

INFINITE_RANK_TRUNCATION = int(os.getenv("SEMILAB_INFINITE_RANK", "4"))
AXB_DEFAULT_PRIMES = (2, 3)
BOUNDED_MEMBERSHIP_RADIUS = int(os.getenv("SEMILAB_BOUNDED_RADIUS", "8"))
BOUNDED_WINDOW_RADIUS = int(os.getenv("SEMILAB_BOUNDED_WINDOW", "4"))


# Analysis defaults
DEFAULT_DEPTH = 3
DEFAULT_BOUND = 4
DEFAULT_SEED = 0
DEFAULT_MARGIN = 1
DEFAULT_HULL_DEPTH = 3
DEFAULT_TOEPLITZ_BUDGET = 3
DEFAULT_SAMPLES = 20


# Exit codes
EXIT_OK = 0
EXIT_VERDICT_FAILURE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
