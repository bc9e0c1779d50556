"""Constants."""

DEFAULT_Q = 2

# oracle and construction budgets, counted in vertices
DEFAULT_VERTEX_BUDGET = 2**20
MATERIALIZE_LIMIT = 2**16
EXACT_SEARCH_VERTEX_LIMIT = 256

# sphere graph instances above this many vertices skip the oracle in `sphere`
SPHERE_ORACLE_VERTEX_LIMIT = 2**12

DEFAULT_ROW_BUDGET = 100_000

# explicit words are written over these symbols, so q <= 36 for them
ALPHABET = "0123456789abcdefghijklmnopqrstuvwxyz"

# largest (rows, offsets, n) digit tensor built per block of neighbour lookups
BLOCK_ELEMENTS = 2**22

# larger codebooks find their minimum distance by growing-radius ball lookups
PAIRWISE_WORD_LIMIT = 2**12

# split parameters of the figure reproduction
DEFAULT_EPSILON = 1e-6
DEFAULT_LAMBDA = 0.999
MIN_LAMBDA = 2 / 3

DEFAULT_GRID_STEP = 1e-4
DEFAULT_REFINE_TOL = 1e-9
DEFAULT_CURVE_STEP = 1e-3

# finite-n slack, in bits per unit of n, when checking the sparsity exponent
FINITE_N_MARGIN = 0.01

DEFAULT_TRIALS = 32
DEFAULT_SEED = 0

CSV_FLOAT_FORMAT = "{:.9g}"
THRESHOLD_DECIMALS = 6

TABLE_HEADER = (
    "n",
    "d",
    "q",
    "w",
    "formula",
    "exact_num",
    "exact_den",
    "log2",
    "floor",
    "aux",
)
CURVE_HEADER = ("delta", "f", "g", "holds")
SPHERE_HEADER = ("n", "d", "q", "w", "quantity", "closed_form", "oracle", "status")

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_BUDGET = 3
