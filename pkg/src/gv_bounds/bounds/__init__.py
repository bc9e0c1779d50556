from .classical import (
    bgs_bound,
    elia_bound,
    fabris_bounds,
    gv_bound,
    ndg_coloring_bound,
    tolhuizen_bound,
    varshamov_bound,
)
from .constant_weight import levenshtein_cw_bound, sparse_cw_bound
from .generic_bound import BoundResult, FormulaId
from .sparse import (
    locally_sparse_bound,
    log_gain_constant_curve,
    sparse_gain_frontier,
    sparse_gv_bound,
    sparse_qary_bound,
)
from .table import BOUNDS, BoundTable, best_bound_table, table_to_csv, table_to_json

__all__ = [
    "BOUNDS",
    "BoundResult",
    "BoundTable",
    "FormulaId",
    "best_bound_table",
    "bgs_bound",
    "elia_bound",
    "fabris_bounds",
    "gv_bound",
    "levenshtein_cw_bound",
    "locally_sparse_bound",
    "log_gain_constant_curve",
    "ndg_coloring_bound",
    "sparse_cw_bound",
    "sparse_gain_frontier",
    "sparse_gv_bound",
    "sparse_qary_bound",
    "table_to_csv",
    "table_to_json",
    "tolhuizen_bound",
    "varshamov_bound",
]
