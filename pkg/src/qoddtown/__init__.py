"""q-analogues of Fisher's inequality and the oddtown theorems, checked by computation."""

from .family import (
    Family,
    FisherK,
    Oddtown,
    ReverseOddtown,
    SkewFamily,
    SkewPairs,
    bound_for,
    check_conditions,
    construct_extremal,
    verify_family,
)
from .field import FieldSpec, make_field
from .qcount import q_binomial, q_factorial, q_int, subspace_count
from .search import SearchConfig, max_clique, run_experiment, search_extremal
from .subspace import Subspace, canonicalize, enumerate_points, enumerate_subspaces, intersect

__version__ = "0.1.0"
