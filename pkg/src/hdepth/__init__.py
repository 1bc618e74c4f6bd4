"""Hilbert depth of quotients by complete bipartite edge ideals."""
from .bipartite import (
    BipartiteCase,
    CriterionProbe,
    HdepthReport,
    criterion_holds,
    h,
    hdepth_ideal,
    hdepth_quotient,
    pop_bound,
    t1_value,
    t2_bounds,
)
from .combinatorics import (
    GuardedFloorResult,
    binomial,
    ceil_sqrt_upper_bound,
    conjecture_product,
    floor_half_plus_sqrt_ln2,
    shifted_binomial,
)
from .sqfree import SqfreeIdealPair, alpha_vector, beta_table, hdepth_general

__version__ = "0.1.0"
