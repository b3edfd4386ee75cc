"""Packing and covering bounds for combinatorial channels."""

from .bounds import (
    BoundError,
    caro_wei,
    dsl,
    dsu,
    dsu_threshold,
    edge_only_lower,
    edge_only_lower_tight,
    edge_only_upper,
    edge_only_upper_tight,
    ldl,
    ldu_iterated,
    local_degree_step,
    mdl,
    mdu,
    motzkin_straus,
    turan,
)
from .channel import (
    Certificate,
    Channel,
    ChannelError,
    Graph,
    WeightVec,
    apply,
    apply_transpose,
    check_cover,
    check_packing,
    closed_neighborhood_channel,
    compose,
    confusability,
    cover_violations,
    input_degrees,
    is_code,
    output_degrees,
    packing_violations,
)
from .deletion import (
    deletion_cover_thm1_vector,
    deletion_cover_thm1_weight,
    deletion_fvy_weight,
    deletion_kk_bound,
    deletion_thm2_bound,
    grain_cover_thm4,
)
from .family import hs_asymptote, hs_kappa, hs_optimal_split
from .fileio import load_certificate, load_channel, save_certificate, save_channel
from .lp import (
    CapExceeded,
    IntResult,
    LpResult,
    SolverConfig,
    fractional_packing,
    integer_covering,
    integer_packing,
    theta_star,
)
from .report import BoundReport
from .runs import ClassFunction, class_sum, expectation_r, expectation_ub
from .zoo import (
    count_strings,
    deletion_channel,
    erasure_substitution_channel,
    grain_channel,
    random_channel,
    vt_code,
)

__all__ = [name for name in dir() if not name.startswith("_")]
