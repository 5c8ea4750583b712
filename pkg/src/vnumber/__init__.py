"""Exact v-numbers of monomial ideals and graph edge ideals."""

from .errors import (
    AmbientMismatchError,
    BudgetExceededError,
    ExponentOverflowError,
    ParseError,
    VnumError,
)
from .monomials import (
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    VWitness,
    alpha,
    is_m_primary,
    minimalize,
    pure_power_exponents,
    regularity_zero_dim,
    standard_monomials,
    unit_ideal,
)
from .engine import (
    associated_primes,
    colon_is_prime,
    minimum_witnesses,
    v_at_prime,
    v_bounds,
    v_colon_decomposition_check,
    v_oracle,
    v_primary_matrix,
    v_two_vars,
)
from .graphs import (
    Graph,
    StableWitness,
    clique_sum_1,
    clique_sum_analysis,
    cycle,
    edge_ideal,
    from_edges,
    is_minimal_vertex_cover,
    is_stable,
    is_vertex_cover,
    join,
    neighborhood,
    path,
    v_cycle_closed,
    v_graph,
    v_join_closed,
    v_path_closed,
)
from .powers import (
    PowerSequence,
    check_alpha_equality_class,
    check_edge_power_bounds,
    check_power_lower_vs_base,
    check_pure_power_class,
    check_v_le_reg,
    linear_bound_certificate,
    power_sequence,
    reg_gap_family,
)
from .parsing import parse_graph, parse_ideal

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
