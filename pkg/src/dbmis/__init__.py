"""Degree bounded matroid independent sets and properly colored structures."""
from .errors import ContractViolation, DbmisError, InvalidArgument, ResourceLimit
from .instance import DbmisInstance, make_instance
from .matroids import (
    make_copy,
    make_direct_sum,
    make_free,
    make_graphic,
    make_partition,
    make_restriction,
    make_uniform,
)
from .parity import lift_solution, push_solution, reduce_dbmis_to_parity
from .pcforest import EdgeColoredMultigraph, algorithm1, make_ecgraph, reduce_gpf_to_dbmis, small_colors
from .solvers import solve_exact, solve_greedy, solve_p_exchange, solve_via_parity

__version__ = "0.1.0"
