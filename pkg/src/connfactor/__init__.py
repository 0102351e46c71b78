"""Connected f-factors of dense graphs, via Tutte's matching reduction."""

from .alternating import (
    AlternatingCircuit,
    EdgeColoring,
    color_difference,
    decompose_circuits,
    minimal_circuit,
    switch_across_cut,
    switching,
)
from .distance import PathConstraint, distance_constrained_factor, path_constrained_factor, redn_pm
from .errors import (
    BudgetExhausted,
    ConnFactorError,
    InfeasibleConstraint,
    InternalInconsistency,
    MalformedInput,
    NotASwitch,
    NotEquitable,
    PreconditionViolated,
)
from .generators import gen_instance, threshold
from .graph import Graph, connected_components, cut_covers, diameter, dump_graph, load_graph
from .matching import Matching, max_matching, perfect_matching, verify_matching
from .solver import ConnectedFactorResult, Outcome, solve, verify_connected_factor
from .tutte import DegreeSpec, Factor, build_gadget, f_factor, load_degree_spec

__version__ = "0.1.0"
