"""Primal topological spaces on finite sets.

Operators ``A^⋄``, ``A^⋄_R``, their closures, the induced topologies, and an
executable catalog of their properties checked by exhaustive enumeration.
"""

from .documents import load_fixture, load_space, parse_space
from .errors import PrimalTopError
from .operators import (
    OperatorTable,
    base_family,
    cl_diamond,
    cl_diamond_R,
    diamond,
    diamond_R,
    kuratowski_check,
    operator_table,
    tau_diamond,
    tau_diamond_R,
)
from .primal import Primal, PrimalSpace, enumerate_primals, point_primal, validate_primal
from .sets import SetFamily, Subset, Universe, powerset
from .theorems import CATALOG, Strategy, check_theorem, find_counterexample, sweep
from .topology import Topology, enumerate_topologies, topology_from_base, validate_topology

__version__ = "0.1.0"
