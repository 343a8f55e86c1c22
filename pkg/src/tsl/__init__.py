"""Verification toolkit for topologized semilattices on finite carriers,
with exact-rational oracles for two built-in infinite counterexample spaces.

Subsets of a carrier {0..n-1} are int bitmasks throughout the core API.
"""

from .bitsets import bit_list, full_mask, mask_of
from .order import AxiomError, MeetTable, OrderRelation, induced_order, validate_meet
from .spaces import (
    MODES,
    FiniteSpace,
    TopologyError,
    generate_topology,
    make_space,
    product_space,
    sierpinski,
    subset_compact,
    w3_space,
)
from .semitopo import WEAK_MODES, TopSemilattice, is_compact_in, min_meet_chain
from .multimaps import (
    MultiMap,
    PointMap,
    TheoremOutcome,
    check_closed_embedding_theorem,
    check_disjoint_corollary,
    check_transfer_theorem,
    is_retraction_map,
    ti_closed,
)
from .enumeration import (
    EnumSpec,
    enumerate_meet_tables,
    enumerate_models,
    enumerate_structures,
    enumerate_topologies,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomError",
    "EnumSpec",
    "FiniteSpace",
    "MODES",
    "MeetTable",
    "MultiMap",
    "OrderRelation",
    "PointMap",
    "TheoremOutcome",
    "TopSemilattice",
    "TopologyError",
    "WEAK_MODES",
    "bit_list",
    "check_closed_embedding_theorem",
    "check_disjoint_corollary",
    "check_transfer_theorem",
    "enumerate_meet_tables",
    "enumerate_models",
    "enumerate_structures",
    "enumerate_topologies",
    "full_mask",
    "generate_topology",
    "induced_order",
    "is_compact_in",
    "is_retraction_map",
    "make_space",
    "mask_of",
    "min_meet_chain",
    "product_space",
    "sierpinski",
    "subset_compact",
    "ti_closed",
    "validate_meet",
    "w3_space",
]
