"""Involutory Cayley graphs of finite commutative rings.

The graph on a ring R joins x and y when (x - y)^2 = 1.  This package
builds the rings, the graphs, and decides whether the graph is planar,
toroidal or of higher genus, both from the ring structure and by direct
computation on the graph.
"""

from .certify import NoConstruction, constructive_embedding, nonplanarity_witness
from .classifier import (
    GenusClass,
    LocalClass,
    classify_genus,
    classify_local,
    classify_planar,
    classify_ring,
    genus_class_from_graph,
    local_classes,
    predict_connected,
)
from .errors import SearchBudgetExceeded
from .graphs import (
    CayleyGraph,
    build_cayley,
    cayley_by_definition,
    complete_bipartite,
    complete_graph,
    connected_components,
    cycle_decomposition,
    cycle_graph,
    find_isomorphism,
    girth,
    is_bipartite,
    is_connected,
    is_isomorphic,
    is_regular,
    tensor_product,
)
from .rings import (
    FiniteRing,
    LocalDecomposition,
    build_ring,
    idempotents,
    involutions,
    is_local,
    local_decomposition,
    maximal_ideal,
    ring_isomorphic,
    units,
)
from .ringspec import GF, Atom, ParseError, Product, RingSpec, Zn, format_ring_spec, named, parse_ring_spec
from .topology import (
    Bounds,
    Embedding,
    RotationSystem,
    genus_complete_bipartite,
    genus_cycle_tensor,
    is_planar,
    min_genus,
    trace_faces,
)
from .verifier import check_theorem, enumerate_rings, run_suite

__version__ = "0.1.0"
