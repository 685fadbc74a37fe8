"""Planarity, genus search and explicit torus embeddings."""

from .constructions import (
    cycle_tensor_graph,
    cycle_tensor_torus_rotation,
    diagonal_grid_rotation,
    k44_graph,
    k44_torus_rotation,
    z2n_graph,
    z2n_torus_rotation,
)
from .embedding import (
    Bounds,
    Classified,
    Embedding,
    GenusCertificate,
    LowerBound,
    RotationSystem,
    certificate_to_dict,
    face_orbits,
    make_embedding,
    trace_faces,
)
from .genus import (
    DEFAULT_BUDGET,
    component_lower_bound,
    euler_genus_lower_bound,
    genus_complete_bipartite,
    genus_cycle_tensor,
    genus_lower_bound,
    min_genus,
)
from .planarity import (
    KuratowskiWitness,
    PlanarityResult,
    biconnected_blocks,
    is_planar,
    kuratowski_subgraph,
    planar_embedding,
    planar_rotation,
)

__all__ = [
    "Bounds", "Classified", "DEFAULT_BUDGET", "Embedding", "GenusCertificate",
    "KuratowskiWitness", "LowerBound", "PlanarityResult", "RotationSystem",
    "biconnected_blocks", "certificate_to_dict", "component_lower_bound",
    "cycle_tensor_graph", "cycle_tensor_torus_rotation", "diagonal_grid_rotation",
    "euler_genus_lower_bound",
    "face_orbits", "genus_complete_bipartite", "genus_cycle_tensor",
    "genus_lower_bound", "is_planar", "k44_graph", "k44_torus_rotation",
    "kuratowski_subgraph", "make_embedding", "min_genus", "planar_embedding",
    "planar_rotation", "trace_faces", "z2n_graph", "z2n_torus_rotation",
]
