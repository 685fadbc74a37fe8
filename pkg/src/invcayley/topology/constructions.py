"""Explicit torus embeddings for the genus-one families.

Each generator returns a rotation system on a fixed model graph; the
matching ``*_graph`` function builds that graph with the same vertex
numbering.  Nothing here is trusted: callers trace the faces.
"""

from __future__ import annotations

from ..graphs import CayleyGraph, complete_bipartite, cycle_graph, tensor_product
from .embedding import RotationSystem


def z2n_graph(n: int) -> CayleyGraph:
    """Circulant on Z_{2^n} with connection set {+-1, +-(2^{n-1}+1)}."""
    size = 2 ** n
    b = size // 2 + 1
    return CayleyGraph([[(v + s) % size for s in (1, -1, b, -b)] for v in range(size)])


def z2n_torus_rotation(n: int) -> RotationSystem:
    """Torus rotation for the circulant on Z_{2^n}, n >= 3.

    Write h = 2^{n-1} and b = h + 1.  The 4-cycles
    i, i+1, h+i, h+i+1 form a chain of nested rhombi, consecutive ones
    sharing two vertices; the faces are the quadrilaterals between
    neighboring rhombi, {i, i+1, i+2, h+i+1} for every i.  They are traced
    with alternating orientation, which forces the rotation to depend on
    parity: (+1, +b, -b, -1) at even vertices, (+1, -1, -b, +b) at odd ones.
    The last rhombus shares 0 and h with the first, closing the chain
    through the handle.
    """
    if n < 3:
        raise ValueError("Z_{2^n} has a planar graph for n <= 2")
    size = 2 ** n
    b = size // 2 + 1
    even, odd = (1, b, -b, -1), (1, -1, -b, b)
    return RotationSystem([[(v + s) % size for s in (even if v % 2 == 0 else odd)]
                           for v in range(size)])


def cycle_tensor_graph(m: int, n: int) -> CayleyGraph:
    """C_m (x) C_n with vertex (i, j) numbered i*n + j."""
    return tensor_product(cycle_graph(m), cycle_graph(n))


def diagonal_grid_rotation(m: int, n: int) -> RotationSystem:
    """Grid rotation on C_m (x) C_n for any m, n >= 3 (one torus per component)."""
    rot = []
    for i in range(m):
        for j in range(n):
            rot.append([((i + di) % m) * n + (j + dj) % n
                        for di, dj in ((1, 1), (1, -1), (-1, -1), (-1, 1))])
    return RotationSystem(rot)


def cycle_tensor_torus_rotation(m: int, n: int) -> RotationSystem:
    """Diagonal-grid rotation on C_m (x) C_n: mn quadrilateral faces."""
    if m < 3 or n < 3:
        raise ValueError("cycles need length >= 3")
    if m % 2 == 0 and n % 2 == 0:
        raise ValueError("C_m (x) C_n is disconnected when m and n are both even")
    return diagonal_grid_rotation(m, n)


def k44_graph() -> CayleyGraph:
    return complete_bipartite(4, 4)


def k44_torus_rotation() -> RotationSystem:
    """K_{4,4} as one component of the 4x4 diagonal torus grid.

    Side A = vertices 0..3 sit at the grid points with both coordinates
    even, side B = 4..7 at both coordinates odd.
    """
    spots = [(0, 0), (0, 2), (2, 0), (2, 2), (1, 1), (1, 3), (3, 1), (3, 3)]
    where = {p: v for v, p in enumerate(spots)}
    rot = []
    for i, j in spots:
        rot.append([where[((i + di) % 4, (j + dj) % 4)]
                    for di, dj in ((1, 1), (1, -1), (-1, -1), (-1, 1))])
    return RotationSystem(rot)
