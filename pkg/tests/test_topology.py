import itertools
import math
import random

import pytest

from invcayley.errors import SearchBudgetExceeded
from invcayley.graphs import (
    CayleyGraph,
    build_cayley,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    is_connected,
    is_isomorphic,
)
from invcayley.rings import build_ring
from invcayley.ringspec import Zn
from invcayley.topology import (
    Bounds,
    Embedding,
    RotationSystem,
    biconnected_blocks,
    certificate_to_dict,
    cycle_tensor_graph,
    cycle_tensor_torus_rotation,
    diagonal_grid_rotation,
    euler_genus_lower_bound,
    genus_complete_bipartite,
    genus_cycle_tensor,
    genus_lower_bound,
    is_planar,
    k44_graph,
    k44_torus_rotation,
    kuratowski_subgraph,
    make_embedding,
    min_genus,
    trace_faces,
    z2n_graph,
    z2n_torus_rotation,
)

from oracles import brute_genus, faces_of, kmn_formula, nx_planar


def _random_graph(rng, n, p):
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return CayleyGraph.from_edges(n, edges)


def _rotation_count(g):
    return math.prod(math.factorial(max(g.degree(v) - 1, 0)) for v in range(g.vertex_count))


def _random_connected(rng, n, p):
    while True:
        g = _random_graph(rng, n, p)
        if is_connected(g):
            return g


# ------------------------------------------------------------- face tracing


def test_face_trace_matches_oracle():
    rng = random.Random(11)
    for _ in range(60):
        g = _random_connected(rng, rng.randint(3, 8), 0.5)
        order = []
        for v in range(g.vertex_count):
            nb = list(g.neighbors(v))
            rng.shuffle(nb)
            order.append(nb)
        f, faces = trace_faces(g, RotationSystem(order))
        assert f == faces_of({v: list(g.neighbors(v)) for v in range(g.vertex_count)},
                             dict(enumerate(order)))
        # every dart is used exactly once
        darts = [d for face in faces for d in face]
        assert len(darts) == len(set(darts)) == 2 * g.edge_count


def test_rotation_must_match_graph():
    g = cycle_graph(4)
    with pytest.raises(ValueError):
        make_embedding(g, RotationSystem([[1, 2], [0, 2], [1, 3], [2, 0]]))


# ------------------------------------------------------------------ planarity


def test_planarity_against_networkx():
    rng = random.Random(5)
    for _ in range(300):
        g = _random_graph(rng, rng.randint(1, 12), rng.random() * 0.6)
        result = is_planar(g)
        assert result.planar == nx_planar(g)
        if result.planar:
            assert result.embedding.genus == 0
        else:
            assert result.kuratowski.kind in ("K5", "K3,3")


def test_planarity_against_exhaustive_genus_on_small_graphs():
    rng = random.Random(9)
    checked = 0
    while checked < 40:
        g = _random_connected(rng, rng.randint(4, 8), 0.55)
        if _rotation_count(g) > 5000:
            continue
        assert is_planar(g, witness=False).planar == (brute_genus(g) == 0)
        checked += 1


def test_kuratowski_witness_is_subgraph():
    g = build_cayley(build_ring(Zn(8)))
    w = kuratowski_subgraph(g)
    assert w.kind == "K3,3"
    assert all(g.has_edge(u, v) for u, v in w.edges)
    assert not is_planar(CayleyGraph.from_edges(8, w.edges), witness=False).planar
    assert kuratowski_subgraph(complete_graph(5)).kind == "K5"
    with pytest.raises(ValueError):
        kuratowski_subgraph(cycle_graph(5))


def test_biconnected_blocks_cover_edges():
    g = CayleyGraph.from_edges(7, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3), (5, 6)])
    blocks = biconnected_blocks(g)
    assert sorted(len(b) for b in blocks) == [1, 1, 3, 3]
    assert sum(len(b) for b in blocks) == g.edge_count


# ----------------------------------------------------------------- genus


@pytest.mark.parametrize("graph,expected", [
    (complete_graph(5), 1),
    (complete_bipartite(3, 3), 1),
    (complete_bipartite(4, 4), 1),
    (complete_graph(4), 0),
    (complete_graph(6), 1),
])
def test_min_genus_known_values(graph, expected):
    cert = min_genus(graph)
    assert isinstance(cert, Embedding) and cert.genus == expected
    assert make_embedding(graph, cert.rotation).genus == expected


def test_min_genus_matches_brute_force():
    rng = random.Random(21)
    checked = 0
    while checked < 25:
        g = _random_connected(rng, rng.randint(5, 8), 0.6)
        if _rotation_count(g) > 20000:
            continue
        want = brute_genus(g)
        assert min_genus(g).genus == want
        assert min_genus(g, use_lower_bounds=False).genus == want
        checked += 1


@pytest.mark.parametrize("m,n", [(2, 2), (2, 5), (3, 3), (3, 4), (3, 5), (4, 4)])
def test_kmn_formula(m, n):
    assert genus_complete_bipartite(m, n) == kmn_formula(m, n)
    assert min_genus(complete_bipartite(m, n)).genus == kmn_formula(m, n)


def test_budget_exhaustion_gives_bounds():
    g = complete_graph(8)
    cert = min_genus(g, budget=50)
    assert isinstance(cert, Bounds)
    assert cert.low <= 2 <= cert.high
    assert certificate_to_dict(cert)["kind"] == "bounds"


def test_k7_bounds_bracket_its_genus():
    cert = min_genus(complete_graph(7), budget=20000)
    low, high = (cert.genus, cert.genus) if isinstance(cert, Embedding) else (cert.low, cert.high)
    assert low <= 1 <= high and low == 1


def test_seed_gives_upper_bound():
    g = z2n_graph(4)
    cert = min_genus(g, budget=10, seed=z2n_torus_rotation(4))
    assert cert.genus == 1 if isinstance(cert, Embedding) else cert.high == 1


def test_disconnected_genus_is_additive():
    g = disjoint_union(complete_graph(5), complete_bipartite(3, 3), cycle_graph(3))
    assert min_genus(g).genus == 2
    assert genus_lower_bound(g) == 2


def test_euler_lower_bound():
    assert euler_genus_lower_bound(complete_graph(5)) == 1
    assert euler_genus_lower_bound(complete_bipartite(4, 4)) == 1
    assert euler_genus_lower_bound(complete_graph(8)) == 2


# ------------------------------------------------------------ constructions


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_z2n_torus(n):
    g = z2n_graph(n)
    emb = make_embedding(g, z2n_torus_rotation(n))
    assert emb.genus == 1 and emb.face_count == 2 ** n
    assert all(len(f) == 4 for f in emb.faces)
    assert is_isomorphic(g, build_cayley(build_ring(Zn(2 ** n))))


def test_k44_torus():
    emb = make_embedding(k44_graph(), k44_torus_rotation())
    assert emb.genus == 1 and emb.face_count == 8


@pytest.mark.parametrize("m,n", [(m, n) for m, n in itertools.combinations_with_replacement(range(3, 10), 2)])
def test_cycle_tensor(m, n):
    g = cycle_tensor_graph(m, n)
    emb = make_embedding(g, diagonal_grid_rotation(m, n))
    assert emb.genus == genus_cycle_tensor(m, n) == genus_lower_bound(g)
    if m % 2 and n % 2 or (m + n) % 2:
        assert make_embedding(g, cycle_tensor_torus_rotation(m, n)).face_count == m * n


def test_construction_argument_errors():
    with pytest.raises(ValueError):
        z2n_torus_rotation(2)
    with pytest.raises(ValueError):
        cycle_tensor_torus_rotation(4, 6)
    with pytest.raises(ValueError):
        genus_cycle_tensor(2, 5)
    with pytest.raises(ValueError):
        genus_complete_bipartite(1, 3)


def test_search_budget_exceeded_is_runtime_error():
    assert issubclass(SearchBudgetExceeded, RuntimeError)
