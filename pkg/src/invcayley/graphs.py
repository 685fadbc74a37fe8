"""Simple undirected graphs and the involutory Cayley graph of a ring."""

from __future__ import annotations

import json
import math
from collections import Counter, deque
from typing import Iterable, Sequence

from .errors import Budget, SearchBudgetExceeded
from .rings import FiniteRing, involutions

INFINITE = math.inf


class CayleyGraph:
    """Immutable simple graph on ``0 .. n-1`` with printable vertex labels.

    Neighbor lists are kept sorted; membership goes through per-vertex
    frozensets.
    """

    __slots__ = ("adjacency", "labels", "_sets", "_cache")

    def __init__(self, adjacency: Sequence[Iterable[int]], labels: Sequence[str] | None = None):
        adj = tuple(tuple(sorted(set(nbrs))) for nbrs in adjacency)
        n = len(adj)
        for v, nbrs in enumerate(adj):
            for u in nbrs:
                if u == v:
                    raise ValueError(f"loop at vertex {v}")
                if not 0 <= u < n:
                    raise ValueError(f"neighbor {u} of {v} out of range")
        sets = tuple(frozenset(nbrs) for nbrs in adj)
        for v, nbrs in enumerate(adj):
            for u in nbrs:
                if v not in sets[u]:
                    raise ValueError(f"adjacency not symmetric at {v}-{u}")
        self.adjacency = adj
        self._sets = sets
        self.labels = tuple(labels) if labels is not None else tuple(map(str, range(n)))
        if len(self.labels) != n:
            raise ValueError("one label per vertex required")
        self._cache: dict = {}

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> "CayleyGraph":
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)
        return cls(adj, labels)

    @property
    def vertex_count(self) -> int:
        return len(self.adjacency)

    def __len__(self) -> int:
        return len(self.adjacency)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._sets[u]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v]

    @property
    def edge_count(self) -> int:
        return sum(map(len, self.adjacency)) // 2

    def __repr__(self) -> str:
        return f"<CayleyGraph V={self.vertex_count} E={self.edge_count}>"

    def induced(self, vertices: Sequence[int]) -> tuple["CayleyGraph", list[int]]:
        """Induced subgraph on ``vertices`` (renumbered in the given order)."""
        pos = {v: i for i, v in enumerate(vertices)}
        adj = [[pos[u] for u in self.adjacency[v] if u in pos] for v in vertices]
        return CayleyGraph(adj, [self.labels[v] for v in vertices]), list(vertices)

    def without_edges(self, removed: Iterable[tuple[int, int]]) -> "CayleyGraph":
        drop = {frozenset(e) for e in removed}
        return CayleyGraph.from_edges(
            self.vertex_count, [e for e in self.edges() if frozenset(e) not in drop], self.labels)

    # -- exports ---------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "order": self.vertex_count,
            "degree": is_regular(self),
            "edges": [list(e) for e in self.edges()],
            "labels": list(self.labels),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {json.dumps(name)} {{"]
        for v, label in enumerate(self.labels):
            lines.append(f"  {v} [label={json.dumps(label)}];")
        for u, v in self.edges():
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


# ------------------------------------------------------------ constructions


def build_cayley(r: FiniteRing) -> CayleyGraph:
    """Involutory Cayley graph: x ~ x + u for every involution u."""
    invs = sorted(involutions(r))
    adj = [[r._add(x, u) for u in invs] for x in r.elements()]
    return CayleyGraph(adj, r.labels)


def cayley_by_definition(r: FiniteRing) -> CayleyGraph:
    """Same graph from the pairwise test (x - y)^2 == 1; quadratic, for checking."""
    edges = []
    for x in r.elements():
        for y in range(x + 1, r.order):
            d = r.sub(x, y)
            if r._mul(d, d) == r.one:
                edges.append((x, y))
    return CayleyGraph.from_edges(r.order, edges, r.labels)


def tensor_product(a: CayleyGraph, b: CayleyGraph) -> CayleyGraph:
    nb = b.vertex_count
    adj = []
    labels = []
    for i in range(a.vertex_count):
        for j in range(nb):
            adj.append([k * nb + l for k in a.adjacency[i] for l in b.adjacency[j]])
            labels.append(f"({a.labels[i]}, {b.labels[j]})")
    return CayleyGraph(adj, labels)


def cycle_graph(n: int) -> CayleyGraph:
    if n < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {n}")
    return CayleyGraph([[(v - 1) % n, (v + 1) % n] for v in range(n)])


def complete_bipartite(m: int, n: int) -> CayleyGraph:
    if m < 1 or n < 1:
        raise ValueError("both sides need at least one vertex")
    return CayleyGraph([list(range(m, m + n))] * m + [list(range(m))] * n)


def complete_graph(n: int) -> CayleyGraph:
    return CayleyGraph([[u for u in range(n) if u != v] for v in range(n)])


def disjoint_union(*graphs: CayleyGraph) -> CayleyGraph:
    adj, labels, offset = [], [], 0
    for g in graphs:
        adj.extend([u + offset for u in nbrs] for nbrs in g.adjacency)
        labels.extend(g.labels)
        offset += g.vertex_count
    return CayleyGraph(adj, labels)


# -------------------------------------------------------------- invariants


def is_regular(g: CayleyGraph) -> int | None:
    degrees = {len(n) for n in g.adjacency}
    return degrees.pop() if len(degrees) == 1 else None


def connected_components(g: CayleyGraph) -> list[list[int]]:
    """Vertex sets of the components, each sorted, ordered by least vertex."""
    if "components" in g._cache:
        return g._cache["components"]
    seen = [False] * g.vertex_count
    comps = []
    for s in range(g.vertex_count):
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [s], deque([s])
        while queue:
            v = queue.popleft()
            for u in g.adjacency[v]:
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    queue.append(u)
        comps.append(sorted(comp))
    g._cache["components"] = comps
    return comps


def is_connected(g: CayleyGraph) -> bool:
    return len(connected_components(g)) <= 1


def two_coloring(g: CayleyGraph) -> list[int] | None:
    """A proper 2-coloring, or None when a traversal meets an odd cycle."""
    color = [-1] * g.vertex_count
    for s in range(g.vertex_count):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.adjacency[v]:
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    return color


def is_bipartite(g: CayleyGraph) -> bool:
    return two_coloring(g) is not None


def girth(g: CayleyGraph) -> float:
    """Length of a shortest cycle; ``math.inf`` for a forest."""
    if "girth" in g._cache:
        return g._cache["girth"]
    best = INFINITE
    n = g.vertex_count
    for s in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            if 2 * dist[v] + 1 >= best:
                break
            for u in g.adjacency[v]:
                if dist[u] < 0:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u:
                    best = min(best, dist[u] + dist[v] + 1)
    g._cache["girth"] = best
    return best


def cycle_decomposition(g: CayleyGraph) -> list[int]:
    """Sorted component cycle lengths of a 2-regular graph."""
    if is_regular(g) != 2:
        raise ValueError("cycle decomposition needs a 2-regular graph")
    return sorted(len(c) for c in connected_components(g))


def bfs_profile(g: CayleyGraph, s: int) -> tuple[int, ...]:
    """Number of vertices at each distance from ``s``."""
    dist = {s: 0}
    layer = [s]
    sizes = [1]
    while layer:
        nxt = []
        for v in layer:
            for u in g.adjacency[v]:
                if u not in dist:
                    dist[u] = dist[v] + 1
                    nxt.append(u)
        if nxt:
            sizes.append(len(nxt))
        layer = nxt
    return tuple(sizes)


# ------------------------------------------------------------- isomorphism


def _vertex_invariants(g: CayleyGraph) -> list[tuple]:
    if "vinv" not in g._cache:
        deg = [len(n) for n in g.adjacency]
        g._cache["vinv"] = [
            (deg[v], tuple(sorted(deg[u] for u in g.adjacency[v])), bfs_profile(g, v))
            for v in range(g.vertex_count)
        ]
    return g._cache["vinv"]


def _component_signature(g: CayleyGraph, comp: list[int]) -> tuple:
    inv = _vertex_invariants(g)
    return (len(comp), tuple(sorted(Counter(inv[v] for v in comp).items())))


def _match_connected(a: CayleyGraph, ca: list[int], b: CayleyGraph, cb: list[int],
                     counter: Budget, budget: int) -> dict[int, int] | None:
    inv_a, inv_b = _vertex_invariants(a), _vertex_invariants(b)
    freq = Counter(inv_a[v] for v in ca)
    # rarest invariant first, then (degree, neighbor degrees), then index
    start = min(ca, key=lambda v: (freq[inv_a[v]], inv_a[v][:2], v))
    order, parent = [start], {start: None}
    for v in order:
        for u in a.adjacency[v]:
            if u not in parent:
                parent[u] = v
                order.append(u)
    pos = {v: i for i, v in enumerate(order)}
    earlier = [[u for u in a.adjacency[v] if pos[u] < pos[v]] for v in order]
    cb_set = set(cb)

    phi: dict[int, int] = {}
    used: set[int] = set()

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        if not counter.spend():
            raise SearchBudgetExceeded("graph isomorphism", budget)
        if parent[v] is None:
            candidates = [w for w in cb if inv_b[w] == inv_a[v]]
        else:
            candidates = [w for w in b.adjacency[phi[parent[v]]] if w not in used and inv_b[w] == inv_a[v]]
        back = earlier[k]
        for w in candidates:
            if w in used or w not in cb_set:
                continue
            if not all(b.has_edge(w, phi[u]) for u in back):
                continue
            if sum(1 for x in b.adjacency[w] if x in used) != len(back):
                continue
            phi[v] = w
            used.add(w)
            if extend(k + 1):
                return True
            del phi[v]
            used.discard(w)
        return False

    return dict(phi) if extend(0) else None


def find_isomorphism(a: CayleyGraph, b: CayleyGraph, budget: int = 1_000_000) -> list[int] | None:
    """Vertex map ``phi`` (as a list) with ``u ~ v`` iff ``phi[u] ~ phi[v]``.

    Components are matched greedily (isomorphism is an equivalence, so a
    greedy pairing cannot go wrong) and each pair by depth-first
    extension in BFS order.  Raises :class:`SearchBudgetExceeded` when the
    search runs past ``budget`` steps.
    """
    if a.vertex_count != b.vertex_count or a.edge_count != b.edge_count:
        return None
    if sorted(_vertex_invariants(a)) != sorted(_vertex_invariants(b)):
        return None
    comps_a, comps_b = connected_components(a), connected_components(b)
    sigs_a = [_component_signature(a, c) for c in comps_a]
    sigs_b = [_component_signature(b, c) for c in comps_b]
    if sorted(sigs_a) != sorted(sigs_b):
        return None
    counter = Budget(budget)
    phi = [-1] * a.vertex_count
    free = list(range(len(comps_b)))
    for ca, sa in zip(comps_a, sigs_a):
        for j in free:
            if sigs_b[j] != sa:
                continue
            m = _match_connected(a, ca, b, comps_b[j], counter, budget)
            if m is not None:
                for v, w in m.items():
                    phi[v] = w
                free.remove(j)
                break
        else:
            return None
    return phi


def is_isomorphic(a: CayleyGraph, b: CayleyGraph, budget: int = 1_000_000) -> bool:
    return find_isomorphism(a, b, budget) is not None
