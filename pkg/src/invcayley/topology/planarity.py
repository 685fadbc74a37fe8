"""Exact planarity testing.

Each biconnected block is embedded by the Demoucron-Malgrange-Pertuiset
face-insertion method: start from a cycle, repeatedly compute the
fragments (bridges) of the block relative to the embedded part, and route
a path of some fragment through a face containing all its attachment
vertices.  A fragment with no such face proves the block non-planar.  The
choice rule (a fragment with exactly one admissible face first) makes the
greedy procedure exact.

Block embeddings are glued at cut vertices by concatenating rotations,
which keeps the genus additive, so the final rotation is checked by face
tracing before it is returned.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from ..graphs import CayleyGraph, connected_components
from .embedding import Embedding, RotationSystem, make_embedding


def biconnected_blocks(g: CayleyGraph) -> list[list[tuple[int, int]]]:
    """Edge sets of the biconnected blocks (iterative Hopcroft-Tarjan)."""
    n = g.vertex_count
    disc = [-1] * n
    low = [0] * n
    clock = 0
    blocks = []
    for s in range(n):
        if disc[s] >= 0 or not g.adjacency[s]:
            continue
        disc[s] = low[s] = clock
        clock += 1
        stack = [(s, -1, iter(g.adjacency[s]))]
        edges: list[tuple[int, int]] = []
        while stack:
            v, p, it = stack[-1]
            pushed = False
            for w in it:
                if disc[w] < 0:
                    edges.append((v, w))
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, v, iter(g.adjacency[w])))
                    pushed = True
                    break
                if w != p and disc[w] < disc[v]:
                    edges.append((v, w))
                    low[v] = min(low[v], disc[w])
            if pushed:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    block = []
                    while True:
                        e = edges.pop()
                        block.append(e)
                        if e == (u, v):
                            break
                    blocks.append(block)
    return blocks


def _bfs_path(adj, src, dst, banned_edge):
    parent = {src: None}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        for w in sorted(adj[v]):
            if w in parent or {v, w} == banned_edge:
                continue
            parent[w] = v
            if w == dst:
                path = [w]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                return path[::-1]
            queue.append(w)
    return None


@dataclass
class _Fragment:
    attachments: frozenset
    interior: list  # empty for a chord
    chord: tuple | None = None


def _fragments(adj, embedded, h_edges):
    frags = []
    for v in sorted(embedded):
        for w in sorted(adj[v]):
            if w > v and w in embedded and frozenset((v, w)) not in h_edges:
                frags.append(_Fragment(frozenset((v, w)), [], (v, w)))
    seen = set()
    for s in sorted(adj):
        if s in embedded or s in seen:
            continue
        comp, att = [s], set()
        seen.add(s)
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w in embedded:
                    att.add(w)
                elif w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        frags.append(_Fragment(frozenset(att), sorted(comp)))
    return frags


def _fragment_path(adj, frag, embedded):
    """Path between two distinct attachments of a fragment, through its interior."""
    if frag.chord is not None:
        return list(frag.chord)
    a = min(frag.attachments)
    inside = set(frag.interior)
    start = min(w for w in adj[a] if w in inside)
    parent = {start: None}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        exits = sorted(w for w in adj[v] if w in embedded and w != a)
        if exits:
            path = [v]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            return [a] + path[::-1] + [exits[0]]
        for w in sorted(adj[v]):
            if w in inside and w not in parent:
                parent[w] = v
                queue.append(w)
    raise AssertionError("fragment with a single attachment in a biconnected block")


def _embed_block(edges):
    """Oriented face cycles of a planar embedding of a block, or None."""
    adj: dict[int, set[int]] = {}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    u0, v0 = min(tuple(sorted(e)) for e in edges)
    cycle = _bfs_path(adj, u0, v0, {u0, v0})
    faces = [cycle[:], cycle[::-1]]
    face_sets = [set(cycle), set(cycle)]
    embedded = set(cycle)
    h_edges = {frozenset((cycle[i], cycle[(i + 1) % len(cycle)])) for i in range(len(cycle))}
    while len(h_edges) < len(edges):
        choice = None
        for frag in _fragments(adj, embedded, h_edges):
            admissible = [i for i, fs in enumerate(face_sets) if frag.attachments <= fs]
            if not admissible:
                return None
            if len(admissible) == 1:
                choice = (frag, admissible[0])
                break
            if choice is None:
                choice = (frag, admissible[0])
        frag, fi = choice
        path = _fragment_path(adj, frag, embedded)
        a, b, inner = path[0], path[-1], path[1:-1]
        face = faces[fi]
        i = face.index(a)
        face = face[i:] + face[:i]
        t = face.index(b)
        first = face[:t + 1] + inner[::-1]
        second = face[t:] + face[:1] + inner
        faces[fi], face_sets[fi] = first, set(first)
        faces.append(second)
        face_sets.append(set(second))
        embedded.update(inner)
        h_edges.update(frozenset((path[k], path[k + 1])) for k in range(len(path) - 1))
    return faces


def _cyclic_from_successor(succ: dict[int, int]) -> list[int]:
    start = min(succ)
    out = [start]
    while len(out) < len(succ):
        out.append(succ[out[-1]])
    if succ[out[-1]] != start:
        raise AssertionError("block rotation is not a single cycle")
    return out


def planar_rotation(g: CayleyGraph) -> RotationSystem | None:
    """A genus-0 rotation system for ``g``, or None if ``g`` is non-planar."""
    for comp in connected_components(g):
        v = len(comp)
        e = sum(len(g.adjacency[x]) for x in comp) // 2
        if v >= 3 and e > 3 * v - 6:
            return None
    rotation: list[list[int]] = [[] for _ in range(g.vertex_count)]
    for block in biconnected_blocks(g):
        if len(block) == 1:
            u, w = block[0]
            rotation[u].append(w)
            rotation[w].append(u)
            continue
        faces = _embed_block(block)
        if faces is None:
            return None
        succ: dict[int, dict[int, int]] = {}
        for f in faces:
            k = len(f)
            for i, x in enumerate(f):
                succ.setdefault(x, {})[f[i - 1]] = f[(i + 1) % k]
        for x, s in succ.items():
            rotation[x].extend(_cyclic_from_successor(s))
    return RotationSystem(rotation)


def planar_embedding(g: CayleyGraph) -> Embedding | None:
    rot = planar_rotation(g)
    if rot is None:
        return None
    emb = make_embedding(g, rot)
    if emb.genus != 0:
        raise AssertionError("planarity embedding traced to positive genus")
    return emb


@dataclass(frozen=True)
class KuratowskiWitness:
    """A subdivision of K5 or K3,3 inside the graph."""

    kind: str  # "K5" or "K3,3"
    branch_vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def to_dict(self) -> dict:
        return {"kind": self.kind, "branch_vertices": list(self.branch_vertices),
                "edges": [list(e) for e in self.edges]}


def kuratowski_subgraph(g: CayleyGraph) -> KuratowskiWitness:
    """Shrink a non-planar graph to a minimal non-planar subgraph.

    Vertices are dropped first (cheap, large reductions), then edges; the
    result is edge-minimal non-planar, hence a Kuratowski subdivision.
    """
    if planar_rotation(g) is not None:
        raise ValueError("graph is planar")
    edges = set(g.edges())
    n = g.vertex_count

    def nonplanar(es):
        return planar_rotation(CayleyGraph.from_edges(n, es)) is None

    for v in range(n):
        trial = {e for e in edges if v not in e}
        if trial != edges and nonplanar(trial):
            edges = trial
    for e in sorted(edges):
        trial = edges - {e}
        if nonplanar(trial):
            edges = trial
    h = CayleyGraph.from_edges(n, edges)
    branch = tuple(v for v in range(n) if h.degree(v) >= 3)
    if len(branch) == 5 and all(h.degree(v) == 4 for v in branch):
        kind = "K5"
    elif len(branch) == 6 and all(h.degree(v) == 3 for v in branch):
        kind = "K3,3"
    else:
        raise AssertionError(f"minimal non-planar subgraph has branch degrees "
                             f"{[h.degree(v) for v in branch]}")
    return KuratowskiWitness(kind, branch, tuple(sorted(edges)))


@dataclass(frozen=True)
class PlanarityResult:
    planar: bool
    embedding: Embedding | None = None
    kuratowski: KuratowskiWitness | None = None

    def __bool__(self) -> bool:
        return self.planar


def is_planar(g: CayleyGraph, witness: bool = True) -> PlanarityResult:
    """Exact planarity with a witness either way.

    ``witness=False`` skips the Kuratowski extraction for non-planar input.
    """
    emb = planar_embedding(g)
    if emb is not None:
        return PlanarityResult(True, embedding=emb)
    return PlanarityResult(False, kuratowski=kuratowski_subgraph(g) if witness else None)
