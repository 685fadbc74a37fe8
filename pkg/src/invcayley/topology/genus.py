"""Orientable genus: closed formulas, lower bounds and exact search."""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass

from ..errors import Budget
from ..graphs import CayleyGraph, connected_components, girth
from .embedding import Bounds, Embedding, RotationSystem, make_embedding
from .planarity import planar_rotation

DEFAULT_BUDGET = 10**9


def genus_complete_bipartite(m: int, n: int) -> int:
    if m < 2 or n < 2:
        raise ValueError("K_{m,n} genus formula needs m, n >= 2")
    return -(-((m - 2) * (n - 2)) // 4)


def genus_cycle_tensor(m: int, n: int) -> int:
    """Genus of C_m (x) C_n, summed over components."""
    if m < 3 or n < 3:
        raise ValueError("cycles need length >= 3")
    return 2 if m % 2 == 0 and n % 2 == 0 else 1


def euler_genus_lower_bound(g: CayleyGraph) -> int:
    """ceil(E(k-2)/(2k) - (V-2)/2) with k the girth, floored at 0."""
    comps = connected_components(g)
    if len(comps) != 1:
        raise ValueError("Euler bound needs a connected graph")
    v, e = g.vertex_count, g.edge_count
    if v < 3:
        raise ValueError("Euler bound needs at least 3 vertices")
    k = girth(g)
    if k == math.inf:
        return 0
    k = int(k)
    num = e * (k - 2) - k * (v - 2)
    return max(0, -(-num // (2 * k)))


def _components(g: CayleyGraph) -> list[tuple[CayleyGraph, list[int]]]:
    return [g.induced(c) for c in connected_components(g)]


def component_lower_bound(h: CayleyGraph) -> tuple[int, str]:
    """Best cheap lower bound for a connected graph and where it came from."""
    if h.vertex_count < 3 or h.edge_count == 0:
        return 0, "trivial"
    euler = euler_genus_lower_bound(h)
    if euler >= 1:
        return euler, "euler-girth"
    if planar_rotation(h) is None:
        return 1, "kuratowski"
    return 0, "planar"


def genus_lower_bound(g: CayleyGraph) -> int:
    """Sum over components of max(Euler bound, non-planarity)."""
    return sum(component_lower_bound(h)[0] for h, _ in _components(g))


@dataclass
class _SearchOutcome:
    faces: int
    rotation: list[list[int]] | None
    complete: bool


def _search_component(h: CayleyGraph, counter: Budget, stop_at_faces: int | None,
                      seed: RotationSystem | None) -> _SearchOutcome:
    """Branch and bound for the maximum face count of a connected graph.

    Vertices receive rotations in BFS order from the least vertex of
    maximum degree.  Rotations are cyclic orders with the smallest neighbor
    first; at the root only one of each mirror pair is tried.  After each
    assignment the faces that just closed are traced; the open darts can
    form at most ``open // girth`` further faces, and a branch is cut when
    that cannot beat the best count (respecting Euler parity).
    """
    n = h.vertex_count
    nbrs = h.adjacency
    E = h.edge_count
    k = girth(h)
    k = 3 if k == math.inf else int(k)
    parity = (E - n) % 2

    offset = [0] * (n + 1)
    for v in range(n):
        offset[v + 1] = offset[v] + len(nbrs[v])
    total = offset[n]
    pos = [{u: i for i, u in enumerate(nbrs[v])} for v in range(n)]
    head = [0] * total
    in_idx = [0] * total
    for v in range(n):
        for i, u in enumerate(nbrs[v]):
            d = offset[v] + i
            head[d] = u
            in_idx[d] = pos[u][v]

    maxdeg = max(len(x) for x in nbrs)
    root = min(v for v in range(n) if len(nbrs[v]) == maxdeg)
    order, seen = [root], {root}
    for v in order:
        for u in nbrs[v]:
            if u not in seen:
                seen.add(u)
                order.append(u)

    def choices(v: int, is_root: bool) -> list[list[int]]:
        d = len(nbrs[v])
        out = []
        for perm in itertools.permutations(range(1, d)):
            if is_root and d >= 3 and perm[0] > perm[-1]:
                continue
            cyc = (0,) + perm
            succ = [0] * d
            for i in range(d):
                succ[cyc[i]] = cyc[(i + 1) % d]
            out.append(succ)
        return out or [[0]]

    options = [choices(v, v == root) for v in order]
    succ: list[list[int] | None] = [None] * n
    closed = [False] * total
    state = {"faces": 0, "darts": 0}

    best_faces = -1
    best_rot = None
    if seed is not None:
        seed_succ = []
        for v in range(n):
            r = seed.order[v]
            m = {r[i]: r[(i + 1) % len(r)] for i in range(len(r))}
            seed_succ.append([pos[v][m[u]] for u in nbrs[v]])
        best_faces = sum(1 for _ in _trace_all(seed_succ, offset, head, in_idx, total))
        best_rot = seed_succ
    done = {"stop": stop_at_faces is not None and best_faces >= stop_at_faces, "out": False}

    def assign(v: int) -> list[list[int]]:
        newly = []
        for d0 in range(offset[v], offset[v + 1]):
            if closed[d0]:
                continue
            path = [d0]
            d = d0
            while True:
                w = head[d]
                sw = succ[w]
                if sw is None:
                    break
                counter.used += 1
                d = offset[w] + sw[in_idx[d]]
                if d == d0:
                    for x in path:
                        closed[x] = True
                    newly.append(path)
                    state["faces"] += 1
                    state["darts"] += len(path)
                    break
                path.append(d)
        return newly

    def undo(newly):
        for path in newly:
            for x in path:
                closed[x] = False
            state["faces"] -= 1
            state["darts"] -= len(path)

    def dfs(depth: int) -> None:
        nonlocal best_faces, best_rot
        if done["stop"] or done["out"]:
            return
        if depth == n:
            if state["faces"] > best_faces:
                best_faces = state["faces"]
                best_rot = [list(s) for s in succ]
                if stop_at_faces is not None and best_faces >= stop_at_faces:
                    done["stop"] = True
            return
        v = order[depth]
        for option in options[depth]:
            if counter.exhausted:
                done["out"] = True
                return
            succ[v] = option
            newly = assign(v)
            bound = state["faces"] + (total - state["darts"]) // k
            if (bound - parity) % 2:
                bound -= 1
            if bound > best_faces:
                dfs(depth + 1)
            undo(newly)
            succ[v] = None
            if done["stop"] or done["out"]:
                return

    dfs(0)
    rot = None
    if best_rot is not None:
        rot = []
        for v in range(n):
            cyc = [0]
            while len(cyc) < len(nbrs[v]):
                cyc.append(best_rot[v][cyc[-1]])
            rot.append([nbrs[v][i] for i in cyc])
    return _SearchOutcome(best_faces, rot, complete=not done["out"])


def _trace_all(succ, offset, head, in_idx, total):
    seen = [False] * total
    for d0 in range(total):
        if seen[d0]:
            continue
        d = d0
        while not seen[d]:
            seen[d] = True
            w = head[d]
            d = offset[w] + succ[w][in_idx[d]]
        yield d0


def min_genus(g: CayleyGraph, budget: int = DEFAULT_BUDGET,
              seed: RotationSystem | None = None,
              use_lower_bounds: bool = True) -> Embedding | Bounds:
    """Exact minimum genus by branch and bound, or bounds if the budget runs out.

    Components are searched separately and their genera summed.  With
    ``use_lower_bounds`` the search for a component stops as soon as it
    meets the Euler/planarity lower bound; without it the search is a pure
    exhaustive maximization of the face count.  ``seed`` (a rotation of the
    whole graph) supplies an initial upper bound.
    """
    counter = Budget(budget)
    rotation: list = [()] * g.vertex_count
    low_total = high_total = 0
    exact = True
    for h, verts in _components(g):
        if h.edge_count == 0:
            continue
        lower, _ = component_lower_bound(h)
        V, E = h.vertex_count, h.edge_count
        stop = E - V + 2 - 2 * lower if use_lower_bounds else E - V + 2
        local_seed = None
        if seed is not None:
            pos = {v: i for i, v in enumerate(verts)}
            local_seed = RotationSystem([[pos[u] for u in seed.order[v]] for v in verts])
        out = _search_component(h, counter, stop, local_seed)
        if out.rotation is None:
            out.rotation = [list(x) for x in h.adjacency]
            out.faces = sum(1 for _ in make_embedding(h, RotationSystem(out.rotation)).faces)
        found_genus = (2 - V + E - out.faces) // 2
        if out.complete:
            low_total += found_genus
        else:
            exact = False
            low_total += lower
        high_total += found_genus
        for i, v in enumerate(verts):
            rotation[v] = tuple(verts[u] for u in out.rotation[i])
    emb = make_embedding(g, RotationSystem(rotation))
    if emb.genus != high_total:
        raise AssertionError("component genera do not add up")
    if exact:
        return emb
    return Bounds(low_total, high_total, emb)
