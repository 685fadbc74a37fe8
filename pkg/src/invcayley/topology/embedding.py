"""Rotation systems, face tracing and genus certificates."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence, Union

from ..graphs import CayleyGraph, connected_components

Dart = tuple[int, int]


@dataclass(frozen=True)
class RotationSystem:
    """Cyclic order of neighbors around every vertex."""

    order: tuple[tuple[int, ...], ...]

    def __init__(self, order: Sequence[Sequence[int]]):
        object.__setattr__(self, "order", tuple(tuple(r) for r in order))

    def __len__(self) -> int:
        return len(self.order)

    def __getitem__(self, v: int) -> tuple[int, ...]:
        return self.order[v]

    def successor_maps(self) -> list[dict[int, int]]:
        return [{r[i]: r[(i + 1) % len(r)] for i in range(len(r))} for r in self.order]

    def validate(self, g: CayleyGraph) -> None:
        if len(self.order) != g.vertex_count:
            raise ValueError("rotation has the wrong number of vertices")
        for v, r in enumerate(self.order):
            if len(r) != len(set(r)) or set(r) != set(g.adjacency[v]):
                raise ValueError(f"rotation at {v} is not a cyclic order of its neighbors")

    def mirror(self) -> "RotationSystem":
        return RotationSystem([r[::-1] for r in self.order])

    def transport(self, phi: Sequence[int]) -> "RotationSystem":
        """Carry the rotation along a vertex bijection ``v -> phi[v]``."""
        out: list = [None] * len(self.order)
        for v, r in enumerate(self.order):
            out[phi[v]] = tuple(phi[u] for u in r)
        return RotationSystem(out)

    @classmethod
    def sorted_for(cls, g: CayleyGraph) -> "RotationSystem":
        return cls(g.adjacency)


def face_orbits(g: CayleyGraph, rot: RotationSystem) -> list[list[Dart]]:
    """Orbits of the face map: dart (u, v) is followed by (v, w), w = succ_v(u).

    Faces are listed in order of their first dart, darts scanned by vertex
    and then by rotation position.
    """
    rot.validate(g)
    succ = rot.successor_maps()
    seen: set[Dart] = set()
    faces = []
    for v, r in enumerate(rot.order):
        for w in r:
            start = (v, w)
            if start in seen:
                continue
            face = []
            d = start
            while d not in seen:
                seen.add(d)
                face.append(d)
                a, b = d
                d = (b, succ[b][a])
            if d != start:
                raise AssertionError("face map is not a permutation")
            faces.append(face)
    return faces


def trace_faces(g: CayleyGraph, rot: RotationSystem) -> tuple[int, list[list[Dart]]]:
    """Face count and faces of a connected graph's embedding."""
    if len(connected_components(g)) > 1:
        raise ValueError("trace_faces needs a connected graph")
    faces = face_orbits(g, rot)
    return len(faces), faces


def euler_genus(vertices: int, edges: int, faces: int, components: int = 1) -> int:
    twice = 2 * components - vertices + edges - faces
    if twice < 0 or twice % 2:
        raise AssertionError(f"Euler characteristic inconsistent: V={vertices} E={edges} F={faces}")
    return twice // 2


@dataclass(frozen=True)
class Embedding:
    """An orientable embedding, validated by face tracing at construction."""

    rotation: RotationSystem
    faces: tuple[tuple[Dart, ...], ...]
    genus: int
    vertices: int
    edges: int

    @property
    def face_count(self) -> int:
        return len(self.faces)

    def to_dict(self) -> dict:
        return {
            "vertices": self.vertices,
            "rotation": [list(r) for r in self.rotation.order],
            "faces": [[list(d) for d in f] for f in self.faces],
            "genus": self.genus,
        }


def make_embedding(g: CayleyGraph, rot: RotationSystem) -> Embedding:
    """Trace ``rot`` on ``g`` and record its genus (summed over components).

    An isolated vertex counts as one component bounding one face.
    """
    faces = face_orbits(g, rot)
    isolated = sum(1 for r in g.adjacency if not r)
    comps = len(connected_components(g))
    genus = euler_genus(g.vertex_count, g.edge_count, len(faces) + isolated, comps)
    return Embedding(rot, tuple(tuple(f) for f in faces), genus, g.vertex_count, g.edge_count)


@dataclass(frozen=True)
class LowerBound:
    bound: int
    reason: str  # "euler-girth", "kuratowski" or "exhaustive-search"

    def to_dict(self) -> dict:
        return {"kind": "lower_bound", "bound": self.bound, "reason": self.reason}


@dataclass(frozen=True)
class Bounds:
    low: int
    high: int
    embedding: Embedding | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.low > self.high:
            raise ValueError(f"empty genus interval [{self.low}, {self.high}]")

    def to_dict(self) -> dict:
        out = {"kind": "bounds", "low": self.low, "high": self.high}
        if self.embedding is not None:
            out["embedding"] = self.embedding.to_dict()
        return out


@dataclass(frozen=True)
class Classified:
    tag: str

    def to_dict(self) -> dict:
        return {"kind": "classified", "tag": self.tag}


GenusCertificate = Union[Embedding, LowerBound, Bounds, Classified]


def certificate_to_dict(cert: GenusCertificate) -> dict:
    if isinstance(cert, Embedding):
        return {"kind": "embedding", **cert.to_dict()}
    return cert.to_dict()
