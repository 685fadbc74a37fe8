"""Genus evidence for a concrete ring: constructive embeddings and bounds."""

from __future__ import annotations

from dataclasses import dataclass

from .classifier import LocalClass, local_classes, toroidal_family
from .graphs import CayleyGraph, build_cayley, connected_components, find_isomorphism
from .rings import FiniteRing, local_decomposition
from .topology import (
    Embedding,
    RotationSystem,
    component_lower_bound,
    cycle_tensor_graph,
    cycle_tensor_torus_rotation,
    genus_lower_bound,
    is_planar,
    k44_graph,
    k44_torus_rotation,
    make_embedding,
    z2n_graph,
    z2n_torus_rotation,
)


class NoConstruction(LookupError):
    """The ring is outside every family with an explicit torus embedding."""


def model_for(classes: list[LocalClass], orders: list[int]) -> tuple[str, CayleyGraph, RotationSystem]:
    """Model graph and torus rotation for a toroidal family of local factors."""
    kinds = sorted(c.kind for c in classes)
    if toroidal_family(classes) is None:
        raise NoConstruction("no constructive embedding; use genus")
    if kinds == ["Z2N"]:
        (n,) = classes[0].params
        return f"z2n_torus_rotation({n})", z2n_graph(n), z2n_torus_rotation(n)
    if kinds in (["Z2XY"], ["Z4B"]):
        return "k44_torus_rotation()", k44_graph(), k44_torus_rotation()
    odd = sorted(o for c, o in zip(classes, orders) if c.kind == "OddCyclic")
    if len(odd) == 2 and len(classes) == 2:
        m, n = odd
    elif len(odd) == 2:
        # C_a (x) C_b (x) K_2 is C_a (x) C_2b for odd b
        m, n = odd[0], 2 * odd[1]
    else:
        m, n = odd[0], 4
    return (f"cycle_tensor_torus_rotation({m}, {n})", cycle_tensor_graph(m, n),
            cycle_tensor_torus_rotation(m, n))


def constructive_embedding(r: FiniteRing, g: CayleyGraph | None = None,
                           budget: int = 1_000_000) -> tuple[Embedding, str]:
    """A traced torus embedding of Γ(r) and the generator it came from.

    The model embedding is carried to Γ(r) along a graph isomorphism found
    by search, then re-traced on Γ(r) itself.
    """
    g = build_cayley(r) if g is None else g
    d = local_decomposition(r)
    source, model, rot = model_for(local_classes(d), d.factor_orders)
    phi = find_isomorphism(model, g, budget)
    if phi is None:
        raise AssertionError(f"Γ(R) is not isomorphic to the model of {source}")
    emb = make_embedding(g, rot.transport(phi))
    if emb.genus != 1:
        raise AssertionError(f"{source} traced to genus {emb.genus}")
    return emb, source


@dataclass(frozen=True)
class NonPlanarity:
    """Why a graph has genus at least ``bound``."""

    bound: int
    reason: str
    witness: dict | None = None

    def to_dict(self) -> dict:
        out = {"bound": self.bound, "reason": self.reason}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def nonplanarity_witness(g: CayleyGraph) -> NonPlanarity | None:
    """Euler bound when it already exceeds zero, else a Kuratowski subdivision."""
    if len(connected_components(g)) == 1:
        bound, reason = component_lower_bound(g)
    else:
        bound, reason = genus_lower_bound(g), "components"
    if bound >= 1 and reason == "euler-girth":
        return NonPlanarity(bound, reason)
    result = is_planar(g)
    if result.planar:
        return None
    return NonPlanarity(max(bound, 1), "kuratowski", result.kuratowski.to_dict())
