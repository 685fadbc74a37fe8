"""Ring-level and graph-level decision procedures for the genus class of Γ(R).

Ring level: classify every local factor, then match the multiset of
classes against the planar family and the seven toroidal families.  Graph
level: read the verdict off regularity and connectivity alone.  The two
must agree on every ring.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from .graphs import CayleyGraph, build_cayley, is_connected, is_regular
from .numtheory import prime_power
from .rings import (
    FiniteRing,
    LocalDecomposition,
    build_ring,
    involutions,
    is_local,
    local_decomposition,
    maximal_ideal,
    ring_isomorphic,
)
from .ringspec import Atom


@dataclass(frozen=True)
class LocalClass:
    """Isomorphism family of a local ring.

    ``kind`` is one of OddCyclic(p, n), OddLocalOther, FieldChar2(q), Z4,
    Z2X2, Z2X3, Z4A, Z2XY, Z4B, Z2N(n) or Char2LocalOther.
    """

    kind: str
    params: tuple[int, ...] = ()

    def __str__(self) -> str:
        if self.params:
            return f"{self.kind}({', '.join(map(str, self.params))})"
        return self.kind


PLANAR_T_KINDS = frozenset({"OddCyclic", "OddLocalOther", "Z4", "Z2X2", "Z2X3", "Z4A"})
_SMALL_CHAR2_CATALOG = ("Z2X2", "Z2X3", "Z4A", "Z2XY", "Z4B")


@lru_cache(maxsize=None)
def _catalog_ring(kind: str) -> FiniteRing:
    return build_ring(Atom(kind))


def classify_local(r: FiniteRing) -> LocalClass:
    if not is_local(r):
        raise ValueError("classify_local needs a local ring")
    n, c = r.order, r.characteristic
    if n % 2:
        if c == n:
            return LocalClass("OddCyclic", prime_power(n))
        return LocalClass("OddLocalOther")
    if maximal_ideal(r) == frozenset({r.zero}):
        return LocalClass("FieldChar2", (n,))
    if c == n:
        k = n.bit_length() - 1
        return LocalClass("Z4") if k == 2 else LocalClass("Z2N", (k,))
    if n <= 16:
        for kind in _SMALL_CHAR2_CATALOG:
            cat = _catalog_ring(kind)
            if cat.order == n and cat.characteristic == c and ring_isomorphic(r, cat):
                return LocalClass(kind)
    return LocalClass("Char2LocalOther")


def local_classes(d: LocalDecomposition) -> list[LocalClass]:
    return [classify_local(f) for f in d.factors]


def predict_connected(d: LocalDecomposition) -> bool:
    """Connectivity of Γ(R) from its local factors.

    At most one factor may have even order, and its own graph must be
    connected; every other factor must be some Z_{p^n} with p odd.
    """
    even = [f for f in d.factors if f.order % 2 == 0]
    if len(even) > 1:
        return False
    if even and not is_connected(build_cayley(even[0])):
        return False
    return all(classify_local(f).kind == "OddCyclic" for f in d.factors if f.order % 2)


def classify_planar(d: LocalDecomposition) -> bool:
    """R is S, T or S x T: S a product of char-2 fields, T from the planar list."""
    rest = [c for c in local_classes(d) if c.kind != "FieldChar2"]
    return not rest or (len(rest) == 1 and rest[0].kind in PLANAR_T_KINDS)


@dataclass(frozen=True)
class GenusClass:
    """Planar, Toroidal or Higher, with the family or criterion that decided it."""

    kind: str
    clause: str
    evidence: str = field(default="", compare=False)

    def to_dict(self) -> dict:
        return {"genus_class": self.kind, "clause": self.clause, "evidence": self.evidence}


_TOROIDAL_FAMILIES: dict[tuple[str, ...], str] = {
    ("Z2XY",): "Z2[x,y]/(x^2,xy,y^2)",
    ("Z4B",): "Z4[x]/(x^2,2x)",
    ("Z2N",): "Z_{2^n}, n >= 3",
    ("OddCyclic", "OddCyclic"): "Z_{p^n} x Z_{q^m}",
    ("FieldChar2", "OddCyclic", "OddCyclic"): "Z_{p^n} x Z_{q^m} x Z_2",
    ("OddCyclic", "Z4"): "Z_{p^n} x Z_4",
    ("OddCyclic", "Z2X2"): "Z_{p^n} x Z2[x]/(x^2)",
}


def toroidal_family(classes: list[LocalClass]) -> str | None:
    kinds = tuple(sorted(c.kind for c in classes))
    clause = _TOROIDAL_FAMILIES.get(kinds)
    if clause is None:
        return None
    # Z_2 is the only char-2 field allowed in the three-factor family
    if "FieldChar2" in kinds and any(c.kind == "FieldChar2" and c.params != (2,) for c in classes):
        return None
    return clause


def classify_genus(d: LocalDecomposition) -> GenusClass:
    classes = local_classes(d)
    names = " x ".join(map(str, classes))
    if classify_planar(d):
        return GenusClass("Planar", "S, T or S x T (S a product of char-2 fields)", names)
    clause = toroidal_family(classes)
    if clause is not None:
        return GenusClass("Toroidal", clause, names)
    degree = 1
    for f in d.factors:
        degree *= len(involutions(f))
    connected = predict_connected(d)
    why = f"{degree}-regular" + ("" if connected else ", disconnected")
    return GenusClass("Higher", "not connected and 4-regular", f"{names}: {why}")


def genus_class_from_graph(g: CayleyGraph) -> GenusClass:
    degree = is_regular(g)
    if degree is None:
        raise ValueError("graph is not regular, so it is not an involutory Cayley graph")
    if degree in (1, 2):
        return GenusClass("Planar", "1- or 2-regular", f"{degree}-regular")
    connected = is_connected(g)
    if degree == 4 and connected:
        return GenusClass("Toroidal", "connected and 4-regular", "4-regular, connected")
    why = f"{degree}-regular" + ("" if connected else ", disconnected")
    return GenusClass("Higher", "not connected and 4-regular", why)


def classify_ring(r: FiniteRing) -> GenusClass:
    return classify_genus(local_decomposition(r))
