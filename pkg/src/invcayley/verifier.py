"""Cross-check every classification result on the ring catalog.

Each theorem is evaluated two ways per ring: the prediction made from the
ring's local factors, and a direct computation on the graph.  Anything
that cannot be decided inside the budget is listed as skipped with its
reason; nothing is passed silently.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import cached_property

from .certify import NoConstruction, constructive_embedding, nonplanarity_witness
from .classifier import (
    classify_genus,
    classify_planar,
    genus_class_from_graph,
    local_classes,
    predict_connected,
)
from .errors import SearchBudgetExceeded
from .graphs import (
    build_cayley,
    complete_bipartite,
    connected_components,
    cycle_decomposition,
    is_bipartite,
    is_connected,
    is_isomorphic,
    is_regular,
    tensor_product,
)
from .numtheory import is_power_of_two, prime_power
from .rings import FiniteRing, build_ring, involutions, is_local, local_decomposition
from .ringspec import GF, NAMED_ATOMS, Atom, Product, RingSpec, Zn, format_ring_spec, spec_order
from .topology import (
    Bounds,
    cycle_tensor_graph,
    diagonal_grid_rotation,
    genus_complete_bipartite,
    genus_cycle_tensor,
    genus_lower_bound,
    is_planar,
    make_embedding,
    min_genus,
)

CATALOG_VERSION = "1"
RING_THEOREMS = ("IMP1", "IMP2", "IMP3", "IMP4", "CONN", "PLANAR", "MAIN")
TOPOLOGY_THEOREMS = ("KMN_FORMULA", "CYCLE_TENSOR")
THEOREM_IDS = RING_THEOREMS + TOPOLOGY_THEOREMS
DEFAULT_CHECK_BUDGET = 10**7

KMN_CASES = ((2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 3), (3, 4), (4, 4))
CYCLE_TENSOR_RANGE = range(3, 10)

CATALOG_NOTE = ("catalog-complete, not mathematically complete: local factors are Z_{p^k}, "
                "GF(p^k) with k >= 2 and the quotient rings " + ", ".join(NAMED_ATOMS.values()))


# ------------------------------------------------------------- enumeration


def catalog_atoms(max_order: int) -> list[Atom]:
    """Local catalog atoms of order at most ``max_order``, smallest first."""
    atoms: list[Atom] = []
    for q in range(2, max_order + 1):
        pk = prime_power(q)
        if pk is None:
            continue
        atoms.append(Zn(q))
        if pk[1] >= 2:
            atoms.append(GF(*pk))
    for kind in NAMED_ATOMS:
        if spec_order(Atom(kind)) <= max_order:
            atoms.append(Atom(kind))
    return sorted(atoms, key=_atom_key)


def _atom_key(a: Atom) -> tuple:
    rank = ("Zn", "GF", *NAMED_ATOMS).index(a.kind)
    return (spec_order(a), rank, a.params)


def enumerate_rings(max_order: int, odd_cyclic_only: bool = False) -> list[RingSpec]:
    """Every multiset of catalog atoms whose orders multiply to <= max_order.

    With ``odd_cyclic_only`` the odd-order factors are restricted to
    Z_{p^k}; even-order factors still range over the whole catalog.
    """
    if max_order < 2:
        raise ValueError("max_order must be at least 2")
    atoms = catalog_atoms(max_order)
    if odd_cyclic_only:
        atoms = [a for a in atoms if spec_order(a) % 2 == 0 or a.kind == "Zn"]
    found: list[tuple[Atom, ...]] = []

    def grow(start: int, chosen: list[Atom], order: int) -> None:
        if chosen:
            found.append(tuple(chosen))
        for i in range(start, len(atoms)):
            o = spec_order(atoms[i])
            if order * o > max_order:
                break
            chosen.append(atoms[i])
            grow(i, chosen, order * o)
            chosen.pop()

    grow(0, [], 1)
    found.sort(key=lambda t: (_order_of(t), len(t), [_atom_key(a) for a in t]))
    return [t[0] if len(t) == 1 else Product(t) for t in found]


def _order_of(atoms) -> int:
    out = 1
    for a in atoms:
        out *= spec_order(a)
    return out


# --------------------------------------------------------------- instances


class Instance:
    """Lazily computed objects for one catalog ring."""

    def __init__(self, spec: RingSpec):
        self.spec = spec
        self.name = format_ring_spec(spec)

    @cached_property
    def ring(self) -> FiniteRing:
        return build_ring(self.spec)

    @cached_property
    def graph(self):
        return build_cayley(self.ring)

    @cached_property
    def decomposition(self):
        return local_decomposition(self.ring)

    @cached_property
    def classes(self):
        return local_classes(self.decomposition)


@dataclass
class Outcome:
    status: str  # "pass", "fail" or "skip"
    expected: object = None
    observed: object = None
    evidence: dict | None = None


def _passfail(expected, observed, evidence=None) -> Outcome:
    return Outcome("pass" if expected == observed else "fail", expected, observed, evidence)


def _check_imp1(inst: Instance) -> Outcome:
    degree = is_regular(inst.graph)
    ok = degree is not None and is_power_of_two(degree) and degree == len(involutions(inst.ring))
    return Outcome("pass" if ok else "fail", "2^t-regular", degree)


def _check_imp2(inst: Instance) -> Outcome | None:
    r = inst.ring
    if r.order % 2 == 0 or not is_local(r):
        return None
    c = r.characteristic
    expected = [c] * (r.order // c)
    if is_regular(inst.graph) != 2:
        return Outcome("fail", expected, f"{is_regular(inst.graph)}-regular")
    return _passfail(expected, cycle_decomposition(inst.graph))


def _check_imp3(inst: Instance) -> Outcome:
    return _passfail(inst.ring.order % 2 == 0, is_bipartite(inst.graph))


def _check_imp4(inst: Instance, budget: int) -> Outcome | None:
    factors = inst.decomposition.factors
    if len(factors) < 2:
        return None
    model = build_cayley(factors[0])
    for f in factors[1:]:
        model = tensor_product(model, build_cayley(f))
    return _passfail(True, is_isomorphic(inst.graph, model, budget))


def _check_conn(inst: Instance) -> Outcome:
    return _passfail(predict_connected(inst.decomposition), is_connected(inst.graph))


def _check_planar(inst: Instance) -> Outcome:
    expected = classify_planar(inst.decomposition)
    planar = is_planar(inst.graph, witness=False).planar
    low_degree = is_regular(inst.graph) in (1, 2)
    if planar != low_degree:
        return Outcome("fail", expected, {"planar": planar, "degree": is_regular(inst.graph)})
    return _passfail(expected, planar)


def _check_main(inst: Instance, budget: int) -> Outcome:
    predicted = classify_genus(inst.decomposition)
    observed = genus_class_from_graph(inst.graph)
    if predicted.kind != observed.kind:
        return Outcome("fail", predicted.kind, observed.kind)
    g = inst.graph
    if observed.kind == "Planar":
        return _passfail(True, is_planar(g, witness=False).planar)
    if observed.kind == "Higher":
        low = genus_lower_bound(g)
        return Outcome("pass" if low >= 2 else "fail", "genus >= 2", f"lower bound {low}")
    witness = nonplanarity_witness(g)
    if witness is None:
        return Outcome("fail", "non-planar", "planar")
    try:
        emb, source = constructive_embedding(inst.ring, g, budget)
    except NoConstruction:
        cert = min_genus(g, budget)
        if isinstance(cert, Bounds):
            return Outcome("skip", 1, f"budget: genus in [{cert.low}, {cert.high}]")
        emb, source = cert, "min_genus"
    evidence = {
        "ring": inst.name,
        "family": predicted.clause,
        "nonplanarity": witness.to_dict(),
        "certificate": {"source": source, "faces": emb.face_count, "genus": emb.genus},
    }
    return _passfail(1, emb.genus, evidence)


def check_theorem(theorem_id: str, spec: RingSpec | Instance,
                  budget: int = DEFAULT_CHECK_BUDGET) -> Outcome | None:
    """Evaluate one ring-level theorem on one ring; None when it does not apply."""
    inst = spec if isinstance(spec, Instance) else Instance(spec)
    try:
        if theorem_id == "IMP1":
            return _check_imp1(inst)
        if theorem_id == "IMP2":
            return _check_imp2(inst)
        if theorem_id == "IMP3":
            return _check_imp3(inst)
        if theorem_id == "IMP4":
            return _check_imp4(inst, budget)
        if theorem_id == "CONN":
            return _check_conn(inst)
        if theorem_id == "PLANAR":
            return _check_planar(inst)
        if theorem_id == "MAIN":
            return _check_main(inst, budget)
    except SearchBudgetExceeded as exc:
        return Outcome("skip", observed=f"budget: {exc}")
    raise ValueError(f"unknown ring theorem {theorem_id!r}")


# ------------------------------------------------------- topology formulas


def check_kmn(m: int, n: int, budget: int = DEFAULT_CHECK_BUDGET) -> Outcome:
    cert = min_genus(complete_bipartite(m, n), budget)
    if isinstance(cert, Bounds):
        return Outcome("skip", genus_complete_bipartite(m, n), f"budget: [{cert.low}, {cert.high}]")
    return _passfail(genus_complete_bipartite(m, n), cert.genus)


def check_cycle_tensor(m: int, n: int) -> Outcome:
    """Formula value against an explicit embedding and a matching lower bound."""
    g = cycle_tensor_graph(m, n)
    expected = genus_cycle_tensor(m, n)
    emb = make_embedding(g, diagonal_grid_rotation(m, n))
    comps = len(connected_components(g))
    low = genus_lower_bound(g)
    want_comps = 2 if m % 2 == 0 and n % 2 == 0 else 1
    ok = emb.face_count == m * n and comps == want_comps and low == emb.genus == expected
    observed = {"components": comps, "faces": emb.face_count, "low": low, "high": emb.genus}
    return Outcome("pass" if ok else "fail", expected, observed)


# ------------------------------------------------------------------ report


@dataclass
class TheoremReport:
    id: str
    checked: int = 0
    failures: list = field(default_factory=list)
    skipped: list = field(default_factory=list)
    evidence: list = field(default_factory=list)

    def record(self, subject: str, outcome: Outcome | None) -> None:
        if outcome is None:
            return
        if outcome.status == "skip":
            self.skipped.append({"instance": subject, "reason": str(outcome.observed)})
            return
        self.checked += 1
        if outcome.status == "fail":
            self.failures.append({"instance": subject, "expected": _jsonable(outcome.expected),
                                  "observed": _jsonable(outcome.observed)})
        elif outcome.evidence is not None:
            self.evidence.append(outcome.evidence)

    def to_dict(self) -> dict:
        out = {"id": self.id, "checked": self.checked,
               "failures": self.failures, "skipped": self.skipped}
        if self.evidence:
            out["evidence"] = self.evidence
        return out


def _jsonable(x):
    return json.loads(json.dumps(x, default=str))


def run_suite(max_order: int, budget: int = DEFAULT_CHECK_BUDGET,
              theorems=THEOREM_IDS, odd_cyclic_only: bool = False) -> dict:
    """Run the selected theorems over the catalog up to ``max_order``."""
    unknown = set(theorems) - set(THEOREM_IDS)
    if unknown:
        raise ValueError(f"unknown theorem ids {sorted(unknown)}")
    specs = enumerate_rings(max_order, odd_cyclic_only)
    reports = {tid: TheoremReport(tid) for tid in THEOREM_IDS if tid in theorems}
    for spec in specs:
        inst = Instance(spec)
        for tid in RING_THEOREMS:
            if tid in reports:
                reports[tid].record(inst.name, check_theorem(tid, inst, budget))
    if "KMN_FORMULA" in reports:
        for m, n in KMN_CASES:
            reports["KMN_FORMULA"].record(f"K{m},{n}", check_kmn(m, n, budget))
    if "CYCLE_TENSOR" in reports:
        for m, n in itertools.combinations_with_replacement(CYCLE_TENSOR_RANGE, 2):
            reports["CYCLE_TENSOR"].record(f"C{m} x C{n}", check_cycle_tensor(m, n))
    return {
        "catalog_version": CATALOG_VERSION,
        "catalog": CATALOG_NOTE,
        "family": "odd-cyclic" if odd_cyclic_only else "full",
        "max_order": max_order,
        "rings": len(specs),
        "theorems": [r.to_dict() for r in reports.values()],
    }


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def total_failures(report: dict) -> int:
    return sum(len(t["failures"]) for t in report["theorems"])


def total_skips(report: dict) -> int:
    return sum(len(t["skipped"]) for t in report["theorems"])


__all__ = [
    "CATALOG_VERSION", "Instance", "Outcome", "RING_THEOREMS", "THEOREM_IDS", "TheoremReport",
    "catalog_atoms", "check_cycle_tensor", "check_kmn", "check_theorem",
    "enumerate_rings", "report_json", "run_suite", "total_failures", "total_skips",
]
