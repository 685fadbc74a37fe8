import json

import pytest

from invcayley.ringspec import GF, NAMED_ATOMS, Atom, Product, Zn, format_ring_spec, spec_order
from invcayley.verifier import (
    THEOREM_IDS,
    catalog_atoms,
    check_theorem,
    enumerate_rings,
    report_json,
    run_suite,
    total_failures,
    total_skips,
)

GOLDEN_COUNT_16 = 49


def _oracle_count(max_order: int) -> int:
    """Multisets of local catalog orders with product <= max_order, counted by hand-built table."""
    sizes = []
    for q in range(2, max_order + 1):
        p = next(d for d in range(2, q + 1) if q % d == 0)
        k, m = 0, q
        while m % p == 0:
            m //= p
            k += 1
        if m != 1:
            continue
        sizes.append(q)            # Z_q
        if k >= 2:
            sizes.append(q)        # GF(q)
    sizes += [4] + [8] * 4 if max_order >= 8 else ([4] if max_order >= 4 else [])

    def count(i, budget):
        if i == len(sizes):
            return 1
        total, prod = 0, 1
        while prod <= budget:
            total += count(i + 1, budget // prod)
            prod *= sizes[i]
        return total

    return count(0, max_order) - 1


def test_enumeration_count_golden():
    assert len(enumerate_rings(16)) == GOLDEN_COUNT_16 == _oracle_count(16)
    for n in (2, 4, 8, 12, 30):
        assert len(enumerate_rings(n)) == _oracle_count(n)


def test_enumeration_small():
    names = {format_ring_spec(s) for s in enumerate_rings(4)}
    assert names == {"Z2", "Z3", "Z4", "GF(4)", "Z2[x]/(x^2)", "Z2 x Z2"}
    eight = enumerate_rings(8)
    for kind in NAMED_ATOMS:
        assert Atom(kind) in eight
    assert GF(2, 3) in eight and Zn(8) in eight


def test_enumeration_is_deterministic_and_deduplicated():
    a, b = enumerate_rings(30), enumerate_rings(30)
    assert a == b
    keys = [tuple(sorted(map(str, s.children))) if isinstance(s, Product) else (str(s),) for s in a]
    assert len(keys) == len(set(keys))


def test_enumeration_rejects_tiny_bound():
    with pytest.raises(ValueError):
        enumerate_rings(1)


def test_odd_cyclic_filter():
    specs = enumerate_rings(40, odd_cyclic_only=True)
    for s in specs:
        atoms = s.children if isinstance(s, Product) else (s,)
        assert all(a.kind == "Zn" for a in atoms if spec_order(a) % 2)
    assert GF(3, 2) not in specs and GF(2, 3) in specs


def test_catalog_atoms_sorted_by_order():
    atoms = catalog_atoms(16)
    orders = [spec_order(a) for a in atoms]
    assert orders == sorted(orders)
    # Z_q for the 10 prime powers q <= 16, GF(q) for 4 of them, five named quotients
    assert len(atoms) == 10 + 4 + 5


def test_check_theorem_examples():
    assert check_theorem("IMP3", Zn(15)).status == "pass"
    out = check_theorem("IMP2", GF(7, 2))
    assert out.status == "pass" and out.observed == [7] * 7
    main = check_theorem("MAIN", Zn(8))
    assert main.status == "pass"
    assert main.evidence["certificate"]["source"] == "z2n_torus_rotation(3)"
    assert main.evidence["nonplanarity"]["reason"] == "euler-girth"
    assert check_theorem("IMP2", Zn(8)) is None
    assert check_theorem("IMP4", Zn(9)) is None
    with pytest.raises(ValueError):
        check_theorem("NOPE", Zn(3))


def test_imp4_at_order_8():
    report = run_suite(8, theorems=("IMP4",))
    (imp4,) = report["theorems"]
    # five two-factor products and Z2 x Z2 x Z2
    assert imp4["checked"] == 6 and not imp4["failures"] and not imp4["skipped"]


def test_suite_16_is_clean_and_has_two_sided_evidence():
    report = run_suite(16)
    assert [t["id"] for t in report["theorems"]] == list(THEOREM_IDS)
    assert total_failures(report) == 0 and total_skips(report) == 0
    main = next(t for t in report["theorems"] if t["id"] == "MAIN")
    toroidal = {"Z8", "Z16", "Z2[x,y]/(x^2,xy,y^2)", "Z4[x]/(x^2,2x)", "Z3 x Z3", "Z3 x Z5",
                "Z3 x Z4", "Z3 x Z2[x]/(x^2)"}
    assert {ev["ring"] for ev in main["evidence"]} == toroidal
    for ev in main["evidence"]:
        assert ev["nonplanarity"]["bound"] >= 1
        assert ev["certificate"]["genus"] == 1
    assert "catalog-complete" in report["catalog"]


def test_main_at_40_includes_the_named_products():
    report = run_suite(40, theorems=("MAIN",), odd_cyclic_only=True)
    (main,) = report["theorems"]
    rings = {ev["ring"] for ev in main["evidence"]}
    assert {"Z3 x Z5", "Z3 x Z9", "Z5 x Z7", "Z3 x Z4", "Z2 x Z3 x Z3"} <= rings
    assert not main["failures"]


def test_report_is_byte_identical():
    assert report_json(run_suite(12)) == report_json(run_suite(12))
    data = json.loads(report_json(run_suite(6, theorems=("IMP1",))))
    assert set(data) >= {"catalog_version", "max_order", "theorems"}
    assert set(data["theorems"][0]) == {"id", "checked", "failures", "skipped"}


def test_failures_are_recorded_not_raised():
    from invcayley.verifier import Outcome, TheoremReport
    rep = TheoremReport("IMP1")
    rep.record("Zx", Outcome("fail", 4, 3))
    rep.record("Zy", Outcome("skip", observed="budget: exhausted"))
    rep.record("Zz", None)
    d = rep.to_dict()
    assert d["checked"] == 1
    assert d["failures"] == [{"instance": "Zx", "expected": 4, "observed": 3}]
    assert d["skipped"] == [{"instance": "Zy", "reason": "budget: exhausted"}]


def test_unknown_theorem_in_suite():
    with pytest.raises(ValueError):
        run_suite(4, theorems=("IMP9",))
