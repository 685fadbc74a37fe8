import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from invcayley.rings import (
    build_ring,
    check_ring_axioms,
    find_ring_isomorphism,
    idempotents,
    involutions,
    irreducible_polynomial,
    is_local,
    local_decomposition,
    maximal_ideal,
    ring_isomorphic,
    units,
)
from invcayley.ringspec import GF, Atom, Product, Zn, named
from invcayley.numtheory import factorize, prime_power

from oracles import brute_idempotents, brute_involutions, brute_units, prime_power_parts

NAMED = ["Z2X2", "Z2X3", "Z4A", "Z2XY", "Z4B"]
LOCAL_ATOMS = [Zn(q) for q in (2, 3, 4, 5, 7, 8, 9, 16, 25, 27)] + \
    [GF(2, 2), GF(2, 3), GF(3, 2), GF(2, 4)] + [named(k) for k in NAMED]


def test_build_ring_examples():
    z8 = build_ring(Zn(8))
    assert (z8.order, z8.characteristic) == (8, 8)
    z2xy = build_ring(named("Z2XY"))
    assert (z2xy.order, z2xy.characteristic) == (8, 2)
    assert set(z2xy.labels) == {"0", "1", "x", "1+x", "y", "1+y", "x+y", "1+x+y"}
    z12 = build_ring(Product((Zn(4), Zn(3))))
    assert (z12.order, z12.characteristic) == (12, 12)


def test_z4b_presentation():
    r = build_ring(named("Z4B"))
    x = r.index("x")
    assert r.order == 8 and r.characteristic == 4
    assert r.mul(x, x) == r.zero
    assert r.add(x, x) == r.zero
    assert {r.label(u) for u in units(r)} == {"1", "3", "1+x", "3+x"}


def test_z4a_presentation():
    r = build_ring(named("Z4A"))
    x, two = r.index("x"), r.index("2")
    assert r.mul(x, x) == two
    assert r.mul(two, x) == r.zero
    assert {r.label(u) for u in involutions(r)} == {"1", "3"}


@pytest.mark.parametrize("atom", LOCAL_ATOMS, ids=str)
def test_catalog_atoms_satisfy_axioms(atom):
    check_ring_axioms(build_ring(atom))


@pytest.mark.parametrize("spec", [Product((Zn(2), Zn(3))), Product((named("Z2X2"), GF(3, 1))),
                                  Product((Zn(3), Zn(3), Zn(2)))], ids=str)
def test_products_satisfy_axioms(spec):
    check_ring_axioms(build_ring(spec))


def test_large_ring_sampled_axioms():
    check_ring_axioms(build_ring(Product((Zn(9), named("Z4B")))), sample=2000)


@pytest.mark.parametrize("atom", LOCAL_ATOMS, ids=str)
def test_local_prime_power_facts(atom):
    r = build_ring(atom)
    assert is_local(r)
    m = maximal_ideal(r)
    p = prime_power(r.order)[0]
    for n in (r.order, len(m), r.characteristic):
        assert n == 1 or (prime_power(n) and prime_power(n)[0] == p)


@pytest.mark.parametrize("atom", LOCAL_ATOMS + [Product((Zn(3), named("Z2XY")))], ids=str)
def test_element_queries_match_brute_force(atom):
    r = build_ring(atom)
    assert involutions(r) == brute_involutions(r)
    assert idempotents(r) == brute_idempotents(r)
    assert units(r) == brute_units(r)


@given(st.integers(min_value=2, max_value=300))
@settings(max_examples=60, deadline=None)
def test_zn_element_queries(n):
    r = build_ring(Zn(n))
    assert involutions(r) == brute_involutions(r)
    assert units(r) == brute_units(r)
    assert len(idempotents(r)) == 2 ** len(factorize(n))


def test_fields_have_all_nonzero_units():
    for spec in (GF(2, 2), GF(2, 3), GF(3, 2), GF(5, 2), GF(2, 4)):
        r = build_ring(spec)
        assert units(r) == set(range(r.order)) - {r.zero}
        assert maximal_ideal(r) == {r.zero}


def test_irreducible_polynomials():
    assert irreducible_polynomial(2, 2) == (1, 1, 1)
    assert irreducible_polynomial(2, 3) == (1, 1, 0, 1)
    assert irreducible_polynomial(3, 2) == (1, 0, 1)


@pytest.mark.parametrize("n", range(2, 65))
def test_zn_decomposition_orders(n):
    d = local_decomposition(build_ring(Zn(n)))
    assert d.factor_orders == prime_power_parts(n)


def test_z12_idempotents():
    d = local_decomposition(build_ring(Zn(12)))
    assert tuple(d.idempotents) == (9, 4)
    assert d.factor_orders == [4, 3]


@pytest.mark.parametrize("spec", [Zn(30), Zn(60), Product((Zn(3), named("Z2XY"))),
                                  Product((GF(2, 2), Zn(2), Zn(5))), named("Z4B")], ids=str)
def test_decomposition_invariants(spec):
    r = build_ring(spec)
    d = local_decomposition(r)
    es = list(d.idempotents)
    total = r.zero
    for i, e in enumerate(es):
        assert r.mul(e, e) == e
        for f in es[i + 1:]:
            assert r.mul(e, f) == r.zero
        total = r.add(total, e)
    assert total == r.one
    prod = 1
    for f in d.factors:
        assert is_local(f)
        prod *= f.order
    assert prod == r.order
    # projections are ring homomorphisms
    for x in range(0, r.order, max(1, r.order // 7)):
        for y in range(0, r.order, max(1, r.order // 5)):
            px, py = d.project(x), d.project(y)
            pm = d.project(r.mul(x, y))
            pa = d.project(r.add(x, y))
            for k, f in enumerate(d.factors):
                assert pm[k] == f.mul(px[k], py[k])
                assert pa[k] == f.add(px[k], py[k])


def test_ring_isomorphism():
    assert ring_isomorphic(build_ring(Zn(6)), build_ring(Product((Zn(2), Zn(3)))))
    assert not ring_isomorphic(build_ring(Zn(4)), build_ring(named("Z2X2")))
    assert not ring_isomorphic(build_ring(named("Z2XY")), build_ring(named("Z4B")))
    assert not ring_isomorphic(build_ring(GF(2, 2)), build_ring(Product((Zn(2), Zn(2)))))
    a, b = build_ring(Zn(12)), build_ring(Product((Zn(3), Zn(4))))
    phi = find_ring_isomorphism(a, b)
    assert phi is not None and len(set(phi.values())) == 12
    for x in range(12):
        for y in range(12):
            assert phi[a.add(x, y)] == b.add(phi[x], phi[y])
            assert phi[a.mul(x, y)] == b.mul(phi[x], phi[y])


def test_invalid_specs_rejected():
    with pytest.raises(ValueError):
        Zn(1)
    with pytest.raises(ValueError):
        GF(4, 1)
    with pytest.raises(ValueError):
        Atom("Z9X9")
    with pytest.raises(ValueError):
        Atom("Z2X2", (2,))
    with pytest.raises(ValueError):
        Product(())


def test_arithmetic_range_checked():
    r = build_ring(Zn(5))
    with pytest.raises(IndexError):
        r.add(5, 0)
    assert r.neg(2) == 3 and r.sub(1, 3) == 3
