import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from invcayley.ringspec import (
    GF,
    NAMED_ATOMS,
    Atom,
    ParseError,
    Product,
    Zn,
    format_ring_spec,
    named,
    parse_ring_spec,
)

PRIMES = [2, 3, 5, 7, 11, 13]

atoms = st.one_of(
    st.integers(min_value=2, max_value=999).map(Zn),
    st.builds(GF, st.sampled_from(PRIMES), st.integers(min_value=1, max_value=5)),
    st.sampled_from(sorted(NAMED_ATOMS)).map(named),
)


def _products(children):
    return st.lists(children, min_size=2, max_size=4).map(lambda cs: Product(tuple(cs)))


# normalized trees: every Product has at least two children
specs = st.recursive(atoms, _products, max_leaves=8)


@given(specs)
@settings(max_examples=1000, deadline=None)
def test_round_trip(spec):
    assert parse_ring_spec(format_ring_spec(spec)) == spec


@given(specs, st.sampled_from(["", " ", "  ", "\t"]))
@settings(max_examples=200, deadline=None)
def test_whitespace_is_insignificant(spec, pad):
    text = format_ring_spec(spec)
    spaced = pad.join(text)
    assert parse_ring_spec(spaced) == spec


@pytest.mark.parametrize("alias,kind", [(v, k) for k, v in NAMED_ATOMS.items()])
def test_quotient_aliases(alias, kind):
    assert parse_ring_spec(alias) == Atom(kind)
    assert parse_ring_spec(kind) == Atom(kind)
    assert parse_ring_spec(f"Z3 x {alias}") == Product((Zn(3), Atom(kind)))
    assert parse_ring_spec(f"{alias} x Z5") == Product((Atom(kind), Zn(5)))


@pytest.mark.parametrize("text,expected", [
    ("Z8", Zn(8)),
    ("GF(4)", GF(2, 2)),
    ("GF(2,3)", GF(2, 3)),
    ("GF(7)", GF(7, 1)),
    ("Z3 x Z5 x Z2", Product((Zn(3), Zn(5), Zn(2)))),
    ("(Z3 x Z5) x Z2", Product((Product((Zn(3), Zn(5))), Zn(2)))),
    ("(Z3)", Zn(3)),
])
def test_examples(text, expected):
    assert parse_ring_spec(text) == expected


@pytest.mark.parametrize("text,position", [
    ("", 0),
    ("Z", 1),
    ("Z1", 1),
    ("GF(6)", 3),
    ("GF(4,2)", 3),
    ("Z3 x", 4),
    ("Z3 y Z5", 3),
    ("Z2^3", 2),
    ("(Z3 x Z5", 8),
    ("Q7", 0),
])
def test_parse_errors_report_position(text, position):
    with pytest.raises(ParseError) as info:
        parse_ring_spec(text)
    assert info.value.position == position
    assert "^" in info.value.caret()


def test_single_child_product_prints_as_child():
    assert format_ring_spec(Product((Zn(5),))) == "Z5"
