"""Ring-spec syntax trees and the textual grammar used by the CLI.

Grammar (whitespace is ignored everywhere)::

    spec := term ("x" term)*
    term := "Z" nat
          | "GF(" nat ("," nat)? ")"
          | catalog-id
          | "(" spec ")"

``catalog-id`` is one of ``Z2X2 Z2X3 Z4A Z2XY Z4B`` or the matching
quotient spelling, which is matched verbatim before anything else::

    Z2X2   Z2[x]/(x^2)
    Z2X3   Z2[x]/(x^3)
    Z4A    Z4[x]/(2x,x^2-2)
    Z2XY   Z2[x,y]/(x^2,xy,y^2)
    Z4B    Z4[x]/(x^2,2x)

``GF(q)`` with a prime power ``q`` is read as ``GF(p,k)``.  A lone term is
returned as an :class:`Atom`; only ``x``-separated lists become
:class:`Product` nodes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .numtheory import is_prime, prime_power

#: Atoms that take no parameters, with their canonical printed spelling.
NAMED_ATOMS: dict[str, str] = {
    "Z2X2": "Z2[x]/(x^2)",
    "Z2X3": "Z2[x]/(x^3)",
    "Z4A": "Z4[x]/(2x,x^2-2)",
    "Z2XY": "Z2[x,y]/(x^2,xy,y^2)",
    "Z4B": "Z4[x]/(x^2,2x)",
}

ATOM_KINDS = ("Zn", "GF", *NAMED_ATOMS)


@dataclass(frozen=True)
class Atom:
    kind: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        validate_atom(self.kind, self.params)

    def __str__(self) -> str:
        return format_ring_spec(self)


@dataclass(frozen=True)
class Product:
    children: tuple["RingSpec", ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        if not self.children:
            raise ValueError("a product needs at least one factor")

    def __str__(self) -> str:
        return format_ring_spec(self)


RingSpec = Union[Atom, Product]


def Zn(n: int) -> Atom:
    return Atom("Zn", (n,))


def GF(p: int, k: int = 1) -> Atom:
    return Atom("GF", (p, k))


def named(kind: str) -> Atom:
    return Atom(kind)


def validate_atom(kind: str, params: tuple[int, ...]) -> None:
    if kind == "Zn":
        if len(params) != 1 or params[0] < 2:
            raise ValueError(f"Zn needs one parameter n >= 2, got {params}")
    elif kind == "GF":
        if len(params) != 2:
            raise ValueError(f"GF needs (p, k), got {params}")
        p, k = params
        if not is_prime(p):
            raise ValueError(f"GF base {p} is not prime")
        if k < 1:
            raise ValueError(f"GF degree must be >= 1, got {k}")
    elif kind in NAMED_ATOMS:
        if params:
            raise ValueError(f"{kind} takes no parameters")
    else:
        raise ValueError(f"unknown catalog id {kind!r}")


def spec_order(spec: RingSpec) -> int:
    """Number of elements of the ring a spec describes (no construction)."""
    if isinstance(spec, Product):
        n = 1
        for child in spec.children:
            n *= spec_order(child)
        return n
    if spec.kind == "Zn":
        return spec.params[0]
    if spec.kind == "GF":
        return spec.params[0] ** spec.params[1]
    return 4 if spec.kind == "Z2X2" else 8


def flatten(spec: RingSpec) -> list[Atom]:
    """Atoms of a spec, left to right, with nesting removed."""
    if isinstance(spec, Atom):
        return [spec]
    out: list[Atom] = []
    for child in spec.children:
        out.extend(flatten(child))
    return out


# ---------------------------------------------------------------- printing


def format_ring_spec(spec: RingSpec) -> str:
    if isinstance(spec, Atom):
        if spec.kind == "Zn":
            return f"Z{spec.params[0]}"
        if spec.kind == "GF":
            p, k = spec.params
            return f"GF({p ** k})"
        return NAMED_ATOMS[spec.kind]
    if len(spec.children) == 1:
        return format_ring_spec(spec.children[0])
    parts = []
    for child in spec.children:
        text = format_ring_spec(child)
        if isinstance(child, Product) and len(child.children) > 1:
            text = f"({text})"
        parts.append(text)
    return " x ".join(parts)


# ----------------------------------------------------------------- parsing


class ParseError(ValueError):
    """Malformed ring spec.

    ``position`` is a byte offset into the original text, ``expected`` the
    set of tokens that would have been accepted there.
    """

    def __init__(self, text: str, position: int, message: str, expected=()):
        self.text = text
        self.position = position
        self.message = message
        self.expected = frozenset(expected)
        super().__init__(self.render())

    def render(self) -> str:
        out = f"{self.message} at offset {self.position}"
        if self.expected:
            out += " (expected " + ", ".join(sorted(self.expected)) + ")"
        return out

    def caret(self) -> str:
        return f"{self.text}\n{' ' * self.position}^ {self.render()}"


# Aliases first so "x" inside a quotient is never read as a separator.
_WHOLE_TOKENS = sorted(
    [(alias.replace(" ", ""), kind) for kind, alias in NAMED_ATOMS.items()]
    + [(kind, kind) for kind in NAMED_ATOMS],
    key=lambda item: -len(item[0]),
)

_TERM_START = frozenset({"Z<n>", "GF(", "(", *NAMED_ATOMS})


class _Parser:
    def __init__(self, text: str):
        self.text = text
        # squeeze whitespace but remember where each kept char came from
        self.chars: list[str] = []
        self.where: list[int] = []
        for i, ch in enumerate(text):
            if not ch.isspace():
                self.chars.append(ch)
                self.where.append(i)
        self.s = "".join(self.chars)
        self.i = 0

    def offset(self, i: int | None = None) -> int:
        i = self.i if i is None else i
        return self.where[i] if i < len(self.where) else len(self.text)

    def fail(self, message: str, expected=(), at: int | None = None):
        raise ParseError(self.text, self.offset(at), message, expected)

    def peek(self, token: str) -> bool:
        return self.s.startswith(token, self.i)

    def expect(self, token: str) -> None:
        if not self.peek(token):
            got = self.s[self.i] if self.i < len(self.s) else "end of input"
            self.fail(f"unexpected {got!r}", {token})
        self.i += len(token)

    def nat(self) -> tuple[int, int]:
        start = self.i
        while self.i < len(self.s) and self.s[self.i].isdigit():
            self.i += 1
        if start == self.i:
            got = self.s[self.i] if self.i < len(self.s) else "end of input"
            self.fail(f"unexpected {got!r}", {"<nat>"})
        return int(self.s[start:self.i]), start

    def parse(self) -> RingSpec:
        if not self.s:
            self.fail("empty ring spec", _TERM_START)
        spec = self.spec()
        if self.i != len(self.s):
            self.fail(f"unexpected {self.s[self.i]!r}", {"x", "<end>"})
        return spec

    def spec(self) -> RingSpec:
        terms = [self.term()]
        while self.peek("x"):
            self.i += 1
            terms.append(self.term())
        return terms[0] if len(terms) == 1 else Product(tuple(terms))

    def term(self) -> RingSpec:
        for token, kind in _WHOLE_TOKENS:
            if self.peek(token):
                self.i += len(token)
                return Atom(kind)
        if self.peek("GF("):
            return self.galois()
        if self.peek("("):
            self.i += 1
            inner = self.spec()
            self.expect(")")
            return inner
        if self.peek("Z"):
            self.i += 1
            n, at = self.nat()
            if n < 2:
                self.fail(f"Z{n} is not a ring with nonzero identity", at=at)
            if self.peek("^"):
                self.fail("exponent sugar is not supported; write Zn x Zn", {"x", ")", "<end>"})
            return Zn(n)
        got = self.s[self.i] if self.i < len(self.s) else "end of input"
        self.fail(f"unexpected {got!r}", _TERM_START)

    def galois(self) -> Atom:
        self.i += 3
        q, at = self.nat()
        if self.peek(","):
            self.i += 1
            k, _ = self.nat()
            self.expect(")")
            if not is_prime(q):
                self.fail(f"GF base {q} is not prime", at=at)
            if k < 1:
                self.fail("GF degree must be positive", at=at)
            return GF(q, k)
        self.expect(")")
        pk = prime_power(q)
        if pk is None:
            self.fail(f"GF({q}): {q} is not a prime power", at=at)
        return GF(*pk)


def parse_ring_spec(text: str) -> RingSpec:
    return _Parser(text).parse()
