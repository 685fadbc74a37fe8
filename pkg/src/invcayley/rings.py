"""Finite commutative rings with identity.

Elements are the integers ``0 .. order-1``; each ring maps them to its own
arithmetic.  Three concrete shapes cover everything the package builds:

* :class:`ZnRing` -- integers modulo ``n``, arithmetic computed directly;
* :class:`TableRing` -- explicit operation tables, produced by the
  structure-constant constructor :func:`structure_ring` (Galois fields and
  the small quotient rings) and by :func:`local_decomposition`;
* :class:`ProductRing` -- componentwise arithmetic over factor rings, with
  mixed-radix indices and no materialized tables.
"""

from __future__ import annotations

import itertools
import math
import random
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import Budget, SearchBudgetExceeded
from .numtheory import factorize
from .ringspec import Atom, Product, RingSpec, validate_atom


class FiniteRing:
    """Base class; subclasses supply ``_add``, ``_mul``, ``_neg``, ``_label``."""

    order: int
    zero: int
    one: int

    def __init__(self):
        self._cache: dict[str, object] = {}

    # -- arithmetic on element indices (range-checked) --------------------

    def _check(self, x: int) -> None:
        if not 0 <= x < self.order:
            raise IndexError(f"element {x} out of range for ring of order {self.order}")

    def add(self, x: int, y: int) -> int:
        self._check(x)
        self._check(y)
        return self._add(x, y)

    def mul(self, x: int, y: int) -> int:
        self._check(x)
        self._check(y)
        return self._mul(x, y)

    def neg(self, x: int) -> int:
        self._check(x)
        return self._neg(x)

    def sub(self, x: int, y: int) -> int:
        self._check(x)
        self._check(y)
        return self._add(x, self._neg(y))

    def label(self, x: int) -> str:
        self._check(x)
        return self._label(x)

    @property
    def labels(self) -> tuple[str, ...]:
        if "labels" not in self._cache:
            self._cache["labels"] = tuple(self._label(x) for x in range(self.order))
        return self._cache["labels"]

    def index(self, label: str) -> int:
        """Element whose label is ``label`` (whitespace-insensitive)."""
        want = label.replace(" ", "")
        for x, name in enumerate(self.labels):
            if name.replace(" ", "") == want:
                return x
        raise KeyError(label)

    def elements(self) -> range:
        return range(self.order)

    def additive_order(self, x: int) -> int:
        k, acc = 1, x
        while acc != self.zero:
            acc = self._add(acc, x)
            k += 1
        return k

    @property
    def characteristic(self) -> int:
        if "char" not in self._cache:
            self._cache["char"] = self.additive_order(self.one)
        return self._cache["char"]

    def power(self, x: int, e: int) -> int:
        acc = self.one
        for _ in range(e):
            acc = self._mul(acc, x)
        return acc

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"<{type(self).__name__} order={self.order} char={self.characteristic}>"


class ZnRing(FiniteRing):
    def __init__(self, n: int):
        super().__init__()
        if n < 2:
            raise ValueError(f"Z{n} has no nonzero identity")
        self.n = self.order = n
        self.zero, self.one = 0, 1

    def _add(self, x, y):
        return (x + y) % self.n

    def _mul(self, x, y):
        return (x * y) % self.n

    def _neg(self, x):
        return -x % self.n

    def _label(self, x):
        return str(x)

    def additive_order(self, x):
        return self.n // math.gcd(x, self.n)


class TableRing(FiniteRing):
    """Ring given by full addition and multiplication tables."""

    def __init__(self, add_table, mul_table, zero: int, one: int,
                 labels: Sequence[str] | None = None, check: bool = False):
        super().__init__()
        self.order = len(add_table)
        if self.order < 2:
            raise ValueError("the trivial ring is not allowed (identity must be nonzero)")
        self.add_table = tuple(tuple(row) for row in add_table)
        self.mul_table = tuple(tuple(row) for row in mul_table)
        self.zero, self.one = zero, one
        if zero == one:
            raise ValueError("zero and one coincide")
        self.neg_table = tuple(row.index(zero) for row in self.add_table)
        self._labels = tuple(labels) if labels is not None else tuple(map(str, range(self.order)))
        if check:
            check_ring_axioms(self)

    def _add(self, x, y):
        return self.add_table[x][y]

    def _mul(self, x, y):
        return self.mul_table[x][y]

    def _neg(self, x):
        return self.neg_table[x]

    def _label(self, x):
        return self._labels[x]


class ProductRing(FiniteRing):
    """Direct product with componentwise operations; first factor most significant."""

    def __init__(self, factors: Sequence[FiniteRing]):
        super().__init__()
        if not factors:
            raise ValueError("empty product")
        self.factors = tuple(factors)
        self.strides = []
        stride = 1
        for f in reversed(self.factors):
            self.strides.append(stride)
            stride *= f.order
        self.strides.reverse()
        self.order = stride
        self.zero = self.encode(f.zero for f in self.factors)
        self.one = self.encode(f.one for f in self.factors)

    def decode(self, x: int) -> tuple[int, ...]:
        return tuple((x // s) % f.order for s, f in zip(self.strides, self.factors))

    def encode(self, parts: Iterable[int]) -> int:
        return sum(p * s for p, s in zip(parts, self.strides))

    def _add(self, x, y):
        return self.encode(f._add(a, b) for f, a, b in zip(self.factors, self.decode(x), self.decode(y)))

    def _mul(self, x, y):
        return self.encode(f._mul(a, b) for f, a, b in zip(self.factors, self.decode(x), self.decode(y)))

    def _neg(self, x):
        return self.encode(f._neg(a) for f, a in zip(self.factors, self.decode(x)))

    def _label(self, x):
        return "(" + ", ".join(f._label(a) for f, a in zip(self.factors, self.decode(x))) + ")"


# ------------------------------------------------------------ constructors


def _term_label(coeffs: Sequence[int], names: Sequence[str]) -> str:
    terms = []
    for c, name in zip(coeffs, names):
        if c == 0:
            continue
        if not name:
            terms.append(str(c))
        else:
            terms.append(name if c == 1 else f"{c}{name}")
    return "+".join(terms) if terms else "0"


def structure_ring(moduli: Sequence[int], names: Sequence[str],
                   products, one: Sequence[int] | None = None,
                   check: bool = False) -> TableRing:
    """Ring on the additive group Z_m0 x Z_m1 x ... from structure constants.

    ``products[i][j]`` is the coefficient vector of ``e_i * e_j`` for basis
    elements ``e_i``; ``one`` defaults to ``e_0``.  Index of an element is
    the mixed-radix number of its coefficient vector, ``e_0`` least
    significant.  Pass ``check=True`` to verify the ring axioms.
    """
    k = len(moduli)
    if one is None:
        one = [1] + [0] * (k - 1)
    vectors = [tuple(v) for v in itertools.product(*(range(m) for m in reversed(moduli)))]
    vectors = [v[::-1] for v in vectors]

    def encode(v):
        idx, stride = 0, 1
        for c, m in zip(v, moduli):
            idx += (c % m) * stride
            stride *= m
        return idx

    order = len(vectors)
    add_t = [[encode([a + b for a, b in zip(u, v)]) for v in vectors] for u in vectors]
    mul_t = []
    for u in vectors:
        row = []
        for v in vectors:
            acc = [0] * k
            for i, ui in enumerate(u):
                if not ui:
                    continue
                for j, vj in enumerate(v):
                    if not vj:
                        continue
                    for t, c in enumerate(products[i][j]):
                        acc[t] += ui * vj * c
            row.append(encode(acc))
        mul_t.append(row)
    labels = [_term_label(v, names) for v in vectors]
    return TableRing(add_t, mul_t, 0, encode(one), labels, check=check and order > 0)


def _poly_mod(a: list[int], f: list[int], p: int) -> list[int]:
    """Remainder of ``a`` by monic ``f`` over Z_p (coefficients low to high)."""
    a = [c % p for c in a]
    df = len(f) - 1
    for top in range(len(a) - 1, df - 1, -1):
        c = a[top]
        if c:
            for i, fc in enumerate(f):
                a[top - df + i] = (a[top - df + i] - c * fc) % p
    return (a + [0] * df)[:df]


def _monic_polys(p: int, degree: int):
    """Monic polynomials of a given degree, lexicographic in (c_{d-1}, ..., c_0)."""
    for coeffs in itertools.product(range(p), repeat=degree):
        yield list(reversed(coeffs)) + [1]


@lru_cache(maxsize=None)
def irreducible_polynomial(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically first monic irreducible of degree ``k`` over Z_p.

    Irreducibility by trial division against every monic polynomial of
    degree ``1 .. k // 2`` (degree 1 divisors are exactly the roots).
    """
    for f in _monic_polys(p, k):
        if all(any(_poly_mod(f, g, p)) for d in range(1, k // 2 + 1) for g in _monic_polys(p, d)):
            return tuple(f)
    raise AssertionError(f"no irreducible polynomial of degree {k} over Z_{p}")


def galois_field(p: int, k: int) -> TableRing:
    validate_atom("GF", (p, k))
    f = list(irreducible_polynomial(p, k))
    products = [[_poly_mod([0] * (i + j) + [1], f, p) if k > 1 else [1] for j in range(k)]
                for i in range(k)]
    names = [""] + ["x" if i == 1 else f"x^{i}" for i in range(1, k)]
    return structure_ring([p] * k, names, products)


def _named_ring(kind: str) -> TableRing:
    if kind == "Z2X2":  # Z_2[x]/(x^2)
        return structure_ring([2, 2], ["", "x"], [[[1, 0], [0, 1]], [[0, 1], [0, 0]]])
    if kind == "Z2X3":  # Z_2[x]/(x^3), basis 1, x, x^2
        e = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [0, 0, 0]]
        prods = [[e[min(i + j, 3)] for j in range(3)] for i in range(3)]
        return structure_ring([2, 2, 2], ["", "x", "x^2"], prods)
    if kind == "Z4A":  # Z_4[x]/(2x, x^2 - 2): a + bx, a in Z_4, b in Z_2, x^2 = 2
        return structure_ring([4, 2], ["", "x"], [[[1, 0], [0, 1]], [[0, 1], [2, 0]]])
    if kind == "Z2XY":  # Z_2[x,y]/(x^2, xy, y^2)
        z = [0, 0, 0]
        return structure_ring([2, 2, 2], ["", "x", "y"],
                              [[[1, 0, 0], [0, 1, 0], [0, 0, 1]],
                               [[0, 1, 0], z, z],
                               [[0, 0, 1], z, z]])
    if kind == "Z4B":  # Z_4[x]/(x^2, 2x)
        return structure_ring([4, 2], ["", "x"], [[[1, 0], [0, 1]], [[0, 1], [0, 0]]])
    raise ValueError(f"unknown catalog id {kind!r}")


@lru_cache(maxsize=None)
def _build_atom(atom: Atom) -> FiniteRing:
    if atom.kind == "Zn":
        return ZnRing(atom.params[0])
    if atom.kind == "GF":
        return galois_field(*atom.params)
    return _named_ring(atom.kind)


@lru_cache(maxsize=256)
def build_ring(spec: RingSpec) -> FiniteRing:
    """Construct the ring a spec describes.  Results are cached and immutable."""
    if isinstance(spec, Atom):
        validate_atom(spec.kind, spec.params)
        return _build_atom(spec)
    if isinstance(spec, Product):
        if len(spec.children) == 1:
            return build_ring(spec.children[0])
        return ProductRing([build_ring(c) for c in spec.children])
    raise TypeError(f"not a ring spec: {spec!r}")


# --------------------------------------------------------- element queries


def _cached(r: FiniteRing, key: str, compute):
    if key not in r._cache:
        r._cache[key] = compute()
    return r._cache[key]


def involutions(r: FiniteRing) -> frozenset[int]:
    """Elements with u*u == 1."""
    return _cached(r, "inv", lambda: frozenset(u for u in r.elements() if r._mul(u, u) == r.one))


def idempotents(r: FiniteRing) -> frozenset[int]:
    return _cached(r, "idem", lambda: frozenset(e for e in r.elements() if r._mul(e, e) == e))


def _compute_units(r: FiniteRing) -> frozenset[int]:
    if isinstance(r, ZnRing):
        return frozenset(u for u in r.elements() if math.gcd(u, r.n) == 1)
    if isinstance(r, ProductRing):
        parts = [sorted(units(f)) for f in r.factors]
        return frozenset(r.encode(t) for t in itertools.product(*parts))
    found: set[int] = set()
    for u in r.elements():
        if u in found:
            continue
        for v in r.elements():
            if r._mul(u, v) == r.one:
                found.update((u, v))
                break
    return frozenset(found)


def units(r: FiniteRing) -> frozenset[int]:
    return _cached(r, "units", lambda: _compute_units(r))


def is_local(r: FiniteRing) -> bool:
    """True iff the non-units are closed under addition."""
    def compute():
        if isinstance(r, ProductRing) and len(r.factors) > 1:
            return False
        u = units(r)
        nonunits = [x for x in r.elements() if x not in u]
        return all(r._add(a, b) not in u for i, a in enumerate(nonunits) for b in nonunits[i:])
    return _cached(r, "local", compute)


def maximal_ideal(r: FiniteRing) -> frozenset[int]:
    if not is_local(r):
        raise ValueError("maximal_ideal needs a local ring")
    u = units(r)
    return frozenset(x for x in r.elements() if x not in u)


# ----------------------------------------------------------- decomposition


@dataclass(frozen=True)
class LocalDecomposition:
    """``r`` split as ``e_1 r x ... x e_t r`` with each factor local."""

    ring: FiniteRing
    idempotents: tuple[int, ...]
    factors: tuple[FiniteRing, ...]
    projections: tuple[tuple[int, ...], ...]

    def project(self, x: int) -> tuple[int, ...]:
        return tuple(p[x] for p in self.projections)

    @property
    def factor_orders(self) -> list[int]:
        return [f.order for f in self.factors]


def ideal_ring(r: FiniteRing, e: int) -> tuple[TableRing, tuple[int, ...]]:
    """The ring ``e*r`` with identity ``e`` and the projection ``x -> e*x``."""
    elems = sorted({r._mul(e, x) for x in r.elements()})
    pos = {x: i for i, x in enumerate(elems)}
    add_t = [[pos[r._add(a, b)] for b in elems] for a in elems]
    mul_t = [[pos[r._mul(a, b)] for b in elems] for a in elems]
    sub = TableRing(add_t, mul_t, pos[r.zero], pos[e], [r._label(x) for x in elems])
    return sub, tuple(pos[r._mul(e, x)] for x in r.elements())


def local_decomposition(r: FiniteRing) -> LocalDecomposition:
    """Split ``r`` by primitive orthogonal idempotents.

    All idempotents are enumerated, then any part ``e`` that some
    idempotent ``f`` with ``f*e == f`` (``f`` not 0 or ``e``) divides is
    replaced by ``f`` and ``e - f``, until nothing splits.
    """
    def compute():
        idem = sorted(idempotents(r))
        parts = [r.one]
        changed = True
        while changed:
            changed = False
            for i, e in enumerate(parts):
                for f in idem:
                    if f != r.zero and f != e and r._mul(f, e) == f:
                        parts[i:i + 1] = [f, r._add(e, r._neg(f))]
                        changed = True
                        break
                if changed:
                    break
        built = [(e, *ideal_ring(r, e)) for e in parts]

        def key(item):
            e, sub, _ = item
            return (min(factorize(sub.order)), sub.order, e)

        built.sort(key=key)
        return LocalDecomposition(
            ring=r,
            idempotents=tuple(e for e, _, _ in built),
            factors=tuple(s for _, s, _ in built),
            projections=tuple(p for _, _, p in built),
        )
    return _cached(r, "decomp", compute)


# ------------------------------------------------------------- isomorphism


def ring_invariants(r: FiniteRing) -> tuple:
    return (
        r.order,
        r.characteristic,
        len(units(r)),
        len(involutions(r)),
        len(idempotents(r)),
        tuple(sorted(Counter(r.additive_order(x) for x in r.elements()).items())),
    )


def _element_signature(r: FiniteRing, x: int) -> tuple:
    sq = r._mul(x, x)
    return (r.additive_order(x), x in units(r), sq == r.zero, sq == x, sq == r.one)


def _closure_stages(r: FiniteRing):
    """Choose ring generators greedily and record how the closure grows.

    Returns ``(generators, stages)``; stage ``k`` lists operations
    ``(op, x, y, z)`` meaning ``z = x op y`` that first become available
    once generator ``k`` is present.  Together the stages cover every
    pair of elements, so replaying them checks a full homomorphism.
    """
    known: list[int] = []
    seen: set[int] = set()
    gens: list[int] = []
    stages: list[list[tuple]] = []

    def absorb(start, ops):
        queue = list(start)
        for x in queue:
            if x in seen:
                continue
            seen.add(x)
            known.append(x)
            for y in list(known):
                for op, z in (("+", r._add(x, y)), ("*", r._mul(x, y))):
                    ops.append((op, x, y, z))
                    if z not in seen:
                        queue.append(z)

    ops: list[tuple] = []
    absorb([r.one], ops)
    stages.append(ops)
    gens.append(r.one)
    while len(seen) < r.order:
        g = min(x for x in r.elements() if x not in seen)
        gens.append(g)
        ops = []
        absorb([g], ops)
        stages.append(ops)
    return gens, stages


def find_ring_isomorphism(a: FiniteRing, b: FiniteRing, budget: int = 200_000) -> dict[int, int] | None:
    """An element map a -> b preserving +, *, 0 and 1, or None.

    Raises :class:`SearchBudgetExceeded` if the backtracking over generator
    images exceeds ``budget`` replayed operations.
    """
    if ring_invariants(a) != ring_invariants(b):
        return None
    gens, stages = _closure_stages(a)
    sig_b: dict[tuple, list[int]] = {}
    for y in b.elements():
        sig_b.setdefault(_element_signature(b, y), []).append(y)
    counter = Budget(budget)
    ops = {"+": b._add, "*": b._mul}

    def replay(stage, phi, used):
        added = []
        for op, x, y, z in stage:
            if not counter.spend():
                raise SearchBudgetExceeded("ring isomorphism", budget)
            image = ops[op](phi[x], phi[y])
            have = phi.get(z)
            if have is None and image not in used:
                phi[z] = image
                used.add(image)
                added.append(z)
            elif have != image:
                for w in added:
                    used.discard(phi.pop(w))
                return None
        return added

    def search(k, phi, used):
        if k == len(gens):
            return dict(phi)
        g = gens[k]
        if k == 0:
            candidates = [b.one]
        else:
            candidates = [y for y in sig_b.get(_element_signature(a, g), []) if y not in used]
        for y in candidates:
            phi[g] = y
            used.add(y)
            added = replay(stages[k], phi, used)
            if added is not None:
                found = search(k + 1, phi, used)
                if found is not None:
                    return found
                for w in added:
                    used.discard(phi.pop(w))
            del phi[g]
            used.discard(y)
        return None

    return search(0, {}, set())


def ring_isomorphic(a: FiniteRing, b: FiniteRing, budget: int = 200_000) -> bool:
    """True iff ``a`` and ``b`` are isomorphic as rings with identity.

    Raises :class:`SearchBudgetExceeded` when the answer is unknown.
    """
    return find_ring_isomorphism(a, b, budget) is not None


# ------------------------------------------------------------------ axioms


def check_ring_axioms(r: FiniteRing, sample: int = 10_000, seed: int = 0) -> None:
    """Verify the commutative-ring-with-identity axioms.

    Exhaustive over all triples when ``order <= 64``, otherwise over
    ``sample`` random triples.  Raises ValueError on the first violation.
    """
    n = r.order
    if n <= 64:
        triples: Iterable[tuple[int, int, int]] = itertools.product(range(n), repeat=3)
    else:
        rng = random.Random(seed)
        triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(sample))
    A, M = r._add, r._mul
    for x in range(n):
        if A(x, r.zero) != x or M(r.one, x) != x or A(x, r._neg(x)) != r.zero:
            raise ValueError(f"identity/inverse axiom fails at {r._label(x)}")
    if r.zero == r.one:
        raise ValueError("zero equals one")
    for x, y, z in triples:
        if A(x, y) != A(y, x) or M(x, y) != M(y, x):
            raise ValueError(f"commutativity fails at {x}, {y}")
        if A(A(x, y), z) != A(x, A(y, z)):
            raise ValueError(f"additive associativity fails at {x}, {y}, {z}")
        if M(M(x, y), z) != M(x, M(y, z)):
            raise ValueError(f"multiplicative associativity fails at {x}, {y}, {z}")
        if M(x, A(y, z)) != A(M(x, y), M(x, z)):
            raise ValueError(f"distributivity fails at {x}, {y}, {z}")
