"""Finite commutative rings with unit, realized from a small constructor tree.

A realized :class:`Ring` presents its additive group as a product of cyclic
groups Z/c_0 x ... x Z/c_{B-1}.  An element is the tuple of its coordinates
with respect to that basis, and multiplication is stored as structure
constants: ``basis[i] * basis[j] = sum_k T[i, j, k] * basis[k]``.  Every
constructor (Z/n, GF(q), monic quotients, binary products) reduces to that
one representation, so the polyfunction engine never needs to know how a
ring was built.

Canonical enumeration: 0 first, then 1, then the remaining elements in
mixed-radix order with coordinate 0 varying fastest.
"""
import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Tuple

import numpy as np
from sympy import isprime

from . import config
from .errors import BudgetError, DomainError

__all__ = [
    "Zn",
    "GF",
    "Quotient",
    "Product",
    "RHO",
    "spec_text",
    "spec_order",
    "spec_characteristic",
    "smallest_irreducible",
    "Ring",
    "build_ring",
    "SubringView",
    "full_subring",
    "prime_subring",
    "subring_closure",
    "is_field",
    "find_distinct_zero_divisor_pair",
    "has_zero_divisors",
    "Classification",
    "classify",
]


# ---------------------------------------------------------------------------
# Spec tree


@dataclass(frozen=True)
class Zn:
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise DomainError("Z/n needs n >= 2, got %d" % self.n)


@dataclass(frozen=True)
class GF:
    p: int
    k: int = 1

    def __post_init__(self):
        if not isprime(self.p):
            raise DomainError("GF base %d is not prime" % self.p)
        if self.k < 1:
            raise DomainError("GF degree must be >= 1, got %d" % self.k)

    @property
    def q(self):
        return self.p**self.k


@dataclass(frozen=True)
class Quotient:
    """base[var]/(modulus); modulus holds integer coefficients, ascending."""

    base: object
    modulus: Tuple[int, ...]
    var: str = "x"

    def __post_init__(self):
        char = spec_characteristic(self.base)
        coeffs = [c % char for c in self.modulus]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if len(coeffs) < 2:
            raise DomainError("quotient modulus must have degree >= 1")
        if coeffs[-1] != 1 % char:
            raise DomainError("quotient modulus must be monic")
        object.__setattr__(self, "modulus", tuple(coeffs))

    @property
    def degree(self):
        return len(self.modulus) - 1


@dataclass(frozen=True)
class Product:
    left: object
    right: object


def _poly_text(coeffs, var):
    terms = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if c == 0:
            continue
        mono = "" if e == 0 else (var if e == 1 else "%s^%d" % (var, e))
        if not mono:
            terms.append(str(c))
        elif c == 1:
            terms.append(mono)
        else:
            terms.append("%d*%s" % (c, mono))
    return "+".join(terms) if terms else "0"


def spec_text(spec):
    """Canonical text of a spec; round-trips through parse_ring_spec."""
    if spec == RHO:
        return "rho"
    if isinstance(spec, Zn):
        return "Z/%d" % spec.n
    if isinstance(spec, GF):
        return "GF(%d)" % spec.q
    if isinstance(spec, Quotient):
        base = spec_text(spec.base)
        if isinstance(spec.base, Product):
            base = "(%s)" % base
        return "%s[%s]/(%s)" % (base, spec.var, _poly_text(spec.modulus, spec.var))
    if isinstance(spec, Product):
        right = spec_text(spec.right)
        if isinstance(spec.right, Product):
            right = "(%s)" % right
        return "%s x %s" % (spec_text(spec.left), right)
    raise TypeError("not a ring spec: %r" % (spec,))


def spec_order(spec):
    if isinstance(spec, Zn):
        return spec.n
    if isinstance(spec, GF):
        return spec.q
    if isinstance(spec, Quotient):
        return spec_order(spec.base) ** spec.degree
    if isinstance(spec, Product):
        return spec_order(spec.left) * spec_order(spec.right)
    raise TypeError("not a ring spec: %r" % (spec,))


def spec_characteristic(spec):
    if isinstance(spec, Zn):
        return spec.n
    if isinstance(spec, GF):
        return spec.p
    if isinstance(spec, Quotient):
        return spec_characteristic(spec.base)
    if isinstance(spec, Product):
        return math.lcm(spec_characteristic(spec.left), spec_characteristic(spec.right))
    raise TypeError("not a ring spec: %r" % (spec,))


# rho = {0, 1, a, 1+a} with 1+1 = 0 and a^2 = 0
RHO = Quotient(Zn(2), (0, 0, 1), var="a")


# ---------------------------------------------------------------------------
# Irreducible moduli for GF(p^k)


def _poly_rem(num, den, p):
    num = list(num)
    inv = pow(den[-1], -1, p)
    while len(num) >= len(den):
        c = num[-1] * inv % p
        shift = len(num) - len(den)
        for i, d in enumerate(den):
            num[shift + i] = (num[shift + i] - c * d) % p
        while num and num[-1] == 0:
            num.pop()
    return num


def _monic_polys(p, d):
    # ascending coefficient tuples of monic degree-d polynomials, ordered by
    # sum c_i p^i over the non-leading coefficients
    for low in itertools.product(range(p), repeat=d):
        yield tuple(reversed(low)) + (1,)


def smallest_irreducible(p, k):
    """Monic irreducible of degree k over Z/p, smallest by sum c_i p^i (i < k)."""
    for f in _monic_polys(p, k):
        if k == 1:
            return f
        if f[0] == 0:
            continue
        if all(
            _poly_rem(f, g, p)
            for d in range(1, k // 2 + 1)
            for g in _monic_polys(p, d)
        ):
            return f
    raise DomainError("no irreducible polynomial of degree %d over Z/%d" % (k, p))


# ---------------------------------------------------------------------------
# Realized rings


class Ring:
    """A finite commutative ring with unit given by structure constants.

    Elements are tuples of ints; coordinate i lives in Z/moduli[i].
    """

    def __init__(self, spec, moduli, table, one, var=None, base=None, factors=None):
        self.spec = spec
        self.moduli = tuple(int(c) for c in moduli)
        self.table = np.asarray(table, dtype=np.int64)
        self.one = tuple(int(c) for c in one)
        self.zero = (0,) * len(self.moduli)
        self.order = math.prod(self.moduli)
        self.var = var  # quotient variable, if this ring is a quotient
        self.base = base  # base ring of a quotient
        self.factors = factors  # (left, right) of a product
        self.characteristic = math.lcm(
            *(c // math.gcd(u, c) for u, c in zip(self.one, self.moduli))
        )
        self._mods = np.array(self.moduli, dtype=np.int64)
        self._weights = np.cumprod((1,) + self.moduli[:-1]).astype(np.int64)
        self._coords = None
        self._raw_to_canon = None
        self._elements = None

    def __repr__(self):
        return "Ring(%s)" % self.text

    @property
    def text(self):
        return spec_text(self.spec)

    @property
    def rank(self):
        """Number of cyclic factors in the additive basis."""
        return len(self.moduli)

    @property
    def additive_basis(self):
        out = []
        for i, c in enumerate(self.moduli):
            e = [0] * self.rank
            e[i] = 1
            out.append((tuple(e), c))
        return out

    # -- enumeration ---------------------------------------------------------

    def _enumerate(self):
        raw = np.arange(self.order, dtype=np.int64)
        coords = np.empty((self.order, self.rank), dtype=np.int64)
        for i, c in enumerate(self.moduli):
            coords[:, i] = raw % c
            raw = raw // c
        one_raw = int(np.dot(self.one, self._weights))
        perm = [0, one_raw] + [r for r in range(1, self.order) if r != one_raw]
        perm = np.array(perm, dtype=np.int64)
        self._coords = coords[perm]
        self._coords.setflags(write=False)
        inv = np.empty(self.order, dtype=np.int64)
        inv[perm] = np.arange(self.order, dtype=np.int64)
        self._raw_to_canon = inv

    @property
    def coords(self):
        """(order, rank) array of all elements in canonical order."""
        if self._coords is None:
            self._enumerate()
        return self._coords

    @property
    def elements(self):
        if self._elements is None:
            self._elements = [tuple(int(v) for v in row) for row in self.coords]
        return self._elements

    def index(self, a):
        if self._raw_to_canon is None:
            self._enumerate()
        return int(self._raw_to_canon[int(np.dot(a, self._weights))])

    def indices(self, arr):
        """Canonical indices of the rows of a coordinate array."""
        if self._raw_to_canon is None:
            self._enumerate()
        return self._raw_to_canon[np.asarray(arr, dtype=np.int64) @ self._weights]

    def element(self, i):
        return tuple(int(v) for v in self.coords[i])

    def __contains__(self, a):
        return (
            isinstance(a, tuple)
            and len(a) == self.rank
            and all(isinstance(v, int) and 0 <= v < c for v, c in zip(a, self.moduli))
        )

    # -- arithmetic ----------------------------------------------------------

    def add(self, a, b):
        return tuple((x + y) % c for x, y, c in zip(a, b, self.moduli))

    def neg(self, a):
        return tuple(-x % c for x, c in zip(a, self.moduli))

    def sub(self, a, b):
        return tuple((x - y) % c for x, y, c in zip(a, b, self.moduli))

    def smul(self, n, a):
        """The integer multiple n*a."""
        return tuple(n * x % c for x, c in zip(a, self.moduli))

    def from_int(self, n):
        """Image of the integer n (the element 1+1+...+1)."""
        return self.smul(n, self.one)

    def mul(self, a, b):
        out = self.mul_arrays(np.array([a], dtype=np.int64), np.array([b], dtype=np.int64))
        return tuple(int(v) for v in out[0])

    def mul_arrays(self, A, B):
        """Row-wise products of two (n, rank) coordinate arrays."""
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        # tmp[n, j, k] = sum_i A[n, i] T[i, j, k]
        tmp = np.tensordot(A, self.table, axes=([1], [0])) % self._mods
        return np.einsum("nj,njk->nk", B, tmp) % self._mods

    def reduce_array(self, A):
        return np.asarray(A, dtype=np.int64) % self._mods

    def pow(self, a, e):
        result, base = self.one, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def is_zero(self, a):
        return not any(a)

    def mul_table(self):
        """Full multiplication table as canonical indices (small rings only)."""
        if self.order > 4096:
            raise BudgetError("mul_table limited to order <= 4096, ring has %d" % self.order)
        n = self.order
        A = np.repeat(self.coords, n, axis=0)
        B = np.tile(self.coords, (n, 1))
        return self.indices(self.mul_arrays(A, B)).reshape(n, n)

    def add_table(self):
        n = self.order
        A = np.repeat(self.coords, n, axis=0)
        B = np.tile(self.coords, (n, 1))
        return self.indices(self.reduce_array(A + B)).reshape(n, n)

    # -- names and text ------------------------------------------------------

    def generator(self, name):
        """Element named by a quotient variable (searching down the base chain)."""
        if self.var is None:
            return None
        bk = self.base.rank
        if name == self.var:
            if bk == self.rank:
                # base[x]/(x + c) collapses onto the base with x = -c
                return self.base.from_int(-self.spec.modulus[0])
            return (0,) * bk + tuple(self.base.one) + (0,) * (self.rank - 2 * bk)
        inner = self.base.generator(name)
        return None if inner is None else self.lift_base(inner)

    def lift_base(self, b):
        return tuple(b) + (0,) * (self.rank - len(b))

    def pair(self, left, right):
        return tuple(left) + tuple(right)

    def split(self, a):
        left, _ = self.factors
        return a[: left.rank], a[left.rank :]

    def format(self, a):
        if self.factors is not None:
            l, r = self.split(a)
            return "(%s,%s)" % (self.factors[0].format(l), self.factors[1].format(r))
        if self.var is None:
            return str(a[0])
        bk = self.base.rank
        d = self.rank // bk
        terms = []
        for e in range(d):
            c = a[e * bk : (e + 1) * bk]
            if not any(c):
                continue
            ctext = self.base.format(c)
            mono = "" if e == 0 else (self.var if e == 1 else "%s^%d" % (self.var, e))
            if not mono:
                terms.append(ctext)
            elif c == self.base.one:
                terms.append(mono)
            else:
                if "+" in ctext or "-" in ctext:
                    ctext = "(%s)" % ctext
                terms.append("%s*%s" % (ctext, mono))
        return "+".join(terms) if terms else "0"


def _build_zn(spec):
    return Ring(spec, (spec.n,), [[[1]]], (1,))


def _build_quotient(spec, base, modulus, var):
    d = len(modulus) - 1
    if d == 1:
        return Ring(spec, base.moduli, base.table, base.one, var=var, base=base)
    bk = base.rank
    rank = d * bk
    # reduction of x^m for m < 2d - 1 as d base coefficients
    neg_tail = [base.from_int(-c) for c in modulus[:d]]
    red = []
    for m in range(2 * d - 1):
        if m < d:
            row = [base.zero] * d
            row[m] = base.one
        else:
            prev = red[-1]
            top = prev[d - 1]
            row = [base.zero] + list(prev[: d - 1])
            for t in range(d):
                row[t] = base.add(row[t], base.mul(top, neg_tail[t]))
        red.append(row)
    table = np.zeros((rank, rank, rank), dtype=np.int64)
    for i in range(bk):
        for j in range(bk):
            bij = tuple(int(v) for v in base.table[i, j])
            for e1 in range(d):
                for e2 in range(d):
                    for t in range(d):
                        c = base.mul(bij, red[e1 + e2][t])
                        table[e1 * bk + i, e2 * bk + j, t * bk : (t + 1) * bk] = c
    one = tuple(base.one) + (0,) * (rank - bk)
    return Ring(spec, base.moduli * d, table, one, var=var, base=base)


def _build_product(spec, left, right):
    rl, rr = left.rank, right.rank
    table = np.zeros((rl + rr,) * 3, dtype=np.int64)
    table[:rl, :rl, :rl] = left.table
    table[rl:, rl:, rl:] = right.table
    return Ring(
        spec,
        left.moduli + right.moduli,
        table,
        left.one + right.one,
        factors=(left, right),
    )


@lru_cache(maxsize=256)
def _build(spec):
    if isinstance(spec, Zn):
        return _build_zn(spec)
    if isinstance(spec, GF):
        base = _build(Zn(spec.p))
        if spec.k == 1:
            return Ring(spec, base.moduli, base.table, base.one)
        return _build_quotient(spec, base, smallest_irreducible(spec.p, spec.k), "x")
    if isinstance(spec, Quotient):
        return _build_quotient(spec, _build(spec.base), spec.modulus, spec.var)
    if isinstance(spec, Product):
        return _build_product(spec, _build(spec.left), _build(spec.right))
    raise TypeError("not a ring spec: %r" % (spec,))


def build_ring(spec, max_order=None):
    """Realize a spec; raises BudgetError above the order cap."""
    cap = config.max_order() if max_order is None else max_order
    order = spec_order(spec)
    if order > cap:
        raise BudgetError("ring %s has order %d, above the cap %d" % (spec_text(spec), order, cap))
    return _build(spec)


# ---------------------------------------------------------------------------
# Subrings


@dataclass(frozen=True)
class SubringView:
    parent: Ring
    members: Tuple[tuple, ...]
    contains_one: bool
    _gens: list = field(default=None, compare=False, repr=False)

    @property
    def order(self):
        return len(self.members)

    def __contains__(self, a):
        return a in set(self.members)

    def additive_generators(self):
        """A small generating set of (S, +), chosen greedily in member order."""
        if self._gens is not None:
            return self._gens
        r = self.parent
        span = {r.zero}
        gens = []
        for m in self.members:
            if m in span:
                continue
            gens.append(m)
            multiples = [r.zero]
            x = m
            while x != r.zero:
                multiples.append(x)
                x = r.add(x, m)
            span = {r.add(s, k) for s in span for k in multiples}
        object.__setattr__(self, "_gens", gens)
        return gens

    @property
    def is_full(self):
        return self.order == self.parent.order


def _view(r, members):
    ordered = tuple(sorted(members, key=r.index))
    return SubringView(r, ordered, r.one in members)


def full_subring(r):
    return SubringView(r, tuple(r.elements), True)


def prime_subring(r):
    """The subring generated by 1; its size is the characteristic."""
    return _view(r, {r.from_int(m) for m in range(r.characteristic)})


def subring_closure(r, gens):
    """Smallest subset containing gens and 0 closed under +, * and negation."""
    members = {r.zero}
    frontier = []
    for g in gens:
        if g not in members:
            members.add(g)
            frontier.append(g)
    while frontier:
        new = []
        known = list(members)
        for x in frontier:
            cands = [r.neg(x)]
            for y in known:
                cands.append(r.add(x, y))
                cands.append(r.mul(x, y))
            for c in cands:
                if c not in members:
                    members.add(c)
                    new.append(c)
                    known.append(c)
        frontier = new
    return _view(r, members)


# ---------------------------------------------------------------------------
# Classification


def _products_with(r, a):
    n = r.order
    return r.indices(r.mul_arrays(np.tile(np.array(a, dtype=np.int64), (n, 1)), r.coords))


def is_field(r):
    """True iff every nonzero element has a multiplicative inverse."""
    for i in range(1, r.order):
        if not (_products_with(r, r.element(i)) == 1).any():
            return False
    return True


def find_distinct_zero_divisor_pair(r) -> Optional[Tuple[tuple, tuple]]:
    """First (a, b) in canonical scan order with a != b, both nonzero, ab = 0."""
    for i in range(1, r.order):
        prods = _products_with(r, r.element(i))
        for j in np.flatnonzero(prods == 0):
            if j != 0 and j != i:
                return r.element(i), r.element(int(j))
    return None


def has_zero_divisors(r):
    for i in range(1, r.order):
        prods = _products_with(r, r.element(i))
        if (prods[1:] == 0).any():
            return True
    return False


class Classification:
    FIELD = "field"
    Z4 = "z4"
    RHO = "rho"
    OTHER = "other"


def classify(r):
    """Fingerprint class: field, Z/4, rho or other (isomorphism only at order 4)."""
    if is_field(r):
        return Classification.FIELD
    if r.order == 4 and r.characteristic == 4:
        return Classification.Z4
    if r.order == 4 and r.characteristic == 2:
        sq = r.indices(r.mul_arrays(r.coords, r.coords))
        if (sq[1:] == 0).any():
            return Classification.RHO
    return Classification.OTHER
