"""Polynomial representability, Smarandache ring invariants and polyfunction counts.

A function R -> R is a vector in the abelian group (R, +)^|R|, which the
ring presents as a product of cyclic groups.  The functions represented by
polynomials of degree <= d with coefficients in a subring S form the
subgroup generated by ``s * x^i`` for s in an additive generating set of S
and 0 <= i <= d.  :class:`EchelonSpace` keeps a triangular generating set of
that subgroup in Howell form (every pivot divides its column modulus, and
the rows below a pivot span everything that vanishes to its left), so
membership is a greedy reduction and the group order is the product of the
pivot indices.  Each row carries the polynomial it came from, which makes
every positive membership answer come with a witness.
"""
import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np

from . import config
from .errors import BudgetError, DomainError, NotAFieldError
from .poly import Polynomial
from .rings import (
    Classification,
    SubringView,
    classify,
    full_subring,
    is_field,
    prime_subring,
)

__all__ = [
    "FunctionTable",
    "EchelonSpace",
    "monomial_table",
    "extend_echelon",
    "membership",
    "s_invariant",
    "s_relative",
    "power_map_repetition",
    "count_polyfunctions",
    "is_polyfunction",
    "represent",
    "lagrange_interpolate",
    "brute_force_represent",
    "InvariantReport",
    "compute_invariants",
]


class FunctionTable:
    """A total function R -> R, values listed in canonical element order."""

    __slots__ = ("ring", "values")

    def __init__(self, ring, values):
        values = tuple(tuple(int(c) for c in v) for v in values)
        if len(values) != ring.order:
            raise ValueError("function table needs %d values, got %d" % (ring.order, len(values)))
        self.ring = ring
        self.values = values

    @classmethod
    def from_callable(cls, ring, fn):
        return cls(ring, [fn(u) for u in ring.elements])

    @classmethod
    def from_coords(cls, ring, arr):
        return cls(ring, [tuple(row) for row in np.asarray(arr).tolist()])

    def coords(self):
        return np.array(self.values, dtype=np.int64).reshape(self.ring.order, self.ring.rank)

    def __eq__(self, other):
        return isinstance(other, FunctionTable) and other.ring is self.ring and other.values == self.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return "FunctionTable(%s, %s)" % (self.ring.text, self.text())

    def text(self):
        r = self.ring
        return ",".join("%s:%s" % (r.format(u), r.format(v)) for u, v in zip(r.elements, self.values))


def power_coords(r, i):
    acc = np.tile(np.array(r.one, dtype=np.int64), (r.order, 1))
    for _ in range(i):
        acc = r.mul_arrays(acc, r.coords)
    return acc


def monomial_table(r, i):
    """Table of u -> u^i, with u^0 = 1 for every u (0^0 = 1)."""
    if i < 0:
        raise DomainError("monomial exponent must be >= 0")
    return FunctionTable.from_coords(r, power_coords(r, i))


def _xgcd(a, b):
    # returns (g, s, t) with s*a + t*b == g == gcd(a, b) >= 0
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, rem = divmod(a, b)
        a, b = b, rem
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


class EchelonSpace:
    """Degree-<=d polyfunctions over a subring S, as a Howell-form echelon."""

    def __init__(self, ring, subring, work_cap=None):
        if subring.parent is not ring:
            raise ValueError("subring belongs to a different ring")
        self.ring = ring
        self.subring = subring
        self.degree_bound = -1
        self.work_cap = config.echelon_cap() if work_cap is None else work_cap
        self.work = 0
        self._ncols = ring.order * ring.rank
        self._table_mods = np.tile(np.array(ring.moduli, dtype=np.int64), ring.order)
        self._mods = self._table_mods.copy()
        self._pivots = {}
        self._gens = [np.array(g, dtype=np.int64) for g in subring.additive_generators()]
        self._power = None

    def copy(self):
        other = object.__new__(EchelonSpace)
        other.__dict__.update(self.__dict__)
        other._pivots = {k: v.copy() for k, v in self._pivots.items()}
        return other

    @property
    def order(self):
        """Number of distinct functions in the space (exact big integer)."""
        out = 1
        for i, row in self._pivots.items():
            out *= int(self._mods[i]) // int(row[i])
        return out

    def pivot_rows(self):
        """[(column, table vector, witness polynomial)] sorted by column."""
        return [(i, row[: self._ncols].copy(), self._witness(row)) for i, row in sorted(self._pivots.items())]

    def _witness(self, tail_row):
        r = self.ring
        w = tail_row[self._ncols :]
        return Polynomial(r, [tuple(int(v) for v in w[j * r.rank : (j + 1) * r.rank]) for j in range(self.degree_bound + 1)])

    def _tick(self):
        self.work += 1
        if self.work > self.work_cap:
            raise BudgetError("echelon work exceeded the cap of %d row reductions" % self.work_cap)

    def _insert(self, vec):
        mods, n = self._mods, self._ncols
        stack = [vec % mods]
        while stack:
            v = stack.pop()
            nz = np.flatnonzero(v[:n])
            while nz.size:
                self._tick()
                i = int(nz[0])
                a, c = int(v[i]), int(mods[i])
                piv = self._pivots.get(i)
                if piv is None:
                    g, s, _ = _xgcd(a, c)
                    self._pivots[i] = s * v % mods
                    # s need not be a unit on the other columns
                    stack.append((c // g) * v % mods)
                    break
                d = int(piv[i])
                if a % d == 0:
                    v = (v - (a // d) * piv) % mods
                else:
                    g, s, t = _xgcd(d, a)
                    new = (s * piv + t * v) % mods
                    v = ((a // g) * piv - (d // g) * v) % mods
                    self._pivots[i] = new
                    stack.append((c // g) * new % mods)
                nz = np.flatnonzero(v[:n])

    def _extend(self):
        r = self.ring
        d = self.degree_bound + 1
        rk = r.rank
        mods_r = np.array(r.moduli, dtype=np.int64)
        self._mods = np.concatenate([self._mods, mods_r])
        for i in self._pivots:
            self._pivots[i] = np.concatenate([self._pivots[i], np.zeros(rk, dtype=np.int64)])
        self._power = (
            np.tile(np.array(r.one, dtype=np.int64), (r.order, 1))
            if self._power is None
            else r.mul_arrays(self._power, r.coords)
        )
        self.degree_bound = d
        for g in self._gens:
            table = r.mul_arrays(np.tile(g, (r.order, 1)), self._power)
            wit = np.zeros(rk * (d + 1), dtype=np.int64)
            wit[d * rk : (d + 1) * rk] = g
            self._insert(np.concatenate([table.reshape(-1), wit]))

    def extend_to(self, degree):
        while self.degree_bound < degree:
            self._extend()
        return self

    def find(self, target) -> Optional[Polynomial]:
        """Witness polynomial over S for ``target`` or None."""
        r = self.ring
        if isinstance(target, FunctionTable):
            vec = target.coords().reshape(-1)
        else:
            vec = np.asarray(target, dtype=np.int64).reshape(-1)
        mods, n = self._mods, self._ncols
        v = np.concatenate([vec % self._table_mods, np.zeros(len(mods) - n, dtype=np.int64)])
        nz = np.flatnonzero(v[:n])
        while nz.size:
            i = int(nz[0])
            a = int(v[i])
            piv = self._pivots.get(i)
            if piv is None or a % int(piv[i]):
                return None
            v = (v - (a // int(piv[i])) * piv) % mods
            nz = np.flatnonzero(v[:n])
        w = self._witness(-v % mods)
        if not np.array_equal(np.array(w.table(), dtype=np.int64).reshape(-1), vec % self._table_mods):
            raise AssertionError("witness failed re-evaluation for %s" % r.text)
        return w

    def __contains__(self, target):
        return self.find(target) is not None


def extend_echelon(space, next_degree):
    """A new space covering degree ``next_degree``; the input is left untouched."""
    if next_degree != space.degree_bound + 1:
        raise ValueError("extend_echelon adds exactly one degree at a time")
    return space.copy().extend_to(next_degree)


def membership(space, target):
    return space.find(target)


def _check_unital(sub):
    if not sub.contains_one:
        raise DomainError("subring must contain 1")


@lru_cache(maxsize=512)
def _scan(ring, members):
    # smallest m with x^m in the degree <= m-1 span; returns (m, space at m-1, witness)
    sub = full_subring(ring) if len(members) == ring.order else _subview(ring, members)
    _check_unital(sub)
    _, k = power_map_repetition(ring)
    space = EchelonSpace(ring, sub).extend_to(0)
    power = np.tile(np.array(ring.one, dtype=np.int64), (ring.order, 1))
    for m in range(1, k + 1):
        power = ring.mul_arrays(power, ring.coords)
        w = space.find(power)
        if w is not None:
            return m, space, w
        space.extend_to(m)
    raise AssertionError("x^%d - x^l is null, yet no m <= %d was found" % (k, k))


def _subview(ring, members):
    return SubringView(ring, members, ring.one in members)


def _scan_sub(sub, r):
    if sub.parent is not r:
        raise ValueError("subring belongs to a different ring")
    return _scan(r, sub.members)


def s_invariant(r):
    """s(R): least m such that x^m agrees with a polynomial of degree < m."""
    return _scan_sub(full_subring(r), r)[0]


def s_relative(sub, r):
    """s(S;R) for a unital subring S."""
    return _scan_sub(sub, r)[0]


def s_witness(sub, r):
    """(m, p) with p over S of degree < m and p(u) = u^m for all u."""
    m, _, w = _scan_sub(sub, r)
    return m, w


@lru_cache(maxsize=512)
def power_map_repetition(r):
    """Smallest (l, k), l < k, with u^k = u^l for every u in R."""
    seen = {}
    power = np.tile(np.array(r.one, dtype=np.int64), (r.order, 1))
    k = 0
    while True:
        key = power.tobytes()
        if key in seen:
            return seen[key], k
        seen[key] = k
        power = r.mul_arrays(power, r.coords)
        k += 1


def count_polyfunctions(sub, r):
    """|G(S;R)|: the order of the degree <= s(S;R)-1 space."""
    return _scan_sub(sub, r)[1].order


def polyfunction_space(sub, r):
    """The complete space G(S;R) (degree bound s(S;R) - 1); do not mutate."""
    return _scan_sub(sub, r)[1]


def is_polyfunction(f, r):
    return polyfunction_space(full_subring(r), r).find(f) is not None


def represent(f, sub, r, max_deg=None):
    """A polynomial over S of degree <= max_deg representing f, or None."""
    if max_deg is None:
        return polyfunction_space(sub, r).find(f)
    _check_unital(sub)
    full = polyfunction_space(sub, r)
    if max_deg >= full.degree_bound:
        return full.find(f)
    return EchelonSpace(r, sub).extend_to(max_deg).find(f)


def lagrange_interpolate(f, F):
    """sum_y f(y) prod_{z != y} (x - z) / (y - z) over a finite field F."""
    if not is_field(F):
        raise NotAFieldError("%s is not a field" % F.text)
    q = F.order
    total = Polynomial(F)
    for y, fy in zip(F.elements, f.values):
        if F.is_zero(fy):
            continue
        num = Polynomial.constant(F, F.one)
        den = F.one
        for z in F.elements:
            if z == y:
                continue
            num = num * Polynomial(F, [F.neg(z), F.one])
            den = F.mul(den, F.sub(y, z))
        scale = F.mul(fy, F.pow(den, q - 2))
        total = total + num * Polynomial.constant(F, scale)
    return total


@lru_cache(maxsize=256)
def _brute_span(r, members, max_deg):
    # every table reachable by a coefficient tuple over S, first tuple wins
    mt = r.mul_table()
    at = r.add_table()
    sub_idx = [r.index(m) for m in members]
    pows = [np.zeros(r.order, dtype=np.int64) + 1]  # index 1 is the unit
    for _ in range(max_deg):
        pows.append(mt[pows[-1], np.arange(r.order)])
    found = {}
    for coeffs in itertools.product(sub_idx, repeat=max_deg + 1):
        acc = np.zeros(r.order, dtype=np.int64)
        for i, c in enumerate(coeffs):
            acc = at[acc, mt[c, pows[i]]]
        found.setdefault(acc.tobytes(), coeffs)
    return found


def brute_force_represent(f, sub, r, max_deg):
    """Exhaustive oracle: scan all coefficient tuples over S up to degree max_deg."""
    if sub.order ** (max_deg + 1) > config.oracle_cap():
        raise BudgetError(
            "oracle would scan %d^%d coefficient tuples" % (sub.order, max_deg + 1)
        )
    found = _brute_span(r, sub.members, max_deg)
    key = np.array([r.index(v) for v in f.values], dtype=np.int64).tobytes()
    coeffs = found.get(key)
    if coeffs is None:
        return None
    return Polynomial(r, [r.element(i) for i in coeffs])


@dataclass(frozen=True)
class InvariantReport:
    ring: str
    order: int
    characteristic: int
    s: int
    s_prime: int
    prime_subring_order: int
    classification: str
    s_equals_order: bool
    polyfunction_count: Optional[int] = None
    polyfunction_count_prime: Optional[int] = None

    def as_json(self):
        out = {
            "ring": self.ring,
            "order": self.order,
            "characteristic": self.characteristic,
            "s": self.s,
            "s_prime": self.s_prime,
            "prime_subring_order": self.prime_subring_order,
            "classification": self.classification,
            "s_equals_order": self.s_equals_order,
        }
        if self.polyfunction_count is not None:
            out["polyfunction_count"] = str(self.polyfunction_count)
        if self.polyfunction_count_prime is not None:
            out["polyfunction_count_prime"] = str(self.polyfunction_count_prime)
        return out


def compute_invariants(r, counts=False):
    s = s_invariant(r)
    ps = prime_subring(r)
    s_prime = s_relative(ps, r)
    report = InvariantReport(
        ring=r.text,
        order=r.order,
        characteristic=r.characteristic,
        s=s,
        s_prime=s_prime,
        prime_subring_order=ps.order,
        classification=classify(r),
        s_equals_order=(s == r.order),
        polyfunction_count=count_polyfunctions(full_subring(r), r) if counts else None,
        polyfunction_count_prime=count_polyfunctions(ps, r) if counts else None,
    )
    assert report.classification in vars(Classification).values()
    return report
