"""Univariate polynomials over a realized ring."""
from functools import total_ordering

import numpy as np

from .config import max_order
from .errors import BudgetError, SpecSyntaxError
from .parsing import RingOps, evaluate, parse_expr

__all__ = [
    "NO_DEGREE",
    "Polynomial",
    "poly_add",
    "poly_mul",
    "poly_eval",
    "vanishing_poly",
    "is_null_polynomial",
    "parse_polynomial",
]


@total_ordering
class _NoDegree:
    """Degree of the zero polynomial: below every integer, no arithmetic."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("NO_DEGREE")

    def __repr__(self):
        return "NO_DEGREE"


NO_DEGREE = _NoDegree()


class Polynomial:
    """Coefficients ascending, trailing zeros trimmed; immutable."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and ring.is_zero(coeffs[-1]):
            coeffs.pop()
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coeffs", tuple(tuple(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def constant(cls, ring, c):
        return cls(ring, [c])

    @classmethod
    def x(cls, ring):
        return cls(ring, [ring.zero, ring.one])

    @classmethod
    def monomial(cls, ring, i, c=None):
        return cls(ring, [ring.zero] * i + [ring.one if c is None else c])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NO_DEGREE

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.ring.one

    def coeff(self, i):
        return self.coeffs[i] if i < len(self.coeffs) else self.ring.zero

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ring is other.ring
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        return poly_add(self, other)

    def __neg__(self):
        return Polynomial(self.ring, [self.ring.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return poly_add(self, -other)

    def __mul__(self, other):
        return poly_mul(self, other)

    def __call__(self, u):
        return poly_eval(self, u)

    def __repr__(self):
        return "Polynomial(%s, %s)" % (self.ring.text, self.text())

    def text(self, var="x"):
        """'c0 + c1*x + c3*x^3' with element tokens from the ring."""
        r = self.ring
        terms = []
        for e, c in enumerate(self.coeffs):
            if r.is_zero(c):
                continue
            ctext = r.format(c)
            mono = "" if e == 0 else (var if e == 1 else "%s^%d" % (var, e))
            if not mono:
                terms.append(ctext)
            elif c == r.one:
                terms.append(mono)
            else:
                if "+" in ctext or "-" in ctext:
                    ctext = "(%s)" % ctext
                terms.append("%s*%s" % (ctext, mono))
        return " + ".join(terms) if terms else "0"

    def table(self):
        """Evaluation table in canonical element order."""
        r = self.ring
        acc = np.zeros((r.order, r.rank), dtype=np.int64)
        for c in reversed(self.coeffs):
            acc = r.reduce_array(r.mul_arrays(acc, r.coords) + np.array(c, dtype=np.int64))
        return [tuple(int(v) for v in row) for row in acc]


def _check_same(p, q):
    if p.ring is not q.ring:
        raise ValueError("polynomials over different rings")


def poly_add(p, q):
    _check_same(p, q)
    r = p.ring
    n = max(len(p.coeffs), len(q.coeffs))
    return Polynomial(r, [r.add(p.coeff(i), q.coeff(i)) for i in range(n)])


def poly_mul(p, q):
    _check_same(p, q)
    r = p.ring
    if p.is_zero or q.is_zero:
        return Polynomial(r)
    out = [r.zero] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if r.is_zero(a):
            continue
        for j, b in enumerate(q.coeffs):
            out[i + j] = r.add(out[i + j], r.mul(a, b))
    return Polynomial(r, out)


def poly_eval(p, u):
    """Horner evaluation of p at u."""
    r = p.ring
    acc = r.zero
    for c in reversed(p.coeffs):
        acc = r.add(r.mul(acc, u), c)
    return acc


def vanishing_poly(r):
    """prod_{y in R} (x - y): monic of degree |R| and null on R."""
    if r.order > max_order():
        raise BudgetError("vanishing polynomial of degree %d above the order cap" % r.order)
    out = Polynomial.constant(r, r.one)
    for y in r.elements:
        out = out * Polynomial(r, [r.neg(y), r.one])
    return out


def is_null_polynomial(p):
    """True iff p evaluates to 0 at every element."""
    return all(not any(v) for v in p.table())


class _PolyOps(RingOps):
    def __init__(self, ring, var):
        super().__init__(ring)
        self.indeterminate = var

    def const(self, n):
        return Polynomial.constant(self.ring, self.ring.from_int(n))

    def var(self, name):
        if name == self.indeterminate:
            return Polynomial.x(self.ring)
        return Polynomial.constant(self.ring, super().var(name))

    def tuple(self, items):
        return Polynomial.constant(self.ring, super().tuple(items))

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def pow(self, a, e):
        out = Polynomial.constant(self.ring, self.ring.one)
        for _ in range(e):
            out = out * a
        return out


def parse_polynomial(text, ring, var="x"):
    """Parse polynomial text in the indeterminate ``var``.

    Other names resolve to ring generators, so over Z/2[t]/(t^2) the text
    'x^2 + t*x' means X^2 + t X.  When the ring's own variable is also called
    ``var`` the indeterminate shadows it; pass a different ``var``.
    """
    if not text or not text.strip():
        raise SpecSyntaxError("empty polynomial", text, 0, ["polynomial"])
    return evaluate(parse_expr(text), _PolyOps(ring, var))
