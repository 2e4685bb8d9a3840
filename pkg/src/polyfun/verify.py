"""Mechanical checks of the classification and worked examples over a ring catalog.

The catalog is generated from constructors, not from an isomorphism
classification, so every report carries :data:`COVERAGE_NOTE`.
"""
import itertools
import math
from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np

from .engine import (
    InvariantReport,
    compute_invariants,
    count_polyfunctions,
    power_map_repetition,
    s_invariant,
    s_relative,
    power_coords,
)
from .numtheory import kombi_sum, prime_power
from .parsing import parse_element, parse_ring_spec
from .rings import (
    GF,
    Classification,
    Product,
    Quotient,
    Ring,
    Zn,
    build_ring,
    find_distinct_zero_divisor_pair,
    full_subring,
    has_zero_divisors,
    is_field,
    prime_subring,
    spec_order,
    spec_text,
)

COVERAGE_NOTE = (
    "catalog is constructor-generated (Z/n, GF(q), Z/p[x]/(f) for p in {2,3}, "
    "binary products); it is isomorphism-complete only for orders p and p^2"
)

EXAMPLE_RING = "Z/2[x]/(x^4+x^3)"


@dataclass
class CatalogEntry:
    spec: object
    ring: Ring
    report: InvariantReport

    @property
    def text(self):
        return spec_text(self.spec)


@dataclass
class VerificationReport:
    check: str
    examined: int = 0
    failures: List[Tuple[str, str, str]] = field(default_factory=list)
    note: str = COVERAGE_NOTE

    @property
    def passed(self):
        return not self.failures

    def fail(self, where, expected, observed):
        self.failures.append((where, str(expected), str(observed)))

    def as_json(self):
        return {
            "check": self.check,
            "examined": self.examined,
            "failures": [
                {"ring": w, "expected": e, "observed": o} for w, e, o in self.failures
            ],
            "passed": self.passed,
            "note": self.note,
        }

    def as_text(self):
        lines = [
            "%-22s %s  (%d examined, %d failures)"
            % (self.check, "PASSED" if self.passed else "FAILED", self.examined, len(self.failures))
        ]
        for w, e, o in self.failures:
            lines.append("  %s: expected %s, observed %s" % (w, e, o))
        if self.note:
            lines.append("  note: " + self.note)
        return "\n".join(lines)


def _base_specs(max_order):
    specs = [Zn(n) for n in range(2, max_order + 1)]
    for q in range(4, max_order + 1):
        pk = prime_power(q)
        if pk and pk[1] >= 2:
            specs.append(GF(*pk))
    for p in (2, 3):
        for d in range(2, 5):
            if p**d > max_order:
                break
            for low in itertools.product(range(p), repeat=d):
                specs.append(Quotient(Zn(p), tuple(low) + (1,)))
    return specs


def catalog_specs(max_order):
    """Deduplicated specs ordered by (ring order, spec text)."""
    if max_order > 64:
        raise ValueError("catalog is limited to max_order <= 64")
    base = sorted({spec_text(s): s for s in _base_specs(max_order)}.items(),
                  key=lambda kv: (spec_order(kv[1]), kv[0]))
    specs = dict(base)
    for (_, a), (_, b) in itertools.combinations_with_replacement(base, 2):
        if spec_order(a) * spec_order(b) <= max_order:
            prod = Product(a, b)
            specs.setdefault(spec_text(prod), prod)
    return sorted(specs.values(), key=lambda s: (spec_order(s), spec_text(s)))


def build_catalog(max_order):
    out = []
    for spec in catalog_specs(max_order):
        r = build_ring(spec)
        out.append(CatalogEntry(spec, r, compute_invariants(r, counts=True)))
    return out


_SPECIAL = (Classification.FIELD, Classification.Z4, Classification.RHO)


def verify_classification(max_order=16, catalog=None):
    rep = VerificationReport("classification")
    for e in catalog or build_catalog(max_order):
        rep.examined += 1
        special = e.report.classification in _SPECIAL
        if e.report.s > e.report.order:
            rep.fail(e.text, "s <= |R|", e.report.s)
        if e.report.s_equals_order != special:
            rep.fail(
                e.text,
                "s = |R| iff field/z4/rho",
                "s=%d |R|=%d class=%s" % (e.report.s, e.report.order, e.report.classification),
            )
    return rep


def verify_vergessen(max_order=16, catalog=None):
    rep = VerificationReport("vergessen")
    for e in catalog or build_catalog(max_order):
        rep.examined += 1
        r = e.ring
        pair = find_distinct_zero_divisor_pair(r)
        cls = e.report.classification
        if pair is not None and (r.mul(*pair) != r.zero or pair[0] == pair[1] or r.zero in pair):
            rep.fail(e.text, "valid annihilating pair", pair)
        if cls == Classification.FIELD and pair is not None:
            rep.fail(e.text, "no zero-divisor pair in a field", pair)
        if has_zero_divisors(r) and pair is None and cls not in (Classification.Z4, Classification.RHO):
            rep.fail(e.text, "distinct pair or z4/rho", "no pair, class %s" % cls)
    return rep


def verify_fini(max_order=16, catalog=None):
    rep = VerificationReport("fini")
    for e in catalog or build_catalog(max_order):
        rep.examined += 1
        char, s = e.report.characteristic, e.report.s
        if math.factorial(s) % char:
            rep.fail(e.text, "%d | %d!" % (char, s), "remainder %d" % (math.factorial(s) % char))
        if prime_subring(e.ring).order != char:
            rep.fail(e.text, "|R'| = char", prime_subring(e.ring).order)
    return rep


def verify_redei_szele(max_order_full=9, extra=("GF(16)",)):
    rep = VerificationReport("redei-szele")
    rings = [e.ring for e in build_catalog(max_order_full)]
    rings += [build_ring(parse_ring_spec(t)) for t in extra]
    for r in rings:
        rep.examined += 1
        count = count_polyfunctions(full_subring(r), r)
        every = count == r.order**r.order
        if every != is_field(r):
            rep.fail(r.text, "all functions polynomial iff field",
                     "count=%d |R|^|R|=%d field=%s" % (count, r.order**r.order, is_field(r)))
    return rep


def _example_checks(r):
    """Yield (label, expected, observed) for the Z/2[x]/(x^4+x^3) lemmas."""
    x = parse_element("x", r)
    one_x = r.add(r.one, x)
    u = r.coords
    p1 = power_coords(r, 1)
    p2 = r.mul_arrays(p1, p1)
    p4 = r.mul_arrays(p2, p2)
    n = r.order
    lhs = r.reduce_array(
        r.mul_arrays(np.tile(x, (n, 1)), u) + r.mul_arrays(np.tile(one_x, (n, 1)), p2) + p4
    )
    yield "x*u+(1+x)*u^2+u^4=0", 0, int(np.count_nonzero(lhs.any(axis=1)))
    yield "s(R)", 4, s_invariant(r)
    # exhaustive over (a_0..a_5) in Z/2^6
    pows = [power_coords(r, k) for k in range(6)]
    vanishing = []
    for coeffs in itertools.product((0, 1), repeat=6):
        acc = sum(c * pw for c, pw in zip(coeffs, pows))
        if not r.reduce_array(acc).any():
            vanishing.append(coeffs)
    yield "null Z/2-combos deg<=5", [(0,) * 6], vanishing
    acc = r.reduce_array(sum(power_coords(r, k) for k in (3, 4, 5, 6)))
    yield "u^3+u^4+u^5+u^6=0", 0, int(np.count_nonzero(acc.any(axis=1)))
    ps = prime_subring(r)
    yield "s(R';R)", 6, s_relative(ps, r)
    yield "|R'|", 2, ps.order


def verify_example_ring():
    rep = VerificationReport("example-ring", note="")
    r = build_ring(parse_ring_spec(EXAMPLE_RING))
    for label, expected, observed in _example_checks(r):
        rep.examined += 1
        if expected != observed:
            rep.fail("%s %s" % (EXAMPLE_RING, label), expected, observed)
    return rep


def truncated_spec(k):
    """Z/2[x1]/(x1^2)[x2]/(x2^2)... with k variables."""
    spec = Zn(2)
    for i in range(1, k + 1):
        spec = Quotient(spec, (0, 0, 1), var="x%d" % i)
    return spec


def verify_truncated_infinite(k=2):
    if not 1 <= k <= 3:
        raise ValueError("k must be in 1..3")
    rep = VerificationReport("truncated", note="finite truncation with %d variables" % k)
    r = build_ring(truncated_spec(k))
    rep.examined = r.order
    p2 = power_coords(r, 2)
    p4 = r.mul_arrays(p2, p2)
    bad = np.flatnonzero((p4 != p2).any(axis=1))
    for i in bad:
        rep.fail(r.text, "u^4 = u^2", "u=%s" % r.format(r.element(int(i))))
    s = s_invariant(r)
    if s > 4:
        rep.fail(r.text, "s <= 4", s)
    return rep


def verify_kombi(n_max=25):
    rep = VerificationReport("kombi", note="")
    for n in range(n_max + 1):
        for k in range(n + 1):
            rep.examined += 1
            expected = math.factorial(n) if k == n else 0
            got = kombi_sum(n, k)
            if got != expected:
                rep.fail("n=%d k=%d" % (n, k), expected, got)
    return rep


def verify_crt(max_order=30):
    """Engine self-test: s(Z/a x Z/b) = s(Z/ab) for coprime a, b."""
    rep = VerificationReport("crt", note="engine self-test, not a theorem check")
    for a in range(2, max_order + 1):
        for b in range(a + 1, max_order // a + 1):
            if math.gcd(a, b) != 1:
                continue
            rep.examined += 1
            lhs = s_invariant(build_ring(Product(Zn(a), Zn(b))))
            rhs = s_invariant(build_ring(Zn(a * b)))
            if lhs != rhs:
                rep.fail("Z/%d x Z/%d" % (a, b), rhs, lhs)
    return rep


def verify_power_bound(max_order=16, catalog=None):
    """s(R) <= s(R';R) <= k where x^k - x^l is the first repetition of powers."""
    rep = VerificationReport("power-bound")
    for e in catalog or build_catalog(max_order):
        rep.examined += 1
        _, k = power_map_repetition(e.ring)
        if not e.report.s <= e.report.s_prime <= k:
            rep.fail(e.text, "s <= s' <= %d" % k, "s=%d s'=%d" % (e.report.s, e.report.s_prime))
    return rep


CHECKS = {
    "classification": lambda a: verify_classification(a.max_order or 16),
    "vergessen": lambda a: verify_vergessen(a.max_order or 16),
    "fini": lambda a: verify_fini(a.max_order or 16),
    "redei-szele": lambda a: verify_redei_szele(a.max_order or 9),
    "kombi": lambda a: verify_kombi(a.n if a.n is not None else 25),
    "example-ring": lambda a: verify_example_ring(),
    "truncated": lambda a: verify_truncated_infinite(a.k if a.k is not None else 2),
    "crt": lambda a: verify_crt(a.max_order or 30),
    "power-bound": lambda a: verify_power_bound(a.max_order or 16),
}
