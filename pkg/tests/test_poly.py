import pytest
from hypothesis import given, settings, strategies as st

from polyfun import (
    Polynomial,
    is_null_polynomial,
    parse_element,
    parse_polynomial,
    vanishing_poly,
)
from polyfun.poly import NO_DEGREE, poly_eval
from polyfun.verify import catalog_specs
from polyfun.rings import build_ring

from conftest import ring

SMALL_RINGS = ["Z/2", "Z/3", "Z/4", "rho", "GF(4)", "Z/6", "Z/2 x Z/2", "GF(9)", "Z/2[x]/(x^4+x^3)"]


def P(r, *ints):
    return Polynomial(r, [r.from_int(c) for c in ints])


def test_eval_examples():
    z4 = ring("Z/4")
    assert poly_eval(P(z4, 1, 0, 1), z4.one) == (2,)
    assert poly_eval(Polynomial(z4), (3,)) == z4.zero


def test_eval_rho_cubic():
    rho = ring("rho")
    a = parse_element("a", rho)
    # x (x + 1) (x + xi) vanishes at a exactly when a * xi = 0
    for xi in rho.elements:
        p = Polynomial.x(rho) * P(rho, 1, 1) * Polynomial(rho, [xi, rho.one])
        expected = rho.mul(a, rho.mul(rho.add(a, rho.one), rho.add(a, xi)))
        assert p(a) == expected
        assert (p(a) == rho.zero) == (rho.mul(a, xi) == rho.zero)
    assert (Polynomial.x(rho) * P(rho, 1, 1) * Polynomial(rho, [a, rho.one]))(a) == rho.zero


def test_add_mul_examples():
    z2 = ring("Z/2")
    assert (P(z2, 1, 1) + P(z2, 1, 1)).is_zero
    z4 = ring("Z/4")
    assert (P(z4, 0, 2) * P(z4, 0, 2)).is_zero
    assert Polynomial.x(z2) * P(z2, 1, 1) == P(z2, 0, 1, 1)


def test_degree_sentinel():
    z = Polynomial(ring("Z/5"))
    assert z.degree is NO_DEGREE
    assert NO_DEGREE < 0 and NO_DEGREE < -10**9
    assert not (NO_DEGREE < NO_DEGREE)
    assert NO_DEGREE != -1
    with pytest.raises(TypeError):
        NO_DEGREE + 1


def test_trimming():
    z3 = ring("Z/3")
    p = Polynomial(z3, [(1,), (0,), (0,)])
    assert p.coeffs == ((1,),) and p.degree == 0


def test_vanishing_poly_examples():
    z2 = ring("Z/2")
    assert vanishing_poly(z2) == P(z2, 0, 1, 1)
    z3 = ring("Z/3")
    # x (x - 1) (x - 2) = x^3 - 3x^2 + 2x
    assert vanishing_poly(z3) == P(z3, 0, 2, 0, 1)
    rho = ring("rho")
    v = vanishing_poly(rho)
    assert v.degree == 4 and v.is_monic
    assert all(v(u) == rho.zero for u in rho.elements)


@pytest.mark.parametrize("spec", catalog_specs(16), ids=str)
def test_vanishing_poly_is_monic_null(spec):
    r = build_ring(spec)
    v = vanishing_poly(r)
    assert v.is_monic and v.degree == r.order
    assert is_null_polynomial(v)


def test_null_polynomial_examples():
    ex = ring("Z/2[x]/(x^4+x^3)")
    assert is_null_polynomial(P(ex, 0, 0, 0, 1, 1, 1, 1))
    assert not is_null_polynomial(Polynomial.x(ring("Z/2")))
    assert parse_polynomial("T^3+T^4+T^5+T^6", ex, var="T") == P(ex, 0, 0, 0, 1, 1, 1, 1)


def test_parse_polynomial_with_ring_generators():
    rho = ring("rho")
    p = parse_polynomial("x*(x+1)*(x+a)", rho)
    a = parse_element("a", rho)
    assert p.coeffs == (rho.zero, a, rho.add(rho.one, a), rho.one)
    assert parse_polynomial(p.text(), rho) == p


def _poly_strategy(r, max_deg=4):
    return st.lists(st.sampled_from(r.elements), max_size=max_deg + 1).map(lambda cs: Polynomial(r, cs))


@pytest.mark.parametrize("text", SMALL_RINGS)
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_eval_is_a_ring_homomorphism(text, data):
    r = ring(text)
    p = data.draw(_poly_strategy(r))
    q = data.draw(_poly_strategy(r))
    u = data.draw(st.sampled_from(r.elements))
    assert (p + q)(u) == r.add(p(u), q(u))
    assert (p * q)(u) == r.mul(p(u), q(u))
    assert [(p * q)(v) for v in r.elements] == (p * q).table()


@pytest.mark.parametrize("text", SMALL_RINGS)
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_degree_of_product(text, data):
    r = ring(text)
    p = data.draw(_poly_strategy(r))
    q = data.draw(_poly_strategy(r))
    pq = p * q
    if p.is_zero or q.is_zero:
        assert pq.is_zero
        return
    assert pq.degree <= p.degree + q.degree
    lead = r.mul(p.coeffs[-1], q.coeffs[-1])
    assert (pq.degree == p.degree + q.degree) == (lead != r.zero)


@pytest.mark.parametrize("text", ["GF(2)", "GF(3)", "GF(4)", "GF(5)", "GF(7)", "GF(8)", "GF(9)"])
@settings(max_examples=80, deadline=None)
@given(data=st.data())
def test_roots_bounded_by_degree_over_fields(text, data):
    r = ring(text)
    p = data.draw(_poly_strategy(r, max_deg=4))
    if p.is_zero:
        return
    roots = sum(1 for u in r.elements if p(u) == r.zero)
    assert roots <= p.degree
