import pytest

from polyfun import (
    RHO,
    DomainError,
    GF,
    Product,
    Quotient,
    SpecSyntaxError,
    Zn,
    parse_element,
    parse_function_table,
    parse_ring_spec,
)
from polyfun.rings import spec_text

from conftest import ring


def test_grammar_examples():
    assert parse_ring_spec("Z/4") == Zn(4)
    assert parse_ring_spec("Z/2[x]/(x^4+x^3)") == Quotient(Zn(2), (0, 0, 0, 1, 1))
    assert parse_ring_spec("Z/2[x]/(x^3+x^4)") == Quotient(Zn(2), (0, 0, 0, 1, 1))
    assert parse_ring_spec("rho") == RHO
    assert RHO.base == Zn(2) and RHO.modulus == (0, 0, 1)
    assert parse_ring_spec("GF(9)") == GF(3, 2)
    assert parse_ring_spec("GF(3^2)") == GF(3, 2)
    assert parse_ring_spec("Z/2 x Z/3") == Product(Zn(2), Zn(3))


def test_brace_ideal_notation():
    assert parse_ring_spec("Z/2[x]/{x^3+x^4}") == parse_ring_spec("Z/2[x]/(x^4+x^3)")


def test_product_is_left_associative_and_binds_loosely():
    spec = parse_ring_spec("Z/2 x Z/3 x Z/5")
    assert spec == Product(Product(Zn(2), Zn(3)), Zn(5))
    spec = parse_ring_spec("Z/2 x Z/3[x]/(x^2)")
    assert spec == Product(Zn(2), Quotient(Zn(3), (0, 0, 1)))
    assert parse_ring_spec("Z/2 x (Z/3 x Z/5)") == Product(Zn(2), Product(Zn(3), Zn(5)))


def test_modulus_terms():
    assert parse_ring_spec("Z/3[t]/(2*t + 1 + t^2)") == Quotient(Zn(3), (1, 2, 1), "t")
    assert parse_ring_spec("Z/5[x]/(x^2-1)") == Quotient(Zn(5), (4, 0, 1))


@pytest.mark.parametrize(
    "text",
    [
        "Z/4",
        "GF(8)",
        "rho",
        "Z/2[x]/(x^4+x^3)",
        "Z/2 x Z/3",
        "Z/2 x (Z/3 x Z/5)",
        "(Z/2 x Z/3)[y]/(y^2)",
        "Z/2[x1]/(x1^2)[x2]/(x2^2)",
        "Z/3[x]/(x^3+2*x+1)",
    ],
)
def test_spec_text_round_trip(text):
    spec = parse_ring_spec(text)
    assert parse_ring_spec(spec_text(spec)) == spec
    assert spec_text(spec) == text


@pytest.mark.parametrize(
    "text, pos",
    [("", 0), ("Z/", 2), ("Q/4", 0), ("Z/4 x", 5), ("Z/2[x]/(y^2)", 8), ("Z/4)", 3), ("GF(4", 4)],
)
def test_syntax_errors_carry_position(text, pos):
    with pytest.raises(SpecSyntaxError) as err:
        parse_ring_spec(text)
    assert err.value.pos == pos
    assert err.value.expected


@pytest.mark.parametrize("text", ["Z/1", "Z/0", "GF(6)", "GF(4^2)", "Z/4[x]/(2*x^2+1)", "Z/2[x]/(2*x^2+1)"])
def test_domain_errors(text):
    with pytest.raises(DomainError):
        parse_ring_spec(text)


def test_element_tokens():
    z = ring("Z/7")
    assert parse_element("10", z) == (3,)
    assert parse_element("-1", z) == (6,)
    rho = ring("rho")
    assert parse_element("1+a", rho) == rho.add(rho.one, parse_element("a", rho))
    ex = ring("Z/2[x]/(x^4+x^3)")
    assert parse_element("x^4", ex) == parse_element("x^3", ex)
    p = ring("Z/2 x Z/3")
    assert parse_element("(1,2)", p) == (1, 2)
    assert parse_element("(1,2)*(1,2)", p) == (1, 1)
    t = ring("Z/2 x Z/3 x Z/5")
    assert parse_element("(1,2,3)", t) == parse_element("((1,2),3)", t)
    nested = ring("Z/2[x]/(x^2)[y]/(y^2)")
    xy = parse_element("x*y", nested)
    assert nested.mul(xy, xy) == nested.zero and xy != nested.zero


def test_element_token_errors():
    with pytest.raises(SpecSyntaxError):
        parse_element("b", ring("rho"))
    with pytest.raises(SpecSyntaxError):
        parse_element("(1,1)", ring("Z/4"))
    with pytest.raises(SpecSyntaxError):
        parse_element("1+", ring("Z/4"))


def test_format_parse_round_trip():
    for text in ["rho", "GF(9)", "Z/2[x]/(x^4+x^3)", "Z/2 x Z/3", "Z/2[x]/(x^2)[y]/(y^2)", "(Z/2 x Z/2)[y]/(y^2)"]:
        r = ring(text)
        for a in r.elements:
            assert parse_element(r.format(a), r) == a


def test_function_table_forms():
    rho = ring("rho")
    vals = parse_function_table("0:1,1:0,a:0,1+a:0", rho)
    assert vals == [rho.one, rho.zero, rho.zero, rho.zero]
    as_json = parse_function_table('{"0": "1", "1": "0", "a": "0", "1+a": "0"}', rho)
    assert as_json == vals
    p = ring("Z/2 x Z/3")
    text = ",".join("%s:%s" % (p.format(u), p.format(u)) for u in p.elements)
    assert parse_function_table(text, p) == p.elements


def test_function_table_must_be_total():
    rho = ring("rho")
    with pytest.raises(DomainError, match="misses"):
        parse_function_table("0:1,1:0,a:0", rho)
    with pytest.raises(DomainError, match="twice"):
        parse_function_table("0:1,1:0,a:0,1+a:0,0:0", rho)
    with pytest.raises(SpecSyntaxError):
        parse_function_table("0:1;1:0", rho)
