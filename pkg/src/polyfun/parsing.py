"""Recursive-descent parsers for ring specs, element tokens and function tables.

Ring specs::

    ring    := product
    product := postfix (" x " postfix)*             left-associative
    postfix := atom ("[" ident "]/(" poly ")")*     "/{...}" also accepted
    atom    := "Z/" nat | "GF(" nat ")" | "GF(" nat "^" nat ")" | "rho" | "(" ring ")"
    poly    := integer-coefficient polynomial in the bracketed ident

Element and polynomial expressions::

    expr    := ["-"] term (("+" | "-") term)*
    term    := power ("*" power)*
    power   := primary ("^" nat)?
    primary := nat | ident | "(" expr ("," expr)* ")"
"""
import json

from .errors import DomainError, SpecSyntaxError
from .numtheory import prime_power
from .rings import GF, RHO, Product, Quotient, Zn

__all__ = [
    "parse_ring_spec",
    "parse_expr",
    "eval_element",
    "parse_element",
    "parse_function_table",
]


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, message, expected=()):
        return SpecSyntaxError(message, self.text, self.pos, expected)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, s):
        return self.text.startswith(s, self.pos)

    def accept(self, s):
        self.skip_ws()
        if self.peek(s):
            self.pos += len(s)
            return True
        return False

    def expect(self, s):
        if not self.accept(s):
            raise self.error("unexpected input", [s])

    def at_end(self):
        self.skip_ws()
        return self.pos >= len(self.text)

    def finish(self):
        if not self.at_end():
            raise self.error("trailing input", ["end of input"])

    def nat(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected a number", ["natural number"])
        return int(self.text[start : self.pos])

    def ident(self):
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and (self.text[self.pos].isalpha() or self.text[self.pos] == "_"):
            self.pos += 1
            while self.pos < len(self.text) and (
                self.text[self.pos].isalnum() or self.text[self.pos] == "_"
            ):
                self.pos += 1
        if start == self.pos:
            raise self.error("expected a name", ["identifier"])
        return self.text[start : self.pos]

    # -- ring specs ----------------------------------------------------------

    def ring(self):
        left = self.postfix()
        while self._product_op():
            left = Product(left, self.postfix())
        return left

    def _product_op(self):
        save = self.pos
        self.skip_ws()
        if self.peek("×"):
            self.pos += 1
            return True
        after = self.text[self.pos + 1 : self.pos + 2]
        if self.pos > save and self.peek("x") and (after.isspace() or not after):
            self.pos += 1
            return True
        self.pos = save
        return False

    def postfix(self):
        spec = self.atom()
        while True:
            save = self.pos
            self.skip_ws()
            if not self.peek("["):
                self.pos = save
                return spec
            self.pos += 1
            var = self.ident()
            self.expect("]")
            self.expect("/")
            if self.accept("("):
                close = ")"
            elif self.accept("{"):
                close = "}"
            else:
                raise self.error("expected quotient modulus", ["(", "{"])
            coeffs = self.int_poly(var)
            self.expect(close)
            spec = Quotient(spec, tuple(coeffs), var)

    def atom(self):
        self.skip_ws()
        start = self.pos
        if self.accept("Z/"):
            n = self.nat()
            if n < 2:
                self.pos = start
                raise DomainError("Z/n needs n >= 2, got %d" % n)
            return Zn(n)
        if self.accept("GF("):
            q = self.nat()
            if self.accept("^"):
                p, k = q, self.nat()
                if prime_power(p) is None or prime_power(p)[1] != 1:
                    raise DomainError("GF base %d is not prime" % p)
            else:
                pk = prime_power(q)
                if pk is None:
                    raise DomainError("GF(%d): order is not a prime power" % q)
                p, k = pk
            self.expect(")")
            return GF(p, k)
        if self.accept("rho"):
            return RHO
        if self.accept("("):
            inner = self.ring()
            self.expect(")")
            return inner
        raise self.error("expected a ring", ["Z/", "GF(", "rho", "("])

    def int_poly(self, var):
        coeffs = {}
        sign = -1 if self.accept("-") else 1
        while True:
            c, e = self.int_term(var)
            coeffs[e] = coeffs.get(e, 0) + sign * c
            if self.accept("+"):
                sign = 1
            elif self.accept("-"):
                sign = -1
            else:
                break
        top = max(coeffs)
        return [coeffs.get(i, 0) for i in range(top + 1)]

    def int_term(self, var):
        self.skip_ws()
        if self.pos < len(self.text) and self.text[self.pos].isdigit():
            c = self.nat()
            if not self.accept("*"):
                return c, 0
        else:
            c = 1
        self.skip_ws()
        start = self.pos
        name = self.ident()
        if name != var:
            self.pos = start
            raise self.error("unknown variable %r" % name, [var])
        e = self.nat() if self.accept("^") else 1
        return c, e

    # -- expressions ---------------------------------------------------------

    def expr(self):
        if self.accept("-"):
            node = ("neg", self.term())
        else:
            node = self.term()
        while True:
            if self.accept("+"):
                node = ("add", node, self.term())
            elif self.accept("-"):
                node = ("sub", node, self.term())
            else:
                return node

    def term(self):
        node = self.power()
        while self.accept("*"):
            node = ("mul", node, self.power())
        return node

    def power(self):
        node = self.primary()
        if self.accept("^"):
            node = ("pow", node, self.nat())
        return node

    def primary(self):
        self.skip_ws()
        if self.pos >= len(self.text):
            raise self.error("unexpected end of input", ["number", "name", "("])
        ch = self.text[self.pos]
        if ch.isdigit():
            return ("int", self.nat())
        if ch.isalpha() or ch == "_":
            return ("var", self.ident())
        if self.accept("("):
            items = [self.expr()]
            while self.accept(","):
                items.append(self.expr())
            self.expect(")")
            return items[0] if len(items) == 1 else ("tuple", items)
        raise self.error("unexpected character %r" % ch, ["number", "name", "("])


def parse_ring_spec(text):
    """Parse ring-spec text into a spec tree (Zn, GF, Quotient, Product)."""
    if not text or not text.strip():
        raise SpecSyntaxError("empty ring spec", text, 0, ["ring"])
    p = _Parser(text)
    spec = p.ring()
    p.finish()
    return spec


def parse_expr(text):
    p = _Parser(text)
    node = p.expr()
    p.finish()
    return node


class RingOps:
    """Expression semantics inside a realized ring."""

    def __init__(self, ring):
        self.ring = ring

    def const(self, n):
        return self.ring.from_int(n)

    def var(self, name):
        g = self.ring.generator(name)
        if g is None:
            raise SpecSyntaxError("unknown name %r in ring %s" % (name, self.ring.text))
        return g

    def tuple(self, items):
        return eval_tuple(items, self.ring)

    def add(self, a, b):
        return self.ring.add(a, b)

    def sub(self, a, b):
        return self.ring.sub(a, b)

    def neg(self, a):
        return self.ring.neg(a)

    def mul(self, a, b):
        return self.ring.mul(a, b)

    def pow(self, a, e):
        return self.ring.pow(a, e)


def evaluate(node, ops):
    kind = node[0]
    if kind == "int":
        return ops.const(node[1])
    if kind == "var":
        return ops.var(node[1])
    if kind == "tuple":
        return ops.tuple(node[1])
    if kind == "neg":
        return ops.neg(evaluate(node[1], ops))
    if kind == "pow":
        return ops.pow(evaluate(node[1], ops), node[2])
    a, b = evaluate(node[1], ops), evaluate(node[2], ops)
    return getattr(ops, kind)(a, b)


def eval_tuple(items, ring):
    if ring.factors is None and ring.base is not None:
        # a constant of a quotient whose base is a product
        return ring.lift_base(eval_tuple(items, ring.base))
    if ring.factors is None:
        raise SpecSyntaxError("tuple element given for non-product ring %s" % ring.text)
    left, right = ring.factors
    if len(items) > 2:
        # flat (a, b, c) for a left-nested product
        items = [("tuple", items[:-1]), items[-1]]
    if len(items) != 2:
        raise SpecSyntaxError("product element needs two components")
    return ring.pair(eval_element(items[0], left), eval_element(items[1], right))


def eval_element(node, ring):
    return evaluate(node, RingOps(ring))


def parse_element(text, ring):
    """Parse an element token such as '3', '1+a', 'x^2+x^3' or '(1,2)'."""
    return eval_element(parse_expr(text), ring)


def parse_function_table(text, ring):
    """Parse 'u:v, u:v, ...' (or a JSON object) into values in canonical order."""
    text = text.strip()
    pairs = []
    if text.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SpecSyntaxError("bad JSON function table: %s" % exc.msg, text, exc.pos) from None
        if not isinstance(obj, dict):
            raise SpecSyntaxError("JSON function table must be an object", text, 0)
        for k, v in obj.items():
            pairs.append((parse_element(str(k), ring), parse_element(str(v), ring)))
    else:
        p = _Parser(text)
        while True:
            key = eval_element(p.expr(), ring)
            p.expect(":")
            pairs.append((key, eval_element(p.expr(), ring)))
            if not p.accept(","):
                break
        p.finish()
    values = [None] * ring.order
    for key, val in pairs:
        i = ring.index(key)
        if values[i] is not None:
            raise DomainError("function table lists %s twice" % ring.format(key))
        values[i] = val
    missing = [ring.format(ring.element(i)) for i, v in enumerate(values) if v is None]
    if missing:
        raise DomainError("function table misses %s" % ", ".join(missing))
    return values
