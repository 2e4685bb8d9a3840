"""Exact number-theoretic companions of the ring invariants.

Everything here works on Python ints, so no result ever overflows; the
only limits are the explicit digit caps on the orbit bound.
"""
import math
from dataclasses import dataclass
from typing import Optional

import mpmath
from sympy import factorint, isprime

from . import config
from .errors import BudgetError, DomainError

__all__ = [
    "smarandache_nt",
    "smarandache_nt_factored",
    "lcm_upto",
    "psi",
    "kombi_sum",
    "LambdaBound",
    "lambda_bound",
    "EndlBound",
    "endl_bound",
    "prime_power",
]


def prime_power(q):
    """Return (p, k) with q == p**k and p prime, or None."""
    if q < 2:
        return None
    factors = factorint(q)
    if len(factors) != 1:
        return None
    ((p, k),) = factors.items()
    return p, k


def smarandache_nt(n):
    """Least k with n | k!, found by accumulating k! modulo n."""
    if n < 2:
        raise DomainError("Smarandache function needs n >= 2, got %d" % n)
    k, acc = 1, 1
    while True:
        acc = acc * k % n
        if acc == 0:
            return k
        k += 1


def _legendre(k, p):
    # exponent of p in k!
    e = 0
    while k:
        k //= p
        e += k
    return e


def _smarandache_prime_power(p, e):
    # v_p(k!) is monotone in k and v_p((p*e)!) >= e
    lo, hi = 1, p * e
    while lo < hi:
        mid = (lo + hi) // 2
        if _legendre(mid, p) >= e:
            hi = mid
        else:
            lo = mid + 1
    return lo


def smarandache_nt_factored(n):
    """Same as :func:`smarandache_nt`, via s(n) = max over p^e || n of s(p^e)."""
    if n < 2:
        raise DomainError("Smarandache function needs n >= 2, got %d" % n)
    return max(_smarandache_prime_power(p, e) for p, e in factorint(n).items())


def lcm_upto(n):
    """lcm(1, 2, ..., n)."""
    if n < 1:
        raise DomainError("lcm_upto needs n >= 1, got %d" % n)
    out = 1
    for i in range(2, n + 1):
        out = out * i // math.gcd(out, i)
    return out


def psi(p, m):
    """Number of polyfunctions over Z/p^m: p ** (s(p) + s(p^2) + ... + s(p^m))."""
    if not isprime(p):
        raise DomainError("psi needs a prime, got %d" % p)
    if m < 1:
        raise DomainError("psi needs m >= 1, got %d" % m)
    return p ** sum(smarandache_nt(p**k) for k in range(1, m + 1))


def kombi_sum(n, k):
    """sum_{j=0}^{n} (-1)^(n-j) C(n,j) j^k, with 0^0 = 1."""
    if n < 0 or k < 0 or k > n:
        raise DomainError("kombi_sum needs 0 <= k <= n, got n=%d k=%d" % (n, k))
    # Python already evaluates 0**0 as 1
    return sum((-1) ** (n - j) * math.comb(n, j) * j**k for j in range(n + 1))


def _decimal_digits(base, exponent):
    if base == 1 or exponent == 0:
        return 1
    with mpmath.workdps(30 + len(str(exponent))):
        return int(mpmath.floor(exponent * mpmath.log10(base))) + 1


@dataclass(frozen=True)
class LambdaBound:
    """The orbit bound n! ** ((2n)^n * n), kept symbolic when too large."""

    n: int
    base: int
    exponent: int
    digits: int
    value: Optional[int]

    @property
    def symbolic(self):
        return "%d^%d" % (self.base, self.exponent)

    def require_value(self):
        if self.value is None:
            raise BudgetError(
                "Lambda(%d) = %s has %d decimal digits, above the digit cap"
                % (self.n, self.symbolic, self.digits)
            )
        return self.value


def lambda_bound(n, digit_cap=None):
    if n < 1:
        raise DomainError("lambda_bound needs n >= 1, got %d" % n)
    if digit_cap is None:
        digit_cap = config.digit_cap()
    base = math.factorial(n)
    exponent = (2 * n) ** n * n
    digits = _decimal_digits(base, exponent)
    value = base**exponent if digits <= digit_cap else None
    return LambdaBound(n, base, exponent, digits, value)


@dataclass(frozen=True)
class EndlBound:
    """Upper bound lcm(1..Lambda) + Lambda on s(R';R), numeric only for tiny Lambda."""

    n: int
    lam: LambdaBound
    value: Optional[int]

    @property
    def symbolic(self):
        return "lcm(1..L) + L with L = %s (%d digits)" % (self.lam.symbolic, self.lam.digits)

    def require_value(self):
        if self.value is None:
            raise BudgetError(
                "lcm(1..L) + L not evaluated: L = %s exceeds the Lambda cap" % self.lam.symbolic
            )
        return self.value


def endl_bound(n, lambda_cap=None):
    if lambda_cap is None:
        lambda_cap = config.lambda_cap()
    lam = lambda_bound(n, digit_cap=len(str(lambda_cap)))
    if lam.value is None or lam.value > lambda_cap:
        return EndlBound(n, lam, None)
    return EndlBound(n, lam, lcm_upto(lam.value) + lam.value)
