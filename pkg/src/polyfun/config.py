"""Budget caps, overridable through environment variables.

POLYFUN_MAX_ORDER     largest ring order build_ring accepts (default 2**20)
POLYFUN_ECHELON_CAP   row reductions one echelon space may perform (default 10**7)
POLYFUN_ORACLE_CAP    coefficient tuples the brute-force oracle may scan (default 10**6)
POLYFUN_DIGIT_CAP     decimal digits lambda_bound evaluates exactly (default 10**6)
POLYFUN_LAMBDA_CAP    largest Lambda for which endl_bound evaluates lcm (default 10**4)
"""
import os

DEFAULTS = {
    "POLYFUN_MAX_ORDER": 2**20,
    "POLYFUN_ECHELON_CAP": 10**7,
    "POLYFUN_ORACLE_CAP": 10**6,
    "POLYFUN_DIGIT_CAP": 10**6,
    "POLYFUN_LAMBDA_CAP": 10**4,
}


def cap(name):
    raw = os.environ.get(name)
    if raw is None:
        return DEFAULTS[name]
    try:
        value = int(raw)
    except ValueError:
        raise ValueError("%s must be an integer, got %r" % (name, raw)) from None
    if value < 1:
        raise ValueError("%s must be positive" % name)
    return value


def max_order():
    return cap("POLYFUN_MAX_ORDER")


def echelon_cap():
    return cap("POLYFUN_ECHELON_CAP")


def oracle_cap():
    return cap("POLYFUN_ORACLE_CAP")


def digit_cap():
    return cap("POLYFUN_DIGIT_CAP")


def lambda_cap():
    return cap("POLYFUN_LAMBDA_CAP")
