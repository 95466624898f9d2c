"""Numeric limits with environment-variable fallbacks."""

import os

DEFAULT_BUDGET = 10_000_000
DEFAULT_TC_CAP = 100_000
DEFAULT_ORDER_CAP = 5
DEFAULT_CLOSURE_CAP = 1_000_000
MAX_GROUP_ORDER = 255


def _env_int(name, default):
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    return int(raw)


def budget(value=None):
    return value if value is not None else _env_int("QF_BUDGET", DEFAULT_BUDGET)


def tc_cap(value=None):
    return value if value is not None else _env_int("QF_TC_CAP", DEFAULT_TC_CAP)


def order_cap(value=None):
    return value if value is not None else _env_int("QF_ORDER_CAP", DEFAULT_ORDER_CAP)


def threads(value=None):
    if value is not None:
        return max(1, value)
    return max(1, _env_int("QF_THREADS", 1))


def max_threads():
    return max(1, os.cpu_count() or 1)
