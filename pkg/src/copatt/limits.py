"""Global size cap for exponential enumerations.

The default cap is 24 and can be overridden with the ``COPATT_MAX_N``
environment variable.
"""
import os

from .errors import ResourceCapError

DEFAULT_MAX_N = 24
ENV_VAR = "COPATT_MAX_N"


def max_n():
    raw = os.environ.get(ENV_VAR)
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_N
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_VAR} must be an integer, got {raw!r}") from None
    if value < 0:
        raise ValueError(f"{ENV_VAR} must be nonnegative, got {value}")
    return value


def cap_policy():
    return f"enumerations are limited to n <= {max_n()} (set {ENV_VAR} to change)"


def check_cap(n, what="n"):
    cap = max_n()
    if n > cap:
        raise ResourceCapError(f"{what}={n} exceeds the resource cap; {cap_policy()}")
