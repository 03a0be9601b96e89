"""mpmath backend: pure-Python multiprecision scalars."""

from __future__ import annotations

import mpmath
from mpmath import mp

NAME = "mpmath"
IS_COMPILED = False


def set_precision(bits: int) -> None:
    mp.prec = bits


def get_precision() -> int:
    return mp.prec


def mpf(x):
    if isinstance(x, float) and x != x:
        raise ValueError("nan is not a valid scalar")
    return mp.mpf(x)


exp = mpmath.exp
log = mpmath.log
sqrt = mpmath.sqrt
cosh = mpmath.cosh
sinh = mpmath.sinh
cos = mpmath.cos
sin = mpmath.sin


def pi():
    return +mp.pi


def is_finite(x) -> bool:
    return bool(mpmath.isfinite(x))


def to_decimal_str(x, digits: int) -> str:
    """Decimal string of `x` with `digits` significant digits.

    Works on the value as stored (no re-rounding to the active context).
    """
    if not isinstance(x, mp.mpf):
        x = mp.mpf(x)
    if x == 0:
        return "0"
    return mpmath.nstr(x, digits, strip_zeros=False)
