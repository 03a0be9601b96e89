"""gmpy2 (MPFR) backend: compiled multiprecision scalars."""

from __future__ import annotations

import gmpy2

NAME = "gmpy2"
IS_COMPILED = True

# Widest exponent window MPFR allows; covariance entries reach ~e^{±400}
# and the precision contract asks for a decimal exponent range of ±1e6.
_EMAX = gmpy2.get_emax_max()
_EMIN = gmpy2.get_emin_min()


def set_precision(bits: int) -> None:
    ctx = gmpy2.get_context()
    ctx.precision = bits
    ctx.emax = _EMAX
    ctx.emin = _EMIN


def get_precision() -> int:
    return gmpy2.get_context().precision


def mpf(x):
    if isinstance(x, float) and x != x:
        raise ValueError("nan is not a valid scalar")
    return gmpy2.mpfr(x)


exp = gmpy2.exp
log = gmpy2.log
sqrt = gmpy2.sqrt
cosh = gmpy2.cosh
sinh = gmpy2.sinh
cos = gmpy2.cos
sin = gmpy2.sin


def pi():
    return gmpy2.const_pi()


def is_finite(x) -> bool:
    return bool(gmpy2.is_finite(x))


def to_decimal_str(x, digits: int) -> str:
    """Decimal string of `x` with `digits` significant digits.

    Works on the value as stored (no re-rounding to the active context).
    """
    if not isinstance(x, gmpy2.mpfr):
        x = gmpy2.mpfr(x)
    if x == 0:
        return "0"
    mant, exp10, _ = x.digits(10, digits)
    sign = ""
    if mant.startswith("-"):
        sign, mant = "-", mant[1:]
    return f"{sign}0.{mant}e{exp10}"
