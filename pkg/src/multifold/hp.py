"""High-precision scalar facade.

All toolkit arithmetic goes through this module so the numeric backend
(compiled gmpy2/MPFR or pure-Python mpmath) stays swappable. Precision is
tracked in decimal digits; the active backend runs with a dozen guard bits
on top. The contract is >= 40 significant digits and a decimal exponent
range far beyond +-1e6, which both backends satisfy.

Values are plain backend scalars (`gmpy2.mpfr` / `mpmath.mpf`) supporting
native operators; only construction, transcendentals, and formatting need
the functions here. Do not mix values across a `use_backend` switch.
"""

from __future__ import annotations

import math
from contextlib import contextmanager
from decimal import Decimal, localcontext
from typing import Any, Iterator, Union

from . import backends

Scalar = Any
ScalarLike = Union[int, float, str, Scalar]

DEFAULT_DIGITS = 40
GUARD_BITS = 12

_backend = backends.select_backend()
_digits = DEFAULT_DIGITS


def _bits_for(digits: int) -> int:
    return int(math.ceil(digits * 3.3219280948873626)) + GUARD_BITS


_backend.set_precision(_bits_for(_digits))


def backend_name() -> str:
    return _backend.NAME


def backend_is_compiled() -> bool:
    return _backend.IS_COMPILED


def use_backend(name: str) -> None:
    """Switch numeric backend process-wide (for benchmarks and tests)."""
    global _backend
    _backend = backends.select_backend(name)
    _backend.set_precision(_bits_for(_digits))


def current_digits() -> int:
    return _digits


def set_digits(digits: int) -> None:
    global _digits
    if digits < 6:
        raise ValueError("precision below 6 digits is not supported")
    _digits = int(digits)
    _backend.set_precision(_bits_for(_digits))


@contextmanager
def workdps(digits: int) -> Iterator[None]:
    """Run the enclosed block at `digits` significant decimal digits."""
    previous = _digits
    set_digits(digits)
    try:
        yield
    finally:
        set_digits(previous)


def mpf(x: ScalarLike) -> Scalar:
    return _backend.mpf(x)


def exp(x: ScalarLike) -> Scalar:
    return _backend.exp(_backend.mpf(x))


def log(x: ScalarLike) -> Scalar:
    return _backend.log(_backend.mpf(x))


def sqrt(x: ScalarLike) -> Scalar:
    return _backend.sqrt(_backend.mpf(x))


def cosh(x: ScalarLike) -> Scalar:
    return _backend.cosh(_backend.mpf(x))


def sinh(x: ScalarLike) -> Scalar:
    return _backend.sinh(_backend.mpf(x))


def cos(x: ScalarLike) -> Scalar:
    return _backend.cos(_backend.mpf(x))


def sin(x: ScalarLike) -> Scalar:
    return _backend.sin(_backend.mpf(x))


def pi() -> Scalar:
    return _backend.pi()


def is_finite(x: Scalar) -> bool:
    return _backend.is_finite(x)


def to_float(x: Scalar) -> float:
    return float(x)


def to_decimal(x: Scalar, digits: int | None = None) -> Decimal:
    """Convert to `Decimal` with `digits` significant digits (default: all)."""
    if digits is None:
        digits = _digits
    return Decimal(_backend.to_decimal_str(x, digits))


def format_sci(x: ScalarLike, sig: int = 12) -> str:
    """Deterministic scientific notation with `sig` significant digits.

    Backend-independent formatting path: the scalar is rendered to a decimal
    string with guard digits, rounded half-even with `decimal`, and printed
    as ``d.ddd...e[+-]XX`` (two-digit minimum exponent, LF-free).
    """
    d = to_decimal(mpf(x), sig + 8)
    if d == 0:
        mantissa = "0." + "0" * (sig - 1)
        return mantissa + "e+00"
    with localcontext() as ctx:
        ctx.prec = sig
        d = +d
    sign, digits_tuple, _ = d.as_tuple()
    digits_str = "".join(map(str, digits_tuple)).ljust(sig, "0")[:sig]
    exponent = d.adjusted()
    head = "-" if sign else ""
    return f"{head}{digits_str[0]}.{digits_str[1:]}e{exponent:+03d}"


def nstr(x: Scalar, sig: int = 12) -> str:
    """Short human-readable rendering used in messages and dumps."""
    return format_sci(x, sig)
