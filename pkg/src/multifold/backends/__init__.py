"""Numeric backends for the high-precision scalar type.

Two interchangeable backends provide the same function-level API:

``gmpy2_``
    Compiled MPFR binding (fast path).
``mpmath_``
    Pure-Python arbitrary precision (always available).

`select_backend` picks gmpy2 when importable, falling back to mpmath.
The environment variable ``MULTIFOLD_BACKEND`` forces a choice.
"""

from __future__ import annotations

import os


def select_backend(name: str | None = None):
    """Return the backend module for `name`, or the best available one."""
    if name is None:
        name = os.environ.get("MULTIFOLD_BACKEND", "").strip().lower() or None
    if name == "gmpy2":
        from . import gmpy2_
        return gmpy2_
    if name == "mpmath":
        from . import mpmath_
        return mpmath_
    if name is not None:
        raise ValueError(f"unknown backend {name!r} (expected 'gmpy2' or 'mpmath')")
    try:
        from . import gmpy2_
        return gmpy2_
    except ImportError:
        from . import mpmath_
        return mpmath_
