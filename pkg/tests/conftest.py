import sys
from pathlib import Path

import mpmath as mp
import pytest

from multifold import hp

sys.path.insert(0, str(Path(__file__).parent))

# generous fixed width for the scalar bridge; comparisons never need more
_BRIDGE_DIGITS = 70


def as_mp(x):
    """Bridge any backend scalar to an mpmath value without precision loss."""
    if isinstance(x, (int, float, str)):
        return mp.mpf(x)
    if isinstance(x, mp.mpf):
        return x
    return mp.mpf(str(hp.to_decimal(x, _BRIDGE_DIGITS)))


def rel_diff(a, b):
    """|a - b| relative to max(|a|, |b|, 1), as a float."""
    with mp.workdps(_BRIDGE_DIGITS + 10):
        a, b = as_mp(a), as_mp(b)
        scale = max(abs(a), abs(b), mp.mpf(1))
        return float(abs(a - b) / scale)


def abs_diff(a, b):
    with mp.workdps(_BRIDGE_DIGITS + 10):
        return float(abs(as_mp(a) - as_mp(b)))


def assert_close(a, b, rel=1e-30):
    d = rel_diff(a, b)
    assert d <= rel, f"difference {d:.3e} exceeds {rel:.1e} ({a} vs {b})"


def _entries(m):
    if hasattr(m, "a11"):
        return (m.a11, m.a12, m.a21, m.a22)
    if isinstance(m, mp.matrix):
        return (m[0, 0], m[0, 1], m[1, 0], m[1, 1])
    return (m[0][0], m[0][1], m[1][0], m[1][1])


def mat_close(m, expected, rel=1e-30):
    """Entrywise relative comparison of 2x2 matrices in any supported form."""
    for got, want in zip(_entries(m), _entries(expected)):
        assert_close(got, want, rel=rel)


@pytest.fixture
def digits50():
    with hp.workdps(50):
        yield


@pytest.fixture
def digits80():
    with hp.workdps(80):
        yield
