"""Minimal 2x2 matrix arithmetic over high-precision scalars."""

from __future__ import annotations

from typing import NamedTuple

from . import hp


class Mat2(NamedTuple):
    """Row-major 2x2 matrix [[a11, a12], [a21, a22]] of scalars."""

    a11: hp.Scalar
    a12: hp.Scalar
    a21: hp.Scalar
    a22: hp.Scalar

    @staticmethod
    def identity() -> "Mat2":
        one, zero = hp.mpf(1), hp.mpf(0)
        return Mat2(one, zero, zero, one)

    @staticmethod
    def from_rows(rows) -> "Mat2":
        (a, b), (c, d) = rows
        return Mat2(hp.mpf(a), hp.mpf(b), hp.mpf(c), hp.mpf(d))

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
        )

    def transpose(self) -> "Mat2":
        return Mat2(self.a11, self.a21, self.a12, self.a22)

    def det(self) -> hp.Scalar:
        return self.a11 * self.a22 - self.a12 * self.a21

    def trace(self) -> hp.Scalar:
        return self.a11 + self.a22

    def scaled(self, s) -> "Mat2":
        return Mat2(self.a11 * s, self.a12 * s, self.a21 * s, self.a22 * s)

    def add(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a11 + other.a11, self.a12 + other.a12,
            self.a21 + other.a21, self.a22 + other.a22,
        )

    def sub(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a11 - other.a11, self.a12 - other.a12,
            self.a21 - other.a21, self.a22 - other.a22,
        )

    def max_abs(self) -> hp.Scalar:
        return max(abs(self.a11), abs(self.a12), abs(self.a21), abs(self.a22))


def max_rel_diff(a: Mat2, b: Mat2) -> hp.Scalar:
    """Entrywise max |a - b| relative to the larger max-norm of the pair."""
    scale = max(a.max_abs(), b.max_abs())
    if scale == 0:
        return hp.mpf(0)
    return a.sub(b).max_abs() / scale
