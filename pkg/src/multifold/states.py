"""Multifold state builders: echo-style and precursor-inserted evolutions.

A `TimeFold` is the schedule {t_s, t_f, t_1..t_N} of a multifold contour.
The two builders compose propagators right to left (earliest factor acts
first) exactly as the operator strings read:

    echo state       prod_{j=N..1} [ M'(t_j) M(t_j) ]           acting on G_R
    precursor state  M(t_f) prod_{j=N..1} [ M(-t_j) W M(t_j) ] M(-t_s)

Zero, negative, and repeated insertion times are ordinary compositions; no
special-casing (coincident kicks legitimately merge into one of doubled
strength).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import hp
from .evolution import (
    harmonic_propagator,
    inverted_propagator,
    kick,
    perturbed_propagator,
)
from .gaussian import (
    CovMatrix,
    OscillatorParams,
    Symplectic,
    conjugate,
    harmonic_reference_covariance,
    reference_covariance,
)


@dataclass(frozen=True)
class TimeFold:
    """Multifold schedule: insertion times plus start/final offsets.

    `times` may hold any reals in any order; N = len(times). The echo-state
    builder ignores t_s and always ignores t_f unless asked to append the
    outer final evolution.
    """

    times: tuple
    t_s: hp.Scalar
    t_f: hp.Scalar

    def __init__(self, times=(), t_s=0, t_f=0):
        object.__setattr__(self, "times", tuple(hp.mpf(t) for t in times))
        object.__setattr__(self, "t_s", hp.mpf(t_s))
        object.__setattr__(self, "t_f", hp.mpf(t_f))

    @property
    def n_insertions(self) -> int:
        return len(self.times)

    def turning_points(self) -> tuple:
        """Contour vertices in order: t_s, t_1, ..., t_N, t_f."""
        return (self.t_s, *self.times, self.t_f)


def loschmidt_symplectic(
    fold: TimeFold, params: OscillatorParams, include_final: bool = False
) -> Symplectic:
    """Symplectic matrix of the echo evolution (optionally with outer M(t_f))."""
    S = Symplectic.identity()
    for tj in fold.times:
        S = perturbed_propagator(tj, params) @ inverted_propagator(tj, params) @ S
    if include_final:
        S = inverted_propagator(fold.t_f, params) @ S
    return S


def loschmidt_covariance(
    fold: TimeFold, params: OscillatorParams, include_final: bool = False
) -> CovMatrix:
    """Covariance of the echo state built by alternating forward evolution
    under H and backward evolution under the perturbed H'.

    With delta_omega = 0 every M'(t) M(t) pair cancels exactly and the
    reference covariance comes back unchanged. `include_final` appends the
    outer e^{-i H t_f} evolution variant.
    """
    S = loschmidt_symplectic(fold, params, include_final)
    return conjugate(reference_covariance(params), S)


def precursor_symplectic(fold: TimeFold, params: OscillatorParams) -> Symplectic:
    """Symplectic matrix of the precursor-inserted multifold evolution.

    Literal reading of the state definition under this module's sign
    convention: e^{+iHt_s} contributes M(-t_s) for every N (cross-checked
    numerically against the leading-order predictions).
    """
    W = kick(params)
    S = inverted_propagator(-fold.t_s, params)
    for tj in fold.times:
        S = (
            inverted_propagator(-tj, params)
            @ W
            @ inverted_propagator(tj, params)
            @ S
        )
    return inverted_propagator(fold.t_f, params) @ S


def precursor_covariance(fold: TimeFold, params: OscillatorParams) -> CovMatrix:
    """Covariance of the precursor state: kicks conjugated to times t_1..t_N
    between outer evolutions over t_s and t_f."""
    S = precursor_symplectic(fold, params)
    return conjugate(reference_covariance(params), S)


def harmonic_precursor_covariance(
    t1: hp.ScalarLike, params: OscillatorParams
) -> CovMatrix:
    """Covariance of the single-kick precursor state of the ordinary
    oscillator, relative to the doubled-frequency reference."""
    S = (
        harmonic_propagator(-hp.mpf(t1), params)
        @ kick(params)
        @ harmonic_propagator(t1, params)
    )
    return conjugate(harmonic_reference_covariance(params), S)


def harmonic_precursor_rho(t1: hp.ScalarLike, params: OscillatorParams) -> hp.Scalar:
    """Closed form of the relative-covariance eigenvalue for the harmonic
    single-kick precursor (exact, not a leading order):

        1 + d^2/(32 sqrt2 w^2) [ sqrt2 (25 - 30 c2 + 9 c2^2)
            + (5 - 3 c2) sqrt(59 - 60 c2 + 9 c4 + 128 w^2/d^2) ]

    with c2 = cos(2 w t1), c4 = cos(4 w t1), d = delta_omega. Stays within
    O(delta_omega/omega) of 1 uniformly in t1: the non-chaotic control.
    """
    w, d = params.omega, params.delta_omega
    if d == 0:
        return hp.mpf(1)
    wt = w * hp.mpf(t1)
    c2, c4 = hp.cos(2 * wt), hp.cos(4 * wt)
    root = hp.sqrt(59 - 60 * c2 + 9 * c4 + 128 * w**2 / d**2)
    bracket = hp.sqrt(2) * (25 - 30 * c2 + 9 * c2**2) + (5 - 3 * c2) * root
    return 1 + d**2 / (32 * hp.sqrt(2) * w**2) * bracket
