"""Closed-form symplectic propagators and their quadratic generators.

Sign convention, fixed here once for every downstream builder:

    e^{-i H t}   <->  inverted_propagator(t)    [M(t)]
    e^{+i H' t}  <->  perturbed_propagator(t)   [M'(t)]
    e^{-i H_h t} <->  harmonic_propagator(t)    [M_h(t)]
    e^{-(i/2) m delta_omega q^2}  <->  kick()   [W]

with H the inverted oscillator p^2/2m - m omega^2 q^2/2, H' the same at
frequency omega + delta_omega, and H_h the ordinary oscillator. Propagators
are evaluated from cosh/sinh/cos/sin directly (no e^{+-omega t} differencing)
in high precision.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import hp
from .gaussian import OscillatorParams, Symplectic
from .linalg import Mat2


@dataclass(frozen=True)
class Generator:
    """Symmetric quadratic-form coefficients k of a Gaussian unitary.

    The unitary exp(-(i/2) k_ab xi^a xi^b) acts on covariance matrices
    through the symplectic matrix exp(Omega k); symmetry is guaranteed by
    storing the three independent entries.
    """

    k11: hp.Scalar
    k12: hp.Scalar
    k22: hp.Scalar

    def __init__(self, k11, k12, k22):
        object.__setattr__(self, "k11", hp.mpf(k11))
        object.__setattr__(self, "k12", hp.mpf(k12))
        object.__setattr__(self, "k22", hp.mpf(k22))

    def as_mat2(self) -> Mat2:
        return Mat2(self.k11, self.k12, self.k12, self.k22)

    def det(self) -> hp.Scalar:
        return self.k11 * self.k22 - self.k12 * self.k12


def exp_generator(k: Generator) -> Symplectic:
    """Exponentiate a generator to its symplectic matrix, exp(Omega k).

    K = Omega k is traceless, so Cayley-Hamilton closes the series:
    with d = det k,

        d < 0:  exp(K) = cosh(theta) I + sinh(theta)/theta K,  theta = sqrt(-d)
        d > 0:  exp(K) = cos(phi) I + sin(phi)/phi K,          phi = sqrt(d)
        d = 0:  exp(K) = I + K
    """
    K = Mat2(k.k12, k.k22, -k.k11, -k.k12)
    d = k.det()
    if d == 0:
        return Symplectic(Mat2.identity().add(K))
    if d < 0:
        theta = hp.sqrt(-d)
        c, s = hp.cosh(theta), hp.sinh(theta) / theta
    else:
        phi = hp.sqrt(d)
        c, s = hp.cos(phi), hp.sin(phi) / phi
    return Symplectic(Mat2(c + s * K.a11, s * K.a12, s * K.a21, c + s * K.a22))


def inverted_generator(t: hp.ScalarLike, params: OscillatorParams) -> Generator:
    """Generator of e^{-iHt} for the inverted oscillator."""
    ts = hp.mpf(t)
    m, w, g = params.m, params.omega, params.g
    return Generator(-(w**2) * m * ts / g**2, 0, g**2 * ts / m)


def perturbed_generator(t: hp.ScalarLike, params: OscillatorParams) -> Generator:
    """Generator of e^{+iH't} at the perturbed frequency."""
    ts = hp.mpf(t)
    m, g = params.m, params.g
    wp = params.omega_perturbed
    return Generator(wp**2 * m * ts / g**2, 0, -(g**2) * ts / m)


def harmonic_generator(t: hp.ScalarLike, params: OscillatorParams) -> Generator:
    """Generator of e^{-iH_h t} for the ordinary oscillator."""
    ts = hp.mpf(t)
    m, w, g = params.m, params.omega, params.g
    return Generator(w**2 * m * ts / g**2, 0, g**2 * ts / m)


def kick_generator(params: OscillatorParams) -> Generator:
    """Generator of the instantaneous perturbation e^{-(i/2) m delta_omega q^2}."""
    return Generator(params.m * params.delta_omega / params.g**2, 0, 0)


def inverted_propagator(t: hp.ScalarLike, params: OscillatorParams) -> Symplectic:
    """M(t): hyperbolic rotation [[cosh wt, B sinh wt], [sinh wt / B, cosh wt]]
    with B = g^2/(m omega). Satisfies M(t1) M(t2) = M(t1 + t2)."""
    wt = params.omega * hp.mpf(t)
    b = params.g**2 / (params.m * params.omega)
    c, s = hp.cosh(wt), hp.sinh(wt)
    return Symplectic(Mat2(c, b * s, s / b, c))


def perturbed_propagator(t: hp.ScalarLike, params: OscillatorParams) -> Symplectic:
    """M'(t) for e^{+iH't}: frequency omega + delta_omega, reversed flow.

    With delta_omega = 0 this equals inverted_propagator(-t).
    """
    wp = params.omega_perturbed
    wt = wp * hp.mpf(t)
    b = params.g**2 / (params.m * wp)
    c, s = hp.cosh(wt), hp.sinh(wt)
    return Symplectic(Mat2(c, -b * s, -s / b, c))


def harmonic_propagator(t: hp.ScalarLike, params: OscillatorParams) -> Symplectic:
    """M_h(t): ordinary rotation [[cos wt, B sin wt], [-sin wt / B, cos wt]],
    periodic with period 2 pi / omega."""
    wt = params.omega * hp.mpf(t)
    b = params.g**2 / (params.m * params.omega)
    c, s = hp.cos(wt), hp.sin(wt)
    return Symplectic(Mat2(c, b * s, -s / b, c))


def kick(params: OscillatorParams) -> Symplectic:
    """W: the momentum shear [[1, 0], [-m delta_omega/g^2, 1]], det exactly 1."""
    one, zero = hp.mpf(1), hp.mpf(0)
    return Symplectic(Mat2(one, zero, -params.m * params.delta_omega / params.g**2, one))
