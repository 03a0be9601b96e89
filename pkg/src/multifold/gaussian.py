"""Covariance-matrix representation of one-mode Gaussian states.

A pure one-mode Gaussian state is fully described by the 2x2 symmetric
positive-definite matrix of symmetrized two-point functions built from the
dimensionless quadrature pair (q*g, p/g). Complexity and state overlap are
both functions of the larger eigenvalue `rho` of the relative covariance
matrix between a target and a reference state:

    complexity      = log(rho) / 2
    inner product   = 2*sqrt(rho) / (1 + rho)

All arithmetic runs on the high-precision scalar type from `multifold.hp`;
covariance matrices store three entries so symmetry is exact by construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import hp
from .errors import DegenerateSpectrum, DomainError
from .linalg import Mat2

# Discriminant values in [-DISC_CLAMP_REL * trace^2, 0) are rounding noise of a
# near-degenerate spectrum and are clamped to zero; below that band the matrix
# cannot come from a pure Gaussian pipeline.
DISC_CLAMP_REL = "1e-20"
# `complexity` / `inner_product` accept rho >= 1 - RHO_UNIT_TOL as rounding
# noise around the identity and clamp it to exactly 1.
RHO_UNIT_TOL = "1e-20"


@dataclass(frozen=True)
class OscillatorParams:
    """Oscillator constants: mass, frequency, perturbation, gate scale.

    Parameters
    ----------
    m:
        Oscillator mass (natural units, hbar = 1). Must be positive.
    omega:
        Frequency. Must be positive.
    delta_omega:
        Frequency perturbation >= 0. The perturbative analysis assumes
        delta_omega << omega; values above omega/10 are flagged by the
        leading-order routines, not rejected here.
    g:
        Gate scale making (q*g, p/g) dimensionless. Must be positive.

    Inputs may be int, float, str, or scalars; strings are the precise way
    to pass decimal values such as "1e-3".
    """

    m: hp.Scalar
    omega: hp.Scalar
    delta_omega: hp.Scalar
    g: hp.Scalar

    def __init__(self, m=1, omega=1, delta_omega=0, g=1):
        object.__setattr__(self, "m", hp.mpf(m))
        object.__setattr__(self, "omega", hp.mpf(omega))
        object.__setattr__(self, "delta_omega", hp.mpf(delta_omega))
        object.__setattr__(self, "g", hp.mpf(g))
        if not (self.m > 0 and self.omega > 0 and self.g > 0):
            raise DomainError("m, omega and g must all be positive")
        if self.delta_omega < 0:
            raise DomainError("delta_omega must be >= 0")

    @classmethod
    def from_ratio(cls, delta_ratio="1e-3", omega=1, m=1, g=1) -> "OscillatorParams":
        """Build params from the dimensionless ratio delta_omega/omega."""
        omega_s = hp.mpf(omega)
        return cls(m=m, omega=omega_s, delta_omega=hp.mpf(delta_ratio) * omega_s, g=g)

    @property
    def omega_perturbed(self) -> hp.Scalar:
        return self.omega + self.delta_omega

    @property
    def alpha(self) -> hp.Scalar:
        """Dimensionless coupling delta_omega^2 / (4 omega^2)."""
        return self.delta_omega**2 / (4 * self.omega**2)


@dataclass(frozen=True)
class CovMatrix:
    """Symmetric positive-definite 2x2 covariance matrix.

    Stores the three independent entries, so G12 == G21 holds exactly.
    Construction validates G11 > 0 and det G > 0.
    """

    g11: hp.Scalar
    g12: hp.Scalar
    g22: hp.Scalar

    def __init__(self, g11, g12, g22):
        object.__setattr__(self, "g11", hp.mpf(g11))
        object.__setattr__(self, "g12", hp.mpf(g12))
        object.__setattr__(self, "g22", hp.mpf(g22))
        if not self.g11 > 0:
            raise DomainError("covariance matrix needs G11 > 0")
        # det cancels catastrophically for huge pure-state covariances
        # (g11*g22 ~ rho^2 against det = 1), so reject only a negative det
        # beyond the rounding band of the products that formed it
        det = self.det()
        scale = max(abs(self.g11 * self.g22), self.g12 * self.g12, hp.mpf(1))
        if det <= -scale * hp.mpf(10) ** (8 - hp.current_digits()):
            raise DomainError("covariance matrix must be positive definite")

    def det(self) -> hp.Scalar:
        return self.g11 * self.g22 - self.g12 * self.g12

    def as_mat2(self) -> Mat2:
        return Mat2(self.g11, self.g12, self.g12, self.g22)

    def inverse_mat2(self) -> Mat2:
        d = self.det()
        return Mat2(self.g22 / d, -self.g12 / d, -self.g12 / d, self.g11 / d)


@dataclass(frozen=True)
class Symplectic:
    """Real 2x2 matrix with unit determinant (a one-mode Gaussian unitary).

    The determinant is validated against a tolerance scaled by the squared
    max-norm, which is the accuracy rounding allows for entries of size
    ~e^{|omega t|}.
    """

    m: Mat2

    def __init__(self, m: Mat2, check: bool = True):
        object.__setattr__(self, "m", m)
        if check:
            # a freshly-assembled matrix can only be off by rounding of its
            # own entries; products skip this (their det drift reflects the
            # cancellation history of the chain, not the result's scale)
            scale = max(hp.mpf(1), m.max_abs() ** 2)
            tol = scale * hp.mpf(10) ** (8 - hp.current_digits())
            if abs(m.det() - 1) > tol:
                raise DomainError(
                    f"not symplectic: |det - 1| = {hp.nstr(abs(m.det() - 1), 6)}"
                )

    @staticmethod
    def identity() -> "Symplectic":
        return Symplectic(Mat2.identity())

    def __matmul__(self, other: "Symplectic") -> "Symplectic":
        return Symplectic(self.m @ other.m, check=False)

    def inverse(self) -> "Symplectic":
        a, b, c, d = self.m
        return Symplectic(Mat2(d, -b, -c, a), check=False)

    def transpose_mat2(self) -> Mat2:
        return self.m.transpose()


def reference_covariance(params: OscillatorParams) -> CovMatrix:
    """Ground-state covariance of the frequency-omega harmonic oscillator.

    Returns diag(g^2/(m omega), m omega/g^2); the toolkit's reference state.
    """
    b = params.g**2 / (params.m * params.omega)
    return CovMatrix(b, 0, 1 / b)


def harmonic_reference_covariance(params: OscillatorParams) -> CovMatrix:
    """Ground-state covariance at doubled frequency: diag(g^2/(2 m omega), 2 m omega/g^2).

    Reference state for the harmonic (non-chaotic) control runs, where the
    frequency-omega ground state would be stationary.
    """
    b = params.g**2 / (2 * params.m * params.omega)
    return CovMatrix(b, 0, 1 / b)


def conjugate(G: CovMatrix, M: Symplectic) -> CovMatrix:
    """Transform a covariance by a Gaussian unitary: G -> M G M^T.

    The three independent entries are computed directly, so the result is
    symmetric by construction and det is preserved up to rounding.
    """
    a, b, c, d = M.m
    g11, g12, g22 = G.g11, G.g12, G.g22
    r11 = a * a * g11 + 2 * a * b * g12 + b * b * g22
    r12 = a * c * g11 + (a * d + b * c) * g12 + b * d * g22
    r22 = c * c * g11 + 2 * c * d * g12 + d * d * g22
    return CovMatrix(r11, r12, r22)


def relative_covariance(G_T: CovMatrix, G_R: CovMatrix) -> Mat2:
    """Relative covariance matrix Delta = G_T G_R^{-1}.

    Not symmetric in general; for the pure states this toolkit produces its
    two eigenvalues are reciprocal positive reals and det Delta = 1.
    """
    return G_T.as_mat2() @ G_R.inverse_mat2()


def rho_exact(delta: Mat2) -> hp.Scalar:
    """Larger eigenvalue of a relative covariance matrix, exact radical form.

        rho = (D11 + D22 + sqrt((D11 - D22)^2 + 4 D12 D21)) / 2

    The companion eigenvalue is 1/rho. Small negative discriminants (within
    ``DISC_CLAMP_REL`` of trace^2) are clamped to zero; anything more negative
    raises `DegenerateSpectrum`.
    """
    tr = delta.trace()
    disc = (delta.a11 - delta.a22) ** 2 + 4 * delta.a12 * delta.a21
    if disc < 0:
        if disc < -hp.mpf(DISC_CLAMP_REL) * tr * tr:
            raise DegenerateSpectrum(
                f"discriminant {hp.nstr(disc, 6)} is negative beyond tolerance"
            )
        disc = hp.mpf(0)
    rho = (tr + hp.sqrt(disc)) / 2
    if rho < 1:
        # pure-state spectrum is {rho, 1/rho} with rho >= 1; sub-unit values
        # can only be rounding residue of the identity
        if 1 - rho > hp.mpf(RHO_UNIT_TOL) * max(hp.mpf(1), abs(tr)):
            raise DegenerateSpectrum(
                f"leading eigenvalue {hp.nstr(rho, 6)} < 1: not a pure-state "
                "relative covariance"
            )
        rho = hp.mpf(1)
    return rho


def _checked_rho(rho: hp.ScalarLike) -> hp.Scalar:
    r = hp.mpf(rho)
    if r < 1:
        if 1 - r > hp.mpf(RHO_UNIT_TOL):
            raise DomainError(f"rho = {hp.nstr(r, 6)} is below 1")
        r = hp.mpf(1)
    return r


def complexity(rho: hp.ScalarLike) -> hp.Scalar:
    """Circuit complexity log(rho)/2 (identical under the F1 and F2 costs)."""
    return hp.log(_checked_rho(rho)) / 2


def inner_product(rho: hp.ScalarLike) -> hp.Scalar:
    """State overlap |<R|T>|^2 = 2 sqrt(rho) / (1 + rho), in (0, 1]."""
    r = _checked_rho(rho)
    return 2 * hp.sqrt(r) / (1 + r)


def neg_log_inner(rho: hp.ScalarLike) -> hp.Scalar:
    """-log of the overlap; approaches log(rho)/2 - log 2 for large rho."""
    return -hp.log(inner_product(rho))
