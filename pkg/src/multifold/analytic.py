"""Leading-order combinatorics: term sums, scrambling times, switchback law.

For a fold with insertion times t_1..t_N and coupling
alpha = delta_omega^2/(4 omega^2), the leading-order eigenvalue of the
relative covariance matrix is a sum of exponential terms:

echo state
    1 + sum over nonempty ordered subsets j_1<..<j_n and sign patterns
    (s_1..s_{n-1}) of  alpha^(2n-1-kappa) * exp|4 (t_j1 s_1 t_j2 ... ) omega|
    where kappa counts sign changes in the arrangement.

precursor state
    exp|2 (t_s - t_f) omega| + sum over nonempty subsets of
    alpha^n * exp|4 (t_s/2 - t_j1 + t_j2 - ... + (-1)^{n+1} t_f/2) omega|.

Each term's alpha power sigma counts "competitions": its onset time is
sigma * t_star with the single scrambling time t_star = -log(alpha)/(4 omega).
Term lists are enumerated deterministically (subsets by size then
lexicographic order, patterns by binary counting with + = 0) so sums and
golden files are reproducible. The sigma = 0 constant / one-way term is
included in every list.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, NamedTuple, Sequence

from . import hp
from .errors import ComplexityBudget, DomainError, RegimeWarning
from .gaussian import OscillatorParams
from .states import TimeFold

# Sign patterns are tuples of +1 / -1.
SignPattern = tuple

MAX_LOSCHMIDT_INSERTIONS = 15
MAX_PRECURSOR_INSERTIONS = 40

# delta_omega/omega above this is outside the perturbative regime the
# leading-order sums were derived in.
PERTURBATIVE_RATIO_LIMIT = "0.1"


@dataclass(frozen=True)
class AnalyticTerm:
    """One term of a leading-order sum: alpha^sigma * exp|4 * arg * omega|.

    `subset` holds the 1-based insertion indices, `pattern` the relative
    signs after the first time (empty for singletons), `exponent_arg` the
    signed time combination inside |.|. The sigma = 0 base term (constant 1
    for the echo sum, the one-way exponential for the precursor sum) has an
    empty subset.
    """

    subset: tuple
    pattern: SignPattern
    sigma: int
    exponent_arg: hp.Scalar
    value: hp.Scalar
    log_value: hp.Scalar


class LeadingSum(NamedTuple):
    """Leading-order eigenvalue with its full enumerated term list."""

    value: hp.Scalar
    terms: tuple


class DominantTermResult(NamedTuple):
    """Argmax term of a list, with co-maximal ties flagged."""

    term: AnalyticTerm
    is_tie: bool
    tied: tuple


def kappa(pattern: Sequence[int]) -> int:
    """Number of sign changes in an arrangement.

    The arrangement starts implicitly on +, so a leading - counts one change;
    every unequal adjacent pair counts another. kappa(()) = 0.
    """
    for s in pattern:
        if s not in (1, -1):
            raise DomainError("sign patterns contain only +1 / -1")
    if not pattern:
        return 0
    changes = 1 if pattern[0] == -1 else 0
    changes += sum(1 for a, b in zip(pattern, pattern[1:]) if a != b)
    return changes


def sign_patterns(n: int) -> Iterator[SignPattern]:
    """All 2^(n-1) patterns for a subset of size n, binary counting, + = 0."""
    if n < 1:
        return
    for bits in range(2 ** (n - 1)):
        yield tuple(
            -1 if (bits >> (n - 2 - i)) & 1 else 1 for i in range(n - 1)
        )


def alpha_coupling(params: OscillatorParams) -> hp.Scalar:
    """alpha = delta_omega^2 / (4 omega^2); must be positive here."""
    if params.delta_omega == 0:
        raise DomainError(
            "alpha = 0: the unperturbed case has no leading-order expansion"
        )
    return params.alpha


def _warn_if_outside_perturbative(params: OscillatorParams) -> None:
    if params.delta_omega / params.omega > hp.mpf(PERTURBATIVE_RATIO_LIMIT):
        warnings.warn(
            "delta_omega/omega > 0.1: outside the perturbative regime of the "
            "leading-order formulas",
            RegimeWarning,
            stacklevel=3,
        )


def scrambling_time(params: OscillatorParams) -> hp.Scalar:
    """Single scrambling time t_star = -log(alpha) / (4 omega).

    A sigma-competition term turns on at sigma * t_star. Requires alpha < 1.
    """
    _warn_if_outside_perturbative(params)
    alpha = alpha_coupling(params)
    if alpha >= 1:
        raise DomainError("alpha >= 1: no perturbative scrambling regime")
    return -hp.log(alpha) / (4 * params.omega)


def fold_legs(fold: TimeFold) -> tuple:
    """Absolute lengths of the contour legs between consecutive vertices."""
    pts = fold.turning_points()
    return tuple(abs(b - a) for a, b in zip(pts, pts[1:]))


def total_folded_time(fold: TimeFold) -> hp.Scalar:
    """Total folded time: sum of the contour's leg lengths.

    |t_1 - t_s| + |t_2 - t_1| + ... + |t_f - t_N|; reduces to |t_f - t_s|
    for a fold with no insertions.
    """
    total = hp.mpf(0)
    for leg in fold_legs(fold):
        total += leg
    return total


def _term(subset, pattern, sigma, arg, alpha, omega) -> AnalyticTerm:
    growth = abs(4 * arg * omega)
    log_value = sigma * hp.log(alpha) + growth
    value = alpha**sigma * hp.exp(growth)
    return AnalyticTerm(subset, pattern, sigma, arg, value, log_value)


def loschmidt_terms(fold: TimeFold, params: OscillatorParams) -> tuple:
    """Enumerated echo-state terms, (3^N + 1)/2 of them including the
    constant. Deterministic order: size, then subset, then pattern."""
    _warn_if_outside_perturbative(params)
    n_ins = fold.n_insertions
    if n_ins > MAX_LOSCHMIDT_INSERTIONS:
        raise ComplexityBudget(
            f"echo enumeration has (3^N + 1)/2 terms; N = {n_ins} exceeds "
            f"the supported {MAX_LOSCHMIDT_INSERTIONS}"
        )
    alpha = alpha_coupling(params)
    omega = params.omega
    one = hp.mpf(1)
    terms = [AnalyticTerm((), (), 0, hp.mpf(0), one, hp.mpf(0))]
    for n in range(1, n_ins + 1):
        for subset in combinations(range(1, n_ins + 1), n):
            ts = [fold.times[j - 1] for j in subset]
            for pattern in sign_patterns(n):
                arg = ts[0]
                for s, t in zip(pattern, ts[1:]):
                    arg = arg + s * t
                sigma = 2 * n - 1 - kappa(pattern)
                terms.append(_term(subset, pattern, sigma, arg, alpha, omega))
    return tuple(terms)


def rho_L_leading(fold: TimeFold, params: OscillatorParams) -> LeadingSum:
    """Leading-order eigenvalue for the echo state, with its term list.

    Summation runs in enumeration order, so results are bit-reproducible
    for a given backend and precision.
    """
    terms = loschmidt_terms(fold, params)
    total = hp.mpf(0)
    for t in terms:
        total += t.value
    return LeadingSum(total, terms)


def precursor_terms(fold: TimeFold, params: OscillatorParams) -> tuple:
    """Enumerated precursor-state terms, 2^N of them including the one-way
    term. Every insertion term has sigma = n: the alternating arrangement."""
    _warn_if_outside_perturbative(params)
    n_ins = fold.n_insertions
    if n_ins > MAX_PRECURSOR_INSERTIONS:
        raise ComplexityBudget(
            f"precursor enumeration has 2^N terms; N = {n_ins} exceeds "
            f"the supported {MAX_PRECURSOR_INSERTIONS}"
        )
    alpha = alpha_coupling(params)
    omega = params.omega
    half_s, half_f = fold.t_s / 2, fold.t_f / 2
    one_way_arg = half_s - half_f
    terms = [
        AnalyticTerm(
            (), (), 0, one_way_arg,
            hp.exp(abs(4 * one_way_arg * omega)),
            abs(4 * one_way_arg * omega),
        )
    ]
    for n in range(1, n_ins + 1):
        sign_f = 1 if (n + 1) % 2 == 0 else -1
        for subset in combinations(range(1, n_ins + 1), n):
            arg = half_s + sign_f * half_f
            sign = -1
            for j in subset:
                arg = arg + sign * fold.times[j - 1]
                sign = -sign
            pattern = tuple(-1 if i % 2 == 0 else 1 for i in range(n - 1))
            terms.append(_term(subset, pattern, n, arg, alpha, omega))
    return tuple(terms)


def rho_P_leading(fold: TimeFold, params: OscillatorParams) -> LeadingSum:
    """Leading-order eigenvalue for the precursor state, with term list."""
    terms = precursor_terms(fold, params)
    total = hp.mpf(0)
    for t in terms:
        total += t.value
    return LeadingSum(total, terms)


def dominant_term(
    terms: Sequence[AnalyticTerm], params: OscillatorParams
) -> DominantTermResult:
    """Largest term of a leading-order sum at the given coupling.

    Ranks by sigma log(alpha) + |4 arg omega| recomputed from `params`
    (equivalently |4 arg omega| - 4 omega sigma t_star), so the selection is
    meaningful even at a coupling other than the one the list was built at.
    Near-exact ties are flagged and broken by smallest sigma, then
    lexicographic subset order.
    """
    if not terms:
        raise DomainError("dominant_term needs a non-empty term list")
    log_alpha = hp.log(alpha_coupling(params))
    keys = [
        t.sigma * log_alpha + abs(4 * t.exponent_arg * params.omega)
        for t in terms
    ]
    best = max(keys)
    tie_tol = hp.mpf(10) ** (10 - hp.current_digits()) * max(hp.mpf(1), abs(best))
    tied = tuple(t for t, k in zip(terms, keys) if best - k <= tie_tol)
    winner = min(tied, key=lambda t: (t.sigma, t.subset, t.pattern))
    return DominantTermResult(winner, len(tied) > 1, tied)


def switchback_complexity(fold: TimeFold, params: OscillatorParams) -> hp.Scalar:
    """Switchback-reduced complexity growth: omega (t_T - 2 N t_star).

    Valid when every contour leg exceeds the scrambling time (warned
    otherwise); within log 2 of complexity(rho_P_leading) once every leg is
    well past t_star, since the alternating full-insertion term then
    dominates and its half-log equals exactly this expression.
    """
    t_star = scrambling_time(params)
    legs = fold_legs(fold)
    if any(leg <= t_star for leg in legs):
        warnings.warn(
            "a contour leg is not longer than the scrambling time; the "
            "switchback formula is outside its validity regime",
            RegimeWarning,
            stacklevel=2,
        )
    t_total = total_folded_time(fold)
    return params.omega * (t_total - 2 * fold.n_insertions * t_star)
