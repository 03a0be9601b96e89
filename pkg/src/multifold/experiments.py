"""Scenario runner: exact vs leading-order curves as reproducible CSV.

A `Scenario` fixes the state kind, oscillator constants, fold template, and
sweep grid; `run_scenario` evaluates one row per grid point:

    t, log_rho_exact, log_rho_leading, rel_error

with rel_error = (log rho_leading - log rho_exact) / log rho_leading, forced
to 0 when |log rho_leading| < 1e-6 (both quantities vanish together at
unperturbed points). Every exact value is certified by recomputing with 15
extra digits; disagreement beyond 6 significant digits raises
`PrecisionExhausted` instead of emitting a doubtful row.

Fold templates are per-insertion linear maps a*t + b of the sweep variable,
which covers every predefined figure scenario and the CLI grammar. Rows are
evaluated in ascending t and the CSV bytes are fully determined by the
scenario, grid, precision, and backend (all recorded in the comment header).
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from typing import NamedTuple

from . import hp
from .analytic import rho_L_leading, rho_P_leading
from .errors import DegenerateSpectrum, DomainError, PrecisionExhausted, UnknownFigure
from .gaussian import (
    OscillatorParams,
    harmonic_reference_covariance,
    reference_covariance,
    relative_covariance,
    rho_exact,
)
from .states import (
    TimeFold,
    harmonic_precursor_covariance,
    harmonic_precursor_rho,
    loschmidt_covariance,
    precursor_covariance,
)
from .version import __version__

KINDS = ("loschmidt", "precursor", "harmonic-control")

CSV_HEADER = "t,log_rho_exact,log_rho_leading,rel_error"
REL_ERROR_GUARD = "1e-6"
CERTIFY_EXTRA_DIGITS = 15
CERTIFY_REL_TOL = "1e-6"


class TimeExpr(NamedTuple):
    """Linear map of the sweep variable: coeff * t + offset."""

    coeff: hp.Scalar
    offset: hp.Scalar

    def at(self, t: hp.Scalar) -> hp.Scalar:
        return self.coeff * t + self.offset

    def label(self) -> str:
        c, b = hp.to_float(self.coeff), hp.to_float(self.offset)
        if c == 0:
            return f"{b:g}"
        core = "t" if c == 1 else ("-t" if c == -1 else f"{c:g}*t")
        if b == 0:
            return core
        return f"{core}{b:+g}"


def time_expr(coeff="0", offset="0") -> TimeExpr:
    return TimeExpr(hp.mpf(coeff), hp.mpf(offset))


@dataclass(frozen=True)
class Grid:
    """Sweep grid in omega*t units: start, stop, positive step."""

    start: hp.Scalar
    stop: hp.Scalar
    step: hp.Scalar

    def __init__(self, start="0.05", stop="20", step="0.05"):
        object.__setattr__(self, "start", hp.mpf(start))
        object.__setattr__(self, "stop", hp.mpf(stop))
        object.__setattr__(self, "step", hp.mpf(step))
        if not self.step > 0:
            raise DomainError("grid step must be positive")
        if self.start > self.stop:
            raise DomainError("grid start must not exceed stop")

    def points(self) -> tuple:
        eps = self.step * hp.mpf("1e-9")
        n = int(hp.to_float((self.stop - self.start + eps) / self.step)) + 1
        return tuple(self.start + i * self.step for i in range(n))

    def label(self) -> str:
        return ":".join(hp.format_sci(v, 12) for v in (self.start, self.stop, self.step))


@dataclass(frozen=True)
class Scenario:
    """One sweep: state kind, params, fold template, grid, precision."""

    kind: str
    params: OscillatorParams
    times: tuple           # TimeExpr per insertion (harmonic: single t1 expr)
    t_s: TimeExpr
    t_f: TimeExpr
    grid: Grid
    digits: int = 40
    label: str = ""

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(f"unknown scenario kind {self.kind!r}")

    def fold_at(self, t: hp.Scalar) -> TimeFold:
        return TimeFold(
            times=tuple(e.at(t) for e in self.times),
            t_s=self.t_s.at(t),
            t_f=self.t_f.at(t),
        )

    def metadata(self) -> tuple:
        p = self.params
        return (
            ("toolkit", f"multifold {__version__}"),
            ("scenario", self.label or self.kind),
            ("kind", self.kind),
            ("backend", hp.backend_name()),
            ("precision_digits", str(self.digits)),
            ("mass", hp.format_sci(p.m, 12)),
            ("omega", hp.format_sci(p.omega, 12)),
            ("delta_omega", hp.format_sci(p.delta_omega, 12)),
            ("gate_scale", hp.format_sci(p.g, 12)),
            ("t_s", self.t_s.label()),
            ("t_f", self.t_f.label()),
            ("times", ",".join(e.label() for e in self.times)),
            ("grid", self.grid.label()),
        )


class Row(NamedTuple):
    t: hp.Scalar
    log_rho_exact: hp.Scalar
    log_rho_leading: hp.Scalar
    rel_error: hp.Scalar


def _log_rho_exact(scenario: Scenario, t: hp.Scalar) -> hp.Scalar:
    params = scenario.params
    if scenario.kind == "loschmidt":
        fold = scenario.fold_at(t)
        G = loschmidt_covariance(fold, params)
        G_ref = reference_covariance(params)
    elif scenario.kind == "precursor":
        fold = scenario.fold_at(t)
        G = precursor_covariance(fold, params)
        G_ref = reference_covariance(params)
    else:
        t1 = scenario.times[0].at(t)
        G = harmonic_precursor_covariance(t1, params)
        G_ref = harmonic_reference_covariance(params)
    return hp.log(rho_exact(relative_covariance(G, G_ref)))


def _log_rho_leading(scenario: Scenario, t: hp.Scalar) -> hp.Scalar:
    params = scenario.params
    if scenario.kind == "loschmidt":
        return hp.log(rho_L_leading(scenario.fold_at(t), params).value)
    if scenario.kind == "precursor":
        return hp.log(rho_P_leading(scenario.fold_at(t), params).value)
    t1 = scenario.times[0].at(t)
    return hp.log(harmonic_precursor_rho(t1, params))


def run_scenario(scenario: Scenario) -> tuple:
    """Evaluate the scenario on its grid, ascending t, one `Row` per point.

    Exact values are recomputed at `digits + 15` and must agree to six
    significant figures, otherwise `PrecisionExhausted` is raised naming the
    grid point. All outputs are finite by construction of the pipelines.
    """
    rows = []
    with hp.workdps(scenario.digits):
        points = scenario.grid.points()
    for t in points:
        try:
            with hp.workdps(scenario.digits + CERTIFY_EXTRA_DIGITS):
                log_exact_hi = _log_rho_exact(scenario, t)
            with hp.workdps(scenario.digits):
                log_exact = _log_rho_exact(scenario, t)
                log_lead = _log_rho_leading(scenario, t)
        except (DomainError, DegenerateSpectrum) as exc:
            # scenario inputs are valid by construction, so a mid-pipeline
            # domain failure means rounding destroyed the state
            raise PrecisionExhausted(
                f"pipeline collapsed at t = {hp.nstr(t, 6)} at "
                f"{scenario.digits}-digit precision ({exc}); raise --precision"
            ) from exc
        with hp.workdps(scenario.digits):
            diff = abs(log_exact - log_exact_hi)
            if diff > hp.mpf(CERTIFY_REL_TOL) * max(hp.mpf(1), abs(log_exact_hi)):
                raise PrecisionExhausted(
                    f"log rho at t = {hp.nstr(t, 6)} not certified to 6 digits "
                    f"at {scenario.digits}-digit precision "
                    f"(diff {hp.nstr(diff, 3)}); raise --precision"
                )
            if abs(log_lead) < hp.mpf(REL_ERROR_GUARD):
                rel = hp.mpf(0)
            else:
                rel = (log_lead - log_exact) / log_lead
            for v in (log_exact, log_lead, rel):
                if not hp.is_finite(v):
                    raise PrecisionExhausted(
                        f"non-finite value at t = {hp.nstr(t, 6)}"
                    )
            rows.append(Row(t, log_exact, log_lead, rel))
    return tuple(rows)


def _fig_label(fid: int, desc: str) -> str:
    return f"figure-{fid} ({desc})"


def figure_scenario(
    fid: int,
    delta_ratio: str = "1e-3",
    omega: str = "1",
    mass: str = "1",
    gate_scale: str = "1",
    grid: Grid | None = None,
    digits: int = 40,
) -> Scenario:
    """Predefined benchmark sweep, ids 3, 4, 5, 7, 8, 9.

    Each id fixes the fold constants; the swept abscissa is this toolkit's
    declared choice, recorded in the scenario label and CSV metadata:

    - 3: echo N=1, sweep t1
    - 4: precursor N=1, t_s = t_f = 20/omega, sweep t1
    - 5: echo N=2, sweep t1 with t2 = t1/2
    - 7: precursor N=2, t_s = -t_f = 20/omega, sweep t1 with t2 = t1/2
    - 8: echo N=4, t1 = t3 = 20/omega, sweep t2 = t4
    - 9: precursor N=4, t1 = t3 = 20/omega, t_s = t_f = -20/omega, sweep t2 = t4
    """
    params = OscillatorParams.from_ratio(
        delta_ratio=delta_ratio, omega=omega, m=mass, g=gate_scale
    )
    grid = grid or Grid()
    zero = time_expr()
    t = time_expr("1")
    half = time_expr("0.5")
    w = params.omega
    plus20 = TimeExpr(hp.mpf(0), hp.mpf(20) / w)
    minus20 = TimeExpr(hp.mpf(0), hp.mpf(-20) / w)
    common = dict(params=params, grid=grid, digits=digits)
    if fid == 3:
        return Scenario(
            kind="loschmidt", times=(t,), t_s=zero, t_f=zero,
            label=_fig_label(3, "echo N=1, sweep t1"), **common,
        )
    if fid == 4:
        return Scenario(
            kind="precursor", times=(t,), t_s=plus20, t_f=plus20,
            label=_fig_label(4, "precursor N=1, ts=tf=20/w, sweep t1"), **common,
        )
    if fid == 5:
        return Scenario(
            kind="loschmidt", times=(t, half), t_s=zero, t_f=zero,
            label=_fig_label(5, "echo N=2, sweep t1 with t2=t1/2"), **common,
        )
    if fid == 7:
        return Scenario(
            kind="precursor", times=(t, half), t_s=plus20, t_f=minus20,
            label=_fig_label(7, "precursor N=2, ts=-tf=20/w, sweep t1 with t2=t1/2"),
            **common,
        )
    if fid == 8:
        return Scenario(
            kind="loschmidt", times=(plus20, t, plus20, t), t_s=zero, t_f=zero,
            label=_fig_label(8, "echo N=4, t1=t3=20/w, sweep t2=t4"), **common,
        )
    if fid == 9:
        return Scenario(
            kind="precursor", times=(plus20, t, plus20, t), t_s=minus20, t_f=minus20,
            label=_fig_label(9, "precursor N=4, t1=t3=20/w, ts=tf=-20/w, sweep t2=t4"),
            **common,
        )
    raise UnknownFigure(f"no predefined scenario for figure {fid}")


def figure(fid: int, **kwargs) -> tuple:
    """Instantiate the figure scenario and run it. Returns (scenario, rows)."""
    scenario = figure_scenario(fid, **kwargs)
    return scenario, run_scenario(scenario)


def write_csv(f, scenario: Scenario, rows) -> None:
    """Write the comment header, column header, and rows with LF endings."""
    for key, value in scenario.metadata():
        f.write(f"# {key} = {value}\n")
    f.write(CSV_HEADER + "\n")
    for row in rows:
        f.write(
            ",".join(
                hp.format_sci(v, 12)
                for v in (row.t, row.log_rho_exact, row.log_rho_leading, row.rel_error)
            )
            + "\n"
        )


def csv_text(scenario: Scenario, rows) -> str:
    buf = io.StringIO()
    write_csv(buf, scenario, rows)
    return buf.getvalue()
