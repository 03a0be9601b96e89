"""Timing comparison of the two numeric backends on the hot kernels.

Runs identical workloads on the compiled (gmpy2/MPFR) and pure-Python
(mpmath) scalar backends and prints a side-by-side table:

    python3 benchmarks/bench_backends.py [--points 200] [--digits 40]

Workloads: the deepest propagator chain among the predefined sweeps (four
kick insertions with outer offsets), eigenvalue extraction, and the N = 4
leading-order enumeration.
"""

from __future__ import annotations

import argparse
import time

from multifold import (
    OscillatorParams,
    TimeFold,
    hp,
    precursor_covariance,
    reference_covariance,
    relative_covariance,
    rho_exact,
    rho_P_leading,
)


def chain_workload(points: int) -> None:
    params = OscillatorParams.from_ratio("1e-3")
    g_ref = reference_covariance(params)
    for i in range(points):
        t = hp.mpf(5) + hp.mpf(15) * i / max(points - 1, 1)
        fold = TimeFold(times=(20, t, 20, t), t_s=-20, t_f=-20)
        G = precursor_covariance(fold, params)
        hp.log(rho_exact(relative_covariance(G, g_ref)))


def enumeration_workload(points: int) -> None:
    params = OscillatorParams.from_ratio("1e-3")
    for i in range(points):
        t = hp.mpf(5) + hp.mpf(15) * i / max(points - 1, 1)
        fold = TimeFold(times=(20, t, 20, t), t_s=-20, t_f=-20)
        hp.log(rho_P_leading(fold, params).value)


def run_backend(name: str, points: int, digits: int) -> dict:
    hp.use_backend(name)
    timings = {}
    with hp.workdps(digits):
        for label, fn in (("chain+rho", chain_workload),
                          ("enumeration", enumeration_workload)):
            fn(3)  # warm up
            start = time.perf_counter()
            fn(points)
            timings[label] = time.perf_counter() - start
    return timings


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--points", type=int, default=200)
    ap.add_argument("--digits", type=int, default=40)
    args = ap.parse_args()

    results = {}
    for name in ("mpmath", "gmpy2"):
        try:
            results[name] = run_backend(name, args.points, args.digits)
        except ValueError:
            print(f"{name}: not available, skipped")
    hp.use_backend("gmpy2" if "gmpy2" in results else "mpmath")

    print(f"\n{args.points} grid points at {args.digits} digits")
    print(f"{'workload':<14}" + "".join(f"{n:>12}" for n in results))
    for label in ("chain+rho", "enumeration"):
        row = f"{label:<14}"
        for name in results:
            row += f"{results[name][label]:>11.3f}s"
        print(row)
    if len(results) == 2:
        for label in ("chain+rho", "enumeration"):
            ratio = results["mpmath"][label] / results["gmpy2"][label]
            print(f"{label}: compiled backend {ratio:.1f}x faster")


if __name__ == "__main__":
    main()
