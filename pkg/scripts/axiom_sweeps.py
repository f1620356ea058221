#!/usr/bin/env python3
"""Run the axiom defect sweeps (Jacobi, commutator, locality, isometry) at
configurable grades and index windows and print a one-line summary per suite.
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, replace
from math import inf

from padic_voa.cli import (
    SweepConfig,
    run_commutator_sweep,
    run_isometry_sweep,
    run_jacobi_sweep,
    run_locality_sweep,
)


@dataclass
class SuitePlan:
    jacobi: SweepConfig
    commutator: SweepConfig
    locality: SweepConfig
    isometry: SweepConfig
    isometry_count: int = 50


DEFAULT_PLAN = SuitePlan(
    jacobi=SweepConfig(grade=3, window=2),
    commutator=SweepConfig(grade=4, window=3),
    locality=SweepConfig(grade=2, window=6),
    isometry=SweepConfig(grade=3, window=5, prime=5),
)


def summarize(name: str, checks: int, violations: int, elapsed: float) -> None:
    verdict = "all zero" if violations == 0 else f"{violations} VIOLATIONS"
    print(f"{name:<12} {checks:>8} checks  {elapsed:7.1f}s  {verdict}")


def run(plan: SuitePlan) -> None:
    start = time.time()
    checks = violations = 0
    for _, report in run_jacobi_sweep(plan.jacobi):
        checks += 1
        violations += 0 if report.is_zero else 1
    summarize("jacobi", checks, violations, time.time() - start)

    start = time.time()
    checks = violations = 0
    for _, report in run_commutator_sweep(plan.commutator):
        checks += 1
        violations += 0 if report.is_zero else 1
    summarize("commutator", checks, violations, time.time() - start)

    start = time.time()
    checks = violations = 0
    for (u, v, _), threshold, profile in run_locality_sweep(plan.locality):
        for t, exponent in profile:
            checks += 1
            if t >= threshold and exponent != -inf:
                violations += 1
    summarize("locality", checks, violations, time.time() - start)

    start = time.time()
    checks = violations = 0
    for _, lhs, rhs in run_isometry_sweep(plan.isometry, count=plan.isometry_count):
        checks += 1
        violations += 0 if lhs == rhs else 1
    summarize("isometry", checks, violations, time.time() - start)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--jacobi-grade", type=int, default=None)
    parser.add_argument("--locality-grade", type=int, default=None)
    parser.add_argument("--isometry-prime", type=int, default=None)
    args = parser.parse_args()
    plan = DEFAULT_PLAN
    if args.jacobi_grade is not None:
        plan = replace(plan, jacobi=replace(plan.jacobi, grade=args.jacobi_grade))
    if args.locality_grade is not None:
        plan = replace(plan, locality=replace(plan.locality, grade=args.locality_grade))
    if args.isometry_prime is not None:
        plan = replace(plan, isometry=replace(plan.isometry, prime=args.isometry_prime))
    run(plan)


if __name__ == "__main__":
    main()
