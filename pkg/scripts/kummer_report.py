#!/usr/bin/env python3
"""Measure the Kummer-congruence rates of the rescaled square-bracket family.

For each odd prime p the family members u_{1+p^a(p-1)} are compared pairwise
in the sup-norm and their rescaled characters are compared against 2*G_2*.
The generic rate is p^-(a+1); at p = 3 every even weight hits the
(p-1) | k branch excluded by the classical Kummer congruences and the
measured rate degrades to p^-(a-1), which this script makes visible.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from padic_voa.kummer import kummer_check, kummer_index, limit_character_check


@dataclass
class ReportConfig:
    primes: tuple[int, ...] = (3, 5, 7)
    depth: int = 2
    qmax: int = 10


def run(config: ReportConfig) -> None:
    for p in config.primes:
        print(f"p = {p}")
        print("  state congruences  u_r - u_s   (bound: exponent <= -(a+1))")
        for a in range(config.depth + 1):
            for b in range(a + 1, config.depth + 1):
                report = kummer_check(p, a, b)
                verdict = "ok" if report.norm_exponent <= -(a + 1) else "MISS"
                print(
                    f"    a={a} b={b}  r={kummer_index(p, a):>4} s={kummer_index(p, b):>4}"
                    f"  exponent={report.norm_exponent:>4}  bound={-(a + 1):>3}  {verdict}"
                )
        print(f"  character distances to 2*G2*  (q-orders <= {config.qmax})")
        for a in range(config.depth + 1):
            distance = limit_character_check(p, a, config.qmax)
            verdict = "ok" if distance <= -(a + 1) else "MISS"
            print(
                f"    a={a}  distance exponent={distance:>4}  bound={-(a + 1):>3}  {verdict}"
            )
        print()


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--primes", type=int, nargs="+", default=[3, 5, 7])
    parser.add_argument("--depth", type=int, default=2)
    parser.add_argument("--qmax", type=int, default=10)
    args = parser.parse_args()
    run(ReportConfig(tuple(args.primes), args.depth, args.qmax))


if __name__ == "__main__":
    main()
