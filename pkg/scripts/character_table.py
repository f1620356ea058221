#!/usr/bin/env python3
"""Tabulate rescaled characters of the square-bracket states against
Eisenstein series: eta * Z(v_r, q) coefficient-by-coefficient versus G_{r+1}.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from padic_voa.kummer import v_state
from padic_voa.qchar import eisenstein_G, normalized_character


@dataclass
class TableConfig:
    weights: tuple[int, ...] = (1, 3, 5, 7, 9)
    qmax: int = 12


def run(config: TableConfig) -> None:
    for r in config.weights:
        lhs = normalized_character(v_state(r), config.qmax)
        rhs = eisenstein_G(r + 1, config.qmax)
        match = "exact match" if lhs == rhs else "MISMATCH"
        print(f"r = {r}:  eta*Z(v_{r})  vs  G_{r + 1}:  {match}")
        print(f"    eta*Z : {[str(c) for c in lhs.coeffs]}")
        print(f"    G_{r + 1:<4}: {[str(c) for c in rhs.coeffs]}")
        print()


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--weights", type=int, nargs="+", default=[1, 3, 5, 7, 9])
    parser.add_argument("--qmax", type=int, default=12)
    args = parser.parse_args()
    run(TableConfig(tuple(args.weights), args.qmax))


if __name__ == "__main__":
    main()
