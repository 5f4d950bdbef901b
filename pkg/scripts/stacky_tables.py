#!/usr/bin/env python3
"""Reproduce the stacky-curve derived-equivalence tables.

Prints the decision for the documented families: irreducible rings with
k = 1 versus k = 2, and the two-node merge R(r,r;1,1) versus R(2r;1).
"""

import argparse
import math

from gentle.stacky import StackyCurveSpec, decide_stacky, glued_invariants, stacky_arf


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-r", type=int, default=13)
    args = parser.parse_args()

    print("irreducible rings R(r;1) vs R(r;2), r odd, not divisible by 3:")
    for r in range(5, args.max_r + 1, 2):
        if r % 3 == 0:
            continue
        a = StackyCurveSpec("ring", (r,), (1,))
        b = StackyCurveSpec("ring", (r,), (2,))
        report = decide_stacky(a, b)
        print(f"  r={r:3d}  genus={glued_invariants(a).genus:2d}  "
              f"arf={stacky_arf(a)}/{stacky_arf(b)}  -> {report.verdict}")

    print("two-node merges R(r,r;1,1) vs R(2r;1), r odd:")
    for r in range(3, args.max_r + 1, 2):
        a = StackyCurveSpec("ring", (r, r), (1, 1))
        b = StackyCurveSpec("ring", (2 * r,), (1,))
        report = decide_stacky(a, b)
        marker = "r = 1 mod 4" if r % 4 == 1 else "r = 3 mod 4"
        print(f"  r={r:3d}  ({marker})  -> {report.verdict}")

    print("quotient crosses C(0,r,0;k) grouped by gcd(k+1,r), r <= 12:")
    for r in range(3, 13):
        units = [k for k in range(1, r) if math.gcd(k, r) == 1]
        groups: dict[int, list[int]] = {}
        for k in units:
            groups.setdefault(math.gcd(k + 1, r), []).append(k)
        for value, ks in sorted(groups.items()):
            if len(ks) < 2:
                continue
            report = decide_stacky(
                StackyCurveSpec("chain", (0, r, 0), (ks[0],)),
                StackyCurveSpec("chain", (0, r, 0), (ks[1],)),
            )
            print(f"  r={r:3d} gcd={value}: k in {ks} -> {report.verdict}")


if __name__ == "__main__":
    main()
