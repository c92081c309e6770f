#!/usr/bin/env python3
"""Run the factorial recursion at a chosen truncation and show the chains.

Iterates the recursive setup from the complete relation down to its
greatest fixed point (the truncated factorial graph) and from the empty
relation up (which stays empty), printing the size of every iterate.
"""

import argparse

from wiring.recursion import factorial_fixture, fixed_point, is_fixed_point


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--limit", type=int, default=120, help="largest value kept")
    args = parser.parse_args()

    fixture = factorial_fixture(args.limit)
    print(f"domain 0..{args.limit}, setup relation has {len(fixture.setup.relation)} tuples")

    for mode in ("greatest", "least"):
        result = fixed_point(fixture.setup, mode)
        sizes = " -> ".join(str(len(r)) for r in result.trace)
        print(f"\n{mode} fixed point in {result.iterations} iterations: {sizes}")
        print(f"is_fixed_point: {is_fixed_point(fixture.setup, result.relation)}")
        if mode == "greatest":
            print("tuples:")
            for a, b in sorted(result.relation.tuples):
                print(f"  {a}! = {b}")


if __name__ == "__main__":
    main()
