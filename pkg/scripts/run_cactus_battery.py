#!/usr/bin/env python3
"""Cactus verification battery.

Runs the block-diagonal well-definedness checks (every defining relation
survives delta, over all width vectors with entries up to a bound) and
the coboundary laws (commutor symmetry, the square, delta coherence),
reporting timing and any non-Equal verdicts.

Usage: python scripts/run_cactus_battery.py [--max-n 4] [--max-width 3] [--max-total 6]
"""

from __future__ import annotations

import argparse
import itertools
import time

from actionoperads.cactus import (
    cactus_operad,
    cactus_relations,
    coboundary_square,
    commutor,
    commutor_symmetry,
    delta_respects_relation,
)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--max-width", type=int, default=3)
    ap.add_argument("--max-total", type=int, default=6)
    args = ap.parse_args()

    inst = cactus_operad()
    bad = 0

    t0 = time.monotonic()
    checked = 0
    widths = tuple(range(1, args.max_width + 1))
    for n in range(2, args.max_n + 1):
        sys = cactus_relations(n)
        for sizes in itertools.product(widths, repeat=n):
            for ridx in range(len(sys.relations)):
                res = delta_respects_relation(n, sizes, ridx)
                checked += 1
                if not res.is_equal:
                    bad += 1
                    print(f"  !! n={n} sizes={sizes} relation={ridx}: {res.verdict}")
    print(f"delta well-definedness: {checked} checks in {time.monotonic() - t0:.1f}s")

    t0 = time.monotonic()
    checked = 0
    for m in range(1, args.max_total):
        for n in range(1, args.max_total):
            if m + n > args.max_total:
                continue
            checked += 2
            if not commutor_symmetry(m, n).is_equal:
                bad += 1
                print(f"  !! symmetry m={m} n={n}")
            d = inst.delta(inst.parse("s(1,2)", 2), (m, n))
            if not inst.equal(commutor(m, n), d).is_equal:
                bad += 1
                print(f"  !! delta coherence m={m} n={n}")
    for m, n, p in itertools.product(range(1, args.max_total), repeat=3):
        if m + n + p > args.max_total:
            continue
        checked += 1
        if not coboundary_square(m, n, p).is_equal:
            bad += 1
            print(f"  !! square m={m} n={n} p={p}")
    print(f"coboundary laws: {checked} checks in {time.monotonic() - t0:.1f}s")
    print("all clear" if bad == 0 else f"{bad} problem(s)")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
