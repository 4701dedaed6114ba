#!/usr/bin/env python3
"""Survey the axiom suite across all built-in instances.

The symmetric and trivial instances are checked exhaustively (a proof by
enumeration at the configured arity bound); braid and cactus are sampled
deterministically through their bounded equality oracles.

Usage: python scripts/run_axiom_survey.py [--max-arity N] [--samples K]
"""

from __future__ import annotations

import argparse
import time

from actionoperads.core import AxiomCheckConfig, check_axioms, get_operad


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-arity", type=int, default=5)
    ap.add_argument("--samples", type=int, default=24)
    ap.add_argument("--seed", type=int, default=2026)
    args = ap.parse_args()

    failures = 0
    for name in ("trivial", "sym", "cactus", "braid"):
        inst = get_operad(name)
        config = AxiomCheckConfig(
            max_total_arity=args.max_arity if name in ("trivial", "sym") else 3,
            samples_per_axiom=args.samples,
            max_word_length=2,
            max_block_size=2,
            max_result_arity=6,
            seed=args.seed,
        )
        t0 = time.monotonic()
        rep = check_axioms(inst, config)
        elapsed = time.monotonic() - t0
        print(rep.format_text())
        print(f"elapsed: {elapsed:.2f}s")
        print()
        failures += not rep.passed(strict=True)
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
