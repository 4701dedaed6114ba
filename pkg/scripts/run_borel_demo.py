#!/usr/bin/env python3
"""Borel construction demo over a small category.

Prints hom-sets for a few object pairs under each finite instance,
verifies the counting formula against direct enumeration, and runs the
contractible-plus-free checks and the pullback comparison square.

Usage: python scripts/run_borel_demo.py
"""

from __future__ import annotations

from actionoperads.borel import BorelObject, contractible_free_check, hom_set
from actionoperads.cactus import cactus_operad
from actionoperads.club import check_pullback
from actionoperads.core import symmetric_operad, trivial_operad
from actionoperads.fincat import discrete_category, z2_category


def main() -> int:
    X = discrete_category(("a", "b"), name="d2")
    Z = z2_category()
    for inst in (trivial_operad(), symmetric_operad(), cactus_operad()):
        print(f"== {inst.name} ==")
        src = BorelObject(inst.name, 2, ("a", "b"))
        tgt = BorelObject(inst.name, 2, ("b", "a"))
        res = hom_set(inst, X, src, tgt)
        print(f"hom([e; a,b], [e; b,a]) over the discrete pair: {len(res.morphisms)}")
        for m in res.morphisms:
            print(f"  {inst.format(m.g)} | {','.join(m.components)}")
        star = BorelObject(inst.name, 2, ("*", "*"))
        res = hom_set(inst, Z, star, star)
        print(f"hom([e; *,*], [e; *,*]) over the order-two endomorphisms: {len(res.morphisms)}")
        rep = contractible_free_check(inst, 2)
        print(f"arity-2 translation piece: contractible={rep.contractible} free={rep.free}")
        pull = check_pullback(inst, 2, X)
        print(pull.format_text())
        print()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
