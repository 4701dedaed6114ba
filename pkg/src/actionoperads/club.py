"""
Clubs over the permutation base, represented operationally.

A club here is a category whose objects are the natural numbers, mapped
to the one-object-per-arity permutation base, together with a
multiplication taking a cell (head endomorphism of n; one leg per input)
to a single morphism.  Only the groupoid, bijective-on-objects clubs are
constructible, which is exactly the shape that corresponds to an
action-operad instance:

- from an instance, the club's hom-group at n is the arity-n group and
  the cell multiplication is operadic composition;
- from such a club, the block sum is the multiplication with an identity
  head, the block diagonal is the multiplication with identity legs, and
  operadic composition is rebuilt as their product.

Reading note: a cell's legs are typed through the underlying permutation
of the *head morphism* (the only reading under which composition
typechecks); the on-objects part of the functor to the base must be the
identity, which ``operad_from_club`` checks alongside the groupoid
condition.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable

from .borel import BorelObject, hom_set
from .core import ActionOperad, OperadElement, symmetric_operad
from .fincat import FinCat
from .perm import Perm, compose


@dataclass(frozen=True)
class Club:
    """Operational club data.  ``mult`` maps (head, legs) to a morphism;
    ``object_map`` is the on-objects part of the functor to the base."""

    name: str
    element_operad: str
    object_map: Callable[[int], int]
    hom_elements: Callable[[int], tuple | None]
    identity: Callable[[int], object]
    compose_hom: Callable[[object, object], object]
    invert: Callable[[object], object]
    pi: Callable[[object], Perm]
    arity: Callable[[object], int]
    mult: Callable[[object, tuple], object]
    equal: Callable[[object, object], object]
    format: Callable[[object], str]


@dataclass(frozen=True)
class ClubCompositeCell:
    """A cell of the composite: a head morphism plus one leg per input."""

    head: object
    legs: tuple


def club_from(inst: ActionOperad) -> Club:
    """The club packaged from an instance's operation table."""
    return Club(
        name=f"club_{inst.name}",
        element_operad=inst.name,
        object_map=lambda n: n,
        hom_elements=inst.elements,
        identity=inst.identity,
        compose_hom=inst.mul,
        invert=inst.inv,
        pi=inst.pi,
        arity=lambda el: el.n,
        mult=lambda head, legs: inst.mu(head, list(legs)),
        equal=inst.equal,
        format=inst.format,
    )


def club_mult(club: Club, cell: ClubCompositeCell):
    """Evaluate the club multiplication on one cell."""
    head_arity = club.arity(cell.head)
    if head_arity != len(cell.legs):
        raise ValueError(
            f"cell arity mismatch: head of arity {head_arity} with {len(cell.legs)} leg(s)"
        )
    return club.mult(cell.head, tuple(cell.legs))


class ClubBackedOperad(ActionOperad):
    """An instance rebuilt from club data: block sum via identity heads,
    block diagonal via identity legs, composition as their product."""

    def __init__(self, club: Club):
        self.club = club
        self.name = club.element_operad

    def identity(self, n):
        return self.club.identity(n)

    def mul(self, a, b):
        return self.club.compose_hom(a, b)

    def inv(self, a):
        return self.club.invert(a)

    def pi(self, a):
        return self.club.pi(a)

    def beta(self, els):
        return self.club.mult(self.club.identity(len(els)), tuple(els))

    def delta(self, a, sizes):
        if self.club.arity(a) != len(sizes):
            raise ValueError(
                f"arity mismatch: delta of arity {self.club.arity(a)} with {len(sizes)} size(s)"
            )
        return self.club.mult(a, tuple(self.club.identity(k) for k in sizes))

    def equal(self, a, b, max_len=None, budget=None):
        return self.club.equal(a, b)

    def elements(self, n):
        return self.club.hom_elements(n)

    def format(self, a):
        return self.club.format(a)

    def check_element(self, a):
        if isinstance(a, OperadElement) and a.operad != self.name:
            raise ValueError(f"mixed instances: element of {a.operad!r} given to {self.name!r}")


def operad_from_club(club: Club, max_arity: int = 3) -> ClubBackedOperad:
    """Rebuild an instance from a club, checking the two shape hypotheses
    on the tested range: the functor to the base is bijective on objects
    (here: the identity on naturals) and every hom is a group.
    """
    for n in range(max_arity + 1):
        if club.object_map(n) != n:
            raise ValueError(
                f"club {club.name!r} is not bijective on objects: {n} maps to {club.object_map(n)}"
            )
    for n in range(max_arity + 1):
        els = club.hom_elements(n)
        if els is None:
            continue
        e = club.identity(n)
        for g in els:
            gi = club.invert(g)
            if not club.equal(club.compose_hom(g, gi), e).is_equal:
                raise ValueError(
                    f"club {club.name!r} is not a groupoid: {club.format(g)} has no right inverse"
                )
            if not club.equal(club.compose_hom(gi, g), e).is_equal:
                raise ValueError(
                    f"club {club.name!r} is not a groupoid: {club.format(g)} has no left inverse"
                )
        for g in els:
            for h in els:
                if club.pi(club.compose_hom(g, h)) != compose(club.pi(g), club.pi(h)):
                    raise ValueError(
                        f"club {club.name!r} does not lie over the base: pi is not functorial"
                    )
    return ClubBackedOperad(club)


@dataclass
class RoundtripReport:
    operad: str
    beta_checked: int = 0
    delta_checked: int = 0
    mu_checked: int = 0
    mismatches: int = 0

    @property
    def passed(self) -> bool:
        return self.mismatches == 0


def roundtrip_check(inst: ActionOperad, max_total: int = 4) -> RoundtripReport:
    """Verify that rebuilding the instance through its club returns the
    same block sum, block diagonal and composition values on every tuple
    within the arity bound (requires finite enumeration)."""
    rebuilt = operad_from_club(club_from(inst), max_arity=max_total)
    report = RoundtripReport(inst.name)
    vectors: list[tuple[int, ...]] = [()]
    for total in range(1, max_total + 1):
        for parts in range(1, total + 1):
            vectors.extend(_compositions(total, parts))
    for v in vectors:
        pools = [inst.elements(k) for k in v]
        if any(p is None for p in pools):
            continue
        for hs in product(*pools):
            report.beta_checked += 1
            if not inst.equal(inst.beta(list(hs)), rebuilt.beta(list(hs))).is_equal:
                report.mismatches += 1
        n = len(v)
        for g in inst.elements(n) or ():
            report.delta_checked += 1
            if not inst.equal(inst.delta(g, v), rebuilt.delta(g, v)).is_equal:
                report.mismatches += 1
            for hs in product(*pools):
                report.mu_checked += 1
                if not inst.equal(inst.mu(g, list(hs)), rebuilt.mu(g, list(hs))).is_equal:
                    report.mismatches += 1
    return report


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@dataclass
class PullbackReport:
    operad: str
    arity: int
    category: str
    objects_upstairs: int
    objects_downstairs: int
    morphisms_upstairs: int
    compatible_pairs: int
    unmatched_pairs: int
    collisions: int

    @property
    def passed(self) -> bool:
        return (
            self.objects_upstairs == self.objects_downstairs
            and self.morphisms_upstairs == self.compatible_pairs
            and self.unmatched_pairs == 0
            and self.collisions == 0
        )

    def format_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{status} pullback: operad={self.operad} arity={self.arity} category={self.category} "
            f"objects={self.objects_upstairs}/{self.objects_downstairs} "
            f"morphisms={self.morphisms_upstairs} pairs={self.compatible_pairs} "
            f"unmatched={self.unmatched_pairs} collisions={self.collisions}"
        )


def check_pullback(inst: ActionOperad, n: int, X: FinCat) -> PullbackReport:
    """Verify that the comparison square for the Borel construction is a
    pullback at arity ``n`` over ``X``: every pair of a group element and
    a base-construction morphism with matching underlying permutation
    lifts uniquely."""
    els = inst.elements(n)
    if els is None:
        raise ValueError(f"instance {inst.name!r} is not finite at arity {n}")
    sym = symmetric_operad()

    tuples = list(product(X.objects, repeat=n))
    up_objects = [BorelObject(inst.name, n, t) for t in tuples]
    down_objects = [BorelObject(sym.name, n, t) for t in tuples]

    lifted = {}
    collisions = 0
    morphisms_upstairs = 0
    for src in up_objects:
        for tgt in up_objects:
            for m in hom_set(inst, X, src, tgt).morphisms:
                morphisms_upstairs += 1
                image = (
                    m.g.key(),
                    (src.objects, tgt.objects, inst.pi(m.g).images, m.components),
                )
                if image in lifted:
                    collisions += 1
                lifted[image] = m

    compatible = 0
    unmatched = 0
    for g in els:
        pg = inst.pi(g)
        for src in down_objects:
            for tgt in down_objects:
                for m in hom_set(sym, X, src, tgt).morphisms:
                    if sym.pi(m.g) != pg:
                        continue
                    compatible += 1
                    key = (g.key(), (src.objects, tgt.objects, pg.images, m.components))
                    if key not in lifted:
                        unmatched += 1
    return PullbackReport(
        inst.name,
        n,
        X.name,
        len(up_objects),
        len(down_objects),
        morphisms_upstairs,
        compatible,
        unmatched,
        collisions,
    )
