"""Braid family: underlying permutations, block crossings, cabling delta,
the exponent-sum invariant, and the sampled axiom suite."""

from __future__ import annotations

import itertools

import pytest

from actionoperads.braid import (
    block_cross,
    braid_operad,
    braid_relations,
    embedded_block_transposition,
    exponent_sum,
)
from actionoperads.core import AxiomCheckConfig, check_axioms
from actionoperads.perm import Perm, block_perm, identity

B = braid_operad()


class TestPi:
    def test_transposition_squared(self):
        assert B.pi(B.parse("b1 b1", 2)) == identity(2)

    def test_empty_word(self):
        assert B.pi(B.identity(4)) == identity(4)

    def test_right_first_convention(self):
        assert B.pi(B.parse("b1 b2", 3)).images == (2, 3, 1)

    def test_inverse_letters(self):
        w = B.parse("b1 B1", 2)
        assert w.payload.letters == ()


class TestBlockCross:
    def test_base_cases(self):
        assert B.format(block_cross(1, 1, 1)) == "b1"
        assert B.format(block_cross(1, 0, 3)) == "e"
        assert B.format(block_cross(1, 3, 0)) == "e"

    def test_two_over_one(self):
        got = block_cross(1, 2, 1)
        assert B.pi(got) == block_perm(Perm((2, 1)), [2, 1])
        assert exponent_sum(got) == 2

    def test_pi_matches_embedded_block_transposition(self):
        for a in range(0, 4):
            for b in range(0, 4):
                if a + b > 5:
                    continue
                for p in (1, 2):
                    ambient = p + a + b - 1 if a + b else p
                    ambient = max(ambient, 1)
                    got = B.pi(block_cross(p, a, b, ambient))
                    want = embedded_block_transposition(p, a, b, ambient)
                    assert got == want, (p, a, b)

    def test_letter_count(self):
        # the crossing emits one letter per strand pair between the blocks
        for a, b in itertools.product(range(4), repeat=2):
            assert len(block_cross(1, a, b).payload.letters) == a * b

    def test_exponent_sum_examples(self):
        assert exponent_sum(B.parse("b1 B1", 2)) == 0
        assert exponent_sum(B.parse("b1 b2 b1", 3)) == 3
        assert exponent_sum(block_cross(1, 2, 2)) == 4


class TestDelta:
    def test_unit_sizes(self):
        assert B.format(B.delta(B.parse("b1", 2), (1, 1))) == "b1"

    def test_cabling_examples(self):
        assert B.format(B.delta(B.parse("b1", 2), (2, 1))) == B.format(block_cross(1, 2, 1))
        got = B.delta(B.parse("b2", 3), (1, 1, 2))
        assert got == block_cross(2, 1, 2, ambient=4)

    def test_pi_compatibility(self):
        for n in (2, 3):
            for sizes in itertools.product((1, 2), repeat=n):
                for gname, g in B.generators(n):
                    got = B.pi(B.delta(g, sizes))
                    want = block_perm(B.pi(g), sizes)
                    assert got == want, (gname, sizes)

    def test_braid_relation_preserved_by_delta(self):
        for sizes in itertools.product((1, 2), repeat=3):
            lhs = B.delta(B.parse("b1 b2 b1", 3), sizes)
            rhs = B.delta(B.parse("b2 b1 b2", 3), sizes)
            res = B.equal(lhs, rhs)
            assert res.is_equal, (sizes, res.verdict)

    def test_delta_of_inverse_letter(self):
        # delta(w^-1) is the inverse of delta(w) at twisted sizes
        w = B.parse("b1", 2)
        for sizes in itertools.product((1, 2, 3), repeat=2):
            lhs = B.delta(B.inv(w), sizes)
            twisted = tuple(sizes[B.pi(w).images[i] - 1] for i in range(2))
            rhs = B.inv(B.delta(w, twisted))
            assert lhs == rhs


class TestKnownIdentities:
    def test_full_twist_is_central_at_three_strands(self):
        tw = B.parse("b1 b2 b1 b2 b1 b2", 3)
        for gen in ("b1", "b2"):
            g = B.parse(gen, 3)
            res = B.equal(B.mul(tw, g), B.mul(g, tw))
            assert res.is_equal, gen

    def test_half_twist_conjugates_generators(self):
        half = B.parse("b1 b2 b1", 3)
        lhs = B.mul(B.mul(half, B.parse("b1", 3)), B.inv(half))
        assert B.equal(lhs, B.parse("b2", 3)).is_equal


class TestInstance:
    def test_relation_invariants_are_sound(self):
        from actionoperads.rewrite import validate_invariants

        for n in (2, 3, 4):
            sys = braid_relations(n)
            contexts = [sys.word(((g, 1),)) for g in sys.generators]
            contexts += [sys.word(((g, -1),)) for g in sys.generators]
            assert validate_invariants(sys, contexts) == []

    def test_sampled_axioms_pass_strict(self):
        cfg = AxiomCheckConfig(
            max_total_arity=3,
            samples_per_axiom=12,
            max_word_length=2,
            max_block_size=2,
            max_result_arity=6,
            seed=9,
        )
        rep = check_axioms(B, cfg)
        assert rep.passed(strict=True), rep.format_text()

    def test_parse_rejects_bad_letters(self):
        with pytest.raises(ValueError):
            B.parse("b3", 3)
        with pytest.raises(ValueError):
            B.parse("c1", 3)

    def test_elements_only_at_tiny_arity(self):
        assert len(B.elements(1)) == 1
        assert B.elements(2) is None
