"""Instance layer: group/operad operations, mu, and the axiom checker."""

from __future__ import annotations

import pytest

from actionoperads.core import (
    AxiomCheckConfig,
    DeterministicStream,
    OperadElement,
    SymmetricOperad,
    check_axioms,
    get_operad,
    symmetric_operad,
    trivial_operad,
)
from actionoperads.perm import Perm, identity

SYM = symmetric_operad()
TRIV = trivial_operad()


def sym_el(*images) -> OperadElement:
    return OperadElement("sym", len(images), Perm(tuple(images)))


class TestSymmetricInstance:
    def test_pi_is_identity_map(self):
        g = sym_el(3, 1, 2)
        assert SYM.pi(g).images == (3, 1, 2)

    def test_beta_matches_block_sum(self):
        got = SYM.beta([sym_el(2, 1), sym_el(2, 3, 1)])
        assert got.payload.images == (2, 1, 4, 5, 3)

    def test_beta_singleton(self):
        g = sym_el(2, 1)
        assert SYM.beta([g]) == g

    def test_delta_matches_block_perm(self):
        got = SYM.delta(sym_el(2, 1), (2, 1))
        assert got.payload.images == (2, 3, 1)

    def test_delta_unit_sizes(self):
        g = sym_el(3, 1, 2)
        assert SYM.delta(g, (1, 1, 1)) == g

    def test_mu_unit_laws(self):
        g = sym_el(2, 1)
        assert SYM.mu(SYM.identity(1), [g]) == g
        assert SYM.mu(g, [SYM.identity(1), SYM.identity(1)]) == g

    def test_mu_worked_example(self):
        # delta([2,1],[1,2]) . beta(e1,[2,1]) = [3,1,2] . [1,3,2] = [3,2,1]
        got = SYM.mu(sym_el(2, 1), [SYM.identity(1), sym_el(2, 1)])
        assert got.payload.images == (3, 2, 1)

    def test_mu_collapses_to_delta_on_units(self):
        g = sym_el(2, 1)
        units = [SYM.identity(2), SYM.identity(3)]
        assert SYM.mu(g, units) == SYM.delta(g, (2, 3))

    def test_mu_arity_mismatch(self):
        with pytest.raises(ValueError):
            SYM.mu(sym_el(2, 1), [SYM.identity(1)])

    def test_mixed_instance_rejected(self):
        with pytest.raises(ValueError):
            SYM.mul(sym_el(2, 1), TRIV.identity(2))

    def test_equal_is_exact(self):
        assert SYM.equal(sym_el(2, 1), sym_el(2, 1)).is_equal
        res = SYM.equal(sym_el(2, 1), SYM.identity(2))
        assert res.is_distinct

    def test_generator_word_reconstructs(self):
        for g in SYM.elements(4):
            prod = SYM.identity(4)
            for gen, sign in SYM.generator_word(g):
                prod = SYM.mul(prod, gen if sign == 1 else SYM.inv(gen))
            assert prod == g

    def test_parse_format(self):
        g = SYM.parse("[2,1,3]", 3)
        assert SYM.format(g) == "[2,1,3]"
        with pytest.raises(ValueError):
            SYM.parse("[2,1]", 3)


class TestTrivialInstance:
    def test_everything_is_the_unit(self):
        e = TRIV.identity(3)
        assert TRIV.mul(e, e) == e
        assert TRIV.inv(e) == e
        assert TRIV.pi(e) == identity(3)
        assert TRIV.beta([TRIV.identity(1), TRIV.identity(2)]) == TRIV.identity(3)
        assert TRIV.delta(e, (2, 0, 1)) == TRIV.identity(3)

    def test_equal(self):
        assert TRIV.equal(TRIV.identity(2), TRIV.identity(2)).is_equal


class TestCheckAxioms:
    def test_symmetric_exhaustive_small(self):
        rep = check_axioms(SYM, AxiomCheckConfig(max_total_arity=3))
        assert rep.mode == "exhaustive"
        assert rep.passed(strict=True)

    def test_trivial_exhaustive(self):
        rep = check_axioms(TRIV, AxiomCheckConfig(max_total_arity=4))
        assert rep.passed(strict=True)

    def test_broken_delta_fails_twist_axiom(self):
        class BrokenDelta(SymmetricOperad):
            def delta(self, a, sizes):
                self.check_element(a)
                if a.n != len(sizes):
                    raise ValueError("arity mismatch")
                return self.identity(sum(sizes))

        rep = check_axioms(BrokenDelta(), AxiomCheckConfig(max_total_arity=3))
        assert not rep.passed()
        twist = rep.outcomes["delta_beta_twist"]
        assert twist.failures, "the twist law should expose an identity-shaped delta"
        assert twist.failures[0].inputs  # counterexample is replayable from the report

    def test_broken_beta_fails_naturality(self):
        class BrokenBeta(SymmetricOperad):
            def beta(self, els):
                for e in els:
                    self.check_element(e)
                return self.identity(sum(e.n for e in els))

        rep = check_axioms(BrokenBeta(), AxiomCheckConfig(max_total_arity=3))
        assert rep.outcomes["beta_naturality"].failures

    def test_sampled_mode_deterministic(self):
        cfg = AxiomCheckConfig(samples_per_axiom=10, seed=11)
        braid = get_operad("braid")
        r1 = check_axioms(braid, cfg)
        r2 = check_axioms(braid, cfg)
        assert r1.to_dict() == r2.to_dict()
        assert r1.mode == "sampled"

    def test_report_formats(self):
        rep = check_axioms(TRIV, AxiomCheckConfig(max_total_arity=2))
        text = rep.format_text()
        assert "axiom report" in text and "PASS" in text
        d = rep.to_dict()
        assert set(d["axioms"]) == set(rep.outcomes)


class TestCompositeDiagonal:
    def test_delta_of_composite_reduces_to_product_of_diagonals(self):
        # delta(mu(f; g), widths) equals delta(f, blockwise width sums)
        # times delta(beta(g), widths), exhaustively at small arity
        import itertools

        for n in (1, 2):
            for msizes in itertools.product((1, 2), repeat=n):
                M = sum(msizes)
                for jsizes in itertools.product((1, 2), repeat=M):
                    psums = []
                    idx = 0
                    for m in msizes:
                        psums.append(sum(jsizes[idx : idx + m]))
                        idx += m
                    for f in SYM.elements(n):
                        for gs in itertools.product(*[SYM.elements(m) for m in msizes]):
                            lhs = SYM.mul(
                                SYM.delta(f, tuple(psums)),
                                SYM.delta(SYM.beta(list(gs)), jsizes),
                            )
                            rhs = SYM.delta(SYM.mu(f, list(gs)), jsizes)
                            assert lhs == rhs

    def test_same_reduction_on_word_instances(self):
        import itertools

        cact = get_operad("cactus")
        braid = get_operad("braid")
        for inst, gword in ((cact, "s(1,2)"), (braid, "b1")):
            g = inst.parse(gword, 2)
            f = inst.parse(gword, 2)
            for jsizes in itertools.product((1, 2), repeat=3):
                lhs = inst.mul(
                    inst.delta(f, (sum(jsizes[:2]), jsizes[2])),
                    inst.delta(inst.beta([g, inst.identity(1)]), jsizes),
                )
                rhs = inst.delta(inst.mu(f, [g, inst.identity(1)]), jsizes)
                assert inst.equal(lhs, rhs).is_equal, (inst.name, jsizes)


class TestStream:
    def test_deterministic(self):
        a = DeterministicStream(5)
        b = DeterministicStream(5)
        assert [a.next_int(10) for _ in range(20)] == [b.next_int(10) for _ in range(20)]

    def test_bounds(self):
        s = DeterministicStream(1)
        assert all(0 <= s.next_int(7) < 7 for _ in range(100))


class TestRegistry:
    def test_known_names(self):
        for name in ("sym", "trivial", "braid", "cactus"):
            assert get_operad(name).name == name

    def test_unknown_name(self):
        with pytest.raises(ValueError):
            get_operad("mystery")
