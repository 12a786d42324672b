import random

import numpy as np
import pytest

from qweyl.braidrep import (
    BraidWord,
    RepBundle,
    eval_braid_word,
    relation_report,
    verify_affine_relation,
    verify_zbn_relations,
    zbn_generators,
    zbn_generators_numeric,
)
from qweyl.qring import ONE, RingElem
from qweyl.repn import QMatrix, kron
from qweyl.rmat import braid_matrix
from qweyl.twist import TwistConfig, braid_form_sides, four_braid_sides, twist_t

B0 = RingElem.from_rational(0)
B1 = ONE
CFG1 = TwistConfig(beta1=B1)


class TestBundle:
    def test_trivial_rep(self):
        bundle = zbn_generators(1, 3, CFG1)
        for g in bundle.generators:
            assert g == QMatrix.identity(1)

    def test_two_strand_layout(self):
        bundle = zbn_generators(2, 2, CFG1)
        assert bundle.generators[0] == kron(twist_t(2, CFG1), QMatrix.identity(2))
        assert bundle.generators[1] == braid_matrix(2)

    def test_three_strand_sizes(self):
        bundle = zbn_generators(2, 3, CFG1)
        assert len(bundle.generators) == 3
        for g in bundle.generators:
            assert g.rows == g.cols == 8

    def test_guardrail(self, monkeypatch):
        monkeypatch.setenv("QW_MAX_EXACT_DIM", "8")
        zbn_generators(2, 3, CFG1)
        with pytest.raises(ValueError):
            zbn_generators(2, 4, CFG1)
        monkeypatch.setenv("QW_MAX_EXACT_DIM", "16")
        zbn_generators(2, 4, CFG1)

    def test_input_validation(self):
        with pytest.raises(ValueError):
            zbn_generators(0, 2, CFG1)
        with pytest.raises(ValueError):
            zbn_generators(2, 0, CFG1)


class TestRelations:
    def test_three_strands(self):
        for d in (2, 3):
            for b1 in (B0, B1):
                rep = verify_zbn_relations(d, 3, TwistConfig(beta1=b1))
                assert rep.ok, rep.lines()

    def test_trivial_dimension(self):
        assert verify_zbn_relations(1, 4, CFG1).ok

    def test_four_strands(self):
        rep = verify_zbn_relations(2, 4, CFG1)
        assert rep.ok, rep.lines()

    def test_needs_two_strands(self):
        with pytest.raises(ValueError):
            verify_zbn_relations(2, 1, CFG1)

    def test_tampered_cylinder_generator_fails(self):
        bundle = zbn_generators(2, 3, CFG1)
        t = twist_t(2, CFG1)
        rows = [list(r) for r in t.entries]
        rows[1][1] = rows[1][1] + ONE
        bad_t = QMatrix(rows)
        bad_g0 = kron(kron(bad_t, QMatrix.identity(2)), QMatrix.identity(2))
        tampered = RepBundle(d=2, n=3,
                             generators=(bad_g0,) + bundle.generators[1:])
        rep = relation_report(tampered)
        assert not rep.ok
        failed = {c.name for c in rep.checks if not c.ok}
        assert "type-B relation with the cylinder generator" in failed
        typeb = next(c for c in rep.checks if not c.ok)
        assert "entry" in typeb.detail


class TestEquationFormsAgree:
    def test_verdicts_match_on_good_and_bad_input(self):
        for d in (2, 3):
            t = twist_t(d, CFG1)
            lhs, rhs = four_braid_sides(d, d, t, t)
            bl, br = braid_form_sides(d, t)
            assert (lhs == rhs) and (bl == br)
        t = twist_t(2, CFG1)
        rows = [list(r) for r in t.entries]
        rows[1][1] = rows[1][1] + ONE
        bad = QMatrix(rows)
        lhs, rhs = four_braid_sides(2, 2, bad, bad)
        bl, br = braid_form_sides(2, bad)
        assert (lhs != rhs) and (bl != br)


class TestWords:
    def test_empty_word(self):
        bundle = zbn_generators(2, 2, CFG1)
        word = BraidWord(n=2, letters=())
        assert eval_braid_word(word, bundle) == QMatrix.identity(4)

    def test_type_b_word_identity(self):
        bundle = zbn_generators(2, 2, CFG1)
        lhs = eval_braid_word(BraidWord.parse("0 1 0 1", 2), bundle)
        rhs = eval_braid_word(BraidWord.parse("1 0 1 0", 2), bundle)
        assert lhs == rhs

    def test_inverse_pair(self):
        bundle = zbn_generators(2, 2, CFG1)
        word = BraidWord.parse("1 1'", 2)
        assert eval_braid_word(word, bundle) == QMatrix.identity(4)
        word = BraidWord.parse("0 0'", 2)
        assert eval_braid_word(word, bundle) == QMatrix.identity(4)

    def test_homomorphism_on_random_words(self):
        bundle = zbn_generators(2, 3, CFG1)
        rng = random.Random(17)
        for _ in range(10):
            u = [(rng.randrange(3), rng.choice((1, -1))) for _ in range(rng.randrange(4))]
            v = [(rng.randrange(3), rng.choice((1, -1))) for _ in range(rng.randrange(4))]
            eu = eval_braid_word(BraidWord(3, tuple(u)), bundle)
            ev = eval_braid_word(BraidWord(3, tuple(v)), bundle)
            euv = eval_braid_word(BraidWord(3, tuple(u + v)), bundle)
            assert euv == eu * ev

    def test_word_validation(self):
        with pytest.raises(ValueError):
            BraidWord(n=2, letters=((2, 1),))
        with pytest.raises(ValueError):
            BraidWord(n=2, letters=((0, 2),))
        bundle = zbn_generators(2, 2, CFG1)
        with pytest.raises(ValueError):
            eval_braid_word(BraidWord(n=3, letters=()), bundle)


class TestAffine:
    def test_small_dimensions(self):
        assert verify_affine_relation(1, B1).ok
        assert verify_affine_relation(2, B1).ok
        assert verify_affine_relation(3, B0).ok

    def test_accepts_config(self):
        assert verify_affine_relation(2, TwistConfig(beta1=B1)).ok


class TestNumericBundle:
    def test_matches_exact_evaluation(self):
        exact = zbn_generators(2, 3, CFG1)
        numeric = zbn_generators_numeric(2, 3, 0.7, CFG1)
        for g_exact, g_num in zip(exact.generators, numeric):
            assert np.max(np.abs(g_exact.evaluate(0.7) - g_num)) < 1e-12

    def test_not_subject_to_ceiling(self, monkeypatch):
        monkeypatch.setenv("QW_MAX_EXACT_DIM", "4")
        gens = zbn_generators_numeric(2, 3, 0.7, CFG1)
        assert gens[0].shape == (8, 8)
