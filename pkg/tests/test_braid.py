import random

import pytest

from tanglemva.braid import (
    BraidWord,
    check_correspondence,
    gassner,
    burau,
    identity_matrix,
    mat_eq,
    mat_get,
    mat_mul,
    neg,
    parse_braid,
    rmva_braid,
    rmva_pair_product,
    transpose,
)
from tanglemva.errors import LabelError, ParseError
from tanglemva.meta import generator
from tanglemva.ring import LaurentPoly, RationalFunction

ONE = LaurentPoly.one()
ABC = ("a", "b", "c")


def t(lab, k=1):
    return LaurentPoly.var(lab, k)


def rf(x):
    return RationalFunction.of(x)


def word(labels, *letters):
    return BraidWord(tuple(labels), tuple(letters))


def random_word(rng, labels, length):
    letters = []
    for _ in range(length):
        a, b = rng.sample(labels, 2)
        letters.append((a, b, rng.choice([1, -1])))
    return word(labels, *letters)


class TestParse:
    def test_basic(self):
        w = parse_braid("labels a b c\ns a b  S b c")
        assert w.labels == ("a", "b", "c")
        assert w.word == (("a", "b", 1), ("b", "c", -1))

    def test_must_declare_labels(self):
        with pytest.raises(ParseError):
            parse_braid("s a b")

    def test_letters_use_declared_strands(self):
        with pytest.raises(LabelError):
            parse_braid("labels a b\ns a z")


class TestGassner:
    def test_generator_block(self):
        # the relation-preserving block: [[t_a, t_b - 1], [0, 1]] with the
        # over strand's variable on every uninvolved diagonal slot
        g = gassner(word(ABC, ("a", "b", 1)))
        assert mat_get(g, "a", "a") == rf(t("a"))
        assert mat_get(g, "a", "b") == rf(t("b") - ONE)
        assert mat_get(g, "b", "b") == rf(ONE)
        assert mat_get(g, "c", "c") == rf(t("a"))
        assert mat_get(g, "b", "a").is_zero()

    def test_all_ones_is_identity(self):
        g = gassner(word(ABC, ("a", "b", 1), ("b", "c", -1)))
        for x in ABC:
            for y in ABC:
                assert mat_get(g, x, y).eval_ones() == (1 if x == y else 0)

    def test_empty_word(self):
        assert mat_eq(gassner(word(ABC)), identity_matrix(ABC), ABC)

    def test_inverse_letter(self):
        w = word(ABC, ("a", "b", 1), ("a", "b", -1))
        assert mat_eq(gassner(w), identity_matrix(ABC), ABC)

    def test_braid_relation(self):
        lhs = word(ABC, ("a", "b", 1), ("a", "c", 1), ("b", "c", 1))
        rhs = word(ABC, ("b", "c", 1), ("a", "c", 1), ("a", "b", 1))
        assert mat_eq(gassner(lhs), gassner(rhs), ABC)

    def test_commuting_relation(self):
        labs = ("a", "b", "c", "d")
        lhs = word(labs, ("a", "b", 1), ("c", "d", 1))
        rhs = word(labs, ("c", "d", 1), ("a", "b", 1))
        assert mat_eq(gassner(lhs), gassner(rhs), labs)

    def test_homomorphism_on_random_words(self):
        rng = random.Random(61)
        for _ in range(10):
            w1 = random_word(rng, ABC, rng.randint(0, 3))
            w2 = random_word(rng, ABC, rng.randint(0, 3))
            prod = mat_mul(gassner(w1), gassner(w2), ABC)
            assert mat_eq(gassner(w1 * w2), prod, ABC)


class TestBurau:
    def test_single_variable_block(self):
        b = burau(word(("a", "b"), ("a", "b", 1)))
        tt = t("t")
        assert mat_get(b, "a", "a") == rf(tt)
        assert mat_get(b, "a", "b") == rf(tt - ONE)
        assert mat_get(b, "b", "b") == rf(ONE)

    def test_braid_relation_word_collapses(self):
        w = word(ABC, ("a", "b", 1), ("a", "c", 1), ("b", "c", 1),
                 ("b", "c", -1), ("a", "c", -1), ("a", "b", -1))
        assert mat_eq(burau(w), identity_matrix(ABC), ABC)

    def test_commuting_relation(self):
        labs = ("a", "b", "c", "d")
        w = word(labs, ("a", "b", 1), ("c", "d", 1), ("a", "b", -1), ("c", "d", -1))
        assert mat_eq(burau(w), identity_matrix(labs), labs)


class TestRmvaBraid:
    def test_single_letter_is_padded_generator(self):
        e = rmva_braid(word(ABC, ("a", "b", 1)))
        assert e.normalizer == (("a", -1),)
        assert e.lam == rf(t("a"))
        g = generator("rmva", 1, "a", "b")
        for x in ("a", "b"):
            for y in ("a", "b"):
                assert e.entry(x, y) == g.entry(x, y)
        # disjoint strands pick up the lambda scaling
        assert e.entry("c", "c") == rf(-t("a"))

    def test_letter_and_inverse_cancel(self):
        e = rmva_braid(word(ABC, ("a", "b", 1), ("a", "b", -1)))
        assert e.lam.mul_mono(e.normalizer) == rf(ONE)
        for x in ABC:
            for y in ABC:
                want = rf(-ONE) if x == y else RationalFunction.zero()
                assert e.full_entry(x, y) == want

    def test_anti_homomorphism_with_sign(self):
        rng = random.Random(62)
        for _ in range(8):
            w1 = random_word(rng, ABC, rng.randint(1, 3))
            w2 = random_word(rng, ABC, rng.randint(1, 2))
            whole = rmva_braid(w1 * w2)
            lam, mat = rmva_pair_product(rmva_braid(w2), rmva_braid(w1))
            assert whole.full_lambda() == lam
            for x in ABC:
                for y in ABC:
                    assert whole.full_entry(x, y) == -mat_get(mat, x, y)

    def test_oc_rewrites_preserve_value(self):
        # same overstrand: sigma_ab sigma_ac = sigma_ac sigma_ab (welded move)
        rng = random.Random(63)
        for _ in range(5):
            pre = random_word(rng, ABC, rng.randint(0, 2))
            post = random_word(rng, ABC, rng.randint(0, 2))
            mid1 = word(ABC, ("a", "b", 1), ("a", "c", 1))
            mid2 = word(ABC, ("a", "c", 1), ("a", "b", 1))
            assert rmva_braid(pre * mid1 * post).same_value(
                rmva_braid(pre * mid2 * post))


class TestCorrespondence:
    def test_empty_word(self):
        res = check_correspondence(word(ABC))
        assert res
        assert "0 letter" in res.report

    def test_single_letters(self):
        for exp in (1, -1):
            res = check_correspondence(word(ABC, ("a", "b", exp)))
            assert res, res.report

    def test_report_mentions_normalizer_reinstatement(self):
        res = check_correspondence(word(ABC, ("a", "b", 1), ("b", "c", -1)))
        assert res
        assert "normalizers reinstated at the end" in res.report
        assert "suppressed" in res.report

    def test_random_words(self):
        rng = random.Random(64)
        for _ in range(12):
            w = random_word(rng, ABC, rng.randint(1, 5))
            res = check_correspondence(w)
            assert res, res.report

    def test_negative_transpose_of_generator_matches_display(self):
        # -(A)^tr of the positive letter = [[t_a, t_b - 1], [0, 1]] padded
        e = rmva_braid(word(("a", "b"), ("a", "b", 1)))
        full = {(x, y): e.full_entry(x, y) for x in ("a", "b") for y in ("a", "b")}
        nt = neg(transpose(full))
        norm = LaurentPoly.half_var("a", -1)
        assert mat_get(nt, "a", "a") == rf(t("a")) * rf(norm)
        assert mat_get(nt, "a", "b") == rf(t("b") - ONE) * rf(norm)
        assert mat_get(nt, "b", "a").is_zero()
        assert mat_get(nt, "b", "b") == rf(norm)


class TestWordAlgebra:
    def test_inverse(self):
        w = word(ABC, ("a", "b", 1), ("b", "c", -1))
        assert w.inverse().word == (("b", "c", 1), ("a", "b", -1))
        assert rmva_braid(w * w.inverse()).same_value(rmva_braid(word(ABC)))

    def test_letter_validation(self):
        with pytest.raises(LabelError):
            word(ABC, ("a", "a", 1))
        with pytest.raises(LabelError):
            word(ABC, ("a", "z", 1))
