"""Acceptance suite: one test per criterion, timed against its stated budget.

Every comparison is exact (rf-equality by cross-multiplication); nothing is
approximate.  Each test prints one PASS line with its runtime (visible with
``pytest -s``).
"""

import io
import itertools
import random
import sys
import time
from contextlib import redirect_stdout

import fixtures as fx
from corpus import corpus, random_program
from tanglemva.braid import (
    BraidWord,
    check_correspondence,
    gassner,
    identity_matrix,
    mat_eq,
)
from tanglemva.cli import run as cli_run
from tanglemva.diagram import serialize_diagram
from tanglemva.links import rmva_one_tangle, vmva
from tanglemva.meta import (
    MetaElement,
    R_CALC,
    assemble_diagram,
    eval_program,
    f_map,
    generator,
)
from tanglemva.ring import LaurentPoly, RationalFunction, unit_normalized
from tanglemva.tmva import (
    compute_tmva,
    hodge_reduce,
    reconstruct_full,
    reconstruct_minor,
)

ONE = LaurentPoly.one()


def t(lab, k=1):
    return LaurentPoly.var(lab, k)


def rf(x):
    return RationalFunction.of(x)


class Budget:
    def __init__(self, name, seconds):
        self.name = name
        self.seconds = seconds

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.t0
        if exc_type is None:
            print(f"PASS {self.name} ({elapsed:.2f}s / budget {self.seconds}s)")
            assert elapsed < self.seconds, (
                f"{self.name} exceeded its runtime budget: {elapsed:.2f}s")
        else:
            print(f"FAIL {self.name} ({elapsed:.2f}s)")
        return False


def test_criterion_1_t_prime_exactness():
    with Budget("criterion 1: worked-example exactness", 1.0):
        e = eval_program(fx.T_PRIME_PROGRAM)
        t1, t2, t3 = t("t1"), t("t2"), t("t3")
        assert e.normalizer == (("t1", -2), ("t3", -4))  # t1^-1 t3^-2
        assert e.lam == rf(t1 * t3 ** 2 * (t1 + t3 - ONE))
        reference = {
            ("t1", "t1"): rf(t1 * t3 ** 3 * (t3 * t1 - t1 - t1 - t3 + ONE)),
            ("t1", "t2"): RationalFunction.zero(),
            ("t1", "t3"): rf(-(t1 * t3 ** 2 * (t1 - ONE) ** 2 * (t3 - ONE))),
            ("t2", "t1"): rf(t3 ** 2 * (t1 * t3 * (t3 - ONE - ONE) + ONE - t3)
                             * (t2 - ONE)),
            ("t2", "t2"): rf(-(t3 * (t1 + t3 - ONE))),
            ("t2", "t3"): rf(t3 * (ONE - t2)
                             * (t3 + (t1 - ONE) * (t1 * t3 ** 2 - t1 * t3 + ONE))),
            ("t3", "t1"): rf(-(t1 * t3 ** 3 * (t3 - ONE))),
            ("t3", "t2"): RationalFunction.zero(),
            ("t3", "t3"): rf(t1 * t3 ** 2 * (t3 * (t1 - ONE - ONE) + ONE - t1)),
        }
        for key, want in reference.items():
            assert e.entry(*key) == want, key


def test_criterion_2_generator_fidelity():
    with Budget("criterion 2: generator fidelity and the calculi isomorphism", 1.0):
        t_a, t_b = t("a"), t("b")
        # crossing values, verbatim
        gp = generator("rmva", 1, "a", "b")
        assert (gp.normalizer, gp.lam) == ((("a", -1),), rf(t_a))
        assert gp.entry("a", "a") == rf(-t_a)
        assert gp.entry("b", "a") == rf(ONE - t_b)
        assert gp.entry("b", "b") == rf(-ONE)
        gm = generator("rmva", -1, "a", "b")
        assert (gm.normalizer, gm.lam) == ((("a", -1),), rf(ONE))
        assert gm.entry("a", "a") == rf(-ONE)
        assert gm.entry("b", "a") == rf(t_b - ONE)
        assert gm.entry("b", "b") == rf(-t_a)
        zp = generator("ztilde", 1, "a", "b")
        assert zp.full_lambda() == rf(LaurentPoly.half_var("a"))
        assert zp.entry("a", "a") == rf(ONE)
        assert zp.entry("b", "a") == rf(t_b - ONE) / rf(t_a)
        assert zp.entry("b", "b") == rf(ONE) / rf(t_a)
        zm = generator("ztilde", -1, "a", "b")
        assert zm.full_lambda() == rf(LaurentPoly.half_var("a", -1))
        assert zm.entry("a", "a") == rf(ONE)
        assert zm.entry("b", "a") == rf(ONE - t_b)
        assert zm.entry("b", "b") == rf(t_a)
        # the isomorphism carries each ztilde generator to its rmva twin
        for sign in (1, -1):
            assert f_map(generator("ztilde", sign, "a", "b")).same_value(
                generator("rmva", sign, "a", "b"))


def _oracle_corpus():
    """The criterion-3 corpus; seeded, so every caller sees the same programs."""
    return corpus(seed=30303, count=200, max_crossings=6, max_strands=4)


def test_criterion_3_oracle_equivalence():
    with Budget("criterion 3: metamonoid vs matrix path on 200 programs", 60.0):
        programs = _oracle_corpus()
        assert len(programs) >= 200
        for prog in programs:
            e = eval_program(prog)
            d = assemble_diagram(prog)
            oracle = MetaElement(R_CALC, hodge_reduce(compute_tmva(d)))
            assert e.same_value(oracle), prog


def test_criterion_4_reconstruction():
    with Budget("criterion 4: degree-(0,1) reconstruction on 50 diagrams", 60.0):
        programs = corpus(seed=40404, count=50, max_crossings=5, max_strands=3)
        assert len(programs) >= 50
        for prog in programs:
            d = assemble_diagram(prog)
            e = compute_tmva(d)
            p = hodge_reduce(e)
            n = p.n
            # every boundary minor agrees with the signed A-minor formula
            for k in range(0, n + 1):
                for i_set in itertools.combinations(range(1, n + 1), k):
                    kept = tuple(x for x in range(1, n + 1) if x not in i_set)
                    for j_set in itertools.combinations(range(1, n + 1), k):
                        assert reconstruct_minor(p, i_set, j_set) == e.coeff(
                            kept, j_set), (prog, i_set, j_set)
            # and the full table round-trips
            assert reconstruct_full(p) == e


def test_criterion_5_invariance_suite():
    with Budget("criterion 5: R2/R3/OC equal, R1 unequal", 5.0):
        for name, left, right in fx.MOVE_PROGRAM_PAIRS:
            assert eval_program(left).same_value(eval_program(right)), name
        for name, left, right in fx.MOVE_DIAGRAM_PAIRS:
            lhs = MetaElement(R_CALC, hodge_reduce(compute_tmva(left)))
            rhs = MetaElement(R_CALC, hodge_reduce(compute_tmva(right)))
            assert lhs.same_value(rhs), name
        # R1: t_a^(-1/2) (t_a; [-t_a])  vs  (1; [-1])
        kink = MetaElement(R_CALC, hodge_reduce(compute_tmva(fx.R1_KINK)))
        flat = eval_program("e t1")
        assert kink.normalizer == (("t1", -1),)
        assert kink.lam == rf(t("t1"))
        assert kink.entry("t1", "t1") == rf(-t("t1"))
        assert flat.lam == rf(ONE)
        assert flat.entry("t1", "t1") == rf(-ONE)
        assert not kink.same_value(flat)


def _reachable_elements(seed, kind, count, n_labels):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        prog = random_program(rng, rng.randint(1, 5), n_labels, kind=kind)
        out.append(eval_program(prog))
    return out


def test_criterion_6_metamonoid_axioms():
    with Budget("criterion 6: metamonoid axioms on 100+ reachable elements", 30.0):
        checked = 0
        for kind in ("rmva", "ztilde"):
            for e in _reachable_elements(60606, kind, 52, 4):
                a, b, d, x = e.labels
                assert e.mul(a, b, "c").mul(d, "c", "f").same_value(
                    e.mul(d, a, "c").mul("c", b, "f"))
                assert e.delete(a).ident(a).mul(a, b, "c").same_value(
                    e.delete(a).rename(b, "c"))
                assert e.delete(b).ident(b).mul(a, b, "c").same_value(
                    e.delete(b).rename(a, "c"))
                base = e.delete(a)
                assert base.delete(b).ident(a).rename(a, b).same_value(
                    base.delete(b).ident(b))
                assert e.rename(a, "z").delete("z").same_value(e.delete(a))
                assert base.ident(a).delete(a).same_value(base)
                assert e.mul(a, b, "c").delete("c").same_value(
                    e.delete(a).delete(b))
                assert e.mul(a, b, "c").rename("c", "g").same_value(
                    e.mul(a, b, "g"))
                assert e.rename(a, "n").mul("n", b, "g").same_value(
                    e.mul(a, b, "g"))
                assert e.rename(a, "p").rename(b, "q").same_value(
                    e.rename(b, "q").rename(a, "p"))
                assert e.mul(a, b, "c").mul(d, x, "y").same_value(
                    e.mul(d, x, "y").mul(a, b, "c"))
                other = generator(kind, 1, "w1", "w2")
                assert e.union(other).mul(a, b, "c").same_value(
                    e.mul(a, b, "c").union(other))
                assert e.union(other).rename("w1", "w3").same_value(
                    e.union(other.rename("w1", "w3")))
                checked += 1
        assert checked >= 100


def test_criterion_7_nzero_property():
    with Budget("criterion 7: all-ones evaluation over the oracle corpus", 30.0):
        elements = [eval_program(prog) for prog in _oracle_corpus()]
        assert len(elements) >= 200
        for e in elements:
            assert not e.lam.is_zero()
            lam1, grid = e.at_ones()
            assert lam1 == 1
            for x in e.labels:
                for y in e.labels:
                    assert grid[(x, y)] == (-1 if x == y else 0)
        # Gamma side: (1, Id)
        for e in _reachable_elements(70707, "ztilde", 20, 3):
            lam1, grid = e.at_ones()
            assert lam1 == 1
            for x in e.labels:
                for y in e.labels:
                    assert grid[(x, y)] == (1 if x == y else 0)


def test_criterion_8_gassner_correspondence():
    with Budget("criterion 8: Gassner correspondence and pvB relations", 30.0):
        labels = ("a", "b", "c")
        # exhaustive words up to length 5 over a two-letter generator subset
        subset = (("a", "b", 1), ("b", "c", -1))
        count = 0
        for length in range(0, 6):
            for letters in itertools.product(subset, repeat=length):
                assert check_correspondence(BraidWord(labels, letters)).ok
                count += 1
        assert count == 63
        # plus 100 random words of length <= 5 over all letters
        rng = random.Random(80808)
        for _ in range(100):
            letters = []
            for _ in range(rng.randint(1, 5)):
                a, b = rng.sample(labels, 2)
                letters.append((a, b, rng.choice([1, -1])))
            w = BraidWord(labels, tuple(letters))
            assert check_correspondence(w).ok
        # both pvB relations map to the identity
        for a, b, c in itertools.permutations(labels):
            lhs = BraidWord(labels, ((a, b, 1), (a, c, 1), (b, c, 1)))
            rhs = BraidWord(labels, ((b, c, 1), (a, c, 1), (a, b, 1)))
            relator = lhs * rhs.inverse()
            assert mat_eq(gassner(relator), identity_matrix(labels), labels)
        labs4 = ("a", "b", "c", "d")
        comm = BraidWord(labs4, (("a", "b", 1), ("c", "d", 1),
                                 ("a", "b", -1), ("c", "d", -1)))
        assert mat_eq(gassner(comm), identity_matrix(labs4), labs4)


def test_criterion_9_link_recovery():
    from test_links import (
        FIGURE_EIGHT_PROGRAM,
        TREFOIL_PROGRAM,
        b3_reduced_burau_alexander,
        long_knot_value,
        torus2_alexander,
    )
    with Budget("criterion 9: link polynomials against independent oracles", 30.0):
        one = rf(ONE)
        tt = rf(t("t"))
        # long trefoil: engine value vs the closed-diagram path and the
        # 2-strand Burau-form oracle, up to a unit
        trefoil = long_knot_value(TREFOIL_PROGRAM)
        assert trefoil == vmva(assemble_diagram(TREFOIL_PROGRAM))
        tre_t = trefoil.substitute({"K": "t"})
        assert unit_normalized(tre_t * (tt - one)) == unit_normalized(
            torus2_alexander(3))
        # 4-crossing knot (figure-eight pattern) vs the reduced-Burau oracle
        fig8 = long_knot_value(FIGURE_EIGHT_PROGRAM)
        assert fig8 == vmva(assemble_diagram(FIGURE_EIGHT_PROGRAM))
        fig8_t = fig8.substitute({"K": "t"})
        oracle = b3_reduced_burau_alexander([(1, 1), (2, -1), (1, 1), (2, -1)])
        assert unit_normalized(fig8_t * (tt - one)) == unit_normalized(oracle)
        # lambda = -A on randomized 1-tangles
        for prog in corpus(seed=90909, count=25, max_crossings=5, max_strands=1):
            d = assemble_diagram(prog)
            p = rmva_one_tangle(d)
            assert p.lam == -p.pair.entry(p.long_label, p.long_label)


def _cli_capture(argv, stdin_text=""):
    old_stdin = sys.stdin
    sys.stdin = io.StringIO(stdin_text)
    buf = io.StringIO()
    try:
        with redirect_stdout(buf):
            code = cli_run(argv)
    finally:
        sys.stdin = old_stdin
    return code, buf.getvalue()


def test_criterion_10_cli_determinism():
    with Budget("criterion 10: byte-identical CLI output across runs", 30.0):
        t_prime_text = serialize_diagram(fx.EXAMPLE_T_PRIME)
        requests = [
            (["--mode", "diagram", "--invariant", "rmva", "--format", "json"],
             t_prime_text),
            (["--mode", "diagram", "--invariant", "tmva", "--format", "json"],
             t_prime_text),
            (["--mode", "diagram", "--invariant", "rmva"], t_prime_text),
            (["--mode", "program", "--invariant", "rmva", "--format", "json"],
             fx.T_PRIME_PROGRAM),
            (["--mode", "braid", "--invariant", "gassner", "--format", "json"],
             "labels a b c\ns a b S b c\n"),
            (["--mode", "braid", "--invariant", "burau"],
             "labels a b\ns a b s a b s a b\n"),
            (["--check", "reidemeister"], ""),
            (["--check", "axioms"], ""),
            (["--check", "correspondence"], ""),
        ]
        for argv, text in requests:
            first = _cli_capture(argv, text)
            second = _cli_capture(argv, text)
            assert first == second, argv
            assert first[0] == 0, argv
