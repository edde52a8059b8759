"""Built-in verification suites: move invariance, metamonoid axioms, and the
braid correspondence.  Deterministic (fixed seeds), so the CLI output is
byte-identical across runs."""

from __future__ import annotations

import random

from .braid import BraidWord, check_correspondence, gassner, mat_eq
from .meta import MetaElement, R_CALC, eval_program, generator
from .ring import RationalFunction
from .tmva import ReducedPair

# -- move pairs as generator-composition programs --------------------------------

R2_BRAID_LEFT = """
gen rmva + o1 u1
gen rmva - o2 u2
union
mul o1 o2 -> t1
mul u1 u2 -> t2
"""

R2_CYCLIC_LEFT = """
gen rmva - om um
gen rmva + op up
union
mul op om -> t1
mul um up -> t2
"""

R2_RIGHT = """
e t1
e t2
"""

R3_BRAID_LEFT = """
gen rmva - p1 q1
gen rmva - p2 q2
union
gen rmva + p3 q3
union
mul q2 p3 -> t1
mul q1 q3 -> t2
mul p1 p2 -> t3
"""

R3_BRAID_RIGHT = """
gen rmva + p1 q1
gen rmva - p2 q2
union
gen rmva - p3 q3
union
mul p1 q2 -> t1
mul q1 q3 -> t2
mul p2 p3 -> t3
"""

R3_CYCLIC_LEFT = """
gen rmva - p1 q1
gen rmva - p2 q2
union
gen rmva + p3 q3
union
mul q2 p1 -> t1
mul q1 q3 -> t2
mul p3 p2 -> t3
"""

R3_CYCLIC_RIGHT = """
gen rmva + p1 q1
gen rmva - p2 q2
union
gen rmva - p3 q3
union
mul p3 q2 -> t1
mul q1 q3 -> t2
mul p2 p1 -> t3
"""

OC_BRAID_LEFT = """
gen rmva - p1 q1
gen rmva - p2 q2
union
mul p2 p1 -> t3
sigma q1 -> t1
sigma q2 -> t2
"""

OC_BRAID_RIGHT = """
gen rmva - p1 q1
gen rmva - p2 q2
union
mul p1 p2 -> t3
sigma q1 -> t1
sigma q2 -> t2
"""

OC_CYCLIC_LEFT = """
gen rmva - p1 q1
gen rmva + p2 q2
union
mul p2 p1 -> t3
sigma q1 -> t1
sigma q2 -> t2
"""

OC_CYCLIC_RIGHT = """
gen rmva - p1 q1
gen rmva + p2 q2
union
mul p1 p2 -> t3
sigma q1 -> t1
sigma q2 -> t2
"""

MOVE_PROGRAM_PAIRS = [
    ("R2 braid-like", R2_BRAID_LEFT, R2_RIGHT),
    ("R2 cyclic", R2_CYCLIC_LEFT, R2_RIGHT),
    ("R3 braid-like", R3_BRAID_LEFT, R3_BRAID_RIGHT),
    ("R3 cyclic", R3_CYCLIC_LEFT, R3_CYCLIC_RIGHT),
    ("OC braid-like", OC_BRAID_LEFT, OC_BRAID_RIGHT),
    ("OC cyclic", OC_CYCLIC_LEFT, OC_CYCLIC_RIGHT),
]


def r1_kink_pair() -> tuple[MetaElement, MetaElement]:
    """The two sides of the real R1 move; they must NOT agree."""
    t1 = RationalFunction.var("t1")
    kink = MetaElement(R_CALC, ReducedPair(
        lam=t1, a={("t1", "t1"): -t1},
        out_labels=("t1",), in_labels=("t1",),
        normalizer=(("t1", -1),)))
    flat = eval_program("e t1")
    return kink, flat


def check_reidemeister() -> tuple[bool, list[str]]:
    lines = []
    ok = True
    for name, left, right in MOVE_PROGRAM_PAIRS:
        good = eval_program(left).same_value(eval_program(right))
        ok = ok and good
        lines.append(("PASS" if good else "FAIL") + f" {name}: sides agree")
    kink, flat = r1_kink_pair()
    differs = not kink.same_value(flat)
    ok = ok and differs
    lines.append(("PASS" if differs else "FAIL")
                 + " R1: sides differ as required (regular-isotopy invariant)")
    return ok, lines


# -- axioms on seeded reachable elements -------------------------------------------


def _random_reachable(rng: random.Random, kind: str, n_labels: int) -> MetaElement:
    counter = 0

    def fresh():
        nonlocal counter
        counter += 1
        return f"v{counter}"

    labels: list[str] = []
    elt = None
    for i in range(rng.randint(2, 4)):
        a, b = fresh(), fresh()
        g = generator(kind, rng.choice([1, -1]), a, b)
        elt = g if elt is None else elt.union(g)
        labels += [a, b]
        while len(labels) > 2 and rng.random() < 0.4:
            x, y = rng.sample(labels, 2)
            c = fresh()
            elt = elt.mul(x, y, c)
            labels.remove(x)
            labels.remove(y)
            labels.append(c)
    while len(labels) > n_labels:
        x, y = rng.sample(labels, 2)
        c = fresh()
        elt = elt.mul(x, y, c)
        labels.remove(x)
        labels.remove(y)
        labels.append(c)
    while len(labels) < n_labels:
        a = fresh()
        elt = elt.ident(a)
        labels.append(a)
    return elt


def check_axioms(samples: int = 4) -> tuple[bool, list[str]]:
    lines = []
    ok = True

    def record(name: str, good: bool):
        nonlocal ok
        ok = ok and good
        lines.append(("PASS" if good else "FAIL") + " " + name)

    for kind, calc in (("rmva", "R"), ("ztilde", "Gamma")):
        rng = random.Random(2024)
        for s in range(samples):
            e = _random_reachable(rng, kind, 4)
            a, b, d, x = e.labels
            assoc = e.mul(a, b, "c").mul(d, "c", "f").same_value(
                e.mul(d, a, "c").mul("c", b, "f"))
            record(f"{calc} associativity (sample {s})", assoc)
            left_id = e.delete(a).ident(a).mul(a, b, "c").same_value(
                e.delete(a).rename(b, "c"))
            record(f"{calc} left identity (sample {s})", left_id)
            right_id = e.delete(b).ident(b).mul(a, b, "c").same_value(
                e.delete(b).rename(a, "c"))
            record(f"{calc} right identity (sample {s})", right_id)
            set_ax = (e.ident("w").delete("w").same_value(e)
                      and e.mul(a, b, "c").delete("c").same_value(
                          e.delete(a).delete(b))
                      and e.mul(a, b, "c").rename("c", "g").same_value(
                          e.mul(a, b, "g")))
            record(f"{calc} set axioms (sample {s})", set_ax)
            comm = e.mul(a, b, "c").mul(d, x, "y").same_value(
                e.mul(d, x, "y").mul(a, b, "c"))
            record(f"{calc} commuting operations (sample {s})", comm)
    return ok, lines


def check_gassner_correspondence(samples: int = 4) -> tuple[bool, list[str]]:
    lines = []
    ok = True
    labels = ("a", "b", "c")
    relations = [
        ("braid relation", (("a", "b", 1), ("a", "c", 1), ("b", "c", 1),
                            ("a", "b", -1), ("a", "c", -1), ("b", "c", -1))),
    ]
    for name, letters in relations:
        lhs = (("a", "b", 1), ("a", "c", 1), ("b", "c", 1))
        rhs = (("b", "c", 1), ("a", "c", 1), ("a", "b", 1))
        good = mat_eq(gassner(BraidWord(labels, lhs)),
                      gassner(BraidWord(labels, rhs)), labels)
        ok = ok and good
        lines.append(("PASS" if good else "FAIL") + f" gassner kills the {name}")
    rng = random.Random(7)
    for s in range(samples):
        letters = []
        for _ in range(rng.randint(1, 4)):
            a, b = rng.sample(labels, 2)
            letters.append((a, b, rng.choice([1, -1])))
        res = check_correspondence(BraidWord(labels, tuple(letters)))
        ok = ok and res.ok
        word_str = " ".join(f"{'s' if e > 0 else 'S'}({a},{b})" for a, b, e in letters)
        lines.append(("PASS" if res.ok else "FAIL")
                     + f" correspondence on {word_str}")
        if s == 0:
            lines.extend("    " + ln for ln in res.report.splitlines())
    return ok, lines
