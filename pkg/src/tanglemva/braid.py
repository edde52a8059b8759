"""Pure virtual braid words, the Gassner/Burau representations, and the
correspondence between the braid image of the reduced invariant and Gassner.

Braid letters keep strand identity: sigma_{ab} means strand a crosses over
strand b, whichever positions they occupy.  A word reads left to right as
bottom-to-top stacking; the Gassner image multiplies in the same order, while
the reduced-invariant image anti-multiplies with a sign, so the negative
transpose of its matrix part is again multiplicative.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import LabelError, ParseError, ValidationError
from .meta import MetaElement, R_CALC, empty_element, generator
from .ring import (
    Mono,
    RationalFunction,
    mono,
    mono_mul,
    render_mono,
)

Matrix = dict[tuple[str, str], RationalFunction]


@dataclass(frozen=True)
class BraidWord:
    labels: tuple[str, ...]
    word: tuple[tuple[str, str, int], ...]  # (over, under, +1|-1)

    def __post_init__(self):
        seen = set(self.labels)
        if len(seen) != len(self.labels):
            raise LabelError("duplicate strand label in braid")
        for a, b, e in self.word:
            if a == b:
                raise LabelError("a braid letter needs two distinct strands")
            if a not in seen or b not in seen:
                raise LabelError(f"letter uses undeclared strand {a!r}/{b!r}")
            if e not in (1, -1):
                raise ValidationError("letter exponent must be +1 or -1")

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.labels != self.labels:
            raise LabelError("can only concatenate words on the same strands")
        return BraidWord(self.labels, self.word + other.word)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.labels,
                         tuple((a, b, -e) for a, b, e in reversed(self.word)))


def parse_braid(text: str) -> BraidWord:
    """``labels a b c`` first, then whitespace-separated ``s a b`` / ``S a b``."""
    tokens: list[str] = []
    for raw in text.splitlines():
        tokens.extend(raw.split("#", 1)[0].split())
    if not tokens or tokens[0] != "labels":
        raise ParseError("braid input must start with: labels <name> ...")
    labels: list[str] = []
    i = 1
    while i < len(tokens) and tokens[i] not in ("s", "S"):
        labels.append(tokens[i])
        i += 1
    word = []
    while i < len(tokens):
        if tokens[i] not in ("s", "S") or i + 2 >= len(tokens):
            raise ParseError(f"expected 's <a> <b>' or 'S <a> <b>' at token {i}")
        word.append((tokens[i + 1], tokens[i + 2], 1 if tokens[i] == "s" else -1))
        i += 3
    return BraidWord(tuple(labels), tuple(word))


# -- label-indexed matrices ------------------------------------------------------


def identity_matrix(labels) -> Matrix:
    return {(x, x): RationalFunction.one() for x in labels}


def mat_get(m: Matrix, x: str, y: str) -> RationalFunction:
    return m.get((x, y), RationalFunction.zero())


def mat_mul(m1: Matrix, m2: Matrix, labels) -> Matrix:
    out: Matrix = {}
    for x in labels:
        row = [(k, v) for (xx, k), v in m1.items() if xx == x]
        for y in labels:
            acc = RationalFunction.zero()
            for k, v in row:
                w = m2.get((k, y))
                if w is not None:
                    acc = acc + v * w
            if not acc.is_zero():
                out[(x, y)] = acc.reduced()
    return out


def mat_eq(m1: Matrix, m2: Matrix, labels) -> bool:
    return all(mat_get(m1, x, y) == mat_get(m2, x, y) for x in labels for y in labels)


def _gassner_letter(labels, a: str, b: str, exp: int) -> Matrix:
    """Image of one letter: the over strand scales everything it passes.

    The 2x2 block on (a, b) is [[t_a, t_b - 1], [0, 1]] and every strand not
    involved in the crossing picks up t_a on the diagonal.  This is the unique
    variant of the classical two-variable block (up to central scalars) that
    satisfies both defining relations of the pure virtual braid group under
    plain matrix products, and it is what the negative transpose of the braid
    invariant produces letter by letter.
    """
    t_a = RationalFunction.var(a, exp)
    t_b = RationalFunction.var(b)
    one = RationalFunction.one()
    m: Matrix = {(x, x): t_a for x in labels if x != b}
    m[(b, b)] = one
    m[(a, b)] = (t_b - one) if exp > 0 else (one - t_b) / RationalFunction.var(a)
    return m


def gassner(w: BraidWord) -> Matrix:
    """Ordered product of the generator images, word order = product order."""
    acc = identity_matrix(w.labels)
    for a, b, e in w.word:
        acc = mat_mul(acc, _gassner_letter(w.labels, a, b, e), w.labels)
    return acc


def burau(w: BraidWord) -> Matrix:
    """Gassner with every strand variable merged into the single variable t."""
    merge = {lab: "t" for lab in w.labels}
    return {k: v.substitute(merge) for k, v in gassner(w).items()}


# -- the reduced-invariant image of a braid ---------------------------------------


def rmva_braid(w: BraidWord) -> MetaElement:
    """Evaluate the braid as a metamonoid program over its full label set."""
    e = empty_element(R_CALC)
    for lab in w.labels:
        e = e.ident(lab)
    k = 0
    for a, b, exp in w.word:
        k += 1
        ca, cb = f"#o{k}", f"#u{k}"
        g = generator("rmva", exp, ca, cb)
        e = e.union(g).mul(a, ca, a).mul(b, cb, b)
    return e


def rmva_pair_product(e1: MetaElement, e2: MetaElement) -> tuple[RationalFunction, Matrix]:
    """Group product on full braid images: scalars multiply, matrices multiply."""
    if set(e1.labels) != set(e2.labels):
        raise LabelError("pair product needs matching label sets")
    labels = e1.labels
    m1 = {(x, y): e1.full_entry(x, y) for x in labels for y in labels}
    m2 = {(x, y): e2.full_entry(x, y) for x in labels for y in labels}
    return e1.full_lambda() * e2.full_lambda(), mat_mul(m1, m2, labels)


def neg(m: Matrix) -> Matrix:
    return {k: -v for k, v in m.items()}


def transpose(m: Matrix) -> Matrix:
    return {(y, x): v for (x, y), v in m.items()}


@dataclass(frozen=True)
class CorrespondenceResult:
    ok: bool
    report: str

    def __bool__(self) -> bool:
        return self.ok


def check_correspondence(w: BraidWord) -> CorrespondenceResult:
    """Negative transpose of the braid's reduced-invariant matrix against the
    Gassner image.

    Each letter sigma_{ab}^{±1} contributes its Gassner image with the scalar
    normalizer t_a^{∓1/2} suppressed; the suppressed normalizers are
    reinstated once at the end, multiplying the finished product.  The report
    records the suppression per letter and the final reinstatement step.
    """
    lines = []
    labels = tuple(sorted(w.labels))
    lhs_elt = rmva_braid(w)
    full = {(x, y): lhs_elt.full_entry(x, y) for x in labels for y in labels}
    lhs = neg(transpose(full))
    lines.append(f"word of {len(w.word)} letter(s) on strands {', '.join(labels)}")

    rhs = identity_matrix(labels)
    norm: Mono = ()
    for i, (a, b, exp) in enumerate(w.word, start=1):
        rhs = mat_mul(rhs, _gassner_letter(labels, a, b, exp), labels)
        norm = mono_mul(norm, mono(a, -exp))
        sig = f"sigma({a} over {b})^{'+' if exp > 0 else '-'}1"
        lines.append(f"  letter {i}: {sig}: Gassner image taken with "
                     f"normalizer {a}^({-exp}/2) suppressed")
    rhs = {k: v.mul_mono(norm) for k, v in rhs.items()}
    lines.append(f"normalizers reinstated at the end: multiplied product by "
                 f"{render_mono(norm)}")
    ok = mat_eq(lhs, rhs, labels)
    lines.append("negative transpose of the invariant matrix "
                 + ("MATCHES" if ok else "DIFFERS FROM")
                 + " the normalizer-scaled Gassner image")
    return CorrespondenceResult(ok, "\n".join(lines))
