"""Long knots and links: 1-tangle pairs, the long-link Alexander polynomial,
and the partial trace that closes a strand at the pair level.

A 1-tangle (one open strand, any number of closed components) carries only a
scalar and a 1x1 matrix, and the column relation of the Alexander matrix
forces them to be negatives of each other.  Dividing the scalar by t-1 in the
long strand's variable gives the multivariable Alexander polynomial of the
long link, defined up to a unit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import TangleDiagram
from .errors import ConsistencyError, LambdaZero, ShapeError
from .meta import MetaElement, R_CALC
from .ring import RationalFunction
from .tmva import ReducedPair, reduced_from_diagram


@dataclass(frozen=True)
class OneTanglePair:
    pair: ReducedPair
    long_label: str

    @property
    def lam(self) -> RationalFunction:
        return self.pair.lam

    def full_lambda(self) -> RationalFunction:
        return self.pair.lam.mul_mono(self.pair.normalizer)


def rmva_one_tangle(d: TangleDiagram) -> OneTanglePair:
    """Degree-(0,1) pair of a 1-tangle; closed components are welcome here."""
    open_strands = d.open_strands
    if len(open_strands) != 1:
        raise ShapeError(f"need exactly one open strand, got {len(open_strands)}")
    label = open_strands[0].label
    pair = reduced_from_diagram(d)
    a_entry = pair.entry(label, label)
    if pair.lam != -a_entry:
        raise ConsistencyError(
            "degree-0 scalar is not the negative of the 1x1 matrix entry; "
            "the builder conventions are broken")
    return OneTanglePair(pair, label)


def vmva(d: TangleDiagram) -> RationalFunction:
    """Long-link multivariable Alexander polynomial: scalar over (t_l - 1)."""
    p = rmva_one_tangle(d)
    t_l = RationalFunction.var(p.long_label)
    return p.full_lambda() / (t_l - RationalFunction.one())


def partial_trace(e: MetaElement, a: str) -> MetaElement:
    """Close strand ``a`` of a pair onto itself.

    Sends (lambda, A) to (lambda + A[a,a], ((lambda+A[a,a]) Xi - phi theta)
    / lambda) with Xi/phi/theta the blocks away from a; defined only while
    lambda is nonzero.  The closed strand's variable survives in the result.
    """
    if e.calculus != R_CALC:
        raise ShapeError("partial trace lives on the R-calculus side")
    if a not in e.labels:
        raise ShapeError(f"no strand {a!r} to close")
    lam = e.lam
    if lam.is_zero():
        raise LambdaZero(f"cannot close {a!r}: degree-0 scalar is zero")
    al = e.entry(a, a)
    new_lam = (lam + al).reduced()
    rest = tuple(x for x in e.labels if x != a)
    entries = {}
    for x in rest:
        phi = e.entry(x, a)
        for y in rest:
            v = ((lam + al) * e.entry(x, y) - phi * e.entry(a, y)) / lam
            v = v.reduced()
            if not v.is_zero():
                entries[(x, y)] = v
    return MetaElement(R_CALC, ReducedPair(
        lam=new_lam, a=entries, out_labels=rest, in_labels=rest,
        normalizer=e.normalizer))


def mva_link(source: MetaElement | TangleDiagram,
             close: tuple[str, ...] = ()) -> RationalFunction:
    """Iterated strand closure followed by the long-link polynomial.

    ``close`` lists the strands to close, applied left to right; afterwards
    exactly one open strand must remain.  A vanishing scalar aborts with the
    1-based closure step that hit it.
    """
    if isinstance(source, TangleDiagram):
        if not close and len(source.open_strands) == 1:
            return vmva(source)
        e = MetaElement(R_CALC, reduced_from_diagram(source))
    else:
        e = source
    for step, lab in enumerate(close, start=1):
        try:
            e = partial_trace(e, lab)
        except LambdaZero as err:
            raise LambdaZero(f"closure step {step} (strand {lab!r}): {err}") from err
    if len(e.labels) != 1:
        raise ShapeError(
            f"after closures, {len(e.labels)} strands remain; need exactly one")
    (label,) = e.labels
    t_l = RationalFunction.var(label)
    return e.full_lambda() / (t_l - RationalFunction.one())
