"""The full wedge-coefficient invariant and its degree-(0,1) reduction.

For an n-strand diagram the full invariant is a normalizing monomial, a
choice of ordering w of the outgoing arcs, and one exact minor determinant
per pair (kept-out subset, taken-in subset) of boundary columns.  The
degree-0 scalar and the n x n degree-1 matrix determine everything else
whenever the scalar is nonzero:

    det M^{[n] \\ {i_1..i_k}; j_1..j_k}
        = (-1)^{nk - k(k-1)/2 - sum(i)} * det(A[i rows, j cols]) / lambda^{k-1}

so the pair (lambda, A) plus the normalizer is the compact reduced form.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from .alexander import AlexanderMatrix, MinorSpec, build_matrix, det_exact, minor_det
from .diagram import TangleDiagram, mu_counts
from .errors import LambdaZero, ShapeError
from .ring import (
    Mono,
    RationalFunction,
    mono,
    mono_mul,
    parse_rf,
    render_mono,
    render_rf,
)


def normalizer_mono(d: TangleDiagram) -> Mono:
    """The monomial prod_s t_s^(-mu(s)/2) as a half-step exponent vector."""
    out: Mono = ()
    for lab, k in sorted(mu_counts(d).items()):
        if k:
            out = mono_mul(out, mono(lab, -k))
    return out


@dataclass(frozen=True, eq=False)
class AhdElement:
    """Normalizer, wedge ordering, and the sparse coefficient table."""

    normalizer: Mono
    w_order: tuple[str, ...]            # outgoing arc ids, fixing w
    in_arcs: tuple[str, ...]
    out_strands: tuple[str, ...]        # strand of each outgoing / incoming arc
    in_strands: tuple[str, ...]
    coeffs: dict[tuple[tuple[int, ...], tuple[int, ...]], RationalFunction]

    @property
    def n(self) -> int:
        return len(self.w_order)

    def coeff(self, kept_out, taken_in) -> RationalFunction:
        return self.coeffs.get((tuple(kept_out), tuple(taken_in)),
                               RationalFunction.zero())

    def __eq__(self, other) -> bool:
        if not isinstance(other, AhdElement):
            return NotImplemented
        return (self.normalizer == other.normalizer
                and self.w_order == other.w_order
                and self.coeffs == other.coeffs)

    def to_json(self) -> str:
        items = []
        for (io, ji) in sorted(self.coeffs):
            items.append({
                "out": list(io),
                "in": list(ji),
                "value": render_rf(self.coeffs[(io, ji)]),
            })
        return json.dumps({
            "normalizer": render_mono(self.normalizer),
            "w_order": list(self.w_order),
            "in_arcs": list(self.in_arcs),
            "out_strands": list(self.out_strands),
            "in_strands": list(self.in_strands),
            "coeffs": items,
        }, indent=2)

    @staticmethod
    def from_json(text: str) -> "AhdElement":
        from .ring import parse_poly
        data = json.loads(text)
        norm = parse_poly(data["normalizer"])
        nm = next(iter(norm.terms)) if norm.terms else ()
        coeffs = {}
        for item in data["coeffs"]:
            coeffs[(tuple(item["out"]), tuple(item["in"]))] = parse_rf(item["value"])
        return AhdElement(
            normalizer=nm,
            w_order=tuple(data["w_order"]),
            in_arcs=tuple(data["in_arcs"]),
            out_strands=tuple(data["out_strands"]),
            in_strands=tuple(data["in_strands"]),
            coeffs=coeffs,
        )


@dataclass(frozen=True, eq=False)
class ReducedPair:
    """Degree-0 scalar and label-indexed degree-1 matrix, normalizer apart."""

    lam: RationalFunction
    a: dict[tuple[str, str], RationalFunction]
    out_labels: tuple[str, ...]
    in_labels: tuple[str, ...]
    normalizer: Mono = ()
    w_order: tuple[str, ...] | None = None   # boundary arc ids when diagram-born
    in_arcs: tuple[str, ...] | None = None

    @property
    def n(self) -> int:
        return len(self.out_labels)

    def entry(self, out_label: str, in_label: str) -> RationalFunction:
        return self.a.get((out_label, in_label), RationalFunction.zero())

    def entry_pos(self, i: int, j: int) -> RationalFunction:
        """1-based positional access in the stored orders."""
        return self.entry(self.out_labels[i - 1], self.in_labels[j - 1])


def check_tmva_scope(d: TangleDiagram) -> int:
    n = len(d.open_strands)
    closed = len(d.strands) - n
    if closed and n >= 2:
        raise ShapeError(
            "closed components are only supported on 1-tangles here; "
            f"got {n} open strands and {closed} closed components")
    return n


def compute_tmva(d: TangleDiagram, matrix: AlexanderMatrix | None = None) -> AhdElement:
    """Every boundary-minor determinant of the diagram's matrix, exactly.

    The coefficients are independent of one another; the matrix's shared
    determinant cache is an optimization only, so mapping over the minor
    specs concurrently is safe (a cache miss merely recomputes a value).
    """
    n = check_tmva_scope(d)
    m = matrix if matrix is not None else build_matrix(d)
    coeffs = {}
    allpos = range(1, n + 1)
    for k in range(0, n + 1):
        for kept in combinations(allpos, n - k):
            for taken in combinations(allpos, k):
                val = minor_det(m, MinorSpec(kept, taken))
                if not val.is_zero():
                    coeffs[(kept, taken)] = val
    return AhdElement(
        normalizer=normalizer_mono(d),
        w_order=d.out_order,
        in_arcs=d.in_order,
        out_strands=tuple(d.arc(a).strand for a in d.out_order),
        in_strands=tuple(d.arc(a).strand for a in d.in_order),
        coeffs=coeffs,
    )


def hodge_reduce(e: AhdElement) -> ReducedPair:
    """Degree 0 and 1 of the coefficient table: lambda and the signed matrix."""
    n = e.n
    allpos = tuple(range(1, n + 1))
    lam = e.coeff(allpos, ())
    a: dict[tuple[str, str], RationalFunction] = {}
    for i in range(1, n + 1):
        kept = tuple(p for p in allpos if p != i)
        for j in range(1, n + 1):
            v = e.coeff(kept, (j,))
            if (n - i) % 2 == 1:
                v = -v
            if not v.is_zero():
                a[(e.out_strands[i - 1], e.in_strands[j - 1])] = v
    return ReducedPair(
        lam=lam,
        a=a,
        out_labels=e.out_strands,
        in_labels=e.in_strands,
        normalizer=e.normalizer,
        w_order=e.w_order,
        in_arcs=e.in_arcs,
    )


def reduced_from_diagram(d: TangleDiagram) -> ReducedPair:
    """Direct degree-(0,1) computation: only 1 + n^2 minors, shared cache."""
    n = check_tmva_scope(d)
    m = build_matrix(d)
    allpos = tuple(range(1, n + 1))
    lam = minor_det(m, MinorSpec(allpos, ()))
    out_strands = tuple(d.arc(a).strand for a in d.out_order)
    in_strands = tuple(d.arc(a).strand for a in d.in_order)
    a: dict[tuple[str, str], RationalFunction] = {}
    for i in range(1, n + 1):
        kept = tuple(p for p in allpos if p != i)
        for j in range(1, n + 1):
            v = minor_det(m, MinorSpec(kept, (j,)))
            if (n - i) % 2 == 1:
                v = -v
            if not v.is_zero():
                a[(out_strands[i - 1], in_strands[j - 1])] = v
    return ReducedPair(
        lam=lam, a=a,
        out_labels=out_strands, in_labels=in_strands,
        normalizer=normalizer_mono(d),
        w_order=d.out_order, in_arcs=d.in_order,
    )


def reconstruct_minor(p: ReducedPair, i_set, j_set) -> RationalFunction:
    """Signed A-minor over lambda^(k-1); inverts the degree-(0,1) reduction."""
    i_set = tuple(i_set)
    j_set = tuple(j_set)
    if len(i_set) != len(j_set):
        raise ShapeError("row and column index sets must have the same size")
    k = len(i_set)
    if k == 0:
        return p.lam
    n = p.n
    if sorted(set(i_set)) != list(i_set) or sorted(set(j_set)) != list(j_set):
        raise ShapeError("index sets must be strictly increasing")
    if not all(1 <= i <= n for i in i_set + j_set):
        raise ShapeError(f"indices outside 1..{n}")
    if k >= 2 and p.lam.is_zero():
        raise LambdaZero("reconstruction undefined when the degree-0 scalar is zero")
    sub = [[p.entry_pos(i, j) for j in j_set] for i in i_set]
    det = det_exact(sub)
    sign = (-1) ** (n * k - (k - 1) * k // 2 - sum(i_set))
    val = det if sign > 0 else -det
    if k >= 2:
        val = val / (p.lam ** (k - 1))
    return val


def reconstruct_full(p: ReducedPair) -> AhdElement:
    """Rebuild the whole coefficient table from (lambda, A)."""
    if p.lam.is_zero():
        raise LambdaZero("full reconstruction needs a nonzero degree-0 scalar")
    if p.w_order is None or p.in_arcs is None:
        raise ShapeError("pair carries no boundary-arc ordering to reconstruct against")
    n = p.n
    allpos = range(1, n + 1)
    coeffs = {}
    for k in range(0, n + 1):
        for i_set in combinations(allpos, k):
            kept = tuple(i for i in allpos if i not in i_set)
            for j_set in combinations(allpos, k):
                val = reconstruct_minor(p, i_set, j_set)
                if not val.is_zero():
                    coeffs[(kept, j_set)] = val.reduced()
    return AhdElement(
        normalizer=p.normalizer,
        w_order=p.w_order,
        in_arcs=p.in_arcs,
        out_strands=p.out_labels,
        in_strands=p.in_labels,
        coeffs=coeffs,
    )
