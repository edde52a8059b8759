"""Alexander matrix of a tangle diagram and exact determinants of its minors.

The matrix has one row per crossing (indexed by the arc the understrand
leaves on) and one row per break; columns are all arcs, partitioned
internal | outgoing | incoming.  Crossing rows accumulate

    positive:  over +=  1 - t_under,  under_in += -1,       under_out += t_over
    negative:  over +=  t_under - 1,  under_in += -t_over,  under_out += 1

(accumulation matters when the same arc plays two parts, e.g. a closed strand
passing under exactly once).  Minor determinants share one memo across the
whole minor family: every requested determinant expands recursively along the
sparsest row or column, and subproblems are cached by (rows, cols), which
overlap heavily between minors of the same matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import ROLE_INTERNAL, TangleDiagram
from .errors import ShapeError, ValidationError
from .ring import LaurentPoly, RationalFunction, render_poly


@dataclass(frozen=True)
class MinorSpec:
    """Column selection: keep the listed outgoing indices, take the listed
    incoming indices (both 1-based, strictly increasing)."""
    kept_out: tuple[int, ...]
    taken_in: tuple[int, ...]

    def __post_init__(self):
        if list(self.kept_out) != sorted(set(self.kept_out)):
            raise ShapeError("kept_out must be strictly increasing")
        if list(self.taken_in) != sorted(set(self.taken_in)):
            raise ShapeError("taken_in must be strictly increasing")


class AlexanderMatrix:
    """Sparse arc-indexed matrix with a shared determinant cache."""

    def __init__(self, row_labels, internal_cols, out_cols, in_cols, entries):
        self.row_labels: tuple[str, ...] = tuple(row_labels)
        self.internal_cols: tuple[str, ...] = tuple(internal_cols)
        self.out_cols: tuple[str, ...] = tuple(out_cols)
        self.in_cols: tuple[str, ...] = tuple(in_cols)
        self.entries: dict[tuple[str, str], LaurentPoly] = entries
        self.col_labels: tuple[str, ...] = self.internal_cols + self.out_cols + self.in_cols
        self._rows_by_col: dict[str, tuple[str, ...]] = {}
        for c in self.col_labels:
            self._rows_by_col[c] = tuple(r for r in self.row_labels if (r, c) in entries)
        self._cols_by_row: dict[str, tuple[str, ...]] = {}
        for r in self.row_labels:
            self._cols_by_row[r] = tuple(c for c in self.col_labels if (r, c) in entries)
        self._det_memo: dict[tuple, LaurentPoly] = {}

    @property
    def n(self) -> int:
        return len(self.out_cols)

    def entry(self, row: str, col: str) -> LaurentPoly:
        return self.entries.get((row, col), LaurentPoly.zero())

    # -- determinants --------------------------------------------------------

    def _det(self, rows: tuple[str, ...], cols: tuple[str, ...]) -> LaurentPoly:
        if not rows:
            return LaurentPoly.one()
        key = (rows, cols)
        got = self._det_memo.get(key)
        if got is not None:
            return got
        rowset = set(rows)
        colset = set(cols)
        # expand along the sparsest line (row or column)
        best_col, best_col_n = None, None
        for c in cols:
            k = sum(1 for r in self._rows_by_col[c] if r in rowset)
            if best_col_n is None or k < best_col_n:
                best_col, best_col_n = c, k
                if k == 0:
                    break
        best_row, best_row_n = None, None
        if best_col_n:
            for r in rows:
                k = sum(1 for c in self._cols_by_row[r] if c in colset)
                if best_row_n is None or k < best_row_n:
                    best_row, best_row_n = r, k
                    if k == 0:
                        break
        acc = LaurentPoly.zero()
        if best_col_n == 0 or best_row_n == 0:
            pass
        elif best_col_n is not None and (best_row_n is None or best_col_n <= best_row_n):
            c = best_col
            j = cols.index(c)
            rest_cols = cols[:j] + cols[j + 1:]
            for i, r in enumerate(rows):
                e = self.entries.get((r, c))
                if e is None:
                    continue
                sub = self._det(rows[:i] + rows[i + 1:], rest_cols)
                term = e * sub
                acc = acc + (term if (i + j) % 2 == 0 else -term)
        else:
            r = best_row
            i = rows.index(r)
            rest_rows = rows[:i] + rows[i + 1:]
            for j, c in enumerate(cols):
                e = self.entries.get((r, c))
                if e is None:
                    continue
                sub = self._det(rest_rows, cols[:j] + cols[j + 1:])
                term = e * sub
                acc = acc + (term if (i + j) % 2 == 0 else -term)
        self._det_memo[key] = acc
        return acc

    def minor_poly(self, spec: MinorSpec) -> LaurentPoly:
        n = self.n
        for i in spec.kept_out:
            if not 1 <= i <= n:
                raise ShapeError(f"out index {i} outside 1..{n}")
        for j in spec.taken_in:
            if not 1 <= j <= len(self.in_cols):
                raise ShapeError(f"in index {j} outside 1..{len(self.in_cols)}")
        cols = (self.internal_cols
                + tuple(self.out_cols[i - 1] for i in spec.kept_out)
                + tuple(self.in_cols[j - 1] for j in spec.taken_in))
        if len(cols) != len(self.row_labels):
            raise ShapeError(
                f"minor is {len(self.row_labels)}x{len(cols)}, not square")
        return self._det(self.row_labels, cols)

    def dump(self) -> str:
        """Labelled entry grid, handy for diffing against reference matrices."""
        cols = self.col_labels
        widths = [max(len(c), *(len(render_poly(self.entry(r, c))) for r in self.row_labels))
                  if self.row_labels else len(c) for c in cols]
        head = " " * 6 + "  ".join(c.rjust(w) for c, w in zip(cols, widths))
        lines = [head]
        for r in self.row_labels:
            cells = "  ".join(render_poly(self.entry(r, c)).rjust(w)
                              for c, w in zip(cols, widths))
            lines.append(f"{r:>5} {cells}")
        return "\n".join(lines) + "\n"


def minor_det(m: AlexanderMatrix, spec: MinorSpec) -> RationalFunction:
    return RationalFunction(m.minor_poly(spec))


def build_matrix(d: TangleDiagram) -> AlexanderMatrix:
    entries: dict[tuple[str, str], LaurentPoly] = {}

    def add(row: str, col: str, val: LaurentPoly):
        cur = entries.get((row, col))
        new = val if cur is None else cur + val
        if new.is_zero():
            entries.pop((row, col), None)
        else:
            entries[(row, col)] = new

    one = LaurentPoly.one()
    for x in d.crossings:
        t_over = LaurentPoly.var(d.over_strand(x))
        t_under = LaurentPoly.var(d.under_strand(x))
        row = x.under_out
        if x.sign > 0:
            add(row, x.over_arc, one - t_under)
            add(row, x.under_in, -one)
            add(row, x.under_out, t_over)
        else:
            add(row, x.over_arc, t_under - one)
            add(row, x.under_in, -t_over)
            add(row, x.under_out, one)
    for new, old in d.breaks:
        add(new, new, one)
        add(new, old, -one)

    internal = tuple(a.id for a in d.arcs if a.role == ROLE_INTERNAL)
    rows = internal + d.out_order
    m = AlexanderMatrix(rows, internal, d.out_order, d.in_order, entries)

    # column relation: sum over arcs of (t_strand - 1) * column = 0, rowwise
    for r in rows:
        acc = LaurentPoly.zero()
        for c in m._cols_by_row[r]:
            t_s = LaurentPoly.var(d.arc(c).strand)
            acc = acc + (t_s - one) * m.entry(r, c)
        if not acc.is_zero():
            raise ValidationError(
                f"column relation fails on row {r!r}; crossing data is inconsistent")
    return m


# -- generic exact determinant over the fraction field -------------------------


def det_exact(rows: list[list[RationalFunction]]) -> RationalFunction:
    """Exact determinant of a dense matrix of rational functions.

    Cofactor expansion up to 4x4; above that, clear each row to a common
    polynomial denominator and run fraction-free Bareiss elimination.
    """
    n = len(rows)
    for r in rows:
        if len(r) != n:
            raise ShapeError(f"determinant of a {n}x{len(r)} matrix")
    if n == 0:
        return RationalFunction.one()
    if n <= 4:
        return _det_cofactor(rows)
    polys: list[list[LaurentPoly]] = []
    scale = RationalFunction.one()
    for r in rows:
        common = LaurentPoly.one()
        for e in r:
            common = common * e.den
        polys.append([e.num * common.exact_div(e.den) for e in r])
        scale = scale * RationalFunction(LaurentPoly.one(), common)
    return RationalFunction(_det_bareiss(polys)) * scale


def _det_cofactor(rows: list[list[RationalFunction]]) -> RationalFunction:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    # expand along the sparsest column
    counts = [sum(0 if rows[i][j].is_zero() else 1 for i in range(n)) for j in range(n)]
    j = counts.index(min(counts))
    acc = RationalFunction.zero()
    for i in range(n):
        if rows[i][j].is_zero():
            continue
        sub = [[rows[k][l] for l in range(n) if l != j] for k in range(n) if k != i]
        term = rows[i][j] * _det_cofactor(sub)
        acc = acc + (term if (i + j) % 2 == 0 else -term)
    return acc


def _det_bareiss(m: list[list[LaurentPoly]]) -> LaurentPoly:
    """Fraction-free Bareiss; every division is exact by Sylvester's identity."""
    n = len(m)
    m = [row[:] for row in m]
    sign = 1
    prev = LaurentPoly.one()
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return LaurentPoly.zero()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = num.exact_div(prev)
            m[i][k] = LaurentPoly.zero()
        prev = m[k][k]
    out = m[n - 1][n - 1]
    return out if sign > 0 else -out
