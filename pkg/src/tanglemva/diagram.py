"""Combinatorial model of an oriented virtual tangle diagram.

A diagram is a set of labelled strands, a set of arcs (strand segments cut at
undercrossings or at the boundary), a crossing list, and explicit arc breaks.
Virtuality needs no planarity data: only the incidence structure matters.

Text format, one statement per line ('#' comments, ';' also separates
statements)::

    strand <label> open|closed
    arc <arc-id> on <strand-label> role internal|in|out
    xing +|- over <arc> under <arc> -> <arc>
    break <old-arc> as <new-arc>
    order in <arc> <arc> ...
    order out <arc> <arc> ...

Each crossing row of the eventual matrix is indexed by the arc the understrand
leaves on, so every internal/outgoing arc must be produced by exactly one
crossing or break.  A strand may cross itself, and a closed strand passing
under only once has the same arc entering and leaving that crossing.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import ParseError, UnknownArc, ValidationError

ROLE_INTERNAL = "internal"
ROLE_IN = "in"
ROLE_OUT = "out"


@dataclass(frozen=True)
class Strand:
    label: str
    closed: bool = False


@dataclass(frozen=True)
class Arc:
    id: str
    strand: str
    role: str  # internal | in | out


@dataclass(frozen=True)
class Crossing:
    sign: int  # +1 or -1
    over_arc: str
    under_in: str
    under_out: str


@dataclass(frozen=True)
class TangleDiagram:
    strands: tuple[Strand, ...]
    arcs: tuple[Arc, ...]
    crossings: tuple[Crossing, ...]
    breaks: tuple[tuple[str, str], ...] = ()  # (new_arc, old_arc)
    in_order: tuple[str, ...] = ()
    out_order: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "_arc_by_id", {a.id: a for a in self.arcs})
        object.__setattr__(self, "_strand_by_label", {s.label: s for s in self.strands})
        if not self.in_order:
            object.__setattr__(
                self, "in_order",
                tuple(sorted(a.id for a in self.arcs if a.role == ROLE_IN)))
        if not self.out_order:
            object.__setattr__(
                self, "out_order",
                tuple(sorted(a.id for a in self.arcs if a.role == ROLE_OUT)))
        self._validate()

    # -- lookups -----------------------------------------------------------

    def arc(self, arc_id: str) -> Arc:
        try:
            return self._arc_by_id[arc_id]
        except KeyError:
            raise UnknownArc(f"unknown arc {arc_id!r}") from None

    def strand(self, label: str) -> Strand:
        try:
            return self._strand_by_label[label]
        except KeyError:
            raise ValidationError(f"unknown strand {label!r}") from None

    def over_strand(self, x: Crossing) -> str:
        return self.arc(x.over_arc).strand

    def under_strand(self, x: Crossing) -> str:
        return self.arc(x.under_in).strand

    @property
    def open_strands(self) -> tuple[Strand, ...]:
        return tuple(s for s in self.strands if not s.closed)

    @property
    def internal_arcs(self) -> tuple[str, ...]:
        return tuple(a.id for a in self.arcs if a.role == ROLE_INTERNAL)

    # -- validation ----------------------------------------------------------

    def _validate(self):
        labels = [s.label for s in self.strands]
        if len(set(labels)) != len(labels):
            raise ValidationError("duplicate strand label")
        ids = [a.id for a in self.arcs]
        if len(set(ids)) != len(ids):
            raise ValidationError("duplicate arc id")
        for a in self.arcs:
            if a.strand not in self._strand_by_label:
                raise ValidationError(f"arc {a.id!r} on unknown strand {a.strand!r}")
            if a.role not in (ROLE_INTERNAL, ROLE_IN, ROLE_OUT):
                raise ValidationError(f"arc {a.id!r} has bad role {a.role!r}")
            if a.role != ROLE_INTERNAL and self._strand_by_label[a.strand].closed:
                raise ValidationError(f"boundary arc {a.id!r} on closed strand {a.strand!r}")
        # every internal/outgoing arc is emitted by exactly one crossing or break
        origins: dict[str, str] = {}
        for i, x in enumerate(self.crossings):
            for aid in (x.over_arc, x.under_in, x.under_out):
                self.arc(aid)
            if self.arc(x.under_in).strand != self.arc(x.under_out).strand:
                raise ValidationError(
                    f"crossing {i}: under arcs {x.under_in!r}/{x.under_out!r} on different strands")
            if x.under_in == x.under_out and not self.strand(self.arc(x.under_in).strand).closed:
                raise ValidationError(
                    f"crossing {i}: under arc {x.under_in!r} re-enters but its strand is open")
            if x.under_out in origins:
                raise ValidationError(f"arc {x.under_out!r} leaves more than one crossing/break")
            # a closed one-arc loop may be its own under_out; it has no origin row twice
            origins[x.under_out] = "xing"
        for new, old in self.breaks:
            self.arc(new)
            self.arc(old)
            if self.arc(new).strand != self.arc(old).strand:
                raise ValidationError(f"break {new!r}/{old!r} spans two strands")
            if new in origins:
                raise ValidationError(f"arc {new!r} leaves more than one crossing/break")
            origins[new] = "break"
        ends: dict[str, int] = {}
        for x in self.crossings:
            ends[x.under_in] = ends.get(x.under_in, 0) + 1
        for _, old in self.breaks:
            ends[old] = ends.get(old, 0) + 1
        for a in self.arcs:
            if a.role != ROLE_IN and a.id not in origins:
                raise ValidationError(f"dangling arc {a.id!r}: nothing produces it")
            if a.role == ROLE_IN and a.id in origins:
                raise ValidationError(f"incoming arc {a.id!r} is produced by a {origins[a.id]}")
            consumed = ends.get(a.id, 0)
            if a.role == ROLE_OUT and consumed:
                raise ValidationError(f"outgoing arc {a.id!r} runs into a crossing or break")
            if a.role != ROLE_OUT and consumed != 1:
                raise ValidationError(
                    f"arc {a.id!r} must end at exactly one crossing or break (got {consumed})")
        # boundary bookkeeping: one in and one out arc per open strand
        for s in self.open_strands:
            ins = [a.id for a in self.arcs if a.strand == s.label and a.role == ROLE_IN]
            outs = [a.id for a in self.arcs if a.strand == s.label and a.role == ROLE_OUT]
            if len(ins) != 1 or len(outs) != 1:
                raise ValidationError(
                    f"open strand {s.label!r} must have exactly one incoming and one "
                    f"outgoing arc (got {len(ins)}/{len(outs)})")
        in_ids = {a.id for a in self.arcs if a.role == ROLE_IN}
        out_ids = {a.id for a in self.arcs if a.role == ROLE_OUT}
        if set(self.in_order) != in_ids or len(self.in_order) != len(in_ids):
            raise ValidationError("order in must list each incoming arc exactly once")
        if set(self.out_order) != out_ids or len(self.out_order) != len(out_ids):
            raise ValidationError("order out must list each outgoing arc exactly once")


def mu_counts(d: TangleDiagram) -> dict[str, int]:
    """Overcrossing count per strand: mu(s) drives the normalizing factor."""
    mu = {s.label: 0 for s in d.strands}
    for x in d.crossings:
        mu[d.over_strand(x)] += 1
    return mu


def skeleton(d: TangleDiagram) -> dict[int, int]:
    """Endpoint permutation: incoming boundary position -> outgoing position."""
    out_pos = {}
    for j, aid in enumerate(d.out_order, start=1):
        out_pos[d.arc(aid).strand] = j
    perm = {}
    for i, aid in enumerate(d.in_order, start=1):
        s = d.arc(aid).strand
        if s not in out_pos:
            raise ValidationError(f"strand {s!r} has an incoming arc but no outgoing arc")
        perm[i] = out_pos[s]
    return perm


def break_arc(d: TangleDiagram, arc_id: str, new_id: str | None = None) -> TangleDiagram:
    """Split ``arc_id`` into two arcs joined by a unit break row.

    The fresh arc takes over the tail of the old one: its undercrossing exit
    (as under_in) or its outgoing boundary role.  Over-arc references stay on
    the old arc.  Fresh ids count up deterministically (brk0, brk1, ...).
    """
    old = d.arc(arc_id)
    if new_id is None:
        taken = {a.id for a in d.arcs}
        k = 0
        while f"brk{k}" in taken:
            k += 1
        new_id = f"brk{k}"
    elif any(a.id == new_id for a in d.arcs):
        raise ValidationError(f"arc id {new_id!r} already in use")

    consumed = (any(x.under_in == arc_id for x in d.crossings)
                or any(o == arc_id for _, o in d.breaks))
    if old.role == ROLE_OUT or (old.role == ROLE_IN and not consumed):
        new_role = ROLE_OUT
    else:
        new_role = ROLE_INTERNAL
    old_role = old.role if old.role == ROLE_IN else ROLE_INTERNAL

    arcs = []
    for a in d.arcs:
        if a.id == arc_id:
            arcs.append(replace(a, role=old_role))
        else:
            arcs.append(a)
    arcs.append(Arc(new_id, old.strand, new_role))

    # the fresh arc takes over whatever the old arc flowed into
    crossings = []
    for x in d.crossings:
        under_in = new_id if x.under_in == arc_id else x.under_in
        crossings.append(replace(x, under_in=under_in))
    breaks = [(n, new_id if o == arc_id else o) for n, o in d.breaks]

    out_order = list(d.out_order)
    if old.role == ROLE_OUT:
        out_order[out_order.index(arc_id)] = new_id
    elif new_role == ROLE_OUT:
        out_order.append(new_id)

    return TangleDiagram(
        strands=d.strands,
        arcs=tuple(arcs),
        crossings=tuple(crossings),
        breaks=tuple(breaks) + ((new_id, arc_id),),
        in_order=d.in_order,
        out_order=tuple(out_order),
    )


# -- text format ---------------------------------------------------------------


def parse_diagram(text: str) -> TangleDiagram:
    strands: list[Strand] = []
    arcs: list[Arc] = []
    crossings: list[Crossing] = []
    breaks: list[tuple[str, str]] = []
    in_order: list[str] = []
    out_order: list[str] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        for stmt in line.split(";"):
            words = stmt.split()
            if not words:
                continue
            kw = words[0]
            try:
                if kw == "strand":
                    label, kind = words[1], words[2]
                    if kind not in ("open", "closed"):
                        raise ParseError(f"strand kind must be open|closed, got {kind!r}", lineno)
                    strands.append(Strand(label, closed=(kind == "closed")))
                elif kw == "arc":
                    if words[2] != "on" or words[4] != "role":
                        raise ParseError("expected: arc <id> on <strand> role <role>", lineno)
                    arcs.append(Arc(words[1], words[3], words[5]))
                elif kw == "xing":
                    if len(words) != 8:
                        raise ParseError("expected: xing +|- over <arc> under <arc> -> <arc>", lineno)
                    sign_tok, kw_over, over, kw_under, uin, arrow, uout = words[1:8]
                    if (sign_tok not in "+-" or kw_over != "over"
                            or kw_under != "under" or arrow != "->"):
                        raise ParseError("expected: xing +|- over <arc> under <arc> -> <arc>", lineno)
                    crossings.append(Crossing(1 if sign_tok == "+" else -1, over, uin, uout))
                elif kw == "break":
                    if words[2] != "as":
                        raise ParseError("expected: break <old> as <new>", lineno)
                    breaks.append((words[3], words[1]))
                elif kw == "order":
                    if words[1] == "in":
                        in_order = words[2:]
                    elif words[1] == "out":
                        out_order = words[2:]
                    else:
                        raise ParseError("expected: order in|out <arcs...>", lineno)
                else:
                    raise ParseError(f"unknown statement {kw!r}", lineno)
            except IndexError:
                raise ParseError(f"truncated {kw!r} statement", lineno) from None

    return TangleDiagram(
        strands=tuple(strands),
        arcs=tuple(arcs),
        crossings=tuple(crossings),
        breaks=tuple(breaks),
        in_order=tuple(in_order),
        out_order=tuple(out_order),
    )


def serialize_diagram(d: TangleDiagram) -> str:
    lines = []
    for s in d.strands:
        lines.append(f"strand {s.label} {'closed' if s.closed else 'open'}")
    for a in d.arcs:
        lines.append(f"arc {a.id} on {a.strand} role {a.role}")
    for x in d.crossings:
        sign = "+" if x.sign > 0 else "-"
        lines.append(f"xing {sign} over {x.over_arc} under {x.under_in} -> {x.under_out}")
    for new, old in d.breaks:
        lines.append(f"break {old} as {new}")
    lines.append("order in " + " ".join(d.in_order))
    lines.append("order out " + " ".join(d.out_order))
    return "\n".join(lines) + "\n"
