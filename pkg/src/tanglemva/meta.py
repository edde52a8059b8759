"""Metamonoid engines for the two (scalar, matrix) tangle calculi.

An element is a label-indexed pair (lambda, A) with a separate normalizing
monomial.  Two operation sets live on the same data:

* calculus "R": gluing divides by lambda,

      m^{ab}_c:  lambda' = lambda + A[a,b]
                 A'[c,c] = A[b,a] + (A[a,b]A[b,a] - A[a,a]A[b,b]) / lambda
                 A'[c,x] = A[b,x] + (A[a,b]A[b,x] - A[b,b]A[a,x]) / lambda
                 A'[x,c] = A[x,a] + (A[a,b]A[x,a] - A[a,a]A[x,b]) / lambda
                 A'[x,y] = A[x,y] + (A[a,b]A[x,y] - A[x,b]A[a,y]) / lambda
                 then substitute t_a, t_b -> t_c

  union block-scales (lambda1*lambda2, diag(lambda2*A1, lambda1*A2)), the
  trivial strand is -lambda on the diagonal, and the normalizer scales both
  slots of the pair.

* calculus "Gamma": gluing divides by 1 - A[a,b],

      m^{ab}_c:  lambda' = lambda (1 - A[a,b])
                 A'[c,c] = A[b,a] + A[a,a]A[b,b] / (1 - A[a,b])
                 A'[c,x] = A[b,x] + A[b,b]A[a,x] / (1 - A[a,b])
                 A'[x,c] = A[x,a] + A[a,a]A[x,b] / (1 - A[a,b])
                 A'[x,y] = A[x,y] + A[x,b]A[a,y] / (1 - A[a,b])

  union is plain block diagonal, the trivial strand is +1 on the diagonal,
  and the normalizer scales the lambda slot only.

Deletion (substitute t_a = 1 after dropping the label) and renaming are
shared.  The map F(lambda, A) = (lambda, -lambda * A) carries Gamma-side
elements to R-side elements and intertwines all five operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diagram import Arc, Crossing, Strand, TangleDiagram
from .errors import (
    EngineError,
    GluingUndefined,
    LabelError,
    ParseError,
    ValidationError,
)
from .ring import (
    Mono,
    RationalFunction,
    mono,
    mono_mul,
    mono_substitute,
    render_mono,
    render_rf,
)
from .tmva import ReducedPair

R_CALC = "R"
GAMMA_CALC = "Gamma"


@dataclass(frozen=True, eq=False)
class MetaElement:
    calculus: str
    pair: ReducedPair

    @property
    def labels(self) -> tuple[str, ...]:
        return self.pair.out_labels

    @property
    def lam(self) -> RationalFunction:
        return self.pair.lam

    @property
    def normalizer(self) -> Mono:
        return self.pair.normalizer

    def entry(self, x: str, y: str) -> RationalFunction:
        return self.pair.entry(x, y)

    # -- folded (full) values -------------------------------------------------

    def full_lambda(self) -> RationalFunction:
        return self.lam.mul_mono(self.normalizer)

    def full_entry(self, x: str, y: str) -> RationalFunction:
        v = self.entry(x, y)
        if self.calculus == R_CALC:
            return v.mul_mono(self.normalizer)
        return v

    def at_ones(self) -> tuple[Fraction, dict[tuple[str, str], Fraction]]:
        """Evaluate the full pair at every variable equal to one."""
        grid = {}
        for x in self.labels:
            for y in self.labels:
                grid[(x, y)] = self.full_entry(x, y).eval_ones()
        return self.full_lambda().eval_ones(), grid

    def same_value(self, other: "MetaElement") -> bool:
        """Exact equality of the represented invariant values."""
        if self.calculus != other.calculus:
            return False
        if set(self.labels) != set(other.labels):
            return False
        if self.full_lambda() != other.full_lambda():
            return False
        for x in self.labels:
            for y in self.labels:
                if self.full_entry(x, y) != other.full_entry(x, y):
                    return False
        return True

    def __eq__(self, other):
        if not isinstance(other, MetaElement):
            return NotImplemented
        return self.same_value(other)

    def __repr__(self):
        lam = render_rf(self.lam)
        return (f"MetaElement({self.calculus}, norm={render_mono(self.normalizer)}, "
                f"lam={lam}, labels={list(self.labels)})")

    # -- label bookkeeping -----------------------------------------------------

    def _require(self, *labs: str):
        for lab in labs:
            if lab not in self.labels:
                raise LabelError(f"no strand labelled {lab!r} (have {sorted(self.labels)})")

    def _require_fresh(self, lab: str, allow: tuple[str, ...] = ()):
        if lab in self.labels and lab not in allow:
            raise LabelError(f"label {lab!r} already in use")

    def _rebuild(self, lam, entries, labels, normalizer) -> "MetaElement":
        labels = tuple(sorted(labels))
        entries = {k: v for k, v in entries.items() if not v.is_zero()}
        return MetaElement(self.calculus, ReducedPair(
            lam=lam, a=entries, out_labels=labels, in_labels=labels,
            normalizer=normalizer))

    # -- metamonoid operations ---------------------------------------------------

    def mul(self, a: str, b: str, c: str) -> "MetaElement":
        """Glue the outgoing end of strand a to the incoming end of strand b."""
        self._require(a, b)
        if a == b:
            raise LabelError("gluing a strand to itself is a closure, not a gluing")
        self._require_fresh(c, allow=(a, b))
        lam = self.lam
        al, be = self.entry(a, a), self.entry(a, b)
        ga, de = self.entry(b, a), self.entry(b, b)
        rest = [x for x in self.labels if x not in (a, b)]
        if self.calculus == R_CALC:
            if lam.is_zero():
                raise GluingUndefined("gluing undefined: degree-0 scalar is zero")
            new_lam = lam + be
            div = lam
            def corner():
                return ga + (be * ga - al * de) / div
            def row_c(x):
                return self.entry(b, x) + (be * self.entry(b, x) - de * self.entry(a, x)) / div
            def col_c(x):
                return self.entry(x, a) + (be * self.entry(x, a) - al * self.entry(x, b)) / div
            def bulk(x, y):
                return (self.entry(x, y)
                        + (be * self.entry(x, y) - self.entry(x, b) * self.entry(a, y)) / div)
        else:
            div = RationalFunction.one() - be
            if div.is_zero():
                raise GluingUndefined("gluing undefined: division term 1 - A[a,b] is zero")
            new_lam = lam * div
            def corner():
                return ga + (al * de) / div
            def row_c(x):
                return self.entry(b, x) + (de * self.entry(a, x)) / div
            def col_c(x):
                return self.entry(x, a) + (al * self.entry(x, b)) / div
            def bulk(x, y):
                return self.entry(x, y) + (self.entry(x, b) * self.entry(a, y)) / div

        subst = {a: c, b: c}
        entries: dict[tuple[str, str], RationalFunction] = {}
        entries[(c, c)] = corner().reduced().substitute(subst)
        for x in rest:
            entries[(c, x)] = row_c(x).reduced().substitute(subst)
            entries[(x, c)] = col_c(x).reduced().substitute(subst)
            for y in rest:
                entries[(x, y)] = bulk(x, y).reduced().substitute(subst)
        new_lam = new_lam.reduced().substitute(subst)
        norm = mono_substitute(self.normalizer, subst)
        return self._rebuild(new_lam, entries, rest + [c], norm)

    def union(self, other: "MetaElement") -> "MetaElement":
        if self.calculus != other.calculus:
            raise ValidationError("cannot union elements of different calculi")
        overlap = set(self.labels) & set(other.labels)
        if overlap:
            raise LabelError(f"union requires disjoint labels; both sides have {sorted(overlap)}")
        entries: dict[tuple[str, str], RationalFunction] = {}
        if self.calculus == R_CALC:
            for (x, y), v in self.pair.a.items():
                entries[(x, y)] = other.lam * v
            for (x, y), v in other.pair.a.items():
                entries[(x, y)] = self.lam * v
        else:
            entries.update(self.pair.a)
            entries.update(other.pair.a)
        return self._rebuild(
            self.lam * other.lam, entries,
            list(self.labels) + list(other.labels),
            mono_mul(self.normalizer, other.normalizer))

    def ident(self, a: str) -> "MetaElement":
        """Adjoin a trivially knotted strand labelled ``a``."""
        self._require_fresh(a)
        entries = dict(self.pair.a)
        entries[(a, a)] = (-self.lam) if self.calculus == R_CALC else RationalFunction.one()
        return self._rebuild(self.lam, entries, list(self.labels) + [a], self.normalizer)

    def delete(self, a: str) -> "MetaElement":
        """Remove strand ``a`` and substitute its variable by one."""
        self._require(a)
        rest = [x for x in self.labels if x != a]
        subst = {a: None}
        entries = {}
        for x in rest:
            for y in rest:
                v = self.entry(x, y)
                if not v.is_zero():
                    entries[(x, y)] = v.reduced().substitute(subst)
        lam = self.lam.reduced().substitute(subst)
        return self._rebuild(lam, entries, rest, mono_substitute(self.normalizer, subst))

    def rename(self, a: str, b: str) -> "MetaElement":
        self._require(a)
        if a == b:
            return self
        self._require_fresh(b)
        subst = {a: b}
        entries = {}
        for (x, y), v in self.pair.a.items():
            nx = b if x == a else x
            ny = b if y == a else y
            entries[(nx, ny)] = v.substitute(subst)
        lam = self.lam.substitute(subst)
        labels = [b if x == a else x for x in self.labels]
        return self._rebuild(lam, entries, labels, mono_substitute(self.normalizer, subst))


def empty_element(calculus: str = R_CALC) -> MetaElement:
    return MetaElement(calculus, ReducedPair(
        lam=RationalFunction.one(), a={}, out_labels=(), in_labels=(), normalizer=()))


def generator(kind: str, sign: int, a: str, b: str) -> MetaElement:
    """Crossing value: strand ``a`` passes over strand ``b`` with the given sign."""
    if a == b:
        raise LabelError("a crossing needs two distinct strand labels")
    one = RationalFunction.one()
    t_a = RationalFunction.var(a)
    t_b = RationalFunction.var(b)
    if kind == "rmva":
        norm = mono(a, -1)
        if sign > 0:
            lam = t_a
            entries = {(a, a): -t_a, (b, a): one - t_b, (b, b): -one}
        else:
            lam = one
            entries = {(a, a): -one, (b, a): t_b - one, (b, b): -t_a}
        calc = R_CALC
    elif kind == "ztilde":
        if sign > 0:
            norm = mono(a, 1)
            lam = one
            entries = {(a, a): one, (b, a): (t_b - one) / t_a, (b, b): one / t_a}
        else:
            norm = mono(a, -1)
            lam = one
            entries = {(a, a): one, (b, a): one - t_b, (b, b): t_a}
        calc = GAMMA_CALC
    elif kind == "z":
        norm = ()
        ta_eps = t_a if sign > 0 else one / t_a
        lam = one
        entries = {(a, a): one, (a, b): one - ta_eps, (b, b): ta_eps}
        calc = GAMMA_CALC
    else:
        raise ValidationError(f"unknown generator kind {kind!r}")
    labels = tuple(sorted((a, b)))
    entries = {k: v for k, v in entries.items() if not v.is_zero()}
    return MetaElement(calc, ReducedPair(
        lam=lam, a=entries, out_labels=labels, in_labels=labels, normalizer=norm))


def f_map(e: MetaElement) -> MetaElement:
    """Gamma-side to R-side: (lambda, A) -> (lambda, -lambda * A)."""
    if e.calculus != GAMMA_CALC:
        raise ValidationError("f_map expects a Gamma-calculus element")
    entries = {}
    for (x, y), v in e.pair.a.items():
        w = (-e.lam * v).reduced()
        if not w.is_zero():
            entries[(x, y)] = w
    return MetaElement(R_CALC, ReducedPair(
        lam=e.lam, a=entries, out_labels=e.pair.out_labels,
        in_labels=e.pair.in_labels, normalizer=e.normalizer))


# -- programs -------------------------------------------------------------------

Instruction = tuple


def parse_program(text: str) -> list[Instruction]:
    """One instruction per line: ``gen <kind> <sign> a b``, ``union``,
    ``mul a b -> c``, ``e a``, ``eta a``, ``sigma a -> b``."""
    out: list[Instruction] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        kw = words[0]
        try:
            if kw == "gen":
                kind, sign, a, b = words[1], words[2], words[3], words[4]
                if sign not in "+-":
                    raise ParseError(f"bad crossing sign {sign!r}", lineno)
                out.append(("gen", kind, 1 if sign == "+" else -1, a, b))
            elif kw == "union":
                out.append(("union",))
            elif kw == "mul":
                if words[3] != "->":
                    raise ParseError("expected: mul a b -> c", lineno)
                out.append(("mul", words[1], words[2], words[4]))
            elif kw == "e":
                out.append(("e", words[1]))
            elif kw == "eta":
                out.append(("eta", words[1]))
            elif kw == "sigma":
                if words[2] != "->":
                    raise ParseError("expected: sigma a -> b", lineno)
                out.append(("sigma", words[1], words[3]))
            else:
                raise ParseError(f"unknown instruction {kw!r}", lineno)
        except IndexError:
            raise ParseError(f"truncated {kw!r} instruction", lineno) from None
    return out


def eval_program(program: list[Instruction] | str,
                 calculus: str | None = None) -> MetaElement:
    """Left fold of the instruction list under stack semantics.

    ``gen`` pushes, ``union`` merges the top two elements, everything else
    acts on the top element.  The first failing instruction aborts with its
    (1-based) index in the error message.
    """
    if isinstance(program, str):
        program = parse_program(program)
    stack: list[MetaElement] = []
    for idx, ins in enumerate(program, start=1):
        try:
            op = ins[0]
            if op == "gen":
                _, kind, sign, a, b = ins
                g = generator(kind, sign, a, b)
                if calculus is None:
                    calculus = g.calculus
                elif g.calculus != calculus:
                    raise ValidationError(
                        f"generator {kind!r} lives in the {g.calculus} calculus, "
                        f"but the program runs in {calculus}")
                stack.append(g)
            elif op == "union":
                if len(stack) < 2:
                    raise ValidationError("union needs two elements on the stack")
                top = stack.pop()
                stack.append(stack.pop().union(top))
            else:
                if not stack:
                    if op == "e":
                        stack.append(empty_element(calculus or R_CALC))
                    else:
                        raise ValidationError(f"{op!r} with empty stack")
                top = stack.pop()
                if op == "mul":
                    stack.append(top.mul(ins[1], ins[2], ins[3]))
                elif op == "e":
                    stack.append(top.ident(ins[1]))
                elif op == "eta":
                    stack.append(top.delete(ins[1]))
                elif op == "sigma":
                    stack.append(top.rename(ins[1], ins[2]))
                else:
                    raise ValidationError(f"unknown instruction {op!r}")
        except EngineError as err:
            raise err.__class__(f"instruction {idx}: {err}") from err
    if len(stack) != 1:
        raise ValidationError(f"program left {len(stack)} elements on the stack, wanted 1")
    return stack[0]


# -- diagram assembly of a generator-composition program -------------------------


class _Assembly:
    """Mirror of the stack machine that grows an actual diagram."""

    def __init__(self):
        self.counter = 0
        self.stack: list[dict] = []

    def fresh_arc(self) -> str:
        self.counter += 1
        return f"x{self.counter}"

    @staticmethod
    def _blank() -> dict:
        return {"arcs": [], "strand_of": {}, "crossings": [], "breaks": [],
                "in_end": {}, "out_end": {}}

    def gen(self, sign: int, a: str, b: str):
        st = self._blank()
        a_in, a_out = self.fresh_arc(), self.fresh_arc()
        b_in, b_out = self.fresh_arc(), self.fresh_arc()
        for arc, lab in ((a_in, a), (a_out, a), (b_in, b), (b_out, b)):
            st["arcs"].append(arc)
            st["strand_of"][arc] = lab
        st["breaks"].append((a_out, a_in))
        st["crossings"].append((sign, a_out, b_in, b_out))
        st["in_end"] = {a: a_in, b: b_in}
        st["out_end"] = {a: a_out, b: b_out}
        self.stack.append(st)

    def ident(self, a: str):
        if not self.stack:
            self.stack.append(self._blank())
        st = self.stack[-1]
        if a in st["in_end"]:
            raise LabelError(f"label {a!r} already in use")
        a_in, a_out = self.fresh_arc(), self.fresh_arc()
        st["arcs"] += [a_in, a_out]
        st["strand_of"][a_in] = a
        st["strand_of"][a_out] = a
        st["breaks"].append((a_out, a_in))
        st["in_end"][a] = a_in
        st["out_end"][a] = a_out

    def union(self):
        top = self.stack.pop()
        st = self.stack.pop()
        merged = self._blank()
        for key in ("arcs", "crossings", "breaks"):
            merged[key] = st[key] + top[key]
        for key in ("strand_of", "in_end", "out_end"):
            merged[key] = {**st[key], **top[key]}
        self.stack.append(merged)

    def mul(self, a: str, b: str, c: str):
        st = self.stack[-1]
        if a not in st["out_end"] or b not in st["in_end"]:
            raise LabelError(f"mul needs strands {a!r} and {b!r}")
        glue_arc = st["out_end"][a]
        gone = st["in_end"][b]
        st["arcs"].remove(gone)
        del st["strand_of"][gone]
        st["crossings"] = [
            (sg, glue_arc if o == gone else o,
             glue_arc if ui == gone else ui,
             glue_arc if uo == gone else uo)
            for sg, o, ui, uo in st["crossings"]]
        st["breaks"] = [(n if n != gone else glue_arc, o if o != gone else glue_arc)
                        for n, o in st["breaks"]]
        new_in = st["in_end"][a]
        new_out = st["out_end"][b]
        for lab in (a, b):
            del st["in_end"][lab]
            del st["out_end"][lab]
        st["in_end"][c] = new_in
        st["out_end"][c] = new_out
        relabel = {a: c, b: c}
        st["strand_of"] = {arc: relabel.get(lab, lab)
                           for arc, lab in st["strand_of"].items()}

    def sigma(self, a: str, b: str):
        st = self.stack[-1]
        if a not in st["in_end"]:
            raise LabelError(f"no strand {a!r}")
        if b != a and b in st["in_end"]:
            raise LabelError(f"label {b!r} already in use")
        st["in_end"][b] = st["in_end"].pop(a)
        st["out_end"][b] = st["out_end"].pop(a)
        st["strand_of"] = {arc: (b if lab == a else lab)
                           for arc, lab in st["strand_of"].items()}

    def finish(self) -> TangleDiagram:
        if len(self.stack) != 1:
            raise ValidationError(f"assembly left {len(self.stack)} fragments")
        st = self.stack[0]
        labels = sorted(st["in_end"])
        in_role = {arc for arc in st["in_end"].values()}
        out_role = {arc for arc in st["out_end"].values()}
        arcs = []
        for arc in st["arcs"]:
            role = "in" if arc in in_role else ("out" if arc in out_role else "internal")
            arcs.append(Arc(arc, st["strand_of"][arc], role))
        return TangleDiagram(
            strands=tuple(Strand(l) for l in labels),
            arcs=tuple(arcs),
            crossings=tuple(Crossing(sg, o, ui, uo)
                            for sg, o, ui, uo in st["crossings"]),
            breaks=tuple(st["breaks"]),
            in_order=tuple(st["in_end"][l] for l in labels),
            out_order=tuple(st["out_end"][l] for l in labels),
        )


def assemble_diagram(program: list[Instruction] | str):
    """Build the tangle diagram a generator-composition program describes.

    Supports gen/union/mul/e/sigma; deletion has no local diagram analogue
    here and is rejected.
    """
    if isinstance(program, str):
        program = parse_program(program)
    asm = _Assembly()
    for idx, ins in enumerate(program, start=1):
        try:
            op = ins[0]
            if op == "gen":
                asm.gen(ins[2], ins[3], ins[4])
            elif op == "union":
                asm.union()
            elif op == "mul":
                asm.mul(ins[1], ins[2], ins[3])
            elif op == "e":
                asm.ident(ins[1])
            elif op == "sigma":
                asm.sigma(ins[1], ins[2])
            else:
                raise ValidationError(f"instruction {op!r} has no diagram assembly")
        except EngineError as err:
            raise err.__class__(f"instruction {idx}: {err}") from err
    return asm.finish()
