"""Exact arithmetic for multivariate Laurent polynomials and their fractions.

Every strand label ``a`` owns one formal variable.  Half-integer powers of
that variable must stay exact, so internally an exponent counts *half steps*:
stored exponent ``2k`` is the ordinary power ``k`` and stored exponent ``1``
is the square root.  All exponents are plain ints and all coefficients are
``fractions.Fraction``; no floating point enters the core.

A monomial is a sorted tuple of ``(label, half_exponent)`` pairs with no zero
exponents; a polynomial is a dict mapping monomials to nonzero coefficients
(the zero polynomial is the empty dict).  Fractions of polynomials are kept
unreduced (multivariate gcd is deliberately avoided); equality is decided by
cross-multiplication, and an opportunistic exact-division reduction is
available where results are known to be polynomial.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import cmp_to_key
from math import gcd

from .errors import DivisionByZero, EvalPole, NotDivisible, ParseError

Mono = tuple[tuple[str, int], ...]

ONE_MONO: Mono = ()


def mono(label: str, half_exp: int = 2) -> Mono:
    """Monomial in a single label; the default exponent is the first power."""
    if half_exp == 0:
        return ONE_MONO
    return ((label, half_exp),)


def mono_mul(m1: Mono, m2: Mono) -> Mono:
    if not m1:
        return m2
    if not m2:
        return m1
    exps = dict(m1)
    for lab, e in m2:
        ne = exps.get(lab, 0) + e
        if ne:
            exps[lab] = ne
        else:
            del exps[lab]
    return tuple(sorted(exps.items()))


def mono_inv(m: Mono) -> Mono:
    return tuple((lab, -e) for lab, e in m)


def mono_substitute(m: Mono, mapping: dict[str, str | None]) -> Mono:
    """Rename labels; a ``None`` target sets that variable to one."""
    exps: dict[str, int] = {}
    for lab, e in m:
        tgt = mapping.get(lab, lab)
        if tgt is None:
            continue
        ne = exps.get(tgt, 0) + e
        if ne:
            exps[tgt] = ne
        else:
            del exps[tgt]
    return tuple(sorted(exps.items()))


def _mono_cmp(m1: Mono, m2: Mono) -> int:
    """Graded lexicographic order on exponent vectors (labels sorted by name).

    Must be compatible with multiplication: shifting both arguments by a
    common monomial preserves the comparison, which exact division relies on.
    """
    d1 = sum(e for _, e in m1)
    d2 = sum(e for _, e in m2)
    if d1 != d2:
        return -1 if d1 < d2 else 1
    e1 = dict(m1)
    e2 = dict(m2)
    for lab in sorted(set(e1) | set(e2)):
        a = e1.get(lab, 0)
        b = e2.get(lab, 0)
        if a != b:
            return -1 if a < b else 1
    return 0


mono_key = cmp_to_key(_mono_cmp)


def render_mono(m: Mono) -> str:
    if not m:
        return "1"
    parts = []
    for lab, e in m:
        if e == 2:
            parts.append(lab)
        elif e % 2 == 0:
            parts.append(f"{lab}^{e // 2}")
        else:
            parts.append(f"{lab}^({e}/2)")
    return "*".join(parts)


class LaurentPoly:
    """Sparse Laurent polynomial with exact rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Mono, Fraction] | None = None):
        self.terms: dict[Mono, Fraction] = terms if terms is not None else {}

    # -- constructors ----------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly({})

    @staticmethod
    def const(c) -> "LaurentPoly":
        c = Fraction(c)
        return LaurentPoly({} if c == 0 else {ONE_MONO: c})

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly.const(1)

    @staticmethod
    def var(label: str, power: int = 1) -> "LaurentPoly":
        """The strand variable of ``label`` to an integer power."""
        return LaurentPoly({mono(label, 2 * power): Fraction(1)})

    @staticmethod
    def half_var(label: str, half_power: int = 1) -> "LaurentPoly":
        """The square root of the strand variable to an integer power."""
        return LaurentPoly({mono(label, half_power): Fraction(1)})

    @staticmethod
    def from_mono(m: Mono, c=1) -> "LaurentPoly":
        c = Fraction(c)
        return LaurentPoly({} if c == 0 else {m: c})

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {ONE_MONO: Fraction(1)}

    def labels(self) -> set[str]:
        out: set[str] = set()
        for m in self.terms:
            for lab, _ in m:
                out.add(lab)
        return out

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for m, c in other.terms.items():
            nc = out.get(m, Fraction(0)) + c
            if nc:
                out[m] = nc
            else:
                out.pop(m, None)
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not self.terms or not other.terms:
            return LaurentPoly({})
        out: dict[Mono, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                nc = out.get(m, Fraction(0)) + c1 * c2
                if nc:
                    out[m] = nc
                else:
                    out.pop(m, None)
        return LaurentPoly(out)

    def scale(self, c) -> "LaurentPoly":
        c = Fraction(c)
        if c == 0:
            return LaurentPoly({})
        return LaurentPoly({m: k * c for m, k in self.terms.items()})

    def mul_mono(self, m: Mono) -> "LaurentPoly":
        if not m:
            return self
        return LaurentPoly({mono_mul(mm, m): c for mm, c in self.terms.items()})

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("negative power of a polynomial; use RationalFunction")
        out = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- substitution and evaluation ---------------------------------------

    def substitute(self, mapping: dict[str, str | None]) -> "LaurentPoly":
        """Merge or kill variables: label -> new label, or -> None for t=1."""
        out: dict[Mono, Fraction] = {}
        for m, c in self.terms.items():
            nm = mono_substitute(m, mapping)
            nc = out.get(nm, Fraction(0)) + c
            if nc:
                out[nm] = nc
            else:
                out.pop(nm, None)
        return LaurentPoly(out)

    def eval_ones(self) -> Fraction:
        """Exact value with every strand variable set to one."""
        return sum(self.terms.values(), Fraction(0))

    # -- structure ---------------------------------------------------------

    def leading(self) -> tuple[Mono, Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=mono_key)
        return m, self.terms[m]

    def content(self) -> Fraction:
        """Positive rational c with self/c having coprime integer coefficients."""
        if not self.terms:
            return Fraction(1)
        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, c.numerator)
            den = den * c.denominator // gcd(den, c.denominator)
        return Fraction(num, den) if num else Fraction(1)

    def min_exps(self) -> Mono:
        """Largest monomial dividing every term (a label absent from a term
        counts as exponent zero there)."""
        if not self.terms:
            return ONE_MONO
        n = len(self.terms)
        mins: dict[str, int] = {}
        counts: dict[str, int] = {}
        for m in self.terms:
            for lab, e in m:
                counts[lab] = counts.get(lab, 0) + 1
                mins[lab] = min(mins.get(lab, e), e)
        out = []
        for lab, e in mins.items():
            if counts[lab] < n:
                e = min(e, 0)
            if e:
                out.append((lab, e))
        return tuple(sorted(out))

    def exact_div(self, q: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient self/q; raises NotDivisible when none exists."""
        if q.is_zero():
            raise DivisionByZero("polynomial division by zero")
        if self.is_zero():
            return LaurentPoly({})
        if len(q.terms) == 1:
            (qm, qc), = q.terms.items()
            return LaurentPoly({mono_mul(m, mono_inv(qm)): c / qc for m, c in self.terms.items()})
        # shift both to nonnegative exponents, divide, shift back
        sp = self.min_exps()
        sq = q.min_exps()
        pnum = self.mul_mono(mono_inv(sp))
        pden = q.mul_mono(mono_inv(sq))
        qlm, qlc = pden.leading()
        rem = dict(pnum.terms)
        quot: dict[Mono, Fraction] = {}
        while rem:
            lm = max(rem, key=mono_key)
            lc = rem[lm]
            step = mono_mul(lm, mono_inv(qlm))
            if any(e < 0 for _, e in step):
                raise NotDivisible(f"{render_poly(self)} not divisible by {render_poly(q)}")
            c = lc / qlc
            quot[step] = c
            for m2, c2 in pden.terms.items():
                mm = mono_mul(step, m2)
                nc = rem.get(mm, Fraction(0)) - c * c2
                if nc:
                    rem[mm] = nc
                else:
                    rem.pop(mm, None)
        return LaurentPoly(quot).mul_mono(mono_mul(sp, mono_inv(sq)))

    def __repr__(self):
        return f"LaurentPoly({render_poly(self)})"


def render_poly(p: LaurentPoly) -> str:
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for m in sorted(p.terms, key=mono_key, reverse=True):
        c = p.terms[m]
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if not m:
            body = str(c)
        elif c == 1:
            body = render_mono(m)
        else:
            body = f"{c}*{render_mono(m)}"
        parts.append((sign, body))
    sign0, body0 = parts[0]
    out = ("-" if sign0 == "-" else "") + body0
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


class RationalFunction:
    """Fraction of Laurent polynomials, compared by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly | None = None):
        if den is None:
            den = LaurentPoly.one()
        if den.is_zero():
            raise DivisionByZero("rational function with zero denominator")
        self.num = num
        self.den = den

    # -- constructors ----------------------------------------------------

    @staticmethod
    def zero() -> "RationalFunction":
        return RationalFunction(LaurentPoly.zero())

    @staticmethod
    def one() -> "RationalFunction":
        return RationalFunction(LaurentPoly.one())

    @staticmethod
    def const(c) -> "RationalFunction":
        return RationalFunction(LaurentPoly.const(c))

    @staticmethod
    def var(label: str, power: int = 1) -> "RationalFunction":
        return RationalFunction(LaurentPoly.var(label, power))

    @staticmethod
    def of(x) -> "RationalFunction":
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, LaurentPoly):
            return RationalFunction(x)
        return RationalFunction.const(x)

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def labels(self) -> set[str]:
        return self.num.labels() | self.den.labels()

    # -- field arithmetic ---------------------------------------------------

    def __add__(self, other) -> "RationalFunction":
        other = RationalFunction.of(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other) -> "RationalFunction":
        return self + (-RationalFunction.of(other))

    def __rsub__(self, other):
        return RationalFunction.of(other) - self

    def __mul__(self, other) -> "RationalFunction":
        other = RationalFunction.of(other)
        if self.is_zero() or other.is_zero():
            return RationalFunction.zero()
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other) -> "RationalFunction":
        other = RationalFunction.of(other)
        if other.is_zero():
            raise DivisionByZero("division by the zero function")
        if self.is_zero():
            return RationalFunction.zero()
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __pow__(self, k: int) -> "RationalFunction":
        if k < 0:
            if self.is_zero():
                raise DivisionByZero("negative power of zero")
            return RationalFunction(self.den, self.num) ** (-k)
        return RationalFunction(self.num ** k, self.den ** k)

    def __eq__(self, other) -> bool:
        """Exact equality of the represented functions (cross-multiplication)."""
        if isinstance(other, (LaurentPoly, int, Fraction)):
            other = RationalFunction.of(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return (self.num * other.den) == (other.num * self.den)

    __hash__ = None

    def mul_mono(self, m: Mono) -> "RationalFunction":
        return RationalFunction(self.num.mul_mono(m), self.den)

    # -- substitution and evaluation ---------------------------------------

    def substitute(self, mapping: dict[str, str | None]) -> "RationalFunction":
        den = self.den.substitute(mapping)
        if den.is_zero():
            red = self.reduced()
            den = red.den.substitute(mapping)
            if den.is_zero():
                dead = ", ".join(sorted(k for k in mapping))
                raise EvalPole(f"denominator vanishes under substitution of {dead}")
            return RationalFunction(red.num.substitute(mapping), den)
        return RationalFunction(self.num.substitute(mapping), den)

    def eval_ones(self) -> Fraction:
        d = self.den.eval_ones()
        if d == 0:
            red = self.reduced()
            d = red.den.eval_ones()
            if d == 0:
                raise EvalPole("denominator vanishes at all variables = 1")
            return red.num.eval_ones() / d
        return self.num.eval_ones() / d

    # -- normalization ------------------------------------------------------

    def reduced(self) -> "RationalFunction":
        """Cheap value-preserving cleanup; falls back to self when stuck.

        Tries full exact division (pure-tangle pairs are secretly polynomial),
        then strips a common monomial factor and the denominator's content.
        Never computes a multivariate gcd.
        """
        if self.num.is_zero():
            return RationalFunction.zero()
        if self.den.is_one():
            return self
        try:
            return RationalFunction(self.num.exact_div(self.den))
        except NotDivisible:
            pass
        num, den = self.num, self.den
        # divide num and den by the denominator's own monomial+content unit
        dshift = den.min_exps()
        if dshift:
            den = den.mul_mono(mono_inv(dshift))
            num = num.mul_mono(mono_inv(dshift))
        c = den.content()
        _, lead_c = den.leading()
        if lead_c < 0:
            c = -c
        if c != 1:
            den = den.scale(Fraction(1) / c)
            num = num.scale(Fraction(1) / c)
        return RationalFunction(num, den)

    def __repr__(self):
        return f"RationalFunction({render_rf(self)})"


def render_rf(f: RationalFunction) -> str:
    f = f.reduced()
    if f.den.is_one():
        return render_poly(f.num)
    return f"({render_poly(f.num)}) / ({render_poly(f.den)})"


# -- parsing of the canonical textual form ---------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<lab>[A-Za-z_][A-Za-z_0-9']*)"
    r"(?:\^(?:(?P<iexp>-?\d+)|\((?P<fexp>-?\d+)/2\)))?"
    r"|(?P<op>[-+*/()]))"
)


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise ParseError(f"bad token in scalar at {pos}: {text[pos:pos+12]!r}")
            break
        out.append(m)
        pos = m.end()
    return out


def parse_poly(text: str) -> LaurentPoly:
    """Parse the canonical polynomial rendering back into a value."""
    toks = _tokenize(text)
    total = LaurentPoly.zero()
    sign = 1
    cur_coeff: Fraction | None = None
    cur_mono: Mono = ONE_MONO
    started = False

    def flush():
        nonlocal total, sign, cur_coeff, cur_mono, started
        if not started:
            return
        c = cur_coeff if cur_coeff is not None else Fraction(1)
        total = total + LaurentPoly.from_mono(cur_mono, sign * c)
        sign, cur_coeff, cur_mono, started = 1, None, ONE_MONO, False

    for t in toks:
        if t.group("op"):
            op = t.group("op")
            if op in "+-":
                flush()
                if op == "-":
                    sign = -sign
            elif op == "*":
                continue
            else:
                raise ParseError(f"unexpected {op!r} in polynomial")
        elif t.group("num"):
            started = True
            q = Fraction(t.group("num"))
            cur_coeff = q if cur_coeff is None else cur_coeff * q
        else:
            started = True
            lab = t.group("lab")
            if t.group("fexp") is not None:
                e = int(t.group("fexp"))
            elif t.group("iexp") is not None:
                e = 2 * int(t.group("iexp"))
            else:
                e = 2
            cur_mono = mono_mul(cur_mono, mono(lab, e))
    flush()
    return total


def parse_rf(text: str) -> RationalFunction:
    """Parse ``poly`` or ``(poly) / (poly)`` canonical renderings."""
    text = text.strip()
    m = re.fullmatch(r"\((?P<n>.*)\)\s*/\s*\((?P<d>.*)\)", text, re.S)
    if m:
        return RationalFunction(parse_poly(m.group("n")), parse_poly(m.group("d")))
    return RationalFunction(parse_poly(text))


def unit_normalized(f: RationalFunction) -> RationalFunction:
    """Canonical representative of f modulo units c*monomial (c rational).

    Scales so that numerator and denominator both lead with coefficient 1 and
    leading monomial 1 under the deterministic term order; two functions equal
    up to a unit normalize to rf-equal values.
    """
    if f.is_zero():
        return RationalFunction.zero()
    nm, nc = f.num.leading()
    dm, dc = f.den.leading()
    num = f.num.mul_mono(mono_inv(nm)).scale(Fraction(1) / nc)
    den = f.den.mul_mono(mono_inv(dm)).scale(Fraction(1) / dc)
    return RationalFunction(num, den)
