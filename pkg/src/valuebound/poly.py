"""Sparse multivariate polynomials over a FieldSpec, polynomial maps F_q^n -> F_q^n,
the text grammar for maps, and the degree matrix.

Coefficients are packed field ints (see gf).  Term dicts keep insertion order,
which for parsed maps is the order terms appear in the text; the degree matrix
inherits that order so witnesses are reproducible.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .gf import ExtensionCtx, FieldMismatch, FieldSpec

Exponent = tuple[int, ...]


class PolyError(Exception):
    pass


class MapSyntaxError(PolyError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.col = col


class UnknownVariable(MapSyntaxError):
    pass


class ComponentCountMismatch(PolyError):
    pass


class ConstantMap(PolyError):
    pass


def nonzero_count(v: Exponent) -> int:
    return sum(1 for e in v if e)


class SparsePoly:
    """h = sum a_D X^D with only nonzero coefficients stored."""

    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field: FieldSpec, nvars: int, terms: Mapping[Exponent, int] | Iterable = ()):
        self.field = field
        self.nvars = nvars
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, int] = {}
        for exp, c in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars or min(exp, default=0) < 0:
                raise PolyError(f"bad exponent vector {exp} for {nvars} variables")
            acc[exp] = field.add(acc.get(exp, 0), c)
        self.terms = {e: c for e, c in acc.items() if c}

    def __eq__(self, other):
        return (
            isinstance(other, SparsePoly)
            and self.field == other.field
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __repr__(self):
        return f"SparsePoly({render_poly(self)!r})"

    @property
    def support(self) -> list[Exponent]:
        return list(self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def __call__(self, point: Sequence[int]) -> int:
        F = self.field
        acc = 0
        for exp, c in self.terms.items():
            v = c
            for x, e in zip(point, exp):
                if e:
                    v = F.mul(v, F.pow(x, e))
                    if v == 0:
                        break
            acc = F.add(acc, v)
        return acc

    def __add__(self, other: SparsePoly) -> SparsePoly:
        return SparsePoly(self.field, self.nvars, list(self.terms.items()) + list(other.terms.items()))

    def __mul__(self, other: SparsePoly) -> SparsePoly:
        F = self.field
        out = []
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out.append((tuple(a + b for a, b in zip(e1, e2)), F.mul(c1, c2)))
        return SparsePoly(F, self.nvars, out)

    def __pow__(self, k: int) -> SparsePoly:
        result = SparsePoly(self.field, self.nvars, {(0,) * self.nvars: 1})
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def map_coeffs(self, fn, field: FieldSpec) -> SparsePoly:
        return SparsePoly(field, self.nvars, [(e, fn(c)) for e, c in self.terms.items()])


def monomial(field: FieldSpec, nvars: int, exp: Exponent, coef: int = 1) -> SparsePoly:
    return SparsePoly(field, nvars, {tuple(exp): coef})


def variable(field: FieldSpec, nvars: int, i: int) -> SparsePoly:
    """x_i with 1-based i."""
    exp = [0] * nvars
    exp[i - 1] = 1
    return monomial(field, nvars, tuple(exp))


@dataclass(eq=False)
class PolyMap:
    field: FieldSpec
    nvars: int
    components: tuple[SparsePoly, ...]

    def __post_init__(self):
        self.components = tuple(self.components)
        if len(self.components) != self.nvars:
            raise ComponentCountMismatch(
                f"{len(self.components)} components for {self.nvars} variables"
            )
        for c in self.components:
            if c.nvars != self.nvars:
                raise PolyError("component has the wrong number of variables")
            if c.field != self.field:
                raise FieldMismatch("component over a different field")

    def __eq__(self, other):
        return (
            isinstance(other, PolyMap)
            and self.field == other.field
            and self.components == other.components
        )

    def __call__(self, point: Sequence[int]) -> tuple[int, ...]:
        return tuple(c(point) for c in self.components)

    @property
    def q(self) -> int:
        return self.field.q

    def __repr__(self):
        return f"PolyMap(q={self.q}, {render(self)!r})"


def evaluate(f: PolyMap, point: Sequence) -> tuple[int, ...]:
    """Componentwise evaluation; accepts packed ints or FieldElements."""
    vals = []
    for x in point:
        if hasattr(x, "field"):
            if x.field != f.field:
                raise FieldMismatch("point lies in another field")
            x = x.value
        vals.append(x)
    if len(vals) != f.nvars:
        raise PolyError(f"point has {len(vals)} coordinates, map has {f.nvars}")
    return f(vals)


def degree(f: PolyMap) -> int:
    if all(c.is_constant() for c in f.components):
        raise ConstantMap("degree of a constant map is undefined here")
    return max(c.degree() for c in f.components)


@dataclass(frozen=True)
class DegreeMatrix:
    nvars: int
    columns: tuple[Exponent, ...]

    @property
    def m(self) -> int:
        return len(self.columns)

    def rows(self) -> list[list[int]]:
        return [[col[i] for col in self.columns] for i in range(self.nvars)]


def degree_matrix(f: PolyMap) -> DegreeMatrix:
    """Distinct nonzero exponent vectors of all components, in order of first appearance."""
    seen: dict[Exponent, None] = {}
    for comp in f.components:
        for exp in comp.terms:
            if any(exp):
                seen.setdefault(exp, None)
    if not seen:
        raise ConstantMap("constant map has an empty degree matrix")
    return DegreeMatrix(f.nvars, tuple(seen))


def unused_variables(f: PolyMap) -> set[int]:
    used = set()
    for comp in f.components:
        for exp in comp.terms:
            used.update(i + 1 for i, e in enumerate(exp) if e)
    return set(range(1, f.nvars + 1)) - used


def combine(f: PolyMap, ctx: ExtensionCtx) -> SparsePoly:
    """g = f_1 e_1 + ... + f_n e_n as a polynomial in x_1..x_n over F_{q^n}."""
    if ctx.base != f.field or ctx.n != f.nvars:
        raise FieldMismatch("extension context does not match the map")
    top = ctx.top
    terms = []
    for comp, e in zip(f.components, ctx.basis):
        for exp, c in comp.terms.items():
            terms.append((exp, top.mul(ctx.embed(c), e)))
    return SparsePoly(top, f.nvars, terms)


# --- printing ---------------------------------------------------------------

def _grlex_key(exp: Exponent):
    return (-sum(exp), tuple(-e for e in exp))


def render_poly(h: SparsePoly) -> str:
    if not h.terms:
        return "0"
    F = h.field
    parts = []
    for exp in sorted(h.terms, key=_grlex_key):
        c = h.terms[exp]
        factors = []
        for i, e in enumerate(exp):
            if e == 1:
                factors.append(f"x{i + 1}")
            elif e > 1:
                factors.append(f"x{i + 1}^{e}")
        mono = "*".join(factors)
        if not mono:
            parts.append(F.format(c))
        elif c == 1:
            parts.append(mono)
        else:
            parts.append(f"{F.format(c)}*{mono}")
    return " + ".join(parts)


def render(f: PolyMap) -> str:
    lines = [f"vars:{f.nvars}"]
    for i, comp in enumerate(f.components):
        lines.append(f"f{i + 1} = {render_poly(comp)}")
    return "\n".join(lines) + "\n"


# --- parsing ----------------------------------------------------------------

_TOKEN = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<comment>#[^\n]*)|(?P<sep>[\n;])|(?P<int>\d+)"
    r"|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^=():])"
)


@dataclass
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise MapSyntaxError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind not in ("ws", "comment"):
            toks.append(_Tok(kind, m.group(), line, pos - line_start + 1))
        if kind == "sep" and m.group() == "\n":
            line += 1
            line_start = m.end()
        pos = m.end()
    toks.append(_Tok("eof", "", line, pos - line_start + 1))
    return toks


class _Parser:
    def __init__(self, text: str, field: FieldSpec):
        self.toks = _tokenize(text)
        self.i = 0
        self.F = field

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def error(self, msg, tok=None, cls=MapSyntaxError):
        tok = tok or self.tok
        raise cls(msg, tok.line, tok.col)

    def next(self) -> _Tok:
        t = self.tok
        self.i += 1
        return t

    def expect(self, kind, text=None) -> _Tok:
        t = self.tok
        if t.kind != kind or (text is not None and t.text != text):
            want = text or kind
            self.error(f"expected {want!r}, found {t.text or t.kind!r}")
        return self.next()

    def skip_seps(self):
        while self.tok.kind == "sep":
            self.next()

    def parse(self) -> PolyMap:
        self.skip_seps()
        t = self.expect("ident")
        if t.text != "vars":
            self.error("map must start with 'vars:'", t)
        self.expect("op", ":")
        n = int(self.expect("int").text)
        if n < 1:
            self.error("need at least one variable", t)
        self.n = n
        comps = []
        while True:
            self.skip_seps()
            if self.tok.kind == "eof":
                break
            name = self.expect("ident")
            if name.text != f"f{len(comps) + 1}":
                if re.fullmatch(r"f\d+", name.text) and len(comps) >= n:
                    raise ComponentCountMismatch(f"more than {n} components")
                self.error(f"expected component f{len(comps) + 1}, found {name.text!r}", name)
            self.expect("op", "=")
            comps.append(self.expr())
            if self.tok.kind not in ("sep", "eof"):
                self.error(f"unexpected {self.tok.text!r}")
        if len(comps) != n:
            raise ComponentCountMismatch(f"{len(comps)} components for {n} variables")
        return PolyMap(self.F, n, comps)

    def expr(self) -> SparsePoly:
        terms = []
        sign = 1
        if self.tok.kind == "op" and self.tok.text in "+-":
            sign = -1 if self.next().text == "-" else 1
        while True:
            exp, c = self.term()
            if sign < 0:
                c = self.F.neg(c)
            terms.append((exp, c))
            if self.tok.kind == "op" and self.tok.text in ("+", "-"):
                sign = -1 if self.next().text == "-" else 1
            else:
                break
        return SparsePoly(self.F, self.n, terms)

    def term(self) -> tuple[Exponent, int]:
        t = self.tok
        if t.kind == "int" or (t.kind == "op" and t.text == "("):
            c = self.coef()
            if self.tok.kind == "op" and self.tok.text == "*":
                self.next()
                return self.powprod(), c
            return (0,) * self.n, c
        if t.kind == "ident":
            return self.powprod(), 1
        self.error(f"expected a term, found {t.text or t.kind!r}")

    def powprod(self) -> Exponent:
        exp = [0] * self.n
        while True:
            v = self.expect("ident")
            m = re.fullmatch(r"x(\d+)", v.text)
            if not m or not 1 <= int(m.group(1)) <= self.n:
                self.error(f"unknown variable {v.text!r}", v, UnknownVariable)
            e = 1
            if self.tok.kind == "op" and self.tok.text == "^":
                self.next()
                e = int(self.expect("int").text)
            exp[int(m.group(1)) - 1] += e
            if self.tok.kind == "op" and self.tok.text == "*" and self.toks[self.i + 1].kind == "ident":
                self.next()
            else:
                return tuple(exp)

    def coef(self) -> int:
        if self.tok.kind == "int":
            return self.F.scalar(int(self.next().text))
        self.expect("op", "(")
        # polynomial in t with integer coefficients
        F = self.F
        acc = 0
        sign = 1
        if self.tok.kind == "op" and self.tok.text in "+-":
            sign = -1 if self.next().text == "-" else 1
        while True:
            c, e = 1, 0
            if self.tok.kind == "int":
                c = int(self.next().text)
                if self.tok.kind == "op" and self.tok.text == "*":
                    self.next()
                    e = self.tpow()
            else:
                e = self.tpow()
            val = F.mul(F.scalar(sign * c), F.pow(F.generator, e))
            acc = F.add(acc, val)
            if self.tok.kind == "op" and self.tok.text in "+-":
                sign = -1 if self.next().text == "-" else 1
            else:
                break
        self.expect("op", ")")
        return acc

    def tpow(self) -> int:
        v = self.expect("ident")
        if v.text != "t":
            self.error(f"coefficients are polynomials in t, found {v.text!r}", v, UnknownVariable)
        if self.tok.kind == "op" and self.tok.text == "^":
            self.next()
            return int(self.expect("int").text)
        return 1


def parse_map(text: str, field: FieldSpec) -> PolyMap:
    """Parse the map grammar.  Components may be separated by newlines or ';'."""
    return _Parser(text, field).parse()
