"""Session files and the expression grammar.

A session is a list of declarations, one per line; a ``/`` surrounded by
whitespace also separates declarations, and ``#`` starts a comment::

    group cyclic 2 / field gf 2 / vars x / eq x*s(x) / eq x+s(x)-1

Expressions use ``+ - * ^``, parentheses, integers (``2/3`` over Q),
tuples ``(1,0)`` for pseudofield constants, ``w`` for the generator of
``GF(p^k)``, and shifts ``s(expr)``, ``s2(expr)``, ``g3(expr)`` acting on the
whole argument.  ``adj`` lines use adjoint variables such as ``x@s``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .coeff import Field, FieldError, make_field
from .diffpoly import DiffPoly, DiffRing
from .group import Group, GroupError, make_group, read_cayley
from .groebner import Poly, PolyRing
from .pseudofield import Pseudofield, PseudofieldError, fun_of, make_product_pseudofield


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 0, col: int = 0, source: str = "<session>"):
        super().__init__(message)
        self.message, self.line, self.col, self.source = message, line, col, source

    def __str__(self):
        return f"{self.source}:{self.line}:{self.col}: {self.message}"


# -- tokens -------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*(?:@[A-Za-z_0-9]+)?)"
                    r"|(?P<op>[-+*^(),]))")


@dataclass
class Tok:
    kind: str
    text: str
    col: int


def tokenize(text: str, line: int = 1, col0: int = 1) -> list[Tok]:
    out, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            bad = len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[pos + bad]!r}", line, col0 + pos + bad)
        kind = m.lastgroup
        out.append(Tok(kind, m.group(kind), col0 + m.start(kind)))
        pos = m.end()
    out.append(Tok("end", "", col0 + len(text)))
    return out


# -- expressions -----------------------------------------------------------------

class _Parser:
    """Recursive descent over one expression; ``builder`` supplies the algebra."""

    def __init__(self, toks: list[Tok], builder, line: int):
        self.toks, self.i, self.b, self.line = toks, 0, builder, line

    def peek(self) -> Tok:
        return self.toks[self.i]

    def take(self, text: str | None = None) -> Tok:
        t = self.toks[self.i]
        if text is not None and t.text != text:
            self.error(f"expected {text!r}, found {t.text or 'end of line'!r}", t)
        self.i += 1
        return t

    def error(self, msg: str, tok: Tok | None = None):
        tok = tok or self.peek()
        raise ParseError(msg, self.line, tok.col)

    def parse(self):
        v = self.expr()
        if self.peek().kind != "end":
            self.error(f"unexpected {self.peek().text!r}")
        return v

    def expr(self):
        v = self.term()
        while self.peek().text in ("+", "-"):
            op = self.take().text
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.power()
        while self.peek().text == "*":
            self.take()
            v = v * self.power()
        return v

    def power(self):
        if self.peek().text == "-":
            self.take()
            return -self.power()
        v = self.atom()
        if self.peek().text == "^":
            self.take()
            t = self.take()
            if t.kind != "num" or "/" in t.text:
                self.error("exponent must be a non-negative integer", t)
            v = v ** int(t.text)
        return v

    def atom(self):
        t = self.peek()
        if t.kind == "num":
            self.take()
            return self.b.number(t, self)
        if t.text == "(":
            self.take()
            items = [self.expr()]
            while self.peek().text == ",":
                self.take()
                items.append(self.expr())
            self.take(")")
            return items[0] if len(items) == 1 else self.b.tuple(items, t, self)
        if t.kind == "name":
            self.take()
            if self.peek().text == "(":
                s = self.b.shift(t, self)
                self.take("(")
                v = self.expr()
                self.take(")")
                return self.b.apply_shift(s, v)
            return self.b.name(t, self)
        self.error(f"unexpected {t.text or 'end of line'!r}", t)


_SHIFT_LABEL = re.compile(r"^([A-Za-z]+)(\d*)$")


class _DiffBuilder:
    def __init__(self, ring: DiffRing):
        self.ring = ring
        self.F = ring.A.base

    def scalar(self, c) -> DiffPoly:
        return self.ring.const(c)

    def number(self, tok, p):
        F = self.F
        if "/" in tok.text:
            num, den = (int(x) for x in tok.text.split("/"))
            if den == 0:
                p.error("division by zero", tok)
            if F.kind == "rationals":
                return self.scalar(Fraction(num, den))
            return self.scalar(F.div(F.from_int(num), F.from_int(den)))
        return self.scalar(F.from_int(int(tok.text)))

    def _as_scalar(self, v: DiffPoly, tok, p):
        A = self.ring.A
        if v.is_zero():
            return self.F.zero
        c = v.terms.get(self.ring._zero_exp)
        if len(v.terms) != 1 or c is None or len(set(c)) != 1:
            p.error("tuple entries must be scalars", tok)
        return c[0]

    def tuple(self, items, tok, p):
        A = self.ring.A
        if len(items) != A.m:
            p.error(f"tuple has {len(items)} entries, expected {A.m}", tok)
        return self.ring.const(tuple(self._as_scalar(v, tok, p) for v in items))

    def name(self, tok, p):
        names = self.ring.names
        if tok.text in names:
            return self.ring.var(names.index(tok.text))
        if tok.text == self.F.gen_name and self.F.kind == "extension":
            return self.scalar(self.F.gen())
        if "@" in tok.text:
            p.error(f"adjoint variable {tok.text!r} only allowed in adj lines", tok)
        p.error(f"undeclared variable {tok.text!r}", tok)

    def shift(self, tok, p) -> int:
        return resolve_element(self.ring.group, tok, p)

    def apply_shift(self, s, v):
        return v.act(s)


def resolve_element(G: Group, tok, p) -> int:
    s = G.lookup(tok.text)
    if s is not None:
        return s
    m = _SHIFT_LABEL.match(tok.text)
    if m and m.group(2) and (G.lookup(m.group(1)) is not None or m.group(1) == "g"):
        p.error(f"group element {tok.text} out of range (order {G.order})", tok)
    p.error(f"unknown group element or function {tok.text!r}", tok)


class _AdjBuilder:
    def __init__(self, ring: PolyRing):
        self.ring = ring
        self.F = ring.field

    def number(self, tok, p):
        F = self.F
        if "/" in tok.text:
            num, den = (int(x) for x in tok.text.split("/"))
            if den == 0:
                p.error("division by zero", tok)
            if F.kind == "rationals":
                return self.ring.const(Fraction(num, den))
            return self.ring.const(F.div(F.from_int(num), F.from_int(den)))
        return self.ring.from_int(int(tok.text))

    def tuple(self, items, tok, p):
        p.error("tuples are not allowed in adjoint expressions", tok)

    def name(self, tok, p):
        if tok.text in self.ring.names:
            return self.ring.var(self.ring.names.index(tok.text))
        if tok.text == self.F.gen_name and self.F.kind == "extension":
            return self.ring.const(self.F.gen())
        p.error(f"undeclared adjoint variable {tok.text!r}", tok)

    def shift(self, tok, p):
        p.error("shifts are not allowed in adjoint expressions", tok)


def parse_expr(text: str, ring: DiffRing, line: int = 1, col: int = 1) -> DiffPoly:
    return _Parser(tokenize(text, line, col), _DiffBuilder(ring), line).parse()


def parse_adjoint_expr(text: str, ring: PolyRing, line: int = 1, col: int = 1) -> Poly:
    return _Parser(tokenize(text, line, col), _AdjBuilder(ring), line).parse()


# -- sessions ---------------------------------------------------------------------

@dataclass
class Session:
    group: Group
    field: Field
    pseudofield: Pseudofield
    ring: DiffRing
    equations: list = field(default_factory=list)
    adjoint_equations: list = field(default_factory=list)
    source: str = "<session>"
    base_dir: Path = field(default_factory=Path.cwd)

    def parse(self, text: str) -> DiffPoly:
        return parse_expr(text, self.ring)

    def canonical(self) -> str:
        """Session text in canonical form (reparses to an equal session)."""
        lines = [f"group {group_spec(self.group)}", f"field {self.field.describe()}"]
        if not self.pseudofield.is_fun:
            lines.append(f"pseudofield {pseudofield_spec(self.pseudofield)}")
        if self.ring.n:
            lines.append("vars " + " ".join(self.ring.names))
        lines += [f"eq {f}" for f in self.equations]
        lines += [f"adj {g}" for g in self.adjoint_equations]
        return "\n".join(lines) + "\n"


def group_spec(G: Group) -> str:
    for spec in (f"cyclic {G.order}", "klein"):
        H = make_group(spec) if spec != "klein" or G.order == 4 else None
        if H is not None and H.table == G.table and H.names == G.names:
            return spec
    return "table " + ";".join(" ".join(map(str, row)) for row in G.table)


def pseudofield_spec(P: Pseudofield) -> str:
    parts = [f"product m={P.m}"]
    perm = " ".join(f"{P.group.label(s)}={','.join(map(str, P.perm[s]))}" for s in range(1, P.group.order))
    autos = " ".join(f"{P.group.label(s)}={','.join(map(str, P.autos[s]))}" for s in range(1, P.group.order))
    if perm:
        parts.append("perm " + perm)
    if any(any(a) for a in P.autos):
        parts.append("autos " + autos)
    return " ".join(parts)


def split_statements(text: str):
    """Yield ``(line, col, statement)`` for every non-empty statement."""
    for ln, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        start = 0
        for m in list(re.finditer(r"\s/\s", body)) + [None]:
            end = m.start() if m else len(body)
            chunk = body[start:end]
            stripped = chunk.strip()
            if stripped:
                yield ln, start + len(chunk) - len(chunk.lstrip()) + 1, stripped
            if m:
                start = m.end()


def _parse_group(arg: str, base_dir: Path, ln, col) -> Group:
    parts = arg.split()
    try:
        if parts and parts[0] == "cayley":
            if len(parts) != 2:
                raise ParseError("usage: group cayley <file>", ln, col)
            return read_cayley(base_dir / parts[1])
        if parts and parts[0] == "table":
            rows = [[int(x) for x in r.split()] for r in arg.split(None, 1)[1].split(";")]
            return make_group(("cayley", rows))
        return make_group(arg)
    except (GroupError, ValueError, OSError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc), ln, col) from None


def _parse_pseudofield(arg: str, F: Field, G: Group, ln, col) -> Pseudofield:
    parts = arg.split()
    if not parts or parts[0] == "fun":
        return fun_of(F, G)
    if parts[0] != "product":
        raise ParseError(f"unknown pseudofield kind {parts[0]!r}", ln, col)
    m, perm, autos, section = None, {}, {}, None
    # keep cycle notation such as s=(0 1)(2 3) in one whitespace-free item
    body = re.sub(r"\([^)]*\)", lambda mt: mt.group(0).replace(" ", ","), arg[len("product"):])
    for item in body.split():
        if item in ("perm", "autos"):
            section = item
            continue
        key, _, val = item.partition("=")
        if key == "m":
            m = int(val)
            continue
        if section is None or not val:
            raise ParseError(f"cannot read {item!r} in pseudofield declaration", ln, col)
        if section == "perm":
            perm[key] = val if val.startswith("(") else [int(x) for x in val.split(",")]
        else:
            autos[key] = val.split(",")
    try:
        return make_product_pseudofield(F, G, perm or {"e": list(range(m or 1))}, autos, m)
    except (PseudofieldError, GroupError, ValueError) as exc:
        raise ParseError(str(exc), ln, col) from None


def parse_session(text: str, source: str = "<session>", base_dir: Path | str | None = None) -> Session:
    base_dir = Path(base_dir) if base_dir is not None else Path.cwd()
    G = F = P = R = None
    eqs, adj_lines = [], []
    for ln, col, stmt in split_statements(text):
        kw, _, arg = stmt.partition(" ")
        arg = arg.strip()
        argcol = col + len(stmt) - len(stmt[len(kw):].lstrip()) if arg else col
        try:
            if kw == "group":
                if G is not None:
                    raise ParseError("group declared twice", ln, col)
                G = _parse_group(arg, base_dir, ln, argcol)
            elif kw == "field":
                if F is not None:
                    raise ParseError("field declared twice", ln, col)
                try:
                    F = make_field(arg)
                except (FieldError, ValueError) as exc:
                    raise ParseError(str(exc), ln, argcol) from None
            elif kw == "pseudofield":
                if G is None or F is None:
                    raise ParseError("pseudofield needs group and field first", ln, col)
                if R is not None:
                    raise ParseError("pseudofield must precede vars", ln, col)
                P = _parse_pseudofield(arg, F, G, ln, argcol)
            elif kw == "vars":
                if G is None or F is None:
                    raise ParseError("vars needs group and field first", ln, col)
                if R is not None:
                    raise ParseError("vars declared twice", ln, col)
                names = arg.split()
                for nm in names:
                    if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", nm):
                        raise ParseError(f"bad variable name {nm!r}", ln, argcol)
                    if G.lookup(nm) is not None or nm == F.gen_name and F.kind == "extension":
                        raise ParseError(f"variable name {nm!r} clashes with a reserved name", ln, argcol)
                if len(set(names)) != len(names):
                    raise ParseError("duplicate variable name", ln, argcol)
                P = P or fun_of(F, G)
                R = DiffRing(P, len(names), names)
            elif kw == "eq":
                if R is None:
                    _undeclared(arg, ln, argcol)
                eqs.append(parse_expr(arg, R, ln, argcol))
            elif kw == "adj":
                if R is None:
                    raise ParseError("adj needs vars first", ln, col)
                adj_lines.append(parse_adjoint_expr(arg, R.adjoint_ring, ln, argcol))
            else:
                raise ParseError(f"unknown declaration {kw!r}", ln, col)
        except ParseError as exc:
            exc.source = source
            raise
    if G is None:
        raise ParseError("missing group declaration", 1, 1, source)
    if F is None:
        raise ParseError("missing field declaration", 1, 1, source)
    P = P or fun_of(F, G)
    R = R or DiffRing(P, 0, [])
    return Session(G, F, P, R, eqs, adj_lines, source, base_dir)


def _undeclared(arg, ln, col):
    for tok in tokenize(arg, ln, col):
        if tok.kind == "name":
            raise ParseError(f"undeclared variable {tok.text!r}", ln, tok.col)
    raise ParseError("equations need a vars declaration first", ln, col)


def load_session(path: str | Path) -> Session:
    path = Path(path)
    return parse_session(path.read_text(encoding="utf-8"), str(path), path.parent)


def parse_point(text: str, ring: DiffRing, line: int = 1) -> tuple:
    """A point of ``A^n`` written as ``n`` tuples (or scalars), separated by whitespace or ``;``."""
    A = ring.A
    chunks = re.findall(r"\([^)]*\)|[^\s;()]+", text)
    if len(chunks) != ring.n:
        raise ParseError(f"point has {len(chunks)} coordinates, expected {ring.n}", line, 1)
    R0 = DiffRing(A, 0, [])
    out = []
    for chunk in chunks:
        v = parse_expr(chunk, R0, line, text.find(chunk) + 1)
        c = v.terms.get(R0._zero_exp, A.zero)
        out.append(c)
    return tuple(out)
