"""Difference polynomial rings ``A{y_1..y_n} = A[G·Y]`` over a pseudofield.

The variable ``t(y_i)`` sits at position ``i * |G| + t`` of an exponent
tuple, so monomials are ordered by (variable, group element).
Coefficients are pseudofield elements (tuples).
"""

from __future__ import annotations

from functools import cached_property
from typing import Sequence

from .groebner import GREVLEX, Poly, PolyRing
from .pseudofield import Pseudofield


class DiffRing:
    def __init__(self, A: Pseudofield, n: int, names: Sequence[str] | None = None):
        if n < 0:
            raise ValueError("number of difference variables must be non-negative")
        self.A = A
        self.group = A.group
        self.n = n
        if names is None:
            names = ["y"] if n == 1 else [f"y{i + 1}" for i in range(n)]
        if len(names) != n:
            raise ValueError("one name per difference variable")
        self.names = tuple(names)
        self.g = A.group.order
        self.nvars = n * self.g
        self._zero_exp = (0,) * self.nvars
        G = self.group
        # _shift[s][pos] = position of s(t(y_i)) for pos = (i, t)
        self._shift = tuple(
            tuple(i * self.g + G.mul(s, t) for i in range(n) for t in range(self.g))
            for s in range(self.g)
        )

    def __eq__(self, other):
        return isinstance(other, DiffRing) and (self.A, self.n, self.names) == (other.A, other.n, other.names)

    def __hash__(self):
        return hash((self.A, self.n, self.names))

    def __repr__(self):
        return f"{self.A!r}{{{', '.join(self.names)}}}"

    def pos(self, i: int, t: int = 0) -> int:
        return i * self.g + t

    def var_label(self, pos: int) -> str:
        i, t = divmod(pos, self.g)
        name = self.names[i]
        return name if t == 0 else f"{self.group.label(t)}({name})"

    def variable_labels(self) -> list[str]:
        return [self.var_label(p) for p in range(self.nvars)]

    @cached_property
    def adjoint_ring(self) -> PolyRing:
        """``K[y_i@t]``; variable ``y_i@t`` stands for ``gamma_e(t(y_i))``."""
        names = [f"{self.names[i]}@{self.group.label(t)}" for i in range(self.n) for t in range(self.g)]
        return PolyRing(self.A.base, names, GREVLEX)

    def var(self, i: int | str, shift: int = 0) -> DiffPoly:
        if isinstance(i, str):
            i = self.names.index(i)
        e = [0] * self.nvars
        e[self.pos(i, shift)] = 1
        return DiffPoly(self, {tuple(e): self.A.one})

    def gens(self) -> list[DiffPoly]:
        return [self.var(i) for i in range(self.n)]

    def const(self, c) -> DiffPoly:
        """Embed a pseudofield element (tuple) or a base-field scalar."""
        if not isinstance(c, tuple):
            c = self.A.const(c)
        return DiffPoly(self, {} if self.A.is_zero(c) else {self._zero_exp: c})

    def from_int(self, k: int) -> DiffPoly:
        return self.const(self.A.base.from_int(k))

    def zero(self) -> DiffPoly:
        return DiffPoly(self, {})

    def one(self) -> DiffPoly:
        return self.const(self.A.one)


class DiffPoly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: DiffRing, terms: dict):
        self.ring = ring
        self.terms = terms

    def _coerce(self, other):
        if isinstance(other, DiffPoly):
            if other.ring != self.ring:
                raise ValueError("difference polynomials from different rings")
            return other
        if isinstance(other, int):
            return self.ring.from_int(other)
        if isinstance(other, tuple):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        A = self.ring.A
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = A.add(out[e], c) if e in out else c
            if A.is_zero(v):
                out.pop(e, None)
            else:
                out[e] = v
        return DiffPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        A = self.ring.A
        return DiffPoly(self.ring, {e: A.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        A = self.ring.A
        out: dict = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                v = A.mul(ca, cb)
                if e in out:
                    v = A.add(out[e], v)
                if A.is_zero(v):
                    out.pop(e, None)
                else:
                    out[e] = v
        return DiffPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, tuple)):
            other = self._coerce(other)
        return isinstance(other, DiffPoly) and self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def act(self, s: int) -> DiffPoly:
        """``s · f``: act on coefficients and send ``t(y_i)`` to ``(s t)(y_i)``."""
        if s == 0:
            return self
        A, shift = self.ring.A, self.ring._shift[s]
        out = {}
        for e, c in self.terms.items():
            new = [0] * len(e)
            for p, k in enumerate(e):
                if k:
                    new[shift[p]] = k
            out[tuple(new)] = A.act(s, c)
        return DiffPoly(self.ring, out)

    def is_sigma_constant(self) -> bool:
        return all(self.act(s) == self for s in range(self.ring.g))

    def evaluate(self, point: Sequence) -> tuple:
        """Substitute ``t(y_i) -> t · a_i`` and evaluate in the pseudofield."""
        R = self.ring
        A = R.A
        if len(point) != R.n:
            raise ValueError(f"point must have {R.n} coordinates")
        values = [A.act(t, point[i]) for i in range(R.n) for t in range(R.g)]
        acc = A.zero
        for e, c in self.terms.items():
            term = c
            for p, k in enumerate(e):
                if k:
                    term = A.mul(term, A.pow(values[p], k))
            acc = A.add(acc, term)
        return acc

    def component(self, t: int) -> Poly:
        """Coordinate ``t`` of the coefficients, variables kept literally (``Fun`` base)."""
        R = self.ring.adjoint_ring
        return R.poly({e: c[t] for e, c in self.terms.items()})

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: GREVLEX.key(t[0]), reverse=True)

    def __str__(self):
        R = self.ring
        A = R.A
        F = A.base
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.sorted_terms():
            mono = "*".join(R.var_label(p) if k == 1 else f"{R.var_label(p)}^{k}"
                            for p, k in enumerate(e) if k)
            neg = False
            if F.kind == "rationals" and len(set(c)) == 1 and c[0] < 0:
                neg, c = True, A.neg(c)
            cs = A.format(c)
            if len(set(c)) == 1 and ("+" in cs or "-" in cs):
                cs = f"({cs})"
            body = cs if not mono else (mono if cs == "1" else f"{cs}*{mono}")
            pieces.append((neg, body))
        out = ("-" if pieces[0][0] else "") + pieces[0][1]
        for neg, body in pieces[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def __repr__(self):
        return f"DiffPoly({self})"


def make_diff_ring(A: Pseudofield, n: int, names: Sequence[str] | None = None) -> DiffRing:
    return DiffRing(A, n, names)


def act_poly(s: int, f: DiffPoly) -> DiffPoly:
    return f.act(s)


def eval_poly(f: DiffPoly, point: Sequence) -> tuple:
    return f.evaluate(point)
