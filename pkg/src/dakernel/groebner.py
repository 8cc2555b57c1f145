"""Commutative polynomial rings over a field and a Buchberger Gröbner engine.

Polynomials are sparse dicts from exponent tuples to field values.  The
reduced Gröbner basis is monic, autoreduced and sorted by increasing leading
monomial, so two ideals are equal exactly when their reduced bases are.
"""

from __future__ import annotations

import heapq
import itertools
from functools import lru_cache
from typing import Iterable, Sequence

from .coeff import Field, up_radical


class GroebnerError(ValueError):
    pass


class MonomialOrder:
    """``grevlex``, ``lex`` or ``block`` (grevlex on ``exp[:split]``, then on the rest)."""

    def __init__(self, kind: str = "grevlex", split: int = 0):
        if kind not in ("grevlex", "lex", "block"):
            raise GroebnerError(f"unknown monomial order {kind!r}")
        self.kind = kind
        self.split = split
        if kind == "grevlex":
            self.key = lru_cache(maxsize=1 << 18)(_grevlex)
        elif kind == "lex":
            self.key = _lex
        else:
            self.key = lru_cache(maxsize=1 << 18)(lambda e, k=split: (_grevlex(e[:k]), _grevlex(e[k:])))

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and (self.kind, self.split) == (other.kind, other.split)

    def __hash__(self):
        return hash((self.kind, self.split))

    def __repr__(self):
        return f"MonomialOrder({self.kind!r}, {self.split})" if self.kind == "block" else self.kind


def _grevlex(e):
    return (sum(e), tuple(-x for x in reversed(e)))


def _lex(e):
    return e


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


class PolyRing:
    def __init__(self, field: Field, names: Sequence[str], order: MonomialOrder = GREVLEX):
        self.field = field
        self.names = tuple(names)
        self.nvars = len(self.names)
        self.order = order
        self._zero_exp = (0,) * self.nvars

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.field == other.field
                and self.names == other.names)

    def __hash__(self):
        return hash((self.field, self.names))

    def __repr__(self):
        return f"{self.field!r}[{', '.join(self.names)}]"

    def poly(self, terms: dict) -> Poly:
        return Poly(self, {e: c for e, c in terms.items() if c != 0})

    def zero(self) -> Poly:
        return Poly(self, {})

    def one(self) -> Poly:
        return self.const(self.field.one)

    def const(self, c) -> Poly:
        return Poly(self, {self._zero_exp: c} if c != 0 else {})

    def from_int(self, n: int) -> Poly:
        return self.const(self.field.from_int(n))

    def var(self, i: int | str) -> Poly:
        if isinstance(i, str):
            i = self.names.index(i)
        e = [0] * self.nvars
        e[i] = 1
        return Poly(self, {tuple(e): self.field.one})

    def gens(self) -> list[Poly]:
        return [self.var(i) for i in range(self.nvars)]

    def with_front(self, extra: Sequence[str]) -> PolyRing:
        """Ring with ``extra`` variables prepended and an order eliminating them."""
        return PolyRing(self.field, tuple(extra) + self.names, MonomialOrder("block", len(extra)))

    def lift_from(self, f: Poly, shift: int) -> Poly:
        pad = (0,) * shift
        return Poly(self, {pad + e: c for e, c in f.terms.items()})


class Poly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise GroebnerError("polynomials live in different rings")
            return other
        if isinstance(other, int):
            return self.ring.from_int(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Poly(self.ring, _add(self.ring.field, self.terms, other.terms))

    __radd__ = __add__

    def __neg__(self):
        F = self.ring.field
        return Poly(self.ring, {e: F.neg(c) for e, c in self.terms.items()})

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
        return Poly(self.ring, _mul(self.ring.field, self.terms, other.terms))

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

    def scale(self, c) -> Poly:
        F = self.ring.field
        if c == 0:
            return self.ring.zero()
        return Poly(self.ring, {e: F.mul(c, v) for e, v in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.from_int(other)
        return isinstance(other, Poly) and self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def lm(self, order: MonomialOrder | None = None):
        return max(self.terms, key=(order or self.ring.order).key)

    def lc(self, order: MonomialOrder | None = None):
        return self.terms[self.lm(order)]

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def support(self) -> set[int]:
        return {i for e in self.terms for i, x in enumerate(e) if x}

    def monic(self, order: MonomialOrder | None = None) -> Poly:
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.lc(order)))

    def evaluate(self, point: Sequence):
        F = self.ring.field
        acc = F.zero
        for e, c in self.terms.items():
            term = c
            for x, k in zip(point, e):
                if k:
                    term = F.mul(term, F.pow(x, k))
            acc = F.add(acc, term)
        return acc

    def map_coeffs(self, ring: PolyRing, fn) -> Poly:
        return ring.poly({e: fn(c) for e, c in self.terms.items()})

    def sorted_terms(self, order: MonomialOrder | None = None):
        return sorted(self.terms.items(), key=lambda t: (order or self.ring.order).key(t[0]),
                      reverse=True)

    def __str__(self):
        return format_poly(self.ring.field, self.ring.names, self.sorted_terms())

    def __repr__(self):
        return f"Poly({self})"


def format_poly(F: Field, names, terms) -> str:
    """Render ``[(exp, coeff), ...]`` (already ordered) as text."""
    if not terms:
        return "0"
    pieces = []
    for e, c in terms:
        mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
        cs = F.format(c)
        neg = False
        if F.kind == "rationals" and c < 0:
            neg, cs = True, F.format(-c)
        if "+" in cs or ("-" in cs and not cs.startswith("-")):
            cs = f"({cs})"
        if not mono:
            body = cs
        elif cs == "1":
            body = mono
        else:
            body = f"{cs}*{mono}"
        pieces.append((neg, body))
    out = ("-" if pieces[0][0] else "") + pieces[0][1]
    for neg, body in pieces[1:]:
        out += (" - " if neg else " + ") + body
    return out


# -- dict-level arithmetic ----------------------------------------------------

def _add(F, a: dict, b: dict) -> dict:
    out = dict(a)
    for e, c in b.items():
        v = F.add(out.get(e, F.zero), c)
        if v != 0:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def _mul(F, a: dict, b: dict) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            v = F.add(out.get(e, F.zero), F.mul(ca, cb))
            if v != 0:
                out[e] = v
            else:
                out.pop(e, None)
    return out


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub_mult(F, p: dict, c, mono, g: dict):
    """``p -= c * x^mono * g`` in place."""
    for e, v in g.items():
        e2 = tuple(x + y for x, y in zip(e, mono))
        w = F.sub(p.get(e2, F.zero), F.mul(c, v))
        if w != 0:
            p[e2] = w
        else:
            p.pop(e2, None)


def _reduce(F, f: dict, basis, key) -> dict:
    """Full reduction of ``f`` by monic ``basis = [(lm, terms), ...]``."""
    p = dict(f)
    r = {}
    while p:
        lm = max(p, key=key)
        c = p[lm]
        for glm, g in basis:
            if _divides(glm, lm):
                _sub_mult(F, p, c, tuple(x - y for x, y in zip(lm, glm)), g)
                break
        else:
            r[lm] = c
            del p[lm]
    return r


def _monic(F, f: dict, key):
    lm = max(f, key=key)
    inv = F.inv(f[lm])
    return lm, {e: F.mul(inv, c) for e, c in f.items()}


def _buchberger(F, polys: Iterable[dict], key) -> list[tuple]:
    G: list[tuple] = []
    pending: set[tuple[int, int]] = set()
    heap: list = []
    age = itertools.count()

    def add(h):
        lm, g = _monic(F, h, key)
        G.append((lm, g))
        j = len(G) - 1
        for i in range(j):
            pending.add((i, j))
            heapq.heappush(heap, (sum(_lcm(G[i][0], lm)), next(age), i, j))

    for f in polys:
        h = _reduce(F, f, G, key)
        if h:
            add(h)
    while heap:
        _, _, i, j = heapq.heappop(heap)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        li, lj = G[i][0], G[j][0]
        lcm = _lcm(li, lj)
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue
        if any(
            k != i and k != j and _divides(G[k][0], lcm)
            and (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending
            for k in range(len(G))
        ):
            continue
        s = {}
        _sub_mult(F, s, F.neg(F.one), tuple(a - b for a, b in zip(lcm, li)), G[i][1])
        _sub_mult(F, s, F.one, tuple(a - b for a, b in zip(lcm, lj)), G[j][1])
        h = _reduce(F, s, G, key)
        if h:
            add(h)
    return G


def _reduced_basis(F, G: list[tuple], key) -> list[tuple]:
    minimal = []
    for idx, (lm, g) in enumerate(G):
        if any(_divides(olm, lm) and (olm != lm or j < idx) for j, (olm, _) in enumerate(G) if j != idx):
            continue
        minimal.append((lm, g))
    out = []
    for idx, (lm, g) in enumerate(minimal):
        others = [b for j, b in enumerate(minimal) if j != idx]
        tail = _reduce(F, {e: c for e, c in g.items() if e != lm}, others, key)
        tail[lm] = F.one
        out.append((lm, tail))
    out.sort(key=lambda t: key(t[0]))
    return out


# -- ideals -------------------------------------------------------------------

class Ideal:
    def __init__(self, ring: PolyRing, gens: Iterable[Poly] = ()):
        self.ring = ring
        self.gens = [g for g in gens if g.terms]
        for g in self.gens:
            if g.ring != ring:
                raise GroebnerError("generator from a different ring")
        self._gb: dict = {}

    def groebner(self, order: MonomialOrder | None = None) -> list[Poly]:
        order = order or self.ring.order
        if order not in self._gb:
            F, key = self.ring.field, order.key
            G = _reduced_basis(F, _buchberger(F, (g.terms for g in self.gens), key), key)
            self._gb[order] = [Poly(self.ring, g) for _, g in G]
        return self._gb[order]

    def _basis_pairs(self, order):
        return [(g.lm(order), g.terms) for g in self.groebner(order)]

    def reduce(self, f: Poly, order: MonomialOrder | None = None) -> Poly:
        order = order or self.ring.order
        return Poly(self.ring, _reduce(self.ring.field, f.terms, self._basis_pairs(order), order.key))

    def __contains__(self, f: Poly) -> bool:
        return self.reduce(f).is_zero()

    def contains_ideal(self, other: Ideal) -> bool:
        return all(g in self for g in other.gens)

    def is_unit(self) -> bool:
        gb = self.groebner()
        return len(gb) == 1 and gb[0].is_constant()

    def is_zero(self) -> bool:
        return not self.gens

    def __eq__(self, other):
        if not isinstance(other, Ideal) or other.ring != self.ring:
            return NotImplemented
        return self.groebner() == other.groebner()

    __hash__ = None

    def __le__(self, other: Ideal) -> bool:
        return other.contains_ideal(self)

    def __add__(self, other: Ideal) -> Ideal:
        return Ideal(self.ring, self.gens + other.gens)

    def __mul__(self, other: Ideal) -> Ideal:
        return Ideal(self.ring, [f * g for f in self.gens for g in other.gens])

    def __and__(self, other: Ideal) -> Ideal:
        return intersect_ideals(self, other)

    def basis_strings(self) -> list[str]:
        return [str(g) for g in self.groebner()]

    def __repr__(self):
        return f"Ideal({', '.join(map(str, self.gens))})"


def groebner_basis(I: Ideal, order: MonomialOrder | None = None) -> list[Poly]:
    return I.groebner(order)


def normal_form(f: Poly, I: Ideal, order: MonomialOrder | None = None) -> Poly:
    return I.reduce(f, order)


def _eliminate_front(ring: PolyRing, polys: list[Poly], nfront: int) -> list[Poly]:
    """Gröbner elements free of the first ``nfront`` variables, dropped to the tail ring."""
    F, order = ring.field, ring.order
    G = _reduced_basis(F, _buchberger(F, (p.terms for p in polys), order.key), order.key)
    return [{e[nfront:]: c for e, c in g.items()} for lm, g in G if not any(lm[:nfront])]


def eliminate(I: Ideal, vars_to_remove: Sequence[int | str]) -> Ideal:
    """``I ∩ K[remaining variables]`` (returned inside the same ring)."""
    R = I.ring
    drop = [R.names.index(v) if isinstance(v, str) else v for v in vars_to_remove]
    if not drop:
        return Ideal(R, I.gens)
    keep = [i for i in range(R.nvars) if i not in drop]
    perm = drop + keep
    S = PolyRing(R.field, [R.names[i] for i in perm], MonomialOrder("block", len(drop)))
    moved = [S.poly({tuple(e[i] for i in perm): c for e, c in g.terms.items()}) for g in I.gens]
    out = []
    for terms in _eliminate_front(S, moved, len(drop)):
        full = {}
        for e, c in terms.items():
            x = [0] * R.nvars
            for i, k in zip(keep, e):
                x[i] = k
            full[tuple(x)] = c
        out.append(R.poly(full))
    return Ideal(R, out)


def _with_tag(ring: PolyRing) -> tuple[PolyRing, Poly]:
    tag = "_t"
    while tag in ring.names:
        tag += "_"
    big = ring.with_front([tag])
    return big, big.var(0)


def intersect_ideals(I: Ideal, J: Ideal) -> Ideal:
    """``I ∩ J`` as ``(t I + (1 - t) J) ∩ K[x]``."""
    R = I.ring
    if J.ring != R:
        raise GroebnerError("ideals live in different rings")
    big, t = _with_tag(R)
    polys = [t * big.lift_from(f, 1) for f in I.gens]
    polys += [(1 - t) * big.lift_from(g, 1) for g in J.gens]
    return Ideal(R, [R.poly(g) for g in _eliminate_front(big, polys, 1)])


def saturate(I: Ideal, f: Poly) -> Ideal:
    """``I : f^∞`` via ``(I + (1 - t f)) ∩ K[x]``."""
    if f.is_zero():
        raise GroebnerError("cannot saturate by the zero polynomial")
    R = I.ring
    big, t = _with_tag(R)
    polys = [big.lift_from(g, 1) for g in I.gens] + [1 - t * big.lift_from(f, 1)]
    return Ideal(R, [R.poly(g) for g in _eliminate_front(big, polys, 1)])


def radical_membership(f: Poly, I: Ideal) -> bool:
    R = I.ring
    big, t = _with_tag(R)
    J = Ideal(big, [big.lift_from(g, 1) for g in I.gens] + [1 - t * big.lift_from(f, 1)])
    return J.is_unit()


def krull_dimension(I: Ideal) -> int:
    """Largest set of variables containing no leading-monomial support; -1 for (1)."""
    if I.is_unit():
        return -1
    n = I.ring.nvars
    supports = [frozenset(i for i, x in enumerate(g.lm()) if x) for g in I.groebner()]
    for size in range(n, -1, -1):
        for S in itertools.combinations(range(n), size):
            S = frozenset(S)
            if not any(sup <= S for sup in supports):
                return size
    return 0


class QuotientAlgebra:
    """``K[x]/I`` for zero-dimensional ``I`` with the standard-monomial basis."""

    def __init__(self, I: Ideal):
        if I.is_unit():
            self.ideal, self.basis, self.index = I, [], {}
            return
        if krull_dimension(I) != 0:
            raise GroebnerError("quotient is not finite-dimensional")
        self.ideal = I
        R = I.ring
        lms = [g.lm() for g in I.groebner()]
        basis = []
        seen = {R._zero_exp}
        frontier = [R._zero_exp]
        while frontier:
            e = frontier.pop()
            basis.append(e)
            for i in range(R.nvars):
                x = list(e)
                x[i] += 1
                x = tuple(x)
                if x not in seen and not any(_divides(lm, x) for lm in lms):
                    seen.add(x)
                    frontier.append(x)
        basis.sort(key=R.order.key)
        self.basis = basis
        self.index = {e: i for i, e in enumerate(basis)}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def vector(self, f: Poly) -> list:
        F = self.ideal.ring.field
        v = [F.zero] * self.dim
        for e, c in self.ideal.reduce(f).terms.items():
            v[self.index[e]] = c
        return v

    def element(self, v: Sequence) -> Poly:
        R = self.ideal.ring
        return R.poly({e: c for e, c in zip(self.basis, v)})

    def mult_matrix(self, f: Poly) -> list[list]:
        """Columns are images of basis elements under multiplication by ``f``."""
        R = self.ideal.ring
        cols = [self.vector(f * R.poly({e: R.field.one})) for e in self.basis]
        return [list(row) for row in zip(*cols)] if cols else []

    def minimal_polynomial(self, f: Poly) -> list:
        """Coefficients (low degree first) of the monic minimal polynomial of ``f``."""
        F = self.ideal.ring.field
        ech = _Echelon(F, self.dim)
        power = self.ideal.ring.one()
        d = 0
        while True:
            rel = ech.add(self.vector(power), d)
            if rel is not None:
                return rel
            power = self.ideal.reduce(power * f)
            d += 1

    def split_count(self) -> int:
        """Number of simple factors of a reduced quotient over a finite field.

        This is the dimension of the fixed space of ``r -> r^q``.
        """
        R = self.ideal.ring
        F = R.field
        if not F.is_finite:
            raise GroebnerError("factor counting needs a finite coefficient field")
        rows = []
        for e in self.basis:
            b = R.poly({e: F.one})
            img = self.vector(_pow_mod(b, F.q, self.ideal))
            img[self.index[e]] = F.sub(img[self.index[e]], F.one)
            rows.append(img)
        return self.dim - _rank(F, rows)


def _pow_mod(f: Poly, n: int, I: Ideal) -> Poly:
    result = f.ring.one()
    base = I.reduce(f)
    while n:
        if n & 1:
            result = I.reduce(result * base)
        base = I.reduce(base * base)
        n >>= 1
    return result


class _Echelon:
    """Incremental row echelon form tracking each row as a combination of inputs."""

    def __init__(self, F: Field, width: int):
        self.F = F
        self.rows: list[tuple[int, list, dict]] = []

    def add(self, v: Sequence, label: int):
        F = self.F
        v = list(v)
        combo = {label: F.one}
        for pivot, row, rc in self.rows:
            c = v[pivot]
            if c != 0:
                v = [F.sub(a, F.mul(c, b)) for a, b in zip(v, row)]
                for k, x in rc.items():
                    combo[k] = F.sub(combo.get(k, F.zero), F.mul(c, x))
        nz = next((i for i, x in enumerate(v) if x != 0), None)
        if nz is None:
            out = [F.zero] * (label + 1)
            for k, x in combo.items():
                out[k] = x
            return out
        inv = F.inv(v[nz])
        self.rows.append((nz, [F.mul(inv, x) for x in v], {k: F.mul(inv, x) for k, x in combo.items()}))
        return None


def _rank(F: Field, rows: list[list]) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = F.inv(rows[rank][col])
        rows[rank] = [F.mul(inv, x) for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                c = rows[i][col]
                rows[i] = [F.sub(a, F.mul(c, b)) for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def matrix_rank(F: Field, rows: list[list]) -> int:
    return _rank(F, rows)


def zero_dim_radical(I: Ideal) -> Ideal:
    """Seidenberg: add the squarefree part of each variable's minimal polynomial."""
    R = I.ring
    if I.is_unit():
        return Ideal(R, [R.one()])
    if krull_dimension(I) != 0:
        raise GroebnerError("ideal is positive-dimensional; use radical_membership instead")
    Q = QuotientAlgebra(I)
    extra = []
    for i in range(R.nvars):
        x = R.var(i)
        rad = up_radical(R.field, Q.minimal_polynomial(x))
        extra.append(sum((x**k).scale(c) for k, c in enumerate(rad) if c != 0) if rad else R.zero())
    J = Ideal(R, I.gens + extra)
    return Ideal(R, J.groebner())


def is_radical(I: Ideal) -> bool:
    return zero_dim_radical(I) == I


def is_prime_zero_dim(I: Ideal) -> bool:
    """Primality of a zero-dimensional ideal over a finite field."""
    if I.is_unit():
        return False
    if not is_radical(I):
        return False
    return QuotientAlgebra(I).split_count() == 1


# -- cofactor tracking ---------------------------------------------------------

def lift(f: Poly, I: Ideal) -> list[Poly]:
    """Cofactors ``c`` with ``f = sum c_i * I.gens[i]``; raises if ``f`` is not in ``I``."""
    R = I.ring
    F, key = R.field, R.order.key
    r = len(I.gens)
    G: list[tuple] = []

    def unit(i):
        return [dict({R._zero_exp: F.one}) if j == i else {} for j in range(r)]

    def reduce_tracked(p, rep):
        p, rep = dict(p), [dict(x) for x in rep]
        rem, quo = {}, [{} for _ in range(r)]
        while p:
            lm = max(p, key=key)
            c = p[lm]
            for glm, g, grep in G:
                if _divides(glm, lm):
                    mono = tuple(x - y for x, y in zip(lm, glm))
                    _sub_mult(F, p, c, mono, g)
                    for k in range(r):
                        _sub_mult(F, rep[k], c, mono, grep[k])
                    break
            else:
                rem[lm] = c
                del p[lm]
        return rem, rep

    def push(h, rep):
        lm = max(h, key=key)
        inv = F.inv(h[lm])
        G.append((lm, {e: F.mul(inv, c) for e, c in h.items()},
                  [{e: F.mul(inv, c) for e, c in x.items()} for x in rep]))

    for i, g in enumerate(I.gens):
        h, rep = reduce_tracked(g.terms, unit(i))
        if h:
            push(h, rep)
    pairs = [(i, j) for j in range(len(G)) for i in range(j)]
    while pairs:
        i, j = pairs.pop(0)
        li, gi, ri = G[i]
        lj, gj, rj = G[j]
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue
        lcm = _lcm(li, lj)
        mi, mj = tuple(a - b for a, b in zip(lcm, li)), tuple(a - b for a, b in zip(lcm, lj))
        s, rep = {}, [{} for _ in range(r)]
        _sub_mult(F, s, F.neg(F.one), mi, gi)
        _sub_mult(F, s, F.one, mj, gj)
        for k in range(r):
            _sub_mult(F, rep[k], F.neg(F.one), mi, ri[k])
            _sub_mult(F, rep[k], F.one, mj, rj[k])
        h, rep = reduce_tracked(s, rep)
        if h:
            push(h, rep)
            pairs.extend((k, len(G) - 1) for k in range(len(G) - 1))
    # f - sum(q_g * g) = remainder; express the subtracted part through generators.
    zero_rep = [{} for _ in range(r)]
    rem, neg_rep = reduce_tracked(f.terms, zero_rep)
    if rem:
        raise GroebnerError("polynomial is not in the ideal")
    return [-Poly(R, x) for x in neg_rep]
