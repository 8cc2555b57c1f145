"""Pseudofields as products ``K^m`` with a transitive action of a finite group.

Each group element ``s`` is stored as a permutation of the factor indices
together with one Frobenius exponent per factor::

    (s . a)_i = frob(a_{perm(s)^-1(i)}, autos(s)[i])

``Fun(K)`` is the case ``m = |G|`` with left translation and no Frobenius.
Elements are plain tuples of field values.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping, NamedTuple, Sequence

from .coeff import Field, make_field
from .group import Group, cyclic, direct_product

PseudofieldElem = tuple


class PseudofieldError(ValueError):
    pass


class Pseudofield:
    def __init__(self, base: Field, group: Group, perm: Sequence[Sequence[int]],
                 autos: Sequence[Sequence[int]], fun: bool = False):
        self.base = base
        self.group = group
        self.m = len(perm[0])
        self.perm = tuple(tuple(p) for p in perm)
        self.autos = tuple(tuple(a) for a in autos)
        self._perm_inv = tuple(tuple(p.index(i) for i in range(self.m)) for p in self.perm)
        self.is_fun = fun
        self.zero = (base.zero,) * self.m
        self.one = (base.one,) * self.m

    # -- ring structure (coordinatewise) -----------------------------------

    def add(self, a, b):
        F = self.base
        return tuple(F.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        F = self.base
        return tuple(F.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        F = self.base
        return tuple(F.neg(x) for x in a)

    def mul(self, a, b):
        F = self.base
        return tuple(F.mul(x, y) for x, y in zip(a, b))

    def pow(self, a, n: int):
        F = self.base
        return tuple(F.pow(x, n) for x in a)

    def const(self, c) -> PseudofieldElem:
        return (c,) * self.m

    def element(self, coords: Sequence) -> PseudofieldElem:
        if len(coords) != self.m:
            raise PseudofieldError(f"expected {self.m} coordinates, got {len(coords)}")
        return tuple(coords)

    def is_zero(self, a) -> bool:
        return all(x == 0 for x in a)

    def act(self, s: int, a) -> PseudofieldElem:
        if s == 0:
            return a
        F = self.base
        src, ex = self._perm_inv[s], self.autos[s]
        return tuple(F.frobenius(a[src[i]], ex[i]) for i in range(self.m))

    def is_fixed(self, a) -> bool:
        return all(self.act(s, a) == a for s in range(self.group.order))

    def elements(self):
        return itertools.product(list(self.base.elements()), repeat=self.m)

    def random_element(self, rng) -> PseudofieldElem:
        return tuple(self.base.random_element(rng) for _ in range(self.m))

    def size(self) -> int | None:
        return None if self.base.q is None else self.base.q**self.m

    def format(self, a) -> str:
        if len(set(a)) == 1:
            return self.base.format(a[0])
        return "(" + ",".join(self.base.format(x) for x in a) + ")"

    def to_json(self, a):
        return [self.base.to_json(x) for x in a]

    def indicator(self, i: int) -> PseudofieldElem:
        F = self.base
        return tuple(F.one if j == i else F.zero for j in range(self.m))

    def __repr__(self):
        kind = "Fun" if self.is_fun else "Pseudofield"
        return f"{kind}({self.base!r}, |G|={self.group.order}, m={self.m})"

    def __eq__(self, other):
        return (isinstance(other, Pseudofield) and self.base == other.base
                and self.group == other.group and self.perm == other.perm
                and self.autos == other.autos)

    def __hash__(self):
        return hash((self.base, self.group, self.perm, self.autos))


class PseudoInversePair(NamedTuple):
    e: PseudofieldElem
    astar: PseudofieldElem


def fun_of(K: Field, G: Group) -> Pseudofield:
    """``Fun(K)``: coordinate ``t`` of ``s . a`` is ``a(s^-1 t)``."""
    n = G.order
    perm = [[G.mul(s, t) for t in range(n)] for s in range(n)]
    autos = [[0] * n for _ in range(n)]
    return Pseudofield(K, G, perm, autos, fun=True)


def _compose(data_s, data_t, k):
    """Action data of ``s t`` from the data of ``s`` and ``t``."""
    ps, a_s = data_s
    pt, a_t = data_t
    m = len(ps)
    ps_inv = [ps.index(i) for i in range(m)]
    perm = tuple(ps[pt[i]] for i in range(m))
    autos = tuple((a_s[i] + a_t[ps_inv[i]]) % k for i in range(m))
    return perm, autos


def _parse_perm(spec, m):
    if isinstance(spec, str):
        img = list(range(m))
        for cycle in spec.replace(")", "|").replace("(", "").split("|"):
            pts = [int(x) for x in cycle.replace(",", " ").split()]
            for a, b in zip(pts, pts[1:] + pts[:1]):
                img[a] = b
        return tuple(img)
    return tuple(int(x) for x in spec)


def action_data(K: Field, G: Group, perm: Mapping, autos: Mapping | None = None,
                m: int | None = None) -> tuple[list, list]:
    """Extend action data given on a generating set of ``G`` to all of ``G``.

    ``perm`` maps group elements (index or name) to a permutation of factor
    indices, either as an image list or in cycle notation ``"(0 1)"``;
    ``autos`` maps elements to one Frobenius exponent per factor.  Returns
    per-element permutations and exponent tuples.
    """
    autos = autos or {}
    k = K.frobenius_order
    keys = {G.elem(s).index: v for s, v in perm.items()}
    if m is None:
        m = max((len(v) for v in keys.values() if not isinstance(v, str)), default=None)
        if m is None:
            m = 1 + max(int(x) for v in keys.values() for x in v.replace("(", " ").replace(")", " ").split())
    given = {}
    for s, p in keys.items():
        p = _parse_perm(p, m)
        if sorted(p) != list(range(m)):
            raise PseudofieldError(f"perm({G.names[s]}) is not a permutation of 0..{m - 1}")
        given[s] = (p, tuple(0 for _ in range(m)))
    for s, ex in autos.items():
        s = G.elem(s).index
        ex = tuple(_parse_auto(x) % k for x in ex)
        if len(ex) != m:
            raise PseudofieldError(f"autos({G.names[s]}) needs {m} entries")
        given[s] = (given.get(s, (tuple(range(m)), None))[0], ex)
    ident = (tuple(range(m)), (0,) * m)
    if 0 in given and given[0] != ident:
        raise PseudofieldError("the identity must act trivially")
    data = {0: ident}
    frontier = [0]
    while frontier:
        t = frontier.pop()
        for s, ds in given.items():
            st = G.mul(s, t)
            new = _compose(ds, data[t], k)
            if st in data:
                if data[st] != new:
                    raise PseudofieldError(
                        f"action is not a homomorphism at ({G.names[s]}, {G.names[t]})")
            else:
                data[st] = new
                frontier.append(st)
    if len(data) != G.order:
        raise PseudofieldError("the given elements do not generate the group")
    for s, t in itertools.product(range(G.order), repeat=2):
        if data[G.mul(s, t)] != _compose(data[s], data[t], k):
            raise PseudofieldError(f"action is not a homomorphism at ({G.names[s]}, {G.names[t]})")
    return [data[s][0] for s in range(G.order)], [data[s][1] for s in range(G.order)]


def make_product_pseudofield(K: Field, G: Group, perm: Mapping, autos: Mapping | None = None,
                             m: int | None = None) -> Pseudofield:
    """``K^m`` with the action generated by ``perm`` and ``autos`` (see :func:`action_data`)."""
    perms, auts = action_data(K, G, perm, autos, m)
    m = len(perms[0])
    if len({p[0] for p in perms}) != m:
        raise PseudofieldError("action on factors is not transitive: not a simple difference ring")
    is_fun = m == G.order and all(
        perms[s][t] == G.mul(s, t) for s in range(G.order) for t in range(m)
    ) and not any(any(a) for a in auts)
    return Pseudofield(K, G, perms, auts, fun=is_fun)


def _parse_auto(x) -> int:
    if isinstance(x, int):
        return x
    x = x.strip()
    if x in ("id", "0"):
        return 0
    if x.startswith("frob"):
        return int(x[4:] or 1)
    return int(x)


def gamma_eval(P: Pseudofield, s: int, a):
    """Coordinate ``a(s)`` of an element of ``Fun(K)``."""
    if not P.is_fun:
        raise PseudofieldError("gamma_eval needs Fun(K); normalise with taylor_normalize first")
    return a[s]


def sigma_act(P: Pseudofield, s: int, a):
    return P.act(s, a)


def pseudo_inverse(P: Pseudofield, a) -> PseudoInversePair:
    F = P.base
    e = tuple(F.zero if x == 0 else F.one for x in a)
    astar = tuple(F.zero if x == 0 else F.inv(x) for x in a)
    return PseudoInversePair(e, astar)


def taylor_table(P: Pseudofield, factor: int, frob_exp: int, s: int) -> tuple:
    """Rows ``t -> (j, x)`` with ``Phi_s(a)(t) = frob(a_j, x)``.

    ``Phi_s(a)(t) = phi(s t^-1 a)`` where ``phi`` is projection on ``factor``
    followed by ``frob_exp`` Frobenius steps.
    """
    G, k = P.group, P.base.frobenius_order
    rows = []
    for t in range(G.order):
        r = G.mul(s, G.inv(t))
        rows.append((P._perm_inv[r][factor], (P.autos[r][factor] + frob_exp) % k))
    return tuple(rows)


@dataclass(frozen=True)
class TaylorMap:
    """Coordinate description of a difference map ``P -> Fun(K)``."""

    source: Pseudofield
    target: Pseudofield
    sigma: int
    table: tuple
    isomorphism: bool

    def __call__(self, a):
        F = self.source.base
        return tuple(F.frobenius(a[j], x) for j, x in self.table)

    @property
    def status(self) -> str:
        return "isomorphism" if self.isomorphism else "embedding, not isomorphism"


def taylor_normalize(P: Pseudofield, i: int = 0) -> TaylorMap:
    """Taylor map at the identity for the projection onto factor ``i``.

    The map is always injective; it is onto ``Fun(K)`` exactly when the
    number of factors equals the group order.
    """
    if not 0 <= i < P.m:
        raise PseudofieldError(f"factor index {i} out of range")
    table = taylor_table(P, i, 0, 0)
    return TaylorMap(P, fun_of(P.base, P.group), 0, table, P.m == P.group.order)


# -- catalogue ----------------------------------------------------------------

def catalogue() -> dict[str, Pseudofield]:
    """Small pseudofields used by the test and acceptance suites."""
    gf3, gf2, gf5 = make_field("gf 3"), make_field("gf 2"), make_field("gf 5")
    gf4 = make_field("gf 2^2 modulus w^2+w+1")
    gf9 = make_field("gf 3^2 modulus w^2+1")
    z2, z4 = cyclic(2), cyclic(4)
    return {
        "fun-gf5-trivial": fun_of(gf5, cyclic(1)),
        "fun-gf3-z2": fun_of(gf3, z2),
        "fun-gf4-z2": fun_of(gf4, z2),
        "fun-gf2-z4": fun_of(gf2, z4),
        "fun-gf2-klein": fun_of(gf2, direct_product(z2, z2)),
        "fun-gf3-z3": fun_of(gf3, cyclic(3)),
        "conj-gf9-z2": make_product_pseudofield(gf9, z2, {"s": "(0 1)"}, {"s": ["frob", "frob"]}),
        "quarter-gf9-z4": make_product_pseudofield(gf9, z4, {"s": "(0 1)"}, {"s": ["id", "frob"]}),
        "galois-gf4-z2": make_product_pseudofield(gf4, z2, {"s": [0]}, {"s": ["frob"]}),
        "galois-gf9-z4": make_product_pseudofield(gf9, z4, {"s": [0]}, {"s": ["frob"]}),
    }
