"""Finite difference rings given by explicit tables, with brute-force ideal theory.

Elements are the integers ``0..N-1``; ``add``, ``mul`` and the action are
numpy lookup tables.  Ideals are frozensets of element indices.  Everything
here is computed from the definitions, which makes the module a reference
for the faster Groebner-based code.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Callable, Mapping, Sequence

import numpy as np

from .coeff import Field, _format_upoly, make_field, parse_upoly
from .group import Group, make_group
from .pseudofield import Pseudofield, action_data, catalogue as pseudofield_catalogue

MAX_SIZE = 81

Ideal = frozenset


class FiniteRingError(ValueError):
    pass


class FiniteDiffRing:
    def __init__(self, name: str, group: Group, add, mul, act, labels: Sequence[str] | None = None,
                 zero: int = 0, one: int = 1):
        self.name = name
        self.group = group
        self.add = np.asarray(add, dtype=np.int64)
        self.mul = np.asarray(mul, dtype=np.int64)
        self.act = np.asarray(act, dtype=np.int64)
        self.size = len(self.add)
        if self.size > MAX_SIZE:
            raise FiniteRingError(f"{name}: {self.size} elements exceed the cap {MAX_SIZE}")
        self.labels = list(labels) if labels is not None else [str(i) for i in range(self.size)]
        self.zero, self.one = zero, one
        self._validate()

    def _validate(self):
        N, A, M = self.size, self.add, self.mul
        r = np.arange(N)

        def fail(what, x, y):
            raise FiniteRingError(f"{self.name}: {what} fails at ({self.labels[x]}, {self.labels[y]})")

        for table, what in ((A, "commutativity of +"), (M, "commutativity of *")):
            bad = np.argwhere(table != table.T)
            if len(bad):
                fail(what, *bad[0])
        if not (A[self.zero] == r).all() or not (M[self.one] == r).all():
            raise FiniteRingError(f"{self.name}: zero or one is not neutral")
        if not (A == self.zero).any(axis=1).all():
            raise FiniteRingError(f"{self.name}: some element has no additive inverse")
        for table, what in ((A, "associativity of +"), (M, "associativity of *")):
            # both sides indexed [a, b, c]
            lhs = table[table[:, :, None], r[None, None, :]]
            rhs = table[r[:, None, None], table[None, :, :]]
            bad = np.argwhere(lhs != rhs)
            if len(bad):
                fail(what, *bad[0][:2])
        lhs = M[r[:, None, None], A[None, :, :]]
        rhs = A[M[:, :, None], M[:, None, :]]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            fail("distributivity", *bad[0][:2])
        G = self.group
        for s in range(G.order):
            g = self.act[s]
            if sorted(g.tolist()) != list(range(N)):
                raise FiniteRingError(f"{self.name}: {G.names[s]} is not a bijection")
            if g[self.one] != self.one:
                raise FiniteRingError(f"{self.name}: {G.names[s]} does not fix 1")
            for table, what in ((A, "+"), (M, "*")):
                bad = np.argwhere(g[table] != table[g[:, None], g[None, :]])
                if len(bad):
                    x, y = bad[0]
                    raise FiniteRingError(
                        f"{self.name}: {G.names[s]} is not an automorphism: "
                        f"{what} not preserved at ({self.labels[x]}, {self.labels[y]})")
            for t in range(G.order):
                if not (self.act[G.mul(s, t)] == g[self.act[t]]).all():
                    raise FiniteRingError(
                        f"{self.name}: action is not a homomorphism at ({G.names[s]}, {G.names[t]})")

    def __repr__(self):
        return f"FiniteDiffRing({self.name!r}, {self.size} elements, |G|={self.group.order})"

    # -- ideal arithmetic -----------------------------------------------------

    @cached_property
    def everything(self) -> Ideal:
        return frozenset(range(self.size))

    def principal(self, a: int) -> Ideal:
        return frozenset(self.mul[:, a].tolist())

    def ideal_sum(self, I: Ideal, J: Ideal) -> Ideal:
        return frozenset(np.unique(self.add[np.ix_(sorted(I), sorted(J))]).tolist())

    def generate(self, gens) -> Ideal:
        out = frozenset([self.zero])
        for g in gens:
            out = self.ideal_sum(out, self.principal(g))
        return out

    def product(self, I: Ideal, J: Ideal) -> Ideal:
        return self.generate(np.unique(self.mul[np.ix_(sorted(I), sorted(J))]).tolist())

    def image(self, I: Ideal, s: int) -> Ideal:
        return frozenset(self.act[s][sorted(I)].tolist())

    def is_difference(self, I: Ideal) -> bool:
        return all(self.image(I, s) == I for s in range(self.group.order))

    def pi(self, I: Ideal) -> Ideal:
        """Largest difference ideal inside ``I``, straight from the definition."""
        return frozenset(a for a in I if all(int(self.act[s][a]) in I for s in range(self.group.order)))

    def pi_by_images(self, I: Ideal) -> Ideal:
        return reduce(frozenset.intersection, (self.image(I, s) for s in range(self.group.order)))

    def power(self, a: int, n: int) -> int:
        out = self.one
        for _ in range(n):
            out = int(self.mul[out, a])
        return out

    def powers(self, a: int) -> list[int]:
        """``a^0, a^1, ...`` up to the first repetition."""
        seen, out, x = set(), [], self.one
        while x not in seen:
            seen.add(x)
            out.append(x)
            x = int(self.mul[x, a])
        return out

    def radical(self, I: Ideal) -> Ideal:
        return frozenset(a for a in range(self.size) if any(x in I for x in self.powers(a)))

    def saturation(self, I: Ideal, s: int) -> Ideal:
        """``I : s^inf``."""
        pw = self.powers(s)
        return frozenset(a for a in range(self.size) if any(int(self.mul[a, x]) in I for x in pw))

    def is_prime(self, I: Ideal) -> bool:
        if len(I) == self.size:
            return False
        out = [a for a in range(self.size) if a not in I]
        return all(int(self.mul[a, b]) not in I for a in out for b in out)

    def label_ideal(self, I: Ideal) -> list[str]:
        return [self.labels[a] for a in sorted(I)]


# -- enumeration -------------------------------------------------------------

@dataclass
class IdealLattice:
    ideals: list
    difference: list
    primes: list
    maximal: list


def enumerate_ideals(R: FiniteDiffRing) -> IdealLattice:
    """All ideals as closures of sums of principal ideals; flags the difference ones."""
    found = {R.principal(a) for a in range(R.size)}
    frontier = list(found)
    while frontier:
        new = []
        for I in frontier:
            for J in list(found):
                K = R.ideal_sum(I, J)
                if K not in found:
                    found.add(K)
                    new.append(K)
        frontier = new
    ideals = sorted(found, key=lambda I: (len(I), sorted(I)))
    primes = [I for I in ideals if R.is_prime(I)]
    proper = [I for I in ideals if len(I) < R.size]
    maximal = [I for I in proper if not any(I < J for J in proper)]
    return IdealLattice(ideals, [I for I in ideals if R.is_difference(I)], primes, maximal)


def pseudo_spectrum(R: FiniteDiffRing, lattice: IdealLattice | None = None) -> list:
    """``pi(Spec R)`` deduplicated; a finite ring has ``Spec = Max``."""
    lattice = lattice or enumerate_ideals(R)
    out = []
    for p in lattice.primes:
        q = R.pi(p)
        if q not in out:
            out.append(q)
    return sorted(out, key=lambda I: (len(I), sorted(I)))


def pseudoprimes_by_definition(R: FiniteDiffRing, lattice: IdealLattice | None = None) -> list:
    """Maximal difference ideals avoiding ``S`` for ``S`` = powers of one element or a prime complement."""
    lattice = lattice or enumerate_ideals(R)
    families = [frozenset(R.powers(a)) for a in range(R.size)]
    families += [R.everything - p for p in lattice.primes]
    out = []
    for S in set(families):
        avoiding = [I for I in lattice.difference if not (I & S)]
        for I in avoiding:
            if not any(I < J for J in avoiding) and I not in out:
                out.append(I)
    return sorted(out, key=lambda I: (len(I), sorted(I)))


# -- property suite ----------------------------------------------------------------

@dataclass
class PropertyReport:
    ring: str
    items: dict = field(default_factory=dict)

    def record(self, name: str, ok: bool, witness=None):
        entry = self.items.setdefault(name, {"pass": True, "witness": None})
        if not ok and entry["pass"]:
            entry["pass"], entry["witness"] = False, witness

    @property
    def passed(self) -> bool:
        return all(v["pass"] for v in self.items.values())

    def failures(self) -> list[str]:
        return [k for k, v in self.items.items() if not v["pass"]]

    def to_json(self):
        return {"ring": self.ring, "passed": self.passed, "items": self.items}


def verify_pseudoprime_props(R: FiniteDiffRing) -> PropertyReport:
    rep = PropertyReport(R.name)
    L = enumerate_ideals(R)
    G = R.group
    pspec = pseudo_spectrum(R, L)
    lab = R.label_ideal

    for p in L.primes:
        rep.record("pi_matches_intersection", R.pi(p) == R.pi_by_images(p), lab(p))
    rep.record("pspec_matches_definition", pseudoprimes_by_definition(R, L) == pspec,
               [lab(q) for q in pspec])

    for q in pspec:
        rep.record("radical", R.radical(q) == q, lab(q))
        for p in L.primes:
            if R.pi(p) == q:
                rep.record("associated_intersection", q == R.pi_by_images(p), [lab(q), lab(p)])
        for s in range(R.size):
            if s not in q:
                rep.record("saturation", R.pi(R.saturation(q, s)) == q, [lab(q), R.labels[s]])
        for a, b in itertools.product(L.difference, repeat=2):
            prod_in = all(int(R.mul[x, y]) in q for x in a for y in b)
            rep.record("product_condition", not prod_in or a <= q or b <= q, [lab(q), lab(a), lab(b)])
        over = [p for p in L.primes if q <= p]
        minimal = [p for p in over if not any(p2 < p for p2 in over)]
        for p in minimal:
            rep.record("minimal_primes_associated", R.pi(p) == q, [lab(q), lab(p)])
    for q1, q2 in itertools.product(pspec, repeat=2):
        for s in range(R.size):
            if R.saturation(q1, s) == R.saturation(q2, s):
                ok = (s in q1 and s in q2) or q1 == q2
                rep.record("dichotomy", ok, [lab(q1), lab(q2), R.labels[s]])
    proper_diff = [I for I in L.difference if len(I) < R.size]
    pmax = [I for I in proper_diff if not any(I < J for J in proper_diff)]
    for m in L.maximal:
        rep.record("max_to_pmax", R.pi(m) in pmax, lab(m))

    def V(I):
        return frozenset(i for i, q in enumerate(pspec) if I <= q)

    for a, b in itertools.product(L.difference, repeat=2):
        va, vb = V(a), V(b)
        rep.record("V_intersection", V(a & b) == va | vb, [lab(a), lab(b)])
        rep.record("V_product", V(R.product(a, b)) == va | vb, [lab(a), lab(b)])
    for fam in itertools.chain.from_iterable(itertools.combinations(L.ideals, k) for k in (1, 2, 3)):
        lhs = R.pi(reduce(frozenset.intersection, fam))
        rhs = reduce(frozenset.intersection, [R.pi(I) for I in fam])
        rep.record("pi_preserves_intersections", lhs == rhs, [lab(I) for I in fam])
    for I in L.difference:
        if R.radical(I) == I:
            above = [q for q in pspec if I <= q]
            meet = reduce(frozenset.intersection, above, R.everything)
            rep.record("radical_is_pseudoprime_intersection", meet == I, lab(I))
    return rep


def maximal_ideal_orbits(R: FiniteDiffRing) -> list[list]:
    """Orbits of the group on the maximal ideals."""
    L = enumerate_ideals(R)
    rest = list(L.maximal)
    orbits = []
    while rest:
        m = rest[0]
        orb = []
        for s in range(R.group.order):
            img = R.image(m, s)
            if img not in orb:
                orb.append(img)
        orbits.append(orb)
        rest = [x for x in rest if x not in orb]
    return orbits


# -- constructors -------------------------------------------------------------

def _tables(elems: list, add: Callable, mul: Callable, acts: list[Callable]):
    index = {e: i for i, e in enumerate(elems)}
    A = [[index[add(x, y)] for y in elems] for x in elems]
    M = [[index[mul(x, y)] for y in elems] for x in elems]
    act = [[index[f(x)] for x in elems] for f in acts]
    return A, M, act


def _check_size(name, size):
    if size > MAX_SIZE:
        raise FiniteRingError(f"{name}: {size} elements exceed the cap {MAX_SIZE}")


def product_ring(F: Field, G: Group, m: int, perm: Mapping, autos: Mapping | None = None,
                 name: str | None = None) -> FiniteDiffRing:
    """``F^m`` with group elements permuting (and Frobenius-twisting) the factors."""
    name = name or f"{F.describe()}^{m}"
    _check_size(name, F.q**m)
    perms, auts = action_data(F, G, perm, autos, m)
    elems = list(itertools.product(list(F.elements()), repeat=m))

    def act_fn(s):
        inv = [perms[s].index(i) for i in range(m)]
        return lambda a: tuple(F.frobenius(a[inv[i]], auts[s][i]) for i in range(m))

    A, M, act = _tables(elems, lambda a, b: tuple(map(F.add, a, b)),
                        lambda a, b: tuple(map(F.mul, a, b)), [act_fn(s) for s in range(G.order)])
    labels = ["(" + ",".join(F.format(x) for x in e) + ")" for e in elems]
    return FiniteDiffRing(name, G, A, M, act, labels, zero=0, one=elems.index((F.one,) * m))


def from_pseudofield(P: Pseudofield, name: str = "pseudofield") -> FiniteDiffRing:
    F, m = P.base, P.m
    _check_size(name, F.q**m)
    elems = list(P.elements())
    A, M, act = _tables(elems, P.add, P.mul, [lambda a, s=s: P.act(s, a) for s in range(P.group.order)])
    return FiniteDiffRing(name, P.group, A, M, act, [P.format(e) for e in elems],
                          zero=0, one=elems.index(P.one))


def quotient_ring(F: Field, modulus: Sequence | str, G: Group, unit=1, name: str | None = None,
                  var: str = "x") -> FiniteDiffRing:
    """``F[x]/(f)`` with the generator of the cyclic group ``G`` acting by ``x -> unit*x``."""
    if isinstance(modulus, str):
        modulus = parse_upoly(modulus, F.p, var) if F.kind == "prime" else None
        if modulus is None:
            raise FiniteRingError("string moduli need a prime field")
    f = [F.from_int(c) if isinstance(c, int) else c for c in modulus]
    deg = len(f) - 1
    if deg < 1:
        raise FiniteRingError("modulus must have positive degree")
    name = name or f"{F.describe()}[{var}]/(modulus)"
    _check_size(name, F.q**deg)
    lead_inv = F.inv(f[-1])
    f = [F.mul(lead_inv, c) for c in f]
    unit = F.from_int(unit) if isinstance(unit, int) else unit
    # x -> unit*x is well defined iff f(unit*x) is a multiple of f
    if any(F.mul(F.pow(unit, i), c) != F.mul(F.pow(unit, deg), c) for i, c in enumerate(f)):
        raise FiniteRingError(f"{name}: x -> {F.format(unit)}*x does not preserve the modulus")

    def mul(a, b):
        prod = [F.zero] * (2 * deg - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                prod[i + j] = F.add(prod[i + j], F.mul(x, y))
        for k in range(len(prod) - 1, deg - 1, -1):
            c = prod[k]
            if c != 0:
                for i in range(deg + 1):
                    prod[k - deg + i] = F.sub(prod[k - deg + i], F.mul(c, f[i]))
        return tuple(prod[:deg])

    def act_fn(s):
        u = F.pow(unit, s)   # element s of cyclic(n) is the s-th power of the generator
        return lambda a: tuple(F.mul(F.pow(u, i), c) for i, c in enumerate(a))

    elems = list(itertools.product(list(F.elements()), repeat=deg))
    A, M, act = _tables(elems, lambda a, b: tuple(map(F.add, a, b)), mul,
                        [act_fn(s) for s in range(G.order)])
    labels = []
    for e in elems:
        if F.kind == "prime":
            labels.append(_format_upoly(list(e), var) or "0")
        else:
            labels.append("[" + ",".join(F.format(c) for c in e) + "]")
    one = elems.index((F.one,) + (F.zero,) * (deg - 1))
    return FiniteDiffRing(name, G, A, M, act, labels, zero=0, one=one)


def make_finite_ring(spec) -> FiniteDiffRing:
    """Build a ring from a catalogue name or a dict.

    Dict forms::

        {"kind": "product", "field": "gf 3", "m": 2, "group": "cyclic 2", "perm": {"s": "(0 1)"}}
        {"kind": "quotient", "field": "gf 5", "modulus": "x^2", "group": "cyclic 2", "unit": -1}
        {"kind": "pseudofield", "name": "conj-gf9-z2"}
    """
    if isinstance(spec, FiniteDiffRing):
        return spec
    if isinstance(spec, str):
        cat = catalogue_specs()
        if spec not in cat:
            raise FiniteRingError(f"unknown ring {spec!r}; known: {', '.join(cat)}")
        return make_finite_ring(dict(cat[spec], name=spec))
    kind = spec.get("kind")
    name = spec.get("name")
    if kind == "pseudofield":
        P = pseudofield_catalogue()[spec["pseudofield"] if "pseudofield" in spec else spec["name"]]
        return from_pseudofield(P, name or "pseudofield")
    F = make_field(spec["field"])
    G = make_group(spec.get("group", "cyclic 1"))
    if kind == "product":
        return product_ring(F, G, int(spec["m"]), spec.get("perm", {}), spec.get("autos"), name)
    if kind == "quotient":
        return quotient_ring(F, spec["modulus"], G, spec.get("unit", 1), name, spec.get("var", "x"))
    raise FiniteRingError(f"unknown ring kind {kind!r}")


def catalogue_specs() -> dict[str, dict]:
    return {
        "gf3xgf3-swap": {"kind": "product", "field": "gf 3", "m": 2, "group": "cyclic 2",
                         "perm": {"s": "(0 1)"}},
        "gf2[x]/(x^2)-trivial": {"kind": "quotient", "field": "gf 2", "modulus": "x^2"},
        "gf5[x]/(x^2)-neg": {"kind": "quotient", "field": "gf 5", "modulus": "x^2",
                             "group": "cyclic 2", "unit": -1},
        "fun-gf2-z4": {"kind": "pseudofield", "pseudofield": "fun-gf2-z4"},
        "fun-gf3-klein": {"kind": "product", "field": "gf 3", "m": 4, "group": "klein",
                          "perm": {"g1": [1, 0, 3, 2], "g2": [2, 3, 0, 1]}},
        "gf3[x]/(x^2-1)-neg": {"kind": "quotient", "field": "gf 3", "modulus": "x^2-1",
                               "group": "cyclic 2", "unit": -1},
        "conj-gf9-z2": {"kind": "pseudofield", "pseudofield": "conj-gf9-z2"},
        "gf3[x]/(x^3)-neg": {"kind": "quotient", "field": "gf 3", "modulus": "x^3",
                             "group": "cyclic 2", "unit": -1},
        "galois-gf4-z2": {"kind": "pseudofield", "pseudofield": "galois-gf4-z2"},
        "gf2^3-swap01": {"kind": "product", "field": "gf 2", "m": 3, "group": "cyclic 2",
                         "perm": {"s": "(0 1)"}},
        "gf3[t]/(t^4-t^2)-neg": {"kind": "quotient", "field": "gf 3", "modulus": "t^4-t^2",
                                 "group": "cyclic 2", "unit": -1, "var": "t"},
    }


def catalogue() -> dict[str, FiniteDiffRing]:
    return {name: make_finite_ring(name) for name in catalogue_specs()}
