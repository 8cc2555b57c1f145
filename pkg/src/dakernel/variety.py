"""Pseudovarieties over ``Fun(GF(q^d))`` at desk scale.

Zero sets are found by exhaustive numpy enumeration that evaluates the
difference polynomials directly, so solving never goes through the
adjoint ideal and can serve as its oracle.  Ideals of finite point sets
come from the Buchberger-Moeller algorithm in the adjoint coordinates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .adjoint import from_adjoint, lift_adjoint_poly, transfer_point
from .coeff import Field, extend
from .diffideal import DiffIdeal, UnsupportedInput, diff_radical, quotient_degree
from .diffpoly import DiffPoly, DiffRing
from .groebner import Ideal, Poly, PolyRing, lift
from .pseudofield import fun_of, pseudo_inverse

MAX_CANDIDATES = 10**6
_CHUNK = 1 << 16


class VarietyError(ValueError):
    pass


def _colex(p):
    return tuple(x for c in reversed(p) for x in reversed(c))


@dataclass(frozen=True)
class PointSet:
    """Deduplicated points of ``Fun(L)^n`` in canonical order; ``ring`` is ``Fun(L){y}``."""

    ring: DiffRing
    points: tuple

    def __post_init__(self):
        # canonical order: base-q numbering with the first coordinate least significant
        pts = tuple(sorted(set(tuple(tuple(c) for c in p) for p in self.points), key=_colex))
        for p in pts:
            if len(p) != self.ring.n or any(len(c) != self.ring.g for c in p):
                raise VarietyError(f"point {p} does not live in Fun(K)^{self.ring.n}")
        object.__setattr__(self, "points", pts)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p):
        return tuple(tuple(c) for c in p) in set(self.points)

    def __or__(self, other: PointSet) -> PointSet:
        return PointSet(self.ring, self.points + other.points)

    def __and__(self, other: PointSet) -> PointSet:
        keep = set(other.points)
        return PointSet(self.ring, tuple(p for p in self.points if p in keep))

    def to_json(self):
        F = self.ring.A.base
        return [[[F.to_json(x) for x in c] for c in p] for p in self.points]


def extend_ring(R: DiffRing, d: int) -> tuple[DiffRing, object]:
    """``Fun(GF(q^d)){y}`` together with the coefficient embedding."""
    if not R.A.is_fun:
        raise UnsupportedInput("solving needs a Fun(K) base; normalise with taylor_normalize first")
    L, embed = extend(R.A.base, d)
    if d == 1:
        return R, embed
    return DiffRing(fun_of(L, R.group), R.n, R.names), embed


def embed_poly(f: DiffPoly, ring: DiffRing, embed) -> DiffPoly:
    return DiffPoly(ring, {e: tuple(embed(x) for x in c) for e, c in f.terms.items()})


def _candidates(L: Field, width: int, start: int, stop: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    cols = np.empty((stop - start, width), dtype=np.int64)
    for j in range(width - 1, -1, -1):
        cols[:, j] = idx % L.q
        idx //= L.q
    return cols


def _zero_mask(f: DiffPoly, X: np.ndarray, L: Field, embed) -> np.ndarray:
    """Rows of ``X`` (columns ``i*g + t`` hold ``a_i(t)``) where ``f`` vanishes."""
    R = f.ring
    G, g = R.group, R.g
    ok = np.ones(len(X), dtype=bool)
    for nu in range(g):
        acc = np.zeros(len(X), dtype=np.int64)
        # variable t(y_i) evaluated at nu reads a_i(t^-1 nu)
        col = [i * g + G.mul(G.inv(t), nu) for i in range(R.n) for t in range(g)]
        for e, c in f.terms.items():
            cv = embed(c[nu])
            if cv == 0:
                continue
            term = np.full(len(X), cv, dtype=np.int64)
            for p, k in enumerate(e):
                if k:
                    term = L.vmul(term, L.vpow(X[:, col[p]], k))
            acc = L.vadd(acc, term)
        ok &= acc == 0
    return ok


def solve_points(I: DiffIdeal | Sequence[DiffPoly], ext_degree: int = 1, ring: DiffRing | None = None) -> PointSet:
    """All common zeros in ``Fun(GF(q^d))^n`` by exhaustive evaluation."""
    if not isinstance(I, DiffIdeal):
        I = DiffIdeal(ring or I[0].ring, I)
    R = I.ring
    if not R.A.base.is_finite:
        raise UnsupportedInput("solving needs a finite coefficient field")
    big, embed = extend_ring(R, ext_degree)
    L = big.A.base
    width = R.n * R.g
    total = L.q**width
    if total > MAX_CANDIDATES:
        raise VarietyError(
            f"{L.q}^{width} = {total} candidate points exceed the cap {MAX_CANDIDATES}; "
            "use fewer variables, a smaller group or a smaller extension degree")
    gens = I.gens
    found = []
    for start in range(0, total, _CHUNK):
        X = _candidates(L, width, start, min(total, start + _CHUNK))
        for f in gens:
            if len(X) == 0:
                break
            X = X[_zero_mask(f, X, L, embed)]
        found.extend(X.tolist())
    points = [tuple(tuple(row[i * R.g:(i + 1) * R.g]) for i in range(R.n)) for row in found]
    return PointSet(big, tuple(points))


# -- ideals of points -------------------------------------------------------

def vanishing_ideal(ring: PolyRing, points: Sequence[Sequence]) -> Ideal:
    """Reduced Groebner basis of the ideal of a finite point set (Buchberger-Moeller)."""
    F, key = ring.field, ring.order.key
    pts = [tuple(p) for p in dict.fromkeys(tuple(p) for p in points)]
    if not pts:
        return Ideal(ring, [ring.one()])
    m = len(pts)
    basis_rows: list[tuple[int, list, dict]] = []   # pivot, row, combination of standard monomials
    standard: list[tuple] = []
    lms: list[tuple] = []
    out: list[Poly] = []
    todo = {ring._zero_exp}
    while todo:
        t = min(todo, key=key)
        todo.discard(t)
        if any(all(a <= b for a, b in zip(lm, t)) for lm in lms):
            continue
        v = []
        for p in pts:
            acc = F.one
            for x, k in zip(p, t):
                if k:
                    acc = F.mul(acc, F.pow(x, k))
            v.append(acc)
        combo = {t: F.one}
        for pivot, row, rc in basis_rows:
            c = v[pivot]
            if c != 0:
                v = [F.sub(a, F.mul(c, b)) for a, b in zip(v, row)]
                for mono, x in rc.items():
                    y = F.sub(combo.get(mono, F.zero), F.mul(c, x))
                    if y == 0:
                        combo.pop(mono, None)
                    else:
                        combo[mono] = y
        nz = next((i for i in range(m) if v[i] != 0), None)
        if nz is None:
            lms.append(t)
            out.append(Poly(ring, combo))
            continue
        inv = F.inv(v[nz])
        basis_rows.append((nz, [F.mul(inv, x) for x in v], {k: F.mul(inv, x) for k, x in combo.items()}))
        standard.append(t)
        for i in range(ring.nvars):
            u = list(t)
            u[i] += 1
            todo.add(tuple(u))
    return Ideal(ring, Ideal(ring, out).groebner())


def ideal_of_points(X: PointSet) -> DiffIdeal:
    R = X.ring
    adj = [transfer_point(p, R) for p in X.points]
    return from_adjoint(vanishing_ideal(R.adjoint_ring, adj), R)


# -- Nullstellensatz ------------------------------------------------------------

@dataclass
class NullstellensatzReport:
    status: str                  # holds | fails | inconclusive
    inclusion: bool              # {a} ⊆ I(V(a)), always decided
    lhs: list[str]
    rhs: list[str]
    points: PointSet
    radical_degree: int
    detail: str = ""

    @property
    def holds(self) -> bool | None:
        return {"holds": True, "fails": False}.get(self.status)


def _embed_ideal(J: Ideal, ring: PolyRing, embed) -> Ideal:
    return Ideal(ring, [g.map_coeffs(ring, embed) for g in J.gens])


def nullstellensatz_check(I: DiffIdeal, ext_degree: int = 1) -> NullstellensatzReport:
    """Compare ``{I}`` with ``I(V(I))`` computed from points over ``GF(q^d)``."""
    rad = diff_radical(I)
    degree = quotient_degree(rad)
    X = solve_points(I, ext_degree)
    big = X.ring
    _, embed = extend_ring(I.ring, ext_degree)
    lhs = _embed_ideal(rad.adjoint, big.adjoint_ring, embed)
    rhs_ideal = ideal_of_points(X)
    rhs = rhs_ideal.adjoint
    inclusion = lhs <= rhs
    if not inclusion:
        status, detail = "fails", "radical not contained in the ideal of its zero set"
    elif len(X) == degree:
        status = "holds" if lhs == rhs else "fails"
        detail = "" if status == "holds" else "point count matches but ideals differ"
    else:
        status = "inconclusive"
        detail = (f"insufficient extension degree: {len(X)} rational points, "
                  f"radical has degree {degree}")
    return NullstellensatzReport(status, inclusion, lhs.basis_strings(), rhs.basis_strings(),
                                 X, degree, detail)


# -- regular functions ------------------------------------------------------------

def _normalize_patch(g: DiffPoly, h: DiffPoly) -> tuple[DiffPoly, DiffPoly]:
    """``(prod_s s(g), h * prod_{s != e} s(g))``: same fraction, Sigma-constant denominator."""
    rest = g.ring.one()
    for s in range(1, g.ring.g):
        rest = rest * g.act(s)
    return g * rest, h * rest


def glue_regular(patches: Sequence[tuple[DiffPoly, DiffPoly]], X: DiffIdeal,
                 normalize: bool = False) -> DiffPoly:
    """One polynomial ``d`` with ``d g_i = h_i`` modulo ``I(X)`` for every patch ``(g_i, h_i)``.

    ``X`` is given by its ideal ``I(X)``.  Denominators must be Sigma-constant
    unless ``normalize`` is set, in which case each patch is first rewritten
    with the denominator ``prod_s s(g_i)``.
    """
    if not patches:
        raise VarietyError("patches do not cover X")
    R = X.ring
    patches = [(g, h) for g, h in patches]
    if normalize:
        patches = [_normalize_patch(g, h) for g, h in patches]
    for k, (g, _) in enumerate(patches):
        if not g.is_sigma_constant():
            raise VarietyError(f"denominator of patch {k} is not Sigma-constant; pass normalize=True")
    for (i, (gi, hi)), (j, (gj, hj)) in itertools.combinations(enumerate(patches), 2):
        if hi * gj - hj * gi not in X:
            raise VarietyError(f"patches {i} and {j} are incompatible")
    J = X.adjoint
    A = R.adjoint_ring
    G = R.group
    live = [(g.component(0), h) for g, h in patches if not g.component(0).is_zero()]
    cover = Ideal(A, [g for g, _ in live] + J.groebner())
    if not cover.is_unit():
        raise VarietyError("patches do not cover X")
    cof = lift(A.one(), cover)[:len(live)]
    d = R.zero()
    for t in range(R.g):
        D = A.zero()
        for c, (_, h) in zip(cof, live):
            D = D + c * h.act(G.inv(t)).component(0)
        d = d + lift_adjoint_poly(J.reduce(D), R).act(t)
    return d


@dataclass(frozen=True)
class LocalFractionDatum:
    """``h/g`` (regular: ``g`` Sigma-constant and invertible) or ``h g*`` (pseudoregular)."""

    h: DiffPoly
    g: DiffPoly
    flavor: str = "regular"
    e: tuple | None = field(default=None)

    def evaluate(self, point):
        A = self.h.ring.A
        gv, hv = self.g.evaluate(point), self.h.evaluate(point)
        if self.flavor == "regular" and any(x == 0 for x in gv):
            raise VarietyError("denominator vanishes at the point")
        out = A.mul(hv, pseudo_inverse(A, gv).astar)
        return A.mul(self.e, out) if self.e is not None else out


def pseudoregular_to_regular(h: DiffPoly, g: DiffPoly, x) -> tuple[DiffPoly, DiffPoly]:
    """Replace ``h g*`` near ``x`` by ``h0 / g0`` with ``g0`` Sigma-constant.

    With ``e`` the support idempotent of ``g(x)`` and ``g' = (1-e) + e g``,
    ``g0 = prod_s s(g')`` and ``h0 = e h prod_{s != e} s(g')``.  On ``X_{g0}``
    one has ``h0 / g0 = e h g*``.
    """
    R = g.ring
    A = R.A
    gx = g.evaluate(x)
    if A.is_zero(gx):
        raise VarietyError("g vanishes at the point")
    e = pseudo_inverse(A, gx).e
    gp = R.const(A.sub(A.one, e)) + R.const(e) * g
    rest = R.one()
    for s in range(1, R.g):
        rest = rest * gp.act(s)
    return R.const(e) * h * rest, gp * rest


def support_idempotent(g: DiffPoly, x) -> tuple:
    A = g.ring.A
    return pseudo_inverse(A, g.evaluate(x)).e
