"""The adjoint correspondence between ``Fun(K){y}`` and ``K[y_i@t]``.

``to_adjoint`` applies ``f -> gamma_e(f)`` to every translate of every
generator; ``from_adjoint`` multiplies by the indicator of the identity.
Points move by ``(i, t) -> a_i(t^-1)``: the adjoint variable ``y_i@t`` is
``gamma_e(t(y_i))`` and ``(t a)(e) = a(t^-1)``.
"""

from __future__ import annotations

from typing import Sequence

from .diffideal import DiffIdeal, UnsupportedInput
from .diffpoly import DiffPoly, DiffRing
from .groebner import Ideal, Poly
from .pseudofield import Pseudofield, PseudofieldError, TaylorMap, fun_of, taylor_table


def _require_fun(ring: DiffRing):
    if not ring.A.is_fun:
        raise UnsupportedInput("adjoint needs a Fun(K) base; normalise with taylor_normalize first")


def adjoint_poly(f: DiffPoly) -> Poly:
    _require_fun(f.ring)
    return f.component(0)


def to_adjoint(I: DiffIdeal) -> Ideal:
    R = I.ring
    _require_fun(R)
    gens = [f.act(s).component(0) for f in I.gens for s in range(R.g)]
    return Ideal(R.adjoint_ring, gens)


def lift_adjoint_poly(g: Poly, ring: DiffRing) -> DiffPoly:
    """``e_id · g`` with ``y_i@t`` read as ``t(y_i)``."""
    A = ring.A
    zero = A.base.zero
    return DiffPoly(ring, {e: (c,) + (zero,) * (A.m - 1) for e, c in g.terms.items()})


def from_adjoint(J: Ideal, ring: DiffRing) -> DiffIdeal:
    _require_fun(ring)
    if J.ring != ring.adjoint_ring:
        raise ValueError("adjoint ideal lives in a different ring")
    return DiffIdeal(ring, [lift_adjoint_poly(g, ring) for g in J.groebner()])


def transfer_point(a: Sequence[tuple], ring: DiffRing) -> tuple:
    """Point of ``Fun(K)^n`` to its adjoint point in ``K^(n|G|)``."""
    G = ring.group
    return tuple(a[i][G.inv(t)] for i in range(ring.n) for t in range(ring.g))


def untransfer_point(x: Sequence, ring: DiffRing) -> tuple:
    G = ring.group
    g = ring.g
    return tuple(tuple(x[i * g + G.inv(t)] for t in range(g)) for i in range(ring.n))


def taylor_hom(P: Pseudofield, factor: int = 0, frob_exp: int = 0, sigma: int = 0) -> TaylorMap:
    """Taylor homomorphism at ``sigma`` over ``phi = frob^frob_exp ∘ proj_factor``.

    The two defining properties are re-checked on a ring generating set.
    """
    table = taylor_table(P, factor, frob_exp, sigma)
    phi_map = TaylorMap(P, fun_of(P.base, P.group), sigma, table, P.m == P.group.order)
    F = P.base
    gens = [P.indicator(i) for i in range(P.m)]
    if F.kind == "extension":
        gens += [P.mul(P.const(F.gen()), u) for u in gens]
    for a in gens:
        image = phi_map(a)
        if image[sigma] != F.frobenius(a[factor], frob_exp):
            raise PseudofieldError("Taylor map does not lift the projection")
        for s in range(P.group.order):
            if phi_map.target.act(s, image) != phi_map(P.act(s, a)):
                raise PseudofieldError("Taylor map is not equivariant")
    return phi_map
