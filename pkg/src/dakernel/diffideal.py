"""Difference ideals of ``Fun(K){y}`` and ordinary ideals stored by components.

A difference ideal is kept as its list of generators; all questions about
it are answered through its adjoint ideal in ``K[y_i@t]`` (see
:mod:`dakernel.adjoint`).  Ordinary ideals use :class:`ComponentIdeal`, one
ideal of ``K[y_i@t]`` per factor of ``Fun(K){y} = prod_t K[y_i@t]``.  The
component at ``t`` holds ``gamma_e(t^-1 f)``, so translating by ``s`` just
moves the component at ``t`` to ``s t``.
"""

from __future__ import annotations

import itertools
from functools import cached_property, reduce
from typing import Iterable, Sequence

from .diffpoly import DiffPoly, DiffRing
from .groebner import (
    GroebnerError,
    Ideal,
    QuotientAlgebra,
    intersect_ideals,
    is_prime_zero_dim,
    krull_dimension,
    zero_dim_radical,
)


class UnsupportedInput(ValueError):
    """Raised when an operation needs a zero-dimensional (or Fun-based) input."""


def _dedup(polys: Iterable[DiffPoly]) -> list[DiffPoly]:
    out, seen = [], set()
    for f in polys:
        if f.is_zero() or f in seen:
            continue
        seen.add(f)
        out.append(f)
    return out


def closure_gens(E: Sequence[DiffPoly]) -> list[DiffPoly]:
    """All translates ``s · f``; they generate ``[E]`` as an ordinary ideal."""
    E = list(E)
    if not E:
        return []
    g = E[0].ring.g
    return _dedup(f.act(s) for f in E for s in range(g))


class DiffIdeal:
    """The difference ideal ``[gens]``."""

    def __init__(self, ring: DiffRing, gens: Iterable[DiffPoly] = ()):
        self.ring = ring
        self.gens = _dedup(gens)
        for f in self.gens:
            if f.ring != ring:
                raise ValueError("generator from a different ring")

    @cached_property
    def adjoint(self) -> Ideal:
        from .adjoint import to_adjoint

        return to_adjoint(self)

    def __eq__(self, other):
        if not isinstance(other, DiffIdeal) or other.ring != self.ring:
            return NotImplemented
        return self.adjoint == other.adjoint

    __hash__ = None

    def __contains__(self, f: DiffPoly) -> bool:
        G = self.ring.group
        J = self.adjoint
        return all(f.act(G.inv(t)).component(0) in J for t in range(self.ring.g))

    def __le__(self, other: DiffIdeal) -> bool:
        return all(f in other for f in self.gens)

    def __add__(self, other: DiffIdeal) -> DiffIdeal:
        return DiffIdeal(self.ring, self.gens + other.gens)

    def __mul__(self, other: DiffIdeal) -> DiffIdeal:
        A, B = closure_gens(self.gens), closure_gens(other.gens)
        return DiffIdeal(self.ring, [f * g for f in A for g in B])

    def __and__(self, other: DiffIdeal) -> DiffIdeal:
        from .adjoint import from_adjoint

        return from_adjoint(intersect_ideals(self.adjoint, other.adjoint), self.ring)

    def is_unit(self) -> bool:
        return self.adjoint.is_unit()

    def closure(self) -> list[DiffPoly]:
        return closure_gens(self.gens)

    def __repr__(self):
        return f"[{', '.join(map(str, self.gens))}]"


def diff_dimension(I: DiffIdeal) -> int:
    """Krull dimension of ``A{y}/I`` as the largest dimension of its factors.

    Uses the literal coordinate projections of the closed generator set, not
    the adjoint ideal.
    """
    gens = I.closure()
    R = I.ring
    dims = [krull_dimension(Ideal(R.adjoint_ring, [f.component(t) for f in gens])) for t in range(R.g)]
    return max(dims)


class ComponentIdeal:
    """An ordinary ideal of ``Fun(K){y}`` as one ideal of ``K[y_i@t]`` per group element."""

    def __init__(self, ring: DiffRing, comps: Sequence[Ideal]):
        if len(comps) != ring.g:
            raise ValueError(f"need {ring.g} components")
        self.ring = ring
        self.comps = tuple(comps)

    @classmethod
    def from_gens(cls, ring: DiffRing, gens: Sequence[DiffPoly]) -> ComponentIdeal:
        G = ring.group
        comps = [Ideal(ring.adjoint_ring, [f.act(G.inv(t)).component(0) for f in gens])
                 for t in range(ring.g)]
        return cls(ring, comps)

    def __eq__(self, other):
        if not isinstance(other, ComponentIdeal):
            return NotImplemented
        return all(a == b for a, b in zip(self.comps, other.comps))

    __hash__ = None

    def __and__(self, other: ComponentIdeal) -> ComponentIdeal:
        return ComponentIdeal(self.ring, [intersect_ideals(a, b) for a, b in zip(self.comps, other.comps)])

    def __add__(self, other: ComponentIdeal) -> ComponentIdeal:
        return ComponentIdeal(self.ring, [a + b for a, b in zip(self.comps, other.comps)])

    def __le__(self, other: ComponentIdeal) -> bool:
        return all(a <= b for a, b in zip(self.comps, other.comps))

    def is_difference(self) -> bool:
        return all(c == self.comps[0] for c in self.comps[1:])

    def contains(self, f: DiffPoly) -> bool:
        G = self.ring.group
        return all(f.act(G.inv(t)).component(0) in self.comps[t] for t in range(self.ring.g))

    def __repr__(self):
        return "(" + "; ".join(str(c.groebner()) for c in self.comps) + ")"


def sigma_image_ideal(a: ComponentIdeal, s: int) -> ComponentIdeal:
    G = a.ring.group
    comps = [None] * a.ring.g
    for t in range(a.ring.g):
        comps[G.mul(s, t)] = a.comps[t]
    return ComponentIdeal(a.ring, comps)


def underscore_sigma(a: ComponentIdeal) -> DiffIdeal:
    """Largest difference ideal inside ``a``: every component becomes the intersection."""
    from .adjoint import from_adjoint

    J = reduce(intersect_ideals, a.comps)
    return from_adjoint(J, a.ring)


def as_component_ideal(I: DiffIdeal) -> ComponentIdeal:
    return ComponentIdeal(I.ring, [I.adjoint] * I.ring.g)


def _as_ideal(E, ring: DiffRing | None = None) -> DiffIdeal:
    if isinstance(E, DiffIdeal):
        return E
    E = list(E)
    if ring is None:
        if not E:
            raise ValueError("empty generator list needs an explicit ring")
        ring = E[0].ring
    return DiffIdeal(ring, E)


def diff_radical(E, ring: DiffRing | None = None) -> DiffIdeal:
    """``{E}``, the radical difference ideal, for zero-dimensional input."""
    from .adjoint import from_adjoint

    I = _as_ideal(E, ring)
    try:
        rad = zero_dim_radical(I.adjoint)
    except GroebnerError as exc:
        raise UnsupportedInput(f"{exc}; radical_membership decides single polynomials") from None
    return from_adjoint(rad, I.ring)


def _check_zero_dim(J: Ideal, what: str):
    if krull_dimension(J) > 0:
        raise UnsupportedInput(f"{what} needs a zero-dimensional adjoint ideal (or minimal primes)")


def is_pseudoprime(q: DiffIdeal, minimal_primes: Sequence[Ideal] | None = None) -> bool:
    """Pseudoprime test through primality of the adjoint ideal.

    For positive-dimensional input the caller may pass the minimal primes of
    the adjoint ideal; the ideal is then pseudoprime iff it is their
    intersection and there is exactly one of them.
    """
    J = q.adjoint
    if J.is_unit():
        return False
    if minimal_primes is not None:
        primes = [P for P in minimal_primes if not any(Q <= P and not P <= Q for Q in minimal_primes)]
        distinct = []
        for P in primes:
            if not any(P == D for D in distinct):
                distinct.append(P)
        if reduce(intersect_ideals, distinct) != J:
            return False
        return len(distinct) == 1
    _check_zero_dim(J, "is_pseudoprime")
    if not J.ring.field.is_finite:
        raise UnsupportedInput("primality of zero-dimensional ideals needs a finite field")
    return is_prime_zero_dim(J)


def is_pseudomaximal(m: DiffIdeal) -> bool:
    """True iff the adjoint quotient is a finite field."""
    J = m.adjoint
    if J.is_unit() or krull_dimension(J) > 0:
        return False
    if not J.ring.field.is_finite:
        raise UnsupportedInput("maximality test needs a finite field")
    return is_prime_zero_dim(J)


def quotient_degree(I: DiffIdeal) -> int:
    """``dim_K K[y_i@t]/adjoint``; raises for positive-dimensional input."""
    J = I.adjoint
    if J.is_unit():
        return 0
    _check_zero_dim(J, "quotient_degree")
    return QuotientAlgebra(J).dim


def open_basis_intersection(s: DiffPoly, t: DiffPoly) -> list[DiffPoly]:
    """Generators ``{a(s) b(t)}`` of basic opens covering ``X_s ∩ X_t``."""
    g = s.ring.g
    return _dedup(s.act(a) * t.act(b) for a, b in itertools.product(range(g), repeat=2))
