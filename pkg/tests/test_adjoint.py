import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from corpus import corpus
from dakernel.adjoint import (
    adjoint_poly,
    from_adjoint,
    lift_adjoint_poly,
    taylor_hom,
    to_adjoint,
    transfer_point,
    untransfer_point,
)
from dakernel.coeff import make_field
from dakernel.diffideal import DiffIdeal, UnsupportedInput, diff_dimension
from dakernel.diffpoly import DiffRing
from dakernel.groebner import Ideal, PolyRing, krull_dimension
from dakernel.group import cyclic
from dakernel.pseudofield import catalogue, fun_of

CAT = catalogue()


def ring(q, G, n=1, names=None):
    return DiffRing(fun_of(make_field(f"gf {q}"), G), n, names)


def test_to_adjoint_examples():
    R = ring(2, cyclic(2), 1, ["x"])
    K = R.adjoint_ring
    x = R.var(0)
    xe, xs = K.var(0), K.var(1)
    assert to_adjoint(DiffIdeal(R, [x * x.act(1), x + x.act(1) - 1])) == Ideal(K, [xe * xs, xe + xs - 1])
    assert to_adjoint(DiffIdeal(R, [])).is_zero()
    R5 = ring(5, cyclic(2))
    K5 = R5.adjoint_ring
    y = R5.var(0)
    J = to_adjoint(DiffIdeal(R5, [R5.const((2, 3)) * y]))
    assert set(J.gens) == {K5.var(0) * 2, K5.var(1) * 3}


def test_from_adjoint_examples():
    R = ring(2, cyclic(2), 1, ["x"])
    K = R.adjoint_ring
    x = R.var(0)
    xe, xs = K.var(0), K.var(1)
    assert from_adjoint(Ideal(K, [xe * xs, xe + xs - 1]), R) == DiffIdeal(R, [x * x.act(1), x + x.act(1) - 1])
    assert from_adjoint(Ideal(K, [K.one()]), R).is_unit()
    D = from_adjoint(Ideal(K, [xe]), R)
    assert D.gens == [R.const((1, 0)) * x]


def test_transfer_examples():
    R = ring(2, cyclic(2))
    assert transfer_point([(1, 0)], R) == (1, 0)
    assert transfer_point([(0, 1)], R) == (0, 1)
    R3 = ring(3, cyclic(2), 2)
    assert transfer_point([(2, 2), (1, 1)], R3) == (2, 2, 1, 1)
    R4 = ring(5, cyclic(4))
    a = (0, 1, 2, 3)  # a(s^k) = k
    x = transfer_point([a], R4)
    assert x[1] == a[3] and x == (0, 3, 2, 1)
    assert untransfer_point(x, R4) == (a,)


def test_non_fun_base_rejected():
    R = DiffRing(CAT["conj-gf9-z2"], 1)
    with pytest.raises(UnsupportedInput, match="taylor_normalize"):
        to_adjoint(DiffIdeal(R, [R.var(0)]))
    with pytest.raises(UnsupportedInput):
        from_adjoint(Ideal(R.adjoint_ring, []), R)


def test_taylor_examples():
    P = CAT["fun-gf3-z2"]
    T = taylor_hom(P)
    assert all(T(a) == a for a in P.elements())
    Ts = taylor_hom(P, sigma=1)
    assert all(Ts(a) == P.act(1, T(a)) for a in P.elements())
    Q = CAT["conj-gf9-z2"]
    F = Q.base
    TQ = taylor_hom(Q)
    for a, b in itertools.product(list(F.elements()), repeat=2):
        assert TQ((F.add(a, b), F.sub(a, b))) == (F.add(a, b), F.sub(F.frobenius(a), F.frobenius(b)))


@pytest.mark.parametrize("name", sorted(CAT))
def test_taylor_is_the_unique_difference_hom(name):
    """Every ring map ``K^m -> K^|G|`` is coordinatewise a projection followed by a Frobenius power;
    among all of them exactly one lifts ``phi`` at ``sigma`` and commutes with the group."""
    P = CAT[name]
    F, G = P.base, P.group
    k = F.frobenius_order
    elems = list(P.elements())
    rng = random.Random(0)
    sample = elems if len(elems) <= 81 else rng.sample(elems, 81)
    for sigma in range(G.order):
        for factor in range(P.m):
            T = taylor_hom(P, factor, 0, sigma)
            found = []
            for table in itertools.product(itertools.product(range(P.m), range(k)), repeat=G.order):
                def phi(a, table=table):
                    return tuple(F.frobenius(a[j], x) for j, x in table)
                if any(phi(a)[sigma] != a[factor] for a in sample):
                    continue
                if all(T.target.act(s, phi(a)) == phi(P.act(s, a)) for a in sample for s in range(G.order)):
                    found.append(table)
            assert len(found) == 1
            assert all(T(a) == tuple(F.frobenius(a[j], x) for j, x in found[0]) for a in elems)


def test_roundtrips_on_corpus():
    for I in corpus(seed=21, size=30):
        R = I.ring
        J = to_adjoint(I)
        assert from_adjoint(J, R) == I
        assert to_adjoint(from_adjoint(J, R)) == J
        assert to_adjoint(from_adjoint(Ideal(J.ring, J.groebner()), R)).basis_strings() == J.basis_strings()


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3]), st.sampled_from([1, 2, 4]), st.integers(0, 2**32 - 1))
def test_adjoint_to_diff_to_adjoint(q, g, seed):
    """Any ideal of ``K[y@t]`` survives the trip through difference ideals."""
    rng = random.Random(seed)
    R = ring(q, cyclic(g))
    K = R.adjoint_ring
    gens = []
    for _ in range(rng.randint(0, 3)):
        f = K.zero()
        for _ in range(rng.randint(1, 3)):
            e = [0] * K.nvars
            for _ in range(rng.randint(0, 2)):
                e[rng.randrange(K.nvars)] += 1
            f = f + K.poly({tuple(e): rng.randrange(q)})
        gens.append(f)
    J = Ideal(K, gens)
    assert to_adjoint(from_adjoint(J, R)) == J
    assert krull_dimension(J) == diff_dimension(from_adjoint(J, R))


def test_point_compatibility_exhaustive():
    cases = [I for I in corpus(seed=4, size=40) if I.ring.A.base.q ** (I.ring.n * I.ring.g) <= 10**4]
    assert len(cases) >= 15
    for I in cases:
        R = I.ring
        J = to_adjoint(I)
        A = R.A
        for a in itertools.product(list(A.elements()), repeat=R.n):
            inside = all(A.is_zero(f.evaluate(a)) for f in I.gens)
            x = transfer_point(a, R)
            assert inside == all(g.evaluate(x) == 0 for g in J.gens)
            assert untransfer_point(x, R) == tuple(a)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 3, 5]), st.sampled_from([1, 2, 3, 4]), st.integers(1, 2), st.integers(0, 2**32 - 1))
def test_evaluation_commutes_with_transfer(q, g, n, seed):
    rng = random.Random(seed)
    R = ring(q, cyclic(g), n)
    A = R.A
    f = R.zero()
    for _ in range(3):
        m = R.const(A.random_element(rng))
        for _ in range(rng.randint(0, 2)):
            m = m * R.var(rng.randrange(n), rng.randrange(g))
        f = f + m
    a = [A.random_element(rng) for _ in range(n)]
    assert adjoint_poly(f).evaluate(transfer_point(a, R)) == f.evaluate(a)[0]
    # the lift of an adjoint polynomial only lives in the identity factor
    h = lift_adjoint_poly(adjoint_poly(f), R)
    assert h.evaluate(a)[0] == f.evaluate(a)[0] and all(c == 0 for c in h.evaluate(a)[1:])


def test_lift_adjoint_poly_ring_check():
    R = ring(3, cyclic(2))
    other = PolyRing(make_field("gf 3"), ["z"])
    with pytest.raises(ValueError):
        from_adjoint(Ideal(other, []), R)
