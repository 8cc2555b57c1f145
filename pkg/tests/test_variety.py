import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from corpus import corpus
from dakernel.adjoint import to_adjoint, transfer_point, untransfer_point
from dakernel.coeff import extend, make_field
from dakernel.diffideal import DiffIdeal, UnsupportedInput, is_pseudomaximal
from dakernel.diffpoly import DiffRing
from dakernel.groebner import Ideal, PolyRing, intersect_ideals
from dakernel.group import cyclic
from dakernel.pseudofield import catalogue, fun_of
from dakernel.variety import (
    LocalFractionDatum,
    PointSet,
    VarietyError,
    glue_regular,
    ideal_of_points,
    nullstellensatz_check,
    pseudoregular_to_regular,
    solve_points,
    support_idempotent,
    vanishing_ideal,
)


def ring(q, G=None, n=1, names=None):
    return DiffRing(fun_of(make_field(f"gf {q}"), G or cyclic(2)), n, names)


def conj(q):
    R = ring(q, names=["x"])
    x = R.var(0)
    return R, x, DiffIdeal(R, [x * x.act(1), x + x.act(1) - 1])


# -- solving ---------------------------------------------------------------------------

def test_solve_examples():
    R, x, I = conj(2)
    pts = solve_points(I)
    assert pts.to_json() == [[[1, 0]], [[0, 1]]]
    R5 = ring(5, names=["x"])
    x5 = R5.var(0)
    assert set(solve_points(DiffIdeal(R5, [x5 + x5.act(1), x5 * x5 - 4])).points) == {((2, 3),), ((3, 2),)}
    assert len(solve_points(DiffIdeal(R, [R.one()]))) == 0


def test_solve_cap():
    R = ring(5, cyclic(4), 3)
    with pytest.raises(VarietyError, match="exceed the cap"):
        solve_points(DiffIdeal(R, [R.var(0)]))


def test_solve_needs_fun_and_finite_field():
    R = DiffRing(catalogue()["conj-gf9-z2"], 1)
    with pytest.raises(UnsupportedInput, match="taylor_normalize"):
        solve_points(DiffIdeal(R, [R.var(0)]))
    RQ = DiffRing(fun_of(make_field("q"), cyclic(2)), 1)
    with pytest.raises(UnsupportedInput):
        solve_points(DiffIdeal(RQ, [RQ.var(0)]))


def brute_force_adjoint_zeros(I, d=1):
    """Zeros of the adjoint ideal in ``GF(q^d)^(n|G|)``, moved back to ``Fun(GF(q^d))^n``."""
    R = I.ring
    L, embed = extend(R.A.base, d)
    K = PolyRing(L, R.adjoint_ring.names)
    gens = [g.map_coeffs(K, embed) for g in to_adjoint(I).gens]
    out = set()
    for x in itertools.product(range(L.q), repeat=R.n * R.g):
        if all(g.evaluate(x) == 0 for g in gens):
            out.add(untransfer_point(x, R))
    return out


def test_solve_matches_adjoint_oracle():
    checked = 0
    for I in corpus(seed=13, size=40):
        R = I.ring
        if R.A.base.q ** (R.n * R.g) > 5000:
            continue
        checked += 1
        assert set(solve_points(I).points) == brute_force_adjoint_zeros(I)
    assert checked >= 20


def test_solve_over_extension_matches_adjoint_oracle():
    R = ring(3)
    y = R.var(0)
    for gens in ([y - y.act(1), y * y + 1], [y * y + 1], [y * y.act(1) - 1, y + y.act(1)]):
        I = DiffIdeal(R, gens)
        assert set(solve_points(I, 2).points) == brute_force_adjoint_zeros(I, 2)
    assert len(solve_points(DiffIdeal(R, [y - y.act(1), y * y + 1]), 2)) == 2


def test_point_order_is_canonical():
    R, _, I = conj(3)
    pts = solve_points(I)
    again = PointSet(pts.ring, tuple(reversed(pts.points)) + pts.points)
    assert again.points == pts.points


# -- ideals of points --------------------------------------------------------------------

def test_ideal_of_points_examples():
    R, x, I = conj(2)
    K = R.adjoint_ring
    xe, xs = K.var(0), K.var(1)
    X = PointSet(R, (((1, 0),), ((0, 1),)))
    assert ideal_of_points(X).adjoint == Ideal(K, [xe + xs + 1, xe * xs])
    single = ideal_of_points(PointSet(R, (((1, 0),),)))
    assert is_pseudomaximal(single) and single == DiffIdeal(R, [x - R.const((1, 0))])
    assert ideal_of_points(PointSet(R, ())).is_unit()


@settings(max_examples=50, deadline=None)
@given(st.sampled_from([2, 3, 5]), st.integers(1, 4), st.integers(0, 2**32 - 1))
def test_buchberger_moeller_matches_intersection_tree(q, nvars, seed):
    rng = random.Random(seed)
    F = make_field(f"gf {q}")
    K = PolyRing(F, [f"x{i}" for i in range(nvars)])
    pts = [tuple(rng.randrange(q) for _ in range(nvars)) for _ in range(rng.randint(1, 6))]
    expect = Ideal(K, [K.one()])
    for p in pts:
        expect = intersect_ideals(expect, Ideal(K, [K.var(i) - c for i, c in enumerate(p)]))
    got = vanishing_ideal(K, pts)
    assert got == expect
    assert got.basis_strings() == Ideal(K, expect.groebner()).basis_strings()


def test_ideal_of_points_is_closed():
    rng = random.Random(2)
    for _ in range(10):
        R = ring(rng.choice([2, 3]), cyclic(rng.choice([1, 2])), rng.choice([1, 2]))
        A = R.A
        X = PointSet(R, tuple(tuple(A.random_element(rng) for _ in range(R.n)) for _ in range(rng.randint(1, 4))))
        I = ideal_of_points(X)
        for p in X:
            assert all(A.is_zero(f.evaluate(p)) for f in I.gens)
        assert solve_points(I).points == X.points


def test_zero_set_lattice_identities():
    by_ring = {}
    for I in corpus(seed=17, size=60, n=1):
        by_ring.setdefault(I.ring, []).append(I)
    pairs = 0
    for ideals in by_ring.values():
        for a, b in itertools.combinations(ideals[:5], 2):
            Va, Vb = solve_points(a), solve_points(b)
            assert set(solve_points(a & b).points) == set((Va | Vb).points)
            assert set(solve_points(a * b).points) == set((Va | Vb).points)
            assert set(solve_points(a + b).points) == set((Va & Vb).points)
            pairs += 1
    assert pairs >= 20


# -- Nullstellensatz -------------------------------------------------------------------------

def test_nullstellensatz_examples():
    _, _, I = conj(2)
    assert nullstellensatz_check(I, 1).holds
    R = ring(3)
    y = R.var(0)
    rep = nullstellensatz_check(DiffIdeal(R, [y * y]), 1)
    assert rep.holds and rep.lhs == rep.rhs == ["y@s", "y@e"]
    I = DiffIdeal(R, [y - y.act(1), y * y + 1])
    rep1 = nullstellensatz_check(I, 1)
    assert rep1.status == "inconclusive" and rep1.holds is None and rep1.inclusion
    assert "insufficient extension degree" in rep1.detail
    assert nullstellensatz_check(I, 2).holds


def test_nullstellensatz_inclusion_always_holds():
    for I in corpus(seed=31, size=25):
        rep = nullstellensatz_check(I, 1)
        assert rep.inclusion and rep.status != "fails"
        assert (rep.status == "holds") == (len(rep.points) == rep.radical_degree)


# -- gluing -------------------------------------------------------------------------------

def test_glue_examples():
    R = ring(5, cyclic(1), names=["u"])
    u = R.var(0)
    X = DiffIdeal(R, [])
    assert glue_regular([(u, u * u), (1 - u, u - u * u)], X) == u
    h = u**3 + 2
    assert glue_regular([(R.one(), h)], X) == h
    assert glue_regular([(R.from_int(2), h)], X) == h * 3


def test_glue_constant_invertible_patch_z2():
    R = ring(5)
    y = R.var(0)
    h = R.const((1, 2)) * y + y.act(1)
    c = R.from_int(3)
    d = glue_regular([(c, h)], DiffIdeal(R, []))
    assert d * c == h


def test_glue_errors():
    R = ring(3, cyclic(1), names=["u"])
    u = R.var(0)
    X = DiffIdeal(R, [])
    with pytest.raises(VarietyError, match="patches do not cover X"):
        glue_regular([(u, u), (u * u, u * u)], X)
    with pytest.raises(VarietyError, match="patches 0 and 1 are incompatible"):
        glue_regular([(u, u), (1 - u, R.one())], X)
    Rz = ring(3)
    y = Rz.var(0)
    with pytest.raises(VarietyError, match="not Sigma-constant"):
        glue_regular([(y, y)], DiffIdeal(Rz, []))


def test_glue_modulo_ideal():
    # on X = V(u^2 - u) the patches u and 1-u cover, with incompatible lifts off X
    R = ring(3, cyclic(1), names=["u"])
    u = R.var(0)
    X = DiffIdeal(R, [u * u - u])
    d = glue_regular([(u, u * 2), (1 - u, R.zero())], X)
    assert d - 2 * u in X


def test_glue_with_normalization():
    R = ring(3)
    y = R.var(0)
    X = DiffIdeal(R, [y - y.act(1)])
    d0 = y * y + R.const((1, 2))
    g1, g2 = y + 1, y
    d = glue_regular([(g1, d0 * g1), (g2, d0 * g2)], X, normalize=True)
    assert d - d0 in X


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([3, 5]), st.integers(0, 2**32 - 1))
def test_glue_recovers_hidden_function(q, seed):
    rng = random.Random(seed)
    R = ring(q)
    A = R.A
    y = R.var(0)
    sym = y + y.act(1)
    d0 = R.const(A.random_element(rng)) * y * y + R.const(A.random_element(rng)) * y.act(1)
    g1 = sym * sym + R.from_int(rng.randrange(1, q))
    g2 = 1 - g1 * R.from_int(rng.randrange(1, q))
    X = DiffIdeal(R, rng.choice([[], [y * y.act(1)], [y**q - y]]))
    d = glue_regular([(g1, d0 * g1), (g2, d0 * g2)], X)
    for g, h in [(g1, d0 * g1), (g2, d0 * g2)]:
        assert d * g - h in X
    assert d - d0 in X


# -- pseudoregular functions ---------------------------------------------------------------

def test_pseudoregular_example():
    R = ring(5)
    A = R.A
    g, h = R.const((2, 0)), R.const((1, 1))
    x = [(0, 0)]
    assert support_idempotent(g, x) == (1, 0)
    h0, g0 = pseudoregular_to_regular(h, g, x)
    assert g0 == R.const((2, 2)) and h0 == R.const((1, 0))
    assert A.mul(h0.evaluate(x), (3, 3)) == (3, 0)
    datum = LocalFractionDatum(h, g, "pseudoregular")
    assert datum.evaluate(x) == (3, 0)


def test_pseudoregular_invertible_denominator():
    R = ring(5)
    y = R.var(0)
    g, h = R.const((1, 2)), y
    h0, g0 = pseudoregular_to_regular(h, g, [(0, 0)])
    assert g0 == g * g.act(1) and h0 == h * g.act(1)


def test_pseudoregular_unit_denominator():
    R = ring(5)
    y = R.var(0)
    x = [(1, 4)]
    h0, g0 = pseudoregular_to_regular(y * y, R.one(), x)
    assert g0 == R.one() and h0 == y * y


def test_pseudoregular_rejects_zero():
    R = ring(5)
    y = R.var(0)
    with pytest.raises(VarietyError):
        pseudoregular_to_regular(y, y, [(0, 0)])


def test_regular_datum_rejects_vanishing_denominator():
    R = ring(5)
    y = R.var(0)
    with pytest.raises(VarietyError):
        LocalFractionDatum(y, y).evaluate([(1, 0)])
