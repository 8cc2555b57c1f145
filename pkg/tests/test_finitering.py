import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from dakernel.coeff import make_field
from dakernel.finitering import (
    FiniteDiffRing,
    FiniteRingError,
    catalogue,
    enumerate_ideals,
    make_finite_ring,
    maximal_ideal_orbits,
    pseudo_spectrum,
    pseudoprimes_by_definition,
    quotient_ring,
    verify_pseudoprime_props,
)
from dakernel.group import cyclic

CAT = catalogue()


def labelled(R, ideals):
    return sorted(tuple(sorted(R.label_ideal(I))) for I in ideals)


def test_make_examples():
    assert CAT["gf3xgf3-swap"].size == 9
    assert CAT["gf2[x]/(x^2)-trivial"].size == 4
    assert CAT["gf5[x]/(x^2)-neg"].size == 25


def test_enumerate_examples():
    L = enumerate_ideals(CAT["gf2[x]/(x^2)-trivial"])
    assert labelled(CAT["gf2[x]/(x^2)-trivial"], L.ideals) == [("0",), ("0", "1", "x", "x+1"), ("0", "x")]
    R = CAT["gf3xgf3-swap"]
    L = enumerate_ideals(R)
    assert sorted(len(I) for I in L.ideals) == [1, 3, 3, 9]
    assert sorted(len(I) for I in L.difference) == [1, 9]
    F = make_finite_ring({"kind": "product", "field": "gf 5", "m": 1})
    assert sorted(len(I) for I in enumerate_ideals(F).ideals) == [1, 5]


def test_pseudo_spectrum_examples():
    R = CAT["gf3xgf3-swap"]
    assert pseudo_spectrum(R) == [frozenset([R.zero])]
    T = CAT["gf2[x]/(x^2)-trivial"]
    assert pseudo_spectrum(T) == enumerate_ideals(T).primes
    N = CAT["gf5[x]/(x^2)-neg"]
    assert labelled(N, pseudo_spectrum(N)) == labelled(N, [N.principal(N.labels.index("x"))])


@pytest.mark.parametrize("name", sorted(CAT))
def test_catalogue_passes_property_suite(name):
    rep = verify_pseudoprime_props(CAT[name])
    assert rep.passed, rep.to_json()
    assert set(rep.items) >= {"radical", "saturation", "dichotomy", "product_condition", "max_to_pmax",
                              "V_intersection", "pi_preserves_intersections", "minimal_primes_associated"}


@pytest.mark.parametrize("name", ["fun-gf2-z4", "fun-gf3-klein"])
def test_fun_rings_have_one_orbit_of_maximal_ideals(name):
    R = CAT[name]
    orbits = maximal_ideal_orbits(R)
    assert len(orbits) == 1 and len(orbits[0]) == R.group.order


def test_pseudofield_has_only_trivial_difference_ideals():
    for name in ("conj-gf9-z2", "galois-gf4-z2", "fun-gf2-z4"):
        R = CAT[name]
        assert sorted(len(I) for I in enumerate_ideals(R).difference) == [1, R.size]


def test_conjugation_example_mirror():
    """``A = GF(3)[x]/(x^2-x)`` (trivial action) inside ``B = GF(3)[t]/(t^4-t^2)``, ``s(t) = -t``, via ``x -> t^2``."""
    F = make_finite_ring({"kind": "quotient", "field": "gf 3", "modulus": "x^2-x", "group": "cyclic 2", "unit": 1})
    B = CAT["gf3[t]/(t^4-t^2)-neg"]
    elems_A = list(itertools.product(range(3), repeat=2))
    elems_B = list(itertools.product(range(3), repeat=4))
    phi = np.array([elems_B.index((a0, 0, a1, 0)) for a0, a1 in elems_A])
    # phi is a difference ring embedding
    assert (phi[F.add] == B.add[np.ix_(phi, phi)]).all()
    assert (phi[F.mul] == B.mul[np.ix_(phi, phi)]).all()
    assert (phi[F.act[1]] == B.act[1][phi]).all()
    assert len(set(phi.tolist())) == len(phi)
    pspec_A, pspec_B = pseudo_spectrum(F), pseudo_spectrum(B)
    assert pspec_A == enumerate_ideals(F).primes
    assert labelled(B, pspec_B) == labelled(B, [B.generate([B.labels.index("t")]),
                                                B.generate([B.labels.index("t^2+2")])])
    contract = {q: frozenset(i for i in range(F.size) if int(phi[i]) in q) for q in pspec_B}
    assert sorted(contract.values(), key=sorted) == sorted(pspec_A, key=sorted)
    t_ideal = B.generate([B.labels.index("t")])
    assert F.label_ideal(contract[t_ideal]) == F.label_ideal(F.principal(F.labels.index("x")))


def test_bad_action_names_witness():
    with pytest.raises(FiniteRingError, match="does not preserve the modulus"):
        quotient_ring(make_field("gf 5"), "x^2-1", cyclic(2), unit=2)
    with pytest.raises(FiniteRingError, match="does not preserve the modulus"):
        quotient_ring(make_field("gf 5"), "x+1", cyclic(2), unit=-1)
    # x -> 2x has order 4, so it cannot represent the generator of Z/2
    with pytest.raises(FiniteRingError, match="action is not a homomorphism"):
        quotient_ring(make_field("gf 5"), "x^2", cyclic(2), unit=2)
    R = CAT["gf3xgf3-swap"]
    bad = list(range(R.size))
    i, j = R.labels.index("(1,0)"), R.labels.index("(2,0)")
    bad[i], bad[j] = j, i
    with pytest.raises(FiniteRingError, match=r"s is not an automorphism: \+ not preserved at \("):
        FiniteDiffRing("bad", cyclic(2), R.add, R.mul, [list(range(R.size)), bad], R.labels, R.zero, R.one)


def test_bad_tables_rejected():
    add = [[(a + b) % 2 for b in range(2)] for a in range(2)]
    mul = [[0, 1], [0, 1]]
    with pytest.raises(FiniteRingError, match=r"commutativity of \* fails at \("):
        FiniteDiffRing("bad", cyclic(1), add, mul, [[0, 1]])
    with pytest.raises(FiniteRingError, match="exceed the cap"):
        quotient_ring(make_field("gf 5"), "x^3", cyclic(1))
    with pytest.raises(FiniteRingError, match="unknown ring"):
        make_finite_ring("nope")


def test_pseudoprime_definition_agrees_with_pi_of_spec():
    for name, R in CAT.items():
        L = enumerate_ideals(R)
        assert pseudoprimes_by_definition(R, L) == pseudo_spectrum(R, L), name


# -- quotient rings against divisor counting -----------------------------------------------

def polymul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return out


def monic(p, deg):
    for low in itertools.product(range(p), repeat=deg):
        yield list(low) + [1]


def monic_divisor_count(f, p):
    n = len(f) - 1
    count = 0
    for d in range(n + 1):
        if any(polymul(a, b, p) == f for a in monic(p, d) for b in monic(p, n - d)):
            count += sum(1 for a in monic(p, d) if any(polymul(a, b, p) == f for b in monic(p, n - d)))
    return count


quotients = st.sampled_from([(2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 1), (3, 2), (3, 3), (3, 4), (5, 1),
                             (5, 2), (7, 2)]).flatmap(
    lambda pd: st.tuples(st.just(pd[0]), st.lists(st.integers(0, pd[0] - 1), min_size=pd[1], max_size=pd[1]),
                         st.sampled_from([1, pd[0] - 1])))


@settings(max_examples=60, deadline=None)
@given(quotients)
def test_random_quotient_rings(data):
    p, low, unit = data
    f = list(low) + [1]
    F = make_field(f"gf {p}")
    deg = len(f) - 1
    # x -> -x is well defined only for even or odd f
    odd_even = unit == 1 or p == 2 or all(c == 0 for i, c in enumerate(f) if i % 2 != deg % 2)
    if not odd_even:
        with pytest.raises(FiniteRingError):
            quotient_ring(F, f, cyclic(2), unit=unit)
        return
    R = quotient_ring(F, f, cyclic(2), unit=unit)
    L = enumerate_ideals(R)
    assert len(L.ideals) == monic_divisor_count(f, p)
    for I in L.ideals:
        assert all(int(R.add[a, b]) in I for a in I for b in I)
        assert all(int(R.mul[r, a]) in I for a in I for r in range(R.size))
    assert verify_pseudoprime_props(R).passed
