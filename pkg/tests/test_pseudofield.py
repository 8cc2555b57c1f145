import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from dakernel.coeff import make_field
from dakernel.finitering import from_pseudofield, maximal_ideal_orbits
from dakernel.group import cyclic, make_group
from dakernel.pseudofield import (
    PseudofieldError,
    catalogue,
    fun_of,
    gamma_eval,
    make_product_pseudofield,
    pseudo_inverse,
    sigma_act,
    taylor_normalize,
)

GF3, GF5 = make_field("gf 3"), make_field("gf 5")
GF9 = make_field("gf 3^2 modulus w^2+1")
CAT = catalogue()


def test_fun_action_z2():
    P = fun_of(GF3, cyclic(2))
    assert sigma_act(P, 1, (1, 2)) == (2, 1)
    for a, b in itertools.product(range(3), repeat=2):
        assert P.act(1, (a, b)) == (b, a)


def test_fun_trivial_group_is_field():
    P = fun_of(GF5, cyclic(1))
    assert P.m == 1 and all(P.act(0, a) == a for a in P.elements())


def test_fun_action_z4_rotates():
    P = fun_of(make_field("gf 2"), cyclic(4))
    for a in P.elements():
        assert P.act(1, a) == (a[3], a[0], a[1], a[2])


def test_conjugation_pseudofield_action():
    P = CAT["conj-gf9-z2"]
    w = GF9.gen()
    assert sigma_act(P, 1, (w, 0)) == (0, GF9.pow(w, 3))
    assert not P.is_fun


def test_quarter_pseudofield_has_order_four_action():
    P = CAT["quarter-gf9-z4"]
    a = (GF9.gen(), 1)
    orbit = [a]
    for _ in range(3):
        orbit.append(P.act(1, orbit[-1]))
    assert P.act(1, orbit[-1]) == a
    assert len(set(orbit)) == 4


def test_intransitive_product_rejected():
    with pytest.raises(PseudofieldError, match="not a simple difference ring"):
        make_product_pseudofield(GF9, cyclic(2), {"s": [0, 1]})


def test_homomorphism_failure_names_pair():
    # a transposition cannot represent the generator of Z/3
    with pytest.raises(PseudofieldError, match=r"not a homomorphism at \("):
        make_product_pseudofield(GF9, cyclic(3), {"s": "(0 1)"})


def test_gamma_eval():
    P = fun_of(GF5, cyclic(2))
    assert gamma_eval(P, 0, (1, 0)) == 1
    assert gamma_eval(P, 1, (2, 3)) == 3
    for a in P.elements():
        assert gamma_eval(P, 1, P.act(1, a)) == gamma_eval(P, 0, a)


def test_gamma_eval_rejects_non_fun():
    with pytest.raises(PseudofieldError, match="taylor_normalize"):
        gamma_eval(CAT["conj-gf9-z2"], 0, (1, 1))


def test_pseudo_inverse_examples():
    P = fun_of(GF5, cyclic(2))
    assert pseudo_inverse(P, (2, 0)) == ((1, 0), (3, 0))
    assert pseudo_inverse(P, (0, 0)) == ((0, 0), (0, 0))
    assert pseudo_inverse(P, (1, 1)) == ((1, 1), (1, 1))


def test_taylor_normalize_fun_is_identity():
    P = fun_of(GF3, cyclic(2))
    T = taylor_normalize(P, 0)
    assert T.isomorphism and all(T(a) == a for a in P.elements())


def test_taylor_normalize_conjugation():
    P = CAT["conj-gf9-z2"]
    T = taylor_normalize(P)
    assert T.status == "isomorphism"
    images = {T(a) for a in P.elements()}
    assert len(images) == 81


def test_taylor_normalize_quarter_embedding():
    P = CAT["quarter-gf9-z4"]
    T = taylor_normalize(P)
    assert T.status == "embedding, not isomorphism"
    bar = lambda x: GF9.frobenius(x)  # noqa: E731
    for a, b in P.elements():
        assert T((a, b)) == (a, bar(b), bar(a), b)


@pytest.mark.parametrize("name", sorted(CAT))
def test_taylor_identity_row_is_projection(name):
    P = CAT[name]
    T = taylor_normalize(P, 0)
    for a in P.elements():
        assert T(a)[0] == a[0]


@pytest.mark.parametrize("name", sorted(CAT))
def test_action_is_left_action_exhaustive(name):
    P = CAT[name]
    G = P.group
    elems = list(P.elements())
    for s, t in itertools.product(range(G.order), repeat=2):
        st_ = G.mul(s, t)
        for a in elems:
            assert P.act(s, P.act(t, a)) == P.act(st_, a)


@pytest.mark.parametrize("name", sorted(CAT))
def test_action_is_ring_automorphism(name):
    P = CAT[name]
    rng = random.Random(1)
    for _ in range(200):
        a, b = P.random_element(rng), P.random_element(rng)
        for s in range(P.group.order):
            assert P.act(s, P.mul(a, b)) == P.mul(P.act(s, a), P.act(s, b))
            assert P.act(s, P.add(a, b)) == P.add(P.act(s, a), P.act(s, b))


@pytest.mark.parametrize("name", [n for n in sorted(CAT) if CAT[n].is_fun and CAT[n].size() <= 81])
def test_fun_has_one_orbit_of_group_order_maximal_ideals(name):
    P = CAT[name]
    orbits = maximal_ideal_orbits(from_pseudofield(P))
    assert len(orbits) == 1 and len(orbits[0]) == P.group.order


fun_elements = st.sampled_from([(q, g) for q in (2, 3, 5) for g in ("cyclic 1", "cyclic 2", "cyclic 4", "klein")]).flatmap(
    lambda qg: st.tuples(
        st.just(fun_of(make_field(f"gf {qg[0]}"), make_group(qg[1]))),
        st.lists(st.integers(0, qg[0] - 1), min_size=make_group(qg[1]).order, max_size=make_group(qg[1]).order),
    ))


@settings(max_examples=200)
@given(fun_elements)
def test_pseudo_inverse_identities(data):
    P, coords = data
    a = tuple(coords)
    e, astar = pseudo_inverse(P, a)
    assert P.mul(e, a) == a
    assert P.mul(e, astar) == astar
    assert P.mul(a, astar) == e
    assert P.mul(e, e) == e
    assert pseudo_inverse(P, astar).astar == P.mul(e, a)
    for s in range(P.group.order):
        # the construction is coordinatewise, so it commutes with the action
        assert pseudo_inverse(P, P.act(s, a)) == (P.act(s, e), P.act(s, astar))
