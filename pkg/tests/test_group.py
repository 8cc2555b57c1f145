import itertools

import pytest
from hypothesis import given, strategies as st

from dakernel.group import GroupError, GroupElem, compose, cyclic, direct_product, inverse, make_group


def test_cyclic_one_is_trivial():
    G = make_group("cyclic 1")
    assert G.order == 1 and G.table == ((0,),)


def test_cyclic_two_table():
    assert [list(r) for r in make_group(("cyclic", 2)).table] == [[0, 1], [1, 0]]


def test_cayley_z4():
    table = [[(a + b) % 4 for b in range(4)] for a in range(4)]
    G = make_group(("cayley", table))
    s, s3 = GroupElem(G, 1), GroupElem(G, 3)
    assert compose(s, s3).index == 0


def test_cyclic_names():
    G = cyclic(4)
    assert list(G.names) == ["e", "s", "s^2", "s^3"]
    assert [G.label(i) for i in range(4)] == ["e", "s", "s2", "s3"]
    assert G.lookup("s^3") == G.lookup("s3") == 3


def test_compose_and_inverse_examples():
    Z2, Z4 = cyclic(2), cyclic(4)
    e, g = GroupElem(Z4, 0), GroupElem(Z4, 2)
    assert compose(e, g) == g
    assert compose(GroupElem(Z4, 1), GroupElem(Z4, 3)).index == 0
    assert compose(GroupElem(Z2, 1), GroupElem(Z2, 1)).index == 0
    assert inverse(e) == e
    assert inverse(GroupElem(Z4, 1)).index == 3
    assert inverse(GroupElem(Z2, 1)).index == 1


def test_mismatched_parents():
    with pytest.raises(GroupError):
        compose(GroupElem(cyclic(2), 1), GroupElem(cyclic(3), 1))


def test_not_latin_square():
    with pytest.raises(GroupError, match="row 1"):
        make_group(("cayley", [[0, 1], [1, 1]]))


def test_non_associative_names_triple():
    # a Latin square with identity 0 that is not associative (order 5 loop)
    loop = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(GroupError, match=r"associative at \(\d, \d, \d\)"):
        make_group(("cayley", loop))


def test_element_out_of_range():
    with pytest.raises(GroupError):
        GroupElem(cyclic(2), 2)


def test_klein_structure():
    G = make_group("klein")
    assert G.order == 4
    assert all(G.mul(a, a) == 0 for a in range(4))
    assert G == direct_product(cyclic(2), cyclic(2))


def test_read_cayley(tmp_path):
    path = tmp_path / "z3.txt"
    path.write_text("0 1 2\n1 2 0\n2 0 1\n")
    assert make_group(f"cayley {path}") == cyclic(3)


GROUPS = [cyclic(1), cyclic(2), cyclic(3), cyclic(4), cyclic(6), make_group("klein")]


@given(st.sampled_from(GROUPS), st.data())
def test_inverse_of_product(G, data):
    g = GroupElem(G, data.draw(st.integers(0, G.order - 1)))
    h = GroupElem(G, data.draw(st.integers(0, G.order - 1)))
    assert inverse(compose(g, h)) == compose(inverse(h), inverse(g))
    assert compose(g, inverse(g)).index == 0


@given(st.integers(1, 12), st.integers(0, 30), st.integers(0, 30))
def test_cyclic_exponents_add(n, a, b):
    G = cyclic(n)
    s = 1 % n
    assert G.mul(G.power(s, a), G.power(s, b)) == G.power(s, (a + b) % n)


def test_tables_associative_exhaustive():
    for G in GROUPS:
        for a, b, c in itertools.product(range(G.order), repeat=3):
            assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))
