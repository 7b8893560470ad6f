import pytest
from hypothesis import given, settings, strategies as st

from dominocells.insertion import TableauPair, insert_alpha, reverse_step, rs_inverse, rs_map
from dominocells.signed_perm import SignedPermutation, enumerate_group, group_order, inverse
from dominocells.tableau import DominoTableau, validate

from conftest import EX_T, EX_V_LEFT, EX_V_RIGHT, W
from test_signed_perm import signed_perms


def test_insert_into_empty():
    empty = DominoTableau.empty(0)
    assert insert_alpha(empty, 1).dominos == {1: ((1, 1), (1, 2))}
    assert insert_alpha(empty, -1).dominos == {1: ((1, 1), (2, 1))}
    with pytest.raises(ValueError):
        insert_alpha(empty, 0)


def test_insert_bumps_to_next_row():
    T = insert_alpha(insert_alpha(DominoTableau.empty(0), 2), 1)
    assert T.dominos == {1: ((1, 1), (1, 2)), 2: ((2, 1), (2, 2))}


def test_rs_map_examples():
    p = rs_map(W("4,-3,-2,1"), 2)
    assert p.left == p.right == DominoTableau(2, EX_T)
    q = rs_map(W("4,-3,1,-2"), 2)
    assert q.left == DominoTableau(2, EX_V_LEFT)
    assert q.right == DominoTableau(2, EX_V_RIGHT)
    for r in range(4):
        e = rs_map(W(""), r)
        assert e.left == e.right == DominoTableau.empty(r)


def test_reverse_step_example(example_pair):
    smaller, value = reverse_step(example_pair)
    assert value == 1
    assert smaller.n == 3
    assert smaller.right == example_pair.right.subtableau(3)
    single, value = reverse_step(rs_map(W("-1"), 1))
    assert value == -1 and single.n == 0


def test_rs_inverse_examples(example_pair):
    assert rs_inverse(example_pair) == W("4,-3,-2,1")
    assert rs_inverse(rs_map(W(""), 2)) == W("")


def test_pair_rejects_shape_mismatch():
    with pytest.raises(ValueError):
        TableauPair(DominoTableau(0, {1: [(1, 1), (1, 2)]}), DominoTableau(0, {1: [(1, 1), (2, 1)]}))
    with pytest.raises(ValueError):
        TableauPair(DominoTableau.empty(0), DominoTableau.empty(1))


def test_pair_json_round_trip(example_pair):
    assert TableauPair.from_json(example_pair.to_json()) == example_pair


def test_bijection_onto_pairs_w3_rank1():
    pairs = {rs_map(w, 1) for w in enumerate_group(3)}
    assert len(pairs) == group_order(3) == 48
    for p in pairs:
        assert validate(p.left) is None and validate(p.right) is None


def test_inverse_swaps_tableaux():
    for r in range(3):
        for w in enumerate_group(3):
            assert rs_map(inverse(w), r) == rs_map(w, r).swap()


@settings(max_examples=150, deadline=None)
@given(signed_perms(max_n=6), st.integers(0, 5))
def test_round_trip(w, r):
    p = rs_map(w, r)
    assert p.left.rank == r
    assert rs_inverse(p) == w


@settings(max_examples=100, deadline=None)
@given(signed_perms(max_n=6), st.integers(0, 4))
def test_each_insertion_adds_one_domino(w, r):
    T = DominoTableau.empty(r)
    for x in w.entries:
        before = T.cells()
        T = insert_alpha(T, x)
        assert before < T.cells() and len(T.cells() - before) == 2
        assert validate(T, standard=False) is None
