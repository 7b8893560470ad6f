import pytest

from dominocells.cycles import (
    CycleError,
    CycleKind,
    classify,
    corners_all_empty,
    cycle,
    cycles,
    extended_cycle,
    is_cycle_boxed,
    is_somewhat_special,
    move_through,
    move_through_pair,
    move_through_set,
    moved_domino,
    special_form,
)
from dominocells.insertion import rs_map
from dominocells.tableau import DominoTableau

from conftest import EX_SC_RIGHT, EX_T, EX_V_LEFT, W
from properties import (
    check_order_independence,
    check_pair_moves,
    check_single_cycles,
    image_tableaux,
)


def test_moved_domino():
    T = DominoTableau(0, {1: [(1, 1), (1, 2)]})
    assert moved_domino(1, T) == ((1, 2), (1, 3))
    assert moved_domino(4, DominoTableau(2, EX_T)) == ((2, 3), (3, 3))


def test_cycle_lookup():
    T = DominoTableau(2, EX_T)
    assert cycle(4, T) == {4}
    assert cycle(1, DominoTableau(0, {1: [(1, 1), (1, 2)]})) == {1}
    with pytest.raises(KeyError):
        cycle(5, T)


def test_cycles_partition_labels():
    for n in range(4):
        for r in range(4):
            for T in image_tableaux(n, r):
                found = cycles(T)
                assert sorted(k for c in found for k in c) == T.labels


def test_move_through_open_noncore():
    T = DominoTableau(2, EX_T)
    S, cls = move_through(T, {4})
    assert S == DominoTableau(2, EX_V_LEFT)
    assert cls.kind is CycleKind.OPEN_NONCORE
    assert (cls.back, cls.front) == ((2, 4), (3, 3))
    assert move_through(S, {4})[0] == T


def test_move_through_open_core_grows_core():
    T = DominoTableau(0, {1: [(1, 1), (1, 2)]})
    S, cls = move_through(T, {1})
    assert cls.kind is CycleKind.OPEN_CORE
    assert S.rank == 1 and S.dominos == {1: ((1, 2), (1, 3))}


def test_core_move_leaving_no_staircase_is_rejected():
    T = DominoTableau(2, EX_T)
    core_cycles = [c for c in cycles(T) if classify(T, c).kind is CycleKind.OPEN_CORE]
    assert core_cycles
    with pytest.raises(CycleError):
        move_through(T, core_cycles[0])


def test_move_through_set_edge_cases():
    T = DominoTableau(2, EX_T)
    assert move_through_set(T, []) == T
    with pytest.raises(CycleError):
        move_through_set(T, [{3, 4}])


def test_classify_closed_cycle():
    p = rs_map(W("1,-3,-2"), 0)
    c = cycle(2, p.left)
    assert c == {2, 3}
    assert classify(p.left, c).kind is CycleKind.CLOSED
    S, _ = move_through(p.left, c)
    assert S.cells() == p.left.cells()


def test_extended_cycle_example(example_pair):
    b = extended_cycle(example_pair, 4, "right")
    assert b.in_left == {4} and b.in_right == {4}
    q = move_through_pair(example_pair, b)
    assert q.left == DominoTableau(2, EX_V_LEFT)
    assert q.right.dominos[4] == ((2, 3), (3, 3))


def test_extended_cycle_of_closed_cycle():
    p = rs_map(W("1,-3,-2"), 0)
    b = extended_cycle(p, 2, "left")
    assert b.in_left == {2, 3} and b.in_right == frozenset()
    q = move_through_pair(p, b)
    assert q.right == p.right


def test_extended_cycle_side_check(example_pair):
    with pytest.raises(ValueError):
        extended_cycle(example_pair, 4, "up")


def test_special_form_examples(example_pair):
    T = example_pair.left
    S, _ = move_through(T, {4})
    assert is_cycle_boxed(T, {4}) and not is_cycle_boxed(S, {4})
    assert special_form(T) == T
    assert special_form(S) == T
    assert is_somewhat_special(T)
    assert not is_somewhat_special(S)
    assert is_somewhat_special(DominoTableau.empty(0))
    assert is_somewhat_special(DominoTableau(2, EX_SC_RIGHT))


def test_somewhat_special_iff_corners_empty():
    for n in range(4):
        for r in range(4):
            for T in image_tableaux(n, r):
                assert is_somewhat_special(T) == corners_all_empty(T)
                S = special_form(T)
                assert corners_all_empty(S)
                assert special_form(S) == S


@pytest.mark.parametrize("n", [2, 3])
def test_single_cycle_properties(n):
    for r in range(4):
        checked, bad = check_single_cycles(n, r)
        assert not bad


def test_order_independence_small():
    for r in range(3):
        assert check_order_independence(3, r)[1] == []


def test_pair_moves_small():
    for r in range(3):
        assert check_pair_moves(3, r)[1] == []
