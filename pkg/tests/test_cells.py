import json

import pytest

from dominocells.cells import (
    CellPartition,
    join,
    operator_components,
    operator_edges,
    operator_graph_dot,
    partition_irreducible,
    partition_reducible,
    partition_reducible_by_orbits,
    run_suite,
    standard_count,
    verify_bijectivity,
    verify_generation,
    verify_parabolic,
    verify_refinement,
    verify_stability,
)
from dominocells.insertion import rs_map
from dominocells.signed_perm import enumerate_group, group_order

from conftest import W


def is_partition(part):
    elements = [w for b in part.blocks for w in b]
    return len(elements) == len(set(elements)) == group_order(part.n)


def test_irreducible_examples():
    part = partition_irreducible(1, 0, "left")
    assert part.blocks == ((W("-1"),), (W("1"),))
    for r in range(1, 4):
        part = partition_irreducible(2, r, "left")
        assert len(part) == len({rs_map(w, r).right for w in enumerate_group(2)})
    left = partition_irreducible(4, 2, "left")
    assert W("4,-3,1,-2") not in left.block_of(W("4,-3,-2,1"))


def test_reducible_examples():
    right = partition_reducible(4, 2, "right")
    assert W("4,-3,1,-2") in right.block_of(W("4,-3,-2,1"))
    assert partition_reducible(0, 0).blocks == ((W(""),),)


def test_partitions_are_partitions_and_nest():
    for n in range(4):
        for r in range(3):
            for side in ("left", "right"):
                irr = partition_irreducible(n, r, side)
                red = partition_reducible(n, r, side)
                assert is_partition(irr) and is_partition(red)
                assert irr.refines(red)


def test_reducible_matches_orbit_search():
    for n in range(4):
        for r in range(3):
            for side in ("left", "right"):
                assert partition_reducible_by_orbits(n, r, side).same_blocks(partition_reducible(n, r, side))


def test_operator_components():
    assert operator_components(1, 0).blocks == ((W("-1"),), (W("1"),))
    singletons = operator_components(3, 1, ops=[])
    assert len(singletons) == group_order(3)
    assert operator_components(4, 2).same_blocks(partition_reducible(4, 2, "right"))


def test_join():
    a = CellPartition.from_blocks(2, 0, "a", [[W("1,2"), W("2,1")], [W("-1,2")], [W("1,-2")]])
    b = CellPartition.from_blocks(2, 0, "b", [[W("2,1"), W("-1,2")], [W("1,2")], [W("1,-2")]])
    joined = join(a, b)
    assert len(joined) == 2
    assert joined.block_of(W("1,2")) == tuple(sorted([W("1,2"), W("2,1"), W("-1,2")]))


def test_partition_json():
    data = partition_irreducible(1, 0, "left").to_json()
    assert data == {"kind": "IrreducibleLeft", "n": 1, "rank": 0, "blocks": [["-1"], ["1"]]}
    json.dumps(data)


def test_graph_exports():
    edges = operator_edges(2, 0)
    assert all(w < v for w, _, v in edges)
    dot = operator_graph_dot(2, 0)
    assert dot.startswith('graph "W2_rank0" {')
    assert dot.count(" -- ") == len(edges)


def test_standard_count():
    assert standard_count(rs_map(W(""), 2).left.cells(), 2) == 1
    # shape (2,2) in rank 0 has two domino tableaux
    assert standard_count(frozenset({(1, 1), (1, 2), (2, 1), (2, 2)}), 0) == 2


def test_caps():
    with pytest.raises(ValueError):
        partition_irreducible(6, 0)
    with pytest.raises(ValueError):
        partition_irreducible(3, 0, cap=7)
    with pytest.raises(ValueError):
        partition_irreducible(2, 0, "up")


@pytest.mark.parametrize("n, r", [(3, 0), (3, 1), (3, 2), (4, 1)])
def test_suites_pass(n, r):
    for report in run_suite("all", n, r):
        assert report.ok, report.summary()


def test_stability_example():
    report = verify_stability(4, 2)
    assert report.ok and report.checked > 0


def test_asymptotic_generation_matches_irreducible():
    for r in (2, 3):
        assert verify_generation(3, r).ok
        assert operator_components(3, r).same_blocks(partition_irreducible(3, r, "right"))


def test_parabolic_trivial_and_counterexample():
    assert verify_parabolic(3, 3, 1).ok
    # classes of the right tableau are not carried along by x
    assert not verify_parabolic(3, 2, 0, side="left").ok


def test_report_text():
    report = verify_refinement(2, 0)
    assert report.summary().startswith("PASS refinement n=2 rank=0")
    assert report.to_json()["ok"] is True
    assert verify_bijectivity(2, 1).ok
    with pytest.raises(ValueError):
        run_suite("nope", 2, 0)


def test_parallel_images_match():
    from dominocells import cells

    cells.clear_cache()
    par = cells.images(5, 0, jobs=2)
    cells.clear_cache()
    seq = cells.images(5, 0)
    assert par == seq
