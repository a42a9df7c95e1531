import pytest

from planetrees import (GeomTree, InvalidParameter, NotAPartition, NotATree,
                        NotWCaterpillar, NotWheelConfig, Partition, SizeMismatch,
                        analyze_wheel_partition, build_wheel_partition,
                        check_note1, make_wheel, observation1_splits,
                        place_caterpillar_on_chain, rotate_tree,
                        verify_partition)
from planetrees.presets import builtin_tree, figure_pointset

from conftest import regular_gon

CHAIR = builtin_tree("fig2i", 3)


def norm(edges):
    return tuple(sorted(tuple(sorted(e)) for e in edges))


# ---------------------------------------------------------------------------
# caterpillar placement

def test_placement_is_graceful():
    ps = regular_gon(6)
    t = place_caterpillar_on_chain(CHAIR, ps, list(range(6)))
    gaps = sorted(abs(a - b) for a, b in t.edges)
    assert gaps == [1, 2, 3, 4, 5]


def test_placement_anchor_mirrors():
    ps = regular_gon(6)
    first = place_caterpillar_on_chain(CHAIR, ps, list(range(6)), anchor="first")
    last = place_caterpillar_on_chain(CHAIR, ps, list(range(6)), anchor="last")
    mirrored = norm((5 - a, 5 - b) for a, b in first.edges)
    assert norm(last.edges) == mirrored


def test_placement_follows_chain_order():
    ps = regular_gon(6)
    chain = [2, 4, 0, 5, 1, 3]
    t = place_caterpillar_on_chain(CHAIR, ps, chain)
    slot = {p: s for s, p in enumerate(chain)}
    gaps = sorted(abs(slot[a] - slot[b]) for a, b in t.edges)
    assert gaps == [1, 2, 3, 4, 5]


def test_placement_head_choices():
    ps = regular_gon(6)
    t = place_caterpillar_on_chain(CHAIR, ps, list(range(6)), head=5)
    assert t.edges[0][0] == 0 or 0 in t.edges[0]  # head lands on slot 0
    with pytest.raises(InvalidParameter):
        place_caterpillar_on_chain(CHAIR, ps, list(range(6)), head=0)


def test_placement_errors():
    ps = regular_gon(6)
    with pytest.raises(SizeMismatch):
        place_caterpillar_on_chain(CHAIR, ps, [0, 1, 2])
    with pytest.raises(InvalidParameter):
        place_caterpillar_on_chain(CHAIR, ps, [0, 1, 2, 3, 4, 4])
    with pytest.raises(InvalidParameter):
        place_caterpillar_on_chain(CHAIR, ps, list(range(6)), anchor="middle")
    spider = ((0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6))
    with pytest.raises(InvalidParameter):
        place_caterpillar_on_chain(spider, regular_gon(7), list(range(7)))
    with pytest.raises(NotATree):
        place_caterpillar_on_chain(((0, 1), (1, 2), (0, 2)), ps, [0, 1, 2])


# ---------------------------------------------------------------------------
# wheel partition construction

def test_fig2i_partition():
    p = build_wheel_partition(CHAIR, 3)
    assert len(p.trees) == 3
    assert p.trees[0].edges == norm([(5, 1), (1, 4), (4, 2), (4, 0), (2, 3)])
    assert p.trees[1].edges == norm([(5, 2), (0, 2), (0, 3), (3, 4), (0, 1)])
    assert p.trees[2].edges == norm([(5, 3), (5, 4), (5, 0), (1, 3), (1, 2)])
    assert verify_partition(p).ok


def test_fig2ii_partition():
    p = build_wheel_partition(builtin_tree("doublestar", 3), 3)
    assert p.trees[0].edges == norm([(5, 1), (1, 4), (2, 4), (0, 1), (3, 4)])
    assert p.trees[1].edges == norm([(5, 2), (0, 2), (0, 3), (1, 2), (0, 4)])
    assert p.trees[2].edges == norm([(5, 3), (5, 4), (5, 0), (1, 3), (2, 3)])


def test_rotation_family():
    p = build_wheel_partition(CHAIR, 3)
    assert p.trees[1].edges == rotate_tree(p.trees[0], 1).edges
    assert rotate_tree(rotate_tree(p.trees[0], 3), 2).edges == p.trees[0].edges


def test_rotate_requires_wheel():
    t = GeomTree(figure_pointset("fig5"), ((0, 1),))
    with pytest.raises(NotWheelConfig):
        rotate_tree(t, 1)


FIG3_FIRST_TREES = (
    ((7, 1), (1, 5), (5, 2), (1, 6), (5, 3), (1, 0), (5, 4)),
    ((7, 1), (1, 5), (5, 2), (1, 6), (5, 3), (0, 6), (3, 4)),
    ((7, 1), (1, 5), (5, 2), (0, 5), (2, 4), (2, 3), (5, 6)),
    ((7, 1), (1, 5), (5, 2), (0, 5), (2, 4), (3, 4), (0, 6)),
)


@pytest.mark.parametrize("drawn", FIG3_FIRST_TREES)
def test_n4_constructions_reproduce_their_drawings(drawn):
    p = build_wheel_partition(drawn, 4)
    assert p.trees[0].edges == norm(drawn)
    assert verify_partition(p).ok


def test_n4_double_star_complement():
    p = build_wheel_partition(FIG3_FIRST_TREES[0], 4)
    want = norm([(7, 4), (7, 5), (7, 6), (7, 0), (1, 4), (2, 4), (3, 4)])
    assert p.trees[3].edges == want


def test_designated_four_path():
    default = build_wheel_partition(CHAIR, 3)
    assert build_wheel_partition(CHAIR, 3, four_path=(3, 2, 4, 1)).trees == default.trees
    # the chair's other witness differs by a tree automorphism only
    alt = build_wheel_partition(CHAIR, 3, four_path=(5, 1, 4, 2))
    assert verify_partition(alt).ok
    assert alt.trees == default.trees
    with pytest.raises(NotWCaterpillar):
        build_wheel_partition(CHAIR, 3, four_path=(0, 4, 1, 5))


def test_builder_errors():
    with pytest.raises(InvalidParameter):
        build_wheel_partition(((0, 1),), 1)
    with pytest.raises(SizeMismatch):
        build_wheel_partition(CHAIR, 4)
    with pytest.raises(NotWCaterpillar):
        build_wheel_partition(tuple((i, i + 1) for i in range(5)), 3)
    with pytest.raises(NotATree):
        build_wheel_partition(((0, 1), (1, 2), (2, 3), (3, 0)), 2)


def test_n2_path_partition():
    p = build_wheel_partition(tuple((i, i + 1) for i in range(3)), 2)
    assert len(p.trees) == 2
    assert verify_partition(p).ok
    a = analyze_wheel_partition(p)
    assert a.per_tree[a.one_boundary_tree] == (1, 2, None)


# ---------------------------------------------------------------------------
# analysis

def test_analyze_fig2i():
    a = analyze_wheel_partition(build_wheel_partition(CHAIR, 3))
    assert a.one_boundary_tree == 2
    assert a.radial_run == ((0, 5), (3, 5), (4, 5))
    assert a.per_tree == (
        (2, 1, (5, 1, 4, 2)),
        (2, 1, (5, 2, 0, 3)),
        (1, 3, None),
    )


def test_analyze_large_double_star():
    p = build_wheel_partition(builtin_tree("doublestar", 7), 7)
    a = analyze_wheel_partition(p)
    assert a.one_boundary_tree == 6
    assert len(a.radial_run) == 7
    for stats in a.per_tree[:6]:
        assert stats.boundary_count == 2
        assert stats.radial_count == 1
        assert stats.four_path is not None
    assert a.per_tree[6] == (1, 7, None)


def test_analyze_rejects_non_wheel():
    with pytest.raises(NotWheelConfig):
        analyze_wheel_partition(Partition(ps=figure_pointset("fig5"), trees=()))


def test_analyze_rejects_bad_partitions(wheel3):
    p = build_wheel_partition(CHAIR, 3)
    with pytest.raises(NotAPartition, match="2 trees"):
        analyze_wheel_partition(Partition(ps=p.ps, trees=p.trees[:2]))
    with pytest.raises(NotAPartition, match="edge multiset"):
        analyze_wheel_partition(
            Partition(ps=p.ps, trees=(p.trees[0], p.trees[0], p.trees[2])))
    # swap an edge between two trees: multiset fine, spanning broken
    t0 = set(p.trees[0].edges)
    t2 = set(p.trees[2].edges)
    t0b = GeomTree(p.ps, tuple(t0 - {(2, 3)} | {(1, 2)}))
    t2b = GeomTree(p.ps, tuple(t2 - {(1, 2)} | {(2, 3)}))
    with pytest.raises(NotAPartition, match="not a spanning tree"):
        analyze_wheel_partition(Partition(ps=p.ps, trees=(t0b, p.trees[1], t2b)))


def test_observation1_splits():
    p = build_wheel_partition(CHAIR, 3)
    red = p.trees[1]
    by_edge = {e: (small, big) for e, small, big in observation1_splits(red)}
    assert set(by_edge) == {(0, 1), (0, 2), (0, 3), (3, 4)}  # radial skipped
    assert by_edge[(0, 3)] == ((4,), (1, 2, 5))
    assert by_edge[(3, 4)] == ((), (0, 1, 2, 5))
    for small, big in by_edge.values():
        assert len(small) <= 1 and len(big) >= 3 and len(small) < len(big)


def test_observation1_requires_wheel():
    with pytest.raises(NotWheelConfig):
        observation1_splits(GeomTree(figure_pointset("fig5"), ((0, 1),)))


def test_note1_instances():
    assert check_note1(build_wheel_partition(CHAIR, 3))
    assert check_note1(build_wheel_partition(builtin_tree("doublestar", 3), 3))
    assert check_note1(build_wheel_partition(builtin_tree("doublestar", 5), 5))
