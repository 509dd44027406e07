import pytest

from pathdecomp import (
    CollagePlan,
    Decomposition,
    Graph,
    K44Block,
    Matching,
    collage_merge,
    decompose,
    decompose_degenerate,
    decompose_k44,
    decompose_k44_factor,
    verify_decomposition,
)
from pathdecomp.collage import CollageError, ComponentShapeError

NAMES = ["r1", "r2", "r3", "r4", "l1", "l2", "l3", "l4"]


def canonical_block():
    return K44Block((0, 1, 2, 3), (4, 5, 6, 7), ((0, 1), (2, 3), (4, 5), (6, 7)))


def test_golden_paths():
    D = decompose_k44(canonical_block())
    named = ["".join(NAMES[v] for v in t) for t in D.trails]
    assert named == ["l1r1l3l4r2l2", "l3r3l1l2r4l4", "r1l2r3r4l1r2", "r3l4r1r2l3r4"]


def test_relabelled_block_verifies():
    b = K44Block((10, 3, 7, 1), (2, 9, 0, 4), ((3, 7), (1, 10), (0, 9), (2, 4)))
    G = Graph(11, b.graph_edges() + list(b.matching))
    D = decompose_k44(b)
    assert verify_decomposition(G, D, 5, Matching(b.matching)).ok


def test_crossing_local_pair_rejected():
    with pytest.raises(CollageError):
        decompose_k44(K44Block((0, 1, 2, 3), (4, 5, 6, 7), ((0, 4), (1, 5), (2, 3), (6, 7))))


def test_merge_without_virtual_edges():
    D = decompose_k44(canonical_block())
    assert collage_merge(CollagePlan([D])).trails == D.trails


def test_merge_two_blocks():
    a = K44Block((0, 1, 2, 3), (4, 5, 6, 7), ((0, 1), (2, 3), (4, 5), (6, 7)))
    b = K44Block((8, 9, 10, 11), (12, 13, 14, 15), ((8, 9), (10, 11), (12, 13), (14, 15)))
    plan = CollagePlan([decompose_k44(a), decompose_k44(b)], [(0, 1), (8, 9)], [(0, 8), (1, 9)])
    D = collage_merge(plan)
    M = Matching([(0, 8), (1, 9), (2, 3), (4, 5), (6, 7), (10, 11), (12, 13), (14, 15)])
    G = Graph(16, a.graph_edges() + b.graph_edges() + list(M.pairs))
    assert len(D) == 8 and verify_decomposition(G, D, 5, M).ok


def test_virtual_end_edge_rejected():
    piece = Decomposition([(4, 5, 0, 6, 1, 7)], 5)
    with pytest.raises(CollageError):
        collage_merge(CollagePlan([piece], [(4, 5)], [(4, 5)]))


def test_degenerate_single_block(z4z2_degenerate):
    D = decompose_degenerate(z4z2_degenerate)
    assert len(D) == 4
    assert verify_decomposition(z4z2_degenerate.graph, D, 5, z4z2_degenerate.matching).ok


def test_degenerate_two_blocks(z4z4_degenerate):
    D = decompose_degenerate(z4z4_degenerate)
    assert len(D) == 8
    assert verify_decomposition(z4z4_degenerate.graph, D, 5, z4z4_degenerate.matching).ok
    assert decompose(z4z4_degenerate).route == "k44"


def test_degenerate_precondition(z12_antipodal):
    with pytest.raises(CollageError):
        decompose_degenerate(z12_antipodal)


def test_non_k44_component_rejected():
    cyc = [(i, (i + 1) % 8) for i in range(8)]
    G = Graph(8, cyc + [(0, 4), (1, 5), (2, 6), (3, 7)])
    with pytest.raises(ComponentShapeError):
        decompose_k44_factor(G, Matching([(0, 4), (1, 5), (2, 6), (3, 7)]))
