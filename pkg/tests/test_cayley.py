import itertools

import pytest

from pathdecomp import (
    GrGraphError,
    Matching,
    assemble_gr_graph,
    build_cayley,
    components,
    is_power_of_cycle,
    make_cyclic,
    power_of_cycle,
    random_matching,
    validate_scg,
)
from pathdecomp.graphs import Graph, is_regular


def test_colours_and_directions():
    G = make_cyclic(12)
    X = build_cayley(G, validate_scg(G, 1, 3))
    assert X.color[(0, 1)] == "green" and X.direction[(0, 1)] == (0, 1)
    assert X.color[(0, 3)] == "red" and X.direction[(0, 3)] == (0, 3)
    assert is_regular(X.graph, 4)
    assert all(X.census(v) == (1, 1, 1, 1) for v in range(12))


def test_component_counts():
    G = make_cyclic(12)
    assert len(components(build_cayley(G, validate_scg(G, 2, 4)).graph)) == 2
    H = make_cyclic(8)
    assert len(build_cayley(H, validate_scg(H, 1, 3)).graph.edges) == 16


def test_assemble(z12_antipodal):
    assert is_regular(z12_antipodal.graph, 5) and len(z12_antipodal.graph.edges) == 30
    G = make_cyclic(12)
    p = validate_scg(G, 1, 3)
    with pytest.raises(GrGraphError):
        assemble_gr_graph(G, p, Matching([(0, 3), (1, 7), (2, 8), (4, 10), (5, 11), (6, 9)]))
    G7 = make_cyclic(7)
    with pytest.raises(GrGraphError):
        assemble_gr_graph(G7, validate_scg(G7, 1, 2), Matching([]))


def test_random_matching():
    G = make_cyclic(12)
    p = validate_scg(G, 1, 3)
    for seed in range(10):
        M = random_matching(G, p, seed)
        assert M == random_matching(G, p, seed)
        assert all((v - u) % 12 not in (1, 3, 9, 11) for u, v in M)
    Z6 = make_cyclic(6)
    assert sorted(random_matching(Z6, validate_scg(Z6, 1, 2), 0)) == [(0, 3), (1, 4), (2, 5)]


def test_power_of_cycle_recognition():
    order = is_power_of_cycle(power_of_cycle(10, 2), 2)
    assert order is not None
    pos = {v: i for i, v in enumerate(order)}
    H = power_of_cycle(10, 2)
    for u, v in itertools.combinations(range(10), 2):
        d = (pos[u] - pos[v]) % 10
        assert H.has_edge(u, v) == (min(d, 10 - d) <= 2)
    K5 = Graph(5, itertools.combinations(range(5), 2))
    assert is_power_of_cycle(K5, 2) is not None
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    petersen = Graph(10, outer + inner + [(i, i + 5) for i in range(5)])
    assert is_power_of_cycle(petersen, 2) is None
    assert is_power_of_cycle(petersen, 1) is None


def test_shuffled_power_recognised():
    import random

    rng = random.Random(3)
    perm = list(range(30))
    rng.shuffle(perm)
    H = Graph(30, [(perm[u], perm[v]) for u, v in power_of_cycle(30, 4).edges])
    assert is_power_of_cycle(H, 4) is not None
