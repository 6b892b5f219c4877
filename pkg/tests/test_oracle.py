import random

import pytest

from conftest import bowtie
from mdcolor.coloring import verify_md
from mdcolor.constructions import random_connected
from mdcolor.errors import DomainError
from mdcolor.graph import Graph, build_graph, complete_graph, complete_multipartite, cycle_graph, path_graph
from mdcolor.oracle import DEFAULT_CAP, brute_force_oracle, count_partitions
from mdcolor.solver import md_exact

BELL = [1, 1, 2, 5, 15, 52, 203, 877, 4140]


def test_visits_every_partition():
    assert [count_partitions(m) for m in range(len(BELL))] == BELL


@pytest.mark.parametrize("G, value", [
    (cycle_graph(6), 3),
    (complete_graph(4), 1),
    (complete_multipartite([2, 3]), 1),
    (path_graph(5), 4),
    (bowtie(), 2),
])
def test_known_values(G, value):
    r = brute_force_oracle(G)
    assert r.value == value
    assert verify_md(G, r.witness)
    assert r.witness.palette_size == value


def test_first_maximum_in_enumeration_order():
    # on C_4 only opposite-edge pairings are MD; 0101 is the first of them
    r = brute_force_oracle(cycle_graph(4))
    assert r.witness.colors == (1, 2, 1, 2)


def test_disconnected_and_empty():
    G = build_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5)])
    assert brute_force_oracle(G).value == 1 + 2
    assert brute_force_oracle(Graph(3, ())).value == 0


def test_cap():
    G = complete_graph(6)  # 15 edges
    assert G.m > DEFAULT_CAP
    with pytest.raises(DomainError):
        brute_force_oracle(G)
    assert brute_force_oracle(cycle_graph(5), cap=5).value == 2
    with pytest.raises(DomainError):
        brute_force_oracle(cycle_graph(5), cap=4)


def test_override():
    # 13 edges: K_4 and a 7-path sharing no vertices with it
    G = build_graph(11, list(complete_graph(4).edges) + [(i, i + 1) for i in range(4, 10)] + [(3, 4)])
    assert G.m == 13
    assert brute_force_oracle(G, override=True).value == md_exact(G).value == 1 + 7


def test_agrees_with_solver_on_random_graphs():
    rng = random.Random(3)
    for _ in range(60):
        n = rng.randint(4, 7)
        G = random_connected(n, rng.randint(n - 1, min(11, n * (n - 1) // 2)), rng)
        assert brute_force_oracle(G).value == md_exact(G).value
