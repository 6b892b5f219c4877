import random

import pytest

from mdcolor.constructions import broom, n6_product_lower_pair, ng_lower_graph, random_connected
from mdcolor.errors import DomainError
from mdcolor.graph import build_graph, complement, cycle_graph, graph_from_mask, graph_to_mask, path_graph, star_graph
from mdcolor.nordhaus import canonical_mask, ng_pair, parse_target, sampled_search, scan_order
from mdcolor.solver import md_decide


def test_ng_pair_broom_5():
    r = ng_pair(broom(5))
    assert (r.md, r.md_complement, r.sum) == (4, 2, 6)


def test_ng_pair_lower_8():
    r = ng_pair(ng_lower_graph(8))
    assert (r.sum, r.product) == (2, 1)


def test_ng_pair_n6_product():
    G, H = n6_product_lower_pair()
    assert H == complement(G)
    r = ng_pair(G)
    assert (r.md, r.md_complement, r.sum, r.product) == (3, 1, 4, 3)


def test_ng_pair_errors():
    with pytest.raises(DomainError, match="n >= 4"):
        ng_pair(path_graph(3))
    with pytest.raises(DomainError, match="complement is disconnected"):
        ng_pair(star_graph(5))
    with pytest.raises(DomainError, match="graph is disconnected"):
        ng_pair(complement(star_graph(5)))


def test_scan_4():
    r = scan_order(4)
    assert (r.min_sum, r.max_sum, r.min_prod, r.max_prod) == (6, 6, 9, 9)
    for rec in r.witnesses.values():
        assert rec.graph.is_tree() and max(rec.graph.degrees()) == 2  # P_4


def test_scan_5():
    r = scan_order(5)
    assert (r.min_sum, r.max_sum, r.min_prod, r.max_prod) == (4, 6, 4, 9)


def test_scan_6_dedup_matches_full():
    full = scan_order(6)
    dedup = scan_order(6, dedup=True)
    assert (full.min_sum, full.max_sum, full.min_prod, full.max_prod) == (4, 7, 3, 10)
    assert (dedup.min_sum, dedup.max_sum, dedup.min_prod, dedup.max_prod) == (4, 7, 3, 10)
    assert dedup.scanned == 156  # graphs on 6 vertices up to isomorphism
    assert full.scanned == 2 ** 15


def test_scan_witnesses_consistent():
    r = scan_order(5)
    assert r.witnesses["min_sum"].sum == r.min_sum
    assert r.witnesses["max_prod"].product == r.max_prod
    for rec in r.witnesses.values():
        again = ng_pair(rec.graph)
        assert (again.md, again.md_complement) == (rec.md, rec.md_complement)


def test_scan_range():
    for n in (3, 7):
        with pytest.raises(DomainError):
            scan_order(n)


def test_canonical_mask_is_invariant():
    rng = random.Random(2)
    for _ in range(30):
        n = rng.randint(4, 7)
        G = random_connected(n, rng.randint(n - 1, n * (n - 1) // 2), rng)
        perm = list(range(n))
        rng.shuffle(perm)
        H = build_graph(n, [(perm[u], perm[v]) for u, v in G.edges])
        assert canonical_mask(n, graph_to_mask(G)) == canonical_mask(n, graph_to_mask(H))
    # non-isomorphic graphs of the same size stay apart
    assert canonical_mask(5, graph_to_mask(path_graph(5))) != canonical_mask(5, graph_to_mask(star_graph(5)))


def test_parse_target():
    assert parse_target("sum=2") == ("sum", 2)
    assert parse_target(" product = 12 ") == ("product", 12)
    assert parse_target("prod=3") == ("product", 3)
    for bad in ("sum<2", "max=2", "sum=", "sum=-1"):
        with pytest.raises(DomainError):
            parse_target(bad)


def test_sampled_search_n7_sum2():
    hit = sampled_search(7, "sum=2", 10 ** 5, seed=1)
    assert hit is not None
    assert hit.record.sum == 2 and hit.record.n == 7
    G = hit.record.graph
    assert md_decide(G, 2) is None and md_decide(complement(G), 2) is None
    assert hit.md1_checked == ["graph", "complement"]


def test_sampled_search_is_reproducible():
    a = sampled_search(7, "sum=2", 10 ** 5, seed=1)
    b = sampled_search(7, "sum=2", 10 ** 5, seed=1)
    assert a.attempt == b.attempt and a.record.graph == b.record.graph


def test_sampled_search_impossible_target():
    assert sampled_search(7, "sum=9", 2000, seed=1) is None


def test_sampled_search_product_target():
    hit = sampled_search(7, "product=1", 10 ** 5, seed=3)
    assert hit is not None and hit.record.product == 1


def test_sampled_search_errors():
    with pytest.raises(DomainError):
        sampled_search(6, "sum=4", 10, seed=0)
    with pytest.raises(DomainError):
        sampled_search(7, "sum=2", 0, seed=0)
    with pytest.raises(DomainError):
        sampled_search(7, "total=2", 10, seed=0)


@pytest.mark.parametrize("n", [8, 9])
def test_lower_graph_qualifies_for_sum_2(n):
    G = ng_lower_graph(n)
    assert G.is_connected() and complement(G).is_connected()
    assert md_decide(G, 2) is None and md_decide(complement(G), 2) is None


def test_ng_bounds_on_random_pairs():
    rng = random.Random(9)
    checked = 0
    while checked < 40:
        n = rng.randint(5, 8)
        G = graph_from_mask(n, rng.getrandbits(n * (n - 1) // 2))
        if not (G.is_connected() and complement(G).is_connected()):
            continue
        r = ng_pair(G)
        assert r.sum <= n + 1
        if n >= 7:
            assert r.product <= 2 * (n - 1)
        checked += 1


def test_record_json():
    data = ng_pair(cycle_graph(5)).to_json()
    assert data["md"] == 2 and data["md_complement"] == 2 and data["sum"] == 4 and data["product"] == 4
