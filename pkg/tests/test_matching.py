import networkx as nx
import pytest
from hypothesis import given, settings

from estar.combinatorics import (
    has_k_matching,
    has_perfect_matching,
    is_k_extendable,
    k_matchings,
    perfect_matchings_bruteforce,
)
from estar.errors import DomainError, ResourceLimitError
from estar.graph import build_graph, circulant, iter_bits
from estar.matching import matching_edges, maximum_matching

from .strategies import small_graphs
from .test_graph import to_nx


def brute_force_matching_size(g):
    best = 0
    for k in range(1, g.n // 2 + 1):
        if next(k_matchings(g, k), None) is None:
            break
        best = k
    return best


@settings(max_examples=150, deadline=None)
@given(small_graphs(max_n=10))
def test_blossom_matches_oracles(g):
    mate = maximum_matching(g)
    edges = matching_edges(g, mate)
    covered = [v for e in edges for v in g.edges[e]]
    assert len(covered) == len(set(covered))
    assert all(mate[mate[v]] == v for v in range(g.n) if mate[v] >= 0)
    assert len(edges) == len(nx.max_weight_matching(to_nx(g), maxcardinality=True))
    if g.n <= 8:
        assert len(edges) == brute_force_matching_size(g)


@settings(max_examples=80, deadline=None)
@given(small_graphs(max_n=8))
def test_perfect_matching_agrees_with_enumeration(g):
    pm = has_perfect_matching(g)
    all_pm = perfect_matchings_bruteforce(g)
    assert (pm is not None) == bool(all_pm)
    if pm is not None:
        assert pm.mask in all_pm


def test_blossom_on_odd_cycles_with_pendant():
    # C5 with a pendant edge needs a blossom to find the perfect matching
    g = build_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (4, 5)])
    assert has_perfect_matching(g) is not None


def test_induced_perfect_matching():
    g = circulant(6, (1,))
    assert has_perfect_matching(g, 0b001111) is not None
    assert has_perfect_matching(g, 0b010111) is None


def k_extendable_oracle(g, k):
    pms = perfect_matchings_bruteforce(g)
    ks = [sum(1 << i for i in c) for c in k_matchings(g, k)]
    return bool(ks) and all(any(m & pm == m for pm in pms) for m in ks)


@settings(max_examples=80, deadline=None)
@given(small_graphs(max_n=8))
def test_k_extendable_against_enumeration(g):
    for k in (1, 2):
        assert is_k_extendable(g, k) == k_extendable_oracle(g, k)


def test_k_extendable_examples():
    assert is_k_extendable(circulant(4, (1, 2)), 2)  # K4
    assert not is_k_extendable(circulant(6, (1,)), 2)
    assert not is_k_extendable(circulant(9, (1,)), 1)
    assert has_k_matching(circulant(9, (1,)), 2)
    with pytest.raises(DomainError):
        is_k_extendable(circulant(6, (1,)), 0)
    with pytest.raises(ResourceLimitError):
        is_k_extendable(circulant(6, (1,)), 4)


def test_matching_edges_listing():
    g = circulant(4, (1,))
    mate = maximum_matching(g)
    assert sorted(v for e in matching_edges(g, mate) for v in g.edges[e]) == [0, 1, 2, 3]
    assert sum(1 for _ in iter_bits(has_perfect_matching(g).mask)) == 2
