import networkx as nx
import pytest
from hypothesis import given, settings

from estar.errors import DomainError, InputError
from estar.graph import (
    EdgeSubset,
    HamiltonianLabeling,
    build_graph,
    circulant,
    complement,
    format_edge_list,
    is_bipartite,
    is_connected,
    is_maximal_star,
    is_triangle_free,
    line_graph,
    maximal_star_masks,
    parse_edge_list,
    star,
    to_dot,
)

from .strategies import small_graphs


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def test_build_graph_rejects_bad_input():
    with pytest.raises(InputError):
        build_graph(3, [(0, 0)])
    with pytest.raises(InputError):
        build_graph(3, [(0, 3)])
    with pytest.raises(InputError):
        build_graph(3, [(0, 1), (1, 0)])


def test_gstar_shape(gstar_graph):
    g, labeling = gstar_graph
    assert (g.n, g.m) == (9, 14)
    assert is_triangle_free(g)
    chords = {frozenset((u + 1, v + 1)) for u, v in (g.edges[c] for c in labeling.chords)}
    assert chords == {frozenset(p) for p in [(1, 6), (2, 5), (3, 7), (4, 9), (5, 8)]}
    assert labeling.order == tuple(range(9))


def test_circulant():
    g = circulant(11, (1, 3))
    assert (g.n, g.m) == (11, 22)
    assert all(g.degree(v) == 4 for v in range(11))
    assert g.has_edge(0, 3) and g.has_edge(0, 8) and not g.has_edge(0, 2)
    assert g.edges[:11] == tuple((i, i + 1) for i in range(10)) + ((0, 10),)


def test_hamiltonian_labeling_validates(gstar_graph):
    g, _ = gstar_graph
    with pytest.raises((InputError, DomainError)):
        HamiltonianLabeling.from_order(g, [0, 2, 1, 3, 4, 5, 6, 7, 8])


@settings(max_examples=60, deadline=None)
@given(small_graphs(max_n=7))
def test_complement_and_line_graph_match_networkx(g):
    assert nx.is_isomorphic(to_nx(complement(g)), nx.complement(to_nx(g)))
    if g.m:
        lg, _ = line_graph(g)
        assert nx.is_isomorphic(to_nx(lg), nx.line_graph(to_nx(g)))
    assert is_connected(g) == (g.n > 0 and nx.is_connected(to_nx(g)))
    assert is_bipartite(g) == nx.is_bipartite(to_nx(g))
    assert is_triangle_free(g) == (sum(nx.triangles(to_nx(g)).values()) == 0)


def test_line_graph_of_edgeless_graph():
    with pytest.raises(DomainError):
        line_graph(build_graph(3, []))


@settings(max_examples=60, deadline=None)
@given(small_graphs(max_n=7))
def test_maximal_stars_are_inclusion_maximal(g):
    stars = [star(g, v).mask for v in range(g.n)]
    expected = sorted({s for s in stars if not any(s != t and s & t == s for t in stars)})
    assert sorted(maximal_star_masks(g)) == expected
    for v in range(g.n):
        assert is_maximal_star(g, v) == (stars[v] in expected)


def test_edge_list_round_trip(gstar_graph):
    g, _ = gstar_graph
    text = format_edge_list(g, "gstar", label_base=1)
    assert text.startswith("# gstar\n9 14\n1 2\n")
    assert parse_edge_list(text, label_base=1) == g


@pytest.mark.parametrize(
    "text",
    ["", "3 1\n0 1 2\n", "3 2\n0 1\n", "3 1\nx y\n", "2 1\n0 2\n"],
)
def test_parse_errors(text):
    with pytest.raises(InputError):
        parse_edge_list(text)


def test_edge_subset_helpers(gstar_graph):
    g, _ = gstar_graph
    t = EdgeSubset.from_pairs(g, [(0, 8), (2, 6)])
    assert t.size == 2 and g.edge_id(0, 8) in t
    with pytest.raises(InputError):
        EdgeSubset.from_ids(g, [99])


def test_dot_output(gstar_graph):
    g, _ = gstar_graph
    dot = to_dot(g, "gstar", label_base=1)
    assert dot.startswith("graph gstar {") and "  1 -- 9;" in dot and dot.count("--") == 14
