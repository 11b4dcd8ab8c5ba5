from fractions import Fraction

import networkx as nx
import pytest

from estar.bridge import (
    GP_NEQ_EQ,
    GP_NEQ_SE,
    NO_STRONG_CLIQUE,
    SE_NEQ_EQ,
    check_no_strong_clique_conclusion,
    conjecture_certificates,
    decide_strongly_equistable_small,
    equistarable_to_equistable,
    line_complement,
    perturbation_family,
    stable_set_rows,
    star_root,
    strongly_equistable_to_equistable,
    transported_chord_kernel,
    verify_equistable,
    vertex_forced_value,
)
from estar.combinatorics import enumerate_maximal_stable_sets
from estar.engine import construct_equistarable_weights, decide_strong_equistarability, is_bad
from estar.errors import DomainError, ResourceLimitError
from estar.graph import build_graph, circulant, iter_bits, maximal_star_masks
from estar.rowsystem import decide_rows

from .test_graph import to_nx


def test_c6_stable_sets_are_stars():
    g = circulant(6, (1,))
    h = line_complement(g)
    rows = sorted(stable_set_rows(h))
    assert len(rows) == 6 and all(r.bit_count() == 2 for r in rows)
    assert rows == sorted(maximal_star_masks(g))


def brute_force_maximal_stable(h):
    stable = [m for m in range(1 << h.n) if all(not (h.adjacency[v] & m) for v in iter_bits(m))]
    return sorted(m for m in stable if not any(m != s and m & s == m for s in stable))


@pytest.mark.parametrize("n", [5, 6, 7])
def test_stable_set_enumeration_by_brute_force(n):
    h = line_complement(circulant(n, (1,)))
    assert sorted(s.mask for s in enumerate_maximal_stable_sets(h)) == brute_force_maximal_stable(h)


def test_transport_of_gstar_weights(gstar_graph):
    g, labeling = gstar_graph
    w = construct_equistarable_weights(g, is_bad(g, labeling))
    h, moved = equistarable_to_equistable(g, w)
    assert h == line_complement(g)
    assert moved.concrete() == w.concrete()
    assert verify_equistable(h, moved)
    assert verify_equistable(h, moved.concrete())
    bad = list(w.concrete())
    bad[0] += Fraction(1, 10**6)
    check = verify_equistable(h, bad)
    assert not check and "maximal stable set" in check.reason


def test_star_root_recovers_the_graph(gstar_graph):
    g, _ = gstar_graph
    root = star_root(line_complement(g))
    assert root is not None
    assert nx.is_isomorphic(to_nx(root), to_nx(g))
    assert line_complement(root) == line_complement(g)
    assert star_root(circulant(5, (1,))) is None


def test_vertex_side_agrees_with_star_side(gstar_graph, c11):
    for g, labeling in (gstar_graph, c11):
        h = line_complement(g)
        edge_side = decide_strong_equistarability(g, labeling)
        vertex_side = decide_strongly_equistable_small(h)
        assert (vertex_side.verdict == "StronglyEquistable") == edge_side.strongly_equistarable
        assert vertex_side.forced_count == len(edge_side.forced)
        if edge_side.witness is not None:
            assert vertex_side.gamma == edge_side.gamma == Fraction(1, 2)
            assert vertex_forced_value(h, vertex_side.positive, edge_side.witness.subset.mask) == Fraction(1, 2)


def test_small_vertex_side_decisions():
    c5 = circulant(5, (1,))
    assert decide_strongly_equistable_small(c5).verdict == "NotStronglyEquistable"
    assert not decide_rows(stable_set_rows(c5), 5).holds
    p3 = build_graph(3, [(0, 1), (1, 2)])
    decision = decide_rows(stable_set_rows(p3), 3)
    assert decision.holds and verify_equistable(p3, decision.weights)
    with pytest.raises(DomainError):
        decide_strongly_equistable_small(p3, [Fraction(1, 2)] * 3)


def test_combiner_on_c4():
    g = circulant(4, (1,))
    start = [Fraction(1, 2)] * 4
    result = strongly_equistable_to_equistable(g, perturbation_family(g, start), start)
    assert [s.level_before for s in result.steps] == [4]
    assert all(s.level_after < s.level_before for s in result.steps)
    assert verify_equistable(g, result.weights)


def test_combiner_on_gstar_complement(gstar_graph):
    g, labeling = gstar_graph
    h = line_complement(g)
    start = list(construct_equistarable_weights(g, is_bad(g, labeling)).concrete())
    family = perturbation_family(h, start, transported_chord_kernel(g, labeling))
    result = strongly_equistable_to_equistable(h, family, start)
    assert verify_equistable(h, result.weights)


def test_combiner_rejects_bad_family():
    g = circulant(4, (1,))
    start = [Fraction(1, 2)] * 4
    with pytest.raises(DomainError):
        strongly_equistable_to_equistable(g, {}, start)
    with pytest.raises(DomainError):
        strongly_equistable_to_equistable(g, lambda t: start, start)


def test_conjecture_certificates_for_gstar(gstar_graph):
    g, labeling = gstar_graph
    certs = conjecture_certificates(g, labeling, label_base=1)
    assert [c.conjecture for c in certs] == [NO_STRONG_CLIQUE, GP_NEQ_EQ, SE_NEQ_EQ]
    facts = certs[0].matching
    assert not facts.has_perfect_matching and facts.has_two_matching and not facts.two_extendable
    assert facts.strong_cliques == 0 and not facts.general_partition
    assert certs[2].forced_subset.value == Fraction(1, 2)


def test_conjecture_certificates_for_c11(c11):
    g, labeling = c11
    tags = [c.conjecture for c in conjecture_certificates(g, labeling)]
    assert tags == [NO_STRONG_CLIQUE, GP_NEQ_EQ, GP_NEQ_SE]


def test_no_strong_clique_conclusion_preconditions():
    with pytest.raises(DomainError):
        check_no_strong_clique_conclusion(circulant(9, (1,)))
    with pytest.raises(DomainError):
        check_no_strong_clique_conclusion(circulant(10, (1, 3)))
    k5 = build_graph(5, [(u, v) for u in range(5) for v in range(u + 1, 5)])
    with pytest.raises(DomainError):
        check_no_strong_clique_conclusion(k5)


def test_stable_set_caps():
    with pytest.raises(ResourceLimitError):
        stable_set_rows(build_graph(40, []))
    # ten disjoint triangles have 3^10 maximal stable sets, past the 2^14 row cap
    blocks = [(3 * i, 3 * i + 1) for i in range(10)] + [(3 * i + 1, 3 * i + 2) for i in range(10)]
    blocks += [(3 * i, 3 * i + 2) for i in range(10)]
    with pytest.raises(ResourceLimitError):
        stable_set_rows(build_graph(30, blocks))
