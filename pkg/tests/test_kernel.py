import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from estar.engine import hamiltonian_cycles
from estar.errors import DomainError
from estar.graph import EdgeSubset, HamiltonianLabeling, build_graph, circulant, cycle_labeling, is_bipartite, is_connected
from estar.kernel import (
    constraint_kernel,
    forced_value,
    incidence_matrix,
    kernel_basis_from_chords,
    orthogonal_masks,
)
from estar.linalg import mat_vec, nullspace, rank

from .strategies import small_graphs


def test_gstar_basis(gstar_graph):
    g, labeling = gstar_graph
    basis = kernel_basis_from_chords(g, labeling)
    assert basis.dimension == 5 == g.m - g.n
    a = incidence_matrix(g)
    for vec in basis.vectors:
        assert not any(mat_vec(a, vec))
    assert mat_vec(a, basis.particular) == [1] * g.n
    assert set(basis.chords) == set(labeling.chords)
    # every vector alternates around an even cycle through its own chord only
    for chord, cycle, vec in zip(basis.chords, basis.cycles, basis.vectors):
        assert len(cycle) % 2 == 0 and cycle[0] == chord
        assert vec[chord] == 1
        assert all(vec[f] == 0 for f in labeling.chords if f != chord)


def test_gstar_forced_pair(gstar_graph):
    g, labeling = gstar_graph
    basis = kernel_basis_from_chords(g, labeling)
    t = EdgeSubset.from_pairs(g, [(0, 8), (2, 6)])
    assert forced_value(basis, t) == Fraction(1, 2)
    assert forced_value(basis, EdgeSubset.from_pairs(g, [(0, 1)])) is None
    with pytest.raises(DomainError):
        forced_value(basis, EdgeSubset(0))


def test_basis_preconditions():
    c6 = circulant(6, (1,))
    with pytest.raises(DomainError):
        kernel_basis_from_chords(c6, cycle_labeling(c6))


def random_hamiltonian_graph(rng, n):
    order = list(range(n))
    rng.shuffle(order)
    pairs = {tuple(sorted((order[i], order[(i + 1) % n]))) for i in range(n)}
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < 0.25:
                pairs.add((u, v))
    return build_graph(n, sorted(pairs))


def test_chord_basis_agrees_with_elimination():
    rng = random.Random(20240501)
    checked = 0
    while checked < 40:
        n = rng.choice([5, 7, 9])
        g = random_hamiltonian_graph(rng, n)
        order = next(hamiltonian_cycles(g))
        basis = kernel_basis_from_chords(g, HamiltonianLabeling.from_order(g, order))
        generic = nullspace(incidence_matrix(g))
        assert basis.dimension == len(generic) == g.m - g.n
        assert rank(list(basis.vectors) + generic) == len(generic)
        checked += 1


@settings(max_examples=60, deadline=None)
@given(small_graphs(max_n=7, min_n=3))
def test_generic_nullity(g):
    if not is_connected(g):
        return
    nullity = len(nullspace(incidence_matrix(g)))
    assert nullity == g.m - g.n + (1 if is_bipartite(g) else 0)


def test_constraint_kernel_and_orthogonal_masks_by_brute_force():
    rows = [0b0011, 0b0110, 0b1100]
    kernel = constraint_kernel(rows, 4)
    assert len(kernel) == 1
    expected = [m for m in range(1, 16) if all(sum(v[c] for c in range(4) if m >> c & 1) == 0 for v in kernel)]
    assert orthogonal_masks(kernel, 4) == expected
    assert orthogonal_masks([], 3) == list(range(1, 8))
