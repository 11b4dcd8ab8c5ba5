"""Incidence matrices and the chord basis of their kernel.

For a graph with an odd Hamiltonian cycle, every chord closes exactly one even
cycle with an arc of the Hamiltonian cycle. Alternating +1/-1 around that even
cycle gives a kernel vector of the vertex-edge incidence matrix; the vectors
for all chords form a basis. Together with the vector that is 1/2 on every
cycle edge and 0 on chords, they describe every solution of ``A x = 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, InputError
from .graph import EdgeSubset, Graph, HamiltonianLabeling, is_bipartite, is_connected
from .linalg import Matrix, dot, integer_scaled, mat_vec, nullspace, rank
from .subsets import pack, scan_equal


def incidence_matrix(graph: Graph) -> Matrix:
    rows = [[Fraction(0)] * graph.m for _ in range(graph.n)]
    for i, (u, v) in enumerate(graph.edges):
        rows[u][i] = Fraction(1)
        rows[v][i] = Fraction(1)
    return rows


@dataclass(frozen=True)
class KernelBasis:
    graph: Graph
    labeling: HamiltonianLabeling
    particular: tuple[Fraction, ...]
    vectors: tuple[tuple[int, ...], ...]
    # per vector: chord id followed by the remaining edge ids in cycle order
    cycles: tuple[tuple[int, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.vectors)

    @property
    def chords(self) -> tuple[int, ...]:
        return tuple(c[0] for c in self.cycles)

    def edge_signature(self, edge_id: int) -> tuple[int, ...]:
        """Entries of every basis vector at one edge."""
        return tuple(vec[edge_id] for vec in self.vectors)


def _even_cycle(labeling: HamiltonianLabeling, chord: tuple[int, int], chord_id: int) -> tuple[int, ...]:
    pos = labeling.positions()
    a, b = sorted((pos[chord[0]], pos[chord[1]]))
    n = labeling.n
    cyc = labeling.cycle_edges
    if (b - a) % 2 == 1:
        # arc order[a..b], walked back from b
        arc = [cyc[j] for j in range(b, a, -1)]
    else:
        # arc order[b..n-1, 0..a], walked forward from b
        arc = [cyc[j % n] for j in range(b + 1, n + a + 1)]
    return (chord_id, *arc)


def kernel_basis_from_chords(graph: Graph, labeling: HamiltonianLabeling) -> KernelBasis:
    if labeling.n != graph.n:
        raise InputError("labeling does not match the graph")
    if graph.n % 2 == 0:
        raise DomainError("chord basis needs an odd Hamiltonian cycle")
    if not is_connected(graph) or is_bipartite(graph):
        raise DomainError("kernel has dimension m - n only for connected non-bipartite graphs")

    particular = [Fraction(0)] * graph.m
    for e in labeling.cycle_edges:
        particular[e] = Fraction(1, 2)

    vectors, cycles = [], []
    for chord_id in labeling.chords:
        cycle = _even_cycle(labeling, graph.edges[chord_id], chord_id)
        if len(cycle) % 2:
            raise DomainError(f"chord {graph.edges[chord_id]} does not close an even cycle")
        vec = [0] * graph.m
        for k, e in enumerate(cycle):
            vec[e] = -1 if k % 2 else 1
        vectors.append(tuple(vec))
        cycles.append(cycle)

    basis = KernelBasis(graph, labeling, tuple(particular), tuple(vectors), tuple(cycles))
    _check_basis(basis)
    return basis


def _check_basis(basis: KernelBasis) -> None:
    a = incidence_matrix(basis.graph)
    if any(x != 1 for x in mat_vec(a, basis.particular)):
        raise AssertionError("particular solution does not satisfy A x = 1")
    for vec in basis.vectors:
        if any(mat_vec(a, vec)):
            raise AssertionError("basis vector is not in the kernel")
    expected = basis.graph.m - basis.graph.n
    if basis.dimension != expected:
        raise AssertionError(f"kernel basis has {basis.dimension} vectors, expected {expected}")
    if basis.vectors and rank(basis.vectors) != expected:
        raise AssertionError("kernel basis vectors are linearly dependent")


def forced_value(basis: KernelBasis, subset: EdgeSubset) -> Fraction | None:
    """Total of ``subset`` shared by every solution of ``A x = 1``, if it is constant."""
    if subset.size == 0:
        raise DomainError("forced value of the empty set is undefined")
    indicator = [1 if e in subset else 0 for e in range(basis.graph.m)]
    if any(dot(indicator, vec) for vec in basis.vectors):
        return None
    return dot(indicator, basis.particular)


def constraint_kernel(rows: list[int], ncols: int) -> list[list[int]]:
    """Integer basis of the kernel of the 0/1 matrix whose rows are the masks ``rows``."""
    matrix = [[r >> c & 1 for c in range(ncols)] for r in rows]
    return [integer_scaled(v) for v in nullspace(matrix, ncols)]


def orthogonal_masks(kernel: list[list[int]], ncols: int) -> list[int]:
    """Every nonempty column mask whose indicator is orthogonal to all of ``kernel``, ascending."""
    if not kernel:
        return list(range(1, 1 << ncols))
    signatures = [tuple(vec[c] for vec in kernel) for c in range(ncols)]
    packed, (zero,) = pack(signatures, [(0,) * len(kernel)])
    return sorted(scan_equal(packed, zero))
