"""Stable sets, strong cliques, perfect matchings and k-extendability."""

from __future__ import annotations

from .errors import DomainError, ResourceLimitError
from .graph import EdgeSubset, Graph, VertexSubset, complement, iter_bits
from .limits import DEFAULT_MAX_VERTICES, MAX_EXTENSION_K
from .matching import matching_edges, maximum_matching


def _maximal_cliques(n: int, adjacency: list[int] | tuple[int, ...]) -> list[int]:
    """Bron-Kerbosch with pivoting; results sorted by their ascending vertex lists."""
    found: list[int] = []

    def expand(clique: int, cand: int, excl: int) -> None:
        if not cand and not excl:
            found.append(clique)
            return
        # pivot: most candidate neighbours, lowest id on ties
        pivot, best = -1, -1
        for u in iter_bits(cand | excl):
            k = (cand & adjacency[u]).bit_count()
            if k > best:
                pivot, best = u, k
        for v in iter_bits(cand & ~adjacency[pivot]):
            bit = 1 << v
            expand(clique | bit, cand & adjacency[v], excl & adjacency[v])
            cand &= ~bit
            excl |= bit

    if n == 0:
        return [0]
    expand(0, (1 << n) - 1, 0)
    found.sort(key=lambda mask: list(iter_bits(mask)))
    return found


def _check_size(graph: Graph, max_vertices: int) -> None:
    if graph.n > max_vertices:
        raise ResourceLimitError(f"n={graph.n} exceeds the vertex cap {max_vertices}")


def enumerate_maximal_stable_sets(
    graph: Graph, max_vertices: int = DEFAULT_MAX_VERTICES
) -> list[VertexSubset]:
    _check_size(graph, max_vertices)
    comp = complement(graph)
    return [VertexSubset(m) for m in _maximal_cliques(graph.n, comp.adjacency)]


def maximal_cliques(graph: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> list[VertexSubset]:
    _check_size(graph, max_vertices)
    return [VertexSubset(m) for m in _maximal_cliques(graph.n, graph.adjacency)]


def is_clique(graph: Graph, mask: int) -> bool:
    return all(mask & ~(1 << v) & ~graph.adjacency[v] == 0 for v in iter_bits(mask))


def is_stable(graph: Graph, mask: int) -> bool:
    return all(graph.adjacency[v] & mask == 0 for v in iter_bits(mask))


def is_strong_clique(
    graph: Graph, clique: VertexSubset, max_vertices: int = DEFAULT_MAX_VERTICES
) -> bool:
    if not is_clique(graph, clique.mask):
        return False
    stables = enumerate_maximal_stable_sets(graph, max_vertices)
    return all(s.mask & clique.mask for s in stables)


def all_strong_cliques(graph: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> list[VertexSubset]:
    """Inclusion-maximal strong cliques (every strong clique extends to one)."""
    stables = [s.mask for s in enumerate_maximal_stable_sets(graph, max_vertices)]
    return [q for q in maximal_cliques(graph, max_vertices) if all(s & q.mask for s in stables)]


def is_general_partition_via_strong_cliques(
    graph: Graph, max_vertices: int = DEFAULT_MAX_VERTICES
) -> bool:
    strong = [q.mask for q in all_strong_cliques(graph, max_vertices)]
    return all(any(q >> u & 1 and q >> v & 1 for q in strong) for u, v in graph.edges)


def has_perfect_matching(graph: Graph, vertices: int | None = None) -> EdgeSubset | None:
    """A perfect matching of the subgraph induced by ``vertices``, or ``None``."""
    keep = graph.vertex_mask if vertices is None else vertices
    if keep.bit_count() % 2:
        return None
    mate = maximum_matching(graph, keep)
    if any(mate[v] < 0 for v in iter_bits(keep)):
        return None
    return EdgeSubset.from_ids(graph, matching_edges(graph, mate))


def k_matchings(graph: Graph, k: int):
    """Yield every matching of size ``k`` as a tuple of ascending edge ids."""

    def extend(start: int, used: int, chosen: tuple[int, ...]):
        if len(chosen) == k:
            yield chosen
            return
        for i in range(start, graph.m):
            u, v = graph.edges[i]
            bits = 1 << u | 1 << v
            if not used & bits:
                yield from extend(i + 1, used | bits, chosen + (i,))

    yield from extend(0, 0, ())


def is_k_extendable(graph: Graph, k: int) -> bool:
    if k < 1:
        raise DomainError("k-extendability needs k >= 1")
    if k > MAX_EXTENSION_K:
        raise ResourceLimitError(f"k={k} exceeds the supported maximum {MAX_EXTENSION_K}")
    if graph.n % 2:
        # odd order: no perfect matching, so no k-matching can extend
        return False
    found = False
    for chosen in k_matchings(graph, k):
        found = True
        covered = 0
        for i in chosen:
            u, v = graph.edges[i]
            covered |= 1 << u | 1 << v
        if has_perfect_matching(graph, graph.vertex_mask & ~covered) is None:
            return False
    return found


def perfect_matchings_bruteforce(graph: Graph) -> list[int]:
    """All perfect matchings as edge masks, by exhaustive search (small m only)."""
    if graph.n % 2:
        return []
    return [sum(1 << i for i in c) for c in k_matchings(graph, graph.n // 2)]


def has_k_matching(graph: Graph, k: int) -> bool:
    return next(k_matchings(graph, k), None) is not None
