"""Simple undirected graphs over dense integer ids, with bitset adjacency.

Vertices are ``0..n-1`` and edges are numbered by their position in the edge
list. Both numberings are stable: every derived structure (line graphs,
weightings, kernel vectors, certificates) indexes by these ids.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from itertools import combinations

from .errors import DomainError, InputError


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(ids: Iterable[int]) -> int:
    out = 0
    for i in ids:
        out |= 1 << i
    return out


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[int, ...] = field(repr=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def edge_mask(self) -> int:
        return (1 << self.m) - 1

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adjacency[v]))

    def edge_id(self, u: int, v: int) -> int:
        try:
            return self._edge_ids[(min(u, v), max(u, v))]
        except KeyError:
            raise InputError(f"{u}-{v} is not an edge") from None

    @property
    def _edge_ids(self) -> dict[tuple[int, int], int]:
        cached = self.__dict__.get("_edge_id_cache")
        if cached is None:
            cached = {e: i for i, e in enumerate(self.edges)}
            object.__setattr__(self, "_edge_id_cache", cached)
        return cached

    def incident_edges(self, v: int) -> int:
        """Bitmask over edge ids of the star rooted at ``v``."""
        cached = self.__dict__.get("_star_cache")
        if cached is None:
            stars = [0] * self.n
            for i, (a, b) in enumerate(self.edges):
                stars[a] |= 1 << i
                stars[b] |= 1 << i
            cached = tuple(stars)
            object.__setattr__(self, "_star_cache", cached)
        return cached[v]

    def min_degree(self) -> int:
        return min((self.degree(v) for v in range(self.n)), default=0)


@dataclass(frozen=True)
class EdgeSubset:
    """A set of edge ids stored as a bitmask."""

    mask: int
    size: int = field(init=False)

    def __post_init__(self):
        if self.mask < 0:
            raise InputError("edge subset mask must be non-negative")
        object.__setattr__(self, "size", self.mask.bit_count())

    @classmethod
    def from_ids(cls, graph: Graph, ids: Iterable[int]) -> EdgeSubset:
        ids = list(ids)
        for i in ids:
            if not 0 <= i < graph.m:
                raise InputError(f"edge id {i} out of range for m={graph.m}")
        return cls(mask_of(ids))

    @classmethod
    def from_pairs(cls, graph: Graph, pairs: Iterable[tuple[int, int]]) -> EdgeSubset:
        return cls(mask_of(graph.edge_id(u, v) for u, v in pairs))

    def ids(self) -> list[int]:
        return list(iter_bits(self.mask))

    def __contains__(self, edge_id: int) -> bool:
        return bool(self.mask >> edge_id & 1)

    def __len__(self) -> int:
        return self.size


@dataclass(frozen=True)
class VertexSubset:
    mask: int

    @classmethod
    def from_ids(cls, graph: Graph, ids: Iterable[int]) -> VertexSubset:
        ids = list(ids)
        for v in ids:
            if not 0 <= v < graph.n:
                raise InputError(f"vertex {v} out of range for n={graph.n}")
        return cls(mask_of(ids))

    def ids(self) -> list[int]:
        return list(iter_bits(self.mask))

    def __contains__(self, v: int) -> bool:
        return bool(self.mask >> v & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()


@dataclass(frozen=True)
class HamiltonianLabeling:
    """A Hamiltonian cycle given by its cyclic vertex order.

    ``cycle_edges[j]`` is the id of the edge ``order[j-1] order[j]`` (indices
    mod n), so vertex ``order[j]`` is incident with cycle edges ``j`` and
    ``j+1``. ``chords`` lists the remaining edge ids in ascending order.
    """

    order: tuple[int, ...]
    cycle_edges: tuple[int, ...]
    chords: tuple[int, ...]

    @classmethod
    def from_order(cls, graph: Graph, order: Sequence[int]) -> HamiltonianLabeling:
        order = tuple(order)
        n = graph.n
        if sorted(order) != list(range(n)):
            raise InputError("labeling must visit every vertex exactly once")
        if n < 3:
            raise DomainError("a Hamiltonian cycle needs at least 3 vertices")
        cycle = []
        for j in range(n):
            u, v = order[j - 1], order[j]
            if not graph.has_edge(u, v):
                raise InputError(f"consecutive vertices {u},{v} are not adjacent")
            cycle.append(graph.edge_id(u, v))
        on_cycle = set(cycle)
        chords = tuple(i for i in range(graph.m) if i not in on_cycle)
        return cls(order, tuple(cycle), chords)

    @property
    def n(self) -> int:
        return len(self.order)

    def positions(self) -> dict[int, int]:
        return {v: j for j, v in enumerate(self.order)}


def build_graph(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph, keeping edges in input order."""
    if n < 0:
        raise InputError("vertex count must be non-negative")
    adjacency = [0] * n
    edges = []
    for pair in pairs:
        u, v = (int(x) for x in pair)
        if u == v:
            raise InputError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge {u}-{v} has a vertex outside 0..{n - 1}")
        if adjacency[u] >> v & 1:
            raise InputError(f"duplicate edge {u}-{v}")
        adjacency[u] |= 1 << v
        adjacency[v] |= 1 << u
        edges.append((min(u, v), max(u, v)))
    return Graph(n, tuple(edges), tuple(adjacency))


def complement(graph: Graph) -> Graph:
    pairs = [(u, v) for u, v in combinations(range(graph.n), 2) if not graph.has_edge(u, v)]
    return build_graph(graph.n, pairs)


def line_graph(graph: Graph) -> tuple[Graph, dict[int, int]]:
    """Line graph of ``graph`` and the map from its edge ids to line-graph vertices.

    Vertex ``i`` of the result is edge ``i`` of ``graph``.
    """
    if graph.m == 0:
        raise DomainError("line graph of an edgeless graph is empty")
    pairs = []
    for i, j in combinations(range(graph.m), 2):
        if set(graph.edges[i]) & set(graph.edges[j]):
            pairs.append((i, j))
    return build_graph(graph.m, pairs), {i: i for i in range(graph.m)}


def circulant(n: int, distances: Iterable[int]) -> Graph:
    """Circulant graph: ``i ~ j`` iff their cyclic distance lies in ``distances``.

    Edges are ordered by distance, then by the smaller endpoint along the cycle,
    so for ``1 in distances`` the first ``n`` edges are the cycle ``0..n-1``.
    """
    distances = sorted(set(distances))
    if n < 3:
        raise InputError("circulant needs n >= 3")
    for d in distances:
        if not 1 <= d <= n // 2:
            raise InputError(f"distance {d} not in 1..{n // 2}")
    pairs = []
    seen = set()
    for d in distances:
        for i in range(n):
            e = (min(i, (i + d) % n), max(i, (i + d) % n))
            if e not in seen:
                seen.add(e)
                pairs.append(e)
    return build_graph(n, pairs)


def cycle_labeling(graph: Graph) -> HamiltonianLabeling:
    """The labeling ``(0, 1, ..., n-1)``; valid for circulants containing distance 1."""
    return HamiltonianLabeling.from_order(graph, range(graph.n))


# 1-based chords of the 9-vertex triangle-free bad graph on the cycle 1..9.
GSTAR_CHORDS = ((1, 6), (2, 5), (3, 7), (4, 9), (5, 8))


def gstar(fifth_chord: tuple[int, int] = (5, 8)) -> tuple[Graph, HamiltonianLabeling]:
    """The 9-vertex, 14-edge bad graph (stored 0-based) with its cycle 1,2,...,9.

    ``fifth_chord`` is exposed only so the chord can be re-derived by search.
    """
    chords = GSTAR_CHORDS[:4] + (tuple(fifth_chord),)
    pairs = [(i, i + 1) for i in range(8)] + [(0, 8)]
    pairs += [(a - 1, b - 1) for a, b in chords]
    g = build_graph(9, pairs)
    return g, HamiltonianLabeling.from_order(g, range(9))


def is_triangle_free(graph: Graph) -> bool:
    for u, v in graph.edges:
        if graph.adjacency[u] & graph.adjacency[v]:
            return False
    return True


def is_connected(graph: Graph) -> bool:
    if graph.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= graph.adjacency[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == graph.vertex_mask


def is_bipartite(graph: Graph) -> bool:
    color = [-1] * graph.n
    for s in range(graph.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in iter_bits(graph.adjacency[v]):
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def star(graph: Graph, v: int) -> EdgeSubset:
    if not 0 <= v < graph.n:
        raise InputError(f"vertex {v} out of range")
    return EdgeSubset(graph.incident_edges(v))


def is_maximal_star(graph: Graph, v: int) -> bool:
    """Whether E(v) is not properly contained in another star."""
    d = graph.degree(v)
    if d >= 2:
        return True
    if d == 1:
        (w,) = graph.neighbors(v)
        return graph.degree(w) == 1
    return graph.m == 0


def maximal_star_masks(graph: Graph) -> list[int]:
    """Distinct maximal stars as edge masks (two leaves of a K2 share one)."""
    out = []
    for v in range(graph.n):
        if is_maximal_star(graph, v):
            s = graph.incident_edges(v)
            if s not in out:
                out.append(s)
    return out


def induced_subgraph_mask(graph: Graph, keep: int) -> list[tuple[int, int]]:
    return [(u, v) for u, v in graph.edges if keep >> u & 1 and keep >> v & 1]


# --- text formats -------------------------------------------------------------

_COMMENT = re.compile(r"#.*")


def parse_edge_list(text: str, label_base: int = 0) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"`` (``#`` comments).

    Vertex labels run from ``label_base`` to ``label_base + n - 1``.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _COMMENT.sub("", raw).strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise InputError(f"line {lineno}: expected two integers, got {raw!r}") from None
    if not rows:
        raise InputError("empty edge list")
    (n, m), pairs = rows[0], rows[1:]
    if len(pairs) != m:
        raise InputError(f"header announces {m} edges but {len(pairs)} follow")
    return build_graph(n, [(u - label_base, v - label_base) for u, v in pairs])


def format_edge_list(graph: Graph, comment: str | None = None, label_base: int = 0) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"{graph.n} {graph.m}")
    lines.extend(f"{u + label_base} {v + label_base}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def to_dot(graph: Graph, name: str = "G", label_base: int = 0) -> str:
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v + label_base};" for v in range(graph.n))
    lines.extend(f"  {u + label_base} -- {v + label_base};" for u, v in graph.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"
