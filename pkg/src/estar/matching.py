"""Maximum-cardinality matching in general graphs (Edmonds' blossom algorithm)."""

from __future__ import annotations

from collections import deque

from .graph import Graph, iter_bits


def maximum_matching(graph: Graph, vertices: int | None = None) -> list[int]:
    """Return ``mate`` with ``mate[v]`` the partner of ``v`` or -1.

    Only vertices in the bitmask ``vertices`` (default: all) take part.
    """
    n = graph.n
    keep = graph.vertex_mask if vertices is None else vertices
    adj = [list(iter_bits(graph.adjacency[v] & keep)) if keep >> v & 1 else [] for v in range(n)]
    mate = [-1] * n

    # greedy start keeps the augmenting phase short
    for v in range(n):
        if mate[v] < 0:
            for w in adj[v]:
                if mate[w] < 0:
                    mate[v], mate[w] = w, v
                    break

    for root in range(n):
        if mate[root] >= 0 or not adj[root]:
            continue
        end, parent = _find_augmenting_path(adj, mate, root)
        while end >= 0:
            pv = parent[end]
            ppv = mate[pv]
            mate[end], mate[pv] = pv, end
            end = ppv
    return mate


def _find_augmenting_path(adj, mate, root):
    n = len(adj)
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))
    used[root] = True
    queue = deque([root])

    def lca(a, b):
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] < 0:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark_path(v, b, child, blossom):
        while base[v] != b:
            blossom[base[v]] = blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] >= 0 and parent[mate[to]] >= 0):
                cur = lca(v, to)
                blossom = [False] * n
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] < 0:
                parent[to] = v
                if mate[to] < 0:
                    return to, parent
                used[mate[to]] = True
                queue.append(mate[to])
    return -1, parent


def matching_edges(graph: Graph, mate: list[int]) -> list[int]:
    return [i for i, (u, v) in enumerate(graph.edges) if mate[u] == v]
