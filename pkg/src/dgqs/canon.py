"""Canonical labeling for small graphs.

Equitable partition refinement followed by individualization backtracking.
Automorphisms found at the leaves (plus all twin transpositions, which are
known up front) prune sibling branches lying in one orbit of the current
pointwise stabilizer.  The canonical labeling is the leaf that maximizes
the graph6 bit string.
"""
from __future__ import annotations

from dgqs.graph import Graph, GraphError, graph6_from_adjacency

MAX_CANON_ORDER = 12


def _refine(adj: list[int], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        new: list[list[int]] = []
        for c in cells:
            if len(c) == 1:
                new.append(c)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                a = adj[v]
                key = tuple(bin(a & m).count("1") for m in masks)
                groups.setdefault(key, []).append(v)
            if len(groups) == 1:
                new.append(c)
            else:
                for key in sorted(groups):
                    new.append(groups[key])
        if len(new) == len(cells):
            return new
        cells = new


def _code(adj: list[int], order: list[int]) -> int:
    code = 0
    n = len(order)
    for j in range(1, n):
        aj = adj[order[j]]
        for i in range(j):
            code = (code << 1) | (aj >> order[i] & 1)
    return code


def _orbit_roots(n: int, gens: list[list[int]], fixed: list[int]) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        if any(g[v] != v for v in fixed):
            continue
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


def canonical_labeling(adj: list[int] | tuple[int, ...], n: int) -> tuple[int, list[int]]:
    """Return ``(code, order)`` where ``order[new] = old`` is canonical."""
    adj = list(adj)
    gens: list[list[int]] = []
    for u in range(n):
        for v in range(u + 1, n):
            if adj[u] & ~(1 << v) == adj[v] & ~(1 << u):
                g = list(range(n))
                g[u], g[v] = v, u
                gens.append(g)

    best_code = -1
    best_order: list[int] = []

    def search(cells: list[list[int]], prefix: list[int]) -> None:
        nonlocal best_code, best_order
        if len(cells) == n:
            order = [c[0] for c in cells]
            code = _code(adj, order)
            if code > best_code:
                best_code, best_order = code, order
            elif code == best_code:
                g = [0] * n
                for x in range(n):
                    g[best_order[x]] = order[x]
                gens.append(g)
            return
        idx = min((i for i, c in enumerate(cells) if len(c) > 1), key=lambda i: (len(cells[i]), i))
        target = cells[idx]
        explored: list[int] = []
        for v in sorted(target):
            if explored:
                roots = _orbit_roots(n, gens, prefix)
                if any(roots[u] == roots[v] for u in explored):
                    continue
            explored.append(v)
            rest = [w for w in target if w != v]
            child = cells[:idx] + [[v], rest] + cells[idx + 1:]
            search(_refine(adj, child), prefix + [v])

    search(_refine(adj, [list(range(n))]), [])
    return best_code, best_order


def canonical_adjacency(adj: list[int] | tuple[int, ...], n: int) -> list[int]:
    _, order = canonical_labeling(adj, n)
    pos = [0] * n
    for new, old in enumerate(order):
        pos[old] = new
    out = [0] * n
    for new, old in enumerate(order):
        a = adj[old]
        m = 0
        while a:
            low = a & -a
            m |= 1 << pos[low.bit_length() - 1]
            a ^= low
        out[new] = m
    return out


def canonical_graph6_adj(adj: list[int] | tuple[int, ...], n: int) -> str:
    if n > MAX_CANON_ORDER:
        raise GraphError(f"canonical form supports order <= {MAX_CANON_ORDER}, got {n}")
    return graph6_from_adjacency(canonical_adjacency(adj, n), n)


def canonical_form(g: Graph) -> str:
    return canonical_graph6_adj(g.adj, g.order)


def canonical_graph(g: Graph) -> Graph:
    if g.order > MAX_CANON_ORDER:
        raise GraphError(f"canonical form supports order <= {MAX_CANON_ORDER}, got {g.order}")
    return Graph.from_adjacency(canonical_adjacency(g.adj, g.order))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.order != h.order:
        return False
    for x in (g, h):
        if x.order > MAX_CANON_ORDER:
            raise GraphError(f"isomorphism test supports order <= {MAX_CANON_ORDER}, got {x.order}")
    if g.size != h.size or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)
