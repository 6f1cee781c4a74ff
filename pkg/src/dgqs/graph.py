"""Simple undirected graphs, graph6 I/O, complements and rooted products.

Vertices are ``0..order-1``.  Each graph carries a tuple of adjacency
bitmasks (bit ``j`` of ``adj[i]`` set iff ``i ~ j``), which is what the
enumeration and canonical-labeling code operate on.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from dgqs.matrix import ExactMatrix

MAX_ORDER = 64
MAX_GRAPH6_ORDER = 62
GRAPH6_HEADER = ">>graph6<<"


class GraphError(ValueError):
    """Invalid graph construction or unsupported size."""


class Graph6Error(ValueError):
    """Malformed graph6 text."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    order: int
    edges: frozenset[tuple[int, int]]
    adj: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not 1 <= self.order <= MAX_ORDER:
            raise GraphError(f"order must be in 1..{MAX_ORDER}, got {self.order}")
        adj = [0] * self.order
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.order and 0 <= v < self.order):
                raise GraphError(f"edge ({u}, {v}) out of range for order {self.order}")
            if u > v:
                u, v = v, u
            norm.add((u, v))
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "adj", tuple(adj))

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> Graph:
        return cls(order, frozenset(tuple(e) for e in edges))

    @classmethod
    def from_adjacency(cls, adj: Iterable[int]) -> Graph:
        adj = list(adj)
        n = len(adj)
        return cls(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n) if adj[i] >> j & 1))

    @property
    def size(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def degrees(self) -> list[int]:
        return [bin(a).count("1") for a in self.adj]

    def relabel(self, perm: list[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.order, frozenset((perm[u], perm[v]) for u, v in self.edges))

    def induced(self, vertices: list[int]) -> Graph:
        pos = {v: i for i, v in enumerate(vertices)}
        return Graph(
            len(vertices),
            frozenset((pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos),
        )

    def __str__(self) -> str:
        return to_graph6(self) if self.order <= MAX_GRAPH6_ORDER else f"Graph(order={self.order}, size={self.size})"


# -- graph6 -----------------------------------------------------------------


def parse_graph6(text: str) -> Graph:
    line = text.strip("\r\n")
    base = 0
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
        base = len(GRAPH6_HEADER)
    if not line:
        raise Graph6Error("empty graph6 string", base)
    for i, ch in enumerate(line):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ch!r} outside graph6 range 63..126", base + i)
    n = ord(line[0]) - 63
    if n == 63:
        raise Graph6Error("multi-byte order prefix (n > 62) unsupported", base)
    if n < 1:
        raise Graph6Error("order 0 unsupported", base)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = line[1:]
    if len(body) < nbytes:
        raise Graph6Error(f"truncated: expected {nbytes} data bytes, got {len(body)}", base + 1 + len(body))
    if len(body) > nbytes:
        raise Graph6Error("trailing garbage after graph data", base + 1 + nbytes)
    bits = 0
    for ch in body:
        bits = (bits << 6) | (ord(ch) - 63)
    pad = 6 * nbytes - nbits
    if pad and bits & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", base + nbytes)
    bits >>= pad
    edges = []
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if bits >> k & 1:
                edges.append((i, j))
            k -= 1
    return Graph(n, frozenset(edges))


def graph6_from_adjacency(adj: list[int] | tuple[int, ...], n: int) -> str:
    if n > MAX_GRAPH6_ORDER:
        raise GraphError(f"graph6 output supports order <= {MAX_GRAPH6_ORDER}, got {n}")
    out = [chr(n + 63)]
    acc = 0
    nacc = 0
    for j in range(1, n):
        aj = adj[j]
        for i in range(j):
            acc = (acc << 1) | (aj >> i & 1)
            nacc += 1
            if nacc == 6:
                out.append(chr(acc + 63))
                acc = nacc = 0
    if nacc:
        out.append(chr((acc << (6 - nacc)) + 63))
    return "".join(out)


def to_graph6(g: Graph) -> str:
    return graph6_from_adjacency(g.adj, g.order)


def read_graph6_lines(lines: Iterable[str]) -> Iterable[tuple[int, Graph | Graph6Error]]:
    """Yield ``(line_number, graph_or_error)`` for each non-blank line."""
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line:
            continue
        try:
            yield lineno, parse_graph6(line)
        except Graph6Error as exc:
            yield lineno, exc


# -- constructions ----------------------------------------------------------


def complement(g: Graph) -> Graph:
    n = g.order
    full = (1 << n) - 1
    return Graph.from_adjacency([(~a & full) & ~(1 << i) for i, a in enumerate(g.adj)])


def q_matrix(g: Graph) -> ExactMatrix:
    """Signless Laplacian ``A + D``."""
    n = g.order
    rows = []
    for i in range(n):
        a = g.adj[i]
        row = [(a >> j) & 1 for j in range(n)]
        row[i] = bin(a).count("1")
        rows.append(row)
    return ExactMatrix(rows)


def adjacency_matrix(g: Graph) -> ExactMatrix:
    n = g.order
    return ExactMatrix([[(g.adj[i] >> j) & 1 for j in range(n)] for i in range(n)])


def rooted_product(g: Graph, k: int) -> Graph:
    """Attach a path on ``k`` vertices to every vertex of ``g``.

    Layer-major indexing: vertex ``(i, s)`` (root ``i``, path position ``s``,
    ``s = 0`` being the root itself) gets flat index ``s * n + i``.
    """
    if k < 1:
        raise GraphError(f"path length must be >= 1, got {k}")
    n = g.order
    if n * k > MAX_ORDER:
        raise GraphError(f"rooted product order {n}*{k} exceeds capacity {MAX_ORDER}")
    edges = set(g.edges)
    for s in range(k - 1):
        for i in range(n):
            edges.add((s * n + i, (s + 1) * n + i))
    return Graph(n * k, frozenset(edges))


def rooted_tower(g: Graph, k: int, t: int) -> Graph:
    """``t``-fold iterated rooted product with the same path length."""
    if t < 1:
        raise GraphError(f"tower height must be >= 1, got {t}")
    if g.order * k**t > MAX_ORDER:
        raise GraphError(f"tower order {g.order}*{k}^{t} exceeds capacity {MAX_ORDER}")
    h = g
    for _ in range(t):
        h = rooted_product(h, k)
    return h


# -- a few named graphs, mostly for tests and examples -----------------------


def path_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n)))


def empty_graph(n: int) -> Graph:
    return Graph(n, frozenset())


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, frozenset((0, i) for i in range(1, leaves + 1)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    n = g.order
    return Graph(n + h.order, frozenset(g.edges | {(u + n, v + n) for u, v in h.edges}))
