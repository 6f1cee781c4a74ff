"""Small-graph catalogs, seed search, 2-adic survey and Q-cospectral mates."""
from __future__ import annotations

import hashlib
import math
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Any, Callable, Iterable, Iterator, Sequence

from dgqs.canon import MAX_CANON_ORDER, canonical_form, canonical_graph6_adj, is_isomorphic
from dgqs.certify import (
    SpectralCertificate,
    certify_dgqs,
    det_walk_q,
    q_char_poly,
    q_constant_term,
    adjacency_constant_term,
    seed_hypothesis,
    two_adic_valuation,
)
from dgqs.factor import DEFAULT_BUDGET
from dgqs.graph import Graph, Graph6Error, complement, parse_graph6, read_graph6_lines
from dgqs.poly import IntPolynomial

MAX_BUILTIN_ORDER = 8
WORKERS_ENV = "DGQS_WORKERS"


class CatalogError(ValueError):
    pass


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def parallel_map(fn: Callable, items: Sequence, workers: int | None = None, chunksize: int = 64) -> list:
    """Order-preserving map; results never depend on the worker count."""
    workers = default_workers() if workers is None else workers
    if workers <= 1 or len(items) < 2 * chunksize:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=chunksize))


@dataclass
class GraphCatalog:
    order: int
    source: str
    graphs: tuple[Graph, ...]
    _keys: list | None = field(default=None, repr=False, compare=False)

    def __iter__(self) -> Iterator[Graph]:
        return iter(self.graphs)

    def __len__(self) -> int:
        return len(self.graphs)

    @property
    def description(self) -> str:
        return f"{self.source}, order {self.order}, {len(self.graphs)} isomorphism classes"

    def digest(self) -> str:
        h = hashlib.sha256()
        for g in self.graphs:
            h.update(canonical_form(g).encode() + b"\n")
        return h.hexdigest()

    def spectral_keys(self) -> list[tuple[IntPolynomial, IntPolynomial]]:
        if self._keys is None:
            self._keys = [generalized_q_key(g) for g in self.graphs]
        return self._keys


def generalized_q_key(g: Graph) -> tuple[IntPolynomial, IntPolynomial]:
    """Q-characteristic polynomials of ``g`` and of its complement."""
    return q_char_poly(g), q_char_poly(complement(g))


# -- enumeration ------------------------------------------------------------


def _extend(item: tuple[tuple[int, ...], int]) -> set[str]:
    adj, n = item
    found = set()
    for mask in range(1 << n):
        new = [a | ((mask >> i & 1) << n) for i, a in enumerate(adj)]
        new.append(mask)
        found.add(canonical_graph6_adj(new, n + 1))
    return found


def _sort_key(g: Graph) -> tuple[int, str]:
    return g.size, canonical_form(g)


@lru_cache(maxsize=None)
def _builtin_classes(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, frozenset()),)
    prev = _builtin_classes(n - 1)
    found: set[str] = set()
    for part in parallel_map(_extend, [(g.adj, n - 1) for g in prev], chunksize=16):
        found |= part
    graphs = [parse_graph6(s) for s in found]
    graphs.sort(key=_sort_key)
    return tuple(graphs)


def enumerate_graphs(n: int) -> GraphCatalog:
    """One representative per isomorphism class on ``n`` vertices.

    Every graph on ``n`` vertices is a graph on ``n - 1`` vertices plus a
    vertex with some neighborhood, so extending each class representative by
    every neighborhood and deduplicating canonically is complete.
    """
    if not 1 <= n <= MAX_BUILTIN_ORDER:
        raise CatalogError(f"built-in enumeration covers 1 <= n <= {MAX_BUILTIN_ORDER}; supply a graph6 catalog for n={n}")
    return GraphCatalog(n, "built-in enumeration", _builtin_classes(n))


def labeled_dedup_count(n: int, edge_count: int | None = None) -> int:
    """Classes among all labeled graphs on ``n`` vertices (optionally with a fixed edge count)."""
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    seen = set()
    if edge_count is None:
        subsets: Iterable = (
            [p for b, p in enumerate(pairs) if mask >> b & 1] for mask in range(1 << len(pairs))
        )
    else:
        subsets = combinations(pairs, edge_count)
    for edges in subsets:
        adj = [0] * n
        for i, j in edges:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        seen.add(canonical_graph6_adj(adj, n))
    return len(seen)


def _partitions(n: int, largest: int | None = None) -> Iterator[list[int]]:
    largest = n if largest is None else largest
    if n == 0:
        yield []
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield [k] + rest


def polya_class_counts(n: int) -> list[int]:
    """Number of graphs on ``n`` vertices with ``m`` edges, ``m = 0..C(n,2)``.

    Burnside over the action of ``S_n`` on vertex pairs, summed by cycle type.
    """
    total_pairs = n * (n - 1) // 2
    acc = [0] * (total_pairs + 1)
    for part in _partitions(n):
        mult = Counter(part)
        size = math.factorial(n)
        for length, m in mult.items():
            size //= length**m * math.factorial(m)
        cycle_lengths: list[int] = []
        for idx, a in enumerate(part):
            cycle_lengths += [a] * ((a - 1) // 2)
            if a % 2 == 0:
                cycle_lengths.append(a // 2)
            for b in part[idx + 1:]:
                g = math.gcd(a, b)
                cycle_lengths += [a * b // g] * g
        poly = [1]
        for c in cycle_lengths:
            nxt = poly + [0] * c
            for i, v in enumerate(poly):
                nxt[i + c] += v
            poly = nxt
        for i, v in enumerate(poly):
            acc[i] += size * v
    fact = math.factorial(n)
    out = []
    for v in acc:
        q, r = divmod(v, fact)
        assert r == 0
        out.append(q)
    return out


def edge_count_histogram(catalog: GraphCatalog) -> list[int]:
    hist = [0] * (catalog.order * (catalog.order - 1) // 2 + 1)
    for g in catalog:
        hist[g.size] += 1
    return hist


def load_catalog(lines: Iterable[str], source: str = "external graph6 file") -> GraphCatalog:
    """Ingest graph6 lines, deduplicating isomorphic entries."""
    order = None
    by_form: dict[str, Graph] = {}
    for lineno, item in read_graph6_lines(lines):
        if isinstance(item, Graph6Error):
            raise CatalogError(f"line {lineno}: {item}")
        if order is None:
            order = item.order
        elif item.order != order:
            raise CatalogError(f"line {lineno}: mixed orders {order} and {item.order} in one catalog")
        if item.order > MAX_CANON_ORDER:
            raise CatalogError(f"line {lineno}: order {item.order} beyond canonical-form range")
        by_form.setdefault(canonical_form(item), item)
    if order is None:
        raise CatalogError("empty catalog")
    graphs = sorted(by_form.values(), key=_sort_key)
    return GraphCatalog(order, source, tuple(graphs))


# -- seeds and survey -------------------------------------------------------


@dataclass
class SeedSearch:
    order: int
    scope: str
    exhaustive: bool
    satisfiers: list[SpectralCertificate]
    det_clause_count: int
    a0_clause_count: int
    precondition: str | None = None
    det_clause_graphs: list[str] = field(default_factory=list)
    a0_clause_graphs: list[str] = field(default_factory=list)

    @property
    def found(self) -> bool:
        return bool(self.satisfiers)

    def to_json(self) -> dict[str, Any]:
        return {
            "order": self.order,
            "scope": self.scope,
            "exhaustive": self.exhaustive,
            "precondition": self.precondition,
            "seeds_found": len(self.satisfiers),
            "satisfiers": [c.to_json() for c in self.satisfiers],
            "det_clause_only_count": self.det_clause_count,
            "a0_clause_only_count": self.a0_clause_count,
            "det_clause_graphs": self.det_clause_graphs,
            "a0_clause_graphs": self.a0_clause_graphs,
            "finding": (
                f"{len(self.satisfiers)} seed graph(s) at n={self.order}"
                if self.satisfiers
                else f"no graph on n={self.order} vertices satisfies the seed hypothesis (exhaustive over {self.scope})"
            ) if self.precondition is None else self.precondition,
        }


def _seed_row(g: Graph) -> tuple[bool, bool, bool]:
    c = seed_hypothesis(g)
    return c["n_even"], c["det_WQ"], c["a0"]


def find_seeds(n: int, catalog: GraphCatalog | None = None, *, budget: int = DEFAULT_BUDGET,
               workers: int | None = None) -> SeedSearch:
    catalog = catalog or enumerate_graphs(n)
    if catalog.order != n:
        raise CatalogError(f"catalog order {catalog.order} does not match n={n}")
    if n % 2:
        return SeedSearch(n, catalog.description, False, [], 0, 0,
                          precondition=f"n={n} is odd; the seed hypothesis needs an even order")
    rows = parallel_map(_seed_row, list(catalog.graphs), workers)
    satisfiers, det_only, a0_only = [], [], []
    for g, (_, det_ok, a0_ok) in zip(catalog.graphs, rows):
        if det_ok and a0_ok:
            satisfiers.append(certify_dgqs(g, budget))
        elif det_ok:
            det_only.append(canonical_form(g))
        elif a0_ok:
            a0_only.append(canonical_form(g))
    return SeedSearch(n, catalog.description, catalog.source == "built-in enumeration", satisfiers,
                      len(det_only), len(a0_only), det_clause_graphs=det_only, a0_clause_graphs=a0_only)


def _survey_row(g: Graph) -> tuple[int | None, int, int]:
    return two_adic_valuation(det_walk_q(g)), q_constant_term(g), adjacency_constant_term(g)


@dataclass
class TwoAdicSurvey:
    order: int
    scope: str
    valuation_histogram: dict[str, int]
    min_valuation: int | None
    a0_q_values: dict[int, int]
    a0_adjacency_values: dict[int, int]

    @property
    def abs_a0_two_occurs(self) -> bool:
        return any(abs(v) == 2 for v in self.a0_q_values)

    def to_json(self) -> dict[str, Any]:
        return {
            "order": self.order,
            "scope": self.scope,
            "valuation_histogram": self.valuation_histogram,
            "min_valuation": self.min_valuation,
            "lemma_exponent": (3 * self.order - 2) // 2,
            "intro_exponent": (self.order - 3) // 2,
            "a0_Q_values": {str(k): v for k, v in sorted(self.a0_q_values.items())},
            "a0_A_values": {str(k): v for k, v in sorted(self.a0_adjacency_values.items())},
            "abs_a0_Q_equals_2_occurs": self.abs_a0_two_occurs,
        }


def two_adic_survey(n: int, catalog: GraphCatalog | None = None, workers: int | None = None) -> TwoAdicSurvey:
    catalog = catalog or enumerate_graphs(n)
    rows = parallel_map(_survey_row, list(catalog.graphs), workers)
    vals = Counter("inf" if v is None else str(v) for v, _, _ in rows)
    finite = [v for v, _, _ in rows if v is not None]
    hist = dict(sorted(vals.items(), key=lambda kv: (kv[0] == "inf", int(kv[0]) if kv[0] != "inf" else 0)))
    return TwoAdicSurvey(
        order=n,
        scope=catalog.description,
        valuation_histogram=hist,
        min_valuation=min(finite) if finite else None,
        a0_q_values=dict(sorted(Counter(a for _, a, _ in rows).items())),
        a0_adjacency_values=dict(sorted(Counter(a for _, _, a in rows).items())),
    )


# -- cospectral mates -------------------------------------------------------


@dataclass
class MateReport:
    subject: str
    mates: list[str]
    scope: str

    @property
    def dgqs_within_scope(self) -> bool:
        return not self.mates

    def to_json(self) -> dict[str, Any]:
        return {
            "subject": self.subject,
            "mates": self.mates,
            "scope": self.scope,
            "verdict": "DGQS-within-scope" if self.dgqs_within_scope else "not-DGQS",
        }


def find_q_cospectral_mates(g: Graph, catalog: GraphCatalog) -> MateReport:
    if g.order != catalog.order:
        raise CatalogError(f"graph order {g.order} does not match catalog order {catalog.order}")
    key = generalized_q_key(g)
    mates = [
        canonical_form(h)
        for h, hk in zip(catalog.graphs, catalog.spectral_keys())
        if hk == key and not is_isomorphic(g, h)
    ]
    return MateReport(canonical_form(g), sorted(mates), catalog.description)


def brute_force_dgqs(g: Graph, catalog: GraphCatalog | None = None) -> MateReport:
    if catalog is None:
        catalog = enumerate_graphs(g.order)
    return find_q_cospectral_mates(g, catalog)


def cospectral_classes(catalog: GraphCatalog) -> list[list[str]]:
    """Groups (size >= 2) of catalog members sharing the generalized Q-spectrum."""
    groups: dict[tuple, list[str]] = {}
    for g, key in zip(catalog.graphs, catalog.spectral_keys()):
        groups.setdefault((key[0].coeffs, key[1].coeffs), []).append(canonical_form(g))
    return [sorted(v) for v in groups.values() if len(v) > 1]


def certify_catalog(catalog: GraphCatalog, budget: int = DEFAULT_BUDGET, variant: str = "lemma",
                    workers: int | None = None) -> list[SpectralCertificate]:
    return parallel_map(_Certifier(budget, variant), list(catalog.graphs), workers)


@dataclass(frozen=True)
class _Certifier:
    budget: int
    variant: str

    def __call__(self, g: Graph) -> SpectralCertificate:
        return certify_dgqs(g, self.budget, self.variant)
