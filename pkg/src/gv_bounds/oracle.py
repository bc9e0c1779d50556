"""Brute-force ground truth on explicit graphs.

Words are stored as integer labels, the base-q digits of the word read most
significant first, so label order is lexicographic word order. The Gilbert
graph joins words at Hamming distance 1..d-1; its constant-weight variant joins
weight-w words at Johnson distance 1..d-1 (Hamming distance 2..2(d-1)).
"""

import logging
from dataclasses import dataclass, field
from typing import TextIO

import networkx as nx
import numpy as np
from scipy import sparse

from gv_bounds.codebook import Codebook, make_codebook
from gv_bounds.combinatorics import Count
from gv_bounds.constants import (
    BLOCK_ELEMENTS,
    DEFAULT_VERTEX_BUDGET,
    EXACT_SEARCH_VERTEX_LIMIT,
    MATERIALIZE_LIMIT,
)
from gv_bounds.errors import BudgetExceededError, InvalidParametersError
from gv_bounds.params import CodeParams
from gv_bounds.words import IntArray, WordSpace, member_indices

LOGGER = logging.getLogger(__name__)


def _check_budget(count: int, budget: int, what: str) -> None:
    if count > budget:
        raise BudgetExceededError(f"{what} has {count} vertices, budget is {budget}")


@dataclass(eq=False)
class ExplicitGraph:
    """A Gilbert or sphere graph on explicit words.

    `labels` is sorted, so vertex indices follow lexicographic word order.
    `adjacency` is None when the graph is too large to materialise; neighbours
    are then generated on demand.
    """

    params: CodeParams
    labels: IntArray
    adjacency: sparse.csr_matrix | None
    offsets: IntArray = field(repr=False)

    @property
    def space(self) -> WordSpace:
        """Get the word space of the vertices."""
        return WordSpace.of(self.params)

    @property
    def n_vertices(self) -> int:
        """Get the number of vertices."""
        return len(self.labels)

    @property
    def n_edges(self) -> int:
        """Get the number of edges."""
        return int(self.require_adjacency().nnz // 2)

    def require_adjacency(self) -> sparse.csr_matrix:
        """Get the adjacency matrix, refusing graphs that were not materialised."""
        if self.adjacency is None:
            raise BudgetExceededError(
                f"Graph with {self.n_vertices} vertices exceeds the materialisation limit {MATERIALIZE_LIMIT}"
            )
        return self.adjacency

    def neighbours(self, index: int) -> IntArray:
        """Get the sorted vertex indices adjacent to a vertex."""
        if self.adjacency is not None:
            return self.adjacency.indices[self.adjacency.indptr[index] : self.adjacency.indptr[index + 1]]
        reached = self.space.neighbour_labels(self.labels[index : index + 1], self.offsets)[0]
        return np.sort(member_indices(self.labels, reached))

    def word(self, index: int) -> str:
        """Get the word of a vertex."""
        return self.space.word(int(self.labels[index]))

    def to_networkx(self) -> nx.Graph:
        """Convert to a networkx graph whose nodes carry their words."""
        graph = nx.from_scipy_sparse_array(self.require_adjacency())
        nx.set_node_attributes(graph, {i: self.word(i) for i in range(self.n_vertices)}, "word")
        return graph


def _build_graph(params: CodeParams, labels: IntArray, radius: int) -> ExplicitGraph:
    """Join vertices within radius, materialising the adjacency when small enough."""
    space = WordSpace.of(params)
    offsets = space.offsets(radius)
    n_vertices = len(labels)
    if n_vertices > MATERIALIZE_LIMIT:
        LOGGER.warning(f"{n_vertices} vertices for {params}, adjacency computed on demand")
        return ExplicitGraph(params, labels, None, offsets)

    block = max(1, BLOCK_ELEMENTS // max(1, len(offsets) * params.n))
    rows, cols = [], []
    for start in range(0, n_vertices, block):
        reached = space.neighbour_labels(labels[start : start + block], offsets)
        index = np.minimum(np.searchsorted(labels, reached), max(n_vertices - 1, 0))
        member = (reached >= 0) & (labels[index] == reached)
        rows.append(np.nonzero(member)[0] + start)
        cols.append(index[member])
    row = np.concatenate(rows) if rows else np.zeros(0, dtype=np.int64)
    col = np.concatenate(cols) if cols else np.zeros(0, dtype=np.int64)
    adjacency = sparse.csr_matrix(
        (np.ones(len(row), dtype=np.int8), (row, col)), shape=(n_vertices, n_vertices)
    )
    adjacency.sort_indices()
    LOGGER.debug(f"Built graph for {params}: {n_vertices} vertices, {adjacency.nnz // 2} edges")
    return ExplicitGraph(params, labels, adjacency, offsets)


def build_gilbert_graph(params: CodeParams, budget: int = DEFAULT_VERTEX_BUDGET) -> ExplicitGraph:
    """Build the Gilbert graph of an instance, constant-weight when params.w is set."""
    space = WordSpace.of(params)
    _check_budget(space.size, budget, f"Gilbert graph of {params}")
    return _build_graph(params, space.labels(), params.d_prime)


def build_sphere_graph(params: CodeParams, budget: int = DEFAULT_VERTEX_BUDGET) -> ExplicitGraph:
    """Build the sphere graph: the punctured radius-d' ball around a fixed word.

    The centre is the zero word, or the first weight-w word for constant-weight
    instances.
    """
    space = WordSpace.of(params)
    offsets = space.offsets(params.d_prime)
    if params.w is None:
        labels = np.sort(offsets @ space.powers)
    else:
        centre = np.array([(1 << params.w) - 1], dtype=np.int64)
        reached = space.neighbour_labels(centre, offsets)[0]
        labels = np.sort(reached[reached >= 0])
    _check_budget(len(labels), budget, f"Sphere graph of {params}")
    return _build_graph(params, labels, params.d_prime)


@dataclass(frozen=True)
class SphereGraphStats:
    """Degree and triangle statistics of an explicit graph."""

    n_vertices: Count
    max_degree: Count
    neighborhood_edges_max: Count
    triangle_count: Count


def vertex_triangle_counts(adjacency: sparse.csr_matrix) -> IntArray:
    """Get, per vertex, the number of edges among its neighbours."""
    a = adjacency.astype(np.int64)
    paths = (a @ a).multiply(a)
    return np.asarray(paths.sum(axis=1), dtype=np.int64).ravel() // 2


def graph_stats(g: ExplicitGraph) -> SphereGraphStats:
    """Get the exact max degree, max neighbourhood edge count and triangle count."""
    adjacency = g.require_adjacency()
    if g.n_vertices == 0:
        return SphereGraphStats(0, 0, 0, 0)
    degrees = np.diff(adjacency.indptr)
    per_vertex = vertex_triangle_counts(adjacency)
    total = int(per_vertex.sum())
    if total % 3:
        raise ArithmeticError(f"Per-vertex triangle sum {total} is not divisible by 3")
    return SphereGraphStats(g.n_vertices, int(degrees.max()), int(per_vertex.max()), total // 3)


def _lowest_bit(bits: int) -> int:
    return (bits & -bits).bit_length() - 1


def _greedy_independent(neighbours: list[int], order: list[int]) -> list[int]:
    chosen, blocked = [], 0
    for v in order:
        if not blocked >> v & 1:
            chosen.append(v)
            blocked |= neighbours[v] | 1 << v
    return chosen


def _clique_cover_order(candidates: int, neighbours: list[int]) -> list[tuple[int, int]]:
    """Partition candidates greedily into cliques of the graph.

    Returns (vertex, number of cliques so far) pairs; an independent set among
    the vertices up to a pair uses at most that many of them.
    """
    order = []
    n_cliques = 0
    remaining = candidates
    while remaining:
        n_cliques += 1
        pool = remaining
        while pool:
            v = _lowest_bit(pool)
            # the clique grows only through common neighbours
            pool &= neighbours[v]
            remaining &= ~(1 << v)
            order.append((v, n_cliques))
    return order


def maximum_independent_set(adjacency: sparse.csr_matrix) -> list[int]:
    """Find a maximum independent set by branch and bound with clique-cover bounds."""
    n_vertices = adjacency.shape[0]
    neighbours = [
        sum(1 << int(u) for u in adjacency.indices[adjacency.indptr[v] : adjacency.indptr[v + 1]])
        for v in range(n_vertices)
    ]
    degrees = np.diff(adjacency.indptr)
    best = _greedy_independent(neighbours, [int(v) for v in np.argsort(degrees, kind="stable")])
    current: list[int] = []

    def expand(candidates: int) -> None:
        nonlocal best
        for v, bound in reversed(_clique_cover_order(candidates, neighbours)):
            if len(current) + bound <= len(best):
                return
            current.append(v)
            rest = candidates & ~neighbours[v] & ~(1 << v)
            if rest:
                expand(rest)
            elif len(current) > len(best):
                best = current.copy()
            current.pop()
            candidates &= ~(1 << v)

    expand((1 << n_vertices) - 1)
    return sorted(best)


def exact_max_independent_set(
    g: ExplicitGraph, vertex_limit: int = EXACT_SEARCH_VERTEX_LIMIT
) -> Codebook:
    """Get a maximum independent set of a small graph as a codebook."""
    _check_budget(g.n_vertices, vertex_limit, f"Exact search on {g.params}")
    if g.n_vertices == 0:
        raise InvalidParametersError(f"Graph of {g.params} has no vertices")
    chosen = maximum_independent_set(g.require_adjacency())
    LOGGER.info(f"Maximum independent set of size {len(chosen)} for {g.params}")
    return make_codebook(g.params, (g.word(v) for v in chosen), method="exact")


def brute_intersection_counts(
    n: int, q: int, w: int, i: int, j: int, budget: int = DEFAULT_VERTEX_BUDGET
) -> Count:
    """Count words at distance i from the zero word and j from 1^w 0^(n-w) by enumeration."""
    if not 0 <= w <= n:
        raise InvalidParametersError(f"Centre distance must satisfy 0 <= w <= n, got n={n} w={w}")
    space = WordSpace(n, q)
    _check_budget(space.size, budget, f"Word space n={n} q={q}")
    digits = space.digits(space.labels())
    other = np.zeros(n, dtype=np.int64)
    other[:w] = 1
    to_zero = np.count_nonzero(digits, axis=1)
    to_other = np.count_nonzero(digits != other, axis=1)
    return int(np.count_nonzero((to_zero == i) & (to_other == j)))


def brute_johnson_intersection_counts(n: int, w: int, i: int, j: int, k: int) -> Count:
    """Count weight-w words at Johnson distances i and j from two words k apart by enumeration."""
    if not 0 <= w <= n:
        raise InvalidParametersError(f"Weight must satisfy 0 <= w <= n, got n={n} w={w}")
    if k > min(w, n - w):
        return 0
    space = WordSpace(n, 2, w)
    digits = space.digits(space.labels())
    first = np.zeros(n, dtype=np.int64)
    first[:w] = 1
    second = np.zeros(n, dtype=np.int64)
    second[k : w + k] = 1
    to_first = w - digits @ first
    to_second = w - digits @ second
    return int(np.count_nonzero((to_first == i) & (to_second == j)))


def dump_edge_list(g: ExplicitGraph, sink: TextIO) -> None:
    """Write "n_vertices n_edges" followed by one "u v" line per edge with u < v."""
    upper = sparse.triu(g.require_adjacency(), k=1, format="csr")
    upper.sort_indices()
    sink.write(f"{g.n_vertices} {upper.nnz}\n")
    for u in range(g.n_vertices):
        for v in upper.indices[upper.indptr[u] : upper.indptr[u + 1]]:
            sink.write(f"{u} {v}\n")
