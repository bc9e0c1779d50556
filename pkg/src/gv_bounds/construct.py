"""Code constructions reaching the Gilbert-Varshamov bound and beyond.

`greedy_lexicode` admits words in lexicographic order, giving a maximal
independent set of the Gilbert graph. `hl_independent_set` first deletes
vertices until the graph is triangle-free and then runs seeded randomized
greedy trials on what is left, keeping the best result.
"""

import logging
import threading
import weakref
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt
from scipy import sparse

from gv_bounds.codebook import Codebook, make_codebook, verify_code
from gv_bounds.combinatorics import hamming_volume
from gv_bounds.constants import DEFAULT_TRIALS, DEFAULT_VERTEX_BUDGET
from gv_bounds.errors import BudgetExceededError, InvalidParametersError
from gv_bounds.oracle import ExplicitGraph, vertex_triangle_counts
from gv_bounds.params import CodeParams
from gv_bounds.words import IntArray, WordSpace, member_indices

__all__ = [
    "Coloring",
    "greedy_distance_coloring",
    "greedy_lexicode",
    "hl_independent_set",
    "triangle_free_core",
    "verify_code",
]

LOGGER = logging.getLogger(__name__)

BoolArray = npt.NDArray[np.bool_]

_CORE_LOCK = threading.Lock()
_CORE_CACHE: "weakref.WeakKeyDictionary[ExplicitGraph, BoolArray]" = weakref.WeakKeyDictionary()


def greedy_lexicode(params: CodeParams, budget: int = DEFAULT_VERTEX_BUDGET) -> Codebook:
    """Admit every word whose distance to all admitted words is at least d."""
    space = WordSpace.of(params)
    if space.size > budget:
        raise BudgetExceededError(f"Lexicode of {params} scans {space.size} words, budget is {budget}")
    labels = space.labels()
    offsets = space.offsets(params.d_prime)

    blocked = bytearray(len(labels))
    blocked_view = np.frombuffer(blocked, dtype=np.uint8)
    chosen = []
    for index in range(len(labels)):
        if blocked[index]:
            continue
        chosen.append(index)
        reached = space.neighbour_labels(labels[index : index + 1], offsets)[0]
        blocked_view[member_indices(labels, reached)] = 1

    LOGGER.info(f"Lexicode of {params} has {len(chosen)} words")
    return make_codebook(params, (space.word(int(labels[i])) for i in chosen), method="greedy")


def _alive_neighbours(adjacency: sparse.csr_matrix, alive: BoolArray, v: int) -> IntArray:
    row = adjacency.indices[adjacency.indptr[v] : adjacency.indptr[v + 1]]
    return row[alive[row]]


def _remove_triangles(adjacency: sparse.csr_matrix) -> BoolArray:
    """Delete the vertex in most triangles, lowest index first, until none is left."""
    alive = np.ones(adjacency.shape[0], dtype=np.bool_)
    triangles = vertex_triangle_counts(adjacency)
    deleted = 0
    while len(triangles) and triangles.max() > 0:
        v = int(np.argmax(triangles))
        neighbours = _alive_neighbours(adjacency, alive, v)
        # each edge among the neighbours loses its triangle through v
        inside = adjacency[neighbours][:, neighbours]
        triangles[neighbours] -= np.asarray(inside.sum(axis=1), dtype=np.int64).ravel()
        triangles[v] = 0
        alive[v] = False
        deleted += 1
    LOGGER.debug(f"Deleted {deleted} vertices to reach a triangle-free graph")
    return alive


def triangle_free_core(g: ExplicitGraph) -> BoolArray:
    """Get the mask of vertices surviving triangle removal, cached per graph."""
    with _CORE_LOCK:
        core = _CORE_CACHE.get(g)
        if core is None:
            core = _remove_triangles(g.require_adjacency())
            _CORE_CACHE[g] = core
    return core


def _random_greedy(
    adjacency: sparse.csr_matrix, core: BoolArray, seed: np.random.SeedSequence
) -> tuple[int, ...]:
    """Pick random surviving core vertices, then extend to a maximal independent set."""
    rng = np.random.default_rng(seed)
    free = np.ones(adjacency.shape[0], dtype=np.bool_)
    chosen = []
    for v in rng.permutation(np.flatnonzero(core)):
        if free[v]:
            chosen.append(int(v))
            free[v] = False
            free[adjacency.indices[adjacency.indptr[v] : adjacency.indptr[v + 1]]] = False
    # vertices deleted for triangles may still fit
    for v in range(adjacency.shape[0]):
        if free[v]:
            chosen.append(v)
            free[v] = False
            free[adjacency.indices[adjacency.indptr[v] : adjacency.indptr[v + 1]]] = False
    return tuple(sorted(chosen))


def hl_independent_set(
    g: ExplicitGraph,
    seed: int,
    trials: int = DEFAULT_TRIALS,
    threads: int | None = None,
) -> Codebook:
    """Find a large independent set by triangle removal and seeded randomized greedy trials.

    The best trial wins, ties going to the lexicographically smallest word list.
    """
    if trials < 1:
        raise InvalidParametersError(f"Number of trials must be positive, got {trials}")
    adjacency = g.require_adjacency()
    if g.n_vertices == 0:
        raise InvalidParametersError(f"Graph of {g.params} has no vertices")
    core = triangle_free_core(g)

    children = np.random.SeedSequence(seed).spawn(trials)
    with ThreadPoolExecutor(max_workers=threads) as executor:
        results = list(executor.map(lambda child: _random_greedy(adjacency, core, child), children))
    best = min(results, key=lambda chosen: (-len(chosen), chosen))
    LOGGER.info(
        f"Best of {trials} trials for {g.params}: {len(best)} words, "
        f"{int(np.count_nonzero(~core))} vertices deleted for triangles"
    )
    return make_codebook(
        g.params,
        (g.word(v) for v in best),
        method="hl",
        seed=seed,
        trials=trials,
        deleted=int(np.count_nonzero(~core)),
    )


@dataclass(frozen=True, eq=False)
class Coloring:
    """Colors of all binary words of length n, indexed by word label."""

    n: int
    d: int
    colors: IntArray

    @property
    def n_colors(self) -> int:
        """Get the number of colors used."""
        return int(self.colors.max()) + 1

    def color_of(self, word: str) -> int:
        """Get the color of a word."""
        return int(self.colors[int(word, 2)])

    def is_proper(self) -> bool:
        """Check that words within distance d have different colors."""
        space = WordSpace(self.n)
        labels = space.labels()
        for offset in space.offsets(self.d) @ space.powers:
            if np.any(self.colors[labels] == self.colors[labels ^ offset]):
                return False
        return True

    def rows(self) -> Sequence[tuple[str, int]]:
        """Get (word, color) pairs in lexicographic order."""
        space = WordSpace(self.n)
        return [(space.word(label), int(color)) for label, color in enumerate(self.colors)]


def greedy_distance_coloring(n: int, d: int, budget: int = DEFAULT_VERTEX_BUDGET) -> Coloring:
    """Color words first-fit in lexicographic order so words within distance d differ."""
    if not 1 <= d <= n:
        raise InvalidParametersError(f"Coloring needs 1 <= d <= n, got n={n} d={d}")
    space = WordSpace(n)
    if space.size > budget:
        raise BudgetExceededError(f"Coloring of n={n} has {space.size} words, budget is {budget}")
    moves = space.offsets(d) @ space.powers
    colors = np.full(space.size, -1, dtype=np.int64)
    for label in range(space.size):
        used = set(colors[label ^ moves].tolist())
        color = 0
        while color in used:
            color += 1
        colors[label] = color
    coloring = Coloring(n, d, colors)
    # first-fit sees at most V(n, d) - 1 colored neighbours
    if coloring.n_colors > hamming_volume(n, d):
        raise ArithmeticError(f"First-fit used {coloring.n_colors} colors, above V({n}, {d})")
    LOGGER.info(f"First-fit distance-{d} coloring of n={n} uses {coloring.n_colors} colors")
    return coloring
