"""Simple undirected graphs: triangle-free generators and exact solvers.

Provides the embedded-graph side of the pipeline: Mycielski towers with
certified chromatic number, the seeded triangle-free process for larger
inputs, and exact chromatic / independence solvers (DSATUR branch and
bound, bitset branch and bound) with explored-node budgets so runs are
reproducible.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .errors import SolverTimeout


class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "_edges", "_adj")

    def __init__(self, vertex_count: int, edges):
        if vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        self.n = vertex_count
        canon = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range for n={vertex_count}")
            canon.add((u, v) if u < v else (v, u))
        self._edges = frozenset(canon)
        adj: list[set[int]] = [set() for _ in range(vertex_count)]
        for u, v in canon:
            adj[u].add(v)
            adj[v].add(u)
        self._adj = adj

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        return self._edges

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def neighbors(self, v: int) -> set[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __hash__(self):
        return hash((self.n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"

    # -- small constructors used across the test corpus ------------------------

    @classmethod
    def edgeless(cls, n: int) -> "Graph":
        return cls(n, [])

    @classmethod
    def single_edge(cls) -> "Graph":
        return cls(2, [(0, 1)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, list(itertools.combinations(range(n), 2)))


@dataclass(frozen=True)
class Coloring:
    """Total vertex -> color mapping; color_count is the distinct-color count."""

    assignment: dict[int, int]
    color_count: int

    @classmethod
    def from_assignment(cls, assignment: dict[int, int]) -> "Coloring":
        return cls(assignment=dict(assignment), color_count=len(set(assignment.values())))


def is_proper_coloring(g: Graph, coloring: Coloring) -> bool:
    a = coloring.assignment
    return all(a[u] != a[v] for u, v in g.edges)


def is_triangle_free(g: Graph) -> bool:
    return all(not (g.neighbors(u) & g.neighbors(v)) for u, v in g.edges)


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    """All 3-cliques, each listed once in sorted order."""
    out = []
    for u, v in sorted(g.edges):
        for w in sorted(g.neighbors(u) & g.neighbors(v)):
            if w > v:
                out.append((u, v, w))
    return out


def mycielskian(g: Graph) -> Graph:
    """Mycielski construction: triangle-free preserving, chromatic number +1.

    Vertices 0..n-1 keep their edges, vertex n+i is the shadow of i (joined
    to i's neighbors), vertex 2n is the apex joined to all shadows.
    """
    n = g.n
    edges = list(g.edges)
    for i in range(n):
        for j in g.neighbors(i):
            edges.append((n + i, j))
    apex = 2 * n
    edges.extend((n + i, apex) for i in range(n))
    return Graph(2 * n + 1, edges)


def grotzsch_graph() -> Graph:
    """Second Mycielski iterate of a single edge: 11 vertices, chromatic 4."""
    return mycielskian(mycielskian(Graph.single_edge()))


def triangle_free_process(n: int, seed: int) -> Graph:
    """Maximal triangle-free graph grown edge by edge in seeded random order.

    Each candidate edge is added unless it closes a triangle; one pass over
    a uniformly shuffled pair list is equivalent to drawing addable edges
    uniformly until none remain, because a rejected pair stays rejected.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = random.Random(seed)
    pairs = list(itertools.combinations(range(n), 2))
    rng.shuffle(pairs)
    adj: list[set[int]] = [set() for _ in range(n)]
    edges = []
    for u, v in pairs:
        if adj[u] & adj[v]:
            continue
        adj[u].add(v)
        adj[v].add(u)
        edges.append((u, v))
    return Graph(n, edges)


# -- exact chromatic number ----------------------------------------------------


@dataclass(frozen=True)
class ChromaticResult:
    """Outcome of the exact solver.

    Either chi and a witness coloring are set, or exceeded_limit is True and
    the search proved no coloring with `limit` colors exists.
    """

    chi: int | None
    coloring: Coloring | None
    nodes: int
    limit: int | None = None
    exceeded_limit: bool = False


class _Budget:
    __slots__ = ("used", "cap")

    def __init__(self, cap: int):
        self.used = 0
        self.cap = cap

    def spend(self):
        self.used += 1
        if self.used > self.cap:
            raise SolverTimeout(f"node budget {self.cap} exceeded")


def _greedy_clique(g: Graph) -> list[int]:
    """Greedy clique from the highest-degree vertex; a chromatic lower bound."""
    if g.n == 0:
        return []
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    clique = [order[0]]
    common = set(g.neighbors(order[0]))
    for v in order[1:]:
        if v in common:
            clique.append(v)
            common &= g.neighbors(v)
    return clique


def _k_colorable(g: Graph, k: int, budget: _Budget) -> list[int] | None:
    """Complete DSATUR backtracking search for a proper k-coloring.

    Returns an assignment list or None after exhausting the (symmetry
    reduced) search space. New color indices are introduced in order, so
    permutations of the palette are explored once.
    """
    n = g.n
    if n == 0:
        return []
    if k <= 0:
        return None if g.n else []
    colors = [-1] * n
    sat: list[set[int]] = [set() for _ in range(n)]
    uncolored = set(range(n))

    def pick() -> int:
        return max(uncolored, key=lambda v: (len(sat[v]), g.degree(v), -v))

    def backtrack(num_used: int) -> bool:
        budget.spend()
        if not uncolored:
            return True
        v = pick()
        uncolored.discard(v)
        limit_c = min(k, num_used + 1)
        for c in range(limit_c):
            if c in sat[v]:
                continue
            colors[v] = c
            touched = []
            for u in g.neighbors(v):
                if colors[u] == -1 and c not in sat[u]:
                    sat[u].add(c)
                    touched.append(u)
            if backtrack(max(num_used, c + 1)):
                return True
            for u in touched:
                sat[u].discard(c)
            colors[v] = -1
        uncolored.add(v)
        return False

    if backtrack(0):
        return colors[:]
    return None


def chromatic_number_exact(
    g: Graph, limit: int | None = None, node_budget: int = 20_000_000
) -> ChromaticResult:
    """Exact chromatic number with witness, or proof that chi > limit.

    Tries k-colorability for k from a greedy-clique lower bound upward; each
    failed level is an exhausted search. With `limit` set, the search stops
    there and reports exceedance instead of chi. Raises SolverTimeout when
    the explored-node budget runs out.
    """
    budget = _Budget(node_budget)
    if g.n == 0:
        return ChromaticResult(chi=0, coloring=Coloring({}, 0), nodes=0, limit=limit)
    lb = max(1, len(_greedy_clique(g)))
    hi = limit if limit is not None else g.n
    for k in range(lb, hi + 1):
        found = _k_colorable(g, k, budget)
        if found is not None:
            assignment = {v: found[v] for v in range(g.n)}
            return ChromaticResult(
                chi=k,
                coloring=Coloring.from_assignment(assignment),
                nodes=budget.used,
                limit=limit,
            )
    if limit is None:
        raise AssertionError("n colors always suffice")  # pragma: no cover
    return ChromaticResult(
        chi=None, coloring=None, nodes=budget.used, limit=limit, exceeded_limit=True
    )


# -- independent sets ----------------------------------------------------------


def _popcount(x: int) -> int:
    return x.bit_count()


def max_independent_set_exact(g: Graph, node_budget: int = 50_000_000) -> set[int]:
    """A maximum independent set via bitset branch and bound.

    Degree-0/1 vertices inside the candidate set are taken greedily (always
    safe), then branching removes a maximum-degree vertex or its closed
    neighborhood. Intended for graphs up to roughly 60 vertices.
    """
    n = g.n
    if n == 0:
        return set()
    nbr = [0] * n
    for u, v in g.edges:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    budget = _Budget(node_budget)

    # deterministic greedy start for the bound
    best_mask = 0
    taken = 0
    blocked = 0
    for v in sorted(range(n), key=lambda v: (g.degree(v), v)):
        if not (blocked >> v) & 1:
            taken |= 1 << v
            blocked |= (1 << v) | nbr[v]
    best_mask = taken
    best_size = _popcount(taken)

    def bb(cand: int, cur_mask: int, cur_size: int):
        nonlocal best_mask, best_size
        budget.spend()
        while cand:
            # pull out candidate degrees; apply safe low-degree reductions
            reduced = False
            c = cand
            max_v = -1
            max_d = -1
            while c:
                v = (c & -c).bit_length() - 1
                c &= c - 1
                d = _popcount(nbr[v] & cand)
                if d <= 1:
                    cand &= ~((1 << v) | nbr[v])
                    cur_mask |= 1 << v
                    cur_size += 1
                    reduced = True
                    break
                if d > max_d:
                    max_d = d
                    max_v = v
            if reduced:
                continue
            if cur_size + _popcount(cand) <= best_size:
                return
            v = max_v
            bb(cand & ~((1 << v) | nbr[v]), cur_mask | (1 << v), cur_size + 1)
            bb(cand & ~(1 << v), cur_mask, cur_size)
            return
        if cur_size > best_size:
            best_size = cur_size
            best_mask = cur_mask

    bb((1 << n) - 1, 0, 0)
    return {v for v in range(n) if (best_mask >> v) & 1}


def greedy_independent_set(g: Graph, seed: int) -> set[int]:
    """Maximal independent set from a seeded random vertex order."""
    rng = random.Random(seed)
    order = list(range(g.n))
    rng.shuffle(order)
    chosen: set[int] = set()
    blocked: set[int] = set()
    for v in order:
        if v not in blocked:
            chosen.add(v)
            blocked.add(v)
            blocked |= g.neighbors(v)
    return chosen


def is_independent_set(g: Graph, s: set[int]) -> bool:
    return all(not (g.neighbors(v) & s) for v in s)


def is_maximal_independent_set(g: Graph, s: set[int]) -> bool:
    if not is_independent_set(g, s):
        return False
    return all(v in s or (g.neighbors(v) & s) for v in range(g.n))
