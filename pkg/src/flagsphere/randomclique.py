"""Random clique complexes: sampling, forest-link measurement, pruning.

Samples the clique complex of G(n, p) with p = n^-alpha truncated at a
target dimension d, measures how many links of (d-3)-dimensional faces are
forests, prunes vertices with cyclic links to a fixpoint, and reports
independence numbers against the n^alpha * log n reference curve.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass

from .errors import InvalidAlpha, SolverTimeout
from .graphs import Graph, greedy_independent_set, max_independent_set_exact


@dataclass(frozen=True)
class RandomCliqueParams:
    n: int
    alpha: float
    d: int = 3
    seed: int = 0

    def validate(self) -> None:
        if self.d < 3:
            raise InvalidAlpha(f"dimension must be >= 3, got {self.d}")
        lo = 1.0 / (self.d - 1)
        hi = 1.0 / (self.d - 2)
        if not (lo < self.alpha < hi):
            raise InvalidAlpha(
                f"alpha must lie strictly in ({lo}, {hi}) for d={self.d}, got {self.alpha}"
            )

    @property
    def p(self) -> float:
        return self.n ** (-self.alpha)


class TruncatedCliqueComplex:
    """Clique complex of a graph with faces enumerated up to dimension d."""

    def __init__(self, graph: Graph, d: int):
        self.graph = graph
        self.d = d
        self.faces_by_size: dict[int, set[frozenset[int]]] = _enumerate_cliques(
            graph, d + 1
        )

    def faces(self, size: int) -> set[frozenset[int]]:
        return self.faces_by_size.get(size, set())

    def face_counts(self) -> dict[int, int]:
        return {k: len(v) for k, v in sorted(self.faces_by_size.items())}


def _enumerate_cliques(g: Graph, max_size: int) -> dict[int, set[frozenset[int]]]:
    """All cliques with up to max_size vertices, grown by largest-id extension."""
    out: dict[int, set[frozenset[int]]] = {}
    out[1] = {frozenset((v,)) for v in range(g.n)}
    if max_size < 2:
        return out
    current: list[tuple[int, ...]] = [tuple(sorted(e)) for e in g.edges]
    out[2] = {frozenset(c) for c in current}
    size = 2
    while size < max_size and current:
        nxt: list[tuple[int, ...]] = []
        for clique in current:
            common: set[int] | None = None
            for v in clique:
                nb = g.neighbors(v)
                common = set(nb) if common is None else common & nb
            top = clique[-1]
            for w in sorted(common or ()):
                if w > top:
                    nxt.append(clique + (w,))
        size += 1
        current = nxt
        if current:
            out[size] = {frozenset(c) for c in current}
    return out


def sample_gnp_edges(n: int, p: float, rng: random.Random) -> list[tuple[int, int]]:
    """Seeded G(n,p) edge sample via geometric jumps over the pair index."""
    if n < 2 or p <= 0.0:
        return []
    if p >= 1.0:
        return list(itertools.combinations(range(n), 2))
    edges = []
    total = n * (n - 1) // 2
    logq = math.log1p(-p)
    k = -1
    while True:
        r = rng.random()
        gap = int(math.log(1.0 - r) / logq) + 1 if r > 0.0 else 1
        k += gap
        if k >= total:
            break
        lo, hi = 0, n - 1
        while lo < hi:
            mid = (lo + hi) // 2
            if (mid + 1) * n - (mid + 1) * (mid + 2) // 2 <= k:
                lo = mid + 1
            else:
                hi = mid
        i = lo
        j = k - (i * n - i * (i + 1) // 2) + i + 1
        edges.append((i, j))
    return edges


def sample_clique_complex(
    params: RandomCliqueParams, check: bool = True
) -> tuple[Graph, TruncatedCliqueComplex]:
    """Sample G(n, n^-alpha) and its clique complex truncated at dimension d."""
    if check:
        params.validate()
    rng = random.Random(params.seed)
    g = Graph(params.n, sample_gnp_edges(params.n, params.p, rng))
    return g, TruncatedCliqueComplex(g, params.d)


def _link_graph_acyclic(g: Graph, face_vertices) -> bool:
    """Is the graph induced on the common neighborhood of `face_vertices` a forest?"""
    common: set[int] | None = None
    for v in face_vertices:
        nb = g.neighbors(v)
        common = set(nb) if common is None else common & nb
    if not common:
        return True
    idx = {u: i for i, u in enumerate(sorted(common))}
    parent = list(range(len(idx)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u in idx:
        for w in g.neighbors(u):
            if w > u and w in idx:
                ru, rw = find(idx[u]), find(idx[w])
                if ru == rw:
                    return False
                parent[ru] = rw
    return True


def forest_link_fraction(cc: TruncatedCliqueComplex, d: int | None = None) -> float:
    """Fraction of (d-3)-dimensional faces whose link 1-skeleton is acyclic.

    For d=3 those faces are the vertices; for larger d they are the
    (d-2)-vertex cliques.
    """
    if d is None:
        d = cc.d
    face_size = d - 2
    faces = cc.faces(face_size)
    if not faces:
        return 1.0
    good = sum(1 for f in faces if _link_graph_acyclic(cc.graph, f))
    return good / len(faces)


def prune_bad_links(
    cc: TruncatedCliqueComplex, d: int | None = None
) -> tuple[TruncatedCliqueComplex, int]:
    """Remove vertices lying in a (d-3)-face with a cyclic link, to a fixpoint.

    A single pass can expose new cyclic links, so passes repeat until every
    surviving face has an acyclic link. Returns the pruned complex and the
    number of removed vertices.
    """
    if d is None:
        d = cc.d
    face_size = d - 2
    removed_total = 0
    current = cc
    while True:
        bad_vertices: set[int] = set()
        for f in current.faces(face_size):
            if not _link_graph_acyclic(current.graph, f):
                bad_vertices |= f
        if not bad_vertices:
            return current, removed_total
        removed_total += len(bad_vertices)
        keep = [v for v in range(current.graph.n) if v not in bad_vertices]
        index = {v: i for i, v in enumerate(keep)}
        edges = [
            (index[u], index[v])
            for u, v in current.graph.edges
            if u in index and v in index
        ]
        current = TruncatedCliqueComplex(Graph(len(keep), edges), d)


def independence_bound_report(
    g: Graph, params: RandomCliqueParams, exact_limit: int = 60
) -> dict:
    """Greedy (and small-case exact) independence numbers with the
    first-moment reference curve n^alpha * ln n and the measured ratio."""
    greedy = greedy_independent_set(g, params.seed)
    exact: int | None = None
    if g.n <= exact_limit:
        try:
            exact = len(max_independent_set_exact(g))
        except SolverTimeout:
            exact = None
    reference = params.n**params.alpha * math.log(params.n) if params.n > 1 else 0.0
    size = exact if exact is not None else len(greedy)
    degenerate = g.edge_count == 0
    return {
        "greedy_alpha": len(greedy),
        "exact_alpha": exact,
        "reference_curve": reference,
        "ratio": (size / reference) if reference > 0 else None,
        "degenerate": degenerate,
    }


def run_experiment(params: RandomCliqueParams) -> dict:
    """Full experiment for one (n, alpha, d, seed): sample, measure, prune."""
    g, cc = sample_clique_complex(params)
    fraction = forest_link_fraction(cc)
    pruned, removed = prune_bad_links(cc)
    bounds = independence_bound_report(g, params)
    return {
        "n": params.n,
        "alpha": params.alpha,
        "d": params.d,
        "seed": params.seed,
        "edge_count": g.edge_count,
        "face_counts": cc.face_counts(),
        "forest_fraction": fraction,
        "removed": removed,
        "surviving_vertices": pruned.graph.n,
        "greedy_alpha": bounds["greedy_alpha"],
        "exact_alpha": bounds["exact_alpha"],
        "reference_curve": bounds["reference_curve"],
        "ratio": bounds["ratio"],
        "degenerate": bounds["degenerate"],
    }
