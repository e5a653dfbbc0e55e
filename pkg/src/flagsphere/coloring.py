"""Coloring machinery for flag 3-spheres and their skeletons.

The peel algorithm repeatedly colors and deletes the neighborhood of a
highest-degree vertex with a small planar palette while any degree exceeds
x*sqrt(n), then finishes the low-degree residual greedily in degeneracy
order. Planar neighborhoods are colored either by exhaustive 4-coloring
(small ones) or by the classical Kempe-chain 5-coloring.

Also provides the dimension-constant recursion for the general upper bound
and exact-solver-backed chromatic lower-bound certificates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .complexes import SimplicialComplex, f_vector, is_flag, verify_closed_3_manifold
from .errors import (
    BadDimension,
    CertificationFailed,
    NotFlag,
    NotManifold,
    NotPlanar,
    PlanarStrategyFailure,
    SolverTimeout,
    SubgraphMissing,
)
from .graphs import (
    ChromaticResult,
    Coloring,
    Graph,
    _Budget,
    _k_colorable,
    chromatic_number_exact,
    greedy_independent_set,
    max_independent_set_exact,
)

DEFAULT_X = math.sqrt(5.0)


def cd_constant(d: int) -> float:
    """Dimension constant for the peel bound: 4 at d=3, then the recursion
    C_d = (C_{d-1}/(d-2))^{(d-2)/(d-1)} + C_{d-1} * ((d-2)/C_{d-1})^{1/(d-1)}."""
    if d < 3:
        raise BadDimension(f"defined for d >= 3, got {d}")
    c = 4.0
    for k in range(4, d + 1):
        c = (c / (k - 2)) ** ((k - 2) / (k - 1)) + c * ((k - 2) / c) ** (1.0 / (k - 1))
    return c


def cd_table(max_d: int) -> dict[int, float]:
    return {d: cd_constant(d) for d in range(3, max_d + 1)}


def palette_term(p: float, x: float) -> float:
    """Leading coefficient p/x + x of the color bound; minimized at x=sqrt(p)."""
    return p / x + x


def peel_color_bound(p: int, x: float, n: int) -> int:
    """Color budget ceil((p/x + x) * sqrt(n)) + 1 for palette size p."""
    return math.ceil(palette_term(p, x) * math.sqrt(n)) + 1


@dataclass(frozen=True)
class PeelParams:
    x: float = DEFAULT_X
    planar_strategy: str = "exact4"  # exact4 | five | greedy
    exact4_cap: int = 64
    allow_fallback: bool = True
    debug: bool = False
    exact4_node_budget: int = 500_000

    def __post_init__(self):
        if self.x <= 0:
            raise ValueError("x must be positive")
        if self.planar_strategy not in ("exact4", "five", "greedy"):
            raise ValueError(f"unknown planar strategy {self.planar_strategy!r}")


def greedy_degeneracy_color(g: Graph) -> Coloring:
    """Greedy coloring in degeneracy order; uses at most max-degree+1 colors."""
    remaining = {v: set(g.neighbors(v)) for v in range(g.n)}
    order: list[int] = []
    while remaining:
        v = min(remaining, key=lambda u: (len(remaining[u]), u))
        order.append(v)
        for u in remaining[v]:
            remaining[u].discard(v)
        del remaining[v]
    assignment: dict[int, int] = {}
    for v in reversed(order):
        used = {assignment[u] for u in g.neighbors(v) if u in assignment}
        c = 0
        while c in used:
            c += 1
        assignment[v] = c
    return Coloring.from_assignment(assignment) if assignment else Coloring({}, 0)


def _check_planar(g: Graph) -> None:
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    ok, _ = nx.check_planarity(h)
    if not ok:
        raise NotPlanar(f"graph with {g.n} vertices and {g.edge_count} edges")


def five_color_planar(g: Graph, check_planar: bool = False) -> Coloring:
    """Proper coloring of a planar graph with at most 5 colors.

    Vertices are stripped in min-degree order (planarity keeps this <= 5)
    and re-added greedily; a degree-5 vertex whose neighbors exhaust the
    palette is resolved by a Kempe two-color component swap, which must
    succeed for planar inputs.
    """
    if check_planar:
        _check_planar(g)
    if g.n == 0:
        return Coloring({}, 0)
    remaining = {v: set(g.neighbors(v)) for v in range(g.n)}
    stack: list[int] = []
    while remaining:
        v = min(remaining, key=lambda u: (len(remaining[u]), u))
        if len(remaining[v]) > 5:
            raise NotPlanar(f"minimum degree {len(remaining[v])} exceeds 5")
        stack.append(v)
        for u in remaining[v]:
            remaining[u].discard(v)
        del remaining[v]

    assignment: dict[int, int] = {}

    def kempe_free_color(v: int) -> int:
        placed_nbrs = [u for u in sorted(g.neighbors(v)) if u in assignment]
        for i, ni in enumerate(placed_nbrs):
            for nj in placed_nbrs[i + 1 :]:
                ci, cj = assignment[ni], assignment[nj]
                if ci == cj:
                    continue
                component = {ni}
                frontier = [ni]
                reached = False
                while frontier:
                    cur = frontier.pop()
                    for u in g.neighbors(cur):
                        if u in assignment and u not in component and assignment[u] in (ci, cj):
                            component.add(u)
                            frontier.append(u)
                            if u == nj:
                                reached = True
                if reached:
                    continue
                for u in component:
                    assignment[u] = cj if assignment[u] == ci else ci
                return ci
        raise NotPlanar("no Kempe swap available; input cannot be planar")

    for v in reversed(stack):
        used = {assignment[u] for u in g.neighbors(v) if u in assignment}
        free = [c for c in range(5) if c not in used]
        assignment[v] = free[0] if free else kempe_free_color(v)
    return Coloring.from_assignment(assignment)


def _color_planar_patch(g: Graph, params: PeelParams) -> Coloring:
    """Color one peeled neighborhood graph according to the strategy."""
    if params.debug:
        _check_planar(g)
    if params.planar_strategy == "greedy":
        return greedy_degeneracy_color(g)
    if params.planar_strategy == "exact4" and g.n <= params.exact4_cap:
        try:
            found = _k_colorable(g, 4, _Budget(params.exact4_node_budget))
        except SolverTimeout:
            found = None
        if found is not None:
            return Coloring.from_assignment({v: found[v] for v in range(g.n)})
        if not params.allow_fallback:
            raise PlanarStrategyFailure(
                f"exact 4-coloring unavailable for a {g.n}-vertex neighborhood"
            )
    elif params.planar_strategy == "exact4" and not params.allow_fallback:
        raise PlanarStrategyFailure(
            f"neighborhood of {g.n} vertices exceeds exact4 cap {params.exact4_cap}"
        )
    return five_color_planar(g)


def peel_color_3(X: SimplicialComplex, params: PeelParams | None = None) -> Coloring:
    """Proper coloring of the 1-skeleton of a flag 3-sphere.

    While some vertex exceeds degree x*sqrt(n) (n = vertex count, fixed),
    its current neighborhood is colored with a fresh palette block and
    removed. The residual graph is colored greedily in degeneracy order.
    The total color count is at most ceil((p/x + x)*sqrt(n)) + 1 where p is
    the largest palette block a strategy used (4 or 5).
    """
    if params is None:
        params = PeelParams()
    if not is_flag(X):
        raise NotFlag("peel coloring requires a flag complex")
    if not verify_closed_3_manifold(X).passed:
        raise NotManifold("peel coloring requires a closed 3-manifold")
    n = X.vertex_count
    threshold = params.x * math.sqrt(n)
    live: dict[int, set[int]] = {v: set(X.neighbors(v)) for v in X.vertices}
    assignment: dict[int, int] = {}
    next_color = 0

    while True:
        v = max(live, key=lambda u: (len(live[u]), -u))
        if len(live[v]) <= threshold:
            break
        patch = sorted(live[v])
        index = {u: i for i, u in enumerate(patch)}
        patch_edges = [
            (index[a], index[b])
            for i, a in enumerate(patch)
            for b in patch[i + 1 :]
            if b in live[a]
        ]
        patch_coloring = _color_planar_patch(Graph(len(patch), patch_edges), params)
        for u in patch:
            assignment[u] = next_color + patch_coloring.assignment[index[u]]
        next_color += patch_coloring.color_count
        for u in patch:
            for nb in live[u]:
                live[nb].discard(u)
            del live[u]

    # residual: degeneracy-order greedy on what is left
    residual = sorted(live)
    index = {u: i for i, u in enumerate(residual)}
    residual_edges = [
        (index[a], index[b])
        for i, a in enumerate(residual)
        for b in residual[i + 1 :]
        if b in live[a]
    ]
    res_coloring = greedy_degeneracy_color(Graph(len(residual), residual_edges))
    for u in residual:
        assignment[u] = next_color + res_coloring.assignment[index[u]]
    return Coloring.from_assignment(assignment)


def check_proper_on_complex(X: SimplicialComplex, coloring: Coloring) -> bool:
    a = coloring.assignment
    return all(a[u] != a[v] for u, v in X.edges())


# -- chromatic lower-bound certification ----------------------------------------


@dataclass(frozen=True)
class CertificateReport:
    graph_vertices: int
    graph_edges: int
    k: int
    certified: bool
    solver_nodes: int
    witness_type: str

    def as_dict(self) -> dict:
        return {
            "graph": {"n": self.graph_vertices, "m": self.graph_edges},
            "k": self.k,
            "certified": self.certified,
            "solver_nodes": self.solver_nodes,
            "witness_type": self.witness_type,
        }


def certify_lower_bound(
    X: SimplicialComplex, g: Graph, k: int, node_budget: int = 20_000_000
) -> CertificateReport:
    """Certify chi(skeleton of X) >= k via an embedded subgraph.

    Every edge of g must be present in X; the exact solver then proves g has
    no (k-1)-coloring by exhausting the search at k-1 colors, and chromatic
    number is monotone under subgraphs.
    """
    for u, v in g.edges:
        if not X.has_edge(u, v):
            raise SubgraphMissing(f"edge ({u}, {v}) of the graph is not in the complex")
    result: ChromaticResult = chromatic_number_exact(g, limit=k - 1, node_budget=node_budget)
    if not result.exceeded_limit:
        raise CertificationFailed(
            f"graph is {result.chi}-colorable, cannot certify chi >= {k}"
        )
    return CertificateReport(
        graph_vertices=g.n,
        graph_edges=g.edge_count,
        k=k,
        certified=True,
        solver_nodes=result.nodes,
        witness_type="exceedance",
    )


def revalidate_certificate(report: CertificateReport, g: Graph) -> bool:
    """Independent re-check: rerun the (k-1)-colorability search from scratch."""
    res = chromatic_number_exact(g, limit=report.k - 1)
    return res.exceeded_limit


# -- independence measurements ----------------------------------------------------


@dataclass(frozen=True)
class AlphaReport:
    greedy_size: int
    exact_size: int | None
    conjecture_value: int

    def as_dict(self) -> dict:
        return {
            "alpha_greedy": self.greedy_size,
            "alpha_exact": self.exact_size,
            "conjecture_value": self.conjecture_value,
        }


def skeleton_graph(X: SimplicialComplex) -> tuple[Graph, list[int]]:
    """1-skeleton as a Graph on 0..k-1 plus the id list mapping back."""
    verts = list(X.vertices)
    index = {v: i for i, v in enumerate(verts)}
    edges = [(index[u], index[v]) for u, v in X.edges()]
    return Graph(len(verts), edges), verts


def measure_alpha(
    X: SimplicialComplex,
    seed: int,
    exact_limit: int = 60,
    node_budget: int = 20_000_000,
) -> AlphaReport:
    """Greedy lower bound on the independence number, exact value when the
    skeleton is small, and the conjectured ceil((f0+1)/6) reference."""
    g, _ = skeleton_graph(X)
    greedy = greedy_independent_set(g, seed)
    exact: int | None = None
    if g.n <= exact_limit:
        try:
            exact = len(max_independent_set_exact(g, node_budget=node_budget))
        except SolverTimeout:
            exact = None
    f0 = f_vector(X).counts[0]
    return AlphaReport(
        greedy_size=len(greedy),
        exact_size=exact,
        conjecture_value=math.ceil((f0 + 1) / 6),
    )
