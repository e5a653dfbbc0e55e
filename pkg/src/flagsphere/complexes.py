"""Facet-based pure simplicial complexes.

The central object is :class:`SimplicialComplex`: an antichain of equal-size
facets over integer vertex ids, with a derived vertex adjacency cache and a
provenance tag per vertex (original position vs. edge-subdivision vertex).
Complexes are immutable after construction; every operation returning a
complex builds a new one (neighbor sets may be shared copy-on-write).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (
    DominatedFacet,
    EmptyInput,
    InvariantViolation,
    NonPure,
    NotAFace,
    NotAnEdge,
    UnknownVertex,
    WrongDimension,
)


@dataclass(frozen=True)
class OriginalTag:
    """Vertex present in the initial complex, at a fixed 1-based position."""

    position: int


@dataclass(frozen=True)
class SubdivisionTag:
    """Vertex created by subdividing parent_edge; step is the 1-based event index."""

    parent_edge: tuple[int, int]
    step: int


VertexTag = OriginalTag | SubdivisionTag


@dataclass(frozen=True)
class FVector:
    counts: tuple[int, ...]
    euler: int


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of the closed-3-manifold checks; passed iff all four hold."""

    two_faces_in_two_facets: bool
    connected: bool
    vertex_links_are_2_spheres: bool
    euler_zero: bool

    @property
    def passed(self) -> bool:
        return (
            self.two_faces_in_two_facets
            and self.connected
            and self.vertex_links_are_2_spheres
            and self.euler_zero
        )

    def as_dict(self) -> dict[str, bool]:
        return {
            "two_faces_in_two_facets": self.two_faces_in_two_facets,
            "connected": self.connected,
            "vertex_links_are_2_spheres": self.vertex_links_are_2_spheres,
            "euler_zero": self.euler_zero,
            "passed": self.passed,
        }


class SimplicialComplex:
    """Pure simplicial complex stored by its facets.

    Vertex ids are arbitrary non-negative integers (links keep the ambient
    ids of their parent complex). Facets are frozensets of equal size
    forming an antichain; adjacency is derived from the facets. Do not call
    the constructor directly for user data, use :func:`build_from_facets`.
    """

    __slots__ = ("facets", "tags", "_adj", "_vertices")

    def __init__(
        self,
        facets: frozenset[frozenset[int]],
        tags: dict[int, VertexTag],
        adjacency: dict[int, set[int]] | None = None,
    ):
        self.facets = facets
        self.tags = tags
        if adjacency is None:
            adjacency = _derive_adjacency(facets)
        self._adj = adjacency
        self._vertices = tuple(sorted(self._adj))

    # -- basic queries --------------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def vertex_count(self) -> int:
        return len(self._vertices)

    @property
    def facet_count(self) -> int:
        return len(self.facets)

    @property
    def dimension(self) -> int:
        """Dimension of the (pure) complex; -1 for the empty complex."""
        if not self.facets:
            return -1
        return len(next(iter(self.facets))) - 1

    @property
    def is_empty(self) -> bool:
        return not self.facets

    def neighbors(self, v: int) -> set[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in self._vertices for v in sorted(self._adj[u]) if u < v]

    def tag_of(self, v: int) -> VertexTag:
        return self.tags[v]

    def is_original(self, v: int) -> bool:
        return isinstance(self.tags[v], OriginalTag)

    def subdivision_vertex_count(self) -> int:
        return sum(1 for t in self.tags.values() if isinstance(t, SubdivisionTag))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.facets == other.facets and self.tags == other.tags

    def __hash__(self):
        return hash(self.facets)

    def __repr__(self) -> str:
        return (
            f"SimplicialComplex(vertices={self.vertex_count},"
            f" facets={self.facet_count}, dim={self.dimension})"
        )


def _derive_adjacency(facets: frozenset[frozenset[int]]) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {}
    for facet in facets:
        for v in facet:
            adj.setdefault(v, set())
        for u, v in itertools.combinations(facet, 2):
            adj[u].add(v)
            adj[v].add(u)
    return adj


def build_from_facets(
    facets, tags: dict[int, VertexTag] | None = None
) -> SimplicialComplex:
    """Validate facets (nonempty, pure, antichain) and build a complex.

    Untagged vertices default to OriginalTag(position=id+1), matching the
    1-based position convention used in reports.
    """
    facet_sets = [frozenset(f) for f in facets]
    if not facet_sets:
        raise EmptyInput("no facets given")
    sizes = {len(f) for f in facet_sets}
    if 0 in sizes:
        raise EmptyInput("empty facet given")
    unique = set(facet_sets)
    if len(unique) != len(facet_sets):
        raise DominatedFacet("duplicate facet given")
    if len(sizes) != 1:
        # a proper subset pair is reported as domination, not impurity
        by_size = sorted(unique, key=len)
        for i, small in enumerate(by_size):
            for big in by_size[i + 1 :]:
                if small < big:
                    raise DominatedFacet(
                        f"facet {sorted(small)} is contained in {sorted(big)}"
                    )
        raise NonPure(f"facet cardinalities {sorted(sizes)} are mixed")
    for f in facet_sets:
        for v in f:
            if v < 0:
                raise UnknownVertex(f"negative vertex id {v}")
    verts = sorted(set().union(*facet_sets))
    full_tags: dict[int, VertexTag] = {}
    for v in verts:
        if tags is not None and v in tags:
            full_tags[v] = tags[v]
        else:
            full_tags[v] = OriginalTag(position=v + 1)
    return SimplicialComplex(frozenset(unique), full_tags)


def _check_vertices_known(X: SimplicialComplex, face) -> frozenset[int]:
    fs = frozenset(face)
    for v in fs:
        if v not in X._adj:
            raise UnknownVertex(f"vertex {v} not in complex")
    return fs


def is_face(X: SimplicialComplex, face) -> bool:
    """True iff the vertex set is contained in some facet."""
    fs = _check_vertices_known(X, face)
    return any(fs <= facet for facet in X.facets)


def link(X: SimplicialComplex, face) -> SimplicialComplex:
    """Link of a face: the complex {sigma \\ f : f subset sigma in facets}.

    The link of a facet is the empty complex (is_empty reports it).
    Vertices keep their ambient ids and tags.
    """
    fs = _check_vertices_known(X, face)
    residues = {facet - fs for facet in X.facets if fs <= facet}
    if not residues:
        raise NotAFace(f"{sorted(fs)} is not a face")
    if residues == {frozenset()}:
        return SimplicialComplex(frozenset(), {})
    verts = set().union(*residues)
    tags = {v: X.tags[v] for v in verts}
    return SimplicialComplex(frozenset(residues), tags)


def _faces_by_size(X: SimplicialComplex, max_size: int) -> dict[int, set[frozenset[int]]]:
    """All faces of cardinality 1..max_size, enumerated from facet subsets."""
    out: dict[int, set[frozenset[int]]] = {k: set() for k in range(1, max_size + 1)}
    top = X.dimension + 1
    for facet in X.facets:
        fl = sorted(facet)
        for k in range(1, min(max_size, top) + 1):
            for sub in itertools.combinations(fl, k):
                out[k].add(frozenset(sub))
    return out


def minimal_nonfaces(X: SimplicialComplex, max_size: int) -> set[frozenset[int]]:
    """All inclusion-minimal non-faces with at most max_size vertices.

    Size-2 entries are the non-edges. A minimal non-face of size k >= 3 is a
    clique of the adjacency graph all of whose (k-1)-subsets are faces, so
    candidates are grown from (k-1)-faces by one common neighbor instead of
    enumerating all k-subsets.
    """
    if max_size < 2:
        raise ValueError("max_size must be >= 2")
    result: set[frozenset[int]] = set()
    verts = X.vertices
    adj = X._adj
    for i, u in enumerate(verts):
        for v in verts[i + 1 :]:
            if v not in adj[u]:
                result.add(frozenset((u, v)))
    if max_size == 2:
        return result
    faces = _faces_by_size(X, min(max_size, X.dimension + 1))
    top = X.dimension + 1
    for k in range(3, max_size + 1):
        base = faces.get(k - 1, set())
        k_faces = faces.get(k, set()) if k <= top else set()
        seen: set[frozenset[int]] = set()
        for face in base:
            common: set[int] | None = None
            for t in face:
                common = adj[t] if common is None else common & adj[t]
                if not common:
                    break
            if not common:
                continue
            for w in common - face:
                cand = face | {w}
                if cand in seen or cand in k_faces:
                    continue
                seen.add(cand)
                if all(cand - {x} in base for x in cand):
                    result.add(cand)
    return result


def minimal_nonfaces_bruteforce(X: SimplicialComplex, max_size: int) -> set[frozenset[int]]:
    """Oracle: test every vertex subset up to max_size. Small complexes only."""
    faces = _faces_by_size(X, max_size)
    top = X.dimension + 1

    def face_q(s: frozenset[int]) -> bool:
        return len(s) <= top and s in faces[len(s)]

    out: set[frozenset[int]] = set()
    verts = X.vertices
    for k in range(2, max_size + 1):
        for comb in itertools.combinations(verts, k):
            s = frozenset(comb)
            if face_q(s):
                continue
            if all(face_q(s - {x}) for x in s):
                out.add(s)
    return out


def is_flag(X: SimplicialComplex) -> bool:
    """True iff every minimal non-face has size 2 (all cliques are faces).

    Minimal non-faces of a d-complex have at most d+2 vertices, so checking
    up to that size is complete.
    """
    if X.is_empty:
        return True
    mnf = minimal_nonfaces(X, X.dimension + 2)
    return all(len(f) == 2 for f in mnf)


def subdivide_edge(X: SimplicialComplex, edge) -> tuple[SimplicialComplex, int]:
    """Subdivide an edge: facets {u,v}|s become {u,w}|s and {v,w}|s.

    The new vertex w gets the next free id and a SubdivisionTag. Facets not
    containing the edge are unchanged; {u,v} is a non-face of the result.
    """
    e = frozenset(edge)
    if len(e) != 2:
        raise NotAnEdge(f"{sorted(e)} is not a vertex pair")
    u, v = sorted(e)
    if u not in X._adj or v not in X._adj[u]:
        raise NotAnEdge(f"({u}, {v}) is not an edge")
    w = max(X.tags) + 1
    step = X.subdivision_vertex_count() + 1
    replaced = [facet for facet in X.facets if e <= facet]
    new_facets = set(X.facets)
    for facet in replaced:
        rest = facet - e
        new_facets.discard(facet)
        new_facets.add(rest | {u, w})
        new_facets.add(rest | {v, w})
    tags = dict(X.tags)
    tags[w] = SubdivisionTag(parent_edge=(u, v), step=step)
    # copy-on-write adjacency: replace only the touched neighbor sets
    adj = dict(X._adj)
    adj[u] = (adj[u] - {v}) | {w}
    adj[v] = (adj[v] - {u}) | {w}
    link_verts = set()
    for facet in replaced:
        link_verts |= facet - e
    for x in link_verts:
        adj[x] = adj[x] | {w}
    adj[w] = {u, v} | link_verts
    return SimplicialComplex(frozenset(new_facets), tags, adj), w


def edge_link_structure(
    X: SimplicialComplex, edge
) -> tuple[set[int], set[frozenset[int]]]:
    """Vertices and edges of the link of an edge (facet residues)."""
    e = frozenset(edge)
    residues = [facet - e for facet in X.facets if e <= facet]
    if not residues:
        raise NotAnEdge(f"{sorted(e)} is not an edge")
    verts: set[int] = set()
    for r in residues:
        verts |= r
    return verts, set(residues)


def f_vector(X: SimplicialComplex) -> FVector:
    """Exact face counts per dimension by enumerating facet subsets."""
    if X.is_empty:
        return FVector(counts=(), euler=0)
    faces = _faces_by_size(X, X.dimension + 1)
    counts = tuple(len(faces[k]) for k in range(1, X.dimension + 2))
    euler = sum((-1) ** i * c for i, c in enumerate(counts))
    return FVector(counts=counts, euler=euler)


def _connected(vertices, adj) -> bool:
    verts = list(vertices)
    if not verts:
        return True
    seen = {verts[0]}
    stack = [verts[0]]
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(verts)


def _link_is_2_sphere(lk: SimplicialComplex) -> bool:
    """Combinatorial check: closed connected surface with euler 2."""
    if lk.is_empty or lk.dimension != 2:
        return False
    ridge_count: dict[frozenset[int], int] = {}
    for facet in lk.facets:
        for pair in itertools.combinations(sorted(facet), 2):
            key = frozenset(pair)
            ridge_count[key] = ridge_count.get(key, 0) + 1
    if any(c != 2 for c in ridge_count.values()):
        return False
    if not _connected(lk.vertices, lk._adj):
        return False
    fv = f_vector(lk)
    return fv.euler == 2


def verify_closed_3_manifold(X: SimplicialComplex) -> VerificationReport:
    """Check the combinatorial closed-3-manifold conditions.

    (a) every 2-face lies in exactly two facets, (b) the complex is
    connected, (c) every vertex link is a closed connected surface with
    euler characteristic 2, (d) euler(X) = 0.
    """
    if X.dimension != 3:
        raise WrongDimension(f"expected a pure 3-complex, got dimension {X.dimension}")
    triangle_count: dict[frozenset[int], int] = {}
    for facet in X.facets:
        for tri in itertools.combinations(sorted(facet), 3):
            key = frozenset(tri)
            triangle_count[key] = triangle_count.get(key, 0) + 1
    two_faces_ok = all(c == 2 for c in triangle_count.values())
    connected = _connected(X.vertices, X._adj)
    links_ok = True
    for v in X.vertices:
        residues = frozenset(facet - {v} for facet in X.facets if v in facet)
        lk = SimplicialComplex(residues, {u: X.tags[u] for r in residues for u in r})
        if not _link_is_2_sphere(lk):
            links_ok = False
            break
    euler_zero = f_vector(X).euler == 0
    return VerificationReport(
        two_faces_in_two_facets=two_faces_ok,
        connected=connected,
        vertex_links_are_2_spheres=links_ok,
        euler_zero=euler_zero,
    )


@dataclass(frozen=True)
class SubdivisionTrace:
    """Ordered log of subdivision events (edge endpoints, assigned vertex)."""

    events: tuple[tuple[int, int, int], ...]

    def __len__(self) -> int:
        return len(self.events)


def replay(initial: SimplicialComplex, trace: SubdivisionTrace) -> SimplicialComplex:
    """Re-apply a trace; the assigned ids must match the recorded ones."""
    X = initial
    for u, v, w in trace.events:
        X, got = subdivide_edge(X, (u, v))
        if got != w:
            # id mismatch means the trace belongs to a different base complex
            raise InvariantViolation(f"replay assigned vertex {got}, trace expected {w}")
    return X
