"""Simplicial machinery for surface checks.

Two triangulations are derived from a cycle collection:

* the flag subdivision of a validated complex, with one triangle per
  (vertex, edge, face) incidence, and
* the coarser face-cone complex with one triangle {x, y, F} per edge xy
  of each cycle F, which is defined for any collection and whose
  manifoldness characterizes non-singular patterns.

On these we check vertex links, combinatorial-2-manifoldness, and
orientability, and classify the underlying closed surface from its Euler
characteristic.

Simplex vertices are tagged tuples so the three node kinds never
collide: ("v", vertex_id), ("e", (u, w)), ("f", face_index).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .complexes import CycleCollection, Graph, PolygonalComplex, cycle_edges
from .errors import InvalidCombination, NotAManifold, UnknownVertex

Node = tuple


def _node_key(node: Node):
    tag, ref = node
    return (tag, ref if isinstance(ref, tuple) else (ref,))


class SimplicialComplex2:
    """Immutable pure 2-dimensional simplicial complex (a triangle set)."""

    __slots__ = ("vertices", "triangles", "_index", "_tris_sorted")

    def __init__(self, triangles: Iterable[frozenset]):
        tris = {frozenset(t) for t in triangles}
        for t in tris:
            if len(t) != 3:
                raise ValueError(f"triangle {sorted(t, key=_node_key)} does not have 3 vertices")
        self.triangles: frozenset[frozenset] = frozenset(tris)
        verts = {v for t in self.triangles for v in t}
        self.vertices: tuple[Node, ...] = tuple(sorted(verts, key=_node_key))
        self._index = {v: i for i, v in enumerate(self.vertices)}
        self._tris_sorted = None

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def triangle_count(self) -> int:
        return len(self.triangles)

    def sorted_triangles(self) -> list[tuple[Node, Node, Node]]:
        if self._tris_sorted is None:
            self._tris_sorted = sorted(
                tuple(sorted(t, key=_node_key)) for t in self.triangles
            )
        return self._tris_sorted

    def edge_count(self) -> int:
        return len({frozenset(p) for t in self.sorted_triangles()
                    for p in ((t[0], t[1]), (t[0], t[2]), (t[1], t[2]))})

    def euler_characteristic(self) -> int:
        return self.vertex_count - self.edge_count() + self.triangle_count

    def edge_graph(self) -> Graph:
        edges = set()
        for t in self.sorted_triangles():
            edges.update(((t[0], t[1]), (t[0], t[2]), (t[1], t[2])))
        return Graph(self.vertices, edges)

    def __repr__(self) -> str:
        return f"<SimplicialComplex2: {self.vertex_count} vertices, {self.triangle_count} triangles>"

    def to_json_dict(self) -> dict:
        verts = [{"tag": tag, "ref": list(ref) if isinstance(ref, tuple) else ref}
                 for tag, ref in self.vertices]
        tris = sorted(
            sorted(self._index[v] for v in t) for t in self.triangles
        )
        return {"vertices": verts, "triangles": tris}


def barycentric_subdivision(K: PolygonalComplex) -> SimplicialComplex2:
    """Flag triangulation of a validated complex: one triangle
    {vertex, edge-node, face-node} per flag."""
    tris = []
    for fi, cyc in enumerate(K.cycles):
        fnode = ("f", fi)
        for e in cycle_edges(cyc):
            enode = ("e", e)
            tris.append(frozenset((("v", e[0]), enode, fnode)))
            tris.append(frozenset((("v", e[1]), enode, fnode)))
    return SimplicialComplex2(tris)


def bar_complex(c: CycleCollection | PolygonalComplex) -> SimplicialComplex2:
    """Cone each cycle from its own face-node: one triangle {x, y, F} per
    edge xy of each cycle F.  Defined for any collection."""
    tris = []
    for fi, cyc in enumerate(c.cycles):
        fnode = ("f", fi)
        n = len(cyc)
        for i in range(n):
            tris.append(frozenset((("v", cyc[i]), ("v", cyc[(i + 1) % n]), fnode)))
    return SimplicialComplex2(tris)


def link_of_vertex(X: SimplicialComplex2, v: Node) -> Graph:
    """Link of v: nodes u with uv an edge, edges xy with xyv a triangle."""
    if v not in X._index:
        raise UnknownVertex(v)
    nodes = set()
    edges = []
    for t in X.triangles:
        if v in t:
            x, y = sorted(t - {v}, key=_node_key)
            nodes.update((x, y))
            edges.append((x, y))
    return Graph(nodes, edges)


def manifold_defects(X: SimplicialComplex2) -> list[Node]:
    """Vertices whose link is not a single cycle."""
    links: dict[Node, list[tuple[Node, Node]]] = {v: [] for v in X.vertices}
    for t in X.triangles:
        a, b, c = sorted(t, key=_node_key)
        links[a].append((b, c))
        links[b].append((a, c))
        links[c].append((a, b))
    bad = []
    for v in X.vertices:
        g = Graph({n for e in links[v] for n in e}, links[v])
        if not g.is_single_cycle():
            bad.append(v)
    return bad


def is_combinatorial_2_manifold(X: SimplicialComplex2) -> bool:
    """True iff X is nonempty and the link of every vertex is one cycle."""
    if not X.triangles:
        return False
    return not manifold_defects(X)


def _edge_to_triangles(X: SimplicialComplex2) -> dict[frozenset, list[tuple[Node, Node, Node]]]:
    at: dict[frozenset, list] = {}
    for t in X.sorted_triangles():
        for pair in ((t[0], t[1]), (t[0], t[2]), (t[1], t[2])):
            at.setdefault(frozenset(pair), []).append(t)
    return at


def is_orientable_simplicial(X: SimplicialComplex2) -> bool:
    """Orientability by direction propagation over triangles.

    Each triangle gets a sign relative to its sorted vertex order; two
    triangles sharing an edge must traverse that edge in opposite
    directions.  A closed walk forcing both signs on one triangle means
    the surface is non-orientable.  Requires every edge in exactly two
    triangles (raises NotAManifold otherwise).
    """
    edge_tris = _edge_to_triangles(X)
    for e, ts in edge_tris.items():
        if len(ts) != 2:
            raise NotAManifold(f"edge {sorted(e, key=_node_key)} lies in {len(ts)} triangles")
    sign: dict[tuple, int] = {}
    for seed in X.sorted_triangles():
        if seed in sign:
            continue
        sign[seed] = 1
        queue = deque([seed])
        while queue:
            t = queue.popleft()
            for i, j in ((0, 1), (1, 2), (2, 0)):
                # Directed edge (t[i], t[j]) as induced by sign +1 on the
                # sorted triple; flipping the sign reverses it.
                a, b = (t[i], t[j]) if sign[t] == 1 else (t[j], t[i])
                other = next(s for s in edge_tris[frozenset((t[i], t[j]))] if s != t)
                # The neighbour is consistent iff it induces (b, a).
                needed = 1 if _induces(other, b, a) else -1
                if other in sign:
                    if sign[other] != needed:
                        return False
                else:
                    sign[other] = needed
                    queue.append(other)
    return True


def _induces(tri: tuple[Node, Node, Node], a: Node, b: Node) -> bool:
    """Does the +1 orientation of the sorted triple traverse a then b?"""
    for i, j in ((0, 1), (1, 2), (2, 0)):
        if tri[i] == a and tri[j] == b:
            return True
    return False


def is_orientable(K: PolygonalComplex) -> bool:
    """Orientability of a polyhedral map by directing its face cycles.

    Faces are assigned a traversal direction so that every edge is used
    once in each direction; propagation across shared edges either
    completes or hits a contradiction.  Raises NotAManifold unless every
    edge lies in exactly two faces.
    """
    edge_faces: dict[tuple[int, int], list[int]] = {}
    for fi, cyc in enumerate(K.cycles):
        for e in cycle_edges(cyc):
            edge_faces.setdefault(e, []).append(fi)
    for e, fs in edge_faces.items():
        if len(fs) != 2:
            raise NotAManifold(f"edge {e} lies in {len(fs)} faces")
    directed: dict[int, dict[tuple[int, int], bool]] = {}
    for fi, cyc in enumerate(K.cycles):
        fwd = {}
        n = len(cyc)
        for i in range(n):
            a, b = cyc[i], cyc[(i + 1) % n]
            fwd[(a, b) if a < b else (b, a)] = a < b
        directed[fi] = fwd
    sign: dict[int, int] = {}
    for seed in range(len(K.cycles)):
        if seed in sign:
            continue
        sign[seed] = 1
        queue = deque([seed])
        while queue:
            fi = queue.popleft()
            for e, fwd in directed[fi].items():
                other = next(g for g in edge_faces[e] if g != fi)
                # fi actually traverses e forward iff its stored direction
                # agrees with its sign; the neighbour must do the opposite.
                actual = fwd if sign[fi] == 1 else not fwd
                needed = -1 if directed[other][e] == actual else 1
                if other in sign:
                    if sign[other] != needed:
                        return False
                else:
                    sign[other] = needed
                    queue.append(other)
    return True


@dataclass(frozen=True)
class SurfaceClass:
    euler: int
    orientable: bool
    name: str


def classify_surface(euler: int, orientable: bool) -> SurfaceClass:
    """Name the closed surface with the given invariants.

    Raises InvalidCombination when no closed surface matches (odd Euler
    characteristic with orientable=True, or characteristic above the
    sphere's).
    """
    if euler > 2:
        raise InvalidCombination(f"no closed surface has Euler characteristic {euler}")
    if orientable:
        if euler % 2 != 0:
            raise InvalidCombination(
                f"orientable surfaces have even Euler characteristic, got {euler}"
            )
        genus = (2 - euler) // 2
        if genus == 0:
            name = "sphere"
        elif genus == 1:
            name = "torus"
        else:
            name = f"orientable genus {genus}"
        return SurfaceClass(euler, True, name)
    genus = 2 - euler
    if genus < 1:
        raise InvalidCombination("a non-orientable surface has Euler characteristic at most 1")
    return SurfaceClass(euler, False, f"non-orientable genus {genus}")
