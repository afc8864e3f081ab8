"""Face-cycle collections and polyhedral complexes.

A face is a cycle of at least three distinct vertices, considered up to
rotation and reflection.  A collection of such cycles is a polyhedral
complex when any two faces meet in nothing, a single vertex, or a single
edge shared by both.  This module builds and validates these objects and
computes their basic combinatorial data: f-vector, Euler characteristic,
edge graph, vertex rotations, equivelarity, diagonals, and the
weakly-neighbourly predicate.

Vertices are relabeled to contiguous ids 0..f0-1 at construction; the
original labels (arbitrary ints or strings) are kept in a table and used
for serialization.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    CycleTooShort,
    DuplicateFace,
    IntersectionViolation,
    RepeatedVertexInCycle,
    UnknownVertex,
)

Label = int | str


def canonical_cycle(vertices: Sequence[int]) -> tuple[int, ...]:
    """Canonical form of a cyclic sequence: the lexicographically least
    tuple among all rotations of both directions.

    Two faces are the same cycle exactly when their canonical forms are
    equal, so this doubles as the hash key for duplicate detection.
    """
    vs = tuple(vertices)
    n = len(vs)
    best = vs
    for seq in (vs, vs[::-1]):
        for r in range(n):
            cand = seq[r:] + seq[:r]
            if cand < best:
                best = cand
    return best


class CycleCollection:
    """An ordered list of distinct face cycles over ids 0..f0-1.

    Faces are stored in input order but individually canonicalized, so
    ``cycles[i]`` is always the canonical tuple for face ``i``.  Instances
    are immutable; all derived data is computed by the free functions in
    this module.
    """

    __slots__ = ("cycles", "labels", "name", "_hash")

    def __init__(self, cycles: Iterable[Sequence[int]], labels: Sequence[Label], name: str | None = None):
        self.cycles: tuple[tuple[int, ...], ...] = tuple(canonical_cycle(c) for c in cycles)
        self.labels: tuple[Label, ...] = tuple(labels)
        self.name = name
        self._hash: int | None = None
        n = len(self.labels)
        for cyc in self.cycles:
            if any(v < 0 or v >= n for v in cyc):
                raise UnknownVertex(next(v for v in cyc if v < 0 or v >= n))
        if len(set(self.cycles)) != len(self.cycles):
            seen = set()
            for cyc in self.cycles:
                if cyc in seen:
                    raise DuplicateFace(cyc)
                seen.add(cyc)

    @property
    def vertex_count(self) -> int:
        return len(self.labels)

    @property
    def face_count(self) -> int:
        return len(self.cycles)

    def faces_with_labels(self) -> list[tuple[Label, ...]]:
        """Faces as tuples of original labels, in stored order."""
        return [tuple(self.labels[v] for v in cyc) for cyc in self.cycles]

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycleCollection):
            return NotImplemented
        return (
            frozenset(self.cycles) == frozenset(other.cycles)
            and self.labels == other.labels
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((frozenset(self.cycles), self.labels))
        return self._hash

    def __repr__(self) -> str:
        tag = f" {self.name!r}" if self.name else ""
        return f"<CycleCollection{tag}: {self.vertex_count} vertices, {self.face_count} faces>"

    def to_json_dict(self) -> dict:
        """Canonical JSON form: faces canonicalized and sorted."""
        out: dict = {}
        if self.name is not None:
            out["name"] = self.name
        out["vertex_labels"] = list(self.labels)
        out["faces"] = sorted(list(c) for c in self.cycles)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_json_dict(cls, data: dict) -> "CycleCollection":
        labels = data["vertex_labels"]
        return cls(data["faces"], labels, name=data.get("name"))

    @classmethod
    def from_json(cls, text: str) -> "CycleCollection":
        return cls.from_json_dict(json.loads(text))


def _label_key(label: Label) -> tuple[str, Label]:
    # Orders mixed int/str labels without cross-type comparisons.
    return (type(label).__name__, label)


def build_collection(raw_faces: Iterable[Sequence[Label]], name: str | None = None) -> CycleCollection:
    """Build a collection from faces given as lists of arbitrary labels.

    Ids 0..f0-1 are assigned in sorted label order (integers before
    strings), so an input already labeled 0..f0-1 keeps its labels as
    ids.  Raises CycleTooShort, RepeatedVertexInCycle, or DuplicateFace
    on bad input.
    """
    faces: list[list[Label]] = []
    for face in raw_faces:
        face = list(face)
        if len(face) < 3:
            raise CycleTooShort(face)
        if len(set(face)) != len(face):
            raise RepeatedVertexInCycle(face)
        faces.append(face)
    labels = sorted({lab for face in faces for lab in face}, key=_label_key)
    table = {lab: i for i, lab in enumerate(labels)}
    cycles: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    for face in faces:
        canon = canonical_cycle([table[lab] for lab in face])
        if canon in seen:
            raise DuplicateFace(face)
        seen.add(canon)
        cycles.append(canon)
    return CycleCollection(cycles, labels, name=name)


def cycle_edges(cycle: Sequence[int]) -> list[tuple[int, int]]:
    """Undirected edges of one cycle, each as a sorted pair."""
    n = len(cycle)
    return [tuple(sorted((cycle[i], cycle[(i + 1) % n]))) for i in range(n)]


class PolygonalComplex:
    """A CycleCollection that passed the pairwise intersection check.

    Construct via :func:`validate_polyhedral`.  Caches the edge set and
    the vertex-to-faces incidence used by everything downstream.
    """

    __slots__ = ("collection", "edges", "faces_at", "_face_edge_sets", "_flag_graph", "_autgroup")

    def __init__(self, collection: CycleCollection, edges: frozenset[tuple[int, int]],
                 faces_at: tuple[tuple[int, ...], ...], face_edge_sets: tuple[frozenset, ...]):
        self.collection = collection
        self.edges = edges
        self.faces_at = faces_at
        self._face_edge_sets = face_edge_sets
        self._flag_graph = None
        self._autgroup = None

    @property
    def cycles(self) -> tuple[tuple[int, ...], ...]:
        return self.collection.cycles

    @property
    def labels(self) -> tuple[Label, ...]:
        return self.collection.labels

    @property
    def vertex_count(self) -> int:
        return self.collection.vertex_count

    @property
    def face_count(self) -> int:
        return self.collection.face_count

    @property
    def name(self) -> str | None:
        return self.collection.name

    def __repr__(self) -> str:
        f0, f1, f2 = f_vector(self)
        tag = f" {self.name!r}" if self.name else ""
        return f"<PolygonalComplex{tag}: f-vector ({f0},{f1},{f2})>"

    def to_json_dict(self) -> dict:
        return self.collection.to_json_dict()

    def to_json(self) -> str:
        return self.collection.to_json()


def _incidence(cycles: Sequence[Sequence[int]], n_vertices: int) -> tuple[tuple[int, ...], ...]:
    at: list[list[int]] = [[] for _ in range(n_vertices)]
    for idx, cyc in enumerate(cycles):
        for v in cyc:
            at[v].append(idx)
    return tuple(tuple(fs) for fs in at)


def validate_polyhedral(c: CycleCollection) -> PolygonalComplex:
    """Check the defining condition: any two faces meet in nothing, one
    vertex, or one edge of both.

    Raises IntersectionViolation with the first offending pair (in face
    order) and their shared vertices.  Only pairs sharing a vertex can
    violate, so candidates come from the vertex incidence lists.
    """
    faces_at = _incidence(c.cycles, c.vertex_count)
    vertex_sets = [set(cyc) for cyc in c.cycles]
    edge_sets = [frozenset(cycle_edges(cyc)) for cyc in c.cycles]
    candidates: set[tuple[int, int]] = set()
    for incident in faces_at:
        for a, b in combinations(incident, 2):
            candidates.add((a, b) if a < b else (b, a))
    for a, b in sorted(candidates):
        shared = vertex_sets[a] & vertex_sets[b]
        if len(shared) <= 1:
            continue
        if len(shared) == 2:
            edge = tuple(sorted(shared))
            if edge in edge_sets[a] and edge in edge_sets[b]:
                continue
        raise IntersectionViolation(c.cycles[a], c.cycles[b], shared)
    edges = frozenset(e for es in edge_sets for e in es)
    return PolygonalComplex(c, edges, faces_at, tuple(edge_sets))


@dataclass(frozen=True)
class FVector:
    f0: int
    f1: int
    f2: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.f0, self.f1, self.f2)


@dataclass(frozen=True)
class EquivelarType:
    p: int
    q: int

    def __str__(self) -> str:
        return f"{{{self.p},{self.q}}}"


class Graph:
    """Small immutable undirected simple graph over sortable hashable nodes."""

    __slots__ = ("nodes", "edges", "adjacency")

    def __init__(self, nodes: Iterable, edges: Iterable[tuple]):
        self.nodes = tuple(sorted(set(nodes)))
        norm = set()
        for a, b in edges:
            norm.add((a, b) if a <= b else (b, a))
        self.edges = frozenset(norm)
        adj: dict = {v: [] for v in self.nodes}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        self.adjacency = {v: tuple(sorted(ns)) for v, ns in adj.items()}

    def degree(self, v) -> int:
        return len(self.adjacency[v])

    def is_connected(self) -> bool:
        if not self.nodes:
            return True
        seen = {self.nodes[0]}
        queue = deque(seen)
        while queue:
            v = queue.popleft()
            for w in self.adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == len(self.nodes)

    def is_single_cycle(self) -> bool:
        """True iff the graph is one cycle: connected, all degrees 2."""
        return (
            len(self.nodes) >= 3
            and all(len(ns) == 2 for ns in self.adjacency.values())
            and self.is_connected()
        )


def edge_graph(obj: PolygonalComplex | CycleCollection) -> Graph:
    """The 1-skeleton: union of all cycle edges."""
    if isinstance(obj, PolygonalComplex):
        return Graph(range(obj.vertex_count), obj.edges)
    edges = {e for cyc in obj.cycles for e in cycle_edges(cyc)}
    return Graph(range(obj.vertex_count), edges)


def is_connected(obj: PolygonalComplex | CycleCollection) -> bool:
    return edge_graph(obj).is_connected()


def f_vector(K: PolygonalComplex) -> FVector:
    return FVector(K.vertex_count, len(K.edges), K.face_count)


def euler_characteristic(K: PolygonalComplex) -> int:
    fv = f_vector(K)
    return fv.f0 - fv.f1 + fv.f2


def collection_f_vector(c: CycleCollection) -> FVector:
    """f-vector of an unvalidated collection (distinct edges counted once)."""
    edges = {e for cyc in c.cycles for e in cycle_edges(cyc)}
    return FVector(c.vertex_count, len(edges), c.face_count)


def vertex_rotation(obj: PolygonalComplex | CycleCollection, v: int) -> tuple[int, ...] | None:
    """Cyclic order of the faces around vertex v, or None.

    For each incident face, the two neighbours of v in that face give one
    edge of the link multigraph at v.  The faces admit a rotation exactly
    when that multigraph is a single closed cycle, which needs at least
    two incident faces.  (Polyhedral-map vertices additionally need at
    least three; :func:`is_polyhedral_map` enforces that.)

    The returned tuple lists face indices in rotation order, starting at
    the least incident face index, direction chosen to make the tuple
    lexicographically least.
    """
    cycles = obj.cycles
    n = obj.vertex_count
    if not isinstance(v, int) or v < 0 or v >= n:
        raise UnknownVertex(v)
    if isinstance(obj, PolygonalComplex):
        incident = obj.faces_at[v]
    else:
        incident = tuple(i for i, cyc in enumerate(cycles) if v in cyc)
    if not incident:
        raise UnknownVertex(v)
    if len(incident) < 2:
        return None
    # Link multigraph: one edge (a, b, face) per incident face.
    link_edges: list[tuple[int, int, int]] = []
    at_node: dict[int, list[int]] = {}
    for f in incident:
        cyc = cycles[f]
        i = cyc.index(v)
        a, b = cyc[i - 1], cyc[(i + 1) % len(cyc)]
        eidx = len(link_edges)
        link_edges.append((a, b, f))
        at_node.setdefault(a, []).append(eidx)
        at_node.setdefault(b, []).append(eidx)
    if any(len(es) != 2 for es in at_node.values()):
        return None
    if len(link_edges) != len(at_node):
        return None
    # Walk the multigraph; it is a single cycle iff the walk uses every edge.
    start = min(at_node)
    used = [False] * len(link_edges)
    order: list[int] = []
    node = start
    first = min(at_node[start])
    eidx = first
    while not used[eidx]:
        used[eidx] = True
        a, b, f = link_edges[eidx]
        order.append(f)
        node = b if node == a else a
        e1, e2 = at_node[node]
        eidx = e2 if e1 == eidx else e1
    if not all(used):
        return None
    return _canonical_rotation(tuple(order))


def _canonical_rotation(faces: tuple[int, ...]) -> tuple[int, ...]:
    return canonical_cycle(faces) if len(faces) >= 3 else tuple(sorted(faces))


def polyhedral_map_defects(K: PolygonalComplex) -> list[int]:
    """Vertices that break the manifold condition (no rotation, or fewer
    than three incident faces)."""
    bad = []
    for v in range(K.vertex_count):
        if len(K.faces_at[v]) < 3 or vertex_rotation(K, v) is None:
            bad.append(v)
    return bad


def is_polyhedral_map(K: PolygonalComplex) -> bool:
    """True iff K is finite, connected, and every vertex has at least
    three faces arranged in a single rotation."""
    if K.face_count == 0:
        return False
    if polyhedral_map_defects(K):
        return False
    return is_connected(K)


def equivelar_type(obj: PolygonalComplex | CycleCollection) -> EquivelarType | None:
    """(p, q) if every face is a p-cycle and every vertex is in exactly q
    faces, with p, q >= 3; None otherwise."""
    cycles = obj.cycles
    n = obj.vertex_count
    if not cycles or n == 0:
        return None
    lengths = {len(cyc) for cyc in cycles}
    if len(lengths) != 1:
        return None
    if isinstance(obj, PolygonalComplex):
        counts = {len(fs) for fs in obj.faces_at}
    else:
        counts = {len(fs) for fs in _incidence(cycles, n)}
    if len(counts) != 1:
        return None
    p, q = lengths.pop(), counts.pop()
    if p < 3 or q < 3:
        return None
    return EquivelarType(p, q)


def _covered_pairs(cycles: Sequence[Sequence[int]]) -> set[tuple[int, int]]:
    pairs: set[tuple[int, int]] = set()
    for cyc in cycles:
        for a, b in combinations(cyc, 2):
            pairs.add((a, b) if a < b else (b, a))
    return pairs


def diagonal_count(obj: PolygonalComplex | CycleCollection) -> int:
    """Number of distinct vertex pairs that lie in a common face without
    being an edge of that face."""
    diagonals: set[tuple[int, int]] = set()
    cycles = obj.cycles
    for cyc in cycles:
        edges = set(cycle_edges(cyc))
        for a, b in combinations(cyc, 2):
            pair = (a, b) if a < b else (b, a)
            if pair not in edges:
                diagonals.add(pair)
    return len(diagonals)


def is_weakly_neighbourly(obj: PolygonalComplex | CycleCollection) -> bool:
    """True iff every pair of vertices lies in some common face."""
    n = obj.vertex_count
    return len(_covered_pairs(obj.cycles)) == n * (n - 1) // 2
