"""Flag machinery: automorphisms, regularity, duals, isomorphism.

A flag is an incident triple (vertex, edge, face).  On a polyhedral map
the three elementary moves that change exactly one component are
fixed-point-free involutions, and any isomorphism is determined by the
image of a single flag.  Propagating a flag correspondence through the
three involutions therefore finds automorphisms and isomorphisms in time
linear in the number of flags per candidate, with no backtracking.

The automorphism group is enumerated by propagating the least flag onto
every flag; the map is combinatorially regular exactly when every
propagation succeeds.  The dual map lists the faces around each vertex
in rotation order.  For inputs that are not polyhedral maps,
:func:`are_isomorphic` falls back to a pruned backtracking search over
vertex bijections.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import NamedTuple

from .complexes import (
    CycleCollection,
    PolygonalComplex,
    canonical_cycle,
    cycle_edges,
    f_vector,
    is_polyhedral_map,
    validate_polyhedral,
    vertex_rotation,
)
from .errors import NotAPolyhedralMap


class Flag(NamedTuple):
    vertex: int
    edge: tuple[int, int]
    face: int


class FlagGraph:
    """All flags of a polyhedral map with the three adjacency involutions.

    Flags are sorted, so index 0 is the lexicographically least flag.
    s0 changes the vertex within the edge, s1 the edge within the face,
    s2 the face across the edge.
    """

    __slots__ = ("complex", "flags", "index", "s0", "s1", "s2", "vertex_of", "face_of", "face_set")

    def __init__(self, K: PolygonalComplex):
        if not is_polyhedral_map(K):
            raise NotAPolyhedralMap(
                "flag machinery needs a connected polyhedral 2-manifold"
            )
        self.complex = K
        flags: list[Flag] = []
        edge_faces: dict[tuple[int, int], list[int]] = {}
        face_edges_at: dict[tuple[int, int], list[tuple[int, int]]] = {}
        for fi, cyc in enumerate(K.cycles):
            for e in cycle_edges(cyc):
                edge_faces.setdefault(e, []).append(fi)
                flags.append(Flag(e[0], e, fi))
                flags.append(Flag(e[1], e, fi))
                for v in e:
                    face_edges_at.setdefault((fi, v), []).append(e)
        flags.sort()
        self.flags = tuple(flags)
        self.index = {f: i for i, f in enumerate(flags)}
        n = len(flags)
        s0 = [0] * n
        s1 = [0] * n
        s2 = [0] * n
        for i, (v, e, fi) in enumerate(flags):
            s0[i] = self.index[Flag(e[0] if v == e[1] else e[1], e, fi)]
            e1, e2 = face_edges_at[(fi, v)]
            s1[i] = self.index[Flag(v, e2 if e == e1 else e1, fi)]
            fa, fb = edge_faces[e]
            s2[i] = self.index[Flag(v, e, fb if fi == fa else fa)]
        self.s0, self.s1, self.s2 = s0, s1, s2
        self.vertex_of = [f.vertex for f in flags]
        self.face_of = [f.face for f in flags]
        self.face_set = frozenset(K.cycles)

    def __len__(self) -> int:
        return len(self.flags)


def flag_graph(K: PolygonalComplex) -> FlagGraph:
    """Flag graph of K, cached on the complex."""
    if K._flag_graph is None:
        K._flag_graph = FlagGraph(K)
    return K._flag_graph


def _propagate_indices(fgK: FlagGraph, fgL: FlagGraph, start_k: int, start_l: int) -> tuple[int, ...] | None:
    """Extend start_k -> start_l over all three involutions; return the
    vertex map if it is a bijection carrying faces onto faces."""
    nk = len(fgK)
    if nk != len(fgL):
        return None
    img = [-1] * nk
    img[start_k] = start_l
    hit = [False] * nk
    hit[start_l] = True
    queue = deque([start_k])
    moves = ((fgK.s0, fgL.s0), (fgK.s1, fgL.s1), (fgK.s2, fgL.s2))
    while queue:
        x = queue.popleft()
        y = img[x]
        for sK, sL in moves:
            xn, yn = sK[x], sL[y]
            cur = img[xn]
            if cur == -1:
                if hit[yn]:
                    return None
                img[xn] = yn
                hit[yn] = True
                queue.append(xn)
            elif cur != yn:
                return None
    # The map graph is connected, so img is total and bijective here.
    vmap = [-1] * fgK.complex.vertex_count
    vK, vL = fgK.vertex_of, fgL.vertex_of
    for x in range(nk):
        v, w = vK[x], vL[img[x]]
        if vmap[v] == -1:
            vmap[v] = w
        elif vmap[v] != w:
            return None
    if -1 in vmap or len(set(vmap)) != len(vmap):
        return None
    faces_l = fgL.face_set
    for cyc in fgK.complex.cycles:
        if canonical_cycle(tuple(vmap[v] for v in cyc)) not in faces_l:
            return None
    return tuple(vmap)


def propagate(K: PolygonalComplex, L: PolygonalComplex, f: Flag, g: Flag) -> tuple[int, ...] | None:
    """Vertex bijection induced by the flag correspondence f -> g, or
    None when no isomorphism extends it."""
    fgK, fgL = flag_graph(K), flag_graph(L)
    f = Flag(f[0], tuple(sorted(f[1])), f[2])
    g = Flag(g[0], tuple(sorted(g[1])), g[2])
    return _propagate_indices(fgK, fgL, fgK.index[f], fgL.index[g])


def compose(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Vertex map applying b first, then a."""
    return tuple(a[x] for x in b)


@dataclass(frozen=True)
class AutomorphismGroup:
    order: int
    flag_count: int
    generators: tuple[tuple[int, ...], ...]
    vertex_orbits: tuple[tuple[int, ...], ...]
    face_orbits: tuple[tuple[int, ...], ...]
    elements: tuple[tuple[int, ...], ...]

    def to_json_dict(self) -> dict:
        return {
            "order": self.order,
            "flags": self.flag_count,
            "regular": self.order == self.flag_count,
            "vertex_transitive": len(self.vertex_orbits) == 1,
            "face_transitive": len(self.face_orbits) == 1,
            "generators": [list(g) for g in self.generators],
        }


def _closure(generators: list[tuple[int, ...]], identity: tuple[int, ...]) -> set[tuple[int, ...]]:
    group = {identity}
    frontier = deque([identity])
    while frontier:
        g = frontier.popleft()
        for gen in generators:
            h = compose(gen, g)
            if h not in group:
                group.add(h)
                frontier.append(h)
    return group


def automorphism_group(K: PolygonalComplex) -> AutomorphismGroup:
    """Full automorphism group by propagating the base flag everywhere.

    Every automorphism sends the least flag somewhere, and the flag
    action is free, so the successful propagations enumerate the group
    exactly once each.  Cached on the complex.
    """
    if K._autgroup is not None:
        return K._autgroup
    fg = flag_graph(K)
    elements: list[tuple[int, ...]] = []
    for target in range(len(fg)):
        vmap = _propagate_indices(fg, fg, 0, target)
        if vmap is not None:
            elements.append(vmap)
    order = len(elements)
    n = K.vertex_count
    identity = tuple(range(n))
    generators: list[tuple[int, ...]] = []
    span: set[tuple[int, ...]] = {identity}
    for cand in elements:
        if cand not in span:
            generators.append(cand)
            span = _closure(generators, identity)
            if len(span) == order:
                break
    vertex_orbits = _orbits(elements, n)
    face_orbits = _face_orbits(elements, K)
    K._autgroup = AutomorphismGroup(
        order=order,
        flag_count=len(fg),
        generators=tuple(generators),
        vertex_orbits=vertex_orbits,
        face_orbits=face_orbits,
        elements=tuple(elements),
    )
    return K._autgroup


def _orbits(elements: list[tuple[int, ...]], n: int) -> tuple[tuple[int, ...], ...]:
    seen = [False] * n
    orbits = []
    for v in range(n):
        if seen[v]:
            continue
        orb = {g[v] for g in elements} | {v}
        for w in orb:
            seen[w] = True
        orbits.append(tuple(sorted(orb)))
    return tuple(orbits)


def _face_orbits(elements: list[tuple[int, ...]], K: PolygonalComplex) -> tuple[tuple[int, ...], ...]:
    face_index = {cyc: i for i, cyc in enumerate(K.cycles)}
    nf = K.face_count
    seen = [False] * nf
    orbits = []
    for fi in range(nf):
        if seen[fi]:
            continue
        orb = {fi}
        for g in elements:
            orb.add(face_index[canonical_cycle(tuple(g[v] for v in K.cycles[fi]))])
        for w in orb:
            seen[w] = True
        orbits.append(tuple(sorted(orb)))
    return tuple(orbits)


def is_combinatorially_regular(K: PolygonalComplex) -> bool:
    """True iff the automorphism group is transitive on flags."""
    group = automorphism_group(K)
    return group.order == group.flag_count


class Transitivity(NamedTuple):
    vertex_transitive: bool
    face_transitive: bool


def transitivity(K: PolygonalComplex) -> Transitivity:
    group = automorphism_group(K)
    return Transitivity(len(group.vertex_orbits) == 1, len(group.face_orbits) == 1)


def dual(K: PolygonalComplex) -> PolygonalComplex:
    """The dual map: one vertex per face of K, one face per vertex of K
    listing its incident faces in rotation order.

    Dual vertex j corresponds to face j of K, and dual face i to vertex
    i of K.  Raises NotAPolyhedralMap when K has no well-defined dual.
    """
    if not is_polyhedral_map(K):
        raise NotAPolyhedralMap("dual is defined for polyhedral maps only")
    faces = []
    for v in range(K.vertex_count):
        rot = vertex_rotation(K, v)
        assert rot is not None
        faces.append(rot)
    name = f"{K.name}_dual" if K.name else "dual"
    coll = CycleCollection(faces, labels=tuple(range(K.face_count)), name=name)
    return validate_polyhedral(coll)


def is_isomorphism(K: PolygonalComplex | CycleCollection, L: PolygonalComplex | CycleCollection,
                   vmap: dict[int, int] | tuple[int, ...] | list[int]) -> bool:
    """Does the given vertex map carry the faces of K exactly onto the
    faces of L?"""
    if isinstance(vmap, dict):
        vmap = tuple(vmap[v] for v in range(len(vmap)))
    if K.vertex_count != L.vertex_count or len(vmap) != K.vertex_count:
        return False
    if sorted(vmap) != list(range(L.vertex_count)):
        return False
    mapped = {canonical_cycle(tuple(vmap[v] for v in cyc)) for cyc in K.cycles}
    return mapped == set(L.cycles)


def are_isomorphic(K: PolygonalComplex | CycleCollection, L: PolygonalComplex | CycleCollection) -> tuple[int, ...] | None:
    """A vertex bijection carrying faces to faces, or None.

    Polyhedral maps use flag propagation from the least flag of K to
    every flag of L; other complexes fall back to backtracking with
    degree and face-size pruning.
    """
    cK = K.collection if isinstance(K, PolygonalComplex) else K
    cL = L.collection if isinstance(L, PolygonalComplex) else L
    if cK.vertex_count != cL.vertex_count or cK.face_count != cL.face_count:
        return None
    if sorted(map(len, cK.cycles)) != sorted(map(len, cL.cycles)):
        return None
    KP = K if isinstance(K, PolygonalComplex) else _try_validate(cK)
    LP = L if isinstance(L, PolygonalComplex) else _try_validate(cL)
    if (KP is None) != (LP is None):
        return None
    if KP is not None and LP is not None:
        if f_vector(KP).as_tuple() != f_vector(LP).as_tuple():
            return None
        map_k, map_l = is_polyhedral_map(KP), is_polyhedral_map(LP)
        if map_k != map_l:
            return None
        if map_k:
            fgK, fgL = flag_graph(KP), flag_graph(LP)
            if len(fgK) != len(fgL):
                return None
            for target in range(len(fgL)):
                vmap = _propagate_indices(fgK, fgL, 0, target)
                if vmap is not None:
                    return vmap
            return None
    return _isomorphic_backtracking(cK, cL)


def _try_validate(c: CycleCollection) -> PolygonalComplex | None:
    from .errors import IntersectionViolation

    try:
        return validate_polyhedral(c)
    except IntersectionViolation:
        return None


def _vertex_signature(c: CycleCollection) -> list[tuple]:
    at: list[list[int]] = [[] for _ in range(c.vertex_count)]
    for cyc in c.cycles:
        for v in cyc:
            at[v].append(len(cyc))
    neighbours: list[set[int]] = [set() for _ in range(c.vertex_count)]
    for cyc in c.cycles:
        for a, b in cycle_edges(cyc):
            neighbours[a].add(b)
            neighbours[b].add(a)
    return [(len(neighbours[v]), tuple(sorted(at[v]))) for v in range(c.vertex_count)]


def _isomorphic_backtracking(cK: CycleCollection, cL: CycleCollection) -> tuple[int, ...] | None:
    """Backtracking over vertex assignments with signature pruning.

    Suitable for the small collections (patterns, perturbed fixtures)
    that flag propagation cannot handle.
    """
    n = cK.vertex_count
    if n == 0:
        return tuple()
    sigK = _vertex_signature(cK)
    sigL = _vertex_signature(cL)
    if sorted(sigK) != sorted(sigL):
        return None
    candidates = [
        [w for w in range(n) if sigL[w] == sigK[v]] for v in range(n)
    ]
    adjK = [set() for _ in range(n)]
    adjL = [set() for _ in range(n)]
    for cyc in cK.cycles:
        for a, b in cycle_edges(cyc):
            adjK[a].add(b)
            adjK[b].add(a)
    for cyc in cL.cycles:
        for a, b in cycle_edges(cyc):
            adjL[a].add(b)
            adjL[b].add(a)
    order = sorted(range(n), key=lambda v: len(candidates[v]))
    faces_l = set(cL.cycles)
    vmap = [-1] * n
    used = [False] * n

    def feasible(v: int, w: int) -> bool:
        for u in adjK[v]:
            if vmap[u] != -1 and vmap[u] not in adjL[w]:
                return False
        return True

    def rec(i: int) -> bool:
        if i == n:
            return {canonical_cycle(tuple(vmap[x] for x in cyc)) for cyc in cK.cycles} == faces_l
        v = order[i]
        for w in candidates[v]:
            if not used[w] and feasible(v, w):
                vmap[v] = w
                used[w] = True
                if rec(i + 1):
                    return True
                vmap[v] = -1
                used[w] = False
        return False

    return tuple(vmap) if rec(0) else None


def is_self_dual(K: PolygonalComplex) -> bool:
    """True iff K is isomorphic to its dual."""
    return are_isomorphic(K, dual(K)) is not None
