"""One-shot analysis of a cycle collection.

Collects everything the library can say about a complex into a single
record: counts, Euler characteristic, equivelarity, which structural
levels it reaches (polyhedral complex, non-singular pattern, polyhedral
map), orientability and surface class where defined, and, on request,
the symmetry facts (automorphism order, regularity, transitivity,
self-duality).

Fields that need a structure the input does not have stay None and are
omitted from the JSON form: symmetry facts need a polyhedral map;
orientability needs at least a pattern whose face-cone complex is a
closed surface.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import complexes, surfaces, symmetry
from .complexes import CycleCollection, PolygonalComplex
from .errors import IntersectionViolation
from .surfaces import SurfaceClass


@dataclass
class AnalysisReport:
    name: str | None
    f_vector: tuple[int, int, int]
    euler: int
    equivelar_type: tuple[int, int] | None
    polyhedral_complex: bool
    polyhedral_map: bool
    non_singular_pattern: bool
    connected: bool
    weakly_neighbourly: bool
    diagonal_count: int
    intersection_witness: tuple | None = None
    orientable: bool | None = None
    surface: SurfaceClass | None = None
    flags: int | None = None
    automorphism_order: int | None = None
    combinatorially_regular: bool | None = None
    vertex_transitive: bool | None = None
    face_transitive: bool | None = None
    self_dual: bool | None = None
    automorphisms: dict | None = None

    def to_json_dict(self) -> dict:
        out: dict = {}
        for key, value in self.__dict__.items():
            if value is None:
                continue
            if isinstance(value, SurfaceClass):
                value = {"euler": value.euler, "orientable": value.orientable, "name": value.name}
            elif isinstance(value, tuple):
                value = list(value)
            out[key] = value
        return out

    def lines(self) -> list[str]:
        """Aligned key/value lines for terminal output."""
        items = []
        for key, value in self.to_json_dict().items():
            if key == "automorphisms":
                continue
            if key == "surface":
                value = value["name"]
            elif key == "equivelar_type":
                value = f"{{{value[0]},{value[1]}}}"
            elif key == "f_vector":
                value = f"({value[0]}, {value[1]}, {value[2]})"
            items.append((key, value))
        width = max(len(k) for k, _ in items)
        return [f"{k:<{width}}  {v}" for k, v in items]


def analyze(c: CycleCollection | PolygonalComplex, full: bool = False) -> AnalysisReport:
    """Analyze a collection; ``full`` adds the symmetry facts, which cost
    roughly (number of flags)^2 flag steps."""
    coll = c.collection if isinstance(c, PolygonalComplex) else c
    K: PolygonalComplex | None
    witness = None
    if isinstance(c, PolygonalComplex):
        K = c
    else:
        try:
            K = complexes.validate_polyhedral(coll)
        except IntersectionViolation as exc:
            K = None
            witness = (exc.face_a, exc.face_b, exc.shared_vertices)
    fv = complexes.collection_f_vector(coll)
    euler = fv.f0 - fv.f1 + fv.f2
    etype = complexes.equivelar_type(coll)
    connected = complexes.is_connected(coll)
    bar = surfaces.bar_complex(coll)
    pattern = surfaces.is_combinatorial_2_manifold(bar) and connected
    is_map = K is not None and complexes.is_polyhedral_map(K)
    report = AnalysisReport(
        name=coll.name,
        f_vector=fv.as_tuple(),
        euler=euler,
        equivelar_type=(etype.p, etype.q) if etype else None,
        polyhedral_complex=K is not None,
        polyhedral_map=is_map,
        non_singular_pattern=pattern,
        connected=connected,
        weakly_neighbourly=complexes.is_weakly_neighbourly(coll),
        diagonal_count=complexes.diagonal_count(coll),
        intersection_witness=witness,
    )
    if is_map:
        assert K is not None
        report.orientable = surfaces.is_orientable(K)
        report.surface = surfaces.classify_surface(euler, report.orientable)
    elif pattern:
        report.orientable = surfaces.is_orientable_simplicial(bar)
        report.surface = surfaces.classify_surface(euler, report.orientable)
    if full and is_map:
        assert K is not None
        group = symmetry.automorphism_group(K)
        report.flags = group.flag_count
        report.automorphism_order = group.order
        report.combinatorially_regular = group.order == group.flag_count
        trans = symmetry.transitivity(K)
        report.vertex_transitive = trans.vertex_transitive
        report.face_transitive = trans.face_transitive
        report.self_dual = symmetry.is_self_dual(K)
        report.automorphisms = group.to_json_dict()
    return report
