"""Simplicial subdivisions, manifold checks, orientability, classification."""

import pytest

from equivelar import (
    InvalidCombination,
    NotAManifold,
    UnknownVertex,
    bar_complex,
    barycentric_subdivision,
    build_collection,
    classify_surface,
    construct_even,
    construct_odd,
    euler_characteristic,
    is_combinatorial_2_manifold,
    is_orientable,
    is_orientable_simplicial,
    is_polyhedral_map,
    link_of_vertex,
    manifold_defects,
    pattern_collection,
    rho_permutation,
    pattern_cycles,
    tetrahedron,
    torus_pattern,
    validate_polyhedral,
    vertex_rotation,
)

from conftest import pinched_faces, prism_faces


# ---------------------------------------------------------------- subdivisions

def test_barycentric_subdivision_tetrahedron():
    K = validate_polyhedral(tetrahedron())
    B = barycentric_subdivision(K)
    assert B.vertex_count == 4 + 6 + 4
    assert B.triangle_count == 24  # one per flag: 4 faces x 3 edges x 2
    assert B.euler_characteristic() == 2


def test_barycentric_subdivision_single_triangle():
    K = validate_polyhedral(build_collection([[0, 1, 2]]))
    B = barycentric_subdivision(K)
    assert B.vertex_count == 7
    assert B.triangle_count == 6


def test_barycentric_euler_matches_complex():
    for coll in (tetrahedron(), construct_odd(3, 0), build_collection(prism_faces())):
        K = validate_polyhedral(coll)
        assert barycentric_subdivision(K).euler_characteristic() == euler_characteristic(K)


def test_bar_complex_torus_counts():
    X = bar_complex(torus_pattern())
    assert X.vertex_count == 10
    assert X.edge_count() == 30
    assert X.triangle_count == 20
    assert X.euler_characteristic() == 0


def test_bar_complex_tetrahedron():
    X = bar_complex(tetrahedron())
    assert X.vertex_count == 8
    assert X.triangle_count == 12
    assert X.euler_characteristic() == 2


def test_bar_complex_pattern_euler():
    for p in (5, 7, 11, 13):
        X = bar_complex(pattern_collection(p))
        assert X.euler_characteristic() == (p + 1) * (4 - p) // 2


# ---------------------------------------------------------------- links

def test_link_of_original_vertex_in_subdivision():
    K = validate_polyhedral(tetrahedron())
    B = barycentric_subdivision(K)
    link = link_of_vertex(B, ("v", 0))
    assert len(link.nodes) == 6
    assert link.is_single_cycle()


def test_link_of_u_in_rho5_pattern():
    c = pattern_cycles(rho_permutation(5), 5)
    X = bar_complex(c)
    u = c.labels.index("u")
    link = link_of_vertex(X, ("v", u))
    # the cycle alternates the five star face-nodes with the five residues
    assert len(link.nodes) == 10
    assert link.is_single_cycle()
    assert sum(1 for tag, _ in link.nodes if tag == "f") == 5


def test_link_pinched_vertex_not_a_cycle():
    c = build_collection(pinched_faces())
    X = bar_complex(c)
    link = link_of_vertex(X, ("v", 0))
    assert not link.is_single_cycle()


def test_link_unknown_vertex():
    X = bar_complex(tetrahedron())
    with pytest.raises(UnknownVertex):
        link_of_vertex(X, ("v", 99))


# ---------------------------------------------------------------- manifold checks

def test_manifold_checks():
    assert is_combinatorial_2_manifold(bar_complex(pattern_collection(7)))
    assert is_combinatorial_2_manifold(bar_complex(torus_pattern()))
    X = bar_complex(build_collection(pinched_faces()))
    assert not is_combinatorial_2_manifold(X)
    assert ("v", 0) in manifold_defects(X)


# ---------------------------------------------------------------- orientability

def test_orientability_polygonal():
    assert is_orientable(validate_polyhedral(tetrahedron()))


def test_orientability_cross_check_m516():
    K = validate_polyhedral(construct_odd(3, 0))
    assert is_orientable(K) == is_orientable_simplicial(barycentric_subdivision(K))


def test_orientability_cross_check_all_small_maps():
    for coll in (tetrahedron(), build_collection(prism_faces()), construct_odd(3, 0),
                 construct_even(3, 0), construct_odd(3, 1)):
        K = validate_polyhedral(coll)
        assert is_polyhedral_map(K)
        assert is_orientable(K) == is_orientable_simplicial(barycentric_subdivision(K))


def test_orientability_simplicial():
    assert is_orientable_simplicial(bar_complex(torus_pattern()))
    assert not is_orientable_simplicial(bar_complex(pattern_collection(7)))
    assert not is_orientable_simplicial(bar_complex(pattern_collection(5)))
    K = validate_polyhedral(tetrahedron())
    assert is_orientable_simplicial(barycentric_subdivision(K))


def test_orientability_needs_manifold():
    with pytest.raises(NotAManifold):
        is_orientable(validate_polyhedral(build_collection([[0, 1, 2]])))
    with pytest.raises(NotAManifold):
        is_orientable_simplicial(bar_complex(build_collection([[0, 1, 2]])))


# ---------------------------------------------------------------- classification

def test_classify_surface():
    assert classify_surface(2, True).name == "sphere"
    assert classify_surface(0, True).name == "torus"
    assert classify_surface(-2, True).name == "orientable genus 2"
    assert classify_surface(-3, False).name == "non-orientable genus 5"
    assert classify_surface(1, False).name == "non-orientable genus 1"
    assert classify_surface(0, False).name == "non-orientable genus 2"


def test_classify_surface_rejects_impossible():
    with pytest.raises(InvalidCombination):
        classify_surface(-3, True)
    with pytest.raises(InvalidCombination):
        classify_surface(4, True)
    with pytest.raises(InvalidCombination):
        classify_surface(2, False)


# ---------------------------------------------------------------- three-way equivalence

def test_rotation_bar_subdivision_equivalence_on_small_fixtures():
    fixtures = [
        tetrahedron(),
        torus_pattern(),
        build_collection(prism_faces()),
        build_collection(pinched_faces()),
        build_collection([[0, 1, 2, 3]]),
        pattern_collection(5),
    ]
    for c in fixtures:
        rotation_ok = all(
            vertex_rotation(c, v) is not None for v in range(c.vertex_count)
        )
        assert rotation_ok == is_combinatorial_2_manifold(bar_complex(c))


def test_simplicial_json_schema():
    X = bar_complex(torus_pattern())
    d = X.to_json_dict()
    assert set(d) == {"vertices", "triangles"}
    assert all(set(v) == {"tag", "ref"} for v in d["vertices"])
    assert {v["tag"] for v in d["vertices"]} == {"v", "f"}
    assert all(len(t) == 3 and t == sorted(t) for t in d["triangles"])
    assert d["triangles"] == sorted(d["triangles"])
    B = barycentric_subdivision(validate_polyhedral(tetrahedron()))
    tags = {v["tag"] for v in B.to_json_dict()["vertices"]}
    assert tags == {"v", "e", "f"}


def test_manifold_implies_every_edge_in_two_triangles():
    from collections import Counter
    for X in (bar_complex(torus_pattern()), bar_complex(pattern_collection(7)),
              barycentric_subdivision(validate_polyhedral(tetrahedron()))):
        assert is_combinatorial_2_manifold(X)
        counts = Counter()
        for t in X.sorted_triangles():
            a, b, c = t
            counts.update([frozenset((a, b)), frozenset((a, c)), frozenset((b, c))])
        assert set(counts.values()) == {2}
