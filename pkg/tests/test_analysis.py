"""The aggregated analysis report."""

from equivelar import (
    analyze,
    build_collection,
    construct_even,
    construct_odd,
    pattern_collection,
    tetrahedron,
    torus_pattern,
)

from conftest import pinched_faces


def test_tetrahedron_report():
    report = analyze(tetrahedron(), full=True)
    assert report.f_vector == (4, 6, 4)
    assert report.euler == 2
    assert report.equivelar_type == (3, 3)
    assert report.polyhedral_complex and report.polyhedral_map
    assert report.orientable is True
    assert report.surface.name == "sphere"
    assert report.combinatorially_regular is True
    assert report.self_dual is True
    assert report.weakly_neighbourly is True


def test_m516_full_report():
    report = analyze(construct_odd(3, 0), full=True)
    assert report.euler == -8
    assert report.equivelar_type == (5, 5)
    assert report.weakly_neighbourly is True
    assert report.self_dual is True
    assert report.combinatorially_regular is False
    assert report.vertex_transitive and report.face_transitive
    assert report.flags == 160
    assert report.automorphism_order == 16


def test_m626_report():
    report = analyze(construct_even(3, 0))
    assert report.euler == -26
    assert report.equivelar_type == (6, 6)
    assert report.weakly_neighbourly is False
    assert report.diagonal_count == 234
    # symmetry fields stay unset without full=True
    assert report.automorphism_order is None
    assert report.self_dual is None


def test_pattern_report_not_polyhedral_but_surface():
    report = analyze(pattern_collection(5))
    assert report.f_vector == (6, 15, 6)
    assert report.euler == -3
    assert not report.polyhedral_complex
    assert not report.polyhedral_map
    assert report.non_singular_pattern
    assert report.orientable is False
    assert report.surface.name == "non-orientable genus 5"
    assert report.intersection_witness is not None


def test_torus_pattern_report():
    report = analyze(torus_pattern())
    assert report.euler == 0
    assert report.non_singular_pattern
    assert report.orientable is True
    assert report.surface.name == "torus"


def test_pinched_report_no_surface_fields():
    report = analyze(build_collection(pinched_faces()), full=True)
    assert report.polyhedral_complex
    assert not report.polyhedral_map
    assert not report.non_singular_pattern
    assert report.orientable is None
    assert report.surface is None
    assert report.automorphism_order is None
    assert report.self_dual is None


def test_json_dict_drops_unset_fields():
    d = analyze(build_collection(pinched_faces())).to_json_dict()
    assert "orientable" not in d
    assert "surface" not in d
    assert "self_dual" not in d
    d = analyze(torus_pattern()).to_json_dict()
    assert d["surface"]["name"] == "torus"


def test_report_lines_render():
    lines = analyze(tetrahedron()).lines()
    assert any(line.startswith("name") for line in lines)
    assert any("sphere" in line for line in lines)


def test_full_report_includes_automorphism_schema():
    d = analyze(tetrahedron(), full=True).to_json_dict()
    auto = d["automorphisms"]
    assert set(auto) == {"order", "flags", "regular", "vertex_transitive",
                         "face_transitive", "generators"}
    assert auto["order"] == 24 and auto["flags"] == 24 and auto["regular"] is True
    assert all(sorted(g) == list(range(4)) for g in auto["generators"])
