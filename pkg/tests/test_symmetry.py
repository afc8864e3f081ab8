"""Flag graphs, automorphisms, duals, isomorphism, self-duality."""

from itertools import permutations

import pytest

from equivelar import (
    Flag,
    NotAPolyhedralMap,
    are_isomorphic,
    automorphism_group,
    build_collection,
    canonical_cycle,
    construct_even,
    construct_odd,
    dual,
    f_vector,
    flag_graph,
    is_combinatorially_regular,
    is_isomorphism,
    is_self_dual,
    propagate,
    tetrahedron,
    torus_pattern,
    transitivity,
    validate_polyhedral,
)

from conftest import cube_faces, prism_faces, square_pyramid_faces


def brute_force_automorphism_count(K):
    """Oracle: count all vertex bijections carrying the face set to itself."""
    faces = set(K.cycles)
    n = K.vertex_count
    count = 0
    for perm in permutations(range(n)):
        if all(canonical_cycle(tuple(perm[v] for v in cyc)) in faces for cyc in K.cycles):
            count += 1
    return count


# ---------------------------------------------------------------- flag graphs

def test_flag_counts():
    assert len(flag_graph(validate_polyhedral(tetrahedron()))) == 24
    assert len(flag_graph(validate_polyhedral(construct_odd(3, 0)))) == 160
    assert len(flag_graph(validate_polyhedral(construct_even(3, 0)))) == 312


def test_flag_involutions_fixed_point_free():
    for coll in (tetrahedron(), build_collection(prism_faces()), construct_odd(3, 0)):
        fg = flag_graph(validate_polyhedral(coll))
        for s in (fg.s0, fg.s1, fg.s2):
            assert all(s[s[i]] == i for i in range(len(fg)))
            assert all(s[i] != i for i in range(len(fg)))


def test_flag_graph_requires_map():
    with pytest.raises(NotAPolyhedralMap):
        flag_graph(validate_polyhedral(build_collection([[0, 1, 2, 3]])))


# ---------------------------------------------------------------- propagation

def test_propagate_identity():
    K = validate_polyhedral(tetrahedron())
    f = flag_graph(K).flags[0]
    assert propagate(K, K, f, f) == tuple(range(4))


def test_propagate_recovers_shift():
    K = validate_polyhedral(construct_odd(3, 0))
    vmap = propagate(K, K, Flag(0, (0, 1), 0), Flag(1, (1, 2), 1))
    assert vmap == tuple((i + 1) % 16 for i in range(16))


def test_propagate_obstructed_flag_pair():
    # Both flags sit on face 11 = (11,12,13,0,3) at vertex 0; no
    # automorphism carries one to the other.
    K = validate_polyhedral(construct_odd(3, 0))
    assert propagate(K, K, Flag(0, (0, 3), 11), Flag(0, (0, 13), 11)) is None


# ---------------------------------------------------------------- automorphisms

def test_tetrahedron_group_order():
    K = validate_polyhedral(tetrahedron())
    g = automorphism_group(K)
    assert g.order == 24 == brute_force_automorphism_count(K)
    assert g.order == g.flag_count
    assert is_combinatorially_regular(K)


def test_prism_group_matches_brute_force(prism):
    g = automorphism_group(prism)
    assert g.order == brute_force_automorphism_count(prism)


def test_cube_group_matches_brute_force(cube):
    g = automorphism_group(cube)
    assert g.order == 48 == brute_force_automorphism_count(cube)
    assert is_combinatorially_regular(cube)


def test_generators_span_group():
    K = validate_polyhedral(construct_odd(3, 0))
    g = automorphism_group(K)
    span = {tuple(range(K.vertex_count))}
    frontier = list(span)
    gens = list(g.generators)
    while frontier:
        cur = frontier.pop()
        for gen in gens:
            nxt = tuple(gen[x] for x in cur)
            if nxt not in span:
                span.add(nxt)
                frontier.append(nxt)
    assert len(span) == g.order
    assert set(g.elements) == span


def test_m516_group():
    K = validate_polyhedral(construct_odd(3, 0))
    g = automorphism_group(K)
    assert g.order % 16 == 0
    assert len(g.vertex_orbits) == 1
    assert not is_combinatorially_regular(K)


def test_m626_group():
    K = validate_polyhedral(construct_even(3, 0))
    g = automorphism_group(K)
    assert g.order % 26 == 0
    assert g.order < g.flag_count == 312


def test_non_regularity_small_range():
    for m in (3, 4):
        for n in (0, 1):
            for fam in (construct_odd, construct_even):
                K = validate_polyhedral(fam(m, n))
                assert not is_combinatorially_regular(K)


# ---------------------------------------------------------------- transitivity

def test_m752_transitive():
    K = validate_polyhedral(construct_odd(4, 0))
    assert f_vector(K).f0 == 52
    assert transitivity(K) == (True, True)


def test_tetrahedron_transitive():
    assert transitivity(validate_polyhedral(tetrahedron())) == (True, True)


def test_prism_mixed_faces_not_face_transitive(prism):
    t = transitivity(prism)
    assert t.vertex_transitive
    assert not t.face_transitive


def test_square_pyramid_not_transitive(square_pyramid):
    t = transitivity(square_pyramid)
    assert not t.vertex_transitive
    assert not t.face_transitive


# ---------------------------------------------------------------- dual

def test_dual_tetrahedron():
    K = validate_polyhedral(tetrahedron())
    D = dual(K)
    assert f_vector(D).as_tuple() == (4, 6, 4)
    assert are_isomorphic(K, D) is not None


def test_dual_m516_f_vector():
    K = validate_polyhedral(construct_odd(3, 0))
    assert f_vector(dual(K)).as_tuple() == (16, 40, 16)


def test_double_dual_isomorphic():
    for coll in (tetrahedron(), build_collection(prism_faces()), construct_even(3, 0)):
        K = validate_polyhedral(coll)
        assert are_isomorphic(dual(dual(K)), K) is not None


def test_dual_requires_map():
    with pytest.raises(NotAPolyhedralMap):
        dual(validate_polyhedral(build_collection([[0, 1, 2]])))


def test_dual_prism_f_vector(prism):
    assert f_vector(dual(prism)).as_tuple() == (5, 9, 6)


# ---------------------------------------------------------------- isomorphism

def test_relabeled_tetrahedron_isomorphic():
    K = validate_polyhedral(tetrahedron())
    L = validate_polyhedral(build_collection(
        [[10, 20, 30], [10, 20, 40], [10, 30, 40], [20, 30, 40]]
    ))
    vmap = are_isomorphic(K, L)
    assert vmap is not None
    assert is_isomorphism(K, L, vmap)


def test_m516_isomorphic_to_dual_with_negation_witness():
    K = validate_polyhedral(construct_odd(3, 0))
    D = dual(K)
    vmap = are_isomorphic(K, D)
    assert vmap is not None
    assert is_isomorphism(K, D, vmap)
    negation = tuple((16 - i) % 16 for i in range(16))
    assert is_isomorphism(K, D, negation)


def test_even_family_negation_witness():
    K = validate_polyhedral(construct_even(3, 0))
    negation = tuple((26 - i) % 26 for i in range(26))
    assert is_isomorphism(K, dual(K), negation)


def test_different_f_vectors_not_isomorphic():
    K = validate_polyhedral(construct_odd(3, 0))
    L = validate_polyhedral(construct_even(3, 0))
    assert are_isomorphic(K, L) is None


def test_isomorphism_symmetric_and_invariant_under_relabeling():
    import random
    rng = random.Random(3)
    K = validate_polyhedral(build_collection(prism_faces()))
    perm = list(range(6))
    rng.shuffle(perm)
    relabeled = validate_polyhedral(build_collection(
        [[perm[v] for v in face] for face in prism_faces()]
    ))
    fwd = are_isomorphic(K, relabeled)
    back = are_isomorphic(relabeled, K)
    assert fwd is not None and back is not None
    inv = tuple(fwd.index(i) for i in range(6))
    assert is_isomorphism(relabeled, K, inv)


def test_backtracking_route_for_patterns():
    a = torus_pattern()
    b = build_collection(
        [[3, 2, 1, 0]] + [["w", i, (i + 1) % 4, (i + 3) % 4] for i in range(4)]
    )
    vmap = are_isomorphic(a, b)
    assert vmap is not None
    assert is_isomorphism(a, b, vmap)
    assert are_isomorphic(a, tetrahedron()) is None


# ---------------------------------------------------------------- self-duality

def test_self_dual_families():
    for m, n in ((3, 0), (3, 1), (3, 2), (4, 0), (4, 1), (4, 2)):
        assert is_self_dual(validate_polyhedral(construct_odd(m, n)))
        assert is_self_dual(validate_polyhedral(construct_even(m, n)))


def test_prism_not_self_dual(prism):
    assert not is_self_dual(prism)
