"""Flag-level symmetry: automorphism groups, transitivity, regularity.

A flag is an incident (vertex, edge, face) triple.  Automorphisms act
freely on flags, so the group order never exceeds the flag count, with
equality exactly for combinatorially regular maps.  The cyclic maps are
vertex- and face-transitive but stop short of regularity; the platonic
fixtures reach it.
"""

from equivelar import (
    automorphism_group,
    build_collection,
    construct_even,
    construct_odd,
    flag_graph,
    is_combinatorially_regular,
    tetrahedron,
    transitivity,
    validate_polyhedral,
)

fixtures = [
    validate_polyhedral(tetrahedron()),
    validate_polyhedral(build_collection(
        [[0, 1, 2, 3], [4, 5, 6, 7], [0, 1, 5, 4], [1, 2, 6, 5],
         [2, 3, 7, 6], [3, 0, 4, 7]], name="cube")),
    validate_polyhedral(construct_odd(3, 0)),
    validate_polyhedral(construct_even(3, 0)),
    validate_polyhedral(construct_odd(4, 0)),
]

print(f"{'name':<12} {'flags':>6} {'order':>6}  regular  v-trans  f-trans  generators")
for K in fixtures:
    group = automorphism_group(K)
    trans = transitivity(K)
    print(
        f"{K.name:<12} {len(flag_graph(K)):>6} {group.order:>6}  "
        f"{is_combinatorially_regular(K)!s:<7}  {trans.vertex_transitive!s:<7}  "
        f"{trans.face_transitive!s:<7}  {len(group.generators)}"
    )

print()
print("Vertex orbits of the 26-vertex {6,6} map (a single orbit, as the")
print("shift i -> i+1 already acts transitively):")
print(automorphism_group(fixtures[3]).vertex_orbits)
