"""Prime-indexed surface patterns from permutations.

For an odd prime p, a permutation of {1, ..., p-1} passing the three
conditions (pp1-pp3) yields p+1 cycles of the complete graph on p+1
vertices whose face-cone complex triangulates a closed surface: a
(p+1)-vertex pattern with p edges per face and degree-p vertices.  The
pattern is not a polyhedral complex (faces overlap too much), but its
surface is genuine and, for p > 3, never orientable.
"""

from equivelar import (
    analyze,
    bar_complex,
    collection_f_vector,
    is_combinatorial_2_manifold,
    is_orientable_simplicial,
    pattern_collection,
    pp_permutation,
    torus_pattern,
    verify_pp,
)

print(f"{'p':>3} {'permutation':<28} {'chi':>5}  manifold  surface")
for p in (5, 7, 11, 13):
    perm = pp_permutation(p)
    assert verify_pp(perm, p).all_ok()
    c = pattern_collection(p)
    bar = bar_complex(c)
    report = analyze(c)
    print(
        f"{p:>3} {str(perm[1:]):<28} {report.euler:>5}  "
        f"{is_combinatorial_2_manifold(bar)!s:<8}  {report.surface.name}"
    )

print()
print("chi follows (p+1)(4-p)/2, so the genus grows quadratically in p.")
print()

print("The square analogue on Z_4 and u triangulates the torus instead:")
c4 = torus_pattern()
report = analyze(c4)
print(f"  {c4.name}: f-vector {collection_f_vector(c4).as_tuple()}, "
      f"chi {report.euler}, surface {report.surface.name}")
print("  orientable:", is_orientable_simplicial(bar_complex(c4)))
