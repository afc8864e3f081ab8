"""Build the two cyclic map families and verify their basic structure.

Each family is indexed by (m, n) with m >= 3, n >= 0.  The odd family
gives {2m-1, 2m-1} maps on 2*(3^(m-1) + 2n - 1) vertices, the even
family {2m, 2m} maps on 3^m + 2n - 1 vertices.  Every instance below is
checked to be a connected polyhedral 2-manifold with the predicted
f-vector and Euler characteristic.
"""

from equivelar import (
    b_sequence,
    construct_even,
    construct_odd,
    equivelar_type,
    euler_characteristic,
    f_vector,
    is_polyhedral_map,
    is_weakly_neighbourly,
    validate_polyhedral,
)

print("offset sequence:", b_sequence(8))
print()
print(f"{'name':<10} {'type':<8} {'f-vector':<16} {'chi':>6}  map   wnp")

for m in (3, 4, 5):
    for n in (0, 1):
        for fam in (construct_odd, construct_even):
            K = validate_polyhedral(fam(m, n))
            fv = f_vector(K)
            et = equivelar_type(K)
            print(
                f"{K.name:<10} {str(et):<8} {str(fv.as_tuple()):<16} "
                f"{euler_characteristic(K):>6}  {is_polyhedral_map(K)!s:<5} "
                f"{is_weakly_neighbourly(K)}"
            )

print()
print("The 16-vertex {5,5} map is weakly neighbourly: every vertex pair")
print("shares a face, which forces the minimum vertex count (p-1)^2.")
