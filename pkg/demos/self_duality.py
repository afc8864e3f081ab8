"""Dual maps and self-duality witnesses.

The dual of a map swaps vertices with faces; a map is self dual when it
is isomorphic to its dual.  For the cyclic families the negation map
(vertex i to the face shifted by -i) is an explicit witness, which we
confirm alongside the search-based isomorphism test.
"""

from equivelar import (
    are_isomorphic,
    build_collection,
    construct_even,
    construct_odd,
    dual,
    f_vector,
    is_isomorphism,
    is_self_dual,
    validate_polyhedral,
)

for fam, size in ((construct_odd, 16), (construct_even, 26)):
    K = validate_polyhedral(fam(3, 0))
    D = dual(K)
    print(f"{K.name}: f-vector {f_vector(K).as_tuple()}, dual {f_vector(D).as_tuple()}")

    negation = tuple((size - i) % size for i in range(size))
    print("  negation witness valid:", is_isomorphism(K, D, negation))

    found = are_isomorphic(K, D)
    print("  search found witness:  ", found is not None)
    print("  self dual:             ", is_self_dual(K))
    print()

print("A map need not be self dual: the triangular prism has f-vector")
print("(6, 9, 5) while its dual has (5, 9, 6).")
prism = validate_polyhedral(build_collection(
    [[0, 1, 2], [3, 4, 5], [0, 1, 4, 3], [1, 2, 5, 4], [2, 0, 3, 5]], name="prism"
))
print("prism self dual:", is_self_dual(prism))
