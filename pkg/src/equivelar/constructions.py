"""Generators for the cyclic map families and surface patterns.

Two infinite families of self-dual equivelar maps are produced from one
integer offset sequence

    b(1), b(2), ... = 0, 1, 2, 5, 8, 17, 26, 53, ...

with b(2l-1) = 3^(l-1) - 1 and b(2l) = 2*3^(l-1) - 1.  For m >= 3 and
n >= 0:

* ``construct_odd(m, n)`` builds the {2m-1, 2m-1} map on
  N = 2*(3^(m-1) + 2n - 1) vertices whose face i is
  (i+b(1), ..., i+b(2m-3), i+b(2m-2)+n, i+b(2m-1)+2n) mod N;
* ``construct_even(m, n)`` builds the {2m, 2m} map on N = 3^m + 2n - 1
  vertices whose face i is (i+b(1), ..., i+b(2m-1), i+b(2m)+n) mod N.

For an odd prime p, a permutation of {1, ..., p-1} satisfying the three
conditions checked by :func:`verify_pp` yields the (p+1)-vertex pattern
``pattern_cycles``: the rim cycle (0, ..., p-1) plus, for each i, the
star cycle (u, i+pi(1), ..., i+pi(p-1)) mod p.  ``sigma_permutation``
and ``rho_permutation`` supply such permutations for p = 4k+3 and
p = 4l+1 respectively.

Permutations are stored 1-indexed as tuples with a 0 sentinel in slot 0,
so ``perm[i]`` is the image of i.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .complexes import CycleCollection, build_collection
from .errors import BadResidueClass, InvalidParameters, PPViolation

MAX_M = 8
MAX_P = 101


def b_sequence(k: int) -> list[int]:
    """First k terms of the offset sequence 0, 1, 2, 5, 8, 17, 26, 53, ..."""
    if k < 1:
        raise ValueError("k must be at least 1")
    out = []
    for idx in range(1, k + 1):
        if idx % 2:
            out.append(3 ** ((idx + 1) // 2 - 1) - 1)
        else:
            out.append(2 * 3 ** (idx // 2 - 1) - 1)
    return out


def _check_family_params(m: int, n: int, max_m: int) -> None:
    if m < 3:
        raise InvalidParameters(f"m must be at least 3, got {m}")
    if n < 0:
        raise InvalidParameters(f"n must be non-negative, got {n}")
    if m > max_m:
        raise InvalidParameters(
            f"m={m} exceeds the cap {max_m}; pass max_m to override"
        )


def construct_odd(m: int, n: int, max_m: int = MAX_M) -> CycleCollection:
    """The {2m-1, 2m-1} map on 2*(3^(m-1) + 2n - 1) vertices."""
    _check_family_params(m, n, max_m)
    size = 2 * (3 ** (m - 1) + 2 * n - 1)
    b = b_sequence(2 * m - 1)
    offsets = b[: 2 * m - 3] + [b[2 * m - 3] + n, b[2 * m - 2] + 2 * n]
    faces = [[(i + o) % size for o in offsets] for i in range(size)]
    return build_collection(faces, name=f"k{2 * m - 1}_n{size}")


def construct_even(m: int, n: int, max_m: int = MAX_M) -> CycleCollection:
    """The {2m, 2m} map on 3^m + 2n - 1 vertices."""
    _check_family_params(m, n, max_m)
    size = 3 ** m + 2 * n - 1
    b = b_sequence(2 * m)
    offsets = b[: 2 * m - 1] + [b[2 * m - 1] + n]
    faces = [[(i + o) % size for o in offsets] for i in range(size)]
    return build_collection(faces, name=f"k{2 * m}_n{size}")


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _check_odd_prime(p: int, max_p: int) -> None:
    if not is_prime(p) or p == 2:
        raise InvalidParameters(f"p must be an odd prime, got {p}")
    if p > max_p:
        raise InvalidParameters(f"p={p} exceeds the cap {max_p}; pass max_p to override")


def sigma_permutation(p: int, max_p: int = MAX_P) -> tuple[int, ...]:
    """For p = 4k+3 > 3: the involution (2, 4k+1)(4, 4k-1)...(2k, 2k+3),
    i.e. a <-> p-a for even a below p/2."""
    _check_odd_prime(p, max_p)
    if p % 4 != 3 or p == 3:
        raise BadResidueClass(f"sigma needs p = 4k+3 with k >= 1, got {p}")
    img = list(range(p))
    k = (p - 3) // 4
    for j in range(1, k + 1):
        a = 2 * j
        img[a], img[p - a] = p - a, a
    return tuple(img)


def rho_permutation(p: int, max_p: int = MAX_P) -> tuple[int, ...]:
    """For p = 4l+1: the involution (1, 4l)(3, 4l-2)...(2l-1, 2l+2),
    i.e. a <-> p-a for odd a below p/2."""
    _check_odd_prime(p, max_p)
    if p % 4 != 1:
        raise BadResidueClass(f"rho needs p = 4l+1 with l >= 1, got {p}")
    img = list(range(p))
    l = (p - 1) // 4
    for j in range(1, l + 1):
        a = 2 * j - 1
        img[a], img[p - a] = p - a, a
    return tuple(img)


def pp_permutation(p: int, max_p: int = MAX_P) -> tuple[int, ...]:
    """A pattern permutation for any odd prime: identity for p = 3,
    otherwise sigma or rho by residue class mod 4."""
    _check_odd_prime(p, max_p)
    if p == 3:
        return (0, 1, 2)
    return sigma_permutation(p, max_p) if p % 4 == 3 else rho_permutation(p, max_p)


@dataclass(frozen=True)
class PPReport:
    """Outcome of the three pattern conditions, with witnesses on failure.

    pp1: pi(i) + pi(p-i) = p for all i.
    pp2: pi fixes (p-1)/2.
    pp3: the consecutive differences pi(i+1) - pi(i), i = 1..(p-1)/2,
         hit each residue pair {j, p-j} exactly once.
    """

    pp1: bool
    pp2: bool
    pp3: bool
    pp1_witness: int | None = None
    pp3_witness: int | None = None

    def all_ok(self) -> bool:
        return self.pp1 and self.pp2 and self.pp3

    def __str__(self) -> str:
        parts = []
        for cond, ok, wit in (
            ("pp1", self.pp1, self.pp1_witness),
            ("pp2", self.pp2, None),
            ("pp3", self.pp3, self.pp3_witness),
        ):
            mark = "ok" if ok else "FAIL"
            if not ok and wit is not None:
                mark += f" (witness {wit})"
            parts.append(f"{cond}={mark}")
        return ", ".join(parts)


def verify_pp(perm: tuple[int, ...], p: int) -> PPReport:
    """Exhaustively check the three pattern conditions on a permutation
    of {1, ..., p-1} (1-indexed tuple with sentinel slot 0)."""
    if len(perm) != p or sorted(perm[1:]) != list(range(1, p)):
        raise InvalidParameters(f"not a permutation of 1..{p - 1}: {perm}")
    pp1, pp1_wit = True, None
    for i in range(1, p):
        if perm[i] + perm[p - i] != p:
            pp1, pp1_wit = False, i
            break
    pp2 = perm[(p - 1) // 2] == (p - 1) // 2
    half = (p - 1) // 2
    diffs = [(perm[i + 1] - perm[i]) % p for i in range(1, half + 1)]
    hits = Counter(min(d, p - d) for d in diffs)
    pp3, pp3_wit = True, None
    for j in range(1, half + 1):
        if hits.get(j, 0) != 1:
            pp3, pp3_wit = False, j
            break
    return PPReport(pp1, pp2, pp3, pp1_wit, pp3_wit)


def pattern_cycles(perm: tuple[int, ...], p: int, max_p: int = MAX_P) -> CycleCollection:
    """The (p+1)-vertex pattern of a permutation passing all three
    conditions: rim cycle (0..p-1) plus one star cycle through u per
    rotation i.  Raises PPViolation if a condition fails.

    For p = 3 the pattern is the boundary of the 3-simplex and is
    returned as the standard :func:`tetrahedron` fixture.
    """
    _check_odd_prime(p, max_p)
    report = verify_pp(perm, p)
    if not report.all_ok():
        raise PPViolation(report)
    if p == 3:
        return tetrahedron()
    faces: list[list[int | str]] = [list(range(p))]
    for i in range(p):
        faces.append(["u"] + [(i + perm[j]) % p for j in range(1, p)])
    return build_collection(faces, name=f"pattern_p{p}")


def pattern_collection(p: int, max_p: int = MAX_P) -> CycleCollection:
    """Pattern for an odd prime p using the built-in permutation."""
    return pattern_cycles(pp_permutation(p, max_p), p, max_p)


def tetrahedron() -> CycleCollection:
    """Boundary of the 3-simplex: 4 triangles on 4 vertices."""
    return build_collection(
        [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]], name="tetrahedron"
    )


def torus_pattern() -> CycleCollection:
    """Five 4-cycles of the complete graph on Z_4 and u whose face-cone
    complex triangulates the torus; not a polyhedral complex."""
    faces: list[list[int | str]] = [[0, 1, 2, 3]]
    for i in range(4):
        faces.append(["u", i, (i + 1) % 4, (i + 3) % 4])
    return build_collection(faces, name="torus_c4")
