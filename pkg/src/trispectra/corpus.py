"""The standard corpus of small trirings used by the verification suites.

Every entry is small enough that the exhaustive property checks finish
quickly even on the pure-Python kernel backend.
"""

from __future__ import annotations

from trispectra.commring import make_product, make_zn
from trispectra.triring import Triring, build_triring, commutative_as_triring, triquaternions_over


def _mod_map(n: int, m: int) -> list[int]:
    """Reduction Z_n -> Z_m (requires m | n to be a ring homomorphism)."""
    return [x % m for x in range(n)]


def z4_z2() -> Triring:
    return build_triring(make_zn(4), make_zn(2), _mod_map(4, 2), _mod_map(4, 2),
                         name="z4-z2")


def standard_corpus() -> list[Triring]:
    """Twelve validated trirings covering the shapes the suites need:

    mixed parts tied by modular reduction, identity-tied parts,
    triquaternions over two bases, plain commutative rings, and
    product-ring even parts.
    """
    id4 = list(range(4))
    id3 = list(range(3))
    z2xz2 = make_product([make_zn(2), make_zn(2)])
    proj1 = [0, 0, 1, 1]  # (a, b) -> a under row-major flattening
    return [
        z4_z2(),
        build_triring(make_zn(8), make_zn(2), _mod_map(8, 2), _mod_map(8, 2),
                      name="z8-z2"),
        build_triring(make_zn(6), make_zn(3), _mod_map(6, 3), _mod_map(6, 3),
                      name="z6-z3"),
        build_triring(make_zn(9), make_zn(3), _mod_map(9, 3), _mod_map(9, 3),
                      name="z9-z3"),
        build_triring(make_zn(4), make_zn(4), id4, id4, name="z4-z4"),
        build_triring(make_zn(3), make_zn(3), id3, id3, name="z3-z3"),
        triquaternions_over(make_zn(2)),
        triquaternions_over(make_zn(3)),
        commutative_as_triring(make_zn(6)),
        commutative_as_triring(make_zn(12)),
        build_triring(z2xz2, make_zn(2), proj1, proj1, name="z2xz2-z2"),
        commutative_as_triring(make_product([make_zn(2), make_zn(4)])),
    ]


def corpus_names() -> list[str]:
    return [r.name for r in standard_corpus()]
