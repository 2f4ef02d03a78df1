"""Exact algebra of finite trirings and their trispectra.

A triring is a graded ring R0 + R1 whose commutative even part acts on a
commutative odd part carrying a second ("local") product.  This package
constructs finite trirings from tables, enumerates their triideal
lattices, computes prime triideals, trinilradicals and radicals, and
equips the trispectrum with the extended Zariski topology, verifying
every structural claim by exhaustive search.
"""

from trispectra.commring import (
    FiniteCommRing,
    Ideal,
    enumerate_ideals,
    ideal_generated,
    is_prime_ideal,
    make_product,
    make_ring,
    make_table_ring,
    make_zn,
    nilradical_comm,
)
from trispectra.errors import (
    Axiom3Violation,
    AxiomViolation,
    DocumentError,
    EmptySet,
    LocalIdentityMismatch,
    NotACover,
    NotAHom,
    NotAHomomorphism,
    NotPrimeInput,
    OddOnly,
    ParseError,
    RangeError,
    SchemaError,
    SizeLimit,
    TriassocViolation,
    TrispectraError,
)
from trispectra.spectrum import (
    ClosedSet,
    Trispectrum,
    closure,
    dsharp,
    dsharp_even_element,
    dsharp_odd_element,
    enumerate_triideals,
    extend_odd_prime,
    is_irreducible,
    is_prime_triideal,
    quasicompact_subcover,
    specialization_pairs,
    trispectrum,
    vsharp,
)
from trispectra.triideal import (
    Triideal,
    TriringHom,
    analyze_hom,
    correspondence_check,
    is_subtriring,
    is_triideal,
    is_trinilpotent,
    make_triideal,
    mixed_product,
    quotient_triring,
    radical,
    triideal_intersection,
    triideal_sum,
    trinilradical,
    whole_triideal,
    zero_triideal,
)
from trispectra.triring import (
    TriElement,
    Triring,
    build_triring,
    commutative_as_triring,
    local_power,
    triquaternions_over,
    verify_axioms,
)

__version__ = "0.1.0"
