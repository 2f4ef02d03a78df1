"""Structural verification suites run by the command line.

Each check re-derives one claim about trirings from scratch on the given
structure and reports pass/fail with a witness.  Checks only read the
shared context, so a worker pool may evaluate them in any order; the
report is always assembled in registry order.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from trispectra.commring import (
    DEFAULT_MAX_IDEALS,
    DEFAULT_MAX_SIZE,
    FiniteCommRing,
    Ideal,
    enumerate_ideals,
    has_zero_divisors,
    ideal_generated,
    is_prime_ideal,
    nilradical_comm,
    quotient_ring,
)
from trispectra.documents import TriringDocument, document_to_triring
from trispectra.errors import AxiomViolation, NotPrimeInput, TrispectraError
from trispectra.spectrum import (
    Trispectrum,
    closure,
    dsharp,
    enumerate_triideals,
    extend_odd_prime,
    is_irreducible,
    is_prime_triideal,
    odd_prime_bimodule_diagnostic,
    quasicompact_subcover,
    specialization_pairs,
    trispectrum,
    vsharp,
)
from trispectra.triideal import (
    Triideal,
    correspondence_check,
    is_triideal,
    is_trinilpotent,
    mixed_product,
    ordinary_nilradical_members,
    principal_even_triideal,
    principal_odd_triideal,
    quotient_triring,
    radical,
    triideal_intersection,
    triideal_sum,
    trinilradical,
    whole_triideal,
    zero_triideal,
)
from trispectra.triring import TriElement, Triring, local_power, verify_axioms

SUITE_NAMES = ("axioms", "ideals", "spectrum", "nilradical", "topology", "all")


@dataclass
class SuiteContext:
    ring: Triring
    max_ideals: int = DEFAULT_MAX_IDEALS
    triideals: list[Triideal] = field(default_factory=list)
    spectrum: Trispectrum | None = None
    radicals: dict = field(default_factory=dict)
    principal_even: dict = field(default_factory=dict)
    principal_odd: dict = field(default_factory=dict)

    def prepare(self, deep: bool) -> None:
        """Precompute shared data so checks stay read-only afterwards."""
        if not deep:
            return
        self.triideals = enumerate_triideals(self.ring, max_ideals=self.max_ideals)
        self.spectrum = trispectrum(self.ring, max_ideals=self.max_ideals)
        for t in self.triideals:
            self.radicals[t.key()] = radical(t)
        for x0 in self.ring.even.elements:
            self.principal_even[x0] = principal_even_triideal(self.ring, x0)
        for x1 in self.ring.odd.elements:
            self.principal_odd[x1] = principal_odd_triideal(self.ring, x1)

    def radical_of(self, t: Triideal) -> Triideal:
        return self.radicals[t.key()]


def _fmt_pair(t: Triideal) -> str:
    e = ",".join(map(str, t.even_ideal.members))
    o = ",".join(map(str, t.odd_ideal.members))
    return f"({{{e}}},{{{o}}})"


# -- axioms ------------------------------------------------------------------

def check_axiom_report(ctx: SuiteContext):
    report = verify_axioms(ctx.ring)
    for entry in report.failures():
        return False, f"{entry.law} fails at {entry.witness!r}"
    return True, f"{len(report.entries)} laws verified exhaustively"


def check_structure_maps(ctx: SuiteContext):
    ring = ctx.ring
    even, odd = ring.even, ring.odd
    for a in even.elements:
        for b in even.elements:
            for tab, label in ((ring.lam, "lambda"), (ring.rho, "rho")):
                if int(tab[even.add(a, b)]) != odd.add(int(tab[a]), int(tab[b])):
                    return False, f"{label} not additive at ({a},{b})"
                if int(tab[even.mul(a, b)]) != odd.mul(int(tab[a]), int(tab[b])):
                    return False, f"{label} not multiplicative at ({a},{b})"
    if int(ring.lam[even.one]) != odd.one or int(ring.rho[even.one]) != odd.one:
        return False, "structure maps miss the local identity"
    return True, ""


def check_derived_representation(ctx: SuiteContext):
    ring = ctx.ring
    for e in ring.even.elements:
        le = TriElement(0, int(ring.lam[e]))
        re = TriElement(0, int(ring.rho[e]))
        ev = TriElement(e, 0)
        for o in ring.odd.elements:
            od = TriElement(0, o)
            if ring.mul(ev, od) != ring.sharp(le, od):
                return False, f"left action disagrees at ({e},{o})"
            if ring.mul(od, ev) != ring.sharp(od, re):
                return False, f"right action disagrees at ({e},{o})"
    return True, ""


def check_product_sharp_compat(ctx: SuiteContext):
    from trispectra import kernels

    ring = ctx.ring
    w = kernels.sharp_product_compat_failure(
        ring.even.mul_table, ring.odd.add_table, ring.odd.mul_table,
        ring.lam, ring.rho)
    if w is not None:
        return False, f"{w[0]} fails at {w[1:]!r}"
    return True, "all mixed-product factorizations hold"


def check_local_power_compat(ctx: SuiteContext):
    ring = ctx.ring
    bound = max(6, ring.odd.size)
    for x in ring.elements():
        for a in ring.odd.elements:
            alpha = TriElement(0, a)
            xa = ring.mul(x, alpha)
            ax = ring.mul(alpha, x)
            for m in range(1, bound + 1):
                xm = ring.power(x, m)
                am = local_power(ring, alpha, m)
                if local_power(ring, xa, m) != ring.mul(xm, am):
                    return False, f"left power law fails at x={x!r} a={a} m={m}"
                if local_power(ring, ax, m) != ring.mul(am, xm):
                    return False, f"right power law fails at x={x!r} a={a} m={m}"
    return True, f"powers up to {bound} verified"


# -- ideals ------------------------------------------------------------------

def _brute_force_ideals(ring: FiniteCommRing) -> list[tuple[int, ...]]:
    """Independent oracle: filter all subsets containing 0."""
    n = ring.size
    add, mul = ring.add_table, ring.mul_table
    out = []
    for mask in range(0, 1 << (n - 1)):
        members = [0] + [i + 1 for i in range(n - 1) if mask >> i & 1]
        mset = set(members)
        ok = all(int(add[a, b]) in mset for a in members for b in members)
        ok = ok and all(int(mul[r, a]) in mset for a in members for r in range(n))
        if ok:
            out.append(tuple(members))
    return sorted(out, key=lambda m: (len(m), m))


def check_component_ideal_oracle(ctx: SuiteContext):
    details = []
    for label, ring in (("even", ctx.ring.even), ("odd", ctx.ring.odd)):
        if ring.size > 16:
            details.append(f"{label} skipped (size {ring.size})")
            continue
        fast = [i.members for i in enumerate_ideals(ring)]
        slow = _brute_force_ideals(ring)
        if fast != slow:
            return False, f"{label} enumeration disagrees with the subset filter"
        details.append(f"{label} {len(fast)} ideals")
    return True, "; ".join(details)


def check_generation_idempotent(ctx: SuiteContext):
    for ring in (ctx.ring.even, ctx.ring.odd):
        for ideal in enumerate_ideals(ring):
            if ideal_generated(ring, ideal.members) != ideal:
                return False, f"regeneration changed {ideal!r}"
    return True, ""


def check_prime_quotient_agreement(ctx: SuiteContext):
    for ring in (ctx.ring.even, ctx.ring.odd):
        for ideal in enumerate_ideals(ring):
            q, _ = quotient_ring(ring, ideal)
            via_quotient = q.size > 1 and not has_zero_divisors(q)
            if is_prime_ideal(ring, ideal) != via_quotient:
                return False, f"primality disagrees on {ideal!r} of {ring.descriptor}"
    return True, ""


def check_comm_nilradical(ctx: SuiteContext):
    for ring in (ctx.ring.even, ctx.ring.odd):
        primes = [i for i in enumerate_ideals(ring) if is_prime_ideal(ring, i)]
        meet = set(ring.elements)
        for p in primes:
            meet &= p.member_set
        if set(nilradical_comm(ring).members) != meet:
            return False, f"nilradical of {ring.descriptor} is not the prime intersection"
    return True, ""


def check_pair_characterization(ctx: SuiteContext):
    ring = ctx.ring
    odd = ring.odd
    for i0 in enumerate_ideals(ring.even, max_ideals=ctx.max_ideals):
        for i1 in enumerate_ideals(odd, max_ideals=ctx.max_ideals):
            literal = is_triideal(ring, i0, i1)
            chars = all(
                odd.mul(int(ring.lam[e]), o) in i1.member_set
                and odd.mul(o, int(ring.rho[e])) in i1.member_set
                for e in i0.members for o in odd.elements)
            if literal != chars:
                return False, f"characterization disagrees at ({i0!r},{i1!r})"
    return True, ""


def check_principal_triideals(ctx: SuiteContext):
    ring = ctx.ring
    for x0 in ring.even.elements:
        t = ctx.principal_even[x0]
        if not is_triideal(ring, t.even_ideal, t.odd_ideal):
            return False, f"principal even triideal at {x0} fails"
    for x1 in ring.odd.elements:
        t = ctx.principal_odd[x1]
        if t.even_ideal.members != (0,):
            return False, f"principal odd triideal at {x1} has even part"
        if not is_triideal(ring, t.even_ideal, t.odd_ideal):
            return False, f"principal odd triideal at {x1} fails"
    return True, ""


def check_lattice_operations(ctx: SuiteContext):
    ring = ctx.ring
    zero = zero_triideal(ring)
    whole = whole_triideal(ring)
    for i in ctx.triideals:
        if triideal_sum(i, zero) != i or triideal_sum(i, whole) != whole:
            return False, f"sum units fail at {_fmt_pair(i)}"
        if triideal_intersection(i, whole) != i:
            return False, f"intersection unit fails at {_fmt_pair(i)}"
        if mixed_product(whole, i) != i or mixed_product(i, whole) != i:
            return False, f"mixed product identity fails at {_fmt_pair(i)}"
        if not mixed_product(i, zero).is_zero:
            return False, f"mixed product zero fails at {_fmt_pair(i)}"
        for j in ctx.triideals:
            s = triideal_sum(i, j)
            m = triideal_intersection(i, j)
            p = mixed_product(i, j)
            sum_even = {ring.even.add(a, b)
                        for a in i.even_ideal.members for b in j.even_ideal.members}
            sum_odd = {ring.odd.add(a, b)
                       for a in i.odd_ideal.members for b in j.odd_ideal.members}
            if s.even_ideal.member_set != sum_even or s.odd_ideal.member_set != sum_odd:
                return False, f"sum is not componentwise at {_fmt_pair(i)},{_fmt_pair(j)}"
            if m.even_ideal.member_set != i.even_ideal.member_set & j.even_ideal.member_set \
                    or m.odd_ideal.member_set != i.odd_ideal.member_set & j.odd_ideal.member_set:
                return False, f"intersection is not componentwise at {_fmt_pair(i)},{_fmt_pair(j)}"
            if not (p <= m):
                return False, f"mixed product escapes the intersection at {_fmt_pair(i)},{_fmt_pair(j)}"
    return True, f"{len(ctx.triideals)} triideals"


def check_quotient_natural_map(ctx: SuiteContext):
    for i in ctx.triideals:
        _, hom = quotient_triring(ctx.ring, i)
        if hom.kernel != i:
            return False, f"kernel mismatch at {_fmt_pair(i)}"
    return True, f"{len(ctx.triideals)} quotients validated"


def check_correspondence(ctx: SuiteContext):
    for i in ctx.triideals:
        _, hom = quotient_triring(ctx.ring, i)
        rep = correspondence_check(hom)
        if not rep.ok:
            bad = [name for name, passed, _ in rep.entries if not passed]
            return False, f"{bad[0]} fails above {_fmt_pair(i)}"
    return True, ""


# -- nilradical --------------------------------------------------------------

def check_nilradical_decomposition(ctx: SuiteContext):
    ring = ctx.ring
    nil = trinilradical(ring)
    if set(nil.even_ideal.members) != set(nilradical_comm(ring.even).members):
        return False, "even part disagrees with the component nilradical"
    if set(nil.odd_ideal.members) != set(nilradical_comm(ring.odd).members):
        return False, "odd part disagrees with the component nilradical"
    filtered = {x for x in ring.elements() if is_trinilpotent(ring, x)}
    if filtered != set(nil.elements()):
        return False, "elementwise filter disagrees"
    return True, _fmt_pair(nil)


def check_ordinary_nilradical(ctx: SuiteContext):
    ring = ctx.ring
    direct = ordinary_nilradical_members(ring)
    decomposed = {TriElement(e, o)
                  for e in nilradical_comm(ring.even).members
                  for o in ring.odd.elements}
    if direct != decomposed:
        return False, "full-carrier nilpotents do not split as even nilradical + odd part"
    nil = trinilradical(ring)
    if not set(nil.elements()) <= direct:
        return False, "graded nilradical escapes the ordinary one"
    return True, ""


def check_quotient_trinilradical_zero(ctx: SuiteContext):
    quotient, _ = quotient_triring(ctx.ring, trinilradical(ctx.ring))
    if not trinilradical(quotient).is_zero:
        return False, "quotient by the nilradical still has trinilpotents"
    return True, ""


def check_radical_idempotent(ctx: SuiteContext):
    for i in ctx.triideals:
        r = ctx.radical_of(i)
        if radical(r) != r:
            return False, f"radical not idempotent at {_fmt_pair(i)}"
    return True, ""


def check_nilradical_prime_intersection(ctx: SuiteContext):
    ring = ctx.ring
    meet_even = set(ring.even.elements)
    meet_odd = set(ring.odd.elements)
    for p in ctx.spectrum.points:
        meet_even &= p.even_ideal.member_set
        meet_odd &= p.odd_ideal.member_set
    nil = trinilradical(ring)
    if set(nil.even_ideal.members) != meet_even or set(nil.odd_ideal.members) != meet_odd:
        return False, "trinilradical differs from the intersection of primes"
    return True, f"{len(ctx.spectrum.points)} primes"


def check_radical_prime_intersection(ctx: SuiteContext):
    ring = ctx.ring
    for i in ctx.triideals:
        if i.is_whole:
            continue
        above = [p for p in ctx.spectrum.points if i <= p]
        meet_even = set(ring.even.elements)
        meet_odd = set(ring.odd.elements)
        for p in above:
            meet_even &= p.even_ideal.member_set
            meet_odd &= p.odd_ideal.member_set
        r = ctx.radical_of(i)
        if set(r.even_ideal.members) != meet_even or set(r.odd_ideal.members) != meet_odd:
            return False, f"radical mismatch at {_fmt_pair(i)}"
    return True, ""


# -- spectrum ----------------------------------------------------------------

def check_spectrum_partition(ctx: SuiteContext):
    ring = ctx.ring
    spec = ctx.spectrum
    expected = [t for t in ctx.triideals if is_prime_triideal(ring, t)]
    if sorted(expected, key=Triideal.key) != list(spec.points):
        return False, "points differ from the primality filter"
    evens = set(spec.even_points)
    odds = set(spec.odd_points)
    if evens & odds or evens | odds != set(range(len(spec.points))):
        return False, "even/odd partition is not a partition"
    for idx, p in enumerate(spec.points):
        contains_odd = len(p.odd_ideal.members) == ring.odd.size
        if contains_odd != (idx in evens):
            return False, f"point {idx} sorted into the wrong class"
    if ring.even.size > 1 and not evens:
        return False, "no even point"
    if (ring.odd.size > 1) != bool(odds):
        return False, "odd points disagree with the odd part being nonzero"
    return True, f"{len(evens)} even + {len(odds)} odd"


def check_even_characterization(ctx: SuiteContext):
    ring = ctx.ring
    spec = ctx.spectrum
    even_parts = sorted(spec.points[i].even_ideal.members for i in spec.even_points)
    primes0 = sorted(i.members for i in enumerate_ideals(ring.even)
                     if is_prime_ideal(ring.even, i))
    if even_parts != primes0:
        return False, "even points do not match the even ring's primes"
    for i in spec.even_points:
        if len(spec.points[i].odd_ideal.members) != ring.odd.size:
            return False, f"even point {i} does not contain the odd part"
    return True, f"{len(primes0)} even primes"


def check_odd_extension(ctx: SuiteContext):
    ring = ctx.ring
    if ring.odd.size <= 1:
        return None, "zero odd part, nothing to extend"
    count = 0
    for p1 in enumerate_ideals(ring.odd):
        if not is_prime_ideal(ring.odd, p1):
            continue
        extend_odd_prime(ring, p1)  # asserts primality and maximality
        count += 1
    try:
        extend_odd_prime(ring, Ideal(ring.odd, tuple(ring.odd.elements)))
    except NotPrimeInput:
        pass
    else:
        return False, "improper input was accepted"
    return True, f"{count} odd primes extended"


def check_mixed_product_primality(ctx: SuiteContext):
    products = [(i, j, mixed_product(i, j))
                for i in ctx.triideals for j in ctx.triideals]
    for t in ctx.triideals:
        if t.is_whole:
            continue
        condition = all(not (p <= t) or (i <= t or j <= t) for i, j, p in products)
        if condition != is_prime_triideal(ctx.ring, t):
            return False, f"mixed-product criterion disagrees at {_fmt_pair(t)}"
    return True, ""


def check_bimodule_diagnostic(ctx: SuiteContext):
    agree, cases = odd_prime_bimodule_diagnostic(ctx.ring, ctx.triideals)
    return None, f"agreement {agree}/{cases}"


# -- topology ----------------------------------------------------------------

def check_closed_set_axioms(ctx: SuiteContext):
    ring = ctx.ring
    spec = ctx.spectrum
    n = len(spec.points)
    if vsharp(spec, zero_triideal(ring)).members != tuple(range(n)):
        return False, "the zero triideal does not close to the whole space"
    if vsharp(spec, whole_triideal(ring)).members != ():
        return False, "the whole ring does not close to the empty set"
    for i in ctx.triideals:
        vi = set(vsharp(spec, i).members)
        for j in ctx.triideals:
            vj = set(vsharp(spec, j).members)
            union = vi | vj
            if union != set(vsharp(spec, triideal_intersection(i, j)).members):
                return False, f"union law fails at {_fmt_pair(i)},{_fmt_pair(j)}"
            if union != set(vsharp(spec, mixed_product(i, j)).members):
                return False, f"mixed-product law fails at {_fmt_pair(i)},{_fmt_pair(j)}"
    families = [family for r in (0, 1, 2, 3)
                for family in combinations(ctx.triideals, r)]
    families.append(tuple(ctx.triideals))
    for family in families:
        meet = set(range(n))
        total = zero_triideal(ring)
        for t in family:
            meet &= set(vsharp(spec, t).members)
            total = triideal_sum(total, t)
        if meet != set(vsharp(spec, total).members):
            return False, f"intersection law fails on a family of size {len(family)}"
    return True, ""


def check_radical_order(ctx: SuiteContext):
    spec = ctx.spectrum
    for i in ctx.triideals:
        vi = set(vsharp(spec, i).members)
        ri = ctx.radical_of(i)
        if vi != set(vsharp(spec, ri).members):
            return False, f"closed set changes under radical at {_fmt_pair(i)}"
        for j in ctx.triideals:
            vj = set(vsharp(spec, j).members)
            rj = ctx.radical_of(j)
            if (vi <= vj) != (rj <= ri):
                return False, f"order reversal fails at {_fmt_pair(i)},{_fmt_pair(j)}"
    return True, ""


def check_basic_open_basis(ctx: SuiteContext):
    ring = ctx.ring
    spec = ctx.spectrum
    n = len(spec.points)
    opens_even = {x0: set(dsharp(spec, ctx.principal_even[x0]))
                  for x0 in ring.even.elements}
    opens_odd = {x1: set(dsharp(spec, ctx.principal_odd[x1]))
                 for x1 in ring.odd.elements}
    if opens_even[0] or opens_odd[0]:
        return False, "the zero basic opens are not empty"
    if opens_even[ring.even.one] != set(range(n)):
        return False, "the identity basic open is not the whole space"
    if opens_odd[ring.odd.one] != set(spec.odd_points):
        return False, "the local identity basic open is not the odd part"
    for x1 in ring.odd.elements:
        if not opens_odd[x1] <= set(spec.odd_points):
            return False, f"odd basic open at {x1} leaves the odd part"
    for t in ctx.triideals:
        want = set(dsharp(spec, t))
        got = set()
        for x0 in t.even_ideal.members:
            got |= opens_even[x0]
        for x1 in t.odd_ideal.members:
            got |= opens_odd[x1]
        if got != want:
            return False, f"basis union fails at {_fmt_pair(t)}"
    return True, ""


def check_irreducible_prime_radical(ctx: SuiteContext):
    spec = ctx.spectrum
    for t in ctx.triideals:
        c = vsharp(spec, t)
        prime = is_prime_triideal(ctx.ring, ctx.radical_of(t))
        if not c.members:
            if prime:
                return False, f"empty closed set with prime radical at {_fmt_pair(t)}"
            continue
        if is_irreducible(c, ctx.triideals) != prime:
            return False, f"irreducibility disagrees at {_fmt_pair(t)}"
    return True, ""


def _validate_witness(ctx, cover, witness, target):
    comp = ctx.ring.even if target == "full" else ctx.ring.odd
    total = 0
    for ci, e in witness.terms:
        pool = (cover[ci].even_ideal if target == "full" else cover[ci].odd_ideal)
        if e not in pool:
            return False
        total = comp.add(total, e)
    return total == comp.one


def check_quasicompact_full(ctx: SuiteContext):
    ring = ctx.ring
    cover = [ctx.principal_even[x0] for x0 in ring.even.elements]
    cover += [ctx.principal_odd[x1] for x1 in ring.odd.elements]
    witness = quasicompact_subcover(ctx.spectrum, cover, "full")
    if not _validate_witness(ctx, cover, witness, "full"):
        return False, "witness does not sum to the identity"
    return True, f"subcover of size {len(witness.indices)}"


def check_quasicompact_odd(ctx: SuiteContext):
    ring = ctx.ring
    if ring.odd.size <= 1:
        return None, "zero odd part, odd cover trivial"
    cover = [ctx.principal_odd[x1] for x1 in ring.odd.elements]
    witness = quasicompact_subcover(ctx.spectrum, cover, "odd")
    if not _validate_witness(ctx, cover, witness, "odd"):
        return False, "witness does not sum to the local identity"
    return True, f"subcover of size {len(witness.indices)}"


def check_specialization_closure(ctx: SuiteContext):
    spec = ctx.spectrum
    n = len(spec.points)
    for i in range(n):
        if set(closure(spec, [i])) != set(vsharp(spec, spec.points[i]).members):
            return False, f"closure of point {i} is not its closed set"
    for i, j in specialization_pairs(spec):
        if j not in closure(spec, [i]):
            return False, f"specialization pair ({i},{j}) not reflected by closure"
    import itertools
    for r in range(n + 1):
        for subset in itertools.combinations(range(n), r):
            c = set(closure(spec, subset))
            if not set(subset) <= c:
                return False, "closure is not extensive"
            if set(closure(spec, c)) != c:
                return False, "closure is not idempotent"
    return True, ""


CHECKS: tuple[tuple[str, str, object], ...] = (
    ("axioms", "defining-laws", check_axiom_report),
    ("axioms", "structure-maps", check_structure_maps),
    ("axioms", "derived-representation", check_derived_representation),
    ("axioms", "product-sharp-compatibility", check_product_sharp_compat),
    ("axioms", "local-power-compatibility", check_local_power_compat),
    ("ideals", "component-ideal-oracle", check_component_ideal_oracle),
    ("ideals", "generation-idempotent", check_generation_idempotent),
    ("ideals", "prime-quotient-agreement", check_prime_quotient_agreement),
    ("ideals", "component-nilradical-intersection", check_comm_nilradical),
    ("ideals", "pair-characterization", check_pair_characterization),
    ("ideals", "principal-triideals", check_principal_triideals),
    ("ideals", "lattice-operations", check_lattice_operations),
    ("ideals", "quotient-natural-map", check_quotient_natural_map),
    ("ideals", "correspondence", check_correspondence),
    ("nilradical", "decomposition", check_nilradical_decomposition),
    ("nilradical", "ordinary-nilradical", check_ordinary_nilradical),
    ("nilradical", "quotient-trinilradical-zero", check_quotient_trinilradical_zero),
    ("nilradical", "radical-idempotent", check_radical_idempotent),
    ("nilradical", "prime-intersection", check_nilradical_prime_intersection),
    ("nilradical", "radical-prime-intersection", check_radical_prime_intersection),
    ("spectrum", "partition", check_spectrum_partition),
    ("spectrum", "even-characterization", check_even_characterization),
    ("spectrum", "odd-extension", check_odd_extension),
    ("spectrum", "mixed-product-primality", check_mixed_product_primality),
    ("spectrum", "odd-prime-bimodule-diagnostic", check_bimodule_diagnostic),
    ("topology", "closed-set-axioms", check_closed_set_axioms),
    ("topology", "radical-order", check_radical_order),
    ("topology", "basic-open-basis", check_basic_open_basis),
    ("topology", "irreducible-prime-radical", check_irreducible_prime_radical),
    ("topology", "quasicompact-full", check_quasicompact_full),
    ("topology", "quasicompact-odd", check_quasicompact_odd),
    ("topology", "specialization-closure", check_specialization_closure),
)


@dataclass(frozen=True)
class SuiteReport:
    entries: tuple[tuple[str, str, str], ...]  # (status, check id, detail)

    @property
    def ok(self) -> bool:
        return all(status != "FAIL" for status, _, _ in self.entries)

    def render(self) -> str:
        lines = []
        passed = failed = info = 0
        for status, check_id, detail in self.entries:
            line = f"{status} {check_id}"
            if detail:
                line += f": {detail}"
            lines.append(line)
            if status == "PASS":
                passed += 1
            elif status == "FAIL":
                failed += 1
            else:
                info += 1
        lines.append(f"result: {passed} passed, {failed} failed, {info} info")
        return "\n".join(lines)


def run_suite(doc: TriringDocument, suite: str = "all", *,
              max_size: int = DEFAULT_MAX_SIZE,
              max_ideals: int = DEFAULT_MAX_IDEALS,
              workers: int = 1) -> SuiteReport:
    """Run the selected checks against the document's triring.

    A document whose structure fails validation produces a single FAIL
    entry carrying the witness instead of raising.
    """
    if suite not in SUITE_NAMES:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITE_NAMES}")
    try:
        ring = document_to_triring(doc, max_size=max_size)
    except AxiomViolation as e:
        return SuiteReport((("FAIL", "axioms/build", str(e)),))

    selected = [(s, cid, fn) for s, cid, fn in CHECKS
                if suite == "all" or s == suite]
    ctx = SuiteContext(ring, max_ideals=max_ideals)
    ctx.prepare(deep=any(s != "axioms" for s, _, _ in selected))

    def run_one(item):
        s, cid, fn = item
        try:
            ok, detail = fn(ctx)
        except TrispectraError as e:
            return ("FAIL", f"{s}/{cid}", str(e))
        if ok is None:
            return ("INFO", f"{s}/{cid}", detail)
        return ("PASS" if ok else "FAIL", f"{s}/{cid}", detail)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            entries = tuple(pool.map(run_one, selected))
    else:
        entries = tuple(run_one(item) for item in selected)
    return SuiteReport(entries)
