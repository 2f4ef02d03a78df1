"""Prime triideals, the trispectrum and its extended Zariski topology.

Primality is decided by the literal four-implication quantifier check;
component-level characterizations are used only as cross-checks by the
verification suites, never as shortcuts here.
"""

from __future__ import annotations

from dataclasses import dataclass

from trispectra.commring import (
    DEFAULT_MAX_IDEALS,
    Ideal,
    enumerate_ideals,
    is_ideal_set,
    is_prime_ideal,
)
from trispectra.errors import EmptySet, NotACover, NotPrimeInput
from trispectra.triideal import (
    Triideal,
    is_triideal,
    principal_even_triideal,
    principal_odd_triideal,
    radical,
    triideal_intersection,
)
from trispectra.triring import TriElement, Triring


def enumerate_triideals(ring: Triring,
                        max_ideals: int = DEFAULT_MAX_IDEALS) -> list[Triideal]:
    """All component-ideal pairs that form triideals, in even-major order."""
    evens = enumerate_ideals(ring.even, max_ideals=max_ideals)
    odds = enumerate_ideals(ring.odd, max_ideals=max_ideals)
    out = []
    for i0 in evens:
        for i1 in odds:
            if is_triideal(ring, i0, i1):
                out.append(Triideal(ring, i0, i1))
    return out


def is_prime_triideal(ring: Triring, p: Triideal) -> bool:
    """Proper, and the four graded implications hold exhaustively.

    For grade pairs (g, h) the product of elements outside the relevant
    components must stay outside: even*even vs P0, even*odd and odd*even
    vs P1, and the local product of two odd elements vs P1.
    """
    if p.is_whole:
        return False
    even, odd = ring.even, ring.odd
    p0, p1 = p.even_ideal.member_set, p.odd_ideal.member_set
    out0 = [e for e in even.elements if e not in p0]
    out1 = [o for o in odd.elements if o not in p1]
    for x0 in out0:
        for y0 in out0:
            if even.mul(x0, y0) in p0:
                return False
    for x0 in out0:
        ev = TriElement(x0, 0)
        for y1 in out1:
            od = TriElement(0, y1)
            if ring.mul(ev, od).odd_part in p1:  # x0*y1
                return False
            if ring.mul(od, ev).odd_part in p1:  # y1*x0
                return False
    for x1 in out1:
        for y1 in out1:
            if odd.mul(x1, y1) in p1:  # x1 # y1
                return False
    return True


@dataclass(frozen=True, eq=False)
class Trispectrum:
    ring: Triring
    points: tuple[Triideal, ...]
    even_points: tuple[int, ...]
    odd_points: tuple[int, ...]

    def __len__(self):
        return len(self.points)

    def is_even_point(self, index: int) -> bool:
        return index in self.even_points

    def __repr__(self):
        return (f"Trispectrum({self.ring.name}: {len(self.points)} points, "
                f"{len(self.even_points)} even, {len(self.odd_points)} odd)")


def trispectrum(ring: Triring,
                max_ideals: int = DEFAULT_MAX_IDEALS) -> Trispectrum:
    """All prime triideals, partitioned by whether they contain the odd part."""
    points = tuple(sorted(
        (t for t in enumerate_triideals(ring, max_ideals=max_ideals)
         if is_prime_triideal(ring, t)),
        key=Triideal.key))
    even_idx = []
    odd_idx = []
    for i, p in enumerate(points):
        if len(p.odd_ideal.members) == ring.odd.size:
            even_idx.append(i)
        else:
            odd_idx.append(i)
    if ring.even.size > 1:
        assert even_idx, "even trispectrum of a nonzero triring is empty"
    if ring.odd.size > 1:
        assert odd_idx, "odd trispectrum is empty despite a nonzero odd part"
    return Trispectrum(ring, points, tuple(even_idx), tuple(odd_idx))


def extend_odd_prime(ring: Triring, p1: Ideal) -> Triideal:
    """Extend a prime ideal of the odd ring to a prime triideal.

    The even part is the largest even ideal whose odd translates land in
    p1; it is computed directly (the family of candidates is closed under
    ideal sums, so its maximum is this set), then asserted to be a prime
    ideal dominating every candidate, and the pair is asserted prime.
    """
    if ring.odd.size <= 1:
        raise NotPrimeInput("the odd part is zero; nothing to extend")
    if not is_prime_ideal(ring.odd, p1):
        raise NotPrimeInput(f"{p1!r} is not a prime ideal of the odd ring")
    odd = ring.odd
    p1set = p1.member_set

    def translates_land(e: int) -> bool:
        ev = TriElement(e, 0)
        return all(ring.mul(TriElement(0, o), ev).odd_part in p1set
                   for o in odd.elements)  # R1*x0 inside P1

    p0 = Ideal(ring.even, tuple(sorted(e for e in ring.even.elements
                                       if translates_land(e))))
    assert is_ideal_set(ring.even, p0.member_set), "extension is not an ideal"
    assert is_prime_ideal(ring.even, p0), "extension is not prime"
    result = Triideal(ring, p0, p1)
    assert is_triideal(ring, p0, p1), "extension is not a triideal"
    assert is_prime_triideal(ring, result), "extension is not a prime triideal"
    for i0 in enumerate_ideals(ring.even):
        if all(translates_land(e) for e in i0.members):
            assert i0 <= p0, "extension misses a dominated ideal"
    return result


@dataclass(frozen=True, eq=False)
class ClosedSet:
    spectrum: Trispectrum
    defining_ideal: Triideal
    members: tuple[int, ...]

    def __eq__(self, other):
        return (isinstance(other, ClosedSet)
                and self.spectrum is other.spectrum
                and self.members == other.members)

    def __hash__(self):
        return hash(self.members)

    def __len__(self):
        return len(self.members)

    def __repr__(self):
        return f"ClosedSet({{{','.join(map(str, self.members))}}})"


def vsharp(spec: Trispectrum, ideal: Triideal) -> ClosedSet:
    """Points containing the triideal."""
    members = tuple(i for i, p in enumerate(spec.points) if ideal <= p)
    return ClosedSet(spec, ideal, members)


def dsharp(spec: Trispectrum, ideal: Triideal) -> tuple[int, ...]:
    """Complement of vsharp: points not containing the triideal."""
    inside = set(vsharp(spec, ideal).members)
    return tuple(i for i in range(len(spec.points)) if i not in inside)


def dsharp_even_element(spec: Trispectrum, x0: int) -> tuple[int, ...]:
    """Basic open of an even element: complement of the principal triideal."""
    return dsharp(spec, principal_even_triideal(spec.ring, x0))


def dsharp_odd_element(spec: Trispectrum, x1: int) -> tuple[int, ...]:
    """Basic open of an odd element."""
    return dsharp(spec, principal_odd_triideal(spec.ring, x1))


def closed_set_lattice(spec: Trispectrum,
                       triideals: list[Triideal] | None = None) -> list[ClosedSet]:
    """All distinct closed sets, sorted by size then membership."""
    if triideals is None:
        triideals = enumerate_triideals(spec.ring)
    seen: dict[tuple, ClosedSet] = {}
    for t in triideals:
        c = vsharp(spec, t)
        if c.members not in seen:
            seen[c.members] = c
    return sorted(seen.values(), key=lambda c: (len(c.members), c.members))


def is_irreducible(closed: ClosedSet,
                   triideals: list[Triideal] | None = None) -> bool:
    """Not a union of two proper closed subsets, by brute force.

    Cross-checked against the radical criterion (the closed set of a
    triideal is irreducible exactly when the triideal's radical is
    prime); a disagreement between the two routes is a hard failure.
    """
    if not closed.members:
        raise EmptySet("irreducibility is undefined for the empty closed set")
    spec = closed.spectrum
    lattice = closed_set_lattice(spec, triideals)
    target = set(closed.members)
    subsets = [set(c.members) for c in lattice if set(c.members) < target]
    brute = True
    for i, a in enumerate(subsets):
        for b in subsets[i:]:
            if a | b == target:
                brute = False
                break
        if not brute:
            break
    via_radical = is_prime_triideal(spec.ring, radical(closed.defining_ideal))
    if brute != via_radical:
        raise RuntimeError(
            f"irreducibility routes disagree on {closed!r}: "
            f"brute-force {brute}, radical-primality {via_radical}")
    return brute


@dataclass(frozen=True)
class SubcoverWitness:
    """A finite subcover together with the unit-sum certificate behind it."""

    indices: tuple[int, ...]          # positions into the original cover list
    terms: tuple[tuple[int, int], ...]  # (cover index, component element)
    target: str

    def __repr__(self):
        ts = " + ".join(f"{e}@{i}" for i, e in self.terms)
        return f"SubcoverWitness({self.target}: {ts or '0'})"


def quasicompact_subcover(spec: Trispectrum, cover: list[Triideal],
                          target: str = "full") -> SubcoverWitness:
    """Select a finite subcover of the target by a unit-sum witness search.

    target "full" covers the whole trispectrum and expresses the even
    identity as a sum of even components of finitely many cover members;
    target "odd" covers the odd points and sums odd components to the
    local identity.  The search is breadth-first over partial sums, so
    witnesses are as short as possible with ties broken by cover order.
    """
    if target not in ("full", "odd"):
        raise ValueError("target must be 'full' or 'odd'")
    covered = set()
    for t in cover:
        covered.update(dsharp(spec, t))
    wanted = range(len(spec.points)) if target == "full" else spec.odd_points
    for i in wanted:
        if i not in covered:
            raise NotACover(repr(spec.points[i]))

    ring = spec.ring
    if target == "full":
        comp = ring.even
        goal = comp.one
        pools = [t.even_ideal.members for t in cover]
    else:
        comp = ring.odd
        goal = comp.one
        pools = [t.odd_ideal.members for t in cover]

    # BFS over achievable partial sums; parent links recover the terms.
    best: dict[int, tuple] = {0: ()}
    frontier = [0]
    for _ in range(comp.size):
        if goal in best:
            break
        new = []
        for s in sorted(frontier):
            path = best[s]
            for ci, pool in enumerate(pools):
                for e in pool:
                    t = comp.add(s, e)
                    if t not in best:
                        best[t] = path + ((ci, e),)
                        new.append(t)
        if not new:
            break
        frontier = new
    if goal not in best:
        raise RuntimeError("unit sum not reachable despite a covering family")
    terms = best[goal]
    indices = tuple(sorted({ci for ci, _ in terms}))

    # The selected members must still cover the target.
    sub_covered = set()
    for ci in indices:
        sub_covered.update(dsharp(spec, cover[ci]))
    assert all(i in sub_covered for i in wanted), "subcover misses the target"
    return SubcoverWitness(indices, terms, target)


def specialization_pairs(spec: Trispectrum) -> tuple[tuple[int, int], ...]:
    """All (i, j) with point j in the closure of point i (containment)."""
    out = []
    for i, p in enumerate(spec.points):
        for j, q in enumerate(spec.points):
            if i != j and p <= q:
                out.append((i, j))
    return tuple(out)


def closure(spec: Trispectrum, point_indices) -> tuple[int, ...]:
    """Topological closure of a point set: the closed set of the
    intersection of its points."""
    idx = sorted(set(point_indices))
    if not idx:
        return ()
    acc = spec.points[idx[0]]
    for i in idx[1:]:
        acc = triideal_intersection(acc, spec.points[i])
    return vsharp(spec, acc).members


def odd_prime_bimodule_diagnostic(ring: Triring,
                                  triideals: list[Triideal] | None = None) -> tuple[int, int]:
    """Compare literal primality with the component-plus-faithfulness test.

    For every proper triideal not containing the whole odd part, the
    candidate criterion is: both component ideals prime, and no even
    element outside P0 annihilates the quotient from either side.
    Returns (agreements, cases); reported by the suites, never asserted.
    """
    if triideals is None:
        triideals = enumerate_triideals(ring)
    agree = 0
    cases = 0
    for t in triideals:
        if t.is_whole or len(t.odd_ideal.members) == ring.odd.size:
            continue
        cases += 1
        literal = is_prime_triideal(ring, t)
        candidate = (is_prime_ideal(ring.even, t.even_ideal)
                     and is_prime_ideal(ring.odd, t.odd_ideal)
                     and _bimodule_faithful(ring, t))
        if literal == candidate:
            agree += 1
    return agree, cases


def _bimodule_faithful(ring: Triring, p: Triideal) -> bool:
    p0 = p.even_ideal.member_set
    for e in ring.even.elements:
        if e in p0:
            continue
        x = TriElement(e, 0)
        left = all(ring.mul(x, y) in p for y in ring.elements())
        right = all(ring.mul(y, x) in p for y in ring.elements())
        if left or right:
            return False
    return True


__all__ = [
    "ClosedSet",
    "SubcoverWitness",
    "Trispectrum",
    "closed_set_lattice",
    "closure",
    "dsharp",
    "dsharp_even_element",
    "dsharp_odd_element",
    "enumerate_triideals",
    "extend_odd_prime",
    "is_irreducible",
    "is_prime_triideal",
    "odd_prime_bimodule_diagnostic",
    "quasicompact_subcover",
    "specialization_pairs",
    "trispectrum",
    "vsharp",
]
