"""Triideals, quotients, homomorphisms, and nil machinery for trirings.

A triideal is stored as its two component ideals (I0, I1); the pair
determines the subgroup I0 + I1 of the carrier, and membership of the
assembled multiples is always re-checked literally rather than via the
component characterization alone.
"""

from __future__ import annotations

from dataclasses import dataclass

from trispectra.commring import (
    FiniteCommRing,
    Ideal,
    ideal_generated,
    ideal_intersection,
    ideal_product,
    ideal_sum,
    is_ideal_set,
    nilpotency_index,
    nilradical_comm,
    quotient_ring,
)
from trispectra.errors import NotAHom
from trispectra.triring import TriElement, Triring, build_triring


@dataclass(frozen=True, eq=False)
class Triideal:
    ring: Triring
    even_ideal: Ideal
    odd_ideal: Ideal

    def __contains__(self, x: TriElement) -> bool:
        return x.even_part in self.even_ideal and x.odd_part in self.odd_ideal

    def __eq__(self, other):
        return (isinstance(other, Triideal) and self.ring is other.ring
                and self.even_ideal.members == other.even_ideal.members
                and self.odd_ideal.members == other.odd_ideal.members)

    def __hash__(self):
        return hash((self.even_ideal.members, self.odd_ideal.members))

    def __le__(self, other: "Triideal") -> bool:
        return (self.even_ideal.member_set <= other.even_ideal.member_set
                and self.odd_ideal.member_set <= other.odd_ideal.member_set)

    @property
    def is_whole(self) -> bool:
        return self.even_ideal.is_whole and self.odd_ideal.is_whole

    @property
    def is_zero(self) -> bool:
        return len(self.even_ideal.members) == 1 and len(self.odd_ideal.members) == 1

    def elements(self):
        for e in self.even_ideal.members:
            for o in self.odd_ideal.members:
                yield TriElement(e, o)

    def key(self) -> tuple:
        return (self.even_ideal.members, self.odd_ideal.members)

    def __repr__(self):
        e = ",".join(map(str, self.even_ideal.members))
        o = ",".join(map(str, self.odd_ideal.members))
        return f"Triideal({{{e}}},{{{o}}})"


def _pair(ring: Triring, even_members, odd_members) -> Triideal:
    return Triideal(ring,
                    Ideal(ring.even, tuple(sorted(even_members))),
                    Ideal(ring.odd, tuple(sorted(odd_members))))


def zero_triideal(ring: Triring) -> Triideal:
    return _pair(ring, [0], [0])


def whole_triideal(ring: Triring) -> Triideal:
    return _pair(ring, ring.even.elements, ring.odd.elements)


def is_triideal(ring: Triring, even_ideal: Ideal, odd_ideal: Ideal) -> bool:
    """Def-style check: both the literal multiple-closure on the assembled
    product and the component characterization must hold (they are proved
    equivalent by the property suite)."""
    if not is_ideal_set(ring.even, even_ideal.member_set):
        return False
    if not is_ideal_set(ring.odd, odd_ideal.member_set):
        return False
    e_set, o_set = even_ideal.member_set, odd_ideal.member_set

    # Literal: x*i and i*x stay inside for every carrier x and member i.
    for x in ring.elements():
        for e in even_ideal.members:
            for o in odd_ideal.members:
                i = TriElement(e, o)
                for p in (ring.mul(x, i), ring.mul(i, x)):
                    if p.even_part not in e_set or p.odd_part not in o_set:
                        return False

    # Component characterization: lam(I0)#R1 + R1#rho(I0) inside I1.
    odd = ring.odd
    for e in even_ideal.members:
        le, re = int(ring.lam[e]), int(ring.rho[e])
        for o in odd.elements:
            if odd.mul(le, o) not in o_set or odd.mul(o, re) not in o_set:
                return False
    return True


def make_triideal(ring: Triring, even_gens, odd_gens) -> Triideal:
    """Smallest triideal containing the given component generators."""
    even_ideal = ideal_generated(ring.even, even_gens)
    odd = ring.odd
    odd_seed = set(odd_gens)
    for e in even_ideal.members:
        le, re = int(ring.lam[e]), int(ring.rho[e])
        for o in odd.elements:
            odd_seed.add(odd.mul(le, o))
            odd_seed.add(odd.mul(o, re))
    odd_ideal = ideal_generated(odd, odd_seed)
    result = Triideal(ring, even_ideal, odd_ideal)
    assert is_triideal(ring, even_ideal, odd_ideal), "generated pair is not a triideal"
    return result


def principal_even_triideal(ring: Triring, x0: int) -> Triideal:
    """R*x0 = R0*x0 + R1*x0, asserted equal to the generated closure."""
    even_members = {ring.even.mul(r, x0) for r in ring.even.elements}
    odd_members = {ring.mul(TriElement(0, o), TriElement(x0, 0)).odd_part
                   for o in ring.odd.elements}
    direct = _pair(ring, even_members, odd_members)
    generated = make_triideal(ring, [x0], [])
    assert direct == generated, f"principal closure mismatch at x0={x0}"
    return direct


def principal_odd_triideal(ring: Triring, x1: int) -> Triideal:
    """R1 # x1, with zero even part."""
    odd_members = {ring.odd.mul(o, x1) for o in ring.odd.elements}
    direct = _pair(ring, [0], odd_members)
    generated = make_triideal(ring, [], [x1])
    assert direct == generated, f"principal closure mismatch at x1={x1}"
    return direct


def triideal_sum(i: Triideal, j: Triideal) -> Triideal:
    out = Triideal(i.ring, ideal_sum(i.even_ideal, j.even_ideal),
                   ideal_sum(i.odd_ideal, j.odd_ideal))
    assert is_triideal(i.ring, out.even_ideal, out.odd_ideal)
    return out


def triideal_intersection(i: Triideal, j: Triideal) -> Triideal:
    out = Triideal(i.ring, ideal_intersection(i.even_ideal, j.even_ideal),
                   ideal_intersection(i.odd_ideal, j.odd_ideal))
    assert is_triideal(i.ring, out.even_ideal, out.odd_ideal)
    return out


def mixed_product(i: Triideal, j: Triideal) -> Triideal:
    """Even part I0*J0, odd part I1#J1, both closed into ideals."""
    out = Triideal(i.ring, ideal_product(i.even_ideal, j.even_ideal),
                   ideal_product(i.odd_ideal, j.odd_ideal))
    assert is_triideal(i.ring, out.even_ideal, out.odd_ideal)
    return out


def is_subtriring(ring: Triring, subset) -> bool:
    """Multiplicatively closed, contains 1 and 1#, splits by grade, and the
    odd slice is closed under the local product.

    The local identity is required to belong to the odd slice; images of
    homomorphisms then are always subtrirings.
    """
    s = frozenset(subset)
    if ring.one not in s or ring.local_one not in s:
        return False
    for x in s:
        for y in s:
            if ring.add(x, y) not in s or ring.mul(x, y) not in s:
                return False
    evens = {x.even_part for x in s}
    odds = {x.odd_part for x in s}
    if s != {TriElement(e, o) for e in evens for o in odds}:
        return False
    for a in odds:
        for b in odds:
            if ring.odd.mul(a, b) not in odds:
                return False
    return True


# -- homomorphisms ----------------------------------------------------------

@dataclass(frozen=True, eq=False)
class TriringHom:
    source: Triring
    target: Triring
    mapping: dict  # TriElement -> TriElement, total on the source carrier
    kernel: Triideal
    image: frozenset

    def __call__(self, x: TriElement) -> TriElement:
        return self.mapping[x]

    @property
    def surjective(self) -> bool:
        return len(self.image) == self.target.size

    def __repr__(self):
        return f"TriringHom({self.source.name} -> {self.target.name})"


def _check_hom_conditions(mapping, source: Triring, target: Triring) -> None:
    for x in source.elements():
        if x not in mapping:
            raise ValueError(f"mapping is not total: missing {x!r}")
    for x in source.elements():
        fx = mapping[x]
        for y in source.elements():
            if mapping[source.add(x, y)] != target.add(fx, mapping[y]):
                raise NotAHom("additivity", (x, y))
            if mapping[source.mul(x, y)] != target.mul(fx, mapping[y]):
                raise NotAHom("multiplicativity", (x, y))
    if mapping[source.one] != target.one:
        raise NotAHom("identity", source.one)
    for e in source.even.elements:
        if mapping[TriElement(e, 0)].odd_part != 0:
            raise NotAHom("even-grade", e)
    for o in source.odd.elements:
        if mapping[TriElement(0, o)].even_part != 0:
            raise NotAHom("odd-grade", o)
    for a in source.odd.elements:
        fa = mapping[TriElement(0, a)]
        for b in source.odd.elements:
            lhs = mapping[source.sharp(TriElement(0, a), TriElement(0, b))]
            if lhs != target.sharp(fa, mapping[TriElement(0, b)]):
                raise NotAHom("local-product", (a, b))
    if mapping[source.local_one] != target.local_one:
        raise NotAHom("local-identity", source.local_one)


def analyze_hom(mapping, source: Triring, target: Triring) -> TriringHom:
    """Validate a candidate map and compute its kernel and image.

    Also constructs the induced map on the quotient by the kernel and
    checks that it is a bijective homomorphism onto the image.
    """
    mapping = dict(mapping)
    _check_hom_conditions(mapping, source, target)
    ker_even = [e for e in source.even.elements
                if mapping[TriElement(e, 0)] == target.zero]
    ker_odd = [o for o in source.odd.elements
               if mapping[TriElement(0, o)] == target.zero]
    kernel = _pair(source, ker_even, ker_odd)
    assert is_triideal(source, kernel.even_ideal, kernel.odd_ideal), \
        "kernel is not a triideal"
    image = frozenset(mapping[x] for x in source.elements())
    assert is_subtriring(target, image), "image is not a subtriring"
    hom = TriringHom(source, target, mapping, kernel, image)
    _check_first_isomorphism(hom)
    return hom


def _check_first_isomorphism(hom: TriringHom) -> None:
    quotient, nu_map = quotient_triring(hom.source, hom.kernel, _analyze=False)
    induced = {}
    for x in hom.source.elements():
        q = nu_map[x]
        fx = hom.mapping[x]
        if q in induced:
            assert induced[q] == fx, "induced map is ill-defined"
        else:
            induced[q] = fx
    values = list(induced.values())
    assert len(set(values)) == len(values), "induced map is not injective"
    assert set(values) == set(hom.image), "induced map misses part of the image"
    tgt = hom.target
    for q1, v1 in induced.items():
        for q2, v2 in induced.items():
            assert induced[quotient.add(q1, q2)] == tgt.add(v1, v2)
            assert induced[quotient.mul(q1, q2)] == tgt.mul(v1, v2)
    for q1, v1 in induced.items():
        if q1.even_part != 0:
            continue
        for q2, v2 in induced.items():
            if q2.even_part != 0:
                continue
            assert induced[quotient.sharp(q1, q2)] == tgt.sharp(v1, v2)
    assert induced[quotient.one] == tgt.one
    assert induced[quotient.local_one] == tgt.local_one


def quotient_triring(ring: Triring, ideal: Triideal, _analyze: bool = True):
    """The quotient triring and the natural surjection onto it.

    Returns ``(quotient, nu)`` where nu maps each element to its coset;
    cosets use minimum-index representatives per component.  With
    ``_analyze`` the natural map is validated as a homomorphism with
    kernel exactly ``ideal`` and returned as a TriringHom; otherwise the
    raw coset dict is returned (used internally to avoid recursion).
    """
    q_even, even_cos = quotient_ring(ring.even, ideal.even_ideal)
    q_odd, odd_cos = quotient_ring(ring.odd, ideal.odd_ideal)
    lam = [odd_cos[int(ring.lam[e])] for e in ring.even.elements]
    rho = [odd_cos[int(ring.rho[e])] for e in ring.even.elements]
    # Well-definedness on even cosets: representatives must agree.
    q_lam = [-1] * q_even.size
    q_rho = [-1] * q_even.size
    for e in ring.even.elements:
        c = even_cos[e]
        for arr, val in ((q_lam, lam[e]), (q_rho, rho[e])):
            if arr[c] < 0:
                arr[c] = val
            else:
                assert arr[c] == val, "structure map not constant on cosets"
    quotient = build_triring(q_even, q_odd, q_lam, q_rho,
                             name=f"{ring.name}/{ideal!r}")
    nu = {x: TriElement(even_cos[x.even_part], odd_cos[x.odd_part])
          for x in ring.elements()}
    if not _analyze:
        return quotient, nu
    hom = analyze_hom(nu, ring, quotient)
    assert hom.kernel == ideal, "natural map kernel differs from the ideal"
    assert hom.surjective
    return quotient, hom


@dataclass(frozen=True)
class CorrespondenceReport:
    entries: tuple[tuple[str, bool, str], ...]

    @property
    def ok(self) -> bool:
        return all(passed for _, passed, _ in self.entries)


def correspondence_check(hom: TriringHom) -> CorrespondenceReport:
    """For a surjective homomorphism, verify the triideal correspondence.

    Triideals above the kernel map bijectively onto the target's
    triideals, the grade parts map onto the target's grade parts, and
    each matched pair has isomorphic quotients.
    """
    from trispectra.spectrum import enumerate_triideals

    if not hom.surjective:
        raise ValueError("correspondence requires a surjective homomorphism")
    entries = []
    src, tgt = hom.source, hom.target
    above = [i for i in enumerate_triideals(src) if hom.kernel <= i]
    below = enumerate_triideals(tgt)

    def push(i: Triideal) -> Triideal:
        evens = {hom.mapping[TriElement(e, 0)].even_part
                 for e in i.even_ideal.members}
        odds = {hom.mapping[TriElement(0, o)].odd_part
                for o in i.odd_ideal.members}
        return _pair(tgt, evens, odds)

    def pull(j: Triideal) -> Triideal:
        evens = [e for e in src.even.elements
                 if hom.mapping[TriElement(e, 0)].even_part in j.even_ideal]
        odds = [o for o in src.odd.elements
                if hom.mapping[TriElement(0, o)].odd_part in j.odd_ideal]
        return _pair(src, evens, odds)

    pushed = [push(i) for i in above]
    ok = all(p in below for p in pushed) and len(set(p.key() for p in pushed)) == len(pushed)
    entries.append(("pushforward-injective-into-target-lattice", ok, f"{len(above)} triideals above kernel"))

    ok = set(p.key() for p in pushed) == set(j.key() for j in below)
    entries.append(("pushforward-onto-target-lattice", ok, f"{len(below)} target triideals"))

    ok = all(pull(push(i)) == i for i in above) and all(push(pull(j)) == j for j in below)
    entries.append(("pushforward-pullback-mutually-inverse", ok, ""))

    even_img = {hom.mapping[TriElement(e, 0)] for e in src.even.elements}
    odd_img = {hom.mapping[TriElement(0, o)] for o in src.odd.elements}
    ok = (even_img == {TriElement(e, 0) for e in tgt.even.elements}
          and odd_img == {TriElement(0, o) for o in tgt.odd.elements})
    entries.append(("grade-parts-map-onto", ok, ""))

    iso_ok = True
    for i in above:
        qi, nui = quotient_triring(src, i, _analyze=False)
        qj, nuj = quotient_triring(tgt, push(i), _analyze=False)
        induced = {}
        well = True
        for x in src.elements():
            key = nui[x]
            val = nuj[hom.mapping[x]]
            if key in induced and induced[key] != val:
                well = False
                break
            induced[key] = val
        iso_ok = iso_ok and well and _is_isomorphism(induced, qi, qj)
    entries.append(("matched-quotients-isomorphic", iso_ok, f"{len(above)} pairs"))

    return CorrespondenceReport(tuple(entries))


def _is_isomorphism(mapping, source: Triring, target: Triring) -> bool:
    if len(mapping) != source.size or len(set(mapping.values())) != target.size:
        return False
    try:
        _check_hom_conditions(mapping, source, target)
    except NotAHom:
        return False
    return True


# -- nil machinery ----------------------------------------------------------

def is_trinilpotent(ring: Triring, x: TriElement) -> bool:
    """Even part nilpotent under the even product, odd part under the local one."""
    if nilpotency_index(ring.even, x.even_part) is None:
        return False
    odd = ring.odd
    acc = x.odd_part
    for _ in range(odd.size):
        if acc == 0:
            return True
        acc = odd.mul(acc, x.odd_part)
    return acc == 0


def trinilradical(ring: Triring) -> Triideal:
    """Component nilradicals, asserted to agree with the elementwise filter."""
    out = Triideal(ring, nilradical_comm(ring.even), nilradical_comm(ring.odd))
    assert is_triideal(ring, out.even_ideal, out.odd_ideal), \
        "trinilradical is not a triideal"
    filtered = {x for x in ring.elements() if is_trinilpotent(ring, x)}
    assert filtered == set(out.elements()), "trinilpotent filter disagrees"
    return out


def radical(ideal: Triideal) -> Triideal:
    """Elements with some component power landing in the triideal.

    Cross-checked against the trinilradical of the quotient by the
    triideal, pulled back along the natural map.
    """
    ring = ideal.ring
    evens = [e for e in ring.even.elements
             if _power_lands(ring.even, e, ideal.even_ideal)]
    odds = [o for o in ring.odd.elements
            if _power_lands(ring.odd, o, ideal.odd_ideal)]
    out = _pair(ring, evens, odds)
    assert is_triideal(ring, out.even_ideal, out.odd_ideal), \
        "radical is not a triideal"

    quotient, nu = quotient_triring(ring, ideal, _analyze=False)
    qnil = trinilradical(quotient)
    pulled = {x for x in ring.elements() if nu[x] in qnil}
    assert pulled == set(out.elements()), "quotient trinilradical disagrees"
    return out


def _power_lands(ring: FiniteCommRing, x: int, ideal: Ideal) -> bool:
    acc = x
    for _ in range(ring.size):
        if acc in ideal:
            return True
        acc = ring.mul(acc, x)
    return acc in ideal


def ordinary_nilradical_members(ring: Triring) -> frozenset:
    """Nilpotents of the assembled product, by direct power iteration."""
    out = set()
    for x in ring.elements():
        acc = x
        for _ in range(ring.size):
            if acc == ring.zero:
                out.add(x)
                break
            acc = ring.mul(acc, x)
    return frozenset(out)
