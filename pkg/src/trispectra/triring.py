"""Finite trirings: a graded carrier R0 + R1 with two compatible products.

A triring couples a commutative even ring (R0, +, .) and a commutative
odd ring (R1, +, #) through two structure maps lam, rho : R0 -> R1 that
determine the mixed products:

    (x0 + x1)(y0 + y1) = x0.y0 + (lam(x0) # y1 + x1 # rho(y0))

Products of two odd elements vanish; the odd part instead carries its
own "local" product # with local identity 1#.  The even and odd parts
are commutative subrings of the assembled ring (the odd part in the
non-unital sense: all of its ambient products are zero; its identity
lives in the local product).  Construction never trusts the structure
maps: every law is re-verified exhaustively on the assembled product.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from trispectra import kernels
from trispectra.commring import (
    DEFAULT_MAX_SIZE,
    FiniteCommRing,
    _frozen,
    make_table_ring,
)
from trispectra.errors import (
    Axiom3Violation,
    AxiomViolation,
    LocalIdentityMismatch,
    NotAHomomorphism,
    OddOnly,
    TriassocViolation,
)


class TriElement(NamedTuple):
    """An element x = x0 + x1 as a pair of component indices."""

    even_part: int
    odd_part: int

    def __repr__(self):
        return f"({self.even_part}|{self.odd_part})"


@dataclass(frozen=True, eq=False)
class Triring:
    even: FiniteCommRing
    odd: FiniteCommRing
    lam: np.ndarray  # len = even.size, odd indices: x0 -> x0 * 1#
    rho: np.ndarray  # x0 -> 1# * x0
    name: str

    @property
    def size(self) -> int:
        return self.even.size * self.odd.size

    @property
    def one(self) -> TriElement:
        return TriElement(self.even.one, 0)

    @property
    def local_one(self) -> TriElement:
        return TriElement(0, self.odd.one)

    @property
    def zero(self) -> TriElement:
        return TriElement(0, 0)

    def elements(self):
        for e in self.even.elements:
            for o in self.odd.elements:
                yield TriElement(e, o)

    def add(self, x: TriElement, y: TriElement) -> TriElement:
        return TriElement(self.even.add(x.even_part, y.even_part),
                          self.odd.add(x.odd_part, y.odd_part))

    def neg(self, x: TriElement) -> TriElement:
        return TriElement(self.even.neg(x.even_part), self.odd.neg(x.odd_part))

    def mul(self, x: TriElement, y: TriElement) -> TriElement:
        odd = self.odd
        e = self.even.mul(x.even_part, y.even_part)
        o = odd.add(odd.mul(int(self.lam[x.even_part]), y.odd_part),
                    odd.mul(x.odd_part, int(self.rho[y.even_part])))
        return TriElement(e, o)

    def sharp(self, x: TriElement, y: TriElement) -> TriElement:
        if x.even_part != 0 or y.even_part != 0:
            raise OddOnly(f"local product needs odd elements, got {x!r}, {y!r}")
        return TriElement(0, self.odd.mul(x.odd_part, y.odd_part))

    def power(self, x: TriElement, m: int) -> TriElement:
        """m-fold product in the assembled ring (m >= 1); m = 0 gives 1."""
        acc = self.one
        for _ in range(m):
            acc = self.mul(acc, x)
        return acc

    def __repr__(self):
        return f"Triring({self.name}, |R0|={self.even.size}, |R1|={self.odd.size})"


def local_power(ring: Triring, alpha: TriElement, n: int) -> TriElement:
    """n-fold local product of an odd element; n = 0 gives the local identity."""
    if alpha.even_part != 0:
        raise OddOnly(f"local power needs an odd element, got {alpha!r}")
    acc = ring.local_one
    for _ in range(n):
        acc = ring.sharp(acc, alpha)
    return acc


@dataclass(frozen=True)
class AxiomCheck:
    law: str
    passed: bool
    witness: tuple | None = None

    def __repr__(self):
        if self.passed:
            return f"pass {self.law}"
        return f"FAIL {self.law} at {self.witness!r}"


@dataclass(frozen=True)
class AxiomReport:
    entries: tuple[AxiomCheck, ...]

    @property
    def ok(self) -> bool:
        return all(e.passed for e in self.entries)

    def failures(self) -> list[AxiomCheck]:
        return [e for e in self.entries if not e.passed]

    def __repr__(self):
        good = sum(e.passed for e in self.entries)
        return f"AxiomReport({good}/{len(self.entries)} laws hold)"


def _pair(ring: Triring, flat: int) -> TriElement:
    return TriElement(flat // ring.odd.size, flat % ring.odd.size)


def _flat(ring: Triring, x: TriElement) -> int:
    return x.even_part * ring.odd.size + x.odd_part


def full_mul_table(ring: Triring) -> np.ndarray:
    """The assembled multiplication as one flat table (pair-major index)."""
    n = ring.size
    table = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        x = _pair(ring, i)
        for j in range(n):
            table[i, j] = _flat(ring, ring.mul(x, _pair(ring, j)))
    return table


def verify_axioms(ring: Triring, mul_table: np.ndarray | None = None) -> AxiomReport:
    """Exhaustively check every defining law on the assembled product.

    With ``mul_table`` (a flat pair-indexed table) the checks run against
    that table instead of the product derived from the structure maps, so
    arbitrary candidates, including broken ones, can be audited.
    """
    if mul_table is not None:
        return _verify_explicit(ring, np.asarray(mul_table, dtype=np.int64))

    entries = []
    even, odd = ring.even, ring.odd

    w = kernels.group_table_failure(even.add_table)
    w = w or kernels.monoid_table_failure(even.mul_table, even.one)
    w = w or kernels.distrib_failure(even.add_table, even.mul_table)
    entries.append(AxiomCheck("even-ring-laws", w is None, w))

    w = kernels.group_table_failure(odd.add_table)
    w = w or kernels.monoid_table_failure(odd.mul_table, odd.one)
    w = w or kernels.distrib_failure(odd.add_table, odd.mul_table)
    entries.append(AxiomCheck("odd-ring-laws", w is None, w))

    # Grading: even*even even, mixed products odd, odd*odd zero.
    witness = None
    for e in even.elements:
        for o in odd.elements:
            p = ring.mul(TriElement(e, 0), TriElement(0, o))
            q = ring.mul(TriElement(0, o), TriElement(e, 0))
            if p.even_part != 0 or q.even_part != 0:
                witness = (e, o)
                break
        if witness:
            break
    if witness is None:
        for a in odd.elements:
            for b in odd.elements:
                if ring.mul(TriElement(0, a), TriElement(0, b)) != ring.zero:
                    witness = (a, b)
                    break
            if witness:
                break
    entries.append(AxiomCheck("grading", witness is None, witness))

    one = ring.one
    witness = None
    for x in ring.elements():
        if ring.mul(one, x) != x or ring.mul(x, one) != x:
            witness = (x,)
            break
    entries.append(AxiomCheck("identity", witness is None, witness))

    w = kernels.assembled_distrib_failure(even.add_table, even.mul_table,
                                          odd.add_table, odd.mul_table,
                                          ring.lam, ring.rho)
    entries.append(AxiomCheck("distributivity", w is None, None if w is None else w[1:]))

    w = kernels.assembled_assoc_failure(even.mul_table, odd.add_table,
                                        odd.mul_table, ring.lam, ring.rho)
    entries.append(AxiomCheck("associativity", w is None, None if w is None else w[1:]))

    w = kernels.triassoc_failure(even.mul_table, odd.add_table, odd.mul_table,
                                 ring.lam, ring.rho)
    entries.append(AxiomCheck("triassociativity", w is None, w))

    # Left and right translates of each even element agree as sets.
    witness = None
    for e in even.elements:
        left = {ring.mul(TriElement(e, 0), TriElement(0, o)).odd_part
                for o in odd.elements}
        right = {ring.mul(TriElement(0, o), TriElement(e, 0)).odd_part
                 for o in odd.elements}
        if left != right:
            witness = (e,)
            break
    entries.append(AxiomCheck("odd-translation", witness is None, witness))

    return AxiomReport(tuple(entries))


def _verify_explicit(ring: Triring, table: np.ndarray) -> AxiomReport:
    """Audit an arbitrary flat multiplication table against the triring laws."""
    entries = []
    even, odd = ring.even, ring.odd
    n = ring.size

    def mul(x: TriElement, y: TriElement) -> TriElement:
        return _pair(ring, int(table[_flat(ring, x), _flat(ring, y)]))

    w = kernels.group_table_failure(even.add_table)
    w = w or kernels.monoid_table_failure(even.mul_table, even.one)
    w = w or kernels.distrib_failure(even.add_table, even.mul_table)
    entries.append(AxiomCheck("even-ring-laws", w is None, w))
    w = kernels.group_table_failure(odd.add_table)
    w = w or kernels.monoid_table_failure(odd.mul_table, odd.one)
    w = w or kernels.distrib_failure(odd.add_table, odd.mul_table)
    entries.append(AxiomCheck("odd-ring-laws", w is None, w))

    witness = None
    for e in even.elements:
        for f in even.elements:
            if mul(TriElement(e, 0), TriElement(f, 0)).odd_part != 0:
                witness = (e, f)
                break
        if witness:
            break
    if witness is None:
        for e in even.elements:
            for o in odd.elements:
                if (mul(TriElement(e, 0), TriElement(0, o)).even_part != 0
                        or mul(TriElement(0, o), TriElement(e, 0)).even_part != 0):
                    witness = (e, o)
                    break
            if witness:
                break
    if witness is None:
        for a in odd.elements:
            for b in odd.elements:
                if mul(TriElement(0, a), TriElement(0, b)) != ring.zero:
                    witness = (a, b)
                    break
            if witness:
                break
    entries.append(AxiomCheck("grading", witness is None, witness))

    witness = None
    for x in ring.elements():
        if mul(ring.one, x) != x or mul(x, ring.one) != x:
            witness = (x,)
            break
    entries.append(AxiomCheck("identity", witness is None, witness))

    witness = None
    for i in range(n):
        x = _pair(ring, i)
        for j in range(n):
            y = _pair(ring, j)
            s = ring.add(x, y)
            for k in range(n):
                z = _pair(ring, k)
                if mul(s, z) != ring.add(mul(x, z), mul(y, z)) or \
                        mul(z, s) != ring.add(mul(z, x), mul(z, y)):
                    witness = (x, y, z)
                    break
            if witness:
                break
        if witness:
            break
    entries.append(AxiomCheck("distributivity", witness is None, witness))

    witness = None
    for i in range(n):
        x = _pair(ring, i)
        for j in range(n):
            y = _pair(ring, j)
            xy = mul(x, y)
            for k in range(n):
                z = _pair(ring, k)
                if mul(xy, z) != mul(x, mul(y, z)):
                    witness = (x, y, z)
                    break
            if witness:
                break
        if witness:
            break
    entries.append(AxiomCheck("associativity", witness is None, witness))

    witness = None
    for x in ring.elements():
        for a in odd.elements:
            xa = mul(x, TriElement(0, a))
            ax = mul(TriElement(0, a), x)
            for b in odd.elements:
                ab = TriElement(0, odd.mul(a, b))
                if xa.even_part != 0 or \
                        mul(x, ab) != TriElement(0, odd.mul(xa.odd_part, b)):
                    witness = ("left", x, a, b)
                    break
                bx = mul(TriElement(0, b), x)
                if bx.even_part != 0 or \
                        mul(ab, x) != TriElement(0, odd.mul(a, bx.odd_part)):
                    witness = ("right", x, a, b)
                    break
            if witness:
                break
        if witness:
            break
    entries.append(AxiomCheck("triassociativity", witness is None, witness))

    witness = None
    for e in even.elements:
        left = {mul(TriElement(e, 0), TriElement(0, o)) for o in odd.elements}
        right = {mul(TriElement(0, o), TriElement(e, 0)) for o in odd.elements}
        if left != right:
            witness = (e,)
            break
    entries.append(AxiomCheck("odd-translation", witness is None, witness))

    return AxiomReport(tuple(entries))


def _check_structure_map(even: FiniteCommRing, odd: FiniteCommRing,
                         table: np.ndarray, which: str) -> None:
    if table.shape != (even.size,):
        raise ValueError(f"{which} must map every even element (length {even.size})")
    if int(table.min()) < 0 or int(table.max()) >= odd.size:
        raise ValueError(f"{which} has an out-of-range odd index")
    for a in even.elements:
        for b in even.elements:
            if int(table[even.add(a, b)]) != odd.add(int(table[a]), int(table[b])):
                raise NotAHomomorphism(which, (a, b))
            if int(table[even.mul(a, b)]) != odd.mul(int(table[a]), int(table[b])):
                raise NotAHomomorphism(which, (a, b))
    if int(table[even.one]) != odd.one:
        raise LocalIdentityMismatch(which, int(table[even.one]), odd.one)


def build_triring(even: FiniteCommRing, odd: FiniteCommRing,
                  lam, rho, name: str = "triring") -> Triring:
    """Assemble and exhaustively validate a triring.

    lam and rho list, for each even index x0, the odd indices of x0*1#
    and 1#*x0.  They must be unital ring homomorphisms into the local
    product, agree up to odd-ideal generation (so left and right
    translates coincide), and the assembled product must satisfy every
    triring law; any failure raises a typed error with a witness.
    """
    lam = _frozen(np.asarray(lam))
    rho = _frozen(np.asarray(rho))
    _check_structure_map(even, odd, lam, "lambda")
    _check_structure_map(even, odd, rho, "rho")

    ring = Triring(even, odd, lam, rho, name)

    # Principal odd ideals of lam(x0) and rho(x0) must coincide.
    for e in even.elements:
        left = {odd.mul(int(lam[e]), o) for o in odd.elements}
        right = {odd.mul(o, int(rho[e])) for o in odd.elements}
        if left != right:
            raise Axiom3Violation(e)

    report = verify_axioms(ring)
    for entry in report.failures():
        if entry.law == "triassociativity":
            raise TriassocViolation(entry.witness)
        raise AxiomViolation(entry.law, entry.witness, detail=name)
    return ring


def commutative_as_triring(even: FiniteCommRing, name: str | None = None) -> Triring:
    """A commutative ring viewed as a triring with zero odd part."""
    zero = make_table_ring([[0]], [[0]], 0, descriptor="0")
    return build_triring(even, zero, [0] * even.size, [0] * even.size,
                         name=name or f"{even.descriptor}-commutative")


def triquaternions_over(base: FiniteCommRing,
                        max_size: int = DEFAULT_MAX_SIZE) -> Triring:
    """The four-dimensional triring A.1 + A.i + A.j + A.k over a base A.

    Even part A[i] with i^2 = -1, odd part spanned by j (the local
    identity) and k with the same quadratic relation under the local
    product; the mixed action sends 1 -> j, i -> k on the left and
    1 -> j, i -> -k on the right.  Validity depends on the base: the
    bilinear extension is fully re-verified and a failing base raises
    AxiomViolation.
    """
    n = base.size
    if n * n > max_size:
        raise SizeLimit("component size", n * n, max_size)

    def flat(a, b):
        return a * n + b

    def complex_tables():
        add = np.zeros((n * n, n * n), dtype=np.int64)
        mul = np.zeros((n * n, n * n), dtype=np.int64)
        for a in range(n):
            for b in range(n):
                p = flat(a, b)
                for c in range(n):
                    for d in range(n):
                        q = flat(c, d)
                        add[p, q] = flat(base.add(a, c), base.add(b, d))
                        re = base.add(base.mul(a, c), base.neg(base.mul(b, d)))
                        im = base.add(base.mul(a, d), base.mul(b, c))
                        mul[p, q] = flat(re, im)
        return add, mul

    add, mul = complex_tables()
    even = make_table_ring(add, mul, flat(base.one, 0),
                           descriptor=f"{base.descriptor}[i]", max_size=max_size)
    odd = make_table_ring(add, mul, flat(base.one, 0),
                          descriptor=f"{base.descriptor}[k]#", max_size=max_size)
    lam = [flat(a, b) for a in range(n) for b in range(n)]
    rho = [flat(a, base.neg(b)) for a in range(n) for b in range(n)]
    ring = build_triring(even, odd, lam, rho,
                         name=f"triquaternions({base.descriptor})")
    assert verify_axioms(ring).ok
    return ring
