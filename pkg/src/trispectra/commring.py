"""Finite commutative unital rings given by explicit operation tables.

Carriers are index ranges 0..size-1 with the additive identity pinned at
index 0.  Every construction validates the full ring axioms exhaustively
before returning, so downstream code never re-checks them.  Both the even
part of a triring and its odd part (under the local product) are values
of this module.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from trispectra.errors import AxiomViolation, SizeLimit
from trispectra import kernels

DEFAULT_MAX_SIZE = 64
DEFAULT_MAX_IDEALS = 4096


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=np.int64)
    a.flags.writeable = False
    return a


@dataclass(frozen=True, eq=False)
class FiniteCommRing:
    """A finite commutative ring with identity, as validated index tables."""

    size: int
    add_table: np.ndarray  # (size, size), read-only int64
    mul_table: np.ndarray
    one: int
    descriptor: str
    neg_table: np.ndarray = field(repr=False, default=None)

    zero = 0

    def __post_init__(self):
        if self.neg_table is None:
            neg = np.zeros(self.size, dtype=np.int64)
            for x in range(self.size):
                row = self.add_table[x]
                neg[x] = int(np.nonzero(row == 0)[0][0])
            object.__setattr__(self, "neg_table", _frozen(neg))

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def power(self, a: int, m: int) -> int:
        """a^m for m >= 0; a^0 is the identity."""
        acc = self.one
        for _ in range(m):
            acc = int(self.mul_table[acc, a])
        return acc

    @property
    def elements(self) -> range:
        return range(self.size)

    def __repr__(self):
        return f"FiniteCommRing({self.descriptor}, size={self.size})"


def _validate_tables(add: np.ndarray, mul: np.ndarray, one: int, name: str) -> None:
    n = add.shape[0]
    if add.shape != (n, n) or mul.shape != (n, n):
        raise AxiomViolation("table-shape", (add.shape, mul.shape), detail=name)
    if not (0 <= one < n):
        raise AxiomViolation("identity-range", one, detail=name)
    if int(add.min()) < 0 or int(add.max()) >= n or int(mul.min()) < 0 or int(mul.max()) >= n:
        raise AxiomViolation("entry-range", None, detail=name)
    w = kernels.group_table_failure(add)
    if w is not None:
        raise AxiomViolation(w[0], w[1:], detail=name)
    w = kernels.monoid_table_failure(mul, one)
    if w is not None:
        raise AxiomViolation(w[0], w[1:], detail=name)
    w = kernels.distrib_failure(add, mul)
    if w is not None:
        raise AxiomViolation(w[0], w[1:], detail=name)


def make_table_ring(add, mul, one: int, descriptor: str = "table",
                    max_size: int = DEFAULT_MAX_SIZE) -> FiniteCommRing:
    """Validate explicit tables and wrap them as a ring."""
    add = _frozen(np.asarray(add))
    mul = _frozen(np.asarray(mul))
    n = add.shape[0]
    if n > max_size:
        raise SizeLimit("ring size", n, max_size)
    _validate_tables(add, mul, int(one), descriptor)
    return FiniteCommRing(n, add, mul, int(one), descriptor)


def make_zn(n: int, max_size: int = DEFAULT_MAX_SIZE) -> FiniteCommRing:
    """The ring of integers mod n (n >= 1; n = 1 is the zero ring)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > max_size:
        raise SizeLimit("ring size", n, max_size)
    idx = np.arange(n, dtype=np.int64)
    add = (idx[:, None] + idx[None, :]) % n
    mul = (idx[:, None] * idx[None, :]) % n
    return FiniteCommRing(n, _frozen(add), _frozen(mul), 1 % n, f"Z{n}")


def make_product(factors: list[FiniteCommRing],
                 max_size: int = DEFAULT_MAX_SIZE) -> FiniteCommRing:
    """The direct product ring, indices flattened row-major."""
    if not factors:
        raise ValueError("product needs at least one factor")
    sizes = [r.size for r in factors]
    total = 1
    for s in sizes:
        total *= s
    if total > max_size:
        raise SizeLimit("ring size", total, max_size)

    def flatten(tup):
        out = 0
        for s, v in zip(sizes, tup):
            out = out * s + v
        return out

    def unflatten(i):
        out = []
        for s in reversed(sizes):
            out.append(i % s)
            i //= s
        return tuple(reversed(out))

    add = np.zeros((total, total), dtype=np.int64)
    mul = np.zeros((total, total), dtype=np.int64)
    for i in range(total):
        ti = unflatten(i)
        for j in range(total):
            tj = unflatten(j)
            add[i, j] = flatten(tuple(r.add(a, b) for r, a, b in zip(factors, ti, tj)))
            mul[i, j] = flatten(tuple(r.mul(a, b) for r, a, b in zip(factors, ti, tj)))
    one = flatten(tuple(r.one for r in factors))
    descriptor = "x".join(r.descriptor for r in factors)
    return FiniteCommRing(total, _frozen(add), _frozen(mul), one, descriptor)


def make_ring(descriptor: dict, max_size: int = DEFAULT_MAX_SIZE) -> FiniteCommRing:
    """Build a ring from a descriptor dict (the triring-document form).

    Kinds: {"kind":"zn","n":N}, {"kind":"product","factors":[...]},
    {"kind":"table","size":K,"add":[[...]],"mul":[[...]],"one":J}.
    """
    kind = descriptor.get("kind")
    if kind == "zn":
        return make_zn(int(descriptor["n"]), max_size=max_size)
    if kind == "product":
        factors = [make_ring(d, max_size=max_size) for d in descriptor["factors"]]
        return make_product(factors, max_size=max_size)
    if kind == "table":
        return make_table_ring(descriptor["add"], descriptor["mul"],
                               descriptor["one"], descriptor="table",
                               max_size=max_size)
    raise ValueError(f"unknown ring descriptor kind: {kind!r}")


@dataclass(frozen=True, eq=False)
class Ideal:
    """An ideal stored as its full sorted member list."""

    ring: FiniteCommRing
    members: tuple[int, ...]
    member_set: frozenset[int] = field(repr=False, default=None)

    def __post_init__(self):
        if self.member_set is None:
            object.__setattr__(self, "member_set", frozenset(self.members))

    def __contains__(self, x: int) -> bool:
        return x in self.member_set

    def __eq__(self, other):
        return (isinstance(other, Ideal) and self.ring is other.ring
                and self.members == other.members)

    def __hash__(self):
        return hash(self.members)

    def __le__(self, other: "Ideal") -> bool:
        return self.member_set <= other.member_set

    @property
    def is_whole(self) -> bool:
        return len(self.members) == self.ring.size

    def __repr__(self):
        return f"Ideal({{{','.join(map(str, self.members))}}})"


def _as_ideal(ring: FiniteCommRing, members) -> Ideal:
    return Ideal(ring, tuple(sorted(members)))


def is_ideal_set(ring: FiniteCommRing, members: frozenset[int]) -> bool:
    """Literal check: contains 0, closed under + and under ring multiples."""
    if 0 not in members:
        return False
    add, mul = ring.add_table, ring.mul_table
    for a in members:
        for b in members:
            if int(add[a, b]) not in members:
                return False
        for r in ring.elements:
            if int(mul[r, a]) not in members:
                return False
    return True


def principal_ideal(ring: FiniteCommRing, g: int) -> Ideal:
    """The ideal of all ring multiples of g."""
    col = ring.mul_table[:, g]
    return _as_ideal(ring, set(int(v) for v in col))


def _sum_sets(ring: FiniteCommRing, a: frozenset[int], b: frozenset[int]) -> frozenset[int]:
    add = ring.add_table
    return frozenset(int(add[x, y]) for x in a for y in b)


def ideal_generated(ring: FiniteCommRing, gens) -> Ideal:
    """Smallest ideal containing gens (sum of their principal ideals)."""
    members = frozenset([0])
    for g in sorted(set(gens)):
        members = _sum_sets(ring, members, principal_ideal(ring, g).member_set)
    return _as_ideal(ring, members)


def ideal_sum(i: Ideal, j: Ideal) -> Ideal:
    return _as_ideal(i.ring, _sum_sets(i.ring, i.member_set, j.member_set))


def ideal_intersection(i: Ideal, j: Ideal) -> Ideal:
    return _as_ideal(i.ring, i.member_set & j.member_set)


def ideal_product(i: Ideal, j: Ideal) -> Ideal:
    """Ideal generated by all pairwise products."""
    mul = i.ring.mul_table
    prods = set(int(mul[a, b]) for a in i.members for b in j.members)
    return ideal_generated(i.ring, prods)


def enumerate_ideals(ring: FiniteCommRing,
                     max_ideals: int = DEFAULT_MAX_IDEALS) -> list[Ideal]:
    """Every ideal of the ring, sorted by size then member list.

    Computed as the closure of the principal ideals under ideal sum;
    every ideal is a finite sum of principal ideals, so the closure is
    complete.
    """
    principals = []
    seen_p = set()
    for g in ring.elements:
        p = principal_ideal(ring, g)
        if p.members not in seen_p:
            seen_p.add(p.members)
            principals.append(p)
    found = {(0,): _as_ideal(ring, [0])}
    queue = [found[(0,)]]
    while queue:
        current = queue.pop()
        for p in principals:
            s = ideal_sum(current, p)
            if s.members not in found:
                if len(found) >= max_ideals:
                    raise SizeLimit("ideal count", len(found) + 1, max_ideals)
                found[s.members] = s
                queue.append(s)
    return sorted(found.values(), key=lambda i: (len(i.members), i.members))


def is_prime_ideal(ring: FiniteCommRing, ideal: Ideal) -> bool:
    """Proper, and ab in I forces a in I or b in I (exhaustive)."""
    if ideal.is_whole:
        return False
    mem = ideal.member_set
    mul = ring.mul_table
    outside = [x for x in ring.elements if x not in mem]
    for a in outside:
        row = mul[a]
        for b in outside:
            if int(row[b]) in mem:
                return False
    return True


def nilpotency_index(ring: FiniteCommRing, x: int) -> int | None:
    """Least m in 1..size with x^m = 0, or None."""
    acc = x
    for m in range(1, ring.size + 1):
        if acc == 0:
            return m
        acc = ring.mul(acc, x)
    return None


def nilradical_comm(ring: FiniteCommRing) -> Ideal:
    """All nilpotent elements; verified to form an ideal."""
    members = frozenset(x for x in ring.elements
                        if nilpotency_index(ring, x) is not None)
    assert is_ideal_set(ring, members), "nilpotent elements failed to form an ideal"
    return _as_ideal(ring, members)


def quotient_ring(ring: FiniteCommRing, ideal: Ideal) -> tuple[FiniteCommRing, list[int]]:
    """Quotient by an ideal with minimum-index coset representatives.

    Returns the quotient ring and the coset index of every parent element.
    Cosets are ordered by representative, so the zero coset keeps index 0.
    """
    add = ring.add_table
    coset_of = [-1] * ring.size
    reps = []
    for x in ring.elements:
        if coset_of[x] >= 0:
            continue
        coset = sorted(int(add[x, i]) for i in ideal.members)
        idx = len(reps)
        reps.append(coset[0])
        for y in coset:
            coset_of[y] = idx
    k = len(reps)
    qadd = np.zeros((k, k), dtype=np.int64)
    qmul = np.zeros((k, k), dtype=np.int64)
    for i, a in enumerate(reps):
        for j, b in enumerate(reps):
            qadd[i, j] = coset_of[ring.add(a, b)]
            qmul[i, j] = coset_of[ring.mul(a, b)]
    q = make_table_ring(qadd, qmul, coset_of[ring.one],
                        descriptor=f"{ring.descriptor}/{{{','.join(map(str, ideal.members))}}}",
                        max_size=ring.size)
    return q, coset_of


def has_zero_divisors(ring: FiniteCommRing) -> bool:
    mul = ring.mul_table
    for a in range(1, ring.size):
        row = mul[a]
        for b in range(1, ring.size):
            if int(row[b]) == 0:
                return True
    return False
