"""Subgroup enumeration for Z_m x Z_n via the 5-tuple parametrization.

Every subgroup of Z_m x Z_n corresponds to exactly one tuple (a, b, c, d, l)
with a | m, b | a, c | n, d | c, a/b = c/d, and 1 <= l <= a/b coprime to a/b.
This module enumerates those tuples, materializes the subgroup each one
names, classifies it (order, exponent, invariant factors, cyclicity), and
inverts the correspondence for an explicitly given subgroup.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm
from typing import Iterable, Iterator

from .arith import check_nat, divisors


class TupleMembershipError(ValueError):
    """A 5-tuple violates one of the defining conditions for the ambient group."""


class NotASubgroupError(ValueError):
    """An element set is not closed under the group operation."""


@dataclass(frozen=True, order=True)
class GoursatTuple:
    a: int
    b: int
    c: int
    d: int
    ell: int

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.c},{self.d},{self.ell})"


@dataclass(frozen=True)
class InvariantPair:
    """Canonical isomorphism type (u, v) with u | v, meaning Z_u x Z_v."""

    u: int
    v: int

    def __post_init__(self):
        if self.u < 1 or self.v % self.u != 0:
            raise ValueError(f"invalid invariant pair ({self.u}, {self.v})")


@dataclass(frozen=True)
class SubgroupDescriptor:
    ambient: tuple[int, int]
    tuple: GoursatTuple
    order: int
    exponent: int
    invariants: InvariantPair
    cyclic: bool
    generators: tuple[tuple[int, int], tuple[int, int]]


@dataclass(frozen=True)
class ElementSet:
    """An explicit subgroup: sorted, deduplicated (x mod m, y mod n) pairs."""

    ambient: tuple[int, int]
    elements: tuple[tuple[int, int], ...]

    @classmethod
    def from_iterable(
        cls, m: int, n: int, points: Iterable[tuple[int, int]]
    ) -> "ElementSet":
        pts = sorted({(x % m, y % n) for x, y in points})
        return cls((m, n), tuple(pts))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def check_membership(m: int, n: int, t: GoursatTuple) -> None:
    """Raise TupleMembershipError naming the first violated condition."""
    check_nat(m, "m")
    check_nat(n, "n")
    a, b, c, d, ell = t.a, t.b, t.c, t.d, t.ell
    for value, name in ((a, "a"), (b, "b"), (c, "c"), (d, "d"), (ell, "ell")):
        if value < 1:
            raise TupleMembershipError(f"{name} must be >= 1, got {value}")
    if m % a != 0:
        raise TupleMembershipError(f"a = {a} does not divide m = {m}")
    if a % b != 0:
        raise TupleMembershipError(f"b = {b} does not divide a = {a}")
    if n % c != 0:
        raise TupleMembershipError(f"c = {c} does not divide n = {n}")
    if c % d != 0:
        raise TupleMembershipError(f"d = {d} does not divide c = {c}")
    if a * d != b * c:
        raise TupleMembershipError(
            f"quotients differ: a/b = {a}/{b} but c/d = {c}/{d}"
        )
    e = a // b
    if t.ell > e:
        raise TupleMembershipError(f"ell = {ell} exceeds a/b = {e}")
    if gcd(ell, e) != 1:
        raise TupleMembershipError(f"ell = {ell} is not coprime to a/b = {e}")
    # derived identity; cannot fail once the above hold
    assert gcd(b, d) * lcm(a, c) == a * d


def enumerate_tuples(m: int, n: int) -> Iterator[GoursatTuple]:
    """Yield every valid tuple for Z_m x Z_n, lexicographic in (a,b,c,d,ell)."""
    check_nat(m, "m")
    check_nat(n, "n")
    for a in divisors(m):
        for b in divisors(a):
            e = a // b
            for c in divisors(n):
                if c % e != 0:
                    continue
                d = c // e
                for ell in range(1, e + 1):
                    if gcd(ell, e) == 1:
                        yield GoursatTuple(a, b, c, d, ell)


def describe(m: int, n: int, t: GoursatTuple) -> SubgroupDescriptor:
    """Classify the subgroup named by t: order, exponent, type, generators."""
    check_membership(m, n, t)
    u = gcd(t.b, t.d)
    v = lcm(t.a, t.c)
    gens = (
        ((m // t.a) % m, (t.ell * (n // t.c)) % n),
        (0, (n // t.d) % n),
    )
    return SubgroupDescriptor(
        ambient=(m, n),
        tuple=t,
        order=t.a * t.d,
        exponent=v,
        invariants=InvariantPair(u, v),
        cyclic=u == 1,
        generators=gens,
    )


def materialize(m: int, n: int, t: GoursatTuple) -> ElementSet:
    """The explicit element set {(i*m/a, i*ell*n/c + j*n/d)} mod (m, n)."""
    check_membership(m, n, t)
    xstep = m // t.a
    ystep_i = t.ell * (n // t.c)
    ystep_j = n // t.d
    points = []
    for i in range(t.a):
        x = (i * xstep) % m
        base = i * ystep_i
        for j in range(t.d):
            points.append((x, (base + j * ystep_j) % n))
    es = ElementSet.from_iterable(m, n, points)
    assert len(es) == t.a * t.d
    return es


def offset_form(m: int, n: int, t: GoursatTuple) -> list[tuple[int, int]]:
    """Per-row offsets (i, j_i) with j_i = -floor(i*ell*d/c).

    With j ranging over [j_i, j_i + d - 1] the unreduced second coordinate
    i*ell*n/c + j*n/d stays inside [0, n - 1].
    """
    check_membership(m, n, t)
    return [(i, -((i * t.ell * t.d) // t.c)) for i in range(t.a)]


def _assert_closed(s: ElementSet) -> None:
    m, n = s.ambient
    pts = set(s.elements)
    if (0, 0) not in pts:
        raise NotASubgroupError("missing identity element (0, 0)")
    for x1, y1 in pts:
        for x2, y2 in pts:
            if ((x1 + x2) % m, (y1 + y2) % n) not in pts:
                raise NotASubgroupError(
                    f"not closed: ({x1},{y1}) + ({x2},{y2}) escapes the set"
                )


def find_tuple(m: int, n: int, s: ElementSet) -> GoursatTuple:
    """Invert materialize: recover the unique tuple naming the subgroup s."""
    check_nat(m, "m")
    check_nat(n, "n")
    _assert_closed(s)
    a = len({x for x, _ in s.elements})
    d = sum(1 for x, _ in s.elements if x == 0)
    c = len({y for _, y in s.elements})
    b = (a * d) // c
    e = a // b
    for ell in range(1, e + 1):
        if gcd(ell, e) != 1:
            continue
        t = GoursatTuple(a, b, c, d, ell)
        if materialize(m, n, t) == s:
            return t
    raise NotASubgroupError(
        f"no tuple reproduces the given {len(s)}-element subgroup of "
        f"Z_{m} x Z_{n} (internal inconsistency)"
    )
