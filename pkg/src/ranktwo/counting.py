"""Closed-form subgroup counts for Z_m x Z_n.

Total count, count by order, count by isomorphism type, cyclic counts,
prime-power closed forms, a multiplicative fast path, and an aggregate
table builder.  Everything is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

from .arith import (
    check_nat,
    checked_add,
    checked_mul,
    divisors,
    euler_phi,
    is_prime,
    mobius,
    multiplicative_eval_2var,
    tau,
)


@dataclass(frozen=True, order=True)
class TypeKey:
    """Isomorphism type Z_A x Z_B with A | B."""

    A: int
    B: int

    def __post_init__(self):
        check_nat(self.A, "A")
        check_nat(self.B, "B")
        if self.B % self.A != 0:
            raise ValueError(f"A = {self.A} does not divide B = {self.B}")


@dataclass(frozen=True)
class SubgroupTable:
    ambient: tuple[int, int]
    total: int
    by_order: dict[int, int]
    by_type: dict[TypeKey, int]
    cyclic_total: int
    noncyclic_total: int


def count_total(m: int, n: int) -> int:
    """Total number of subgroups, as sum of phi(t)*tau(m/t)*tau(n/t) over t | gcd(m,n)."""
    check_nat(m, "m")
    check_nat(n, "n")
    total = 0
    for t in divisors(gcd(m, n)):
        total = checked_add(
            total, checked_mul(euler_phi(t), checked_mul(tau(m // t), tau(n // t)))
        )
    return total


def count_total_reference(m: int, n: int) -> int:
    """Total number of subgroups, as the gcd double sum over i | m, j | n."""
    check_nat(m, "m")
    check_nat(n, "n")
    total = 0
    for i in divisors(m):
        for j in divisors(n):
            total = checked_add(total, gcd(i, j))
    return total


def count_total_prime_power(p: int, a: int, b: int) -> int:
    """Total subgroup count of Z_{p^a} x Z_{p^b}, 1 <= a <= b, in closed form."""
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    check_nat(a, "a")
    check_nat(b, "b")
    if a > b:
        raise ValueError(f"exponents must be ordered: a = {a} > b = {b}")
    num = (
        (b - a + 1) * p ** (a + 2)
        - (b - a - 1) * p ** (a + 1)
        - (a + b + 3) * p
        + (a + b + 1)
    )
    den = (p - 1) ** 2
    assert num % den == 0
    return num // den


def count_by_order(m: int, n: int, delta: int) -> int:
    """Number of subgroups of order delta; 0 when delta does not divide m*n."""
    check_nat(m, "m")
    check_nat(n, "n")
    check_nat(delta, "delta")
    total = 0
    for i in divisors(gcd(m, delta)):
        for j in divisors(gcd(n, delta)):
            if (i * j) % delta == 0:
                total = checked_add(total, euler_phi(i * j // delta))
    return total


def count_by_order_prime_power(p: int, a: int, b: int, c: int) -> int:
    """Number of order-p^c subgroups of Z_{p^a} x Z_{p^b}, 1 <= a <= b, 0 <= c <= a+b."""
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    check_nat(a, "a")
    check_nat(b, "b")
    if a > b:
        raise ValueError(f"exponents must be ordered: a = {a} > b = {b}")
    if c < 0 or c > a + b:
        raise ValueError(f"c = {c} outside [0, {a + b}]")
    if c <= a:
        k = c
    elif c <= b:
        k = a
    else:
        k = a + b - c
    return (p ** (k + 1) - 1) // (p - 1)


def count_by_type(m: int, n: int, key: TypeKey) -> int:
    """Number of subgroups isomorphic to Z_A x Z_B; 0 when A does not divide gcd(m,n)."""
    check_nat(m, "m")
    check_nat(n, "n")
    A, B = key.A, key.B
    if gcd(m, n) % A != 0:
        return 0
    ab = A * B
    total = 0
    for i in divisors(m):
        for j in divisors(n):
            if (i * j) % ab == 0 and lcm(i, j) == B:
                total = checked_add(total, euler_phi(i * j // ab))
    return total


def count_cyclic(m: int, n: int) -> int:
    """Number of cyclic subgroups, as sum of (mu*phi)(t)*tau(m/t)*tau(n/t)."""
    check_nat(m, "m")
    check_nat(n, "n")

    def mu_star_phi(t: int) -> int:
        return sum(mobius(d) * euler_phi(t // d) for d in divisors(t))

    total = 0
    for t in divisors(gcd(m, n)):
        total = checked_add(
            total, checked_mul(mu_star_phi(t), checked_mul(tau(m // t), tau(n // t)))
        )
    return total


def count_cyclic_reference(m: int, n: int) -> int:
    """Number of cyclic subgroups, as the phi(gcd(i,j)) double sum."""
    check_nat(m, "m")
    check_nat(n, "n")
    total = 0
    for i in divisors(m):
        for j in divisors(n):
            total = checked_add(total, euler_phi(gcd(i, j)))
    return total


def count_cyclic_by_order(m: int, n: int, delta: int) -> int:
    """Number of cyclic subgroups of order delta."""
    check_nat(m, "m")
    check_nat(n, "n")
    check_nat(delta, "delta")
    total = 0
    for i in divisors(m):
        for j in divisors(n):
            if lcm(i, j) == delta:
                total = checked_add(total, euler_phi(gcd(i, j)))
    return total


def count_total_fast(m: int, n: int) -> int:
    """Total subgroup count via the product of prime-power local values.

    At primes dividing only one of m, n the local factor degenerates to
    the divisor count (alpha + beta + 1); otherwise the rank-two closed
    form applies with the exponents in sorted order.
    """

    def local(p: int, alpha: int, beta: int) -> int:
        if min(alpha, beta) == 0:
            return alpha + beta + 1
        return count_total_prime_power(p, min(alpha, beta), max(alpha, beta))

    return multiplicative_eval_2var(local, m, n)


def build_table(m: int, n: int) -> SubgroupTable:
    """Aggregate report from the closed forms only; zero-count rows omitted."""
    check_nat(m, "m")
    check_nat(n, "n")
    total = count_total(m, n)
    by_order = {}
    for delta in divisors(m * n):
        cnt = count_by_order(m, n, delta)
        if cnt:
            by_order[delta] = cnt
    by_type = {}
    for A in divisors(gcd(m, n)):
        for B in divisors(m * n // A):
            if B % A != 0:
                continue
            key = TypeKey(A, B)
            cnt = count_by_type(m, n, key)
            if cnt:
                by_type[key] = cnt
    cyclic = count_cyclic(m, n)
    return SubgroupTable(
        ambient=(m, n),
        total=total,
        by_order=by_order,
        by_type=by_type,
        cyclic_total=cyclic,
        noncyclic_total=total - cyclic,
    )
