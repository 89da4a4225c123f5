"""Exact modular arithmetic for the equation x1 + x2 = k*x3 in Z_n.

Triple enumeration, divisibility structure of triples, multiplicative orders,
factorization, and the symmetric / multiplicatively-periodic subset predicates.
All functions are pure and operate on small immutable values.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .errors import InputError

#: Above this modulus enumerate_triples returns a lazy iterator instead of a
#: list (the triple count grows as n**2).
TRIPLE_MATERIALIZE_CAP = 4096

Factorization = list[tuple[int, int]]


@dataclass(frozen=True)
class CyclicInstance:
    """The equation x1 + x2 = k*x3 over Z_n.

    The coefficient is stored reduced into [0, n); the congruence only depends
    on k mod n.
    """

    n: int
    k: int

    def __post_init__(self):
        if self.n < 1:
            raise InputError(f"modulus must be a positive integer, got {self.n}")
        object.__setattr__(self, "k", self.k % self.n)


class Triple(NamedTuple):
    x1: int
    x2: int
    x3: int


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factorize(n: int) -> Factorization:
    """Canonical factorization of n >= 1 as an increasing list of (prime, exponent)."""
    if n < 1:
        raise InputError(f"cannot factor {n}; expected n >= 1")
    factors: Factorization = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            factors.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        factors.append((n, 1))
    return factors


def solutions_by_sum(inst: CyclicInstance) -> tuple[tuple[int, ...], ...]:
    """For each residue s, the increasing tuple of x3 with k*x3 = s (mod n)."""
    n, k = inst.n, inst.k
    sols: list[list[int]] = [[] for _ in range(n)]
    for x3 in range(n):
        sols[(k * x3) % n].append(x3)
    return tuple(tuple(s) for s in sols)


def iter_triples(inst: CyclicInstance) -> Iterator[Triple]:
    """All solutions of x1 + x2 = k*x3 (mod n) in lexicographic order.

    Repeated coordinates are allowed; rainbowness requires three distinct
    colors, which makes repeated elements harmless downstream.
    """
    n = inst.n
    sols = solutions_by_sum(inst)
    for x1 in range(n):
        for x2 in range(n):
            for x3 in sols[(x1 + x2) % n]:
                yield Triple(x1, x2, x3)


def enumerate_triples(inst: CyclicInstance, cap: int = TRIPLE_MATERIALIZE_CAP):
    """Lexicographic triples of the instance.

    Returns a materialized list for n <= cap and a streaming iterator above it.
    """
    if inst.n <= cap:
        return list(iter_triples(inst))
    return iter_triples(inst)


def _check_residue(x: int, n: int, name: str) -> None:
    if not 0 <= x < n:
        raise InputError(f"{name}={x} is not a residue in [0, {n})")


def is_triple(inst: CyclicInstance, x1: int, x2: int, x3: int) -> bool:
    """True iff (x1 + x2 - k*x3) = 0 (mod n)."""
    for name, x in (("x1", x1), ("x2", x2), ("x3", x3)):
        _check_residue(x, inst.n, name)
    return (x1 + x2 - inst.k * x3) % inst.n == 0


def multiplicative_order(a: int, q: int) -> int:
    """Smallest e >= 1 with a**e = 1 (mod q), for q prime and a not divisible by q."""
    if not is_prime(q):
        raise InputError(f"{q} is not prime")
    a %= q
    if a == 0:
        raise InputError(f"order of 0 mod {q} is undefined")
    e, power = 1, a
    while power != 1:
        power = (power * a) % q
        e += 1
    return e


def generates_full_group(a: int, q: int) -> bool:
    """True iff a generates the multiplicative group Z_q^*."""
    return multiplicative_order(a, q) == q - 1


def project_triple(t: Triple, inst: CyclicInstance, m: int) -> Triple:
    """Divide a triple with all coordinates divisible by m down to Z_{n/m}.

    The result satisfies the instance (n/m, k mod n/m).
    """
    if m < 1 or inst.n % m != 0:
        raise InputError(f"m={m} does not divide the modulus {inst.n}")
    for name, x in zip(("x1", "x2", "x3"), t):
        _check_residue(x, inst.n, name)
        if x % m != 0:
            raise InputError(f"{name}={x} is not divisible by m={m}")
    return Triple(t.x1 // m, t.x2 // m, t.x3 // m)


def divisibility_count(t: Triple, q: int) -> int:
    """How many coordinates of the triple are divisible by the prime q (0..3).

    When gcd(q, k) = 1 the value 2 never occurs; that is a module property
    checked by the test suite, not a postcondition.
    """
    if not is_prime(q):
        raise InputError(f"{q} is not prime")
    return sum(1 for x in t if x % q == 0)


def is_symmetric_subset(S: set[int], q: int) -> bool:
    """True iff S = -S inside Z_q."""
    return all((q - x) % q in S for x in S)


def is_k_periodic_subset(S: set[int], k: int, q: int) -> bool:
    """True iff S is a union of cosets of the multiplicative subgroup <k> in Z_q^*.

    Equivalently k*S = S. Periodicity is defined on Z_q^*, so 0 in S is an error.
    """
    if not is_prime(q):
        raise InputError(f"{q} is not prime")
    if math.gcd(k, q) != 1:
        raise InputError(f"k={k} is not invertible mod {q}")
    if 0 in S:
        raise InputError("periodicity is defined on nonzero residues; 0 found in S")
    for x in S:
        if not 0 < x < q:
            raise InputError(f"{x} is not a residue in [1, {q})")
    return {(k * x) % q for x in S} == S
