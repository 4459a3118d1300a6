"""Integer helpers shared by the polynomial and group modules.

Primality, prime enumeration and factorization of arbitrary integers are
delegated to sympy.  Factoring ``p - 1`` for reduction contexts uses plain
trial division with an explicit bound, so that a scan never silently hangs
on a hard cofactor.
"""

from __future__ import annotations

from sympy import factorint, isprime, primerange

__all__ = [
    "FactorizationError",
    "is_prime",
    "primes_up_to",
    "prime_factors",
    "trial_factor",
    "valuation",
    "crt_pair",
]

DEFAULT_TRIAL_BOUND = 10**6


class FactorizationError(ArithmeticError):
    """Trial division stopped with an unfactored composite cofactor."""

    def __init__(self, n, cofactor, bound):
        super().__init__(
            f"could not factor {n}: cofactor {cofactor} has no factor <= {bound}"
        )
        self.n = n
        self.cofactor = cofactor
        self.bound = bound


def is_prime(n: int) -> bool:
    return n >= 2 and bool(isprime(n))


def primes_up_to(bound: int) -> list[int]:
    """All primes ``p <= bound`` in ascending order."""
    if bound < 2:
        return []
    return list(primerange(2, bound + 1))


def prime_factors(n: int) -> list[int]:
    """Sorted distinct prime divisors of ``|n|`` (empty for 0 and +-1)."""
    n = abs(n)
    if n <= 1:
        return []
    return sorted(factorint(n))


def trial_factor(n: int, bound: int = DEFAULT_TRIAL_BOUND) -> tuple[tuple[int, int], ...]:
    """Factor ``n >= 1`` by trial division up to ``bound``.

    Returns ``((q, e), ...)`` sorted by ``q``.  Raises
    :class:`FactorizationError` when a cofactor remains that may be composite.
    """
    if n < 1:
        raise ValueError("trial_factor expects a positive integer")
    out = []
    m = n
    d = 2
    while d * d <= m and d <= bound:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        if d * d <= m:
            # stopped on the bound, not on sqrt(m)
            raise FactorizationError(n, m, bound)
        out.append((m, 1))
    return tuple(out)


def valuation(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def crt_pair(r1: int, m1: int, r2: int, m2: int) -> tuple[int, int]:
    """Combine ``x = r1 mod m1`` and ``x = r2 mod m2`` for coprime moduli."""
    t = ((r2 - r1) * pow(m1, -1, m2)) % m2
    m = m1 * m2
    return (r1 + m1 * t) % m, m

