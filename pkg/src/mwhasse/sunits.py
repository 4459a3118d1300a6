"""S-units of Q as a concrete Mordell-Weil type group.

An element is ``sign * prod(q ** e_q)`` over a fixed finite prime set S.  The
group law is written additively, as is usual for these groups: ``x + y`` is
the product of the rational values, ``k * x`` the k-th power, ``-x`` the
inverse.  The torsion subgroup is {+1, -1}, so ``TORSION_ORDER == 2``.

Places are odd primes ``p`` outside S; the reduction map sends an S-unit to
its residue in F_p^x, whose exponent is ``p - 1``.

Other groups with the same axioms (Mordell-Weil groups of abelian varieties,
odd K-groups) would plug into :mod:`mwhasse.grouppoly` by offering the same
handful of operations: addition and scaling, ``is_torsion``, reduction and
order at a place, and an exponent-vector view for independence tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .arith import DEFAULT_TRIAL_BOUND, is_prime, primes_up_to, trial_factor, valuation

__all__ = [
    "TORSION_ORDER",
    "NotSmoothError",
    "InvalidContextError",
    "Support",
    "SUnit",
    "ReductionContext",
    "add",
    "scalar_mul",
    "neg",
    "from_rational",
    "parse_sunit",
    "reduce_mod",
    "order_mod",
    "independent",
    "valid_primes",
    "A1Report",
    "a1_density_experiment",
    "torsion_injects",
    "torsion_elements",
]

TORSION_ORDER = 2


class NotSmoothError(ValueError):
    def __init__(self, prime):
        super().__init__(f"prime factor {prime} lies outside the support")
        self.prime = prime


class InvalidContextError(ValueError):
    pass


@dataclass(frozen=True)
class Support:
    """The finite prime set S, strictly increasing."""

    primes: tuple[int, ...]

    def __post_init__(self):
        ps = tuple(int(q) for q in self.primes)
        if not ps:
            raise ValueError("support must be nonempty")
        if any(not is_prime(q) for q in ps):
            raise ValueError(f"support {ps} contains a non-prime")
        if any(a >= b for a, b in zip(ps, ps[1:])):
            raise ValueError("support primes must be strictly increasing")
        object.__setattr__(self, "primes", ps)

    def __contains__(self, q):
        return q in self.primes

    def __len__(self):
        return len(self.primes)


@dataclass(frozen=True)
class SUnit:
    support: Support
    sign: int
    exps: tuple[int, ...]

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        exps = tuple(int(e) for e in self.exps)
        if len(exps) != len(self.support):
            raise ValueError("exponent vector does not match the support")
        object.__setattr__(self, "exps", exps)

    @classmethod
    def identity(cls, support: Support) -> "SUnit":
        return cls(support, 1, (0,) * len(support))

    @classmethod
    def prime(cls, support: Support, q: int) -> "SUnit":
        exps = [0] * len(support)
        exps[support.primes.index(q)] = 1
        return cls(support, 1, tuple(exps))

    @property
    def exponents(self) -> dict[int, int]:
        return dict(zip(self.support.primes, self.exps))

    def value(self) -> Fraction:
        v = Fraction(self.sign)
        for q, e in zip(self.support.primes, self.exps):
            v *= Fraction(q) ** e
        return v

    def is_torsion(self) -> bool:
        return not any(self.exps)

    def is_identity(self) -> bool:
        return self.sign == 1 and self.is_torsion()

    def _check(self, other):
        if not isinstance(other, SUnit):
            return False
        if other.support != self.support:
            raise ValueError("S-units over different supports")
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        return SUnit(self.support, self.sign * other.sign, tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __neg__(self):
        return SUnit(self.support, self.sign, tuple(-e for e in self.exps))

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return self + (-other)

    def __rmul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        sign = self.sign if k % 2 else 1
        return SUnit(self.support, sign, tuple(k * e for e in self.exps))

    def __str__(self):
        v = self.value()
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"

    def to_json_dict(self):
        return {"value": str(self), "sign": self.sign, "exponents": self.exponents}


def add(x: SUnit, y: SUnit) -> SUnit:
    return x + y


def scalar_mul(k: int, x: SUnit) -> SUnit:
    return k * x


def neg(x: SUnit) -> SUnit:
    return -x


def torsion_elements(support: Support) -> tuple[SUnit, SUnit]:
    return SUnit.identity(support), SUnit(support, -1, (0,) * len(support))


def from_rational(numerator: int, denominator: int, support: Support) -> SUnit:
    """Factor ``numerator / denominator`` over the support."""
    if denominator == 0:
        raise ZeroDivisionError("zero denominator")
    if numerator == 0:
        raise NotSmoothError(0)
    v = Fraction(numerator, denominator)
    sign = 1 if v > 0 else -1
    num, den = abs(v.numerator), v.denominator
    exps = []
    for q in support.primes:
        e = 0
        while num % q == 0:
            num //= q
            e += 1
        while den % q == 0:
            den //= q
            e -= 1
        exps.append(e)
    for rest in (num, den):
        if rest != 1:
            # name the smallest offending prime
            d = 2
            while rest % d:
                d += 1
            raise NotSmoothError(d)
    return SUnit(support, sign, tuple(exps))


def parse_sunit(text: str, support: Support) -> SUnit:
    """Read ``"a"``, ``"-a/b"`` or ``"+a/b"`` as an element of the group."""
    s = str(text).strip()
    try:
        v = Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc
    if v.denominator != 1 and "/" not in s:
        raise ValueError(f"not a rational number: {text!r}")
    return from_rational(v.numerator, v.denominator, support)


@dataclass(frozen=True)
class ReductionContext:
    """An odd prime place ``p`` together with the factorization of ``p - 1``."""

    p: int
    factorization: tuple[tuple[int, int], ...]

    @classmethod
    def at(cls, p: int, trial_bound: int = DEFAULT_TRIAL_BOUND) -> "ReductionContext":
        if not is_prime(p):
            raise InvalidContextError(f"{p} is not prime")
        if p == 2:
            raise InvalidContextError("p = 2 does not separate the torsion points")
        return cls(p, trial_factor(p - 1, trial_bound))

    @property
    def exponent(self) -> int:
        return self.p - 1

    def check(self, x: SUnit):
        if self.p in x.support:
            raise InvalidContextError(f"p = {self.p} lies in the support")


def reduce_mod(x: SUnit, ctx: ReductionContext) -> int:
    """Residue of ``x`` in F_p^x, as an integer in ``[1, p)``."""
    ctx.check(x)
    p = ctx.p
    r = x.sign % p
    for q, e in zip(x.support.primes, x.exps):
        if e:
            r = r * pow(q, e, p) % p
    return r


def _order_of_residue(r: int, ctx: ReductionContext) -> int:
    p = ctx.p
    n = p - 1
    for q, _ in ctx.factorization:
        while n % q == 0 and pow(r, n // q, p) == 1:
            n //= q
    return n


def order_mod(x: SUnit, ctx: ReductionContext) -> int:
    """Multiplicative order of ``x mod p``."""
    return _order_of_residue(reduce_mod(x, ctx), ctx)


def _rank(vectors) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination."""
    rows = [list(v) for v in vectors]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        for i in range(rank + 1, len(rows)):
            ri = rows[i]
            rows[i] = [(pr[c] * ri[j] - ri[c] * pr[j]) // prev for j in range(ncols)]
        prev = pr[c]
        rank += 1
        if rank == len(rows):
            break
    return rank


def independent(xs) -> bool:
    """True iff the elements are linearly independent over Z.

    A torsion element gives a zero exponent vector, hence dependence.
    """
    xs = list(xs)
    if not xs:
        return True
    support = xs[0].support
    if any(x.support != support for x in xs):
        raise ValueError("S-units over different supports")
    return _rank(x.exps for x in xs) == len(xs)


def valid_primes(prime_bound: int, support: Support) -> list[int]:
    """Odd primes up to ``prime_bound`` outside the support: the usable places."""
    return [p for p in primes_up_to(prime_bound) if p != 2 and p not in support]


def torsion_injects(ctx: ReductionContext) -> bool:
    """Whether {+1, -1} stays two distinct residues mod ``p``."""
    return (-1) % ctx.p != 1


@dataclass(frozen=True)
class A1Report:
    l: int
    ks: tuple[int, ...]
    prime_bound: int
    hits: int
    total: int
    frequency: Fraction | None


def a1_density_experiment(points, l: int, ks, prime_bound: int) -> A1Report:
    """Frequency of places where ``l^k_i`` exactly divides ``ord_p(points[i])`` for every i.

    ``k_i = 0`` asks for ``l`` not dividing the order.
    """
    points = list(points)
    ks = tuple(int(k) for k in ks)
    if len(points) != len(ks):
        raise ValueError("need one exponent k per point")
    if not is_prime(l):
        raise ValueError(f"l = {l} is not prime")
    if any(k < 0 for k in ks):
        raise ValueError("exponents k must be nonnegative")
    if not independent(points):
        raise ValueError("points are not linearly independent")
    support = points[0].support if points else Support((2,))
    hits = total = 0
    for p in valid_primes(prime_bound, support):
        ctx = ReductionContext.at(p)
        total += 1
        if all(valuation(order_mod(x, ctx), l) == k for x, k in zip(points, ks)):
            hits += 1
    freq = Fraction(hits, total) if total else None
    return A1Report(l, ks, prime_bound, hits, total, freq)


def lcm_of_orders(xs, ctx: ReductionContext) -> int:
    return lcm(1, *(order_mod(x, ctx) for x in xs))
