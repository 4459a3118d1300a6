"""Polynomials ``F(n) = P_0 + n P_1 + ... + n^d P_d`` with S-unit coefficients.

Writing each coefficient as ``sign * prod q^e``, the value ``F(n)`` is

    (-1)^sigma(n) * prod_q q^E_q(n)

where ``E_q(n) = sum_i e_{i,q} n^i`` is an integer polynomial per support
prime and ``sigma(n) = sum_{i: P_i < 0} n^i``.  Everything below works on
these exponent polynomials.

The support primes are independent in the group, so they serve directly as
the independent points of the decomposition ``2 F(n) = sum_q 2 E_q(n) [q]``;
the gcd of ``F`` is the Z[x] gcd of the nonzero ``2 E_q``.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from ._parallel import map_ordered
from .hasse import HasseVerdict, Principle, hasse_principle_verdict
from .polyring import IntPoly, eval_poly, gcd_many, integer_roots
from .sunits import (
    TORSION_ORDER,
    ReductionContext,
    SUnit,
    Support,
    order_mod,
    reduce_mod,
    valid_primes,
)
from .arith import prime_factors, valuation

__all__ = [
    "InconsistencyError",
    "GroupPoly",
    "LocalOutcome",
    "GroupHasseReport",
    "MembershipReport",
    "eval_group",
    "gcd_of",
    "local_solvable",
    "local_solvable_fixed_T",
    "global_solve",
    "group_hasse_verdict",
    "counterexample_fixed_torsion",
    "dynamical_local",
    "dynamical_verdict",
    "membership_local",
    "membership_global",
    "membership_verdict",
    "hermite_normal_form",
]


class InconsistencyError(RuntimeError):
    """The algebra of the gcd characterization was contradicted: a bug."""


@dataclass(frozen=True)
class GroupPoly:
    """Coefficients ``P_0..P_d`` over one support; trailing identities are trimmed."""

    support: Support
    coeffs: tuple[SUnit, ...]

    def __post_init__(self):
        cs = list(self.coeffs)
        for c in cs:
            if c.support != self.support:
                raise ValueError("coefficients must share the polynomial's support")
        while cs and cs[-1].is_identity():
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def from_coeffs(cls, coeffs) -> "GroupPoly":
        coeffs = list(coeffs)
        if not coeffs:
            raise ValueError("need at least one coefficient to fix the support")
        return cls(coeffs[0].support, tuple(coeffs))

    @classmethod
    def from_exponent_polys(cls, support: Support, exps=None, sign=None) -> "GroupPoly":
        """Build ``F`` from ``{q: E_q}`` and a sign polynomial ``sigma``.

        ``sigma`` is read mod 2: coefficient ``i`` odd means ``P_i`` is negative.
        """
        exps = dict(exps or {})
        sign = sign if sign is not None else IntPoly()
        for q in exps:
            if q not in support:
                raise ValueError(f"{q} is not in the support")
        d = max([sign.degree] + [e.degree for e in exps.values()] + [0])
        coeffs = []
        for i in range(d + 1):
            s = -1 if sign[i] % 2 else 1
            vec = tuple(exps[q][i] if q in exps else 0 for q in support.primes)
            coeffs.append(SUnit(support, s, vec))
        return cls(support, tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @functools.cached_property
    def exponent_polys(self) -> dict[int, IntPoly]:
        """``{q: E_q}`` for every support prime (zero polynomials included)."""
        return {
            q: IntPoly(c.exps[j] for c in self.coeffs)
            for j, q in enumerate(self.support.primes)
        }

    @functools.cached_property
    def sign_poly(self) -> IntPoly:
        return IntPoly(1 if c.sign < 0 else 0 for c in self.coeffs)

    def to_json_dict(self):
        return {
            "support": list(self.support.primes),
            "coeffs": [str(c) for c in self.coeffs],
            "factored": [{"sign": c.sign, "exponents": c.exponents} for c in self.coeffs],
        }


def eval_group(F: GroupPoly, n: int) -> SUnit:
    """``F(n)`` as an element of the group."""
    sign = -1 if eval_poly(F.sign_poly, n) % 2 else 1
    exps = tuple(eval_poly(F.exponent_polys[q], n) for q in F.support.primes)
    return SUnit(F.support, sign, exps)


def gcd_of(F: GroupPoly) -> IntPoly:
    """gcd of ``F``: the Z[x] gcd of ``2 E_q`` over support primes with ``E_q != 0``.

    The zero polynomial when ``2 F`` vanishes, i.e. every coefficient is torsion.
    """
    fs = [TORSION_ORDER * e for e in F.exponent_polys.values() if not e.is_zero()]
    if not fs:
        return IntPoly()
    return gcd_many(fs)


# --------------------------------------------------------------------------
# local and global solvability


def _residue_at(F: GroupPoly, n: int, ctx: ReductionContext, bases) -> int:
    """``F(n) mod p``; exponents are taken mod ``p - 1``."""
    p, e = ctx.p, ctx.p - 1
    r = p - 1 if eval_poly(F.sign_poly, n) % 2 else 1
    for q, b in bases:
        k = eval_poly(F.exponent_polys[q], n) % e
        if k:
            r = r * pow(b, k, p) % p
    return r


def _bases(F, ctx):
    ctx.check(SUnit.identity(F.support))
    return [(q, q % ctx.p) for q in F.support.primes]


def local_solvable(F: GroupPoly, ctx: ReductionContext) -> tuple[int, int] | None:
    """Smallest ``n`` in ``[0, p-1)`` with ``F(n) = T mod p`` for a torsion ``T``.

    Returns ``(n, T)`` with ``T`` in {+1, -1}, or ``None``.  ``F(n) mod p``
    depends only on ``n mod (p - 1)``, so the search is exhaustive.
    """
    return _local_search(F, ctx, None)


def local_solvable_fixed_T(F: GroupPoly, T: int, ctx: ReductionContext) -> int | None:
    """Smallest ``n`` in ``[0, p-1)`` with ``F(n) = T mod p`` for the given ``T``."""
    if T not in (1, -1):
        raise ValueError("T must be a torsion value, +1 or -1")
    hit = _local_search(F, ctx, T)
    return None if hit is None else hit[0]


def _local_search(F, ctx, T):
    bases = _bases(F, ctx)
    p = ctx.p
    targets = {1: 1, p - 1: -1}
    if T is not None:
        targets = {T % p: T}
    for n in range(p - 1):
        r = _residue_at(F, n, ctx, bases)
        if r in targets:
            return n, targets[r]
    return None


def global_solve(F: GroupPoly) -> tuple[int, int] | None:
    """An integer ``n`` and torsion ``T`` with ``F(n) = T`` exactly, if any.

    Solutions are exactly the integer roots of :func:`gcd_of` (or every ``n``
    when that gcd is zero); the smallest root in absolute value is returned.
    """
    g = gcd_of(F)
    if g.is_zero():
        v = eval_group(F, 0)
        return 0, v.sign
    for n in sorted(integer_roots(g), key=lambda r: (abs(r), r)):
        v = eval_group(F, n)
        if not v.is_torsion():
            raise InconsistencyError(f"gcd root {n} but F({n}) = {v} is not torsion")
        return n, v.sign
    return None


# --------------------------------------------------------------------------
# dynamical variant: S_n = phi^n F(n)


def _dynamical_window(phi: int, p: int) -> int:
    """Number of ``n`` to try so every value of ``ord(S_n mod p)`` is seen.

    ``ord(S_n) = o / gcd(o, phi^n)`` where ``o = ord(F(n))`` depends on
    ``n mod (p-1)``; ``gcd(o, phi^n)`` is constant once ``n * v_q(phi)``
    reaches ``v_q(p-1)`` for each prime ``q`` dividing both.
    """
    e = p - 1
    stable = 0
    for q in prime_factors(gcd(abs(phi), e)):
        need = -(-valuation(e, q) // valuation(phi, q))
        stable = max(stable, need)
    return stable + e


def dynamical_local(
    F: GroupPoly, phi: int, ctx: ReductionContext, T: int | None = None
) -> tuple[int, int] | None:
    """Smallest natural ``n`` with ``phi^n F(n) = T mod p`` (``T = +-1``, or either if ``None``).

    Here ``phi`` acts as multiplication by an integer, so the value is
    ``F(n) ** (phi ** n)`` in multiplicative terms.  Torsion targets are
    recognised by the order of ``S_n mod p`` alone, which takes only finitely
    many patterns; the search window covers all of them, so ``None`` is a
    proof of absence.
    """
    p = ctx.p
    if phi % p == 0:
        raise ValueError(f"phi = {phi} is not invertible mod {p}")
    if T is not None and T not in (1, -1):
        raise ValueError("T must be a torsion value, +1 or -1")
    bases = _bases(F, ctx)
    e = p - 1
    targets = {1: 1, p - 1: -1} if T is None else {T % p: T}
    for n in range(_dynamical_window(phi, p)):
        x = _residue_at(F, n % e, ctx, bases)
        r = pow(x, pow(phi, n, e), p)
        if r in targets:
            return n, targets[r]
    return None


# --------------------------------------------------------------------------
# verdicts


@dataclass(frozen=True)
class LocalOutcome:
    prime: int
    n: int | None
    T: int | None


@dataclass(frozen=True)
class GroupHasseReport:
    """Local and global solvability of ``F`` next to the classical verdict for its gcd.

    ``theorem_consistent`` records whether "local <=> global for F" agrees with
    "the classical principle holds for gcd_of(F)", both as observed at
    ``prime_bound``.
    """

    phi: int
    prime_bound: int
    exceptional_allowance: int
    gcd_poly: IntPoly
    local: tuple[LocalOutcome, ...]
    local_failures: tuple[int, ...]
    local_holds: bool
    global_witness: tuple[int, int] | None
    global_holds: bool
    principle_holds: bool
    classical_verdict: HasseVerdict | None
    theorem_consistent: bool


def _local_at(F, phi, p):
    ctx = ReductionContext.at(p)
    hit = local_solvable(F, ctx) if phi == 1 else dynamical_local(F, phi, ctx)
    return LocalOutcome(p, *hit) if hit else LocalOutcome(p, None, None)


def _verdict(F, phi, prime_bound, exceptional_allowance, workers):
    primes = [p for p in valid_primes(prime_bound, F.support) if phi % p]
    local = tuple(map_ordered(functools.partial(_local_at, F, phi), primes, workers))
    failures = tuple(o.prime for o in local if o.n is None)
    local_holds = len(failures) <= exceptional_allowance
    witness = global_solve(F)
    global_holds = witness is not None
    principle_holds = local_holds == global_holds
    g = gcd_of(F)
    if g.is_zero():
        # all coefficients torsion: both sides hold and the principle is trivial
        classical = None
        gcd_holds = True
    else:
        classical = hasse_principle_verdict(
            g, prime_bound, exceptional_allowance, exclude=prime_factors(phi), workers=workers
        )
        gcd_holds = classical.principle is Principle.HOLDS
    return GroupHasseReport(
        phi,
        prime_bound,
        exceptional_allowance,
        g,
        local,
        failures,
        local_holds,
        witness,
        global_holds,
        principle_holds,
        classical,
        principle_holds == gcd_holds,
    )


def group_hasse_verdict(
    F: GroupPoly, prime_bound: int, exceptional_allowance: int = 0, *, workers: int = 1
) -> GroupHasseReport:
    """Check the group-coefficient principle for ``F`` against the classical one for its gcd."""
    return _verdict(F, 1, prime_bound, exceptional_allowance, workers)


def dynamical_verdict(
    F: GroupPoly, phi: int, prime_bound: int, exceptional_allowance: int = 0, *, workers: int = 1
) -> GroupHasseReport:
    """As :func:`group_hasse_verdict` for ``S_n = phi^n F(n)``.

    Places dividing ``phi`` are skipped on the local side and primes dividing
    ``phi`` are excluded from the classical verdict for the gcd.
    """
    if phi == 0:
        raise ValueError("phi must be nonzero")
    return _verdict(F, phi, prime_bound, exceptional_allowance, workers)


# --------------------------------------------------------------------------
# counterexample with a fixed torsion target


def counterexample_fixed_torsion(d: int) -> GroupPoly:
    """``F(n) = n^(d-1) ((3n - 1)[2] + [-1])`` over the support {2}.

    ``F(n) = -1 mod p`` is solvable at every odd prime, yet ``F(n) != -1`` for
    every integer ``n``; ``F(0)`` is the identity, so a torsion value is still
    reached globally.
    """
    if d < 2:
        raise ValueError("degree must be at least 2")
    support = Support((2,))
    ord_t = 2
    lead = IntPoly.monomial(d - 1)
    return GroupPoly.from_exponent_polys(
        support,
        {2: lead * IntPoly([-1, ord_t + 1])},
        sign=lead,
    )


# --------------------------------------------------------------------------
# subgroup membership


def membership_local(P: SUnit, gens, ctx: ReductionContext) -> bool:
    """Is ``P mod p`` in the subgroup generated by ``gens mod p``?

    F_p^x is cyclic, so that subgroup is the kernel of ``x -> x^m`` with ``m``
    the lcm of the generators' orders.
    """
    gens = list(gens)
    m = lcm(1, *(order_mod(g, ctx) for g in gens))
    return pow(reduce_mod(P, ctx), m, ctx.p) == 1


def hermite_normal_form(rows) -> list[list[int]]:
    """Row-style Hermite normal form of the lattice spanned by ``rows``.

    Pivots are positive and entries above each pivot are reduced into
    ``[0, pivot)``.  Zero rows are dropped.
    """
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return []
    ncols = len(rows[0])
    basis = []
    for c in range(ncols):
        while True:
            nz = [r for r in rows if r[c]]
            if len(nz) <= 1:
                break
            piv = min(nz, key=lambda r: abs(r[c]))
            for r in nz:
                if r is not piv:
                    q = r[c] // piv[c]
                    for j in range(ncols):
                        r[j] -= q * piv[j]
            rows = [r for r in rows if any(r)]
        if nz:
            piv = nz[0]
            rows.remove(piv)
            if piv[c] < 0:
                piv = [-x for x in piv]
            basis.append((c, piv))
    out = []
    for i, (c, piv) in enumerate(basis):
        for _, above in basis[:i]:
            q = above[c] // piv[c]
            if q:
                for j in range(ncols):
                    above[j] -= q * piv[j]
    for _, piv in basis:
        out.append(piv)
    return out


def _in_lattice(hnf, target) -> bool:
    t = list(target)
    for row in hnf:
        c = next(j for j, x in enumerate(row) if x)
        q, r = divmod(t[c], row[c])
        if r:
            return False
        if q:
            t = [a - q * b for a, b in zip(t, row)]
    return not any(t)


def membership_global(P: SUnit, gens) -> bool:
    """Exact test of ``P`` in the subgroup generated by ``gens``.

    An element is encoded as its exponent vector with the sign appended as a
    parity bit; the subgroup becomes the integer lattice spanned by the
    generators' vectors plus ``(0, ..., 0, 2)``.
    """
    gens = list(gens)
    for g in gens:
        if g.support != P.support:
            raise ValueError("S-units over different supports")

    def vec(x):
        return list(x.exps) + [0 if x.sign > 0 else 1]

    k = len(P.support)
    rows = [vec(g) for g in gens] + [[0] * k + [TORSION_ORDER]]
    return _in_lattice(hermite_normal_form(rows), vec(P))


@dataclass(frozen=True)
class MembershipReport:
    prime_bound: int
    global_member: bool
    primes_scanned: int
    local_failures: tuple[int, ...]
    failure_density: Fraction | None
    consistent: bool


def membership_verdict(P: SUnit, gens, prime_bound: int) -> MembershipReport:
    """Scan ``membership_local`` over places up to ``prime_bound`` next to the exact answer.

    ``consistent`` is true when global membership coincides with local
    membership at every scanned place (member), or local membership fails at
    some scanned place (non-member).
    """
    gens = list(gens)
    member = membership_global(P, gens)
    primes = valid_primes(prime_bound, P.support)
    failures = tuple(p for p in primes if not membership_local(P, gens, ReductionContext.at(p)))
    density = Fraction(len(failures), len(primes)) if primes else None
    consistent = (not failures) if member else bool(failures)
    return MembershipReport(prime_bound, member, len(primes), failures, density, consistent)
