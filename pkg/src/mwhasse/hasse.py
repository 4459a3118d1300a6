"""The classical local-global question for integer polynomials.

Given ``f`` in Z[x]: does an integer root exist exactly when roots exist
modulo almost every prime?  The local side is decided empirically up to a
prime bound, the global side exactly (:func:`~mwhasse.polyring.integer_roots`).

Prime powers are handled by level-by-level lifting.  A root ``a`` modulo
``p^j`` with ``j > 2 * v_p(f'(a))`` lifts to a p-adic root (strong Hensel
lemma), which certifies solvability modulo every power of ``p`` at once.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from sympy import factorint

from ._parallel import map_ordered
from .arith import crt_pair, is_prime, prime_factors, primes_up_to, valuation
from .polyring import (
    IntPoly,
    PolyError,
    X,
    derivative,
    eval_poly,
    has_root_mod_p,
    integer_roots,
    rational_roots,
    reduce,
    roots_mod_p,
)

__all__ = [
    "LocalStatus",
    "Principle",
    "ModuliStatus",
    "LocalScanReport",
    "HasseVerdict",
    "AllModuliVerdict",
    "local_root_scan",
    "root_mod_prime_power",
    "has_root_mod_prime_power",
    "root_mod",
    "has_root_mod_all_integers",
    "hasse_principle_verdict",
    "guaranteed_hasse",
    "QUINTIC_COUNTEREXAMPLE",
    "SEXTIC_COUNTEREXAMPLE",
    "linear_power_counterexample",
    "padded_counterexample",
]


class LocalStatus(enum.Enum):
    YES = "yes-empirically"
    NO = "no-with-witnesses"
    VACUOUS = "vacuous"


class Principle(enum.Enum):
    HOLDS = "holds"
    VIOLATED = "violated"
    UNKNOWN = "unknown-at-bound"


class ModuliStatus(enum.Enum):
    CERTIFIED = "true-certified"
    FALSE = "false-with-witness"
    UP_TO_BOUND = "true-up-to-bound"


@dataclass(frozen=True)
class LocalScanReport:
    """Which primes up to ``prime_bound`` see a root of ``f``.

    ``exceptional_primes`` divide the leading coefficient (or were excluded by
    the caller) and are not counted on either side.
    """

    prime_bound: int
    primes_with_root: int
    primes_without_root: tuple[int, ...]
    exceptional_primes: tuple[int, ...]
    density_estimate: Fraction | None


@dataclass(frozen=True)
class HasseVerdict:
    prime_bound: int
    exceptional_allowance: int
    local_holds: LocalStatus
    local_witnesses: tuple[int, ...]
    global_holds: bool
    integer_root: int | None
    principle: Principle
    scan: LocalScanReport


@dataclass(frozen=True)
class AllModuliVerdict:
    status: ModuliStatus
    witness_modulus: int | None
    analysis_bound: int
    reason: str
    open_primes: tuple[int, ...] = ()


# --------------------------------------------------------------------------
# local scan


def _has_root_at(f, p):
    return has_root_mod_p(reduce(f, p))


def local_root_scan(f: IntPoly, prime_bound: int, *, exclude=(), workers: int = 1) -> LocalScanReport:
    """Record, for every prime ``p <= prime_bound``, whether ``f`` has a root mod ``p``.

    Primes dividing the leading coefficient, and any in ``exclude``, are
    listed as exceptional and skipped.
    """
    if f.is_zero():
        raise PolyError("local scan of the zero polynomial")
    exclude = set(exclude)
    exceptional, scanned = [], []
    for p in primes_up_to(prime_bound):
        if f.lc % p == 0 or p in exclude:
            exceptional.append(p)
        else:
            scanned.append(p)
    flags = map_ordered(functools.partial(_has_root_at, f), scanned, workers)
    without = tuple(p for p, ok in zip(scanned, flags) if not ok)
    with_root = len(scanned) - len(without)
    density = Fraction(with_root, len(scanned)) if scanned else None
    return LocalScanReport(prime_bound, with_root, without, tuple(exceptional), density)


# --------------------------------------------------------------------------
# prime powers


def _check_prime_power(f, p, k):
    if not is_prime(p):
        raise PolyError(f"{p} is not prime")
    if k < 1:
        raise PolyError("prime power exponent must be positive")
    q = p**k
    if all(c % q == 0 for c in f.coeffs):
        raise PolyError(f"f vanishes identically mod {p}^{k}")


def _level_one(f, p):
    fp = reduce(f, p)
    return range(p) if fp.is_zero() else sorted(roots_mod_p(fp))


def _children(f, p, a, j):
    pj = p**j
    pj1 = pj * p
    return [a + t * pj for t in range(p) if eval_poly(f, a + t * pj) % pj1 == 0]


def _certified(df, p, a, j):
    """``a`` is a root mod ``p^j``; does it sit above a genuine p-adic root?"""
    d = eval_poly(df, a)
    if d == 0:
        return False
    return j > 2 * valuation(d, p)


def _newton(f, df, p, a, k):
    """Refine a certified approximate root to a root mod ``p^k``."""
    q = p**k
    v = valuation(eval_poly(df, a), p)
    pv = p**v
    while eval_poly(f, a) % q:
        u = eval_poly(df, a) // pv
        a = (a - (eval_poly(f, a) // pv) * pow(u, -1, q)) % q
    return a % q


def root_mod_prime_power(f: IntPoly, p: int, k: int) -> int | None:
    """A root of ``f`` modulo ``p^k`` (in ``[0, p^k)``), or ``None`` if there is none."""
    _check_prime_power(f, p, k)
    df = derivative(f)
    stack = [(a, 1) for a in reversed(_level_one(f, p))]
    while stack:
        a, j = stack.pop()
        if j == k:
            return a
        if _certified(df, p, a, j):
            return _newton(f, df, p, a, k)
        stack.extend((c, j + 1) for c in reversed(_children(f, p, a, j)))
    return None


def has_root_mod_prime_power(f: IntPoly, p: int, k: int) -> bool:
    """Exact decision of solvability of ``f(x) = 0 mod p^k``.

    Raises if ``f`` vanishes identically mod ``p^k`` (then every residue is a
    root and the question carries no information).
    """
    return root_mod_prime_power(f, p, k) is not None


def root_mod(f: IntPoly, m: int) -> int | None:
    """A root of ``f`` modulo ``m >= 1``, assembled from prime powers by CRT."""
    if m < 1:
        raise PolyError("modulus must be positive")
    r, mod = 0, 1
    for p, k in sorted(factorint(m).items()):
        q = p**k
        if all(c % q == 0 for c in f.coeffs):
            rp = 0
        else:
            rp = root_mod_prime_power(f, p, k)
            if rp is None:
                return None
        r, mod = crt_pair(r, mod, rp, q)
    return r


def _prime_status(f, p, max_level, max_nodes):
    """Classify ``p`` as ('certified' | 'dead' | 'open', level reached)."""
    df = derivative(f)
    nodes = list(_level_one(f, p))
    j = 1
    while True:
        if not nodes:
            return "dead", j
        if any(_certified(df, p, a, j) for a in nodes):
            return "certified", j
        if j >= max_level or len(nodes) > max_nodes:
            return "open", j
        nodes = [c for a in nodes for c in _children(f, p, a, j)]
        j += 1


def has_root_mod_all_integers(
    f: IntPoly,
    analysis_bound: int = 1000,
    *,
    max_level: int = 40,
    max_nodes: int = 20000,
    workers: int = 1,
) -> AllModuliVerdict:
    """Does ``f`` have a root modulo every positive integer?

    By CRT it is enough to look at prime powers.  The answer is certified
    when ``f`` has an integer root, or when its rational roots have
    denominators with no common prime and every prime dividing all of them
    lifts indefinitely.  Otherwise every prime up to ``analysis_bound`` is
    run through the lifting tree; a dead branch yields the smallest failing
    prime power as witness, and the absence of one is reported as
    ``true-up-to-bound``.
    """
    if f.is_zero():
        raise PolyError("the zero polynomial has a root modulo everything")
    ints = integer_roots(f)
    if ints:
        r = min(ints, key=lambda x: (abs(x), x))
        return AllModuliVerdict(ModuliStatus.CERTIFIED, None, analysis_bound, f"integer root {r}")

    rats = rational_roots(f)
    common_den = 0
    for _, den in rats:
        common_den = gcd(common_den, den)
    # every prime not dividing common_den is covered by some rational root a/b
    uncovered_big = [q for q in prime_factors(common_den) if q > analysis_bound] if rats else []
    candidates = [p for p in primes_up_to(analysis_bound) if not rats or common_den % p == 0]
    candidates += uncovered_big

    status = functools.partial(_prime_status, f, max_level=max_level, max_nodes=max_nodes)
    results = map_ordered(status, candidates, workers)
    dead = [p**lvl for p, (kind, lvl) in zip(candidates, results) if kind == "dead"]
    open_primes = tuple(p for p, (kind, _) in zip(candidates, results) if kind == "open")
    if dead:
        return AllModuliVerdict(
            ModuliStatus.FALSE, min(dead), analysis_bound, "no root modulo a prime power", open_primes
        )
    if rats and not open_primes:
        dens = sorted({den for _, den in rats})
        return AllModuliVerdict(
            ModuliStatus.CERTIFIED,
            None,
            analysis_bound,
            f"rational roots with denominators {dens} cover every prime",
        )
    return AllModuliVerdict(
        ModuliStatus.UP_TO_BOUND, None, analysis_bound, "every analyzed prime power has a root", open_primes
    )


# --------------------------------------------------------------------------
# verdicts


def hasse_principle_verdict(
    f: IntPoly,
    prime_bound: int,
    exceptional_allowance: int = 0,
    *,
    exclude=(),
    workers: int = 1,
) -> HasseVerdict:
    """Compare local solvability (up to ``prime_bound``) with integer solvability.

    "Almost all primes" means: besides primes dividing the leading coefficient
    (and ``exclude``), at most ``exceptional_allowance`` primes may lack a root.
    """
    scan = local_root_scan(f, prime_bound, exclude=exclude, workers=workers)
    roots = integer_roots(f)
    root = min(roots, key=lambda x: (abs(x), x)) if roots else None
    scanned = scan.primes_with_root + len(scan.primes_without_root)
    if scanned == 0:
        local = LocalStatus.VACUOUS
    elif len(scan.primes_without_root) <= exceptional_allowance:
        local = LocalStatus.YES
    else:
        local = LocalStatus.NO
    if local is LocalStatus.VACUOUS:
        principle = Principle.UNKNOWN
    elif (local is LocalStatus.YES) == bool(roots):
        principle = Principle.HOLDS
    else:
        principle = Principle.VIOLATED
    witnesses = scan.primes_without_root if local is LocalStatus.NO else ()
    return HasseVerdict(
        prime_bound, exceptional_allowance, local, witnesses, bool(roots), root, principle, scan
    )


def guaranteed_hasse(f: IntPoly) -> bool:
    """Monic of degree at most 4: the range where the principle is known to hold."""
    return f.lc == 1 and f.degree <= 4


# --------------------------------------------------------------------------
# counterexamples

QUINTIC_COUNTEREXAMPLE = (X**3 - 19) * (X**2 + X + 1)
SEXTIC_COUNTEREXAMPLE = (X**2 - 13) * (X**2 - 17) * (X**2 - 221)


def linear_power_counterexample(degree: int) -> IntPoly:
    """``(3x - 2)(2x - 3)^(degree - 1)``: no integer root, a root modulo every integer."""
    if degree < 2:
        raise PolyError("degree must be at least 2")
    return (3 * X - 2) * (2 * X - 3) ** (degree - 1)


def padded_counterexample(degree: int) -> IntPoly:
    """A monic counterexample of the given degree ``>= 5``.

    Odd degrees pad the quintic, even degrees the sextic, with powers of
    ``x^2 + 1``.
    """
    if degree < 5:
        raise PolyError("monic counterexamples need degree at least 5")
    base = QUINTIC_COUNTEREXAMPLE if degree % 2 else SEXTIC_COUNTEREXAMPLE
    return base * (X**2 + 1) ** ((degree - base.degree) // 2)
