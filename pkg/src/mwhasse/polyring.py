"""Exact arithmetic in Z[x] and F_p[x].

Polynomials are stored densely, lowest degree first: ``IntPoly([c0, c1, c2])``
is ``c0 + c1*x + c2*x^2``.  Trailing zeros are stripped on construction, so
the zero polynomial has an empty coefficient tuple and degree ``-1``.

Besides the ring operations this module carries the constructive side of the
rootless-combination results: given coprime ``f_1, ..., f_k`` in Z[x] and a
prime ``p`` outside a finite exceptional set, :func:`rootless_combination`
produces integers ``c_i`` such that ``sum(c_i f_i)`` has no root in F_p.

Sign conventions
----------------
* :func:`gcd_z` returns the full Z[x] gcd (content included) with a positive
  leading coefficient.
* :func:`resultant` is the Sylvester determinant ``det Syl(f, g)``, so
  ``resultant(x, x - 1) == -1``.
"""

from __future__ import annotations

import functools
import json
import re
from math import gcd

import numpy as np

from .arith import is_prime, prime_factors

__all__ = [
    "ZERO_DEGREE",
    "ENUMERATION_THRESHOLD",
    "PolyError",
    "PolyParseError",
    "InexactDivisionError",
    "CommonRootError",
    "PreconditionError",
    "BadPrimeError",
    "IntPoly",
    "ModPoly",
    "X",
    "eval_poly",
    "gcd_z",
    "gcd_many",
    "divide_exact",
    "content",
    "primitive_part",
    "derivative",
    "resultant",
    "integer_roots",
    "rational_roots",
    "reduce",
    "roots_mod_p",
    "has_root_mod_p",
    "rootless_pair_combination",
    "rootless_combination",
    "bad_primes",
    "parse_poly",
    "format_poly",
    "format_factored",
]

ZERO_DEGREE = -1

#: Primes up to this size are handled by exhaustive evaluation.  Above it the
#: root locus is extracted with gcd(f, x^p - x).  The constructive routines
#: need the full value table, so they refuse primes above the threshold.
ENUMERATION_THRESHOLD = 2**20


class PolyError(ValueError):
    pass


class PolyParseError(PolyError):
    pass


class InexactDivisionError(PolyError):
    pass


class CommonRootError(PolyError):
    """The two reductions share a root, so no rootless combination exists."""

    def __init__(self, p, root):
        super().__init__(f"common root {root} mod {p}")
        self.p = p
        self.root = root


class PreconditionError(PolyError):
    pass


class BadPrimeError(PolyError):
    """The inductive construction broke down at this prime."""

    def __init__(self, p, step):
        super().__init__(f"construction fails at p={p}: {step}")
        self.p = p
        self.step = step


# --------------------------------------------------------------------------
# dense list helpers over Z


def _trim(cs):
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _prem(a, b):
    """Pseudo-remainder of ``lc(b)^(deg a - deg b + 1) * a`` by ``b``."""
    db = len(b) - 1
    if len(a) - 1 < db:
        return list(a)
    lb = b[-1]
    e = len(a) - len(b) + 1
    r = list(a)
    while r and len(r) - 1 >= db:
        c = r[-1]
        shift = len(r) - 1 - db
        r = [lb * x for x in r]
        for i, y in enumerate(b):
            r[shift + i] -= c * y
        r = _trim(r)
        e -= 1
    f = lb**e
    return [f * x for x in r]


def _content(cs):
    g = 0
    for c in cs:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def _prim(cs):
    """Primitive part with positive leading coefficient."""
    g = _content(cs)
    if g == 0:
        return []
    if cs[-1] < 0:
        g = -g
    return [c // g for c in cs]


class IntPoly:
    """Immutable univariate polynomial with integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, int):
            coeffs = (coeffs,)
        cs = []
        for c in coeffs:
            if isinstance(c, str):
                c = int(c)
            elif not isinstance(c, (int, np.integer)):
                raise TypeError(f"integer coefficient expected, got {c!r}")
            cs.append(int(c))
        object.__setattr__(self, "coeffs", tuple(_trim(cs)))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    def __reduce__(self):
        return (IntPoly, (self.coeffs,))

    @classmethod
    def from_roots(cls, roots, lead=1):
        out = [lead]
        for r in roots:
            out = _mul(out, [-r, 1])
        return cls(out)

    @classmethod
    def monomial(cls, k, c=1):
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("IntPoly", self.coeffs))

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        return format_poly(self)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    @staticmethod
    def _coerce(other):
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, (int, np.integer)) and not isinstance(other, bool):
            return IntPoly(int(other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return IntPoly(_add(self.coeffs, o.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return IntPoly(_mul(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        out = IntPoly(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, n):
        return eval_poly(self, n)


X = IntPoly([0, 1])


def eval_poly(f: IntPoly, n: int) -> int:
    """Horner evaluation of ``f(n)`` in exact integer arithmetic."""
    acc = 0
    for c in reversed(f.coeffs):
        acc = acc * n + c
    return acc


def content(f: IntPoly) -> int:
    """Nonnegative gcd of the coefficients; ``content(0) == 0``."""
    return _content(f.coeffs)


def primitive_part(f: IntPoly) -> IntPoly:
    """``f / content(f)`` with the sign fixed so the leading coefficient is positive."""
    if f.is_zero():
        raise PolyError("primitive part of the zero polynomial")
    return IntPoly(_prim(f.coeffs))


def derivative(f: IntPoly) -> IntPoly:
    return IntPoly(i * c for i, c in enumerate(f.coeffs) if i)


def _normalize(f):
    return -f if f.lc < 0 else f


def gcd_z(f: IntPoly, g: IntPoly) -> IntPoly:
    """Greatest common divisor in Z[x], positive leading coefficient.

    Computed with a primitive polynomial remainder sequence; the content of the
    result is ``gcd(content(f), content(g))``.
    """
    if f.is_zero() and g.is_zero():
        raise PolyError("gcd of two zero polynomials is undefined")
    if f.is_zero():
        return _normalize(g)
    if g.is_zero():
        return _normalize(f)
    c = gcd(content(f), content(g))
    a, b = _prim(f.coeffs), _prim(g.coeffs)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a, b = b, _prim(r) if r else []
    return IntPoly(c * x for x in a)


def gcd_many(fs) -> IntPoly:
    """Fold :func:`gcd_z` over a nonempty sequence; zero entries are skipped."""
    fs = list(fs)
    if not fs:
        raise PolyError("gcd of an empty family")
    nonzero = [f for f in fs if not f.is_zero()]
    if not nonzero:
        raise PolyError("gcd of zero polynomials is undefined")
    g = _normalize(nonzero[0])
    for f in nonzero[1:]:
        if g == 1:
            break
        g = gcd_z(g, f)
    return g


def divide_exact(f: IntPoly, w: IntPoly) -> IntPoly:
    """Return ``q`` with ``f == w * q``; raise if ``w`` does not divide ``f`` in Z[x]."""
    if w.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    r = list(f.coeffs)
    dw = w.degree
    lw = w.lc
    if len(r) - 1 < dw:
        if r:
            raise InexactDivisionError(f"{w} does not divide {f}")
        return IntPoly()
    q = [0] * (len(r) - dw)
    while r and len(r) - 1 >= dw:
        c, rem = divmod(r[-1], lw)
        if rem:
            raise InexactDivisionError(f"{w} does not divide {f}")
        shift = len(r) - 1 - dw
        q[shift] = c
        for i, y in enumerate(w.coeffs):
            r[shift + i] -= c * y
        r = _trim(r)
    if r:
        raise InexactDivisionError(f"{w} does not divide {f}")
    return IntPoly(q)


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Sylvester resultant via the subresultant algorithm.

    Zero if either input is zero.  For a constant argument ``c`` the value is
    ``c ** deg(other)``.
    """
    if f.is_zero() or g.is_zero():
        return 0
    A, B = list(f.coeffs), list(g.coeffs)
    da, db = len(A) - 1, len(B) - 1
    if da == 0:
        return A[0] ** db
    if db == 0:
        return B[0] ** da
    s = 1
    if da < db:
        A, B = B, A
        if da % 2 and db % 2:
            s = -1
    ca, cb = _content(A), _content(B)
    A = [x // ca for x in A]
    B = [x // cb for x in B]
    t = ca ** (len(B) - 1) * cb ** (len(A) - 1)
    g_, h = 1, 1
    while True:
        da, db = len(A) - 1, len(B) - 1
        delta = da - db
        if da % 2 and db % 2:
            s = -s
        R = _prem(A, B)
        A = B
        div = g_ * h**delta
        B = [x // div for x in R]
        if not B:
            return 0
        g_ = A[-1]
        if delta:
            h = g_**delta // h ** (delta - 1)
        if len(B) == 1:
            dA = len(A) - 1
            return s * t * (B[0] ** dA // h ** (dA - 1))


def _divisors(n):
    n = abs(n)
    divs = [1]
    for q in prime_factors(n):
        e = 0
        m = n
        while m % q == 0:
            m //= q
            e += 1
        divs = [d * q**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def integer_roots(f: IntPoly) -> frozenset:
    """Complete set of integer roots of a nonzero polynomial."""
    if f.is_zero():
        raise PolyError("every integer is a root of the zero polynomial")
    cs = f.coeffs
    k = 0
    while cs[k] == 0:
        k += 1
    roots = {0} if k else set()
    g = IntPoly(cs[k:])
    if g.degree <= 0:
        return frozenset(roots)
    # Cauchy bound prunes the divisor list when the constant term is large.
    bound = 1 + max(abs(c) for c in g.coeffs[:-1]) // abs(g.lc) + 1
    for d in _divisors(g.coeffs[0]):
        if d > bound:
            break
        for r in (d, -d):
            if eval_poly(g, r) == 0:
                roots.add(r)
    return frozenset(roots)


def rational_roots(f: IntPoly) -> frozenset:
    """All rational roots of a nonzero polynomial, as ``(num, den)`` pairs in lowest terms, ``den > 0``."""
    if f.is_zero():
        raise PolyError("every rational is a root of the zero polynomial")
    cs = f.coeffs
    k = 0
    while cs[k] == 0:
        k += 1
    roots = {(0, 1)} if k else set()
    g = IntPoly(cs[k:])
    if g.degree <= 0:
        return frozenset(roots)
    for b in _divisors(g.lc):
        for a in _divisors(g.coeffs[0]):
            if gcd(a, b) != 1:
                continue
            for num in (a, -a):
                # b^deg * g(num/b) stays integral
                val = sum(c * num**i * b ** (g.degree - i) for i, c in enumerate(g.coeffs))
                if val == 0:
                    roots.add((num, b))
    return frozenset(roots)


# --------------------------------------------------------------------------
# F_p[x]


def _mtrim(cs):
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _msub(a, b, p):
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _mtrim(out)


def _mmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _mtrim([c % p for c in out])


def _mdivmod(a, b, p):
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    r = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(r) - db, 0)
    while r and len(r) - 1 >= db:
        c = r[-1] * inv % p
        shift = len(r) - 1 - db
        q[shift] = c
        for i, y in enumerate(b):
            r[shift + i] = (r[shift + i] - c * y) % p
        _mtrim(r)
    return _mtrim(q), r


def _mmonic(a, p):
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _mgcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, _mdivmod(a, b, p)[1]
    return _mmonic(a, p)


def _mpowmod(base, e, mod, p):
    out = [1]
    base = _mdivmod(base, mod, p)[1]
    while e:
        if e & 1:
            out = _mdivmod(_mmul(out, base, p), mod, p)[1]
        base = _mdivmod(_mmul(base, base, p), mod, p)[1]
        e >>= 1
    return out


class ModPoly:
    """Polynomial over the prime field F_p, coefficients in ``[0, p)``."""

    __slots__ = ("p", "coeffs")

    def __init__(self, coeffs, p, *, check=True):
        if check and not is_prime(p):
            raise PolyError(f"modulus {p} is not prime")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", tuple(_mtrim([int(c) % p for c in coeffs])))

    def __setattr__(self, name, value):
        raise AttributeError("ModPoly is immutable")

    def __reduce__(self):
        return (ModPoly, (self.coeffs, self.p))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, ModPoly):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("ModPoly", self.p, self.coeffs))

    def __repr__(self):
        return f"ModPoly({list(self.coeffs)}, p={self.p})"

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def _same(self, other):
        if isinstance(other, int):
            return ModPoly([other], self.p, check=False)
        if not isinstance(other, ModPoly) or other.p != self.p:
            raise PolyError("ModPoly operands over different fields")
        return other

    def __add__(self, other):
        o = self._same(other)
        return ModPoly(_add(self.coeffs, o.coeffs), self.p, check=False)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._same(other)
        return ModPoly(_msub(list(self.coeffs), list(o.coeffs), self.p), self.p, check=False)

    def __mul__(self, other):
        o = self._same(other)
        return ModPoly(_mmul(self.coeffs, o.coeffs, self.p), self.p, check=False)

    __rmul__ = __mul__

    def __divmod__(self, other):
        o = self._same(other)
        q, r = _mdivmod(self.coeffs, o.coeffs, self.p)
        return ModPoly(q, self.p, check=False), ModPoly(r, self.p, check=False)

    def gcd(self, other) -> "ModPoly":
        o = self._same(other)
        return ModPoly(_mgcd(self.coeffs, o.coeffs, self.p), self.p, check=False)

    def values(self) -> np.ndarray:
        """Table of ``f(x)`` for every ``x`` in F_p (exhaustive evaluation)."""
        return _value_table(self.coeffs, self.p)


def reduce(f: IntPoly, p: int) -> ModPoly:
    """Coefficientwise reduction of ``f`` into F_p[x]."""
    if not is_prime(p):
        raise PolyError(f"modulus {p} is not prime")
    return ModPoly(f.coeffs, p, check=False)


def _value_table(coeffs, p):
    if p < 2**31:
        xs = np.arange(p, dtype=np.int64)
        acc = np.zeros(p, dtype=np.int64)
        for c in reversed(coeffs):
            acc = (acc * xs + c) % p
        return acc
    # products would overflow int64
    xs = np.arange(p, dtype=object)
    acc = np.zeros(p, dtype=object)
    for c in reversed(coeffs):
        acc = (acc * xs + c) % p
    return acc


def _root_locus(cs, p):
    """Monic gcd(f, x^p - x): the product of (x - r) over the roots r of f."""
    f = _mmonic(list(cs), p)
    xp = _mpowmod([0, 1], p, f, p)
    return _mgcd(f, _msub(xp, [0, 1], p), p)


def _split(g, p):
    """Roots of a monic squarefree product of distinct linear factors."""
    if len(g) <= 1:
        return []
    if len(g) == 2:
        return [(-g[0]) % p]
    if p == 2:
        return [x for x in (0, 1) if sum(c * x**i for i, c in enumerate(g)) % 2 == 0]
    half = (p - 1) // 2
    for a in range(p):
        h = _msub(_mpowmod([a, 1], half, g, p), [1], p)
        d = _mgcd(g, h, p)
        if 0 < len(d) - 1 < len(g) - 1:
            return _split(d, p) + _split(_mdivmod(g, d, p)[0], p)
    raise AssertionError("equal-degree splitting did not terminate")


def roots_mod_p(f: ModPoly, threshold: int | None = None) -> frozenset:
    """All roots of a nonzero ``f`` in F_p.

    Primes up to ``threshold`` (default :data:`ENUMERATION_THRESHOLD`) are
    handled by evaluating ``f`` on every residue; larger primes go through
    ``gcd(f, x^p - x)`` and equal-degree splitting.
    """
    if f.is_zero():
        raise PolyError("every residue is a root of the zero polynomial")
    if f.degree == 0:
        return frozenset()
    p = f.p
    if threshold is None:
        threshold = ENUMERATION_THRESHOLD
    if p <= threshold:
        return frozenset(int(x) for x in np.flatnonzero(_value_table(f.coeffs, p) == 0))
    return frozenset(_split(_root_locus(f.coeffs, p), p))


def has_root_mod_p(f: ModPoly) -> bool:
    """True iff ``f`` has a root in F_p (the zero polynomial has all of them)."""
    if f.is_zero():
        return True
    if f.degree == 0:
        return False
    if f.coeffs[0] == 0:
        return True
    return len(_root_locus(f.coeffs, f.p)) > 1


# --------------------------------------------------------------------------
# rootless combinations


def _rootless_pair_mod(fp: ModPoly, gp: ModPoly):
    p = fp.p
    if fp.is_zero() and gp.is_zero():
        raise PreconditionError(f"both polynomials vanish mod {p}")
    if p > ENUMERATION_THRESHOLD:
        raise PreconditionError(
            f"p={p} exceeds the enumeration threshold {ENUMERATION_THRESHOLD}"
        )
    vf, vg = fp.values(), gp.values()
    zf, zg = vf == 0, vg == 0
    common = np.flatnonzero(zf & zg)
    if common.size:
        raise CommonRootError(p, int(common[0]))
    if not zf.any():
        return 1, 0
    if not zg.any():
        return 0, 1
    both = ~zf & ~zg
    if not both.any():
        return 1, 1
    ratios = {int(a) * pow(int(b), -1, p) % p for a, b in zip(vf[both], vg[both])}
    # |S| <= p - 2, so some nonzero n is missed
    n = next(n for n in range(1, p) if n not in ratios)
    return 1, -n


def rootless_pair_combination(f: IntPoly, g: IntPoly, p: int) -> tuple[int, int]:
    """Find ``(a, b)`` such that ``a*f + b*g`` has no root mod ``p``.

    The reductions of ``f`` and ``g`` must have no common root in F_p.  The
    choice is deterministic: ``(1, 0)`` or ``(0, 1)`` if one input is already
    rootless, ``(1, 1)`` if every residue kills exactly one of them, otherwise
    ``(1, -n)`` for the smallest nonzero ``n`` that is not a ratio
    ``f(x)/g(x)`` over residues where both are nonzero.
    """
    return _rootless_pair_mod(reduce(f, p), reduce(g, p))


@functools.lru_cache(maxsize=4096)
def _induction_step(fs):
    """Split off the last nonzero member: ``(head indices, last index, w, quotients)``."""
    nz = [i for i, f in enumerate(fs) if not f.is_zero()]
    if len(nz) == 1:
        return None, nz[0], None, None
    head, last = nz[:-1], nz[-1]
    w = gcd_many(fs[i] for i in head)
    gs = tuple(divide_exact(fs[i], w) for i in head)
    return tuple(head), last, w, gs


def _balanced(c, p):
    c %= p
    return c - p if c > p // 2 else c


def _rootless_rec(fs, p, depth):
    head, last, w, gs = _induction_step(fs)
    out = [0] * len(fs)
    if head is None:
        # gcd 1 with one nonzero member: it is the constant +-1
        out[last] = 1
        return out
    a = _rootless_rec(gs, p, depth + 1)
    h = IntPoly()
    for ai, gi in zip(a, gs):
        if ai:
            h = h + ai * gi
    try:
        s, t = _rootless_pair_mod(reduce(w * h, p), reduce(fs[last], p))
    except CommonRootError as exc:
        raise BadPrimeError(
            p, f"level {depth}: gcd {format_poly(w)} and {format_poly(fs[last])} share root {exc.root}"
        ) from None
    except PreconditionError as exc:
        raise BadPrimeError(p, f"level {depth}: {exc}") from None
    for i, ai in zip(head, a):
        out[i] = _balanced(s * ai, p)
    out[last] = _balanced(t, p)
    return out


def rootless_combination(fs, p: int) -> list[int]:
    """Integers ``c_1..c_k`` such that ``sum(c_i f_i)`` has no root mod ``p``.

    Requires ``k >= 2`` and ``gcd(f_1, ..., f_k) == 1`` in Z[x].  The
    construction follows the induction on ``k``: with ``w`` the gcd of the
    first ``k - 1`` members, recurse on the quotients ``f_i / w`` to get a
    rootless ``h``, then combine ``w*h`` with ``f_k`` pairwise.  Raises
    :class:`BadPrimeError` at the (finitely many) primes where a step breaks;
    :func:`bad_primes` lists a superset of them.
    """
    fs = tuple(fs)
    if len(fs) < 2:
        raise PreconditionError("need at least two polynomials")
    if not is_prime(p):
        raise PolyError(f"modulus {p} is not prime")
    if all(f.is_zero() for f in fs) or gcd_many(fs) != 1:
        raise PreconditionError("polynomials are not coprime in Z[x]")
    cs = _rootless_rec(fs, p, 1)
    h = IntPoly()
    for c, f in zip(cs, fs):
        h = h + c * f
    hp = reduce(h, p)
    if hp.is_zero() or roots_mod_p(hp):
        raise BadPrimeError(p, "combination failed verification")
    return cs


def bad_primes(fs) -> frozenset:
    """Superset of the primes at which :func:`rootless_combination` may fail.

    Collects, level by level, the primes dividing the leading coefficients
    involved and the resultant of the running gcd ``w`` with the member it is
    paired against.
    """
    fs = tuple(fs)
    if gcd_many(fs) != 1:
        raise PreconditionError("polynomials are not coprime in Z[x]")
    out = set()
    while True:
        head, last, w, gs = _induction_step(fs)
        if head is None:
            break
        for f in (*gs, w, fs[last]):
            out.update(prime_factors(f.lc))
        out.update(prime_factors(resultant(w, fs[last])))
        fs = gs
    return frozenset(out)


# --------------------------------------------------------------------------
# text formats

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\*\*|[-+*^()]))")


def _tokenize(s):
    pos = 0
    out = []
    s = s.rstrip()
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m:
            raise PolyParseError(f"unexpected character at {pos}: {s[pos:pos + 10]!r}")
        num, name, op = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif name is not None:
            if name not in ("x", "n"):
                raise PolyParseError(f"unknown variable {name!r}; use x or n")
            out.append(("var", name))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens):
        self.toks = tokens
        self.i = 0
        self.var = None

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def expect(self, op):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise PolyParseError(f"expected {op!r}, got {val!r}")

    def expr(self):
        f = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            _, op = self.take()
            g = self.term()
            f = f + g if op == "+" else f - g
        return f

    def term(self):
        f = self.unary()
        while True:
            kind, val = self.peek()
            if (kind, val) == ("op", "*"):
                self.take()
                f = f * self.unary()
            elif kind == "var" or (kind, val) == ("op", "("):
                # implicit product: 2x, 3(x-1), (x-1)(x+1)
                f = f * self.power()
            else:
                return f

    def unary(self):
        kind, val = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            f = self.unary()
            return -f if val == "-" else f
        return self.power()

    def power(self):
        f = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "num":
                raise PolyParseError("exponent must be a nonnegative integer literal")
            f = f**val
        return f

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return IntPoly(val)
        if kind == "var":
            if self.var is None:
                self.var = val
            elif self.var != val:
                raise PolyParseError("mixed variables in one polynomial")
            return X
        if (kind, val) == ("op", "("):
            f = self.expr()
            self.expect(")")
            return f
        raise PolyParseError(f"unexpected token {val!r}")


def parse_poly(text) -> IntPoly:
    """Parse a polynomial from a dense list or an expression string.

    Accepts a JSON array of integers or decimal strings (``'["-1","0","1"]'``),
    a Python list/tuple of integers, or an expression in ``x`` or ``n`` using
    ``+ - * ^`` (``**`` also accepted), parentheses and implicit products.
    """
    if isinstance(text, IntPoly):
        return text
    if isinstance(text, (list, tuple)):
        try:
            return IntPoly(int(c) for c in text)
        except (TypeError, ValueError) as exc:
            raise PolyParseError(str(exc)) from None
    s = str(text).strip()
    if not s:
        raise PolyParseError("empty polynomial")
    if s.startswith("["):
        try:
            data = json.loads(s)
        except json.JSONDecodeError as exc:
            raise PolyParseError(f"bad coefficient list: {exc}") from None
        return parse_poly(data)
    parser = _Parser(_tokenize(s))
    f = parser.expr()
    if parser.i != len(parser.toks):
        raise PolyParseError(f"trailing input near token {parser.peek()[1]!r}")
    return f


def format_poly(f: IntPoly, var: str = "x") -> str:
    """Expanded human form, highest degree first: ``x^2+x+1``."""
    if f.is_zero():
        return "0"
    parts = []
    for i in range(f.degree, -1, -1):
        c = f.coeffs[i]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if i == 0:
            body = str(a)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if a == 1 else f"{a}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += sign + body
    return out


def format_factored(f: IntPoly, var: str = "x") -> str:
    """Content times primitive part, e.g. ``2*(n-5)``."""
    if f.is_zero():
        return "0"
    c = content(f) * (1 if f.lc > 0 else -1)
    if c == 1 or f.degree == 0:
        return format_poly(f, var)
    pp = primitive_part(f)
    return f"{c}*({format_poly(pp, var)})"
