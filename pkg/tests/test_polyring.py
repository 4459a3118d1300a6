import pickle
import random

import pytest
import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import brute_roots, small_primes, sylvester_det
from mwhasse.polyring import (
    BadPrimeError,
    CommonRootError,
    InexactDivisionError,
    IntPoly,
    ModPoly,
    PolyError,
    PolyParseError,
    PreconditionError,
    X,
    bad_primes,
    content,
    derivative,
    divide_exact,
    format_factored,
    format_poly,
    gcd_many,
    gcd_z,
    integer_roots,
    parse_poly,
    primitive_part,
    rational_roots,
    reduce,
    resultant,
    rootless_combination,
    rootless_pair_combination,
    roots_mod_p,
)

coeff_lists = st.lists(st.integers(-30, 30), min_size=1, max_size=7)
polys = coeff_lists.map(IntPoly)
nonzero_polys = polys.filter(lambda f: not f.is_zero())

x = sympy.Symbol("x")


def to_sympy(f):
    return sympy.Poly(list(reversed(f.coeffs)) or [0], x, domain="ZZ")


# ---------------------------------------------------------------- basics


def test_zero_polynomial_has_degree_minus_one():
    assert IntPoly().degree == -1
    assert IntPoly([0, 0, 0]).is_zero()
    assert IntPoly([1, 2, 0, 0]).coeffs == (1, 2)


def test_arithmetic_and_evaluation():
    f = (X - 1) * (X + 1)
    assert f == X**2 - 1
    assert f(3) == 8
    assert derivative(X**3 + 2 * X) == 3 * X**2 + 2
    assert content(6 * X + 4) == 2
    assert primitive_part(-6 * X - 4) == 3 * X + 2


def test_pickle_round_trip():
    f = parse_poly("3x^4 - 2x + 7")
    assert pickle.loads(pickle.dumps(f)) == f
    g = reduce(f, 11)
    assert pickle.loads(pickle.dumps(g)) == g


def test_divide_exact():
    assert divide_exact(X**2 - 1, X - 1) == X + 1
    with pytest.raises(InexactDivisionError):
        divide_exact(X**2 + 1, X - 1)


# ---------------------------------------------------------------- gcd


def test_gcd_examples():
    assert gcd_z(X**2 - 1, X**2 - 2 * X + 1) == X - 1
    assert gcd_z(2 * X, IntPoly([4])) == IntPoly([2])
    assert gcd_many([X * (X - 1), X * (X + 2), 3 * X]) == X
    with pytest.raises(PolyError):
        gcd_z(IntPoly(), IntPoly())


@settings(max_examples=200, deadline=None)
@given(polys, polys)
def test_gcd_matches_sympy(f, g):
    assume(not (f.is_zero() and g.is_zero()))
    ours = gcd_z(f, g)
    ref = sympy.gcd(to_sympy(f), to_sympy(g))
    ref_coeffs = [int(c) for c in reversed(ref.all_coeffs())]
    ref_poly = IntPoly(ref_coeffs)
    if ref_poly.lc < 0:
        ref_poly = -ref_poly
    assert ours == ref_poly


@settings(max_examples=200, deadline=None)
@given(nonzero_polys, nonzero_polys, nonzero_polys)
def test_gcd_divides_and_is_multiplicative_on_common_factor(f, g, h):
    d = gcd_z(f * h, g * h)
    divide_exact(f * h, d)
    divide_exact(g * h, d)
    divide_exact(d, primitive_part(h))


# ---------------------------------------------------------------- resultant


def test_resultant_examples():
    assert resultant(X, X - 1) == -1
    assert resultant(X**2 + 1, X) == 1
    assert resultant(X - 3, X - 3) == 0


@settings(max_examples=300, deadline=None)
@given(nonzero_polys, nonzero_polys)
def test_resultant_matches_sylvester_determinant(f, g):
    assume(f.degree + g.degree >= 1)
    assert resultant(f, g) == sylvester_det(list(f.coeffs), list(g.coeffs))


def test_resultant_frozen_case():
    # a case where sign conventions in common libraries disagree
    a = IntPoly([9, 1, 4, -8])
    b = IntPoly([0, -5, -3, -8, 0, -7])
    assert resultant(a, b) == sylvester_det(list(a.coeffs), list(b.coeffs))


# ---------------------------------------------------------------- roots over Z and Q


def test_integer_roots_examples():
    assert integer_roots(X**2 - X) == {0, 1}
    assert integer_roots(X**2 + 1) == set()
    assert integer_roots((X - 5) * (2 * X + 1) * X**3) == {0, 5}


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(-40, 40), min_size=1, max_size=4), st.integers(1, 5), st.integers(-3, 3))
def test_integer_roots_recovers_planted_roots(roots, lead, extra):
    f = IntPoly.from_roots(roots, lead) * (X**2 + X + abs(extra) + 1)
    assert integer_roots(f) == set(roots)


@settings(max_examples=200, deadline=None)
@given(nonzero_polys)
def test_integer_roots_against_bounded_search(f):
    assume(f.degree >= 1)
    # Cauchy bound: any root r has |r| <= 1 + max|a_i / a_d| <= 31
    found = {n for n in range(-32, 33) if f(n) == 0}
    assert integer_roots(f) == found


def test_rational_roots():
    f = (3 * X - 2) * (2 * X - 3) ** 2
    assert rational_roots(f) == {(2, 3), (3, 2)}


# ---------------------------------------------------------------- F_p roots


def test_roots_mod_p_examples():
    assert roots_mod_p(reduce(X**2 + 1, 5)) == {2, 3}
    assert roots_mod_p(reduce(X**2 + X + 1, 3)) == {1}
    assert roots_mod_p(reduce(X**2 + 1, 3)) == set()


@settings(max_examples=200, deadline=None)
@given(coeff_lists, st.sampled_from(small_primes(200)))
def test_roots_mod_p_both_routes_match_brute_force(cs, p):
    fp = reduce(IntPoly(cs), p)
    assume(not fp.is_zero())
    expected = brute_roots(list(fp.coeffs), p)
    assert roots_mod_p(fp) == expected
    assert roots_mod_p(fp, threshold=1) == expected


def test_roots_mod_large_prime_split_route():
    p = 2**31 - 1
    f = IntPoly.from_roots([5, 123456789, p - 2]) * (X**2 + 1)
    # -1 is a non-residue mod p since p = 3 mod 4
    assert roots_mod_p(reduce(f, p)) == {5, 123456789, p - 2}


def test_modpoly_rejects_non_prime():
    with pytest.raises(ValueError):
        ModPoly([1, 1], 15)


# ---------------------------------------------------------------- rootless combinations


def test_rootless_pair_examples():
    assert rootless_pair_combination(X, X - 1, 3) == (1, -1)
    with pytest.raises(CommonRootError):
        rootless_pair_combination(X, X - 3, 3)


@settings(max_examples=200, deadline=None)
@given(coeff_lists, coeff_lists, st.sampled_from(small_primes(60)))
def test_rootless_pair_is_rootless(a, b, p):
    f, g = IntPoly(a), IntPoly(b)
    fp, gp = reduce(f, p), reduce(g, p)
    assume(not (fp.is_zero() and gp.is_zero()))
    common = brute_roots(list(fp.coeffs) or [0], p) & brute_roots(list(gp.coeffs) or [0], p)
    if common:
        with pytest.raises(CommonRootError):
            rootless_pair_combination(f, g, p)
        return
    s, t = rootless_pair_combination(f, g, p)
    h = s * f + t * g
    assert not reduce(h, p).is_zero()
    assert not brute_roots(list(h.coeffs), p)


def test_bad_primes_examples():
    assert bad_primes([X, X - 3]) == {3}
    assert bad_primes([X**2 + 1, X]) == set()
    with pytest.raises(BadPrimeError):
        rootless_combination([X, X - 3], 3)
    with pytest.raises(PreconditionError):
        rootless_combination([X, 2 * X], 5)
    with pytest.raises(PreconditionError):
        rootless_combination([X], 5)


def _random_coprime_tuple(rng, k):
    while True:
        fs = [IntPoly([rng.randint(-20, 20) for _ in range(rng.randint(1, 6))]) for _ in range(k)]
        if all(not f.is_zero() for f in fs) and gcd_many(fs) == 1:
            return fs


@pytest.mark.parametrize("seed", range(12))
def test_rootless_combination_outside_bad_primes(seed):
    rng = random.Random(seed)
    fs = _random_coprime_tuple(rng, rng.randint(2, 4))
    bad = bad_primes(fs)
    for p in small_primes(120):
        if p in bad:
            continue
        cs = rootless_combination(fs, p)
        h = IntPoly()
        for c, f in zip(cs, fs):
            h = h + c * f
        assert not brute_roots(list(h.coeffs), p), (fs, p, cs)
        assert all(-p // 2 <= c <= p // 2 for c in cs)


def test_rootless_combination_is_deterministic():
    fs = [X**2 - 2, X**3 + 1, 2 * X + 5]
    assert rootless_combination(fs, 101) == rootless_combination(fs, 101)


# ---------------------------------------------------------------- text formats


@pytest.mark.parametrize(
    "text, coeffs",
    [
        ("x^2+x+1", [1, 1, 1]),
        ("2x - 3", [-3, 2]),
        ("(x-1)(x+1)", [-1, 0, 1]),
        ("(x^3-19)*(x^2+x+1)", [-19, -19, -19, 1, 1, 1]),
        ("n**2 - 4*n", [0, -4, 1]),
        ("-x", [0, -1]),
        ("7", [7]),
        ("[1, 0, -2]", [1, 0, -2]),
    ],
)
def test_parse(text, coeffs):
    assert parse_poly(text) == IntPoly(coeffs)


@pytest.mark.parametrize("text", ["x^^2", "", "x+", "(x", "y^2", "x^-1", "2.5x"])
def test_parse_errors(text):
    with pytest.raises(PolyParseError):
        parse_poly(text)


@settings(max_examples=200, deadline=None)
@given(polys)
def test_format_parse_round_trip(f):
    assert parse_poly(format_poly(f)) == f
    assert parse_poly(format_poly(f, "n")) == f


def test_format_factored():
    assert format_factored(2 * X - 10, "n") == "2*(n-5)"
    assert format_poly(X**2 + X + 1) == "x^2+x+1"
