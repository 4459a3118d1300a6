import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import brute_has_root_mod, small_primes
from mwhasse.hasse import (
    QUINTIC_COUNTEREXAMPLE,
    SEXTIC_COUNTEREXAMPLE,
    LocalStatus,
    ModuliStatus,
    Principle,
    guaranteed_hasse,
    has_root_mod_all_integers,
    has_root_mod_prime_power,
    hasse_principle_verdict,
    linear_power_counterexample,
    local_root_scan,
    padded_counterexample,
    root_mod,
    root_mod_prime_power,
)
from mwhasse.polyring import IntPoly, PolyError, X, integer_roots

PRIME_POWERS_500 = sorted(
    p**k for p in small_primes(500) for k in range(1, 10) if p**k <= 500
)

coeff_lists = st.lists(st.integers(-30, 30), min_size=2, max_size=6)


def test_prime_power_examples():
    assert has_root_mod_prime_power(QUINTIC_COUNTEREXAMPLE, 3, 2)
    assert not has_root_mod_prime_power(X**2 - 2, 2, 3)
    assert has_root_mod_prime_power(X, 5, 4)
    with pytest.raises(PolyError):
        has_root_mod_prime_power(IntPoly([9, 9]), 3, 2)


@pytest.mark.parametrize(
    "f",
    [
        X**2 - 2,
        X**2 + 7,
        (X**2 + 1) ** 2,
        (X - 4) ** 3 * (X + 1),
        4 * X**2 + 4 * X + 9,
        QUINTIC_COUNTEREXAMPLE,
        SEXTIC_COUNTEREXAMPLE,
        linear_power_counterexample(4),
        X**4 - 16 * X**2 + 64 + 3 * X**3,
        27 * X**3 - 8,
    ],
)
def test_prime_power_against_exhaustive_search(f):
    for q in PRIME_POWERS_500:
        p = min(d for d in range(2, q + 1) if q % d == 0)
        k = {p**j: j for j in range(1, 10)}[q]
        if all(c % q == 0 for c in f.coeffs):
            continue
        r = root_mod_prime_power(f, p, k)
        assert (r is not None) == brute_has_root_mod(list(f.coeffs), q), (f, q)
        if r is not None:
            assert f(r) % q == 0 and 0 <= r < q


@settings(max_examples=150, deadline=None)
@given(coeff_lists, st.sampled_from(small_primes(30)), st.integers(1, 5))
def test_prime_power_property(cs, p, k):
    f = IntPoly(cs)
    q = p**k
    assume(any(c % q for c in f.coeffs))
    assert has_root_mod_prime_power(f, p, k) == brute_has_root_mod(list(f.coeffs), q)


@settings(max_examples=150, deadline=None)
@given(coeff_lists, st.sampled_from(small_primes(30)), st.integers(1, 5))
def test_solvability_is_monotone_in_the_exponent(cs, p, k):
    f = IntPoly(cs)
    assume(any(c % p ** (k + 1) for c in f.coeffs) and any(c % p**k for c in f.coeffs))
    if has_root_mod_prime_power(f, p, k + 1):
        assert has_root_mod_prime_power(f, p, k)


def test_root_mod_composite():
    f = QUINTIC_COUNTEREXAMPLE
    for m in (1, 12, 91, 3 * 7 * 19, 9 * 49 * 19):
        r = root_mod(f, m)
        assert r is not None and f(r) % m == 0
    assert root_mod(X**2 + 1, 21) is None


@pytest.mark.parametrize("m", range(1, 400))
def test_root_mod_against_exhaustive(m):
    for f in (X**2 + 1, X**2 - 2, linear_power_counterexample(3), X**3 - 3 * X + 1):
        r = root_mod(f, m)
        exists = any(f(n) % m == 0 for n in range(m))
        assert (r is not None) == exists
        if r is not None:
            assert f(r) % m == 0


# ---------------------------------------------------------------- all moduli


def test_all_moduli_examples():
    v = has_root_mod_all_integers(X**2 + 1)
    assert v.status is ModuliStatus.FALSE and v.witness_modulus == 3
    assert has_root_mod_all_integers(X).status is ModuliStatus.CERTIFIED
    v = has_root_mod_all_integers(X**2 - 2)
    assert v.status is ModuliStatus.FALSE and v.witness_modulus == 3
    assert has_root_mod_all_integers(linear_power_counterexample(3)).status is ModuliStatus.CERTIFIED


@pytest.mark.parametrize("f", [QUINTIC_COUNTEREXAMPLE, SEXTIC_COUNTEREXAMPLE])
def test_all_moduli_counterexamples_up_to_bound(f):
    v = has_root_mod_all_integers(f, 300)
    assert v.status is ModuliStatus.UP_TO_BOUND
    assert not integer_roots(f)


def test_all_moduli_witness_is_minimal_dead_power():
    # x^2 - 17: no root mod 3 and mod 5, roots mod every 2^k
    v = has_root_mod_all_integers(X**2 - 17, 50)
    assert v.status is ModuliStatus.FALSE
    assert v.witness_modulus == 3
    # x^2 + 3 dies at 8 and at 5; the smaller modulus wins
    assert has_root_mod_all_integers(X**2 + 3, 50).witness_modulus == 5


# ---------------------------------------------------------------- verdicts


def test_hasse_verdicts():
    v = hasse_principle_verdict(QUINTIC_COUNTEREXAMPLE, 2000)
    assert v.local_holds is LocalStatus.YES and not v.global_holds
    assert v.principle is Principle.VIOLATED
    v = hasse_principle_verdict(SEXTIC_COUNTEREXAMPLE, 2000)
    assert v.principle is Principle.VIOLATED
    v = hasse_principle_verdict(X - 7, 2000)
    assert v.principle is Principle.HOLDS and v.integer_root == 7
    v = hasse_principle_verdict(X**2 + 1, 2000)
    assert v.local_holds is LocalStatus.NO and v.principle is Principle.HOLDS
    assert all(p % 4 == 3 for p in v.local_witnesses)


def test_exceptional_allowance_and_leading_coefficient():
    # 2x - 1 has no root mod 2 only because 2 kills the leading coefficient
    scan = local_root_scan(2 * X - 1, 100)
    assert 2 in scan.exceptional_primes and not scan.primes_without_root
    # x^2 - 2 fails at 3 and 5 up to 7; allowance 2 makes it "locally yes"
    v = hasse_principle_verdict(X**2 - 2, 7, exceptional_allowance=2)
    assert v.local_holds is LocalStatus.YES and v.principle is Principle.VIOLATED


def test_scan_is_deterministic_across_workers():
    a = local_root_scan(QUINTIC_COUNTEREXAMPLE, 3000, workers=1)
    b = local_root_scan(QUINTIC_COUNTEREXAMPLE, 3000, workers=3)
    assert a == b


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-12, 12), min_size=1, max_size=4))
def test_monic_low_degree_never_violated(lower):
    f = IntPoly(lower + [1])
    assert guaranteed_hasse(f)
    v = hasse_principle_verdict(f, 400)
    assert v.principle is Principle.HOLDS


@pytest.mark.parametrize("d", range(5, 10))
def test_padded_counterexamples(d):
    f = padded_counterexample(d)
    assert f.degree == d and f.lc == 1
    assert hasse_principle_verdict(f, 1000).principle is Principle.VIOLATED


def test_linear_power_counterexample_shape():
    f = linear_power_counterexample(3)
    assert f == (3 * X - 2) * (2 * X - 3) ** 2
    with pytest.raises(PolyError):
        linear_power_counterexample(1)
