"""Coprime integer polynomials always have a combination without roots mod p.

Run: python3 demos/rootless_combinations.py
"""

from mwhasse.polyring import (
    BadPrimeError,
    X,
    bad_primes,
    format_poly,
    reduce,
    rootless_combination,
    roots_mod_p,
)

fs = [X**2 - 2, X**3 + X + 1, 3 * X - 7]
print("polynomials:", ", ".join(format_poly(f) for f in fs))
print("primes where the construction may break:", sorted(bad_primes(fs)))

for p in (5, 7, 11, 101, 1009):
    try:
        cs = rootless_combination(fs, p)
    except BadPrimeError as exc:
        print(f"p={p}: {exc}")
        continue
    h = sum((c * f for c, f in zip(cs, fs)), X * 0)
    print(f"p={p:>4}: coefficients {cs}  -> {format_poly(h)}, roots mod p: {sorted(roots_mod_p(reduce(h, p)))}")
