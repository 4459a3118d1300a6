"""Polynomials with S-unit coefficients: gcd, local and global solvability.

Run: python3 demos/group_polynomials.py
"""

from mwhasse.grouppoly import (
    GroupPoly,
    counterexample_fixed_torsion,
    dynamical_local,
    dynamical_verdict,
    gcd_of,
    global_solve,
    group_hasse_verdict,
    local_solvable_fixed_T,
)
from mwhasse.hasse import QUINTIC_COUNTEREXAMPLE
from mwhasse.polyring import X, format_factored
from mwhasse.sunits import ReductionContext, Support

S2, S23 = Support((2,)), Support((2, 3))
examples = {
    "f(n)[2], f the quintic": GroupPoly.from_exponent_polys(S2, {2: QUINTIC_COUNTEREXAMPLE}),
    "(n-5)[2] + (n-5)(n+1)[3]": GroupPoly.from_exponent_polys(S23, {2: X - 5, 3: (X - 5) * (X + 1)}),
    "[2] + n[3]": GroupPoly.from_exponent_polys(S23, {2: X**0, 3: X}),
}
for name, F in examples.items():
    r = group_hasse_verdict(F, 1500)
    print(name)
    print(f"  gcd {format_factored(r.gcd_poly, 'n')}; local failures {len(r.local_failures)}/{len(r.local)};"
          f" global {r.global_witness}; consistent with the gcd verdict: {r.theorem_consistent}")

F = counterexample_fixed_torsion(2)
print("\nfixed target -1:", [str(c) for c in F.coeffs])
print("  solutions mod p:", {p: local_solvable_fixed_T(F, -1, ReductionContext.at(p)) for p in (5, 7, 11, 13)})
print("  global torsion value:", global_solve(F), "(never -1)")

print("\nphi^n F(n) with phi = 3:")
print("  mod 7:", dynamical_local(F, 3, ReductionContext.at(7), T=-1))
r = dynamical_verdict(F, 3, 1500)
print(f"  local failures {len(r.local_failures)}, global {r.global_witness}, consistent {r.theorem_consistent}")
print("  gcd of F:", format_factored(gcd_of(F), "n"))
