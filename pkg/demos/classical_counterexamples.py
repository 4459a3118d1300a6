"""Integer polynomials with a root modulo every integer but no integer root.

Run: python3 demos/classical_counterexamples.py
"""

from mwhasse.hasse import (
    QUINTIC_COUNTEREXAMPLE,
    SEXTIC_COUNTEREXAMPLE,
    has_root_mod_all_integers,
    hasse_principle_verdict,
    linear_power_counterexample,
    root_mod,
)
from mwhasse.polyring import X, format_poly

for f in (QUINTIC_COUNTEREXAMPLE, SEXTIC_COUNTEREXAMPLE, linear_power_counterexample(3), X**2 + 1):
    v = hasse_principle_verdict(f, 5000)
    m = has_root_mod_all_integers(f, 300)
    print(format_poly(f))
    print(f"  local: {v.local_holds.value:<18} global root: {v.integer_root}  principle: {v.principle.value}")
    print(f"  all moduli: {m.status.value} ({m.reason})")

# a concrete root modulo a composite, assembled from prime powers
f = QUINTIC_COUNTEREXAMPLE
r = root_mod(f, 9 * 49 * 19 * 8)
print(f"\nroot of {format_poly(f)} modulo {9 * 49 * 19 * 8}: {r}, value {f(r)}")
