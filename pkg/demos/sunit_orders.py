"""Orders of S-units modulo primes, and membership in subgroups place by place.

Run: python3 demos/sunit_orders.py
"""

from mwhasse.grouppoly import membership_verdict
from mwhasse.sunits import ReductionContext, SUnit, Support, a1_density_experiment, order_mod, parse_sunit

S = Support((2, 3))
x = parse_sunit("-12/9", S)
print(f"x = {x}, exponents {x.exponents}, sign {x.sign}")
for p in (5, 7, 11, 13):
    print(f"  ord_{p}(x) = {order_mod(x, ReductionContext.at(p))}")

two = SUnit.prime(Support((2,)), 2)
for k in (0, 1, 2):
    rep = a1_density_experiment([two], 2, [k], 50000)
    print(f"2-adic valuation of ord_p(2) equal to {k}: {rep.hits}/{rep.total} = {float(rep.frequency):.3f}")

S2 = Support((2,))
for point, gen in (("-1", "4"), ("8", "2")):
    r = membership_verdict(parse_sunit(point, S2), [parse_sunit(gen, S2)], 10000)
    dens = f"{float(r.failure_density):.3f}" if r.failure_density is not None else "-"
    print(f"{point} in <{gen}>: {r.global_member}; local failures {len(r.local_failures)}/{r.primes_scanned} ({dens})")
