"""Local-global principles for polynomials whose coefficients live in S-unit groups.

Submodules:

* :mod:`mwhasse.polyring` -- Z[x] and F_p[x] arithmetic, rootless combinations
* :mod:`mwhasse.hasse` -- the classical principle for integer polynomials
* :mod:`mwhasse.sunits` -- S-units of Q with reduction maps
* :mod:`mwhasse.grouppoly` -- polynomials with S-unit coefficients
* :mod:`mwhasse.cli` -- batch command line (``python -m mwhasse``)
"""

from .grouppoly import (
    GroupPoly,
    counterexample_fixed_torsion,
    dynamical_local,
    dynamical_verdict,
    eval_group,
    gcd_of,
    global_solve,
    group_hasse_verdict,
    local_solvable,
    local_solvable_fixed_T,
    membership_global,
    membership_local,
    membership_verdict,
)
from .hasse import (
    guaranteed_hasse,
    has_root_mod_all_integers,
    has_root_mod_prime_power,
    hasse_principle_verdict,
    local_root_scan,
    root_mod,
)
from .polyring import IntPoly, ModPoly, X, parse_poly, rootless_combination, roots_mod_p
from .sunits import ReductionContext, SUnit, Support, from_rational

__version__ = "0.1.0"
