"""Command-line front end.

Every subcommand prints one JSON document (``--format json``, the default) or
a short text rendering.  Exit codes: 0 success, 2 bad input, 3 a mathematical
precondition failed (bad prime, shared root, invalid place), 4 a computational
bound was exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from fractions import Fraction

from sympy import factorint

from . import polyring
from .arith import FactorizationError, primes_up_to
from .grouppoly import (
    GroupPoly,
    InconsistencyError,
    counterexample_fixed_torsion,
    dynamical_local,
    dynamical_verdict,
    gcd_of,
    global_solve,
    group_hasse_verdict,
    local_solvable,
    local_solvable_fixed_T,
    membership_verdict,
)
from .hasse import (
    guaranteed_hasse,
    has_root_mod_all_integers,
    hasse_principle_verdict,
    linear_power_counterexample,
    padded_counterexample,
)
from .polyring import (
    BadPrimeError,
    CommonRootError,
    IntPoly,
    PolyParseError,
    PreconditionError,
    bad_primes,
    format_factored,
    format_poly,
    parse_poly,
    rootless_combination,
)
from .report import dumps, to_jsonable
from .sunits import (
    InvalidContextError,
    NotSmoothError,
    ReductionContext,
    Support,
    a1_density_experiment,
    parse_sunit,
)

EXIT_INPUT = 2
EXIT_MATH = 3
EXIT_BOUND = 4


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class Config:
    prime_bound: int = 10000
    analysis_bound: int = 1000
    enumeration_threshold: int = polyring.ENUMERATION_THRESHOLD
    exceptional_allowance: int = 0
    workers: int = 1
    output: str = "json"
    seed: int = 0

    def __post_init__(self):
        for name in ("prime_bound", "analysis_bound", "enumeration_threshold"):
            if getattr(self, name) < 1:
                raise CliError(f"--{name.replace('_', '-')} must be positive", EXIT_INPUT)
        if self.exceptional_allowance < 0:
            raise CliError("--exceptional-allowance must be nonnegative", EXIT_INPUT)
        if self.workers < 1:
            raise CliError("--workers must be at least 1", EXIT_INPUT)

    @classmethod
    def from_args(cls, args):
        return cls(
            prime_bound=args.prime_bound,
            analysis_bound=args.analysis_bound,
            enumeration_threshold=args.enumeration_threshold,
            exceptional_allowance=args.exceptional_allowance,
            workers=args.workers,
            output=args.format,
            seed=args.seed,
        )


# --------------------------------------------------------------------------
# input helpers


def _load_json(text, path):
    if path:
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as exc:
            raise CliError(f"cannot read {path}: {exc}", EXIT_INPUT) from None
    if text is None:
        raise CliError("no input given (positional JSON or --input FILE)", EXIT_INPUT)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(f"invalid JSON: {exc}", EXIT_INPUT) from None


def _support(primes) -> Support:
    try:
        return Support(tuple(int(q) for q in primes))
    except (TypeError, ValueError) as exc:
        raise CliError(f"bad support: {exc}", EXIT_INPUT) from None


def _support_arg(text) -> Support:
    return _support(q for q in str(text).split(",") if q.strip())


def _group_poly(args) -> GroupPoly:
    data = _load_json(args.group, args.input)
    if not isinstance(data, dict) or "support" not in data or "coeffs" not in data:
        raise CliError('expected {"support": [...], "coeffs": [...]}', EXIT_INPUT)
    support = _support(data["support"])
    if not data["coeffs"]:
        raise CliError("coeffs must be nonempty", EXIT_INPUT)
    coeffs = [parse_sunit(c, support) for c in data["coeffs"]]
    return GroupPoly(support, tuple(coeffs))


def _context(p) -> ReductionContext:
    return ReductionContext.at(p)


# --------------------------------------------------------------------------
# subcommands


def cmd_poly_check(args, cfg):
    f = parse_poly(args.polynomial)
    if f.is_zero():
        raise CliError("the zero polynomial has every root", EXIT_INPUT)
    verdict = hasse_principle_verdict(
        f, cfg.prime_bound, cfg.exceptional_allowance, workers=cfg.workers
    )
    moduli = has_root_mod_all_integers(f, cfg.analysis_bound, workers=cfg.workers)
    return "poly-check", {
        "polynomial": f,
        "guaranteed": guaranteed_hasse(f),
        "verdict": verdict,
        "all_moduli": moduli,
    }


def cmd_rootless(args, cfg):
    fs = [parse_poly(s) for s in args.polynomials]
    if len(fs) < 2:
        raise CliError("need at least two polynomials", EXIT_INPUT)
    try:
        cs = rootless_combination(fs, args.prime)
    except BadPrimeError as exc:
        bad = sorted(bad_primes(fs))
        raise CliError(f"{exc}; bad primes: {bad}", EXIT_MATH) from None
    h = IntPoly()
    for c, f in zip(cs, fs):
        h = h + c * f
    return "rootless", {"prime": args.prime, "coefficients": cs, "combination": h}


def cmd_group_gcd(args, cfg):
    F = _group_poly(args)
    g = gcd_of(F)
    return "group-gcd", {"gcd": g, "text": format_factored(g, "n")}


def cmd_group_local(args, cfg):
    F = _group_poly(args)
    ctx = _context(args.prime)
    if args.torsion is None:
        hit = local_solvable(F, ctx)
        out = {"prime": args.prime, "n": hit[0], "T": hit[1]} if hit else {"prime": args.prime, "n": None, "T": None}
    else:
        n = local_solvable_fixed_T(F, args.torsion, ctx)
        out = {"prime": args.prime, "n": n, "T": args.torsion if n is not None else None}
    return "group-local", out


def cmd_group_global(args, cfg):
    F = _group_poly(args)
    hit = global_solve(F)
    return "group-global", {"n": hit[0], "T": hit[1]} if hit else {"n": None, "T": None}


def cmd_group_check(args, cfg):
    F = _group_poly(args)
    return "group-check", group_hasse_verdict(
        F, cfg.prime_bound, cfg.exceptional_allowance, workers=cfg.workers
    )


def cmd_group_dynamical(args, cfg):
    F = _group_poly(args)
    if args.prime is not None:
        hit = dynamical_local(F, args.phi, _context(args.prime))
        out = {"phi": args.phi, "prime": args.prime, "n": hit[0] if hit else None, "T": hit[1] if hit else None}
        return "group-dynamical-local", out
    if args.phi == 0:
        raise CliError("--phi must be nonzero", EXIT_INPUT)
    return "group-check", dynamical_verdict(
        F, args.phi, cfg.prime_bound, cfg.exceptional_allowance, workers=cfg.workers
    )


def cmd_member(args, cfg):
    support = _support_arg(args.support)
    P = parse_sunit(args.point, support)
    gens = [parse_sunit(g, support) for g in args.gen]
    return "member", membership_verdict(P, gens, cfg.prime_bound)


def cmd_density(args, cfg):
    if len(args.point) != len(args.k):
        raise CliError("give one --k per --point", EXIT_INPUT)
    if args.support:
        support = _support_arg(args.support)
    else:
        qs = set()
        for s in args.point:
            v = Fraction(s)
            qs.update(factorint(abs(v.numerator)))
            qs.update(factorint(v.denominator))
        qs.discard(1)
        support = _support(sorted(qs) or [2])
    pts = [parse_sunit(s, support) for s in args.point]
    bound = args.bound if args.bound is not None else cfg.prime_bound
    try:
        rep = a1_density_experiment(pts, args.l, args.k, bound)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_MATH) from None
    return "density", rep


def cmd_counterexample(args, cfg):
    d = args.degree
    if args.kind == "fixed-torsion":
        try:
            F = counterexample_fixed_torsion(d)
        except ValueError as exc:
            raise CliError(str(exc), EXIT_INPUT) from None
        return "counterexample", {
            "kind": "fixed-torsion",
            "degree": d,
            "group_poly": F,
            "exponent_poly": F.exponent_polys[2],
            "sign_poly": F.sign_poly,
        }
    try:
        f = padded_counterexample(d) if args.monic else linear_power_counterexample(d)
    except polyring.PolyError as exc:
        raise CliError(str(exc), EXIT_INPUT) from None
    F = GroupPoly.from_exponent_polys(Support((2,)), {2: f})
    return "counterexample", {
        "kind": "reducible",
        "degree": d,
        "polynomial": f,
        "text": format_poly(f, "n"),
        "group_poly": F,
    }


def cmd_selfcheck(args, cfg):
    """Randomized cross-checks of root finding and rootless combinations."""
    rng = random.Random(cfg.seed)
    primes = primes_up_to(args.max_prime)
    mismatches = 0
    combos = 0
    for _ in range(args.count):
        p = rng.choice(primes)
        f = IntPoly(rng.randint(-20, 20) for _ in range(rng.randint(1, 6)))
        fp = polyring.reduce(f, p)
        if not fp.is_zero():
            brute = {x for x in range(p) if f(x) % p == 0}
            if polyring.roots_mod_p(fp, threshold=1) != brute or polyring.roots_mod_p(fp) != brute:
                mismatches += 1
        g = IntPoly(rng.randint(-20, 20) for _ in range(rng.randint(1, 6)))
        if f.is_zero() or g.is_zero() or polyring.gcd_z(f, g) != 1:
            continue
        if p in bad_primes([f, g]):
            continue
        cs = rootless_combination([f, g], p)
        h = cs[0] * f + cs[1] * g
        combos += 1
        if any(h(x) % p == 0 for x in range(p)):
            mismatches += 1
    return "selfcheck", {"seed": cfg.seed, "cases": args.count, "combinations": combos, "mismatches": mismatches}


# --------------------------------------------------------------------------
# rendering


def _render_text(value, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v:
                if isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v):
                    shown = ", ".join(v[:12]) + (f", ... ({len(v)} total)" if len(v) > 12 else "")
                    lines.append(f"{pad}{k}: [{shown}]")
                elif isinstance(v, list) and len(v) > 12:
                    lines.append(f"{pad}{k}: <{len(v)} entries>")
                else:
                    lines.append(f"{pad}{k}:")
                    lines.extend(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {'null' if v is None else v if v != [] else '[]'}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(_render_text(item, indent + 1))
            else:
                lines.append(f"{pad}- {item}")
    else:
        lines.append(f"{pad}{value}")
    return lines


def _emit(kind, result, cfg, out):
    if cfg.output == "json":
        out.write(dumps(result, kind) + "\n")
    else:
        out.write(f"{kind}\n")
        out.write("\n".join(_render_text(to_jsonable(result), 1)) + "\n")


# --------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prime-bound", type=int, default=10000)
    common.add_argument("--analysis-bound", type=int, default=1000)
    common.add_argument("--enumeration-threshold", type=int, default=polyring.ENUMERATION_THRESHOLD)
    common.add_argument("--exceptional-allowance", type=int, default=0)
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(
        prog="mwhasse",
        description="Local-global checks for integer polynomials and S-unit polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=fn)
        return sp

    def group_input(sp):
        sp.add_argument("group", nargs="?", help='JSON: {"support": [2, 3], "coeffs": ["1/2", "3"]}')
        sp.add_argument("--input", help="read the group polynomial from a JSON file")

    sp = add("poly-check", cmd_poly_check, "Hasse principle verdict for f in Z[x]")
    sp.add_argument("polynomial")

    sp = add("rootless", cmd_rootless, "coefficients of a combination with no root mod p")
    sp.add_argument("polynomials", nargs="+")
    sp.add_argument("--prime", type=int, required=True)

    sp = add("group-gcd", cmd_group_gcd, "gcd of a polynomial with S-unit coefficients")
    group_input(sp)

    sp = add("group-local", cmd_group_local, "smallest n with F(n) torsion mod p")
    group_input(sp)
    sp.add_argument("--prime", type=int, required=True)
    sp.add_argument("--torsion", type=int, choices=(1, -1))

    sp = add("group-global", cmd_group_global, "integer n with F(n) torsion")
    group_input(sp)

    sp = add("group-check", cmd_group_check, "full local/global report with the gcd comparison")
    group_input(sp)

    sp = add("group-dynamical", cmd_group_dynamical, "the same for phi^n F(n)")
    group_input(sp)
    sp.add_argument("--phi", type=int, required=True)
    sp.add_argument("--prime", type=int, help="only search at this place")

    sp = add("member", cmd_member, "subgroup membership, exact and place by place")
    sp.add_argument("point")
    sp.add_argument("--gen", action="append", default=[], help="subgroup generator (repeatable)")
    sp.add_argument("--support", required=True, help="comma-separated primes, e.g. 2,3")

    sp = add("density", cmd_density, "frequency of prescribed l-adic order valuations")
    sp.add_argument("--point", action="append", required=True)
    sp.add_argument("--k", action="append", type=int, required=True)
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("--bound", type=int)
    sp.add_argument("--support")

    sp = add("counterexample", cmd_counterexample, "construct a counterexample polynomial")
    sp.add_argument("--kind", choices=("fixed-torsion", "reducible"), required=True)
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--monic", action="store_true", help="reducible kind: monic family, degree >= 5")

    sp = add("selfcheck", cmd_selfcheck, "randomized cross-checks (uses --seed)")
    sp.add_argument("--count", type=int, default=200)
    sp.add_argument("--max-prime", type=int, default=500)

    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else 0
    try:
        cfg = Config.from_args(args)
        polyring.ENUMERATION_THRESHOLD = cfg.enumeration_threshold
        kind, result = args.func(args, cfg)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (PolyParseError, NotSmoothError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (BadPrimeError, CommonRootError, InvalidContextError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MATH
    except FactorizationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except InconsistencyError:
        raise
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _emit(kind, result, cfg, out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
