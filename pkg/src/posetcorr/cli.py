"""Command-line front end.

``posetcorr verify`` runs verifier suites and prints one JSON record per
instance on stdout, with a per-theorem summary on stderr.  ``posetcorr
compute`` prints a single object in canonical text.

Exit status: 0 when every verdict holds, 1 when some verdict fails, 2 on
usage or parse errors.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from collections import Counter
from pathlib import Path

from . import young
from .enumeration import count_linear_extensions, maj_generating_function
from .genfun import order_poly, profile_gf, schur_poly
from .inequalities import (verify_cross_product, verify_ddp_family, verify_fishburn,
                           verify_generalized_fishburn, verify_K_family, verify_log_concavity,
                           verify_lp_schur, verify_op_chain, verify_stanley_identity)
from .instances import posets_up_to, random_poset, random_quadruple
from .poly import MultiPoly
from .poset import Poset, _bits, antichain, chain, lower_ideal_masks, parse_poset_text, skew_shape_poset

THEOREMS = ("fishburn", "generalized-fishburn", "op", "op-K", "lp-schur",
            "ddp", "log-concave", "cross-product", "stanley")


class UsageError(Exception):
    pass


# -- suites ------------------------------------------------------------------


def _small(max_n, cap):
    return posets_up_to(min(max_n, cap))


def _random(cfg, n_lo, n_hi, salt):
    rng = random.Random(f"{cfg.seed}:{salt}")
    return rng, [random_poset(rng.randint(n_lo, n_hi), rng) for _ in range(cfg.samples)]


def suite_fishburn(cfg):
    posets = _small(cfg.max_n, 4)
    if cfg.max_n >= 5:
        posets += _random(cfg, 5, cfg.max_n, "fishburn")[1]
    for P in posets:
        ideals = [list(_bits(m)) for m in lower_ideal_masks(P)]
        for i, A in enumerate(ideals):
            for B in ideals[i:]:
                yield verify_fishburn(P, A, B)


def _quad_instances(cfg, salt, n_cap):
    hi = min(cfg.max_n, n_cap)
    rng, posets = _random(cfg, max(1, hi - 2), hi, salt)
    for P in posets:
        yield P, random_quadruple(P, rng), rng


def suite_generalized_fishburn(cfg):
    for P, quad, _ in _quad_instances(cfg, "gf", 6):
        yield verify_generalized_fishburn(P, *quad)


def suite_op(cfg):
    for P, quad, rng in _quad_instances(cfg, "op", 5):
        yield verify_op_chain(P, *quad, rng.randint(0, cfg.max_t))


def suite_op_k(cfg):
    for P, quad, rng in _quad_instances(cfg, "opk", 5):
        yield verify_K_family(P, *quad, rng.randint(0, cfg.max_N))


def suite_lp_schur(cfg):
    rows = min(cfg.max_n, 3)
    shapes = list(young.partitions_in_box(rows, 3))
    N = max(rows, cfg.max_N)
    for i, mu in enumerate(shapes):
        for nu in shapes[i:]:
            yield verify_lp_schur(mu, nu, N)


def suite_ddp(cfg):
    for P in _small(cfg.max_n, 4):
        for t in range(cfg.max_t + 1):
            for z in range(P.n):
                for k in range(t + 1):
                    for a in range(1, t - k + 1):
                        for b in range(1, t - k - a + 1):
                            yield verify_ddp_family(P, z, t, k, a, b, "plain")
                            yield verify_ddp_family(P, z, t, k, a, b, "multivariate-q")


def suite_log_concave(cfg):
    for P in _small(cfg.max_n, 3):
        for t in range(cfg.max_t + 1):
            yield verify_log_concavity(P, t, 1, 1)


def suite_cross_product(cfg):
    rng, posets = _random(cfg, 3, max(3, min(cfg.max_n, 5)), "cpc")
    for P in posets:
        x, y, z = rng.sample(range(P.n), 3)
        t = rng.randint(1, max(1, cfg.max_t))
        for k in range(t + 1):
            for l in range(t + 1):
                for flavor in ("plain", "q", "multivariate-q"):
                    yield verify_cross_product(P, x, y, z, t, k, l, flavor)


def suite_stanley(cfg):
    for P in _small(cfg.max_n, 4):
        for t in range(cfg.max_t + 1):
            yield verify_stanley_identity(P, t)


SUITES = {
    "fishburn": suite_fishburn,
    "generalized-fishburn": suite_generalized_fishburn,
    "op": suite_op,
    "op-K": suite_op_k,
    "lp-schur": suite_lp_schur,
    "ddp": suite_ddp,
    "log-concave": suite_log_concave,
    "cross-product": suite_cross_product,
    "stanley": suite_stanley,
}


def cmd_verify(cfg, out) -> int:
    theorems = cfg.theorem or list(THEOREMS)
    for name in theorems:
        if name not in SUITES:
            raise UsageError(f"unknown theorem {name!r}; choose from {', '.join(THEOREMS)}")
    tally: dict[str, Counter] = {}
    failed = False
    for name in theorems:
        counts = tally.setdefault(name, Counter())
        for report in SUITES[name](cfg):
            out.write(json.dumps(report.to_record()) + "\n")
            counts["instances"] += 1
            if report.ok:
                counts["hold"] += 1
            else:
                counts["fail"] += 1
                failed = True
            if report.equality:
                counts["equality"] += 1
    for name, counts in tally.items():
        print(f"{name}: {counts['instances']} instances, {counts['hold']} hold, "
              f"{counts['fail']} fail, {counts['equality']} with equality", file=sys.stderr)
    return 1 if failed else 0


# -- compute -----------------------------------------------------------------


def parse_poset_spec(spec: str) -> Poset:
    kind, sep, arg = spec.partition(":")
    try:
        if sep and kind == "chain":
            return chain(int(arg))
        if sep and kind == "antichain":
            return antichain(int(arg))
        if sep and kind == "skew":
            return skew_shape_poset(young.parse_skew(arg))
        if sep and kind == "file":
            return parse_poset_text(Path(arg).read_text())
        return parse_poset_text(Path(spec).read_text())
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read poset {spec!r}: {exc}") from exc


def _need(value, flag):
    if value is None:
        raise UsageError(f"{flag} is required for this object")
    return value


def cmd_compute(args, out) -> int:
    obj = args.object
    if obj == "schur":
        try:
            shape = young.parse_skew(_need(args.shape, "--shape"))
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        value = schur_poly(shape, _need(args.vars, "--vars"))
    else:
        P = parse_poset_spec(_need(args.poset, "--poset"))
        if obj == "e":
            value = count_linear_extensions(P)
        elif obj == "omega":
            value = order_poly(P, _need(args.t, "--t")).coefficient(())
        elif obj == "omega_q":
            value = order_poly(P, _need(args.t, "--t"), "q")
        elif obj == "omega_bq":
            value = order_poly(P, _need(args.t, "--t"), "multivariate-q")
        elif obj == "kz":
            value = profile_gf(P, _need(args.N, "--N"))
        else:
            value = MultiPoly.univariate(maj_generating_function(P))
    out.write(f"{value}\n")
    return 0


# -- entry point -------------------------------------------------------------


def _nonneg(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="posetcorr", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verifier suites")
    v.add_argument("--theorem", action="append", help=f"one of {', '.join(THEOREMS)}; repeatable")
    v.add_argument("--max-n", type=_positive, default=4)
    v.add_argument("--max-t", type=_positive, default=2)
    v.add_argument("--max-N", type=_positive, default=2)
    v.add_argument("--samples", type=_positive, default=20, help="seeded random instances per suite")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--output", type=Path, help="write records here instead of stdout")

    c = sub.add_parser("compute", help="print one object")
    c.add_argument("object", choices=("e", "omega", "omega_q", "omega_bq", "kz", "schur", "maj"))
    c.add_argument("--poset", help="chain:n, antichain:n, skew:3,1/1, file:path or a path")
    c.add_argument("--t", type=_nonneg)
    c.add_argument("--N", type=_nonneg)
    c.add_argument("--shape")
    c.add_argument("--vars", type=_positive)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            if args.output is not None:
                with open(args.output, "w") as fh:
                    return cmd_verify(args, fh)
            return cmd_verify(args, sys.stdout)
        return cmd_compute(args, sys.stdout)
    except UsageError as exc:
        print(f"posetcorr: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
