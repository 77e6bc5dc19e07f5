"""Command-line surface: groups, kernels, Lebesgue tables, means, transforms,
verification suites, and sharpness martingales.

Radices are given as a comma pattern repeated cyclically to --levels
(`--m 2,3,4 --levels 6`).  Every subcommand accepts --format json|csv and
--tol; random test functions come from a seeded PCG64 generator so repeated
invocations are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path


from . import hardy, io, kernels, means, verify, weights
from .errors import VilenkinError
from .group import GroupSpec, digits_of, make_group
from .spectral import (
    GridFunction,
    lp_norm,
    random_grid_function,
    transform_forward,
    transform_inverse,
    Spectrum,
)


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--m", default="2", help="radix pattern, e.g. 2 or 2,3,4")
    p.add_argument("--levels", type=int, default=None, help="number of levels (pattern repeats)")
    p.add_argument("--tol", type=float, default=1e-10, help="comparison tolerance")
    p.add_argument("--format", choices=("csv", "json"), default="csv", help="output format")
    p.add_argument("--out", default="-", help="output path ('-' for stdout)")
    p.add_argument("--seed", type=int, default=2024, help="PRNG seed for random functions")


def _group_from_args(args, min_levels: int = 1) -> GroupSpec:
    pattern = [int(tok) for tok in str(args.m).split(",") if tok]
    levels = args.levels
    if levels is None:
        levels = max(len(pattern), min_levels)
    return make_group(pattern, max(levels, min_levels))


def _emit(args, header, rows, json_obj=None) -> None:
    if args.format == "json":
        payload = json_obj if json_obj is not None else [dict(zip(header, r)) for r in rows]
        text = json.dumps(payload, indent=2, default=io._json_default)
        if args.out == "-":
            print(text)
        else:
            Path(args.out).write_text(text + "\n", encoding="utf-8")
        return
    if args.out == "-":
        print(",".join(header))
        for r in rows:
            print(",".join(io._fmt(x) for x in r))
    else:
        io.write_csv(args.out, header, rows)


def cmd_group(args) -> int:
    g = _group_from_args(args)
    rows = [[k, g.m[k], g.M[k + 1]] for k in range(g.levels)]
    _emit(args, ["k", "m_k", "M_k+1"], rows,
          json_obj={"m": list(g.m), "M": list(g.M), "lambda": g.lam})
    return 0


def cmd_kernel(args) -> int:
    g = _group_from_args(args, min_levels=args.res or 1)
    n = args.n
    N = args.res
    if args.kind == "dirichlet":
        f = kernels.dirichlet(g, n, N)
    elif args.kind == "fejer":
        f = kernels.fejer(g, n, N)
    elif args.kind == "riesz-log":
        f = kernels.riesz_log_kernel(g, n, N)
    elif args.kind == "norlund-log":
        f = kernels.norlund_log_kernel(g, n, N)
    else:
        q = _weights_from_args(args, n)
        fn = kernels.norlund_kernel if args.kind == "norlund" else kernels.tmean_kernel
        f = fn(g, q, n, N)
    _emit(args, ["x-index", "re", "im"], io.kernel_csv_rows(f), json_obj=io.grid_to_dict(f))
    return 0


def _weights_from_args(args, n: int) -> weights.WeightSequence:
    desc = getattr(args, "q", "ones") or "ones"
    if desc == "ones":
        return weights.ones(n + 1)
    if desc.startswith("power:"):
        return weights.power_weights(float(desc.split(":", 1)[1]), n + 1)
    if desc.startswith("log:"):
        alpha = float(desc.split(":", 1)[1])
        return weights.log_weights(alpha, n + 1)
    return weights.from_values([float(t) for t in desc.split(",")])


def cmd_lebesgue(args) -> int:
    pattern = [int(t) for t in str(args.m).split(",") if t]
    need = 1
    prod = pattern[0]
    while prod <= args.max_n:
        prod *= pattern[need % len(pattern)]
        need += 1
    g = _group_from_args(args, min_levels=need + 1)
    L = kernels.lebesgue_batch(g, args.max_n)
    rows = []
    for n in range(1, args.max_n + 1):
        nd = digits_of(n, g)
        b = kernels.lebesgue_bounds(nd, variant=args.variant)
        ok = b.lower - args.tol <= L[n] <= b.upper + args.tol
        rows.append([n, L[n], b.v, b.vstar, b.lower, b.upper, "pass" if ok else "fail"])
    _emit(args, ["n", "L_n", "v", "vstar", "lower", "upper", "pass"], rows)
    return 0


def cmd_mean(args) -> int:
    g = _group_from_args(args, min_levels=args.res)
    if args.input:
        f = io.load_grid(args.input, g)
    else:
        f = random_grid_function(g, args.res, seed=args.seed)
    s = transform_forward(f)
    kw = {}
    if args.kind in ("cesaro", "u", "v"):
        kw["alpha"] = args.alpha
    if args.kind in ("norlund", "tmean"):
        kw["q"] = _weights_from_args(args, args.max_n)
    mean = means._mean_by_kind(args.kind, **kw)
    start = 2 if args.kind in ("riesz_log", "norlund_log") else 1
    rows = []
    for n in range(start, args.max_n + 1):
        err = lp_norm(f.with_values(mean(f, n, s).values - f.values), args.p)
        rows.append([n, err])
    _emit(args, ["n", "error"], rows)
    return 0


def cmd_transform(args) -> int:
    g = _group_from_args(args, min_levels=args.res or 1)
    if args.input:
        f = io.load_grid(args.input, g)
    else:
        f = random_grid_function(g, args.res, seed=args.seed)
    if args.inverse:
        out = transform_inverse(Spectrum(f.group, f.resolution, f.values))
    else:
        out = GridFunction(f.group, f.resolution, transform_forward(f).coeffs)
    _emit(args, ["index", "re", "im"], io.kernel_csv_rows(out), json_obj=io.grid_to_dict(out))
    return 0


def cmd_verify(args) -> int:
    g = _group_from_args(args, min_levels=8)
    names = verify.SUITES if args.suite == "all" else tuple(args.suite.split(","))
    records = []
    for name in names:
        if name not in verify.SUITES:
            print(f"unknown suite {name!r}; choose from {', '.join(verify.SUITES)} or all",
                  file=sys.stderr)
            return 2
        records.extend(verify.run_suite(name, g, n_max=args.max_n, tol=args.tol,
                                        seed=args.seed, samples=args.samples))
    if args.format == "json":
        text = io.records_to_json(records)
        if args.out == "-":
            print(text)
        else:
            Path(args.out).write_text(text + "\n", encoding="utf-8")
    else:
        header, rows = io.records_csv_rows(records)
        _emit(args, header, rows)
    hard_failures = [r for r in records if r.passed is False]
    for r in hard_failures:
        print(f"FAIL {r.claim} {r.params}", file=sys.stderr)
    return 1 if hard_failures else 0


def cmd_counterexample(args) -> int:
    alphas = [int(t) for t in args.alpha.split(",") if t]
    g = _group_from_args(args, min_levels=max(args.rank, 1))
    mart = hardy.counterexample(g, args.kind, alphas, rank=args.rank, p=args.p)
    if args.kind == "hp-blocks":
        gaps = hardy.gap_report(g, alphas, args.p)
        flags = [f"a={row['alpha']}:"
                 + ("ok" if row.get("separation_ok", True) else "separation-gap-unmet")
                 for row in gaps["rows"]]
        print("block gap conditions (reported, not enforced): " + ", ".join(flags),
              file=sys.stderr)
    out_prefix = args.out if args.out != "-" else "counterexample"
    io.save_martingale(mart, f"{out_prefix}.martingale.json")
    q = weights.ones(g.M[alphas[-1]] + 2)
    cps = [g.M[a] + 2 for a in alphas]
    rows = verify.divergence_probe(
        mart, "tmean", args.p, cps, q=q,
        bound_fn=lambda n: next(g.M[a] ** (1.0 / args.p - 2.0) / (16.0 * a)
                                for a in alphas if g.M[a] + 2 == n))
    table = [[r["n"], r["weak_lp"], r["bound"]] for r in rows]
    io.write_csv(f"{out_prefix}.probe.csv", ["n", "weak_lp", "bound"], table)
    print(f"wrote {out_prefix}.martingale.json and {out_prefix}.probe.csv")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="vilenkin",
                                 description="Fourier analysis on bounded Vilenkin groups")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("group", help="print the number system of a group")
    _add_common(p)
    p.set_defaults(fn=cmd_group)

    p = sub.add_parser("kernel", help="tabulate a kernel")
    _add_common(p)
    p.add_argument("--kind", required=True,
                   choices=("dirichlet", "fejer", "norlund", "tmean", "riesz-log", "norlund-log"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--res", type=int, default=None, help="resolution (defaults to minimal)")
    p.add_argument("--q", default="ones", help="weights: ones, power:a, log:a, or a comma list")
    p.set_defaults(fn=cmd_kernel)

    p = sub.add_parser("lebesgue", help="Lebesgue constants with variation bounds")
    _add_common(p)
    p.add_argument("--max-n", type=int, default=64)
    p.add_argument("--variant", choices=("literal", "corrected"), default="literal")
    p.set_defaults(fn=cmd_lebesgue)

    p = sub.add_parser("mean", help="convergence table ||mean_n f - f||_p")
    _add_common(p)
    p.add_argument("--kind", default="fejer",
                   choices=("partial_sum", "fejer", "cesaro", "u", "v",
                            "riesz_log", "norlund_log", "norlund", "tmean"))
    p.add_argument("--max-n", type=int, default=32)
    p.add_argument("--res", type=int, default=5)
    p.add_argument("--p", type=float, default=2.0)
    p.add_argument("--alpha", type=float, default=0.5)
    p.add_argument("--q", default="ones")
    p.add_argument("--input", default=None, help="grid-function JSON input")
    p.set_defaults(fn=cmd_mean)

    p = sub.add_parser("transform", help="forward or inverse transform of a grid file")
    _add_common(p)
    p.add_argument("--res", type=int, default=5)
    p.add_argument("--input", default=None)
    p.add_argument("--inverse", action="store_true")
    p.set_defaults(fn=cmd_transform)

    p = sub.add_parser("verify", help="run verification suites")
    _add_common(p)
    p.add_argument("--suite", default="all",
                   help="comma list of suites or 'all' "
                        f"(available: {', '.join(verify.SUITES)})")
    p.add_argument("--max-n", type=int, default=64)
    p.add_argument("--samples", type=int, default=20)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("counterexample", help="build a sharpness martingale and probe it")
    _add_common(p)
    p.add_argument("--kind", required=True, choices=hardy.COUNTEREXAMPLE_KINDS)
    p.add_argument("--alpha", default="1,2,3", help="block levels, comma separated")
    p.add_argument("--p", type=float, default=0.4)
    p.add_argument("--rank", type=int, default=8)
    p.set_defaults(fn=cmd_counterexample)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except VilenkinError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
