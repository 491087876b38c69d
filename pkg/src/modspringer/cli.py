"""Command line front end.

Exit codes: 0 success, 1 a verification check failed, 2 bad usage or input.
Results go to stdout, warnings to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import serialize
from .checks import MAX_VERIFY_N, run_verification
from .correspondence import (
    CharParams,
    IrrLabel,
    LeviClass,
    cuspidal_levi_classes,
    full_table,
    has_cuspidal,
    psi_co,
    series_of,
)
from .partitions import MAX_ENUM_SIZE, ZERO, Partition
from .stratification import recollement_report, stratum_info


class UsageError(Exception):
    pass


def _is_prime(k: int) -> bool:
    if k < 2:
        return False
    d = 2
    while d * d <= k:
        if k % d == 0:
            return False
        d += 1
    return True


def _warn(args, message: str) -> None:
    if not getattr(args, "quiet", False):
        print(f"warning: {message}", file=sys.stderr)


def _check_ell(args, ell: int) -> int:
    if ell != ZERO and ell < 2:
        raise UsageError(f"--ell must be 0 or at least 2, got {ell}")
    if ell != ZERO and not _is_prime(ell):
        _warn(args, f"ell = {ell} is not prime; the combinatorics is computed anyway")
    return ell


def _check_n(n: int, cap: int = MAX_ENUM_SIZE) -> int:
    if not 1 <= n <= cap:
        raise UsageError(f"--n must be between 1 and {cap}, got {n}")
    return n


def _partition(text: str, flag: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise UsageError(f"{flag}: {exc}") from None


def cmd_table(args) -> str:
    params = CharParams(_check_n(args.n), _check_ell(args, args.ell))
    return serialize.render_table(full_table(params), args.format)


def cmd_map(args) -> str:
    ell = _check_ell(args, args.ell)
    nu = _partition(args.nu, "--nu")
    try:
        levi = LeviClass(nu, ell)
        irr = IrrLabel.parse(args.lam)
        mu = psi_co(levi, irr)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        return json.dumps({"ell": ell, "nu": list(nu), "lambda": {str(k): list(p) for k, p in irr.mp.components}, "mu": list(mu)}) + "\n"
    return f"{mu}\n"


def cmd_unmap(args) -> str:
    ell = _check_ell(args, args.ell)
    mu = _partition(args.mu, "--mu")
    if not mu:
        raise UsageError("--mu must be a nonempty partition")
    datum = series_of(mu, ell)
    if args.format == "json":
        return json.dumps(
            {
                "ell": ell,
                "mu": list(mu),
                "nu": list(datum.levi.nu),
                "lambda": {str(k): list(p) for k, p in datum.irr.mp.components},
            }
        ) + "\n"
    return f"nu={datum.levi.nu} lambda={datum.irr}\n"


def cmd_cuspidals(args) -> str:
    params = CharParams(_check_n(args.n, 10000), _check_ell(args, args.ell))
    classes = cuspidal_levi_classes(params) if params.n <= MAX_ENUM_SIZE else None
    cusp = has_cuspidal(params)
    if args.format == "json":
        doc = {"n": params.n, "ell": params.ell, "cuspidal": cusp, "orbit": [params.n] if cusp else None}
        if classes is not None:
            doc["levi_classes"] = [
                {"nu": list(c.nu), "weyl": [{"degree": q, "copies": c.weyl_profile[q]} for q in c.weyl_profile]}
                for c in classes
            ]
        return json.dumps(doc, indent=2) + "\n"
    if cusp:
        note = " (torus)" if params.n == 1 else ""
        lines = [f"GL({params.n}): unique cuspidal pair on orbit ({params.n}){note}"]
    else:
        lines = [f"GL({params.n}): none"]
    if classes is not None:
        lines.append(f"cuspidal Levi classes: {len(classes)}")
        for c in classes:
            lines.append(f"  {str(c.nu):<20} {c.shape():<28} W = {c.weyl_group()}")
    return "\n".join(lines) + "\n"


def _strata_rows(params: CharParams) -> list[dict]:
    rows, running = [], 0
    for layer in recollement_report(params):
        info = stratum_info(layer.levi.nu, params)
        running += layer.layer_size
        rows.append(
            {
                "index": layer.index,
                "nu": layer.levi.nu,
                "dimension": info.dimension,
                "closure_contains": info.closure_contains,
                "layer_size": layer.layer_size,
                "cumulative": running,
                "simples": layer.simples,
            }
        )
    return rows


def cmd_strata(args) -> str:
    params = CharParams(_check_n(args.n), _check_ell(args, args.ell))
    rows = _strata_rows(params)
    if args.format == "json":
        doc = {
            "n": params.n,
            "ell": params.ell,
            "strata": [
                {
                    "index": r["index"],
                    "nu": list(r["nu"]),
                    "dimension": r["dimension"],
                    "closure_contains": [list(x) for x in r["closure_contains"]],
                    "layer_size": r["layer_size"],
                    "cumulative": r["cumulative"],
                    "simples": [list(x) for x in r["simples"]],
                }
                for r in rows
            ],
        }
        return json.dumps(doc, indent=2) + "\n"
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["index", "nu", "dimension", "closure_contains", "layer_size", "cumulative"])
        for r in rows:
            w.writerow([r["index"], str(r["nu"]), r["dimension"], " ".join(map(str, r["closure_contains"])), r["layer_size"], r["cumulative"]])
        return buf.getvalue()
    if args.format == "latex":
        out = [r"\begin{tabular}{|r|l|r|l|r|}", r"\hline", r"$i$ & $\nu_i$ & $\dim Y_i$ & $\overline{Y_i} \supset Y_j$ & $|\mathrm{Irr}(W_i)|$ \\", r"\hline"]
        for r in rows:
            closure = ", ".join(f"({x})" for x in r["closure_contains"])
            out.append(rf"{r['index']} & $({r['nu']})$ & {r['dimension']} & ${closure}$ & {r['layer_size']} \\")
        out += [r"\hline", r"\end{tabular}"]
        return "\n".join(out) + "\n"
    lines = [f"Strata of gl({params.n}), ell = {params.ell}: {len(rows)}"]
    for r in rows:
        closure = " ".join(str(x) for x in r["closure_contains"])
        lines.append(
            f"  L{r['index']:<3} nu={str(r['nu']):<16} dim={r['dimension']:<6} "
            f"layer={r['layer_size']:<5} cumulative={r['cumulative']:<6} closure: {closure}"
        )
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> tuple[str, int]:
    if not 1 <= args.n_max <= MAX_VERIFY_N:
        raise UsageError(f"--n-max must be between 1 and {MAX_VERIFY_N}, got {args.n_max}")
    for ell in args.ells:
        _check_ell(args, ell)
    summary = run_verification(args.n_max, args.ells)
    if not summary.ok:
        first = summary.failures[0]
        print(f"FAIL {first['check']} at n={first['n']}, ell={first['ell']}: {first['detail']}", file=sys.stderr)
    return json.dumps(summary.as_dict(), indent=2) + "\n", 0 if summary.ok else 1


def _ells(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma separated list of integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="modspringer", description="Modular generalized Springer correspondence for GL(n).")
    parser.add_argument("--quiet", action="store_true", help="suppress warnings")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=serialize.FORMATS):
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS, help="suppress warnings")

    p = sub.add_parser("table", help="full correspondence table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("map", help="orbit attached to (nu, lambda)")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("--lambda", dest="lam", required=True, help='e.g. "2:1;4:1"')
    common(p, ("text", "json"))
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("unmap", help="series datum of an orbit")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--mu", required=True)
    common(p, ("text", "json"))
    p.set_defaults(func=cmd_unmap)

    p = sub.add_parser("cuspidals", help="cuspidal pairs and cuspidal Levi classes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    common(p, ("text", "json"))
    p.set_defaults(func=cmd_cuspidals)

    p = sub.add_parser("strata", help="stratification and recollement layers")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_strata)

    p = sub.add_parser("verify", help="run the self-checks")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--ells", type=_ells, required=True)
    p.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS, help="suppress warnings")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2
    text, code = result if isinstance(result, tuple) else (result, 0)
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
