"""Command-line interface: ``combibounds <command> ...``.

Commands:
  gen              write a generated channel to a file
  bounds           evaluate bounds on one channel
  deletion-table   closed-form and LP columns for the deletion channel
  family           Hamming/Singleton interpolation curve
  verify           check a certificate against a channel

The exit status is 0 only when every requested computation and
verification succeeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import random
import sys
from collections.abc import Callable
from fractions import Fraction
from pathlib import Path

from . import bounds as B
from .channel import Certificate, Channel, ChannelError, WeightVec, confusability, cover_violations, packing_violations
from .deletion import (
    deletion_cover_thm1_vector,
    deletion_cover_thm1_weight,
    deletion_fvy_weight,
    deletion_kk_bound,
    deletion_thm2_bound,
    grain_cover_thm4,
)
from .family import family_curve
from .fileio import load_certificate, load_channel, read_weights, save_certificate, save_channel
from .lp import SolverConfig, fractional_packing, integer_covering, integer_packing, theta_star
from .report import BoundReport
from .table import COLUMNS, deletion_table
from .zoo import deletion_channel, erasure_substitution_channel, grain_channel, random_channel

FIG1 = [[0], [0, 1], [0, 2], [1, 2]]


class UsageError(Exception):
    pass


# -- channel sources ---------------------------------------------------------


def generate(spec: str, seed: int | None = None) -> tuple[Channel, dict]:
    """Build a channel from ``name:params``; returns it with descriptive metadata."""
    name, _, rest = spec.partition(":")
    try:
        args = [a for a in rest.split(",") if a] if rest else []
        if name == "deletion":
            (n,) = map(int, args)
            return deletion_channel(n), {"family": "deletion", "n": n}
        if name == "grain":
            (n,) = map(int, args)
            return grain_channel(n), {"family": "grain", "n": n}
        if name == "erasure-sub":
            q, n, a, b = map(int, args)
            return erasure_substitution_channel(q, n, a, b), {"family": name}
        if name == "random":
            nx, ny = int(args[0]), int(args[1])
            density = float(args[2]) if len(args) > 2 else 0.3
            return random_channel(nx, ny, density, random.Random(seed)), {"family": name}
        if name == "identity":
            (k,) = map(int, args)
            return Channel.identity(k), {"family": name}
        if name == "fig1":
            return Channel.from_neighborhoods(FIG1, 3), {"family": name}
    except ValueError:
        raise UsageError(f"bad parameters in --gen {spec!r}") from None
    raise UsageError(f"unknown generator {name!r}")


def load_source(args) -> tuple[Channel, dict, str]:
    if args.gen and args.channel:
        raise UsageError("give either --gen or --channel, not both")
    if args.gen:
        A, meta = generate(args.gen, args.seed)
        return A, meta, args.gen
    if args.channel:
        return load_channel(args.channel), {}, str(args.channel)
    raise UsageError("a channel source is required (--gen or --channel)")


# -- bounds ------------------------------------------------------------------

UPPER_SIDE = "output"
LOWER_SIDE = "input"


def _side_weights(t_arg: str | None, A: Channel, side: str):
    if t_arg is None or t_arg == "uniform":
        return None
    vec = read_weights(t_arg, side)
    size = A.num_outputs if side == "output" else A.num_inputs
    if len(vec) != size:
        raise B.BoundError(f"--t has {len(vec)} entries but this method needs {size} ({side} weights)")
    return vec


def _needs_n(meta: dict, family: str, method: str) -> int:
    if meta.get("family") != family:
        raise UsageError(f"method {method!r} needs a generated {family} channel")
    return meta["n"]


def run_method(method: str, A: Channel, meta: dict, t_arg: str | None, config: SolverConfig) -> BoundReport:
    name, _, param = method.partition(":")
    up = lambda: _side_weights(t_arg, A, UPPER_SIDE)  # noqa: E731
    low = lambda: _side_weights(t_arg, A, LOWER_SIDE)  # noqa: E731
    simple: dict[str, Callable[[], BoundReport]] = {
        "mdu": lambda: B.mdu(A, up()),
        "dsu": lambda: B.dsu(A, up()),
        "mdl": lambda: B.mdl(A, low()),
        "dsl": lambda: B.dsl(A, low()),
        "ldl": lambda: B.ldl(A, low()),
        "caro-wei": lambda: B.caro_wei(confusability(A), low()),
        "motzkin-straus": lambda: B.motzkin_straus(confusability(A), low()),
        "turan": lambda: B.turan(confusability(A)),
        "edge-upper": lambda: B.edge_only_upper(A),
        "edge-lower": lambda: B.edge_only_lower(A),
    }
    if name in simple and not param:
        return simple[name]()
    if name == "ldu":
        k = None if param in ("inf", "∞") else int(param or 1)
        return B.ldu_iterated(A, up(), k)
    if name == "dsu-threshold":
        return B.dsu_threshold(A, Fraction(param))
    if name == "lp":
        res = fractional_packing(A, config)
        return BoundReport(
            "lp", "upper-on-p", res.value, Certificate("cover", res.dual, res.value),
            iterations=res.pivots, params={"method": res.method},
        )
    if name == "ilp":
        res = integer_packing(A, config)
        cert = Certificate.from_index_set("integer-packing", "input", A.num_inputs, res.witness)
        return BoundReport(
            "ilp", "lower-on-p", res.value, cert,
            params={"optimality_proved": res.optimality_proved, "proven_upper": res.bound},
        )
    if name == "ilp-cover":
        res = integer_covering(A, config)
        cert = Certificate.from_index_set("integer-cover", "output", A.num_outputs, res.witness)
        return BoundReport(
            "ilp-cover", "upper-on-kappa", res.value, cert,
            params={"optimality_proved": res.optimality_proved, "proven_lower": res.bound},
        )
    if name == "theta-star":
        res = theta_star(confusability(A), config)
        return BoundReport("theta-star", "lower-on-kappa-star", res.value)
    if name == "thm1":
        n = _needs_n(meta, "deletion", method)
        rep = deletion_cover_thm1_weight(n)
        vec = deletion_cover_thm1_vector(n)
        return BoundReport(rep.name, rep.direction, rep.exact, Certificate("cover", vec, rep.exact),
                           rep.iterations, rep.params)
    if name in ("fvy", "kk", "thm2"):
        n = _needs_n(meta, "deletion", method)
        return {"fvy": deletion_fvy_weight, "kk": deletion_kk_bound, "thm2": deletion_thm2_bound}[name](n)
    if name == "thm4":
        n = _needs_n(meta, "grain", method)
        return grain_cover_thm4(n)[1]
    raise UsageError(f"unknown method {method!r}")


def _fmt(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def cmd_bounds(args) -> int:
    A, meta, label = load_source(args)
    config = SolverConfig(lp_cap=args.lp_cap)
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    reports: list[BoundReport] = []
    ok = True
    for m in methods:
        try:
            rep = run_method(m, A, meta, args.t, config)
        except (ChannelError, B.BoundError, UsageError, ValueError) as exc:
            print(f"error: {m}: {exc}", file=sys.stderr)
            ok = False
            continue
        if args.emit_certificates and rep.certificate is not None:
            if not rep.certificate.verify(A):
                print(f"error: {m}: certificate failed verification", file=sys.stderr)
                ok = False
                continue
            if args.certificate_dir:
                d = Path(args.certificate_dir)
                d.mkdir(parents=True, exist_ok=True)
                save_certificate(rep.certificate, d / f"{m.replace(':', '_')}.json")
        reports.append(rep)
        print(f"{rep.name:16s} {rep.direction:20s} {_fmt(rep.exact):>30s}  floor {rep.floor}")

    if args.csv:
        _write(args.csv, _bounds_csv(label, reports))
    if args.json:
        payload = []
        for r in reports:
            obj = r.to_json()
            if not args.emit_certificates:
                obj.pop("certificate", None)
            payload.append(obj)
        _write(args.json, json.dumps({"channel": label, "reports": payload}, indent=1) + "\n")
    return 0 if ok else 1


def _bounds_csv(label: str, reports: list[BoundReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["channel", "bound", "direction", "exact", "floor", "approx"])
    for r in reports:
        w.writerow([label, r.name, r.direction, _fmt(r.exact), r.floor, f"{float(r.exact):.10g}"])
    return buf.getvalue()


def _write(path: str, text: str):
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


# -- other commands ----------------------------------------------------------


def cmd_gen(args) -> int:
    A, _, _ = load_source(args)
    save_channel(A, args.out, labels=not args.no_labels)
    print(f"wrote {args.out}: |X|={A.num_inputs} |Y|={A.num_outputs} |E|={A.num_edges}")
    return 0


def cmd_deletion_table(args) -> int:
    rows = deletion_table(args.n_min, args.n_max, args.pstar_cap, args.jobs)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COLUMNS)
    for row in rows:
        w.writerow(row.cells())
        for note in row.flags():
            print(f"note: n={row.n}: {note}", file=sys.stderr)
    _write(args.csv or "-", buf.getvalue())
    return 0


def cmd_family(args) -> int:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["s", "delta", "hamming", "singleton", "optimized", "b_star",
                "exp_hamming", "exp_singleton", "exp_optimized"])
    for p in family_curve(args.q, args.n):
        w.writerow([
            p.s, f"{float(p.delta):.6f}", _fmt(p.hamming), _fmt(p.singleton), _fmt(p.optimized), p.b_star,
            *(f"{p.exponent(k, args.n):.6f}" for k in ("hamming", "singleton", "optimized")),
        ])
    _write(args.csv or "-", buf.getvalue())
    return 0


def cmd_verify(args) -> int:
    A, _, _ = load_source(args)
    cert = load_certificate(args.certificate)
    size = A.num_outputs if cert.vector.side == "output" else A.num_inputs
    if len(cert.vector) != size:
        print(f"FAIL: certificate has {len(cert.vector)} entries, channel side has {size}")
        return 1
    if cert.kind in ("cover", "integer-cover"):
        bad = cover_violations(A, cert.vector)
        what = "input"
    else:
        bad = packing_violations(A, cert.vector)
        what = "output"
    problems = []
    if bad:
        idx = bad[0]
        if idx < 0:
            problems.append(f"negative entry at index {-1 - idx}")
        else:
            problems.append(f"constraint violated at {what} {idx}" + (f" (and {len(bad) - 1} more)" if len(bad) > 1 else ""))
    if cert.vector.total() != cert.value:
        problems.append(f"stated value {_fmt(cert.value)} differs from weight {_fmt(cert.vector.total())}")
    if cert.kind.startswith("integer") and any(v.denominator != 1 for v in cert.vector):
        problems.append("integer certificate has fractional entries")
    if problems:
        print("FAIL: " + "; ".join(problems))
        return 1
    print(f"PASS: {cert.kind} of weight {_fmt(cert.value)} ({float(cert.value):.6g})")
    return 0


# -- argument parsing --------------------------------------------------------


def _source_args(p: argparse.ArgumentParser):
    p.add_argument("--gen", metavar="NAME:PARAMS",
                   help="deletion:n, grain:n, erasure-sub:q,n,a,b, random:nx,ny[,density], identity:k, fig1")
    p.add_argument("--channel", metavar="PATH", help="channel file (combichannel v1)")
    p.add_argument("--seed", type=int, default=None, help="seed for random:... channels")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="combibounds", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a generated channel")
    _source_args(p)
    p.add_argument("--out", required=True)
    p.add_argument("--no-labels", action="store_true")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bounds", help="evaluate bounds on a channel")
    _source_args(p)
    p.add_argument("--t", default="uniform", help="'uniform' or a file with one rational per line")
    p.add_argument("--methods", default="mdu,mdl,dsu,dsl,ldu:1,ldl",
                   help="comma list: mdu mdl dsu dsl ldu:k ldl caro-wei motzkin-straus turan "
                        "edge-upper edge-lower lp ilp ilp-cover theta-star dsu-threshold:d "
                        "thm1 fvy kk thm2 thm4")
    p.add_argument("--csv", metavar="PATH")
    p.add_argument("--json", metavar="PATH")
    p.add_argument("--emit-certificates", action="store_true",
                   help="verify certificates and include them in JSON output")
    p.add_argument("--certificate-dir", metavar="DIR", help="also write each certificate to DIR")
    p.add_argument("--lp-cap", type=int, default=SolverConfig().lp_cap)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("deletion-table", help="deletion channel table as CSV")
    p.add_argument("--n-min", type=int, default=5)
    p.add_argument("--n-max", type=int, default=24)
    p.add_argument("--pstar-cap", type=int, default=10)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--csv", metavar="PATH")
    p.set_defaults(func=cmd_deletion_table)

    p = sub.add_parser("family", help="Hamming/Singleton family curve as CSV")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--csv", metavar="PATH")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", help="check a certificate")
    _source_args(p)
    p.add_argument("--certificate", required=True)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ChannelError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
