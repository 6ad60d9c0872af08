"""Command-line front end.

Every run emits one self-describing JSON document (stable key order, so runs
with identical flags are byte-identical); the spectrum subcommand emits a
tab-separated table instead.  Exit codes: 0 success, 1 failed checks,
2 usage errors.

An optional key=value config file (--config FILE) supplies flag defaults with
the same names; explicit flags win.  The environment variable HYPCROSS_THREADS
caps worker threads for spectrum runs (default: available parallelism).
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import __version__, collar, pants, verifier, winding
from .spectrum import min_witness, spectrum as compute_spectrum


def _document(command: str, config: dict, results: dict) -> str:
    doc = {
        "command": command,
        "config": config,
        "results": results,
        "version": __version__,
    }
    return json.dumps(doc, indent=2, sort_keys=True)


def _emit(text: str, out: str | None) -> None:
    print(text)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def _cmd_constants(args) -> int:
    tab = verifier.constants()
    _emit(_document("constants", {}, tab.as_dict(corkscrew_up_to=8)), args.out)
    return 0


def _cmd_collar(args) -> int:
    x = args.length
    w = collar.collar_width(x)
    w1, narrow = collar.generalized_width(x)
    gap = collar.hexagon_gap(x)
    profile = collar.CollarProfile.from_core_length(x)
    results = {
        "core_length": x,
        "width": w,
        "wide_width": w1,
        "narrow_width_raw": narrow,
        "narrow_width": profile.w_narrow,
        "degenerate": profile.degenerate,
        "hexagon_gap": gap,
        "gap_identity_residual": gap - 2.0 * w1,
        "cusp_horocycle_bound": collar.cusp_horocycle_bound(),
    }
    if args.scan:
        results["scan"] = collar.width_scan()
    _emit(_document("collar", {"length": x, "scan": bool(args.scan)}, results), args.out)
    return 0


def _cmd_pants_length(args) -> int:
    P = pants.PantsBoundary(args.l1, args.l2, args.l3)
    C = pants.CurveClass(args.m, args.n)
    value = pants.gamma_mn_length(P, C)
    results = {"length": value, "cosh_half_length": math.cosh(0.5 * value)}
    if args.oracle:
        oracle = pants.trace_length_oracle(P, C)
        results["oracle_length"] = oracle
        results["residual"] = value - oracle
    config = {"l1": args.l1, "l2": args.l2, "l3": args.l3, "m": args.m, "n": args.n, "oracle": bool(args.oracle)}
    _emit(_document("pants-length", config, results), args.out)
    return 0


def _cmd_pants_min(args) -> int:
    P, C, value = pants.minimize_over_moduli(args.cap, args.lmax, args.grid)
    target = 2.0 * math.acosh(5.0)
    results = {
        "minimum": value,
        "argmin": {"l1": P.l1, "l2": P.l2, "l3": P.l3, "m": C.m, "n": C.n},
        "sharp_constant": target,
        "matches_sharp_constant": abs(value - target) < 1e-9,
        "at_three_cusp_corner": P.l1 == 0.0 and P.l2 == 0.0 and P.l3 == 0.0,
    }
    config = {"cap": args.cap, "lmax": args.lmax, "grid": args.grid}
    _emit(_document("pants-min", config, results), args.out)
    return 0 if results["matches_sharp_constant"] and results["at_three_cusp_corner"] else 1


def _cmd_winding(args) -> int:
    if args.collar == args.cusp:
        print("exactly one of --collar / --cusp is required", file=sys.stderr)
        return 2
    if args.collar:
        if args.core is None or args.width is None:
            print("--collar needs --core and --width", file=sys.stderr)
            return 2
        q = winding.CollarArcQuery(args.w, args.core, args.width)
        length = winding.collar_arc_length(q)
        back = winding.winding_from_length(length, args.core, args.width)
        oracle = winding.saccheri_top_length(args.w, args.core, args.width)
        results = {
            "arc_length": length,
            "roundtrip_residual": back - args.w,
            "quadrilateral_oracle": oracle,
            "oracle_residual": length - oracle,
        }
        config = {"collar": True, "w": args.w, "core": args.core, "width": args.width}
    else:
        q = winding.CuspArcQuery(args.w)
        length = winding.cusp_arc_length(q)
        back = winding.cusp_winding_from_length(length)
        results = {
            "arc_length": length,
            "roundtrip_residual": back - args.w,
            "distance_oracle_max_dev": winding.verify_cusp_lemma_geometrically(args.w, 1),
        }
        config = {"cusp": True, "w": args.w}
    _emit(_document("winding", config, results), args.out)
    return 0


def _cmd_verify(args) -> int:
    rep = verifier.run_verify_suite()
    _emit(_document("verify", rep.config, rep.as_dict()), args.out)
    return 0 if rep.passed else 1


def _cmd_spectrum(args) -> int:
    entries = compute_spectrum(
        args.max_word_len,
        args.cap,
        args.k,
        cache_path=args.cache,
    )
    witness = min_witness(entries, args.k)
    lines = [
        f"# spectrum max_word_len={args.max_word_len} cap={args.cap!r} k={args.k}",
        "# word\ttrace\tlength\tcount\tmethod",
    ]
    for e in entries:
        lines.append(f"{e.word}\t{e.trace!r}\t{e.length!r}\t{e.self_intersections}\t{e.count_method}")
    if witness is None:
        lines.append(f"# witness k={args.k}: none")
    else:
        lines.append(
            f"# witness k={args.k}: {witness.word}\t{witness.trace!r}\t{witness.length!r}\t{witness.self_intersections}"
        )
    _emit("\n".join(lines), args.out)
    return 0


def _load_config(path: str) -> dict[str, str]:
    cfg: dict[str, str] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, _, value = line.partition("=")
            cfg[key.strip()] = value.strip()
    return cfg


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypcross",
        description="closed-geodesic length bounds, collar widths, and the self-crossing spectrum of the three-cusp sphere",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("constants", help="sharp length bounds and the corkscrew length table")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_constants)

    p = sub.add_parser("collar", help="collar widths and the hexagon gap at a given core length")
    p.add_argument("--length", type=float, required=True)
    p.add_argument("--scan", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_collar)

    p = sub.add_parser("pants-length", help="length of the (m,n) winding curve in a pair of pants")
    p.add_argument("--l1", type=float, required=True)
    p.add_argument("--l2", type=float, required=True)
    p.add_argument("--l3", type=float, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_pants_length)

    p = sub.add_parser("pants-min", help="grid-search the winding-curve length over pants moduli")
    p.add_argument("--cap", type=int, required=True)
    p.add_argument("--lmax", type=float, required=True)
    p.add_argument("--grid", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_pants_min)

    p = sub.add_parser("winding", help="arc length of a winding arc in a collar or cusp neighborhood")
    p.add_argument("--collar", action="store_true")
    p.add_argument("--cusp", action="store_true")
    p.add_argument("--w", type=float, required=True)
    p.add_argument("--core", type=float, default=None)
    p.add_argument("--width", type=float, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_winding)

    p = sub.add_parser("verify", help="run the full inequality and oracle audit")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("spectrum", help="bottom of the length spectrum with self-crossing counts")
    p.add_argument("--max-word-len", type=int, required=True)
    p.add_argument("--cap", type=float, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--cache", default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_spectrum)

    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if "--config" in argv:
        i = argv.index("--config")
        if i + 1 >= len(argv):
            print("--config needs a file path", file=sys.stderr)
            return 2
        injected: list[str] = []
        for key, value in _load_config(argv[i + 1]).items():
            if value.lower() == "false":
                continue
            injected.append(f"--{key}")
            if value.lower() != "true":
                injected.append(value)
        del argv[i : i + 2]
        argv = argv[:1] + injected + argv[1:]  # explicit flags come later and win
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
