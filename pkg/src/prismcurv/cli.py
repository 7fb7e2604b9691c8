"""Command-line interface.

Subcommands share one option surface: a contact source (--input file or
--model generator), optional windowing and binning, complex-construction
flags, and an output target.  A plain key=value file passed via --config
supplies defaults; explicit flags win.  Exit codes: 0 success, 1 hard
verification failure, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .contacts import ContactSequence, parse_contacts
from .curvature import curvature_records
from .errors import DomainError, ParseError
from .generators import gen_ad, gen_bursty, gen_er
from .prisms import PrismComplex, WeightConfig, build_kst
from .stats import FIGURE_KINDS, figure_data, records_csv, render_csv, table_stats
from .verify import run_suite

OUT_DIR_ENV = "PRISMCURV_OUT"


def _add_source_opts(p: argparse.ArgumentParser, generators_only: bool = False):
    g = p.add_argument_group("contact source")
    if not generators_only:
        g.add_argument("--input", metavar="FILE", help="contact file, lines 't i j'")
    g.add_argument(
        "--model",
        choices=("er", "ad", "bursty"),
        help="synthetic generator: stationary Poisson pairs (er), "
        "activity-driven (ad) or Weibull renewal (bursty)",
    )
    g.add_argument("--n", type=int, default=25, help="number of nodes")
    g.add_argument(
        "--horizon",
        type=float,
        default=50.0,
        help="time horizon; for --model ad, the number of integer steps",
    )
    g.add_argument("--rate", type=float, default=0.01, help="er: per-pair contact rate")
    g.add_argument("--a-min", type=float, default=0.05, help="ad: lowest activity")
    g.add_argument("--a-max", type=float, default=0.5, help="ad: highest activity")
    g.add_argument(
        "--exponent", type=float, default=2.5, help="ad: activity power-law exponent"
    )
    g.add_argument(
        "--partners", type=int, default=2, help="ad: contacts per activation"
    )
    g.add_argument(
        "--shape", type=float, default=0.5, help="bursty: Weibull shape parameter"
    )
    g.add_argument(
        "--scale", type=float, default=50.0, help="bursty: Weibull scale parameter"
    )
    g.add_argument("--seed", type=int, default=0, help="master random seed")


def _add_transform_opts(p: argparse.ArgumentParser):
    g = p.add_argument_group("windowing and binning")
    g.add_argument(
        "--window",
        type=float,
        metavar="DURATION",
        help="keep only this much time, shifted to start at 0",
    )
    g.add_argument(
        "--window-start",
        type=float,
        help="window origin (default: first contact time)",
    )
    g.add_argument(
        "--bin-width", type=float, help="coarse-grain times into slices of this width"
    )


def _add_build_opts(p: argparse.ArgumentParser):
    g = p.add_argument_group("complex construction")
    g.add_argument(
        "--slice-gap",
        type=int,
        default=3,
        help="largest slice separation joined by prisms",
    )
    g.add_argument(
        "--weight-fn",
        default="reciprocal",
        metavar="{unit,reciprocal,exp:RATE}",
        help="gap weighting for non-spatial edges",
    )
    g.add_argument(
        "--diagonal-factor",
        type=float,
        default=0.5,
        help="extra damping on diagonal edges",
    )
    g.add_argument(
        "--max-dim", type=int, default=None, help="cap snapshot clique dimension"
    )
    g.add_argument(
        "--consecutive-only",
        action="store_true",
        help="join only consecutive active slices",
    )


def _add_common(p: argparse.ArgumentParser):
    p.add_argument(
        "--config",
        metavar="FILE",
        help="key=value defaults file; explicit flags override",
    )
    p.add_argument("--out", metavar="PATH", help="output file or directory")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prismcurv",
        description="Spatiotemporal prism complexes and Forman-Ricci curvature "
        "for contact-sequence temporal networks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="emit a synthetic contact sequence")
    _add_source_opts(p, generators_only=True)
    _add_transform_opts(p)
    _add_common(p)
    p.set_defaults(func=cmd_generate, input=None)

    for name, func, help_text in (
        ("build", cmd_build, "build the complex and dump its simplices"),
        ("curvature", cmd_curvature, "per-edge curvature table as CSV"),
        ("verify", cmd_verify, "run the identity checks, JSON report"),
        ("stats", cmd_stats, "aggregate curvature statistics as JSON"),
        ("figdata", cmd_figdata, "figure-ready CSV payloads"),
        ("pipeline", cmd_pipeline, "generate/load through verify and export"),
    ):
        p = sub.add_parser(name, help=help_text)
        _add_source_opts(p)
        _add_transform_opts(p)
        _add_build_opts(p)
        if name == "figdata":
            p.add_argument(
                "--which",
                choices=FIGURE_KINDS + ("all",),
                default="all",
                help="which payload to write",
            )
        _add_common(p)
        p.set_defaults(func=func)

    return parser


def _read_config(path: str) -> list[tuple[str, str]]:
    entries = []
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise DomainError(f"cannot read config file: {exc}") from None
    for n, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ParseError(f"expected key=value, got {line!r}", line=n)
        key, value = (part.strip() for part in line.split("=", 1))
        if not key:
            raise ParseError("empty key", line=n)
        entries.append((key, value))
    return entries


def _apply_config(argv: list[str]) -> list[str]:
    """Expand --config FILE into flag tokens placed before the user's flags."""
    path = None
    for k, tok in enumerate(argv):
        if tok == "--config" and k + 1 < len(argv):
            path = argv[k + 1]
        elif tok.startswith("--config="):
            path = tok.split("=", 1)[1]
    if path is None:
        return argv
    tokens: list[str] = []
    for key, value in _read_config(path):
        flag = "--" + key.replace("_", "-")
        if value.lower() == "true":
            tokens.append(flag)
        elif value.lower() == "false":
            pass  # flags are off by default
        else:
            tokens.extend([flag, value])
    # insert right after the subcommand so explicit flags override
    for k, tok in enumerate(argv):
        if not tok.startswith("-"):
            return argv[: k + 1] + tokens + argv[k + 1 :]
    return argv + tokens


def _generate(args) -> ContactSequence:
    if args.model is None:
        raise DomainError("need --model (or --input where accepted)")
    if args.model == "er":
        return gen_er(args.n, args.horizon, args.rate, args.seed)
    if args.model == "ad":
        return gen_ad(
            args.n,
            int(args.horizon),
            a_min=args.a_min,
            a_max=args.a_max,
            alpha=args.exponent,
            m=args.partners,
            seed=args.seed,
        )
    return gen_bursty(args.n, args.horizon, args.shape, args.scale, args.seed)


def _load_sequence(args) -> ContactSequence:
    if args.input is not None and args.model is not None:
        raise DomainError("give either --input or --model, not both")
    if args.input is not None:
        seq = parse_contacts(Path(args.input).read_text())
    else:
        seq = _generate(args)
    if args.window is not None:
        if args.window_start is not None:
            start = args.window_start
        else:
            start = seq.events[0].t if len(seq) else 0
        seq = seq.window(start, start + args.window)
    if args.bin_width is not None:
        seq = seq.bin(args.bin_width)
    return seq


def _build(args, seq: ContactSequence) -> PrismComplex:
    cfg = WeightConfig.parse(args.weight_fn, args.diagonal_factor)
    return build_kst(
        seq,
        slice_gap=args.slice_gap,
        weights=cfg,
        max_dim=args.max_dim,
        consecutive_only=args.consecutive_only,
    )


def _write(out: str | None, text: str):
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _out_dir(args) -> Path:
    out = args.out or os.environ.get(OUT_DIR_ENV)
    if not out:
        raise DomainError(f"need --out DIR (or set {OUT_DIR_ENV})")
    path = Path(out)
    path.mkdir(parents=True, exist_ok=True)
    return path


def _dump_complex(pc: PrismComplex) -> str:
    lines = []
    cx = pc.complex
    for s in cx.simplices():
        verts = " ".join(f"{v[0]}:{v[1]}" for v in s)
        lines.append(f"{len(s) - 1} {verts} {cx.weight(s)!r}")
    return "\n".join(lines) + "\n"


def cmd_generate(args) -> int:
    seq = _load_sequence(args)
    _write(args.out, seq.serialize())
    return 0


def cmd_build(args) -> int:
    pc = _build(args, _load_sequence(args))
    _write(args.out, _dump_complex(pc))
    return 0


def cmd_curvature(args) -> int:
    pc = _build(args, _load_sequence(args))
    _write(args.out, records_csv(curvature_records(pc)))
    return 0


def cmd_verify(args) -> int:
    pc = _build(args, _load_sequence(args))
    report = run_suite(pc)
    _write(args.out, report.to_json())
    for line in report.summary_lines():
        print(line, file=sys.stderr)
    return 0 if report.passed else 1


def cmd_stats(args) -> int:
    pc = _build(args, _load_sequence(args))
    _write(args.out, table_stats(curvature_records(pc)).to_json())
    return 0


def cmd_figdata(args) -> int:
    pc = _build(args, _load_sequence(args))
    records = curvature_records(pc)
    out = _out_dir(args)
    kinds = FIGURE_KINDS if args.which == "all" else (args.which,)
    for kind in kinds:
        cols, rows = figure_data(records, kind)
        (out / f"{kind}.csv").write_text(render_csv(cols, rows))
    return 0


def cmd_pipeline(args) -> int:
    out = _out_dir(args)
    seq = _load_sequence(args)
    (out / "contacts.txt").write_text(seq.serialize())
    pc = _build(args, seq)
    records = curvature_records(pc)
    (out / "curvature.csv").write_text(records_csv(records))
    report = run_suite(pc)
    (out / "verify.json").write_text(report.to_json())
    for line in report.summary_lines():
        print(line, file=sys.stderr)
    (out / "summary.json").write_text(table_stats(records).to_json())
    for kind in FIGURE_KINDS:
        cols, rows = figure_data(records, kind)
        (out / f"{kind}.csv").write_text(render_csv(cols, rows))
    return 0 if report.passed else 1


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        argv = _apply_config(argv)
    except (DomainError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except (DomainError, ParseError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def app():
    raise SystemExit(main())
