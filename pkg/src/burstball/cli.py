"""Command-line front end. Every subcommand is a thin adapter over the library.

Exit status: 0 success, 1 verification mismatch, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import List, Optional, Sequence

from . import closed_forms as cf
from . import experiments as ex
from .errors import BurstBallError
from .oracle import deletion_ball, insertion_ball, levenshtein_ball
from .run_structure import ab_witness, run_decomposition
from .word import parse_word, size_breakdown


class UsageError(BurstBallError):
    pass


def parse_range(text: str) -> tuple:
    """``a..b`` (inclusive) or a single integer."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return int(lo), int(hi)
        v = int(text)
        return v, v
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}") from None


def _words(args) -> list:
    texts = list(args.word or [])
    if getattr(args, "words_file", None):
        with open(args.words_file, encoding="utf-8") as fh:
            texts.extend(line.strip() for line in fh if line.strip())
    if not texts:
        raise UsageError("no input words; pass --word or --words-file")
    return [parse_word(t, args.q) for t in texts]


def _one_or_many(items: list):
    return items[0] if len(items) == 1 else items


def cmd_stats(args):
    out = []
    for x in _words(args):
        d = {"word": str(x), "q": x.q, "n": x.n}
        d.update(size_breakdown(x, args.b).as_dict())
        out.append(d)
    return _one_or_many(out), 0


BALLS = {"del": deletion_ball, "ins": insertion_ball, "lev": levenshtein_ball}


def cmd_ball(args):
    out = []
    for x in _words(args):
        ws = BALLS[args.kind](x, args.b, args.t)
        out.append({"size": len(ws)} if args.size_only else ws.to_json())
    return _one_or_many(out), 0


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"formula {args.name!r} needs --{' --'.join(missing)}")


def cmd_formula(args):
    name = args.name
    if name in ("explicit", "h", "sala-dolecek"):
        out = []
        for x in _words(args):
            params = {"word": str(x), "q": x.q}
            if name == "sala-dolecek":
                params["convention"] = args.convention
                value = cf.sala_dolecek_size(x, args.convention)
            else:
                params["b"] = args.b
                p = cf.BallParams(x.n, x.q, args.b, args.t)
                bd = size_breakdown(x, args.b)
                value = cf.explicit_ball_size(bd, p) if name == "explicit" else cf.h_value(bd, p)
            out.append(cf.formula_report(name, params, value))
        return _one_or_many(out), 0

    _need(args, "n")
    params = {"n": args.n, "q": args.q, "b": args.b}
    if name in ("insertion", "min"):
        params["t"] = args.t
        p = cf.BallParams(args.n, args.q, args.b, args.t)
        value = cf.insertion_ball_size(p) if name == "insertion" else cf.min_ball_size(p)
    elif name == "max-general":
        value = cf.max_bound_general(cf.BallParams(args.n, args.q, args.b))
    elif name == "max-refined":
        value = cf.max_bound_refined(cf.BallParams(args.n, args.q, args.b))
    elif name == "expected-runs":
        value = cf.expected_run_count(args.n, args.q, args.b)
    elif name == "expected-f":
        _need(args, "j")
        params["j"] = args.j
        value = cf.expected_f(args.n, args.q, args.b, args.j)
    elif name == "expected-g":
        _need(args, "i")
        params["i"] = args.i
        value = cf.expected_g(args.n, args.q, args.b, args.i)
    elif name == "expected-size":
        value = cf.expected_ball_size(args.n, args.q, args.b)
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown formula {name}")
    return cf.formula_report(name, params, value), 0


def _load_config(path: str) -> dict:
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    allowed = {"q", "b", "t", "n_range", "checks", "shard_count", "budget"}
    unknown = set(data) - allowed
    if unknown:
        raise UsageError(f"unknown config keys: {sorted(unknown)}")
    if "n_range" in data:
        data["n_range"] = tuple(data["n_range"])
    return data


def cmd_verify(args):
    if args.config:
        fields = _load_config(args.config)
    else:
        if args.n is None or args.b is None:
            raise UsageError("verify needs --n and --b (or --config)")
        fields = {"q": args.q, "b": args.b, "t": args.t, "n_range": args.n}
        fields["checks"] = set(c.strip() for c in args.checks.split(",") if c.strip())
        fields["budget"] = args.budget
    fields["shard_count"] = args.shards
    report = ex.exhaustive_sweep(ex.SweepConfig(**fields))
    if args.format == "csv":
        return _csv(report.rows), 0 if report.ok else 1
    return report.to_json(), 0 if report.ok else 1


def _csv(rows: List[dict]) -> str:
    buf = io.StringIO()
    cols = ["n", "q", "b", "min", "max", "mean_num", "mean_den", "mismatches"]
    writer = csv.DictWriter(buf, fieldnames=cols, extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def cmd_extremal(args):
    lo, hi = args.n
    records = [ex.extremal_scan(n, args.q, args.b, budget=args.budget) for n in range(lo, hi + 1)]
    status = 0 if all(r.ok for r in records) else 1
    return _one_or_many([r.to_json() for r in records]), status


def cmd_average(args):
    lo, hi = args.n
    records = [
        ex.average_check(n, args.q, args.b, use_oracle=args.oracle, budget=args.budget)
        for n in range(lo, hi + 1)
    ]
    status = 0 if all(r.equal for r in records) else 1
    return _one_or_many([r.to_json() for r in records]), status


def cmd_typicality(args):
    return _one_or_many([ex.typicality_test(x, args.b).to_json() for x in _words(args)]), 0


def cmd_census(args):
    rec = ex.code_census(args.n, args.q, args.b, args.mode, args.samples, args.seed, args.shards, args.budget)
    return rec.to_json(), 0


def cmd_concentrate(args):
    calibration = None
    if args.c == "calibrate":
        c, rec = ex.calibrate_c(shards=args.shards)
        calibration = {"c": c, "grid": list(ex.C_GRID), "config": ex.CALIBRATION}
    else:
        try:
            c = float(args.c)
        except ValueError:
            raise UsageError(f"--c must be a number or 'calibrate', got {args.c!r}") from None
        if c <= 0:
            raise UsageError("--c must be positive")
    rec = ex.concentration_mc(args.n, args.q, args.b, args.samples, args.seed, c, args.shards)
    out = rec.to_json()
    if calibration:
        out["calibration"] = calibration
    return out, 0 if rec.within_bound else 1


def cmd_witness(args):
    out = []
    for x in _words(args):
        rd = run_decomposition(x, args.b)
        r = len(rd)
        if args.i is not None and args.j is not None:
            pairs = [(args.i, args.j)]
        else:
            pairs = [(i, j) for i in range(1, r + 1) for j in range(i + 1, r + 1)]
        out.append(
            {
                "word": str(x),
                "b": args.b,
                "runs": [list(run) for run in rd.runs],
                "witnesses": [ab_witness(x, args.b, i, j, rd).to_json() for i, j in pairs],
            }
        )
    return _one_or_many(out), 0


def _add_words(p):
    p.add_argument("--word", action="append", help="input word (repeatable)")
    p.add_argument("--words-file", help="file with one word per line")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="burstball", description=__doc__.splitlines()[0])
    parser.add_argument("--output", "-o", help="write the report here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, b_required=True, b_default=None):
        p.add_argument("--q", type=int, default=2)
        p.add_argument("--b", type=int, required=b_required, default=b_default)
        return p

    p = common(sub.add_parser("stats", help="per-word statistics"))
    _add_words(p)
    p.set_defaults(func=cmd_stats)

    p = common(sub.add_parser("ball", help="enumerate a ball by brute force"))
    p.add_argument("--kind", choices=sorted(BALLS), required=True)
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--size-only", action="store_true")
    _add_words(p)
    p.set_defaults(func=cmd_ball)

    p = common(sub.add_parser("formula", help="evaluate a closed form"), b_required=False, b_default=1)
    p.add_argument(
        "--name",
        required=True,
        choices=[
            "insertion", "min", "explicit", "h", "sala-dolecek", "max-general",
            "max-refined", "expected-runs", "expected-f", "expected-g", "expected-size",
        ],
    )
    p.add_argument("--n", type=int)
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--i", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--convention", choices=sorted(cf.SEGMENT_CONVENTIONS), default="pairs")
    _add_words(p)
    p.set_defaults(func=cmd_formula)

    p = common(sub.add_parser("verify", help="exhaustive formula-vs-oracle sweep"), b_required=False)
    p.add_argument("--n", type=parse_range)
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--checks", default="theorem2", help=f"comma list from {', '.join(ex.CHECKS)}")
    p.add_argument("--config", help="JSON file with sweep config fields")
    p.add_argument("--shards", type=int, default=ex.default_shards())
    p.add_argument("--budget", type=int, default=ex.DEFAULT_BUDGET)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_verify)

    p = common(sub.add_parser("extremal", help="exhaustive min/max scan"))
    p.add_argument("--n", type=parse_range, required=True)
    p.add_argument("--budget", type=int, default=ex.DEFAULT_BUDGET)
    p.set_defaults(func=cmd_extremal)

    p = common(sub.add_parser("average", help="exact mean vs assembled expectation"))
    p.add_argument("--n", type=parse_range, required=True)
    p.add_argument("--oracle", action="store_true", help="average enumerated balls instead")
    p.add_argument("--budget", type=int, default=ex.DEFAULT_BUDGET)
    p.set_defaults(func=cmd_average)

    p = common(sub.add_parser("typicality", help="typical-code membership"))
    _add_words(p)
    p.set_defaults(func=cmd_typicality)

    p = common(sub.add_parser("census", help="fraction of words in the typical code"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=["exhaustive", "sampled"], default="exhaustive")
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--shards", type=int, default=ex.default_shards())
    p.add_argument("--budget", type=int, default=ex.DEFAULT_BUDGET)
    p.set_defaults(func=cmd_census)

    p = common(sub.add_parser("concentrate", help="Monte Carlo concentration"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--c", default=str(ex.CALIBRATED_C), help="constant, or 'calibrate'")
    p.add_argument("--shards", type=int, default=ex.default_shards())
    p.set_defaults(func=cmd_concentrate)

    p = common(sub.add_parser("witness", help="dump A/B intersection sets"))
    p.add_argument("--i", type=int)
    p.add_argument("--j", type=int)
    _add_words(p)
    p.set_defaults(func=cmd_witness)
    return parser


def _emit(payload, target: Optional[str]) -> None:
    text = payload if isinstance(payload, str) else json.dumps(payload, default=str) + "\n"
    if target:
        with open(target, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        payload, status = args.func(args)
    except (BurstBallError, OSError, json.JSONDecodeError, TypeError) as exc:
        print(f"burstball {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    _emit(payload, args.output)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
