"""Command-line surface: verify / eval / search.

Exit codes: 0 success, 2 validation or load failure, 3 degenerate R,
4 property-suite failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .backend import BACKEND_NAME
from .pipeline import DegenerateRError, evaluate_bound
from .search import SearchConfig, run_search
from .setfile import (
    SetFileError,
    load_set,
    render_bound_report,
    render_history_table,
    render_search_record,
    save_set,
)
from .verify import run_suite

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_DEGENERATE = 3
EXIT_SUITE_FAILURE = 4


def cmd_verify(args):
    ok, results = run_suite(args.suite, trials=args.trials, seed=args.seed)
    width = max(len(r.name) for r in results)
    for r in results:
        status = "pass" if r.ok else "FAIL"
        print(f"[{status}] {r.name:<{width}}  trials={r.trials} failures={r.failures}")
    print(f"suite {'passed' if ok else 'FAILED'} (kernel backend: {BACKEND_NAME})")
    return EXIT_OK if ok else EXIT_SUITE_FAILURE


def cmd_eval(args):
    try:
        A = load_set(args.setfile)
    except (OSError, SetFileError, ValueError) as exc:
        print(f"error: cannot load set: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    try:
        rep = evaluate_bound(A, args.mode, side=args.side,
                             allow_uncertified=True)
    except DegenerateRError as exc:
        print(f"degenerate R: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    if not rep.certified and not args.allow_uncertified:
        print("note: report is uncertified; rerun with --allow-uncertified "
              "to treat the ratio as a usable value", file=sys.stderr)
    print(render_bound_report(rep))
    return EXIT_OK


def _parse_fraction_field(obj, key, default):
    if key not in obj:
        return default
    try:
        return Fraction(str(obj[key]))
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"config field {key!r} is not a valid rational") from None


def load_search_config(path, seed_override=None):
    with open(path) as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"config is not valid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise ValueError("config must be a JSON object")
    cfg = SearchConfig()
    int_fields = ("set_size_min", "set_size_max", "coordinate_bound",
                  "iterations", "seed")
    for key in int_fields:
        if key in obj:
            if not isinstance(obj[key], int):
                raise ValueError(f"config field {key!r} must be an integer")
            setattr(cfg, key, obj[key])
    for key in ("generator", "acceptance"):
        if key in obj:
            if not isinstance(obj[key], str):
                raise ValueError(f"config field {key!r} must be a string")
            setattr(cfg, key, obj[key])
    if "moves" in obj:
        if not isinstance(obj["moves"], list):
            raise ValueError("config field 'moves' must be a list")
        cfg.moves = tuple(obj["moves"])
    cfg.anneal_initial_temp = _parse_fraction_field(
        obj, "anneal_initial_temp", cfg.anneal_initial_temp)
    cfg.anneal_decay = _parse_fraction_field(obj, "anneal_decay", cfg.anneal_decay)
    known = set(int_fields) | {"generator", "acceptance", "moves",
                               "anneal_initial_temp", "anneal_decay"}
    for key in obj:
        if key not in known:
            raise ValueError(f"unknown config field {key!r}")
    if seed_override is not None:
        cfg.seed = seed_override
    cfg.validate()
    return cfg


def cmd_search(args):
    try:
        cfg = load_search_config(args.config, seed_override=args.seed)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    rec = run_search(cfg)
    print(render_search_record(rec))
    if args.out:
        save_set(rec.best_set, args.out)
        print(f"\nbest set saved to {args.out}")
    if args.history_out:
        with open(args.history_out, "w") as fh:
            fh.write(render_history_table(rec) + "\n")
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(
        prog="twonons",
        description="Exact 16-on arithmetic, sum-product sets, and the "
                    "16-dimensional kissing-number lower-bound pipeline.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    pv = sub.add_parser("verify", help="run the randomized exact law suites")
    pv.add_argument("suite", choices=("algebra", "setops", "pipeline", "all"))
    pv.add_argument("--trials", type=int, default=200)
    pv.add_argument("--seed", type=int, default=0)
    pv.set_defaults(func=cmd_verify)

    pe = sub.add_parser("eval", help="evaluate the bound on a set file")
    pe.add_argument("setfile")
    pe.add_argument("--mode", choices=("octonion", "sixteen_on"),
                    default="sixteen_on")
    pe.add_argument("--side", choices=("left", "right"), default=None)
    pe.add_argument("--allow-uncertified", action="store_true")
    pe.set_defaults(func=cmd_eval)

    ps = sub.add_parser("search", help="run a seeded search over niner sets")
    ps.add_argument("config", help="JSON search configuration file")
    ps.add_argument("--seed", type=int, default=None,
                    help="override the config seed")
    ps.add_argument("--out", default=None, help="save the best set here")
    ps.add_argument("--history-out", default=None,
                    help="write the (iteration, ratio) table here")
    ps.set_defaults(func=cmd_search)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
