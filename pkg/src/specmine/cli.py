"""Command-line front end.

Exit codes:
  0  success
  1  a file could not be read or written
  2  bad usage, invalid configuration, or unparsable corpus/model input
  3  an internal invariant check failed (a bug; please report it)
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from specmine.automata import (
    accepts,
    determinize,
    enumerate_behaviors,
    from_json_dict,
    minimize,
    to_dot,
    to_json_dict,
)
from specmine.errors import ConfigError, InvariantViolation, SpecMineError
from specmine.evalharness import (
    RECONSTRUCTED,
    GroundTruthModel,
    builtin_models,
    generate_traces,
    precision_recall,
    render_table,
    reports_to_csv,
)
from specmine.miners import format_rules, ktail, mine_temporal_rules, specminer
from specmine.traces import build_pta, parse_traces, serialize_traces

EXIT_OK = 0
EXIT_IO = 1
EXIT_USAGE = 2
EXIT_INVARIANT = 3


class _IOFailure(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def _read(path):
    try:
        if path == "-":
            return sys.stdin.read()
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _IOFailure(f"cannot read {path}: {exc.strerror or exc}") from None


def _write(path, text):
    try:
        if path in (None, "-"):
            sys.stdout.write(text)
        else:
            Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise _IOFailure(f"cannot write {path}: {exc.strerror or exc}") from None


def _load_model(path):
    try:
        data = json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: not valid JSON ({exc.msg} at line {exc.lineno})") from None
    return from_json_dict(data)


def _truth(name):
    for m in builtin_models():
        if m.name == name:
            return m
    if not Path(name).exists():
        known = ", ".join(m.name for m in builtin_models())
        raise ConfigError(f"unknown model {name!r}; built-in models: {known}")
    fsa = _load_model(name)
    if not fsa.deterministic:
        fsa = minimize(determinize(fsa))
    return GroundTruthModel(Path(name).stem, fsa, RECONSTRUCTED)


def _format_model(fsa, fmt):
    if fmt == "dot":
        return to_dot(fsa)
    return json.dumps(to_json_dict(fsa), indent=2, ensure_ascii=False) + "\n"


def _mine(traces, algo, rc, k):
    if algo == "ktail":
        model = ktail(traces, k)
    else:
        model = specminer(traces, rc)
    missed = [t for t in traces if not accepts(model, t)]
    if missed:
        raise InvariantViolation(f"mined model rejects training trace {','.join(missed[0])}")
    return model


def _algorithms(args):
    if args.algo == "all":
        return [("kTail", "ktail", f"k={k}", k) for k in (1, 2)] + \
               [("SpecMiner", "specminer", f"rc={args.rc}", args.k)]
    if args.algo == "ktail":
        return [("kTail", "ktail", f"k={args.k}", args.k)]
    return [("SpecMiner", "specminer", f"rc={args.rc}", args.k)]


def cmd_mine(args):
    traces = parse_traces(_read(args.input))
    _write(args.out, _format_model(_mine(traces, args.algo, args.rc, args.k), args.format))


def cmd_eval(args):
    if args.all:
        truths = builtin_models()
    elif args.model:
        truths = [_truth(args.model)]
    else:
        raise ConfigError("eval needs --model NAME|PATH or --all")
    reports = []
    spurious = []
    for truth in truths:
        if args.mined:
            mined = _load_model(args.mined)
            reports.append(precision_recall(mined, truth, args.visit_limit, 0.0,
                                            algorithm=Path(args.mined).stem))
            runs = [(mined, truth)]
        else:
            if args.traces:
                corpus = parse_traces(_read(args.traces))
            else:
                corpus = generate_traces(truth, args.strategy, args.visit_limit)
            runs = []
            for label, algo, params, k in _algorithms(args):
                start = time.perf_counter()
                mined = _mine(corpus, algo, args.rc, k)
                elapsed = (time.perf_counter() - start) * 1000
                reports.append(precision_recall(mined, truth, args.visit_limit, elapsed,
                                                algorithm=label, params=params))
                runs.append((mined, truth))
        if args.spurious:
            for mined, t in runs:
                bad = [b for b in enumerate_behaviors(mined, args.visit_limit)
                       if not accepts(t.model, b)]
                spurious.extend(f"{t.name}: {','.join(b) or '(empty)'}" for b in bad[:args.spurious])
    timing = not args.no_timing
    if args.format == "csv":
        text = reports_to_csv(reports, timing)
    else:
        text = render_table(reports, timing)
    for r in reports:
        for w in r.warnings:
            sys.stderr.write(f"warning: {r.name} {r.algorithm}: {w}\n")
    if spurious:
        text += "".join(f"spurious {line}\n" for line in spurious)
    _write(args.out, text)


def cmd_gen(args):
    _write(args.out, serialize_traces(generate_traces(_truth(args.model), args.strategy,
                                                      args.visit_limit)))


def cmd_pta(args):
    _write(args.out, _format_model(build_pta(parse_traces(_read(args.input))), args.format))


def cmd_minimize(args):
    _write(args.out, _format_model(minimize(determinize(_load_model(args.input))), args.format))


def cmd_rules(args):
    _write(args.out, format_rules(mine_temporal_rules(parse_traces(_read(args.input)))))


def cmd_export(args):
    _write(args.out, _format_model(_load_model(args.input), args.format))


def _positive(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _rc(text):
    value = _positive(text)
    if value < 2:
        raise argparse.ArgumentTypeError("repeat count must be at least 2")
    return value


def build_parser():
    parser = _Parser(prog="specmine", description="Mine and evaluate finite-state behavior models.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def miner_flags(p, algos=("specminer", "ktail")):
        p.add_argument("--algo", choices=algos, default="specminer")
        p.add_argument("--rc", type=_rc, default=2, help="repeat count for loops and cycles (>= 2)")
        p.add_argument("--k", type=_positive, default=2, help="kTail depth (>= 1)")

    def coverage_flags(p):
        p.add_argument("--strategy", choices=("path", "state"), default="path")
        p.add_argument("--visit-limit", type=_positive, default=2,
                       help="maximum uses of any one transition per trace")

    def out_flag(p):
        p.add_argument("--out", default="-", help="output file (default: stdout)")

    def model_format(p):
        p.add_argument("--format", choices=("json", "dot"), default="json")

    p = sub.add_parser("mine", help="mine a model from a trace corpus")
    p.add_argument("--in", dest="input", required=True, help="trace corpus ('-' for stdin)")
    miner_flags(p)
    model_format(p)
    out_flag(p)
    p.set_defaults(func=cmd_mine)

    p = sub.add_parser("eval", help="score miners against a ground-truth model")
    p.add_argument("--model", help="built-in model name or model JSON path")
    p.add_argument("--all", action="store_true", help="evaluate every built-in model")
    p.add_argument("--mined", help="score this model JSON instead of mining")
    p.add_argument("--traces", help="mine from this corpus instead of generated traces")
    miner_flags(p, ("specminer", "ktail", "all"))
    p.set_defaults(algo="all")
    coverage_flags(p)
    p.add_argument("--format", choices=("table", "csv"), default="table")
    p.add_argument("--no-timing", action="store_true", help="omit timings for reproducible output")
    p.add_argument("--spurious", type=_positive, metavar="N",
                   help="also list up to N mined behaviors the ground truth rejects")
    out_flag(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("gen", help="generate coverage traces from a model")
    p.add_argument("--model", required=True, help="built-in model name or model JSON path")
    coverage_flags(p)
    out_flag(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("pta", help="build the prefix tree acceptor of a corpus")
    p.add_argument("--in", dest="input", required=True)
    model_format(p)
    out_flag(p)
    p.set_defaults(func=cmd_pta)

    p = sub.add_parser("minimize", help="determinize and minimize a model JSON file")
    p.add_argument("--in", dest="input", required=True)
    model_format(p)
    out_flag(p)
    p.set_defaults(func=cmd_minimize)

    p = sub.add_parser("rules", help="list temporal rules holding on every trace")
    p.add_argument("--in", dest="input", required=True)
    out_flag(p)
    p.set_defaults(func=cmd_rules)

    p = sub.add_parser("export", help="convert a model JSON file to another format")
    p.add_argument("--in", dest="input", required=True)
    model_format(p)
    out_flag(p)
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except _IOFailure as exc:
        sys.stderr.write(f"specmine: {exc}\n")
        return EXIT_IO
    except InvariantViolation as exc:
        sys.stderr.write(f"specmine: internal error: {exc}\n")
        return EXIT_INVARIANT
    except SpecMineError as exc:
        sys.stderr.write(f"specmine: {exc}\n")
        return EXIT_USAGE
    except RecursionError:
        sys.stderr.write("specmine: internal error: recursion limit exceeded\n")
        return EXIT_INVARIANT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
