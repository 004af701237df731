"""
Command-line front end.

Every subcommand prints one JSON document on standard output (or a text table
with --human).  Matrices are given inline, as ``@file.json``, or on standard
input; fan-consuming commands also accept seed-set and fan documents, so that

    gvfan enumerate '[[0,1],[-1,0]]' | gvfan fan | gvfan check-complete

works.  Exit codes: 0 success, 1 invalid input, 2 budget exceeded,
3 invariant violation or failed verification.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__, io
from .errors import BudgetExceeded, GFanError, InvalidInput, InvariantViolation
from .fan import Fan, build_fan, check_complete, lattice_cover
from .gvec import DEFAULT_SEED_BUDGET, enumerate_seeds
from .matrix import DEFAULT_CLASS_BUDGET, ExchangeMatrix, decide_finite_type, mutate_along
from .rank2 import PLOT_DEPTH, Rank2Params, limiting_slopes, rank2_fan
from .witness import find_witness, verify_witness

EXIT_INVALID = 1
EXIT_BUDGET = 2
EXIT_INVARIANT = 3


def _parse_path(text: str | None) -> list[int]:
    if not text:
        return []
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise InvalidInput(f"mutation path must be comma-separated integers, got {text!r}") from None


def _zero_based(path: list[int], n: int) -> list[int]:
    for k in path:
        if not 1 <= k <= n:
            raise InvalidInput(f"mutation index {k} out of range 1..{n}")
    return [k - 1 for k in path]


def _exchange(args) -> ExchangeMatrix:
    return io.exchange_matrix_from_json(io.read_source(args.source))


def _fan(args) -> Fan:
    doc = io.read_source(args.source)
    if isinstance(doc, dict) and "rays" in doc:
        return io.fan_from_json(doc)
    if isinstance(doc, dict) and "seeds" in doc:
        return build_fan(io.seeds_from_json(doc))
    b = io.exchange_matrix_from_json(doc)
    return build_fan(enumerate_seeds(b, budget=args.budget, max_depth=args.depth))


def _table(rows: list[tuple]) -> str:
    width = max(len(str(r[0])) for r in rows)
    return "\n".join(f"{str(k).ljust(width)}  {v}" for k, v in rows)


def cmd_mutate(args):
    m = io.matrix_from_json(io.read_source(args.source))
    out = mutate_along(m, _zero_based(_parse_path(args.path), m.n))
    doc = io.matrix_to_json(out)
    human = "\n".join(" ".join(f"{x:>4}" for x in row) for row in out.entries)
    return doc, human


def cmd_classify(args):
    b = _exchange(args)
    v = decide_finite_type(b, args.budget)
    doc = io.verdict_to_json(v)
    if v.finite:
        human = _table([("kind", "finite"), ("class size", v.class_size)])
    else:
        human = _table([("kind", "infinite"), ("path", doc["path"]), ("pair", doc["pair"])])
    return doc, human


def cmd_enumerate(args):
    b = _exchange(args)
    enum = enumerate_seeds(b, budget=args.budget, max_depth=args.depth)
    doc = io.seeds_to_json(enum)
    lines = [f"{i:>5}  {list(map(list, s.g_tuple))}" for i, s in enumerate(enum.seeds)]
    lines.append(f"{len(enum)} labeled seeds, {len(enum.unordered_g_tuples())} g-vector tuples up to order"
                 + ("" if enum.exhausted else f" (truncated at depth {args.depth})"))
    return doc, "\n".join(lines)


def cmd_fan(args):
    f = _fan(args)
    doc = io.fan_to_json(f)
    lines = [f"ray {i:>3}  {list(r)}" for i, r in enumerate(f.rays)]
    lines += [f"cone {i:>3}  {list(c)}" for i, c in enumerate(f.cones)]
    lines.append(f"complete: {f.complete}")
    return doc, "\n".join(lines)


def cmd_check_complete(args):
    f = _fan(args)
    rep = check_complete(f)
    doc = {"complete": rep.complete, "max_cones": len(f)}
    if not rep.complete:
        doc["reason"] = rep.reason
        if rep.unmatched_facet is not None:
            doc["unmatched_facet"] = [list(r) for r in rep.unmatched_facet]
    return doc, _table([(k, v) for k, v in doc.items()])


def cmd_lattice_cover(args):
    f = _fan(args)
    rep = lattice_cover(f, args.radius)
    doc = {"covered": rep.covered, "radius": rep.radius}
    if not rep.covered:
        doc["missing"] = list(rep.missing)
    return doc, _table([(k, v) for k, v in doc.items()])


def cmd_witness(args):
    b = _exchange(args)
    res = find_witness(b, args.budget)
    if not hasattr(res, "witness"):
        doc = io.verdict_to_json(res)
        return doc, _table([("kind", "finite"), ("class size", res.class_size), ("witness", "none")])
    doc = io.certificate_to_json(res)
    return doc, _table([(k, v) for k, v in doc.items()])


def cmd_verify(args):
    cert = io.certificate_from_json(io.read_source(args.source))
    rep = verify_witness(cert, args.depth if args.depth is not None else 10)
    doc = io.report_to_json(rep)
    lines = [f"{'PASS' if c.passed else 'FAIL'}  {c.name:<12} {c.detail}" for c in rep.checks]
    lines.append(rep.bound)
    return doc, "\n".join(lines), (0 if rep.passed else EXIT_INVARIANT)


def cmd_plot_rank2(args):
    from .plotting import render_rank2

    params = Rank2Params(args.b, args.c)
    depth = args.depth if args.depth is not None else PLOT_DEPTH
    fan = rank2_fan(params, max_cones=2 * depth + 1)
    out = args.out or f"rank2_b{params.b}_c{params.c}.svg"
    render_rank2(fan, params, out)
    doc = {"b": params.b, "c": params.c, "svg": str(out), "rays": [list(r) for r in fan.rays],
           "complete": fan.complete}
    if not params.finite:
        doc["limiting_slopes"] = [str(s) for s in limiting_slopes(params)]
    return doc, _table([(k, v) for k, v in doc.items()])


COMMANDS = {
    "mutate": (cmd_mutate, "mutate a matrix along a path of 1-based indices"),
    "classify": (cmd_classify, "decide finite type by searching the mutation class"),
    "enumerate": (cmd_enumerate, "enumerate all g-vector seeds"),
    "fan": (cmd_fan, "build the g-fan from a matrix or seed set"),
    "check-complete": (cmd_check_complete, "facet-pairing completeness check"),
    "lattice-cover": (cmd_lattice_cover, "scan [-R,R]^n for lattice points outside the fan"),
    "witness": (cmd_witness, "construct a lattice point outside the g-fan support"),
    "verify": (cmd_verify, "re-check a witness certificate"),
    "plot-rank2": (cmd_plot_rank2, "draw the g-fan of B_{b,c} as SVG"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gvfan", description="g-vector fans of skew-symmetrizable matrices")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        if name != "plot-rank2":
            p.add_argument("source", nargs="?", default=None,
                           help="inline JSON, @file.json, or - / omitted for standard input")
        p.add_argument("--human", action="store_true", help="tabular text instead of JSON")
        p.add_argument("--budget", type=int, default=None)
        p.add_argument("--depth", type=int, default=None)
        p.add_argument("--radius", type=int, default=6)
        p.add_argument("--out", default=None)
        if name == "mutate":
            p.add_argument("-k", "--path", default="", help="comma-separated 1-based indices, e.g. 1,2,1")
        if name == "plot-rank2":
            p.add_argument("--b", type=int, required=True)
            p.add_argument("--c", type=int, required=True)
    return parser


def _default_budget(args):
    if args.budget is not None:
        return
    if args.command in ("classify", "witness"):
        args.budget = DEFAULT_CLASS_BUDGET
    elif args.depth is None:
        args.budget = DEFAULT_SEED_BUDGET


def _error(kind: str, exc: Exception, stderr) -> None:
    stderr.write(io.dumps({"error": kind, "message": str(exc)}) + "\n")


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    _default_budget(args)
    func = COMMANDS[args.command][0]
    try:
        result = func(args)
    except BudgetExceeded as exc:
        _error("budget_exceeded", exc, stderr)
        return EXIT_BUDGET
    except InvariantViolation as exc:
        _error(type(exc).__name__, exc, stderr)
        return EXIT_INVARIANT
    except (InvalidInput, IndexError) as exc:
        _error(type(exc).__name__, exc, stderr)
        return EXIT_INVALID
    except GFanError as exc:
        _error(type(exc).__name__, exc, stderr)
        return EXIT_INVARIANT
    doc, human, *code = result
    text = human if args.human else io.dumps(doc)
    if args.out and args.command != "plot-rank2":
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    stdout.write(text + "\n")
    return code[0] if code else 0


if __name__ == "__main__":
    sys.exit(main())
