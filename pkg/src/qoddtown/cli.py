"""Command line entry point.

Exit status: 0 when every verdict is satisfied, 1 when a family violates
its conditions or a bound (or a search witness contradicts a theorem), 2
for usage, parameter and file errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import InternalInconsistency, QOddtownError
from .family import SkewFamily, construct_extremal, kind_from_name, verify_family, Oddtown, ReverseOddtown
from .field import make_field
from .fileformat import format_family, read_family_file
from .qcount import q_binomial, q_factorial, q_int, subspace_count
from .reports import batch_json, extremal_json, subspace_block, verification_json
from .search import SearchConfig, run_experiment, search_extremal
from .subspace import enumerate_points, enumerate_subspaces

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class _Output:
    def __init__(self, args):
        self.args = args
        self.chunks: list[str] = []

    def text(self, s: str):
        self.chunks.append(s)

    def json(self, obj):
        self.chunks.append(json.dumps(obj, indent=2))

    def flush(self):
        payload = "\n".join(self.chunks)
        if payload and not payload.endswith("\n"):
            payload += "\n"
        if self.args.out:
            with open(self.args.out, "w", encoding="utf-8") as fh:
                fh.write(payload)
        else:
            sys.stdout.write(payload)


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--time-limit-s", type=float, default=600.0, help="search time limit in seconds")
    p.add_argument("--threads", type=int, default=1, help="branch-and-bound workers")
    p.add_argument("--deterministic", action="store_true",
                   help="report the lexicographically smallest maximum clique (needs --threads 1)")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qoddtown", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="q-integers, q-factorials, q-binomials, subspace counts")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--what", choices=["qint", "qfactorial", "qbinomial", "subspaces"], default="qint")
    _common(p)

    p = sub.add_parser("enumerate", help="list projective points or k-dimensional subspaces")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--what", choices=["points", "subspaces"], default="points")
    _common(p)

    p = sub.add_parser("construct", help="emit one of the extremal families F1, F2, F3")
    p.add_argument("--kind", choices=["f1", "f2", "f3"], required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    _common(p)

    p = sub.add_parser("verify", help="check a family file against a theorem")
    p.add_argument("--family", required=True, metavar="FILE")
    p.add_argument("--family-b", metavar="FILE", help="B-sequence for --kind skew")
    p.add_argument("--kind", choices=["fisher", "oddtown", "reverse-oddtown", "skew"], required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--relaxed", action="store_true", help="allow --k 0 for fisher")
    _common(p)

    p = sub.add_parser("search", help="find a largest family by maximum clique search")
    p.add_argument("--kind", choices=["fisher", "oddtown", "reverse-oddtown"], required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--relaxed", action="store_true", help="allow --k 0 for fisher")
    _common(p)

    p = sub.add_parser("conjecture", help="test the even-n reverse-oddtown conjecture at (q, n)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    _common(p)

    p = sub.add_parser("explore", help="oddtown-type searches for even q, where no bound is proven")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True, nargs="+")
    p.add_argument("--kind", choices=["oddtown", "reverse-oddtown", "both"], default="both")
    _common(p)
    return parser


def _config(args) -> SearchConfig:
    return SearchConfig(
        time_limit=args.time_limit_s,
        worker_count=args.threads,
        deterministic_witness=args.deterministic,
    )


def _kv_text(d: dict, keys) -> str:
    lines = []
    for key in keys:
        v = d.get(key)
        if isinstance(v, bool):
            v = str(v).lower()
        lines.append(f"{key}: {'-' if v is None else v}")
    return "\n".join(lines)


_SEARCH_KEYS = ["kind", "k", "q", "n", "max_size", "proven_optimal", "bound", "bound_status",
                "conjectured_bound", "reference_bound", "verdict", "conjecture_verdict",
                "nodes_explored", "elapsed_ms"]


def _cmd_count(args, out: _Output) -> int:
    q, n, k = args.q, args.n, args.k
    if args.what == "qint":
        value = q_int(n, q)
    elif args.what == "qfactorial":
        value = q_factorial(n, q)
    elif args.what == "qbinomial":
        if k is None:
            raise _Usage("--k is required for --what qbinomial")
        value = q_binomial(n, k, q)
    else:
        value = subspace_count(n, q)
    if args.format == "json":
        out.json({"command": "count", "what": args.what, "q": q, "n": n, "k": k, "value": str(value)})
    else:
        out.text(str(value))
    return EXIT_OK


def _cmd_enumerate(args, out: _Output) -> int:
    field = make_field(args.q)
    if args.what == "points":
        pts = enumerate_points(field, args.n)
        if args.format == "json":
            out.json({"command": "enumerate", "q": args.q, "n": args.n, "count": len(pts),
                      "point_order_hash": pts.digest(), "points": [list(p) for p in pts]})
        else:
            out.text("\n".join(" ".join(map(str, p)) for p in pts))
        return EXIT_OK
    if args.k is None:
        raise _Usage("--k is required for --what subspaces")
    subs = list(enumerate_subspaces(field, args.n, args.k))
    if args.format == "json":
        out.json({"command": "enumerate", "q": args.q, "n": args.n, "k": args.k, "count": len(subs),
                  "subspaces": [subspace_block(s) for s in subs]})
    else:
        out.text("\n\n".join(s.to_text() for s in subs))
    return EXIT_OK


def _cmd_construct(args, out: _Output) -> int:
    field = make_field(args.q)
    fam = construct_extremal(args.kind.upper(), field, args.n)
    if args.format == "json":
        kind = Oddtown() if args.kind == "f1" else ReverseOddtown()
        order = enumerate_points(field, args.n)
        rep = verify_family(fam, kind, order)
        out.json(verification_json("construct", fam, rep, order.digest()))
    else:
        out.text(format_family(fam).rstrip("\n"))
    return EXIT_OK


def _cmd_verify(args, out: _Output) -> int:
    if args.kind == "fisher" and args.k is None:
        raise _Usage("--k is required for --kind fisher")
    if args.kind == "skew" and not args.family_b:
        raise _Usage("--family-b is required for --kind skew")
    try:
        kind = kind_from_name(args.kind, args.k, args.relaxed)
    except ValueError as exc:
        raise _Usage(str(exc)) from None
    fam = read_family_file(args.family)
    if args.kind == "skew":
        fam_b = read_family_file(args.family_b)
        if fam_b.field != fam.field or fam_b.n != fam.n or len(fam_b) != len(fam):
            raise _Usage("--family and --family-b must share q, n and size")
        fam = SkewFamily(fam.field, fam.n, tuple(zip(fam.members, fam_b.members)))
    order = enumerate_points(fam.field, fam.n) if fam.n >= 1 else None
    rep = verify_family(fam, kind, order)
    doc = verification_json("verify", fam, rep, order.digest() if order else None)
    if args.format == "json":
        out.json(doc)
    else:
        keys = ["kind", "k", "q", "n", "size", "bound", "bound_status", "conjectured_bound", "verdict"]
        lines = [_kv_text(doc, keys), _kv_text(doc["verification"],
                 ["conditions_hold", "bound_satisfied", "rank_witness", "parity_witness",
                  "witness_consistent", "failure_detail"])]
        out.text("\n".join(lines))
    return EXIT_OK if rep.satisfied else EXIT_VIOLATION


def _emit_search(command: str, report, args, out: _Output) -> None:
    doc = extremal_json(command, report)
    if args.format == "json":
        out.json(doc)
    else:
        out.text(_kv_text(doc, _SEARCH_KEYS))


def _cmd_search(args, out: _Output) -> int:
    if args.kind == "fisher" and args.k is None:
        raise _Usage("--k is required for --kind fisher")
    try:
        kind = kind_from_name(args.kind, args.k, args.relaxed)
    except ValueError as exc:
        raise _Usage(str(exc)) from None
    report = search_extremal(kind, make_field(args.q), args.n, _config(args))
    _emit_search("search", report, args, out)
    return EXIT_OK


def _emit_batch(command: str, batch, args, out: _Output) -> int:
    if args.format == "json":
        out.json(batch_json(command, batch))
    else:
        blocks = []
        for inst in batch_json(command, batch)["instances"]:
            if "error" in inst:
                blocks.append(_kv_text(inst, ["kind", "q", "n", "error", "message"]))
            else:
                blocks.append(_kv_text(inst, _SEARCH_KEYS))
        out.text("\n\n".join(blocks))
    return EXIT_OK


def _cmd_conjecture(args, out: _Output) -> int:
    batch = run_experiment("conjecture", [(args.n, args.q)], _config(args))
    return _emit_batch("conjecture", batch, args, out)


def _cmd_explore(args, out: _Output) -> int:
    if args.q % 2:
        raise _Usage(f"--q must be a power of 2 for explore, got {args.q}")
    kinds = {"oddtown": [Oddtown()], "reverse-oddtown": [ReverseOddtown()],
             "both": [Oddtown(), ReverseOddtown()]}[args.kind]
    batch = run_experiment("explore_even_q", [(n, args.q) for n in args.n], _config(args), kinds)
    return _emit_batch("explore", batch, args, out)


class _Usage(Exception):
    pass


_COMMANDS = {
    "count": _cmd_count,
    "enumerate": _cmd_enumerate,
    "construct": _cmd_construct,
    "verify": _cmd_verify,
    "search": _cmd_search,
    "conjecture": _cmd_conjecture,
    "explore": _cmd_explore,
}


def run_command(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = _Output(args)
    try:
        status = _COMMANDS[args.command](args, out)
    except _Usage as exc:
        parser.print_usage(sys.stderr)
        print(f"qoddtown {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InternalInconsistency as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except (QOddtownError, ValueError, OSError) as exc:
        print(f"qoddtown {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out.flush()
    return status


def main(argv: list[str] | None = None) -> None:
    sys.exit(run_command(argv))
