"""Command-line entry point.

Subcommands: gen, check-decomp, shorten, tw, tdi, verify-bounds, scan,
report.  Exit codes: 0 success or property verified, 1 falsified
property (witness in the report), 2 usage or input errors.

Every run produces a RunReport (JSON; rows also render as CSV).  Reruns
on identical inputs give identical outcome rows; durations are kept out
of the rows.
"""

import argparse
import csv
import hashlib
import io as _io
import json
import sys
import time
from dataclasses import dataclass, field

from . import io as gio
from .decomp import diameter, is_short, validate, width
from .embed import good_pair_scan
from .families import FamilySpec, generate
from .multigraph import connected_components
from .oracle import (
    OracleLimitError,
    brute_tree_diameter,
    brute_treewidth,
    enumerate_pm_free,
)
from .shorten import diameter_bound, shorten_pass
from .util import sorted_ids


@dataclass
class RunReport:
    command: str
    inputs: dict = field(default_factory=dict)
    parameters: dict = field(default_factory=dict)
    outcome: str = ""
    rows: list = field(default_factory=list)
    duration_s: float = 0.0

    def to_obj(self):
        return {
            "command": self.command,
            "inputs": self.inputs,
            "parameters": self.parameters,
            "outcome": self.outcome,
            "rows": self.rows,
            "duration_s": round(self.duration_s, 6),
        }

    @classmethod
    def from_obj(cls, obj):
        return cls(
            command=obj.get("command", ""),
            inputs=obj.get("inputs", {}),
            parameters=obj.get("parameters", {}),
            outcome=obj.get("outcome", ""),
            rows=obj.get("rows", []),
            duration_s=obj.get("duration_s", 0.0),
        )

    def rows_csv(self):
        if not self.rows:
            return ""
        keys = list(self.rows[0])
        buf = _io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=keys)
        writer.writeheader()
        for row in self.rows:
            writer.writerow(row)
        return buf.getvalue()


def _sha256(path):
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(65536), b""):
            h.update(chunk)
    return h.hexdigest()


def _emit(report, args):
    text = (
        report.rows_csv()
        if getattr(args, "format", "json") == "csv"
        else json.dumps(report.to_obj(), indent=1, default=str) + "\n"
    )
    out = getattr(args, "output", None)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_family(tokens, seed):
    name = tokens[0]
    rest = tokens[1:]
    if name == "disjoint_union":
        subs = []
        for tok in rest:
            parts = tok.split(":")
            subs.append(FamilySpec(parts[0], tuple(int(p) for p in parts[1:])))
        return FamilySpec("disjoint_union", tuple(subs))
    return FamilySpec(name, tuple(int(p) for p in rest), seed=seed)


def _cmd_gen(args):
    spec = _parse_family([args.family] + args.params, args.seed)
    g = generate(spec)
    report = RunReport(
        command="gen",
        parameters={"family": args.family, "params": args.params, "seed": args.seed},
        outcome="generated",
        rows=[{"family": args.family, "n": g.n, "edges": g.edge_count()}],
    )
    if args.output:
        gio.save_graph(g, args.output)
        return 0, report, "stdout"
    json.dump(gio.graph_to_obj(g), sys.stdout, indent=1)
    sys.stdout.write("\n")
    return 0, report, False


def _cmd_check_decomp(args):
    rooted = gio.load_graph(args.graph)
    d = gio.load_decomposition(args.decomp, rooted.graph)
    result = validate(d)
    row = {"valid": result.ok}
    if result.ok:
        row |= {"width": width(d), "diameter": diameter(d)}
        outcome = "valid"
    else:
        row |= {"condition": result.condition, "witness": repr(result.witness)}
        outcome = "violation"
    report = RunReport(
        command="check-decomp",
        inputs={args.graph: _sha256(args.graph), args.decomp: _sha256(args.decomp)},
        outcome=outcome,
        rows=[row],
    )
    return (0 if result.ok else 1), report, "stdout"


def _cmd_shorten(args):
    rooted = gio.load_graph(args.graph)
    d = gio.load_decomposition(args.decomp, rooted.graph)
    if not validate(d).ok:
        raise gio.FormatError("input decomposition is not valid")
    out = shorten_pass(d)
    deleted = sorted(
        (sorted_ids(e) for e in d.tree_edges - out.tree_edges), key=str
    )
    added = sorted(
        (sorted_ids(e) for e in out.tree_edges - d.tree_edges), key=str
    )
    report = RunReport(
        command="shorten",
        inputs={args.graph: _sha256(args.graph), args.decomp: _sha256(args.decomp)},
        outcome="shortened",
        rows=[
            {
                "diameter_before": diameter(d),
                "diameter_after": diameter(out),
                "width": width(out),
                "short": is_short(out),
                "deleted_tree_edges": deleted,
                "added_tree_edges": added,
            }
        ],
    )
    if args.output:
        gio.save_decomposition(out, args.output)
        return 0, report, "stdout"
    json.dump(gio.decomp_to_obj(out), sys.stdout, indent=1)
    sys.stdout.write("\n")
    return 0, report, False


def _cmd_tw(args):
    rooted = gio.load_graph(args.graph)
    g = rooted.graph
    value = brute_treewidth(g, limit=args.limit_n)
    report = RunReport(
        command="tw",
        inputs={args.graph: _sha256(args.graph)},
        parameters={"limit_n": args.limit_n},
        outcome="computed",
        rows=[{"n": g.n, "edges": g.edge_count(), "tw": value}],
    )
    return 0, report, True


def _cmd_tdi(args):
    rooted = gio.load_graph(args.graph)
    g = rooted.graph
    value = brute_tree_diameter(g, limit=args.limit_n)
    report = RunReport(
        command="tdi",
        inputs={args.graph: _sha256(args.graph)},
        parameters={"limit_n": args.limit_n},
        outcome="computed",
        rows=[{"n": g.n, "edges": g.edge_count(), "tdi": value}],
    )
    return 0, report, True


def _cmd_verify_bounds(args):
    rows = []
    violations = 0
    max_tw = -1
    max_tdi = -1
    for idx, g in enumerate(
        enumerate_pm_free(
            args.nmax,
            args.mult,
            args.m,
            limit_n=args.limit_n,
            limit_mult=args.limit_mult,
        )
    ):
        tw = brute_treewidth(g, limit=max(args.limit_n, g.n))
        tdi = brute_tree_diameter(g, limit=max(args.limit_n, g.n))
        connected = len(connected_components(g)) == 1
        bound = diameter_bound(args.m, connected)
        ok = tw <= args.m - 1 and tdi <= bound
        violations += not ok
        max_tw = max(max_tw, tw)
        max_tdi = max(max_tdi, tdi)
        rows.append(
            {
                "graph": idx,
                "n": g.n,
                "edges": g.edge_count(),
                "tw": tw,
                "tdi": tdi,
                "bound": bound,
                "connected": connected,
                "ok": ok,
            }
        )
    report = RunReport(
        command="verify-bounds",
        parameters={"m": args.m, "nmax": args.nmax, "mult": args.mult},
        outcome=(
            f"verified {len(rows)} graphs, max tw {max_tw}, max tdi {max_tdi}"
            if not violations
            else f"{violations} violations"
        ),
        rows=rows,
    )
    return (0 if not violations else 1), report, True


def _cmd_scan(args):
    respect = [t for t in (args.respect or "").split(",") if t]
    seq = list(gio.iter_graph_lines(args.stream))
    pair = good_pair_scan(seq, mode=args.mode, respect=respect)
    report = RunReport(
        command="scan",
        inputs={args.stream: _sha256(args.stream)},
        parameters={"mode": args.mode, "respect": respect, "count": len(seq)},
        outcome="antichain" if pair is None else f"good pair {pair}",
        rows=[{"good_pair": list(pair) if pair else None}],
    )
    # a good pair falsifies the antichain property, with the pair as witness
    return (0 if pair is None else 1), report, True


def _cmd_report(args):
    with open(args.report) as fh:
        try:
            report = RunReport.from_obj(json.load(fh))
        except json.JSONDecodeError as exc:
            raise gio.FormatError(f"{args.report}: {exc}") from exc
    return 0, report, True


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="treediam",
        description="tree-decomposition toolkit: generation, validation, "
        "shortening, exact oracles, bound sweeps, and embedding scans",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a named graph family")
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("check-decomp", help="validate a decomposition")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("-d", "--decomp", required=True)
    p.set_defaults(fn=_cmd_check_decomp)

    p = sub.add_parser("shorten", help="apply the full shortening pass")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("-d", "--decomp", required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_shorten)

    p = sub.add_parser("tw", help="exact tree-width (brute force)")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("--limit-n", type=int, default=8)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_tw)

    p = sub.add_parser("tdi", help="exact tree-diameter (brute force)")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("--limit-n", type=int, default=6)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_tdi)

    p = sub.add_parser(
        "verify-bounds",
        help="sweep path-free graphs and check the width and diameter bounds",
    )
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--mult", type=int, required=True)
    p.add_argument("--limit-n", type=int, default=6)
    p.add_argument("--limit-mult", type=int, default=3)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_verify_bounds)

    p = sub.add_parser("scan", help="scan a graph stream for a good pair")
    p.add_argument("stream")
    p.add_argument("--mode", choices=("subgraph", "induced"), default="subgraph")
    p.add_argument("--respect", default="")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_scan)

    p = sub.add_parser("report", help="re-render a stored run report")
    p.add_argument("report")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_report)

    return parser


def run(argv):
    """Parse argv, run the subcommand, and return (exit code, RunReport)."""
    parser = _build_parser()
    args = parser.parse_args(argv)
    start = time.monotonic()
    try:
        code, report, emit = args.fn(args)
    except (gio.FormatError, OracleLimitError, ValueError, OSError) as exc:
        sys.stderr.write(f"treediam: error: {exc}\n")
        return 2, RunReport(command=args.command, outcome=f"error: {exc}")
    report.duration_s = time.monotonic() - start
    if emit == "stdout":
        sys.stdout.write(json.dumps(report.to_obj(), indent=1, default=str) + "\n")
    elif emit:
        _emit(report, args)
    return code, report


def main(argv=None):
    code, _ = run(argv if argv is not None else sys.argv[1:])
    return code


if __name__ == "__main__":
    sys.exit(main())
