"""Command-line front door.

Commands:

* ``saturating``  — is the (weighted) input graph t-saturating?
* ``classify``    — which saturating type does the input graph match?
* ``sat-members`` — witnesses of sat(I^t) \\ I^t for the input graph
* ``ass-primes``  — associated primes of I^4 for the input graph
* ``depth4``      — is depth R/I^4 positive?
* ``verify``      — classification-vs-predicate campaign over a graph space
* ``oracle-diff`` — structural associated-primes computation vs brute-force oracle

Graphs are read from a file argument or standard input in the
line-oriented ``p/e/w`` format (see graphio).  Reports are key-sorted
JSON, byte-identical for identical inputs.  Exit codes: 0 success, 1
domain error, 2 verification disagreement, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .weighted_graph import (
    connected_components,
    is_t_saturating,
    matching_number,
    weighted_degree,
)

EX_OK = 0
EX_DOMAIN = 1
EX_DISAGREE = 2
EX_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # unknown command/flag -> usage text, exit 64
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        sys.exit(EX_USAGE)


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")


def _read_graph(path: Optional[str]):
    from .graphio import parse_graph

    text = sys.stdin.read() if path in (None, "-") else open(path).read()
    return parse_graph(text).graph()


def _partition(value: Optional[str]) -> Optional[tuple[int, int]]:
    if value is None:
        return None
    try:
        k, m = value.split("/")
        k, m = int(k), int(m)
    except ValueError:
        raise argparse.ArgumentTypeError("expected k/m") from None
    if m < 1 or not 0 <= k < m:
        raise argparse.ArgumentTypeError("need 0 <= k < m")
    return (k, m)


def _add_graph_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument("graph", nargs="?", default=None, help="graph file (default: stdin)")


def build_parser() -> _Parser:
    parser = _Parser(prog="edgesat")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("saturating", help="t-saturating test")
    p.add_argument("--t", type=int, required=True)
    _add_graph_arg(p)

    p = sub.add_parser("classify", help="saturating type of the graph")
    p.add_argument("--t", type=int, choices=(3, 4), required=True)
    _add_graph_arg(p)

    p = sub.add_parser("sat-members", help="witnesses of sat(I^t) \\ I^t")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--partition", type=_partition, default=None)
    _add_graph_arg(p)

    p = sub.add_parser("ass-primes", help="associated primes of I^4")
    _add_graph_arg(p)

    p = sub.add_parser("depth4", help="is depth R/I^4 positive?")
    _add_graph_arg(p)

    p = sub.add_parser("verify", help="classification verification campaign")
    p.add_argument("--t", type=int, choices=(3, 4), required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--weight-cap", type=int, default=1)
    p.add_argument("--max-total-weight", type=int, default=None)
    p.add_argument("--partition", type=_partition, default=None)
    p.add_argument("--sample-n", type=int, default=None,
                   help="sample random graphs on this many vertices instead")
    p.add_argument("--sample-count", type=int, default=100000)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("oracle-diff", help="associated primes vs brute oracle")
    p.add_argument("--t", type=int, default=4)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--partition", type=_partition, default=None)

    return parser


def _cmd_saturating(args) -> int:
    g = _read_graph(args.graph)
    _emit(
        {
            "t": args.t,
            "saturating": is_t_saturating(g, args.t),
            "matching_number": matching_number(g),
            "weighted_degrees": [weighted_degree(g, v) for v in g.vertices],
        }
    )
    return EX_OK


def _cmd_classify(args) -> int:
    from .classification import classify3, classify4

    g = _read_graph(args.graph)
    st = (classify3 if args.t == 3 else classify4)(g)
    _emit(
        {
            "t": args.t,
            "type": st.tag if st else None,
            "name": st.description if st else None,
        }
    )
    return EX_OK


def _cmd_sat_members(args) -> int:
    from .edge_ideal import saturation_gap_witnesses

    g = _read_graph(args.graph)
    ws = saturation_gap_witnesses(g, args.t, cap=args.cap, partition=args.partition)
    _emit({"t": args.t, "count": len(ws), "witnesses": [list(a) for a in ws]})
    return EX_OK


def _cmd_ass_primes(args) -> int:
    from .associated_primes import ass_primes_4

    _emit(ass_primes_4(_read_graph(args.graph)).to_jsonable())
    return EX_OK


def _cmd_depth4(args) -> int:
    from .associated_primes import depth4_positive

    _emit({"depth4_positive": depth4_positive(_read_graph(args.graph))})
    return EX_OK


def _cmd_verify(args) -> int:
    from .classification import sample_classification, verify_classification

    if args.sample_n is not None:
        report = sample_classification(
            args.t, args.sample_n, args.sample_count, args.seed
        )
    else:
        report = verify_classification(
            args.t,
            args.nmax,
            weight_cap=args.weight_cap,
            max_total_weight=args.max_total_weight,
            partition=args.partition,
        )
    _emit(report.to_jsonable())
    return EX_DISAGREE if report.disagreements else EX_OK


def _cmd_oracle_diff(args) -> int:
    from . import sweep
    from .associated_primes import (
        ass_primes_4,
        ass_primes_oracle,
        is_associated_prime,
        minimal_covers,
    )

    t = args.t
    cap = args.cap if args.cap is not None else 2 * t
    diffs = []
    checked = 0
    count = 0
    for n in range(2, args.nmax + 1):
        for info in sweep.iter_classes(n):
            g = info.graph()
            if not g.edges or len(connected_components(g)) != 1:
                continue
            if args.partition is not None and count % args.partition[1] != args.partition[0]:
                count += 1
                continue
            count += 1
            if t == 4:
                got = ass_primes_4(g).covers()
            else:
                import itertools

                from .associated_primes import is_cover

                got = sorted(
                    f
                    for k in range(n + 1)
                    for f in itertools.combinations(range(n), k)
                    if is_cover(g, f) and is_associated_prime(g, f, t)[0]
                )
            want = ass_primes_oracle(g, t, cap)
            checked += 1
            if got != want:
                diffs.append(
                    {
                        "n": n,
                        "edges": sorted(list(e) for e in g.edges),
                        "structural": [list(c) for c in got],
                        "oracle": [list(c) for c in want],
                    }
                )
    _emit(
        {
            "t": t,
            "nmax": args.nmax,
            "cap": cap,
            "graphs_checked": checked,
            "disagreements": len(diffs),
            "details": diffs,
        }
    )
    return EX_DISAGREE if diffs else EX_OK


_COMMANDS = {
    "saturating": _cmd_saturating,
    "classify": _cmd_classify,
    "sat-members": _cmd_sat_members,
    "ass-primes": _cmd_ass_primes,
    "depth4": _cmd_depth4,
    "verify": _cmd_verify,
    "oracle-diff": _cmd_oracle_diff,
}


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
