#!/usr/bin/env python3
"""Run the full verification campaigns from the command line.

Equivalent to chaining the CLI's verify / oracle-diff commands; kept as
a script so long runs can be sharded across processes with --partition.

Usage:
  python3 scripts/verify_campaign.py classification --t 4 --nmax 7
  python3 scripts/verify_campaign.py sampled --t 4 --n 8 --count 1000000 --seed 1
  python3 scripts/verify_campaign.py ass --nmax 6 [--partition k/m]
"""

import argparse
import json
import sys
import time


def main():
    ap = argparse.ArgumentParser()
    sub = ap.add_subparsers(dest="mode", required=True)

    p = sub.add_parser("classification")
    p.add_argument("--t", type=int, default=4)
    p.add_argument("--nmax", type=int, default=7)
    p.add_argument("--weight-cap", type=int, default=1)
    p.add_argument("--max-total-weight", type=int, default=None)

    p = sub.add_parser("sampled")
    p.add_argument("--t", type=int, default=4)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, default=1000000)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("ass")
    p.add_argument("--t", type=int, default=4)
    p.add_argument("--nmax", type=int, default=6)
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--partition", default=None)

    args = ap.parse_args()
    t0 = time.time()
    if args.mode == "classification":
        from edgesat.classification import verify_classification

        report = verify_classification(
            args.t, args.nmax, weight_cap=args.weight_cap,
            max_total_weight=args.max_total_weight,
        ).to_jsonable()
        bad = report["disagreements"]
    elif args.mode == "sampled":
        from edgesat.classification import sample_classification

        report = sample_classification(args.t, args.n, args.count, args.seed)
        report = report.to_jsonable()
        bad = report["disagreements"]
    else:
        from edgesat.cli import _cmd_oracle_diff, _partition

        class A:
            pass

        a = A()
        a.t, a.nmax, a.cap = args.t, args.nmax, args.cap
        a.partition = _partition(args.partition) if args.partition else None
        code = _cmd_oracle_diff(a)
        print(f"elapsed {time.time() - t0:.1f}s", file=sys.stderr)
        sys.exit(code)

    print(json.dumps(report, sort_keys=True, indent=2))
    print(f"elapsed {time.time() - t0:.1f}s", file=sys.stderr)
    sys.exit(2 if bad else 0)


if __name__ == "__main__":
    main()
