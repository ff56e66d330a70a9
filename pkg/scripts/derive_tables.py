#!/usr/bin/env python3
"""Emit the derived classification tables as JSON documents.

* The weighted 4-saturating classes (grouped into their ten named rows),
  derived as the collapse closure of the 4-saturating simple graphs.
* The witness-restriction pattern list for embedded primes of I^4
  (simple types, weighted classes, and their reduction images).

Usage: python3 scripts/derive_tables.py [out.json]
"""

import json
import sys

from edgesat.classification import TABLE3_NAMES, derived_table3
from edgesat.associated_primes import derived_table4_patterns


def graph_doc(g):
    return {
        "n": g.n,
        "edges": sorted(list(e) for e in g.edges),
        "weights": list(g.weights),
    }


def main():
    doc = {
        "weighted_4_saturating_classes": [
            {"row": row, "name": TABLE3_NAMES[row], "graph": graph_doc(g)}
            for row, g in derived_table3()
        ],
        "embedded_prime_patterns": [
            {"id": pid, "graph": graph_doc(g)}
            for pid, g in derived_table4_patterns()
        ],
    }
    text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if len(sys.argv) > 1:
        with open(sys.argv[1], "w") as fh:
            fh.write(text)
        rows = len(doc["weighted_4_saturating_classes"])
        pats = len(doc["embedded_prime_patterns"])
        print(f"wrote {sys.argv[1]}: {rows} weighted classes, {pats} patterns")
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    main()
