"""Line-oriented graph documents for the command-line tools.

Format (close to DIMACS conventions, diff-friendly):

    # optional comments anywhere
    p <n>                 vertex count header (required, first)
    e <u> <v>             one edge per line, 1-indexed
    w <w1> ... <wn>       optional weights, positive integers

Parsing is strict: every malformed line, out-of-range index, duplicate
edge or nonpositive weight is rejected with its line number.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .weighted_graph import WeightedGraph


class GraphFormatError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass
class GraphDocument:
    n: int
    edges: list[tuple[int, int]]  # 0-indexed, u < v
    weights: Optional[list[int]] = None
    labels: Optional[list[str]] = None

    def graph(self) -> WeightedGraph:
        return WeightedGraph.build(range(self.n), self.edges, self.weights)


def parse_graph(text: str) -> GraphDocument:
    n: Optional[int] = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    weights: Optional[list[int]] = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "p":
            if n is not None:
                raise GraphFormatError(line_no, "duplicate p header")
            if len(parts) != 2 or not parts[1].isdigit() or int(parts[1]) < 1:
                raise GraphFormatError(line_no, "expected 'p <n>' with n >= 1")
            n = int(parts[1])
        elif kind == "e":
            if n is None:
                raise GraphFormatError(line_no, "edge before p header")
            if len(parts) != 3 or not all(p.isdigit() for p in parts[1:]):
                raise GraphFormatError(line_no, "expected 'e <u> <v>'")
            u, v = int(parts[1]), int(parts[2])
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(line_no, f"vertex index out of range 1..{n}")
            if u == v:
                raise GraphFormatError(line_no, "loops are not allowed")
            e = (min(u, v) - 1, max(u, v) - 1)
            if e in seen:
                raise GraphFormatError(line_no, f"duplicate edge {u} {v}")
            seen.add(e)
            edges.append(e)
        elif kind == "w":
            if n is None:
                raise GraphFormatError(line_no, "weights before p header")
            if weights is not None:
                raise GraphFormatError(line_no, "duplicate w line")
            if len(parts) != n + 1:
                raise GraphFormatError(line_no, f"expected {n} weights")
            try:
                weights = [int(p) for p in parts[1:]]
            except ValueError:
                raise GraphFormatError(line_no, "weights must be integers") from None
            if any(w < 1 for w in weights):
                raise GraphFormatError(line_no, "weights must be positive")
        else:
            raise GraphFormatError(line_no, f"unknown directive {kind!r}")
    if n is None:
        raise GraphFormatError(0, "missing p header")
    return GraphDocument(n, sorted(edges), weights)


def serialize(doc: GraphDocument) -> str:
    lines = [f"p {doc.n}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in sorted(doc.edges)]
    if doc.weights is not None:
        lines.append("w " + " ".join(str(w) for w in doc.weights))
    return "\n".join(lines) + "\n"
