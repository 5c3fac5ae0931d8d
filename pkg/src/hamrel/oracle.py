"""Exact ground truth: count connecting k-subsets of a two-terminal graph.

``exact_coeffs`` computes every N_k = |{S : |S| = k, S connects source to
terminal}| exactly.  It walks the edge include/exclude tree with a rollback
union-find and applies two exact cuts: once the included edges already
connect the terminals, every completion connects and contributes a whole
binomial row; once the terminals cannot be connected even with all undecided
edges included, nothing below contributes.  The result is identical to
enumerating all 2^n subsets, at a fraction of the work.

``make_hammock`` builds the brick-wall topologies: w parallel wires of l
device edges, wire ends merged into the two terminals, and zero-resistance
junction merges between vertically adjacent wires at interior columns in an
alternating brick pattern.  Merges are vertex identifications, not edges, so
the device count stays n = l*w.  Two parity variants exist because the brick
pattern may start on either wire pair; for odd w the two are mirror images.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations
from typing import Optional

from .errors import DomainError, EnumerationCapError, GraphFormatError
from .polynomials import ExactCoeffVector, HammockDims

EXHAUSTIVE_EDGE_CAP = 30


class HammockVariant(Enum):
    """Parity of the brick pattern: which wire pair the first column links."""

    BRICK_A = "brickA"  # first interior column links wires (0,1), (2,3), ...
    BRICK_B = "brickB"  # first interior column links wires (1,2), (3,4), ...


@dataclass(frozen=True)
class TwoTerminalGraph:
    """Multigraph with distinguished source and terminal vertices."""

    num_vertices: int
    edges: tuple[tuple[int, int], ...]
    source: int
    terminal: int

    def __post_init__(self):
        object.__setattr__(
            self, "edges", tuple((int(u), int(v)) for u, v in self.edges)
        )
        if self.num_vertices < 2:
            raise GraphFormatError(f"need at least 2 vertices, got {self.num_vertices}")
        if self.source == self.terminal:
            raise GraphFormatError("source and terminal must differ")
        for vid in (self.source, self.terminal):
            if not 0 <= vid < self.num_vertices:
                raise GraphFormatError(f"terminal vertex {vid} out of range")
        for u, v in self.edges:
            if not (0 <= u < self.num_vertices and 0 <= v < self.num_vertices):
                raise GraphFormatError(f"edge ({u}, {v}) out of range")

    @property
    def n(self) -> int:
        return len(self.edges)


def make_hammock(dims: HammockDims,
                 variant: HammockVariant = HammockVariant.BRICK_A) -> TwoTerminalGraph:
    """Build the hammock graph for the given dimensions and brick parity."""
    l, w = dims.l, dims.w
    cols = l + 1

    def nid(r: int, c: int) -> int:
        return r * cols + c

    parent = list(range(w * cols))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def merge(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    for r in range(1, w):
        merge(nid(0, 0), nid(r, 0))      # left ends -> source
        merge(nid(0, l), nid(r, l))      # right ends -> terminal
    offset = 0 if variant is HammockVariant.BRICK_A else 1
    for c in range(1, l):
        for r in range((c - 1 + offset) % 2, w - 1, 2):
            merge(nid(r, c), nid(r + 1, c))

    labels: dict[int, int] = {}

    def canon(x: int) -> int:
        root = find(x)
        if root not in labels:
            labels[root] = len(labels)
        return labels[root]

    source = canon(nid(0, 0))
    # column-major edge order helps the counting cuts fire early
    edges = tuple(
        (canon(nid(r, c)), canon(nid(r, c + 1)))
        for c in range(l)
        for r in range(w)
    )
    terminal = canon(nid(0, l))
    return TwoTerminalGraph(len(labels), edges, source, terminal)


class _RollbackUnionFind:
    """Union by size with an undo trail (no path compression, so rollback is exact)."""

    __slots__ = ("parent", "size", "trail")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.trail: list[int] = []

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            self.trail.append(-1)
            return
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]
        self.trail.append(ry)

    def rollback(self, mark: int) -> None:
        trail, parent, size = self.trail, self.parent, self.size
        while len(trail) > mark:
            ry = trail.pop()
            if ry >= 0:
                size[self.parent[ry]] -= size[ry]
                self.parent[ry] = ry


def exact_coeffs(graph: TwoTerminalGraph,
                 dims: Optional[HammockDims] = None) -> ExactCoeffVector:
    """Exact N_k counts for every k, by factored exhaustive counting.

    Raises EnumerationCapError beyond EXHAUSTIVE_EDGE_CAP edges; supply a
    precomputed coefficient table for larger networks instead.
    """
    if graph.n > EXHAUSTIVE_EDGE_CAP:
        raise EnumerationCapError(
            f"{graph.n} edges exceeds the exhaustive cap of {EXHAUSTIVE_EDGE_CAP}; "
            "supply a coefficient table (fixture file) instead"
        )
    if dims is not None and dims.n != graph.n:
        raise DomainError(f"dims {dims} do not match edge count {graph.n}")
    counts = _count_connecting_subsets(graph)
    return ExactCoeffVector(graph.n, counts, dims)


@lru_cache(maxsize=64)
def _count_connecting_subsets(graph: TwoTerminalGraph) -> tuple[int, ...]:
    n = graph.n
    edges = graph.edges
    source, terminal = graph.source, graph.terminal
    rows = [tuple(math.comb(m, j) for j in range(m + 1)) for m in range(n + 1)]
    counts = [0] * (n + 1)
    dsu = _RollbackUnionFind(graph.num_vertices)
    dsu_find, dsu_union, dsu_rollback = dsu.find, dsu.union, dsu.rollback
    trail = dsu.trail

    def reachable_with_suffix(i: int) -> bool:
        # could source and terminal still join, using every undecided edge?
        parent = dsu.parent[:]  # scratch copy; path halving is safe on it

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        rs, rt = find(source), find(terminal)
        for j in range(i, n):
            u, v = edges[j]
            ru, rv = find(u), find(v)
            if ru == rv:
                continue
            parent[rv] = ru
            if rv == rs:
                rs = ru
            elif rv == rt:
                rt = ru
            if rs == rt:
                return True
        return rs == rt

    def walk(i: int, included: int) -> None:
        if dsu_find(source) == dsu_find(terminal):
            # every completion connects: one binomial row of subsets
            row = rows[n - i]
            for j in range(n - i + 1):
                counts[included + j] += row[j]
            return
        if i == n:
            return
        u, v = edges[i]
        mark = len(trail)
        dsu_union(u, v)
        walk(i + 1, included + 1)
        dsu_rollback(mark)
        # excluding a redundant edge cannot break reachability, skip the scan
        if dsu_find(u) == dsu_find(v) or reachable_with_suffix(i + 1):
            walk(i + 1, included)

    if reachable_with_suffix(0):
        walk(0, 0)
    return tuple(counts)


def simple_paths(graph: TwoTerminalGraph) -> list[frozenset[int]]:
    """All vertex-simple source-terminal paths, as sets of edge indices."""
    adjacency: list[list[tuple[int, int]]] = [[] for _ in range(graph.num_vertices)]
    for idx, (u, v) in enumerate(graph.edges):
        adjacency[u].append((v, idx))
        if u != v:
            adjacency[v].append((u, idx))
    paths: list[frozenset[int]] = []
    visited = [False] * graph.num_vertices
    stack: list[int] = []

    def dfs(vertex: int) -> None:
        if vertex == graph.terminal:
            paths.append(frozenset(stack))
            return
        visited[vertex] = True
        for nxt, idx in adjacency[vertex]:
            if not visited[nxt]:
                stack.append(idx)
                dfs(nxt)
                stack.pop()
        visited[vertex] = False

    dfs(graph.source)
    return paths


def exact_coeffs_by_paths(graph: TwoTerminalGraph) -> ExactCoeffVector:
    """Independent slow oracle: test every subset against the path sets.

    Exponential in both edges and paths; intended as a cross-check for small
    graphs (roughly 16 edges and below).
    """
    n = graph.n
    if n > 16:
        raise EnumerationCapError(f"path-set cross-check limited to 16 edges, got {n}")
    paths = simple_paths(graph)
    counts = [0] * (n + 1)
    for k in range(n + 1):
        for subset in combinations(range(n), k):
            chosen = frozenset(subset)
            if any(path <= chosen for path in paths):
                counts[k] += 1
    return ExactCoeffVector(n, tuple(counts))


def conformance_variant(dims: HammockDims,
                        expected: ExactCoeffVector) -> Optional[HammockVariant]:
    """Return the brick variant whose exact counts equal ``expected``.

    Returns None when neither variant matches, in which case callers must
    surface the disagreement rather than trust generated topologies.
    """
    for variant in HammockVariant:
        got = exact_coeffs(make_hammock(dims, variant), dims)
        if got.coeffs == expected.coeffs:
            return variant
    return None


def conformance_report(dims: HammockDims, expected: ExactCoeffVector) -> str:
    """Per-variant diff against ``expected`` (for loud failure messages)."""
    lines = []
    for variant in HammockVariant:
        got = exact_coeffs(make_hammock(dims, variant), dims)
        diffs = [
            f"k={k}: got {g}, expected {e}"
            for k, (g, e) in enumerate(zip(got.coeffs, expected.coeffs))
            if g != e
        ]
        status = "matches" if not diffs else "; ".join(diffs)
        lines.append(f"{variant.value}: {status}")
    return "\n".join(lines)


# -- graph text format -------------------------------------------------------
#
# First non-blank line: "<num_vertices> <source> <terminal>", then one
# "<u> <v>" line per edge.  '#' starts a comment.


def parse_graph(text: str) -> TwoTerminalGraph:
    lines = []
    for raw in text.splitlines():
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            lines.append(stripped)
    if not lines:
        raise GraphFormatError("empty graph description")
    try:
        header = [int(tok) for tok in lines[0].split()]
        if len(header) != 3:
            raise ValueError("header needs exactly 3 fields")
        num_vertices, source, terminal = header
        edges = []
        for line in lines[1:]:
            u, v = (int(tok) for tok in line.split())
            edges.append((u, v))
    except ValueError as exc:
        raise GraphFormatError(f"malformed graph description: {exc}") from exc
    return TwoTerminalGraph(num_vertices, tuple(edges), source, terminal)


def format_graph(graph: TwoTerminalGraph) -> str:
    lines = [f"{graph.num_vertices} {graph.source} {graph.terminal}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"
