"""Simple undirected graphs with exact integer primitives.

Nodes are compacted to 0..n-1 on construction and the original labels kept
in a side map. Adjacency lives in one bitmask per node, so neighborhood
intersections are single AND operations and every derived count stays in
plain (arbitrary precision) Python integers.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence


class GraphletId(NamedTuple):
    """Identity of a connected graphlet: node count b and canonical code a."""

    b: int
    a: int


class WalkTable(NamedTuple):
    """The k-th power of an adjacency matrix; entries[i][j] counts walks."""

    power: int
    entries: tuple


class NeighborhoodView(NamedTuple):
    """Induced subgraph on the neighborhood of a center node."""

    center: int
    members: frozenset
    subgraph: "Graph"


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple undirected graph on nodes 0..n-1.

    Self-loops are dropped and duplicate edges collapsed during
    construction; the two counters record how many of each were seen so
    callers can surface dirty input.
    """

    def __init__(self, n: int, edges: Iterable[tuple], labels: Sequence = None):
        if n < 0:
            raise ValueError("node count must be nonnegative")
        adj = [0] * n
        loops = 0
        dupes = 0
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                loops += 1
                continue
            if (adj[u] >> v) & 1:
                dupes += 1
                continue
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            m += 1
        self.n = n
        self.m = m
        self.adj = tuple(adj)
        self.degrees = tuple(a.bit_count() for a in adj)
        self.labels = tuple(labels) if labels is not None else tuple(range(n))
        self.dropped_self_loops = loops
        self.dropped_duplicate_edges = dupes

    def adjacent(self, i: int, j: int) -> bool:
        return bool((self.adj[i] >> j) & 1)

    def neighbors(self, i: int) -> list:
        return list(_bits(self.adj[i]))

    def edges(self) -> list:
        """All edges as (i, j) pairs with i < j, in sorted order."""
        out = []
        for i in range(self.n):
            higher = self.adj[i] >> (i + 1)
            for j in _bits(higher):
                out.append((i, i + 1 + j))
        return out

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for i in _bits(frontier):
                nxt |= self.adj[i]
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self.n) - 1

    def subgraph(self, nodes: Iterable[int]) -> "Graph":
        """Induced subgraph on the given nodes, relabeled in sorted order."""
        members = sorted(set(nodes))
        index = {v: k for k, v in enumerate(members)}
        edges = []
        for v in members:
            for w in _bits(self.adj[v]):
                if w > v and w in index:
                    edges.append((index[v], index[w]))
        return Graph(len(members), edges, labels=[self.labels[v] for v in members])

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(pairs: Iterable[tuple], declared_nodes: int = None) -> Graph:
    """Build a Graph from raw id pairs, compacting ids to 0..n-1.

    Ids may be arbitrary nonnegative integers; nodes mentioned only in
    self-loops are kept as isolated nodes. declared_nodes, when given,
    forces ids 0..declared_nodes-1 into the node set (the text format's
    "nodes N" header uses this to declare trailing isolated nodes).
    """
    ids = set()
    cleaned = []
    for k, pair in enumerate(pairs):
        try:
            u, v = pair
            u = int(u)
            v = int(v)
        except (TypeError, ValueError):
            raise ValueError(f"pair #{k}: expected two integers, got {pair!r}") from None
        if u < 0 or v < 0:
            raise ValueError(f"pair #{k}: negative node id in {pair!r}")
        ids.add(u)
        ids.add(v)
        cleaned.append((u, v))
    if declared_nodes is not None:
        ids.update(range(declared_nodes))
    order = sorted(ids)
    index = {v: k for k, v in enumerate(order)}
    return Graph(len(order), [(index[u], index[v]) for u, v in cleaned], labels=order)


def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format.

    One edge per line as two whitespace-separated nonnegative integers.
    Lines starting with '#' and blank lines are ignored. An optional
    header line "nodes N" declares the node count so trailing isolated
    nodes survive the round trip.
    """
    pairs = []
    declared = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if parts[0] == "nodes":
            if declared is not None:
                raise ValueError(f"line {lineno}: duplicate 'nodes' header")
            if len(parts) != 2 or not parts[1].isdigit():
                raise ValueError(f"line {lineno}: malformed header {stripped!r}")
            declared = int(parts[1])
            continue
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected two tokens, got {stripped!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer token in {stripped!r}") from None
        if u < 0 or v < 0:
            raise ValueError(f"line {lineno}: negative node id in {stripped!r}")
        pairs.append((u, v))
    return from_edge_list(pairs, declared_nodes=declared)


def read_edge_list(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def format_edge_list(g: Graph) -> str:
    """Serialize a graph in the parseable edge-list format (0-based ids)."""
    lines = [f"nodes {g.n}"]
    lines.extend(f"{i} {j}" for i, j in g.edges())
    return "\n".join(lines) + "\n"


def _matmul(a, b):
    cols = list(zip(*b))
    return [tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a]


def walk_table(g: Graph, k: int) -> WalkTable:
    """Exact walk counts of length k between every node pair.

    Args:
        g: the graph.
        k: walk length, at least 1.

    Returns:
        WalkTable whose entries[i][j] is the number of length-k walks
        from i to j.
    """
    if k < 1:
        raise ValueError("walk length must be at least 1")
    base = [tuple(1 if (g.adj[i] >> j) & 1 else 0 for j in range(g.n)) for i in range(g.n)]
    power = base
    for _ in range(k - 1):
        power = _matmul(power, base)
    return WalkTable(power=k, entries=tuple(power))


def common_neighborhood(g: Graph, i: int, j: int) -> set:
    """Nodes adjacent to both i and j. Its size equals the (i,j) entry of
    the length-2 walk table."""
    if i == j:
        raise ValueError("common neighborhood needs two distinct nodes")
    return set(_bits(g.adj[i] & g.adj[j]))


def delete_node(g: Graph, i: int) -> Graph:
    """Induced subgraph on all nodes except i."""
    if not 0 <= i < g.n:
        raise ValueError(f"node {i} out of range")
    return g.subgraph(v for v in range(g.n) if v != i)


def neighborhood_subgraph(g: Graph, i: int) -> NeighborhoodView:
    """Induced subgraph on the neighborhood of i (i itself excluded)."""
    if not 0 <= i < g.n:
        raise ValueError(f"node {i} out of range")
    members = g.neighbors(i)
    return NeighborhoodView(center=i, members=frozenset(members), subgraph=g.subgraph(members))


@lru_cache(maxsize=None)
def _pair_weights(b):
    # Bit weight of the (i, j) entry, 1 <= i < j <= b, reading the upper
    # triangle row by row with the most significant bit at (1, 2):
    # weight = 2^(C(b-i, 2) + (b-j)).
    out = []
    for i in range(1, b + 1):
        for j in range(i + 1, b + 1):
            out.append((i - 1, j - 1, 1 << (math.comb(b - i, 2) + (b - j))))
    return tuple(out)


def graph_code(g: Graph, order: Sequence[int]) -> int:
    """Upper-triangle code of g with nodes read in the given order."""
    code = 0
    for i, j, w in _pair_weights(g.n):
        if g.adjacent(order[i], order[j]):
            code += w
    return code


@lru_cache(maxsize=None)
def canonical_code(b: int, raw: int) -> int:
    """Smallest code over all relabelings of the b-node graph encoded by raw."""
    weights = _pair_weights(b)
    adj = [[False] * b for _ in range(b)]
    for i, j, w in weights:
        if raw & w:
            adj[i][j] = adj[j][i] = True
    best = raw
    for perm in itertools.permutations(range(b)):
        code = 0
        for i, j, w in weights:
            if adj[perm[i]][perm[j]]:
                code += w
        if code < best:
            best = code
    return best


def canonical_id(g: Graph) -> GraphletId:
    """Canonical (b, a) identity of a connected graphlet on 3 to 6 nodes.

    a is the minimum, over all node relabelings, of the upper-triangle
    bit code, so isomorphic graphs always map to the same id.
    """
    if not 3 <= g.n <= 6:
        raise ValueError(f"graphlet id defined for 3..6 nodes, got {g.n}")
    if not g.is_connected():
        raise ValueError("graphlet id defined only for connected graphs")
    raw = graph_code(g, range(g.n))
    return GraphletId(b=g.n, a=canonical_code(g.n, raw))


def edges_from_code(b: int, a: int) -> list:
    """Decode a b-node graphlet code into its 0-based edge list."""
    limit = 1 << math.comb(b, 2)
    if not 0 <= a < limit:
        raise ValueError(f"code {a} out of range for {b} nodes")
    return [(i, j) for i, j, w in _pair_weights(b) if a & w]
