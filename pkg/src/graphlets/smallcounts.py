"""Exact non-induced counts of the eight connected graphlets on 3 and 4 nodes.

All counts come from closed formulas over node degrees and short walk
counts; nothing is enumerated. Each formula that divides by a symmetry
factor asserts the division is exact, which catches transcription bugs
immediately instead of silently rounding.
"""

from __future__ import annotations

import math

from .graph import Graph, _bits

# Count vector order: (a, b) = (3,3), (7,3), (11,4), (13,4), (15,4), (30,4),
# (31,4), (63,4). The codes are unique, so plain ints key the dicts.
SMALL_IDS = (3, 7, 11, 13, 15, 30, 31, 63)

SMALL_NODE_COUNT = {3: 3, 7: 3, 11: 4, 13: 4, 15: 4, 30: 4, 31: 4, 63: 4}


def choose(x: int, r: int) -> int:
    """Binomial coefficient that is zero whenever x < r (including x < 0)."""
    return math.comb(x, r) if x >= r else 0


def exact_div(value: int, divisor: int) -> int:
    q, r = divmod(value, divisor)
    assert r == 0, f"expected {value} divisible by {divisor}"
    return q


def masked_triangle_trace(adj, mask: int) -> int:
    """Closed 3-walk count within the induced subgraph on the mask's nodes.

    Equals six times the triangle count of that subgraph.
    """
    total = 0
    for u in _bits(mask):
        au = adj[u] & mask
        for v in _bits(au):
            total += (adj[v] & au).bit_count()
    return total


def count_small(g: Graph) -> dict:
    """All eight 3- and 4-node non-induced graphlet counts, exactly.

    Returns:
        dict keyed by graphlet code in SMALL_IDS order.
    """
    n, deg, adj = g.n, g.degrees, g.adj
    # closed 3-walks per node: twice the number of triangles through it
    c3 = [sum((adj[i] & adj[j]).bit_count() for j in _bits(adj[i])) for i in range(n)]
    edges = g.edges()

    m3 = sum(choose(k, 2) for k in deg)
    m7 = exact_div(sum(c3), 6)
    m11 = sum(choose(k, 3) for k in deg)
    m13 = sum((deg[i] - 1) * (deg[j] - 1) for i, j in edges) - 3 * m7
    m15 = exact_div(sum(c3[i] * (deg[i] - 2) for i in range(n) if deg[i] > 2), 2)

    # trace of the 4th power: squared length-2 walk counts over all ordered
    # pairs, diagonal included (the diagonal of the square is the degree)
    tr4 = sum(k * k for k in deg)
    m31 = 0
    for i in range(n):
        ai = adj[i]
        for j in range(i + 1, n):
            cij = (ai & adj[j]).bit_count()
            tr4 += 2 * cij * cij
            if (ai >> j) & 1:
                # one term per edge is half the ordered-pair sum
                m31 += choose(cij, 2)
    m30 = exact_div(tr4 - 4 * m3 - 2 * g.m, 8)

    # each 4-clique through node i is a triangle in i's neighborhood, and
    # each 4-clique is seen from its four nodes
    m63 = exact_div(sum(masked_triangle_trace(adj, adj[i]) for i in range(n)), 24)

    return {3: m3, 7: m7, 11: m11, 13: m13, 15: m15, 30: m30, 31: m31, 63: m63}


def count_small_in(view: Graph) -> dict:
    """Counts restricted to a subgraph view, using the view's own degrees.

    The view is an ordinary Graph (typically a neighborhood subgraph,
    possibly disconnected), so the global formulas apply unchanged.
    """
    return count_small(view)
