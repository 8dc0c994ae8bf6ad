"""Exact non-induced counts for the 21 connected five-node graphlets.

Every count is a closed formula over degrees, length-2 walk counts and
small-graphlet counts; the harder shapes reduce to 3/4-node counts inside
single-node neighborhood subgraphs. No five-node subsets are enumerated.

Also provides three alternative 5-path formulations kept side by side for
cross-checking (only the first is generally correct), one alternative
chevron route through neighborhood subgraphs, and two 6-node counts that
extend the same technique.
"""

from __future__ import annotations

from .graph import Graph, _bits
from .smallcounts import SMALL_IDS, choose, count_small, count_small_in, exact_div

# Ascending canonical codes of the 21 connected 5-node graphlets.
FIVE_IDS = (
    75, 77, 79, 86, 87, 94, 95, 117, 119, 127,
    222, 223, 235, 236, 237, 239, 254, 255, 507, 511, 1023,
)


def _walk2_table(g: Graph):
    """Dense table of length-2 walk counts; the diagonal holds degrees."""
    n, adj, deg = g.n, g.adj, g.degrees
    c = [[0] * n for _ in range(n)]
    for i in range(n):
        c[i][i] = deg[i]
        ai = adj[i]
        row = c[i]
        for j in range(i + 1, n):
            v = (ai & adj[j]).bit_count()
            row[j] = v
            c[j][i] = v
    return c


def _closed3(g: Graph, c) -> list:
    """Closed 3-walks per node (twice the triangles through each node)."""
    return [sum(c[i][j] for j in _bits(g.adj[i])) for i in range(g.n)]


def count_five(g: Graph) -> dict:
    """All 21 five-node non-induced graphlet counts, exactly.

    Returns:
        dict keyed by graphlet code in FIVE_IDS order.
    """
    n, deg, adj = g.n, g.degrees, g.adj
    edges = g.edges()
    small = count_small(g)
    y3, y7, y11, y13, y15, y30, y31, y63 = (small[a] for a in SMALL_IDS)

    c = _walk2_table(g)
    t3 = _closed3(g, c)

    y75 = sum(choose(k, 4) for k in deg)

    y77 = (
        sum(
            choose(deg[i] - 1, 2) * (deg[j] - 1) + choose(deg[j] - 1, 2) * (deg[i] - 1)
            for i, j in edges
        )
        - 2 * y15
    )

    y79 = exact_div(sum(t3[i] * choose(deg[i] - 2, 2) for i in range(n)), 2)

    # all 4th-power entries via squared row sums of the walk table
    row2 = [sum(c[i]) for i in range(n)]
    s4_all = sum(r * r for r in row2)
    tr4 = sum(c[i][j] * c[i][j] for i in range(n) for j in range(n))
    y86 = exact_div(s4_all - tr4, 2) - 2 * y3 - 9 * y7 - 3 * y11 - 2 * y13 - 2 * y15

    y87 = (
        sum(
            c[i][j] * (deg[i] - 2) * (deg[j] - 2)
            for i, j in edges
            if deg[i] > 2 and deg[j] > 2
        )
        - 2 * y31
    )

    y94 = (
        sum(
            choose(c[i][j], 2) * (deg[i] - 2)
            for i in range(n)
            if deg[i] > 2
            for j in range(n)
            if j != i
        )
        - 2 * y31
    )

    y95 = sum(
        choose(c[i][j], 2)
        * ((deg[i] - 3 if deg[i] > 3 else 0) + (deg[j] - 3 if deg[j] > 3 else 0))
        for i, j in edges
    )

    y117 = (
        exact_div(sum(t3[i] * (deg[j] - 1) + t3[j] * (deg[i] - 1) for i, j in edges), 2)
        - 6 * y7
        - 2 * y15
        - 4 * y31
    )

    acc119 = 0
    for i, j in edges:
        if deg[i] > 2 and deg[j] > 2 and c[i][j] >= 2:
            spokes = sum(deg[r] - 2 for r in _bits(adj[i] & adj[j]))
            acc119 += (c[i][j] - 1) * spokes
    y119 = acc119 - 12 * y63

    y222 = sum(
        choose(c[i][j], 3)
        for i in range(n)
        if deg[i] > 2
        for j in range(i + 1, n)
        if deg[j] > 2
    )

    y223 = sum(choose(c[i][j], 3) for i, j in edges if deg[i] > 3 and deg[j] > 3)

    y235 = (
        sum(choose(exact_div(t3[i], 2), 2) for i in range(n) if deg[i] > 2) - 2 * y31
    )

    # trace of the 5th power: one length-3 walk count per edge, doubled
    tr5 = 0
    for i, j in edges:
        ci, cj = c[i], c[j]
        tr5 += sum(x * y for x, y in zip(ci, cj))
    tr5 *= 2
    y236 = exact_div(tr5 - 30 * y7 - 10 * y15, 10)

    y237 = (
        sum(sum(c[r][j] for r in _bits(adj[i])) * c[i][j] for i, j in edges)
        - 9 * y7
        - 2 * y15
        - 4 * y31
    )

    acc254 = 0
    for i, j in edges:
        if deg[i] > 2 and deg[j] > 2:
            hubs = [r for r in _bits(adj[i] & adj[j]) if deg[r] > 2]
            for x in range(len(hubs)):
                cr = c[hubs[x]]
                for y in range(x + 1, len(hubs)):
                    acc254 += cr[hubs[y]] - 2
    y254 = acc254

    # shapes that are small graphlets inside a node's neighborhood subgraph
    y127 = y239 = y507 = 0
    acc255 = acc511 = acc1023 = 0
    for i in range(n):
        if deg[i] > 3:
            view = g.subgraph(_bits(adj[i]))
            vs = count_small_in(view)
            y127 += vs[7] * (deg[i] - 3)
            y239 += vs[13]
            y507 += vs[30]
            acc255 += vs[15]
            acc511 += vs[31]
            acc1023 += vs[63]
    y255 = exact_div(acc255, 2)
    y511 = exact_div(acc511, 3)
    y1023 = exact_div(acc1023, 5)

    return {
        75: y75, 77: y77, 79: y79, 86: y86, 87: y87, 94: y94, 95: y95,
        117: y117, 119: y119, 127: y127, 222: y222, 223: y223, 235: y235,
        236: y236, 237: y237, 239: y239, 254: y254, 255: y255, 507: y507,
        511: y511, 1023: y1023,
    }


def count_chevron_neighborhood(g: Graph) -> int:
    """Chevron count via 4-stars inside neighborhood subgraphs.

    Independent of the pairwise-common-neighbor route in count_five: a
    chevron is a 4-star in the shared neighborhood view of its two hubs,
    so summing 4-stars over all single-hub views counts each one twice.
    The star test must use degrees inside the view, not global ones.
    """
    acc = 0
    for i in range(g.n):
        if g.degrees[i] > 3:
            mask = g.adj[i]
            acc += sum(choose((g.adj[r] & mask).bit_count(), 3) for r in _bits(mask))
    return exact_div(acc, 2)


def five_path_formulation1(g: Graph) -> int:
    """5-path count from 4th-power walk sums with explicit corrections.

    This is the route count_five uses, written out independently. Always
    exact.
    """
    n, deg = g.n, g.degrees
    c = _walk2_table(g)
    t3 = _closed3(g, c)
    row2 = [sum(c[i]) for i in range(n)]
    s4_off = sum(r * r for r in row2) - sum(
        c[i][j] * c[i][j] for i in range(n) for j in range(n)
    )
    cross = sum(
        c[i][j] * (deg[j] - (1 if g.adjacent(i, j) else 0))
        for i in range(n)
        for j in range(n)
        if j != i
    )
    diag = sum((2 * deg[i] - 1) * t3[i] + 6 * choose(deg[i], 3) for i in range(n))
    return exact_div(s4_off - 2 * cross - diag, 2)


def five_path_formulation2(g: Graph) -> int:
    """5-path count from the full 4th-power sum, diagonal included.

    Exact only when the graph has no 4-stars and no tadpoles; the diagonal
    terms it keeps are otherwise overcorrected. Kept for comparison, not
    for use: it undercounts by three 4-stars plus two tadpoles.
    """
    c = _walk2_table(g)
    row2 = [sum(r) for r in c]
    s4_all = sum(r * r for r in row2)
    small = count_small(g)
    return (
        exact_div(s4_all, 2)
        - g.m
        - 4 * small[3]
        - 9 * small[7]
        - 6 * small[11]
        - 2 * small[13]
        - 4 * small[15]
        - 4 * small[30]
    )


def five_path_formulation3(g: Graph) -> int:
    """5-path count attempted from degree sums along edges.

    A simpler guess that subtracts too little: the degree sum only sees
    paths of length three, so longer paths are misweighted. On a plain
    path with n >= 5 nodes it returns 2n - 4 instead of n - 4. Kept as a
    negative control.
    """
    small = count_small(g)
    deg = g.degrees
    return (
        sum(deg[i] + deg[j] - 2 for i, j in g.edges())
        - 3 * small[7]
        - 2 * small[15]
        - 4 * small[30]
    )


def count_m7919_six(g: Graph) -> int:
    """Count of the 6-node graphlet with code 7919 (a house plus an apex).

    Each occurrence is a house inside the apex node's neighborhood view.
    """
    total = 0
    for i in range(g.n):
        if g.degrees[i] > 4:
            view = g.subgraph(_bits(g.adj[i]))
            total += count_five(view)[237]
    return total


def count_m1182_six(g: Graph) -> int:
    """Count of the 6-node graphlet with code 1182 (two tailed triangles
    sharing their tail ends).

    Built from pairs of nodes with at least two common neighbors and a
    spare edge at each end, then corrected for the diamonds, stingrays and
    ufos the raw product also matches.
    """
    n, deg = g.n, g.degrees
    c = _walk2_table(g)
    acc = 0
    for i in range(n):
        if deg[i] > 2:
            for j in range(i + 1, n):
                if deg[j] > 2:
                    acc += choose(c[i][j], 2) * (deg[i] - 2) * (deg[j] - 2)
    small = count_small(g)
    five = count_five(g)
    return acc - small[31] - five[95] - 3 * five[222]
