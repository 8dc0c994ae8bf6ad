"""Constructors for standard graph families and closed-form counts on them.

The analytic functions return exact integers for specific families without
building any graph, which makes them useful as an independent check on the
general counting code (and vice versa).
"""

from __future__ import annotations

import math
import random
import warnings
from typing import NamedTuple, Sequence

from .graph import Graph


class WalkPair(NamedTuple):
    closed: int
    distinct: int


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    if n < 1:
        raise ValueError("star needs n >= 1")
    return Graph(n, [(0, i) for i in range(1, n)])


def n_partite(sizes: Sequence[int]) -> Graph:
    """Complete multipartite graph; edges join nodes of different groups."""
    sizes = list(sizes)
    if not sizes or any(s < 1 for s in sizes):
        raise ValueError("group sizes must be positive")
    bounds = [0]
    for s in sizes:
        bounds.append(bounds[-1] + s)
    n = bounds[-1]
    edges = []
    for a in range(len(sizes)):
        for b in range(a + 1, len(sizes)):
            for u in range(bounds[a], bounds[a + 1]):
                for v in range(bounds[b], bounds[b + 1]):
                    edges.append((u, v))
    return Graph(n, edges)


def ring_lattice(n: int, k: int) -> Graph:
    """Circulant graph joining each node to its k nearest on either side."""
    if k < 1 or n <= 2 * k:
        raise ValueError("ring lattice needs k >= 1 and n > 2k")
    return Graph(n, [(i, (i + d) % n) for i in range(n) for d in range(1, k + 1)])


def erdos_renyi(n: int, p: float, seed: int) -> Graph:
    """G(n, p) with one coin flip per node pair in lexicographic order.

    The pair order is part of the contract: the same (n, p, seed) always
    yields the same graph.
    """
    if n < 0:
        raise ValueError("node count must be nonnegative")
    if not 0.0 <= p <= 1.0:
        raise ValueError("edge probability must be in [0, 1]")
    rng = random.Random(seed)
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)


def complete_walks(n: int, k: int) -> WalkPair:
    """Exact k-step walk counts in the complete graph on n nodes.

    Returns the count returning to the start node and the count between
    two fixed distinct nodes. Both are exact integers for any k.
    """
    if n < 2 or k < 1:
        raise ValueError("needs n >= 2 and k >= 1")
    sign = -1 if k % 2 == 0 else 1
    distinct, rem = divmod((n - 1) ** k + sign, n)
    assert rem == 0
    return WalkPair(closed=distinct - sign, distinct=distinct)


def five_paths_complete(n: int) -> int:
    """Non-induced 5-path count in the complete graph on n nodes."""
    if n < 0:
        raise ValueError("node count must be nonnegative")
    return 60 * math.comb(n, 5)


def bulls_balanced_npartite(groups: int, size: int) -> int:
    """Non-induced bull count in the balanced complete multipartite graph.

    The closed form assumes each node keeps at least three non-neighbors'
    worth of outside degree; tiny cases violating that still return the
    formula value (zero in practice) but raise a warning.
    """
    if groups < 1 or size < 1:
        raise ValueError("needs at least one group of positive size")
    if groups * size - size <= 2:
        warnings.warn(
            "closed form derived for larger graphs; value may be degenerate",
            stacklevel=2,
        )
    out = (groups - 1) * size
    return 3 * math.comb(groups, 3) * size**3 * ((out - 2) * (out - 3) + size - 1)


def spinning_tops_ring_lattice(n: int, k: int) -> int:
    """Non-induced spinning-top count in the ring lattice on n nodes.

    Two regimes: once n exceeds 3k the opposite arcs of the ring stop
    interacting and the count grows linearly in n; below that a boundary
    correction in (3k - n) applies.
    """
    if k < 1 or n <= 2 * k:
        raise ValueError("ring lattice needs k >= 1 and n > 2k")
    base = (7 * (k - 1) * (k - 2) + 3) * k * (k - 1)
    if n >= 3 * k + 1:
        total = 2 * n * base
    else:
        overlap = (
            (3 * k - n + 1)
            * (3 * k - n + 2)
            * (9 * k * k - (2 * n + 21) * k + 5 * n + 3)
        )
        total = 2 * n * (overlap + base)
    q, r = divmod(total, 3)
    assert r == 0
    return q
