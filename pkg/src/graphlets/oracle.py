"""Brute-force ground truth for graphlet counts.

Counts are obtained by sweeping every node subset of the right size and
counting pattern embeddings directly, with automorphism groups computed
(never hardcoded) to convert embeddings into copies. The module shares
only the Graph type and the canonical code encoding with the rest of the
package; it never imports the closed-form counting modules it exists to
check.

Exhaustive sweeps explode combinatorially, so the entry points refuse
hosts beyond a small node budget instead of silently taking hours.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

from .graph import Graph, GraphletId, _pair_weights, canonical_code, edges_from_code

# Pattern codes by size, kept local on purpose (see module docstring).
_CODES_BY_SIZE = {
    3: (3, 7),
    4: (11, 13, 15, 30, 31, 63),
    5: (75, 77, 79, 86, 87, 94, 95, 117, 119, 127, 222, 223, 235, 236, 237,
        239, 254, 255, 507, 511, 1023),
    6: (1182, 7919),
}

# Hosts larger than this would make the subset sweep unreasonably slow.
_NODE_LIMIT = {3: 14, 4: 14, 5: 14, 6: 12}

GRAPHLET_NAMES = {
    3: "3-star", 7: "triangle",
    11: "4-star", 13: "4-path", 15: "tadpole", 30: "4-circle", 31: "diamond",
    63: "4-complete",
    75: "5-star", 77: "5-arrow", 79: "cricket", 86: "5-path", 87: "bull",
    94: "banner", 95: "stingray", 117: "lollipop", 119: "spinning top",
    127: "kite", 222: "ufo", 223: "chevron", 235: "hourglass",
    236: "5-circle", 237: "house", 239: "crown", 254: "envelope",
    255: "lamp", 507: "arrowhead", 511: "cat's cradle", 1023: "5-complete",
}


def reference_graph(b: int, a: int) -> Graph:
    """The labeled realization of a canonical code, verified on the way out."""
    g = Graph(b, edges_from_code(b, a))
    if not g.is_connected():
        raise ValueError(f"code {a} on {b} nodes is not a connected pattern")
    if canonical_code(b, a) != a:
        raise ValueError(f"code {a} on {b} nodes is not canonical")
    return g


CATALOG_IDS = tuple(
    GraphletId(b, a) for b in sorted(_CODES_BY_SIZE) for a in _CODES_BY_SIZE[b]
)

_CODE_TO_ID = {h.a: h for h in CATALOG_IDS}


def automorphism_count(h: Graph) -> int:
    """Order of the automorphism group, by checking every permutation."""
    if h.n > 8:
        raise ValueError(f"automorphism check on {h.n} nodes would be too slow")
    edges = h.edges()
    total = 0
    for perm in permutations(range(h.n)):
        if all(h.adjacent(perm[u], perm[v]) for u, v in edges):
            # a bijection mapping all m edges onto edges hits all m of them
            total += 1
    return total


@lru_cache(maxsize=None)
def _automorphisms(b: int, a: int) -> int:
    return automorphism_count(reference_graph(b, a))


@lru_cache(maxsize=None)
def _placement_order(b: int, a: int):
    """Per pattern node, its pattern neighbors among earlier nodes."""
    adj = [set() for _ in range(b)]
    for u, v in edges_from_code(b, a):
        adj[u].add(v)
        adj[v].add(u)
    return tuple(tuple(q for q in sorted(adj[p]) if q < p) for p in range(b))


@lru_cache(maxsize=None)
def _embeddings(b: int, code: int, a: int) -> int:
    """Injective maps of pattern a onto a b-node host given by its raw code."""
    host = [[False] * b for _ in range(b)]
    for i, j, w in _pair_weights(b):
        if code & w:
            host[i][j] = host[j][i] = True
    earlier = _placement_order(b, a)
    assign = [0] * b
    used = [False] * b
    found = 0

    def place(p: int) -> None:
        nonlocal found
        if p == b:
            found += 1
            return
        for cand in range(b):
            if not used[cand] and all(host[cand][assign[q]] for q in earlier[p]):
                used[cand] = True
                assign[p] = cand
                place(p + 1)
                used[cand] = False

    place(0)
    return found


def _resolve(h) -> GraphletId:
    if isinstance(h, GraphletId):
        key = h.a
    elif isinstance(h, tuple) and len(h) == 2:
        key = h[1]
    elif isinstance(h, int):
        key = h
    else:
        raise ValueError(f"cannot interpret {h!r} as a graphlet id")
    ident = _CODE_TO_ID.get(key)
    if ident is None or (isinstance(h, tuple) and h[0] != ident.b):
        raise ValueError(f"{h!r} is not in the pattern catalog")
    return ident


def _require_small(g: Graph, b: int) -> None:
    limit = _NODE_LIMIT[b]
    if g.n > limit:
        raise ValueError(
            f"refusing exhaustive {b}-node sweep over {g.n} nodes (limit {limit})"
        )


def oracle_noninduced_many(g: Graph, patterns) -> dict:
    """Non-induced counts for several patterns, one subset sweep per size.

    Returns:
        dict keyed by canonical code (codes are unique across sizes).
    """
    wanted = [_resolve(h) for h in patterns]
    out = {}
    for b in sorted({h.b for h in wanted}):
        _require_small(g, b)
        group = [h.a for h in wanted if h.b == b]
        weights = _pair_weights(b)
        adj = g.adj
        totals = dict.fromkeys(group, 0)
        for subset in combinations(range(g.n), b):
            code = 0
            for i, j, w in weights:
                if (adj[subset[i]] >> subset[j]) & 1:
                    code |= w
            if code:
                for a in group:
                    totals[a] += _embeddings(b, code, a)
        for a in group:
            q, r = divmod(totals[a], _automorphisms(b, a))
            assert r == 0, f"embedding total for code {a} not divisible by its symmetries"
            out[a] = q
    return out


def oracle_noninduced(g: Graph, h) -> int:
    """Non-induced count of one pattern by exhaustive subset sweep."""
    ident = _resolve(h)
    return oracle_noninduced_many(g, (ident,))[ident.a]


@lru_cache(maxsize=None)
def _connected_class5(code: int):
    """Canonical code of a raw 5-node code, or None if disconnected."""
    masks = [0] * 5
    for i, j, w in _pair_weights(5):
        if code & w:
            masks[i] |= 1 << j
            masks[j] |= 1 << i
    seen = 1
    frontier = masks[0]
    while frontier:
        nxt = 0
        for v in range(5):
            if (frontier >> v) & 1 and not (seen >> v) & 1:
                seen |= 1 << v
                nxt |= masks[v]
        frontier = nxt & ~seen
    if seen != 0b11111:
        return None
    return canonical_code(5, code)


def oracle_induced(g: Graph) -> dict:
    """Induced counts of all 21 connected five-node graphlets.

    Classifies every 5-subset by its canonical code; no arithmetic shared
    with the non-induced oracle beyond the sweep itself.
    """
    _require_small(g, 5)
    counts = dict.fromkeys(_CODES_BY_SIZE[5], 0)
    weights = _pair_weights(5)
    adj = g.adj
    for subset in combinations(range(g.n), 5):
        code = 0
        for i, j, w in weights:
            if (adj[subset[i]] >> subset[j]) & 1:
                code |= w
        label = _connected_class5(code)
        if label is not None:
            counts[label] += 1
    return counts
