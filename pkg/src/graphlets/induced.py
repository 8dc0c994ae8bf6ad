"""Conversions between non-induced and induced five-node counts.

A non-induced count overshoots its induced counterpart by copies hiding
inside denser graphlets. The inclusion matrix records, for each ordered
pair of graphlets, how many copies of the sparser one live inside the
denser one; inverting that relation (it is unitriangular, so plain back
substitution works) turns non-induced counts into induced ones.

Two independent routes are provided on purpose: the back substitution
against the inclusion matrix, and hand-expanded linear combinations. They
must agree on every input, and the tests hold them to that.
"""

from __future__ import annotations

from .fivecounts import FIVE_IDS

# Inclusion matrix rows/columns follow FIVE_IDS order. Entry [i][j] is the
# number of copies of graphlet i inside one copy of graphlet j; the matrix
# is strictly upper triangular because copies only hide in graphlets with
# at least as many edges.
_A_ROWS = (
    (0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 2, 1, 0, 0, 1, 0, 2, 1, 3, 5),
    (0, 0, 2, 0, 2, 2, 5, 1, 4, 9, 6, 12, 4, 0, 4, 10, 10, 20, 20, 36, 60),
    (0, 0, 0, 0, 0, 0, 2, 0, 0, 3, 0, 6, 2, 0, 0, 3, 0, 8, 4, 15, 30),
    (0, 0, 0, 0, 1, 2, 2, 2, 4, 6, 6, 6, 4, 5, 7, 10, 14, 18, 24, 36, 60),
    (0, 0, 0, 0, 0, 0, 2, 0, 2, 6, 0, 6, 0, 0, 1, 5, 4, 14, 12, 30, 60),
    (0, 0, 0, 0, 0, 0, 1, 0, 1, 3, 6, 6, 0, 0, 2, 4, 8, 12, 16, 30, 60),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 3, 0, 6, 0, 0, 0, 2, 0, 10, 4, 24, 60),
    (0, 0, 0, 0, 0, 0, 0, 0, 2, 3, 0, 0, 4, 0, 2, 6, 6, 12, 16, 30, 60),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 3, 0, 0, 0, 0, 0, 2, 2, 8, 8, 24, 60),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 6, 20),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 2, 4, 10),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 3, 10),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 2, 2, 6, 15),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 2, 2, 4, 6, 12),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 4, 6, 12, 24, 60),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 4, 18, 60),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 4, 9, 30),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 6, 30),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3, 15),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 10),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
)

# Same relation, hand-expanded: each induced count as a direct linear
# combination of non-induced ones. Redundant with the back substitution by
# construction, which is exactly why both are kept.
_EXPLICIT = {
    75: ((75, 1), (79, -1), (95, 1), (127, -1), (223, -2), (235, 1), (239, -1),
         (255, 2), (507, 1), (511, -3), (1023, 5)),
    77: ((77, 1), (79, -2), (87, -2), (94, -2), (95, 5), (117, -1), (119, 4),
         (127, -9), (222, 6), (223, -12), (235, 4), (237, 4), (239, -10),
         (254, -10), (255, 20), (507, 20), (511, -36), (1023, 60)),
    79: ((79, 1), (95, -2), (127, 3), (223, 6), (235, -2), (239, 3), (255, -8),
         (507, -4), (511, 15), (1023, -30)),
    86: ((86, 1), (87, -1), (94, -2), (95, 2), (117, -2), (119, 4), (127, -6),
         (222, 6), (223, -6), (235, 4), (236, -5), (237, 7), (239, -10),
         (254, -14), (255, 18), (507, 24), (511, -36), (1023, 60)),
    87: ((87, 1), (95, -2), (119, -2), (127, 6), (223, 6), (237, -1), (239, 5),
         (254, 4), (255, -14), (507, -12), (511, 30), (1023, -60)),
    94: ((94, 1), (95, -1), (119, -1), (127, 3), (222, -6), (223, 6), (237, -2),
         (239, 4), (254, 8), (255, -12), (507, -16), (511, 30), (1023, -60)),
    95: ((95, 1), (127, -3), (223, -6), (239, -2), (255, 10), (507, 4),
         (511, -24), (1023, 60)),
    117: ((117, 1), (119, -2), (127, 3), (235, -4), (237, -2), (239, 6),
          (254, 6), (255, -12), (507, -16), (511, 30), (1023, -60)),
    119: ((119, 1), (127, -3), (239, -2), (254, -2), (255, 8), (507, 8),
          (511, -24), (1023, 60)),
    127: ((127, 1), (255, -2), (511, 6), (1023, -20)),
    222: ((222, 1), (223, -1), (254, -1), (255, 1), (507, 2), (511, -4),
          (1023, 10)),
    223: ((223, 1), (255, -1), (511, 3), (1023, -10)),
    235: ((235, 1), (239, -1), (255, 2), (507, 2), (511, -6), (1023, 15)),
    236: ((236, 1), (237, -1), (239, 1), (254, 2), (255, -2), (507, -4),
          (511, 6), (1023, -12)),
    237: ((237, 1), (239, -2), (254, -4), (255, 6), (507, 12), (511, -24),
          (1023, 60)),
    239: ((239, 1), (255, -4), (507, -4), (511, 18), (1023, -60)),
    254: ((254, 1), (255, -1), (507, -4), (511, 9), (1023, -30)),
    255: ((255, 1), (511, -6), (1023, 30)),
    507: ((507, 1), (511, -3), (1023, 15)),
    511: ((511, 1), (1023, -10)),
    1023: ((1023, 1),),
}


def inclusion_matrix():
    """The 21x21 copies-inside matrix, rows and columns in FIVE_IDS order."""
    return _A_ROWS


def _as_vector(counts) -> list:
    """Accept a dict keyed by graphlet code or a length-21 sequence."""
    if isinstance(counts, dict):
        missing = [a for a in FIVE_IDS if a not in counts]
        if missing:
            raise ValueError(f"count vector is missing codes {missing}")
        return [counts[a] for a in FIVE_IDS]
    vec = list(counts)
    if len(vec) != len(FIVE_IDS):
        raise ValueError(f"expected 21 counts, got {len(vec)}")
    return vec


def induced_from_noninduced(counts) -> dict:
    """Induced counts by back substitution against the inclusion matrix."""
    y = _as_vector(counts)
    k = len(FIVE_IDS)
    t = [0] * k
    for i in range(k - 1, -1, -1):
        row = _A_ROWS[i]
        t[i] = y[i] - sum(row[j] * t[j] for j in range(i + 1, k))
    return dict(zip(FIVE_IDS, t))


def induced_explicit(counts) -> dict:
    """Induced counts from the hand-expanded linear combinations."""
    y = dict(zip(FIVE_IDS, _as_vector(counts)))
    return {
        a: sum(coeff * y[code] for code, coeff in terms)
        for a, terms in _EXPLICIT.items()
    }


def noninduced_from_induced(counts) -> dict:
    """The forward direction: non-induced counts from induced ones."""
    t = _as_vector(counts)
    k = len(FIVE_IDS)
    y = [t[i] + sum(_A_ROWS[i][j] * t[j] for j in range(i + 1, k)) for i in range(k)]
    return dict(zip(FIVE_IDS, y))
