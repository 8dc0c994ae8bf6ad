import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import PROPERTY_SETTINGS, graph_strategy
from graphlets import families
from graphlets.fivecounts import FIVE_IDS, count_five
from graphlets.induced import (
    inclusion_matrix,
    induced_explicit,
    induced_from_noninduced,
    noninduced_from_induced,
)
from graphlets.oracle import oracle_induced

_vectors = st.lists(
    st.integers(min_value=-(10**9), max_value=10**9), min_size=21, max_size=21
)


def test_matrix_shape_and_triangularity():
    rows = inclusion_matrix()
    assert len(rows) == 21
    assert all(len(r) == 21 for r in rows)
    for i in range(21):
        assert all(rows[i][j] == 0 for j in range(i + 1)), f"row {i} not strict"
    # denser graphlets hold more copies: the complete-graph column is the
    # largest entry of every row except its own
    for i in range(20):
        assert rows[i][20] == max(rows[i])


def test_known_complete_graph_pivot():
    y = count_five(families.complete(6))
    t = induced_from_noninduced(y)
    assert t[1023] == 6
    assert all(t[a] == 0 for a in FIVE_IDS if a != 1023)


def test_cycle_is_its_own_induced_class():
    t = induced_from_noninduced(count_five(families.cycle(5)))
    assert t[236] == 1
    assert sum(map(abs, t.values())) == 1


@given(_vectors)
@PROPERTY_SETTINGS
def test_explicit_equals_back_substitution(vec):
    assert induced_explicit(vec) == induced_from_noninduced(vec)


@given(_vectors)
@PROPERTY_SETTINGS
def test_round_trips_are_identities(vec):
    t = induced_from_noninduced(vec)
    assert list(noninduced_from_induced(t).values()) == vec
    y = noninduced_from_induced(vec)
    assert list(induced_from_noninduced(y).values()) == vec


def test_large_random_vector_sweep():
    rng = random.Random(20260819)
    for _ in range(300):
        vec = [rng.randrange(-(10**6), 10**6) for _ in range(21)]
        assert induced_explicit(vec) == induced_from_noninduced(vec)


@given(graph_strategy(min_nodes=5, max_nodes=9))
@PROPERTY_SETTINGS
def test_pipeline_matches_induced_oracle(g):
    assert induced_from_noninduced(count_five(g)) == oracle_induced(g)


def test_accepts_dicts_and_sequences():
    y = count_five(families.complete(5))
    as_list = [y[a] for a in FIVE_IDS]
    assert induced_from_noninduced(y) == induced_from_noninduced(as_list)


def test_rejects_malformed_vectors():
    with pytest.raises(ValueError, match="21"):
        induced_from_noninduced([1, 2, 3])
    bad = dict.fromkeys(FIVE_IDS, 0)
    del bad[86]
    with pytest.raises(ValueError, match="missing"):
        induced_from_noninduced(bad)
