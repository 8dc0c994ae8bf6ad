import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from graphlets import families
from graphlets.graph import Graph

PROPERTY_SETTINGS = settings(
    max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)


def _graph_from_mask(args):
    n, mask = args
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return Graph(n, [pr for b, pr in enumerate(pairs) if (mask >> b) & 1])


def graph_strategy(min_nodes=2, max_nodes=9):
    """Arbitrary simple graphs, edges drawn as one bitmask per size."""
    return (
        st.integers(min_nodes, max_nodes)
        .flatmap(lambda n: st.tuples(st.just(n), st.integers(0, 2 ** (n * (n - 1) // 2) - 1)))
        .map(_graph_from_mask)
    )


def build_corpus():
    """The fixed verification corpus: random graphs plus structured families."""
    graphs = []
    for n in range(5, 13):
        for p in (0.15, 0.3, 0.5, 0.8):
            for seed in range(1, 7):
                graphs.append((f"er-{n}-{p}-{seed}", families.erdos_renyi(n, p, seed)))
    for n in range(5, 13):
        graphs.append((f"path-{n}", families.path(n)))
        graphs.append((f"cycle-{n}", families.cycle(n)))
        graphs.append((f"star-{n}", families.star(n)))
    for n in range(5, 10):
        graphs.append((f"complete-{n}", families.complete(n)))
    for n, k in ((7, 2), (9, 3), (11, 4), (12, 5), (11, 2), (12, 3)):
        graphs.append((f"ring-{n}-{k}", families.ring_lattice(n, k)))
    for groups, size in ((2, 3), (3, 2), (2, 4), (3, 3), (4, 2),
                         (2, 5), (5, 2), (3, 4), (4, 3), (6, 2)):
        graphs.append((f"npartite-{groups}x{size}", families.n_partite([size] * groups)))
    return graphs


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()
