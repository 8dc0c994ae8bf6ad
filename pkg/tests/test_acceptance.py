"""Acceptance gate: every release-blocking check, one verdict line each.

Run with plain `pytest -v tests/test_acceptance.py`; each test prints a
single [PASS]/[FAIL] line (visible even without -s) and then asserts.
"""

import json
import math
import random

from graphlets import cli, families
from graphlets.fivecounts import (
    FIVE_IDS,
    count_five,
    count_m1182_six,
    count_m7919_six,
    five_path_formulation1,
    five_path_formulation3,
)
from graphlets.graph import format_edge_list, walk_table
from graphlets.induced import (
    inclusion_matrix,
    induced_explicit,
    induced_from_noninduced,
)
from graphlets.oracle import (
    oracle_induced,
    oracle_noninduced_many,
    reference_graph,
)
from graphlets.smallcounts import SMALL_IDS, count_small


def _verdict(capsys, ok, label):
    with capsys.disabled():
        print(f"[{'PASS' if ok else 'FAIL'}] {label}")
    assert ok, label


def test_criterion_1_closed_forms_match_oracle(corpus, capsys):
    bad = []
    for name, g in corpus:
        got = {**count_small(g), **count_five(g)}
        if got != oracle_noninduced_many(g, SMALL_IDS + FIVE_IDS):
            bad.append(name)
    ok = len(corpus) >= 200 and not bad
    _verdict(
        capsys, ok,
        f"criterion 1: all 29 closed-form counts equal the oracle exactly on "
        f"{len(corpus)} corpus graphs (mismatches: {bad[:3] or 'none'})",
    )


def test_criterion_2_induced_routes_agree(corpus, capsys):
    bad = [
        name
        for name, g in corpus
        if induced_from_noninduced(count_five(g)) != oracle_induced(g)
    ]
    rng = random.Random(19)
    vector_bad = sum(
        1
        for _ in range(1000)
        if (lambda v: induced_explicit(v) != induced_from_noninduced(v))(
            [rng.randrange(-(10**6), 10**6) for _ in range(21)]
        )
    )
    ok = not bad and vector_bad == 0
    _verdict(
        capsys, ok,
        f"criterion 2: induced pipeline equals induced oracle on {len(corpus)} "
        f"graphs and both induced routes agree on 1000 random vectors "
        f"(graph mismatches: {bad[:3] or 'none'}, vector mismatches: {vector_bad})",
    )


def test_criterion_3_inclusion_matrix_regenerated(capsys):
    rows = inclusion_matrix()
    bad = []
    for col, host_code in enumerate(FIVE_IDS):
        host = reference_graph(5, host_code)
        counts = oracle_noninduced_many(host, FIVE_IDS)
        for row, pat_code in enumerate(FIVE_IDS):
            want = 1 if row == col else rows[row][col]
            if counts[pat_code] != want:
                bad.append((pat_code, host_code, counts[pat_code], want))
    _verdict(
        capsys, not bad,
        f"criterion 3: oracle regenerates all 441 inclusion-matrix entries "
        f"(bad: {bad[:3] or 'none'})",
    )


def test_criterion_4_analytic_reference_values(corpus, capsys):
    problems = []

    pair = families.complete_walks(20, 4)
    wt = walk_table(families.complete(20), 4)
    if not (pair == (6517, 6516) and wt.entries[0][0] == 6517 and wt.entries[0][1] == 6516):
        problems.append("complete-graph walks")

    for n in range(5, 11):
        if not (
            families.five_paths_complete(n)
            == count_five(families.complete(n))[86]
            == 60 * math.comb(n, 5)
        ):
            problems.append(f"5-paths in complete {n}")

    bulls_graph = count_five(families.n_partite([3] * 5))[87]
    if not (families.bulls_balanced_npartite(5, 3) == bulls_graph == 74520):
        problems.append("bulls 5x3")

    tops_graph = count_five(families.ring_lattice(29, 10))[119]
    if not (families.spinning_tops_ring_lattice(29, 10) == tops_graph == 912108):
        problems.append("spinning tops 29/10")
    for n in range(21, 41):
        if families.spinning_tops_ring_lattice(n, 10) != count_five(
            families.ring_lattice(n, 10)
        )[119]:
            problems.append(f"spinning tops {n}/10")

    for n in range(5, 51):
        g = families.path(n)
        y86 = count_five(g)[86]
        if not (y86 == five_path_formulation1(g) == n - 4):
            problems.append(f"path {n} count")
        if five_path_formulation3(g) != 2 * n - 4:
            problems.append(f"path {n} naive formulation")

    for name, g in corpus:
        y = count_five(g)
        small = count_small(g)
        entries = walk_table(g, 5).entries
        trace = sum(entries[i][i] for i in range(g.n))
        if trace != 30 * small[7] + 10 * small[15] + 10 * y[236]:
            problems.append(f"walk trace on {name}")

    _verdict(
        capsys, not problems,
        f"criterion 4: analytic family values and walk identities all hold "
        f"(problems: {problems[:3] or 'none'})",
    )


def test_criterion_5_null_model_consistency(tmp_path, capsys):
    g = families.erdos_renyi(60, 0.5, 4242)
    report = cli.run_null_compare(g, replicates=200, seed=20260819)
    off = {}
    for a in FIVE_IDS:
        ratio = float(report["null_model"]["slots"][f"M{a}_5"]["ratio"])
        if not abs(ratio - 1.0) <= 0.25:
            off[a] = ratio

    path = tmp_path / "g.txt"
    path.write_text(format_edge_list(families.erdos_renyi(24, 0.4, 11)))
    outs = []
    for _ in range(2):
        assert cli.main(["compare", str(path), "--replicates", "8", "--seed", "7"]) == 0
        outs.append(capsys.readouterr().out)
    deterministic = outs[0] == outs[1] and json.loads(outs[0])["null_model"]["replicates"] == 8

    ok = not off and deterministic
    _verdict(
        capsys, ok,
        f"criterion 5: all 21 null-model ratios within 25% of 1 at R=200 on a "
        f"60-node graph and compare output is byte-deterministic "
        f"(off: {off or 'none'}, deterministic: {deterministic})",
    )


def test_criterion_6_six_node_counts(corpus, capsys):
    bad = []
    checked = 0
    for name, g in corpus:
        if g.n <= 10:
            checked += 1
            want = oracle_noninduced_many(g, (1182, 7919))
            if (count_m1182_six(g), count_m7919_six(g)) != (want[1182], want[7919]):
                bad.append(name)
    ok = checked >= 100 and not bad
    _verdict(
        capsys, ok,
        f"criterion 6: both six-node closed forms equal the oracle on "
        f"{checked} corpus graphs (mismatches: {bad[:3] or 'none'})",
    )
