#!/usr/bin/env python3
"""Regression tests for the reverse-edge cut-set bound."""
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

import networkx as nx
import numpy as np
import pytest

from core.bound import (
    annotate_k_b,
    best_bound,
    cut_bound,
    default_field_size,
    edge_signals,
    signals_of,
    stacked_pattern,
    uniform_bound,
)
from core.errors import NotACutEdge, ZTooLarge
from core.field import mat_rank
from core.network import (
    Edge,
    ExplicitWiretap,
    Network,
    UniformWiretap,
    build_upper_bounding_network,
    canonical_cut,
    cut_for_nodes,
    enumerate_cuts,
    load_fixture,
    restrict_wiretap_sets,
)


def _random_network(rng, max_nodes, acyclic=False, edge_prob=0.35):
    n = int(rng.integers(2, max_nodes + 1))
    names = ["S"] + [f"v{i}" for i in range(1, n - 1)] + ["D"]
    order = list(range(n))
    edges = []
    for u in order:
        for v in order:
            if u == v or (acyclic and u >= v):
                continue
            for _ in range(int(rng.integers(0, 2)) + (1 if rng.random() < edge_prob / 3 else 0)):
                if rng.random() < edge_prob:
                    edges.append(Edge(f"e{len(edges) + 1}", names[u], names[v]))
    return Network(tuple(names), tuple(edges), "S", "D", frozenset(names))


def _max_flow(net):
    graph = nx.DiGraph()
    graph.add_nodes_from(net.nodes)
    for edge in net.edges:
        if graph.has_edge(edge.tail, edge.head):
            graph[edge.tail][edge.head]["capacity"] += 1
        else:
            graph.add_edge(edge.tail, edge.head, capacity=1)
    return nx.maximum_flow_value(graph, net.source, net.sink)


def test_stacked_pattern_layout():
    net, _ = load_fixture("keyed2")
    cut = cut_for_nodes(net, ["S"])
    pattern = stacked_pattern(cut)
    assert pattern.labels == ("e1", "e2", "e4")
    assert pattern.tolist() == [[1], [1], [1]]

    net, _ = load_fixture("line4")
    pattern = stacked_pattern(cut_for_nodes(net, ["S", "A"]))
    assert pattern.bits.shape == (1, 0)


def test_edge_signals():
    net = Network(
        nodes=("S", "A", "B", "C", "D"),
        edges=(
            Edge("f1", "S", "D"),
            Edge("f2", "B", "D"),
            Edge("b1", "D", "S"),
            Edge("b2", "D", "A"),
            Edge("b3", "D", "B"),
            Edge("i1", "A", "S"),
            Edge("x1", "C", "D"),
        ),
        source="S",
        sink="D",
    )
    cut = cut_for_nodes(net, ["S", "A", "B"])
    assert cut.connectivity.tolist() == [[1, 1, 0], [0, 0, 1]]
    assert edge_signals(cut, "b2") == {1}
    assert edge_signals(cut, "f1") == {0, 1}
    assert signals_of(cut, ["f2", "b1"]) == {0, 2}
    with pytest.raises(NotACutEdge):
        edge_signals(cut, "i1")

    zero_row = cut_for_nodes(load_fixture("deadend")[0], ["S", "A"])
    assert edge_signals(zero_row, "e1") == frozenset()


def test_feedback_cut_bound():
    net, model = load_fixture("feedback")
    cut = cut_for_nodes(net, ["S"])
    report = cut_bound(cut, restrict_wiretap_sets(model, cut), q=5, seed=0)
    assert [(r.edges, r.rank, r.slack) for r in report.records] == [(["e1"], 1, 0), (["e3"], 1, 0)]
    assert report.bound == 1
    assert all(record.certificate.verified for record in report.records)
    assert all(value != 0 for row in report.cbar for value in row)


def test_deadend_cut_bound():
    net, model = load_fixture("deadend")
    cut = cut_for_nodes(net, ["S", "A"])
    report = cut_bound(cut, restrict_wiretap_sets(model, cut), q=5, seed=0)
    assert report.records[0].slack == -1
    assert report.bound == 0


def test_no_wiretap_sets_gives_x():
    net, _ = load_fixture("keyed2")
    cut = cut_for_nodes(net, ["S"])
    report = cut_bound(cut, [], q=7)
    assert report.bound == cut.x == 2
    assert report.records == []


def test_uniform_bound_examples():
    net, _ = load_fixture("feedback")
    cut = cut_for_nodes(net, ["S"])
    assert uniform_bound(cut, 0, q=7).bound == cut.x
    assert uniform_bound(cut, 0, q=7).k_b == 0
    report = uniform_bound(cut, 1, q=7)
    assert report.k_b == 1 and report.bound == 1

    net, _ = load_fixture("deadend")
    cut = cut_for_nodes(net, ["S", "A"])
    report = uniform_bound(cut, 1, q=7)
    assert report.k_b == 0
    assert report.k_b_rows == ["e1"]
    assert report.bound == cut.x - 1

    with pytest.raises(ZTooLarge):
        uniform_bound(cut, 3)


def test_fixture_best_bounds():
    expected = {"feedback": 1, "deadend": 0, "twonode": 0, "line4": 0, "keyed2": 1}
    for name, value in expected.items():
        net, model = load_fixture(name)
        result = best_bound(net, model, seed=3)
        assert result.value == value, name
    net, model = load_fixture("feedback")
    result = best_bound(net, model)
    assert result.argmin.mask == 0
    assert [summary.bound for summary in result.cuts] == [1, 1]
    net, model = load_fixture("deadend")
    assert best_bound(net, model).argmin.cut == ["S", "A"]


def test_best_bound_reports_k_b_for_uniform_models():
    expected = {"feedback": (1, ["e1"]), "keyed2": (1, ["e1", "e2"]), "deadend": (0, ["e1"])}
    for name, (k_b, rows) in expected.items():
        net, model = load_fixture(name)
        argmin = best_bound(net, model).argmin
        assert (argmin.k_b, argmin.k_b_rows) == (k_b, rows), name
        assert argmin.raw_bound == argmin.x + argmin.k_b - model.z

    net, _ = load_fixture("keyed2")
    argmin = best_bound(net, ExplicitWiretap((("e1",), ("e4",)))).argmin
    assert argmin.k_b is None and argmin.k_b_rows is None


def test_annotate_k_b_without_wiretapper():
    net, _ = load_fixture("keyed2")
    cut = cut_for_nodes(net, ["S"])
    report = annotate_k_b(cut_bound(cut, [], q=7), 0)
    assert (report.k_b, report.k_b_rows) == (0, [])


def test_bound_does_not_depend_on_seed_or_field():
    net, model = load_fixture("keyed2")
    values = {best_bound(net, model, q=q, seed=seed).value for q in (101, 1009) for seed in range(3)}
    assert values == {1}


def test_default_field_size_clears_both_thresholds():
    net, model = load_fixture("keyed2")
    cut = cut_for_nodes(net, ["S"])
    sets = restrict_wiretap_sets(model, cut)
    q = default_field_size(cut, sets)
    assert q > (len(sets) + 1) * 3 * 1
    assert q > len(sets) * 1 * 3


def test_without_useful_backward_edges_bound_is_mincut_minus_z():
    rng = np.random.default_rng(8)
    checked = 0
    attempts = 0
    while checked < 50 and attempts < 2000:
        attempts += 1
        net = _random_network(rng, 8, acyclic=True)
        cuts = enumerate_cuts(net)
        if any(cut.connectivity.any() for cut in cuts):
            continue
        z = int(rng.integers(0, 3))
        result = best_bound(net, UniformWiretap(z), seed=checked)
        assert result.value == max(0, _max_flow(net) - z)
        checked += 1
    assert checked == 50


def _assert_uniform_matches_general(cut, z, seed):
    general = cut_bound(cut, restrict_wiretap_sets(UniformWiretap(z), cut), seed=seed, certificates=False)
    uniform = uniform_bound(cut, z, seed=seed)
    assert general.raw_bound == uniform.raw_bound
    assert uniform.raw_bound == cut.x + uniform.k_b - z


def test_uniform_bound_matches_cut_bound_on_fixtures():
    for name in ("feedback", "deadend", "twonode", "line4", "keyed2"):
        net, model = load_fixture(name)
        assert isinstance(model, UniformWiretap)
        for cut in enumerate_cuts(net):
            if model.z <= cut.x + cut.y:
                _assert_uniform_matches_general(cut, model.z, seed=cut.mask)


def test_uniform_bound_matches_cut_bound():
    rng = np.random.default_rng(21)
    for trial in range(200):
        net = _random_network(rng, 8)
        z = int(rng.integers(0, 3))
        cuts = enumerate_cuts(net)
        for index in rng.choice(len(cuts), size=min(3, len(cuts)), replace=False):
            cut = cuts[int(index)]
            if z <= cut.x + cut.y:
                _assert_uniform_matches_general(cut, z, seed=trial)


def test_enlarging_a_wiretap_set_never_raises_the_bound():
    rng = np.random.default_rng(99)
    for trial in range(30):
        net = _random_network(rng, 5)
        if len(net.edges) < 2:
            continue
        ids = [edge.id for edge in net.edges]
        base = [tuple(rng.choice(ids, size=1).tolist()) for _ in range(2)]
        extra = str(rng.choice(ids))
        larger = [base[0] + (extra,)] + base[1:]
        before = best_bound(net, ExplicitWiretap(tuple(base)), seed=trial).raw
        after = best_bound(net, ExplicitWiretap(tuple(larger)), seed=trial).raw
        assert after <= before


def test_bound_is_unchanged_on_upper_bounding_network():
    for name in ("feedback", "deadend", "keyed2"):
        net, model = load_fixture(name)
        for cut in enumerate_cuts(net):
            original = cut_bound(cut, restrict_wiretap_sets(model, cut), q=101)
            again = canonical_cut(build_upper_bounding_network(net, cut))
            rebuilt = cut_bound(again, restrict_wiretap_sets(model, again), q=101)
            assert rebuilt.raw_bound == original.raw_bound


def test_certified_ranks_match_instantiated_matrix():
    net, model = load_fixture("keyed2")
    cut = cut_for_nodes(net, ["S"])
    report = cut_bound(cut, restrict_wiretap_sets(model, cut), seed=5)
    cbar = report.rankmax.matrix
    for record in report.records:
        assert mat_rank(cbar.take_rows(record.rows)) == record.rank
    assert mat_rank(cbar.take_rows(range(cut.x, cut.x + cut.y))) == cut.y


if __name__ == "__main__":
    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
            except Exception as exc:  # noqa: BLE001
                failed += 1
                print(f"  [FAIL] {name}: {exc!r}")
            else:
                print(f"  [PASS] {name}")
    sys.exit(1 if failed else 0)
