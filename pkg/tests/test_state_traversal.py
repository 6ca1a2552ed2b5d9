import json
import random
from math import gcd

import numpy as np
import pytest

from oracles import trace_sphere_curves
from tightcount.classify import solid_torus_count_formula
from tightcount.dividing_sets import SIDES, DiskDiagram, bypass_rewire, disk_matchings, enumerate_disk_diagrams
from tightcount.state_traversal import (
    GRAPH_SCHEMA_VERSION,
    SolidTorusProblem,
    _sphere_counts,
    assemble_sphere,
    build_state_graph,
    export_graph,
    is_potentially_allowable,
    sphere_components,
    tight_count_traversal,
    transition_exists,
)


def coprime_pairs(p_max, p_min=2):
    return [(p, q) for p in range(p_min, p_max + 1) for q in range(1, p) if gcd(p, q) == 1]


@pytest.mark.parametrize("p, q", [(0, 1), (2, 3), (4, 2), (3, 0)])
def test_problem_rejects(p, q):
    with pytest.raises(ValueError):
        SolidTorusProblem(p, q)


def test_base_cases():
    one = SolidTorusProblem(1, 1)
    assert assemble_sphere(one, DiskDiagram((1, 0))).component_count == 1
    two = SolidTorusProblem(2, 1)
    for d in enumerate_disk_diagrams(2):
        assert assemble_sphere(two, d).component_count == 1
        assert is_potentially_allowable(two, d)


def test_assemble_rejects_wrong_size():
    with pytest.raises(ValueError):
        assemble_sphere(SolidTorusProblem(3, 1), DiskDiagram((1, 0, 3, 2)))


def test_crossing_input_rejected():
    with pytest.raises(ValueError):
        DiskDiagram((2, 3, 0, 1))


@pytest.mark.parametrize("p, q", coprime_pairs(5, 1))
def test_three_circle_counters_agree_exhaustively(p, q):
    prob = SolidTorusProblem(p, q)
    ms = disk_matchings(p)
    table = np.array(ms)
    for a, plus in enumerate(ms):
        minus_rows = table
        fast = _sphere_counts(np.repeat(table[a:a + 1], len(ms), axis=0), minus_rows, prob.gluing_shift)
        for b, minus in enumerate(ms):
            slow = sphere_components(plus, minus, prob)
            assert slow == fast[b] == trace_sphere_curves(plus, minus, p, q)


@pytest.mark.parametrize("p, q", [(7, 3), (8, 5), (9, 2), (10, 7)])
def test_three_circle_counters_agree_sampled(p, q):
    rng = random.Random(p * 100 + q)
    prob = SolidTorusProblem(p, q)
    ms = disk_matchings(p)
    pairs = [(rng.choice(ms), rng.choice(ms)) for _ in range(150)]
    fast = _sphere_counts(np.array([a for a, _ in pairs]), np.array([b for _, b in pairs]), prob.gluing_shift)
    for (a, b), f in zip(pairs, fast):
        assert sphere_components(a, b, prob) == f == trace_sphere_curves(a, b, p, q)


def _rotate(match, k):
    size = len(match)
    out = [0] * size
    for i, j in enumerate(match):
        out[(i + k) % size] = (j + k) % size
    return tuple(out)


def _reflect(match, c):
    size = len(match)
    out = [0] * size
    for i, j in enumerate(match):
        out[(c - i) % size] = (c - j) % size
    return tuple(out)


@pytest.mark.parametrize("p, q", coprime_pairs(6))
def test_component_count_dihedral_invariance(p, q):
    prob = SolidTorusProblem(p, q)
    s = prob.gluing_shift
    rng = random.Random(p + 31 * q)
    ms = disk_matchings(p)
    for _ in range(60):
        a, b = rng.choice(ms), rng.choice(ms)
        base = sphere_components(a, b, prob)
        for k in range(2 * p):
            assert sphere_components(_rotate(a, k), _rotate(b, k), prob) == base
        # reflecting D+ about 0 forces D- to be reflected about 2 * shift
        assert sphere_components(_reflect(a, 0), _reflect(b, 2 * s), prob) == base


def test_graph_base_cases():
    g = build_state_graph(SolidTorusProblem(1, 1))
    assert len(g.vertices) == 1 and g.edges == () and g.allowable == (True,)
    assert g.tight_count == 1
    g = build_state_graph(SolidTorusProblem(2, 1))
    assert len(g.vertices) == 2 and all(g.allowable)
    assert g.component[0] != g.component[1]
    assert g.tight_count == 2


@pytest.mark.parametrize("p, q", [(2, 1), (3, 1), (3, 2)])
def test_traversal_examples(p, q):
    assert tight_count_traversal(SolidTorusProblem(p, q)) == solid_torus_count_formula(p, q)


def test_vertex_count_at_ten():
    assert len(disk_matchings(10)) == 16796


@pytest.mark.parametrize("p, q", coprime_pairs(7))
def test_graph_structure(p, q):
    prob = SolidTorusProblem(p, q)
    g = build_state_graph(prob)
    assert [d.match for d in g.vertices] == list(disk_matchings(p))
    keys = [(e.a, e.b) for e in g.edges]
    assert len(keys) == len(set(keys)) and all(a < b for a, b in keys)
    assert sum(g.allowable) >= g.tight_count
    for label in g.tight_components:
        assert all(g.allowable[v] for v in g.component_members(label))
    for e in g.edges:
        assert g.component[e.a] == g.component[e.b]
        assert e.source in (e.a, e.b) and g.allowable[e.source]
        other = e.b if e.source == e.a else e.a
        d = g.vertices[e.source]
        assert transition_exists(prob, d, e.triple, e.side)
        assert bypass_rewire(d.match, e.triple, e.side)[0] == g.vertices[other].match


@pytest.mark.parametrize("p, q", coprime_pairs(5))
def test_every_admissible_move_becomes_an_edge(p, q):
    prob = SolidTorusProblem(p, q)
    g = build_state_graph(prob)
    index = {d.match: v for v, d in enumerate(g.vertices)}
    keys = {(e.a, e.b) for e in g.edges}
    for v, d in enumerate(g.vertices):
        if not g.allowable[v]:
            continue
        for i in range(2 * p):
            for side in SIDES:
                new, closed = bypass_rewire(d.match, i, side)
                w = index[new]
                if closed or w == v or not transition_exists(prob, d, i, side):
                    continue
                assert (min(v, w), max(v, w)) in keys


def test_transition_examples():
    prob = SolidTorusProblem(3, 1)
    d = DiskDiagram.from_chords([(0, 5), (1, 4), (2, 3)])
    # a trivial move never adds circles; a disallowed one always does
    assert transition_exists(prob, d, 1, "back")
    assert not transition_exists(prob, d, 1, "front")


def test_no_edge_between_the_two_states_at_two_one():
    g = build_state_graph(SolidTorusProblem(2, 1))
    assert g.edges == ()


@pytest.mark.parametrize("p, q", coprime_pairs(7))
def test_traversal_matches_formula(p, q):
    assert tight_count_traversal(SolidTorusProblem(p, q)) == solid_torus_count_formula(p, q)


def test_export_json_schema():
    text = export_graph(SolidTorusProblem(3, 1), "json")
    data = json.loads(text)
    assert data["schema_version"] == GRAPH_SCHEMA_VERSION
    assert set(data) == {"schema_version", "p", "q", "vertices", "edges", "tight_count"}
    assert (data["p"], data["q"], data["tight_count"]) == (3, 1, 3)
    assert [v["id"] for v in data["vertices"]] == list(range(5))
    for v in data["vertices"]:
        assert DiskDiagram(tuple(v["match"])).match == tuple(v["match"])
        assert isinstance(v["allowable"], bool)
    for e in data["edges"]:
        assert set(e) == {"a", "b", "triple", "side"} and e["side"] in SIDES
    assert export_graph(SolidTorusProblem(3, 1), "json") == text


def test_export_two_one_json():
    data = json.loads(export_graph(SolidTorusProblem(2, 1), "json"))
    assert len(data["vertices"]) == 2 and data["edges"] == []


def test_export_dot():
    text = export_graph(SolidTorusProblem(1, 1), "dot")
    assert text.startswith('graph "solid_torus_p1_q1" {')
    assert text.count("[label=") == 1
    assert export_graph(build_state_graph(SolidTorusProblem(1, 1)), "dot") == text


def test_export_bad_format():
    with pytest.raises(ValueError):
        export_graph(SolidTorusProblem(1, 1), "svg")
