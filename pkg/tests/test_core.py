from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grkit.core import (CATALOG, ColoredCompleteGraph, FormatError, GraphError, RoleAssignment,
                        circulant, from_matrix, get_pattern, induced, join_two_copies, monochromatic,
                        new_graph, parse, serialize, substitute)
from oracles import naive_substitute, random_substitution


def test_new_graph_single_edge():
    g = new_graph(2, 1, {(0, 1): 1})
    assert g.n == 2 and g.k == 1 and g.color(1, 0) == 1


def test_new_graph_rainbow_triangle_is_valid():
    g = new_graph(3, 3, [1, 2, 3])
    assert {g.color(0, 1), g.color(0, 2), g.color(1, 2)} == {1, 2, 3}


def test_new_graph_pentagon():
    table = {(u, v): 1 if (v - u) % 5 in (1, 4) else 2 for u, v in combinations(range(5), 2)}
    g = new_graph(5, 2, table)
    assert g == circulant(5, [1])


@pytest.mark.parametrize("args", [
    (2, 1, {(0, 1): 2}),          # color out of range
    (3, 2, [1, 2]),               # wrong table size
    (0, 1, []),                   # n < 1
    (2, 0, [1]),                  # k < 1
    (3, 2, {(0, 1): 1, (0, 2): 1}),  # missing pair
])
def test_new_graph_errors(args):
    with pytest.raises(GraphError):
        new_graph(*args)


def test_matrix_is_read_only():
    g = monochromatic(3, 1)
    with pytest.raises(ValueError):
        g.matrix[0, 1] = 2


def test_substitute_identity_size():
    g = substitute(monochromatic(2, 1), [monochromatic(1, 1)] * 2)
    assert g == monochromatic(2, 1)


def test_substitute_105_vertices():
    outer = circulant(5, [1], colors=(3, 4), k=4)
    inner = circulant(21, [1, 2], colors=(1, 2), k=4)
    g = substitute(outer, [inner] * 5)
    assert g.n == 105 and g.colors_used() == {1, 2, 3, 4}
    assert g.color(0, 21) == outer.color(0, 1)
    assert g.color(22, 23) == inner.color(1, 2)


def test_substitute_errors():
    with pytest.raises(GraphError):
        substitute(monochromatic(3, 1), [monochromatic(1, 1)] * 2)
    with pytest.raises(GraphError):
        substitute(monochromatic(2, 1, 2), [monochromatic(1, 1, 1)] * 2)


def test_substitute_matches_brute_force():
    rng = np.random.default_rng(3)
    for _ in range(30):
        outer = random_substitution(rng, int(rng.integers(2, 6)), 3)
        parts = [random_substitution(rng, int(rng.integers(1, 6)), 3) for _ in range(outer.n)]
        assert substitute(outer, parts) == naive_substitute(outer, parts)


def test_substitute_associative():
    rng = np.random.default_rng(5)
    for _ in range(20):
        outer = random_substitution(rng, int(rng.integers(2, 4)), 3)
        mids = [random_substitution(rng, int(rng.integers(1, 4)), 3) for _ in range(outer.n)]
        inners = [[random_substitution(rng, int(rng.integers(1, 4)), 3) for _ in range(m.n)]
                  for m in mids]
        nested = substitute(outer, [substitute(m, ps) for m, ps in zip(mids, inners)])
        flat = substitute(substitute(outer, mids), [p for ps in inners for p in ps])
        assert nested == flat
        assert nested.n <= 30


def test_join_two_copies():
    g = join_two_copies(monochromatic(2, 5, 5), 3)
    assert g.n == 4
    assert g.color(0, 1) == 5 and g.color(2, 3) == 5
    assert all(g.color(a, b) == 3 for a in (0, 1) for b in (2, 3))
    assert join_two_copies(monochromatic(1, 1, 2), 2) == monochromatic(2, 2, 2)
    with pytest.raises(GraphError):
        join_two_copies(g, 6)


def test_induced():
    p = circulant(5, [1])
    assert induced(p, range(5)) == p
    for tri in combinations(range(5), 3):
        assert len(induced(p, tri).colors_used()) == 2
    assert induced(p, [1, 3]) == monochromatic(2, p.color(1, 3), 2)
    with pytest.raises(GraphError):
        induced(p, [])
    with pytest.raises(GraphError):
        induced(p, [0, 5])


def test_serialize_k2():
    assert serialize(monochromatic(2, 1)) == "GCG 1\n2 1\n1\n"


def test_parse_rejects_color_above_k():
    with pytest.raises(FormatError):
        parse("GCG 1\n2 1\n2\n")


@pytest.mark.parametrize("text", [
    "",
    "GCG 2\n2 1\n1\n",
    "GCG 1\n2\n1\n",
    "GCG 1\n2 1 3\n1\n",
    "GCG 1\n3 2\n1\n1\n",        # first row too short
    "GCG 1\n3 2\n1 1\n1\n1\n",   # too many rows
    "GCG 1\n2 1\n0\n",
    "GCG 1\n2 1\nx\n",
    "GCG 1\n2 1\n1 \n",
    "GCG 1\n0 1\n",
])
def test_parse_rejects_malformed(text):
    with pytest.raises(FormatError):
        parse(text)


def test_parse_skips_comments_and_single_vertex():
    assert parse("# hello\n# more\nGCG 1\n1 3\n") == ColoredCompleteGraph(1, 3, np.zeros((1, 1)))


def test_round_trip_105():
    outer = circulant(5, [1], colors=(3, 4), k=4)
    g = substitute(outer, [circulant(21, [1, 5], colors=(1, 2), k=4)] * 5)
    assert parse(serialize(g)) == g


@st.composite
def graphs(draw, nmax=12, kmax=6):
    n = draw(st.integers(1, nmax))
    k = draw(st.integers(1, kmax))
    cols = draw(st.lists(st.integers(1, k), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
    return new_graph(n, k, cols)


@given(graphs())
@settings(max_examples=200, deadline=None)
def test_round_trip_property(g):
    assert parse(serialize(g)) == g
    assert serialize(parse(serialize(g))) == serialize(g)


def test_patterns_catalog():
    assert CATALOG["H1"].edges == CATALOG["K4"].edges | {(0, 4)}
    assert len(CATALOG["H2"].edges) == 8 and len(CATALOG["H3"].edges) == 9
    for p in CATALOG.values():
        covered = {v for e in p.edges for v in e}
        assert covered == set(range(p.m)), p.name
    assert get_pattern("k4-E") is CATALOG["K4-e"]
    with pytest.raises(GraphError):
        get_pattern("K6")


def test_pattern_copies():
    assert len(CATALOG["K3"].copies_in(4)) == 4
    assert len(CATALOG["H3"].copies_in(5)) == 10
    assert len(CATALOG["P3"].copies_in(3)) == 3


def test_role_assignment():
    ra = RoleAssignment(5, 2, 2)
    assert [ra.role(c) for c in range(1, 6)] == ["H", "H", "K3", "K3", "P3"]
    assert ra.p == 1 and ra.pattern(1).name == "H3"
    with pytest.raises(GraphError):
        RoleAssignment(2, 2, 1)
    with pytest.raises(GraphError):
        ra.role(6)


def test_recolor_and_from_matrix():
    g = circulant(5, [1]).recolor([3, 1], 3)
    assert g.colors_used() == {1, 3} and g.k == 3
    assert from_matrix(g.matrix) == ColoredCompleteGraph(5, 3, g.matrix)
