import pytest

from grkit.core import GraphError, circulant
from grkit.detect import validate_forbidden
from grkit.search import (ABSENT, EXHAUSTED, FOUND, BudgetExhausted, ForbiddenSpec, SearchBudget,
                          SearchRefused, difference_splits, is_rotation_invariant, prove_ramsey_upper,
                          ramsey_exhaust, search_backtrack, search_circulant, search_local,
                          search_local_seeds)

S = ForbiddenSpec.parse


def _ok(g, spec):
    return not validate_forbidden(g, spec.as_dict()).violations


def test_spec_parse():
    spec = S("1:P3, 2:k4-e")
    assert spec.k == 2 and [p.name for p in spec.patterns] == ["P3", "K4-e"]
    assert str(spec.swapped()) == "1:K4-e,2:P3"
    for bad in ("", "1P3", "x:K3", "1:K3,1:K4", "0:K3", "1:Q7"):
        with pytest.raises(GraphError):
            S(bad)


def test_difference_splits_order():
    assert list(difference_splits(5)) == [(), (1,), (1, 2), (2,)]
    assert len(list(difference_splits(21))) == 1024


def test_circulant_pentagon():
    res = search_circulant(5, S("1:K3,2:K3"))
    assert res.found and res.graph == circulant(5, [1])


def test_circulant_qr17():
    res = search_circulant(17, S("1:K4,2:K4"))
    assert res.stats["first"] == "{1,2,4,8}"
    assert res.graph == circulant(17, [1, 2, 4, 8, 9, 13, 15, 16])
    assert is_rotation_invariant(res.graph)


def test_circulant_absent_and_budget():
    assert search_circulant(6, S("1:K3,2:K3")).status == ABSENT
    assert search_circulant(17, S("1:K4,2:K4"), SearchBudget(nodes=3)).status == EXHAUSTED
    with pytest.raises(GraphError):
        search_circulant(5, S("1:K3,2:K3,3:K3"))


def test_circulant_jobs_same_answer():
    a = search_circulant(17, S("1:K4,2:K4"))
    b = search_circulant(17, S("1:K4,2:K4"), jobs=4)
    assert a.graph == b.graph and a.stats == b.stats


def test_no_21_vertex_circulant_avoids_h3():
    assert search_circulant(21, S("1:H3,2:H3")).status == ABSENT


def test_backtrack_r34_witness():
    spec = S("1:K3,2:K4")
    res = search_backtrack(8, spec)
    assert res.found and _ok(res.graph, spec)


def test_backtrack_p3_k3():
    spec = S("1:P3,2:K3")
    assert search_backtrack(5, spec).status == ABSENT
    res = search_backtrack(4, spec)
    assert res.found and _ok(res.graph, spec)


def test_backtrack_budget_and_determinism():
    spec = S("1:K3,2:K4")
    assert search_backtrack(8, spec, SearchBudget(nodes=10)).status == EXHAUSTED
    assert search_backtrack(8, spec).graph == search_backtrack(8, spec).graph


def test_backtrack_gallai_mode():
    # GR_3(K3, P3, P3) = f(3, 1, 0) + 1 = 5
    spec = S("1:K3,2:P3,3:P3")
    res = search_backtrack(4, spec, gallai=True)
    assert res.found
    assert validate_forbidden(res.graph, spec.as_dict()).valid
    assert search_backtrack(5, spec, gallai=True).status == ABSENT


@pytest.mark.parametrize("n,spec,expected", [
    (5, "1:P3,2:K3", True), (4, "1:P3,2:K3", False),
    (7, "1:P3,2:H3", True), (6, "1:P3,2:H3", False),
    (6, "1:K3,2:K3", True), (5, "1:K3,2:K3", False),
])
def test_prove_small(n, spec, expected):
    assert prove_ramsey_upper(n, S(spec)) is expected


def test_prove_by_backtracking():
    assert prove_ramsey_upper(8, S("1:K3,2:K3"))
    res = ramsey_exhaust(8, S("1:K3,2:K4"))
    assert res.found and res.stats["method"] == "backtrack"


def test_prove_refuses_and_budget():
    with pytest.raises(SearchRefused):
        prove_ramsey_upper(10, S("1:K3,2:K4"))
    with pytest.raises(BudgetExhausted):
        prove_ramsey_upper(9, S("1:K3,2:K4"), SearchBudget(nodes=100))


def test_prove_consistent_with_witness():
    spec = S("1:K3,2:K3")
    assert prove_ramsey_upper(6, spec)
    assert _ok(circulant(5, [1]), spec)
    assert not prove_ramsey_upper(5, spec)


def test_local_pentagon():
    spec = S("1:K3,2:K3")
    for seed in range(3):
        res = search_local(5, spec, SearchBudget(seed=seed))
        assert res.found and _ok(res.graph, spec)
        assert sorted(len(res.graph.edges(c)) for c in (1, 2)) == [5, 5]


def test_local_deterministic_and_mixed_sizes():
    spec = S("1:K3,2:K4")
    a = search_local(8, spec, SearchBudget(seed=4))
    b = search_local(8, spec, SearchBudget(seed=4))
    assert a.found and a.graph == b.graph and _ok(a.graph, spec)


def test_local_exhausted_is_not_absence():
    res = search_local(6, S("1:K3,2:K3"), SearchBudget(iterations=200))
    assert res.status == EXHAUSTED and res.graph is None


def test_local_seeds():
    res = search_local_seeds(5, S("1:K3,2:K3"), range(3), jobs=2)
    assert res.status == FOUND


@pytest.mark.slow
def test_local_c21():
    spec = S("1:H3,2:H3")
    res = search_local(21, spec, SearchBudget(seed=0))
    assert res.found and _ok(res.graph, spec)
