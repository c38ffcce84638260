from itertools import combinations

import numpy as np
import pytest

from grkit import formulas as F
from grkit.construct import (BASES, PRIMARY_BASES, ConstructionError, base, build, check_base,
                             plan_f, plan_w)
from grkit.core import CATALOG, circulant, induced, monochromatic, parse, serialize
from grkit.detect import find_mono_copy, find_rainbow_triangle
from grkit.store import WitnessStore
from oracles import contains_k4


@pytest.fixture(scope="module")
def store(store_dir):
    return WitnessStore(store_dir)


def test_primary_bases(store):
    sizes = {"pentagon5": 5, "qr17": 17, "g8_K3_H": 8, "g10_K3_H3": 10, "c21_H3": 21,
             "mono_K2": 2, "mono_K3": 3, "mono_K4": 4}
    for name in PRIMARY_BASES:
        g = base(name, store)
        assert g.n == sizes[name]
        check_base(name, g)


def test_composite_bases(store):
    for name, b in BASES.items():
        g = base(name, store)
        assert (g.n, g.k) == (b.n, b.k)


def test_bases_avoid_by_exhaustion(store):
    q = base("qr17", store)
    assert not contains_k4(q, 1) and not contains_k4(q, 2)
    g8 = base("g8_K3_H", store)
    assert not contains_k4(g8, 1)
    assert all(len({g8.color(a, b) for a, b in combinations(t, 2)}) > 1 or g8.color(t[0], t[1]) != 2
               for t in combinations(range(8), 3))
    assert find_mono_copy(monochromatic(4, 1), CATALOG["H1"], 1) is None


def test_pentagon_triples(store):
    p = base("pentagon5", store)
    for tri in combinations(range(5), 3):
        assert len(induced(p, tri).colors_used()) == 2


def test_stored_c21_matches(store):
    g = store.load("c21_H3")
    assert g is not None and g == base("c21_H3", store)
    for c in (1, 2):
        assert find_mono_copy(g, CATALOG["H3"], c) is None


def test_check_base_rejects():
    with pytest.raises(ConstructionError):
        check_base("pentagon5", monochromatic(5, 1, 2))
    with pytest.raises(ConstructionError):
        base("nope")


def test_plan_examples():
    p = plan_w(4, 2, 1)
    assert (p.base, p.base_colors, p.steps, p.target) == ("pentagon5", (3, 4), (("qr17", (1, 2)),), 85)
    p = plan_f(4, 0, 4)
    assert (p.base, p.base_colors, p.steps, p.target) == ("c21_H3", (1, 2), (("qr17", (3, 4)),), 357)
    p = plan_f(2, 1, 1)
    assert (p.base, p.steps, p.target) == ("g10_K3_H3", (), 10)
    p = plan_f(4, 4, 0)
    assert p.base == "pentagon5" and p.steps == (("pentagon5", (3, 4)),)
    p = plan_f(4, 2, 2)
    assert p.target == 105 and p.base == "c21_H3" and p.steps == (("pentagon5", (3, 4)),)
    with pytest.raises(F.DomainError):
        plan_w(3, 1, 3)


def test_build_examples(store):
    g = build(plan_w(3, 1, 1), store)
    assert g.n == 20 and F.gr_w(3, 1) == 21
    assert build(plan_f(3, 1, 1), store).n == 16
    assert build(plan_f(5, 0, 0), store) == monochromatic(2, 1, 5)


def test_size_law_to_2000():
    for k, r in F.admissible_w(12):
        for h in (1, 2):
            if F.w(k, r) <= 2000:
                assert plan_w(k, r, h).size() == F.w(k, r)
    for k, s, r in F.admissible_f(12):
        if F.f(k, s, r) <= 2000:
            p = plan_f(k, s, r)
            assert p.size() == F.f(k, s, r)
            used = list(p.base_colors) + [c for _, pair in p.steps for c in pair]
            assert len(used) == len(set(used))


def test_determinism(store):
    a = serialize(build(plan_f(4, 1, 2), store))
    b = serialize(build(plan_f(4, 1, 2), store))
    assert a == b
    assert parse(a) == build(plan_f(4, 1, 2), store)


def test_random_sampling_large(store):
    # witnesses above the full-validation cap: sample random 5-sets for mono patterns
    rng = np.random.default_rng(0)
    picks = [a for a in F.admissible_f(6) if 600 < F.f(*a) <= 2000][:4]
    assert picks
    for args in picks:
        plan = plan_f(*args)
        g = build(plan, store, validate=False)
        assert g.n == plan.target
        m = g.matrix
        for _ in range(4000):
            q = np.sort(rng.choice(g.n, 5, replace=False))
            for c in range(1, g.k + 1):
                pat = plan.roles.pattern(c)
                sub = induced(g, q[:pat.m] if pat.m < 5 else q)
                assert find_mono_copy(sub, pat, c) is None
            u, v, w = q[:3]
            assert len({m[u, v], m[u, w], m[v, w]}) < 3


@pytest.mark.parametrize("name", ["pentagon5", "qr17", "g8_K3_H", "g10_K3_H3"])
def test_bases_rainbow_free(store, name):
    assert find_rainbow_triangle(base(name, store)) is None


def test_petersen_default(store):
    g = base("g10_K3_H3", store)
    assert len(g.edges(2)) == 15
    assert circulant(5, [1]) != g
