"""Both kernel backends must agree with each other and with slow oracles."""

from itertools import combinations

import numpy as np
import pytest

from grkit import _pykernels, kernels
from grkit.core import CATALOG, circulant, new_graph
from oracles import brute_smallest_module, naive_mono, random_rainbow_free, random_substitution


def _random_graphs(seed, count, nmax, kmax=4):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        n = int(rng.integers(1, nmax + 1))
        k = int(rng.integers(1, kmax + 1))
        out.append(new_graph(n, k, rng.integers(1, k + 1, n * (n - 1) // 2).tolist()))
    return out


def _bits(backend, g, color):
    return backend.color_bitsets(np.ascontiguousarray(g.matrix), color)


def test_selected_backend_is_listed():
    assert kernels.BACKEND in [b.BACKEND for b in kernels.backends()]


def test_rainbow_triangle_first(backend):
    for g in _random_graphs(1, 200, 9):
        want = None
        m = g.matrix
        for u, v, w in combinations(range(g.n), 3):
            if len({m[u, v], m[u, w], m[v, w]}) == 3:
                want = (u, v, w)
                break
        got = backend.rainbow_triangle(m)
        assert (None if got is None else tuple(int(x) for x in got)) == want


def test_find_embedding_matches_oracle(backend):
    for g in _random_graphs(2, 120, 8, kmax=2):
        for name in ("P3", "K3", "K4-e", "K4", "H1", "H2", "H3"):
            pat = CATALOG[name]
            for color in range(1, g.k + 1):
                got = backend.find_embedding(_bits(backend, g, color), g.n, pat.earlier)
                assert got == naive_mono(g, pat, color)


def test_find_embedding_wide_graph(backend):
    # more than 64 vertices exercises multi-word bitsets
    g = circulant(97, [1, 2, 3, 5, 8, 13, 21, 34])
    for name in ("K3", "K4", "H3"):
        for color in (1, 2):
            a = backend.find_embedding(_bits(backend, g, color), g.n, CATALOG[name].earlier)
            b = _pykernels.find_embedding(_bits(_pykernels, g, color), g.n, CATALOG[name].earlier)
            assert a == b


def test_module_closure_matches_oracle(backend):
    rng = np.random.default_rng(4)
    graphs = [random_substitution(rng, int(rng.integers(2, 8)), 3) for _ in range(60)]
    graphs += [random_rainbow_free(rng, int(rng.integers(2, 8)), 4) for _ in range(60)]
    for g in graphs:
        for u, v in combinations(range(g.n), 2):
            got = np.flatnonzero(backend.module_closure(g.matrix, [u, v])).tolist()
            assert got == brute_smallest_module(g, (u, v))


@pytest.mark.parametrize("nbits,m1,m2", [
    (10, [0b11, 0b1100], [0b110]),
    (6, [0b111], [0b111000]),
    (4, [1], [2]),
    (3, [1, 2, 4], []),
    (3, [], [1, 2, 4]),
    (3, [1], [1]),
])
def test_first_avoiding(backend, nbits, m1, m2):
    want = -1
    for x in range(1 << nbits):
        if all(x & m != m for m in m1) and all(~x & m != m for m in m2):
            want = x
            break
    assert backend.first_avoiding(nbits, m1, m2) == want
