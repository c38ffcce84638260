"""Slow, obviously-correct reference implementations used as test oracles."""

from itertools import combinations, permutations

import numpy as np

from grkit.core import ColoredCompleteGraph, from_matrix


def rainbow_triples(g):
    m = g.matrix
    for u, v, w in combinations(range(g.n), 3):
        if len({int(m[u, v]), int(m[u, w]), int(m[v, w])}) == 3:
            yield (u, v, w)


def naive_mono(g, pattern, color):
    """Lexicographically least injection (as a tuple) mapping every pattern edge to ``color``."""
    m = g.matrix
    for phi in permutations(range(g.n), pattern.m):
        if all(m[phi[a], phi[b]] == color for a, b in pattern.edges):
            return phi
    return None


def naive_substitute(outer, parts):
    n = sum(p.n for p in parts)
    mat = [[0] * n for _ in range(n)]
    where = []
    for i, p in enumerate(parts):
        for x in range(p.n):
            where.append((i, x))
    for a in range(n):
        for b in range(n):
            if a == b:
                continue
            (i, x), (j, y) = where[a], where[b]
            mat[a][b] = parts[i].color(x, y) if i == j else outer.color(i, j)
    return ColoredCompleteGraph(n, outer.k, np.array(mat))


def is_module(g, vs):
    vs = set(vs)
    m = g.matrix
    for x in range(g.n):
        if x in vs:
            continue
        if len({int(m[x, v]) for v in vs}) > 1:
            return False
    return True


def brute_smallest_module(g, pair):
    others = [v for v in range(g.n) if v not in pair]
    best = None
    for size in range(len(others) + 1):
        for extra in combinations(others, size):
            cand = set(pair) | set(extra)
            if is_module(g, cand):
                if best is None:
                    best = cand
                elif not best <= cand:
                    raise AssertionError("minimal module not unique")
        if best is not None:
            return sorted(best)
    return sorted(range(g.n))


def contains_k4(g, color):
    m = g.matrix
    for q in combinations(range(g.n), 4):
        if all(m[a, b] == color for a, b in combinations(q, 2)):
            return True
    return False


# ------------------------------------------------------------ random corpus

def random_two_coloring(rng, n, colors, k):
    mat = np.zeros((n, n), dtype=np.uint8)
    for u, v in combinations(range(n), 2):
        mat[u, v] = mat[v, u] = colors[rng.integers(2)]
    return ColoredCompleteGraph(n, k, mat)


def random_substitution(rng, n, k):
    """Random substitution tree with 2-colored outer graphs (hence rainbow-free)."""
    if n == 1:
        return ColoredCompleteGraph(1, k, np.zeros((1, 1), dtype=np.uint8))
    ell = int(rng.integers(2, min(n, 6) + 1))
    colors = rng.choice(np.arange(1, k + 1), size=2, replace=k < 2)
    outer = random_two_coloring(rng, ell, [int(c) for c in colors], k)
    cuts = np.sort(rng.choice(np.arange(1, n), size=ell - 1, replace=False))
    sizes = np.diff(np.concatenate([[0], cuts, [n]]))
    from grkit.core import substitute
    return substitute(outer, [random_substitution(rng, int(s), k) for s in sizes])


def random_rainbow_free(rng, n, k, tries=4):
    """Vertex-by-vertex random coloring; a vertex that cannot be placed becomes a twin."""
    mat = np.zeros((n, n), dtype=np.uint8)
    for v in range(1, n):
        for _ in range(tries):
            ok = True
            for u in rng.permutation(v):
                allowed = set(range(1, k + 1))
                for w in range(v):
                    if w == u or mat[v, w] == 0:
                        continue
                    a, b = int(mat[u, w]), int(mat[v, w])
                    if a != b:
                        allowed &= {a, b}
                if not allowed:
                    ok = False
                    break
                c = int(rng.choice(sorted(allowed)))
                mat[v, u] = mat[u, v] = c
            if ok:
                break
            mat[v, :v] = 0
            mat[:v, v] = 0
        else:
            u = int(rng.integers(v))
            mat[v, :v] = mat[u, :v]
            mat[:v, v] = mat[:v, u]
            mat[v, u] = mat[u, v] = int(rng.integers(1, k + 1))
    return from_matrix(mat, k)


def gallai_corpus(seed=0, size=1000, nmax=60):
    rng = np.random.default_rng(seed)
    out = []
    for i in range(size):
        n = int(rng.integers(2, nmax + 1)) if i % 4 else int(rng.integers(2, 8))
        k = int(rng.integers(2, 6))
        if i % 2:
            out.append(random_substitution(rng, n, k))
        else:
            out.append(random_rainbow_free(rng, n, k))
    return out
