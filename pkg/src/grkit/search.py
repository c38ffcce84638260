"""Witness search (circulant, backtracking, tabu) and small exhaustive Ramsey proofs."""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations

import numpy as np

from . import kernels
from .core import ColoredCompleteGraph, GraphError, Pattern, circulant, get_pattern, new_graph
from .detect import validate_forbidden

FOUND, ABSENT, EXHAUSTED = "found", "absent", "exhausted"

# refuse exhaustive proofs beyond these sizes
RAW_MAX_N = 7
BACKTRACK_MAX_N = 9


class BudgetExhausted(RuntimeError):
    def __init__(self, msg, stats=None):
        super().__init__(msg)
        self.stats = stats or {}


class SearchRefused(GraphError):
    """Search space too large for the requested exhaustive method."""


@dataclass(frozen=True)
class ForbiddenSpec:
    patterns: tuple  # patterns[c - 1] is forbidden in color c (None = unconstrained)

    @classmethod
    def of(cls, mapping: dict) -> "ForbiddenSpec":
        if not mapping:
            raise GraphError("empty forbidden spec")
        k = max(mapping)
        if min(mapping) < 1:
            raise GraphError("colors start at 1")
        pats = tuple(_as_pattern(mapping[c]) if c in mapping else None for c in range(1, k + 1))
        return cls(pats)

    @classmethod
    def parse(cls, text: str) -> "ForbiddenSpec":
        """``"1:P3,2:K3"`` -> color 1 avoids P3, color 2 avoids K3."""
        out = {}
        for item in text.split(","):
            item = item.strip()
            if not item:
                continue
            try:
                c, name = item.split(":")
                c = int(c)
            except ValueError:
                raise GraphError(f"bad forbid item {item!r}, expected COLOR:PATTERN") from None
            if c in out:
                raise GraphError(f"color {c} listed twice")
            out[c] = get_pattern(name)
        return cls.of(out)

    @property
    def k(self) -> int:
        return len(self.patterns)

    def as_dict(self) -> dict:
        return {c: p for c, p in enumerate(self.patterns, start=1) if p is not None}

    def swapped(self) -> "ForbiddenSpec":
        if self.k != 2:
            raise GraphError("swap needs exactly two colors")
        return ForbiddenSpec(self.patterns[::-1])

    def __str__(self):
        return ",".join(f"{c}:{p.name}" for c, p in self.as_dict().items())


def _as_pattern(p):
    return p if isinstance(p, Pattern) else get_pattern(p)


@dataclass(frozen=True)
class SearchBudget:
    nodes: int | None = None       # backtracking nodes / circulant splits
    iterations: int = 200_000      # tabu moves
    seed: int = 0


@dataclass
class SearchResult:
    status: str
    graph: ColoredCompleteGraph | None = None
    stats: dict = field(default_factory=dict)

    @property
    def found(self) -> bool:
        return self.status == FOUND


def _passes(g, spec: ForbiddenSpec, gallai: bool = False) -> bool:
    rep = validate_forbidden(g, spec.as_dict())
    return not rep.violations and (not gallai or rep.rainbow_triangle is None)


# ------------------------------------------------------------------ circulant

def difference_splits(n: int):
    """Subsets of the difference classes {1..n//2}, in lexicographic order of sorted tuples."""
    half = n // 2

    def rec(prefix, start):
        yield prefix
        for d in range(start, half + 1):
            yield from rec(prefix + (d,), d + 1)

    yield from rec((), 1)


def search_circulant(n: int, spec: ForbiddenSpec, budget: SearchBudget | None = None,
                     jobs: int = 1) -> SearchResult:
    """First split (lex order) whose circulant 2-coloring avoids the spec."""
    if spec.k != 2:
        raise GraphError("circulant search needs a 2-color spec")
    splits = list(difference_splits(n))
    limit = budget.nodes if budget and budget.nodes else None
    todo = splits if limit is None else splits[:limit]

    def test(first):
        g = circulant(n, first)
        return g if _passes(g, spec) else None

    hit = None
    tried = 0
    if jobs > 1:
        batch = 8 * jobs
        with ThreadPoolExecutor(jobs) as pool:
            for start in range(0, len(todo), batch):
                chunk = todo[start:start + batch]
                res = list(pool.map(test, chunk))
                tried += len(chunk)
                # lowest index in the batch wins, independent of scheduling
                idx = next((i for i, g in enumerate(res) if g is not None), None)
                if idx is not None:
                    hit, tried = (chunk[idx], res[idx]), start + idx + 1
                    break
    else:
        for first in todo:
            tried += 1
            g = test(first)
            if g is not None:
                hit = (first, g)
                break
    stats = {"splits": tried, "total": len(splits)}
    if hit is not None:
        stats["first"] = "{" + ",".join(map(str, hit[0])) + "}"
        return SearchResult(FOUND, hit[1], stats)
    return SearchResult(EXHAUSTED if len(todo) < len(splits) else ABSENT, None, stats)


def is_rotation_invariant(g: ColoredCompleteGraph) -> bool:
    m = g.matrix
    return bool(np.array_equal(np.roll(np.roll(m, 1, axis=0), 1, axis=1), m))


# ---------------------------------------------------------------- backtracking

def _automorphisms(p: Pattern):
    return [perm for perm in permutations(range(p.m))
            if all(p.adjacent(perm[a], perm[b]) for a, b in p.edges)]


def _anchors(p: Pattern):
    """One anchored search plan per directed-edge orbit.

    A plan fixes pattern edge (a, b) on the new graph edge and lists the other
    pattern vertices with the plan positions of their already-placed neighbours.
    """
    auts = _automorphisms(p)
    seen = set()
    plans = []
    for a, b in sorted(p.edges | {(v, u) for u, v in p.edges}):
        if (a, b) in seen:
            continue
        seen |= {(perm[a], perm[b]) for perm in auts}
        placed = [a, b]
        rest = [v for v in range(p.m) if v not in placed]
        order = []
        while rest:
            # most already-placed neighbours first
            v = max(rest, key=lambda x: (sum(p.adjacent(x, y) for y in placed), -x))
            order.append(tuple(i for i, y in enumerate(placed) if p.adjacent(v, y)))
            placed.append(v)
            rest.remove(v)
        plans.append(tuple(order))
    return plans


def _anchored_hit(bits, plans, u, v, full):
    for order in plans:
        phi = [u, v]
        used = (1 << u) | (1 << v)

        def rec(i, used):
            if i == len(order):
                return True
            cand = full & ~used
            for j in order[i]:
                cand &= bits[phi[j]]
            while cand:
                low = cand & -cand
                phi.append(low.bit_length() - 1)
                if rec(i + 1, used | low):
                    return True
                phi.pop()
                cand ^= low
            return False

        if rec(0, used):
            return True
    return False


def _backtrack(n, spec: ForbiddenSpec, budget: SearchBudget | None, *, symmetry=False,
               gallai=False):
    k = spec.k
    plans = [None if p is None else _anchors(p) for p in spec.patterns]
    edges = list(combinations(range(n), 2))
    full = (1 << n) - 1
    bits = [[0] * n for _ in range(k + 1)]
    col = [[0] * n for _ in range(n)]
    limit = budget.nodes if budget and budget.nodes else None
    swap_ok = symmetry and k == 2 and spec.patterns[0] == spec.patterns[1]
    nodes = 0
    ones = 0  # color-1 edges in row 0 (symmetry mode)

    class _Stop(Exception):
        pass

    def ok_rainbow(u, v, c):
        cu, cv = col[u], col[v]
        for w in range(n):
            a, b = cu[w], cv[w]
            if a and b and a != c and b != c and a != b:
                return False
        return True

    def rec(i):
        nonlocal nodes, ones
        if i == len(edges):
            return True
        u, v = edges[i]
        lo = 1
        if symmetry and u == 0 and v > 1:
            lo = col[0][v - 1]  # row 0 is non-decreasing
        for c in range(lo, k + 1):
            if swap_ok and u == 0 and c == 2 and 2 * ones < n - 1:
                continue
            nodes += 1
            if limit is not None and nodes > limit:
                raise _Stop
            if gallai and not ok_rainbow(u, v, c):
                continue
            bits[c][u] |= 1 << v
            bits[c][v] |= 1 << u
            col[u][v] = col[v][u] = c
            if u == 0 and c == 1:
                ones += 1
            bad = plans[c - 1] is not None and _anchored_hit(bits[c], plans[c - 1], u, v, full)
            if not bad and rec(i + 1):
                return True
            bits[c][u] &= ~(1 << v)
            bits[c][v] &= ~(1 << u)
            col[u][v] = col[v][u] = 0
            if u == 0 and c == 1:
                ones -= 1
        return False

    try:
        hit = rec(0)
    except _Stop:
        return SearchResult(EXHAUSTED, None, {"nodes": nodes})
    if not hit:
        return SearchResult(ABSENT, None, {"nodes": nodes})
    g = new_graph(n, k, {(u, v): col[u][v] for u, v in edges}) if n > 1 else new_graph(1, k, {})
    return SearchResult(FOUND, g, {"nodes": nodes})


def search_backtrack(n: int, spec: ForbiddenSpec, budget: SearchBudget | None = None,
                     gallai: bool = False) -> SearchResult:
    """Edge-by-edge DFS in lexicographic edge order, colors ascending.

    With ``gallai=True`` rainbow triangles are pruned as well.
    """
    res = _backtrack(n, spec, budget, gallai=gallai)
    if res.found and not _passes(res.graph, spec, gallai):
        raise AssertionError("backtracking produced an invalid witness")
    return res


# ------------------------------------------------------------------ proofs

def _copy_masks(p: Pattern | None, n: int, index) -> list[int]:
    if p is None or p.m > n:
        return []
    return [sum(1 << index[e] for e in es) for es in p.copies_in(n)]


def ramsey_exhaust(n: int, spec: ForbiddenSpec, budget: SearchBudget | None = None) -> SearchResult:
    """Decide whether some coloring of K_n avoids the spec.

    ABSENT means the upper bound is proved. Raw enumeration is used for two
    colors and n <= 7, symmetry-reduced backtracking up to n = 9.
    """
    if n < 1:
        raise GraphError("n must be >= 1")
    if spec.k == 2 and n <= RAW_MAX_N:
        edges = list(combinations(range(n), 2))
        index = {e: i for i, e in enumerate(edges)}
        m1 = _copy_masks(spec.patterns[0], n, index)
        m2 = _copy_masks(spec.patterns[1], n, index)
        x = kernels.first_avoiding(len(edges), m1, m2)
        stats = {"method": "raw", "colorings": 1 << len(edges)}
        if x < 0:
            return SearchResult(ABSENT, None, stats)
        g = new_graph(n, 2, [1 if x >> i & 1 else 2 for i in range(len(edges))]) if n > 1 \
            else new_graph(1, 2, {})
        return SearchResult(FOUND, g, stats)
    if n > BACKTRACK_MAX_N:
        raise SearchRefused(f"exhaustive search on K_{n} is out of reach")
    res = _backtrack(n, spec, budget, symmetry=True)
    res.stats["method"] = "backtrack"
    return res


def prove_ramsey_upper(n: int, spec: ForbiddenSpec, budget: SearchBudget | None = None) -> bool:
    """True iff every coloring of K_n has a forbidden monochromatic copy."""
    res = ramsey_exhaust(n, spec, budget)
    if res.status == EXHAUSTED:
        raise BudgetExhausted(f"budget exhausted on K_{n}", res.stats)
    return res.status == ABSENT


# -------------------------------------------------------------- local search

def _cost_table(spec: ForbiddenSpec, m: int, proxy_weight: int = 0) -> np.ndarray:
    """Weighted forbidden-copy count for every 2-coloring of K_m (bit i set: edge i in color 1)."""
    pairs = list(combinations(range(m), 2))
    index = {e: i for i, e in enumerate(pairs)}
    table = np.zeros(1 << len(pairs), dtype=np.int64)
    ids = np.arange(table.size)
    for color, pat in enumerate(spec.patterns, start=1):
        if pat is None:
            continue
        terms = [(1, pat)]
        if proxy_weight and pat.name == "H3":
            terms.append((proxy_weight, get_pattern("K4-e")))
        for weight, p in terms:
            for mask in _copy_masks(p, m, index):
                on = ids if color == 1 else ~ids
                table += weight * ((on & mask) == mask)
    return table


def search_local(n: int, spec: ForbiddenSpec, budget: SearchBudget | None = None,
                 proxy_weight: int = 0) -> SearchResult:
    """Tabu search over single-edge flips minimising the forbidden-copy count."""
    if spec.k != 2:
        raise GraphError("local search needs a 2-color spec")
    budget = budget or SearchBudget()
    m = max(p.m for p in spec.patterns if p is not None)
    rng = np.random.default_rng(budget.seed)
    edges = list(combinations(range(n), 2))
    if n < m:
        g = new_graph(n, 2, [1] * len(edges)) if n > 1 else new_graph(1, 2, {})
        return SearchResult(FOUND, g, {"iterations": 0})
    eid = {e: i for i, e in enumerate(edges)}
    local = list(combinations(range(m), 2))
    subsets = list(combinations(range(n), m))
    sub_edges = np.array([[eid[(q[a], q[b])] for a, b in local] for q in subsets])
    per_edge = math.comb(n - 2, m - 2)
    inc = np.empty((len(edges), per_edge), dtype=np.int64)
    pos = np.empty((len(edges), per_edge), dtype=np.int64)
    fill = np.zeros(len(edges), dtype=np.int64)
    for si, row in enumerate(sub_edges):
        for bit, e in enumerate(row):
            inc[e, fill[e]] = si
            pos[e, fill[e]] = bit
            fill[e] += 1
    flip = np.left_shift(1, pos)
    table = _cost_table(spec, m, proxy_weight)
    x = rng.integers(0, 2, len(edges))
    weights = np.left_shift(1, np.arange(len(local)))
    state = (x[sub_edges] * weights).sum(axis=1)
    cost = int(table[state].sum())
    tabu = np.zeros(len(edges), dtype=np.int64)
    it = 0
    best = cost
    while cost > 0 and it < budget.iterations:
        it += 1
        cur = state[inc]
        delta = (table[cur ^ flip] - table[cur]).sum(axis=1)
        delta = np.where(tabu > it, np.iinfo(np.int64).max // 4, delta)
        low = delta.min()
        cand = np.flatnonzero(delta == low)
        e = int(cand[rng.integers(len(cand))])
        state[inc[e]] ^= flip[e]
        x[e] ^= 1
        cost += int(low)
        tabu[e] = it + 10 + int(rng.integers(0, 10))
        best = min(best, cost)
    stats = {"iterations": it, "best": best, "seed": budget.seed}
    if cost > 0:
        return SearchResult(EXHAUSTED, None, stats)
    g = new_graph(n, 2, [1 if b else 2 for b in x.tolist()])
    if not _passes(g, spec):
        raise AssertionError("local search produced an invalid witness")
    return SearchResult(FOUND, g, stats)


def search_local_seeds(n: int, spec: ForbiddenSpec, seeds, budget: SearchBudget | None = None,
                       jobs: int = 1, proxy_weight: int = 0) -> SearchResult:
    """Independent tabu runs; the lowest successful seed wins."""
    budget = budget or SearchBudget()
    seeds = list(seeds)

    def run(seed):
        b = SearchBudget(budget.nodes, budget.iterations, seed)
        return search_local(n, spec, b, proxy_weight)

    if jobs > 1:
        with ThreadPoolExecutor(jobs) as pool:
            results = list(pool.map(run, seeds))
    else:
        results = []
        for s in seeds:
            results.append(run(s))
            if results[-1].found:
                break
    for r in results:
        if r.found:
            return r
    return results[-1]
