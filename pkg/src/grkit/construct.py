"""Base-graph catalog and the recursive blow-up builder for w(k, r) / f(k, s, r) witnesses.

A witness is built from a base graph on a few colors, then blown up once per
remaining pair of colors: K3 pairs use the pentagon as outer graph, H pairs the
17-vertex quadratic-residue coloring. Color roles follow ``RoleAssignment``:
H colors ``1..r``, K3 colors ``r+1..r+s``, P3 colors after that.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

import numpy as np

from . import formulas
from .core import (CATALOG, ColoredCompleteGraph, GraphError, RoleAssignment, circulant, from_matrix,
                   join_two_copies, monochromatic, substitute)
from .detect import find_mono_copy, validate_forbidden, validate_witness
from .search import ForbiddenSpec, SearchBudget, search_circulant, search_local
from .store import WitnessStore, name_lock


class ConstructionError(GraphError):
    """A base could not be materialized or a built witness failed validation."""


@dataclass(frozen=True)
class BaseSpec:
    name: str
    n: int
    forbid: tuple  # per local color: names of patterns it is guaranteed to avoid
    source: str

    @property
    def k(self) -> int:
        return len(self.forbid)


_ALL_H = ("H1", "H2", "H3")

BASES = {
    "pentagon5": BaseSpec("pentagon5", 5, (("K3",), ("K3",)), "circulant({1})"),
    "qr17": BaseSpec("qr17", 17, (("K4",), ("K4",)), "circulant({1,2,4,8})"),
    # local color 1 plays H (kept K4-free), color 2 plays K3
    "g8_K3_H": BaseSpec("g8_K3_H", 8, (("K4",), ("K3",)), "circulant search"),
    "g10_K3_H3": BaseSpec("g10_K3_H3", 10, (("H3",), ("K3",)), "petersen"),
    "c21_H3": BaseSpec("c21_H3", 21, (("H3",), ("H3",)), "stored, else search"),
    "mono_K2": BaseSpec("mono_K2", 2, (("P3",),), "hardcoded"),
    "mono_K3": BaseSpec("mono_K3", 3, (("K4",),), "hardcoded"),
    "mono_K4": BaseSpec("mono_K4", 4, (_ALL_H,), "hardcoded"),
    # composites; local colors are ordered H, K3, P3
    "p3_pair": BaseSpec("p3_pair", 2, (("P3",),), "mono_K2"),
    "p3_pair_join": BaseSpec("p3_pair_join", 4, (("K3",), ("P3",)), "join(p3_pair)"),
    "join_c21_H3": BaseSpec("join_c21_H3", 42, (("H3",), ("H3",), ("K3",)), "join(c21_H3)"),
    "g8_p3_blowup": BaseSpec("g8_p3_blowup", 16, (("K4",), ("K3",), ("P3",)),
                             "g8_K3_H[p3_pair]"),
    "k3_p3_blowup": BaseSpec("k3_p3_blowup", 6, (("K4",), ("P3",)), "mono_K3[p3_pair]"),
    "g8_p3_blowup_join": BaseSpec("g8_p3_blowup_join", 32, (("K4",), ("K3",), ("K3",), ("P3",)),
                                  "join(g8_p3_blowup)"),
}

PRIMARY_BASES = ("pentagon5", "qr17", "g8_K3_H", "g10_K3_H3", "c21_H3",
                 "mono_K2", "mono_K3", "mono_K4")

_cache: dict[str, ColoredCompleteGraph] = {}
_cache_lock = threading.Lock()


def petersen_edges():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return outer + inner + spokes


def _petersen_base() -> ColoredCompleteGraph:
    mat = np.ones((10, 10), dtype=np.uint8)
    for u, v in petersen_edges():
        mat[u, v] = mat[v, u] = 2
    np.fill_diagonal(mat, 0)
    return from_matrix(mat, 2)


def _spec_of(b: BaseSpec) -> ForbiddenSpec:
    return ForbiddenSpec.of({c: names[0] for c, names in enumerate(b.forbid, start=1)})


def check_base(name: str, g: ColoredCompleteGraph) -> None:
    b = BASES[name]
    if g.n != b.n or g.k != b.k:
        raise ConstructionError(f"{name}: expected n={b.n} k={b.k}, got n={g.n} k={g.k}")
    if validate_forbidden(g, {}).rainbow_triangle is not None:
        raise ConstructionError(f"{name}: rainbow triangle")
    for c, names in enumerate(b.forbid, start=1):
        for pat in names:
            emb = find_mono_copy(g, CATALOG[pat], c)
            if emb is not None:
                raise ConstructionError(f"{name}: {pat} in color {c} at {emb}")


def _materialize(name: str, store: WitnessStore | None) -> ColoredCompleteGraph:
    if name == "pentagon5":
        return circulant(5, [1])
    if name == "qr17":
        return circulant(17, [1, 2, 4, 8])
    if name == "g8_K3_H":
        res = search_circulant(8, _spec_of(BASES[name]))
        if not res.found:
            raise ConstructionError("no circulant g8_K3_H")
        return res.graph
    if name == "g10_K3_H3":
        g = _petersen_base()
        try:
            check_base(name, g)
            return g
        except ConstructionError:
            res = search_local(10, _spec_of(BASES[name]))
            if not res.found:
                raise ConstructionError("g10_K3_H3 unavailable") from None
            return res.graph
    if name == "c21_H3":
        return _c21(store)
    if name.startswith("mono_K"):
        return monochromatic(int(name[-1]), 1)
    if name == "p3_pair":
        return monochromatic(2, 1)
    if name == "p3_pair_join":
        return join_two_copies(monochromatic(2, 2, 2), 1)
    if name == "join_c21_H3":
        return join_two_copies(base("c21_H3", store).recolor([1, 2], 3), 3)
    if name == "g8_p3_blowup":
        outer = base("g8_K3_H", store).recolor([1, 2], 3)
        return substitute(outer, [monochromatic(2, 3, 3)] * outer.n)
    if name == "k3_p3_blowup":
        outer = monochromatic(3, 1, 2)
        return substitute(outer, [monochromatic(2, 2, 2)] * 3)
    if name == "g8_p3_blowup_join":
        return join_two_copies(base("g8_p3_blowup", store).recolor([1, 2, 4], 4), 3)
    raise ConstructionError(f"unknown base {name!r}")


def _c21(store: WitnessStore | None) -> ColoredCompleteGraph:
    if store is not None:
        g = store.load("c21_H3")
        if g is not None:
            return g
    spec = _spec_of(BASES["c21_H3"])
    res = search_circulant(21, spec)
    meta = {"spec": str(spec), "circulant_splits": res.stats["splits"]}
    if not res.found:
        for seed in range(8):
            res = search_local(21, spec, SearchBudget(seed=seed))
            if res.found:
                break
        else:
            raise ConstructionError("c21_H3: local search exhausted")
        meta.update(method="local", seed=res.stats["seed"], iterations=res.stats["iterations"])
    else:
        meta.update(method="circulant", first=res.stats["first"])
    if store is not None:
        with name_lock("c21_H3"):
            store.save("c21_H3", res.graph, meta)
    return res.graph


def base(name: str, store: WitnessStore | None = None) -> ColoredCompleteGraph:
    """Materialize and validate a catalog base (cached per process)."""
    if name not in BASES:
        raise ConstructionError(f"unknown base {name!r}")
    g = _cache.get(name)
    if g is not None:
        return g
    with name_lock("base:" + name):
        g = _cache.get(name)
        if g is None:
            g = _materialize(name, store)
            check_base(name, g)
            with _cache_lock:
                _cache[name] = g
    return g


# --------------------------------------------------------------------- plans

@dataclass(frozen=True)
class ConstructionPlan:
    kind: str               # "w" or "f"
    args: tuple
    case: str
    roles: RoleAssignment
    base: str
    base_colors: tuple      # local color i -> global color base_colors[i-1]
    steps: tuple = field(default=())  # ((outer name, (c1, c2)), ...)
    target: int = 0

    @property
    def name(self) -> str:
        return f"{self.kind}_" + "_".join(map(str, self.args))

    def size(self) -> int:
        n = BASES[self.base].n
        for outer, _ in self.steps:
            n *= BASES[outer].n
        return n


def _pairs(colors):
    colors = list(colors)
    if len(colors) % 2:
        raise AssertionError(f"odd number of leftover colors {colors}")
    return [(colors[i], colors[i + 1]) for i in range(0, len(colors), 2)]


def _finish(kind, args, case, roles, base_name, base_colors, target):
    used = set(base_colors)
    k3 = [c for c in range(roles.r + 1, roles.r + roles.s + 1) if c not in used]
    hs = [c for c in range(1, roles.r + 1) if c not in used]
    steps = tuple([("pentagon5", p) for p in _pairs(k3)] + [("qr17", p) for p in _pairs(hs)])
    plan = ConstructionPlan(kind, tuple(args), case, roles, base_name, tuple(base_colors), steps, target)
    if plan.size() != target:
        raise AssertionError(f"{plan.name}: plan size {plan.size()} != {target}")
    return plan


def plan_w(k: int, r: int, h: int = 1) -> ConstructionPlan:
    """Plan for a w(k, r)-vertex coloring with no rainbow triangle, no mono K3 in
    colors r+1..k and no mono H_h in colors 1..r."""
    if h not in (1, 2):
        raise formulas.DomainError("plan_w takes h in {1, 2}; use plan_f(k, k - r, r) for H3")
    case = formulas.case_of_w(k, r)
    s = k - r
    roles = RoleAssignment(k, r, s, f"H{h}")
    k3, hc = r + 1, 1  # lowest color of each role
    if case == "a1":
        base_name, cols = ("pentagon5", (k3, k3 + 1)) if s >= 2 else ("qr17", (hc, hc + 1))
    elif case == "a2":
        base_name, cols = "mono_K2", (k3,)
    elif case == "a3":
        base_name, cols = "g8_K3_H", (hc, k3)
    else:
        base_name, cols = "mono_K4", (hc,)
    return _finish("w", (k, r, h), case, roles, base_name, cols, formulas.w(k, r))


def plan_f(k: int, s: int, r: int) -> ConstructionPlan:
    """Plan for an f(k, s, r)-vertex coloring avoiding H3 / K3 / P3 by role."""
    case = formulas.case_of_f(k, s, r)
    roles = RoleAssignment(k, r, s, "H3")
    hc, k3, p3 = 1, r + 1, r + s + 1
    if case == "b1":
        base_name, cols = ("c21_H3", (hc, hc + 1)) if r >= 2 else ("pentagon5", (k3, k3 + 1))
    elif case == "b2":
        base_name, cols = "p3_pair", (p3,)
    elif case == "b3":
        base_name, cols = ("join_c21_H3", (hc, hc + 1, k3)) if r >= 2 else ("mono_K2", (k3,))
    elif case == "b4":
        base_name, cols = "p3_pair_join", (k3, p3)
    elif case == "b5":
        base_name, cols = "g10_K3_H3", (hc, k3)
    elif case == "b6":
        base_name, cols = "g8_p3_blowup", (hc, k3, p3)
    elif case == "b7":
        base_name, cols = "mono_K4", (hc,)
    elif s == 0:
        base_name, cols = "k3_p3_blowup", (hc, p3)
    else:
        base_name, cols = "g8_p3_blowup_join", (hc, k3, k3 + 1, p3)
    return _finish("f", (k, s, r), case, roles, base_name, cols, formulas.f(k, s, r))


def build(plan: ConstructionPlan, store: WitnessStore | None = None, validate: bool = True
          ) -> ColoredCompleteGraph:
    """Run the plan; the result is validated unless ``validate`` is False."""
    k = plan.roles.k
    g = base(plan.base, store).recolor(list(plan.base_colors), k)
    for outer_name, (c1, c2) in plan.steps:
        outer = base(outer_name, store).recolor([c1, c2], k)
        g = substitute(outer, [g] * outer.n)
    if g.n != plan.target:
        raise ConstructionError(f"{plan.name}: built {g.n} vertices, expected {plan.target}")
    if validate:
        rep = validate_witness(g, plan.roles)
        if not rep.valid:
            raise ConstructionError(f"{plan.name}: invalid witness: " + "; ".join(rep.lines()[1:]))
    return g


def witness_name(kind: str, *args) -> str:
    return f"{kind}_" + "_".join(map(str, args))


def build_and_store(plan: ConstructionPlan, store: WitnessStore) -> ColoredCompleteGraph:
    g = build(plan, store)
    meta = {"case": plan.case, "base": plan.base, "steps": len(plan.steps), "n": g.n}
    with name_lock(plan.name):
        store.save(plan.name, g, meta)
    return g
