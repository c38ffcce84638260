"""``grkit`` command line.

Output is line-oriented ``key=value`` text. Exit codes: 0 success, 1 property
violated (or absence where presence was expected), 2 usage or format error,
3 budget exhausted.
"""

from __future__ import annotations

import argparse
import sys

from . import formulas
from .core import GraphError, RoleAssignment, parse, read_gcg, serialize, write_gcg
from .detect import validate_forbidden, validate_witness
from .gallai import RainbowTriangleError, gallai_partition, peel_uniform_vertices, reduced_graph
from .search import (EXHAUSTED, FOUND, BudgetExhausted, ForbiddenSpec, SearchBudget,
                     SearchRefused, ramsey_exhaust, search_backtrack, search_circulant,
                     search_local_seeds)
from .store import WitnessStore, name_lock

OK, VIOLATION, USAGE, BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _out(*lines):
    for line in lines:
        print(line)


def _h_index(text: str) -> int:
    t = text.lower().lstrip("h")
    if t not in ("1", "2", "3"):
        raise UsageError(f"h must be h1, h2 or h3, got {text!r}")
    return int(t)


# --------------------------------------------------------------------- eval

def cmd_eval(a) -> int:
    if a.what == "w":
        k, r = _ints(a.args, 2)
        _out(f"GR={formulas.gr_w(k, r)} case={formulas.case_of_w(k, r)}")
    elif a.what == "f":
        k, s, r = _ints(a.args, 3)
        _out(f"GR={formulas.gr_f(k, s, r)} case={formulas.case_of_f(k, s, r)}")
    elif a.what == "gr":
        if len(a.args) != 2:
            raise UsageError("eval gr K h1|h2|h3")
        k, h = int(a.args[0]), _h_index(a.args[1])
        case = formulas.case_of_w(k, k) if h < 3 else formulas.case_of_f(k, 0, k)
        _out(f"GR={formulas.gr_main(k, h)} case={case}")
    elif a.what == "k3":
        (k,) = _ints(a.args, 1)
        _out(f"GR={formulas.gr_k3(k)}")
    elif a.what == "p3":
        (k,) = _ints(a.args, 1)
        _out(f"GR={formulas.gr_p3(k)}")
    else:
        if len(a.args) != 1:
            raise UsageError("eval const NAME")
        _out(f"name={a.args[0]} value={formulas.ramsey_constant(a.args[0])}")
    return OK


def _ints(args, count):
    if len(args) != count:
        raise UsageError(f"expected {count} integer arguments")
    try:
        return [int(x) for x in args]
    except ValueError:
        raise UsageError("arguments must be integers") from None


# ---------------------------------------------------------------- construct

def cmd_construct(a) -> int:
    from . import construct

    store = WitnessStore(a.store)
    if a.what == "base":
        if len(a.args) != 1:
            raise UsageError("construct base NAME")
        name = a.args[0]
        g = construct.base(name, store)
        extra = f"base={name}"
        meta = {"n": g.n, "source": construct.BASES[name].source.replace(" ", "_")}
    else:
        if a.what == "w":
            k, r = _ints(a.args, 2)
            plan = construct.plan_w(k, r, _h_index(a.h or "h1"))
        else:
            k, s, r = _ints(a.args, 3)
            plan = construct.plan_f(k, s, r)
        name = plan.name
        g = construct.build(plan, store)
        extra = f"case={plan.case} base={plan.base} blowups={len(plan.steps)}"
        meta = {"n": g.n, "case": plan.case, "base": plan.base, "blowups": len(plan.steps)}
    if a.output:
        write_gcg(g, a.output)
        dest = a.output
    else:
        with name_lock(name):
            # keep the sidecar a search left behind
            dest = store.save(name, g, None if store.meta(name) else meta)
    _out(f"n={g.n} k={g.k} {extra}", f"file={dest}")
    return OK


# ------------------------------------------------------------------ verify

def _roles(text: str, k: int, h: str) -> RoleAssignment:
    try:
        r, s = (int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--roles expects r,s, got {text!r}") from None
    return RoleAssignment(k, r, s, f"H{_h_index(h)}")


def cmd_verify(a) -> int:
    g = read_gcg(a.file)
    rep = validate_witness(g, _roles(a.roles, g.k, a.h))
    _out(f"n={g.n} k={g.k}", *rep.lines())
    return OK if rep.valid else VIOLATION


def cmd_partition(a) -> int:
    g = read_gcg(a.file)
    try:
        parts = gallai_partition(g)
    except RainbowTriangleError as exc:
        _out("gallai=no", "rainbow=" + ",".join(map(str, exc.triangle)))
        return VIOLATION
    red = reduced_graph(g, parts)
    _out("gallai=yes", f"parts={len(parts)}",
         "cross_colors=" + ",".join(map(str, sorted(red.colors_used()))))
    for i, p in enumerate(parts):
        _out(f"part{i}=" + ",".join(map(str, p)))
    _out("reduced:", serialize(red).rstrip("\n"))
    return OK


def cmd_peel(a) -> int:
    g = read_gcg(a.file)
    res = peel_uniform_vertices(g)
    _out(f"length={len(res.sequence)}",
         "t=" + ",".join(str(v) for v, _ in res.sequence),
         "colors=" + ",".join(str(c) for _, c in res.sequence),
         "remainder=" + ",".join(map(str, res.remainder)))
    return OK


# ------------------------------------------------------------------ search

def cmd_search(a) -> int:
    spec = ForbiddenSpec.parse(a.forbid)
    budget = SearchBudget(nodes=a.budget, iterations=a.budget or 200_000, seed=a.seed)
    if a.method == "circulant":
        res = search_circulant(a.n, spec, budget, jobs=a.jobs)
    elif a.method == "backtrack":
        res = search_backtrack(a.n, spec, budget, gallai=a.gallai)
    else:
        res = search_local_seeds(a.n, spec, range(a.seed, a.seed + a.seeds), budget, jobs=a.jobs)
    _out(f"status={res.status}", *(f"{k}={v}" for k, v in res.stats.items()))
    if res.status == FOUND:
        g = res.graph
        if a.output:
            write_gcg(g, a.output)
            _out(f"file={a.output}")
        if a.save:
            store = WitnessStore(a.store)
            meta = {"spec": str(spec), "method": a.method, "seed": a.seed, **res.stats}
            with name_lock(a.save):
                _out(f"file={store.save(a.save, g, meta)}")
        return OK
    return BUDGET if res.status == EXHAUSTED else VIOLATION


def _paired_witness(store: WitnessStore, n: int, spec: ForbiddenSpec):
    if not store.root.is_dir():
        return None
    for path in sorted(store.root.glob("*.gcg")):
        try:
            g = parse(path.read_text())
        except GraphError:
            continue
        if g.n != n or g.k != spec.k:
            continue
        orders = [("direct", spec)] + ([("swapped", spec.swapped())] if spec.k == 2 else [])
        for label, sp in orders:
            if not validate_forbidden(g, sp.as_dict()).violations:
                return path, label
    return None


def cmd_ramsey(a) -> int:
    spec = ForbiddenSpec.parse(a.forbid)
    budget = SearchBudget(nodes=a.budget)
    try:
        res = ramsey_exhaust(a.n, spec, budget)
    except SearchRefused as exc:
        _out(f"error={exc}")
        return USAGE
    method = res.stats.get("method", "")
    if res.status == EXHAUSTED:
        _out("upper=exhausted", f"n={a.n}", f"method={method}", f"nodes={res.stats.get('nodes')}")
        return BUDGET
    if res.status == FOUND:
        _out("upper=refuted", f"n={a.n}", f"method={method}",
             "coloring=" + serialize(res.graph).replace("\n", "|"))
        return VIOLATION
    _out("upper=proved", f"n={a.n}", f"method={method}",
         *(f"{k}={v}" for k, v in res.stats.items() if k != "method"))
    hit = _paired_witness(WitnessStore(a.store), a.n - 1, spec)
    if hit is None:
        _out("lower=missing")
    else:
        _out("lower=witness", f"witness={hit[0]}", f"order={hit[1]}")
    return OK


def cmd_tables(a) -> int:
    results = formulas.sweep_tables(a.kmax)
    bad = 0
    for name, res in results.items():
        _out(f"{name} checked={res.checked} skipped={res.skipped} failures={len(res.failures)}")
        for msg in res.failures[:5]:
            _out("  " + msg)
        bad += len(res.failures)
    _out(f"status={'ok' if bad == 0 else 'failed'}")
    return OK if bad == 0 else VIOLATION


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="grkit", description="Gallai-Ramsey toolkit")
    p.add_argument("--store", help="witness store directory (default $GRKIT_STORE or ./witnesses)")
    p.add_argument("--jobs", type=int, default=1, help="worker threads for search")
    sub = p.add_subparsers(dest="verb", required=True)

    e = sub.add_parser("eval", help="evaluate w, f, GR values and cited constants")
    e.add_argument("what", choices=["w", "f", "gr", "k3", "p3", "const"])
    e.add_argument("args", nargs="+")
    e.set_defaults(func=cmd_eval)

    c = sub.add_parser("construct", help="build and validate a witness")
    c.add_argument("what", choices=["w", "f", "base"])
    c.add_argument("args", nargs="+")
    c.add_argument("--h", help="h1 or h2 for w witnesses (default h1)")
    c.add_argument("-o", "--output", help="write GCG here instead of the store")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="validate a GCG file against color roles")
    v.add_argument("file")
    v.add_argument("--roles", required=True, help="r,s: r H-colors then s K3-colors, rest P3")
    v.add_argument("--h", default="h3", help="pattern for the H colors (default h3)")
    v.set_defaults(func=cmd_verify)

    for verb, fn, text in (("partition", cmd_partition, "Gallai partition and reduced graph"),
                           ("peel", cmd_peel, "peel uniform vertices")):
        q = sub.add_parser(verb, help=text)
        q.add_argument("file")
        q.set_defaults(func=fn)

    s = sub.add_parser("search", help="search for a coloring avoiding a spec")
    s.add_argument("method", choices=["circulant", "backtrack", "local"])
    s.add_argument("n", type=int)
    s.add_argument("--forbid", required=True, help="e.g. 1:K3,2:K4")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--seeds", type=int, default=1, help="local search: number of seeds")
    s.add_argument("--budget", type=int, help="node / split / iteration limit")
    s.add_argument("--gallai", action="store_true", help="backtrack: also forbid rainbow triangles")
    s.add_argument("-o", "--output")
    s.add_argument("--save", metavar="NAME", help="store the witness as NAME with a sidecar")
    s.set_defaults(func=cmd_search)

    r = sub.add_parser("ramsey", help="exhaustive Ramsey upper bounds")
    r.add_argument("action", choices=["prove"])
    r.add_argument("n", type=int)
    r.add_argument("--forbid", required=True)
    r.add_argument("--budget", type=int, help="backtracking node limit")
    r.set_defaults(func=cmd_ramsey)

    t = sub.add_parser("tables", help="ratio tables, inequalities and closed forms")
    t.add_argument("action", choices=["check"])
    t.add_argument("--kmax", type=int, default=20)
    t.set_defaults(func=cmd_tables)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return a.func(a)
    except BudgetExhausted as exc:
        print(f"status=exhausted {exc}", file=sys.stderr)
        return BUDGET
    except (UsageError, GraphError, formulas.DomainError, KeyError, OSError) as exc:
        print(f"error={exc}", file=sys.stderr)
        return USAGE


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
