"""Gallai partitions via the root of the modular decomposition, and vertex peeling."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .core import ColoredCompleteGraph, GraphError
from .detect import find_rainbow_triangle

Partition = list  # list of sorted vertex lists


class RainbowTriangleError(GraphError):
    """The input has a rainbow triangle, so no Gallai partition need exist."""

    def __init__(self, triangle):
        super().__init__("rainbow triangle at " + ",".join(map(str, triangle)))
        self.triangle = tuple(triangle)


def _normalize(g: ColoredCompleteGraph, partition) -> list[list[int]]:
    parts = [sorted(int(v) for v in p) for p in partition]
    seen = np.zeros(g.n, dtype=bool)
    for p in parts:
        if not p:
            raise GraphError("empty part")
        if p[0] < 0 or p[-1] >= g.n:
            raise GraphError("vertex out of range")
        if len(set(p)) != len(p) or seen[p].any():
            raise GraphError("parts are not disjoint")
        seen[p] = True
    if not seen.all():
        raise GraphError("parts do not cover the vertex set")
    return parts


def cross_colors(g: ColoredCompleteGraph, partition) -> dict | None:
    """{(i, j): color} for every pair of parts, or None if some pair is not monochromatic."""
    parts = _normalize(g, partition)
    m = g.matrix
    out = {}
    for i in range(len(parts)):
        rows = m[parts[i]]
        for j in range(i + 1, len(parts)):
            block = rows[:, parts[j]]
            c = block.flat[0]
            if (block != c).any():
                return None
            out[(i, j)] = int(c)
    return out


def is_gallai_partition(g: ColoredCompleteGraph, partition) -> bool:
    if len(partition) < 2:
        _normalize(g, partition)
        return False
    cc = cross_colors(g, partition)
    return cc is not None and len(set(cc.values())) <= 2


def smallest_module(g: ColoredCompleteGraph, seeds) -> list[int]:
    """Inclusion-minimal module containing ``seeds``."""
    seeds = [int(s) for s in seeds]
    if len(set(seeds)) < 2:
        raise GraphError("need two distinct seed vertices")
    if min(seeds) < 0 or max(seeds) >= g.n:
        raise GraphError("vertex out of range")
    return np.flatnonzero(kernels.module_closure(g.matrix, seeds)).tolist()


def _degenerate_parts(g: ColoredCompleteGraph):
    """Components of the non-c graph when it is disconnected for some color c."""
    m = g.matrix
    n = g.n
    for c in sorted(g.colors_used()):
        other = (m != c)
        np.fill_diagonal(other, False)
        label = np.full(n, -1)
        comp = 0
        for start in range(n):
            if label[start] >= 0:
                continue
            label[start] = comp
            stack = [start]
            while stack:
                u = stack.pop()
                new = np.flatnonzero(other[u] & (label < 0))
                label[new] = comp
                stack.extend(new.tolist())
            comp += 1
        if comp > 1:
            return [np.flatnonzero(label == i).tolist() for i in range(comp)]
    return None


def _prime_parts(g: ColoredCompleteGraph):
    # under a prime root, u and v share a maximal module iff their closure is not V
    n = g.n
    m = g.matrix
    part = np.full(n, -1)
    parts = []
    for u in range(n):
        if part[u] >= 0:
            continue
        part[u] = len(parts)
        members = [u]
        for v in range(u + 1, n):
            if part[v] >= 0:
                continue
            inside = kernels.module_closure(m, [u, v])
            if not inside.all():
                idx = np.flatnonzero(inside & (part < 0))
                part[idx] = len(parts)
                members.extend(idx.tolist())
        parts.append(sorted(members))
    return parts


def gallai_partition(g: ColoredCompleteGraph) -> Partition:
    """Partition into the maximal proper modules (singletons for <= 2 colors)."""
    if g.n < 2:
        raise GraphError("need at least 2 vertices")
    tri = find_rainbow_triangle(g)
    if tri is not None:
        raise RainbowTriangleError(tri)
    if len(g.colors_used()) <= 2:
        return [[v] for v in range(g.n)]
    parts = _degenerate_parts(g)
    if parts is None:
        parts = _prime_parts(g)
    parts.sort(key=lambda p: p[0])
    return parts


def reduced_graph(g: ColoredCompleteGraph, partition) -> ColoredCompleteGraph:
    if not is_gallai_partition(g, partition):
        raise GraphError("not a Gallai partition")
    cc = cross_colors(g, partition)
    ell = len(partition)
    mat = np.zeros((ell, ell), dtype=np.uint8)
    for (i, j), c in cc.items():
        mat[i, j] = mat[j, i] = c
    return ColoredCompleteGraph(ell, g.k, mat)


@dataclass
class PeelResult:
    sequence: list  # [(vertex, color), ...]
    remainder: list

    @property
    def vertices(self) -> list[int]:
        return [v for v, _ in self.sequence]


def _uniform_color(m, v, rest):
    row = m[v, rest]
    row = row[rest != v]
    if row.size == 0:
        return None
    c = row[0]
    return int(c) if (row == c).all() else None


def peel_uniform_vertices(g: ColoredCompleteGraph) -> PeelResult:
    """Greedily remove the lowest vertex whose edges to the rest share one color."""
    m = g.matrix
    rest = np.arange(g.n)
    seq = []
    while rest.size > 1:
        sub = m[np.ix_(rest, rest)].astype(np.int16)
        np.fill_diagonal(sub, -1)
        hi = sub.max(axis=1)
        sub[sub < 0] = 256
        uniform = np.flatnonzero(sub.min(axis=1) == hi)
        if uniform.size == 0:
            break
        i = int(uniform[0])
        seq.append((int(rest[i]), int(hi[i])))
        rest = np.delete(rest, i)
    return PeelResult(seq, rest.tolist())


def is_uniform_to(g: ColoredCompleteGraph, v: int, rest) -> int | None:
    """Common color of the edges from v to ``rest`` (v excluded), or None."""
    return _uniform_color(g.matrix, v, np.asarray(list(rest)))
