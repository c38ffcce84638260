"""Edge-colored complete graphs, the substitution product, patterns and GCG I/O."""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import kernels

MAX_COLORS = 255

Embedding = tuple  # pattern vertex i -> graph vertex embedding[i]


class GraphError(ValueError):
    """Invalid graph construction or argument."""


class FormatError(GraphError):
    """Malformed GCG text."""


class ColoredCompleteGraph:
    """A complete graph on ``n`` vertices whose edges carry colors ``1..k``.

    The color matrix is symmetric with a zero diagonal and is never mutated
    after construction. Per-color adjacency bitsets are built on first use
    and cached.
    """

    __slots__ = ("_n", "_k", "_mat", "_bits", "_lock")

    def __init__(self, n: int, k: int, matrix: np.ndarray, *, _trusted: bool = False):
        if not _trusted:
            matrix = _check_matrix(n, k, matrix)
        matrix.flags.writeable = False
        self._n = n
        self._k = k
        self._mat = matrix
        self._bits = {}
        self._lock = threading.Lock()

    @property
    def n(self) -> int:
        return self._n

    @property
    def k(self) -> int:
        return self._k

    @property
    def matrix(self) -> np.ndarray:
        """Read-only ``(n, n)`` uint8 color matrix, 0 on the diagonal."""
        return self._mat

    def color(self, u: int, v: int) -> int:
        if u == v:
            raise GraphError("no color on the diagonal")
        return int(self._mat[u, v])

    def colors_used(self) -> set[int]:
        iu = np.triu_indices(self._n, 1)
        return {int(c) for c in np.unique(self._mat[iu])}

    def bitsets(self, color: int):
        """Backend-specific adjacency bitsets of the color class (cached)."""
        bits = self._bits.get(color)
        if bits is None:
            with self._lock:
                bits = self._bits.get(color)
                if bits is None:
                    bits = kernels.color_bitsets(self._mat, color)
                    self._bits[color] = bits
        return bits

    def edges(self, color: int) -> list[tuple[int, int]]:
        us, vs = np.nonzero(np.triu(self._mat == color, 1))
        return list(zip(us.tolist(), vs.tolist()))

    def recolor(self, mapping: Sequence[int], k: int) -> "ColoredCompleteGraph":
        """Relabel color ``c`` as ``mapping[c - 1]`` in a ``k``-color palette."""
        if len(mapping) != self._k:
            raise GraphError(f"mapping has {len(mapping)} entries, need {self._k}")
        lut = np.zeros(256, dtype=np.uint8)
        lut[1:self._k + 1] = mapping
        return ColoredCompleteGraph(self._n, k, lut[self._mat])

    def __eq__(self, other):
        if not isinstance(other, ColoredCompleteGraph):
            return NotImplemented
        return (self._n == other._n and self._k == other._k
                and np.array_equal(self._mat, other._mat))

    def __hash__(self):
        return hash((self._n, self._k, self._mat.tobytes()))

    def __len__(self):
        return self._n

    def __repr__(self):
        return f"ColoredCompleteGraph(n={self._n}, k={self._k})"


def _check_matrix(n, k, matrix) -> np.ndarray:
    if n < 1:
        raise GraphError("n must be >= 1")
    if not 1 <= k <= MAX_COLORS:
        raise GraphError(f"k must be in [1, {MAX_COLORS}]")
    m = np.array(matrix, dtype=np.int64, copy=True)
    if m.shape != (n, n):
        raise GraphError(f"color matrix has shape {m.shape}, expected {(n, n)}")
    if np.any(np.diag(m) != 0):
        raise GraphError("diagonal must be 0")
    if not np.array_equal(m, m.T):
        raise GraphError("color matrix is not symmetric")
    off = m[~np.eye(n, dtype=bool)]
    if off.size and (off.min() < 1 or off.max() > k):
        raise GraphError(f"colors must lie in [1, {k}]")
    return np.ascontiguousarray(m, dtype=np.uint8)


def new_graph(n: int, k: int, table) -> ColoredCompleteGraph:
    """Build a graph from a color table.

    ``table`` is either a mapping ``{(u, v): color}`` covering every pair, a
    flat sequence of colors in row-major upper-triangular order (the GCG row
    order), or an ``(n, n)`` symmetric matrix.
    """
    if n < 1:
        raise GraphError("n must be >= 1")
    if not 1 <= k <= MAX_COLORS:
        raise GraphError(f"k must be in [1, {MAX_COLORS}]")
    npairs = n * (n - 1) // 2
    mat = np.zeros((n, n), dtype=np.int64)
    if isinstance(table, Mapping):
        seen = set()
        for (u, v), c in table.items():
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"bad pair {(u, v)}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"pair {key} given twice")
            seen.add(key)
            mat[u, v] = mat[v, u] = c
        if len(seen) != npairs:
            raise GraphError(f"table covers {len(seen)} pairs, need {npairs}")
    else:
        arr = np.asarray(table, dtype=np.int64)
        if arr.ndim == 2:
            mat = arr
        else:
            if arr.size != npairs:
                raise GraphError(f"table has {arr.size} colors, need {npairs}")
            iu = np.triu_indices(n, 1)
            mat[iu] = arr
            mat.T[iu] = arr
    return ColoredCompleteGraph(n, k, mat)


def from_matrix(matrix, k: int | None = None) -> ColoredCompleteGraph:
    m = np.asarray(matrix)
    n = m.shape[0]
    if k is None:
        k = max(1, int(m.max()) if m.size else 1)
    return ColoredCompleteGraph(n, k, m)


def monochromatic(n: int, color: int = 1, k: int | None = None) -> ColoredCompleteGraph:
    k = color if k is None else k
    if not 1 <= color <= k:
        raise GraphError("color out of range")
    mat = np.full((n, n), color, dtype=np.uint8)
    np.fill_diagonal(mat, 0)
    return ColoredCompleteGraph(n, k, mat)


def circulant(n: int, first: Iterable[int], colors=(1, 2), k: int | None = None) -> ColoredCompleteGraph:
    """2-coloring of K_n on Z_n: difference d gets colors[0] iff d or -d is in ``first``."""
    k = max(colors) if k is None else k
    first = {d % n for d in first}
    first |= {(-d) % n for d in first}
    diff = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n
    mat = np.where(np.isin(diff, list(first)), colors[0], colors[1]).astype(np.uint8)
    np.fill_diagonal(mat, 0)
    return ColoredCompleteGraph(n, k, mat)


def substitute(outer: ColoredCompleteGraph, parts: Sequence[ColoredCompleteGraph]) -> ColoredCompleteGraph:
    """Replace vertex i of ``outer`` by a copy of ``parts[i]``.

    Edges inside a copy keep the part's color, edges between copies i and j
    get ``outer.color(i, j)``. Vertices are numbered copy by copy.
    """
    if len(parts) != outer.n:
        raise GraphError(f"need {outer.n} parts, got {len(parts)}")
    if any(p.k != outer.k for p in parts):
        raise GraphError("all graphs must share the same k")
    sizes = np.array([p.n for p in parts])
    owner = np.repeat(np.arange(outer.n), sizes)
    mat = outer.matrix[owner[:, None], owner[None, :]].copy()
    start = 0
    for p in parts:
        mat[start:start + p.n, start:start + p.n] = p.matrix
        start += p.n
    return ColoredCompleteGraph(int(sizes.sum()), outer.k, mat, _trusted=True)


def join_two_copies(g: ColoredCompleteGraph, color: int) -> ColoredCompleteGraph:
    if not 1 <= color <= g.k:
        raise GraphError(f"color {color} out of range [1, {g.k}]")
    return substitute(monochromatic(2, color, g.k), [g, g])


def induced(g: ColoredCompleteGraph, vertices: Iterable[int]) -> ColoredCompleteGraph:
    vs = sorted(set(int(v) for v in vertices))
    if not vs:
        raise GraphError("empty vertex set")
    if vs[0] < 0 or vs[-1] >= g.n:
        raise GraphError("vertex out of range")
    idx = np.array(vs)
    return ColoredCompleteGraph(len(vs), g.k, g.matrix[np.ix_(idx, idx)].copy(), _trusted=True)


# ---------------------------------------------------------------- GCG format

def serialize(g: ColoredCompleteGraph) -> str:
    lines = ["GCG 1", f"{g.n} {g.k}"]
    m = g.matrix
    for i in range(1, g.n):
        lines.append(" ".join(map(str, m[i - 1, i:].tolist())))
    return "\n".join(lines) + "\n"


def parse(text: str) -> ColoredCompleteGraph:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    i = 0
    while i < len(lines) and lines[i].startswith("#"):
        i += 1
    if i >= len(lines) or lines[i] != "GCG 1":
        raise FormatError("missing 'GCG 1' header")
    i += 1
    if i >= len(lines):
        raise FormatError("missing size line")
    head = lines[i].split(" ")
    if len(head) != 2 or not all(t.isdigit() for t in head):
        raise FormatError(f"malformed size line {lines[i]!r}")
    n, k = int(head[0]), int(head[1])
    if n < 1 or not 1 <= k <= MAX_COLORS:
        raise FormatError(f"bad size line n={n} k={k}")
    rows = lines[i + 1:]
    if len(rows) != n - 1:
        raise FormatError(f"expected {n - 1} color rows, found {len(rows)}")
    mat = np.zeros((n, n), dtype=np.uint8)
    for r, line in enumerate(rows, start=1):
        toks = line.split(" ")
        if len(toks) != n - r or not all(t.isdigit() for t in toks):
            raise FormatError(f"row {r}: expected {n - r} colors")
        vals = [int(t) for t in toks]
        if min(vals) < 1 or max(vals) > k:
            raise FormatError(f"row {r}: color out of range [1, {k}]")
        mat[r - 1, r:] = vals
        mat[r:, r - 1] = vals
    return ColoredCompleteGraph(n, k, mat, _trusted=True)


def read_gcg(path) -> ColoredCompleteGraph:
    with open(path) as fh:
        return parse(fh.read())


def write_gcg(g: ColoredCompleteGraph, path) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(serialize(g))


# ----------------------------------------------------------------- patterns

@dataclass(frozen=True)
class Pattern:
    """A small simple graph used as a forbidden monochromatic target.

    Vertex order matters for search: each vertex is matched against the
    already-placed vertices it is adjacent to, so dense cores go first.
    """

    name: str
    m: int
    edges: frozenset
    earlier: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not 2 <= self.m <= 5:
            raise GraphError("pattern size must be in [2, 5]")
        norm = set()
        for u, v in self.edges:
            if u == v or not (0 <= u < self.m and 0 <= v < self.m):
                raise GraphError(f"bad pattern edge {(u, v)}")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))
        earlier = tuple(tuple(j for j in range(i) if (j, i) in norm) for i in range(self.m))
        object.__setattr__(self, "earlier", earlier)

    def adjacent(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def copies_in(self, n: int) -> list[frozenset]:
        """Edge sets of all distinct copies of this pattern inside K_n."""
        seen = set()
        for vs in combinations(range(n), self.m):
            for perm in permutations(vs):
                es = frozenset((min(perm[a], perm[b]), max(perm[a], perm[b])) for a, b in self.edges)
                seen.add(es)
        return sorted(seen, key=sorted)


def _complete(m):
    return frozenset(combinations(range(m), 2))


_K4 = _complete(4)

CATALOG = {
    "K2": Pattern("K2", 2, _complete(2)),
    "P3": Pattern("P3", 3, frozenset({(0, 1), (1, 2)})),
    "K3": Pattern("K3", 3, _complete(3)),
    "K4-e": Pattern("K4-e", 4, _K4 - {(2, 3)}),
    "K4": Pattern("K4", 4, _K4),
    "H1": Pattern("H1", 5, _K4 | {(0, 4)}),
    "H2": Pattern("H2", 5, _K4 | {(0, 4), (1, 4)}),
    "H3": Pattern("H3", 5, _complete(5) - {(3, 4)}),
    "K5": Pattern("K5", 5, _complete(5)),
}

_BY_KEY = {name.upper(): pat for name, pat in CATALOG.items()}
_BY_KEY.update({"K4E": CATALOG["K4-e"], "K4−E": CATALOG["K4-e"], "K5-E": CATALOG["H3"]})


def get_pattern(name: str) -> Pattern:
    try:
        return _BY_KEY[name.strip().upper()]
    except KeyError:
        raise GraphError(f"unknown pattern {name!r}") from None


@dataclass(frozen=True)
class RoleAssignment:
    """Which pattern each color must avoid.

    Colors ``1..r`` avoid ``h``, colors ``r+1..r+s`` avoid K3 and the remaining
    ``k-r-s`` colors avoid P3.
    """

    k: int
    r: int
    s: int
    h: str = "H3"

    def __post_init__(self):
        if self.k < 1 or self.r < 0 or self.s < 0 or self.r + self.s > self.k:
            raise GraphError(f"bad roles k={self.k} r={self.r} s={self.s}")
        if self.h not in ("H1", "H2", "H3"):
            raise GraphError(f"h must be H1, H2 or H3, got {self.h!r}")

    @property
    def p(self) -> int:
        return self.k - self.r - self.s

    def role(self, color: int) -> str:
        if not 1 <= color <= self.k:
            raise GraphError(f"color {color} out of range")
        if color <= self.r:
            return "H"
        if color <= self.r + self.s:
            return "K3"
        return "P3"

    def pattern(self, color: int) -> Pattern:
        role = self.role(color)
        return CATALOG[self.h if role == "H" else role]

    def forbidden(self) -> dict[int, Pattern]:
        return {c: self.pattern(c) for c in range(1, self.k + 1)}
