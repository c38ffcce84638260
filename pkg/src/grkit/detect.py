"""Rainbow triangles, monochromatic patterns and witness validation."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from . import kernels
from .core import CATALOG, ColoredCompleteGraph, GraphError, Pattern, RoleAssignment, induced


def find_rainbow_triangle(g: ColoredCompleteGraph):
    """Lexicographically first triple with three distinct edge colors, or None."""
    if g.n < 3:
        return None
    return kernels.rainbow_triangle(g.matrix)


def find_mono_copy(g: ColoredCompleteGraph, pattern: Pattern, color: int):
    """Lexicographically least embedding of ``pattern`` into the color class, or None.

    Containment is not induced. The search places pattern vertices in index
    order, so for the catalog H-graphs it settles the K4 core before the
    fifth vertex.
    """
    if not 1 <= color <= g.k:
        raise GraphError(f"color {color} out of range [1, {g.k}]")
    if pattern.m > g.n:
        return None
    return kernels.find_embedding(g.bitsets(color), g.n, pattern.earlier)


def has_mono(g: ColoredCompleteGraph, name: str, color: int) -> bool:
    return find_mono_copy(g, CATALOG[name], color) is not None


@dataclass
class WitnessReport:
    rainbow_triangle: tuple | None = None
    violations: list = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return self.rainbow_triangle is None and not self.violations

    def lines(self) -> list[str]:
        out = [f"valid={'yes' if self.valid else 'no'}"]
        if self.rainbow_triangle is not None:
            out.append("rainbow=" + ",".join(map(str, self.rainbow_triangle)))
        for color, name, emb in self.violations:
            out.append(f"violation color={color} pattern={name} at=" + ",".join(map(str, emb)))
        return out


def validate_forbidden(g: ColoredCompleteGraph, forbidden: dict) -> WitnessReport:
    """Check for rainbow triangles and, per color, the forbidden pattern."""
    report = WitnessReport(rainbow_triangle=find_rainbow_triangle(g))
    for color in sorted(forbidden):
        pat = forbidden[color]
        emb = find_mono_copy(g, pat, color)
        if emb is not None:
            report.violations.append((color, pat.name, emb))
    return report


def validate_witness(g: ColoredCompleteGraph, roles: RoleAssignment) -> WitnessReport:
    if roles.k != g.k:
        raise GraphError(f"roles are for k={roles.k}, graph has k={g.k}")
    return validate_forbidden(g, roles.forbidden())


def is_mc_adjacent(g: ColoredCompleteGraph, xs, ys, color: int) -> bool:
    m = g.matrix
    return bool((m[list(xs)][:, list(ys)] == color).all())


def check_merge_condition(g: ColoredCompleteGraph, x1: Iterable[int], x2: Iterable[int],
                          color: int, pattern_class: str = "H1"):
    """Smallest merge condition (1-4) certifying an H in color on X1 u X2, or None.

    ``pattern_class`` is "H1"/"H2" (conditions 1-4 apply) or "H3" (2-4).
    """
    x1, x2 = sorted(set(x1)), sorted(set(x2))
    if not x1 or not x2:
        raise GraphError("X1 and X2 must be nonempty")
    if set(x1) & set(x2):
        raise GraphError("X1 and X2 must be disjoint")
    if not 1 <= color <= g.k:
        raise GraphError(f"color {color} out of range")
    if not is_mc_adjacent(g, x1, x2, color):
        raise GraphError(f"X1 is not {color}-adjacent to X2")
    if pattern_class not in ("H1", "H2", "H3"):
        raise GraphError(f"unknown pattern class {pattern_class!r}")
    g1, g2 = induced(g, x1), induced(g, x2)
    edge1 = g1.n >= 2 and has_mono(g1, "K2", color)
    if pattern_class != "H3":
        edge2 = g2.n >= 2 and has_mono(g2, "K2", color)
        if edge1 and edge2 and len(x1) + len(x2) >= 5:
            return 1
    if len(x1) >= 2 and has_mono(g2, "K3", color):
        return 2
    if has_mono(g2, "K4-e", color):
        return 3
    if edge1 and has_mono(g2, "P3", color):
        return 4
    return None
