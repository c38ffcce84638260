"""Exact Gallai-Ramsey formulas, ratio tables, inequality families and closed forms.

``w(k, r)`` and ``f(k, s, r)`` are the extremal orders (GR minus one) for
``GR_k((k-r)K3, rH)`` with H in {H1, H2} and ``GR_k((k-s-r)P3, sK3, rH3)``.
Everything here is integer or ``Fraction`` arithmetic.
"""

from __future__ import annotations

import math
import operator
import re
from dataclasses import dataclass, field
from fractions import Fraction

Fr = Fraction


class DomainError(ValueError):
    """Arguments outside the domain of a formula."""


class TableMismatch(AssertionError):
    """A computed ratio disagrees with the tabulated value."""


def _half_pow(base: int, twice_exp: int) -> Fraction:
    """base ** (twice_exp / 2) for an even numerator, exact (negative exponents allowed)."""
    if twice_exp % 2:
        raise ValueError("half-integer exponent must have an even numerator")
    return Fr(base) ** (twice_exp // 2)


def _floor(x) -> int:
    return math.floor(x)


def _check_w(k, r):
    if k < 1 or not 0 <= r <= k:
        raise DomainError(f"w({k},{r}) needs k >= 1 and 0 <= r <= k")


def _check_f(k, s, r):
    if k < 1 or s < 0 or r < 0 or s + r > k:
        raise DomainError(f"f({k},{s},{r}) needs k >= 1, s, r >= 0 and s + r <= k")


def in_domain_w(k, r) -> bool:
    return k >= 1 and 0 <= r <= k


def in_domain_f(k, s, r) -> bool:
    return k >= 1 and s >= 0 and r >= 0 and s + r <= k


def case_of_w(k: int, r: int) -> str:
    _check_w(k, r)
    return {(0, 0): "a1", (1, 0): "a2", (1, 1): "a3", (0, 1): "a4"}[((k - r) % 2, r % 2)]


def case_of_f(k: int, s: int, r: int) -> str:
    _check_f(k, s, r)
    full = s + r == k
    idx = {(0, 0): 0, (1, 0): 1, (1, 1): 2, (0, 1): 3}[(s % 2, r % 2)]
    return "b%d" % (2 * idx + (1 if full else 2))


def w(k: int, r: int) -> int:
    case = case_of_w(k, r)
    a = k - r
    if case == "a1":
        return 5 ** (a // 2) * 17 ** (r // 2)
    if case == "a2":
        return 2 * 5 ** ((a - 1) // 2) * 17 ** (r // 2)
    if case == "a3":
        return 8 * 5 ** ((a - 1) // 2) * 17 ** ((r - 1) // 2)
    return 4 * 5 ** (a // 2) * 17 ** ((r - 1) // 2)


def f(k: int, s: int, r: int) -> int:
    # floor terms: the half-integer power is taken exactly, floored, then multiplied
    case = case_of_f(k, s, r)
    if case == "b1":
        return 5 ** (s // 2) * _floor(21 * _half_pow(17, r - 2))
    if case == "b2":
        return 2 * 5 ** (s // 2) * 17 ** (r // 2)
    if case == "b3":
        return 5 ** ((s - 1) // 2) * _floor(42 * _half_pow(17, r - 2))
    if case == "b4":
        return 4 * 5 ** ((s - 1) // 2) * 17 ** (r // 2)
    if case == "b5":
        return 10 * 5 ** ((s - 1) // 2) * 17 ** ((r - 1) // 2)
    if case == "b6":
        return 16 * 5 ** ((s - 1) // 2) * 17 ** ((r - 1) // 2)
    if case == "b7":
        return 4 * 5 ** (s // 2) * 17 ** ((r - 1) // 2)
    return _floor(32 * _half_pow(5, s - 2)) * 17 ** ((r - 1) // 2)


def gr_w(k: int, r: int) -> int:
    """GR_k((k-r)K3, rH) for H in {H1, H2}."""
    return w(k, r) + 1


def gr_f(k: int, s: int, r: int) -> int:
    """GR_k((k-s-r)P3, sK3, rH3)."""
    return f(k, s, r) + 1


RAMSEY_CONSTANTS = {
    "R(K3,H1)": 9,
    "R(K3,H2)": 9,
    "R(K3,H3)": 11,
    "R2(K3)": 6,
    "R(K3,K4)": 9,
    "R2(H1)": 18,
    "R2(H2)": 18,
    "R2(H3)": 22,
    "R(P3,K3)": 5,
    "R(P3,H3)": 7,
}


def ramsey_constant(name: str) -> int:
    key = name.replace(" ", "").replace("_", "")
    if key not in RAMSEY_CONSTANTS:
        raise KeyError(f"unknown Ramsey constant {name!r}")
    return RAMSEY_CONSTANTS[key]


def gr_main(k: int, h: int) -> int:
    """GR_k(H_h) for h in {1, 2, 3}."""
    if k < 1:
        raise DomainError("k must be >= 1")
    if h not in (1, 2, 3):
        raise DomainError("h must be 1, 2 or 3")
    if k % 2 == 0:
        value = (RAMSEY_CONSTANTS[f"R2(H{h})"] - 1) * 17 ** ((k - 2) // 2) + 1
    else:
        value = 4 * 17 ** ((k - 1) // 2) + 1
    via = w(k, k) if h in (1, 2) else f(k, 0, k)
    assert value == via + 1, (k, h, value, via)
    return value


def gr_k3(k: int) -> int:
    if k < 1:
        raise DomainError("k must be >= 1")
    return 5 ** (k // 2) + 1 if k % 2 == 0 else 2 * 5 ** ((k - 1) // 2) + 1


def gr_p3(k: int) -> int:
    if k < 1:
        raise DomainError("k must be >= 1")
    return 3


# ------------------------------------------------------------------ ratio tables

_W_CASES = ("a1", "a2", "a3", "a4")
_F_CASES = ("b1", "b2", "b3", "b4", "b5", "b6", "b7", "b8")

# row -> (dk, dr), one entry per case a1..a4
TABLE1 = {
    "w(k-1,r)": ((-1, 0), (Fr(2, 5), Fr(1, 2), Fr(1, 2), Fr(2, 5))),
    "w(k-2,r)": ((-2, 0), (Fr(1, 5),) * 4),
    "w(k,r-1)": ((0, -1), (Fr(8, 17), Fr(10, 17), Fr(5, 8), Fr(1, 2))),
    "w(k-1,r-1)": ((-1, -1), (Fr(4, 17), Fr(4, 17), Fr(1, 4), Fr(1, 4))),
    "w(k-2,r-1)": ((-2, -1), (Fr(8, 85), Fr(2, 17), Fr(1, 8), Fr(1, 10))),
    "w(k,r-2)": ((0, -2), (Fr(5, 17),) * 4),
    "w(k-1,r-2)": ((-1, -2), (Fr(2, 17), Fr(5, 34), Fr(5, 34), Fr(2, 17))),
    "w(k-2,r-2)": ((-2, -2), (Fr(1, 17),) * 4),
}


def _split(**cells):
    """A sub-split cell, e.g. _split(s_eq_1=..., s_ge_3=...)."""
    return tuple((key, val) for key, val in cells.items())


# row -> (dk, ds, dr), one entry per case b1..b8; tuples of (condition, value) are sub-splits
TABLE2 = {
    "f(k-1,s-1,r)": ((-1, -1, 0), (
        Fr(2, 5), Fr(2, 5), Fr(1, 2), Fr(1, 2), Fr(2, 5),
        _split(s_eq_1=Fr(3, 8), s_ge_3=Fr(2, 5)), Fr(1, 2), Fr(1, 2))),
    "f(k-2,s-2,r)": ((-2, -2, 0), (
        Fr(1, 5), Fr(1, 5), Fr(1, 5), Fr(1, 5), Fr(1, 5), Fr(1, 5), Fr(1, 5),
        _split(s_eq_2=Fr(3, 16), s_ge_4=Fr(1, 5)))),
    "f(k,s+1,r-1)": ((0, 1, -1), (
        Fr(10, 21), Fr(8, 17), Fr(10, 21), Fr(8, 17),
        _split(r_eq_1=Fr(1, 2), r_ge_3=Fr(21, 34)), Fr(5, 8),
        _split(r_eq_1=Fr(1, 2), r_ge_3=Fr(21, 34)),
        _split(s_eq_0=Fr(2, 3), s_ge_2=Fr(5, 8)))),
    "f(k-1,s,r-1)": ((-1, 0, -1), (
        Fr(4, 21), _split(s_eq_0=Fr(3, 17), s_ge_2=Fr(16, 85)), Fr(5, 21), Fr(4, 17),
        _split(r_eq_1=Fr(1, 5), r_ge_3=Fr(21, 85)), Fr(1, 4),
        _split(r_eq_1=Fr(1, 4), r_ge_3=Fr(21, 68)),
        _split(s_eq_0=Fr(1, 3), s_ge_2=Fr(5, 16)))),
    "f(k,s,r-1)": ((0, 0, -1), (
        _split(s_eq_0=Fr(2, 7), s_ge_2=Fr(32, 105)), _split(s_eq_0=Fr(3, 17), s_ge_2=Fr(16, 85)),
        Fr(8, 21), Fr(4, 17), Fr(2, 5), Fr(1, 4), Fr(1, 2),
        _split(s_eq_0=Fr(1, 3), s_ge_2=Fr(5, 16)))),
    "f(k-1,s-1,r-1)": ((-1, -1, -1), (
        Fr(16, 105), Fr(8, 85), _split(s_eq_1=Fr(1, 7), s_ge_3=Fr(16, 105)),
        _split(s_eq_1=Fr(3, 34), s_ge_3=Fr(8, 85)), Fr(1, 5), Fr(1, 8), Fr(1, 5), Fr(1, 8))),
    "f(k-2,s-1,r-1)": ((-2, -1, -1), (
        Fr(2, 21), Fr(8, 85), Fr(2, 21), _split(s_eq_1=Fr(3, 34), s_ge_3=Fr(8, 85)),
        _split(r_eq_1=Fr(1, 10), r_ge_3=Fr(21, 170)), Fr(1, 8),
        _split(r_eq_1=Fr(1, 10), r_ge_3=Fr(21, 170)), Fr(1, 8))),
    "f(k,s+2,r-2)": ((0, 2, -2), (
        _split(r_eq_2=Fr(5, 21), r_ge_4=Fr(5, 17)), Fr(5, 17),
        _split(r_eq_2=Fr(5, 21), r_ge_4=Fr(5, 17)), Fr(5, 17), Fr(5, 17), Fr(5, 17), Fr(5, 17),
        _split(s_eq_0=Fr(16, 51), s_ge_2=Fr(5, 17)))),
    "f(k,s+1,r-2)": ((0, 1, -2), (
        Fr(4, 21), Fr(2, 17), Fr(5, 21), Fr(5, 34), Fr(16, 85), Fr(2, 17), Fr(4, 17),
        _split(s_eq_0=Fr(8, 51), s_ge_2=Fr(5, 34)))),
    "f(k-1,s+1,r-2)": ((-1, 1, -2), (
        _split(r_eq_2=Fr(2, 21), r_ge_4=Fr(2, 17)), Fr(2, 17),
        _split(r_eq_2=Fr(5, 42), r_ge_4=Fr(5, 34)), Fr(5, 34), Fr(2, 17), Fr(2, 17), Fr(5, 34),
        _split(s_eq_0=Fr(8, 51), s_ge_2=Fr(5, 34)))),
    "f(k-2,s,r-2)": ((-2, 0, -2), (
        _split(r_eq_2=Fr(1, 21), r_ge_4=Fr(1, 17)), Fr(1, 17),
        _split(r_eq_2=Fr(1, 21), r_ge_4=Fr(1, 17)), Fr(1, 17), Fr(1, 17), Fr(1, 17), Fr(1, 17),
        Fr(1, 17))),
    "f(k-1,s,r-2)": ((-1, 0, -2), (
        Fr(2, 21), Fr(1, 17), Fr(2, 21), Fr(1, 17), Fr(8, 85), Fr(1, 17),
        _split(s_eq_0=Fr(3, 34), s_ge_2=Fr(8, 85)), Fr(1, 17))),
}
# the last row is shared with f(k,s,r-2)
TABLE2["f(k,s,r-2)"] = ((0, 0, -2), TABLE2["f(k-1,s,r-2)"][1])

_COND = re.compile(r"([sr])_(eq|ge)_(\d+)$")


def _holds(cond: str, s: int, r: int) -> bool:
    var, op, num = _COND.match(cond).groups()
    val = s if var == "s" else r
    return val == int(num) if op == "eq" else val >= int(num)


def table1_entry(row: str, k: int, r: int) -> Fraction:
    return TABLE1[row][1][_W_CASES.index(case_of_w(k, r))]


def table2_entry(row: str, k: int, s: int, r: int) -> Fraction:
    cell = TABLE2[row][1][_F_CASES.index(case_of_f(k, s, r))]
    if isinstance(cell, Fraction):
        return cell
    for cond, val in cell:
        if _holds(cond, s, r):
            return val
    raise DomainError(f"no sub-split of {row} covers (k,s,r)=({k},{s},{r})")


def ratio_check_table1(row: str, k: int, r: int) -> Fraction:
    """w(shifted)/w(k, r), asserted equal to the TABLE1 cell for the case of (k, r)."""
    if row not in TABLE1:
        raise KeyError(row)
    dk, dr = TABLE1[row][0]
    _check_w(k, r)
    if k < 3:
        raise DomainError("tables apply for k >= 3")
    if not in_domain_w(k + dk, r + dr):
        raise DomainError(f"{row} leaves the domain at (k,r)=({k},{r})")
    got = Fr(w(k + dk, r + dr), w(k, r))
    want = table1_entry(row, k, r)
    if got != want:
        raise TableMismatch(f"{row} at ({k},{r}): {got} != {want}")
    return got


def ratio_check_table2(row: str, k: int, s: int, r: int) -> Fraction:
    if row not in TABLE2:
        raise KeyError(row)
    dk, ds, dr = TABLE2[row][0]
    _check_f(k, s, r)
    if k < 3:
        raise DomainError("tables apply for k >= 3")
    if not in_domain_f(k + dk, s + ds, r + dr):
        raise DomainError(f"{row} leaves the domain at (k,s,r)=({k},{s},{r})")
    got = Fr(f(k + dk, s + ds, r + dr), f(k, s, r))
    want = table2_entry(row, k, s, r)
    if got != want:
        raise TableMismatch(f"{row} at ({k},{s},{r}): {got} != {want}")
    return got


# ---------------------------------------------------------- inequalities

_OPS = {">": operator.gt, ">=": operator.ge, "==": operator.eq}


@dataclass
class SweepResult:
    checked: int = 0
    skipped: int = 0
    failures: list = field(default_factory=list)

    def merge(self, other: "SweepResult") -> "SweepResult":
        self.checked += other.checked
        self.skipped += other.skipped
        self.failures.extend(other.failures)
        return self

    @property
    def ok(self) -> bool:
        return not self.failures


def _chain(*parts):
    """("expr", ">", "expr", ">=", "expr", ...) -> consecutive comparisons."""
    terms, ops = parts[0::2], parts[1::2]
    return [(terms[i], ops[i], terms[i + 1]) for i in range(len(ops))]


# Terms are evaluated with W(k, r) / F(k, s, r) that raise DomainError off-domain;
# braces {x; y} in the source are expanded into separate chains.
INEQ_A = [
    *_chain("W(k,r)+1", ">", "3*W(k-1,r-1)+r", ">=", "W(k-1,r-1)+k+1"),
    *_chain("W(k,r)+1", ">", "2*W(k-1,r)", ">=", "8*W(k-2,r-1)", ">=", "5*W(k-2,r-1)+r",
            ">=", "W(k-1,r)+k"),
    *_chain("W(k,r)+1", ">", "5*W(k-2,r)", "==", "17*W(k-2,r-2)", ">=", "12*W(k-2,r-2)+r"),
    *_chain("W(k,r)+1", ">", "W(k-1,r-1)+W(k,r-1)"),
    *_chain("W(k,r)+1", ">", "2*W(k-1,r-2)+W(k,r-1)+W(k-2,r-2)", ">=",
            "W(k,r-2)+2*W(k-1,r-1)", ">=", "W(k-1,r-2)+W(k-2,r-2)", ">=", "3*W(k-2,r-2)"),
]

INEQ_B = [
    *_chain("F(k,s,r)+1", ">", "2*F(k,s,r-1)", ">=", "F(k,s,r-1)+s+r+1"),
    *_chain("F(k,s,r)+1", ">", "2*F(k-1,s-1,r)", ">=", "F(k-1,s-1,r)+s+r"),
    *_chain("F(k,s,r)+1", ">", "3*F(k-1,s,r-1)", ">=", "2*F(k-1,s,r-1)+r"),
    *_chain("F(k,s,r)+1", ">", "8*F(k-2,s-1,r-1)", ">=", "5*F(k-2,s-1,r-1)+r"),
    *_chain("F(k,s,r)+1", ">", "F(k-1,s,r-1)+F(k,s+1,r-1)"),
    *_chain("F(k,s,r)+1", ">", "5*F(k-2,s-2,r)"),
    *_chain("F(k,s,r)+1", ">", "5*F(k-1,s-1,r-1)"),
]

INEQ_C = [
    *_chain("F(k,s,r)+1", ">", "F(k-1,s+1,r-2)+2*F(k-1,s,r-1)+r"),
    *_chain("F(k,s,r)+1", ">", "7*F(k-1,s,r-2)+r"),
    *_chain("F(k,s,r)+1", ">", "17*F(k-2,s,r-2)", ">=", "14*F(k-2,s,r-2)+r"),
    *[("F(k,s,r)+1", ">", "2*F(k-1,s,r-1)+" + x)
      for x in ("F(k,s+1,r-2)", "F(k,s+2,r-2)")],
    *_chain("F(k,s,r)+1", ">", "4*F(k-1,s,r-2)+F(k,s+1,r-1)"),
    *[("F(k,s,r)+1", ">", x + "+" + y)
      for x in ("F(k,s+1,r-2)+F(k,s,r-1)", "F(k-1,s+1,r-2)+F(k,s+1,r-1)")
      for y in ("3*F(k-2,s,r-2)", "2*F(k-1,s,r-2)")],
    *_chain("F(k,s,r)+1", ">", "3*F(k,s+1,r-2)+F(k-2,s,r-2)+max(F(k-1,s,r-2),4)"),
    *[("F(k,s,r)+1", ">", "3*F(k-1,s+1,r-2)+" + y)
      for y in ("3*F(k-1,s+1,r-2)+F(k-2,s,r-2)", "6*F(k-2,s,r-2)",
                "11*F(k-2,s,r-2)-F(k-1,s+1,r-2)")],
    # the middle variant's "f(k-1,s+1,k-2)" in the source is read as f(k-1,s+1,r-2)
    *[("F(k,s,r)+1", ">", "3*F(k-1,s+1,r-2)+F(k,s+1,r-2)+" + y)
      for y in ("4*F(k-2,s,r-2)", "F(k-1,s+1,r-2)+2*F(k-2,s,r-2)",
                "2*F(k-1,s,r-2)+F(k-2,s,r-2)")],
]

INEQUALITIES = {"a": INEQ_A, "b": INEQ_B, "c": INEQ_C}


def _W(k, r):
    _check_w(k, r)
    return w(k, r)


def _F(k, s, r):
    _check_f(k, s, r)
    return f(k, s, r)


def _compiled(family):
    return [(compile(a, a, "eval"), op, compile(b, b, "eval"), f"{a} {op} {b}")
            for a, op, b in INEQUALITIES[family]]


_COMPILED = {fam: _compiled(fam) for fam in INEQUALITIES}


def inequality_report(family: str, k: int, *args) -> SweepResult:
    """Evaluate every expanded inequality of a family; off-domain ones are skipped."""
    if family == "a":
        r = args[-1]  # (k, r) or (k, s, r); s is implied by k - r
        s = k - r
        _check_w(k, r)
        if k < 3 or r < 1:
            raise DomainError("family (a) needs k >= 3 and r >= 1")
    else:
        s, r = args
        _check_f(k, s, r)
        if family == "b" and (k < 3 or s + r < 1):
            raise DomainError("family (b) needs k >= 3 and s + r >= 1")
        if family == "c" and (k < 3 or r < 2):
            raise DomainError("family (c) needs k >= 3 and r >= 2")
    env = {"W": _W, "F": _F, "k": k, "s": s, "r": r, "max": max}
    res = SweepResult()
    for lhs, op, rhs, text in _COMPILED[family]:
        try:
            a = eval(lhs, env)
            b = eval(rhs, env)
        except DomainError:
            res.skipped += 1
            continue
        res.checked += 1
        if not _OPS[op](a, b):
            res.failures.append(f"({family}) {text} fails at k={k} s={s} r={r}: {a} vs {b}")
    return res


def check_inequalities(family: str, k: int, *args) -> bool:
    return inequality_report(family, k, *args).ok


# -------------------------------------------------------------- closed forms

def _p5(e):
    return _half_pow(5, e)


def _p17(e):
    return _half_pow(17, e)


def _fl(x):
    return Fr(math.floor(x))


# w closed forms: coefficient per case times the case's base monomial
_W_MONO = {
    "a1": lambda k, r: _p5(k - r) * _p17(r),
    "a2": lambda k, r: _p5(k - r - 1) * _p17(r),
    "a3": lambda k, r: _p5(k - r - 1) * _p17(r - 1),
    "a4": lambda k, r: _p5(k - r) * _p17(r - 1),
}

APPENDIX_W = {
    "w(k-1,r)": ((-1, 0), (Fr(2, 5), 1, 4, Fr(8, 5))),
    "w(k-2,r)": ((-2, 0), (Fr(1, 5), Fr(2, 5), Fr(8, 5), Fr(4, 5))),
    "w(k,r-1)": ((0, -1), (Fr(8, 17), Fr(20, 17), 5, 2)),
    "w(k-1,r-1)": ((-1, -1), (Fr(4, 17), Fr(8, 17), 2, 1)),
    "w(k-2,r-1)": ((-2, -1), (Fr(8, 85), Fr(4, 17), 1, Fr(2, 5))),
    "w(k,r-2)": ((0, -2), (Fr(5, 17), Fr(10, 17), Fr(40, 17), Fr(20, 17))),
    "w(k-1,r-2)": ((-1, -2), (Fr(2, 17), Fr(5, 17), Fr(20, 17), Fr(8, 17))),
    "w(k-2,r-2)": ((-2, -2), (Fr(1, 17), Fr(2, 17), Fr(8, 17), Fr(4, 17))),
}

# f closed forms, one per case b1..b8, in the unshifted (s, r)
APPENDIX_F = {
    "f(k-1,s-1,r)": ((-1, -1, 0), (
        lambda s, r: Fr(2, 5) * _p5(s) * _fl(21 * _p17(r - 2)),
        lambda s, r: Fr(4, 5) * _p5(s) * _p17(r),
        lambda s, r: _p5(s - 1) * _fl(21 * _p17(r - 2)),
        lambda s, r: 2 * _p5(s - 1) * _p17(r),
        lambda s, r: 4 * _p5(s - 1) * _p17(r - 1),
        lambda s, r: _fl(Fr(32, 5) * _p5(s - 1)) * _p17(r - 1),
        lambda s, r: 2 * _p5(s) * _p17(r - 1),
        lambda s, r: 16 * _p5(s - 2) * _p17(r - 1),
    )),
    "f(k-2,s-2,r)": ((-2, -2, 0), (
        lambda s, r: Fr(1, 5) * _p5(s) * _fl(21 * _p17(r - 2)),
        lambda s, r: Fr(2, 5) * _p5(s) * _p17(r),
        lambda s, r: Fr(1, 5) * _p5(s - 1) * _fl(42 * _p17(r - 2)),
        lambda s, r: Fr(4, 5) * _p5(s - 1) * _p17(r),
        lambda s, r: 2 * _p5(s - 1) * _p17(r - 1),
        lambda s, r: Fr(16, 5) * _p5(s - 1) * _p17(r - 1),
        lambda s, r: Fr(4, 5) * _p5(s) * _p17(r - 1),
        lambda s, r: _fl(Fr(32, 5) * _p5(s - 2)) * _p17(r - 1),
    )),
    "f(k,s+1,r-1)": ((0, 1, -1), (
        lambda s, r: 10 * _p5(s) * _p17(r - 2),
        lambda s, r: Fr(16, 17) * _p5(s) * _p17(r),
        lambda s, r: 20 * _p5(s - 1) * _p17(r - 2),
        lambda s, r: Fr(32, 17) * _p5(s - 1) * _p17(r),
        lambda s, r: 5 * _p5(s - 1) * _fl(Fr(21, 17) * _p17(r - 1)),
        lambda s, r: 10 * _p5(s - 1) * _p17(r - 1),
        lambda s, r: _p5(s) * _fl(Fr(42, 17) * _p17(r - 1)),
        lambda s, r: 20 * _p5(s - 2) * _p17(r - 1),
    )),
    "f(k-1,s,r-1)": ((-1, 0, -1), (
        lambda s, r: 4 * _p5(s) * _p17(r - 2),
        lambda s, r: Fr(1, 17) * _fl(Fr(32, 5) * _p5(s)) * _p17(r),
        lambda s, r: 10 * _p5(s - 1) * _p17(r - 2),
        lambda s, r: Fr(16, 17) * _p5(s - 1) * _p17(r),
        lambda s, r: _p5(s - 1) * _fl(Fr(42, 17) * _p17(r - 1)),
        lambda s, r: 4 * _p5(s - 1) * _p17(r - 1),
        lambda s, r: _p5(s) * _fl(Fr(21, 17) * _p17(r - 1)),
        lambda s, r: 10 * _p5(s - 2) * _p17(r - 1),
    )),
    "f(k,s,r-1)": ((0, 0, -1), (
        lambda s, r: _fl(Fr(32, 5) * _p5(s)) * _p17(r - 2),
        lambda s, r: Fr(1, 17) * _fl(Fr(32, 5) * _p5(s)) * _p17(r),
        lambda s, r: 16 * _p5(s - 1) * _p17(r - 2),
        lambda s, r: Fr(16, 17) * _p5(s - 1) * _p17(r),
        lambda s, r: 4 * _p5(s - 1) * _p17(r - 1),
        lambda s, r: 4 * _p5(s - 1) * _p17(r - 1),
        lambda s, r: 2 * _p5(s) * _p17(r - 1),
        lambda s, r: 10 * _p5(s - 2) * _p17(r - 1),
    )),
    "f(k-1,s-1,r-1)": ((-1, -1, -1), (
        lambda s, r: Fr(16, 5) * _p5(s) * _p17(r - 2),
        lambda s, r: Fr(16, 85) * _p5(s) * _p17(r),
        lambda s, r: _fl(Fr(32, 5) * _p5(s - 1)) * _p17(r - 2),
        lambda s, r: Fr(1, 17) * _fl(Fr(32, 5) * _p5(s - 1)) * _p17(r),
        lambda s, r: 2 * _p5(s - 1) * _p17(r - 1),
        lambda s, r: 2 * _p5(s - 1) * _p17(r - 1),
        lambda s, r: Fr(4, 5) * _p5(s) * _p17(r - 1),
        lambda s, r: 4 * _p5(s - 2) * _p17(r - 1),
    )),
    "f(k-2,s-1,r-1)": ((-2, -1, -1), (
        lambda s, r: 2 * _p5(s) * _p17(r - 2),
        lambda s, r: Fr(16, 85) * _p5(s) * _p17(r),
        lambda s, r: 4 * _p5(s - 1) * _p17(r - 2),
        lambda s, r: Fr(1, 17) * _fl(Fr(32, 5) * _p5(s - 1)) * _p17(r),
        lambda s, r: _p5(s - 1) * _fl(Fr(21, 17) * _p17(r - 1)),
        lambda s, r: 2 * _p5(s - 1) * _p17(r - 1),
        lambda s, r: Fr(1, 5) * _p5(s) * _fl(Fr(42, 17) * _p17(r - 1)),
        lambda s, r: 4 * _p5(s - 2) * _p17(r - 1),
    )),
    "f(k,s+2,r-2)": ((0, 2, -2), (
        lambda s, r: 5 * _p5(s) * _fl(Fr(21, 17) * _p17(r - 2)),
        lambda s, r: Fr(10, 17) * _p5(s) * _p17(r),
        lambda s, r: 5 * _p5(s - 1) * _fl(Fr(42, 17) * _p17(r - 2)),
        lambda s, r: Fr(20, 17) * _p5(s - 1) * _p17(r),
        lambda s, r: Fr(50, 17) * _p5(s - 1) * _p17(r - 1),
        lambda s, r: Fr(80, 17) * _p5(s - 1) * _p17(r - 1),
        lambda s, r: Fr(20, 17) * _p5(s) * _p17(r - 1),
        lambda s, r: Fr(160, 17) * _p5(s - 2) * _p17(r - 1),
    )),
    "f(k,s+1,r-2)": ((0, 1, -2), (
        lambda s, r: 4 * _p5(s) * _p17(r - 2),
        lambda s, r: Fr(4, 17) * _p5(s) * _p17(r),
        lambda s, r: 10 * _p5(s - 1) * _p17(r - 2),
        lambda s, r: Fr(10, 17) * _p5(s - 1) * _p17(r),
        lambda s, r: Fr(32, 17) * _p5(s - 1) * _p17(r - 1),
        lambda s, r: Fr(32, 17) * _p5(s - 1) * _p17(r - 1),
        lambda s, r: Fr(16, 17) * _p5(s) * _p17(r - 1),
        lambda s, r: Fr(80, 17) * _p5(s - 2) * _p17(r - 1),
    )),
    "f(k-1,s+1,r-2)": ((-1, 1, -2), (
        lambda s, r: _p5(s) * _fl(Fr(42, 17) * _p17(r - 2)),
        lambda s, r: Fr(4, 17) * _p5(s) * _p17(r),
        lambda s, r: 5 * _p5(s - 1) * _fl(Fr(21, 17) * _p17(r - 2)),
        lambda s, r: Fr(10, 17) * _p5(s - 1) * _p17(r),
        lambda s, r: Fr(20, 17) * _p5(s - 1) * _p17(r - 1),
        lambda s, r: Fr(32, 17) * _p5(s - 1) * _p17(r - 1),
        lambda s, r: Fr(10, 17) * _p5(s) * _p17(r - 1),
        lambda s, r: Fr(80, 17) * _p5(s - 2) * _p17(r - 1),
    )),
    "f(k-2,s,r-2)": ((-2, 0, -2), (
        lambda s, r: _p5(s) * _fl(Fr(21, 17) * _p17(r - 2)),
        lambda s, r: Fr(2, 17) * _p5(s) * _p17(r),
        lambda s, r: _p5(s - 1) * _fl(Fr(42, 17) * _p17(r - 2)),
        lambda s, r: Fr(4, 17) * _p5(s - 1) * _p17(r),
        lambda s, r: Fr(10, 17) * _p5(s - 1) * _p17(r - 1),
        lambda s, r: Fr(16, 17) * _p5(s - 1) * _p17(r - 1),
        lambda s, r: Fr(4, 17) * _p5(s) * _p17(r - 1),
        lambda s, r: Fr(1, 17) * _fl(32 * _p5(s - 2)) * _p17(r - 1),
    )),
    "f(k,s,r-2)": ((0, 0, -2), (
        lambda s, r: 2 * _p5(s) * _p17(r - 2),
        lambda s, r: Fr(2, 17) * _p5(s) * _p17(r),
        lambda s, r: 4 * _p5(s - 1) * _p17(r - 2),
        lambda s, r: Fr(4, 17) * _p5(s - 1) * _p17(r),
        lambda s, r: Fr(16, 17) * _p5(s - 1) * _p17(r - 1),
        lambda s, r: Fr(16, 17) * _p5(s - 1) * _p17(r - 1),
        lambda s, r: Fr(1, 17) * _fl(Fr(32, 5) * _p5(s)) * _p17(r - 1),
        lambda s, r: Fr(1, 17) * _fl(32 * _p5(s - 2)) * _p17(r - 1),
    )),
}
# f(k,s,r-2) and f(k-1,s,r-2) share one closed form
APPENDIX_F["f(k-1,s,r-2)"] = ((-1, 0, -2), APPENDIX_F["f(k,s,r-2)"][1])


def appendix_report(k: int, *args) -> SweepResult:
    """Compare every closed form for the case of (k, r) or (k, s, r) with the evaluator."""
    res = SweepResult()
    if len(args) == 1:
        (r,) = args
        case = case_of_w(k, r)
        i = _W_CASES.index(case)
        for name, ((dk, dr), coefs) in APPENDIX_W.items():
            if not in_domain_w(k + dk, r + dr):
                res.skipped += 1
                continue
            res.checked += 1
            closed = coefs[i] * _W_MONO[case](k, r)
            if closed != w(k + dk, r + dr):
                res.failures.append(f"appendix {name} case {case} at k={k} r={r}: {closed} != {w(k + dk, r + dr)}")
        return res
    s, r = args
    case = case_of_f(k, s, r)
    i = _F_CASES.index(case)
    for name, ((dk, ds, dr), forms) in APPENDIX_F.items():
        if not in_domain_f(k + dk, s + ds, r + dr):
            res.skipped += 1
            continue
        res.checked += 1
        closed = forms[i](s, r)
        actual = f(k + dk, s + ds, r + dr)
        if closed != actual:
            res.failures.append(f"appendix {name} case {case} at k={k} s={s} r={r}: {closed} != {actual}")
    return res


def appendix_consistency(k: int, *args) -> bool:
    return appendix_report(k, *args).ok


# ----------------------------------------------------------------- sweeps

def admissible_w(kmax: int, kmin: int = 1):
    for k in range(kmin, kmax + 1):
        for r in range(k + 1):
            yield k, r


def admissible_f(kmax: int, kmin: int = 1):
    for k in range(kmin, kmax + 1):
        for s in range(k + 1):
            for r in range(k - s + 1):
                yield k, s, r


def sweep_tables(kmax: int) -> dict[str, SweepResult]:
    """Run every table cell, inequality and closed-form check for 3 <= k <= kmax."""
    out = {name: SweepResult() for name in
           ("table1", "table2", "ineq_a", "ineq_b", "ineq_c", "appendix_w", "appendix_f")}
    for k, r in admissible_w(kmax, 3):
        for row, ((dk, dr), _) in TABLE1.items():
            if not in_domain_w(k + dk, r + dr):
                out["table1"].skipped += 1
                continue
            out["table1"].checked += 1
            try:
                ratio_check_table1(row, k, r)
            except (TableMismatch, DomainError) as exc:
                out["table1"].failures.append(str(exc))
        if r >= 1:
            out["ineq_a"].merge(inequality_report("a", k, r))
        out["appendix_w"].merge(appendix_report(k, r))
    for k, s, r in admissible_f(kmax, 3):
        for row, ((dk, ds, dr), _) in TABLE2.items():
            if not in_domain_f(k + dk, s + ds, r + dr):
                out["table2"].skipped += 1
                continue
            out["table2"].checked += 1
            try:
                ratio_check_table2(row, k, s, r)
            except (TableMismatch, DomainError) as exc:
                out["table2"].failures.append(str(exc))
        if s + r >= 1:
            out["ineq_b"].merge(inequality_report("b", k, s, r))
        if r >= 2:
            out["ineq_c"].merge(inequality_report("c", k, s, r))
        out["appendix_f"].merge(appendix_report(k, s, r))
    return out
