"""Closed forms for the two extremal edge thresholds of tmc.

``f(n, k)``: least edge count such that every connected graph of order ``n``
with at least that many edges has ``tmc >= k``.

``g(n, k)``: greatest edge count such that every connected graph of order
``n`` with at most that many edges has ``tmc <= k``; it does not exist for
``k < n`` because the star already reaches ``tmc = n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, isqrt
from typing import Optional


@dataclass(frozen=True)
class FormulaResult:
    n: int
    k: int
    value: Optional[int]
    case: str
    t: Optional[int] = None
    s: Optional[int] = None
    r: Optional[int] = None

    @property
    def defined(self) -> bool:
        return self.value is not None

    def describe(self) -> str:
        if self.value is None:
            return f"undefined ({self.case})"
        params = ", ".join(f"{name}={val}" for name, val in (("t", self.t), ("s", self.s), ("r", self.r)) if val is not None)
        return f"{self.value} ({self.case}{', ' + params if params else ''})"


def _check_domain(n: int, k: int) -> None:
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    if not 3 <= k <= comb(n, 2) + n:
        raise ValueError(f"k={k} outside [3, {comb(n, 2) + n}] for n={n}")


def f_cases(n: int, k: int) -> list[FormulaResult]:
    """Every case condition of the piecewise f that ``k`` satisfies, in case order."""
    _check_domain(n, k)
    c = comb(n, 2)
    h = n // 2
    odd = n % 2 == 1
    out = []
    if k == 3:
        out.append(FormulaResult(n, k, n - 1, "case 1"))
    # C(t,2) + 3 <= k <= C(t,2) + t + 2 pins t near sqrt(2k); test the neighbours exactly
    guess = (1 + isqrt(max(0, 8 * (k - 3) + 1))) // 2
    for t in range(max(2, guess - 1), min(n - 2, guess + 1) + 1):
        s = comb(t, 2) + t + 2 - k
        if 0 <= s <= t - 1:
            out.append(FormulaResult(n, k, n + k - t - 2, "case 2", t=t, s=s))
    top3 = c + n - 3 * h
    if c - n + 4 <= k <= top3 and not (odd and k == top3):
        out.append(FormulaResult(n, k, k, "case 3"))
    # the only r with c+n-3(r+1) < k <= c+n-3r
    r = (c + n - k) // 3
    if 0 <= r < h:
        out.append(FormulaResult(n, k, c - r, "case 4", r=r))
    if odd and k == top3:
        out.append(FormulaResult(n, k, c - h, "case 4", r=h))
    return out


def f_eval(n: int, k: int) -> FormulaResult:
    """Evaluate f(n, k); the lowest-numbered matching case wins."""
    cases = f_cases(n, k)
    if not cases:
        raise AssertionError(f"no case of f matches n={n}, k={k}")
    return cases[0]


@lru_cache(maxsize=None)
def g_bands(n: int) -> tuple[tuple[int, int, int], ...]:
    """``(t, low, high)`` for ``t = n-1 .. 2``: the k-band handled by parameter ``t``."""
    return tuple(
        (t, comb(n - t, 2) + t * (n - t - 1) + n, comb(n - t, 2) + t * (n - t) + n - 1)
        for t in range(n - 1, 1, -1)
    )


def g_eval(n: int, k: int) -> FormulaResult:
    _check_domain(n, k)
    c = comb(n, 2)
    if k < n:
        return FormulaResult(n, k, None, "undefined")
    if k == c + n:
        return FormulaResult(n, k, c, "case 4")
    if k == c + n - 1:
        return FormulaResult(n, k, c - 1, "case 3")
    for t, low, high in g_bands(n):
        if low <= k < high:
            return FormulaResult(n, k, k - n + t, "case 1", t=t)
        if k == high:
            return FormulaResult(n, k, k - n + t - 1, "case 2", t=t)
    raise AssertionError(f"no band of g contains k={k} for n={n}")


def f_table(n: int) -> list[FormulaResult]:
    table = [f_eval(n, k) for k in range(3, comb(n, 2) + n + 1)]
    _assert_monotone(table)
    return table


def g_table(n: int) -> list[FormulaResult]:
    table = [g_eval(n, k) for k in range(n, comb(n, 2) + n + 1)]
    _assert_monotone(table)
    return table


def _assert_monotone(table: list[FormulaResult]) -> None:
    vals = [row.value for row in table if row.value is not None]
    if any(a > b for a, b in zip(vals, vals[1:])):
        raise AssertionError("table is not non-decreasing in k")


CSV_HEADER = "n,k,value,case,t,s,r"


def csv_row(res: FormulaResult) -> str:
    def cell(x):
        return "" if x is None else str(x)

    return ",".join([str(res.n), str(res.k), cell(res.value), res.case, cell(res.t), cell(res.s), cell(res.r)])
