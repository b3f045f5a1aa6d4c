"""Exact two-phase simplex over the rationals with Bland's rule.

Solves  min c.x  s.t.  A x = b, x >= 0  with b >= 0.  Every quantity is a
Fraction, so optimal values such as 1/2 come out exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


@dataclass(frozen=True)
class LPSolution:
    value: Fraction
    x: tuple[Fraction, ...]


def _pivot(T: list[list[Fraction]], basis: list[int], r: int, c: int) -> None:
    piv = T[r][c]
    T[r] = [v / piv for v in T[r]]
    for i, row in enumerate(T):
        if i != r and row[c] != 0:
            f = row[c]
            T[i] = [v - f * w for v, w in zip(row, T[r])]
    basis[r] = c


def _run(T: list[list[Fraction]], basis: list[int], allowed: int) -> bool:
    """Minimise the objective held in the last row; False if unbounded.

    Columns >= `allowed` (artificials in phase 2) never enter.  Bland's rule:
    lowest-index improving column enters, ties in the ratio test go to the
    lowest-index basic variable.
    """
    obj = T[-1]
    while True:
        enter = next((j for j in range(allowed) if obj[j] < 0), None)
        if enter is None:
            return True
        best = None
        for i in range(len(T) - 1):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            return False
        _pivot(T, basis, best[1], enter)
        obj = T[-1]


def solve_lp(A: Sequence[Sequence], b: Sequence, c: Sequence) -> LPSolution | None:
    """Return the optimum, or None when infeasible.  Raises on unbounded problems."""
    m, n = len(A), len(c)
    A = [[Fraction(v) for v in row] for row in A]
    b = [Fraction(v) for v in b]
    c = [Fraction(v) for v in c]
    for i in range(m):
        if b[i] < 0:
            A[i] = [-v for v in A[i]]
            b[i] = -b[i]

    # phase 1: artificials n..n+m-1, objective = sum of artificials
    T = []
    for i in range(m):
        T.append(A[i] + [Fraction(int(k == i)) for k in range(m)] + [b[i]])
    obj = [Fraction(0)] * (n + m + 1)
    for i in range(m):
        obj = [o - v for o, v in zip(obj, T[i])]
    for k in range(m):
        obj[n + k] = Fraction(0)
    T.append(obj)
    basis = list(range(n, n + m))
    _run(T, basis, n + m)
    if T[-1][-1] != 0:
        return None

    # drive remaining (zero-valued) artificials out of the basis
    i = 0
    while i < len(basis):
        if basis[i] >= n:
            col = next((j for j in range(n) if T[i][j] != 0), None)
            if col is None:
                del T[i]
                del basis[i]
                continue
            _pivot(T, basis, i, col)
        i += 1

    # phase 2
    obj = [Fraction(0)] * (n + m + 1)
    for j in range(n):
        obj[j] = c[j]
    for i, bj in enumerate(basis):
        if obj[bj] != 0:
            f = obj[bj]
            obj = [o - f * v for o, v in zip(obj, T[i])]
    T[-1] = obj
    if not _run(T, basis, n):
        raise ArithmeticError("linear program is unbounded")
    x = [Fraction(0)] * n
    for i, bj in enumerate(basis):
        x[bj] = T[i][-1]
    return LPSolution(-T[-1][-1], tuple(x))
