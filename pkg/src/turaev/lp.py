"""Dense primal simplex over the rationals.

Solves ``min c.x  s.t.  A x = b, x >= 0`` from a caller-supplied feasible
basis, with Bland's rule so degenerate pivots cannot cycle.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


class LPError(RuntimeError):
    pass


def _pivot(T: list[list[Fraction]], r: int, j: int) -> None:
    piv = T[r][j]
    T[r] = [v / piv for v in T[r]]
    row = T[r]
    for i, other in enumerate(T):
        if i != r and other[j]:
            f = other[j]
            T[i] = [a - f * b for a, b in zip(other, row)]


def simplex(
    A: Sequence[Sequence], b: Sequence, c: Sequence, basis: Sequence[int], max_iter: int = 100_000
) -> tuple[Fraction, list[Fraction]]:
    m = len(A)
    n = len(c)
    T = [[Fraction(v) for v in row] + [Fraction(bi)] for row, bi in zip(A, b)]
    cost = [Fraction(v) for v in c]

    # bring the starting basis to identity form
    assigned = [-1] * m
    for j in basis:
        r = next((i for i in range(m) if assigned[i] < 0 and T[i][j] != 0), None)
        if r is None:
            raise LPError("starting basis is singular")
        _pivot(T, r, j)
        assigned[r] = j
    if any(T[i][-1] < 0 for i in range(m)):
        raise LPError("starting basis is infeasible")
    basis = assigned

    for _ in range(max_iter):
        entering = None
        for j in range(n):
            if j in basis:
                continue
            red = cost[j] - sum(cost[basis[i]] * T[i][j] for i in range(m))
            if red < 0:
                entering = j
                break
        if entering is None:
            break
        best = None
        for i in range(m):
            a = T[i][entering]
            if a > 0:
                ratio = T[i][-1] / a
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            raise LPError("objective is unbounded below")
        r = best[1]
        _pivot(T, r, entering)
        basis[r] = entering
    else:
        raise LPError("iteration limit reached")

    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        x[j] = T[i][-1]
    return sum((cj * xj for cj, xj in zip(cost, x)), Fraction(0)), x
