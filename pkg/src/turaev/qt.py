"""One-variable Laurent polynomials over Q and Smith normal form over Q[t^{+-1}].

Q[t^{+-1}] is Euclidean with size = degree span (top minus bottom
exponent); units are the nonzero monomials.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence


class QtPoly:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, Fraction] | None = None):
        clean = {}
        for e, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[int(e)] = c
        self.terms = clean

    @classmethod
    def const(cls, c) -> "QtPoly":
        return cls({0: c})

    @classmethod
    def t(cls, k: int = 1) -> "QtPoly":
        return cls({k: 1})

    @classmethod
    def from_coeffs(cls, coeffs: Sequence, low: int = 0) -> "QtPoly":
        return cls({low + i: c for i, c in enumerate(coeffs)})

    @classmethod
    def from_laurent(cls, p) -> "QtPoly":
        if p.nvars != 1:
            raise ValueError("need a one-variable polynomial")
        return cls({e[0]: c for e, c in p.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return QtPoly(out)

    def __neg__(self):
        return QtPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, QtPoly):
            other = QtPoly.const(other)
        out: dict[int, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return QtPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, QtPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def low(self) -> int:
        return min(self.terms)

    def high(self) -> int:
        return max(self.terms)

    def span(self) -> int:
        if not self.terms:
            raise ValueError("span of zero")
        return self.high() - self.low()

    def is_unit(self) -> bool:
        return len(self.terms) == 1

    def normalized(self) -> "QtPoly":
        """Lowest exponent 0 and monic (the canonical associate)."""
        if not self.terms:
            return self
        lo, lead = self.low(), self.terms[self.high()]
        return QtPoly({e - lo: c / lead for e, c in self.terms.items()})

    def divmod(self, other: "QtPoly") -> tuple["QtPoly", "QtPoly"]:
        """a = q b + r with r = 0 or span(r) < span(b)."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return QtPoly(), QtPoly()
        a_lo, b_lo = self.low(), other.low()
        A = {e - a_lo: c for e, c in self.terms.items()}
        B = {e - b_lo: c for e, c in other.terms.items()}
        db = max(B)
        lead = B[db]
        q: dict[int, Fraction] = {}
        while A and max(A) >= db:
            da = max(A)
            c = A[da] / lead
            q[da - db] = c
            for e, bc in B.items():
                k = e + da - db
                A[k] = A.get(k, 0) - c * bc
                if not A[k]:
                    del A[k]
        quot = QtPoly({e + a_lo - b_lo: c for e, c in q.items()})
        rem = QtPoly({e + a_lo: c for e, c in A.items()})
        return quot, rem

    def format(self, var: str = "t") -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            mag = abs(c)
            mono = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
            if mono:
                txt = mono if mag == 1 else f"{mag}*{mono}"
            else:
                txt = str(mag)
            parts.append(("-" if c < 0 else "+", txt))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, txt in parts[1:]:
            out += f" {sign} {txt}"
        return out

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"QtPoly({self.format()!r})"


QtMatrix = list[list[QtPoly]]


def zeros(n: int, m: int) -> QtMatrix:
    return [[QtPoly() for _ in range(m)] for _ in range(n)]


def identity(n: int) -> QtMatrix:
    return [[QtPoly.const(1) if i == j else QtPoly() for j in range(n)] for i in range(n)]


def matmul(A: QtMatrix, B: QtMatrix, inner: int | None = None) -> QtMatrix:
    k = len(B) if inner is None else inner
    cols = len(B[0]) if B else 0
    out = zeros(len(A), cols)
    for i in range(len(A)):
        for j in range(cols):
            acc = QtPoly()
            for l in range(k):
                if not A[i][l].is_zero() and not B[l][j].is_zero():
                    acc = acc + A[i][l] * B[l][j]
            out[i][j] = acc
    return out


def row_echelon(M: QtMatrix) -> tuple[QtMatrix, QtMatrix, QtMatrix, int]:
    """Row-reduce: returns (E, U, U^{-1}, r) with U M = E and the first r rows of E nonzero."""
    E = [list(row) for row in M]
    n = len(E)
    m = len(E[0]) if n else 0
    U = identity(n)
    Uinv = identity(n)

    def swap(i, j):
        E[i], E[j] = E[j], E[i]
        U[i], U[j] = U[j], U[i]
        for row in Uinv:
            row[i], row[j] = row[j], row[i]

    def addrow(src, dst, q):  # row_dst -= q * row_src
        E[dst] = [a - q * b for a, b in zip(E[dst], E[src])]
        U[dst] = [a - q * b for a, b in zip(U[dst], U[src])]
        # inverse: column_src += q * column_dst
        for row in Uinv:
            row[src] = row[src] + q * row[dst]

    r = 0
    for col in range(m):
        if r == n:
            break
        while True:
            cands = [(E[i][col].span(), i) for i in range(r, n) if not E[i][col].is_zero()]
            if not cands:
                break
            _, p = min(cands)
            swap(r, p)
            done = True
            for i in range(r + 1, n):
                if not E[i][col].is_zero():
                    q, _ = E[i][col].divmod(E[r][col])
                    addrow(r, i, q)
                    if not E[i][col].is_zero():
                        done = False
            if done:
                r += 1
                break
    return E, U, Uinv, r


def smith_diagonal(M: QtMatrix) -> list[QtPoly]:
    """Nonzero invariant factors of M, normalized, forming a divisibility chain."""
    D = [list(row) for row in M]
    n = len(D)
    m = len(D[0]) if n else 0
    t = 0
    out: list[QtPoly] = []
    while t < min(n, m):
        cands = [(D[i][j].span(), i, j) for i in range(t, n) for j in range(t, m) if not D[i][j].is_zero()]
        if not cands:
            break
        _, pi, pj = min(cands)
        D[t], D[pi] = D[pi], D[t]
        for row in D:
            row[t], row[pj] = row[pj], row[t]
        while True:
            changed = False
            for i in range(t + 1, n):
                if not D[i][t].is_zero():
                    q, _ = D[i][t].divmod(D[t][t])
                    D[i] = [a - q * b for a, b in zip(D[i], D[t])]
                    if not D[i][t].is_zero():
                        D[t], D[i] = D[i], D[t]
                        changed = True
            for j in range(t + 1, m):
                if not D[t][j].is_zero():
                    q, _ = D[t][j].divmod(D[t][t])
                    for row in D:
                        row[j] = row[j] - q * row[t]
                    if not D[t][j].is_zero():
                        for row in D:
                            row[t], row[j] = row[j], row[t]
                        changed = True
            if changed:
                continue
            bad = next(
                (i for i in range(t + 1, n) for j in range(t + 1, m)
                 if not D[i][j].divmod(D[t][t])[1].is_zero()),
                None,
            )
            if bad is None:
                break
            D[t] = [a + b for a, b in zip(D[t], D[bad])]
        out.append(D[t][t].normalized())
        t += 1
    return out
