"""Multivariable Laurent polynomials with integer coefficients."""

from __future__ import annotations

from functools import reduce
from typing import Iterable, Mapping, Sequence

import sympy

Exp = tuple[int, ...]


def default_names(nvars: int) -> tuple[str, ...]:
    if nvars == 1:
        return ("t",)
    if nvars == 2:
        return ("s", "u")
    return tuple(f"t{i + 1}" for i in range(nvars))


class LaurentPoly:
    """Element of Z[t_1^{+-1}, ..., t_k^{+-1}], stored as exponent vector -> coefficient."""

    __slots__ = ("nvars", "terms")

    def __init__(self, terms: Mapping[Sequence[int], int] | None = None, nvars: int = 1):
        self.nvars = nvars
        clean: dict[Exp, int] = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != nvars:
                raise ValueError(f"exponent {e} has wrong length for {nvars} variables")
            c = int(c)
            if c:
                clean[e] = clean.get(e, 0) + c
                if not clean[e]:
                    del clean[e]
        self.terms = clean

    # constructors
    @classmethod
    def zero(cls, nvars: int = 1) -> "LaurentPoly":
        return cls({}, nvars)

    @classmethod
    def const(cls, c: int, nvars: int = 1) -> "LaurentPoly":
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def monomial(cls, exp: Sequence[int], c: int = 1) -> "LaurentPoly":
        return cls({tuple(exp): c}, len(exp))

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int], low: int = 0) -> "LaurentPoly":
        """One-variable polynomial sum_i coeffs[i] t^(low + i)."""
        return cls({(low + i,): c for i, c in enumerate(coeffs)}, 1)

    # arithmetic
    def _check(self, other: "LaurentPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError("Laurent polynomials in different variable sets")

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other, self.nvars)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self.terms.items()}, self.nvars)
        self._check(other)
        out: dict[Exp, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out, self.nvars)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other, self.nvars)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def is_unit(self) -> bool:
        return len(self.terms) == 1 and abs(next(iter(self.terms.values()))) == 1

    def support(self) -> set[Exp]:
        return set(self.terms)

    def evaluate_exponent_map(self, phi: Sequence[Sequence[int]] | Sequence[int]) -> "LaurentPoly":
        """Substitute t^v -> t^{phi(v)}; ``phi`` is a linear map given by rows.

        A flat sequence of ints is read as a single functional, giving a
        one-variable result.
        """
        rows = [phi] if phi and isinstance(phi[0], int) else list(phi)
        out: dict[Exp, int] = {}
        for e, c in self.terms.items():
            img = tuple(sum(r[i] * e[i] for i in range(self.nvars)) for r in rows)
            out[img] = out.get(img, 0) + c
        return LaurentPoly(out, len(rows))

    # normal form
    def normalized(self) -> "LaurentPoly":
        """Canonical representative of the unit class: min exponents 0, graded-lex lead positive."""
        if not self.terms:
            return self
        mins = [min(e[i] for e in self.terms) for i in range(self.nvars)]
        shifted = {tuple(a - m for a, m in zip(e, mins)): c for e, c in self.terms.items()}
        lead = max(shifted, key=lambda e: (sum(e), e))
        sign = 1 if shifted[lead] > 0 else -1
        return LaurentPoly({e: sign * c for e, c in shifted.items()}, self.nvars)

    def associated(self, other: "LaurentPoly") -> bool:
        """Equal up to a unit +-t^v."""
        return self.normalized() == other.normalized()

    def degree(self) -> int:
        """Top exponent minus bottom exponent (one variable only)."""
        if self.nvars != 1:
            raise ValueError("degree is defined for one-variable polynomials")
        if not self.terms:
            raise ValueError("degree of the zero polynomial")
        exps = [e[0] for e in self.terms]
        return max(exps) - min(exps)

    # display
    def format(self, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        names = names or default_names(self.nvars)
        parts = []
        for e in sorted(self.terms, key=lambda e: (sum(e), tuple(-x for x in e))):
            c = self.terms[e]
            mono = []
            for n, k in zip(names, e):
                if k == 1:
                    mono.append(n)
                elif k:
                    mono.append(f"{n}^{k}")
            body = "*".join(mono)
            mag = abs(c)
            if body:
                txt = body if mag == 1 else f"{mag}*{body}"
            else:
                txt = str(mag)
            parts.append(("-" if c < 0 else "+", txt))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, txt in parts[1:]:
            out += f" {sign} {txt}"
        return out

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"LaurentPoly({self.format()!r})"


# --------------------------------------------------------------------- gcd


def _to_sympy(p: LaurentPoly, gens) -> sympy.Poly:
    mins = [min(e[i] for e in p.terms) for i in range(p.nvars)]
    d = {tuple(a - m for a, m in zip(e, mins)): c for e, c in p.terms.items()}
    return sympy.Poly.from_dict(d, *gens, domain=sympy.ZZ)


def _from_sympy(q: sympy.Poly, nvars: int) -> LaurentPoly:
    return LaurentPoly({tuple(e): int(c) for e, c in q.as_dict().items()}, nvars)


def laurent_gcd(polys: Iterable[LaurentPoly], nvars: int | None = None) -> LaurentPoly:
    """gcd in the UFD Z[t^{+-1}], unit-normalized; gcd of nothing (or zeros) is 0."""
    polys = list(polys)
    if nvars is None:
        nvars = polys[0].nvars if polys else 1
    nonzero = sorted(
        {p.normalized() for p in polys if not p.is_zero()},
        key=lambda p: (len(p.terms), sorted(p.terms.items())),
    )
    if not nonzero:
        return LaurentPoly.zero(nvars)
    if any(p.is_unit() for p in nonzero):
        return LaurentPoly.const(1, nvars)
    gens = sympy.symbols(f"z0:{nvars}")
    g = reduce(lambda a, b: sympy.gcd(a, b), (_to_sympy(p, gens) for p in nonzero))
    return _from_sympy(g, nvars).normalized()


def determinant(M: Sequence[Sequence[LaurentPoly]], nvars: int) -> LaurentPoly:
    """Division-free determinant by Laplace expansion over column subsets."""
    k = len(M)
    if k == 0:
        return LaurentPoly.const(1, nvars)
    # dp over the set of columns used by the first i rows
    dp: dict[int, LaurentPoly] = {0: LaurentPoly.const(1, nvars)}
    for i in range(k):
        nxt: dict[int, LaurentPoly] = {}
        for mask, val in dp.items():
            if val.is_zero():
                continue
            for j in range(k):
                if mask >> j & 1 or M[i][j].is_zero():
                    continue
                # sign: number of used columns to the right of j
                sign = -1 if bin(mask >> (j + 1)).count("1") % 2 else 1
                term = val * M[i][j] * sign
                key = mask | (1 << j)
                nxt[key] = nxt[key] + term if key in nxt else term
        dp = nxt
    return dp.get((1 << k) - 1, LaurentPoly.zero(nvars))
