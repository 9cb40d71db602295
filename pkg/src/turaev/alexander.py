"""Fox calculus and Alexander polynomials of presentations."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Mapping, Sequence

from .laurent import LaurentPoly, determinant, laurent_gcd
from .presentations import CohomClass, FreeWord, Presentation, abelianize

FoxElement = dict[FreeWord, int]


class AlexanderError(ValueError):
    pass


def fox_derivative(w: FreeWord, g: str) -> FoxElement:
    """Free derivative of w with respect to g, as {reduced word: coefficient}."""
    out: FoxElement = {}
    prefix: list[tuple[str, int]] = []
    for h, e in w:
        if h == g:
            key = FreeWord(tuple(prefix)).reduce() if e == 1 else FreeWord(tuple(prefix) + ((g, -1),)).reduce()
            out[key] = out.get(key, 0) + e
            if not out[key]:
                del out[key]
        prefix.append((h, e))
    return out


def fox_identity_free(r: FreeWord, gens: Sequence[str]) -> bool:
    """sum_i (dr/dx_i)(x_i - 1) == r - 1 in the integral group ring of the free group."""
    total: FoxElement = {}

    def add(w: FreeWord, c: int):
        w = w.reduce()
        total[w] = total.get(w, 0) + c
        if not total[w]:
            del total[w]

    for g in gens:
        for w, c in fox_derivative(r, g).items():
            add(w * FreeWord(((g, 1),)), c)
            add(w, -c)
    expected: FoxElement = {}
    for w, c in ((r.reduce(), 1), (FreeWord(), -1)):
        expected[w] = expected.get(w, 0) + c
        if not expected[w]:
            del expected[w]
    return total == expected


@dataclass(frozen=True)
class AbelianizationMap:
    """Homomorphism from the free group to Z^k, given on generators."""

    images: Mapping[str, tuple[int, ...]]
    nvars: int
    names: tuple[str, ...] | None = None

    def word_image(self, w: FreeWord) -> tuple[int, ...]:
        v = [0] * self.nvars
        for g, e in w:
            for i, a in enumerate(self.images[g]):
                v[i] += e * a
        return tuple(v)

    def monomial(self, w: FreeWord) -> LaurentPoly:
        return LaurentPoly.monomial(self.word_image(w)) if self.nvars else LaurentPoly.const(1, 0)

    def push(self, x: FoxElement) -> LaurentPoly:
        out = LaurentPoly.zero(self.nvars)
        for w, c in x.items():
            out = out + self.monomial(w) * c
        return out

    def check(self, P: Presentation) -> None:
        missing = set(P.gens) - set(self.images)
        if missing:
            raise AlexanderError(f"map undefined on {sorted(missing)}")
        for r in P.rels:
            if any(self.word_image(r)):
                raise AlexanderError(f"map does not kill relator {r}")

    @classmethod
    def from_class(cls, P: Presentation, phi: CohomClass) -> "AbelianizationMap":
        if not phi.is_integral():
            raise AlexanderError("one-variable map needs an integral class")
        return cls({g: (int(phi[g]),) for g in P.gens}, 1, ("t",))

    @classmethod
    def canonical(cls, P: Presentation) -> "AbelianizationMap":
        """Projection onto H_1/torsion in the SNF basis."""
        ab = abelianize(P)
        return cls(dict(ab.free_coords), ab.betti)


@dataclass(frozen=True)
class GroupRingMatrix:
    entries: tuple[tuple[LaurentPoly, ...], ...]
    nvars: int
    presentation: Presentation
    psi: AbelianizationMap

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.entries), len(self.presentation.gens)


def fox_identity_holds(P: Presentation, psi: AbelianizationMap, A: Sequence[Sequence[LaurentPoly]]) -> bool:
    """sum_i psi(dr/dx_i) (psi(x_i) - 1) == 0 for every relator."""
    one = LaurentPoly.const(1, psi.nvars)
    units = [LaurentPoly.monomial(psi.images[g]) - one for g in P.gens]
    for row in A:
        total = LaurentPoly.zero(psi.nvars)
        for a, u in zip(row, units):
            total = total + a * u
        if not total.is_zero():
            return False
    return True


def alexander_matrix(P: Presentation, psi: AbelianizationMap) -> GroupRingMatrix:
    psi.check(P)
    rows = tuple(tuple(psi.push(fox_derivative(r, g)) for g in P.gens) for r in P.rels)
    if not fox_identity_holds(P, psi, rows):
        raise AssertionError("Fox fundamental identity violated")
    return GroupRingMatrix(rows, psi.nvars, P, psi)


def minors(A: GroupRingMatrix, size: int | None = None) -> Iterator[tuple[tuple[int, ...], tuple[int, ...], LaurentPoly]]:
    """All ``size``-minors (default m-1) as (rows, cols, determinant)."""
    n, m = A.shape
    k = m - 1 if size is None else size
    for rows in combinations(range(n), k):
        for cols in combinations(range(m), k):
            sub = [[A.entries[i][j] for j in cols] for i in rows]
            yield rows, cols, determinant(sub, A.nvars)


def alexander_polynomial(P: Presentation, psi: AbelianizationMap | None = None) -> LaurentPoly:
    """gcd of the (m-1)-minors of the Fox matrix, unit-normalized."""
    if psi is None:
        psi = AbelianizationMap.canonical(P)
    if psi.nvars == 0:
        raise AlexanderError("H_1/torsion is trivial (b_1 = 0); no Alexander polynomial is defined here")
    A = alexander_matrix(P, psi)
    n, m = A.shape
    if m - 1 > n:
        return LaurentPoly.zero(psi.nvars)
    dets = sorted(
        (d for _, _, d in minors(A)),
        key=lambda p: (len(p.terms), sorted(p.terms.items())),
    )
    return laurent_gcd(dets, psi.nvars)


def specialize(delta: LaurentPoly, phi: Sequence[int]) -> LaurentPoly:
    """t^v -> t^{phi(v)} for an integral functional phi on the exponent lattice."""
    if len(phi) != delta.nvars:
        raise AlexanderError("functional has the wrong length")
    return delta.evaluate_exponent_map(list(map(int, phi)))


def degree(p: LaurentPoly) -> int:
    return p.degree()


def one_variable_alexander(P: Presentation, phi: CohomClass) -> LaurentPoly:
    """Delta_{P, phi} in Z[t^{+-1}] for an integral class phi."""
    return alexander_polynomial(P, AbelianizationMap.from_class(P, phi))
