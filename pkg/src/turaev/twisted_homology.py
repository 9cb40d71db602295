"""H_1 of the infinite cyclic cover with Q[t^{+-1}] coefficients."""

from __future__ import annotations

from dataclasses import dataclass

from .alexander import AbelianizationMap, alexander_matrix
from .presentations import CohomClass, Presentation
from .qt import QtMatrix, QtPoly, matmul, row_echelon, smith_diagonal


@dataclass(frozen=True)
class ModuleDecomposition:
    free_rank: int
    invariant_factors: tuple[QtPoly, ...]

    def format(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("Q[t±]" + (f"^{self.free_rank}" if self.free_rank > 1 else ""))
        parts.extend(f"Q[t±]/({f})" for f in self.invariant_factors)
        return "H1 = " + (" ⊕ ".join(parts) if parts else "0")

    def __str__(self):
        return self.format()


def fox_chain_complex(P: Presentation, phi: CohomClass) -> tuple[QtMatrix, QtMatrix]:
    """(d2, d1): the Fox matrix under phi (n x m) and the column t^{phi(x_i)} - 1 (m x 1)."""
    A = alexander_matrix(P, AbelianizationMap.from_class(P, phi))
    d2 = [[QtPoly.from_laurent(p) for p in row] for row in A.entries]
    one = QtPoly.const(1)
    d1 = [[QtPoly.t(int(phi[g])) - one] for g in P.gens]
    comp = matmul(d2, d1)
    if any(not x.is_zero() for row in comp for x in row):
        raise AssertionError("d1 . d2 != 0: Fox identity violated")
    return d2, d1


def h1_qt(P: Presentation, phi: CohomClass) -> ModuleDecomposition:
    """ker d1 / im d2, decomposed over the PID Q[t^{+-1}]."""
    d2, d1 = fox_chain_complex(P, phi)
    m = len(P.gens)
    _, U, Uinv, r = row_echelon(d1)
    # chains are row vectors; rows r.. of U span ker d1, and d2 = W U
    W = matmul(d2, Uinv, inner=m) if d2 else []
    for row in W:
        assert all(x.is_zero() for x in row[:r]), "image of d2 escapes ker d1"
    Wk = [row[r:] for row in W]
    diag = smith_diagonal(Wk) if Wk and m - r else []
    factors = tuple(f for f in diag if not f.is_unit())
    return ModuleDecomposition(m - r - len(diag), factors)


def min_generators_torsion(d: ModuleDecomposition) -> int:
    return len(d.invariant_factors)
