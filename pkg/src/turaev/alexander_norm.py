"""Newton support of Alexander polynomials, the Alexander norm, and gated lower bounds."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .alexander import AbelianizationMap, alexander_polynomial, one_variable_alexander
from .complex import complex_from_presentation, h1_structure
from .laurent import LaurentPoly
from .lp import LPError, simplex
from .presentations import CohomClass, Presentation, class_coordinates, divisibility


def support(delta: LaurentPoly) -> set[tuple[int, ...]]:
    return delta.support()


def alexander_norm(delta: LaurentPoly, phi: Sequence) -> Fraction:
    """max over support pairs of phi(h) - phi(g); 0 for the zero polynomial."""
    phi = [Fraction(x) for x in phi]
    if len(phi) != delta.nvars:
        raise ValueError("class and polynomial live on lattices of different rank")
    vals = [sum((a * b for a, b in zip(phi, e)), Fraction(0)) for e in delta.support()]
    if not vals:
        return Fraction(0)
    return max(vals) - min(vals)


def _in_hull(p, others) -> bool:
    """Exact membership of p in conv(others) via a phase-one LP."""
    if not others:
        return False
    d = len(p)
    k = len(others)
    # lambda_j >= 0, sum lambda = 1, sum lambda_j q_j = p ; artificials a_i
    rows = [[Fraction(q[i]) for q in others] for i in range(d)] + [[Fraction(1)] * k]
    rhs = [Fraction(x) for x in p] + [Fraction(1)]
    for i, r in enumerate(rhs):
        if r < 0:
            rows[i] = [-x for x in rows[i]]
            rhs[i] = -r
    m = len(rows)
    A = [row + [Fraction(int(i == j)) for j in range(m)] for i, row in enumerate(rows)]
    c = [Fraction(0)] * k + [Fraction(1)] * m
    try:
        val, _ = simplex(A, rhs, c, list(range(k, k + m)))
    except LPError:  # pragma: no cover - bounded below by 0
        return False
    return val == 0


def polytope_vertices(delta: LaurentPoly) -> list[tuple[int, ...]]:
    """Vertices of the Newton polytope (rank <= 3 only)."""
    if delta.nvars > 3:
        raise ValueError("polytope vertices are only reported in rank <= 3")
    pts = sorted(delta.support())
    return [p for p in pts if not _in_hull(p, [q for q in pts if q != p])]


@dataclass
class LowerBounds:
    a_bound: Fraction | None = None
    deg_bound: Fraction | None = None
    gates: list[tuple[str, bool, str]] = field(default_factory=list)
    delta: LaurentPoly | None = None
    delta_phi: LaurentPoly | None = None


def lower_bounds(P: Presentation, phi: CohomClass) -> LowerBounds:
    """Alexander-norm and degree lower bounds on t-bar, each emitted only when its hypotheses hold.

    The norm bound needs b_1 >= 2 (and a nonzero Delta for it to say
    anything); the degree bound needs phi integral and primitive with
    Delta_phi != 0.
    """
    out = LowerBounds()
    gates = out.gates
    b1, _ = h1_structure(complex_from_presentation(P))
    coords = class_coordinates(P, phi)

    ok = b1 >= 2
    gates.append(("b1 >= 2 (Alexander norm bound)", ok, f"b1 = {b1}"))
    if ok:
        delta = alexander_polynomial(P, AbelianizationMap.canonical(P))
        out.delta = delta
        nz = not delta.is_zero()
        gates.append(("Delta != 0 (Alexander norm bound)", nz, f"Delta = {delta}"))
        if nz:
            out.a_bound = alexander_norm(delta, coords)

    integral = phi.is_integral() and not phi.is_zero()
    gates.append(("phi integral and nonzero (degree bound)", integral, str(phi)))
    if integral:
        div = divisibility(coords)
        prim = div == 1
        gates.append(("phi primitive (degree bound)", prim, f"div = {div}"))
        if prim:
            dphi = one_variable_alexander(P, phi)
            out.delta_phi = dphi
            nz = not dphi.is_zero()
            gates.append(("Delta_phi != 0 (degree bound)", nz, f"Delta_phi = {dphi}"))
            if nz:
                out.deg_bound = Fraction(dphi.degree() - 1)
    return out
