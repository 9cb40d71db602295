"""The Turaev norm as an exact minimization over cocycles, and certified bounds on t-bar."""

from __future__ import annotations

import logging
import math
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .complex import (
    Cochain,
    ComplexError,
    TwoComplex,
    add_cochains,
    boundary_is_empty,
    coboundary,
    cocycle_from_class,
    edge_multiplicities,
    is_cocycle,
)
from .lp import simplex
from .presentations import (
    CohomClass,
    Presentation,
    PresentationError,
    abelianize,
    check_class,
    make_good,
    t_P,
)

log = logging.getLogger(__name__)


class Certificate(str, Enum):
    BRUTE_FORCE = "BruteForce"
    LP_INTEGRAL = "LPIntegral"


@dataclass(frozen=True)
class NormResult:
    value: Fraction
    optimal_cochain: Cochain
    certificate: Certificate
    notes: tuple[str, ...] = ()

    @property
    def half_integral(self) -> bool:
        return self.value.denominator != 1


def edge_weights(X: TwoComplex) -> tuple[Fraction, ...]:
    return tuple(Fraction(n, 2) - 1 for n in edge_multiplicities(X))


def weight(X: TwoComplex, k: Sequence) -> Fraction:
    """|k| = sum_e (n_e/2 - 1)|k(e)|."""
    if not boundary_is_empty(X):
        raise ComplexError("complex has nonempty boundary (some n_e < 2)")
    return sum((w * abs(Fraction(x)) for w, x in zip(edge_weights(X), k)), Fraction(0))


# ------------------------------------------------------------ decomposition


def _positive_components(X: TwoComplex, w: Sequence[Fraction]) -> list[list[int]]:
    """Vertex sets of components of the graph of positive-weight non-loop edges.

    Singletons are dropped: their potential never affects the objective.
    """
    adj: list[list[int]] = [[] for _ in range(X.n_vertices)]
    for e, (s, t) in enumerate(X.edges):
        if s != t and w[e] > 0:
            adj[s].append(t)
            adj[t].append(s)
    seen: set[int] = set()
    comps = []
    for root in range(X.n_vertices):
        if root in seen:
            continue
        order = [root]
        seen.add(root)
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in sorted(adj[v]):
                if u not in seen:
                    seen.add(u)
                    order.append(u)
                    queue.append(u)
        if len(order) > 1:
            comps.append(order)
    return comps


def _objective(w, k0, X, f) -> Fraction:
    return sum(
        (we * abs(k + f[t] - f[s]) for we, k, (s, t) in zip(w, k0, X.edges)),
        Fraction(0),
    )


def _box_bound(X, w, k0, comp: list[int]) -> int:
    """Radius of a box around the pinned root containing some optimal potential.

    Two bounds, both proved: shrinking any gap larger than max|k0| between
    consecutive potential levels never increases the objective, so an optimum
    spans at most (n-1)*max|k0|; and every optimum has
    sum_e |k0(e) + df(e)| <= W/w_min, which caps |f| along tree paths.
    """
    vs = set(comp)
    es = [e for e, (s, t) in enumerate(X.edges) if s != t and w[e] > 0 and s in vs]
    M = max((abs(k0[e]) for e in es), default=0)
    W = sum((w[e] * abs(k0[e]) for e in es), Fraction(0))
    wmin = min(w[e] for e in es)
    b1 = (len(comp) - 1) * M
    b2 = math.ceil(W / wmin) + sum(abs(k0[e]) for e in es)
    return int(min(b1, b2))


# -------------------------------------------------------------- brute force


def _brute_component(X, w, k0, comp: list[int]) -> dict[int, int]:
    B = _box_bound(X, w, k0, comp)
    pos = {v: i for i, v in enumerate(comp)}
    # edges become active once both endpoints are assigned
    active: list[list[tuple[int, int, int]]] = [[] for _ in comp]
    for e, (s, t) in enumerate(X.edges):
        if s != t and w[e] > 0 and s in pos:
            later = max(pos[s], pos[t])
            active[later].append((e, s, t))
    f = {comp[0]: 0}
    best = [sum(w[e] * abs(k0[e]) for lst in active for e, _, _ in lst), dict.fromkeys(comp, 0)]

    def rec(i: int, partial: int):
        if partial >= best[0] and i < len(comp):
            return
        if i == len(comp):
            if partial < best[0]:
                best[0] = partial
                best[1] = dict(f)
            return
        v = comp[i]
        for val in range(-B, B + 1):
            f[v] = val
            cost = partial
            for e, s, t in active[i]:
                cost += w[e] * abs(k0[e] + f[t] - f[s])
                if cost >= best[0]:
                    break
            else:
                rec(i + 1, cost)
        del f[v]

    rec(1, 0)
    return best[1]


def _minimize_brute(X, w, k0) -> list[int]:
    # doubled weights n_e - 2 keep the search in integers
    w2 = [int(2 * x) for x in w]
    k = [int(x) for x in k0]
    f = [0] * X.n_vertices
    for comp in _positive_components(X, w):
        for v, val in _brute_component(X, w2, k, comp).items():
            f[v] = val
    return f


# ----------------------------------------------------------------------- LP


def _minimize_lp(X, w, k0) -> list[Fraction]:
    """Split formulation: y_e >= +-(k0(e) + f(t) - f(s)), minimize sum w_e y_e."""
    comps = _positive_components(X, w)
    free = [v for comp in comps for v in comp[1:]]
    col = {v: i for i, v in enumerate(free)}
    es = [e for e, (s, t) in enumerate(X.edges) if s != t and w[e] > 0]
    nf = len(free)
    ne = len(es)
    # columns: p_v, q_v (f = p - q), y_e, s+_e, s-_e
    n = 2 * nf + 3 * ne
    P = lambda v: col[v]  # noqa: E731
    Q = lambda v: nf + col[v]  # noqa: E731
    Y = lambda i: 2 * nf + i  # noqa: E731
    SP = lambda i: 2 * nf + ne + i  # noqa: E731
    SM = lambda i: 2 * nf + 2 * ne + i  # noqa: E731
    A, b, basis = [], [], []
    for i, e in enumerate(es):
        s, t = X.edges[e]
        for sign, slack in ((1, SP(i)), (-1, SM(i))):
            # y - sign*(f_t - f_s) - slack = sign*k0
            row = [Fraction(0)] * n
            row[Y(i)] = Fraction(1)
            row[slack] = Fraction(-1)
            if t in col:
                row[P(t)] -= sign
                row[Q(t)] += sign
            if s in col:
                row[P(s)] += sign
                row[Q(s)] -= sign
            A.append(row)
            b.append(sign * k0[e])
        basis.extend([Y(i), SM(i) if k0[e] >= 0 else SP(i)])
    if not A:
        return [Fraction(0)] * X.n_vertices
    c = [Fraction(0)] * n
    for i, e in enumerate(es):
        c[Y(i)] = w[e]
    _, x = simplex(A, b, c, basis)
    f = [Fraction(0)] * X.n_vertices
    for v in free:
        f[v] = x[P(v)] - x[Q(v)]
    return f


# --------------------------------------------------------------- front end


def minimize_weight(X: TwoComplex, k0: Sequence, method: str = "auto") -> NormResult:
    """Minimize |k0 + df| over integer potentials f for an integral cocycle k0."""
    if not boundary_is_empty(X):
        raise ComplexError("complex has nonempty boundary (some n_e < 2)")
    k0 = [Fraction(x) for x in k0]
    if any(x.denominator != 1 for x in k0):
        raise ValueError("minimize_weight needs an integral cocycle")
    if not is_cocycle(X, k0):
        raise ComplexError("starting cochain is not a cocycle")
    w = edge_weights(X)
    notes: list[str] = []
    if method in ("lp", "auto"):
        f = _minimize_lp(X, w, k0)
        if all(v.denominator == 1 for v in f):
            k = add_cochains(k0, coboundary(X, f))
            return NormResult(_objective(w, k0, X, f), k, Certificate.LP_INTEGRAL)
        msg = "internal error: LP optimum not integral; fell back to brute force"
        log.error(msg)
        notes.append(msg)
    elif method != "brute":
        raise ValueError(f"unknown method {method!r}")
    f = _minimize_brute(X, w, k0)
    k = add_cochains(k0, coboundary(X, f))
    return NormResult(_objective(w, k0, X, f), k, Certificate.BRUTE_FORCE, tuple(notes))


def turaev_norm(X: TwoComplex, phi: CohomClass, method: str = "auto") -> NormResult:
    """t_X(phi): the minimum of |k| over cellular cocycles k representing phi."""
    if not boundary_is_empty(X):
        raise ComplexError("complex has nonempty boundary (some n_e < 2)")
    scale = phi.denominator_lcm()
    k0 = cocycle_from_class(X, phi.scaled(scale))
    res = minimize_weight(X, k0, method)
    if scale == 1:
        return res
    return NormResult(
        res.value / scale,
        tuple(x / scale for x in res.optimal_cochain),
        res.certificate,
        res.notes,
    )


# ------------------------------------------------------------ certification


@dataclass
class Sandwich:
    lower: Fraction
    upper: Fraction | None
    lower_source: str = "none"
    upper_source: str = "none"
    gates: list[tuple[str, bool, str]] = field(default_factory=list)
    uppers: list[Fraction] = field(default_factory=list)

    @property
    def certified(self) -> bool:
        return self.upper is not None and self.lower == self.upper


def certify_tbar(presentations: Sequence[Presentation], phis: Sequence[CohomClass]) -> Sandwich:
    """Two-sided bound on the Turaev complexity function.

    ``phis`` holds one class per presentation, or a single class applied to
    every presentation by generator name. Lower bounds come from the first
    presentation; upper bounds are t_P over all of them after make_good.
    """
    from .alexander_norm import lower_bounds

    if not presentations:
        raise PresentationError("certify needs at least one presentation")
    if len(phis) == 1:
        phis = list(phis) * len(presentations)
    if len(phis) != len(presentations):
        raise PresentationError("need one class per presentation (or a single shared class)")
    abs_ = [abelianize(P) for P in presentations]
    if len({(a.betti, a.torsion) for a in abs_}) > 1:
        raise PresentationError("presentations have different abelianizations")
    for P, phi in zip(presentations, phis):
        check_class(P, phi)

    uppers = []
    for P, phi in zip(presentations, phis):
        G = make_good(P)
        uppers.append(t_P(G, phi.restricted(G.gens)))
    bounds = lower_bounds(presentations[0], phis[0])
    candidates = [(v, name) for name, v in (("alexander_norm", bounds.a_bound), ("degree", bounds.deg_bound)) if v is not None]
    if candidates:
        lower, source = max(candidates)
    else:
        lower, source = Fraction(0), "none"
    upper = min(uppers)
    return Sandwich(
        lower=max(lower, Fraction(0)),
        upper=upper,
        lower_source=source,
        upper_source=f"presentation {uppers.index(upper)}",
        gates=list(bounds.gates),
        uppers=uppers,
    )
