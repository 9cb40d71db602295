"""Reproduction suite: the worked examples plus randomized property checks.

Each ``criterion_*`` function returns a :class:`CriterionResult`; the CLI's
``paper-suite`` and ``tests/test_acceptance.py`` both run them.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .alexander import (
    AbelianizationMap,
    alexander_matrix,
    alexander_polynomial,
    fox_identity_free,
    minors,
)
from .alexander_norm import alexander_norm, lower_bounds
from .complex import complex_from_presentation
from .covers import CoverSpec, cover_complex, cyclic_cover_spec, lift_class, verify_cover_inequality
from .laurent import LaurentPoly, laurent_gcd
from .link_ingest import fixture_presentation, knot_fixture, parse_pd, PD_FIXTURES, wedge_of_tori
from .presentations import (
    CohomClass,
    FreeWord,
    Presentation,
    abelianize,
    div_counterexample,
    divisibility,
    make_good,
    normalize_relator,
    parse_phi,
    t_P,
)
from .turaev_opt import Certificate, certify_tbar, turaev_norm
from .twisted_homology import h1_qt


@dataclass(frozen=True)
class SuiteConfig:
    seed: int = 20240517
    n_presentations: int = 200
    n_covers: int = 50
    max_gens: int = 4
    max_rels: int = 4
    max_rel_len: int = 8
    cover_orders: tuple[int, ...] = (2, 3)
    n_div: int = 100
    n_seminorm: int = 500


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str = ""
    failures: list[str] = field(default_factory=list)

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number:>2}. {self.name}: {self.detail}"


# ---------------------------------------------------------------- generators


def random_presentation(rng: random.Random, cfg: SuiteConfig) -> Presentation:
    m = rng.randint(1, cfg.max_gens)
    gens = tuple(f"g{i}" for i in range(m))
    rels = []
    for _ in range(rng.randint(1, cfg.max_rels)):
        length = rng.randint(1, cfg.max_rel_len)
        w = FreeWord(tuple((rng.choice(gens), rng.choice((1, -1))) for _ in range(length)))
        rels.append(normalize_relator(w))
    return Presentation(gens, tuple(rels))


def random_class(rng: random.Random, P: Presentation, lo: int = -2, hi: int = 2) -> CohomClass:
    """Random integral class: a combination of the H^1 basis from the SNF."""
    ab = abelianize(P)
    coeffs = [rng.randint(lo, hi) for _ in range(ab.betti)]
    return CohomClass({g: sum(a * c for a, c in zip(ab.free_coords[g], coeffs)) for g in P.gens})


@dataclass
class RandomInstances:
    bases: list[tuple[Presentation, CohomClass]]
    covers: list[tuple[Presentation, CoverSpec, CohomClass]]


@lru_cache(maxsize=4)
def random_instances(cfg: SuiteConfig) -> RandomInstances:
    rng = random.Random(cfg.seed)
    bases = []
    while len(bases) < cfg.n_presentations:
        P = make_good(random_presentation(rng, cfg))
        bases.append((P, random_class(rng, P)))
    covers = []
    attempts = 0
    while len(covers) < cfg.n_covers:
        attempts += 1
        if attempts > 100 * cfg.n_covers:
            raise RuntimeError("could not generate enough connected cyclic covers")
        P = make_good(random_presentation(rng, cfg))
        if not P.gens or abelianize(P).betti == 0:
            continue
        n = rng.choice(cfg.cover_orders)
        psi = random_class(rng, P)
        vals = [int(psi[g]) for g in P.gens]
        if math.gcd(n, *vals) != 1:
            continue
        covers.append((P, cyclic_cover_spec(P, psi, n), random_class(rng, P)))
    return RandomInstances(bases, covers)


# ---------------------------------------------------------------- criteria


def criterion_1(cfg: SuiteConfig | None = None) -> CriterionResult:
    fails = []
    for name, crossings in (("trefoil", 3), ("fig8", 4)):
        P, classes, _ = knot_fixture(name)
        val = t_P(P, classes[0])
        if val != crossings or len(parse_pd(PD_FIXTURES[name]).crossings) != crossings:
            fails.append(f"{name}: t_P = {val}, crossings = {crossings}")
    return CriterionResult(1, "Wirtinger crossing count", not fails, "t_P = 3 (trefoil), 4 (figure-eight)", fails)


def criterion_2(cfg: SuiteConfig | None = None) -> CriterionResult:
    W, classes, _ = knot_fixture("trefoil")
    T = fixture_presentation("trefoil_2gen")
    s = certify_tbar([T, W], [parse_phi("u=1,v=1"), classes[0]])
    ok = s.certified and s.lower == 1 and s.upper == 1 and s.lower_source == "degree" and s.uppers[0] == 1
    return CriterionResult(2, "Trefoil certification", ok, f"[{s.lower}, {s.upper}] via {s.lower_source}, uppers {list(map(str, s.uppers))}")


def criterion_3(cfg: SuiteConfig | None = None) -> CriterionResult:
    fails = []
    t_minus_1 = "-1 + t"
    for n in range(1, 5):
        P, phi = wedge_of_tori(n)
        tp = t_P(P, phi)
        tn = turaev_norm(complex_from_presentation(P), phi).value
        d = h1_qt(P, phi)
        facs = [str(f) for f in d.invariant_factors]
        if tp != 0 or tn != 0 or d.free_rank != n - 1 or facs != [t_minus_1] * n:
            fails.append(f"n={n}: t_P={tp}, t_X={tn}, {d}")
    return CriterionResult(3, "Wedge of n tori (n=1..4)", not fails, "t_P = t_X = 0; H1 = Q[t±]^(n-1) + n copies of Q[t±]/(t-1)", fails)


def _gcd_by_deleted_row(P: Presentation, psi: AbelianizationMap) -> dict[int, LaurentPoly]:
    A = alexander_matrix(P, psi)
    groups: dict[int, list[LaurentPoly]] = {}
    n = A.shape[0]
    for rows, _, d in minors(A):
        missing = [i for i in range(n) if i not in rows]
        key = missing[0] if missing else -1
        groups.setdefault(key, []).append(d)
    return {k: laurent_gcd(v, psi.nvars) for k, v in groups.items()}


def criterion_4(cfg: SuiteConfig | None = None) -> CriterionResult:
    fails = []
    expected = {
        "trefoil": LaurentPoly.from_coeffs([1, -1, 1]),
        "fig8": LaurentPoly.from_coeffs([1, -3, 1]),
        "whitehead": LaurentPoly({(0, 0): 1, (1, 0): -1, (0, 1): -1, (1, 1): 1}, 2),
    }
    for name, want in expected.items():
        P, _, psi = knot_fixture(name)
        got = alexander_polynomial(P, psi)
        if not got.associated(want):
            fails.append(f"{name}: {got}")
        subsets = _gcd_by_deleted_row(P, psi)
        if any(not g.associated(want) for g in subsets.values()) or len(subsets) < 2:
            fails.append(f"{name}: minor subsets disagree {[str(g) for g in subsets.values()]}")
    T = fixture_presentation("trefoil_2gen")
    if not alexander_polynomial(T).associated(expected["trefoil"]):
        fails.append("trefoil 2-generator presentation disagrees with Wirtinger")
    torus, _ = wedge_of_tori(1)
    psi = AbelianizationMap({"x1": (1, 0), "a1": (0, 1)}, 2)
    if alexander_polynomial(torus, psi) != LaurentPoly.const(1, 2):
        fails.append("torus group: Delta != 1")
    return CriterionResult(4, "Alexander polynomials", not fails, "trefoil, figure-eight, Z^2, Whitehead; minor subsets agree", fails)


def criterion_5(cfg: SuiteConfig) -> CriterionResult:
    inst = random_instances(cfg)
    fails = []
    for P, phi in inst.bases:
        X = complex_from_presentation(P)
        lp = turaev_norm(X, phi, "lp")
        br = turaev_norm(X, phi, "brute")
        if lp.value != br.value or lp.certificate is not Certificate.LP_INTEGRAL or lp.value != t_P(P, phi):
            fails.append(f"base {P} {phi}: lp={lp.value} brute={br.value}")
    for P, spec, phi in inst.covers:
        C = cover_complex(P, spec)
        lifted = lift_class(P, spec, phi)
        lp = turaev_norm(C, lifted, "lp")
        br = turaev_norm(C, lifted, "brute")
        if lp.value != br.value or lp.certificate is not Certificate.LP_INTEGRAL:
            fails.append(f"cover n={spec.n} of {P}: lp={lp.value} brute={br.value}")
    return CriterionResult(
        5, "Optimizer oracle equivalence", not fails,
        f"{len(inst.bases)} presentations, {len(inst.covers)} cyclic covers; LP == brute, LP integral", fails,
    )


def criterion_6(cfg: SuiteConfig) -> CriterionResult:
    inst = random_instances(cfg)
    fails = []
    for P, spec, phi in inst.covers:
        r = verify_cover_inequality(P, spec, phi)
        if not r.holds:
            fails.append(f"{P} n={spec.n}: {r.lhs} > {r.rhs}")
    return CriterionResult(6, "Cover inequality", not fails, f"t_cover(p*phi) <= n t_base(phi) on {len(inst.covers)} covers", fails)


def criterion_7(cfg: SuiteConfig) -> CriterionResult:
    inst = random_instances(cfg)
    fails = []
    pres = [P for P, _ in inst.bases] + [P for P, _, _ in inst.covers]
    pres += [knot_fixture(k)[0] for k in PD_FIXTURES] + [wedge_of_tori(n)[0] for n in range(1, 5)]
    count = 0
    for P in pres:
        for r in P.rels:
            count += 1
            if not fox_identity_free(r, P.gens):
                fails.append(f"{r} in {P}")
        if abelianize(P).betti:
            try:
                alexander_matrix(P, AbelianizationMap.canonical(P))
            except AssertionError as exc:
                fails.append(f"{P}: {exc}")
    return CriterionResult(7, "Fox fundamental identity", not fails, f"{count} relators (free group ring and after abelianization)", fails)


def criterion_8(cfg: SuiteConfig) -> CriterionResult:
    rng = random.Random(cfg.seed + 8)
    cases = [(1, 1)]
    while len(cases) < cfg.n_div + 1:
        x, y = rng.randint(-50, 50), rng.randint(-50, 50)
        if y != 0 and math.gcd(x, y) == 1:
            cases.append((x, y))
    fails = []
    for x, y in cases:
        a, b = div_counterexample(x, y)
        s = (a[0] + b[0], a[1] + b[1])
        if not divisibility(a) + divisibility(b) < divisibility(s):
            fails.append(f"({x},{y})")
    a, b = div_counterexample(1, 1)
    worked_instance = b == (5, 3) and divisibility((6, 3)) == 3
    if not worked_instance:
        fails.append("p=3 instance")
    return CriterionResult(8, "Divisibility counterexample", not fails, f"{len(cases)} primitive classes incl. psi=(1,1), p=3, beta=(5,3)", fails)


def _random_laurent(rng: random.Random, nvars: int) -> LaurentPoly:
    terms = {}
    for _ in range(rng.randint(1, 6)):
        terms[tuple(rng.randint(-3, 3) for _ in range(nvars))] = rng.choice([-3, -2, -1, 1, 2, 3])
    p = LaurentPoly(terms, nvars)
    return p if not p.is_zero() else LaurentPoly.const(1, nvars)


def criterion_9(cfg: SuiteConfig) -> CriterionResult:
    rng = random.Random(cfg.seed + 9)
    fails = []
    for _ in range(cfg.n_seminorm):
        k = rng.randint(1, 3)
        delta = _random_laurent(rng, k)
        phi = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(k)]
        psi = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(k)]
        c = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        a_phi = alexander_norm(delta, phi)
        if alexander_norm(delta, [c * x for x in phi]) != abs(c) * a_phi:
            fails.append(f"homogeneity {delta} {phi} {c}")
        if alexander_norm(delta, [x + y for x, y in zip(phi, psi)]) > a_phi + alexander_norm(delta, psi):
            fails.append(f"triangle {delta} {phi} {psi}")
    return CriterionResult(9, "Alexander norm seminorm properties", not fails, f"{cfg.n_seminorm} random triples, exact", fails)


def criterion_10(cfg: SuiteConfig) -> CriterionResult:
    fails = []
    W, classes, _ = knot_fixture("trefoil")
    lb = lower_bounds(W, classes[0])
    if lb.a_bound is not None or lb.deg_bound != 1:
        fails.append(f"trefoil: a={lb.a_bound}, deg={lb.deg_bound}")
    lb2 = lower_bounds(W, classes[0].scaled(2))
    if lb2.deg_bound is not None:
        fails.append("trefoil 2*phi: degree bound emitted for a non-primitive class")
    for n in (2, 3):
        P, phi = wedge_of_tori(n)
        lb = lower_bounds(P, phi)
        if lb.a_bound is not None or lb.deg_bound is not None:
            fails.append(f"wedge n={n}: a={lb.a_bound}, deg={lb.deg_bound}")
        s = certify_tbar([P], [phi])
        if s.lower != 0 or not s.certified:
            fails.append(f"wedge n={n}: sandwich [{s.lower}, {s.upper}]")
    # randomized: gates agree with the hypotheses they encode
    for P, phi in random_instances(cfg).bases[:60]:
        if phi.is_zero():
            continue
        lb = lower_bounds(P, phi)
        b1 = abelianize(P).betti
        if b1 < 2 and lb.a_bound is not None:
            fails.append(f"{P}: a-bound with b1={b1}")
        if lb.deg_bound is not None and (lb.delta_phi is None or lb.delta_phi.is_zero() or divisibility(phi) != 1):
            fails.append(f"{P}: degree bound emitted without its hypotheses")
    return CriterionResult(10, "Hypothesis gating", not fails, "trefoil (b1=1), wedge of tori (Delta=0), non-primitive classes, random", fails)


CRITERIA = (
    criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
    criterion_6, criterion_7, criterion_8, criterion_9, criterion_10,
)


def run_suite(cfg: SuiteConfig | None = None) -> list[CriterionResult]:
    cfg = cfg or SuiteConfig()
    return [c(cfg) for c in CRITERIA]
