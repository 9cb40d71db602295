"""``turaev`` command-line interface.

Exit codes: 0 when every check in the report passed, 1 when a check failed,
2 on unreadable input or bad usage.
"""

from __future__ import annotations

import argparse
import random
import sys
from importlib import resources
from pathlib import Path

from .alexander import AbelianizationMap, AlexanderError, alexander_polynomial, one_variable_alexander
from .alexander_norm import alexander_norm, polytope_vertices
from .complex import (
    ComplexError,
    TwoComplex,
    boundary_is_empty,
    cochain_from_class,
    complex_from_presentation,
    edge_multiplicities,
    format_complex,
    h1_structure,
    is_cocycle,
    parse_complex,
)
from .covers import CoverError, cover_complex, cyclic_cover_spec, lift_class, verify_cover_inequality
from .laurent import default_names
from .link_ingest import PD_FIXTURES, PDError, crossing_signs, parse_pd, wirtinger
from .presentations import (
    CohomClass,
    Presentation,
    PresentationError,
    abelianize,
    class_coordinates,
    div_counterexample,
    divisibility,
    format_presentation,
    parse_phi,
    parse_presentation,
    presentations_share_abelianization,
    t_P,
)
from .report import Report, digest
from .suite import SuiteConfig, run_suite
from .turaev_opt import certify_tbar, turaev_norm
from .twisted_homology import h1_qt

INPUT_ERRORS = (PresentationError, ComplexError, PDError, CoverError, AlexanderError, OSError)


class UsageError(Exception):
    pass


# ------------------------------------------------------------------ inputs


def read_input(path: str, report: Report) -> str:
    """Read a file; fall back to a shipped fixture of the same name."""
    p = Path(path)
    if p.exists():
        data = p.read_bytes()
    else:
        fx = resources.files("turaev.fixtures")
        cands = [fx.joinpath(p.name)] + [fx.joinpath(p.name + ext) for ext in (".txt", ".cx", ".pd")]
        hit = next((c for c in cands if c.is_file()), None)
        if hit is None:
            raise UsageError(f"no such file: {path}")
        data = hit.read_bytes()
    report.inputs[path] = digest(data)
    return data.decode()


def _is_complex_text(text: str) -> bool:
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            return line.startswith("vertices:")
    return False


def load_presentation(path: str, report: Report) -> Presentation:
    text = read_input(path, report)
    if _is_complex_text(text):
        raise UsageError(f"{path} is a 2-complex; this command needs a presentation")
    return parse_presentation(text)


def load_class(text: str | None, names, what: str) -> CohomClass:
    if text is None:
        raise UsageError("--phi is required")
    phi = parse_phi(text)
    unknown = sorted(set(phi.values) - set(names))
    if unknown:
        raise UsageError(f"--phi mentions {unknown}, which are not {what}")
    return phi


def check_vanishes(report: Report, P: Presentation, phi: CohomClass) -> bool:
    bad = [str(r) for r in P.rels if phi.evaluate(r) != 0]
    return report.check("class vanishes on every relator", not bad, "; ".join(bad[:3]) or str(phi))


def check_integral(report: Report, phi: CohomClass) -> bool:
    return report.check("class is integral", phi.is_integral(), str(phi))


def default_class(P: Presentation) -> CohomClass:
    """The generator of H^1 when b_1 = 1 (sign as given by the SNF basis)."""
    ab = abelianize(P)
    if ab.betti != 1:
        raise UsageError(f"--phi is required when b1 != 1 (b1 = {ab.betti})")
    return CohomClass({g: ab.free_coords[g][0] for g in P.gens})


# ---------------------------------------------------------------- commands


def cmd_norm(args, report: Report) -> str | None:
    text = read_input(args.input, report)
    P = None
    if _is_complex_text(text):
        X: TwoComplex = parse_complex(text)
        phi = load_class(args.phi, X.labels, "edge labels")
        report.put("kind", "2-complex")
    else:
        P = parse_presentation(text)
        X = complex_from_presentation(P)
        phi = load_class(args.phi, P.gens, "generators")
        report.put("kind", "presentation complex")
    report.put("class", str(phi))
    ok = report.check(
        "empty Turaev boundary (every n_e >= 2)",
        boundary_is_empty(X),
        "n_e = " + ",".join(map(str, edge_multiplicities(X))),
    )
    if P is not None:
        ok &= check_vanishes(report, P, phi)
    else:
        ok &= report.check("class is a cocycle", is_cocycle(X, cochain_from_class(X, phi)), str(phi))
    if not ok:
        return None
    res = turaev_norm(X, phi, args.method)
    report.put("value", res.value)
    report.put("certificate", res.certificate.value)
    report.put("optimal_cochain", {lab: v for lab, v in zip(X.labels, res.optimal_cochain)})
    report.put("half_integral", res.value.denominator != 1)
    if res.notes:
        report.put("notes", list(res.notes))
    if P is not None and P.is_good():
        report.put("t_P", t_P(P, phi))
    return None


def cmd_certify(args, report: Report) -> str | None:
    paths = [p for p in args.inputs.split(",") if p]
    if not paths:
        raise UsageError("no presentation files given")
    Ps = [load_presentation(p, report) for p in paths]
    same = presentations_share_abelianization(Ps)
    ab = abelianize(Ps[0])
    if not report.check("presentations have the same abelianization", same, f"b1 = {ab.betti}, torsion = {list(ab.torsion)}"):
        return None
    if args.phi:
        if len(args.phi) not in (1, len(Ps)):
            raise UsageError("give one --phi, or one per presentation")
        raw = args.phi * len(Ps) if len(args.phi) == 1 else args.phi
        phis = [load_class(t, P.gens, f"generators of {path}") for t, P, path in zip(raw, Ps, paths)]
    else:
        phis = [default_class(P) for P in Ps]
        report.put("class_note", "b1 = 1: used the generator of H^1 for each presentation")
    ok = all([check_vanishes(report, P, phi) for P, phi in zip(Ps, phis)])
    if not ok:
        return None
    s = certify_tbar(Ps, phis)
    for name, passed, detail in s.gates:
        report.gate(name, passed, detail)
    report.put("classes", [str(p) for p in phis])
    report.put("lower", s.lower)
    report.put("lower_source", s.lower_source)
    report.put("upper", s.upper)
    report.put("upper_source", s.upper_source)
    report.put("uppers", list(s.uppers))
    report.put("interval", f"[{s.lower}, {s.upper}]")
    report.put("certified", s.certified)
    report.put("value", s.upper if s.certified else None)
    report.check("lower <= upper", s.lower <= s.upper, f"{s.lower} <= {s.upper}")
    return None


def cmd_alex(args, report: Report) -> str | None:
    P = load_presentation(args.input, report)
    report.put("convention", "gcd of the (m-1)-minors of the Fox matrix, up to units")
    if args.phi is not None and not args.multivariable:
        phi = load_class(args.phi, P.gens, "generators")
        if not (check_vanishes(report, P, phi) and check_integral(report, phi)):
            return None
        if not report.check("class is nonzero", not phi.is_zero(), str(phi)):
            return None
        delta = one_variable_alexander(P, phi)
        report.put("class", str(phi))
        report.put("variables", ["t"])
    else:
        b1 = abelianize(P).betti
        if not report.check("b1 >= 1", b1 >= 1, f"b1 = {b1}"):
            return None
        psi = AbelianizationMap.canonical(P)
        delta = alexander_polynomial(P, psi)
        names = default_names(psi.nvars)
        report.put("variables", list(names))
        report.put("basis", {g: "(" + ",".join(map(str, psi.images[g])) + ")" for g in P.gens})
    report.put("polynomial", str(delta))
    report.put("degree", delta.degree() if delta.nvars == 1 and not delta.is_zero() else None)
    return None


def cmd_anorm(args, report: Report) -> str | None:
    P = load_presentation(args.input, report)
    phi = load_class(args.phi, P.gens, "generators")
    if not check_vanishes(report, P, phi):
        return None
    b1 = abelianize(P).betti
    if not report.check("b1 >= 1", b1 >= 1, f"b1 = {b1}"):
        return None
    report.gate("b1 >= 2 (norm bounds t-bar from below)", b1 >= 2, f"b1 = {b1}")
    delta = alexander_polynomial(P)
    coords = class_coordinates(P, phi)
    report.put("class", str(phi))
    report.put("class_coordinates", list(coords))
    report.put("polynomial", str(delta))
    report.put("value", alexander_norm(delta, coords))
    report.put("degenerate", delta.is_zero())
    fmt = lambda e: "(" + ",".join(map(str, e)) + ")"  # noqa: E731
    report.put("support", [fmt(e) for e in sorted(delta.support())])
    if args.polytope:
        if delta.nvars > 3:
            raise UsageError("--polytope is only available in rank <= 3")
        report.put("polytope_vertices", [fmt(v) for v in polytope_vertices(delta)])
    return None


def cmd_cover(args, report: Report) -> str | None:
    P = load_presentation(args.input, report)
    phi = load_class(args.phi, P.gens, "generators")
    if args.order < 1:
        raise UsageError("--order must be positive")
    if not (check_vanishes(report, P, phi) and check_integral(report, phi)):
        return None
    spec = cyclic_cover_spec(P, phi, args.order)
    X = complex_from_presentation(P)
    C = cover_complex(P, spec)
    b1, tors = h1_structure(C)
    report.put("order", args.order)
    report.put("vertices", C.n_vertices)
    report.put("edges", C.n_edges)
    report.put("faces", len(C.faces))
    report.put("euler_characteristic", C.euler_characteristic())
    report.put("h1_cover", f"Z^{b1}" + "".join(f" + Z/{t}" for t in tors))
    report.put("lifted_class", str(lift_class(P, spec, phi)))
    report.check(
        "chi(cover) = n chi(base)",
        C.euler_characteristic() == args.order * X.euler_characteristic(),
        f"{C.euler_characteristic()} = {args.order} * {X.euler_characteristic()}",
    )
    if args.write_complex:
        Path(args.write_complex).write_text(format_complex(C))
        report.put("written", args.write_complex)
    if args.check_inequality:
        if not report.check("empty Turaev boundary of the base", boundary_is_empty(X),
                            "n_e = " + ",".join(map(str, edge_multiplicities(X)))):
            return None
        r = verify_cover_inequality(P, spec, phi, args.method, base=X)
        report.put("lhs", r.lhs)
        report.put("rhs", r.rhs)
        report.check("t_cover(p*phi) <= n t_base(phi)", r.holds, f"{r.lhs} <= {r.rhs}")
    return None


def cmd_homology(args, report: Report) -> str | None:
    P = load_presentation(args.input, report)
    phi = load_class(args.phi, P.gens, "generators")
    if not (check_vanishes(report, P, phi) and check_integral(report, phi)):
        return None
    if not report.check("class is nonzero", not phi.is_zero(), str(phi)):
        return None
    d = h1_qt(P, phi)
    report.put("class", str(phi))
    report.put("module", d.format())
    report.put("free_rank", d.free_rank)
    report.put("invariant_factors", [str(f) for f in d.invariant_factors])
    report.put("torsion_generators", len(d.invariant_factors))
    return None


def cmd_knot(args, report: Report) -> str | None:
    if (args.pd is None) == (args.fixture is None):
        raise UsageError("give exactly one of --pd or --fixture")
    text = args.pd if args.pd is not None else PD_FIXTURES[args.fixture]
    report.inputs["pd"] = digest(text)
    pd = parse_pd(text)
    P, classes, _ = wirtinger(pd)
    header = [f"# Wirtinger presentation ({len(pd.crossings)} crossings)", f"# PD: {text.strip()}"]
    header += [f"# meridian class {i + 1}: {c}" for i, c in enumerate(classes)]
    body = "\n".join(header + [format_presentation(P)]) + "\n"
    report.put("crossings", len(pd.crossings))
    report.put("components", len(classes))
    report.put("signs", crossing_signs(pd))
    report.put("presentation", format_presentation(P))
    report.put("meridian_classes", [str(c) for c in classes])
    total = CohomClass({g: sum(c[g] for c in classes) for g in P.gens})
    report.put("t_P", t_P(P, total))
    report.check("Wirtinger presentation is good", P.is_good())
    if args.output:
        Path(args.output).write_text(body)
        report.put("written", args.output)
        return None
    return body


def cmd_divtest(args, report: Report) -> str | None:
    if args.random:
        rng = random.Random(args.seed)
        pairs = []
        while len(pairs) < args.random:
            x, y = rng.randint(-50, 50), rng.randint(-50, 50)
            if y and divisibility((x, y)) == 1:
                pairs.append((x, y))
    elif args.x is not None and args.y is not None:
        pairs = [(args.x, args.y)]
    else:
        raise UsageError("give x y, or --random N")
    rows = []
    for x, y in pairs:
        if y == 0 or divisibility((x, y)) != 1:
            raise UsageError(f"psi = ({x},{y}) must be primitive with y != 0")
        a, b = div_counterexample(x, y)
        s = (a[0] + b[0], a[1] + b[1])
        da, db, ds = divisibility(a), divisibility(b), divisibility(s)
        rows.append(f"psi=({x},{y}) alpha={a} beta={b} div: {da} + {db} < {ds}")
        report.check(f"div(alpha)+div(beta) < div(alpha+beta) at psi=({x},{y})", da + db < ds, f"{da} + {db} < {ds}")
    report.put("cases", rows)
    return None


def cmd_suite(args, report: Report) -> str | None:
    cfg = SuiteConfig(seed=args.seed) if args.seed is not None else SuiteConfig()
    report.put("seed", cfg.seed)
    for r in run_suite(cfg):
        report.check(f"{r.number}. {r.name}", r.passed, r.detail if r.passed else "; ".join(r.failures[:3]))
    return None


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="turaev", description="Turaev norms, Alexander norms and certified complexity bounds.")
    parser.add_argument("--json", action="store_true", help="emit the machine-readable report")
    parser.add_argument("--method", choices=("lp", "brute", "auto"), default="auto", help="norm optimizer")
    # repeated on subcommands so the flags work on either side of the command name
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("--method", choices=("lp", "brute", "auto"), default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("norm", parents=[common], help="Turaev norm of a 2-complex or presentation complex")
    p.add_argument("input")
    p.add_argument("--phi")
    p.set_defaults(func=cmd_norm)

    p = sub.add_parser("certify", parents=[common], help="two-sided bound on the Turaev complexity function")
    p.add_argument("inputs", help="comma-separated presentation files of one group")
    p.add_argument("--phi", action="append", help="class; repeat once per presentation, or give one shared class")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("alex", parents=[common], help="Alexander polynomial")
    p.add_argument("input")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--phi")
    g.add_argument("--multivariable", action="store_true")
    p.set_defaults(func=cmd_alex)

    p = sub.add_parser("anorm", parents=[common], help="Alexander norm of a class")
    p.add_argument("input")
    p.add_argument("--phi")
    p.add_argument("--polytope", action="store_true", help="list Newton polytope vertices (rank <= 3)")
    p.set_defaults(func=cmd_anorm)

    p = sub.add_parser("cover", parents=[common], help="finite cyclic cover of a presentation complex")
    p.add_argument("input")
    p.add_argument("--phi")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--check-inequality", action="store_true")
    p.add_argument("--write-complex", metavar="PATH")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("homology", parents=[common], help="H_1 of the infinite cyclic cover over Q[t^{+-1}]")
    p.add_argument("input")
    p.add_argument("--phi")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("knot", parents=[common], help="Wirtinger presentation from a PD code")
    p.add_argument("--pd")
    p.add_argument("--fixture", choices=sorted(PD_FIXTURES))
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_knot)

    p = sub.add_parser("divtest", parents=[common], help="divisibility counterexample for a primitive class (x, y)")
    p.add_argument("x", type=int, nargs="?")
    p.add_argument("y", type=int, nargs="?")
    p.add_argument("--random", type=int, metavar="N")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_divtest)

    p = sub.add_parser("paper-suite", parents=[common], help="run the full reproduction suite")
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_suite)
    return parser


def run(argv: list[str] | None = None) -> tuple[int, Report | None, str]:
    """Parse and dispatch; returns (exit code, report, text to print)."""
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), None, ""
    report = Report(command=argv)
    try:
        raw = args.func(args, report)
    except UsageError as exc:
        return 2, None, f"turaev: error: {exc}\n"
    except INPUT_ERRORS as exc:
        return 2, None, f"turaev: error: {exc}\n"
    code = 0 if report.ok else 1
    if args.json:
        if raw is not None:
            report.put("file", raw)
        return code, report, report.to_json()
    return code, report, raw if raw is not None else report.to_text()


def main(argv: list[str] | None = None) -> int:
    code, report, out = run(argv)
    if report is None and code:
        sys.stderr.write(out)
    else:
        sys.stdout.write(out)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
