"""Planar diagram codes, Wirtinger presentations and the built-in fixtures."""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources

from .alexander import AbelianizationMap
from .presentations import CohomClass, FreeWord, Presentation, parse_presentation


class PDError(ValueError):
    pass


@dataclass(frozen=True)
class PDCode:
    """Crossings ``X(a, b, c, d)``: a is the incoming under-arc, labels counterclockwise."""

    crossings: tuple[tuple[int, int, int, int], ...]

    def labels(self) -> list[int]:
        return sorted({x for c in self.crossings for x in c})

    def components(self) -> list[list[int]]:
        """Label sets of link components, ordered by smallest label."""
        parent = {x: x for x in self.labels()}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b, c, d in self.crossings:
            parent[find(a)] = find(c)
            parent[find(b)] = find(d)
        groups: dict[int, list[int]] = {}
        for x in self.labels():
            groups.setdefault(find(x), []).append(x)
        return sorted(groups.values(), key=min)


def parse_pd(text: str) -> PDCode:
    body = text.strip()
    if not body:
        raise PDError("empty PD code")
    if body.startswith("PD[") and body.endswith("]"):
        body = body[3:-1]
    pattern = re.compile(r"X\s*[\(\[]\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*[\)\]]")
    crossings = []
    pos = 0
    for m in pattern.finditer(body):
        gap = body[pos:m.start()].strip().strip(",").strip()
        if gap:
            raise PDError(f"malformed crossing near {gap!r}")
        crossings.append(tuple(int(x) for x in m.groups()))
        pos = m.end()
    if body[pos:].strip().strip(","):
        raise PDError(f"malformed crossing near {body[pos:].strip()!r}")
    if not crossings:
        raise PDError("no crossings found")
    code = PDCode(tuple(crossings))
    counts: dict[int, int] = {}
    for c in crossings:
        for x in c:
            counts[x] = counts.get(x, 0) + 1
    bad = sorted(x for x, k in counts.items() if k != 2)
    if bad:
        raise PDError(f"arc labels {bad} do not appear exactly twice")
    for comp in code.components():
        if comp != list(range(comp[0], comp[-1] + 1)):
            raise PDError(f"component labels {comp} are not a contiguous range")
    return code


def _orient(pd: PDCode) -> dict[tuple[int, int], bool]:
    """For each (crossing, slot) decide whether the edge there is incoming.

    Under-slots are fixed by the convention (a in, c out). Over-slots follow
    by propagation: the two ends of an edge have opposite roles, and the two
    over-slots of one crossing have opposite roles. Components that never pass
    under are oriented with their lowest label entering at its first
    occurrence.
    """
    occ: dict[int, list[tuple[int, int]]] = {}
    for i, c in enumerate(pd.crossings):
        for slot, x in enumerate(c):
            occ.setdefault(x, []).append((i, slot))
    incoming: dict[tuple[int, int], bool] = {}
    stack = []

    def assign(key, val):
        if key in incoming:
            if incoming[key] != val:
                raise PDError("inconsistent orientation inference")
            return
        incoming[key] = val
        stack.append(key)

    def other_end(key):
        x = pd.crossings[key[0]][key[1]]
        a, b = occ[x]
        return b if a == key else a

    def propagate():
        while stack:
            key = stack.pop()
            assign(other_end(key), not incoming[key])
            i, slot = key
            if slot in (1, 3):
                assign((i, 4 - slot), not incoming[key])

    for i in range(len(pd.crossings)):
        assign((i, 0), True)
        assign((i, 2), False)
    propagate()
    for comp in pd.components():
        x = comp[0]
        key = occ[x][0]
        if key not in incoming:
            assign(key, True)
            propagate()
    return incoming


def crossing_signs(pd: PDCode) -> list[int]:
    """+1 when the over-strand runs from slot d to slot b."""
    inc = _orient(pd)
    return [1 if inc[(i, 3)] else -1 for i in range(len(pd.crossings))]


def wirtinger(pd: PDCode) -> tuple[Presentation, list[CohomClass], AbelianizationMap]:
    """Wirtinger presentation, one meridian class per component, and the meridian map to Z^k.

    Generators are the over-arcs (edges glued through over-crossings); each
    crossing gives the relator ``x_o^e x_in x_o^-e x_out^-1`` with e its sign.
    Relators are left unreduced so that every arc keeps #(x) >= 2.
    """
    labels = pd.labels()
    parent = {x: x for x in labels}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for a, b, c, d in pd.crossings:
        rb, rd = find(b), find(d)
        if rb != rd:
            parent[max(rb, rd)] = min(rb, rd)
    arcs = sorted({find(x) for x in labels})
    name = {r: f"x{i + 1}" for i, r in enumerate(arcs)}
    gen = {x: name[find(x)] for x in labels}
    signs = crossing_signs(pd)
    rels = []
    for (a, b, c, d), e in zip(pd.crossings, signs):
        o = gen[b]
        rels.append(FreeWord(((o, e), (gen[a], 1), (o, -e), (gen[c], -1))))
    P = Presentation(tuple(name[r] for r in arcs), tuple(rels))

    comps = pd.components()
    comp_of = {x: k for k, comp in enumerate(comps) for x in comp}
    gen_comp = {gen[x]: comp_of[x] for x in labels}
    k = len(comps)
    classes = [CohomClass({g: int(gen_comp[g] == j) for g in P.gens}) for j in range(k)]
    psi = AbelianizationMap({g: tuple(int(gen_comp[g] == j) for j in range(k)) for g in P.gens}, k)
    return P, classes, psi


def total_meridian_class(P: Presentation, classes: list[CohomClass]) -> CohomClass:
    """Sends every arc generator to 1 (the abelianization map for a knot)."""
    return CohomClass({g: sum(c[g] for c in classes) for g in P.gens})


# ------------------------------------------------------------------ fixtures

PD_FIXTURES = {
    "trefoil": "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)",
    "fig8": "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)",
    "whitehead": "X(6,1,7,2) X(10,7,5,8) X(4,5,1,6) X(2,10,3,9) X(8,4,9,3)",
}


def fixture_text(name: str) -> str:
    """Raw text of a shipped presentation file (``trefoil_2gen``, ``wedge_tori_3``, ...)."""
    return resources.files("turaev.fixtures").joinpath(f"{name}.txt").read_text()


def fixture_presentation(name: str) -> Presentation:
    return parse_presentation(fixture_text(name))


def wedge_of_tori(n: int) -> tuple[Presentation, CohomClass]:
    """<a_i, x_i | [x_i, a_i]> with the class x_i -> 1, a_i -> 0."""
    gens = tuple(f"a{i}" for i in range(1, n + 1)) + tuple(f"x{i}" for i in range(1, n + 1))
    rels = tuple(FreeWord(((f"x{i}", 1), (f"a{i}", 1), (f"x{i}", -1), (f"a{i}", -1))) for i in range(1, n + 1))
    phi = CohomClass({g: int(g.startswith("x")) for g in gens})
    return Presentation(gens, rels), phi


def knot_fixture(name: str) -> tuple[Presentation, list[CohomClass], AbelianizationMap]:
    if name not in PD_FIXTURES:
        raise KeyError(f"unknown fixture {name!r}; known: {sorted(PD_FIXTURES)}")
    return wirtinger(parse_pd(PD_FIXTURES[name]))
