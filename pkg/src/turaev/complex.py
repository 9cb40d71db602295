"""Combinatorial 2-complexes, edge multiplicities and integral cellular cochains."""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .intsnf import invariant_factors
from .presentations import CohomClass, Presentation

Step = tuple[int, int]  # (edge index, +1 | -1)
Cochain = tuple[Fraction, ...]


class ComplexError(ValueError):
    pass


@dataclass(frozen=True)
class TwoComplex:
    """Vertices ``0..n-1``, oriented edges ``(source, target)`` and 2-cells.

    Each face is a closed walk of ``(edge, direction)`` steps. Edges carry a
    label so that classes can be given by name (generator names for
    presentation complexes).
    """

    n_vertices: int
    edges: tuple[tuple[int, int], ...]
    faces: tuple[tuple[Step, ...], ...]
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        edges = tuple(tuple(e) for e in self.edges)
        faces = tuple(tuple((int(e), int(d)) for e, d in f) for f in self.faces)
        labels = tuple(self.labels) or tuple(f"e{i}" for i in range(len(edges)))
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "faces", faces)
        object.__setattr__(self, "labels", labels)
        if self.n_vertices < 1:
            raise ComplexError("a complex needs at least one vertex")
        if len(labels) != len(edges) or len(set(labels)) != len(labels):
            raise ComplexError("edge labels must be unique, one per edge")
        for s, t in edges:
            if not (0 <= s < self.n_vertices and 0 <= t < self.n_vertices):
                raise ComplexError(f"edge ({s},{t}) has an endpoint out of range")
        for f in faces:
            for e, d in f:
                if not 0 <= e < len(edges) or d not in (1, -1):
                    raise ComplexError(f"bad step ({e},{d}) in face")
            for (e1, d1), (e2, d2) in zip(f, f[1:] + f[:1]):
                if self._head(e1, d1) != self._tail(e2, d2):
                    raise ComplexError("attaching walk is not a closed walk")
        if not self.is_connected():
            raise ComplexError("complex is not connected")

    def _tail(self, e: int, d: int) -> int:
        s, t = self.edges[e]
        return s if d == 1 else t

    def _head(self, e: int, d: int) -> int:
        s, t = self.edges[e]
        return t if d == 1 else s

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def edge_index(self, label: str) -> int:
        return self.labels.index(label)

    def adjacency(self) -> list[list[tuple[int, int, int]]]:
        """Per vertex: (edge, direction, neighbour), sorted by edge index."""
        adj: list[list[tuple[int, int, int]]] = [[] for _ in range(self.n_vertices)]
        for i, (s, t) in enumerate(self.edges):
            adj[s].append((i, 1, t))
            adj[t].append((i, -1, s))
        for row in adj:
            row.sort()
        return adj

    def is_connected(self) -> bool:
        seen = {0}
        queue = deque([0])
        adj = self.adjacency()
        while queue:
            v = queue.popleft()
            for _, _, w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.n_vertices

    def euler_characteristic(self) -> int:
        return self.n_vertices - self.n_edges + len(self.faces)


def complex_from_presentation(P: Presentation) -> TwoComplex:
    index = {g: i for i, g in enumerate(P.gens)}
    faces = tuple(tuple((index[g], e) for g, e in r) for r in P.rels)
    return TwoComplex(1, tuple((0, 0) for _ in P.gens), faces, tuple(P.gens))


def edge_multiplicities(X: TwoComplex) -> tuple[int, ...]:
    n = [0] * X.n_edges
    for f in X.faces:
        for e, _ in f:
            n[e] += 1
    return tuple(n)


def boundary_is_empty(X: TwoComplex) -> bool:
    return all(n >= 2 for n in edge_multiplicities(X))


def spanning_tree(X: TwoComplex) -> dict[int, tuple[int, int]]:
    """BFS tree from vertex 0: ``{vertex: (edge, direction from parent)}``."""
    tree: dict[int, tuple[int, int]] = {}
    seen = {0}
    queue = deque([0])
    adj = X.adjacency()
    while queue:
        v = queue.popleft()
        for e, d, w in adj[v]:
            if w not in seen:
                seen.add(w)
                tree[w] = (e, d)
                queue.append(w)
    return tree


def face_sums(X: TwoComplex, k: Sequence) -> list[Fraction]:
    return [sum((d * Fraction(k[e]) for e, d in f), Fraction(0)) for f in X.faces]


def is_cocycle(X: TwoComplex, k: Sequence) -> bool:
    return all(s == 0 for s in face_sums(X, k))


def coboundary(X: TwoComplex, f: Sequence) -> Cochain:
    """(delta f)(e) = f(target) - f(source)."""
    return tuple(Fraction(f[t]) - Fraction(f[s]) for s, t in X.edges)


def add_cochains(a: Sequence, b: Sequence) -> Cochain:
    return tuple(Fraction(x) + Fraction(y) for x, y in zip(a, b))


def cochain_from_class(X: TwoComplex, phi: CohomClass) -> Cochain:
    unknown = set(phi.values) - set(X.labels)
    if unknown:
        raise ComplexError(f"class mentions unknown edges {sorted(unknown)}")
    return tuple(phi[label] for label in X.labels)


def cocycle_from_class(X: TwoComplex, phi: CohomClass) -> Cochain:
    """Cocycle representing phi that vanishes on the BFS spanning tree."""
    c = cochain_from_class(X, phi)
    if not is_cocycle(X, c):
        raise ComplexError("class does not vanish on every attaching walk")
    g = [Fraction(0)] * X.n_vertices
    order = deque([0])
    tree = spanning_tree(X)
    children: dict[int, list[int]] = {}
    for w, (e, d) in tree.items():
        parent = X._tail(e, d)
        children.setdefault(parent, []).append(w)
    while order:
        v = order.popleft()
        for w in children.get(v, []):
            e, d = tree[w]
            g[w] = g[v] + d * c[e]
            order.append(w)
    return add_cochains(c, tuple(-x for x in coboundary(X, g)))


def evaluate_walk(k: Sequence, walk: Sequence[Step]) -> Fraction:
    return sum((d * Fraction(k[e]) for e, d in walk), Fraction(0))


def boundary_matrices(X: TwoComplex) -> tuple[list[list[int]], list[list[int]]]:
    """Integer matrices of d1 (edges x vertices) and d2 (faces x edges)."""
    d1 = []
    for s, t in X.edges:
        row = [0] * X.n_vertices
        row[t] += 1
        row[s] -= 1
        d1.append(row)
    d2 = []
    for f in X.faces:
        row = [0] * X.n_edges
        for e, d in f:
            row[e] += d
        d2.append(row)
    return d1, d2


def h1_structure(X: TwoComplex) -> tuple[int, list[int]]:
    """(b_1, torsion invariant factors) of H_1(X; Z)."""
    d1, d2 = boundary_matrices(X)
    r1 = len(invariant_factors(d1)) if d1 else 0
    facs = invariant_factors(d2) if d2 and X.n_edges else []
    return X.n_edges - r1 - len(facs), [f for f in facs if f > 1]


# ----------------------------------------------------------- serialization


def format_complex(X: TwoComplex) -> str:
    lines = [f"vertices: {X.n_vertices}"]
    for i, ((s, t), lab) in enumerate(zip(X.edges, X.labels)):
        lines.append(f"edge {i}: {s} {t} {lab}")
    for f in X.faces:
        lines.append("face: " + " ".join(f"{'+' if d == 1 else '-'}{e}" for e, d in f))
    return "\n".join(lines) + "\n"


def parse_complex(text: str) -> TwoComplex:
    """Inverse of :func:`format_complex`; face steps carry an explicit sign."""
    n = None
    edges: dict[int, tuple[int, int, str | None]] = {}
    faces = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if m := re.fullmatch(r"vertices:\s*(\d+)", line):
            n = int(m.group(1))
        elif m := re.fullmatch(r"edge\s+(\d+):\s*(\d+)\s+(\d+)(?:\s+(\S+))?", line):
            edges[int(m.group(1))] = (int(m.group(2)), int(m.group(3)), m.group(4))
        elif m := re.fullmatch(r"face:\s*(.*)", line):
            steps = []
            for tok in m.group(1).split():
                if not re.fullmatch(r"[+-]\d+", tok):
                    raise ComplexError(f"line {lineno}: bad face step {tok!r}")
                steps.append((int(tok[1:]), 1 if tok[0] == "+" else -1))
            faces.append(tuple(steps))
        else:
            raise ComplexError(f"line {lineno}: cannot parse {raw!r}")
    if n is None:
        raise ComplexError("missing 'vertices:' line")
    if sorted(edges) != list(range(len(edges))):
        raise ComplexError("edges must be numbered 0..E-1")
    ordered = [edges[i] for i in range(len(edges))]
    labels = tuple(lab if lab else f"e{i}" for i, (_, _, lab) in enumerate(ordered))
    return TwoComplex(n, tuple((s, t) for s, t, _ in ordered), tuple(faces), labels)

