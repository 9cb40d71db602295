"""Finite covers of presentation complexes from permutation actions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .complex import Step, TwoComplex, complex_from_presentation
from .presentations import CohomClass, FreeWord, Presentation, PresentationError, check_class
from .turaev_opt import turaev_norm


class CoverError(ValueError):
    pass


@dataclass(frozen=True)
class CoverSpec:
    """Right action of the generators on sheets ``0..n-1``: ``perms[g][s]`` is ``s . g``."""

    n: int
    perms: Mapping[str, tuple[int, ...]]

    def __post_init__(self):
        if self.n < 1:
            raise CoverError("cover index must be positive")
        perms = {g: tuple(p) for g, p in self.perms.items()}
        for g, p in perms.items():
            if sorted(p) != list(range(self.n)):
                raise CoverError(f"action of {g!r} is not a permutation of {self.n} sheets")
        object.__setattr__(self, "perms", perms)

    def inverse(self, g: str) -> tuple[int, ...]:
        p = self.perms[g]
        inv = [0] * self.n
        for s, t in enumerate(p):
            inv[t] = s
        return tuple(inv)

    def act(self, s: int, w: FreeWord) -> int:
        for g, e in w:
            s = self.perms[g][s] if e == 1 else self.inverse(g)[s]
        return s

    def validate(self, P: Presentation) -> None:
        missing = set(P.gens) - set(self.perms)
        if missing:
            raise CoverError(f"action undefined on {sorted(missing)}")
        for r in P.rels:
            if any(self.act(s, r) != s for s in range(self.n)):
                raise CoverError(f"relator {r} acts nontrivially; this is not a cover")


def cyclic_cover_spec(P: Presentation, phi: CohomClass, n: int) -> CoverSpec:
    """Generator g rotates the sheets by phi(g) mod n."""
    check_class(P, phi)
    if not phi.is_integral():
        raise PresentationError("cyclic covers need an integral class")
    return CoverSpec(n, {g: tuple((s + int(phi[g])) % n for s in range(n)) for g in P.gens})


def edge_label(g: str, s: int) -> str:
    return f"{g}_{s}"


def lift_walk(P: Presentation, spec: CoverSpec, w: FreeWord, start: int) -> tuple[list[Step], int]:
    """Lift of w starting at sheet ``start``: (steps in the cover, end sheet)."""
    index = {g: i for i, g in enumerate(P.gens)}
    steps = []
    s = start
    for g, e in w:
        if e == 1:
            steps.append((index[g] * spec.n + s, 1))
            s = spec.perms[g][s]
        else:
            s = spec.inverse(g)[s]
            steps.append((index[g] * spec.n + s, -1))
    return steps, s


def cover_complex(P: Presentation, spec: CoverSpec) -> TwoComplex:
    """Covering 2-complex: one vertex per sheet, one edge per (generator, sheet), one face per (relator, sheet)."""
    spec.validate(P)
    n = spec.n
    edges = []
    labels = []
    for g in P.gens:
        for s in range(n):
            edges.append((s, spec.perms[g][s]))
            labels.append(edge_label(g, s))
    faces = []
    for r in P.rels:
        # relators act trivially, so every sheet orbit has length one
        for s in range(n):
            steps, end = lift_walk(P, spec, r, s)
            assert end == s
            faces.append(tuple(steps))
    return TwoComplex(n, tuple(edges), tuple(faces), tuple(labels))


def lift_class(P: Presentation, spec: CoverSpec, phi: CohomClass) -> CohomClass:
    """Pull-back p*phi as a class on the cover's edge labels."""
    check_class(P, phi)
    return CohomClass({edge_label(g, s): phi[g] for g in P.gens for s in range(spec.n)})


@dataclass(frozen=True)
class CoverInequality:
    lhs: Fraction
    rhs: Fraction
    n: int

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs


def verify_cover_inequality(
    P: Presentation, spec: CoverSpec, phi: CohomClass, method: str = "auto", base: TwoComplex | None = None
) -> CoverInequality:
    """Compare t of the pulled-back class upstairs with index times t downstairs."""
    X = base if base is not None else complex_from_presentation(P)
    cover = cover_complex(P, spec)
    lhs = turaev_norm(cover, lift_class(P, spec, phi), method).value
    rhs = spec.n * turaev_norm(X, phi, method).value
    return CoverInequality(lhs, rhs, spec.n)

