"""Finite group presentations: words, parsing, Tietze clean-up, t_P and divisibility."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .intsnf import integer_inverse, smith_normal_form

Letter = tuple[str, int]


class PresentationError(ValueError):
    """Raised for malformed presentations or invalid classes."""


class ParseError(PresentationError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class FreeWord:
    """A word in named generators; each letter is ``(name, +1 | -1)``."""

    letters: tuple[Letter, ...] = ()

    @classmethod
    def of(cls, *tokens: str) -> "FreeWord":
        """Build from tokens like ``"x"`` or ``"x^-1"``."""
        out = []
        for tok in tokens:
            if tok.endswith("^-1"):
                out.append((tok[:-3], -1))
            else:
                out.append((tok, 1))
        return cls(tuple(out))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return FreeWord(self.letters + other.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord(tuple((g, -e) for g, e in reversed(self.letters)))

    def reduce(self) -> "FreeWord":
        stack: list[Letter] = []
        for g, e in self.letters:
            if stack and stack[-1][0] == g and stack[-1][1] == -e:
                stack.pop()
            else:
                stack.append((g, e))
        return FreeWord(tuple(stack))

    def is_reduced(self) -> bool:
        return all(
            not (a[0] == b[0] and a[1] == -b[1])
            for a, b in zip(self.letters, self.letters[1:])
        )

    def count(self, g: str) -> int:
        return sum(1 for h, _ in self.letters if h == g)

    def exponent_sum(self, g: str) -> int:
        return sum(e for h, e in self.letters if h == g)

    def substitute(self, g: str, image: "FreeWord") -> "FreeWord":
        out: list[Letter] = []
        for h, e in self.letters:
            if h == g:
                out.extend((image if e == 1 else image.inverse()).letters)
            else:
                out.append((h, e))
        return FreeWord(tuple(out))

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(g if e == 1 else f"{g}^-1" for g, e in self.letters)


def commutator(a: str, b: str) -> FreeWord:
    """``[a,b] = a b a^-1 b^-1``."""
    return FreeWord(((a, 1), (b, 1), (a, -1), (b, -1)))


@dataclass(frozen=True)
class Presentation:
    gens: tuple[str, ...]
    rels: tuple[FreeWord, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "gens", tuple(self.gens))
        object.__setattr__(self, "rels", tuple(self.rels))
        if len(set(self.gens)) != len(self.gens):
            raise PresentationError(f"duplicate generator in {self.gens}")
        for g in self.gens:
            if not g:
                raise PresentationError("empty generator name")
        known = set(self.gens)
        for r in self.rels:
            for g, _ in r:
                if g not in known:
                    raise PresentationError(f"unknown generator {g!r} in relator {r}")

    def counts(self) -> dict[str, int]:
        out = {g: 0 for g in self.gens}
        for r in self.rels:
            for g, _ in r:
                out[g] += 1
        return out

    def is_good(self) -> bool:
        return all(c >= 2 for c in self.counts().values())

    def relation_matrix(self) -> list[list[int]]:
        """Rows = relators, columns = generators, entries = exponent sums."""
        return [[r.exponent_sum(g) for g in self.gens] for r in self.rels]

    def __str__(self) -> str:
        return format_presentation(self)


def format_presentation(P: Presentation) -> str:
    return "gens: " + " ".join(P.gens) + " ; rels: " + " , ".join(str(r) for r in P.rels)


# ---------------------------------------------------------------- parsing

def _parse_word(text: str, offset: int, known: set[str]) -> FreeWord:
    letters: list[Letter] = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        if text[pos] == "[":
            close = text.find("]", pos)
            if close < 0:
                raise ParseError("unterminated commutator", offset + pos)
            inner = text[pos + 1:close]
            parts = inner.split(",")
            if len(parts) != 2:
                raise ParseError("commutator needs exactly two entries", offset + pos)
            a = _parse_word(parts[0], offset + pos + 1, known)
            b = _parse_word(parts[1], offset + pos + 2 + len(parts[0]), known)
            letters.extend((a * b * a.inverse() * b.inverse()).letters)
            pos = close + 1
            continue
        m = re.match(r"([A-Za-z_][A-Za-z0-9_]*)(\^(-?1))?", text[pos:])
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", offset + pos)
        name = m.group(1)
        if name not in known:
            raise ParseError(f"unknown generator {name!r}", offset + pos)
        exp = -1 if m.group(3) == "-1" else 1
        letters.append((name, exp))
        pos += m.end()
    return FreeWord(tuple(letters))


def _split_top_level(text: str) -> list[tuple[str, int]]:
    """Split on commas outside square brackets; keep start offsets."""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append((text[start:i], start))
            start = i + 1
    parts.append((text[start:], start))
    return parts


def normalize_relator(w: FreeWord) -> FreeWord:
    # a relator that collapses to the empty word is kept as written: it is
    # the trivial-relator padding used to make presentations good
    r = w.reduce()
    return r if len(r) else w


def parse_presentation(text: str) -> Presentation:
    """Parse ``gens: a x ; rels: [x,a]``.

    Relators are whitespace separated tokens ``g`` / ``g^-1`` with the
    commutator sugar ``[u,v]``; relators are separated by commas. Lines
    starting with ``#`` are comments.
    """
    body = "\n".join(line for line in text.splitlines() if not line.lstrip().startswith("#"))
    m = re.match(r"\s*gens\s*:", body)
    if not m:
        raise ParseError("expected 'gens:'", 0)
    semi = body.find(";", m.end())
    if semi < 0:
        raise ParseError("expected ';' after generator list", len(body))
    gens = body[m.end():semi].split()
    for g in gens:
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", g):
            raise ParseError(f"bad generator name {g!r}", m.end())
    if len(set(gens)) != len(gens):
        raise ParseError("duplicate generator", m.end())
    rm = re.match(r"\s*rels\s*:", body[semi + 1:])
    if not rm:
        raise ParseError("expected 'rels:'", semi + 1)
    rel_start = semi + 1 + rm.end()
    rel_text = body[rel_start:]
    rels = []
    known = set(gens)
    if rel_text.strip():
        for chunk, off in _split_top_level(rel_text):
            if not chunk.strip():
                raise ParseError("empty relator", rel_start + off)
            w = _parse_word(chunk, rel_start + off, known)
            rels.append(normalize_relator(w))
    return Presentation(tuple(gens), tuple(rels))


# ------------------------------------------------------------ operations


def occurrence_count(P: Presentation, g: str) -> int:
    if g not in P.gens:
        raise PresentationError(f"unknown generator {g!r}")
    return sum(r.count(g) for r in P.rels)


def _solve_for(r: FreeWord, g: str) -> FreeWord:
    """Express g from a relator containing it exactly once."""
    idx = next(i for i, (h, _) in enumerate(r.letters) if h == g)
    u = FreeWord(r.letters[:idx])
    v = FreeWord(r.letters[idx + 1:])
    if r.letters[idx][1] == 1:
        return (u.inverse() * v.inverse()).reduce()
    return (v * u).reduce()


def make_good(P: Presentation) -> Presentation:
    """Eliminate generators occurring once, then pad unused ones with ``g g^-1``."""
    gens = list(P.gens)
    rels = list(P.rels)
    while True:
        counts = {g: 0 for g in gens}
        for r in rels:
            for g, _ in r:
                counts[g] += 1
        target = next((g for g in gens if counts[g] == 1), None)
        if target is None:
            break
        j = next(j for j, r in enumerate(rels) if r.count(target))
        image = _solve_for(rels[j], target)
        del rels[j]
        gens.remove(target)
        rels = [normalize_relator(r.substitute(target, image)) for r in rels]
    counts = {g: 0 for g in gens}
    for r in rels:
        for g, _ in r:
            counts[g] += 1
    for g in gens:
        if counts[g] == 0:
            rels.append(FreeWord(((g, 1), (g, -1))))
    return Presentation(tuple(gens), tuple(rels))


# -------------------------------------------------------------- classes


@dataclass(frozen=True)
class CohomClass:
    """A homomorphism to Q given by its values on generators (or edge labels)."""

    values: Mapping[str, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "values", {k: Fraction(v) for k, v in dict(self.values).items()})

    def __getitem__(self, g: str) -> Fraction:
        return self.values.get(g, Fraction(0))

    def __hash__(self):
        return hash(tuple(sorted(self.values.items())))

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self.values.values())

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values.values())

    def scaled(self, c) -> "CohomClass":
        c = Fraction(c)
        return CohomClass({k: c * v for k, v in self.values.items()})

    def evaluate(self, w: FreeWord) -> Fraction:
        return sum((e * self[g] for g, e in w), Fraction(0))

    def restricted(self, names: Iterable[str]) -> "CohomClass":
        return CohomClass({n: self[n] for n in names})

    def denominator_lcm(self) -> int:
        out = 1
        for v in self.values.values():
            out = out * v.denominator // math.gcd(out, v.denominator)
        return out

    def __str__(self) -> str:
        return ",".join(f"{k}={v}" for k, v in sorted(self.values.items()))


def parse_phi(text: str) -> CohomClass:
    """Parse ``"x=1,a=0,b=-3/2"``."""
    vals = {}
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise PresentationError(f"bad class entry {part!r}; expected name=value")
        k, v = part.split("=", 1)
        try:
            vals[k.strip()] = Fraction(v.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise PresentationError(f"bad value in {part!r}") from exc
    return CohomClass(vals)


def check_class(P: Presentation, phi: CohomClass) -> None:
    unknown = set(phi.values) - set(P.gens)
    if unknown:
        raise PresentationError(f"class mentions unknown generators {sorted(unknown)}")
    for r in P.rels:
        if phi.evaluate(r) != 0:
            raise PresentationError(f"class does not vanish on relator {r}")


def t_P(P: Presentation, phi: CohomClass) -> Fraction:
    """Presentation complexity: sum over generators of (#(x)/2 - 1) |phi(x)|."""
    if not P.is_good():
        raise PresentationError("presentation is not good; call make_good first")
    check_class(P, phi)
    counts = P.counts()
    return sum((Fraction(counts[g], 2) - 1) * abs(phi[g]) for g in P.gens) or Fraction(0)


# ----------------------------------------------------------- abelianization


@dataclass(frozen=True)
class Abelianization:
    """H_1 of a presentation via SNF.

    ``free_coords[g]`` is the image of generator ``g`` in H_1/torsion = Z^b,
    in the basis read off from the SNF column transform.
    """

    betti: int
    torsion: tuple[int, ...]
    free_coords: Mapping[str, tuple[int, ...]]


def _snf_of_relations(P: Presentation):
    m = len(P.gens)
    R = P.relation_matrix() or [[0] * m]
    D, _, V = smith_normal_form(R)
    diag = [D[i][i] for i in range(min(len(D), m))]
    return diag, V


def abelianize(P: Presentation) -> Abelianization:
    m = len(P.gens)
    diag, V = _snf_of_relations(P)
    rank = sum(1 for d in diag if d != 0)
    torsion = tuple(d for d in diag if d > 1)
    coords = {g: tuple(V[i][j] for j in range(rank, m)) for i, g in enumerate(P.gens)}
    return Abelianization(m - rank, torsion, coords)


def class_coordinates(P: Presentation, phi: CohomClass) -> tuple[Fraction, ...]:
    """Coordinates of phi on the basis of H_1/torsion used by :func:`abelianize`."""
    check_class(P, phi)
    m = len(P.gens)
    diag, V = _snf_of_relations(P)
    rank = sum(1 for d in diag if d != 0)
    Vinv = integer_inverse(V)
    p = [phi[g] for g in P.gens]
    return tuple(sum((Vinv[j][i] * p[i] for i in range(m)), Fraction(0)) for j in range(rank, m))


def divisibility(values: Iterable) -> int:
    """Largest k with phi = k * psi for an integral psi.

    ``values`` are the coordinates of phi on a generating set of
    H_1/torsion (or a :class:`CohomClass`, whose generator values generate
    the same subgroup of Z).
    """
    if isinstance(values, CohomClass):
        values = values.values.values()
    vals = [Fraction(v) for v in values]
    if any(v.denominator != 1 for v in vals):
        raise PresentationError("divisibility needs an integral class")
    g = 0
    for v in vals:
        g = math.gcd(g, int(v))
    if g == 0:
        raise PresentationError("divisibility of the zero class is undefined")
    return g


def class_divisibility(P: Presentation, phi: CohomClass) -> int:
    return divisibility(class_coordinates(P, phi))


def _next_prime_above(n: int) -> int:
    p = n + 1
    while p < 2 or any(p % q == 0 for q in range(2, math.isqrt(p) + 1)):
        p += 1
    return p


def div_counterexample(x: int, y: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """Classes alpha, beta in Z^2 with div(alpha) + div(beta) < div(alpha + beta).

    Uses alpha = (1, 0), beta = (p x + p - 1, p y) with p the smallest prime
    exceeding 1 + |y|.
    """
    if y == 0:
        raise PresentationError("need y != 0 (psi must not be colinear with (1,0))")
    if math.gcd(x, y) != 1:
        raise PresentationError(f"({x},{y}) is not primitive")
    p = _next_prime_above(1 + abs(y))
    return (1, 0), (p * x + (p - 1), p * y)


def presentations_share_abelianization(Ps: Sequence[Presentation]) -> bool:
    invs = {(abelianize(P).betti, abelianize(P).torsion) for P in Ps}
    return len(invs) <= 1
