import os

import hypothesis
import hypothesis.strategies as st
import pytest

from turaev.complex import TwoComplex
from turaev.presentations import CohomClass, FreeWord, Presentation, abelianize, make_good, normalize_relator

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("thorough", max_examples=500, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def words(draw, gens, min_len=1, max_len=8):
    n = draw(st.integers(min_len, max_len))
    return FreeWord(tuple((draw(st.sampled_from(gens)), draw(st.sampled_from((1, -1)))) for _ in range(n)))


@st.composite
def presentations(draw, max_gens=4, max_rels=4, max_len=8, min_rels=0):
    m = draw(st.integers(1, max_gens))
    gens = tuple(f"g{i}" for i in range(m))
    k = draw(st.integers(min_rels, max_rels))
    rels = tuple(normalize_relator(draw(words(gens, 1, max_len))) for _ in range(k))
    return Presentation(gens, rels)


def good_presentations(**kw):
    return presentations(**kw).map(make_good).filter(lambda P: len(P.gens) > 0)


@st.composite
def presentation_with_class(draw, good=True, nonzero=False, **kw):
    """A presentation and an integral class built from the H^1 basis."""
    P = draw(good_presentations(**kw) if good else presentations(**kw))
    ab = abelianize(P)
    coeffs = [draw(st.integers(-3, 3)) for _ in range(ab.betti)]
    if nonzero:
        hypothesis.assume(any(coeffs))
    phi = CohomClass({g: sum(a * c for a, c in zip(ab.free_coords[g], coeffs)) for g in P.gens})
    return P, phi


@st.composite
def complexes_with_cocycle(draw, max_vertices=8, max_edges=16, max_entry=3):
    """Random connected 2-complex with empty boundary and an integral cocycle.

    Faces are either closed walks along a cycle of the graph (kept only if the
    cochain vanishes on them) or back-and-forth walks w w^-1, which every
    cochain kills; the latter also raise edge multiplicities.
    """
    V = draw(st.integers(1, max_vertices))
    edges = []
    for v in range(1, V):
        p = draw(st.integers(0, v - 1))
        edges.append((p, v) if draw(st.booleans()) else (v, p))
    n_tree = len(edges)
    extra = draw(st.integers(0 if V > 1 else 1, max(0, max_edges - n_tree)))
    for _ in range(extra):
        edges.append((draw(st.integers(0, V - 1)), draw(st.integers(0, V - 1))))
    E = len(edges)
    k0 = [draw(st.integers(-max_entry, max_entry)) for _ in range(E)]

    # walks as lists of (edge, dir), starting at vertex v
    adj = {v: [] for v in range(V)}
    for e, (s, t) in enumerate(edges):
        adj[s].append((e, 1, t))
        adj[t].append((e, -1, s))
    parent = {0: None}
    order = [0]
    for v in order:
        for e, d, u in adj[v]:
            if u not in parent and e < n_tree:
                parent[u] = (e, d, v)
                order.append(u)

    def path_from_root(v):
        steps = []
        while parent[v] is not None:
            e, d, p = parent[v]
            steps.append((e, d))
            v = p
        return steps[::-1]

    def inverse(walk):
        return [(e, -d) for e, d in reversed(walk)]

    faces = []
    for _ in range(draw(st.integers(0, 6))):
        if draw(st.booleans()) and E > n_tree:
            e = draw(st.integers(n_tree, E - 1))
            s, t = edges[e]
            loop = path_from_root(s) + [(e, 1)] + inverse(path_from_root(t))
            if sum(k0[x] * d for x, d in loop) == 0 and loop:
                faces.append(loop * draw(st.integers(1, 2)))
                continue
        v = draw(st.integers(0, V - 1))
        walk = []
        cur = v
        for _ in range(draw(st.integers(1, 4))):
            e, d, u = draw(st.sampled_from(adj[cur]))
            walk.append((e, d))
            cur = u
        faces.append(walk + inverse(walk))
    counts = [0] * E
    for f in faces:
        for e, _ in f:
            counts[e] += 1
    for e in range(E):
        if counts[e] < 2:
            faces.append([(e, 1), (e, -1)])
    X = TwoComplex(V, tuple(edges), tuple(tuple(f) for f in faces))
    return X, k0


@pytest.fixture
def torus():
    from turaev.presentations import parse_presentation

    return parse_presentation("gens: a x ; rels: [x,a]")


@pytest.fixture
def trefoil2():
    from turaev.link_ingest import fixture_presentation

    return fixture_presentation("trefoil_2gen")


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import LINES
    except ImportError:
        return
    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(LINES, key=lambda s: int(s.split(".")[0].split()[-1])):
            terminalreporter.write_line(line)
