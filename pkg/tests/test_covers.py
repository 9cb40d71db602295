from math import gcd

import hypothesis.strategies as st
import pytest
from hypothesis import given

from conftest import presentation_with_class
from turaev.complex import boundary_is_empty, complex_from_presentation, edge_multiplicities, h1_structure
from turaev.covers import (
    CoverError,
    CoverSpec,
    cover_complex,
    cyclic_cover_spec,
    lift_class,
    lift_walk,
    verify_cover_inequality,
)
from turaev.link_ingest import knot_fixture, wedge_of_tori
from turaev.presentations import FreeWord, parse_phi
from turaev.turaev_opt import turaev_norm


def test_torus_double_cover(torus):
    C = cover_complex(torus, cyclic_cover_spec(torus, parse_phi("x=1,a=0"), 2))
    assert (C.n_vertices, C.n_edges, len(C.faces), C.euler_characteristic()) == (2, 4, 2, 0)


def test_trefoil_double_cover(trefoil2):
    C = cover_complex(trefoil2, cyclic_cover_spec(trefoil2, parse_phi("u=1,v=1"), 2))
    assert C.euler_characteristic() == 0
    assert h1_structure(C) == (1, [3])


def test_trefoil_triple_cover(trefoil2):
    C = cover_complex(trefoil2, cyclic_cover_spec(trefoil2, parse_phi("u=1,v=1"), 3))
    assert h1_structure(C) == (1, [2, 2])


def test_identity_cover(trefoil2):
    phi = parse_phi("u=1,v=1")
    spec = cyclic_cover_spec(trefoil2, phi, 1)
    C, X = cover_complex(trefoil2, spec), complex_from_presentation(trefoil2)
    assert (C.n_vertices, C.edges, C.faces) == (X.n_vertices, X.edges, X.faces)
    assert lift_class(trefoil2, spec, phi).values == {"u_0": 1, "v_0": 1}


def test_torus_lift_class(torus):
    spec = cyclic_cover_spec(torus, parse_phi("x=1,a=0"), 2)
    lifted = lift_class(torus, spec, parse_phi("x=1,a=0"))
    assert lifted["x_0"] == lifted["x_1"] == 1


def test_trefoil_lifted_meridian_cubed():
    W, cl, _ = knot_fixture("trefoil")
    spec = cyclic_cover_spec(W, cl[0], 3)
    lifted = lift_class(W, spec, cl[0])
    steps, end = lift_walk(W, spec, FreeWord.of("x1", "x1", "x1"), 0)
    assert end == 0
    C = cover_complex(W, spec)
    assert sum(lifted[C.labels[e]] * d for e, d in steps) == 3


def test_cover_inequality_examples(torus):
    for n in (1, 2, 3, 5):
        r = verify_cover_inequality(torus, cyclic_cover_spec(torus, parse_phi("x=1,a=0"), n), parse_phi("x=1,a=0"))
        assert (r.lhs, r.rhs, r.holds) == (0, 0, True)
    W, cl, _ = knot_fixture("trefoil")
    r = verify_cover_inequality(W, cyclic_cover_spec(W, cl[0], 2), cl[0])
    assert r.rhs == 6 and r.lhs <= 6 and r.holds
    P, phi = wedge_of_tori(2)
    r = verify_cover_inequality(P, cyclic_cover_spec(P, phi, 3), phi)
    assert (r.lhs, r.rhs) == (0, 0)


def test_non_cover_action_rejected(trefoil2):
    with pytest.raises(CoverError):
        cover_complex(trefoil2, CoverSpec(2, {"u": (1, 0), "v": (0, 1)}))
    with pytest.raises(CoverError):
        CoverSpec(2, {"u": (0, 0)})
    with pytest.raises(CoverError):
        cover_complex(trefoil2, CoverSpec(2, {"u": (1, 0)}))


def test_permutation_cover_of_free_group():
    # a non-cyclic action: S_3 acting on 3 sheets through a free group
    from turaev.presentations import parse_presentation

    P = parse_presentation("gens: a b ; rels: a a^-1 , b b^-1")
    spec = CoverSpec(3, {"a": (1, 0, 2), "b": (0, 2, 1)})
    C = cover_complex(P, spec)
    assert C.euler_characteristic() == 3 * complex_from_presentation(P).euler_characteristic()
    assert boundary_is_empty(C)


@given(presentation_with_class(max_gens=3, max_rels=3, max_len=6), st.sampled_from([2, 3]))
def test_cover_invariants(Pphi, n):
    P, phi = Pphi
    vals = [int(phi[g]) for g in P.gens]
    if gcd(n, *vals) != 1:
        return
    spec = cyclic_cover_spec(P, phi, n)
    X = complex_from_presentation(P)
    C = cover_complex(P, spec)
    assert C.euler_characteristic() == n * X.euler_characteristic()
    base_ne = edge_multiplicities(X)
    assert edge_multiplicities(C) == tuple(base_ne[i // n] for i in range(C.n_edges))
    assert h1_structure(C)[0] >= h1_structure(X)[0]
    r = verify_cover_inequality(P, spec, phi)
    assert r.holds
    assert r.lhs == turaev_norm(C, lift_class(P, spec, phi), "brute").value
