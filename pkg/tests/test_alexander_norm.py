from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import given

from test_laurent import polys
from turaev.alexander_norm import alexander_norm, lower_bounds, polytope_vertices, support
from turaev.laurent import LaurentPoly
from turaev.link_ingest import fixture_presentation, knot_fixture, wedge_of_tori
from turaev.presentations import CohomClass
from turaev.turaev_opt import certify_tbar

L = LaurentPoly
WHITEHEAD = L({(0, 0): 1, (1, 0): -1, (0, 1): -1, (1, 1): 1}, 2)

classes = lambda k: st.lists(  # noqa: E731
    st.fractions(min_value=-6, max_value=6, max_denominator=5), min_size=k, max_size=k
)


def test_support_examples():
    assert support(L.from_coeffs([1, -1, 1])) == {(0,), (1,), (2,)}
    assert support(WHITEHEAD) == {(0, 0), (1, 0), (0, 1), (1, 1)}
    assert support(L.zero()) == set()


def test_norm_examples():
    assert alexander_norm(L({(0, 0): 1, (1, 0): 1, (0, 1): 1}, 2), [1, 0]) == 1
    assert alexander_norm(WHITEHEAD, [1, 1]) == 2
    assert alexander_norm(L.monomial((3, -2), 7), [5, 9]) == 0
    assert alexander_norm(L.zero(2), [1, 1]) == 0
    with pytest.raises(ValueError):
        alexander_norm(WHITEHEAD, [1])


@given(st.integers(1, 3).flatmap(lambda k: st.tuples(polys(nvars=k), classes(k), classes(k))),
       st.fractions(min_value=-5, max_value=5, max_denominator=7))
def test_seminorm(args, c):
    delta, phi, psi = args
    a = alexander_norm(delta, phi)
    assert a >= 0
    assert alexander_norm(delta, [c * x for x in phi]) == abs(c) * a
    assert alexander_norm(delta, [x + y for x, y in zip(phi, psi)]) <= a + alexander_norm(delta, psi)


@given(polys(nvars=2), classes(2), st.tuples(st.integers(-4, 4), st.integers(-4, 4)))
def test_translation_invariance(delta, phi, shift):
    assert alexander_norm(delta * L.monomial(shift, -1), phi) == alexander_norm(delta, phi)


@given(polys(nvars=2, max_terms=6), classes(2))
def test_polytope_vertices_give_same_width(delta, phi):
    verts = polytope_vertices(delta)
    assert set(verts) <= delta.support()
    if verts:
        vals = [sum(Fraction(a) * b for a, b in zip(phi, v)) for v in verts]
        assert max(vals) - min(vals) == alexander_norm(delta, phi)


def test_polytope_vertices_square():
    assert polytope_vertices(WHITEHEAD) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    # (1,0) becomes an edge midpoint once (2,0) is in the support
    wider = WHITEHEAD + L({(1, 0): 5, (2, 0): 1}, 2)
    assert polytope_vertices(wider) == [(0, 0), (0, 1), (1, 1), (2, 0)]


# ------------------------------------------------------------- lower bounds

def test_lower_bounds_trefoil():
    W, cl, _ = knot_fixture("trefoil")
    lb = lower_bounds(W, cl[0])
    assert lb.a_bound is None and lb.deg_bound == 1
    assert ("b1 >= 2 (Alexander norm bound)", False, "b1 = 1") in lb.gates


@pytest.mark.parametrize("n", [1, 2, 3])
def test_lower_bounds_wedge(n):
    P, phi = wedge_of_tori(n)
    lb = lower_bounds(P, phi)
    if n == 1:
        # the torus: Delta = 1 and Delta_phi = t - 1, so both bounds exist and equal 0
        assert lb.delta == L.const(1, 2) and lb.a_bound == 0
        assert lb.delta_phi == L.from_coeffs([-1, 1]) and lb.deg_bound == 0
    else:
        # an n x 2n Fox matrix has no (2n-1)-minors
        assert lb.delta.is_zero() and lb.a_bound is None
        assert lb.delta_phi.is_zero() and lb.deg_bound is None


def test_lower_bounds_whitehead():
    P, cl, _ = knot_fixture("whitehead")
    phi = CohomClass({g: cl[0][g] + cl[1][g] for g in P.gens})
    lb = lower_bounds(P, phi)
    assert lb.a_bound == 2
    # Delta_phi = (t-1)^3 has degree 3
    assert lb.deg_bound == 2


def test_non_primitive_class_gets_no_degree_bound():
    W, cl, _ = knot_fixture("trefoil")
    lb = lower_bounds(W, cl[0].scaled(2))
    assert lb.deg_bound is None
    assert any(name.startswith("phi primitive") and not ok for name, ok, _ in lb.gates)


@pytest.mark.parametrize("name", ["trefoil", "fig8", "whitehead"])
def test_bounds_consistent_with_uppers(name):
    P, cl, _ = knot_fixture(name)
    phi = CohomClass({g: sum(c[g] for c in cl) for g in P.gens})
    s = certify_tbar([P], [phi])
    lb = lower_bounds(P, phi)
    for b in (lb.a_bound, lb.deg_bound):
        if b is not None:
            assert b <= s.upper


def test_trefoil_two_generator_certified_value():
    T = fixture_presentation("trefoil_2gen")
    s = certify_tbar([T], [CohomClass({"u": 1, "v": 1})])
    lb = lower_bounds(T, CohomClass({"u": 1, "v": 1}))
    assert lb.deg_bound == s.lower == s.upper == 1
