import hypothesis.strategies as st
import pytest
from hypothesis import given

from conftest import presentation_with_class, presentations
from turaev.alexander import (
    AbelianizationMap,
    AlexanderError,
    alexander_matrix,
    alexander_polynomial,
    degree,
    fox_derivative,
    fox_identity_free,
    minors,
    one_variable_alexander,
    specialize,
)
from turaev.laurent import LaurentPoly, laurent_gcd
from turaev.link_ingest import fixture_presentation, knot_fixture
from turaev.presentations import FreeWord, Presentation, abelianize, normalize_relator, parse_phi, parse_presentation

L = LaurentPoly
W = FreeWord.of
TREFOIL = L.from_coeffs([1, -1, 1])
FIG8 = L.from_coeffs([1, -3, 1])
WHITEHEAD = L({(0, 0): 1, (1, 0): -1, (0, 1): -1, (1, 1): 1}, 2)


def t(k=1):
    return L.monomial((k,))


# ---------------------------------------------------------- fox derivatives

def test_fox_derivative_examples():
    assert fox_derivative(W("x", "y"), "x") == {W(): 1}
    assert fox_derivative(W("x^-1"), "x") == {W("x^-1"): -1}
    assert fox_derivative(W("x", "a", "x^-1", "a^-1"), "x") == {W(): 1, W("x", "a", "x^-1"): -1}
    assert fox_derivative(W("y"), "x") == {}


@given(presentations(max_len=10))
def test_fundamental_identity_free(P):
    for r in P.rels:
        assert fox_identity_free(r, P.gens)


def test_fundamental_identity_detects_missing_generator():
    assert not fox_identity_free(W("x", "a"), ("x",))


# --------------------------------------------------------- alexander matrix

def test_matrix_torus_one_variable(torus):
    A = alexander_matrix(torus, AbelianizationMap.from_class(torus, parse_phi("x=1,a=0")))
    # columns in generator order (a, x)
    assert A.entries == ((t() - L.const(1), L.zero()),)


def test_matrix_trefoil(trefoil2):
    A = alexander_matrix(trefoil2, AbelianizationMap.from_class(trefoil2, parse_phi("u=1,v=1")))
    (du, dv), = A.entries
    assert du == TREFOIL and dv == -TREFOIL


def test_matrix_trivial_relator():
    P = parse_presentation("gens: a ; rels: a a^-1")
    A = alexander_matrix(P, AbelianizationMap.from_class(P, parse_phi("a=1")))
    assert A.entries == ((L.zero(),),)


def test_map_must_kill_relators(trefoil2):
    with pytest.raises(AlexanderError):
        alexander_matrix(trefoil2, AbelianizationMap({"u": (1,), "v": (0,)}, 1))


# -------------------------------------------------------------- polynomials

def test_trefoil_both_presentations_agree(trefoil2):
    W3, _, psi = knot_fixture("trefoil")
    assert alexander_polynomial(W3, psi) == TREFOIL
    assert alexander_polynomial(trefoil2) == TREFOIL


def test_figure_eight():
    P, _, psi = knot_fixture("fig8")
    assert alexander_polynomial(P, psi) == FIG8


def test_torus_group(torus):
    psi = AbelianizationMap({"x": (1, 0), "a": (0, 1)}, 2)
    assert alexander_polynomial(torus, psi) == L.const(1, 2)


def test_whitehead_link():
    P, _, psi = knot_fixture("whitehead")
    assert alexander_polynomial(P, psi) == WHITEHEAD


@pytest.mark.parametrize("name", ["trefoil", "fig8", "whitehead"])
def test_minor_subsets_agree(name):
    """Oracle: gcds over minors missing different relators coincide."""
    P, _, psi = knot_fixture(name)
    A = alexander_matrix(P, psi)
    by_row = {}
    for rows, cols, d in minors(A):
        missing = [i for i in range(A.shape[0]) if i not in rows][0]
        by_row.setdefault(missing, []).append(d)
    gcds = [laurent_gcd(ds, psi.nvars) for ds in by_row.values()]
    assert len(gcds) == A.shape[0]
    assert all(g == gcds[0] for g in gcds)
    assert gcds[0] == alexander_polynomial(P, psi)


@pytest.mark.parametrize("name", ["trefoil", "fig8"])
def test_knot_symmetry(name):
    P, _, psi = knot_fixture(name)
    d = alexander_polynomial(P, psi)
    assert d.associated(d.evaluate_exponent_map([-1]))


def test_b1_zero_is_an_error():
    P = parse_presentation("gens: a ; rels: a a")
    with pytest.raises(AlexanderError):
        alexander_polynomial(P)


def test_too_few_relators_gives_zero():
    P = parse_presentation("gens: a b c ; rels: a b a^-1 b^-1")
    assert alexander_polynomial(P).is_zero()


@given(presentation_with_class(good=False, min_rels=1, max_gens=3, max_rels=3), st.randoms())
def test_invariance_under_reordering_and_reduction(Pphi, rnd):
    P, _ = Pphi
    if abelianize(P).betti == 0:
        return
    base = alexander_polynomial(P)
    rels = list(P.rels)
    rnd.shuffle(rels)
    reduced = Presentation(P.gens, tuple(normalize_relator(r.reduce()) for r in rels))
    psi = AbelianizationMap.canonical(P)
    assert alexander_polynomial(reduced, psi) == base
    gens = list(P.gens)
    rnd.shuffle(gens)
    assert alexander_polynomial(Presentation(tuple(gens), tuple(rels)), psi) == base


# ----------------------------------------------------- specialize, degree

def test_degree_and_specialize():
    assert degree(L({(-1,): 1, (0,): 3, (4,): 1})) == 5
    assert degree(TREFOIL) - 1 == 1
    one_minus_u = L({(0, 0): 1, (0, 1): -1}, 2)
    assert specialize(one_minus_u, [1, 0]).is_zero()
    with pytest.raises(ValueError):
        degree(L.zero())


def test_one_variable_of_whitehead():
    P, classes, _ = knot_fixture("whitehead")
    phi = parse_phi(",".join(f"{g}={classes[0][g] + classes[1][g]}" for g in P.gens))
    d = one_variable_alexander(P, phi)
    # Torres: for a 2-component link the total-linking polynomial is (t-1) Delta(t, t)
    assert d == specialize(WHITEHEAD, [1, 1]) * (t() - L.const(1))
    assert d == L.from_coeffs([-1, 3, -3, 1]).normalized()


def test_fixture_trefoil_file():
    assert fixture_presentation("trefoil_wirtinger") == knot_fixture("trefoil")[0]
