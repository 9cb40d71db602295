from fractions import Fraction
from math import gcd

import hypothesis.strategies as st
import pytest
from hypothesis import given

from conftest import presentation_with_class, presentations, words
from turaev.presentations import (
    CohomClass,
    FreeWord,
    ParseError,
    Presentation,
    PresentationError,
    abelianize,
    class_coordinates,
    div_counterexample,
    divisibility,
    format_presentation,
    make_good,
    occurrence_count,
    parse_phi,
    parse_presentation,
    t_P,
)

WIRTINGER_TREFOIL = "gens: x1 x2 x3 ; rels: x3 x1 x3^-1 x2^-1 , x1 x2 x1^-1 x3^-1 , x2 x3 x2^-1 x1^-1"


# ---------------------------------------------------------------- parsing

def test_parse_commutator_sugar():
    P = parse_presentation("gens: a x ; rels: [x,a]")
    assert P.gens == ("a", "x")
    assert P.rels == (FreeWord.of("x", "a", "x^-1", "a^-1"),)


def test_parse_trefoil_two_generator():
    P = parse_presentation("gens: u v ; rels: u v u v^-1 u^-1 v^-1")
    assert P.rels[0] == FreeWord.of("u", "v", "u", "v^-1", "u^-1", "v^-1")


def test_parse_free_group_no_relators():
    P = parse_presentation("gens: a ; rels:")
    assert P.gens == ("a",) and P.rels == ()


def test_parse_comments_and_whitespace():
    P = parse_presentation("# a comment\n  gens: a   b ;\n rels: a b , b^-1 a^-1 \n")
    assert len(P.rels) == 2


@pytest.mark.parametrize(
    "text",
    ["gens: a ; rels: a (", "gens a ; rels: a", "gens: a ; rels: a^2", "gens: a ; rels: [a,", ""],
)
def test_parse_errors(text):
    with pytest.raises(PresentationError):
        parse_presentation(text)


def test_parse_error_reports_position():
    with pytest.raises(ParseError) as info:
        parse_presentation("gens: a b ; rels: a b (")
    assert info.value.position == 22


def test_unknown_generator():
    with pytest.raises(PresentationError, match="unknown"):
        parse_presentation("gens: a ; rels: a b")


def test_empty_reducing_relator_is_kept():
    # a a^-1 pads a generator; reducing it away would change #(a)
    P = parse_presentation("gens: a ; rels: a a^-1")
    assert P.rels[0] == FreeWord.of("a", "a^-1")
    assert occurrence_count(P, "a") == 2


@given(presentations())
def test_format_parse_roundtrip(P):
    assert parse_presentation(format_presentation(P)) == P


# ------------------------------------------------------------ free words

@given(words(("a", "b", "c"), 0, 12))
def test_reduction_idempotent_and_shortening(w):
    r = w.reduce()
    assert r.reduce() == r
    assert len(r) <= len(w)
    assert r.is_reduced()


@given(words(("a", "b"), 0, 8), words(("a", "b"), 0, 8))
def test_inverse_is_antihomomorphism(u, v):
    assert (u * v).inverse() == v.inverse() * u.inverse()
    assert (u * u.inverse()).reduce() == FreeWord(())


def test_word_str():
    assert str(FreeWord.of("g", "g^-1")) == "g g^-1"
    assert str(FreeWord(())) == "1"


# --------------------------------------------------------- counts, goodness

def test_occurrence_counts():
    T = parse_presentation("gens: a x ; rels: [x,a]")
    assert occurrence_count(T, "x") == 2
    W = parse_presentation(WIRTINGER_TREFOIL)
    assert occurrence_count(W, "x1") == 4
    assert occurrence_count(parse_presentation("gens: a ; rels:"), "a") == 0


def test_make_good_examples():
    P = parse_presentation("gens: a b ; rels: a b")
    assert make_good(P) == parse_presentation("gens: b ; rels: b b^-1")
    T = parse_presentation("gens: a x ; rels: [x,a]")
    assert make_good(T) == T
    F = parse_presentation("gens: a ; rels:")
    assert make_good(F) == parse_presentation("gens: a ; rels: a a^-1")


@given(presentations())
def test_make_good_is_good_and_preserves_abelianization(P):
    G = make_good(P)
    assert G.is_good()
    a, b = abelianize(P), abelianize(G)
    assert (a.betti, a.torsion) == (b.betti, b.torsion)


# -------------------------------------------------------------------- t_P

def test_t_P_examples():
    W = parse_presentation(WIRTINGER_TREFOIL)
    assert t_P(W, parse_phi("x1=1,x2=1,x3=1")) == 3
    T = parse_presentation("gens: u v ; rels: u v u v^-1 u^-1 v^-1")
    assert t_P(T, parse_phi("u=1,v=1")) == 1
    for n in range(1, 5):
        gens = " ".join([f"a{i}" for i in range(1, n + 1)] + [f"x{i}" for i in range(1, n + 1)])
        rels = " , ".join(f"[x{i},a{i}]" for i in range(1, n + 1))
        P = parse_presentation(f"gens: {gens} ; rels: {rels}")
        phi = CohomClass({f"x{i}": 1 for i in range(1, n + 1)})
        assert t_P(P, phi) == 0


def test_t_P_half_integral_value():
    # #(u) = 3 gives weight 1/2
    T = parse_presentation("gens: u v ; rels: u v u v^-1 u^-1 v^-1")
    assert t_P(T, parse_phi("u=1/3,v=1/3")) == Fraction(1, 3)
    P = parse_presentation("gens: a b ; rels: a a a b^-1 b^-1 b^-1")
    assert t_P(P, parse_phi("a=1,b=1")) == 1


def test_t_P_rejects_bad_input():
    with pytest.raises(PresentationError, match="not good"):
        t_P(parse_presentation("gens: a b ; rels: a b"), parse_phi("a=1,b=-1"))
    T = parse_presentation("gens: a x ; rels: [x,a]")
    with pytest.raises(PresentationError, match="unknown"):
        t_P(T, parse_phi("y=1"))
    W = parse_presentation(WIRTINGER_TREFOIL)
    with pytest.raises(PresentationError, match="vanish"):
        t_P(W, parse_phi("x1=1"))


@given(presentation_with_class(), st.fractions(min_value=-5, max_value=5, max_denominator=6))
def test_t_P_nonnegative_and_homogeneous(Pphi, c):
    P, phi = Pphi
    v = t_P(P, phi)
    assert v >= 0
    assert t_P(P, phi.scaled(c)) == abs(c) * v


# -------------------------------------------------------- classes, parsing

def test_parse_phi():
    phi = parse_phi("x=1, a=-3/2")
    assert phi["x"] == 1 and phi["a"] == Fraction(-3, 2) and phi["zzz"] == 0
    with pytest.raises(PresentationError):
        parse_phi("x1")
    with pytest.raises(PresentationError):
        parse_phi("x=1/0")


def test_abelianization_examples():
    T = parse_presentation("gens: a x ; rels: [x,a]")
    assert abelianize(T).betti == 2
    P = parse_presentation("gens: a b ; rels: a a b^-1 b^-1 b^-1 , a b")
    ab = abelianize(P)
    assert ab.betti == 0 and ab.torsion == (5,)


@given(presentation_with_class())
def test_class_coordinates_reconstruct_class(Pphi):
    P, phi = Pphi
    ab = abelianize(P)
    coords = class_coordinates(P, phi)
    for g in P.gens:
        assert sum(a * c for a, c in zip(ab.free_coords[g], coords)) == phi[g]


# ----------------------------------------------------------- divisibility

def test_divisibility_examples():
    assert divisibility((1, 0)) == 1
    assert divisibility((6, 3)) == 3
    assert divisibility((5, 3)) == 1
    assert divisibility(parse_phi("a=-4,b=6")) == 2
    with pytest.raises(PresentationError):
        divisibility((0, 0))
    with pytest.raises(PresentationError):
        divisibility((Fraction(1, 2), 1))


@pytest.mark.parametrize(
    "psi, beta",
    [((1, 1), (5, 3)), ((0, 1), (2, 3)), ((1, -1), (5, -3))],
)
def test_div_counterexample_examples(psi, beta):
    alpha, b = div_counterexample(*psi)
    assert alpha == (1, 0) and b == beta
    s = (alpha[0] + b[0], alpha[1] + b[1])
    assert divisibility(alpha) + divisibility(b) == 2 < divisibility(s) == 3


@given(st.integers(-200, 200), st.integers(-200, 200).filter(bool))
def test_div_counterexample_strict_inequality(x, y):
    if gcd(x, y) != 1:
        with pytest.raises(PresentationError):
            div_counterexample(x, y)
        return
    a, b = div_counterexample(x, y)
    assert gcd(*a) + gcd(*b) < gcd(a[0] + b[0], a[1] + b[1])


def test_div_counterexample_needs_nonzero_y():
    with pytest.raises(PresentationError):
        div_counterexample(1, 0)


def test_presentation_validation():
    with pytest.raises(PresentationError):
        Presentation(("a", "a"), ())
    with pytest.raises(PresentationError):
        Presentation(("a",), (FreeWord.of("b"),))
