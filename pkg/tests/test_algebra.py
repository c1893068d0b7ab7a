import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from antialgebra import (
    GradedMorphism, GradedSubspacePair, StructureError, abelian, build, center, derived_ideal,
    direct_sum, exe02, exe02_extension, graph_of, is_homomorphism, is_ideal, is_multiplicative,
    is_perfect, is_subalgebra, k3, verify_axioms,
)
from antialgebra.algebra import HomLieAntialgebra, perfectness_failures, product_spans
from antialgebra.linalg import Matrix, Subspace

F = Fraction
MUS = [1, 2, 3, -1, F(1, 2)]


@pytest.mark.parametrize("mu", MUS)
def test_k3_satisfies_axioms(mu):
    rep = verify_axioms(k3(mu))
    assert rep.passed, rep.to_text()


@pytest.mark.parametrize("mu", MUS)
def test_k3_is_multiplicative(mu):
    assert is_multiplicative(k3(mu))


def test_zero_products_pass_for_any_twists():
    A = abelian(["x", "x2"], ["y"], alpha=Matrix([[1, 2], [3, 4]]), beta=Matrix([[F(-5, 3)]]))
    assert verify_axioms(A).passed


def test_bracket_rescaling_keeps_axioms():
    # every identity is linear in the bracket, so [a,b] = eps instead of eps/2 is still valid
    A = k3(2)
    B = build(A.even, A.odd, alpha={"eps": {"eps": 1}}, beta={"a": {"a": 2}, "b": {"b": F(1, 2)}},
              even_even={("eps", "eps"): {"eps": 1}},
              even_odd={("eps", "a"): {"a": 1}, ("eps", "b"): {"b": F(1, 4)}},
              odd_odd={("a", "b"): {"eps": 1}})
    assert verify_axioms(B).passed


def test_wrong_even_odd_product_fails_with_witness():
    A = k3(2)
    c01 = [list(r) for r in A.c01]
    c01[0][0] = (F(2), F(0))
    B = A.replace(c01=c01)
    rep = verify_axioms(B)
    assert not rep.passed
    assert rep.check("hanti02").witnesses
    w = rep.check("hanti02").witnesses[0]
    assert w.lhs != w.rhs


def test_exe02_products():
    A = exe02(2)
    assert verify_axioms(A).passed
    assert A.bracket(A.o(0), A.o(1)) == (1,)
    assert A.bracket(A.o(1), A.o(0)) == (-1,)
    assert A.mul00(A.e(0), A.e(0)) == (0,)
    assert A.mul01(A.e(0), A.o(0)) == (0, 0)
    assert is_multiplicative(A)


def test_identity_twists_are_multiplicative_on_valid_algebra():
    A = k3(2).replace(alpha=Matrix.identity(1), beta=Matrix.identity(2))
    assert is_multiplicative(A)


def test_non_multiplicative_twist_detected():
    A = k3(2).replace(alpha=Matrix([[2]]))
    assert not is_multiplicative(A)


def test_asymmetric_even_product_rejected():
    with pytest.raises(StructureError) as err:
        HomLieAntialgebra(["x", "x2"], [], [[(1, 0), (0, 1)], [(0, 0), (0, 0)]], [[], []], [],
                          Matrix.identity(2), Matrix.zeros(0, 0))
    assert err.value.witness.args == ("x", "x2")


def test_non_antisymmetric_bracket_rejected():
    with pytest.raises(StructureError):
        HomLieAntialgebra(["e"], ["y"], [[(0,)]], [[(0,)]], [[(1,)]],
                          Matrix.identity(1), Matrix.identity(1))


def test_duplicate_names_rejected():
    with pytest.raises(StructureError):
        abelian(["x"], ["x"])


def test_morphism_examples():
    A = k3(2)
    assert is_homomorphism(GradedMorphism.identity(A))
    Z = abelian(["z0"], [])
    assert is_homomorphism(GradedMorphism.zero(A, Z))
    T, B = exe02_extension(2), exe02(2)
    pi = GradedMorphism(T, B, Matrix.identity(1), Matrix([[1, 0, 0], [0, 1, 0]]))
    assert is_homomorphism(pi)


def test_morphism_shape_checked():
    A = k3(2)
    with pytest.raises(ValueError):
        GradedMorphism(A, A, Matrix.identity(2), Matrix.identity(2))


def test_direct_sum():
    A = k3(2)
    Z = abelian([], [])
    S = direct_sum(A, Z)
    assert S.same_structure(A)
    D = direct_sum(k3(2), k3(3))
    assert D.dims == (2, 4)
    assert verify_axioms(D).passed
    assert D.even == ("eps", "eps'")


def test_graph_examples():
    A = k3(2)
    G = graph_of(GradedMorphism.identity(A))
    assert G.dims == (1, 2)
    assert Subspace.span([(1, 1)], 2) == G.even
    Gz = graph_of(GradedMorphism.zero(A, A))
    assert Gz.even == Subspace.span([(1, 0)], 2)
    T, B = exe02_extension(2), exe02(2)
    pi = GradedMorphism(T, B, Matrix.identity(1), Matrix([[1, 0, 0], [0, 1, 0]]))
    assert graph_of(pi).dims == (1, 3)


def test_subalgebra_and_ideal_examples():
    A = k3(2)
    for S in (GradedSubspacePair.full(A), GradedSubspacePair.zero(A)):
        assert is_subalgebra(A, S) and is_ideal(A, S)
    T = exe02_extension(2)
    z = GradedSubspacePair(Subspace.zero(1), Subspace.span([(0, 0, 1)], 3))
    assert is_ideal(T, z)
    # span{a} is not closed: eps.a stays inside, but it is not an ideal ([a,b] = eps/2)
    sa = GradedSubspacePair(Subspace.zero(1), Subspace.span([(1, 0)], 2))
    assert not is_ideal(A, sa)


def test_center_examples():
    assert center(abelian(["x"], ["y", "y2"])) == GradedSubspacePair.full(abelian(["x"], ["y", "y2"]))
    assert center(k3(2)).dims == (0, 0)
    Z = center(exe02_extension(2))
    assert (0, 0, 1) in Z.odd
    assert Z.dims == (0, 1)


def test_perfectness_examples():
    assert is_perfect(k3(2))
    ee, oo, eo = product_spans(k3(2))
    assert (ee.dim, oo.dim, eo.dim) == (1, 1, 2)
    assert not is_perfect(exe02(2))
    assert perfectness_failures(exe02(2)) == ["a0 = a0.a0", "a1 = a0.a1"]
    assert not is_perfect(abelian(["x"], []))


def test_derived_ideal_examples():
    A = k3(2)
    assert derived_ideal(A) == GradedSubspacePair.full(A)
    Z = abelian(["x"], ["y"])
    assert derived_ideal(Z) == GradedSubspacePair.zero(Z)
    D = derived_ideal(exe02(2))
    assert D.dims == (1, 0)


def test_surjective_image_of_perfect_is_perfect():
    # projecting K3 + K3 onto either factor
    D = direct_sum(k3(2), k3(3))
    assert is_perfect(D)
    p = GradedMorphism(D, k3(3), Matrix([[0, 1]]), Matrix([[0, 0, 1, 0], [0, 0, 0, 1]]))
    assert is_homomorphism(p) and p.is_surjective()
    assert is_perfect(p.target)


@pytest.mark.parametrize("A", [k3(2), exe02(2), exe02_extension(2), direct_sum(k3(2), exe02(3))])
def test_center_is_an_ideal(A):
    assert is_ideal(A, center(A))


def _random_element(rng, n):
    return tuple(F(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(n))


def test_axioms_hold_on_random_elements():
    A = k3(2)
    rng = random.Random(7)
    half = F(1, 2)
    for _ in range(50):
        x1, x2, x3 = (_random_element(rng, 1) for _ in range(3))
        y1, y2, y3 = (_random_element(rng, 2) for _ in range(3))
        assert A.mul00(A.twist0(x1), A.mul00(x2, x3)) == A.mul00(A.mul00(x1, x2), A.twist0(x3))
        assert A.mul01(A.twist0(x1), A.mul01(x2, y1)) == tuple(
            half * c for c in A.mul01(A.mul00(x1, x2), A.twist1(y1)))
        lhs = A.mul00(A.twist0(x1), A.bracket(y1, y2))
        r1 = A.bracket(A.mul01(x1, y1), A.twist1(y2))
        r2 = A.bracket(A.twist1(y1), A.mul01(x1, y2))
        assert lhs == tuple(a + b for a, b in zip(r1, r2))
        total = [F(0), F(0)]
        for p, q, r in ((y1, y2, y3), (y2, y3, y1), (y3, y1, y2)):
            t = A.mul01(A.bracket(q, r), A.twist1(p))
            total = [s + c for s, c in zip(total, t)]
        assert total == [0, 0]


@st.composite
def grade_preserving_maps(draw):
    e = st.sampled_from([-1, 0, 1])
    f0 = Matrix([[draw(e)]])
    f1 = Matrix([[draw(e) for _ in range(2)] for _ in range(2)])
    return f0, f1


@settings(max_examples=80, deadline=None)
@given(grade_preserving_maps())
def test_graph_criterion(maps):
    A = k3(2)
    phi = GradedMorphism(A, A, *maps)
    assert is_homomorphism(phi) == is_subalgebra(direct_sum(A, A), graph_of(phi))


def test_derived_ideal_agrees_with_span_test():
    corpus = [k3(2), k3(F(1, 2)), exe02(2), exe02_extension(2), abelian(["x"], ["y"]),
              direct_sum(k3(2), k3(3)), direct_sum(k3(2), exe02(2))]
    for A in corpus:
        assert (derived_ideal(A) == GradedSubspacePair.full(A)) == is_perfect(A)
