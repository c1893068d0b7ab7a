from fractions import Fraction
from itertools import product

import pytest

from antialgebra import (
    GradedMorphism, abelian, center, direct_sum, exe02, exe02_extension, k3, verify_axioms,
)
from antialgebra.builtins import exe02_coefficients
from antialgebra.extensions import (
    Action, ActionError, CentralExtension, CocycleError, CrossedModule, canonical_section,
    central_extension_from_cocycle, crossed_module_from_central_extension,
    extension_from_projection, identity_crossed_module, multiplication_action, section_action,
    semidirect, twisted_sum, verify_action, verify_central_extension, verify_crossed_module,
)
from antialgebra.homology import Cocycle2, is_cocycle_with_coeffs
from antialgebra.linalg import Matrix

F = Fraction


def exe02_cocycle(mu=2):
    A, V = exe02(mu), exe02_coefficients(mu)
    return A, Cocycle2.zero(A, V).with_entry(1, 0, 0, (F(mu),))


def test_zero_cocycle_gives_direct_sum():
    A = k3(2)
    V = abelian(["w"], [])
    E = central_extension_from_cocycle(A, Cocycle2.zero(A, V))
    assert E.total.same_structure(direct_sum(A, V))
    assert verify_central_extension(E).passed


@pytest.mark.parametrize("mu", [2, 3, F(1, 2)])
def test_exe02_extension_table(mu):
    A, w = exe02_cocycle(mu)
    E = central_extension_from_cocycle(A, w)
    T = E.total
    assert T.dims == (1, 3)
    assert T.same_structure(exe02_extension(mu))
    assert T.bracket(T.o(0), T.o(1)) == (1,)
    assert T.mul01(T.e(0), T.o(0)) == (0, 0, mu)
    assert T.twist1(T.o(2)) == (0, 0, mu)
    assert verify_axioms(T).passed
    assert verify_central_extension(E).passed


def test_non_cocycle_rejected():
    A = exe02(2)
    V = abelian(["w"], ["z"], beta=Matrix([[2]]))
    w = Cocycle2.zero(A, V).with_entry(1, 0, 0, (F(2),)).with_entry(0, 0, 0, (F(1),))
    with pytest.raises(CocycleError) as err:
        central_extension_from_cocycle(A, w)
    assert "cocycle3" in str(err.value)
    assert err.value.report.check("cocycle3").witnesses


def test_cocycle_iff_twisted_sum_is_algebra():
    A = exe02(2)
    V = abelian(["w1", "w2"], ["z"], beta=Matrix([[2]]))
    base = Cocycle2.zero(A, V).with_entry(1, 0, 0, (F(2),))
    failing = 0
    for part, i, j, n in ((0, 0, 0, 2), (1, 0, 0, 1), (1, 0, 1, 1), (2, 0, 1, 2)):
        old = (base.w0, base.w1, base.w2)[part][i][j]
        for delta in product((-1, 0, 1), repeat=n):
            if not any(delta):
                continue
            w = base.with_entry(part, i, j, tuple(a + b for a, b in zip(old, delta)))
            coc = is_cocycle_with_coeffs(A, w)
            axioms = verify_axioms(twisted_sum(A, w))
            assert coc.passed == axioms.passed
            # condition k of the cocycle corresponds to identity k of the algebra
            assert [c.name[-1] for c in coc.failures] == [c.name[-1] for c in axioms.failures]
            failing += not coc.passed
    assert failing == 8


def test_verify_central_extension_detects_non_surjective_projection():
    A, w = exe02_cocycle()
    E = central_extension_from_cocycle(A, w)
    p = E.projection
    bad = GradedMorphism(p.source, p.target, p.f0, Matrix([[1, 0, 0], [0, 0, 0]]))
    rep = verify_central_extension(CentralExtension(A, E.kernel_space, E.total, E.inclusion, bad))
    assert not rep.check("pi surjective").passed
    assert not rep.check("im i = ker pi").passed


def test_verify_central_extension_detects_non_central_kernel():
    # z acts nontrivially: [a2, z] = eps
    A = exe02(2)
    T = exe02_extension(2)
    c11 = [list(r) for r in T.c11]
    c11[1][2] = (F(1),)
    c11[2][1] = (F(-1),)
    T2 = T.replace(c11=c11)
    pi = GradedMorphism(T2, A, Matrix.identity(1), Matrix([[1, 0, 0], [0, 1, 0]]))
    rep = verify_central_extension(extension_from_projection(A, T2, pi))
    assert not rep.check("central").passed


def test_extension_from_projection_matches_cocycle_version():
    A, w = exe02_cocycle()
    T = exe02_extension(2)
    pi = GradedMorphism(T, A, Matrix.identity(1), Matrix([[1, 0, 0], [0, 1, 0]]))
    E = extension_from_projection(A, T, pi)
    assert E.kernel_space.dims == (0, 1)
    assert E.kernel_space.beta.tolist() == [[2]]
    assert verify_central_extension(E).passed


def test_exe02_crossed_module():
    A, w = exe02_cocycle()
    E = central_extension_from_cocycle(A, w)
    cm = crossed_module_from_central_extension(E)
    rep = verify_crossed_module(cm)
    assert rep.passed, rep.to_text()


def test_broken_boundary_fails_crossed_module():
    A, w = exe02_cocycle()
    E = central_extension_from_cocycle(A, w)
    cm = crossed_module_from_central_extension(E)
    d = cm.boundary
    bad = GradedMorphism(d.source, d.target, d.f0, Matrix([[1, 0, 1], [0, 1, 0]]))
    rep = verify_crossed_module(CrossedModule(cm.v_algebra, cm.base, cm.action, bad))
    failed = {c.name for c in rep.failures}
    assert {"cm2", "cm3", "cm4"} <= failed
    assert all(c.witnesses for c in rep.failures)


def test_trivial_crossed_module():
    A = k3(2)
    E = central_extension_from_cocycle(A, Cocycle2.zero(A, abelian([], [])))
    cm = crossed_module_from_central_extension(E)
    assert cm.boundary.same_maps(GradedMorphism.identity(A))
    assert verify_crossed_module(cm).passed


def test_even_kernel_crossed_module():
    A = k3(2)
    E = central_extension_from_cocycle(A, Cocycle2.zero(A, abelian(["w0"], [])))
    assert verify_crossed_module(crossed_module_from_central_extension(E)).passed


def test_identity_crossed_module():
    assert verify_crossed_module(identity_crossed_module(k3(2))).passed


def test_zero_action_and_semidirect():
    A = k3(2)
    V = abelian(["u"], ["v"])
    rho = Action.zero(A, V)
    assert verify_action(A, V, rho).passed
    assert semidirect(A, V, rho).same_structure(direct_sum(A, V))


def test_induced_action_on_extension():
    A, w = exe02_cocycle()
    E = central_extension_from_cocycle(A, w)
    rho = section_action(E)
    assert verify_action(A, E.total, rho).passed
    S = semidirect(A, E.total, rho)
    assert verify_axioms(S).passed
    assert S.dims == (2, 5)


def test_adjoint_action_of_k3():
    A = k3(2)
    rho = multiplication_action(A)
    rep = verify_action(A, A, rho)
    assert rep.passed
    assert verify_axioms(semidirect(A, A, rho)).passed


def test_perturbed_action_rejected():
    A = k3(2)
    rho = multiplication_action(A)
    r1 = list(rho.rho1)
    even_to_odd, odd_to_even = r1[0]
    r1[0] = (even_to_odd, odd_to_even + Matrix([[0, 1]]))
    bad = Action(rho.rho0, tuple(r1))
    rep = verify_action(A, A, bad)
    assert not rep.passed
    assert rep.witnesses
    with pytest.raises(ActionError):
        semidirect(A, A, bad)


def test_sections_are_right_inverses():
    A, w = exe02_cocycle()
    E = central_extension_from_cocycle(A, w)
    for shift in (0, 1, 2):
        s = canonical_section(E, shift)
        assert (E.projection.f0 @ s.f0) == Matrix.identity(1)
        assert (E.projection.f1 @ s.f1) == Matrix.identity(2)
    assert canonical_section(E, 0).f1 != canonical_section(E, 1).f1


def test_section_choice_does_not_change_action():
    A, w = exe02_cocycle()
    E = central_extension_from_cocycle(A, w)
    assert section_action(E, canonical_section(E, 0)) == section_action(E, canonical_section(E, 3))


def test_kernel_is_in_center():
    A, w = exe02_cocycle()
    E = central_extension_from_cocycle(A, w)
    z = center(E.total)
    for v in E.inclusion.f1.columns():
        assert v in z.odd
