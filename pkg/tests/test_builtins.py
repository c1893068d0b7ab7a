from fractions import Fraction

import pytest
import sympy

from antialgebra import builtin, k3, verify_axioms
from antialgebra.builtins import BuiltinError, K1Window, OutOfWindow, exe02_coefficients

F = Fraction


def test_k3_structure_constants_at_mu_2():
    A = k3(2)
    assert A.even == ("eps",) and A.odd == ("a", "b")
    assert A.mul00(A.e(0), A.e(0)) == (1,)
    assert A.mul01(A.e(0), A.o(0)) == (1, 0)
    assert A.mul01(A.e(0), A.o(1)) == (0, F(1, 4))
    assert A.bracket(A.o(0), A.o(1)) == (F(1, 2),)
    assert A.beta.tolist() == [[2, 0], [0, F(1, 2)]]


def test_builtin_lookup():
    assert verify_axioms(builtin("k3", {"mu": "2"})).passed
    assert verify_axioms(builtin("exe02", {"mu": 2})).passed
    assert builtin("exe02-ext").dims == (1, 3)
    assert builtin("exe02-coeffs", {"mu": "3"}).beta.tolist() == [[3]]
    assert exe02_coefficients(2).dims == (0, 1)


def test_builtin_errors():
    with pytest.raises(BuiltinError):
        builtin("k4")
    with pytest.raises(BuiltinError):
        builtin("k3", {"nu": 1})
    with pytest.raises(BuiltinError):
        builtin("k3", {"mu": 0})
    with pytest.raises(BuiltinError):
        builtin("k3", {"mu": "x"})
    with pytest.raises(BuiltinError):
        K1Window(1, 3)


def test_k1_window_relations():
    w = K1Window(2, 2)
    e = lambda n: {("e", n): sympy.Integer(1)}
    a = lambda i: {("a", F(i)): sympy.Integer(1)}
    assert w.mul00(e(0), e(1)) == {("e", 1): 1}
    prod = w.mul01(e(1), a(F(1, 2)))
    assert sympy.simplify(prod[("a", F(3, 2))] - (1 + sympy.sqrt(2)) / 2) == 0
    br = w.bracket(a(F(1, 2)), a(F(-1, 2)))
    # ({-1/2} - {1/2}) / 2 with q = 2
    expected = ((2 ** sympy.Rational(-1, 2) - 1) - (sympy.sqrt(2) - 1)) / 2
    assert sympy.simplify(br[("e", 0)] - expected) == 0
    with pytest.raises(OutOfWindow):
        w.mul00(e(2), e(1))


def test_k1_window_even_identity_instance():
    rep = K1Window(2, 2).verify()
    c = rep.check("hanti01")
    assert c.passed
    assert ("e0", "e1", "e-1") not in [wt.args for wt in c.witnesses]
    assert c.instances > 0 and c.skipped > 0


def test_k1_window_counts_are_reproducible():
    a = K1Window(2, 3).verify()
    b = K1Window(2, 3).verify()
    assert a.to_json() == b.to_json()
    assert sum(c.instances for c in a.checks) >= 50
