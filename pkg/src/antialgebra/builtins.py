"""Named example algebras: K₃(μ), the exe02 pair, and a windowed K(1)."""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Mapping

import sympy

from .algebra import HomLieAntialgebra, build
from .linalg import scalar
from .report import Check, Report, Witness


class BuiltinError(ValueError):
    pass


def _nonzero(mu, label: str = "mu") -> Fraction:
    mu = scalar(mu)
    if mu == 0:
        raise BuiltinError(f"{label} must be nonzero")
    return mu


def k3(mu=2) -> HomLieAntialgebra:
    """Basis {eps; a, b}, a three-dimensional perfect example with a parameter μ ≠ 0."""
    mu = _nonzero(mu)
    half = Fraction(1, 2)
    return build(
        ["eps"], ["a", "b"],
        alpha={"eps": {"eps": 1}},
        beta={"a": {"a": mu}, "b": {"b": 1 / mu}},
        even_even={("eps", "eps"): {"eps": 1}},
        even_odd={("eps", "a"): {"a": half * mu}, ("eps", "b"): {"b": half / mu}},
        odd_odd={("a", "b"): {"eps": half}},
    )


def exe02(mu=2) -> HomLieAntialgebra:
    """Basis {eps; a1, a2} with only [a1, a2] = eps; every other product is zero."""
    mu = _nonzero(mu)
    return build(
        ["eps"], ["a1", "a2"],
        alpha={"eps": {"eps": 1}},
        beta={"a1": {"a1": mu}, "a2": {"a2": 1 / mu}},
        odd_odd={("a1", "a2"): {"eps": 1}},
    )


def exe02_coefficients(mu=2) -> HomLieAntialgebra:
    """The one-dimensional odd coefficient space {0; z} with β(z) = μz."""
    from .algebra import abelian
    from .linalg import Matrix
    mu = _nonzero(mu)
    return abelian([], ["z"], beta=Matrix([[mu]]))


def exe02_extension(mu=2) -> HomLieAntialgebra:
    """The four-dimensional extension {eps; a1, a2, z}, written out by hand."""
    mu = _nonzero(mu)
    return build(
        ["eps"], ["a1", "a2", "z"],
        alpha={"eps": {"eps": 1}},
        beta={"a1": {"a1": mu}, "a2": {"a2": 1 / mu}, "z": {"z": mu}},
        even_odd={("eps", "a1"): {"z": mu}},
        odd_odd={("a1", "a2"): {"eps": 1}},
    )


# ---------------------------------------------------------------------------
# K(1) restricted to a finite window of indices

class OutOfWindow(Exception):
    pass


def _half_int_name(i: Fraction) -> str:
    return f"a{i}"


class K1Window:
    """Relations of the conformal example K(1) on the indices |n| ≤ N, |i| ≤ N − ½.

    Even basis ε_n (n ∈ ℤ), odd basis a_i (i ∈ ℤ + ½).  An identity instance is
    evaluated only when every intermediate index stays inside the window;
    otherwise it is counted as skipped.  Coefficients involve q^i for
    half-integer i, so arithmetic is done in sympy.
    """

    def __init__(self, q=2, radius: int = 3):
        q = scalar(q)
        if q in (0, 1):
            raise BuiltinError("q must differ from 0 and 1")
        if int(radius) != radius or radius < 1:
            raise BuiltinError("window radius must be an integer >= 1")
        self.q = sympy.Rational(q.numerator, q.denominator)
        self.radius = int(radius)
        self.even_indices = tuple(range(-self.radius, self.radius + 1))
        self.odd_indices = tuple(Fraction(2 * k + 1, 2) for k in range(-self.radius, self.radius))

    def _qpow(self, i: Fraction):
        return self.q ** sympy.Rational(i.numerator, i.denominator)

    def qnumber(self, i: Fraction):
        return (self._qpow(i) - 1) / (self.q - 1)

    def _even(self, n) -> tuple:
        if abs(n) > self.radius:
            raise OutOfWindow
        return ("e", int(n))

    def _odd(self, i) -> tuple:
        if abs(i) > self.radius - Fraction(1, 2):
            raise OutOfWindow
        return ("a", Fraction(i))

    # elements are dicts {basis key: sympy coefficient}

    def mul00(self, u: dict, v: dict) -> dict:
        out: dict = {}
        for (_, n), c in u.items():
            for (_, m), d in v.items():
                k = self._even(n + m)
                out[k] = out.get(k, 0) + c * d
        return out

    def mul01(self, u: dict, v: dict) -> dict:
        out: dict = {}
        for (_, n), c in u.items():
            for (_, i), d in v.items():
                k = self._odd(n + i)
                out[k] = out.get(k, 0) + c * d * sympy.Rational(1, 2) * (1 + self._qpow(i))
        return out

    def bracket(self, u: dict, v: dict) -> dict:
        out: dict = {}
        for (_, i), c in u.items():
            for (_, j), d in v.items():
                s = i + j
                if s.denominator != 1:
                    raise AssertionError("odd indices must sum to an integer")
                k = self._even(s)
                coeff = sympy.Rational(1, 2) * (self.qnumber(j) - self.qnumber(i))
                out[k] = out.get(k, 0) + c * d * coeff
        return out

    def twist0(self, u: dict) -> dict:
        return dict(u)

    def twist1(self, u: dict) -> dict:
        return {k: c * (1 + self._qpow(k[1])) for k, c in u.items()}

    @staticmethod
    def _add(*terms: dict) -> dict:
        out: dict = {}
        for t in terms:
            for k, c in t.items():
                out[k] = out.get(k, 0) + c
        return out

    @staticmethod
    def _scale(c, u: dict) -> dict:
        return {k: c * v for k, v in u.items()}

    @staticmethod
    def _is_zero(c) -> bool:
        c = sympy.expand(c)
        return c == 0 or sympy.simplify(c) == 0

    @staticmethod
    def _show(u: dict) -> dict:
        return {("e" + str(k[1]) if k[0] == "e" else _half_int_name(k[1])): str(sympy.radsimp(sympy.expand(c)))
                for k, c in sorted(u.items(), key=lambda kv: (kv[0][0], kv[0][1]))}

    def verify(self) -> Report:
        """Evaluate all four identities on every in-window basis triple."""
        E = [{("e", n): sympy.Integer(1)} for n in self.even_indices]
        O = [{("a", i): sympy.Integer(1)} for i in self.odd_indices]
        en = [f"e{n}" for n in self.even_indices]
        on = [_half_int_name(i) for i in self.odd_indices]
        half = sympy.Rational(1, 2)
        rep = Report("k1-window axioms",
                     dimensions={"q": str(self.q), "radius": self.radius,
                                 "even": len(E), "odd": len(O)})

        def identity(name, args, sides):
            try:
                lhs, rhs = sides()
            except OutOfWindow:
                c.skipped += 1
                return
            c.instances += 1
            diff = self._add(lhs, self._scale(-1, rhs))
            if not all(self._is_zero(v) for v in diff.values()):
                c.witnesses.append(Witness(name, args, self._show(lhs), self._show(rhs)))

        c = rep.add(Check("hanti01"))
        for i, j, k in product(range(len(E)), repeat=3):
            identity("hanti01", (en[i], en[j], en[k]), lambda: (
                self.mul00(self.twist0(E[i]), self.mul00(E[j], E[k])),
                self.mul00(self.mul00(E[i], E[j]), self.twist0(E[k]))))
        c = rep.add(Check("hanti02"))
        for i, j, k in product(range(len(E)), range(len(E)), range(len(O))):
            identity("hanti02", (en[i], en[j], on[k]), lambda: (
                self.mul01(self.twist0(E[i]), self.mul01(E[j], O[k])),
                self._scale(half, self.mul01(self.mul00(E[i], E[j]), self.twist1(O[k])))))
        c = rep.add(Check("hanti03"))
        for i, j, k in product(range(len(E)), range(len(O)), range(len(O))):
            identity("hanti03", (en[i], on[j], on[k]), lambda: (
                self.mul00(self.twist0(E[i]), self.bracket(O[j], O[k])),
                self._add(self.bracket(self.mul01(E[i], O[j]), self.twist1(O[k])),
                          self.bracket(self.twist1(O[j]), self.mul01(E[i], O[k])))))
        c = rep.add(Check("hanti04"))
        for i, j, k in product(range(len(O)), repeat=3):
            identity("hanti04", (on[i], on[j], on[k]), lambda: (
                self._add(self.mul01(self.bracket(O[j], O[k]), self.twist1(O[i])),
                          self.mul01(self.bracket(O[k], O[i]), self.twist1(O[j])),
                          self.mul01(self.bracket(O[i], O[j]), self.twist1(O[k]))),
                {}))
        return rep


BUILTIN_NAMES = ("k3", "exe02", "exe02-ext", "exe02-coeffs", "k1-window")


def builtin(name: str, params: Mapping[str, object] | None = None):
    """Look up a named example; parameters are given as strings or numbers."""
    params = dict(params or {})

    def take(key, default):
        value = params.pop(key, default)
        try:
            return scalar(value) if not isinstance(value, str) else Fraction(value)
        except (ValueError, ZeroDivisionError, TypeError) as exc:
            raise BuiltinError(f"parameter {key}={value!r} is not a rational") from exc

    if name == "k3":
        out = k3(take("mu", 2))
    elif name == "exe02":
        out = exe02(take("mu", 2))
    elif name == "exe02-ext":
        out = exe02_extension(take("mu", 2))
    elif name == "exe02-coeffs":
        out = exe02_coefficients(take("mu", 2))
    elif name == "k1-window":
        radius = take("N", 3)
        out = K1Window(take("q", 2), radius)
    else:
        raise BuiltinError(f"unknown builtin {name!r}; choose from {', '.join(BUILTIN_NAMES)}")
    if params:
        raise BuiltinError(f"unknown parameter(s) for {name}: {', '.join(sorted(params))}")
    return out
