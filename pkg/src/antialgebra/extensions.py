"""Central extensions, actions, semidirect products and crossed modules."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .algebra import (
    GradedMorphism, HomLieAntialgebra, _fresh_names, center,
    homomorphism_report, verify_axioms,
)
from .homology import Cocycle2, is_cocycle_with_coeffs
from .linalg import (
    Matrix, Subspace, Vector, image_basis, kernel_basis, rank, solve, subspace_equal,
    vadd, vscale, vsub, zero_vector,
)
from .report import Check, Report, Witness

HALF = Fraction(1, 2)


class CocycleError(ValueError):
    def __init__(self, report: Report):
        names = ", ".join(c.name for c in report.failures)
        first = report.witnesses[0] if report.witnesses else None
        where = f" at ({', '.join(first.args)})" if first else ""
        super().__init__(f"not a 2-cocycle: {names} fails{where}")
        self.report = report


class ActionError(ValueError):
    def __init__(self, report: Report):
        super().__init__("not an action: " + ", ".join(c.name for c in report.failures))
        self.report = report


# ---------------------------------------------------------------------------
# Extensions by a cocycle

def twisted_sum(A: HomLieAntialgebra, w: Cocycle2) -> HomLieAntialgebra:
    """𝔞 ⊕ V with products (a, v)·(a', v') = (a·a', ω(a, a')); V is inert.

    No cocycle check is made, so this also builds the algebra for
    non-cocycles (used to test the equivalence with the axioms).
    """
    V = w.coefficients
    taken = set(A.even + A.odd)
    v_even, v_odd = _fresh_names(V.even, taken), _fresh_names(V.odd, taken)
    D0, D1 = A.d0 + V.d0, A.d1 + V.d1

    def table(inner, values, n_a, n_b, out_a, out_v):
        rows = []
        for i in range(n_a[0] + n_b[0]):
            row = []
            for j in range(n_a[1] + n_b[1]):
                if i < n_a[0] and j < n_a[1]:
                    row.append(inner[i][j] + values[i][j])
                else:
                    row.append(zero_vector(out_a + out_v))
            rows.append(row)
        return rows

    c00 = table(A.c00, w.w0, (A.d0, A.d0), (V.d0, V.d0), A.d0, V.d0)
    c01 = table(A.c01, w.w1, (A.d0, A.d1), (V.d0, V.d1), A.d1, V.d1)
    c11 = table(A.c11, w.w2, (A.d1, A.d1), (V.d1, V.d1), A.d0, V.d0)
    assert len(c00) == D0 and len(c11) == D1
    return HomLieAntialgebra(A.even + tuple(v_even), A.odd + tuple(v_odd), c00, c01, c11,
                             Matrix.block_diagonal(A.alpha, V.alpha),
                             Matrix.block_diagonal(A.beta, V.beta))


@dataclass(frozen=True)
class CentralExtension:
    """0 → V → total → base → 0 given by the inclusion and projection blocks."""

    base: HomLieAntialgebra
    kernel_space: HomLieAntialgebra
    total: HomLieAntialgebra
    inclusion: GradedMorphism
    projection: GradedMorphism
    cocycle: Cocycle2 | None = None


def _inclusion_projection(A, V, total):
    i0 = Matrix([[0] * V.d0] * A.d0 + [list(r) for r in Matrix.identity(V.d0).data], V.d0) \
        if total.d0 else Matrix.zeros(0, V.d0)
    i1 = Matrix([[0] * V.d1] * A.d1 + [list(r) for r in Matrix.identity(V.d1).data], V.d1) \
        if total.d1 else Matrix.zeros(0, V.d1)
    p0 = Matrix([list(r) + [0] * V.d0 for r in Matrix.identity(A.d0).data], total.d0) \
        if A.d0 else Matrix.zeros(0, total.d0)
    p1 = Matrix([list(r) + [0] * V.d1 for r in Matrix.identity(A.d1).data], total.d1) \
        if A.d1 else Matrix.zeros(0, total.d1)
    return GradedMorphism(V, total, i0, i1), GradedMorphism(total, A, p0, p1)


def central_extension_from_cocycle(A: HomLieAntialgebra, w: Cocycle2) -> CentralExtension:
    """Build 𝔞 ⊕_ω V; raises CocycleError with the failing conditions otherwise."""
    rep = is_cocycle_with_coeffs(A, w)
    if not rep.passed:
        raise CocycleError(rep)
    V = w.coefficients
    total = twisted_sum(A, w)
    inc, proj = _inclusion_projection(A, V, total)
    return CentralExtension(A, V, total, inc, proj, w)


def extension_from_projection(base: HomLieAntialgebra, total: HomLieAntialgebra,
                              projection: GradedMorphism) -> CentralExtension:
    """Wrap a hand-built total algebra and projection; the kernel is ker π.

    The kernel inherits the twists of the total algebra (restricted when ker π
    is invariant; otherwise the restriction is taken on coordinates and the
    verification report will flag the projection).
    """
    k0 = kernel_basis(projection.f0) if projection.f0.rows else Subspace.full(total.d0)
    k1 = kernel_basis(projection.f1) if projection.f1.rows else Subspace.full(total.d1)
    b0, b1 = k0.vectors, k1.vectors

    def restrict(m: Matrix, basis: list[Vector], sub: Subspace) -> Matrix:
        cols = []
        for v in basis:
            c = sub.coordinates(m.apply(v))
            cols.append(c if c is not None else zero_vector(sub.dim))
        return Matrix.from_columns(cols, sub.dim)

    from .algebra import abelian
    V = abelian([f"k{i}" for i in range(k0.dim)], [f"k{len(b0) + i}" for i in range(k1.dim)],
                restrict(total.alpha, b0, k0), restrict(total.beta, b1, k1))
    inc = GradedMorphism(V, total, Matrix.from_columns(b0, total.d0),
                         Matrix.from_columns(b1, total.d1))
    return CentralExtension(base, V, total, inc, projection)


def verify_central_extension(E: CentralExtension) -> Report:
    rep = Report("central extension",
                 dimensions={"base": list(E.base.dims), "kernel": list(E.kernel_space.dims),
                             "total": list(E.total.dims)})
    rep.extend(verify_axioms(E.total), "total.")
    i, p = E.inclusion, E.projection

    c = rep.add(Check("i injective"))
    c.instances = 1
    if not i.is_injective():
        c.witnesses.append(Witness("i injective", (), list(i.f0.shape) + list(i.f1.shape),
                                   [rank(i.f0), rank(i.f1)]))
    c = rep.add(Check("pi surjective"))
    c.instances = 1
    if not p.is_surjective():
        c.witnesses.append(Witness("pi surjective", (), [E.base.d0, E.base.d1],
                                   [rank(p.f0), rank(p.f1)]))
    c = rep.add(Check("im i = ker pi"))
    for label, inc, proj, n in (("even", i.f0, p.f0, E.total.d0), ("odd", i.f1, p.f1, E.total.d1)):
        c.instances += 1
        im = image_basis(inc) if inc.cols else Subspace.zero(n)
        ker = kernel_basis(proj) if proj.rows else Subspace.full(n)
        if not subspace_equal(im, ker):
            c.witnesses.append(Witness("im i = ker pi", (label,), im.dim, ker.dim))
    rep.extend(homomorphism_report(i), "i.")
    rep.extend(homomorphism_report(p), "pi.")

    c = rep.add(Check("central"))
    z = center(E.total)
    for label, inc, zsub, n in (("even", i.f0, z.even, E.total.d0), ("odd", i.f1, z.odd, E.total.d1)):
        for k, v in enumerate(inc.columns()):
            c.instances += 1
            if v not in zsub:
                c.witnesses.append(Witness("central", (f"{label}[{k}]",), v, None))
    return rep


# ---------------------------------------------------------------------------
# Actions and semidirect products

@dataclass(frozen=True)
class Action:
    """ρ₀(x) acts on V₀ and V₁; ρ₁(y) maps V₀ → V₁ and V₁ → V₀.

    ``rho0[i] = (on_even, on_odd)`` for the i-th even basis vector of 𝔞 and
    ``rho1[i] = (even_to_odd, odd_to_even)`` for the i-th odd one.  Both are
    extended linearly.
    """

    rho0: tuple[tuple[Matrix, Matrix], ...]
    rho1: tuple[tuple[Matrix, Matrix], ...]

    def _combine(self, table, x, which, shape) -> Matrix:
        out = Matrix.zeros(*shape)
        for c, pair in zip(x, table):
            if c:
                out = out + pair[which].scale(c)
        return out

    def r0_even(self, x, V) -> Matrix:
        return self._combine(self.rho0, x, 0, (V.d0, V.d0))

    def r0_odd(self, x, V) -> Matrix:
        return self._combine(self.rho0, x, 1, (V.d1, V.d1))

    def r1_even(self, y, V) -> Matrix:
        return self._combine(self.rho1, y, 0, (V.d1, V.d0))

    def r1_odd(self, y, V) -> Matrix:
        return self._combine(self.rho1, y, 1, (V.d0, V.d1))

    @classmethod
    def zero(cls, A: HomLieAntialgebra, V: HomLieAntialgebra) -> "Action":
        return cls(tuple((Matrix.zeros(V.d0, V.d0), Matrix.zeros(V.d1, V.d1)) for _ in range(A.d0)),
                   tuple((Matrix.zeros(V.d1, V.d0), Matrix.zeros(V.d0, V.d1)) for _ in range(A.d1)))


def multiplication_action(A: HomLieAntialgebra) -> Action:
    """𝔞 acting on itself by its own products."""
    rho0, rho1 = [], []
    for i in range(A.d0):
        x = A.e(i)
        m0 = Matrix.from_columns([A.mul00(x, A.e(j)) for j in range(A.d0)], A.d0)
        m1 = Matrix.from_columns([A.mul01(x, A.o(j)) for j in range(A.d1)], A.d1)
        rho0.append((m0, m1))
    for i in range(A.d1):
        y = A.o(i)
        m0 = Matrix.from_columns([A.mul01(A.e(j), y) for j in range(A.d0)], A.d1)
        m1 = Matrix.from_columns([A.bracket(y, A.o(j)) for j in range(A.d1)], A.d0)
        rho1.append((m0, m1))
    return Action(tuple(rho0), tuple(rho1))


def section_action(E: CentralExtension, section: "Section | None" = None) -> Action:
    """Action of the base on the total algebra: a acts by multiplication with s(a).

    Any two sections differ by a central element, so the result does not
    depend on the choice.
    """
    T = E.total
    s = section or canonical_section(E)
    rho0, rho1 = [], []
    for i in range(E.base.d0):
        x = s.f0.column(i)
        m0 = Matrix.from_columns([T.mul00(x, T.e(j)) for j in range(T.d0)], T.d0)
        m1 = Matrix.from_columns([T.mul01(x, T.o(j)) for j in range(T.d1)], T.d1)
        rho0.append((m0, m1))
    for i in range(E.base.d1):
        y = s.f1.column(i)
        m0 = Matrix.from_columns([T.mul01(T.e(j), y) for j in range(T.d0)], T.d1)
        m1 = Matrix.from_columns([T.bracket(y, T.o(j)) for j in range(T.d1)], T.d0)
        rho1.append((m0, m1))
    return Action(tuple(rho0), tuple(rho1))


def _semidirect_unchecked(A: HomLieAntialgebra, V: HomLieAntialgebra, rho: Action) -> HomLieAntialgebra:
    taken = set(A.even + A.odd)
    v_even, v_odd = _fresh_names(V.even, taken), _fresh_names(V.odd, taken)
    D0, D1 = A.d0 + V.d0, A.d1 + V.d1
    zA0, zA1 = zero_vector(A.d0), zero_vector(A.d1)

    def ev(k):  # even basis vector of the sum split as (a-part, v-part)
        return (A.e(k), zero_vector(V.d0)) if k < A.d0 else (zA0, V.e(k - A.d0))

    def od(k):
        return (A.o(k), zero_vector(V.d1)) if k < A.d1 else (zA1, V.o(k - A.d1))

    c00 = []
    for i in range(D0):
        row = []
        for j in range(D0):
            (x1, u1), (x2, u2) = ev(i), ev(j)
            v = vadd(vadd(rho.r0_even(x1, V).apply(u2), rho.r0_even(x2, V).apply(u1)), V.mul00(u1, u2))
            row.append(A.mul00(x1, x2) + v)
        c00.append(row)
    c01 = []
    for i in range(D0):
        row = []
        for j in range(D1):
            (x1, u1), (y1, v1) = ev(i), od(j)
            v = vadd(vadd(rho.r0_odd(x1, V).apply(v1), rho.r1_even(y1, V).apply(u1)), V.mul01(u1, v1))
            row.append(A.mul01(x1, y1) + v)
        c01.append(row)
    c11 = []
    for i in range(D1):
        row = []
        for j in range(D1):
            (y1, v1), (y2, v2) = od(i), od(j)
            v = vadd(vsub(rho.r1_odd(y1, V).apply(v2), rho.r1_odd(y2, V).apply(v1)), V.bracket(v1, v2))
            row.append(A.bracket(y1, y2) + v)
        c11.append(row)
    return HomLieAntialgebra(A.even + tuple(v_even), A.odd + tuple(v_odd), c00, c01, c11,
                             Matrix.block_diagonal(A.alpha, V.alpha),
                             Matrix.block_diagonal(A.beta, V.beta))


def _check_action_shapes(A, V, rho: Action) -> None:
    if len(rho.rho0) != A.d0 or len(rho.rho1) != A.d1:
        raise ValueError("action has the wrong number of operators")
    for m0, m1 in rho.rho0:
        if m0.shape != (V.d0, V.d0) or m1.shape != (V.d1, V.d1):
            raise ValueError("even operator of the wrong shape")
    for m0, m1 in rho.rho1:
        if m0.shape != (V.d1, V.d0) or m1.shape != (V.d0, V.d1):
            raise ValueError("odd operator of the wrong shape")


def verify_action(A: HomLieAntialgebra, V: HomLieAntialgebra, rho: Action) -> Report:
    """The seven action identities on basis tuples plus the axioms of 𝔞 ⋉ V."""
    _check_action_shapes(A, V, rho)
    rep = Report("action", dimensions={"base": list(A.dims), "module": list(V.dims)})
    e, o, ve, vo = A.e, A.o, V.e, V.o
    E, O, VE, VO = A.even, A.odd, V.even, V.odd
    aV, bV = V.twist0, V.twist1
    r0e = lambda x, u: rho.r0_even(x, V).apply(u)  # noqa: E731
    r0o = lambda x, v: rho.r0_odd(x, V).apply(v)  # noqa: E731
    r1e = lambda y, u: rho.r1_even(y, V).apply(u)  # noqa: E731
    r1o = lambda y, v: rho.r1_odd(y, V).apply(v)  # noqa: E731

    def run(name, tuples, sides):
        c = rep.add(Check(name))
        for args, idx in tuples:
            c.instances += 1
            lhs, rhs = sides(*idx)
            if lhs != rhs:
                c.witnesses.append(Witness(name, args, lhs, rhs))

    def tup(*spaces):
        return (((tuple(names[k] for names, k in zip(spaces, idx))), idx)
                for idx in product(*(range(len(s)) for s in spaces)))

    run("action01", tup(E, VE, VE), lambda i, j, k: (
        r0e(A.twist0(e(i)), V.mul00(ve(j), ve(k))), V.mul00(r0e(e(i), ve(j)), aV(ve(k)))))
    run("action021", tup(E, VE, VO), lambda i, j, k: (
        r0o(A.twist0(e(i)), V.mul01(ve(j), vo(k))),
        vscale(HALF, V.mul01(r0e(e(i), ve(j)), bV(vo(k))))))
    run("action022", tup(O, VE, VE), lambda i, j, k: (
        V.mul01(aV(ve(j)), r1e(o(i), ve(k))), vscale(HALF, r1e(A.twist1(o(i)), V.mul00(ve(j), ve(k))))))
    run("action023", tup(E, VO, VE), lambda i, j, k: (
        V.mul01(aV(ve(k)), r0o(e(i), vo(j))), vscale(HALF, V.mul01(r0e(e(i), ve(k)), bV(vo(j))))))
    run("action031", tup(E, VO, VO), lambda i, j, k: (
        r0e(A.twist0(e(i)), V.bracket(vo(j), vo(k))),
        vadd(V.bracket(r0o(e(i), vo(j)), bV(vo(k))), V.bracket(bV(vo(j)), r0o(e(i), vo(k))))))
    run("action032", tup(O, VE, VO), lambda i, j, k: (
        r1o(A.twist1(o(i)), V.mul01(ve(j), vo(k))),
        vsub(V.mul00(aV(ve(j)), r1o(o(i), vo(k))), V.bracket(r1e(o(i), ve(j)), bV(vo(k))))))
    run("action04", tup(O, VO, VO), lambda i, j, k: (
        r1e(A.twist1(o(i)), V.bracket(vo(j), vo(k))),
        vsub(V.mul01(r1o(o(i), vo(k)), bV(vo(j))), V.mul01(r1o(o(i), vo(j)), bV(vo(k))))))

    rep.extend(verify_axioms(_semidirect_unchecked(A, V, rho)), "semidirect.")
    return rep


def semidirect(A: HomLieAntialgebra, V: HomLieAntialgebra, rho: Action,
               check: bool = True) -> HomLieAntialgebra:
    """𝔞 ⋉ V; raises ActionError when ``check`` is on and the action fails."""
    if check:
        rep = verify_action(A, V, rho)
        if not rep.passed:
            raise ActionError(rep)
    return _semidirect_unchecked(A, V, rho)


# ---------------------------------------------------------------------------
# Sections and crossed modules

@dataclass(frozen=True)
class Section:
    """A grade-preserving right inverse of a projection (not a homomorphism)."""

    f0: Matrix
    f1: Matrix


def canonical_section(E: CentralExtension, shift: Fraction | int = 0) -> Section:
    """Solve π(s(e)) = e for each base basis vector with free variables zero.

    A nonzero ``shift`` adds shift × (sum of the kernel basis of π) to every
    image, giving a second, different section whenever the kernel is nonzero.
    """
    p = E.projection
    cols = []
    for f, n, ker_n in ((p.f0, E.base.d0, E.total.d0), (p.f1, E.base.d1, E.total.d1)):
        ker = kernel_basis(f) if f.rows else Subspace.full(ker_n)
        extra = zero_vector(ker_n)
        for v in ker.vectors:
            extra = vadd(extra, v)
        images = []
        for k in range(n):
            target = tuple(Fraction(int(k == r)) for r in range(n))
            x = solve(f, target)
            if x is None:
                raise ValueError("projection is not surjective; no section exists")
            images.append(vadd(x, vscale(shift, extra)))
        cols.append(Matrix.from_columns(images, ker_n))
    return Section(cols[0], cols[1])


@dataclass(frozen=True)
class CrossedModule:
    v_algebra: HomLieAntialgebra
    base: HomLieAntialgebra
    action: Action
    boundary: GradedMorphism


def crossed_module_from_central_extension(E: CentralExtension) -> CrossedModule:
    rep = verify_central_extension(E)
    if not rep.passed:
        raise ValueError("not a central extension: " + ", ".join(c.name for c in rep.failures))
    return CrossedModule(E.total, E.base, section_action(E), E.projection)


def identity_crossed_module(A: HomLieAntialgebra) -> CrossedModule:
    return CrossedModule(A, A, multiplication_action(A), GradedMorphism.identity(A))


def verify_crossed_module(cm: CrossedModule) -> Report:
    V, A, rho, d = cm.v_algebra, cm.base, cm.action, cm.boundary
    rep = Report("crossed module", dimensions={"module": list(V.dims), "base": list(A.dims)})
    rep.extend(homomorphism_report(d), "boundary.")
    e, o, ve, vo = A.e, A.o, V.e, V.o
    E, O, VE, VO = A.even, A.odd, V.even, V.odd
    d0, d1 = d.f0.apply, d.f1.apply
    r0e = lambda x, u: rho.r0_even(x, V).apply(u)  # noqa: E731
    r0o = lambda x, v: rho.r0_odd(x, V).apply(v)  # noqa: E731
    r1e = lambda y, u: rho.r1_even(y, V).apply(u)  # noqa: E731
    r1o = lambda y, v: rho.r1_odd(y, V).apply(v)  # noqa: E731

    def run(name, spaces, sides):
        c = rep.add(Check(name))
        for idx in product(*(range(len(s)) for s in spaces)):
            c.instances += 1
            lhs, rhs = sides(*idx)
            if lhs != rhs:
                c.witnesses.append(Witness(name, tuple(s[k] for s, k in zip(spaces, idx)), lhs, rhs))

    run("cm1", (E, VE), lambda i, j: (d0(r0e(e(i), ve(j))), A.mul00(e(i), d0(ve(j)))))
    run("cm2", (E, VO), lambda i, j: (d1(r0o(e(i), vo(j))), A.mul01(e(i), d1(vo(j)))))
    run("cm3", (O, VE), lambda i, j: (d1(r1e(o(i), ve(j))), A.mul01(d0(ve(j)), o(i))))
    run("cm4", (O, VO), lambda i, j: (d0(r1o(o(i), vo(j))), A.bracket(o(i), d1(vo(j)))))
    run("pei1", (VE, VE), lambda i, j: (r0e(d0(ve(i)), ve(j)), V.mul00(ve(i), ve(j))))
    run("pei2", (VO, VO), lambda i, j: (r1o(d1(vo(i)), vo(j)), V.bracket(vo(i), vo(j))))
    run("pei3", (VE, VO), lambda i, j: (r0o(d0(ve(i)), vo(j)), V.mul01(ve(i), vo(j))))
    run("pei3'", (VE, VO), lambda i, j: (r1e(d1(vo(j)), ve(i)), V.mul01(ve(i), vo(j))))
    rep.extend(verify_action(A, V, rho), "action.")
    return rep


__all__ = [
    "CocycleError", "ActionError", "twisted_sum", "CentralExtension",
    "central_extension_from_cocycle", "extension_from_projection", "verify_central_extension",
    "Action", "multiplication_action", "section_action", "semidirect", "verify_action",
    "Section", "canonical_section", "CrossedModule", "crossed_module_from_central_extension",
    "identity_crossed_module", "verify_crossed_module",
]
