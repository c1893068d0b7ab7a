"""Hom-Lie antialgebras given by structure constants.

An algebra has an even part 𝔞₀ (dimension d0) and an odd part 𝔞₁ (dimension d1)
with three bilinear operations

* ``x·x'``  : 𝔞₀ × 𝔞₀ → 𝔞₀, table ``c00[i][j]`` (symmetric),
* ``x·y``   : 𝔞₀ × 𝔞₁ → 𝔞₁, table ``c01[i][j]``,
* ``[y,y']``: 𝔞₁ × 𝔞₁ → 𝔞₀, table ``c11[i][j]`` (antisymmetric),

and twisting maps ``alpha`` (d0×d0) and ``beta`` (d1×d1).  Matrices act on
column vectors, so ``alpha.column(j)`` is the image of the j-th even basis
vector.  The odd-even product ``y·x`` is ``x·y`` by supercommutativity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Mapping, Sequence

from .linalg import (
    ZERO, Matrix, Subspace, Vector, is_zero, kernel_basis, lincomb, scalar, subspace_le,
    subspace_sum, unit_vector, vadd, vscale, vsub, zero_vector,
)
from .report import Check, Report, Witness

Table = tuple  # tuple[tuple[Vector, ...], ...]


class StructureError(ValueError):
    """The structure constants do not describe a supercommutative algebra."""

    def __init__(self, message: str, witness: Witness | None = None):
        super().__init__(message)
        self.witness = witness


def _table(rows: Sequence[Sequence[Sequence]], n1: int, n2: int, n3: int, label: str) -> Table:
    if len(rows) != n1 or any(len(r) != n2 for r in rows):
        raise StructureError(f"{label} must be a {n1}x{n2}x{n3} table")
    out = []
    for r in rows:
        row = []
        for v in r:
            v = tuple(scalar(a) for a in v)
            if len(v) != n3:
                raise StructureError(f"{label} must be a {n1}x{n2}x{n3} table")
            row.append(v)
        out.append(tuple(row))
    return tuple(out)


def _bilinear(table: Table, u: Sequence[Fraction], v: Sequence[Fraction], n: int) -> Vector:
    out = [ZERO] * n
    for i, a in enumerate(u):
        if not a:
            continue
        for j, b in enumerate(v):
            if not b:
                continue
            c = a * b
            for k, t in enumerate(table[i][j]):
                if t:
                    out[k] += c * t
    return tuple(out)


class HomLieAntialgebra:
    """A finite-dimensional Hom-Lie antialgebra presented by structure constants.

    Supercommutativity is enforced on construction; the four defining
    identities are not assumed and are checked by :func:`verify_axioms`.
    """

    __slots__ = ("even", "odd", "c00", "c01", "c11", "alpha", "beta")

    def __init__(self, even: Sequence[str], odd: Sequence[str], c00, c01, c11,
                 alpha: Matrix, beta: Matrix):
        self.even = tuple(even)
        self.odd = tuple(odd)
        names = self.even + self.odd
        if len(set(names)) != len(names):
            raise StructureError(f"basis names must be unique: {names}")
        d0, d1 = len(self.even), len(self.odd)
        self.c00 = _table(c00, d0, d0, d0, "c00")
        self.c01 = _table(c01, d0, d1, d1, "c01")
        self.c11 = _table(c11, d1, d1, d0, "c11")
        if alpha.shape != (d0, d0) or beta.shape != (d1, d1):
            raise StructureError(f"alpha must be {d0}x{d0} and beta {d1}x{d1}")
        self.alpha = alpha
        self.beta = beta
        for i in range(d0):
            for j in range(i, d0):
                if self.c00[i][j] != self.c00[j][i]:
                    raise StructureError(
                        f"even product is not symmetric at ({self.even[i]}, {self.even[j]})",
                        Witness("supercommutativity", (self.even[i], self.even[j]),
                                self.c00[i][j], self.c00[j][i]))
        for i in range(d1):
            for j in range(i, d1):
                if self.c11[i][j] != vscale(-1, self.c11[j][i]):
                    raise StructureError(
                        f"odd bracket is not antisymmetric at ({self.odd[i]}, {self.odd[j]})",
                        Witness("supercommutativity", (self.odd[i], self.odd[j]),
                                self.c11[i][j], vscale(-1, self.c11[j][i])))

    @property
    def d0(self) -> int:
        return len(self.even)

    @property
    def d1(self) -> int:
        return len(self.odd)

    @property
    def dims(self) -> tuple[int, int]:
        return self.d0, self.d1

    def mul00(self, x, x2) -> Vector:
        return _bilinear(self.c00, x, x2, self.d0)

    def mul01(self, x, y) -> Vector:
        return _bilinear(self.c01, x, y, self.d1)

    def bracket(self, y, y2) -> Vector:
        return _bilinear(self.c11, y, y2, self.d0)

    def twist0(self, x) -> Vector:
        return self.alpha.apply(x)

    def twist1(self, y) -> Vector:
        return self.beta.apply(y)

    def e(self, i: int) -> Vector:
        return unit_vector(self.d0, i)

    def o(self, i: int) -> Vector:
        return unit_vector(self.d1, i)

    def has_zero_products(self) -> bool:
        return all(is_zero(v) for t in (self.c00, self.c01, self.c11) for r in t for v in r)

    def replace(self, **changes) -> "HomLieAntialgebra":
        fields = {k: getattr(self, k) for k in self.__slots__}
        fields.update(changes)
        return HomLieAntialgebra(**fields)

    def __eq__(self, other) -> bool:
        return isinstance(other, HomLieAntialgebra) and all(
            getattr(self, k) == getattr(other, k) for k in self.__slots__)

    def __hash__(self) -> int:
        return hash(tuple(getattr(self, k) for k in self.__slots__))

    def same_structure(self, other: "HomLieAntialgebra") -> bool:
        """Equal structure constants, ignoring basis names."""
        return all(getattr(self, k) == getattr(other, k)
                   for k in ("c00", "c01", "c11", "alpha", "beta"))

    def __repr__(self) -> str:
        return f"HomLieAntialgebra(even={list(self.even)}, odd={list(self.odd)})"


def build(even: Sequence[str], odd: Sequence[str], *,
          alpha: Mapping[str, Mapping[str, object]] | None = None,
          beta: Mapping[str, Mapping[str, object]] | None = None,
          even_even: Mapping[tuple[str, str], Mapping[str, object]] = (),
          even_odd: Mapping[tuple[str, str], Mapping[str, object]] = (),
          odd_odd: Mapping[tuple[str, str], Mapping[str, object]] = ()) -> HomLieAntialgebra:
    """Build an algebra from sparse name-keyed tables.

    Each unordered pair is given once; the mirror entry of ``even_even``
    (symmetric) and ``odd_odd`` (antisymmetric) is filled in.  Twists default
    to the identity when omitted entirely.
    """
    even, odd = list(even), list(odd)
    ie = {n: i for i, n in enumerate(even)}
    io = {n: i for i, n in enumerate(odd)}
    d0, d1 = len(even), len(odd)

    def combo(entries, index, n):
        v = [ZERO] * n
        for name, c in entries.items():
            v[index[name]] += scalar(c)
        return tuple(v)

    def twist(entries, index, n):
        if entries is None:
            return Matrix.identity(n)
        cols = [combo(entries.get(name, {}), index, n) for name in index]
        return Matrix.from_columns(cols, n)

    c00 = [[zero_vector(d0)] * d0 for _ in range(d0)]
    for (p, q), entries in dict(even_even).items():
        v = combo(entries, ie, d0)
        c00[ie[p]][ie[q]] = v
        c00[ie[q]][ie[p]] = v
    c01 = [[zero_vector(d1)] * d1 for _ in range(d0)]
    for (p, q), entries in dict(even_odd).items():
        c01[ie[p]][io[q]] = combo(entries, io, d1)
    c11 = [[zero_vector(d0)] * d1 for _ in range(d1)]
    for (p, q), entries in dict(odd_odd).items():
        v = combo(entries, ie, d0)
        c11[io[p]][io[q]] = v
        c11[io[q]][io[p]] = vscale(-1, v)
    return HomLieAntialgebra(even, odd, c00, c01, c11, twist(alpha, ie, d0), twist(beta, io, d1))


def abelian(even: Sequence[str], odd: Sequence[str], alpha: Matrix | None = None,
            beta: Matrix | None = None) -> HomLieAntialgebra:
    """A graded space with twists and all products zero."""
    d0, d1 = len(even), len(odd)
    return HomLieAntialgebra(
        even, odd, [[zero_vector(d0)] * d0 for _ in range(d0)],
        [[zero_vector(d1)] * d1 for _ in range(d0)], [[zero_vector(d0)] * d1 for _ in range(d1)],
        alpha if alpha is not None else Matrix.identity(d0),
        beta if beta is not None else Matrix.identity(d1))


# ---------------------------------------------------------------------------
# The defining identities

def verify_axioms(A: HomLieAntialgebra) -> Report:
    """Evaluate the four twisted identities on every basis triple.

    By multilinearity this decides the identities on all elements.
    """
    E, O = A.even, A.odd
    ev, od = A.e, A.o
    rep = Report("axioms", dimensions={"even": A.d0, "odd": A.d1})

    c = rep.add(Check("hanti01"))
    for i, j, k in product(range(A.d0), repeat=3):
        c.instances += 1
        lhs = A.mul00(A.twist0(ev(i)), A.mul00(ev(j), ev(k)))
        rhs = A.mul00(A.mul00(ev(i), ev(j)), A.twist0(ev(k)))
        if lhs != rhs:
            c.witnesses.append(Witness("hanti01", (E[i], E[j], E[k]), lhs, rhs))

    c = rep.add(Check("hanti02"))
    for i, j, k in product(range(A.d0), range(A.d0), range(A.d1)):
        c.instances += 1
        lhs = A.mul01(A.twist0(ev(i)), A.mul01(ev(j), od(k)))
        rhs = vscale(Fraction(1, 2), A.mul01(A.mul00(ev(i), ev(j)), A.twist1(od(k))))
        if lhs != rhs:
            c.witnesses.append(Witness("hanti02", (E[i], E[j], O[k]), lhs, rhs))

    c = rep.add(Check("hanti03"))
    for i, j, k in product(range(A.d0), range(A.d1), range(A.d1)):
        c.instances += 1
        lhs = A.mul00(A.twist0(ev(i)), A.bracket(od(j), od(k)))
        rhs = vadd(A.bracket(A.mul01(ev(i), od(j)), A.twist1(od(k))),
                   A.bracket(A.twist1(od(j)), A.mul01(ev(i), od(k))))
        if lhs != rhs:
            c.witnesses.append(Witness("hanti03", (E[i], O[j], O[k]), lhs, rhs))

    c = rep.add(Check("hanti04"))
    for i, j, k in product(range(A.d1), repeat=3):
        c.instances += 1
        # odd·even is the even·odd product by supercommutativity
        lhs = A.mul01(A.bracket(od(j), od(k)), A.twist1(od(i)))
        lhs = vadd(lhs, A.mul01(A.bracket(od(k), od(i)), A.twist1(od(j))))
        lhs = vadd(lhs, A.mul01(A.bracket(od(i), od(j)), A.twist1(od(k))))
        if not is_zero(lhs):
            c.witnesses.append(Witness("hanti04", (O[i], O[j], O[k]), lhs, zero_vector(A.d1)))
    return rep


def multiplicativity_report(A: HomLieAntialgebra) -> Report:
    rep = Report("multiplicativity")
    E, O, ev, od = A.even, A.odd, A.e, A.o
    c = rep.add(Check("alpha(x.x)"))
    for i, j in product(range(A.d0), repeat=2):
        c.instances += 1
        lhs, rhs = A.twist0(A.mul00(ev(i), ev(j))), A.mul00(A.twist0(ev(i)), A.twist0(ev(j)))
        if lhs != rhs:
            c.witnesses.append(Witness("alpha(x.x)", (E[i], E[j]), lhs, rhs))
    c = rep.add(Check("beta(x.y)"))
    for i, j in product(range(A.d0), range(A.d1)):
        c.instances += 1
        lhs, rhs = A.twist1(A.mul01(ev(i), od(j))), A.mul01(A.twist0(ev(i)), A.twist1(od(j)))
        if lhs != rhs:
            c.witnesses.append(Witness("beta(x.y)", (E[i], O[j]), lhs, rhs))
    c = rep.add(Check("alpha([y,y])"))
    for i, j in product(range(A.d1), repeat=2):
        c.instances += 1
        lhs, rhs = A.twist0(A.bracket(od(i), od(j))), A.bracket(A.twist1(od(i)), A.twist1(od(j)))
        if lhs != rhs:
            c.witnesses.append(Witness("alpha([y,y])", (O[i], O[j]), lhs, rhs))
    return rep


def is_multiplicative(A: HomLieAntialgebra) -> bool:
    return multiplicativity_report(A).passed


# ---------------------------------------------------------------------------
# Morphisms

@dataclass(frozen=True)
class GradedMorphism:
    """A grade-preserving linear map given by its even and odd blocks."""

    source: HomLieAntialgebra
    target: HomLieAntialgebra
    f0: Matrix
    f1: Matrix

    def __post_init__(self):
        if self.f0.shape != (self.target.d0, self.source.d0):
            raise ValueError(f"even block is {self.f0.shape}, expected "
                             f"{(self.target.d0, self.source.d0)}")
        if self.f1.shape != (self.target.d1, self.source.d1):
            raise ValueError(f"odd block is {self.f1.shape}, expected "
                             f"{(self.target.d1, self.source.d1)}")

    def __call__(self, x=None, y=None):
        return (self.f0.apply(x) if x is not None else None,
                self.f1.apply(y) if y is not None else None)

    def compose(self, first: "GradedMorphism") -> "GradedMorphism":
        """self ∘ first."""
        return GradedMorphism(first.source, self.target, self.f0 @ first.f0, self.f1 @ first.f1)

    def same_maps(self, other: "GradedMorphism") -> bool:
        return self.f0 == other.f0 and self.f1 == other.f1

    @classmethod
    def identity(cls, A: HomLieAntialgebra) -> "GradedMorphism":
        return cls(A, A, Matrix.identity(A.d0), Matrix.identity(A.d1))

    @classmethod
    def zero(cls, source: HomLieAntialgebra, target: HomLieAntialgebra) -> "GradedMorphism":
        return cls(source, target, Matrix.zeros(target.d0, source.d0),
                   Matrix.zeros(target.d1, source.d1))

    def is_surjective(self) -> bool:
        from .linalg import rank
        return rank(self.f0) == self.target.d0 and rank(self.f1) == self.target.d1

    def is_injective(self) -> bool:
        from .linalg import rank
        return rank(self.f0) == self.source.d0 and rank(self.f1) == self.source.d1


def homomorphism_report(phi: GradedMorphism) -> Report:
    S, T = phi.source, phi.target
    f0, f1 = phi.f0.apply, phi.f1.apply
    rep = Report("homomorphism")
    c = rep.add(Check("homo01"))
    for i in range(S.d0):
        c.instances += 1
        lhs, rhs = f0(S.twist0(S.e(i))), T.twist0(f0(S.e(i)))
        if lhs != rhs:
            c.witnesses.append(Witness("homo01", (S.even[i],), lhs, rhs))
    c = rep.add(Check("homo02"))
    for i in range(S.d1):
        c.instances += 1
        lhs, rhs = f1(S.twist1(S.o(i))), T.twist1(f1(S.o(i)))
        if lhs != rhs:
            c.witnesses.append(Witness("homo02", (S.odd[i],), lhs, rhs))
    c = rep.add(Check("homo1"))
    for i, j in product(range(S.d0), repeat=2):
        c.instances += 1
        lhs, rhs = f0(S.mul00(S.e(i), S.e(j))), T.mul00(f0(S.e(i)), f0(S.e(j)))
        if lhs != rhs:
            c.witnesses.append(Witness("homo1", (S.even[i], S.even[j]), lhs, rhs))
    c = rep.add(Check("homo2"))
    for i, j in product(range(S.d0), range(S.d1)):
        c.instances += 1
        lhs, rhs = f1(S.mul01(S.e(i), S.o(j))), T.mul01(f0(S.e(i)), f1(S.o(j)))
        if lhs != rhs:
            c.witnesses.append(Witness("homo2", (S.even[i], S.odd[j]), lhs, rhs))
    c = rep.add(Check("homo3"))
    for i, j in product(range(S.d1), repeat=2):
        c.instances += 1
        lhs, rhs = f0(S.bracket(S.o(i), S.o(j))), T.bracket(f1(S.o(i)), f1(S.o(j)))
        if lhs != rhs:
            c.witnesses.append(Witness("homo3", (S.odd[i], S.odd[j]), lhs, rhs))
    return rep


def is_homomorphism(phi: GradedMorphism) -> bool:
    return homomorphism_report(phi).passed


# ---------------------------------------------------------------------------
# Direct sums, graphs, subalgebras

def _fresh_names(names: Sequence[str], taken: set[str]) -> list[str]:
    out = []
    for n in names:
        m = n
        while m in taken:
            m += "'"
        taken.add(m)
        out.append(m)
    return out


def direct_sum(A: HomLieAntialgebra, B: HomLieAntialgebra) -> HomLieAntialgebra:
    """Componentwise operations on A ⊕ B; clashing names from B get primes."""
    taken = set(A.even + A.odd)
    b_even = _fresh_names(B.even, taken)
    b_odd = _fresh_names(B.odd, taken)
    d0, d1 = A.d0 + B.d0, A.d1 + B.d1

    def glue(ta, tb, na, nb, n_out_a, n_out_b):
        rows = []
        for i in range(na[0] + nb[0]):
            row = []
            for j in range(na[1] + nb[1]):
                if i < na[0] and j < na[1]:
                    row.append(ta[i][j] + zero_vector(n_out_b))
                elif i >= na[0] and j >= na[1]:
                    row.append(zero_vector(n_out_a) + tb[i - na[0]][j - na[1]])
                else:
                    row.append(zero_vector(n_out_a + n_out_b))
            rows.append(row)
        return rows

    c00 = glue(A.c00, B.c00, (A.d0, A.d0), (B.d0, B.d0), A.d0, B.d0)
    c01 = glue(A.c01, B.c01, (A.d0, A.d1), (B.d0, B.d1), A.d1, B.d1)
    c11 = glue(A.c11, B.c11, (A.d1, A.d1), (B.d1, B.d1), A.d0, B.d0)
    assert len(c00) == d0 and len(c11) == d1
    return HomLieAntialgebra(A.even + tuple(b_even), A.odd + tuple(b_odd), c00, c01, c11,
                             Matrix.block_diagonal(A.alpha, B.alpha),
                             Matrix.block_diagonal(A.beta, B.beta))


@dataclass(frozen=True)
class GradedSubspacePair:
    even: Subspace
    odd: Subspace

    @property
    def dims(self) -> tuple[int, int]:
        return self.even.dim, self.odd.dim

    @classmethod
    def zero(cls, A: HomLieAntialgebra) -> "GradedSubspacePair":
        return cls(Subspace.zero(A.d0), Subspace.zero(A.d1))

    @classmethod
    def full(cls, A: HomLieAntialgebra) -> "GradedSubspacePair":
        return cls(Subspace.full(A.d0), Subspace.full(A.d1))

    def contains_pair(self, other: "GradedSubspacePair") -> bool:
        return subspace_le(other.even, self.even) and subspace_le(other.odd, self.odd)

    def __eq__(self, other) -> bool:
        return (isinstance(other, GradedSubspacePair) and self.even.basis == other.even.basis
                and self.odd.basis == other.odd.basis)

    def __hash__(self) -> int:
        return hash((self.even.basis, self.odd.basis))


def graph_of(phi: GradedMorphism) -> GradedSubspacePair:
    """Span of (x, φ₀x) and (y, φ₁y) inside direct_sum(source, target)."""
    S = phi.source
    even = [S.e(i) + phi.f0.column(i) for i in range(S.d0)]
    odd = [S.o(i) + phi.f1.column(i) for i in range(S.d1)]
    return GradedSubspacePair(Subspace.span(even, S.d0 + phi.target.d0),
                              Subspace.span(odd, S.d1 + phi.target.d1))


def _check_ambient(A: HomLieAntialgebra, S: GradedSubspacePair) -> None:
    if S.even.ambient_dim != A.d0 or S.odd.ambient_dim != A.d1:
        raise ValueError("subspace pair does not live in this algebra")


def _closure_report(A: HomLieAntialgebra, S: GradedSubspacePair, ideal: bool) -> Report:
    _check_ambient(A, S)
    rep = Report("ideal" if ideal else "subalgebra")
    s0, s1 = S.even.vectors, S.odd.vectors
    a0 = [A.e(i) for i in range(A.d0)]
    a1 = [A.o(i) for i in range(A.d1)]

    def need(name, values, target):
        c = rep.add(Check(name))
        for args, v in values:
            c.instances += 1
            if v not in target:
                c.witnesses.append(Witness(name, args, v, None))

    def tag(prefix, k):
        return f"{prefix}[{k}]"

    need("b0.b0", ((( tag("b0", i), tag("b0", j)), A.mul00(u, v))
                   for i, u in enumerate(s0) for j, v in enumerate(s0)), S.even)
    need("b0.b1", (((tag("b0", i), tag("b1", j)), A.mul01(u, v))
                   for i, u in enumerate(s0) for j, v in enumerate(s1)), S.odd)
    need("[b1,b1]", (((tag("b1", i), tag("b1", j)), A.bracket(u, v))
                     for i, u in enumerate(s1) for j, v in enumerate(s1)), S.even)
    need("alpha(b0)", (((tag("b0", i),), A.twist0(u)) for i, u in enumerate(s0)), S.even)
    need("beta(b1)", (((tag("b1", i),), A.twist1(u)) for i, u in enumerate(s1)), S.odd)
    if ideal:
        need("b0.a0", (((tag("b0", i), A.even[j]), A.mul00(u, v))
                       for i, u in enumerate(s0) for j, v in enumerate(a0)), S.even)
        need("b0.a1", (((tag("b0", i), A.odd[j]), A.mul01(u, v))
                       for i, u in enumerate(s0) for j, v in enumerate(a1)), S.odd)
        need("b1.a0", (((tag("b1", i), A.even[j]), A.mul01(v, u))
                       for i, u in enumerate(s1) for j, v in enumerate(a0)), S.odd)
        need("[b1,a1]", (((tag("b1", i), A.odd[j]), A.bracket(u, v))
                         for i, u in enumerate(s1) for j, v in enumerate(a1)), S.even)
    return rep


def is_subalgebra(A: HomLieAntialgebra, S: GradedSubspacePair) -> bool:
    return _closure_report(A, S, ideal=False).passed


def is_ideal(A: HomLieAntialgebra, S: GradedSubspacePair) -> bool:
    return _closure_report(A, S, ideal=True).passed


def center(A: HomLieAntialgebra) -> GradedSubspacePair:
    """Elements whose products with every element vanish."""
    # even z: z·e_j = 0 and z·f_k = 0; rows are linear functionals in z
    rows0 = []
    for j in range(A.d0):
        for k in range(A.d0):
            rows0.append(tuple(A.c00[i][j][k] for i in range(A.d0)))
    for j in range(A.d1):
        for k in range(A.d1):
            rows0.append(tuple(A.c01[i][j][k] for i in range(A.d0)))
    rows1 = []
    for j in range(A.d0):
        for k in range(A.d1):
            rows1.append(tuple(A.c01[j][i][k] for i in range(A.d1)))
    for j in range(A.d1):
        for k in range(A.d0):
            rows1.append(tuple(A.c11[i][j][k] for i in range(A.d1)))
    z0 = kernel_basis(Matrix(rows0, A.d0)) if rows0 else Subspace.full(A.d0)
    z1 = kernel_basis(Matrix(rows1, A.d1)) if rows1 else Subspace.full(A.d1)
    return GradedSubspacePair(z0, z1)


# ---------------------------------------------------------------------------
# Perfectness

def product_spans(A: HomLieAntialgebra) -> tuple[Subspace, Subspace, Subspace]:
    """(span 𝔞₀·𝔞₀, span [𝔞₁,𝔞₁], span 𝔞₀·𝔞₁)."""
    ee = Subspace.span((v for r in A.c00 for v in r), A.d0)
    oo = Subspace.span((v for r in A.c11 for v in r), A.d0)
    eo = Subspace.span((v for r in A.c01 for v in r), A.d1)
    return ee, oo, eo


PERFECT_CONDITIONS = ("a0 = a0.a0", "a0 = [a1,a1]", "a1 = a0.a1")


def perfectness_failures(A: HomLieAntialgebra) -> list[str]:
    ee, oo, eo = product_spans(A)
    fails = []
    if ee.dim != A.d0:
        fails.append(PERFECT_CONDITIONS[0])
    if oo.dim != A.d0:
        fails.append(PERFECT_CONDITIONS[1])
    if eo.dim != A.d1:
        fails.append(PERFECT_CONDITIONS[2])
    return fails


def is_perfect(A: HomLieAntialgebra) -> bool:
    return not perfectness_failures(A)


def derived_ideal(A: HomLieAntialgebra) -> GradedSubspacePair:
    """Smallest ideal containing every product x·x', x·y, [y,y']."""
    ee, oo, eo = product_spans(A)
    s0, s1 = subspace_sum(ee, oo), eo
    a0 = [A.e(i) for i in range(A.d0)]
    a1 = [A.o(i) for i in range(A.d1)]
    for _ in range(A.d0 + A.d1 + 1):
        new0 = (s0.vectors + [A.mul00(u, v) for u in s0.vectors for v in a0]
                + [A.bracket(u, v) for u in s1.vectors for v in a1]
                + [A.twist0(u) for u in s0.vectors])
        new1 = (s1.vectors + [A.mul01(u, v) for u in s0.vectors for v in a1]
                + [A.mul01(v, u) for u in s1.vectors for v in a0]
                + [A.twist1(u) for u in s1.vectors])
        n0, n1 = Subspace.span(new0, A.d0), Subspace.span(new1, A.d1)
        if (n0.dim, n1.dim) == (s0.dim, s1.dim):
            break
        s0, s1 = n0, n1
    return GradedSubspacePair(s0, s1)


def element_str(names: Sequence[str], v: Sequence[Fraction]) -> str:
    terms = []
    for n, c in zip(names, v):
        if c == 1:
            terms.append(n)
        elif c == -1:
            terms.append(f"-{n}")
        elif c:
            terms.append(f"{c}*{n}")
    return " + ".join(terms).replace("+ -", "- ") if terms else "0"


__all__ = [
    "HomLieAntialgebra", "StructureError", "GradedMorphism", "GradedSubspacePair", "build",
    "abelian", "verify_axioms", "multiplicativity_report", "is_multiplicative",
    "homomorphism_report", "is_homomorphism", "direct_sum", "graph_of", "is_subalgebra",
    "is_ideal", "center", "product_spans", "perfectness_failures", "is_perfect",
    "derived_ideal", "element_str", "lincomb", "vsub",
]
