"""Low-degree chain and cochain complexes, H², H₂ and V-valued 2-cocycles.

Coordinate conventions
----------------------
``𝔞⊗𝔞`` is ordered in four blocks 00, 01, 10, 11 (even⊗even, even⊗odd,
odd⊗even, odd⊗odd), each flattened row-major.  ``𝔞⊗𝔞⊗𝔞`` has eight blocks
ordered by the parity bits of the three factors (000, 001, ..., 111).

A trivial-coefficient 2-cochain has coordinates ``(ω0, ω1, ω2)`` with ω0 on
𝔞₀×𝔞₀, ω1 on 𝔞₀×𝔞₁ and ω2 on 𝔞₁×𝔞₁, each row-major.  A 3-cochain is
recorded on the four argument signatures xxx, xxy, xyy, yyy.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .algebra import HomLieAntialgebra, abelian
from .linalg import (
    ZERO, Matrix, QuotientSpace, Subspace, Vector, image_basis, independent_modulo,
    intersection, is_zero, kernel_basis, lincomb, quotient_by, rank, solve, subspace_le,
    unit_vector, vadd, vscale, vsub, zero_vector,
)
from .report import Check, Report, Witness

HALF = Fraction(1, 2)


# ---------------------------------------------------------------------------
# Tensor layouts

@dataclass(frozen=True)
class Tensor2Layout:
    d0: int
    d1: int

    @property
    def blocks(self) -> dict[str, tuple[int, int, int]]:
        """block name -> (offset, rows, cols)."""
        d0, d1 = self.d0, self.d1
        sizes = [("00", d0, d0), ("01", d0, d1), ("10", d1, d0), ("11", d1, d1)]
        out, off = {}, 0
        for name, r, c in sizes:
            out[name] = (off, r, c)
            off += r * c
        return out

    @property
    def dim(self) -> int:
        return (self.d0 + self.d1) ** 2

    def index(self, block: str, i: int, j: int) -> int:
        off, _, c = self.blocks[block]
        return off + i * c + j

    def embed(self, block: str, flat: Sequence[Fraction]) -> Vector:
        off, r, c = self.blocks[block]
        out = [ZERO] * self.dim
        out[off: off + r * c] = flat
        return tuple(out)

    def even_indices(self) -> list[int]:
        b = self.blocks
        return (list(range(b["00"][0], b["00"][0] + self.d0 ** 2))
                + list(range(b["11"][0], b["11"][0] + self.d1 ** 2)))

    def odd_indices(self) -> list[int]:
        b = self.blocks
        return list(range(b["01"][0], b["01"][0] + 2 * self.d0 * self.d1))

    def basis_labels(self, A: HomLieAntialgebra) -> list[str]:
        names = {"0": A.even, "1": A.odd}
        return [f"{names[b[0]][i]}(x){names[b[1]][j]}"
                for b in ("00", "01", "10", "11")
                for i in range(len(names[b[0]])) for j in range(len(names[b[1]]))]


def _outer(u, v) -> Vector:
    return tuple(a * b for a in u for b in v)


SIGNATURES3 = tuple(f"{a}{b}{c}" for a in "01" for b in "01" for c in "01")


@dataclass(frozen=True)
class Tensor3Layout:
    d0: int
    d1: int

    def size(self, sig: str) -> int:
        out = 1
        for s in sig:
            out *= self.d0 if s == "0" else self.d1
        return out

    def offset(self, sig: str) -> int:
        off = 0
        for s in SIGNATURES3:
            if s == sig:
                return off
            off += self.size(s)
        raise KeyError(sig)

    @property
    def dim(self) -> int:
        return (self.d0 + self.d1) ** 3

    def tuples(self, sig: str):
        dims = [self.d0 if s == "0" else self.d1 for s in sig]
        return product(*(range(d) for d in dims))


# ---------------------------------------------------------------------------
# Chain side

def d2_chain_matrix(A: HomLieAntialgebra) -> Matrix:
    """Multiplication 𝔞⊗𝔞 → 𝔞 (even coordinates first); y⊗x maps to x·y."""
    d0, d1 = A.d0, A.d1
    cols = []
    for i, j in product(range(d0), range(d0)):
        cols.append(A.c00[i][j] + zero_vector(d1))
    for i, j in product(range(d0), range(d1)):
        cols.append(zero_vector(d0) + A.c01[i][j])
    for i, j in product(range(d1), range(d0)):
        cols.append(zero_vector(d0) + A.c01[j][i])
    for i, j in product(range(d1), range(d1)):
        cols.append(A.c11[i][j] + zero_vector(d1))
    return Matrix.from_columns(cols, d0 + d1)


def d3_chain_matrix(A: HomLieAntialgebra) -> Matrix:
    """𝔞⊗𝔞⊗𝔞 → 𝔞⊗𝔞 on the four displayed signatures; all other blocks map to 0."""
    L2, L3 = Tensor2Layout(A.d0, A.d1), Tensor3Layout(A.d0, A.d1)
    e, o = A.e, A.o
    al, be = A.twist0, A.twist1
    cols: list[Vector] = []
    for sig in SIGNATURES3:
        for t in L3.tuples(sig):
            if sig == "000":
                i, j, k = t
                v = vsub(L2.embed("00", _outer(al(e(i)), A.mul00(e(j), e(k)))),
                         L2.embed("00", _outer(A.mul00(e(i), e(j)), al(e(k)))))
            elif sig == "001":
                i, j, k = t
                v = vsub(L2.embed("01", _outer(al(e(i)), A.mul01(e(j), o(k)))),
                         vscale(HALF, L2.embed("01", _outer(A.mul00(e(i), e(j)), be(o(k))))))
            elif sig == "011":
                i, j, k = t
                v = L2.embed("00", _outer(al(e(i)), A.bracket(o(j), o(k))))
                v = vsub(v, L2.embed("11", _outer(A.mul01(e(i), o(j)), be(o(k)))))
                v = vsub(v, L2.embed("11", _outer(be(o(j)), A.mul01(e(i), o(k)))))
            elif sig == "111":
                i, j, k = t
                v = L2.embed("10", _outer(be(o(i)), A.bracket(o(j), o(k))))
                v = vadd(v, L2.embed("10", _outer(be(o(j)), A.bracket(o(k), o(i)))))
                v = vadd(v, L2.embed("10", _outer(be(o(k)), A.bracket(o(i), o(j)))))
            else:
                v = zero_vector(L2.dim)
            cols.append(v)
    return Matrix.from_columns(cols, L2.dim)


def symmetrizers(A: HomLieAntialgebra) -> list[Vector]:
    """x⊗x' − x'⊗x, x⊗y − y⊗x and y⊗y' + y'⊗y in 𝔞⊗𝔞 coordinates."""
    L = Tensor2Layout(A.d0, A.d1)
    n = L.dim
    out = []
    for i in range(A.d0):
        for j in range(i + 1, A.d0):
            out.append(vsub(unit_vector(n, L.index("00", i, j)), unit_vector(n, L.index("00", j, i))))
    for i in range(A.d0):
        for j in range(A.d1):
            out.append(vsub(unit_vector(n, L.index("01", i, j)), unit_vector(n, L.index("10", j, i))))
    for i in range(A.d1):
        for j in range(i, A.d1):
            out.append(vadd(unit_vector(n, L.index("11", i, j)), unit_vector(n, L.index("11", j, i))))
    return out


def ia_generators(A: HomLieAntialgebra, include_symmetrizers: bool = True) -> list[Vector]:
    gens = symmetrizers(A) if include_symmetrizers else []
    return gens + [v for v in d3_chain_matrix(A).columns() if not is_zero(v)]


def relation_space(A: HomLieAntialgebra, include_symmetrizers: bool = True) -> Subspace:
    """The span of the symmetrizers and im d₃ inside 𝔞⊗𝔞."""
    L = Tensor2Layout(A.d0, A.d1)
    return Subspace.span(ia_generators(A, include_symmetrizers), L.dim)


@dataclass
class H2Result:
    dimension: int
    quotient: QuotientSpace
    cycles: Subspace
    relations: Subspace
    bare_dimension: int
    relations_in_cycles: bool

    @property
    def representatives(self) -> list[Vector]:
        return [self.quotient.lift(unit_vector(self.quotient.dim, k))
                for k in range(self.quotient.dim)]


def h2_homology(A: HomLieAntialgebra) -> H2Result:
    """ker d₂ modulo (symmetrizers + im d₃), plus the bare ker d₂ / im d₃ dimension.

    The quotient is taken inside ker d₂: coordinates are those of ker d₂'s
    RREF basis, so ``quotient.lift`` returns coefficients on ``cycles``.
    """
    d2 = d2_chain_matrix(A)
    cycles = kernel_basis(d2)
    rel = relation_space(A)
    inside = subspace_le(rel, cycles)
    rel_in = intersection(rel, cycles)
    coords = [cycles.coordinates(v) for v in rel_in.vectors]
    q = quotient_by(cycles.dim, Subspace.span(coords, cycles.dim))
    im3 = image_basis(d3_chain_matrix(A))
    bare = cycles.dim - intersection(im3, cycles).dim
    return H2Result(q.dim, q, cycles, rel, bare, inside)


def homology_class_vectors(res: H2Result) -> list[Vector]:
    """Representatives of an H₂ basis as vectors of 𝔞⊗𝔞."""
    n = res.cycles.ambient_dim
    return [lincomb(c, res.cycles.vectors, n) for c in res.representatives]


# ---------------------------------------------------------------------------
# Cochain side, trivial coefficients

@dataclass(frozen=True)
class CochainLayout:
    d0: int
    d1: int

    @property
    def sizes(self) -> tuple[int, int, int]:
        return self.d0 * self.d0, self.d0 * self.d1, self.d1 * self.d1

    @property
    def dim(self) -> int:
        return sum(self.sizes)

    def bilinear(self, part: int, u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
        """Coefficient row of ω_part(u, v) on the 2-cochain coordinates."""
        s0, s1, s2 = self.sizes
        offs = (0, s0, s0 + s1)
        out = [ZERO] * self.dim
        o = offs[part]
        for k, val in enumerate(_outer(u, v)):
            if val:
                out[o + k] += val
        return tuple(out)


def d1_matrix(A: HomLieAntialgebra) -> Matrix:
    """𝔞* → 2-cochains: υ ↦ (υ₀(x·x'), υ₁(x·y), υ₀([y,y']))."""
    d0, d1 = A.d0, A.d1
    rows = []
    for i, j in product(range(d0), repeat=2):
        rows.append(A.c00[i][j] + zero_vector(d1))
    for i, j in product(range(d0), range(d1)):
        rows.append(zero_vector(d0) + A.c01[i][j])
    for i, j in product(range(d1), repeat=2):
        rows.append(A.c11[i][j] + zero_vector(d1))
    return Matrix(rows, d0 + d1)


COCHAIN3_SIGNATURES = ("xxx", "xxy", "xyy", "yyy")


def d2_matrix(A: HomLieAntialgebra) -> Matrix:
    """2-cochains → 3-cochains on the signatures xxx, xxy, xyy, yyy.

    ω₁ takes its even argument first, so ω₁(β(y), [y', y'']) is read as
    ω₁([y', y''], β(y)).
    """
    C = CochainLayout(A.d0, A.d1)
    e, o, al, be = A.e, A.o, A.twist0, A.twist1
    rows = []
    for i, j, k in product(range(A.d0), repeat=3):
        rows.append(vsub(C.bilinear(0, al(e(i)), A.mul00(e(j), e(k))),
                         C.bilinear(0, A.mul00(e(i), e(j)), al(e(k)))))
    for i, j, k in product(range(A.d0), range(A.d0), range(A.d1)):
        rows.append(vsub(C.bilinear(1, al(e(i)), A.mul01(e(j), o(k))),
                         vscale(HALF, C.bilinear(1, A.mul00(e(i), e(j)), be(o(k))))))
    for i, j, k in product(range(A.d0), range(A.d1), range(A.d1)):
        r = C.bilinear(0, al(e(i)), A.bracket(o(j), o(k)))
        r = vsub(r, C.bilinear(2, A.mul01(e(i), o(j)), be(o(k))))
        r = vsub(r, C.bilinear(2, be(o(j)), A.mul01(e(i), o(k))))
        rows.append(r)
    for i, j, k in product(range(A.d1), repeat=3):
        r = C.bilinear(1, A.bracket(o(j), o(k)), be(o(i)))
        r = vadd(r, C.bilinear(1, A.bracket(o(k), o(i)), be(o(j))))
        r = vadd(r, C.bilinear(1, A.bracket(o(i), o(j)), be(o(k))))
        rows.append(r)
    return Matrix(rows, C.dim)


def cochain_to_tensor_functional(A: HomLieAntialgebra) -> Matrix:
    """Matrix P with (P·ω)(t) the value of ω on the tensor basis element t.

    y⊗x is paired with ω₁(x, y); this is the identification under which
    d² is the transpose of d₃ restricted to the four displayed signatures.
    """
    C = CochainLayout(A.d0, A.d1)
    rows = []
    for i, j in product(range(A.d0), repeat=2):
        rows.append(C.bilinear(0, A.e(i), A.e(j)))
    for i, j in product(range(A.d0), range(A.d1)):
        rows.append(C.bilinear(1, A.e(i), A.o(j)))
    for i, j in product(range(A.d1), range(A.d0)):
        rows.append(C.bilinear(1, A.e(j), A.o(i)))
    for i, j in product(range(A.d1), repeat=2):
        rows.append(C.bilinear(2, A.o(i), A.o(j)))
    return Matrix(rows, C.dim)


def displayed_signature_rows(A: HomLieAntialgebra) -> list[int]:
    """Indices in 𝔞⊗𝔞⊗𝔞 of the signatures 000, 001, 011, 111, in cochain order."""
    L3 = Tensor3Layout(A.d0, A.d1)
    out = []
    for sig in ("000", "001", "011", "111"):
        off = L3.offset(sig)
        out.extend(range(off, off + L3.size(sig)))
    return out


def supercommutative_cochains(A: HomLieAntialgebra) -> Subspace:
    """2-cochains with ω₀ symmetric and ω₂ antisymmetric."""
    C = CochainLayout(A.d0, A.d1)
    rows = []
    for i in range(A.d0):
        for j in range(i + 1, A.d0):
            rows.append(vsub(C.bilinear(0, A.e(i), A.e(j)), C.bilinear(0, A.e(j), A.e(i))))
    for i in range(A.d1):
        for j in range(i, A.d1):
            rows.append(vadd(C.bilinear(2, A.o(i), A.o(j)), C.bilinear(2, A.o(j), A.o(i))))
    if not rows:
        return Subspace.full(C.dim)
    return kernel_basis(Matrix(rows, C.dim))


@dataclass
class H2CohomologyResult:
    dimension: int
    cocycles: Subspace
    coboundaries: Subspace
    representatives: list["Cocycle2"]
    rank_d1: int
    rank_d2: int
    unrestricted_dimension: int


def h2_cohomology_trivial(A: HomLieAntialgebra) -> H2CohomologyResult:
    """H² with trivial coefficients on supercommutative 2-cochains.

    Cocycles are ker d² restricted to cochains with ω₀ symmetric and ω₂
    antisymmetric (the ones that define a supercommutative extension); the
    dimension over all of ker d² is reported as ``unrestricted_dimension``.
    """
    D1, D2 = d1_matrix(A), d2_matrix(A)
    C = CochainLayout(A.d0, A.d1)
    ker = kernel_basis(D2) if D2.rows else Subspace.full(C.dim)
    cocycles = intersection(ker, supercommutative_cochains(A))
    cob = image_basis(D1)
    picks = independent_modulo(cob, cocycles.vectors)
    field_ = trivial_coefficients()
    reps = [Cocycle2.from_flat(A, field_, [(c,) for c in cocycles.vectors[k]]) for k in picks]
    return H2CohomologyResult(cocycles.dim - cob.dim, cocycles, cob, reps, rank(D1),
                              rank(D2) if D2.rows else 0, ker.dim - cob.dim)


# ---------------------------------------------------------------------------
# Coefficients in a graded space V

def trivial_coefficients() -> HomLieAntialgebra:
    """The ground field in each parity, identity twists.

    Scalar-valued ω0 and ω2 land in the even copy and ω1 in the odd copy, so
    V-valued cochains on this space are exactly the trivial-coefficient ones.
    """
    return abelian(["k0"], ["k1"])


def coefficient_space(even: Sequence[str], odd: Sequence[str], alpha: Matrix | None = None,
                      beta: Matrix | None = None) -> HomLieAntialgebra:
    """A graded vector space with twists, stored as an algebra with zero products."""
    return abelian(even, odd, alpha, beta)


class CochainError(ValueError):
    pass


@dataclass(frozen=True)
class Cocycle2:
    """V-valued 2-cochain (ω₀, ω₁, ω₂); ``w0[i][j]`` is a vector of V₀ and so on.

    Named for its role; the cocycle conditions are checked separately by
    :func:`is_cocycle_with_coeffs`.
    """

    w0: tuple
    w1: tuple
    w2: tuple
    coefficients: HomLieAntialgebra

    def __post_init__(self):
        V = self.coefficients
        dv0, dv1 = V.d0, V.d1
        for table, n in ((self.w0, dv0), (self.w1, dv1), (self.w2, dv0)):
            for row in table:
                for v in row:
                    if len(v) != n:
                        raise CochainError("cochain values do not match the coefficient space")
        for i in range(len(self.w0)):
            for j in range(len(self.w0)):
                if self.w0[i][j] != self.w0[j][i]:
                    raise CochainError(f"omega0 is not symmetric at ({i}, {j})")
        for i in range(len(self.w2)):
            for j in range(len(self.w2)):
                if self.w2[i][j] != vscale(-1, self.w2[j][i]):
                    raise CochainError(f"omega2 is not antisymmetric at ({i}, {j})")

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.w0), len(self.w2)

    @classmethod
    def zero(cls, A: HomLieAntialgebra, V: HomLieAntialgebra) -> "Cocycle2":
        z0, z1 = zero_vector(V.d0), zero_vector(V.d1)
        return cls(tuple(tuple(z0 for _ in range(A.d0)) for _ in range(A.d0)),
                   tuple(tuple(z1 for _ in range(A.d1)) for _ in range(A.d0)),
                   tuple(tuple(z0 for _ in range(A.d1)) for _ in range(A.d1)), V)

    @classmethod
    def from_flat(cls, A: HomLieAntialgebra, V: HomLieAntialgebra,
                  values: Sequence[Sequence[Fraction]]) -> "Cocycle2":
        """Build from one V-vector per trivial-cochain coordinate (ω0, ω1, ω2 row-major)."""
        values = [tuple(v) for v in values]
        s0, s1 = A.d0 * A.d0, A.d0 * A.d1
        w0 = tuple(tuple(values[i * A.d0 + j] for j in range(A.d0)) for i in range(A.d0))
        w1 = tuple(tuple(values[s0 + i * A.d1 + j] for j in range(A.d1)) for i in range(A.d0))
        w2 = tuple(tuple(values[s0 + s1 + i * A.d1 + j] for j in range(A.d1)) for i in range(A.d1))
        return cls(w0, w1, w2, V)

    def flat(self) -> list[Vector]:
        return ([v for r in self.w0 for v in r] + [v for r in self.w1 for v in r]
                + [v for r in self.w2 for v in r])

    def omega0(self, u, v) -> Vector:
        return _bilinear_values(self.w0, u, v, self.coefficients.d0)

    def omega1(self, x, y) -> Vector:
        return _bilinear_values(self.w1, x, y, self.coefficients.d1)

    def omega2(self, y, y2) -> Vector:
        return _bilinear_values(self.w2, y, y2, self.coefficients.d0)

    def with_entry(self, part: int, i: int, j: int, value: Sequence[Fraction]) -> "Cocycle2":
        """Copy with one entry replaced; the symmetric/antisymmetric mirror follows."""
        tables = [list(list(r) for r in t) for t in (self.w0, self.w1, self.w2)]
        value = tuple(value)
        tables[part][i][j] = value
        if part == 0:
            tables[0][j][i] = value
        elif part == 2:
            tables[2][j][i] = vscale(-1, value)
        return Cocycle2(*(tuple(tuple(r) for r in t) for t in tables), self.coefficients)

    def __add__(self, other: "Cocycle2") -> "Cocycle2":
        def add(t, s):
            return tuple(tuple(vadd(u, v) for u, v in zip(r, q)) for r, q in zip(t, s))
        return Cocycle2(add(self.w0, other.w0), add(self.w1, other.w1), add(self.w2, other.w2),
                        self.coefficients)


def _bilinear_values(table, u, v, n) -> Vector:
    out = [ZERO] * n
    for i, a in enumerate(u):
        if not a:
            continue
        for j, b in enumerate(v):
            if not b:
                continue
            for k, t in enumerate(table[i][j]):
                if t:
                    out[k] += a * b * t
    return tuple(out)


def _check_shapes(A: HomLieAntialgebra, w: Cocycle2) -> None:
    if w.shape != (A.d0, A.d1) or any(len(r) != A.d1 for r in w.w1) or len(w.w1) != A.d0:
        raise CochainError(f"cochain shape does not match an algebra of dimension {A.dims}")


def is_cocycle_with_coeffs(A: HomLieAntialgebra, w: Cocycle2) -> Report:
    """The four 2-cocycle conditions on every basis triple, with witnesses."""
    _check_shapes(A, w)
    V = w.coefficients
    e, o, al, be = A.e, A.o, A.twist0, A.twist1
    E, O = A.even, A.odd
    rep = Report("cocycle", dimensions={"coefficients_even": V.d0, "coefficients_odd": V.d1})

    c = rep.add(Check("cocycle1"))
    for i, j, k in product(range(A.d0), repeat=3):
        c.instances += 1
        lhs = w.omega0(al(e(i)), A.mul00(e(j), e(k)))
        rhs = w.omega0(A.mul00(e(i), e(j)), al(e(k)))
        if lhs != rhs:
            c.witnesses.append(Witness("cocycle1", (E[i], E[j], E[k]), lhs, rhs))
    c = rep.add(Check("cocycle2"))
    for i, j, k in product(range(A.d0), range(A.d0), range(A.d1)):
        c.instances += 1
        lhs = w.omega1(al(e(i)), A.mul01(e(j), o(k)))
        rhs = vscale(HALF, w.omega1(A.mul00(e(i), e(j)), be(o(k))))
        if lhs != rhs:
            c.witnesses.append(Witness("cocycle2", (E[i], E[j], O[k]), lhs, rhs))
    c = rep.add(Check("cocycle3"))
    for i, j, k in product(range(A.d0), range(A.d1), range(A.d1)):
        c.instances += 1
        lhs = w.omega0(al(e(i)), A.bracket(o(j), o(k)))
        rhs = vadd(w.omega2(A.mul01(e(i), o(j)), be(o(k))),
                   w.omega2(be(o(j)), A.mul01(e(i), o(k))))
        if lhs != rhs:
            c.witnesses.append(Witness("cocycle3", (E[i], O[j], O[k]), lhs, rhs))
    c = rep.add(Check("cocycle4"))
    for i, j, k in product(range(A.d1), repeat=3):
        c.instances += 1
        lhs = vadd(vadd(w.omega1(A.bracket(o(j), o(k)), be(o(i))),
                        w.omega1(A.bracket(o(k), o(i)), be(o(j)))),
                   w.omega1(A.bracket(o(i), o(j)), be(o(k))))
        if not is_zero(lhs):
            c.witnesses.append(Witness("cocycle4", (O[i], O[j], O[k]), lhs, zero_vector(V.d1)))
    return rep


@dataclass(frozen=True)
class Cochain1:
    """Grade-preserving linear maps υ₀: 𝔞₀ → V₀ and υ₁: 𝔞₁ → V₁."""

    v0: Matrix
    v1: Matrix
    coefficients: HomLieAntialgebra


def coboundary(A: HomLieAntialgebra, ups: Cochain1) -> Cocycle2:
    """d¹υ = (υ₀(x·x'), υ₁(x·y), υ₀([y,y']))."""
    w0 = tuple(tuple(ups.v0.apply(A.c00[i][j]) for j in range(A.d0)) for i in range(A.d0))
    w1 = tuple(tuple(ups.v1.apply(A.c01[i][j]) for j in range(A.d1)) for i in range(A.d0))
    w2 = tuple(tuple(ups.v0.apply(A.c11[i][j]) for j in range(A.d1)) for i in range(A.d1))
    return Cocycle2(w0, w1, w2, ups.coefficients)


def _parity_blocks(A: HomLieAntialgebra):
    """Row indices of d¹ touching (ω0, ω2) and ω1, with their column ranges."""
    s0, s1, s2 = CochainLayout(A.d0, A.d1).sizes
    even_rows = list(range(s0)) + list(range(s0 + s1, s0 + s1 + s2))
    odd_rows = list(range(s0, s0 + s1))
    return even_rows, odd_rows


def _submatrix(m: Matrix, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
    return Matrix([tuple(m[r, c] for c in cols) for r in rows], len(cols))


def is_coboundary_with_coeffs(A: HomLieAntialgebra, w: Cocycle2) -> Cochain1 | None:
    """A 1-cochain υ with d¹υ = w, or None when the linear system is unsolvable.

    The system splits by coefficient coordinate: each V₀ coordinate of
    (ω0, ω2) is solved against υ₀ and each V₁ coordinate of ω1 against υ₁.
    """
    _check_shapes(A, w)
    V = w.coefficients
    D1 = d1_matrix(A)
    even_rows, odd_rows = _parity_blocks(A)
    m_even = _submatrix(D1, even_rows, range(A.d0))
    m_odd = _submatrix(D1, odd_rows, range(A.d0, A.d0 + A.d1))
    flat = w.flat()
    rows0, rows1 = [], []
    for r in range(V.d0):
        x = solve(m_even, [flat[k][r] for k in even_rows]) if even_rows else ()
        if x is None:
            return None
        rows0.append(x)
    for r in range(V.d1):
        x = solve(m_odd, [flat[k][r] for k in odd_rows]) if odd_rows else ()
        if x is None:
            return None
        rows1.append(x)
    v0 = Matrix(rows0, A.d0)
    v1 = Matrix(rows1, A.d1)
    return Cochain1(v0, v1, V)


@dataclass
class CoefficientH2:
    dimension: int
    even_part: int
    odd_part: int
    coefficients_even: int
    coefficients_odd: int


def h2_with_coefficients(A: HomLieAntialgebra, V: HomLieAntialgebra) -> CoefficientH2:
    """dim H²(𝔞; V) for coefficients with trivial action.

    The conditions never mix coefficient coordinates, and (ω0, ω2) decouple
    from ω1, so the answer is dim V₀·h_even + dim V₁·h_odd.
    """
    C = CochainLayout(A.d0, A.d1)
    s0, s1, _ = C.sizes
    res = h2_cohomology_trivial(A)
    odd_idx = set(range(s0, s0 + s1))

    def restrict(sub: Subspace, keep_odd: bool) -> Subspace:
        mask = [(k in odd_idx) == keep_odd for k in range(C.dim)]
        return Subspace.span((tuple(a if m else ZERO for a, m in zip(v, mask)) for v in sub.vectors),
                             C.dim)

    h_even = restrict(res.cocycles, False).dim - restrict(res.coboundaries, False).dim
    h_odd = restrict(res.cocycles, True).dim - restrict(res.coboundaries, True).dim
    return CoefficientH2(V.d0 * h_even + V.d1 * h_odd, h_even, h_odd, V.d0, V.d1)


__all__ = [
    "Tensor2Layout", "Tensor3Layout", "CochainLayout", "d1_matrix", "d2_matrix",
    "d2_chain_matrix", "d3_chain_matrix", "symmetrizers", "ia_generators", "relation_space",
    "h2_homology", "H2Result", "h2_cohomology_trivial", "H2CohomologyResult", "Cocycle2",
    "Cochain1", "coboundary", "is_cocycle_with_coeffs", "is_coboundary_with_coeffs",
    "trivial_coefficients", "coefficient_space", "h2_with_coefficients", "CochainError",
    "cochain_to_tensor_functional", "displayed_signature_rows", "supercommutative_cochains",
]
