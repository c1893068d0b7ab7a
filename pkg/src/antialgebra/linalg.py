"""Exact dense linear algebra over the rationals.

Scalars are :class:`fractions.Fraction`, which already keeps numerator and
denominator coprime with a positive denominator.  Vectors are tuples of
Fractions; matrices are immutable :class:`Matrix` objects acting on column
vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple  # tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def scalar(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a Fraction, int or 'p/q' string")
    return Fraction(value)


def vector(values: Iterable) -> Vector:
    return tuple(scalar(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def unit_vector(n: int, k: int) -> Vector:
    return tuple(ONE if i == k else ZERO for i in range(n))


def is_zero(v: Sequence[Fraction]) -> bool:
    return not any(v)


def vadd(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vsub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vscale(c, v: Sequence[Fraction]) -> Vector:
    c = scalar(c)
    return tuple(c * a for a in v)


def lincomb(coeffs: Sequence[Fraction], vectors: Sequence[Sequence[Fraction]], n: int) -> Vector:
    out = [ZERO] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for i, a in enumerate(v):
                if a:
                    out[i] += c * a
    return tuple(out)


def outer(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    """Row-major flattening of u ⊗ v."""
    return tuple(a * b for a in u for b in v)


class Matrix:
    """Immutable rows × cols matrix of Fractions."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Iterable[Iterable], cols: int | None = None):
        rows = tuple(vector(r) for r in data)
        if cols is None:
            if not rows:
                raise ValueError("cols must be given for a matrix with no rows")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged matrix")
        self.data = rows
        self.rows = len(rows)
        self.cols = cols

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls([zero_vector(cols)] * rows, cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([unit_vector(n, i) for i in range(n)], n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "Matrix":
        columns = [vector(c) for c in columns]
        return cls([tuple(c[i] for c in columns) for i in range(rows)], len(columns))

    @classmethod
    def block_diagonal(cls, a: "Matrix", b: "Matrix") -> "Matrix":
        top = [r + zero_vector(b.cols) for r in a.data]
        bottom = [zero_vector(a.cols) + r for r in b.data]
        return cls(top + bottom, a.cols + b.cols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, idx):
        i, j = idx
        return self.data[i][j]

    def row(self, i: int) -> Vector:
        return self.data[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.data)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    @property
    def T(self) -> "Matrix":
        return Matrix.from_columns(self.data, self.cols)

    def apply(self, v: Sequence[Fraction]) -> Vector:
        if len(v) != self.cols:
            raise ValueError(f"vector of length {len(v)} for a {self.rows}x{self.cols} matrix")
        return tuple(sum((a * b for a, b in zip(r, v) if a and b), ZERO) for r in self.data)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = other.columns()
        return Matrix([tuple(sum((a * b for a, b in zip(r, c) if a and b), ZERO) for c in cols)
                       for r in self.data], other.cols)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        return Matrix([vadd(r, s) for r, s in zip(self.data, other.data)], self.cols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} - {other.shape}")
        return Matrix([vsub(r, s) for r, s in zip(self.data, other.data)], self.cols)

    def __neg__(self) -> "Matrix":
        return Matrix([vscale(-1, r) for r in self.data], self.cols)

    def scale(self, c) -> "Matrix":
        return Matrix([vscale(c, r) for r in self.data], self.cols)

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.shape == other.shape and self.data == other.data

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.data))

    def is_zero(self) -> bool:
        return all(is_zero(r) for r in self.data)

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise ValueError("column count mismatch")
        return Matrix(self.data + other.data, self.cols)

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self.data]

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(a) for a in r) for r in self.data)
        return f"Matrix({self.rows}x{self.cols}: [{body}])"


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row-echelon form and pivot columns; zero rows kept at the bottom."""
    a = [list(r) for r in m.data]
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        p = next((i for i in range(r, m.rows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return Matrix(a, m.cols), pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


@dataclass(frozen=True)
class Subspace:
    """Subspace of ℚ^ambient_dim stored by its canonical RREF basis rows."""

    ambient_dim: int
    basis: Matrix
    pivots: tuple[int, ...]

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        vs = [vector(v) for v in vectors]
        for v in vs:
            if len(v) != ambient_dim:
                raise ValueError(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
        if not vs:
            return cls.zero(ambient_dim)
        red, piv = rref(Matrix(vs, ambient_dim))
        return cls(ambient_dim, Matrix(red.data[: len(piv)], ambient_dim), tuple(piv))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix.zeros(0, ambient_dim), ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix.identity(ambient_dim), tuple(range(ambient_dim)))

    @property
    def dim(self) -> int:
        return self.basis.rows

    @property
    def vectors(self) -> list[Vector]:
        return list(self.basis.data)

    def reduce(self, v: Sequence[Fraction]) -> Vector:
        """v minus its component along the basis rows, zero at every pivot."""
        if len(v) != self.ambient_dim:
            raise ValueError(f"vector of length {len(v)} in ambient dimension {self.ambient_dim}")
        w = list(vector(v))
        for row, p in zip(self.basis.data, self.pivots):
            c = w[p]
            if c:
                w = [x - c * y for x, y in zip(w, row)]
        return tuple(w)

    def coordinates(self, v: Sequence[Fraction]) -> Vector | None:
        """Coefficients of v on the basis rows, or None when v is not in the span."""
        if not is_zero(self.reduce(v)):
            return None
        return tuple(scalar(v[p]) for p in self.pivots)

    def __contains__(self, v) -> bool:
        return is_zero(self.reduce(v))


def _check_ambient(a: Subspace, b: Subspace) -> None:
    if a.ambient_dim != b.ambient_dim:
        raise ValueError(f"ambient dimension mismatch: {a.ambient_dim} vs {b.ambient_dim}")


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    return Subspace.span(a.vectors + b.vectors, a.ambient_dim)


def subspace_contains(a: Subspace, v: Sequence) -> bool:
    return v in a


def subspace_equal(a: Subspace, b: Subspace) -> bool:
    _check_ambient(a, b)
    return a.basis == b.basis


def subspace_le(a: Subspace, b: Subspace) -> bool:
    _check_ambient(a, b)
    return all(v in b for v in a.vectors)


def intersection(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    if a.dim == 0 or b.dim == 0:
        return Subspace.zero(a.ambient_dim)
    # x·A = y·B  <=>  [A; -B]^T (x, y) = 0
    stacked = Matrix.from_columns(a.vectors + [vscale(-1, v) for v in b.vectors], a.ambient_dim)
    ker = kernel_basis(stacked)
    return Subspace.span((lincomb(k[: a.dim], a.vectors, a.ambient_dim) for k in ker.vectors),
                         a.ambient_dim)


def kernel_basis(m: Matrix) -> Subspace:
    red, piv = rref(m)
    free = [c for c in range(m.cols) if c not in set(piv)]
    vecs = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for row, p in zip(red.data, piv):
            v[p] = -row[f]
        vecs.append(v)
    return Subspace.span(vecs, m.cols)


def image_basis(m: Matrix) -> Subspace:
    return Subspace.span(m.columns(), m.rows)


def solve(m: Matrix, b: Sequence) -> Vector | None:
    """A particular solution of m·x = b with every free variable set to zero."""
    b = vector(b)
    if len(b) != m.rows:
        raise ValueError("right-hand side has the wrong length")
    aug = Matrix([r + (c,) for r, c in zip(m.data, b)], m.cols + 1)
    red, piv = rref(aug)
    if m.cols in piv:
        return None
    x = [ZERO] * m.cols
    for row, p in zip(red.data, piv):
        x[p] = row[-1]
    return tuple(x)


def independent_modulo(sub: Subspace, vectors: Sequence[Sequence]) -> list[int]:
    """Indices of a greedy choice of vectors that stay independent modulo sub."""
    chosen: list[int] = []
    acc = sub
    for i, v in enumerate(vectors):
        if v not in acc:
            chosen.append(i)
            acc = Subspace.span(acc.vectors + [v], sub.ambient_dim)
    return chosen


@dataclass(frozen=True)
class QuotientSpace:
    """ℚ^ambient_dim / killed with coordinates on the non-pivot standard vectors."""

    ambient_dim: int
    killed: Subspace
    free: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.free)

    @property
    def coset_reps(self) -> Matrix:
        return Matrix([unit_vector(self.ambient_dim, f) for f in self.free], self.ambient_dim)

    def project(self, v: Sequence) -> Vector:
        w = self.killed.reduce(v)
        return tuple(w[f] for f in self.free)

    def lift(self, coords: Sequence) -> Vector:
        if len(coords) != self.dim:
            raise ValueError("quotient coordinates have the wrong length")
        out = [ZERO] * self.ambient_dim
        for f, c in zip(self.free, coords):
            out[f] = scalar(c)
        return tuple(out)

    def project_matrix(self) -> Matrix:
        return Matrix.from_columns([self.project(unit_vector(self.ambient_dim, j))
                                    for j in range(self.ambient_dim)], self.dim)

    def lift_matrix(self) -> Matrix:
        return Matrix.from_columns([self.lift(unit_vector(self.dim, j)) for j in range(self.dim)],
                                   self.ambient_dim)


def quotient_by(ambient_dim: int, killed: Subspace) -> QuotientSpace:
    if killed.ambient_dim != ambient_dim:
        raise ValueError(f"killed subspace lives in dimension {killed.ambient_dim}, not {ambient_dim}")
    piv = set(killed.pivots)
    return QuotientSpace(ambient_dim, killed, tuple(j for j in range(ambient_dim) if j not in piv))
