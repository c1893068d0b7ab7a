"""The universal central extension (𝔞⊗𝔞)/I of a perfect algebra.

I is spanned by the symmetrizers and the image of d₃.  Both I and the
multiplication d₂ respect the grading, so the quotient is built per grade:
even tensors are the blocks 00 and 11, odd tensors the blocks 01 and 10.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .algebra import (
    GradedMorphism, GradedSubspacePair, HomLieAntialgebra, center, homomorphism_report,
    is_homomorphism, is_perfect, perfectness_failures, verify_axioms,
)
from .extensions import CentralExtension, Section, canonical_section
from .homology import (
    Tensor2Layout, d2_chain_matrix, h2_homology, homology_class_vectors, ia_generators,
)
from .linalg import (
    ZERO, Matrix, QuotientSpace, Subspace, Vector, is_zero, kernel_basis, quotient_by,
    rank, unit_vector, vsub, zero_vector,
)
from .report import Check, Report, Witness


class NotPerfectError(ValueError):
    def __init__(self, failures: Sequence[str]):
        super().__init__("algebra is not perfect: " + "; ".join(f"{f} fails" for f in failures))
        self.failures = list(failures)


class AnnihilationFailure(RuntimeError):
    pass


class BaseMismatch(ValueError):
    pass


class PreconditionError(ValueError):
    pass


def _restrict(v: Sequence, idx: Sequence[int]) -> Vector:
    return tuple(v[k] for k in idx)


def _expand(v: Sequence, idx: Sequence[int], n: int) -> Vector:
    out = [ZERO] * n
    for k, a in zip(idx, v):
        out[k] = a
    return tuple(out)


@dataclass
class GradedRelations:
    """I split into its even and odd parts, in graded tensor coordinates."""

    layout: Tensor2Layout
    even_idx: list[int]
    odd_idx: list[int]
    even: Subspace
    odd: Subspace

    @property
    def full(self) -> Subspace:
        n = self.layout.dim
        return Subspace.span([_expand(v, self.even_idx, n) for v in self.even.vectors]
                             + [_expand(v, self.odd_idx, n) for v in self.odd.vectors], n)


def build_Ia(A: HomLieAntialgebra, include_symmetrizers: bool = True) -> GradedRelations:
    """Relations subspace I; ``include_symmetrizers=False`` keeps only im d₃ (test hook)."""
    L = Tensor2Layout(A.d0, A.d1)
    ev, od = L.even_indices(), L.odd_indices()
    gens = ia_generators(A, include_symmetrizers)
    d2 = d2_chain_matrix(A)
    for g in gens:
        if not is_zero(d2.apply(g)):
            raise AssertionError("a relation is not a cycle; the algebra fails an axiom")
        if not (is_zero(_restrict(g, ev)) or is_zero(_restrict(g, od))):
            raise AssertionError("relation generator is not homogeneous")
    return GradedRelations(L, ev, od, Subspace.span([_restrict(g, ev) for g in gens], len(ev)),
                           Subspace.span([_restrict(g, od) for g in gens], len(od)))


def _tensor_names(A: HomLieAntialgebra, L: Tensor2Layout, idx: Sequence[int]) -> list[str]:
    names = []
    lookup = {}
    for block in ("00", "01", "10", "11"):
        off, r, c = L.blocks[block]
        left = A.even if block[0] == "0" else A.odd
        right = A.even if block[1] == "0" else A.odd
        for i in range(r):
            for j in range(c):
                if block == "11":
                    lookup[off + i * c + j] = f"{{{left[i]},{right[j]}}}"
                else:
                    lookup[off + i * c + j] = f"{left[i]}*{right[j]}"
    for k in idx:
        names.append(lookup[k])
    return names


@dataclass
class UceResult:
    base: HomLieAntialgebra
    relations: GradedRelations
    even_quotient: QuotientSpace
    odd_quotient: QuotientSpace
    uce_algebra: HomLieAntialgebra
    u: GradedMorphism
    kernel_of_u: GradedSubspacePair
    invariants: Report
    forced: bool = False

    def lift_even(self, coords) -> Vector:
        """Tensor (in 𝔞⊗𝔞 coordinates) representing an even class."""
        L = self.relations.layout
        return _expand(self.even_quotient.lift(coords), self.relations.even_idx, L.dim)

    def lift_odd(self, coords) -> Vector:
        L = self.relations.layout
        return _expand(self.odd_quotient.lift(coords), self.relations.odd_idx, L.dim)

    def project(self, tensor: Sequence) -> tuple[Vector, Vector]:
        return (self.even_quotient.project(_restrict(tensor, self.relations.even_idx)),
                self.odd_quotient.project(_restrict(tensor, self.relations.odd_idx)))


def _block_tensor(L: Tensor2Layout, block: str, u, v) -> Vector:
    return L.embed(block, tuple(a * b for a in u for b in v))


def _twist_tensor(A: HomLieAntialgebra, L: Tensor2Layout, t: Sequence) -> Vector:
    """Apply α⊗α, α⊗β, β⊗α, β⊗β blockwise."""
    out = [ZERO] * L.dim
    maps = {"0": A.alpha, "1": A.beta}
    for block in ("00", "01", "10", "11"):
        off, r, c = L.blocks[block]
        ml, mr = maps[block[0]], maps[block[1]]
        for i in range(r):
            for j in range(c):
                a = t[off + i * c + j]
                if not a:
                    continue
                li, rj = ml.column(i), mr.column(j)
                for p in range(r):
                    if not li[p]:
                        continue
                    for q in range(c):
                        if rj[q]:
                            out[off + p * c + q] += a * li[p] * rj[q]
    return tuple(out)


def build_uce(A: HomLieAntialgebra, force: bool = False,
              include_symmetrizers: bool = True) -> UceResult:
    """uce(𝔞) with its products, twists, the map u and ker u.

    Raises NotPerfectError unless 𝔞 is perfect or ``force`` is set.
    """
    fails = perfectness_failures(A)
    if fails and not force:
        raise NotPerfectError(fails)
    rel = build_Ia(A, include_symmetrizers)
    L = rel.layout
    Q0 = quotient_by(len(rel.even_idx), rel.even)
    Q1 = quotient_by(len(rel.odd_idx), rel.odd)
    d2 = d2_chain_matrix(A)
    n0, n1 = Q0.dim, Q1.dim

    def lift0(k):
        return _expand(Q0.lift(unit_vector(n0, k)), rel.even_idx, L.dim)

    def lift1(k):
        return _expand(Q1.lift(unit_vector(n1, k)), rel.odd_idx, L.dim)

    # u is d₂ on representatives; d₂ kills I so this is well defined
    u_even = [d2.apply(lift0(k))[: A.d0] for k in range(n0)]
    u_odd = [d2.apply(lift1(k))[A.d0:] for k in range(n1)]

    def cls0(t):
        return Q0.project(_restrict(t, rel.even_idx))

    def cls1(t):
        return Q1.project(_restrict(t, rel.odd_idx))

    c00 = [[cls0(_block_tensor(L, "00", u_even[p], u_even[q])) for q in range(n0)] for p in range(n0)]
    c01 = [[cls1(_block_tensor(L, "01", u_even[p], u_odd[q])) for q in range(n1)] for p in range(n0)]
    c11 = [[cls0(_block_tensor(L, "11", u_odd[p], u_odd[q])) for q in range(n1)] for p in range(n1)]
    alpha_t = Matrix.from_columns([cls0(_twist_tensor(A, L, lift0(k))) for k in range(n0)], n0)
    beta_t = Matrix.from_columns([cls1(_twist_tensor(A, L, lift1(k))) for k in range(n1)], n1)

    even_names = _tensor_names(A, L, [rel.even_idx[f] for f in Q0.free])
    odd_names = _tensor_names(A, L, [rel.odd_idx[f] for f in Q1.free])
    U = HomLieAntialgebra(even_names, odd_names, c00, c01, c11, alpha_t, beta_t)
    u = GradedMorphism(U, A, Matrix.from_columns(u_even, A.d0), Matrix.from_columns(u_odd, A.d1))
    k0 = kernel_basis(u.f0) if u.f0.rows else Subspace.full(n0)
    k1 = kernel_basis(u.f1) if u.f1.rows else Subspace.full(n1)
    kernel = GradedSubspacePair(k0, k1)

    inv = Report("uce invariants", dimensions={
        "tensor": L.dim, "relations": rel.even.dim + rel.odd.dim,
        "uce": [n0, n1], "ker_u": [k0.dim, k1.dim]})
    inv.extend(verify_axioms(U), "uce.")
    inv.extend(homomorphism_report(u), "u.")
    c = inv.add(Check("u surjective"))
    c.instances = 1
    if rank(u.f0) != A.d0 or rank(u.f1) != A.d1:
        c.witnesses.append(Witness("u surjective", (), [A.d0, A.d1], [rank(u.f0), rank(u.f1)]))
    c = inv.add(Check("ker u central"))
    z = center(U)
    for label, sub, zs in (("even", k0, z.even), ("odd", k1, z.odd)):
        for k, v in enumerate(sub.vectors):
            c.instances += 1
            if v not in zs:
                c.witnesses.append(Witness("ker u central", (f"{label}[{k}]",), v, None))
    return UceResult(A, rel, Q0, Q1, U, u, kernel, inv, forced=bool(fails))


def uce_extension(r: UceResult) -> CentralExtension:
    """0 → ker u → uce(𝔞) → 𝔞 → 0 as a CentralExtension record."""
    from .extensions import extension_from_projection
    return extension_from_projection(r.base, r.uce_algebra, r.u)


def uce_is_perfect(r: UceResult) -> bool:
    return is_perfect(r.uce_algebra)


def well_definedness_check(A: HomLieAntialgebra, r: UceResult,
                           relations: GradedRelations | None = None) -> Report:
    """Quotient operations do not depend on representatives, and the four relations vanish.

    ``relations`` replaces I for the lifting checks (regression hook for a
    mutilated I); by default the I stored on ``r`` is used.
    """
    rel = relations or r.relations
    L = rel.layout
    full = rel.full
    d2 = d2_chain_matrix(A)
    rep = Report("well-definedness", dimensions={"relations": full.dim})

    c = rep.add(Check("twist preserves I"))
    for k, g in enumerate(full.vectors):
        c.instances += 1
        t = _twist_tensor(A, L, g)
        if t not in full:
            c.witnesses.append(Witness("twist preserves I", (f"I[{k}]",), t, None))

    c = rep.add(Check("product kills I"))
    for k, g in enumerate(full.vectors):
        c.instances += 1
        if not is_zero(d2.apply(g)):
            c.witnesses.append(Witness("product kills I", (f"I[{k}]",), d2.apply(g), None))

    # products of arbitrary generator tensors agree with the generator rules
    c = rep.add(Check("generator products"))
    U = r.uce_algebra
    ev_set = set(rel.even_idx)
    unit = [unit_vector(L.dim, k) for k in range(L.dim)]
    images = [d2.apply(t) for t in unit]
    labels = L.basis_labels(A)
    for a in range(L.dim):
        for b in range(L.dim):
            pa, pb = a in ev_set, b in ev_set
            ca, cb = r.project(unit[a]), r.project(unit[b])
            if pa and pb:
                got = U.mul00(ca[0], cb[0]) + zero_vector(U.d1)
                want = r.project(_block_tensor(L, "00", images[a][: A.d0], images[b][: A.d0]))
            elif pa and not pb:
                got = zero_vector(U.d0) + U.mul01(ca[0], cb[1])
                want = r.project(_block_tensor(L, "01", images[a][: A.d0], images[b][A.d0:]))
            elif not pa and not pb:
                got = U.bracket(ca[1], cb[1]) + zero_vector(U.d1)
                want = r.project(_block_tensor(L, "11", images[a][A.d0:], images[b][A.d0:]))
            else:
                continue
            c.instances += 1
            want = want[0] + want[1]
            if got != want:
                c.witnesses.append(Witness("generator products", (labels[a], labels[b]), got, want))

    # relations evaluated as classes in the stored quotient
    e, o, al, be = A.e, A.o, A.twist0, A.twist1
    E, O = A.even, A.odd

    def star(b, u, v):
        return _block_tensor(L, b, u, v)

    def zero_class(name, args, t):
        cls0, cls1 = r.project(t)
        c.instances += 1
        if not (is_zero(cls0) and is_zero(cls1)):
            c.witnesses.append(Witness(name, args, list(cls0) + list(cls1), None))

    from itertools import product
    c = rep.add(Check("uce-relation1"))
    for i, j, k in product(range(A.d0), repeat=3):
        zero_class("uce-relation1", (E[i], E[j], E[k]),
                   vsub(star("00", al(e(i)), A.mul00(e(j), e(k))),
                        star("00", A.mul00(e(i), e(j)), al(e(k)))))
    c = rep.add(Check("uce-relation2"))
    for i, j, k in product(range(A.d0), range(A.d0), range(A.d1)):
        t = star("01", al(e(i)), A.mul01(e(j), o(k)))
        t = vsub(t, tuple(x / 2 for x in star("01", A.mul00(e(i), e(j)), be(o(k)))))
        zero_class("uce-relation2", (E[i], E[j], O[k]), t)
    c = rep.add(Check("uce-relation3"))
    for i, j, k in product(range(A.d0), range(A.d1), range(A.d1)):
        t = star("00", al(e(i)), A.bracket(o(j), o(k)))
        t = vsub(t, star("11", A.mul01(e(i), o(j)), be(o(k))))
        t = vsub(t, star("11", be(o(j)), A.mul01(e(i), o(k))))
        zero_class("uce-relation3", (E[i], O[j], O[k]), t)
    c = rep.add(Check("uce-relation4"))
    for i, j, k in product(range(A.d1), repeat=3):
        # {β(y), [y', y'']} pairs an odd and an even argument: the 10 block
        t = star("10", be(o(i)), A.bracket(o(j), o(k)))
        t = tuple(a + b for a, b in zip(t, star("10", be(o(j)), A.bracket(o(k), o(i)))))
        t = tuple(a + b for a, b in zip(t, star("10", be(o(k)), A.bracket(o(i), o(j)))))
        zero_class("uce-relation4", (O[i], O[j], O[k]), t)
    c = rep.add(Check("supercommutativity"))
    for i, j in product(range(A.d0), repeat=2):
        zero_class("supercommutativity", (E[i], E[j]),
                   vsub(star("00", e(i), e(j)), star("00", e(j), e(i))))
    for i, j in product(range(A.d0), range(A.d1)):
        zero_class("supercommutativity", (E[i], O[j]),
                   vsub(star("01", e(i), o(j)), star("10", o(j), e(i))))
    for i, j in product(range(A.d1), repeat=2):
        zero_class("supercommutativity", (O[i], O[j]),
                   tuple(a + b for a, b in zip(star("11", o(i), o(j)), star("11", o(j), o(i)))))
    return rep


# ---------------------------------------------------------------------------
# Universality

@dataclass
class UniversalityCertificate:
    target: CentralExtension
    phi: GradedMorphism
    commutes: bool
    unique: bool
    homomorphism: bool
    sections_distinct: bool
    report: Report = field(default_factory=lambda: Report("universality"))

    @property
    def valid(self) -> bool:
        return self.commutes and self.unique and self.homomorphism


def _tensor_to_target(A: HomLieAntialgebra, T: HomLieAntialgebra, s: Section) -> tuple[Matrix, Matrix]:
    """t₁⊗t₂ ↦ s(t₁)·s(t₂), as even and odd matrices on 𝔞⊗𝔞 coordinates."""
    L = Tensor2Layout(A.d0, A.d1)
    even_cols, odd_cols = [], []
    s0 = [s.f0.column(i) for i in range(A.d0)]
    s1 = [s.f1.column(i) for i in range(A.d1)]
    for block in ("00", "01", "10", "11"):
        _, r, c = L.blocks[block]
        for i in range(r):
            for j in range(c):
                if block == "00":
                    ev, od = T.mul00(s0[i], s0[j]), zero_vector(T.d1)
                elif block == "01":
                    ev, od = zero_vector(T.d0), T.mul01(s0[i], s1[j])
                elif block == "10":
                    ev, od = zero_vector(T.d0), T.mul01(s0[j], s1[i])
                else:
                    ev, od = T.bracket(s1[i], s1[j]), zero_vector(T.d1)
                even_cols.append(ev)
                odd_cols.append(od)
    return Matrix.from_columns(even_cols, T.d0), Matrix.from_columns(odd_cols, T.d1)


def descend(r: UceResult, E: CentralExtension, s: Section) -> GradedMorphism:
    """φ on uce(𝔞) from a section; raises AnnihilationFailure if I is not killed."""
    A, T = r.base, E.total
    m0, m1 = _tensor_to_target(A, T, s)
    for g in r.relations.full.vectors:
        if not (is_zero(m0.apply(g)) and is_zero(m1.apply(g))):
            raise AnnihilationFailure("s(t1)·s(t2) does not vanish on a relation; "
                                      "the target is not a central extension")
    n0, n1 = r.even_quotient.dim, r.odd_quotient.dim
    f0 = Matrix.from_columns([m0.apply(r.lift_even(unit_vector(n0, k))) for k in range(n0)], T.d0)
    f1 = Matrix.from_columns([m1.apply(r.lift_odd(unit_vector(n1, k))) for k in range(n1)], T.d1)
    return GradedMorphism(r.uce_algebra, T, f0, f1)


def universality_morphism(r: UceResult, E: CentralExtension) -> UniversalityCertificate:
    """The factorisation φ: uce(𝔞) → E.total with π∘φ = u, checked against a second section."""
    if not (E.base.same_structure(r.base) and E.base.dims == r.base.dims):
        raise BaseMismatch("the extension is over a different base algebra")
    s1 = canonical_section(E)
    s2 = canonical_section(E, shift=1)
    phi = descend(r, E, s1)
    phi2 = descend(r, E, s2)
    pi_phi = E.projection.compose(phi)
    rep = Report("universality", dimensions={"uce": list(r.uce_algebra.dims),
                                              "target": list(E.total.dims)})
    c = rep.add(Check("pi o phi = u"))
    c.instances = 1
    commutes = pi_phi.same_maps(r.u)
    if not commutes:
        c.witnesses.append(Witness("pi o phi = u", (), pi_phi.f0.tolist() + pi_phi.f1.tolist(),
                                   r.u.f0.tolist() + r.u.f1.tolist()))
    hom = homomorphism_report(phi)
    rep.extend(hom, "phi.")
    c = rep.add(Check("section independence"))
    c.instances = 1
    unique = phi.same_maps(phi2)
    if not unique:
        c.witnesses.append(Witness("section independence", (), phi.f0.tolist() + phi.f1.tolist(),
                                   phi2.f0.tolist() + phi2.f1.tolist()))
    distinct = not (s1.f0 == s2.f0 and s1.f1 == s2.f1)
    rep.notes.append("two sections are distinct" if distinct
                     else "the kernel is zero, so the section is unique")
    return UniversalityCertificate(E, phi, commutes, unique, hom.passed, distinct, rep)


def uniqueness_check(phi1: GradedMorphism, phi2: GradedMorphism, E: CentralExtension) -> bool:
    """True when two homomorphisms over the same projection coincide.

    Both maps must be homomorphisms into E.total with equal composites
    π∘φ; otherwise PreconditionError is raised.
    """
    for name, phi in (("first", phi1), ("second", phi2)):
        if phi.target is not E.total and not phi.target == E.total:
            raise PreconditionError(f"{name} map does not land in the extension")
        if not is_homomorphism(phi):
            raise PreconditionError(f"{name} map is not a homomorphism")
    if not E.projection.compose(phi1).same_maps(E.projection.compose(phi2)):
        raise PreconditionError("the maps do not commute with the same projection")
    return phi1.same_maps(phi2)


def kernel_vs_h2(A: HomLieAntialgebra, r: UceResult) -> Report:
    """Compare ker u with H₂ = ker d₂ / I through the identity on representatives."""
    h = h2_homology(A)
    ker_dim = r.kernel_of_u.even.dim + r.kernel_of_u.odd.dim
    rep = Report("ker u vs H2", dimensions={"ker_u": ker_dim, "H2": h.dimension,
                                            "H2_bare": h.bare_dimension})
    c = rep.add(Check("dimensions agree"))
    c.instances = 1
    if ker_dim != h.dimension:
        c.witnesses.append(Witness("dimensions agree", (), ker_dim, h.dimension))

    lifts = [r.lift_even(v) for v in r.kernel_of_u.even.vectors]
    lifts += [r.lift_odd(v) for v in r.kernel_of_u.odd.vectors]
    c = rep.add(Check("representatives are cycles"))
    for k, t in enumerate(lifts):
        c.instances += 1
        if t not in h.cycles:
            c.witnesses.append(Witness("representatives are cycles", (f"ker[{k}]",), t, None))
    c = rep.add(Check("injective modulo I"))
    c.instances = 1
    rel = h.relations
    span = Subspace.span(rel.vectors + lifts, rel.ambient_dim)
    if span.dim != rel.dim + len(lifts):
        c.witnesses.append(Witness("injective modulo I", (), span.dim - rel.dim, len(lifts)))
    c = rep.add(Check("surjective onto H2"))
    c.instances = 1
    for k, t in enumerate(homology_class_vectors(h)):
        if t not in span:
            c.witnesses.append(Witness("surjective onto H2", (f"H2[{k}]",), t, None))
    return rep


__all__ = [
    "NotPerfectError", "AnnihilationFailure", "BaseMismatch", "PreconditionError",
    "GradedRelations", "build_Ia", "UceResult", "build_uce", "uce_extension", "uce_is_perfect",
    "well_definedness_check", "UniversalityCertificate", "descend", "universality_morphism",
    "uniqueness_check", "kernel_vs_h2",
]
