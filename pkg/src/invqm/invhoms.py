"""Invariant homomorphisms on the commutator subgroup of a presented group.

For G = F_n / <<r_1, ..., r_m>> and N = [G, G], every G-invariant
homomorphism on N pulls back to a functional on the wedge square of Q^n
that annihilates a constraint space W assembled from the relators:

  * e_j ∧ ab(r_i) for every generator j and relator r_i.  These come from
    conjugation: g r g^-1 r^-1 represents the identity of G, and its wedge
    class is ab(g) ∧ ab(r).
  * the quadratic class of any integer combination of relators with
    vanishing total abelianization.  Cross terms between relator factors in
    an actual product word are of the form mu ∧ ab(r_i), so they already lie
    in the first span; taking the linear combination of per-relator
    quadratic classes is therefore equivalent modulo that span.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .linalg import kernel_basis, left_kernel_basis_int, rref, solve_left_int
from .magnus import (InvariantHom, WedgeVec, abelianize, quadratic_class,
                     wedge_basis_vector)
from .words import FreeWord, Presentation


class NotInCommutatorSubgroupError(ValueError):
    pass


@dataclass(frozen=True)
class ConstraintSpace:
    """Subspace W of the wedge square that invariant homomorphisms must
    annihilate; basis rows are linearly independent."""

    rank: int
    basis: tuple[WedgeVec, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class InvHomSpace:
    """The annihilator of a constraint space: the pullback of the space of
    invariant homomorphisms on the commutator subgroup."""

    rank: int
    dimension: int
    basis: tuple[InvariantHom, ...]


def _reduce_rows(rank: int, vectors: list[WedgeVec]) -> tuple[WedgeVec, ...]:
    """Independent spanning subset in reduced row-echelon form, entries
    scaled integral with content 1."""
    rows = [list(v.coeffs) for v in vectors if not v.is_zero()]
    if not rows:
        return ()
    R, pivots = rref(rows)
    out = []
    for r in range(len(pivots)):
        ints = linalg.clear_denominators([Fraction(x) for x in R[r]])
        out.append(WedgeVec(rank, tuple(Fraction(x) for x in ints)))
    return tuple(out)


def constraint_space(P: Presentation) -> ConstraintSpace:
    n = P.rank
    vectors: list[WedgeVec] = []
    for r in P.relators:
        mu = abelianize(r)
        for j in range(1, n + 1):
            v = WedgeVec.zero(n)
            for i in range(1, n + 1):
                if mu[i - 1] != 0:
                    v = v + mu[i - 1] * wedge_basis_vector(n, j, i)
            vectors.append(v)
    R = [abelianize(r) for r in P.relators]
    if R:
        classes = [quadratic_class(r) for r in P.relators]
        for c in left_kernel_basis_int(R):
            v = WedgeVec.zero(n)
            for ci, qi in zip(c, classes):
                if ci != 0:
                    v = v + ci * qi
            vectors.append(v)
    return ConstraintSpace(n, _reduce_rows(n, vectors))


def inv_hom_dim(P: Presentation) -> int:
    n = P.rank
    return n * (n - 1) // 2 - constraint_space(P).dim


def inv_hom_basis(P: Presentation) -> InvHomSpace:
    """Basis of the annihilator of the constraint space, in reduced
    row-echelon order over the lexicographic pair basis."""
    n = P.rank
    W = constraint_space(P)
    npairs = n * (n - 1) // 2
    if not W.basis:
        basis = tuple(InvariantHom(n, tuple(
            Fraction(1) if k == t else Fraction(0) for k in range(npairs)))
            for t in range(npairs))
        return InvHomSpace(n, npairs, basis)
    rows = [list(v.coeffs) for v in W.basis]
    ker = kernel_basis(rows)
    R, pivots = rref(ker) if ker else ([], [])
    basis = []
    for r in range(len(pivots)):
        ints = linalg.clear_denominators([Fraction(x) for x in R[r]])
        basis.append(InvariantHom(n, tuple(Fraction(x) for x in ints)))
    return InvHomSpace(n, len(basis), tuple(basis))


def _commutator_lattice_coords(P: Presentation, w: FreeWord) -> list[int]:
    """Integer coordinates c with sum_i c_i ab(r_i) = ab(w), certifying that
    w represents an element of [G, G]."""
    mu = abelianize(w)
    if all(x == 0 for x in mu):
        return [0] * len(P.relators)
    if not P.relators:
        raise NotInCommutatorSubgroupError(
            "word has nonzero abelianization and there are no relators")
    c = solve_left_int([abelianize(r) for r in P.relators], mu)
    if c is None:
        raise NotInCommutatorSubgroupError(
            "abelianization does not lie in the relator lattice")
    return c


def evaluate_on_quotient(phi: InvariantHom, w: FreeWord,
                         P: Presentation) -> Fraction:
    """Value of the induced homomorphism on the element of [G, G]
    represented by w.

    The wedge class of w is corrected by the relator combination matching
    its abelianization; all remaining ambiguity (choice of combination,
    ordering and conjugation of relator factors) lies in the constraint
    space, which phi annihilates, so the value is well defined.
    """
    c = _commutator_lattice_coords(P, w)
    v = quadratic_class(w)
    for ci, r in zip(c, P.relators):
        if ci != 0:
            v = v - ci * quadratic_class(r)
    return phi.pair(v)
