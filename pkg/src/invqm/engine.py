"""Headline dimension reports.

Assembles, for a pair (G, N), the dimensions of the space of invariant
quasimorphisms on N modulo extendable ones, and modulo invariant
homomorphisms plus extendable ones.  Equality versus upper-bound status is
tracked through explicit hypothesis flags: the engine never claims equality
without either an asserted gate or a two-sided squeeze.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .invhoms import inv_hom_dim
from .linalg import MatZ, identity
from .quotients import (FREE, SURFACE, AbelianQuotient, SemidirectQuotient,
                        abelian_quotient, free_quotient, h2_dim,
                        h2_dim_semidirect, h2_dim_total_space,
                        surface_quotient)
from .words import FreeWord, Presentation, commutator, generator

EQUALITY = "equality"
UPPER_BOUND = "upper_bound"

AUTOMATIC = "automatic"
ASSERTED = "asserted"
UNKNOWN = "unknown"


class DimValue(NamedTuple):
    value: int
    status: str


@dataclass(frozen=True)
class Hypotheses:
    """Provenance of the unprovable inputs to a report.

    quotient_boundedly_3_acyclic is 'automatic' for the two supported
    quotient shapes (abelian, and abelian-by-cyclic), both solvable and
    hence amenable; the engine records this, it does not prove it.
    comparison_surjective is user-asserted (hyperbolicity of G) or unknown.
    """

    quotient_boundedly_3_acyclic: str = UNKNOWN
    quotient_acyclicity_reason: str = ""
    comparison_surjective: str = UNKNOWN
    N_is_commutator_subgroup: bool = True


@dataclass(frozen=True)
class DimensionReport:
    dim_q_mod_extendable: DimValue
    dim_q_mod_h1_and_extendable: DimValue
    dim_h1NG: int | None
    dim_h2_Gamma: int
    dim_h2_G: int | None
    hypotheses: Hypotheses
    provenance: tuple[str, ...] = ()


class PreconditionError(ValueError):
    pass


def analyze_presentation(P: Presentation,
                         assert_hyperbolic: bool = False) -> DimensionReport:
    """Report for G given by the presentation and N = [G, G].

    The quotient is abelian, so bounded 3-acyclicity is automatic.  The
    first dimension equals dim H^2 of the abelianization when the degree-2
    comparison map of G is surjective (asserted via hyperbolicity) or when
    the invariant-homomorphism lower bound already meets that upper bound;
    likewise the second dimension equals the difference with dim H^1(N)^G,
    with the value 0 forcing equality outright.
    """
    gamma = abelian_quotient(P)
    h2 = h2_dim(gamma)
    h1ng = inv_hom_dim(P)
    second_val = h2 - h1ng
    provenance = ["quotient boundedly 3-acyclic: automatic (abelian, hence "
                  "amenable)"]
    hyp = Hypotheses(
        quotient_boundedly_3_acyclic=AUTOMATIC,
        quotient_acyclicity_reason="abelian quotient",
        comparison_surjective=ASSERTED if assert_hyperbolic else UNKNOWN,
    )

    if assert_hyperbolic:
        first = DimValue(h2, EQUALITY)
        second = DimValue(second_val, EQUALITY)
        provenance.append("comparison map surjective: asserted (hyperbolic G)")
    else:
        if h1ng == h2:
            first = DimValue(h2, EQUALITY)
            provenance.append(
                "first dimension squeezed: invariant homomorphisms inject "
                "and meet the H^2 upper bound")
        else:
            first = DimValue(h2, UPPER_BOUND)
            provenance.append("first dimension: H^2 upper bound only")
        if second_val == 0:
            second = DimValue(0, EQUALITY)
            provenance.append("second dimension squeezed: upper bound is 0")
        else:
            second = DimValue(second_val, UPPER_BOUND)
            provenance.append("second dimension: upper bound only")

    return DimensionReport(first, second, h1ng, h2, None, hyp,
                           tuple(provenance))


def _semidirect_report(q: SemidirectQuotient) -> DimensionReport:
    h2_gamma = h2_dim_semidirect(q)
    h2_g = h2_dim_total_space(q)
    first_val = h2_gamma
    second_val = h2_g
    provenance = ["quotient boundedly 3-acyclic: automatic (abelian-by-cyclic,"
                  " hence solvable and amenable)"]
    hyp = Hypotheses(
        quotient_boundedly_3_acyclic=AUTOMATIC,
        quotient_acyclicity_reason="abelian-by-cyclic quotient",
        comparison_surjective=ASSERTED if q.hyperbolicity_asserted else UNKNOWN,
        N_is_commutator_subgroup=False,
    )
    if q.hyperbolicity_asserted:
        status = EQUALITY
        provenance.append(
            "comparison map surjective: asserted ("
            + ("pseudo-Anosov monodromy" if q.shape == SURFACE
               else "atoroidal automorphism") + ")")
        h1ng = h2_gamma - second_val
    else:
        status = UPPER_BOUND
        provenance.append("hyperbolicity not asserted: both dimensions are "
                          "upper bounds")
        h1ng = None
    first = DimValue(first_val, status)
    second = DimValue(second_val, status)
    # a zero upper bound is already an equality
    if first.status == UPPER_BOUND and first.value == 0:
        first = DimValue(0, EQUALITY)
        provenance.append("first dimension squeezed: upper bound is 0")
    if second.status == UPPER_BOUND and second.value == 0:
        second = DimValue(0, EQUALITY)
        provenance.append("second dimension squeezed: upper bound is 0")
    return DimensionReport(first, second, h1ng, h2_gamma, h2_g, hyp,
                           tuple(provenance))


def analyze_mapping_torus(q: SemidirectQuotient) -> DimensionReport:
    """Surface-by-cyclic shape; requires genus > 1 and a symplectic matrix
    (checked at construction)."""
    if q.shape != SURFACE:
        raise PreconditionError("expected the surface shape")
    if q.genus <= 1:
        raise PreconditionError("need genus > 1")
    return _semidirect_report(q)


def analyze_free_by_cyclic(q: SemidirectQuotient) -> DimensionReport:
    if q.shape != FREE:
        raise PreconditionError("expected the free shape")
    if q.n <= 1:
        raise PreconditionError("need rank > 1")
    return _semidirect_report(q)


# --- standard families ------------------------------------------------------

def _names(n: int) -> tuple[str, ...]:
    if n <= 26:
        return tuple(chr(ord("a") + i) for i in range(n))
    return tuple(f"x{i + 1}" for i in range(n))


def free_group(n: int) -> Presentation:
    return Presentation(n, _names(n))


def surface_relator(l: int) -> FreeWord:
    r = FreeWord(2 * l)
    for i in range(l):
        r = r * commutator(generator(2 * l, 2 * i + 1),
                           generator(2 * l, 2 * i + 2))
    return r


def surface_group(l: int) -> Presentation:
    return Presentation(2 * l, _names(2 * l), (surface_relator(l),))


def circle_bundle_group(l: int, n: int) -> Presentation:
    """Unit circle bundle of Euler number n over the genus-l surface."""
    rank = 2 * l + 1
    fiber = generator(rank, rank)
    r = FreeWord(rank)
    for i in range(l):
        r = r * commutator(generator(rank, 2 * i + 1),
                           generator(rank, 2 * i + 2))
    relators = [r * fiber ** n]
    for i in range(1, 2 * l + 1):
        relators.append(commutator(generator(rank, i), fiber))
    return Presentation(rank, _names(rank), tuple(relators))


def one_relator_power_group(n: int, k: int) -> Presentation:
    """<a_1, ..., a_n | [a_1, a_2]^k>."""
    r = commutator(generator(n, 1), generator(n, 2)) ** k
    return Presentation(n, _names(n), (r,))


def remark_group(k: int) -> Presentation:
    """Free product of k copies of <a, b | [a, b]^2>."""
    rank = 2 * k
    relators = tuple(
        commutator(generator(rank, 2 * i + 1), generator(rank, 2 * i + 2)) ** 2
        for i in range(k))
    return Presentation(rank, _names(rank), relators)


PRESET_NAMES = ("free", "surface", "torelli_torus", "free_torus",
                "one_relator_power", "remark_group", "circle_bundle")


def preset(name: str, *, n: int | None = None, l: int | None = None,
           k: int | None = None, A: MatZ | None = None) -> DimensionReport:
    """Run the analyzer for a named standard instance with the flags that
    are justified for it (hyperbolicity asserted where the instance is known
    hyperbolic)."""
    if name == "free":
        _require(n is not None, "free needs n")
        return analyze_presentation(free_group(n))
    if name == "surface":
        _require(l is not None and l >= 2, "surface needs genus l >= 2")
        return analyze_presentation(surface_group(l), assert_hyperbolic=True)
    if name == "torelli_torus":
        _require(l is not None and l >= 2, "torelli_torus needs genus l >= 2")
        q = surface_quotient(l, identity(2 * l), hyperbolicity_asserted=True)
        return analyze_mapping_torus(q)
    if name == "free_torus":
        _require(A is not None, "free_torus needs a matrix A")
        q = free_quotient(len(A), A)
        return analyze_free_by_cyclic(q)
    if name == "one_relator_power":
        _require(n is not None and n >= 2, "one_relator_power needs n >= 2")
        _require(k is not None and k >= 2, "one_relator_power needs k >= 2")
        # one-relator groups with torsion are hyperbolic
        return analyze_presentation(one_relator_power_group(n, k),
                                    assert_hyperbolic=True)
    if name == "remark_group":
        _require(k is not None and k >= 1, "remark_group needs k >= 1")
        # free product of hyperbolic one-relator-with-torsion factors
        return analyze_presentation(remark_group(k), assert_hyperbolic=True)
    if name == "circle_bundle":
        _require(l is not None and l >= 2, "circle_bundle needs genus l >= 2")
        _require(k is not None and k != 0,
                 "circle_bundle needs a nonzero Euler number k")
        # equality follows from the two-sided squeeze; no hyperbolicity flag
        return analyze_presentation(circle_bundle_group(l, k))
    raise PreconditionError(f"unknown preset {name!r}; known: {PRESET_NAMES}")


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise PreconditionError(msg)
