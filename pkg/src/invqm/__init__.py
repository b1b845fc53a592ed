"""invqm: exact dimensions of spaces of non-extendable invariant
quasimorphisms for pairs (G, N), plus the supporting word calculus, exact
linear algebra, transgression cocycles, and counting-quasimorphism tools."""

from .brooks import (CountingQM, DefectCertificate, bavard_lower_bound,
                     defect_lower_bound, homogenize_eval, qm_eval)
from .engine import (DimensionReport, analyze_free_by_cyclic,
                     analyze_mapping_torus, analyze_presentation, preset)
from .invhoms import (constraint_space, evaluate_on_quotient, inv_hom_basis,
                      inv_hom_dim)
from .magnus import (InvariantHom, WedgeVec, abelianize, alpha_eval, hom_eval,
                     magnus_deg2, pair_sum_class, wedge_class)
from .quotients import (AbelianQuotient, SemidirectQuotient, abelian_quotient,
                        free_quotient, h1_dim, h2_dim, h2_dim_semidirect,
                        h2_dim_total_space, surface_quotient)
from .transgression import (Transgressor, antisym_pairing, cup_class_matrix,
                            lift_F, standard_section, transgress)
from .words import (FreeWord, Presentation, commutator, conjugate, generator,
                    invert, is_in_commutator_subgroup, multiply,
                    parse_presentation, parse_word, power, render, word)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
