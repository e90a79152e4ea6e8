"""Confluence of the hypergeometric equation x(x - eps) w'' + ... as eps -> 0.

Bases of solutions, connection coefficients, unfolded Stokes multipliers and
monodromy matrices, Borel sums of the confluent series, and the associated
Riccati system, each with an independent numerical oracle.
"""

from .core import (BranchedPoint, EvalResult, HypConfluenceError, as_branched)
from .special import (branched_pow, gamma, loggamma, pochhammer,
                      reciprocal_gamma)
from .hypergeometric import (SeriesEval, f11, f20_truncated, f21,
                             f21_degenerate_limit)
from .bases import (Params, SectorConfig, H_eps, basis_eval, check_sign,
                    connection_coeffs, kappa, lemma_symmetry, lens_point,
                    sector_classify)
from .stokes import (Mat2, PathSpec, StokesPair, log_terms_predicate,
                     monodromy_matrix, product_L, product_L_closed,
                     stokes_limits, unfolded_multipliers,
                     wild_continuous_split_check)
from .borel import (LateralTag, H0_eval, borel_transform, g_closed_form,
                    h_k_closed_form, laplace_sum, stokes_jump_g, stokes_jump_k)
from .paths import (TransportResult, monodromy_via_integration,
                    transport_linear, transport_riccati)
from .riccati import (L_universal, first_integral_eval, rho_eval,
                      riccati_field, singular_points, universal_map)

__version__ = "0.1.0"
