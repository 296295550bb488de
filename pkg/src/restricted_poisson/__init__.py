"""Exact computations with restricted Poisson algebras over F_p (p = 3, 5, 7).

Modules
-------
algebra
    F_p polynomials, monomial quotients, divided partials, truncated t-series.
poisson
    Poisson brackets from generator tables and their axiom checks.
restricted
    Lambda_p, Phi_p, p-maps built on monomials, and the restricted identity suites.
lie
    Restricted Lie algebras, S(L), s(L), tensor products, Hopf checks, catalog.
quantize
    Star products for constant brackets and the p-map they induce.
tograph
    Ordered-graph combinatorics behind the star-power coefficients.
lierinehart
    Kähler forms as a restricted Lie-Rinehart algebra.
"""

from .algebra import (MonomialIdeal, Poly, PolyRing, TSeries, check_char, divided_partial,
                      frobenius_power, parse_poly, poly_arith, reduce_mod_ideal, series_mul)
from .lie import (CATALOG_NAMES, RestrictedLieAlgebra, TensorProduct, catalog,
                  closed_form_affine, closed_form_constant, closed_form_p3, closed_form_p5,
                  hopf_check, sl2, solvable2, symmetric_poisson, tensor_product,
                  truncated_symmetric, verify_restricted_lie_fd, verify_tensor)
from .lierinehart import (KahlerForm, LieRinehartStructure, anchor_apply, differential,
                          form_bracket, form_pmap, verify_lie_rinehart)
from .poisson import (InvalidAlgebraError, PoissonAlgebra, ad_power, bracket, nested_bracket,
                      verify_poisson)
from .quantize import (StarAlgebra, all_M, check_vanishing, derive_pmap, extract_M, star,
                       star_power)
from .report import Check, Report
from .restricted import (CentralityError, IdealError, JacobsonError, RestrictedPoissonAlgebra,
                         build_pmap, lambda_p, modify_pmap, phi_identities, phi_p,
                         phi_p_prime, pmap_eval, quotient_restricted, restricted_algebra,
                         s_coeff, semilinear_shift, verify_frobenius_condition,
                         verify_restricted, verify_restricted_lie)
from .tograph import (ComponentProfile, Tograph, class_census, combinatorial_M,
                      count_equivalent, edge_multisets, enumerate_gamma, equivalence_class,
                      graph_weight, vanishing_certificate)

__version__ = "0.1.0"
