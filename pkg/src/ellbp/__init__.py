"""Elliptic Laurent biorthogonal polynomials: exact constructions and
numerical verification of their identities.

The exact side (rational arithmetic throughout): the three-term family
recurrences, companion A_n/B_n polynomials, two-sided moment tables,
reciprocal/partner families, Christoffel and Geronimus transforms,
reflection parameters and the symmetric polynomials on [-2, 2].  The
numerical side: complete/incomplete elliptic integrals via the AGM, the
explicit circle and interval weights, quadrature Gram matrices and the
continued-fraction/contact-order checks.
"""

from .exactnum import (
    Poly,
    Rational,
    TruncatedSeries,
    format_rational,
    harmonic_number,
    hyp2f1_series,
    parse_rational,
    pochhammer,
    series_divide,
)
from .elliptic import (
    EllipticTriple,
    K_unit_modulus,
    complete_Jn,
    complete_triple,
    incomplete_Jn,
    legendre_relation_residual,
)
from .lbp import (
    FamilySpec,
    MomentTable,
    PolySequence,
    G_value,
    assoc_AB,
    associated_family,
    associated_P1,
    beta_poly,
    custom_family,
    exact_moments,
    explicit_A_legendre,
    explicit_A_series,
    hermite_AB,
    hermite_family,
    legendre_Y,
    moments_from_orthogonality,
    monic_P,
    normalization_h,
    partner_polys,
    reciprocal_family,
    sc_coefficient_tables,
    stieltjes_carlitz_family,
    wronskian_residual,
    xi_constant,
)
from .transforms import (
    ChristoffelData,
    GeronimusData,
    christoffel,
    christoffel_U,
    christoffel_zero,
    christoffel_zero_moments,
    christoffel_zero_polys,
    ct_gt_roundtrip,
    geronimus,
)
from .szego import (
    ReflectionSequence,
    SymmetricOPSequence,
    WeightKind,
    associated_legendre_u,
    circle_rho,
    circle_rho_tilde,
    dg_map_u,
    interval_legendre_w,
    interval_w,
    reflection_params,
    symmetric_S,
    szego_polys,
    weight,
)
from .verify import (
    GramReport,
    QuadratureGrid,
    circle_gram,
    circle_grid,
    contact_order,
    geronimus_gram,
    hermite_biorthogonality_gram,
    interval_gram,
    interval_grid,
    moment_weight_check,
    pade_order_check,
    pade_reciprocal_check,
    szego_gram,
    tfraction_convergent,
)

__version__ = "0.1.0"
