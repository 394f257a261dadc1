"""Exact Ohm-Rush content ideals, Gaussian checks and witness searches over
small presented rings."""

__version__ = "0.1.0"

from .algebra import AffineSemigroup, PolyAlgebra, PolyElement, SeriesElement, poly_mul, series_mul
from .content import (
    GaussianReport,
    PairCheck,
    content,
    content_transport_check,
    dedekind_mertens_exponent,
    gaussian_pair_check,
    gaussian_witness_search,
    is_regular_element,
    loewy_length,
    quotient_chain_gaussian_check,
    series_content,
)
from .errors import (
    BudgetExceeded,
    ConfigError,
    FieldMismatch,
    InfiniteColength,
    InvariantViolation,
    IsGorenstein,
    NonPrimeModulus,
    NotLocal,
    OhmRushError,
    ParseError,
    RingMismatch,
    SemigroupMismatch,
    UnknownVariable,
    UnsupportedRing,
)
from .forge import forge_nongauss_pair, forge_nongor_gaussian
from .grammar import emit, parse_element, parse_poly, parse_ring, parse_series
from .graded import (
    GradedPiece,
    GradedPolyRing,
    HomogeneousIdeal,
    graded_contains_up_to,
    graded_equal_up_to,
    graded_piece,
    polynomial_ring,
)
from .ideals import (
    Ideal,
    annihilator,
    double_annihilator_closed,
    ideal_contains,
    ideal_equal,
    ideal_product,
    ideal_span,
    ideal_sum,
    is_gorenstein,
    is_principal,
    maximal_ideal,
    min_generators,
    socle,
    socle_dimension,
)
from .rings import (
    Integers,
    LocalFactor,
    Modular,
    MonomialQuotient,
    PrimeField,
    RingSpec,
    crt_decompose,
    crt_reconstruct,
    is_unit,
    is_zero_divisor,
    make_ring,
    normal_form,
)
from .scenarios import ScenarioConfig, ScenarioReport, run_scenario
