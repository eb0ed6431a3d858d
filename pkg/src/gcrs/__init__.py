"""gcrs: Groebner-based computation in graded commutative algebras over small finite fields.

The library computes reduced Groebner bases, annihilators and colon ideals,
Hilbert functions, Krull dimension, and regular-sequence certificates for
finitely presented graded algebras over F_p and F_{p^r}, together with a
`.gcr` presentation format, scalar base change, and exhaustive degree scans.
A cohomology-ring fixture (`load_fixture("hs260")`) ships with the package;
the `gcrs` command line exposes the full pipeline.
"""

from .errors import (
    AlgebraError,
    AlreadyExtendedError,
    BadCoefficientError,
    CharacteristicMismatchError,
    ContextMismatchError,
    DegreeCapExceededError,
    DegreeMismatchError,
    DuplicateGeneratorError,
    EnumerationTooLargeError,
    ExactDivisionError,
    FieldMismatchError,
    LengthMismatchError,
    NonHomogeneousElementError,
    NonHomogeneousRelationError,
    NotPrimeError,
    ParseError,
    PresentationError,
    ReducibleModulusError,
    UnknownGeneratorError,
    ZeroElementError,
    ZeroInputError,
    ZeroWitnessError,
)
from .fields import Field, FieldElement
from .ring import (
    ELIMINATION_BLOCK,
    MAX_EXPONENT,
    WEIGHTED_DEGREVLEX,
    Monomial,
    MonomialOrder,
    Polynomial,
    Ring,
)
from .expr import parse_field_literal, parse_polynomial
from .presentations import (
    Presentation,
    base_change,
    fixture_path,
    fixture_sha256,
    load_fixture,
    parse_presentation,
    permute_generators,
    serialize_presentation,
)
from .groebner import (
    GBStats,
    GroebnerBasis,
    buchberger,
    divide_exact,
    elimination_gb,
    ideal_membership,
    normal_form,
    s_polynomial,
)
from .ideals import (
    Ideal,
    QuotientRing,
    annihilator,
    colon,
    ideal_equal,
    ideal_intersect,
    ideal_sum,
)
from .graded import (
    DEFAULT_ENUM_CAP,
    HilbertTable,
    component_enumerate,
    component_size,
    hilbert_function,
    krull_dimension,
    standard_monomials,
)
from .regular import (
    ElementVerdict,
    RegularSequenceReport,
    ScanEntry,
    ScanReport,
    SearchOutcome,
    annihilators_disjoint,
    exhaustive_regular_scan,
    is_regular,
    search_regular_sequence,
    verify_sequence,
    witness_scan,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
