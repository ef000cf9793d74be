"""Exact symbolic computation for polynomial automorphisms of affine 3-space.

The package computes with locally nilpotent derivations and their
exponential automorphisms over exact rational coefficients, including
the Nagata map, and decomposes the centralizer of the degree-one shear
exp(D) into scalar, shift and kernel-shear factors.

Hot term-map kernels run from a compiled Cython core when available;
``backend_name()`` reports which implementation is active and the
``CREMONA3_BACKEND`` environment variable forces one.
"""

from ._backend import available_backends, backend_name
from .autgroup import (
    AffineGenerator,
    AutWord,
    ExponentialGenerator,
    GeneratorShape,
    PolyMap,
    ScalarGenerator,
    TriangularGenerator,
    commutes,
    compose,
    evaluate,
    invert_word,
    is_tame_generator,
    parse_poly_map,
)
from .centralizer import (
    Decomposition,
    IdentityCheck,
    TheoremReport,
    decompose,
    is_in_H,
    is_in_centralizer,
    reconstruct,
    verify_theorem_identities,
)
from .derivation import (
    DEFAULT_BOUND,
    Derivation,
    KERNEL_VARIABLE_NAMES,
    Nilpotency,
    NilpotencyReport,
    from_kernel_coordinates,
    kernel_coordinates,
    nagata_derivation,
    nagata_invariant,
    partial_derivation,
)
from .errors import (
    ArityMismatch,
    BoundExceeded,
    Cremona3Error,
    DimensionMismatch,
    DomainError,
    IndexOutOfRange,
    InvalidGenerator,
    MalformedCentralizerElement,
    NotInCentralizer,
    NotInKerEKerD,
    NotInKernelRing,
    NotMonomialInK,
    ParseError,
    UnknownVariable,
)
from .exactpoly import (
    MINUS_INFINITY,
    ExactRational,
    Polynomial,
    rational,
    variables,
)
from .grammar import (
    format_map,
    format_polynomial,
    format_rational,
    parse_map,
    parse_polynomial,
)
from .nagata import (
    H_WEIGHTS,
    StandardObjects,
    TorusElement,
    UnipotentElement,
    character_lambda,
    commutes_with_weight_scaling,
    f2_element,
    is_in_K,
    k_monomial,
    lambda_degree,
    scale_unipotent,
    standard_objects,
    torus_conjugate,
)

__version__ = "0.1.0"
