"""Laurent expansions of arcs on triangulated surfaces.

The package computes cluster variables attached to arcs on unpunctured
surfaces, both commutative and quantum, by enumerating perfect matchings of
snake graphs.  Quantum powers of q are assigned by a valuation built from
local twist moves, and an independent seed-mutation oracle cross-checks the
results in exact arithmetic.
"""

from .expansion import (
    CommTerm,
    ExpansionError,
    MatchingRecord,
    OracleRun,
    QuantumExpansion,
    VerifyReport,
    commutative_expand,
    commutative_to_string,
    exponent_vector,
    oracle_mutate_variables,
    quantum_expand,
    verify_against_oracle,
)
from .qalgebra import (
    ExactDivisionError,
    LambdaForm,
    QuantumLaurent,
    coeff_to_string,
    exact_right_divide,
    qmul,
    specialize_q1,
)
from .seeds import (
    Seed,
    SeedError,
    check_compatible,
    mutate_B,
    mutate_Lambda,
    mutate_seed,
    mutate_tropical,
    principal_lambda,
    principal_seed,
)
from .snakegraph import SnakeGraph, TauClass, Tile
from .surface import (
    Arc,
    ArcTrace,
    SurfaceError,
    Triangle,
    Triangulation,
    flip,
    signed_adjacency,
    trace_arc,
)
from .valuation import ValuationError, compute_valuation, omega

__all__ = [
    "Arc",
    "ArcTrace",
    "CommTerm",
    "ExactDivisionError",
    "ExpansionError",
    "LambdaForm",
    "MatchingRecord",
    "OracleRun",
    "QuantumExpansion",
    "QuantumLaurent",
    "Seed",
    "SeedError",
    "SnakeGraph",
    "SurfaceError",
    "TauClass",
    "Tile",
    "Triangle",
    "Triangulation",
    "ValuationError",
    "VerifyReport",
    "check_compatible",
    "coeff_to_string",
    "commutative_expand",
    "commutative_to_string",
    "compute_valuation",
    "exact_right_divide",
    "exponent_vector",
    "flip",
    "mutate_B",
    "mutate_Lambda",
    "mutate_seed",
    "mutate_tropical",
    "omega",
    "oracle_mutate_variables",
    "principal_lambda",
    "principal_seed",
    "qmul",
    "quantum_expand",
    "signed_adjacency",
    "specialize_q1",
    "trace_arc",
    "verify_against_oracle",
]

__version__ = "0.1.0"
