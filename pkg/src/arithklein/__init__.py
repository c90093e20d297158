"""Search for arithmetic Kleinian groups generated by two elliptic elements.

The pipeline enumerates candidate parameter triples (p, q, r), searches the
coefficient space of the minimal polynomial of the commutator trace parameter
over the real field L = Q(cos 2pi/p, cos 2pi/q), filters candidates by root
location, contour membership and factorization conditions, and compares the
survivors against the published census tables.
"""

from .errors import (
    ArithkleinError,
    CertificationFailed,
    DegenerateGamma,
    IllConditioned,
    NoPowerBasisFound,
    OutOfRange,
    ParabolicFixedForm,
    SearchSpaceOverflow,
)
from .realfield import FieldSpec, FieldElement, build_field

__version__ = "0.1.0"

__all__ = [
    "ArithkleinError",
    "CertificationFailed",
    "DegenerateGamma",
    "FieldElement",
    "FieldSpec",
    "IllConditioned",
    "NoPowerBasisFound",
    "OutOfRange",
    "ParabolicFixedForm",
    "SearchSpaceOverflow",
    "build_field",
]
