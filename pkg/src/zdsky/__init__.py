"""Zero-divisor box-kites and emanation tables in the Cayley-Dickson 2^N-ions."""

from .algebra import (
    AlgebraContext,
    Multivector,
    SignedBasis,
    Trip,
    basis_product,
    doubling_product,
    enumerate_trips,
    sign_of,
    trip_count,
    trip_orientation,
)
from .errors import ZdskyError
from .structures import (
    BoxKite,
    Kind,
    Mark,
    StrutContext,
    assessor_of,
    classify_boxkite,
    dmz_test,
    enumerate_candidate_boxkites,
    hidefill_probe,
    sails,
    viziers_check,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraContext", "Multivector", "SignedBasis", "Trip", "basis_product", "doubling_product",
    "enumerate_trips", "sign_of", "trip_count", "trip_orientation", "ZdskyError",
    "BoxKite", "Kind", "Mark", "StrutContext", "assessor_of", "classify_boxkite", "dmz_test",
    "enumerate_candidate_boxkites", "hidefill_probe", "sails", "viziers_check",
]
