"""Journey transitive closure and temporal connectivity of evolving graphs."""

from ._tcheck import (
    ClosureGraph,
    ConnectivityReport,
    DensityProfile,
    EvolvingGraph,
    JourneySemantics,
    ParseError,
    compute_closure,
    density_profile,
    enumerate_journeys,
    generate,
    is_temporally_connected,
    journey_exists,
    nonstrict_closure,
    oracle_closure,
    parse_closure,
    parse_teg,
    serialize_closure,
    serialize_teg,
    strict_closure,
)

__all__ = [
    "ClosureGraph",
    "ConnectivityReport",
    "DensityProfile",
    "EvolvingGraph",
    "JourneySemantics",
    "ParseError",
    "compute_closure",
    "density_profile",
    "enumerate_journeys",
    "generate",
    "is_temporally_connected",
    "journey_exists",
    "nonstrict_closure",
    "oracle_closure",
    "parse_closure",
    "parse_teg",
    "serialize_closure",
    "serialize_teg",
    "strict_closure",
]
