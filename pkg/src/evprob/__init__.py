"""Interval-valued evidential probability with reference-class conflict resolution."""

__version__ = "0.1.0"

from .interval import (
    Interval,
    agrees,
    conflicts,
    cover,
    cover_all,
    narrowest,
    nests_in,
    parse_interval,
    width,
)
from .kb import (
    Candidate,
    KBError,
    KnowledgeBase,
    Membership,
    Proportion,
    Query,
    QueryResult,
    SubsetRel,
    answer_query,
    build_kb,
    candidates_for,
    subset_dominance_filter,
)
from .parser import ParseError, ParseFailure, parse_interval_list, parse_kb, serialize_kb
from .resolution import (
    ALGORITHMS,
    IterationTrace,
    NoCandidatesError,
    OracleLimitError,
    ResolutionResult,
    TrackedInterval,
    UnknownAlgorithmError,
    oracle_resolve,
    resolve,
    resolve_alg1,
    resolve_alg2,
    resolve_alg2prime,
)
