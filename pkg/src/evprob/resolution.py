"""Conflict resolution over a set of candidate intervals.

Four procedures are provided:

``resolve_alg1``
    The conservative pairwise cover procedure.  Intervals that took part in a
    conflict are marked but stay in the working set, so they keep
    interfering with later passes.
``resolve_alg2``
    The same loop, except marked intervals are deleted at the end of each
    pass so only the covers they produced carry on.
``resolve_alg2prime``
    A single greedy sweep in ascending width order that picks the
    representatives directly and returns their cover.
``oracle_resolve``
    Exhaustive search over subsets of the inputs for the narrowest cover of
    a subset that every left-out interval has a nested representative in.
    Exponential; meant for checking the others on small inputs.

Every result keeps track of which original inputs (by position) a returned
cover was built from.  Duplicate inputs are merged and their positions
pooled.

Internally endpoints are rescaled to integers over a common denominator so
the inner loops compare plain ints; this is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Callable, Dict, FrozenSet, List, Sequence, Tuple

from .interval import Interval

__all__ = [
    "ALGORITHMS",
    "IterationTrace",
    "NoCandidatesError",
    "OracleLimitError",
    "ResolutionResult",
    "TrackedInterval",
    "UnknownAlgorithmError",
    "get_algorithm",
    "oracle_resolve",
    "resolve",
    "resolve_alg1",
    "resolve_alg2",
    "resolve_alg2prime",
]

ORACLE_MAX_SIZE = 12
_MAX_PASSES = 10_000

Key = Tuple[int, int]
Members = FrozenSet[int]


class NoCandidatesError(ValueError):
    def __init__(self, message="no candidates"):
        super().__init__(message)


class OracleLimitError(ValueError):
    def __init__(self, message="oracle size limit exceeded"):
        super().__init__(message)


class UnknownAlgorithmError(ValueError):
    pass


@dataclass(frozen=True)
class TrackedInterval:
    """An interval together with the input positions it covers."""

    interval: Interval
    constituents: FrozenSet[int]
    marked: bool = False


@dataclass(frozen=True)
class IterationTrace:
    """One pass of a procedure.

    ``generated`` is what the pass produced (covers for the iterative
    procedures, the chosen representative for the greedy sweep);
    ``surviving`` is the working set after the pass.
    """

    iteration: int
    generated: Tuple[TrackedInterval, ...]
    surviving: Tuple[TrackedInterval, ...]


@dataclass(frozen=True)
class ResolutionResult:
    interval: Interval
    constituent_classes: FrozenSet[int]
    trace: Tuple[IterationTrace, ...]
    algorithm: str
    # distinct covers that tied on width (oracle only)
    ties: Tuple[Interval, ...] = field(default=())


# -- integer-scaled helpers ------------------------------------------------


def _order(k: Key) -> tuple:
    return (k[1] - k[0], k[0], k[1])


def _nests(a: Key, b: Key) -> bool:
    return b[0] <= a[0] and a[1] <= b[1]


def _conflict(a: Key, b: Key) -> bool:
    return not (b[0] <= a[0] and a[1] <= b[1]) and not (
        a[0] <= b[0] and b[1] <= a[1]
    )


class _Scaled:
    """Inputs deduplicated and rescaled to integer endpoints."""

    __slots__ = ("denominator", "members")

    def __init__(self, inputs: Sequence[Interval]):
        if not inputs:
            raise NoCandidatesError()
        den = lcm(*(d for x in inputs for d in (x.lower.denominator, x.upper.denominator)))
        members: Dict[Key, set] = {}
        for i, x in enumerate(inputs):
            k = (
                x.lower.numerator * (den // x.lower.denominator),
                x.upper.numerator * (den // x.upper.denominator),
            )
            members.setdefault(k, set()).add(i)
        self.denominator = den
        self.members: Dict[Key, Members] = {
            k: frozenset(v) for k, v in members.items()
        }

    def interval(self, k: Key) -> Interval:
        d = self.denominator
        return Interval(Fraction(k[0], d), Fraction(k[1], d))

    def tracked(self, k: Key, members: Members, marked: bool = False) -> TrackedInterval:
        return TrackedInterval(self.interval(k), members, marked)

    def keys(self) -> List[Key]:
        return sorted(self.members, key=_order)


def _singleton(scaled: _Scaled, algorithm: str) -> ResolutionResult:
    (k,) = scaled.members
    return ResolutionResult(scaled.interval(k), scaled.members[k], (), algorithm)


# -- alg1: persistent marks ---------------------------------------------


def resolve_alg1(inputs: Sequence[Interval]) -> ResolutionResult:
    """Pairwise covers with persistent marks; marked intervals keep interfering.

    Runs until a pass produces no cover that is not already in the working
    set, then returns the narrowest interval never involved in a conflict.
    """
    scaled = _Scaled(inputs)
    if len(scaled.members) == 1:
        return _singleton(scaled, "alg1")

    work: Dict[Key, Members] = dict(scaled.members)
    marked: set = set()
    # every cover produced so far, with pooled constituents; a pass's output
    # is the union of what earlier passes produced and what changed pairs add
    produced: Dict[Key, Members] = {}
    dirty = set(work)
    trace = []

    for iteration in range(1, _MAX_PASSES + 1):
        keys = sorted(work, key=_order)
        for i, a in enumerate(keys):
            for b in keys[i + 1 :]:
                if a not in dirty and b not in dirty:
                    # unchanged pair: same cover and same marks as last pass
                    continue
                if _conflict(a, b):
                    c = (min(a[0], b[0]), max(a[1], b[1]))
                    produced[c] = produced.get(c, frozenset()) | work[a] | work[b]
                    marked.add(a)
                    marked.add(b)

        fresh = [c for c in produced if c not in work]
        dirty = set()
        for c, members in produced.items():
            old = work.get(c)
            merged = members if old is None else old | members
            if merged != old:
                work[c] = merged
                dirty.add(c)

        trace.append(
            IterationTrace(
                iteration,
                tuple(scaled.tracked(c, produced[c]) for c in sorted(produced, key=_order)),
                tuple(
                    scaled.tracked(k, work[k], k in marked)
                    for k in sorted(work, key=_order)
                ),
            )
        )
        if not fresh:
            break
    else:  # pragma: no cover - the key space is finite
        raise RuntimeError("alg1 did not reach a fixpoint")

    best = min((k for k in work if k not in marked), key=_order)
    return ResolutionResult(scaled.interval(best), work[best], tuple(trace), "alg1")


# -- alg2: delete marked intervals ---------------------------------------


def resolve_alg2(inputs: Sequence[Interval]) -> ResolutionResult:
    """Pairwise covers, deleting every interval that took part in a conflict.

    Loops until a pass finds no conflicting pair and returns the narrowest
    interval left.  The answer always nests in ``resolve_alg1``'s, but it
    can be wider than ``resolve_alg2prime``'s: two wide inputs that share a
    narrow core but conflict with each other leave their cover behind, and
    that cover can conflict with later ones.
    """
    scaled = _Scaled(inputs)
    if len(scaled.members) == 1:
        return _singleton(scaled, "alg2")

    work: Dict[Key, Members] = dict(scaled.members)
    seen = {frozenset(work)}
    trace = []

    for iteration in range(1, _MAX_PASSES + 1):
        keys = sorted(work, key=_order)
        produced: Dict[Key, Members] = {}
        marked = set()
        for i, a in enumerate(keys):
            for b in keys[i + 1 :]:
                if _conflict(a, b):
                    c = (min(a[0], b[0]), max(a[1], b[1]))
                    produced[c] = produced.get(c, frozenset()) | work[a] | work[b]
                    marked.add(a)
                    marked.add(b)
        if not produced:
            break
        for k in marked:
            del work[k]
        for c, members in produced.items():
            work[c] = work.get(c, frozenset()) | members

        trace.append(
            IterationTrace(
                iteration,
                tuple(scaled.tracked(c, produced[c]) for c in sorted(produced, key=_order)),
                tuple(scaled.tracked(k, work[k]) for k in sorted(work, key=_order)),
            )
        )
        state = frozenset(work)
        if state in seen:
            raise RuntimeError("alg2 revisited an earlier working set")
        seen.add(state)
    else:  # pragma: no cover
        raise RuntimeError("alg2 did not terminate")

    best = min(work, key=_order)
    return ResolutionResult(scaled.interval(best), work[best], tuple(trace), "alg2")


# -- alg2prime: greedy sweep ---------------------------------------------


def resolve_alg2prime(inputs: Sequence[Interval]) -> ResolutionResult:
    """Greedy sweep by ascending (width, lower, upper).

    Take the first unmarked interval as a representative, mark everything
    that agrees with it, repeat; return the cover of the representatives.
    """
    scaled = _Scaled(inputs)
    if len(scaled.members) == 1:
        return _singleton(scaled, "alg2prime")

    pending = scaled.keys()
    chosen: List[Key] = []
    trace = []
    while pending:
        head, rest = pending[0], pending[1:]
        chosen.append(head)
        pending = [k for k in rest if _conflict(k, head)]
        trace.append(
            IterationTrace(
                len(chosen),
                (scaled.tracked(head, scaled.members[head]),),
                tuple(scaled.tracked(k, scaled.members[k]) for k in pending),
            )
        )

    lo = min(k[0] for k in chosen)
    hi = max(k[1] for k in chosen)
    members = frozenset().union(*(scaled.members[k] for k in chosen))
    return ResolutionResult(scaled.interval((lo, hi)), members, tuple(trace), "alg2prime")


# -- exhaustive oracle -----------------------------------------------------


def oracle_resolve(
    inputs: Sequence[Interval], max_size: int = ORACLE_MAX_SIZE
) -> ResolutionResult:
    """Brute-force the narrowest admissible cover.

    A subset S of the distinct inputs is admissible when every input outside
    S has some member of S nested inside it (a nested interval is never
    wider).  The narrowest cover over admissible subsets wins, ties broken
    by lower then upper endpoint.  Distinct covers tying on width are
    reported in ``ties``.
    """
    scaled = _Scaled(inputs)
    keys = scaled.keys()
    n = len(keys)
    if n > max_size:
        raise OracleLimitError()

    # inside[i]: bitmask of other inputs nested in input i
    inside = [
        sum(1 << j for j in range(n) if j != i and _nests(keys[j], keys[i]))
        for i in range(n)
    ]

    best: Dict[Key, Tuple[int, int]] = {}  # cover -> (popcount, mask) of smallest subset
    for mask in range(1, 1 << n):
        if any(not (mask >> i) & 1 and not inside[i] & mask for i in range(n)):
            continue
        members = [keys[i] for i in range(n) if (mask >> i) & 1]
        c = (min(k[0] for k in members), max(k[1] for k in members))
        rank = (len(members), mask)
        if c not in best or rank < best[c]:
            best[c] = rank

    ranked = sorted(best, key=_order)
    winner = ranked[0]
    tied = [c for c in ranked if c[1] - c[0] == winner[1] - winner[0]]
    mask = best[winner][1]
    subset = [keys[i] for i in range(n) if (mask >> i) & 1]
    members = frozenset().union(*(scaled.members[k] for k in subset))
    trace = (
        IterationTrace(
            1,
            tuple(scaled.tracked(c, frozenset()) for c in tied),
            tuple(scaled.tracked(k, scaled.members[k]) for k in subset),
        ),
    )
    ties = tuple(scaled.interval(c) for c in tied) if len(tied) > 1 else ()
    return ResolutionResult(scaled.interval(winner), members, trace, "oracle", ties)


ALGORITHMS: Dict[str, Callable[[Sequence[Interval]], ResolutionResult]] = {
    "alg1": resolve_alg1,
    "alg2": resolve_alg2,
    "alg2prime": resolve_alg2prime,
    "oracle": oracle_resolve,
}


def get_algorithm(name: str) -> Callable[[Sequence[Interval]], ResolutionResult]:
    try:
        return ALGORITHMS[name]
    except KeyError:
        raise UnknownAlgorithmError(
            f"unknown algorithm {name!r}; expected one of {', '.join(ALGORITHMS)}"
        ) from None


def resolve(inputs: Sequence[Interval], algorithm: str = "alg2prime") -> ResolutionResult:
    return get_algorithm(algorithm)(inputs)
