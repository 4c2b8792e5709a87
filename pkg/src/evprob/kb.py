"""Knowledge base of membership, subset and proportion statements.

A query ``(object, target)`` is answered in three steps:

1. collect every class the object belongs to (directly or through subset
   chaining) that has a recorded proportion for ``target``;
2. drop any class whose interval conflicts with that of a known subclass
   that is also a candidate;
3. if the survivors all nest, return the narrowest; otherwise hand them to
   one of the resolution procedures.
"""

from __future__ import annotations

from dataclasses import dataclass
from graphlib import CycleError, TopologicalSorter
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple, Union

from .interval import Interval, conflicts, narrowest
from .resolution import ResolutionResult, UnknownAlgorithmError, get_algorithm

__all__ = [
    "Candidate",
    "KBError",
    "KnowledgeBase",
    "Membership",
    "Proportion",
    "Query",
    "QueryResult",
    "QUERY_ALGORITHMS",
    "SubsetRel",
    "Statement",
    "answer_query",
    "build_kb",
    "candidates_for",
    "subset_dominance_filter",
]

QUERY_ALGORITHMS = ("alg1", "alg2", "alg2prime")
UNIT = Interval(0, 1)


@dataclass(frozen=True, order=True)
class Membership:
    obj: str
    cls: str


@dataclass(frozen=True, order=True)
class SubsetRel:
    sub: str
    sup: str


@dataclass(frozen=True)
class Proportion:
    target: str
    cls: str
    interval: Interval


@dataclass(frozen=True, order=True)
class Query:
    obj: str
    target: str


Statement = Union[Membership, SubsetRel, Proportion]


class KBError(ValueError):
    """Inconsistent knowledge base; ``statements`` are the ones at fault."""

    def __init__(self, message: str, statements: Iterable = ()):
        super().__init__(message)
        self.statements = tuple(statements)


def statement_key(s) -> tuple:
    if isinstance(s, Membership):
        return (0, s.obj, s.cls)
    if isinstance(s, SubsetRel):
        return (1, s.sub, s.sup)
    if isinstance(s, Proportion):
        return (2, s.target, s.cls, s.interval.lower, s.interval.upper)
    if isinstance(s, Query):
        return (3, s.obj, s.target)
    raise TypeError(f"not a statement: {s!r}")


class KnowledgeBase:
    """Immutable store of statements with derived subset and membership closures.

    Build with :func:`build_kb`.  Two knowledge bases compare equal when
    they hold the same set of statements and queries.
    """

    def __init__(
        self,
        statements: Tuple[Statement, ...],
        supersets: Dict[str, FrozenSet[str]],
        memberships: Dict[str, FrozenSet[str]],
        proportions: Dict[Tuple[str, str], Interval],
        queries: Tuple[Query, ...] = (),
    ):
        self.statements = statements
        self._supersets = supersets
        self._memberships = memberships
        self._proportions = proportions
        self.queries = queries

    def supersets(self, cls: str) -> FrozenSet[str]:
        """All strict supersets of ``cls`` under the transitive subset relation."""
        return self._supersets.get(cls, frozenset())

    def is_subset(self, sub: str, sup: str) -> bool:
        return sup in self.supersets(sub)

    def classes_of(self, obj: str) -> FrozenSet[str]:
        """Asserted classes of ``obj`` plus everything reachable by subset chaining."""
        return self._memberships.get(obj, frozenset())

    def proportion(self, target: str, cls: str) -> Optional[Interval]:
        return self._proportions.get((target, cls))

    @property
    def objects(self) -> List[str]:
        return sorted(self._memberships)

    def canonical(self) -> Tuple[tuple, ...]:
        return tuple(
            sorted({statement_key(s) for s in self.statements + self.queries})
        )

    def __eq__(self, other):
        if not isinstance(other, KnowledgeBase):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    def __repr__(self):
        return f"<KnowledgeBase {len(self.statements)} statements, {len(self.queries)} queries>"


def _subset_closure(rels: List[SubsetRel]) -> Dict[str, FrozenSet[str]]:
    direct: Dict[str, set] = {}
    for r in rels:
        direct.setdefault(r.sub, set()).add(r.sup)
    try:
        # supersets are yielded before their subclasses
        order = list(TopologicalSorter(direct).static_order())
    except CycleError as exc:
        cycle = list(dict.fromkeys(exc.args[1]))
        involved = [r for r in rels if r.sub in cycle and r.sup in cycle]
        raise KBError(
            f"subset cycle involving {', '.join(sorted(cycle))}", involved
        ) from None
    closure: Dict[str, FrozenSet[str]] = {}
    for cls in order:
        ups = set()
        for sup in direct.get(cls, ()):
            ups.add(sup)
            ups |= closure[sup]
        closure[cls] = frozenset(ups)
    return closure


def build_kb(statements: Iterable, queries: Iterable[Query] = ()) -> KnowledgeBase:
    """Validate statements and derive the subset and membership closures.

    ``Query`` objects may be mixed into ``statements``; they are kept aside.
    Raises :class:`KBError` on a subset cycle (including ``A ⊂ A``) or on two
    different intervals for the same (target, class).
    """
    stmts: List[Statement] = []
    qs = list(queries)
    for s in statements:
        if isinstance(s, Query):
            qs.append(s)
        elif isinstance(s, (Membership, SubsetRel, Proportion)):
            stmts.append(s)
        else:
            raise TypeError(f"not a statement: {s!r}")
    stmts = list(dict.fromkeys(stmts))
    qs = list(dict.fromkeys(qs))

    proportions: Dict[Tuple[str, str], Proportion] = {}
    for s in stmts:
        if isinstance(s, Proportion):
            prev = proportions.get((s.target, s.cls))
            if prev is not None:
                raise KBError(
                    f"duplicate proportion for ({s.target}, {s.cls})", [prev, s]
                )
            proportions[(s.target, s.cls)] = s

    supersets = _subset_closure([s for s in stmts if isinstance(s, SubsetRel)])

    members: Dict[str, set] = {}
    for s in stmts:
        if isinstance(s, Membership):
            found = members.setdefault(s.obj, set())
            found.add(s.cls)
            found |= supersets.get(s.cls, frozenset())

    return KnowledgeBase(
        tuple(stmts),
        supersets,
        {o: frozenset(v) for o, v in members.items()},
        {k: p.interval for k, p in proportions.items()},
        tuple(qs),
    )


@dataclass(frozen=True)
class Candidate:
    cls: str
    interval: Interval


@dataclass(frozen=True)
class QueryResult:
    interval: Interval
    reference_classes: FrozenSet[str]
    dropped_by_dominance: FrozenSet[str]
    resolution: Optional[ResolutionResult]
    status: str  # "no_evidence" | "nesting" | "resolved"
    algorithm: str
    candidates: Tuple[Candidate, ...] = ()


def candidates_for(kb: KnowledgeBase, obj: str, target: str) -> List[Candidate]:
    """Candidate reference classes for ``obj`` and ``target``, sorted by class name."""
    out = []
    for cls in sorted(kb.classes_of(obj)):
        iv = kb.proportion(target, cls)
        if iv is not None:
            out.append(Candidate(cls, iv))
    return out


def subset_dominance_filter(
    cands: List[Candidate], kb: KnowledgeBase
) -> Tuple[List[Candidate], FrozenSet[str]]:
    """Drop each candidate that conflicts with a candidate known to be its subclass.

    All comparisons are made against the unfiltered list in one pass, so a
    dropped class still dominates its own superclasses.
    """
    dropped = {
        big.cls
        for big in cands
        for small in cands
        if kb.is_subset(small.cls, big.cls) and conflicts(small.interval, big.interval)
    }
    kept = [c for c in cands if c.cls not in dropped]
    return kept, frozenset(dropped)


def answer_query(
    kb: KnowledgeBase, obj: str, target: str, algorithm: str = "alg2prime"
) -> QueryResult:
    if algorithm not in QUERY_ALGORITHMS:
        raise UnknownAlgorithmError(
            f"unknown algorithm {algorithm!r}; expected one of {', '.join(QUERY_ALGORITHMS)}"
        )
    resolver = get_algorithm(algorithm)

    kept, dropped = subset_dominance_filter(candidates_for(kb, obj, target), kb)
    if not kept:
        return QueryResult(UNIT, frozenset(), dropped, None, "no_evidence", algorithm)

    intervals = [c.interval for c in kept]
    if all(not conflicts(a, b) for i, a in enumerate(intervals) for b in intervals[i + 1 :]):
        best = narrowest(intervals)
        classes = frozenset(c.cls for c in kept if c.interval == best)
        return QueryResult(best, classes, dropped, None, "nesting", algorithm, tuple(kept))

    res = resolver(intervals)
    classes = frozenset(kept[i].cls for i in res.constituent_classes)
    return QueryResult(res.interval, classes, dropped, res, "resolved", algorithm, tuple(kept))
