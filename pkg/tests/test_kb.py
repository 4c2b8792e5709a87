import pytest
from hypothesis import given
from hypothesis import strategies as st

from evprob.interval import Interval, cover_all, nests_in
from evprob.kb import (
    Candidate,
    KBError,
    Membership,
    Proportion,
    SubsetRel,
    answer_query,
    build_kb,
    candidates_for,
    subset_dominance_filter,
)
from evprob.resolution import UnknownAlgorithmError
from strategies import intervals

I = Interval

BERRY_CLASSES = {
    "RedBerries": I("0.70", "0.90"),
    "RainyDayBerries": I("0.30", "0.50"),
    "ThisRegion": I("0.70", "0.75"),
    "SoftBerries": I("0.35", "0.45"),
}


@pytest.fixture
def berries():
    stmts = [Membership("berries", c) for c in BERRY_CLASSES]
    stmts += [Proportion("Edible", c, iv) for c, iv in BERRY_CLASSES.items()]
    return build_kb(stmts)


def test_berries_candidates(berries):
    cands = candidates_for(berries, "berries", "Edible")
    assert [c.cls for c in cands] == sorted(BERRY_CLASSES)
    assert candidates_for(berries, "ghost", "Edible") == []
    assert candidates_for(berries, "berries", "Poisonous") == []


def test_class_without_statistics_is_excluded():
    kb = build_kb([Membership("o", "A"), Membership("o", "B"), Proportion("T", "A", I(0, "0.5"))])
    assert [c.cls for c in candidates_for(kb, "o", "T")] == ["A"]


def test_subset_chaining():
    kb = build_kb([SubsetRel("A", "B"), SubsetRel("B", "C"), Membership("o", "A")])
    assert kb.classes_of("o") == {"A", "B", "C"}
    assert kb.is_subset("A", "C") and not kb.is_subset("C", "A")


@pytest.mark.parametrize(
    "rels",
    [
        [SubsetRel("A", "B"), SubsetRel("B", "A")],
        [SubsetRel("A", "A")],
        [SubsetRel("A", "B"), SubsetRel("B", "C"), SubsetRel("C", "A"), SubsetRel("C", "D")],
    ],
)
def test_subset_cycles_rejected(rels):
    with pytest.raises(KBError, match="subset cycle involving") as exc:
        build_kb(rels)
    assert SubsetRel("C", "D") not in exc.value.statements


def test_duplicate_proportion():
    same = Proportion("T", "A", I(0, "0.5"))
    assert len(build_kb([same, same]).statements) == 1
    with pytest.raises(KBError, match=r"duplicate proportion for \(T, A\)"):
        build_kb([same, Proportion("T", "A", I(0, "0.6"))])


def test_dominance_filter():
    kb = build_kb([SubsetRel("Red", "Soft")])
    cands = [Candidate("Red", I("0.7", "0.9")), Candidate("Soft", I("0.35", "0.45"))]
    kept, dropped = subset_dominance_filter(cands, kb)
    assert [c.cls for c in kept] == ["Red"] and dropped == {"Soft"}

    kept, dropped = subset_dominance_filter(cands, build_kb([]))
    assert kept == cands and dropped == set()

    nested = [Candidate("Red", I("0.7", "0.8")), Candidate("Soft", I("0.6", "0.9"))]
    assert subset_dominance_filter(nested, kb) == (nested, frozenset())


def test_dominance_is_evaluated_simultaneously():
    # A ⊂ B ⊂ C with A conflicting B and B conflicting C: B and C both go,
    # even though B is itself dropped
    kb = build_kb([SubsetRel("A", "B"), SubsetRel("B", "C")])
    cands = [
        Candidate("A", I("0.1", "0.2")),
        Candidate("B", I("0.15", "0.5")),
        Candidate("C", I("0.4", "0.6")),
    ]
    kept, dropped = subset_dominance_filter(cands, kb)
    assert [c.cls for c in kept] == ["A"] and dropped == {"B", "C"}


def test_answer_query_berries(berries):
    r = answer_query(berries, "berries", "Edible", "alg1")
    assert r.interval == I("0.30", "0.90") and r.status == "resolved"
    for alg in ("alg2", "alg2prime"):
        r = answer_query(berries, "berries", "Edible", alg)
        assert r.interval == I("0.35", "0.75")
        assert r.reference_classes == {"ThisRegion", "SoftBerries"}


def test_answer_query_nesting_and_no_evidence(berries):
    kb = build_kb([Membership("o", "A"), Proportion("T", "A", I("0.2", "0.4"))])
    for alg in ("alg1", "alg2", "alg2prime"):
        r = answer_query(kb, "o", "T", alg)
        assert r.status == "nesting" and r.interval == I("0.2", "0.4")
        assert r.reference_classes == {"A"} and r.resolution is None
    r = answer_query(berries, "ghost", "Edible")
    assert r.status == "no_evidence" and r.interval == I(0, 1) and not r.reference_classes
    with pytest.raises(UnknownAlgorithmError):
        answer_query(berries, "berries", "Edible", "oracle")


def test_dominance_inside_query():
    kb = build_kb(
        [
            Membership("b", "Red"),
            Membership("b", "Soft"),
            SubsetRel("Red", "Soft"),
            Proportion("Edible", "Red", I("0.70", "0.90")),
            Proportion("Edible", "Soft", I("0.35", "0.45")),
        ]
    )
    r = answer_query(kb, "b", "Edible", "alg2")
    assert r.interval == I("0.70", "0.90")
    assert r.dropped_by_dominance == {"Soft"} and r.status == "nesting"


names = st.sampled_from(["A", "B", "C", "D", "E"])


@st.composite
def random_kbs(draw):
    stmts = []
    # edges only from lower to higher letter keep the relation acyclic
    for a, b in draw(st.lists(st.tuples(names, names), max_size=6)):
        if a < b:
            stmts.append(SubsetRel(a, b))
    stmts += [Membership("o", c) for c in draw(st.lists(names, max_size=3))]
    for c in draw(st.sets(names)):
        stmts.append(Proportion("T", c, draw(intervals())))
    return stmts


@given(random_kbs(), names, names)
def test_adding_subsets_never_removes_memberships(stmts, a, b):
    if a >= b:
        return
    before = build_kb(stmts).classes_of("o")
    assert before <= build_kb(stmts + [SubsetRel(a, b)]).classes_of("o")


@given(random_kbs(), st.sampled_from(["alg1", "alg2", "alg2prime"]))
def test_query_invariants(stmts, alg):
    kb = build_kb(stmts)
    cands = candidates_for(kb, "o", "T")
    kept, dropped = subset_dominance_filter(cands, kb)
    if not any(isinstance(s, SubsetRel) for s in stmts):
        assert kept == cands
    r = answer_query(kb, "o", "T", alg)
    assert (r.status == "no_evidence") == (not kept)
    if kept:
        assert nests_in(r.interval, cover_all(c.interval for c in kept))
    if r.status == "nesting":
        assert all(nests_in(r.interval, c.interval) for c in kept)
    if r.status == "no_evidence":
        assert r.interval == I(0, 1) and not r.reference_classes
