from itertools import product

import pytest

from patstats.errors import BudgetExceededError
from patstats.oracle import CountKind, count, count_abelian, count_full
from patstats.search import (SearchBudget, SearchStatus, exact_ramsey_length,
                             find_avoiding)
from patstats.words import Pattern, PartialWord, Word

FULL = CountKind.FULL
ABELIAN = CountKind.ABELIAN
MORPH = CountKind.PARTIAL_MORPHISM
COLLAPSED = CountKind.PARTIAL_COLLAPSED


def P(text):
    return Pattern.from_text(text)


def test_find_square_free_binary():
    outcome = find_avoiding(FULL, P("aa"), 2, 3)
    assert outcome.status is SearchStatus.FOUND
    assert outcome.witness.to_text() == "aba"
    assert count_full(outcome.witness, P("aa")) == 0


def test_find_aba_free_of_length_four():
    outcome = find_avoiding(FULL, P("aba"), 2, 4)
    assert outcome.status is SearchStatus.FOUND
    assert outcome.witness.to_text() == "aabb"


def test_no_aba_free_of_length_five():
    outcome = find_avoiding(FULL, P("aba"), 2, 5)
    assert outcome.status is SearchStatus.EXHAUSTED
    assert outcome.witness is None


def test_exhaustion_is_complete_at_desk_scale():
    # every binary word of length 5 really does encounter aba
    p = P("aba")
    for letters in product(range(2), repeat=5):
        assert count_full(Word(letters, 2), p) >= 1


def test_budget_exceeded_outcome():
    outcome = find_avoiding(FULL, P("aba"), 2, 4, budget=SearchBudget(max_nodes=2))
    assert outcome.status is SearchStatus.BUDGET_EXCEEDED


def test_found_witnesses_verify_for_all_kinds():
    # note squares are hopeless for any partial word with a hole: the hole is
    # compatible with either neighbour, so those cases use the cube pattern
    cases = [
        (FULL, P("aa"), 2, 3, None),
        (ABELIAN, P("aa"), 3, 5, None),
        (MORPH, P("aaa"), 2, 3, 1),
        (COLLAPSED, P("aa"), 3, 4, 0),
        (COLLAPSED, P("aaa"), 2, 4, 1),
    ]
    for kind, p, m, length, holes in cases:
        outcome = find_avoiding(kind, p, m, length, holes=holes)
        assert outcome.status is SearchStatus.FOUND, (kind, p)
        assert count(kind, outcome.witness, p) == 0
        if holes is not None:
            assert outcome.witness.holes == holes


def test_square_with_any_hole_is_unavoidable():
    # a hole and its letter neighbour always form a compatible square
    for m in (2, 3):
        outcome = find_avoiding(MORPH, P("aa"), m, 4, holes=1)
        assert outcome.status is SearchStatus.EXHAUSTED


def test_hole_budget_respected_even_when_all_holes():
    outcome = find_avoiding(MORPH, P("aaa"), 2, 2, holes=2)
    assert outcome.status is SearchStatus.FOUND
    assert outcome.witness.to_text() == ".."


def test_abelian_search_is_stricter_than_full():
    # an abelian-avoiding witness is also nonabelian-avoiding
    outcome = find_avoiding(ABELIAN, P("aa"), 3, 7)
    assert outcome.status is SearchStatus.FOUND
    w = outcome.witness
    assert count_abelian(w, P("aa")) == 0
    assert count_full(w, P("aa")) == 0


def test_holes_rejected_for_full_kinds():
    with pytest.raises(ValueError):
        find_avoiding(FULL, P("aa"), 2, 3, holes=1)


def test_ramsey_aba():
    assert exact_ramsey_length(FULL, P("aba"), 2, 10) == 5
    assert exact_ramsey_length(FULL, P("aba"), 3, 12) == 7


def test_ramsey_single_variable():
    assert exact_ramsey_length(FULL, P("a"), 2, 5) == 1
    assert exact_ramsey_length(FULL, P("a"), 7, 5) == 1


def test_ramsey_zimin2_formula():
    from patstats.words import zimin
    for m in (2, 3):
        assert exact_ramsey_length(FULL, zimin(2), m, 2 * m + 3) == 2 * m + 1


def test_ramsey_not_found_below():
    # squares are avoidable over three letters: no forcing length exists
    assert exact_ramsey_length(FULL, P("aa"), 3, 12) is None


def test_ramsey_budget_error_is_distinct():
    with pytest.raises(BudgetExceededError):
        exact_ramsey_length(FULL, P("aba"), 2, 10, budget=SearchBudget(max_nodes=3))


def test_ramsey_rejects_partial_kinds():
    with pytest.raises(ValueError):
        exact_ramsey_length(MORPH, P("aa"), 2, 5)


def test_sandwich_at_tiny_scale():
    # first-moment lower bound <= exact forcing length = recursive upper bound
    # <= tetration upper bound, for the smallest zimin pattern
    from patstats.asymptotics import MeanKind
    from patstats.bounds import ZiminUpperMode, zimin_lower, zimin_upper
    from patstats.words import zimin
    for m in (2, 3, 4):
        exact = exact_ramsey_length(FULL, zimin(2), m, 2 * m + 3)
        assert exact == 2 * m + 1
        assert zimin_lower(MeanKind.FULL, m, 2) <= exact
        rec = zimin_upper(m, 2, ZiminUpperMode.RECURSIVE).exact
        tet = zimin_upper(m, 2, ZiminUpperMode.TETRATION).exact
        assert exact == rec <= tet


def test_first_moment_pipeline_consistency():
    from patstats.bounds import exact_avoidance_threshold
    for pat in ("aa", "aba", "aab"):
        for m in (2, 3):
            p = P(pat)
            threshold = exact_avoidance_threshold(FULL, p, m, 10)
            for n in range(1, threshold + 1):
                assert find_avoiding(FULL, p, m, n).status is SearchStatus.FOUND


def test_partial_witness_with_unconstrained_holes():
    outcome = find_avoiding(COLLAPSED, P("aaa"), 2, 3)
    assert outcome.status is SearchStatus.FOUND
    assert isinstance(outcome.witness, PartialWord)


# --- the incremental pruning checker vs the oracle ---------------------------

from hypothesis import given, settings, strategies as st  # noqa: E402

from patstats.search import _closes_occurrence  # noqa: E402

CHECK_PATTERNS = [P(t) for t in ("a", "aa", "ab", "aba", "aab", "abab", "abba")]


@st.composite
def char_lists(draw, with_holes):
    m = draw(st.integers(1, 3))
    n = draw(st.integers(1, 7))
    low = -1 if with_holes else 0
    return draw(st.lists(st.integers(low, m - 1), min_size=n, max_size=n)), m


@given(char_lists(with_holes=False), st.sampled_from(CHECK_PATTERNS),
       st.sampled_from([FULL, ABELIAN]))
@settings(max_examples=80)
def test_pruning_checker_agrees_with_oracle_on_full_words(case, p, kind):
    # the word encounters p iff some position closes an occurrence; a false
    # negative here would make EXHAUSTED outcomes unsound
    chars, m = case
    w = Word(tuple(chars), m)
    closed = any(_closes_occurrence(chars, end, p.symbols, m, kind)
                 for end in range(len(chars)))
    assert closed == (count(kind, w, p) >= 1)


@given(char_lists(with_holes=True), st.sampled_from(CHECK_PATTERNS),
       st.sampled_from([MORPH, COLLAPSED]))
@settings(max_examples=80)
def test_pruning_checker_agrees_with_oracle_on_partial_words(case, p, kind):
    chars, m = case
    w = PartialWord(tuple(chars), m)
    closed = any(_closes_occurrence(chars, end, p.symbols, m, kind)
                 for end in range(len(chars)))
    assert closed == (count(kind, w, p) >= 1)
