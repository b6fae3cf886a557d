"""Brute-force exact occurrence counting, the ground truth everything else is checked against.

An occurrence of a pattern p in a word w is a pair (start position, composition
of the factor starting there into |p| nonempty blocks) subject to a per-kind
consistency rule between blocks of equal pattern variables:

  FULL               blocks of a repeated variable must be identical; the pairs
                     are in bijection with (nonerasing morphism, position) pairs.
  ABELIAN            blocks of a repeated variable must be anagrams of one another.
  PARTIAL_MORPHISM   counts (position, morphism) pairs whose image is compatible
                     with the factor; computed per variable by overlaying all of
                     the variable's blocks and multiplying the alphabet size for
                     every coordinate left entirely to holes.
  PARTIAL_COLLAPSED  like PARTIAL_MORPHISM, except an all-hole coordinate counts
                     as a single outcome instead of one per letter.  This is the
                     convention whose totals the partial generating function
                     reproduces; the two conventions genuinely differ (on ".."
                     over two letters, pattern "aa" counts 2 vs 1).

Totals and exact means enumerate every word of the requested shape; the work
is bounded up front by a budget measured in visited words.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import combinations, product
from math import comb

from .errors import BudgetExceededError
from .words import HOLE, Pattern, PartialWord, Word

DEFAULT_WORD_BUDGET = 5_000_000


class CountKind(enum.Enum):
    FULL = "full"
    ABELIAN = "abelian"
    PARTIAL_MORPHISM = "partial-morphism"
    PARTIAL_COLLAPSED = "partial-collapsed"


PARTIAL_KINDS = (CountKind.PARTIAL_MORPHISM, CountKind.PARTIAL_COLLAPSED)


def _count_full_raw(letters: tuple[int, ...], syms: tuple[int, ...]) -> int:
    n = len(letters)
    k = len(syms)
    bound: dict[int, tuple[int, ...]] = {}

    def walk(idx: int, pos: int) -> int:
        if idx == k:
            return 1
        v = syms[idx]
        rest = k - idx - 1
        piece = bound.get(v)
        if piece is not None:
            end = pos + len(piece)
            if end + rest > n or letters[pos:end] != piece:
                return 0
            return walk(idx + 1, end)
        total = 0
        for length in range(1, n - pos - rest + 1):
            bound[v] = letters[pos:pos + length]
            total += walk(idx + 1, pos + length)
        bound.pop(v, None)
        return total

    return sum(walk(0, start) for start in range(n))


def _count_abelian_raw(letters: tuple[int, ...], m: int, syms: tuple[int, ...]) -> int:
    n = len(letters)
    k = len(syms)
    # binding per variable: (block length, letter histogram)
    bound: dict[int, tuple[int, tuple[int, ...]]] = {}

    def hist(lo: int, hi: int) -> tuple[int, ...]:
        h = [0] * m
        for c in letters[lo:hi]:
            h[c] += 1
        return tuple(h)

    def walk(idx: int, pos: int) -> int:
        if idx == k:
            return 1
        v = syms[idx]
        rest = k - idx - 1
        entry = bound.get(v)
        if entry is not None:
            length, h = entry
            end = pos + length
            if end + rest > n or hist(pos, end) != h:
                return 0
            return walk(idx + 1, end)
        total = 0
        for length in range(1, n - pos - rest + 1):
            bound[v] = (length, hist(pos, pos + length))
            total += walk(idx + 1, pos + length)
        bound.pop(v, None)
        return total

    return sum(walk(0, start) for start in range(n))


def _merge_overlay(overlay: tuple[int, ...], block: tuple[int, ...]) -> tuple[int, ...] | None:
    """Superpose a new block of the same variable; None on a letter conflict."""
    out = []
    for a, b in zip(overlay, block):
        if a == HOLE:
            out.append(b)
        elif b == HOLE or b == a:
            out.append(a)
        else:
            return None
    return tuple(out)


def _count_partial_raw(chars: tuple[int, ...], m: int, syms: tuple[int, ...],
                       collapsed: bool) -> int:
    n = len(chars)
    k = len(syms)
    bound: dict[int, tuple[int, ...]] = {}

    def weight() -> int:
        if collapsed:
            return 1
        w = 1
        for overlay in bound.values():
            free = overlay.count(HOLE)
            if free:
                w *= m ** free
        return w

    def walk(idx: int, pos: int) -> int:
        if idx == k:
            return weight()
        v = syms[idx]
        rest = k - idx - 1
        overlay = bound.get(v)
        if overlay is not None:
            end = pos + len(overlay)
            if end + rest > n:
                return 0
            merged = _merge_overlay(overlay, chars[pos:end])
            if merged is None:
                return 0
            bound[v] = merged
            total = walk(idx + 1, end)
            bound[v] = overlay
            return total
        total = 0
        for length in range(1, n - pos - rest + 1):
            bound[v] = chars[pos:pos + length]
            total += walk(idx + 1, pos + length)
        bound.pop(v, None)
        return total

    return sum(walk(0, start) for start in range(n))


def count_full(w: Word, p: Pattern) -> int:
    """Occurrences of p in w: (position, composition) pairs with equal blocks forced."""
    return _count_full_raw(w.letters, p.symbols)


def count_abelian(w: Word, p: Pattern) -> int:
    """Occurrences of p in the abelian sense: equal variables force anagram blocks."""
    return _count_abelian_raw(w.letters, w.m, p.symbols)


def count_partial(w: PartialWord, p: Pattern, kind: CountKind) -> int:
    """Occurrences of p in a partial word under either partial convention."""
    if kind not in PARTIAL_KINDS:
        raise ValueError(f"count_partial expects a partial kind, got {kind}")
    return _count_partial_raw(w.chars, w.m, p.symbols,
                              collapsed=kind is CountKind.PARTIAL_COLLAPSED)


def count(kind: CountKind, w: Word | PartialWord, p: Pattern) -> int:
    """Kind-dispatching counter; full kinds take a Word, partial kinds a PartialWord."""
    if kind is CountKind.FULL:
        if isinstance(w, PartialWord):
            raise ValueError("FULL counting expects a full word")
        return count_full(w, p)
    if kind is CountKind.ABELIAN:
        if isinstance(w, PartialWord):
            raise ValueError("ABELIAN counting expects a full word")
        return count_abelian(w, p)
    if not isinstance(w, PartialWord):
        w = PartialWord.from_word(w)
    return count_partial(w, p, kind)


def population_size(kind: CountKind, n: int, m: int, holes: int | None = None) -> int:
    """Number of words of the shape enumerated by total_count."""
    if kind in (CountKind.FULL, CountKind.ABELIAN):
        return m ** n
    if holes is None:
        return (m + 1) ** n
    return comb(n, holes) * m ** (n - holes)


def _iter_chars(kind: CountKind, n: int, m: int, holes: int | None, prefix: tuple[int, ...]):
    """Lexicographic enumeration of the remaining positions after a fixed prefix."""
    rest = n - len(prefix)
    if kind in (CountKind.FULL, CountKind.ABELIAN):
        for tail in product(range(m), repeat=rest):
            yield prefix + tail
    elif holes is None:
        alphabet = tuple(range(m)) + (HOLE,)
        for tail in product(alphabet, repeat=rest):
            yield prefix + tail
    else:
        need = holes - sum(c == HOLE for c in prefix)
        if need < 0 or need > rest:
            return
        for hole_positions in combinations(range(rest), need):
            hole_set = set(hole_positions)
            letter_slots = [i for i in range(rest) if i not in hole_set]
            base = [HOLE] * rest
            for fill in product(range(m), repeat=len(letter_slots)):
                for slot, letter in zip(letter_slots, fill):
                    base[slot] = letter
                yield prefix + tuple(base)


def _total_for_prefix(kind: CountKind, n: int, m: int, syms: tuple[int, ...],
                      holes: int | None, prefix: tuple[int, ...]) -> int:
    total = 0
    if kind is CountKind.FULL:
        for chars in _iter_chars(kind, n, m, holes, prefix):
            total += _count_full_raw(chars, syms)
    elif kind is CountKind.ABELIAN:
        for chars in _iter_chars(kind, n, m, holes, prefix):
            total += _count_abelian_raw(chars, m, syms)
    else:
        collapsed = kind is CountKind.PARTIAL_COLLAPSED
        for chars in _iter_chars(kind, n, m, holes, prefix):
            total += _count_partial_raw(chars, m, syms, collapsed)
    return total


def total_count(kind: CountKind, n: int, m: int, p: Pattern,
                holes: int | None = None,
                budget: int = DEFAULT_WORD_BUDGET,
                workers: int = 1) -> int:
    """Sum of the per-word count over every word of the given shape.

    FULL/ABELIAN range over all m^n full words; the partial kinds over all
    (m+1)^n partial words, or over the C(n,holes)*m^(n-holes) words with the
    exact hole count when holes is given.  Aggregation is an integer sum, so
    partitioning the space across workers cannot change the result.
    """
    if n < 1:
        raise ValueError("word length must be >= 1")
    if m < 1:
        raise ValueError("alphabet size must be >= 1")
    if kind not in PARTIAL_KINDS and holes is not None:
        raise ValueError("hole count only applies to partial kinds")
    if holes is not None and not 0 <= holes <= n:
        raise ValueError("hole count must lie in [0, n]")
    pop = population_size(kind, n, m, holes)
    if pop > budget:
        raise BudgetExceededError(
            f"enumerating {pop} words exceeds the budget of {budget}",
            needed=pop, budget=budget)
    if workers <= 1 or n == 1:
        return _total_for_prefix(kind, n, m, p.symbols, holes, ())
    first = list(range(m)) if kind in (CountKind.FULL, CountKind.ABELIAN) \
        else list(range(m)) + [HOLE]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(_total_for_prefix,
                         *zip(*[(kind, n, m, p.symbols, holes, (c,)) for c in first]))
        return sum(parts)


def mean_exact(kind: CountKind, n: int, m: int, p: Pattern,
               holes: int | None = None, strict: bool = False,
               budget: int = DEFAULT_WORD_BUDGET, workers: int = 1) -> Fraction:
    """Exact mean occurrence count over the population of words of the given shape.

    With strict=True (partial kinds, holes absent) the mean is taken over
    strictly partial words only: (total over all partial words minus the total
    over hole-free ones) divided by (m+1)^n - m^n.
    """
    if strict:
        if kind not in PARTIAL_KINDS:
            raise ValueError("strict mean only applies to partial kinds")
        if holes is not None:
            raise ValueError("strict mean requires holes to be unspecified")
        whole = total_count(kind, n, m, p, None, budget, workers)
        holefree = total_count(kind, n, m, p, 0, budget, workers)
        return Fraction(whole - holefree, (m + 1) ** n - m ** n)
    total = total_count(kind, n, m, p, holes, budget, workers)
    return Fraction(total, population_size(kind, n, m, holes))
