"""Core domain types: patterns over variables, full words, partial words with holes.

Letters and variables are dense 0-based integer indices.  Textual forms
('a'..'z', digits, a hole character) exist only at parse/format boundaries,
so alphabets larger than 26 letters work and hot loops never touch strings.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

#: Sentinel for an undefined position in a partial word.
HOLE = -1

_ALPHA = "abcdefghijklmnopqrstuvwxyz"


def char_to_letter(c: str) -> int:
    """Map a textual character to a letter index ('a'..'z' -> 0..25, '0'..'9' -> 0..9)."""
    if c.isdigit():
        return int(c)
    i = _ALPHA.find(c)
    if i < 0:
        raise ValueError(f"cannot read character {c!r}: expected a-z or 0-9")
    return i


def letter_to_char(i: int) -> str:
    return _ALPHA[i] if 0 <= i < 26 else f"<{i}>"


@dataclass(frozen=True)
class Pattern:
    """A nonempty sequence of variable ids.

    Construction normalizes variables to first-appearance order (first new
    variable becomes 0, the next 1, ...), so patterns that differ only by a
    renaming of variables compare equal and hash equal.
    """

    symbols: tuple[int, ...]

    def __post_init__(self):
        if not self.symbols:
            raise ValueError("pattern must be nonempty")
        remap: dict[int, int] = {}
        for s in self.symbols:
            if s not in remap:
                remap[s] = len(remap)
        object.__setattr__(self, "symbols", tuple(remap[s] for s in self.symbols))

    @classmethod
    def from_text(cls, text: str) -> "Pattern":
        return cls(tuple(char_to_letter(c) for c in text))

    def to_text(self) -> str:
        return "".join(letter_to_char(s) for s in self.symbols)

    @property
    def num_variables(self) -> int:
        return max(self.symbols) + 1

    def __len__(self) -> int:
        return len(self.symbols)


@dataclass(frozen=True)
class PatternSignature:
    """Multiplicity profile of a pattern.

    r distinct variables, of which s occur exactly once; mults lists the
    per-variable occurrence counts in nondecreasing order (the s ones first).
    """

    r: int
    s: int
    mults: tuple[int, ...]

    def __post_init__(self):
        if self.r != len(self.mults) or sum(m == 1 for m in self.mults) != self.s:
            raise ValueError("inconsistent signature")
        if any(b < a for a, b in zip(self.mults, self.mults[1:])):
            raise ValueError("multiplicities must be nondecreasing")

    @property
    def repeated(self) -> tuple[int, ...]:
        """Multiplicities of the variables that occur at least twice."""
        return self.mults[self.s:]

    @property
    def length(self) -> int:
        return sum(self.mults)


def signature(p: Pattern) -> PatternSignature:
    counts = [0] * p.num_variables
    for s in p.symbols:
        counts[s] += 1
    mults = tuple(sorted(counts))
    return PatternSignature(r=len(mults), s=sum(m == 1 for m in mults), mults=mults)


def zimin(i: int) -> Pattern:
    """The i-th Zimin pattern: Z_1 = a, Z_i = Z_{i-1} a_i Z_{i-1}; length 2^i - 1."""
    if i < 1:
        raise ValueError("zimin index must be >= 1")
    syms: list[int] = [0]
    for v in range(1, i):
        syms = syms + [v] + syms
    return Pattern(tuple(syms))


@dataclass(frozen=True)
class Word:
    """A full word: letters over an alphabet of size m."""

    letters: tuple[int, ...]
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("alphabet size must be >= 1")
        if any(not 0 <= c < self.m for c in self.letters):
            raise ValueError(f"letter out of range for alphabet size {self.m}")

    @classmethod
    def from_text(cls, text: str, m: int) -> "Word":
        return cls(tuple(char_to_letter(c) for c in text), m)

    def to_text(self) -> str:
        return "".join(letter_to_char(c) for c in self.letters)

    def __len__(self) -> int:
        return len(self.letters)


@dataclass(frozen=True)
class PartialWord:
    """A word that may leave positions undefined (holes)."""

    chars: tuple[int, ...]
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("alphabet size must be >= 1")
        if any(c != HOLE and not 0 <= c < self.m for c in self.chars):
            raise ValueError(f"character out of range for alphabet size {self.m}")

    @classmethod
    def from_text(cls, text: str, m: int, hole_char: str = ".") -> "PartialWord":
        chars = tuple(
            HOLE if c == hole_char or c == "⋄" else char_to_letter(c)
            for c in text
        )
        return cls(chars, m)

    @classmethod
    def from_word(cls, w: Word) -> "PartialWord":
        return cls(w.letters, w.m)

    def to_text(self, hole_char: str = ".") -> str:
        return "".join(hole_char if c == HOLE else letter_to_char(c) for c in self.chars)

    @property
    def holes(self) -> int:
        return sum(c == HOLE for c in self.chars)

    @property
    def density(self) -> float:
        return self.holes / len(self.chars)

    def completions(self):
        """Yield every full word obtained by filling the holes with letters."""
        positions = [i for i, c in enumerate(self.chars) if c == HOLE]
        base = list(self.chars)
        for fill in product(range(self.m), repeat=len(positions)):
            for pos, letter in zip(positions, fill):
                base[pos] = letter
            yield Word(tuple(base), self.m)

    def __len__(self) -> int:
        return len(self.chars)


def compatible(u: PartialWord, v: PartialWord) -> bool:
    """True iff u and v agree at every position where both are defined."""
    if len(u) != len(v):
        raise ValueError("compatibility requires equal lengths")
    if u.m != v.m:
        raise ValueError("compatibility requires the same alphabet")
    return all(a == HOLE or b == HOLE or a == b for a, b in zip(u.chars, v.chars))


@dataclass(frozen=True)
class Morphism:
    """A nonerasing substitution: every variable maps to a nonempty word."""

    images: dict[int, Word]

    def __post_init__(self):
        if not self.images:
            raise ValueError("morphism needs at least one image")
        sizes = {w.m for w in self.images.values()}
        if len(sizes) != 1:
            raise ValueError("all images must share one alphabet")
        if any(len(w) == 0 for w in self.images.values()):
            raise ValueError("morphism must be nonerasing (no empty image)")

    @property
    def m(self) -> int:
        return next(iter(self.images.values())).m


def apply_morphism(h: Morphism, p: Pattern) -> Word:
    """Concatenate the images of the pattern's variables in pattern order."""
    missing = set(p.symbols) - set(h.images)
    if missing:
        raise ValueError(f"morphism lacks images for variables {sorted(missing)}")
    letters: list[int] = []
    for s in p.symbols:
        letters.extend(h.images[s].letters)
    return Word(tuple(letters), h.m)
