import pytest
from hypothesis import given, strategies as st

from patstats.words import (HOLE, Morphism, Pattern, PartialWord, Word,
                            apply_morphism, compatible, signature, zimin)


def test_zimin_base_cases():
    assert zimin(1).to_text() == "a"
    assert zimin(2).to_text() == "aba"
    assert zimin(3).to_text() == "abacaba"


def test_zimin_rejects_zero():
    with pytest.raises(ValueError):
        zimin(0)


@pytest.mark.parametrize("i", range(1, 21))
def test_zimin_length_and_variable_count(i):
    z = zimin(i)
    assert len(z) == 2 ** i - 1
    assert z.num_variables == i


def test_signature_examples():
    sig = signature(Pattern.from_text("abacaba"))
    assert (sig.r, sig.s, sig.mults) == (3, 1, (1, 2, 4))
    sig = signature(Pattern.from_text("a"))
    assert (sig.r, sig.s, sig.mults) == (1, 1, (1,))
    sig = signature(Pattern.from_text("aa"))
    assert (sig.r, sig.s, sig.mults) == (1, 0, (2,))


def test_pattern_normalizes_variable_names():
    assert Pattern.from_text("bab") == Pattern.from_text("aba")
    assert Pattern.from_text("zyz").symbols == (0, 1, 0)


def test_pattern_rejects_empty():
    with pytest.raises(ValueError):
        Pattern(())


@given(st.lists(st.integers(0, 5), min_size=1, max_size=12),
       st.permutations(list(range(6))))
def test_signature_invariant_under_renaming(symbols, perm):
    p = Pattern(tuple(symbols))
    q = Pattern(tuple(perm[s] for s in symbols))
    assert signature(p).mults == signature(q).mults


def test_compatible_velvet_example():
    u = PartialWord.from_text("velve.", 26)
    v = PartialWord.from_text("velvel", 26)
    assert compatible(u, v)


def test_compatible_examples():
    assert not compatible(PartialWord.from_text("ab", 2), PartialWord.from_text("ba", 2))
    assert compatible(PartialWord.from_text("..", 2), PartialWord.from_text("ab", 2))


def test_compatible_rejects_length_mismatch():
    with pytest.raises(ValueError):
        compatible(PartialWord.from_text("a", 2), PartialWord.from_text("ab", 2))


@st.composite
def partial_words(draw, max_m=3, max_n=8):
    m = draw(st.integers(1, max_m))
    n = draw(st.integers(1, max_n))
    chars = draw(st.lists(st.integers(-1, m - 1), min_size=n, max_size=n))
    return PartialWord(tuple(chars), m)


@given(partial_words())
def test_compatible_reflexive(w):
    assert compatible(w, w)


@given(partial_words(), st.data())
def test_compatible_symmetric(u, data):
    chars = data.draw(st.lists(st.integers(-1, u.m - 1),
                               min_size=len(u), max_size=len(u)))
    v = PartialWord(tuple(chars), u.m)
    assert compatible(u, v) == compatible(v, u)


@given(st.integers(1, 3), st.data())
def test_compatible_is_equality_on_hole_free(m, data):
    n = data.draw(st.integers(1, 8))
    a = data.draw(st.lists(st.integers(0, m - 1), min_size=n, max_size=n))
    b = data.draw(st.lists(st.integers(0, m - 1), min_size=n, max_size=n))
    u, v = PartialWord(tuple(a), m), PartialWord(tuple(b), m)
    assert compatible(u, v) == (a == b)


def test_apply_morphism_tennessee():
    h = Morphism({0: Word.from_text("e", 26),
                  1: Word.from_text("nn", 26),
                  2: Word.from_text("ss", 26)})
    image = apply_morphism(h, Pattern.from_text("abaca"))
    assert image.to_text() == "ennesse"


def test_apply_morphism_velvel():
    h = Morphism({0: Word.from_text("ve", 26), 1: Word.from_text("l", 26)})
    assert apply_morphism(h, Pattern.from_text("abab")).to_text() == "velvel"


def test_apply_morphism_single():
    h = Morphism({0: Word.from_text("x", 26)})
    assert apply_morphism(h, Pattern.from_text("a")).to_text() == "x"


def test_apply_morphism_length_is_sum_of_image_lengths():
    h = Morphism({0: Word.from_text("ab", 3), 1: Word.from_text("c", 3)})
    p = Pattern.from_text("abba")
    expected = sum(len(h.images[s]) for s in p.symbols)
    assert len(apply_morphism(h, p)) == expected


def test_morphism_rejects_empty_image():
    with pytest.raises(ValueError):
        Morphism({0: Word((), 2)})


def test_apply_morphism_rejects_missing_image():
    h = Morphism({0: Word.from_text("a", 2)})
    with pytest.raises(ValueError):
        apply_morphism(h, Pattern.from_text("ab"))


def test_word_validates_letters():
    with pytest.raises(ValueError):
        Word.from_text("abc", 2)
    with pytest.raises(ValueError):
        PartialWord((5,), 3)


def test_partial_word_hole_accessors():
    w = PartialWord.from_text("a.b.", 2)
    assert w.holes == 2
    assert w.density == 0.5
    assert w.chars == (0, HOLE, 1, HOLE)
    assert w.to_text() == "a.b."


def test_hole_glyph_accepted():
    assert PartialWord.from_text("a⋄b", 2).holes == 1


def test_completions():
    w = PartialWord.from_text("a.", 2)
    texts = sorted(c.to_text() for c in w.completions())
    assert texts == ["aa", "ab"]
