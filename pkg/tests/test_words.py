"""Word parsing, block runs, counting, and factorizations."""

import pytest
from hypothesis import given, strategies as st

from zwcumulants import (
    BlockShape,
    EmptyWordError,
    block_factorial,
    block_shape,
    concat,
    factorizations,
    iter_words,
    parse_word,
    render_word,
    shortlex_key,
    w_count,
    words_of_length,
)


words = st.text(alphabet="zw", max_size=8)
nonempty_words = st.text(alphabet="zw", min_size=1, max_size=8)


def test_concat_examples():
    assert concat("zw", "z") == "zwz"
    assert concat("", "zwz") == "zwz" and concat("zwz", "") == "zwz"
    assert concat("z", "w") != concat("w", "z")


@given(words, words, words)
def test_concat_associative_with_unit(s, t, r):
    assert concat(concat(s, t), r) == concat(s, concat(t, r))
    assert len(concat(s, t)) == len(s) + len(t)


def test_block_factorial_examples():
    assert block_factorial("zzz") == 6
    assert block_factorial("wwww") == 1
    assert block_factorial("zzwzzz") == 12
    assert block_factorial("") == 1


def test_block_shape_examples():
    assert block_shape("zzwz") == BlockShape((2, 1), (1,))
    assert block_shape("wzw") == BlockShape((0, 1, 0), (1, 1))
    assert block_shape("") == BlockShape((0,), ())


@given(words)
def test_block_shape_roundtrip(s):
    shape = block_shape(s)
    assert shape.word() == s
    assert block_factorial(s) == shape.factorial()


def test_block_shape_validation():
    with pytest.raises(ValueError):
        BlockShape((1, 0, 1), (1, 1))  # empty interior z-run
    with pytest.raises(ValueError):
        BlockShape((1, 1), (0,))  # empty w-run


def test_w_count_examples():
    assert w_count("zwzz") == 1
    assert w_count("zzzz") == 0
    assert w_count("wwwzw") == 4


def test_factorizations_of_two_letters():
    assert factorizations("zw") == [("zw",), ("z", "w")]


def test_factorizations_single_letter():
    assert factorizations("z") == [("z",)]


@pytest.mark.parametrize("n", range(1, 11))
def test_factorization_count(n):
    s = ("zw" * n)[:n]
    facts = factorizations(s)
    assert len(facts) == 2 ** (n - 1)
    assert len(set(facts)) == len(facts)
    assert all("".join(f) == s and all(f) for f in facts)


def test_factorizations_reject_empty_word():
    with pytest.raises(EmptyWordError):
        factorizations("")


def test_parse_and_render():
    assert parse_word("1") == ""
    assert render_word("") == "1"
    assert parse_word("zwz") == "zwz"
    assert render_word("zwz") == "zwz"
    for bad in ("", "za", "1z", "Z"):
        with pytest.raises(ValueError):
            parse_word(bad)


def test_shortlex_enumeration():
    assert list(iter_words(2)) == ["", "z", "w", "zz", "zw", "wz", "ww"]
    assert sorted(words_of_length(2), key=shortlex_key) == ["zz", "zw", "wz", "ww"]
