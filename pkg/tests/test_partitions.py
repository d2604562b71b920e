"""Subwords, admissibility, lattice operations, segments, and restriction."""

import itertools
import random

import pytest

import oracles
from zwcumulants import (
    EmptyWordError,
    NotAUnionOfBlocksError,
    NotComparableError,
    ParentMismatchError,
    Partition,
    Subword,
    enumerate_admissible,
    is_admissible,
    is_cumulant_subword,
    join,
    leq,
    meet,
    refines,
    restriction,
    segment,
    words_of_length,
)


def all_words(max_len):
    for n in range(1, max_len + 1):
        yield from words_of_length(n)


# -- subwords ----------------------------------------------------------------


def test_subword_validation():
    with pytest.raises(ValueError):
        Subword("zw", ())
    with pytest.raises(ValueError):
        Subword("zw", (2, 1))
    with pytest.raises(ValueError):
        Subword("zw", (0, 1))
    with pytest.raises(ValueError):
        Subword("zw", (1, 3))


def test_subword_spells_its_word():
    assert Subword("zwzw", (1, 2, 3)).word == "zwz"
    # distinct subwords may spell the same word
    assert Subword("zwzw", (1, 2)).word == Subword("zwzw", (3, 4)).word == "zw"


def test_cumulant_subword_examples():
    assert not is_cumulant_subword(Subword("zwz", (1, 3)))
    assert is_cumulant_subword(Subword("zwzz", (1, 2, 4)))
    for s in ("zwz", "wwww", "zzzz"):
        for p in range(1, len(s) + 1):
            assert is_cumulant_subword(Subword(s, (p,)))


# -- partition basics ----------------------------------------------------------


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition("zwz", ((1, 2), (2, 3)))  # overlap
    with pytest.raises(ValueError):
        Partition("zwz", ((1,), (3,)))  # not covering
    with pytest.raises(ValueError):
        Partition("zwz", ((2,), (1, 3)))  # not ordered by least position
    with pytest.raises(EmptyWordError):
        Partition("", ())


def test_admissibility_examples():
    s = "zzwz"
    assert is_admissible(Partition.from_blocks(s, [(1, 3), (2,), (4,)]))
    assert not is_admissible(Partition.from_blocks(s, [(1,), (2, 4), (3,)]))
    for word in ("z", "zw", "zwzw"):
        assert is_admissible(Partition.discrete(word))


# -- enumeration ----------------------------------------------------------------


def test_admissible_counts():
    bell = {1: 1, 2: 2, 3: 5, 4: 15, 5: 52}
    for n, count in bell.items():
        assert len(enumerate_admissible("z" * n)) == count
    for n in range(1, 6):
        assert len(enumerate_admissible("w" * n)) == 2 ** (n - 1)
    # mixed word: fixed by brute force over all 15 set partitions
    assert len(enumerate_admissible("zwzz")) == 10


def test_enumeration_matches_independent_scan():
    for s in all_words(5):
        ours = {u.blocks for u in enumerate_admissible(s)}
        theirs = {blocks for blocks in oracles.naive_admissible_blocks(s)}
        assert ours == theirs
        assert all(is_admissible(u) for u in enumerate_admissible(s))


def test_enumeration_is_deterministic_and_bounded():
    elements = enumerate_admissible("zwz")
    assert elements[0] == Partition.one_block("zwz")
    assert elements[-1] == Partition.discrete("zwz")
    assert all(1 <= u.block_count <= 3 for u in elements)


def test_single_letter_lattice_is_trivial():
    assert enumerate_admissible("z") == (Partition.one_block("z"),)
    with pytest.raises(EmptyWordError):
        enumerate_admissible("")


# -- lattice operations -----------------------------------------------------------


def test_meet_join_extremes():
    s = "zwzz"
    bottom = Partition.discrete(s)
    top = Partition.one_block(s)
    for u in enumerate_admissible(s):
        assert meet(u, bottom) == bottom
        assert join(u, top) == top
        assert meet(u, u) == u and join(u, u) == u


def test_lattice_laws_small_words():
    for s in all_words(4):
        elements = enumerate_admissible(s)
        for u, v in itertools.product(elements, repeat=2):
            m, j = meet(u, v), join(u, v)
            assert is_admissible(m) and is_admissible(j)
            assert m == meet(v, u) and j == join(v, u)
            assert join(u, m) == u and meet(u, j) == u  # absorption
        for u, v, t in itertools.islice(itertools.product(elements, repeat=3), 600):
            assert meet(meet(u, v), t) == meet(u, meet(v, t))
            assert join(join(u, v), t) == join(u, join(v, t))


def test_meet_join_admissible_on_longer_words():
    rng = random.Random(11)
    for s in ("zwzzw", "zzwzzz", "wzwzzw"):
        elements = enumerate_admissible(s)
        for _ in range(200):
            u, v = rng.choice(elements), rng.choice(elements)
            assert is_admissible(meet(u, v))
            assert is_admissible(join(u, v))


def test_parent_mismatch():
    with pytest.raises(ParentMismatchError):
        meet(Partition.discrete("zw"), Partition.discrete("wz"))
    with pytest.raises(ParentMismatchError):
        leq(Partition.discrete("zw"), Partition.discrete("wz"))


# -- order ---------------------------------------------------------------------


def test_order_requires_admissibility_of_both_sides():
    # u refines v for every letter choice, but the order holds only when
    # positions 2, 3, 4 all carry z.
    for letters in itertools.product("zw", repeat=5):
        s = "".join(letters)
        u = Partition.from_blocks(s, [(1, 3), (2, 5), (4,)])
        v = Partition.from_blocks(s, [(1, 3, 4), (2, 5)])
        assert refines(u, v)
        expected = letters[1] == letters[2] == letters[3] == "z"
        assert leq(u, v) == expected


def test_leq_is_a_partial_order():
    for s in all_words(4):
        elements = enumerate_admissible(s)
        for u in elements:
            assert leq(u, u)
        for u, v in itertools.product(elements, repeat=2):
            if leq(u, v) and leq(v, u):
                assert u == v
        for u, v, t in itertools.islice(itertools.product(elements, repeat=3), 800):
            if leq(u, v) and leq(v, t):
                assert leq(u, t)


# -- segments --------------------------------------------------------------------


def test_segment_extremes():
    s = "zwzz"
    bottom, top = Partition.discrete(s), Partition.one_block(s)
    for u in enumerate_admissible(s):
        assert segment(u, u) == (u,)
    full = segment(bottom, top)
    assert full == enumerate_admissible(s)


def test_segment_contents():
    for s in all_words(4):
        elements = enumerate_admissible(s)
        for u, v in itertools.product(elements, repeat=2):
            if not leq(u, v):
                with pytest.raises(NotComparableError):
                    segment(u, v)
                continue
            expected = tuple(t for t in elements if leq(u, t) and leq(t, v))
            assert set(segment(u, v)) == set(expected)


def test_segment_factorizes_over_blocks():
    rng = random.Random(5)
    for s in ("zwzzw", "zzwzzz"):
        elements = enumerate_admissible(s)
        pairs = [(u, v) for u in elements for v in elements if leq(u, v)]
        for u, v in rng.sample(pairs, min(60, len(pairs))):
            size = len(segment(u, v))
            product = 1
            for block in v.subwords():
                inner = restriction(u, block)
                product *= len(segment(inner, Partition.one_block(block.word)))
            assert size == product


# -- restriction -------------------------------------------------------------------


def test_restriction_whole_word_is_identity():
    s = "zwzz"
    whole = Subword(s, tuple(range(1, len(s) + 1)))
    for v in enumerate_admissible(s):
        assert restriction(v, whole) == v


def test_restriction_of_discrete_is_discrete():
    s = "zwzzw"
    v = Partition.discrete(s)
    block = Subword(s, (1, 3, 4))
    assert restriction(v, block) == Partition.discrete(block.word)


def test_restriction_requires_union_of_blocks():
    s = "zwzz"
    v = Partition.from_blocks(s, [(1, 2), (3, 4)])
    with pytest.raises(NotAUnionOfBlocksError):
        restriction(v, Subword(s, (1, 3, 4)))


def test_restriction_roundtrip():
    rng = random.Random(3)
    for s in ("zwzz", "zzwzz"):
        elements = enumerate_admissible(s)
        pairs = [(u, v) for u in elements for v in elements if leq(u, v)]
        for u, v in rng.sample(pairs, min(40, len(pairs))):
            rebuilt = []
            for block in v.subwords():
                inner = restriction(u, block)
                back = {i + 1: p for i, p in enumerate(block.positions)}
                rebuilt.extend(tuple(back[q] for q in b) for b in inner.blocks)
            assert Partition.from_blocks(s, rebuilt) == u
