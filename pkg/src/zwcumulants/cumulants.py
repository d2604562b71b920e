"""Moment and cumulant families on words and the transforms between them.

A moment function assigns a Scalar to every word, with value 1 at the empty
word.  Hat-backed moment functions depend only on word length (one symbolic
or rational sequence); general ones map each word independently.  Cumulants
are defined on nonempty words by inverting the sum of block products over
admissible partitions, computed either by the triangular recursion or by
Moebius inversion over the admissible-partition lattice.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping

from .mobius import mobius_closed
from .partitions import Partition, Subword, enumerate_admissible, is_admissible, is_cumulant_subword
from .scalar import MomentSymbol, Scalar, as_scalar
from .words import EmptyWordError, render_word, validate_word, words_of_length


class NoWError(ValueError):
    """The word contains no w, so the w-anchored operation is undefined."""


class MomentFunction:
    """Base class: maps words to Scalars with value 1 at the empty word."""

    def __call__(self, word: str) -> Scalar:
        validate_word(word)
        if not word:
            return Scalar.one()
        return self._value(word)

    def _value(self, word: str) -> Scalar:
        raise NotImplementedError


class HatMomentFunction(MomentFunction):
    """Moment functions whose values depend only on the word length."""

    def _value(self, word: str) -> Scalar:
        return self._length_value(len(word))

    def _length_value(self, n: int) -> Scalar:
        raise NotImplementedError


class SymbolicHat(HatMomentFunction):
    """M(s) = the formal symbol of order l(s) in the chosen family."""

    def __init__(self, family: str = "mu"):
        self.family = family
        MomentSymbol(family, 1)  # validates the family tag

    def _length_value(self, n: int) -> Scalar:
        return Scalar.symbol(MomentSymbol(self.family, n))

    def __repr__(self) -> str:
        return f"SymbolicHat({self.family!r})"


class SequenceHat(HatMomentFunction):
    """M(s) = the given rational sequence evaluated at l(s)."""

    def __init__(self, values: Iterable):
        self.values = tuple(Fraction(v) for v in values)

    def _length_value(self, n: int) -> Scalar:
        if n > len(self.values):
            raise ValueError(
                f"moment sequence has {len(self.values)} entries, need order {n}"
            )
        return Scalar.rational(self.values[n - 1])

    def __repr__(self) -> str:
        return f"SequenceHat({[str(v) for v in self.values]})"


class GeneralMoments(MomentFunction):
    """An explicit word -> Scalar table; the empty word is implicitly 1."""

    def __init__(self, mapping: Mapping[str, object]):
        table: dict[str, Scalar] = {}
        for word, value in mapping.items():
            validate_word(word)
            scalar = as_scalar(value)
            if not word:
                if scalar != Scalar.one():
                    raise ValueError("the empty word must have moment 1")
                continue
            table[word] = scalar
        self.mapping = table

    def _value(self, word: str) -> Scalar:
        try:
            return self.mapping[word]
        except KeyError:
            raise ValueError(f"no moment assigned to word {render_word(word)!r}") from None


class CumulantFunction:
    """Cumulant values on nonempty words."""

    def __init__(self, mapping: Mapping[str, object]):
        table: dict[str, Scalar] = {}
        for word, value in mapping.items():
            validate_word(word)
            if not word:
                raise EmptyWordError("cumulants are not defined at the empty word")
            table[word] = as_scalar(value)
        self.mapping = table

    def __call__(self, word: str) -> Scalar:
        validate_word(word)
        if not word:
            raise EmptyWordError("cumulants are not defined at the empty word")
        try:
            return self.mapping[word]
        except KeyError:
            raise ValueError(f"no cumulant value for word {render_word(word)!r}") from None


def cumulants_from_moments(M: MomentFunction, max_len: int) -> CumulantFunction:
    """L(s) for all words with 1 <= l(s) <= max_len, by the triangular
    recursion: L(s) = M(s) minus the sum of block products of shorter
    cumulants over admissible partitions with at least two blocks."""
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    values: dict[str, Scalar] = {}
    for n in range(1, max_len + 1):
        for s in words_of_length(n):
            correction = Scalar.zero()
            for u in enumerate_admissible(s):
                if u.block_count == 1:
                    continue
                product = Scalar.one()
                for block_word in u.block_words():
                    product = product * values[block_word]
                correction = correction + product
            values[s] = M(s) - correction
    return CumulantFunction(values)


def moments_from_cumulants(L: CumulantFunction, max_len: int) -> GeneralMoments:
    """M(s) = sum over admissible partitions of the block-cumulant products."""
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    values: dict[str, Scalar] = {}
    for n in range(1, max_len + 1):
        for s in words_of_length(n):
            total = Scalar.zero()
            for u in enumerate_admissible(s):
                product = Scalar.one()
                for block_word in u.block_words():
                    product = product * L(block_word)
                total = total + product
            values[s] = total
    return GeneralMoments(values)


def partition_moment(M: MomentFunction, u: Partition) -> Scalar:
    """Product of M over the words spelled by the blocks of u."""
    if not is_admissible(u):
        raise ValueError(f"partition is not admissible: {u}")
    product = Scalar.one()
    for block_word in u.block_words():
        product = product * M(block_word)
    return product


def partition_cumulant(L: CumulantFunction, u: Partition) -> Scalar:
    """Product of L over the words spelled by the blocks of u."""
    if not is_admissible(u):
        raise ValueError(f"partition is not admissible: {u}")
    product = Scalar.one()
    for block_word in u.block_words():
        product = product * L(block_word)
    return product


def cumulants_via_mobius(M: MomentFunction, s: str) -> Scalar:
    """L(s) by Moebius inversion: sum of m(u) * M(u) over admissible u."""
    validate_word(s)
    if not s:
        raise EmptyWordError("cumulants are not defined at the empty word")
    total = Scalar.zero()
    for u in enumerate_admissible(s):
        coeff = mobius_closed(u)
        if coeff:
            total = total + coeff * partition_moment(M, u)
    return total


def cumulant_subwords_first_w(s: str) -> list[Subword]:
    """All cumulant subwords of s containing the first w of s, ordered by
    size then positions."""
    validate_word(s)
    anchor = s.find("w") + 1
    if anchor == 0:
        raise NoWError(f"word {render_word(s)!r} contains no w")
    others = [p for p in range(1, len(s) + 1) if p != anchor]
    out = []
    for k in range(len(others) + 1):
        for extra in itertools.combinations(others, k):
            positions = tuple(sorted(extra + (anchor,)))
            candidate = Subword(s, positions)
            if is_cumulant_subword(candidate):
                out.append(candidate)
    return out


def split_zones(s: str, r: Subword) -> tuple[list[str], str]:
    """The complement of a cumulant subword r in s, split by the w-legs of r.

    Returns one word per nonempty gap before the first w-leg or between
    consecutive w-legs (all of them z-words), plus the remainder word formed
    by the complement positions after the last w-leg.
    """
    if r.parent != s:
        raise ValueError("subword belongs to a different word")
    legs = [p for p in r.positions if s[p - 1] == "w"]
    if not legs:
        raise NoWError("the subword has no w-legs")
    complement = sorted(set(range(1, len(s) + 1)) - set(r.positions))
    zones: list[str] = []
    for lo, hi in zip([0] + legs[:-1], legs):
        zone = [p for p in complement if lo < p < hi]
        if zone:
            zones.append("".join(s[p - 1] for p in zone))
    remainder = "".join(s[p - 1] for p in complement if p > legs[-1])
    return zones, remainder


def moment_cumulant_split(M: MomentFunction, L: CumulantFunction, s: str) -> Scalar:
    """Rebuild M(s) from one cumulant anchored at the first w plus moments.

    Sums, over the cumulant subwords r containing the first w, the product
    L(r) * prod M(gap z-words) * M(remainder).  Equals M(s) whenever M and L
    are a matching moment/cumulant pair.
    """
    total = Scalar.zero()
    for r in cumulant_subwords_first_w(s):
        zones, remainder = split_zones(s, r)
        term = L(r.word)
        for zone_word in zones:
            term = term * M(zone_word)
        term = term * M(remainder)
        total = total + term
    return total


def classical_moment_cumulant(M: MomentFunction, L: CumulantFunction, n: int) -> Scalar:
    """The one-letter z recursion: sum of C(n-1, k-1) L(z^k) M(z^(n-k))."""
    if n < 1:
        raise ValueError("order must be >= 1")
    total = Scalar.zero()
    for k in range(1, n + 1):
        total = total + comb(n - 1, k - 1) * L("z" * k) * M("z" * (n - k))
    return total
