"""Words over the two-letter alphabet {z, w}.

Words are plain Python strings over ``"zw"``; the empty string is the unit of
the free semigroup and renders as ``"1"``.  Enumeration everywhere follows
shortlex order with ``z`` before ``w``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial

ALPHABET = "zw"
EMPTY_WORD = ""


class EmptyWordError(ValueError):
    """The empty word is outside the operation's domain."""


def validate_word(s: str) -> str:
    if not isinstance(s, str) or any(ch not in ALPHABET for ch in s):
        raise ValueError(f"not a word over {ALPHABET!r}: {s!r}")
    return s


def parse_word(text: str) -> str:
    """Parse the text form of a word; ``"1"`` denotes the empty word."""
    if text == "1":
        return EMPTY_WORD
    if not text or any(ch not in ALPHABET for ch in text):
        raise ValueError(f"cannot parse word: {text!r}")
    return text


def render_word(s: str) -> str:
    validate_word(s)
    return s if s else "1"


def shortlex_key(s: str):
    return (len(s), tuple(ALPHABET.index(ch) for ch in s))


def words_of_length(n: int) -> list[str]:
    """All words of length n in lexicographic order (z before w)."""
    return ["".join(p) for p in itertools.product(ALPHABET, repeat=n)]


def iter_words(max_len: int):
    """All words of length 0..max_len in shortlex order."""
    for n in range(max_len + 1):
        yield from words_of_length(n)


def concat(s: str, t: str) -> str:
    """Juxtaposition product; the empty word is the two-sided unit."""
    validate_word(s)
    validate_word(t)
    return s + t


@dataclass(frozen=True)
class BlockShape:
    """Maximal-run decomposition z^n1 w^k1 z^n2 ... w^k(p-1) z^np.

    The first and last z-runs may be empty; interior z-runs and all w-runs
    are nonempty.
    """

    z_runs: tuple[int, ...]
    w_runs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.z_runs) != len(self.w_runs) + 1:
            raise ValueError("need exactly one more z-run than w-runs")
        if any(k < 1 for k in self.w_runs):
            raise ValueError("w-runs must be nonempty")
        if any(n < 1 for n in self.z_runs[1:-1]):
            raise ValueError("interior z-runs must be nonempty")
        if any(n < 0 for n in self.z_runs):
            raise ValueError("run lengths must be nonnegative")

    def word(self) -> str:
        parts = []
        for i, n in enumerate(self.z_runs):
            parts.append("z" * n)
            if i < len(self.w_runs):
                parts.append("w" * self.w_runs[i])
        return "".join(parts)

    def factorial(self) -> int:
        """Product of factorials of the z-run lengths."""
        out = 1
        for n in self.z_runs:
            out *= factorial(n)
        return out


def block_shape(s: str) -> BlockShape:
    validate_word(s)
    z_runs: list[int] = []
    w_runs: list[int] = []
    i, n = 0, len(s)
    j = i
    while j < n and s[j] == "z":
        j += 1
    z_runs.append(j - i)
    i = j
    while i < n:
        j = i
        while j < n and s[j] == "w":
            j += 1
        w_runs.append(j - i)
        i = j
        j = i
        while j < n and s[j] == "z":
            j += 1
        z_runs.append(j - i)
        i = j
    return BlockShape(tuple(z_runs), tuple(w_runs))


def block_factorial(s: str) -> int:
    return block_shape(s).factorial()


def w_count(s: str) -> int:
    validate_word(s)
    return s.count("w")


def factorizations(s: str) -> list[tuple[str, ...]]:
    """All 2^(l(s)-1) ordered splittings of s into nonempty contiguous factors.

    Enumeration order is deterministic: by number of factors, then by
    lexicographic order of the factor-length composition.
    """
    validate_word(s)
    if not s:
        raise EmptyWordError("the empty word has no factorizations")
    n = len(s)
    out: list[tuple[str, ...]] = []
    for parts in range(1, n + 1):
        for cuts in itertools.combinations(range(1, n), parts - 1):
            bounds = (0,) + cuts + (n,)
            out.append(tuple(s[a:b] for a, b in zip(bounds, bounds[1:])))
    return out
