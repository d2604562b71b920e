"""Subwords and partitions of a word, admissibility, and the lattice they form.

A subword remembers its positions inside the parent, so two distinct subwords
may spell the same word.  A partition splits the position set {1..n} into
blocks ordered by least position.  A block is a *cumulant subword* when no w
of the parent lies strictly inside its span without belonging to it; a
partition is *admissible* when every block is a cumulant subword.  For a
fixed parent word the admissible partitions form a lattice under refinement.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from .words import EmptyWordError, validate_word


class ParentMismatchError(ValueError):
    """Both arguments must be partitions of the same parent word."""


class NotComparableError(ValueError):
    """The two partitions are not comparable in the admissible order."""


class NotAUnionOfBlocksError(ValueError):
    """The given subword is not a union of blocks of the partition."""


@dataclass(frozen=True)
class Subword:
    """A subword of a parent word: strictly increasing 1-based positions."""

    parent: str
    positions: tuple[int, ...]

    def __post_init__(self) -> None:
        validate_word(self.parent)
        pos = self.positions
        if not pos:
            raise ValueError("a subword needs at least one position")
        if any(b <= a for a, b in zip(pos, pos[1:])):
            raise ValueError(f"positions must be strictly increasing: {pos}")
        if pos[0] < 1 or pos[-1] > len(self.parent):
            raise ValueError(f"positions out of range for {self.parent!r}: {pos}")

    @property
    def word(self) -> str:
        """The word spelled by the selected letters."""
        return "".join(self.parent[p - 1] for p in self.positions)

    def __len__(self) -> int:
        return len(self.positions)


def is_cumulant_subword(r: Subword) -> bool:
    """True iff no w of the parent lies strictly inside the span of r
    without belonging to r."""
    return _cumulant_block(r.parent, r.positions)


def _cumulant_block(parent: str, positions: tuple[int, ...]) -> bool:
    first, last = positions[0], positions[-1]
    if last - first <= 1:
        return True
    inside = set(positions)
    for j in range(first + 1, last):
        if parent[j - 1] == "w" and j not in inside:
            return False
    return True


@dataclass(frozen=True)
class Partition:
    """An ordered partition of the positions of a word into subword blocks.

    ``blocks`` is the canonical form: each block is a strictly increasing
    tuple of positions, blocks are pairwise disjoint, their union is
    {1..l(parent)} and they are ordered by least position.
    """

    parent: str
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        validate_word(self.parent)
        n = len(self.parent)
        if n == 0:
            raise EmptyWordError("partitions are defined for nonempty words")
        seen: set[int] = set()
        previous_min = 0
        for block in self.blocks:
            if not block:
                raise ValueError("blocks must be nonempty")
            if any(b <= a for a, b in zip(block, block[1:])):
                raise ValueError(f"block positions must increase: {block}")
            if block[0] <= previous_min:
                raise ValueError("blocks must be ordered by least position")
            previous_min = block[0]
            seen.update(block)
        if len(seen) != sum(len(b) for b in self.blocks) or seen != set(range(1, n + 1)):
            raise ValueError("blocks must partition the positions 1..l(parent)")

    @classmethod
    def from_blocks(cls, parent: str, blocks) -> "Partition":
        """Build a partition from any iterable of position iterables."""
        normal = sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0])
        return cls(parent, tuple(normal))

    @classmethod
    def discrete(cls, parent: str) -> "Partition":
        return cls(parent, tuple((i,) for i in range(1, len(parent) + 1)))

    @classmethod
    def one_block(cls, parent: str) -> "Partition":
        return cls(parent, (tuple(range(1, len(parent) + 1)),))

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    def subwords(self) -> tuple[Subword, ...]:
        return tuple(Subword(self.parent, b) for b in self.blocks)

    def block_words(self) -> tuple[str, ...]:
        return tuple("".join(self.parent[p - 1] for p in b) for b in self.blocks)

    def growth_string(self) -> tuple[int, ...]:
        """Position -> block-index labels; the canonical sort key."""
        labels = [0] * len(self.parent)
        for idx, block in enumerate(self.blocks):
            for p in block:
                labels[p - 1] = idx
        return tuple(labels)

    def render(self) -> str:
        return "".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks)

    def __str__(self) -> str:
        return self.render()


@functools.lru_cache(maxsize=None)
def _admissible(parent: str, blocks: tuple[tuple[int, ...], ...]) -> bool:
    return all(_cumulant_block(parent, block) for block in blocks)


def is_admissible(u: Partition) -> bool:
    """True iff every block of u is a cumulant subword of the parent."""
    return _admissible(u.parent, u.blocks)


def _set_partition_blocks(n: int):
    """All set partitions of {1..n} as canonical block tuples, in
    restricted-growth-string order."""
    rgs = [0] * n

    def rec(i: int, used: int):
        if i == n:
            groups: list[list[int]] = [[] for _ in range(used)]
            for idx, label in enumerate(rgs):
                groups[label].append(idx + 1)
            yield tuple(tuple(g) for g in groups)
            return
        for v in range(used + 1):
            rgs[i] = v
            yield from rec(i + 1, max(used, v + 1))

    if n:
        yield from rec(0, 0)


@functools.lru_cache(maxsize=None)
def enumerate_admissible(s: str) -> tuple[Partition, ...]:
    """All admissible partitions of s, in restricted-growth-string order.

    Generated by filtering every set partition of the position set, so the
    practical envelope is l(s) <= 12.
    """
    validate_word(s)
    if not s:
        raise EmptyWordError("admissible partitions are defined for nonempty words")
    out = []
    for blocks in _set_partition_blocks(len(s)):
        if _admissible(s, blocks):
            out.append(Partition(s, blocks))
    return tuple(out)


def _require_same_parent(u: Partition, v: Partition) -> None:
    if u.parent != v.parent:
        raise ParentMismatchError(f"different parents: {u.parent!r} vs {v.parent!r}")


def _require_admissible(*parts: Partition) -> None:
    for p in parts:
        if not is_admissible(p):
            raise ValueError(f"partition is not admissible: {p}")


def meet(u: Partition, v: Partition) -> Partition:
    """Lattice meet: pairwise intersections of blocks."""
    _require_same_parent(u, v)
    _require_admissible(u, v)
    blocks = []
    for a in u.blocks:
        members = set(a)
        for b in v.blocks:
            inter = tuple(p for p in b if p in members)
            if inter:
                blocks.append(inter)
    result = Partition.from_blocks(u.parent, blocks)
    assert is_admissible(result), "meet of admissible partitions must be admissible"
    return result


def join(u: Partition, v: Partition) -> Partition:
    """Lattice join: transitive closure of the block overlaps."""
    _require_same_parent(u, v)
    _require_admissible(u, v)
    n = len(u.parent)
    parent_of = list(range(n + 1))

    def find(x: int) -> int:
        while parent_of[x] != x:
            parent_of[x] = parent_of[parent_of[x]]
            x = parent_of[x]
        return x

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent_of[rb] = ra

    for block in itertools.chain(u.blocks, v.blocks):
        for a, b in zip(block, block[1:]):
            union(a, b)
    groups: dict[int, list[int]] = {}
    for p in range(1, n + 1):
        groups.setdefault(find(p), []).append(p)
    result = Partition.from_blocks(u.parent, groups.values())
    assert is_admissible(result), "join of admissible partitions must be admissible"
    return result


def refines(u: Partition, v: Partition) -> bool:
    """True iff every block of u is contained in a block of v."""
    _require_same_parent(u, v)
    labels_v = v.growth_string()
    mapping: dict[int, int] = {}
    for a, b in zip(u.growth_string(), labels_v):
        if mapping.setdefault(a, b) != b:
            return False
    return True


def leq(u: Partition, v: Partition) -> bool:
    """Order of the admissible-partition lattice: refinement plus
    admissibility of both sides."""
    _require_same_parent(u, v)
    return is_admissible(u) and is_admissible(v) and refines(u, v)


def segment(u: Partition, v: Partition) -> tuple[Partition, ...]:
    """All admissible t with u <= t <= v, in the canonical enumeration order."""
    if not leq(u, v):
        raise NotComparableError(f"{u} is not below {v}")
    labels_v = {}
    for idx, block in enumerate(v.blocks):
        for p in block:
            labels_v[p] = idx
    grouped: list[list[tuple[int, ...]]] = [[] for _ in v.blocks]
    for block in u.blocks:
        grouped[labels_v[block[0]]].append(block)

    choices = []
    for group in grouped:
        merges = []
        for shape in _set_partition_blocks(len(group)):
            merged = tuple(
                tuple(sorted(itertools.chain.from_iterable(group[i - 1] for i in cell)))
                for cell in shape
            )
            merges.append(merged)
        choices.append(merges)

    out = []
    for combo in itertools.product(*choices):
        blocks = [b for merged in combo for b in merged]
        candidate = Partition.from_blocks(u.parent, blocks)
        if is_admissible(candidate):
            out.append(candidate)
    out.sort(key=Partition.growth_string)
    return tuple(out)


def restriction(v: Partition, block: Subword) -> Partition:
    """The partition induced by v on a union of its blocks, re-indexed as a
    partition of the subword's spelled word."""
    if block.parent != v.parent:
        raise ParentMismatchError("subword belongs to a different parent word")
    wanted = set(block.positions)
    chosen = [b for b in v.blocks if wanted.issuperset(b)]
    if sum(len(b) for b in chosen) != len(block.positions):
        raise NotAUnionOfBlocksError(f"{block.positions} is not a union of blocks of {v}")
    rank = {p: i + 1 for i, p in enumerate(block.positions)}
    return Partition.from_blocks(block.word, [tuple(rank[p] for p in b) for b in chosen])
