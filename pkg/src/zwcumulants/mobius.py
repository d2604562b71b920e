"""The Moebius function of the admissible-partition order, three ways.

``mobius_recursive`` runs the defining recursion of the incidence algebra,
``mobius_incidence_series`` sums the alternating powers of the incidence
function (zeta minus delta), and ``mobius_closed`` evaluates the closed form
``(-1)^(b(u)-1) * a(u)`` where ``a(u)`` counts admissible shuffles: chains of
admissible partitions obtained by repeatedly merging the last block into an
earlier one.  All three agree; the test suite checks this exhaustively.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .partitions import (
    Partition,
    ParentMismatchError,
    _admissible,
    enumerate_admissible,
    is_admissible,
)


@dataclass(frozen=True)
class _Lattice:
    word: str
    elements: tuple[Partition, ...]
    index: dict
    up: tuple[tuple[int, ...], ...]
    down_mask: tuple[int, ...]


@functools.lru_cache(maxsize=None)
def _lattice(word: str) -> _Lattice:
    elements = enumerate_admissible(word)
    growth = [e.growth_string() for e in elements]
    count = len(elements)

    def refines_idx(i: int, j: int) -> bool:
        mapping: dict[int, int] = {}
        for a, b in zip(growth[i], growth[j]):
            if mapping.setdefault(a, b) != b:
                return False
        return True

    down_mask = [0] * count
    ups: list[list[int]] = [[] for _ in range(count)]
    for i in range(count):
        for j in range(count):
            if refines_idx(i, j):
                down_mask[j] |= 1 << i
                ups[i].append(j)

    # Linear extension: finer partitions (more blocks) first.
    ext_rank = {}
    for rank, idx in enumerate(
        sorted(range(count), key=lambda i: (-len(elements[i].blocks), growth[i]))
    ):
        ext_rank[idx] = rank
    up = tuple(tuple(sorted(l, key=ext_rank.__getitem__)) for l in ups)

    index = {e.blocks: i for i, e in enumerate(elements)}
    return _Lattice(word, elements, index, up, tuple(down_mask))


_ROWS: dict[tuple[str, int], dict[int, int]] = {}


def _mobius_row(word: str, iu: int) -> dict[int, int]:
    """m(u|t) for every t above u, keyed by lattice index."""
    key = (word, iu)
    row = _ROWS.get(key)
    if row is not None:
        return row
    lat = _lattice(word)
    ups = lat.up[iu]
    row = {}
    for pos, t in enumerate(ups):
        if t == iu:
            row[t] = 1
            continue
        mask = lat.down_mask[t]
        total = 0
        for r in ups[:pos]:
            if mask >> r & 1:
                total += row[r]
        row[t] = -total
    _ROWS[key] = row
    return row


def _indices(u: Partition, v: Partition):
    if u.parent != v.parent:
        raise ParentMismatchError(f"different parents: {u.parent!r} vs {v.parent!r}")
    lat = _lattice(u.parent)
    return lat, lat.index.get(u.blocks), lat.index.get(v.blocks)


def mobius_recursive(u: Partition, v: Partition) -> int:
    """m(u|v) by the defining recursion; 0 unless u <= v in the lattice."""
    lat, iu, iv = _indices(u, v)
    if iu is None or iv is None:
        return 0
    if not (lat.down_mask[iv] >> iu & 1):
        return 0
    return _mobius_row(u.parent, iu).get(iv, 0)


def mobius_incidence_series(u: Partition, v: Partition) -> int:
    """m(u|v) as delta - i + i^2 - ... for the incidence function i.

    The sum terminates because i is nilpotent on the finite segment [u, v].
    """
    lat, iu, iv = _indices(u, v)
    if iu is None or iv is None:
        return 0
    if iu == iv:
        return 1
    if not (lat.down_mask[iv] >> iu & 1):
        return 0
    mask_v = lat.down_mask[iv]
    seg = [r for r in lat.up[iu] if mask_v >> r & 1]
    # vec[r] holds i^k(r|v); start with k = 1.
    vec = {r: 1 for r in seg}
    vec[iv] = 0
    total = 0
    sign = -1
    for _ in range(len(seg) + 1):
        if not any(vec.values()):
            break
        total += sign * vec[iu]
        nxt = {}
        for ridx, r in enumerate(seg):
            acc = 0
            for t in seg[ridx + 1:]:
                if lat.down_mask[t] >> r & 1:
                    acc += vec[t]
            nxt[r] = acc
        vec = nxt
        sign = -sign
    return total


_SHUFFLES: dict[tuple[str, tuple], int] = {}


def shuffle_count(u: Partition) -> int:
    """Number of admissible shuffles of u; 0 when u is not admissible.

    Recurrence over the last block: each shuffle first merges the last block
    into one of the earlier blocks, and every intermediate partition must be
    admissible.  For admissible u, 1 <= a(u) <= (b(u)-1)!.
    """
    if not is_admissible(u):
        return 0
    return _shuffles(u.parent, u.blocks)


def _shuffles(parent: str, blocks: tuple[tuple[int, ...], ...]) -> int:
    p = len(blocks)
    if p <= 2:
        return 1
    key = (parent, blocks)
    cached = _SHUFFLES.get(key)
    if cached is not None:
        return cached
    last = blocks[-1]
    total = 0
    for k in range(p - 1):
        merged = tuple(sorted(blocks[k] + last))
        candidate = blocks[:k] + (merged,) + blocks[k + 1:p - 1]
        if _admissible(parent, candidate):
            total += _shuffles(parent, candidate)
    _SHUFFLES[key] = total
    return total


def mobius_closed(u: Partition) -> int:
    """m(u|1_s) via the closed form (-1)^(b(u)-1) * a(u)."""
    count = shuffle_count(u)
    if count == 0:
        return 0
    return count if (u.block_count - 1) % 2 == 0 else -count


def mobius_table(s: str) -> list[tuple[Partition, int, int, int]]:
    """Rows (partition, block count, shuffle count, Moebius value) for every
    admissible partition of s, in enumeration order."""
    return [
        (u, u.block_count, shuffle_count(u), mobius_closed(u))
        for u in enumerate_admissible(s)
    ]
