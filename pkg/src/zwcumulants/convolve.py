"""The filtered convolution of hat states.

The convolution of two hat-backed moment functions is computed as a sum over
all two-leg splittings of the word.  For each assignment of a leg in {1, 2}
to every letter, a w assigned to the other leg acts as a cut point, so each
leg's positions break into the coarsest interval blocks whose union is an
admissible partition of the word; the summand is the product of the first
state's moments over leg-1 blocks times the second state's moments over
leg-2 blocks.
"""

from __future__ import annotations

import functools
import itertools

from .cumulants import HatMomentFunction
from .partitions import Partition, Subword, is_admissible
from .scalar import Scalar
from .words import validate_word


class LengthMismatchError(ValueError):
    """The leg-assignment vector must have one entry per letter."""


def _require_hat(state) -> None:
    if not isinstance(state, HatMomentFunction):
        raise TypeError(
            "filtered convolution is defined for hat-backed moment functions only"
        )


def _check_epsilon(s: str, eps) -> tuple[int, ...]:
    validate_word(s)
    eps = tuple(eps)
    if len(eps) != len(s):
        raise LengthMismatchError(f"need {len(s)} leg entries, got {len(eps)}")
    if any(e not in (1, 2) for e in eps):
        raise ValueError(f"leg entries must be 1 or 2: {eps}")
    return eps


def _leg_blocks(s: str, eps: tuple[int, ...], leg: int) -> tuple[tuple[int, ...], ...]:
    other = 2 if leg == 1 else 1
    blocks: list[tuple[int, ...]] = []
    current: list[int] = []
    prev = 0
    for idx, e in enumerate(eps):
        if e != leg:
            continue
        p = idx + 1
        if current and any(
            s[j - 1] == "w" and eps[j - 1] == other for j in range(prev + 1, p)
        ):
            blocks.append(tuple(current))
            current = []
        current.append(p)
        prev = p
    if current:
        blocks.append(tuple(current))
    return tuple(blocks)


@functools.lru_cache(maxsize=None)
def _split_blocks(s: str, eps: tuple[int, ...]):
    blocks1 = _leg_blocks(s, eps, 1)
    blocks2 = _leg_blocks(s, eps, 2)
    if s:
        combined = Partition.from_blocks(s, blocks1 + blocks2)
        assert is_admissible(combined), "leg blocks must form an admissible partition"
    return blocks1, blocks2


def epsilon_split(s: str, eps) -> tuple[tuple[Subword, ...], tuple[Subword, ...]]:
    """The coarsest interval blocks of each leg's positions.

    Leg 1 is cut at every w assigned to leg 2 and vice versa; together the
    blocks of both legs form an admissible partition of s.
    """
    eps = _check_epsilon(s, eps)
    blocks1, blocks2 = _split_blocks(s, eps)
    return (
        tuple(Subword(s, b) for b in blocks1),
        tuple(Subword(s, b) for b in blocks2),
    )


def epsilon_moment(mu_state, nu_state, s: str, eps) -> Scalar:
    """Product of mu over leg-1 blocks times nu over leg-2 blocks."""
    _require_hat(mu_state)
    _require_hat(nu_state)
    eps = _check_epsilon(s, eps)
    blocks1, blocks2 = _split_blocks(s, eps)
    out = Scalar.one()
    for block in blocks1:
        out = out * mu_state("".join(s[p - 1] for p in block))
    for block in blocks2:
        out = out * nu_state("".join(s[p - 1] for p in block))
    return out


def filtered_convolve(mu_state, nu_state, s: str) -> Scalar:
    """Moment of the convolved state at s: the sum over all 2^l(s) leg
    assignments of the split moment products."""
    _require_hat(mu_state)
    _require_hat(nu_state)
    validate_word(s)
    if not s:
        return Scalar.one()
    total = Scalar.zero()
    for eps in itertools.product((1, 2), repeat=len(s)):
        total = total + epsilon_moment(mu_state, nu_state, s, eps)
    return total


def restrict_classical(mu_state, nu_state, n: int) -> Scalar:
    """Convolution moment on z^n; agrees with the classical convolution."""
    if n < 0:
        raise ValueError("order must be >= 0")
    return filtered_convolve(mu_state, nu_state, "z" * n)


def restrict_boolean(mu_state, nu_state, n: int) -> Scalar:
    """Convolution moment on w^n; agrees with the boolean convolution."""
    if n < 0:
        raise ValueError("order must be >= 0")
    return filtered_convolve(mu_state, nu_state, "w" * n)
