"""Truncated series over the free semigroup on {z, w}.

A ``TruncatedSeries`` holds one Scalar coefficient per word up to a fixed
maximum length; all identities here are graded by word length, so truncation
is exact degree by degree.  The module provides the convolution product,
inversion (two independent algorithms), star-composition against a
z-supported series, the z/w support restrictions, exponential-style moment
and cumulant generating functions, weighted norms, and the verification
routines for the generating-function identities and the norm bounds.
"""

from __future__ import annotations

import dataclasses
import itertools
from fractions import Fraction
from typing import Callable, Mapping

from .cumulants import CumulantFunction, MomentFunction, cumulants_from_moments
from .scalar import Scalar, as_scalar
from .words import (
    block_factorial,
    block_shape,
    factorizations,
    iter_words,
    render_word,
    shortlex_key,
    validate_word,
    w_count,
)


class TruncationMismatchError(ValueError):
    """Binary series operations require matching truncation lengths."""


class NotNormalizedError(ValueError):
    """Inversion requires coefficient 1 at the empty word."""


class BadSupportError(ValueError):
    """The series must be supported on z-words only."""


class SymbolicCoefficientError(ValueError):
    """A rational value was required but a symbolic coefficient appeared."""


class TruncatedSeries:
    """A formal sum of words with Scalar coefficients, cut beyond max_len.

    Equality is coefficient-wise at every word up to max_len; zero
    coefficients are never stored.  Instances are immutable by convention.
    """

    __slots__ = ("max_len", "_coeffs")

    def __init__(self, max_len: int, coeffs: Mapping[str, object] | None = None):
        if not isinstance(max_len, int) or max_len < 0:
            raise ValueError("max_len must be a nonnegative integer")
        self.max_len = max_len
        table: dict[str, Scalar] = {}
        if coeffs:
            for word, value in coeffs.items():
                validate_word(word)
                if len(word) > max_len:
                    raise ValueError(
                        f"word {render_word(word)!r} exceeds truncation {max_len}"
                    )
                scalar = as_scalar(value)
                if scalar:
                    table[word] = scalar
        self._coeffs = table

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, max_len: int) -> "TruncatedSeries":
        return cls(max_len)

    @classmethod
    def unit(cls, max_len: int) -> "TruncatedSeries":
        return cls(max_len, {"": Scalar.one()})

    # -- access ------------------------------------------------------------

    def _get(self, word: str) -> Scalar:
        return self._coeffs.get(word, Scalar.zero())

    def coefficient(self, word: str) -> Scalar:
        validate_word(word)
        if len(word) > self.max_len:
            raise ValueError(f"word {render_word(word)!r} exceeds truncation {self.max_len}")
        return self._get(word)

    def support(self) -> list[str]:
        return sorted(self._coeffs, key=shortlex_key)

    def items(self):
        for word in self.support():
            yield word, self._coeffs[word]

    # -- linear structure ----------------------------------------------------

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        _require_same_truncation(self, other)
        out = dict(self._coeffs)
        for word, value in other._coeffs.items():
            out[word] = out.get(word, Scalar.zero()) + value
        return TruncatedSeries(self.max_len, out)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.max_len, {w: -c for w, c in self._coeffs.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.max_len == other.max_len and self._coeffs == other._coeffs

    def __repr__(self) -> str:
        body = ", ".join(f"{render_word(w)}: {c}" for w, c in self.items())
        return f"TruncatedSeries(max_len={self.max_len}, {{{body}}})"


def _require_same_truncation(f: TruncatedSeries, g: TruncatedSeries) -> None:
    if f.max_len != g.max_len:
        raise TruncationMismatchError(
            f"truncations differ: {f.max_len} vs {g.max_len}"
        )


def series_convolve(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """(f * g)(s) = sum over the l(s)+1 splittings s = uv of f(u) g(v)."""
    _require_same_truncation(f, g)
    out: dict[str, Scalar] = {}
    for s in iter_words(f.max_len):
        total = Scalar.zero()
        for i in range(len(s) + 1):
            a = f._get(s[:i])
            if not a:
                continue
            b = g._get(s[i:])
            if b:
                total = total + a * b
        if total:
            out[s] = total
    return TruncatedSeries(f.max_len, out)


def series_invert(f: TruncatedSeries) -> TruncatedSeries:
    """Two-sided inverse via the alternating sum over factorizations:
    g(s) = sum over p of (-1)^p sum over p-factor splittings of the
    coefficient products."""
    if f._get("") != Scalar.one():
        raise NotNormalizedError("inversion requires coefficient 1 at the empty word")
    out: dict[str, Scalar] = {"": Scalar.one()}
    for s in iter_words(f.max_len):
        if not s:
            continue
        total = Scalar.zero()
        for factors in factorizations(s):
            product = Scalar.one()
            for factor in factors:
                coeff = f._get(factor)
                if not coeff:
                    product = Scalar.zero()
                    break
                product = product * coeff
            if product:
                total = total + (-1) ** len(factors) * product
        if total:
            out[s] = total
    return TruncatedSeries(f.max_len, out)


def series_invert_triangular(f: TruncatedSeries) -> TruncatedSeries:
    """Independent inversion: solve f * g = unit degree by degree."""
    if f._get("") != Scalar.one():
        raise NotNormalizedError("inversion requires coefficient 1 at the empty word")
    table: dict[str, Scalar] = {"": Scalar.one()}
    for s in iter_words(f.max_len):
        if not s:
            continue
        total = Scalar.zero()
        for i in range(1, len(s) + 1):
            a = f._get(s[:i])
            if not a:
                continue
            b = table.get(s[i:], Scalar.zero())
            if b:
                total = total + a * b
        table[s] = -total
    return TruncatedSeries(f.max_len, table)


def star_compose(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Substitute g at the z-runs preceding each w-run of every word.

    Requires g supported on z-words.  The result agrees with f on z-words;
    at s = z^a1 w^b1 ... z^a(p-1) w^b(p-1) z^ap it sums, over all splittings
    u_i v_i = z^ai of the z-runs before each w-run, the coefficient of f at
    u_1 w^b1 ... u_(p-1) w^b(p-1) z^ap times the product of g(v_i).
    """
    _require_same_truncation(f, g)
    if any(w_count(word) for word in g._coeffs):
        raise BadSupportError("composition series must be supported on z-words")
    out: dict[str, Scalar] = {}
    for s in iter_words(f.max_len):
        if "w" not in s:
            value = f._get(s)
            if value:
                out[s] = value
            continue
        shape = block_shape(s)
        w_parts = ["w" * k for k in shape.w_runs]
        tail = "z" * shape.z_runs[-1]
        heads = shape.z_runs[:-1]
        total = Scalar.zero()
        for kept in itertools.product(*(range(a + 1) for a in heads)):
            pieces = []
            for i, keep in enumerate(kept):
                pieces.append("z" * keep)
                pieces.append(w_parts[i])
            pieces.append(tail)
            coeff = f._get("".join(pieces))
            if not coeff:
                continue
            term = coeff
            for i, keep in enumerate(kept):
                factor = g._get("z" * (heads[i] - keep))
                if not factor:
                    term = Scalar.zero()
                    break
                term = term * factor
            if term:
                total = total + term
        if total:
            out[s] = total
    return TruncatedSeries(f.max_len, out)


def restrict_z(f: TruncatedSeries) -> TruncatedSeries:
    """Keep only coefficients on z-words (the empty word included)."""
    return TruncatedSeries(
        f.max_len, {word: c for word, c in f._coeffs.items() if "w" not in word}
    )


def restrict_w(f: TruncatedSeries) -> TruncatedSeries:
    """Keep only coefficients on w-words (the empty word included)."""
    return TruncatedSeries(
        f.max_len, {word: c for word, c in f._coeffs.items() if "z" not in word}
    )


def delta_part(f: TruncatedSeries) -> TruncatedSeries:
    """Zero out every z-word coefficient, the empty word included."""
    return TruncatedSeries(
        f.max_len, {word: c for word, c in f._coeffs.items() if "w" in word}
    )


def moment_gf(M: MomentFunction, max_len: int) -> TruncatedSeries:
    """Generating function with coefficient M(s) / n(s)! at each word, where
    n(s)! is the product of factorials of the z-run lengths."""
    out: dict[str, Scalar] = {}
    for s in iter_words(max_len):
        value = M(s) / block_factorial(s)
        if value:
            out[s] = value
    return TruncatedSeries(max_len, out)


def cumulant_gf(L: CumulantFunction, max_len: int) -> TruncatedSeries:
    """Generating function with coefficient L(s) / n(s)!; zero at the empty
    word."""
    out: dict[str, Scalar] = {}
    for s in iter_words(max_len):
        if not s:
            continue
        value = L(s) / block_factorial(s)
        if value:
            out[s] = value
    return TruncatedSeries(max_len, out)


@dataclasses.dataclass(frozen=True)
class GeometricWeight:
    """W(s) = base^l(s) with rational base >= 1; submultiplicative with
    equality and symmetric in the two factors."""

    base: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "base", Fraction(self.base))
        if self.base < 1:
            raise ValueError("weight base must be >= 1")

    def __call__(self, word: str) -> Fraction:
        return self.base ** len(word)


def weight_scaled_by_w_count(W: Callable[[str], Fraction], q) -> Callable[[str], Fraction]:
    """The weight s -> W(s) * q^(-count of w's in s)."""
    q = Fraction(q)
    if q <= 0:
        raise ValueError("scale must be positive")

    def scaled(word: str) -> Fraction:
        return Fraction(W(word)) / q ** w_count(word)

    return scaled


def weighted_norm(
    f: TruncatedSeries,
    W: Callable[[str], Fraction],
    abs_model: Callable[[Scalar], Fraction] | None = None,
) -> Fraction:
    """Truncated norm: sum of W(s) |f(s)| over the stored support.

    Coefficients must be rational constants unless abs_model maps symbolic
    coefficients to rationals first.
    """
    total = Fraction(0)
    for word, coeff in f._coeffs.items():
        if coeff.is_constant:
            value = abs(coeff.constant_value())
        elif abs_model is not None:
            value = abs(Fraction(abs_model(coeff)))
        else:
            raise SymbolicCoefficientError(
                f"symbolic coefficient at {render_word(word)!r}: {coeff}"
            )
        total += Fraction(W(word)) * value
    return total


# -- verification reports ----------------------------------------------------


@dataclasses.dataclass
class IdentityReport:
    """Per-word exact comparison of two truncated series."""

    name: str
    max_len: int
    ok: bool
    words_checked: int
    first_failure: tuple[str, str, str] | None = None

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        line = f"{self.name}: {status} (max_len={self.max_len}, words={self.words_checked})"
        if self.first_failure:
            word, lhs, rhs = self.first_failure
            line += f" first failure at {word}: {lhs} != {rhs}"
        return line


def _compare_series(name: str, lhs: TruncatedSeries, rhs: TruncatedSeries) -> IdentityReport:
    _require_same_truncation(lhs, rhs)
    checked = 0
    for s in iter_words(lhs.max_len):
        checked += 1
        a = lhs._get(s)
        b = rhs._get(s)
        if a != b:
            return IdentityReport(name, lhs.max_len, False, checked,
                                  (render_word(s), str(a), str(b)))
    return IdentityReport(name, lhs.max_len, True, checked)


def check_gf_factorization(M: MomentFunction, max_len: int) -> IdentityReport:
    """Verify that the w-part of the moment generating function equals the
    star-modified cumulant generating function times the full moment
    generating function, word by word."""
    if max_len < 2:
        raise ValueError("max_len must be >= 2")
    L = cumulants_from_moments(M, max_len)
    mgf = moment_gf(M, max_len)
    lgf = cumulant_gf(L, max_len)
    lhs = delta_part(mgf)
    lstar_delta = star_compose(delta_part(lgf), restrict_z(mgf))
    rhs = series_convolve(lstar_delta, mgf)
    return _compare_series("gf-factorization", lhs, rhs)


def check_cumulant_gf_formula(M: MomentFunction, max_len: int) -> IdentityReport:
    """Verify the closed form of the cumulant generating function:
    L = L_z + (M_star - M_z) * M_star^(-1), with M_star the moment
    generating function star-composed with the inverse of its z-part."""
    if max_len < 2:
        raise ValueError("max_len must be >= 2")
    L = cumulants_from_moments(M, max_len)
    mgf = moment_gf(M, max_len)
    lgf = cumulant_gf(L, max_len)
    mz = restrict_z(mgf)
    mstar = star_compose(mgf, series_invert(mz))
    rhs = restrict_z(lgf) + series_convolve(mstar - mz, series_invert(mstar))
    return _compare_series("cumulant-gf-formula", lgf, rhs)


@dataclasses.dataclass
class NormBoundsReport:
    """Truncated norm inequalities for inversion and star-composition.

    The truncated norms are lower bounds for the full ones, so the checks
    here are necessary conditions of the untruncated statements.  The
    intermediate bound is the proof-side estimate
    sum over z-words of W|f| plus sum over w-words of W~|f| * ||g||^m(s).
    """

    q: Fraction
    f_norm: Fraction
    inverse_hypothesis: bool
    inverse_norm: Fraction | None = None
    inverse_ok: bool | None = None
    g_norm: Fraction | None = None
    compose_hypothesis: bool = False
    composed_norm: Fraction | None = None
    compose_ok: bool | None = None
    intermediate_bound: Fraction | None = None
    intermediate_ok: bool | None = None

    @property
    def ok(self) -> bool:
        results = [r for r in (self.inverse_ok, self.compose_ok, self.intermediate_ok)
                   if r is not None]
        return all(results)

    def summary(self) -> str:
        bits = [f"norm-bounds: {'PASS' if self.ok else 'FAIL'} (Q={self.q})"]
        if self.inverse_hypothesis:
            bits.append(f"  ||f||={self.f_norm} ||f^-1||={self.inverse_norm} <= Q: {self.inverse_ok}")
        else:
            bits.append(f"  inversion hypothesis not met: ||f||={self.f_norm} > 2-1/Q")
        if self.compose_hypothesis:
            bits.append(
                f"  ||f_*g||~={self.composed_norm} <= ||f||={self.f_norm}: {self.compose_ok};"
                f" <= intermediate {self.intermediate_bound}: {self.intermediate_ok}"
            )
        elif self.g_norm is not None:
            bits.append(f"  composition hypothesis not met: ||g||={self.g_norm} >= Q")
        return "\n".join(bits)


def check_norm_bounds(
    f: TruncatedSeries,
    g: TruncatedSeries,
    W: Callable[[str], Fraction],
    Q,
) -> NormBoundsReport:
    """Check the truncated norm bounds for inversion and star-composition.

    When ||f||_W <= 2 - 1/Q, asserts ||f^-1||_W <= Q; when ||g||_W < Q,
    asserts ||f_*g|| in the w-discounted weight is at most ||f||_W and at
    most the proof-side intermediate bound.  Unmet hypotheses are reported,
    not raised.
    """
    q = Fraction(Q)
    if q <= Fraction(1, 2):
        raise ValueError("Q must exceed 1/2")
    if f._get("") != Scalar.one():
        raise NotNormalizedError("f must have coefficient 1 at the empty word")
    if any(w_count(word) for word in g._coeffs):
        raise BadSupportError("g must be supported on z-words")

    f_norm = weighted_norm(f, W)
    report = NormBoundsReport(q=q, f_norm=f_norm,
                              inverse_hypothesis=f_norm <= 2 - Fraction(1) / q)
    if report.inverse_hypothesis:
        report.inverse_norm = weighted_norm(series_invert(f), W)
        report.inverse_ok = report.inverse_norm <= q

    report.g_norm = weighted_norm(g, W)
    report.compose_hypothesis = report.g_norm < q
    if report.compose_hypothesis:
        scaled = weight_scaled_by_w_count(W, q)
        report.composed_norm = weighted_norm(star_compose(f, g), scaled)
        report.compose_ok = report.composed_norm <= f_norm
        bound = Fraction(0)
        for word, coeff in f._coeffs.items():
            value = abs(coeff.constant_value())
            if "w" in word:
                bound += scaled(word) * value * report.g_norm ** w_count(word)
            else:
                bound += Fraction(W(word)) * value
        report.intermediate_bound = bound
        report.intermediate_ok = report.composed_norm <= bound
    return report
