"""Exact coefficients: arbitrary-precision rationals and polynomials in moment symbols.

Every value in the package is either a ``fractions.Fraction`` or a ``Scalar``,
a multivariate polynomial in commuting formal moment symbols (mu1, mu2, ...,
nu1, nu2, ...) with Fraction coefficients.  Floating point never appears.
Values are immutable after construction and safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

RationalLike = Union[int, Fraction]


class MissingSymbolError(KeyError):
    """A symbol occurring in the polynomial has no assigned value."""


@dataclass(frozen=True, order=True)
class MomentSymbol:
    """A formal moment symbol such as ``mu3`` or ``nu1``."""

    family: str
    order: int

    def __post_init__(self) -> None:
        if not (self.family and self.family.isascii() and self.family.isalpha()
                and self.family.islower()):
            raise ValueError(f"bad symbol family: {self.family!r}")
        if self.order < 1:
            raise ValueError(f"symbol order must be >= 1, got {self.order}")

    def __str__(self) -> str:
        return f"{self.family}{self.order}"


def mu(order: int) -> MomentSymbol:
    return MomentSymbol("mu", order)


def nu(order: int) -> MomentSymbol:
    return MomentSymbol("nu", order)


# A monomial is a tuple of (symbol, exponent) pairs, sorted by symbol, with
# all exponents >= 1.  The empty tuple is the constant monomial.
Monomial = tuple


class Scalar:
    """Polynomial in moment symbols with exact rational coefficients.

    Zero coefficients are never stored and monomial keys are kept in a
    canonical sorted form, so ``==`` is structural equality.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, RationalLike] | None = None):
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                q = Fraction(coeff)
                if q:
                    clean[mono] = q
        self._terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "Scalar":
        return cls()

    @classmethod
    def one(cls) -> "Scalar":
        return cls({(): Fraction(1)})

    @classmethod
    def rational(cls, value: RationalLike) -> "Scalar":
        return cls({(): Fraction(value)})

    @classmethod
    def symbol(cls, sym: MomentSymbol) -> "Scalar":
        return cls({((sym, 1),): Fraction(1)})

    # -- structure ---------------------------------------------------------

    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def symbols(self) -> set[MomentSymbol]:
        return {sym for mono in self._terms for sym, _ in mono}

    @property
    def is_constant(self) -> bool:
        return all(mono == () for mono in self._terms)

    def constant_value(self) -> Fraction:
        if not self._terms:
            return Fraction(0)
        if not self.is_constant:
            raise ValueError(f"not a constant polynomial: {self}")
        return self._terms[()]

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(value) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Fraction)):
            return Scalar.rational(value)
        if isinstance(value, MomentSymbol):
            return Scalar.symbol(value)
        raise TypeError(f"cannot interpret {value!r} as a Scalar")

    def __add__(self, other) -> "Scalar":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for mono, coeff in other._terms.items():
            out[mono] = out.get(mono, Fraction(0)) + coeff
        return Scalar(out)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar({mono: -coeff for mono, coeff in self._terms.items()})

    def __sub__(self, other) -> "Scalar":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Scalar":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Scalar":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for mono1, coeff1 in self._terms.items():
            for mono2, coeff2 in other._terms.items():
                mono = _merge_monomials(mono1, mono2)
                out[mono] = out.get(mono, Fraction(0)) + coeff1 * coeff2
        return Scalar(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Scalar":
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return self * (Fraction(1) / Fraction(other))

    def __pow__(self, exponent: int) -> "Scalar":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = Scalar.one()
        for _ in range(exponent):
            out = out * self
        return out

    # -- evaluation --------------------------------------------------------

    def evaluate(self, assignment: Mapping[MomentSymbol, RationalLike]) -> Fraction:
        """Substitute rational values for every symbol and evaluate exactly."""
        total = Fraction(0)
        for mono, coeff in self._terms.items():
            value = coeff
            for sym, exp in mono:
                if sym not in assignment:
                    raise MissingSymbolError(str(sym))
                value *= Fraction(assignment[sym]) ** exp
            total += value
        return total

    # -- comparison and hashing --------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Scalar.rational(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- rendering ---------------------------------------------------------

    def render(self) -> str:
        """Canonical text form, e.g. ``mu2 - mu1^2`` or ``5/6``.

        Monomials print their factors in ascending symbol order
        (``mu1^2*nu3``); the sum lists monomials in descending lexicographic
        order of exponent vectors, with variables ordered family-first and
        higher orders first, so ``mu3`` precedes ``mu2*nu1`` precedes ``nu3``.
        """
        if not self._terms:
            return "0"
        variables = sorted(self.symbols(), key=lambda s: (s.family, -s.order))
        vindex = {v: i for i, v in enumerate(variables)}

        def exponents(mono: Monomial) -> tuple[int, ...]:
            vec = [0] * len(variables)
            for sym, exp in mono:
                vec[vindex[sym]] = exp
            return tuple(vec)

        ordered = sorted(self._terms, key=exponents, reverse=True)
        pieces: list[str] = []
        for i, mono in enumerate(ordered):
            coeff = self._terms[mono]
            magnitude = -coeff if coeff < 0 else coeff
            if mono == ():
                frag = str(magnitude)
            else:
                body = "*".join(str(sym) if exp == 1 else f"{sym}^{exp}"
                                for sym, exp in mono)
                frag = body if magnitude == 1 else f"{magnitude}*{body}"
            if i == 0:
                pieces.append(f"-{frag}" if coeff < 0 else frag)
            else:
                pieces.append(f" - {frag}" if coeff < 0 else f" + {frag}")
        return "".join(pieces)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"Scalar({self.render()!r})"


def _merge_monomials(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    out: dict[MomentSymbol, int] = dict(a)
    for sym, exp in b:
        out[sym] = out.get(sym, 0) + exp
    return tuple(sorted(out.items()))


def as_scalar(value) -> Scalar:
    """Coerce an int, Fraction, MomentSymbol or Scalar into a Scalar."""
    return Scalar._coerce(value)
