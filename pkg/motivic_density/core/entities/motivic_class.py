from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union

from sympy import Poly, Symbol, QQ

from motivic_density.core.errors import SymbolProductUnsupported

"""
Motivic class entity module.

This module defines the value types of the motivic ring: rational functions in the
Lefschetz class L with exact rational coefficients, the basis symbols (the class of a
point and free curve classes), the motivic classes built from them, and truncated
Laurent expansions at L = infinity.

Rational functions are kept reduced after every operation, so equality of two values
is equality of their stored polynomials.

@example
```python
from motivic_density.core.entities.motivic_class import MotivicClass, RationalFunctionL

half = MotivicClass.unit(RationalFunctionL.constant(Fraction(1, 2)))
twice = half + half   # MotivicClass.unit(1)
```
"""

L = Symbol('L')

Scalar = Union[int, Fraction]


@lru_cache(maxsize=None)
def _monomial(degree: int) -> Poly:
    return Poly.from_dict({(degree,): QQ(1)}, L, domain=QQ)


def _poly(value) -> Poly:
    if isinstance(value, Poly):
        return value
    if isinstance(value, Fraction):
        return Poly(QQ(value.numerator, value.denominator), L, domain=QQ)
    return Poly(value, L, domain=QQ)


def to_fraction(value) -> Fraction:
    """Convert a sympy rational (as returned by Poly coefficient accessors) to a Fraction."""
    return Fraction(int(value.p), int(value.q))


ZERO_POLY = _poly(0)
ONE_POLY = _poly(1)


@dataclass(frozen=True, eq=False)
class RationalFunctionL:
    """
    A reduced ratio of univariate polynomials in L over the rationals.

    The denominator is monic and coprime to the numerator; zero is stored as 0/1.
    Build values with the class methods, which normalize.

    @property numerator: The numerator as a sympy Poly in L over QQ.
    @property denominator: The monic denominator as a sympy Poly in L over QQ.
    """
    numerator: Poly
    denominator: Poly

    @classmethod
    def from_polys(cls, numerator, denominator=ONE_POLY) -> 'RationalFunctionL':
        numerator = _poly(numerator)
        denominator = _poly(denominator)
        if denominator.is_zero:
            raise ZeroDivisionError('rational function with zero denominator')
        if numerator.is_zero:
            return cls(ZERO_POLY, ONE_POLY)

        # Powers of L dominate the sizes seen here; strip them before the gcd.
        (num_shift,), numerator = numerator.terms_gcd()
        (den_shift,), denominator = denominator.terms_gcd()
        common = min(num_shift, den_shift)
        if num_shift > common:
            numerator = numerator * _monomial(num_shift - common)
        if den_shift > common:
            denominator = denominator * _monomial(den_shift - common)

        divisor = numerator.gcd(denominator)
        if divisor.degree() > 0:
            numerator = numerator.exquo(divisor)
            denominator = denominator.exquo(divisor)
        leading = denominator.LC()
        return cls(numerator.quo_ground(leading), denominator.monic())

    @classmethod
    def constant(cls, value: Scalar) -> 'RationalFunctionL':
        return cls.from_polys(_poly(value))

    @classmethod
    def lefschetz_power(cls, exponent: int) -> 'RationalFunctionL':
        """Return L^exponent for any integer exponent."""
        if exponent >= 0:
            return cls(_monomial(exponent), ONE_POLY)
        return cls(ONE_POLY, _monomial(-exponent))

    @classmethod
    def from_laurent(cls, coefficients: Mapping[int, Scalar]) -> 'RationalFunctionL':
        """
        Build the rational function of a Laurent polynomial.

        @param coefficients: A mapping exponent of L -> coefficient.
        @return: The reduced rational function sum(c * L^e).
        """
        entries = {e: c for e, c in coefficients.items() if c}
        if not entries:
            return cls(ZERO_POLY, ONE_POLY)
        low = min(entries)
        terms = {}
        for exponent, coefficient in entries.items():
            coefficient = Fraction(coefficient)
            terms[(exponent - low,)] = QQ(coefficient.numerator, coefficient.denominator)
        numerator = Poly.from_dict(terms, L, domain=QQ)
        if low >= 0:
            return cls.from_polys(numerator * _monomial(low))
        return cls.from_polys(numerator, _monomial(-low))

    @property
    def is_zero(self) -> bool:
        return self.numerator.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.denominator.degree() == 0

    def degree(self):
        """Return deg(numerator) - deg(denominator), or None for zero."""
        if self.is_zero:
            return None
        return self.numerator.degree() - self.denominator.degree()

    def numerator_terms(self) -> Dict[int, Fraction]:
        return {k: to_fraction(c) for (k,), c in self.numerator.terms() if c != 0}

    def denominator_terms(self) -> Dict[int, Fraction]:
        return {k: to_fraction(c) for (k,), c in self.denominator.terms() if c != 0}

    def as_expr(self):
        return self.numerator.as_expr() / self.denominator.as_expr()

    def _coerce(self, other) -> 'RationalFunctionL':
        if isinstance(other, RationalFunctionL):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalFunctionL.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.denominator == other.denominator:
            return RationalFunctionL.from_polys(self.numerator + other.numerator, self.denominator)
        return RationalFunctionL.from_polys(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunctionL(-self.numerator, self.denominator)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RationalFunctionL.from_polys(
            self.numerator * other.numerator,
            self.denominator * other.denominator,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero:
            raise ZeroDivisionError('division by the zero rational function')
        return RationalFunctionL.from_polys(
            self.numerator * other.denominator,
            self.denominator * other.numerator,
        )

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, exponent: int):
        if exponent < 0:
            return RationalFunctionL.constant(1) / (self ** -exponent)
        return RationalFunctionL.from_polys(self.numerator ** exponent, self.denominator ** exponent)

    def _key(self):
        return (tuple(self.numerator.all_coeffs()), tuple(self.denominator.all_coeffs()))

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f'RationalFunctionL({self.as_expr()})'


class SymbolKind(Enum):
    UNIT = 'unit'
    CURVE = 'curve'


@dataclass(frozen=True)
class ClassSymbol:
    """
    A basis symbol of the motivic module.

    @property kind: UNIT for the class of a point, CURVE for a free curve class.
    @property ident: The symbol id; empty for the unit.
    @property name: Optional display name (for example the genus tag); not compared.
    """
    kind: SymbolKind
    ident: str = ''
    name: Optional[str] = field(default=None, compare=False)

    @classmethod
    def unit(cls) -> 'ClassSymbol':
        return UNIT

    @classmethod
    def curve(cls, ident: str, name: Optional[str] = None) -> 'ClassSymbol':
        return cls(SymbolKind.CURVE, ident, name)

    @property
    def dimension(self) -> int:
        return 0 if self.kind is SymbolKind.UNIT else 1

    @property
    def is_unit(self) -> bool:
        return self.kind is SymbolKind.UNIT

    @property
    def sort_key(self):
        return (0, '') if self.is_unit else (1, self.ident)

    def __str__(self):
        return '1' if self.is_unit else f'[{self.ident}]'


UNIT = ClassSymbol(SymbolKind.UNIT)


@dataclass(frozen=True)
class MotivicClass:
    """
    An element of the free Q(L)-module on the basis symbols.

    Terms are kept sorted by symbol and never map to the zero rational function.
    Multiplication is defined when at least one factor is symbol-free.

    @property terms: Tuple of (ClassSymbol, RationalFunctionL) pairs.
    """
    terms: Tuple[Tuple[ClassSymbol, RationalFunctionL], ...] = ()

    @classmethod
    def from_terms(cls, pairs: Iterable[Tuple[ClassSymbol, RationalFunctionL]]) -> 'MotivicClass':
        collected: Dict[ClassSymbol, RationalFunctionL] = {}
        for symbol, coefficient in pairs:
            if symbol in collected:
                collected[symbol] = collected[symbol] + coefficient
            else:
                collected[symbol] = coefficient
        ordered = sorted(collected.items(), key=lambda item: item[0].sort_key)
        return cls(tuple((s, c) for s, c in ordered if not c.is_zero))

    @classmethod
    def zero(cls) -> 'MotivicClass':
        return cls()

    @classmethod
    def unit(cls, coefficient=1) -> 'MotivicClass':
        if not isinstance(coefficient, RationalFunctionL):
            coefficient = RationalFunctionL.constant(coefficient)
        return cls.from_terms([(UNIT, coefficient)])

    @classmethod
    def of_symbol(cls, symbol: ClassSymbol, coefficient=1) -> 'MotivicClass':
        if not isinstance(coefficient, RationalFunctionL):
            coefficient = RationalFunctionL.constant(coefficient)
        return cls.from_terms([(symbol, coefficient)])

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_symbol_free(self) -> bool:
        return all(symbol.is_unit for symbol, _ in self.terms)

    @property
    def symbols(self) -> Tuple[ClassSymbol, ...]:
        return tuple(symbol for symbol, _ in self.terms)

    def coefficient(self, symbol: ClassSymbol) -> RationalFunctionL:
        for candidate, coefficient in self.terms:
            if candidate == symbol:
                return coefficient
        return RationalFunctionL.constant(0)

    def scale(self, factor: RationalFunctionL) -> 'MotivicClass':
        return MotivicClass.from_terms((s, c * factor) for s, c in self.terms)

    @staticmethod
    def _coerce(other):
        if isinstance(other, MotivicClass):
            return other
        if isinstance(other, (int, Fraction, RationalFunctionL)):
            return MotivicClass.unit(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return MotivicClass.from_terms(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self):
        return MotivicClass(tuple((s, -c) for s, c in self.terms))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_symbol_free:
            return other.scale(self.coefficient(UNIT))
        if other.is_symbol_free:
            return self.scale(other.coefficient(UNIT))
        left = next(s for s in self.symbols if not s.is_unit)
        right = next(s for s in other.symbols if not s.is_unit)
        raise SymbolProductUnsupported(left.ident, right.ident)

    __rmul__ = __mul__

    def __repr__(self):
        inner = ', '.join(f'{s}: {c.as_expr()}' for s, c in self.terms)
        return f'MotivicClass({inner})'


@dataclass(frozen=True)
class LaurentTruncation:
    """
    The expansion of a motivic class at L = infinity, cut below L^-precision.

    @property precision: The truncation depth D; exponents e >= -D are kept.
    @property items: Sorted tuple of ((ClassSymbol, exponent), coefficient), zeros omitted.
    """
    precision: int
    items: Tuple[Tuple[Tuple[ClassSymbol, int], Fraction], ...] = ()

    @classmethod
    def from_mapping(cls, precision: int,
                     coefficients: Mapping[Tuple[ClassSymbol, int], Fraction]) -> 'LaurentTruncation':
        kept = [
            (key, Fraction(value)) for key, value in coefficients.items()
            if value and key[1] >= -precision
        ]
        kept.sort(key=lambda item: (item[0][0].sort_key, -item[0][1]))
        return cls(precision, tuple(kept))

    @property
    def is_zero(self) -> bool:
        return not self.items

    def as_dict(self) -> Dict[Tuple[ClassSymbol, int], Fraction]:
        return dict(self.items)

    def coefficient(self, symbol: ClassSymbol, exponent: int) -> Fraction:
        return self.as_dict().get((symbol, exponent), Fraction(0))

    def by_symbol(self) -> Dict[ClassSymbol, Dict[int, Fraction]]:
        grouped: Dict[ClassSymbol, Dict[int, Fraction]] = {}
        for (symbol, exponent), value in self.items:
            grouped.setdefault(symbol, {})[exponent] = value
        return grouped

    def truncate(self, precision: int) -> 'LaurentTruncation':
        if precision > self.precision:
            raise ValueError(f'cannot refine a truncation at {self.precision} to {precision}')
        return LaurentTruncation.from_mapping(precision, self.as_dict())

    def scaled(self, factor: Fraction) -> 'LaurentTruncation':
        return LaurentTruncation.from_mapping(
            self.precision, {key: value * factor for key, value in self.items}
        )

    def __add__(self, other: 'LaurentTruncation') -> 'LaurentTruncation':
        precision = min(self.precision, other.precision)
        total: Dict[Tuple[ClassSymbol, int], Fraction] = {}
        for key, value in self.items + other.items:
            total[key] = total.get(key, Fraction(0)) + value
        return LaurentTruncation.from_mapping(precision, total)
