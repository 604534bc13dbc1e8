import logging
import math
import re
from fractions import Fraction
from typing import Dict, List, Mapping, Tuple

from sympy import Poly, QQ, S, Symbol, diff, fraction, together
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.polyerrors import PolynomialError

from motivic_density.core.entities.motivic_class import (
    L,
    ClassSymbol,
    LaurentTruncation,
    MotivicClass,
    RationalFunctionL,
)
from motivic_density.core.errors import ClassSyntaxError, InvalidIndex, SymbolProductUnsupported

"""
Motivic ring service module.

This module holds the operations of the motivic ring: arithmetic, the localizing
geometric factors, the L-degree, expansion at L = infinity by long division, the
canonical text form of a class and its parser.

@example
```python
from motivic_density.core.services import motivic_ring as mr

g = mr.geometric_factor(1)                  # L/(L - 1)
mr.render_truncation(mr.expand(g, 3))       # '1 + L^-1 + L^-2 + L^-3'
mr.parse_class(mr.canonical_string(g)) == g  # True
```
"""

logger = logging.getLogger(__name__)

_SYMBOL_ATOM = re.compile(r'\[([^\[\]\s]+)\]')
_PLACEHOLDER = re.compile(r'_s\d+_')
_ALLOWED = re.compile(r'[\s\dL+\-*/()^]*')
_TRANSFORMATIONS = standard_transformations + (convert_xor,)


def mc_add(a: MotivicClass, b: MotivicClass) -> MotivicClass:
    """
    Add two classes termwise.

    @param a: The first summand.
    @param b: The second summand.
    @return: The sum, with zero terms dropped.
    """
    return a + b


def mc_sub(a: MotivicClass, b: MotivicClass) -> MotivicClass:
    """Return a - b."""
    return a - b


def mc_neg(a: MotivicClass) -> MotivicClass:
    """Return -a."""
    return -a


def mc_mul(a: MotivicClass, b: MotivicClass) -> MotivicClass:
    """
    Multiply two classes.

    @param a: The left factor.
    @param b: The right factor.
    @return: The distributive product.
    @raise SymbolProductUnsupported: When both factors carry a curve symbol.
    """
    return a * b


def lefschetz(exponent: int) -> MotivicClass:
    """L^k as a symbol-free class, for any integer k."""
    return MotivicClass.unit(RationalFunctionL.lefschetz_power(exponent))


def geometric_factor(index: int) -> MotivicClass:
    """
    Return 1/(1 - L^-i) = L^i/(L^i - 1) as a symbol-free class.

    @param index: The positive integer i.
    @return: The reduced class.
    @raise InvalidIndex: When i < 1.
    """
    if index < 1:
        raise InvalidIndex(index)
    power = RationalFunctionL.lefschetz_power(index)
    return MotivicClass.unit(power / (power - 1))


def l_degree(a: MotivicClass):
    """Return the L-degree of a class, or -math.inf for zero."""
    if a.is_zero:
        return -math.inf
    return max(c.degree() + s.dimension for s, c in a.terms)


def expand_rational(r: RationalFunctionL, precision: int) -> Dict[int, Fraction]:
    """
    Expand a rational function at L = infinity by long division in descending powers.

    @param r: The reduced rational function.
    @param precision: Keep coefficients of L^e for e >= -precision.
    @return: A mapping exponent -> nonzero coefficient.
    """
    if r.is_zero:
        return {}
    remainder = r.numerator_terms()
    divisor = r.denominator_terms()
    top_divisor = max(divisor)
    lower = [(k, d) for k, d in divisor.items() if k != top_divisor]
    result = {}
    for exponent in range(r.degree(), -precision - 1, -1):
        coefficient = remainder.pop(exponent + top_divisor, None)
        if not coefficient:
            continue
        result[exponent] = coefficient
        for k, d in lower:
            key = exponent + k
            remainder[key] = remainder.get(key, Fraction(0)) - coefficient * d
    return result


def expand(a: MotivicClass, precision: int) -> LaurentTruncation:
    """
    Expand a class at L = infinity, symbol by symbol.

    @param a: The class.
    @param precision: The truncation depth D; exponents e >= -D are kept.
    @return: The truncation.
    @raise ValueError: When the precision is negative.
    """
    if precision < 0:
        raise ValueError(f'precision must be >= 0, got {precision}')
    coefficients = {}
    for symbol, rational in a.terms:
        for exponent, value in expand_rational(rational, precision).items():
            coefficients[(symbol, exponent)] = value
    return LaurentTruncation.from_mapping(precision, coefficients)


def mc_eq_truncated(a: MotivicClass, b: MotivicClass, precision: int) -> bool:
    """
    Compare two classes up to L^-precision.

    @param a: The first class.
    @param b: The second class.
    @param precision: The truncation depth D.
    @return: True when both expansions agree on every exponent e >= -D.
    """
    return expand(a, precision) == expand(b, precision)


def mc_substitute(a: MotivicClass, mapping: Mapping[ClassSymbol, MotivicClass]) -> MotivicClass:
    """
    Replace curve symbols by symbol-free classes.

    @param a: The class to rewrite.
    @param mapping: Symbol -> replacement class; symbols not in the mapping are kept.
    @return: The rewritten class.
    """
    result = MotivicClass.zero()
    for symbol, coefficient in a.terms:
        if symbol in mapping:
            result = result + mapping[symbol].scale(coefficient)
        else:
            result = result + MotivicClass.of_symbol(symbol, coefficient)
    return result


# Canonical text form

def _integer_scaled(r: RationalFunctionL) -> Tuple[List[Tuple[int, int]], List[Tuple[int, int]]]:
    numerator = r.numerator_terms()
    denominator = r.denominator_terms()
    values = list(numerator.values()) + list(denominator.values())
    scale = math.lcm(*(v.denominator for v in values))
    num = {k: int(v * scale) for k, v in numerator.items()}
    den = {k: int(v * scale) for k, v in denominator.items()}
    content = math.gcd(*num.values(), *den.values())
    if den[max(den)] < 0:
        content = -content
    ordered_num = sorted(((k, v // content) for k, v in num.items()), reverse=True)
    ordered_den = sorted(((k, v // content) for k, v in den.items()), reverse=True)
    return ordered_num, ordered_den


def _render_monomial(coefficient, exponent: int) -> str:
    magnitude = abs(coefficient)
    if exponent == 0:
        return str(magnitude)
    power = 'L' if exponent == 1 else f'L^{exponent}'
    if magnitude == 1:
        return power
    return f'{magnitude}*{power}'


def _render_sum(terms) -> str:
    text = ''
    for index, (exponent, coefficient) in enumerate(terms):
        monomial = _render_monomial(coefficient, exponent)
        if index == 0:
            text = f'-{monomial}' if coefficient < 0 else monomial
        else:
            text += f' - {monomial}' if coefficient < 0 else f' + {monomial}'
    return text


def _render_rational(r: RationalFunctionL, as_factor: bool) -> str:
    num, den = _integer_scaled(r)
    num_text = _render_sum(num)
    num_constant = len(num) == 1 and num[0][0] == 0
    if den == [(0, 1)]:
        if as_factor and not num_constant:
            return f'({num_text})'
        return num_text
    den_constant = len(den) == 1 and den[0][0] == 0
    if not num_constant:
        num_text = f'({num_text})'
    den_text = _render_sum(den)
    if not den_constant:
        den_text = f'({den_text})'
    return f'{num_text}/{den_text}'


def canonical_string(a: MotivicClass) -> str:
    """
    Render a class deterministically.

    Terms appear unit first, then curve symbols by id. Each coefficient is written as
    "num/den" with integer coefficients and descending powers of L, e.g.
    "(L)/(L + 1)*[E3]". The zero class renders as "0".

    @param a: The class to render.
    @return: The canonical text, accepted by parse_class.
    """
    if a.is_zero:
        return '0'
    parts = []
    for symbol, coefficient in a.terms:
        if symbol.is_unit:
            parts.append(_render_rational(coefficient, as_factor=False))
        else:
            parts.append(f'{_render_rational(coefficient, as_factor=True)}*[{symbol.ident}]')
    text = parts[0]
    for part in parts[1:]:
        text += f' - {part[1:]}' if part.startswith('-') else f' + {part}'
    return text


def _rational_from_expr(text: str, expr) -> RationalFunctionL:
    if expr.has(S.ComplexInfinity, S.NaN, S.Infinity, S.NegativeInfinity):
        raise ClassSyntaxError(text, 'division by zero')
    numerator, denominator = fraction(together(expr))
    try:
        return RationalFunctionL.from_polys(
            Poly(numerator, L, domain=QQ), Poly(denominator, L, domain=QQ)
        )
    except (PolynomialError, ZeroDivisionError, ValueError) as e:
        raise ClassSyntaxError(text, f'not a rational function of L: {e}') from e


def parse_class(text: str) -> MotivicClass:
    """
    Parse the canonical text form back into a class.

    Accepts rational numbers, L, the operators + - * / ^, parentheses and symbol
    atoms [name]. Whitespace is ignored.

    @param text: The text to parse.
    @return: The parsed class.
    @raise ClassSyntaxError: When the text is not a class expression.
    @raise SymbolProductUnsupported: When two symbol atoms are multiplied or divided.
    """
    names: Dict[str, str] = {}

    def placeholder(match):
        name = match.group(1)
        if name not in names:
            names[name] = f'_s{len(names)}_'
        return names[name]

    replaced = _SYMBOL_ATOM.sub(placeholder, text)
    if not replaced.strip():
        raise ClassSyntaxError(text, 'empty expression')
    if not _ALLOWED.fullmatch(_PLACEHOLDER.sub('', replaced)):
        raise ClassSyntaxError(text, 'unexpected characters')

    placeholders = {token: Symbol(token) for token in names.values()}
    local_dict = {'L': L, **placeholders}
    try:
        expr = parse_expr(replaced, local_dict=local_dict, transformations=_TRANSFORMATIONS)
    except Exception as e:
        # tokenizer and sympify failures do not share a base class
        raise ClassSyntaxError(text, str(e) or type(e).__name__) from e

    stray = expr.free_symbols - {L} - set(placeholders.values())
    if stray:
        raise ClassSyntaxError(text, f'unknown names {sorted(str(s) for s in stray)}')

    by_token = {token: name for name, token in names.items()}
    terms = []
    for token, sym in placeholders.items():
        coefficient = diff(expr, sym)
        nested = coefficient.free_symbols & set(placeholders.values())
        if nested:
            other = by_token[str(next(iter(sorted(nested, key=str))))]
            raise SymbolProductUnsupported(by_token[token], other)
        terms.append((ClassSymbol.curve(by_token[token]), _rational_from_expr(text, coefficient)))
    unit_part = expr.subs({sym: 0 for sym in placeholders.values()})
    terms.append((ClassSymbol.unit(), _rational_from_expr(text, unit_part)))
    logger.debug('parsed %r into %d terms', text, len(terms))
    return MotivicClass.from_terms(terms)


def render_truncation(t: LaurentTruncation) -> str:
    """
    Render a truncation for people: each symbol's series in descending exponents.

    @param t: The truncation.
    @return: Text such as '1 - L^-1 + L^-2' or '0'.
    """
    if t.is_zero:
        return '0'
    parts = []
    for symbol, series in sorted(t.by_symbol().items(), key=lambda item: item[0].sort_key):
        ordered = sorted(series.items(), reverse=True)
        rendered = _render_sum(ordered)
        if symbol.is_unit:
            parts.append(rendered)
        else:
            parts.append(f'({rendered})*[{symbol.ident}]')
    return ' + '.join(parts)
