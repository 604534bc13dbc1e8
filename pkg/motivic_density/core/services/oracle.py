import logging
import math
import time
from collections import defaultdict
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from motivic_density.core.entities.curve_branch import CurveBranchData
from motivic_density.core.entities.dual_graph import DualGraph, Vertex
from motivic_density.core.entities.motivic_class import (
    UNIT,
    ClassSymbol,
    LaurentTruncation,
    MotivicClass,
    RationalFunctionL,
)
from motivic_density.core.entities.oracle_report import (
    CheckReport,
    ResidueLimit,
    StratumKind,
    StratumTerm,
    ThetaLimitReport,
)
from motivic_density.core.errors import InadmissibleGraph, InvalidModulus, NoStabilization
from motivic_density.core.services import graph_service
from motivic_density.core.services.density_formula import surface_density
from motivic_density.core.services.motivic_ring import expand

"""
Oracle module.

Brute-force computation of the density, independent of the closed formula. The
preimage of the sphere of radius n splits into one chart per punctured component
(present when m_v divides n) and one chart per double point, where the solutions of
m_v k + m_w l = n with k, l >= 1 are enumerated one by one. The volume is normalized
by the sphere volume L^-2n (1 - L^-2), giving theta_n, and the limit of theta_n along
each residue class mod e is detected by truncation stabilization.

@example
```python
from motivic_density.core.services import oracle

report = oracle.mean_value_surface(graph, precision=12, window=3)
oracle.cross_check(graph).match   # True
```
"""

logger = logging.getLogger(__name__)

DEFAULT_PRECISION = 12
DEFAULT_WINDOW = 3
DEFAULT_NMAX_MULTIPLIER = 60

_LEFSCHETZ = RationalFunctionL.lefschetz_power(1)

Series = Dict[ClassSymbol, Dict[int, Fraction]]


def _log_exponent(vertex: Vertex) -> int:
    value = vertex.m * (vertex.q + 1)
    if value.denominator != 1:
        raise ValueError(f'vertex {vertex.id} has non-integral m (q + 1) = {value}')
    return int(value)


def _require_admissible(g: DualGraph):
    report = graph_service.validate(g)
    if not report.ok:
        raise InadmissibleGraph(report)


def strata(g: DualGraph) -> List[StratumTerm]:
    """The charts of the sphere preimage: one per vertex, then one per edge, in input order."""
    terms = [
        StratumTerm(StratumKind.VERTEX, (v.id,), (v.m,), (_log_exponent(v),))
        for v in g.vertices
    ]
    for edge in g.edges:
        first, second = (g.vertex(v) for v in edge.endpoints)
        terms.append(StratumTerm(
            StratumKind.EDGE,
            edge.endpoints,
            (first.m, second.m),
            (_log_exponent(first), _log_exponent(second)),
        ))
    return terms


def slowest_decay(g: DualGraph) -> Optional[Fraction]:
    """The smallest q - 1 over vertices with q > 1: transient terms shrink like L^-(q-1)n."""
    rates = [v.q - 1 for v in g.vertices if v.q > 1]
    return min(rates) if rates else None


def vertex_stratum_volume(v: Vertex, e0: MotivicClass, n: int) -> MotivicClass:
    """
    Volume of the chart over the punctured component E_v^0.

    @param v: The vertex.
    @param e0: The class of E_v^0.
    @param n: The sphere radius.
    @return: 0 unless m_v divides n, else L^-(q+1)n L^-2 (L - 1) e0.
    """
    if n % v.m:
        return MotivicClass.zero()
    exponent = _log_exponent(v) * (n // v.m) + 2
    return e0.scale(RationalFunctionL.lefschetz_power(-exponent) * (_LEFSCHETZ - 1))


def _edge_solutions(t: StratumTerm, n: int) -> Dict[int, int]:
    m_v, m_w = t.multiplicities
    a_v, a_w = t.exponents
    counts: Dict[int, int] = defaultdict(int)
    for k in range(1, (n - m_w) // m_v + 1):
        rest = n - m_v * k
        if rest % m_w == 0:
            l = rest // m_w
            counts[-(a_v * k + a_w * l + 2)] += 1
    return counts


def edge_stratum_volume(t: StratumTerm, n: int) -> MotivicClass:
    """
    Volume of the chart over a double point.

    Sums L^-(a_v k + a_w l + 2) (L - 1)^2 over the solutions of m_v k + m_w l = n with
    k, l >= 1; there are none unless gcd(m_v, m_w) divides n.
    """
    counts = _edge_solutions(t, n)
    if not counts:
        return MotivicClass.zero()
    return MotivicClass.unit(RationalFunctionL.from_laurent(counts) * (_LEFSCHETZ - 1) ** 2)


def sphere_volume_surface(g: DualGraph, n: int) -> MotivicClass:
    total = MotivicClass.zero()
    for vertex in g.vertices:
        total = total + vertex_stratum_volume(vertex, graph_service.e0_class(g, vertex.id), n)
    for term in strata(g):
        if term.kind is StratumKind.EDGE:
            total = total + edge_stratum_volume(term, n)
    return total


def theta_surface(g: DualGraph, n: int) -> MotivicClass:
    """
    Normalize the surface sphere volume by L^-2n (1 - L^-2).

    @param g: The dual graph.
    @param n: The sphere radius.
    @return: theta_n as a class; its limits over residues of n average to the density.
    """
    normalizer = RationalFunctionL.lefschetz_power(2 * n + 2) / (_LEFSCHETZ ** 2 - 1)
    return sphere_volume_surface(g, n).scale(normalizer)


class _PreparedGraph:
    """Per-graph data reused across every n of a limit computation."""

    def __init__(self, g: DualGraph, precision: int):
        self.precision = precision
        self.vertices: List[Tuple[Vertex, int, Series]] = [
            (v, _log_exponent(v), expand(graph_service.e0_class(g, v.id), precision).by_symbol())
            for v in g.vertices
        ]
        self.edges = [t for t in strata(g) if t.kind is StratumKind.EDGE]


def _theta_truncation(prepared: _PreparedGraph, n: int) -> LaurentTruncation:
    floor = -prepared.precision
    numerator: Dict[Tuple[ClassSymbol, int], Fraction] = defaultdict(Fraction)

    # L^2n times the sphere volume, keeping exponents >= -D
    for vertex, a, series in prepared.vertices:
        if n % vertex.m:
            continue
        shift = 2 * n - a * (n // vertex.m) - 2
        for symbol, coefficients in series.items():
            for exponent, value in coefficients.items():
                if exponent + shift + 1 >= floor:
                    numerator[(symbol, exponent + shift + 1)] += value
                if exponent + shift >= floor:
                    numerator[(symbol, exponent + shift)] -= value
    for term in prepared.edges:
        for exponent, count in _edge_solutions(term, n).items():
            top = exponent + 2 * n + 2
            for offset, weight in ((0, 1), (1, -2), (2, 1)):
                if top - offset >= floor:
                    numerator[(UNIT, top - offset)] += weight * count

    # dividing by 1 - L^-2 sums every second coefficient from above
    grouped: Series = defaultdict(dict)
    for (symbol, exponent), value in numerator.items():
        grouped[symbol][exponent] = value
    result = {}
    for symbol, coefficients in grouped.items():
        running: Dict[int, Fraction] = {}
        for exponent in range(max(coefficients), floor - 1, -1):
            value = coefficients.get(exponent, 0) + running.get(exponent + 2, 0)
            running[exponent] = value
            if value:
                result[(symbol, exponent)] = Fraction(value)
    return LaurentTruncation.from_mapping(prepared.precision, result)


def theta_surface_truncation(g: DualGraph, n: int, precision: int) -> LaurentTruncation:
    """
    Return expand(theta_surface(g, n), precision) without building the rational function.

    @param g: An admissible graph.
    @param n: The sphere radius.
    @param precision: The truncation depth D.
    @return: The truncation.
    """
    _require_admissible(g)
    return _theta_truncation(_PreparedGraph(g, precision), n)


def _residue_limit(prepared: _PreparedGraph, residue: int, period: int, window: int,
                   n_max: int, decay: Optional[Fraction]) -> ResidueLimit:
    n = residue if residue > 0 else period
    previous = None
    streak = 0
    start = n
    evaluations = 0
    while n <= n_max:
        current = _theta_truncation(prepared, n)
        evaluations += 1
        if current == previous:
            streak += 1
        else:
            previous, streak, start = current, 1, n
        if streak >= window:
            logger.debug('residue %d mod %d stabilized at n = %d after %d evaluations',
                         residue, period, start, evaluations)
            return ResidueLimit(residue, current, start, window, evaluations)
        n += period
    raise NoStabilization(n_max, residue, decay, prepared.precision)


def _check_budget(precision: int, window: int):
    if precision < 0:
        raise ValueError(f'precision must be >= 0, got {precision}')
    if window < 2:
        raise ValueError(f'window must be >= 2, got {window}')


def limit_along(g: DualGraph, residue: int, period: int, precision: int = DEFAULT_PRECISION,
                window: int = DEFAULT_WINDOW, n_max: Optional[int] = None) -> LaurentTruncation:
    """
    The limit of theta_n along n = residue mod period, truncated at precision.

    Evaluates n = n0, n0 + e, ... (n0 the smallest positive n in the class) and returns
    the truncation once it is identical for window consecutive values.

    @raise NoStabilization: When n would exceed n_max first.
    """
    _check_budget(precision, window)
    if not 0 <= residue < period:
        raise ValueError(f'residue must lie in [0, {period}), got {residue}')
    _require_admissible(g)
    if n_max is None:
        n_max = DEFAULT_NMAX_MULTIPLIER * period
    prepared = _PreparedGraph(g, precision)
    return _residue_limit(prepared, residue, period, window, n_max, slowest_decay(g)).limit


def mean_value_surface(g: DualGraph, precision: int = DEFAULT_PRECISION, window: int = DEFAULT_WINDOW,
                       n_max: Optional[int] = None, modulus: Optional[int] = None) -> ThetaLimitReport:
    """
    The mean value at infinity of theta_n.

    @param g: An admissible graph.
    @param precision: The truncation depth D.
    @param window: Identical truncations needed to accept a limit.
    @param n_max: Largest n to evaluate; defaults to 60 times the modulus.
    @param modulus: Period of the residue classes; a positive multiple of period(g).
    @return: The per-residue limits and their average.
    @raise InvalidModulus: When the modulus is not a multiple of period(g).
    @raise NoStabilization: When a residue class does not settle within n_max.
    """
    _check_budget(precision, window)
    _require_admissible(g)
    period = graph_service.period(g)
    if modulus is None:
        modulus = period
    if modulus <= 0 or modulus % period:
        raise InvalidModulus(modulus, period)
    if n_max is None:
        n_max = DEFAULT_NMAX_MULTIPLIER * modulus

    prepared = _PreparedGraph(g, precision)
    decay = slowest_decay(g)
    limits = tuple(
        _residue_limit(prepared, c, modulus, window, n_max, decay) for c in range(modulus)
    )
    total = LaurentTruncation(precision)
    for entry in limits:
        total = total + entry.limit
    mean = total.scaled(Fraction(1, modulus))
    return ThetaLimitReport(modulus, precision, window, n_max, limits, mean)


def cross_check(g: DualGraph, precision: int = DEFAULT_PRECISION, window: int = DEFAULT_WINDOW,
                n_max: Optional[int] = None, modulus: Optional[int] = None) -> CheckReport:
    """
    Compare the closed formula with the oracle at truncation precision.

    @return: The report; match is True when all stored coefficients agree.
    @raise NoStabilization: Propagated from the oracle.
    """
    started = time.perf_counter()
    density = surface_density(g)
    formula = expand(density, precision)
    formula_done = time.perf_counter()
    report = mean_value_surface(g, precision, window, n_max, modulus)
    oracle_done = time.perf_counter()
    match = formula == report.mean
    if not match:
        logger.warning('formula and oracle disagree at precision %d', precision)
    timings = {
        'formula': formula_done - started,
        'oracle': oracle_done - formula_done,
        'total': oracle_done - started,
    }
    return CheckReport(density, formula, report, match, timings, slowest_decay(g))


# Curves

def _branches(b: Union[CurveBranchData, List[int]]) -> CurveBranchData:
    return b if isinstance(b, CurveBranchData) else CurveBranchData.of(b)


def sphere_volume_curve(b: Union[CurveBranchData, List[int]], n: int) -> MotivicClass:
    """Each branch with N_i dividing n contributes L^-n (L - 1)."""
    count = sum(1 for mult in _branches(b).mults if n % mult == 0)
    return MotivicClass.unit(RationalFunctionL.lefschetz_power(-n) * (_LEFSCHETZ - 1) * count)


def theta_curve(b: Union[CurveBranchData, List[int]], n: int) -> MotivicClass:
    """
    Normalize the curve sphere volume by L^n / (L - 1).

    @param b: The branch multiplicities.
    @param n: The sphere radius.
    @return: theta_n, the number of branches with N_i dividing n.
    """
    normalizer = RationalFunctionL.lefschetz_power(n) / (_LEFSCHETZ - 1)
    return sphere_volume_curve(b, n).scale(normalizer)


def theta_curve_truncation(b: Union[CurveBranchData, List[int]], n: int, precision: int = 0) -> Dict[int, Fraction]:
    """
    Return the coefficients of expand(theta_curve(b, n), precision) by Laurent arithmetic.

    @param b: The branch multiplicities.
    @param n: The sphere radius.
    @param precision: Keep exponents e >= -precision.
    @return: A mapping exponent -> nonzero coefficient.
    """
    count = sum(1 for mult in _branches(b).mults if n % mult == 0)
    # L^n times the sphere volume
    numerator = {1: Fraction(count), 0: Fraction(-count)}
    # dividing by L - 1 = L (1 - L^-1) sums the shifted coefficients from above
    result = {}
    running = Fraction(0)
    for exponent in range(max(numerator) - 1, -precision - 1, -1):
        running += numerator.get(exponent + 1, 0)
        if running:
            result[exponent] = running
    return result


def curve_residue_limits(b: Union[CurveBranchData, List[int]]) -> Dict[int, Fraction]:
    """
    The limit of theta_n along every residue class mod e = lcm(N_i).

    theta_n only depends on n mod e, so the limit is its value at the first n of the class.
    """
    branches = _branches(b)
    period = math.lcm(*branches.mults)
    limits = {}
    for residue in range(period):
        n = residue if residue > 0 else period
        limits[residue] = theta_curve_truncation(branches, n).get(0, Fraction(0))
    return limits


def mean_value_curve(b: Union[CurveBranchData, List[int]]) -> Fraction:
    """
    Average the per-residue limits of theta_n for a plane curve.

    @param b: The branch multiplicities.
    @return: The mean value; equal to curve_density(b).
    @raise ValueError: When a multiplicity is not a positive integer.
    """
    limits = curve_residue_limits(b)
    return sum(limits.values(), Fraction(0)) / len(limits)
