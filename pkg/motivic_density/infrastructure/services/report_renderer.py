import json
import math
from fractions import Fraction
from typing import List, Optional

from motivic_density.core.entities.blowup_state import StateRow
from motivic_density.core.entities.dual_graph import ValidationReport
from motivic_density.core.entities.motivic_class import LaurentTruncation, MotivicClass
from motivic_density.core.entities.oracle_report import CheckReport, ThetaLimitReport
from motivic_density.core.services.blowup_engine import state_table
from motivic_density.core.services.motivic_ring import canonical_string, l_degree, render_truncation
from motivic_density.infrastructure.repositories.graph_repository import graph_to_payload

"""
Report Renderer module.

This module turns results into the two output forms: human-readable text and
machine-readable objects written as JSON with sorted keys. Rationals are written as
"p/r" strings. Machine objects carry no timings, so identical inputs give identical
bytes.

@example
```python
from motivic_density.infrastructure.services import report_renderer

print(report_renderer.to_json(report_renderer.check_payload(report)))
print(report_renderer.render_check(report))
```
"""


def to_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2)


def rational_text(value: Optional[Fraction]) -> Optional[str]:
    return None if value is None else str(Fraction(value))


def truncation_payload(t: LaurentTruncation) -> dict:
    return {
        'precision': t.precision,
        'terms': [
            {'symbol': str(symbol), 'exponent': exponent, 'coefficient': rational_text(value)}
            for (symbol, exponent), value in t.items
        ],
    }


def class_payload(a: MotivicClass) -> dict:
    degree = l_degree(a)
    return {
        'canonical': canonical_string(a),
        'l_degree': '-inf' if degree == -math.inf else degree,
    }


def validation_payload(report: ValidationReport) -> dict:
    return {
        'ok': report.ok,
        'violations': [
            {'kind': v.kind.value, 'subject': list(v.subject), 'message': v.message}
            for v in report.violations
        ],
        'warnings': [{'kind': w.kind.value, 'message': w.message} for w in report.warnings],
    }


def render_validation(report: ValidationReport) -> str:
    lines = [f'{v.kind.value}: {v.message}' for v in report.violations]
    lines += [f'warning {w.kind.value}: {w.message}' for w in report.warnings]
    lines.append('OK' if report.ok else f'{len(report.violations)} violation(s)')
    return '\n'.join(lines)


def limits_payload(report: ThetaLimitReport) -> dict:
    return {
        'period': report.period,
        'precision': report.precision,
        'window': report.window,
        'n_max': report.n_max,
        'limits': [
            {
                'residue': entry.residue,
                'stabilized_at': entry.stabilized_at,
                'evaluations': entry.evaluations,
                'limit': truncation_payload(entry.limit),
            }
            for entry in report.limits
        ],
        'mean': truncation_payload(report.mean),
    }


def check_payload(report: CheckReport) -> dict:
    return {
        'density': class_payload(report.density),
        'formula': truncation_payload(report.formula),
        'oracle': limits_payload(report.oracle),
        'match': report.match,
        'slowest_decay': rational_text(report.slowest_decay),
    }


def render_check(report: CheckReport) -> str:
    oracle = report.oracle
    lines = [
        f'density: {canonical_string(report.density)}',
        f'formula (D={report.formula.precision}): {render_truncation(report.formula)}',
        f'oracle  (D={oracle.precision}, e={oracle.period}, W={oracle.window}, n_max={oracle.n_max}): '
        f'{render_truncation(oracle.mean)}',
        f'stabilized by n = {max(entry.stabilized_at for entry in oracle.limits)}',
        f'time: formula {report.timings.get("formula", 0):.3f}s, oracle {report.timings.get("oracle", 0):.3f}s',
        'match' if report.match else 'MISMATCH',
    ]
    return '\n'.join(lines)


def table_payload(rows: List[StateRow]) -> List[dict]:
    return [
        {'id': r.id, 'm': r.m, 'q': rational_text(r.q), 'k': r.k, 'mather_log': rational_text(r.mather_log)}
        for r in rows
    ]


def render_table(rows: List[StateRow]) -> str:
    header = ('id', 'm', 'q', 'k', 'k^log')
    body = [
        (r.id, str(r.m), str(r.q), '-' if r.k is None else str(r.k), str(r.mather_log))
        for r in rows
    ]
    widths = [max(len(row[i]) for row in [header] + body) for i in range(len(header))]
    return '\n'.join(
        '  '.join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip()
        for row in [header] + body
    )


def blowup_payload(outcome) -> dict:
    return {
        'operations': [str(op) for op in outcome.operations],
        'graph': graph_to_payload(outcome.state.graph),
        'table': table_payload(state_table(outcome.state)),
        'identity': outcome.identity_holds,
    }
