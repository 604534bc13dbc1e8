import json
from fractions import Fraction

import pytest

from motivic_density.core.entities.blowup_state import BlowupOperation
from motivic_density.core.entities.dual_graph import (
    ValidationReport, ValidationWarning, Violation, ViolationKind, WarningKind,
)
from motivic_density.core.entities.motivic_class import LaurentTruncation, MotivicClass, UNIT
from motivic_density.core.services import blowup_engine, oracle
from motivic_density.core.use_cases.blowup_use_case import BlowupUseCase
from motivic_density.infrastructure.services import report_renderer
from tests import load_fixture


class TestReportRenderer:
    """Test cases for the human and machine renderings."""

    @pytest.fixture(scope='class')
    def check(self):
        return oracle.cross_check(load_fixture('twovertex.graph'), precision=6)

    def test_to_json_sorts_keys(self):
        assert report_renderer.to_json({'b': 1, 'a': [1, 2]}) == '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}'

    @pytest.mark.parametrize('value,expected', [
        (Fraction(1, 2), '1/2'),
        (Fraction(4, 2), '2'),
        (3, '3'),
        (None, None),
    ])
    def test_rational_text(self, value, expected):
        assert report_renderer.rational_text(value) == expected

    def test_class_payload(self):
        assert report_renderer.class_payload(MotivicClass.unit(Fraction(1, 2))) == {
            'canonical': '1/2', 'l_degree': 0,
        }
        assert report_renderer.class_payload(MotivicClass.zero()) == {'canonical': '0', 'l_degree': '-inf'}

    def test_truncation_payload(self):
        t = LaurentTruncation.from_mapping(4, {(UNIT, 0): Fraction(1), (UNIT, -2): Fraction(-1, 3)})

        assert report_renderer.truncation_payload(t) == {
            'precision': 4,
            'terms': [
                {'symbol': '1', 'exponent': 0, 'coefficient': '1'},
                {'symbol': '1', 'exponent': -2, 'coefficient': '-1/3'},
            ],
        }

    def test_validation_ok(self):
        report = ValidationReport((), ())

        assert report_renderer.render_validation(report) == 'OK'
        assert report_renderer.validation_payload(report) == {'ok': True, 'violations': [], 'warnings': []}

    def test_validation_with_violations(self):
        report = ValidationReport(
            (Violation(ViolationKind.RATE_BELOW_ONE, ('a',), 'vertex a has q = 3/4 < 1'),),
            (ValidationWarning(WarningKind.DISCONNECTED, 'graph has 2 components'),),
        )

        text = report_renderer.render_validation(report)
        payload = report_renderer.validation_payload(report)

        assert text.splitlines()[-1] == '1 violation(s)'
        assert 'warning Disconnected: graph has 2 components' in text
        assert payload['ok'] is False
        assert payload['violations'] == [
            {'kind': 'RateBelowOne', 'subject': ['a'], 'message': 'vertex a has q = 3/4 < 1'},
        ]

    def test_check_payload(self, check):
        payload = report_renderer.check_payload(check)

        assert payload['match'] is True
        assert payload['density']['canonical'] == '1/2'
        assert payload['oracle']['period'] == 6
        assert len(payload['oracle']['limits']) == 6
        assert payload['formula'] == payload['oracle']['mean']
        assert 'timings' not in json.dumps(payload)

    def test_check_payload_is_deterministic(self, check):
        again = oracle.cross_check(load_fixture('twovertex.graph'), precision=6)
        assert report_renderer.to_json(report_renderer.check_payload(check)) == \
            report_renderer.to_json(report_renderer.check_payload(again))

    def test_render_check(self, check):
        lines = report_renderer.render_check(check).splitlines()

        assert lines[0] == 'density: 1/2'
        assert lines[2].startswith('oracle  (D=6, e=6, W=3')
        assert lines[-1] == 'match'

    def test_render_table(self):
        state = blowup_engine.blowup_free(blowup_engine.init_smooth(), 'E1')

        assert report_renderer.render_table(blowup_engine.state_table(state)).splitlines() == [
            'id  m  q  k  k^log',
            'E1  1  1  1  2',
            'E2  1  2  2  3',
        ]

    def test_blowup_payload(self):
        outcome = BlowupUseCase(None).execute([BlowupOperation.free('E1')])

        payload = report_renderer.blowup_payload(outcome)

        assert payload['operations'] == ['free E1']
        assert payload['identity'] is True
        assert payload['table'][1] == {'id': 'E2', 'm': 1, 'q': '2', 'k': 2, 'mather_log': '3'}
        assert payload['graph']['edges'] == [['E1', 'E2']]
