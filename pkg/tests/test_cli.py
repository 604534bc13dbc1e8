import json
import os
import shutil
import tempfile
from unittest.mock import patch

import pytest
from click.testing import CliRunner

from motivic_density.cli.commands import main
from motivic_density.core.app_config import AppConfig
from tests import GRAPH_DIR


@pytest.fixture
def runner():
    return CliRunner(mix_stderr=False)


@pytest.fixture
def config():
    return AppConfig({
        'GRAPH_DIR': GRAPH_DIR,
        'DENSITY_PRECISION': 12,
        'DENSITY_WINDOW': 3,
        'DENSITY_NMAX_MULTIPLIER': 60,
        'DENSITY_SEED': 0,
        'DENSITY_OUTPUT': 'human',
        'LOG_LEVEL': 'WARNING',
    })


@pytest.fixture
def scratch():
    path = tempfile.mkdtemp()
    yield path
    shutil.rmtree(path)


def invoke(runner, config, *args):
    return runner.invoke(main, list(args), obj={'config': config})


def write(directory, name, content):
    path = os.path.join(directory, name)
    with open(path, 'w', encoding='utf-8') as f:
        f.write(content)
    return path


class TestDensityCommands:
    """Test cases for density, curve and validate."""

    @pytest.mark.parametrize('name,expected', [
        ('e8.graph', '1/2'),
        ('smooth.graph', '1'),
        ('twovertex.graph', '1/2'),
        ('symbolic.graph', '1/(L + 1)*[v]'),
    ])
    def test_density(self, runner, config, name, expected):
        result = invoke(runner, config, 'density', name)

        assert result.exit_code == 0
        assert result.stdout.strip() == expected

    def test_density_rationalize(self, runner, config):
        result = invoke(runner, config, 'density', 'symbolic.graph', '--rationalize')

        assert result.exit_code == 0
        assert result.stdout.strip() == '1'

    def test_density_machine(self, runner, config):
        result = invoke(runner, config, 'density', 'e8.graph', '--machine')

        payload = json.loads(result.stdout)
        assert payload['density'] == {'canonical': '1/2', 'l_degree': 0}
        assert payload['config']['output'] == 'machine'
        assert payload['warnings'] == []

    def test_density_inadmissible(self, runner, config, scratch):
        path = write(scratch, 'adjacent.graph', json.dumps({
            'vertices': [{'id': 'a', 'm': 1, 'q': 1}, {'id': 'b', 'm': 1, 'q': 1}],
            'edges': [['a', 'b']],
        }))

        result = invoke(runner, config, 'density', path)

        assert result.exit_code == 1
        assert 'error:' in result.stderr

    @pytest.mark.parametrize('mults,expected', [
        ('2', '1/2'),
        ('1', '1'),
        ('2,3', '5/6'),
        ('2,3 --oracle', '5/6 (oracle: 5/6, match)'),
    ])
    def test_curve(self, runner, config, mults, expected):
        result = invoke(runner, config, 'curve', *mults.split())

        assert result.exit_code == 0
        assert result.stdout.strip() == expected

    @pytest.mark.parametrize('mults', ['2,x', '0', '2,-1'])
    def test_curve_bad_input(self, runner, config, mults):
        result = invoke(runner, config, 'curve', mults)

        assert result.exit_code == 1
        assert 'error:' in result.stderr

    def test_validate_ok(self, runner, config):
        result = invoke(runner, config, 'validate', 'e8.graph')

        assert result.exit_code == 0
        assert result.stdout.strip() == 'OK'

    def test_validate_violation(self, runner, config, scratch):
        path = write(scratch, 'low.graph', json.dumps({
            'vertices': [{'id': 'a', 'm': 4, 'q': '3/4'}], 'edges': [],
        }))

        result = invoke(runner, config, 'validate', path)

        assert result.exit_code == 1
        assert 'RateBelowOne' in result.stdout

    def test_validate_machine(self, runner, config):
        result = invoke(runner, config, 'validate', 'smooth.graph', '--machine')

        payload = json.loads(result.stdout)
        assert payload['report']['ok'] is True

    def test_missing_file(self, runner, config):
        result = invoke(runner, config, 'density', 'missing.graph')

        assert result.exit_code == 2
        assert 'error:' in result.stderr

    def test_malformed_file(self, runner, config, scratch):
        path = write(scratch, 'broken.graph', '{"vertices": [\n')

        result = invoke(runner, config, 'validate', path)

        assert result.exit_code == 2

    @pytest.mark.parametrize('command', ['validate', 'density', 'oracle'])
    def test_file_not_utf8(self, runner, config, scratch, command):
        path = os.path.join(scratch, 'bad.graph')
        with open(path, 'wb') as f:
            f.write(b'{"vertices": [], "id": "\xff"}')

        result = invoke(runner, config, command, path)

        assert result.exit_code == 2
        assert 'error:' in result.stderr

    def test_unexpected_failure(self, runner, config):
        with patch('motivic_density.cli.commands.canonical_string', side_effect=RuntimeError('boom')):
            result = invoke(runner, config, 'density', 'e8.graph')

        assert result.exit_code == 4
        assert 'unexpected RuntimeError: boom' in result.stderr


class TestOracleCommands:
    """Test cases for oracle and selfcheck."""

    def test_oracle_match(self, runner, config):
        result = invoke(runner, config, 'oracle', 'e8.graph')

        assert result.exit_code == 0
        assert result.stdout.strip().splitlines()[-1] == 'match'

    def test_oracle_budget_exhausted(self, runner, config):
        result = invoke(runner, config, 'oracle', 'e8.graph', '--precision', '2', '--nmax', '1')

        assert result.exit_code == 3
        assert 'did not stabilize' in result.stderr

    def test_oracle_bad_window(self, runner, config):
        result = invoke(runner, config, 'oracle', 'e8.graph', '--window', '1')

        assert result.exit_code == 2

    def test_oracle_machine_is_reproducible(self, runner, config):
        first = invoke(runner, config, 'oracle', 'twovertex.graph', '--machine', '--precision', '6')
        second = invoke(runner, config, 'oracle', 'twovertex.graph', '--machine', '--precision', '6')

        assert first.exit_code == 0
        assert first.stdout == second.stdout
        payload = json.loads(first.stdout)
        assert payload['config']['precision'] == 6
        assert payload['check']['match'] is True

    def test_selfcheck(self, runner, config):
        result = invoke(runner, config, 'selfcheck', '--count', '3', '--seed', '1', '--precision', '6')

        assert result.exit_code == 0
        assert result.stdout.strip() == '3/3 graphs match (seed 1)'


class TestBlowupCommand:
    """Test cases for blowup."""

    def test_script(self, runner, config):
        result = invoke(runner, config, 'blowup', 'free_e1.script')

        lines = result.stdout.strip().splitlines()
        assert result.exit_code == 0
        assert 'E2  1  2  2  3' in lines
        assert lines[-1] == 'identity OK'

    def test_three_blowups(self, runner, config):
        result = invoke(runner, config, 'blowup', 'three_blowups.script', '--machine')

        payload = json.loads(result.stdout)
        assert result.exit_code == 0
        assert payload['blowup']['identity'] is True
        assert [row['q'] for row in payload['blowup']['table']] == ['1', '2', '3/2', '5/3']
        assert [row['k'] for row in payload['blowup']['table']] == [1, 2, 4, 7]

    def test_random(self, runner, config):
        first = invoke(runner, config, 'blowup', '--random', '30', '--seed', '7')
        second = invoke(runner, config, 'blowup', '--random', '30', '--seed', '7')

        assert first.exit_code == 0
        assert first.stdout == second.stdout
        assert first.stdout.strip().endswith('identity OK')

    def test_unknown_vertex(self, runner, config, scratch):
        path = write(scratch, 'e9.script', 'free E1\nfree E9\n')

        result = invoke(runner, config, 'blowup', path)

        assert result.exit_code == 1
        assert 'E9' in result.stderr

    def test_bad_script(self, runner, config, scratch):
        path = write(scratch, 'bad.script', 'explode E1\n')

        result = invoke(runner, config, 'blowup', path)

        assert result.exit_code == 2
        assert 'line 1' in result.stderr

    @pytest.mark.parametrize('args', [[], ['free_e1.script', '--random', '3']])
    def test_script_or_random(self, runner, config, args):
        result = invoke(runner, config, 'blowup', *args)

        assert result.exit_code == 2
