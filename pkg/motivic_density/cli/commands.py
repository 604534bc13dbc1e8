import functools
import logging
import sys

import click
from injector import Injector
from pydantic import ValidationError

from config import Config
from motivic_density.cli.run_config import RunConfig
from motivic_density.core.app_config import AppConfig
from motivic_density.core.errors import (
    ClassSyntaxError,
    DuplicateVertexId,
    GraphSyntaxError,
    MotivicDensityError,
    NoStabilization,
    ScriptSyntaxError,
    UnknownEndpoint,
)
from motivic_density.core.services.blowup_engine import state_table
from motivic_density.core.services.motivic_ring import canonical_string
from motivic_density.core.use_cases.blowup_use_case import BlowupUseCase
from motivic_density.core.use_cases.compute_density_use_case import ComputeDensityUseCase
from motivic_density.core.use_cases.cross_check_use_case import CrossCheckUseCase
from motivic_density.core.use_cases.curve_density_use_case import CurveDensityUseCase
from motivic_density.core.use_cases.load_graph_use_case import LoadGraphUseCase
from motivic_density.core.use_cases.self_check_use_case import SelfCheckUseCase
from motivic_density.core.use_cases.validate_graph_use_case import ValidateGraphUseCase
from motivic_density.infrastructure.container import configure_container
from motivic_density.infrastructure.repositories.graph_repository import graph_to_payload, serialize_graph
from motivic_density.infrastructure.services import report_renderer

"""
Command-line module.

The `motivic-density` command group: validate, density, curve, oracle, blowup and
selfcheck. Results go to standard output, diagnostics to standard error.

@example
```bash
python -m motivic_density density graphs/e8.graph          # 1/2
python -m motivic_density oracle graphs/e8.graph --machine
python -m motivic_density curve 2,3 --oracle                # 5/6 (oracle: 5/6, match)
```
"""

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_INTERNAL = 4

INPUT_ERRORS = (
    GraphSyntaxError, DuplicateVertexId, UnknownEndpoint, ScriptSyntaxError, ClassSyntaxError, OSError,
    UnicodeDecodeError,
)

HELP = """Motivic local densities of curve and surface singularities.

\b
Exit codes:
  0  success
  1  domain violation (inadmissible graph, mismatch, unknown vertex or edge)
  2  input error (unreadable file, malformed graph or script, bad flags)
  3  the oracle did not stabilize within its budget
  4  internal error (rerun with --verbose for the traceback)
"""


def handles_errors(command):
    """Map package errors to exit codes and keep tracebacks off the terminal."""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context()
        try:
            return command(*args, **kwargs)
        except (click.ClickException, click.exceptions.Exit, click.exceptions.Abort):
            raise
        except NoStabilization as e:
            click.echo(f'error: {e}', err=True)
            ctx.exit(EXIT_BUDGET)
        except INPUT_ERRORS as e:
            click.echo(f'error: {e}', err=True)
            ctx.exit(EXIT_INPUT)
        except (MotivicDensityError, ValueError) as e:
            click.echo(f'error: {e}', err=True)
            ctx.exit(EXIT_DOMAIN)
        except Exception as e:
            logger.debug('unexpected failure', exc_info=True)
            click.echo(f'error: unexpected {type(e).__name__}: {e}', err=True)
            ctx.exit(EXIT_INTERNAL)

    return wrapper


def _set_verbose(ctx, param, value):
    if value:
        logging.getLogger().setLevel(logging.DEBUG)


def verbose_option(command):
    return click.option(
        '--verbose', is_flag=True, expose_value=False, callback=_set_verbose,
        help='Write debug diagnostics to standard error.',
    )(command)


def machine_option(command):
    return click.option('--machine', is_flag=True, help='Print a machine-readable JSON object.')(command)


def budget_options(command):
    command = click.option('--nmax', 'nmax', type=int, default=None,
                           help='n_max as a multiple of the period (default 60).')(command)
    command = click.option('--window', type=int, default=None,
                           help='Identical truncations needed to accept a limit (default 3).')(command)
    command = click.option('--precision', type=int, default=None,
                           help='Truncation depth D: keep L^e for e >= -D (default 12).')(command)
    return command


def _run_config(ctx, machine=False, **overrides) -> RunConfig:
    try:
        return RunConfig.from_app_config(
            ctx.obj['config'], output='machine' if machine else None, **overrides
        )
    except ValidationError as e:
        raise click.UsageError(str(e), ctx=ctx)


def _use(ctx, cls):
    return ctx.obj['injector'].get(cls)


def _emit(run_config: RunConfig, payload: dict, human: str):
    if run_config.machine:
        click.echo(report_renderer.to_json({'config': run_config.payload(), **payload}))
    else:
        click.echo(human)


def _log_level(name) -> int:
    level = logging.getLevelName(str(name).upper())
    return level if isinstance(level, int) else logging.WARNING


@click.group(help=HELP)
@click.pass_context
def main(ctx):
    ctx.ensure_object(dict)
    if 'config' not in ctx.obj:
        ctx.obj['config'] = AppConfig.from_object(Config)
    config = ctx.obj['config']
    logging.basicConfig(stream=sys.stderr, format='%(levelname)s %(name)s: %(message)s')
    logging.getLogger().setLevel(_log_level(config.get('LOG_LEVEL', 'WARNING')))
    ctx.obj['injector'] = Injector([lambda binder: configure_container(binder, config)])


@main.command('validate')
@click.argument('path')
@machine_option
@verbose_option
@click.pass_context
@handles_errors
def validate_command(ctx, path, machine):
    """Check a graph file; exit 1 when it has violations."""
    run_config = _run_config(ctx, machine)
    graph = _use(ctx, LoadGraphUseCase).execute(path)
    report = _use(ctx, ValidateGraphUseCase).execute(graph)
    _emit(run_config, {'report': report_renderer.validation_payload(report)},
          report_renderer.render_validation(report))
    ctx.exit(EXIT_OK if report.ok else EXIT_DOMAIN)


@main.command('density')
@click.argument('path')
@click.option('--rationalize', is_flag=True, help='Substitute L + 1 for genus:0 curve symbols.')
@machine_option
@verbose_option
@click.pass_context
@handles_errors
def density_command(ctx, path, rationalize, machine):
    """Evaluate the surface density formula on a graph file."""
    run_config = _run_config(ctx, machine)
    graph = _use(ctx, LoadGraphUseCase).execute(path)
    result = _use(ctx, ComputeDensityUseCase).execute(graph, rationalize)
    if not run_config.machine:
        for warning in result.report.warnings:
            click.echo(f'warning {warning.kind.value}: {warning.message}', err=True)
    payload = {
        'density': report_renderer.class_payload(result.density),
        'rationalized': result.rationalized,
        'warnings': [w.kind.value for w in result.report.warnings],
    }
    _emit(run_config, payload, canonical_string(result.density))


@main.command('curve')
@click.argument('mults')
@click.option('--oracle', 'with_oracle', is_flag=True, help='Also compute the mean value by enumeration.')
@machine_option
@verbose_option
@click.pass_context
@handles_errors
def curve_command(ctx, mults, with_oracle, machine):
    """Density of a plane curve from branch multiplicities, e.g. "2,3"."""
    run_config = _run_config(ctx, machine)
    try:
        values = [int(part) for part in mults.split(',')]
    except ValueError:
        raise ValueError(f'multiplicities must be comma-separated integers, got {mults!r}') from None
    result = _use(ctx, CurveDensityUseCase).execute(values, with_oracle)
    human = str(result.density)
    if with_oracle:
        human += f' (oracle: {result.oracle}, {"match" if result.match else "mismatch"})'
    payload = {
        'mults': list(result.branches.mults),
        'density': report_renderer.rational_text(result.density),
        'oracle': report_renderer.rational_text(result.oracle),
        'match': result.match,
    }
    _emit(run_config, payload, human)
    if with_oracle and not result.match:
        ctx.exit(EXIT_DOMAIN)


@main.command('oracle')
@click.argument('path')
@budget_options
@machine_option
@verbose_option
@click.pass_context
@handles_errors
def oracle_command(ctx, path, precision, window, nmax, machine):
    """Cross-check the formula against the brute-force oracle."""
    run_config = _run_config(ctx, machine, precision=precision, window=window, nmax_multiplier=nmax)
    graph = _use(ctx, LoadGraphUseCase).execute(path)
    report = _use(ctx, CrossCheckUseCase).execute(
        graph, run_config.precision, run_config.window, run_config.nmax_multiplier
    )
    _emit(run_config, {'check': report_renderer.check_payload(report)}, report_renderer.render_check(report))
    ctx.exit(EXIT_OK if report.match else EXIT_DOMAIN)


@main.command('blowup')
@click.argument('script', required=False)
@click.option('--random', 'steps', type=int, default=None, help='Apply this many random blowups instead.')
@click.option('--seed', type=int, default=None, help='Seed of the random sequence.')
@machine_option
@verbose_option
@click.pass_context
@handles_errors
def blowup_command(ctx, script, steps, seed, machine):
    """Run blowups from the first blowup of a smooth point; exit 0 iff q = (k+1)/m - 1 holds."""
    if (script is None) == (steps is None):
        raise click.UsageError('give either SCRIPT or --random N', ctx=ctx)
    run_config = _run_config(ctx, machine, seed=seed)
    use_case = _use(ctx, BlowupUseCase)
    if script is not None:
        outcome = use_case.execute_script(script)
    else:
        outcome = use_case.execute_random(steps, run_config.seed)
    verdict = 'identity OK' if outcome.identity_holds else 'identity FAILS'
    human = '\n'.join([
        serialize_graph(outcome.state.graph).rstrip(),
        '',
        report_renderer.render_table(state_table(outcome.state)),
        verdict,
    ])
    _emit(run_config, {'blowup': report_renderer.blowup_payload(outcome)}, human)
    ctx.exit(EXIT_OK if outcome.identity_holds else EXIT_DOMAIN)


@main.command('selfcheck')
@click.option('--count', type=click.IntRange(min=0), default=100, help='Number of random graphs.')
@click.option('--seed', type=int, default=None, help='Seed of the graph stream.')
@budget_options
@machine_option
@verbose_option
@click.pass_context
@handles_errors
def selfcheck_command(ctx, count, seed, precision, window, nmax, machine):
    """Cross-check the formula on seeded random admissible graphs."""
    run_config = _run_config(ctx, machine, seed=seed, precision=precision, window=window,
                             nmax_multiplier=nmax)
    result = _use(ctx, SelfCheckUseCase).execute(
        count, run_config.seed, run_config.precision, run_config.window, run_config.nmax_multiplier
    )
    matches = sum(1 for _, report in result.checks if report.match)
    human = f'{matches}/{count} graphs match (seed {run_config.seed})'
    payload = {
        'count': count,
        'matches': matches,
        'mismatches': [graph_to_payload(graph) for graph in result.mismatches],
    }
    _emit(run_config, payload, human)
    ctx.exit(EXIT_OK if result.all_match else EXIT_DOMAIN)
