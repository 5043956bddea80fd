# Command-line interface for the Exponential Congruence Toolkit
import logging
import sys
from dataclasses import dataclass
from typing import List

import click

from ..calculations.analytic import (
    completed_sample, euler_product_comparison, exp_sum_bound_check, exp_sum_spectrum,
    l_series_partial, orthogonality_sum
)
from ..calculations.arith import is_prime
from ..calculations.partition import (
    enumerate_partition, index_two_check, prime_counts, symbol_by_primitive_root
)
from ..calculations.symbol import explain, symbol, symbol_via_crt, symbol_via_order
from ..config import Settings, load_settings
from ..models.output import OutputRecord
from ..models.symbol import SymbolQuery
from ..utils.constants import (
    DEFAULT_SCALE, EXIT_DOMAIN_ERROR, EXIT_RESOURCE_CAP, EXIT_VERIFICATION_FAILURE,
    PROVENANCE, VERIFICATION_SCALES
)
from ..utils.data_processing import complex_pair, parse_complex, parse_int_range, render
from ..utils.exceptions import ConsistencyError, DomainError, ResourceCapError
from ..verification.engine import THEOREMS, VerificationEngine

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"

METHODS = {
    'direct': ('definition', symbol),
    'crt': ('crt', symbol_via_crt),
    'order': ('order', symbol_via_order),
    'primitive-root': ('primitive_root', lambda q: symbol_by_primitive_root(q.a, q.n, q.k)),
}


@dataclass(frozen=True)
class CliState:
    settings: Settings
    fmt: str


def configure_logging(level: str) -> None:
    """Send log output to stderr; stdout carries data only"""
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)


def emit(records: List[OutputRecord]) -> None:
    state: CliState = click.get_current_context().find_object(CliState)
    click.echo(render(records, state.fmt))


def _fail(ctx: click.Context, message: str, code: int) -> None:
    click.echo(f"error: {message}", err=True)
    ctx.exit(code)


class ExpCongGroup(click.Group):
    """Maps library exceptions onto exit codes in one place"""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except ResourceCapError as e:
            logger.error(f"Resource cap reached: {e}")
            _fail(ctx, str(e), EXIT_RESOURCE_CAP)
        except DomainError as e:
            logger.error(f"Invalid input: {e}")
            _fail(ctx, str(e), EXIT_DOMAIN_ERROR)
        except ConsistencyError as e:
            logger.error(f"Consistency check failed: {e}")
            _fail(ctx, str(e), EXIT_VERIFICATION_FAILURE)


@click.group(cls=ExpCongGroup)
@click.option('--format', 'fmt', type=click.Choice(['json', 'csv', 'plain']), default='json',
              show_default=True, help="Output format on stdout.")
@click.option('--jobs', type=int, default=None, help="Worker count for table scans.")
@click.option('--max-n', type=int, default=None, help="Enumeration cap on the modulus.")
@click.option('--log-level', default=None, help="Logging level for stderr diagnostics.")
@click.pass_context
def cli(ctx: click.Context, fmt: str, jobs, max_n, log_level):
    """Exponential congruence symbol toolkit."""
    settings = load_settings(max_n=max_n, jobs=jobs, log_level=log_level)
    configure_logging(settings.log_level)
    ctx.obj = CliState(settings=settings, fmt=fmt)


@cli.command('symbol')
@click.argument('a', type=int)
@click.argument('n', type=int)
@click.argument('k', type=int)
@click.option('--explain', 'show_explanation', is_flag=True, help="Report a^k mod n and the deciding branch.")
@click.option('--method', type=click.Choice(list(METHODS)), default='direct', show_default=True)
def cmd_symbol(a: int, n: int, k: int, show_explanation: bool, method: str):
    """Evaluate the symbol (A/N)_K."""
    q = SymbolQuery.create(a, n, k)
    provenance_key, evaluate = METHODS[method]
    value = evaluate(q)
    result = {'value': value.value, 'method': method}
    if show_explanation:
        result.update(explain(q).to_dict())
    emit([OutputRecord('symbol', q.to_dict(), result, PROVENANCE[provenance_key])])


@cli.command('partition')
@click.argument('n', type=int)
@click.argument('k', type=int)
@click.option('--counts', is_flag=True, help="Report class sizes instead of the residues.")
@click.pass_obj
def cmd_partition(state: CliState, n: int, k: int, counts: bool):
    """Split the units modulo N by symbol value."""
    partition = enumerate_partition(n, k, max_n=state.settings.max_n, jobs=state.settings.jobs)
    result = partition.counts_dict() if counts else partition.to_dict()
    emit([OutputRecord('partition', {'n': n, 'k': k}, result, PROVENANCE['partition'])])


@cli.command('count')
@click.argument('p', type=int)
@click.argument('k', type=int)
@click.option('--check', is_flag=True, help="Cross-check against brute-force enumeration.")
@click.pass_obj
def cmd_count(state: CliState, p: int, k: int, check: bool):
    """Closed-form counts of +1 and -1 values modulo an odd prime P."""
    report = prime_counts(p, k)
    result = report.to_dict()
    if check:
        partition = enumerate_partition(p, k, max_n=state.settings.max_n, jobs=state.settings.jobs)
        agrees = (partition.count_plus, partition.count_minus) == (report.count_plus, report.count_minus)
        result['check'] = {
            'count_plus': partition.count_plus,
            'count_minus': partition.count_minus,
            'agrees': agrees,
        }
        if not agrees:
            raise ConsistencyError(f"closed-form counts for p={p}, k={k} disagree with enumeration")
    emit([OutputRecord('count', {'p': p, 'k': k}, result, PROVENANCE['prime_count'])])


@cli.command('scan')
@click.argument('n_range')
@click.argument('k_range')
@click.option('--primes', is_flag=True, help="Only scan prime moduli.")
@click.pass_obj
def cmd_scan(state: CliState, n_range: str, k_range: str, primes: bool):
    """Counts, character sum and index-two flag over N_RANGE x K_RANGE (lo..hi)."""
    moduli, exponents = parse_int_range(n_range), parse_int_range(k_range)
    max_n, jobs = state.settings.max_n, state.settings.jobs
    records = []
    for n in moduli:
        if primes and not is_prime(n):
            continue
        for k in exponents:
            partition = enumerate_partition(n, k, max_n=max_n, jobs=jobs)
            result = partition.counts_dict()
            result['orthogonality_sum'] = orthogonality_sum(n, k, max_n=max_n)
            result['index_two'] = index_two_check(n, k, max_n=max_n)
            if n > 2 and is_prime(n):
                report = prime_counts(n, k)
                result['formula_plus'] = report.count_plus
                result['formula_minus'] = report.count_minus
                result['formula_ok'] = (report.count_plus, report.count_minus) == (
                    partition.count_plus, partition.count_minus)
            records.append(OutputRecord('scan', {'n': n, 'k': k}, result, PROVENANCE['scan']))
    logger.info(f"scanned {len(records)} (n, k) pairs")
    emit(records)


@cli.command('expsum')
@click.argument('n', type=int)
@click.argument('k', type=int)
@click.argument('m_range')
@click.pass_obj
def cmd_expsum(state: CliState, n: int, k: int, m_range: str):
    """Exponential sums S(m) for m in M_RANGE with the bound |R1| + |R-1|."""
    frequencies = parse_int_range(m_range)
    max_n = state.settings.max_n
    report = exp_sum_bound_check(n, k, frequencies, max_n=max_n)
    spectrum = exp_sum_spectrum(n, k, max_n=max_n)
    records = []
    for m in frequencies:
        value = complex(spectrum[m % n])
        records.append(OutputRecord('expsum', {'n': n, 'k': k, 'm': m}, {
            're': value.real,
            'im': value.imag,
            'abs': abs(value),
            'bound': report.bound,
        }, PROVENANCE['exp_sum_bound']))
    emit(records)


@cli.command('lseries')
@click.argument('s')
@click.argument('n', type=int)
@click.argument('k', type=int)
@click.argument('m', type=int)
@click.option('--euler', 'prime_cutoff', type=int, default=None, help="Compare with the Euler product over p <= P.")
@click.option('--completed', is_flag=True, help="Add a sample of pi^(-s/2) Gamma(s/2) L_M(s).")
@click.pass_obj
def cmd_lseries(state: CliState, s: str, n: int, k: int, m: int, prime_cutoff, completed: bool):
    """Truncated Dirichlet series of the symbol at S with M terms."""
    point = parse_complex(s)
    max_n = state.settings.max_n
    sample = l_series_partial(point, n, k, m, max_n=max_n)
    result = sample.to_dict()
    provenance = PROVENANCE['dirichlet_series']
    if prime_cutoff is not None:
        result['euler'] = euler_product_comparison(point, n, k, prime_cutoff, m, max_n=max_n).to_dict()
        provenance = PROVENANCE['euler_product']
    if completed:
        result['completed'] = complex_pair(complex(completed_sample(point, n, k, m, max_n=max_n)))
    inputs = {'s': complex_pair(point), 'n': n, 'k': k, 'm': m}
    emit([OutputRecord('lseries', inputs, result, provenance)])


@cli.command('verify')
@click.option('--all', 'run_all', is_flag=True, help="Run every theorem suite (the default).")
@click.option('--theorem', 'theorems', multiple=True, type=click.Choice(list(THEOREMS)),
              help="Run only this suite; repeatable.")
@click.option('--scale', type=click.Choice(list(VERIFICATION_SCALES)), default=DEFAULT_SCALE, show_default=True)
@click.pass_context
def cmd_verify(ctx: click.Context, run_all: bool, theorems, scale: str):
    """Run the theorem suites and report PASS/FAIL per theorem."""
    if run_all and theorems:
        raise click.UsageError("--all and --theorem are mutually exclusive")
    state: CliState = ctx.obj
    report = VerificationEngine(scale=scale, jobs=state.settings.jobs).run(theorems or None)
    records = []
    for outcome in report.results:
        result = outcome.to_dict()
        result.pop('provenance')
        records.append(OutputRecord('verify', {'scale': scale, 'theorem': outcome.slug}, result,
                                    outcome.provenance))
    emit(records)
    failure = report.first_failure
    if failure is not None:
        _fail(ctx, f"{failure.slug} failed: {failure.detail}; counterexample {failure.counterexample}",
              EXIT_VERIFICATION_FAILURE)


def main():
    cli(prog_name='expcong')
