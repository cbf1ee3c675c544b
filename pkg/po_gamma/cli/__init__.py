# coding=utf-8
# po-gamma: Verification and Enumeration of Ordered Gamma-Semigroups (AGPL)
# This file is part of po-gamma.
#
# Copyright (c) 2026, po-gamma developers.
# You should have received a copy of the GNU Affero General Public License
# along with po-gamma; If not, see <http://www.gnu.org/licenses/>.
#
# @license AGPL-3.0-or-later <https://spdx.org/licenses/AGPL-3.0-or-later>
"""po-gamma command line interface.

Exit codes: 0 when the checked property holds, 1 when it fails or the
verdict is inconsistent, 2 for usage and parse errors and 3 when a budget
is exceeded.
"""
import sys
import json
import logging
import functools

try:
    import click
except ImportError as e:
    raise ImportError('\nFailed to import click:\n\t{}'.format(e))

from ..errors import UsageError, ParseError, StructureError, BudgetError
from ..document import load_document
from ..fixtures import load_fixture
from ..subsets import elements
from ..nrel import n_relation, n_classes_with_filters, is_semilattice_congruence
from ..regularity import is_regular, is_left_regular, is_right_regular, \
    is_completely_regular, is_strongly_regular, witness_table
from ..theorem import CONDITION_IDS, check_condition, equivalence_verdict

EXIT_FAILS = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

FORMATS = click.Choice(['json', 'text'], case_sensitive=False)


def handle_errors(command):
    """Turn po-gamma exceptions into diagnostics on stderr and exit codes."""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except ParseError as e:
            click.echo('parse error ({}) at {}'.format(e.kind, e), err=True)
            sys.exit(EXIT_USAGE)
        except (UsageError, StructureError) as e:
            click.echo('usage error: {}'.format(e), err=True)
            sys.exit(EXIT_USAGE)
        except BudgetError as e:
            click.echo('budget exceeded: {}'.format(e), err=True)
            sys.exit(EXIT_BUDGET)
        except AssertionError as e:
            click.echo('usage error: {}'.format(e), err=True)
            sys.exit(EXIT_USAGE)
    return wrapper


def document_input(command):
    """Add the FILE argument and the --fixture option to a command."""
    command = click.option(
        '--fixture', default=None,
        help='Name of a packaged fixture (fix1, fixp, fixc, fixlz) to use '
        'instead of a file.')(command)
    return click.argument('file', required=False, type=click.Path(
        exists=True, dir_okay=False, resolve_path=True))(command)


def read_document(file, fixture):
    """Get the StructureDocument named by a FILE argument or --fixture option."""
    if (file is None) == (fixture is None):
        raise UsageError('Give either a document file or --fixture, not both or neither.')
    return load_fixture(fixture) if fixture else load_document(file)


def valid_structure(doc):
    """Get the structure of a document, exiting with 1 if it breaks an axiom."""
    structure = doc.to_structure()
    broken = [r for r in structure.validate() if not r.is_valid]
    for report in broken:
        for violation in report:
            click.echo('{}: {} at {}'.format(
                violation.rule, violation.message, violation.location), err=True)
    if broken:
        sys.exit(EXIT_FAILS)
    return structure


class _SingleReport(object):
    """Wrap one ConditionReport so that JSON output keeps the report list layout."""

    def __init__(self, report):
        self.report = report

    def to_dict(self):
        return {'reports': [self.report.to_dict()]}

    def to_text(self):
        return self.report.to_text()


def echo_json(data):
    click.echo(json.dumps(data, indent=2))


def _with_names(doc, data):
    data['elements'] = list(doc.elements)
    data['gammas'] = list(doc.gammas)
    return data


@click.group(help='po-gamma: verify and enumerate finite ordered Gamma-semigroups.')
@click.version_option(package_name='po-gamma')
@click.option('--verbose', '-v', is_flag=True, default=False,
              help='Log debug messages to stderr.')
def main(verbose):
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING, stream=sys.stderr,
        format='%(levelname)s %(name)s: %(message)s')


@main.command('validate')
@document_input
@handle_errors
def validate(file, fixture):
    """Check the tables, the order and their compatibility.

    \b
    Args:
        file: Path to a gamma-structure v1 document.
    """
    valid_structure(read_document(file, fixture))
    click.echo('valid')


@main.command('check')
@document_input
@click.option('--condition', '-c', default='all', show_default=True,
              type=click.Choice(('all',) + CONDITION_IDS),
              help='A single condition to decide, or all of them.')
@click.option('--verify-k3', is_flag=True, default=False,
              help='Decide K3 by searching every subset E instead of E = M.')
@click.option('--format', '-f', 'output_format', default='json', type=FORMATS,
              show_default=True, help='Output format.')
@handle_errors
def check(file, fixture, condition, verify_k3, output_format):
    """Decide the characterizations of strong regularity.

    Exits with 0 when the verdict is consistent (or the single condition
    holds) and with 1 otherwise.

    \b
    Args:
        file: Path to a gamma-structure v1 document.
    """
    doc = read_document(file, fixture)
    structure = valid_structure(doc)
    if condition == 'all':
        result = equivalence_verdict(structure, verify_k3=verify_k3)
        passed = result.consistent
    else:
        result = check_condition(structure, condition, verify_k3=verify_k3)
        passed = result.holds
        result = _SingleReport(result)
    if output_format.lower() == 'json':
        echo_json(_with_names(doc, result.to_dict()))
    else:
        click.echo(result.to_text())
    if not passed:
        sys.exit(EXIT_FAILS)


@main.command('classify')
@document_input
@click.option('--format', '-f', 'output_format', default='json', type=FORMATS,
              show_default=True, help='Output format.')
@handle_errors
def classify(file, fixture, output_format):
    """Report the five regularity notions and the witness of each element.

    \b
    Args:
        file: Path to a gamma-structure v1 document.
    """
    doc = read_document(file, fixture)
    structure = valid_structure(doc)
    flags = [
        ('regular', is_regular(structure)),
        ('left_regular', is_left_regular(structure)),
        ('right_regular', is_right_regular(structure)),
        ('completely_regular', is_completely_regular(structure)),
        ('strongly_regular', is_strongly_regular(structure))
    ]
    table = witness_table(structure)
    if output_format.lower() == 'json':
        data = dict(flags)
        data['witnesses'] = table
        echo_json(_with_names(doc, data))
        return
    for name, value in flags:
        click.echo('{}: {}'.format(name, value))
    for row in table:
        click.echo('{}: {}'.format(doc.element_name(row['element']), ' '.join(
            '{}={}'.format(key, row[key]) for key in
            ('regular', 'left_regular', 'right_regular', 'strong'))))


@main.command('nclasses')
@document_input
@click.option('--format', '-f', 'output_format', default='json', type=FORMATS,
              show_default=True, help='Output format.')
@handle_errors
def nclasses(file, fixture, output_format):
    """List the N-classes together with the filter N(a) of their members.

    \b
    Args:
        file: Path to a gamma-structure v1 document.
    """
    doc = read_document(file, fixture)
    structure = valid_structure(doc)
    pairs = n_classes_with_filters(structure)
    semilattice = is_semilattice_congruence(structure, n_relation(structure))
    if output_format.lower() == 'json':
        data = {
            'classes': [{'members': elements(cl), 'filter': elements(filt)}
                        for cl, filt in pairs],
            'semilattice_congruence': semilattice
        }
        echo_json(_with_names(doc, data))
        return
    name = doc.element_name
    for cl, filt in pairs:
        click.echo('{{{}}} -> N = {{{}}}'.format(
            ', '.join(name(e) for e in elements(cl)),
            ', '.join(name(e) for e in elements(filt))))
    click.echo('semilattice congruence: {}'.format(semilattice))


from .explore import enumerate_structures, search  # noqa: E402

main.add_command(enumerate_structures)
main.add_command(search)

