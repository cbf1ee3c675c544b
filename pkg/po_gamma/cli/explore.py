# coding=utf-8
# po-gamma: Verification and Enumeration of Ordered Gamma-Semigroups (AGPL)
# This file is part of po-gamma.
#
# Copyright (c) 2026, po-gamma developers.
# You should have received a copy of the GNU Affero General Public License
# along with po-gamma; If not, see <http://www.gnu.org/licenses/>.
#
# @license AGPL-3.0-or-later <https://spdx.org/licenses/AGPL-3.0-or-later>
"""po-gamma commands that enumerate structures and search through them."""
import click

from ..core import OrderedGammaStructure
from ..document import StructureDocument, format_document
from ..search import SearchQuery, ORDER_MODES, enumerate_tables, \
    enumerate_ordered, count_structures, run_search
from . import FORMATS, handle_errors, echo_json


def _names(text):
    """Split a comma separated option value into names."""
    return [t.strip() for t in text.split(',') if t.strip()] if text else []


@click.command('enumerate')
@click.option('--n', 'n', type=click.IntRange(min=1), required=True,
              help='Number of elements.')
@click.option('--k', 'k', type=click.IntRange(min=1), required=True,
              help='Number of operations.')
@click.option('--orders', is_flag=True, default=False,
              help='List every compatible order with each table tuple.')
@click.option('--count-only', is_flag=True, default=False,
              help='Only print the number of structures.')
@click.option('--max-n', type=int, default=None,
              help='Override the table budget for this k.')
@click.option('--format', '-f', 'output_format', default='text', type=FORMATS,
              show_default=True, help='Output format.')
@handle_errors
def enumerate_structures(n, k, orders, count_only, max_n, output_format):
    """Enumerate every Gamma-semigroup with n elements and k operations."""
    if count_only:
        click.echo(count_structures(n, k, orders=orders, max_n=max_n))
        return
    if orders:
        found = list(enumerate_ordered(n, k, 'all', max_n))
    else:
        found = [OrderedGammaStructure(s) for s in enumerate_tables(n, k, max_n)]
    if output_format.lower() == 'json':
        echo_json([s.to_dict() for s in found])
        return
    click.echo('\n'.join(format_document(StructureDocument.from_structure(s))
                         for s in found), nl=False)


@click.command('search')
@click.option('--n', 'n', type=click.IntRange(min=1), required=True,
              help='Number of elements.')
@click.option('--k', 'k', type=click.IntRange(min=1), required=True,
              help='Number of operations.')
@click.option('--sat', default='', help='Comma separated predicates that must hold.')
@click.option('--unsat', default='', help='Comma separated predicates that must fail.')
@click.option('--limit', type=int, default=None, help='Largest number of hits.')
@click.option('--order-mode', default='all', show_default=True,
              type=click.Choice(ORDER_MODES), help='Orders tried on each table tuple.')
@click.option('--workers', type=click.IntRange(min=1), default=None,
              help='Number of processes. Defaults to the configured workers.')
@click.option('--max-n', type=int, default=None,
              help='Override the table budget for this k.')
@click.option('--format', '-f', 'output_format', default='json', type=FORMATS,
              show_default=True, help='Output format.')
@handle_errors
def search(n, k, sat, unsat, limit, order_mode, workers, max_n, output_format):
    """Find structures where every --sat predicate holds and every --unsat one fails.

    \b
    Predicates:
        regular, left-regular, right-regular, completely-regular,
        strongly-regular, C1..C8, K2, K3
    """
    query = SearchQuery(n, k, _names(sat), _names(unsat), limit, order_mode)
    hits = run_search(query, workers=workers, max_n=max_n)
    if output_format.lower() == 'json':
        echo_json({'query': query.to_dict(), 'hits': [h.to_dict() for h in hits]})
        return
    click.echo('{} hit(s) for {}'.format(len(hits), query))
    for hit in hits:
        click.echo(format_document(StructureDocument.from_structure(hit.structure)),
                   nl=False)
        click.echo('consistent: {}'.format(hit.verdict.consistent))
