# coding=utf-8
# po-gamma: Verification and Enumeration of Ordered Gamma-Semigroups (AGPL)
# This file is part of po-gamma.
#
# Copyright (c) 2026, po-gamma developers.
# You should have received a copy of the GNU Affero General Public License
# along with po-gamma; If not, see <http://www.gnu.org/licenses/>.
#
# @license AGPL-3.0-or-later <https://spdx.org/licenses/AGPL-3.0-or-later>
"""Exhaustive enumeration of small ordered Gamma-semigroups and the search for
structures that satisfy or refute combinations of properties.

Enumeration is labeled: isomorphic copies are all produced.
"""
import logging
import itertools
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from .config import budgets
from .errors import UsageError, PoGammaError
from .core import GammaStructure, OrderRelation, OrderedGammaStructure, \
    validate_order, validate_compatibility
from .regularity import is_regular, is_left_regular, is_right_regular, \
    is_completely_regular, is_strongly_regular
from .theorem import CHECKS, equivalence_verdict

LOGGER = logging.getLogger(__name__)

ORDER_MODES = ('all', 'equality-only')


def _condition_predicate(condition):
    check = CHECKS[condition]

    def predicate(structure):
        return check(structure).holds
    predicate.__name__ = 'holds_{}'.format(condition)
    return predicate


PREDICATES = {
    'regular': is_regular,
    'left-regular': is_left_regular,
    'right-regular': is_right_regular,
    'completely-regular': is_completely_regular,
    'strongly-regular': is_strongly_regular,
}
PREDICATES.update({c: _condition_predicate(c) for c in
                   ('C1', 'C2', 'C3', 'C4', 'C5', 'C6', 'C7', 'C8', 'K2', 'K3')})


class SearchQuery(object):
    """What run_search looks for.

    Args:
        n: Number of elements.
        k: Number of operations.
        sat: A list of predicate names that must hold. (Default: None).
        unsat: A list of predicate names that must fail. (Default: None).
        limit: Largest number of hits returned. None returns every hit.
            (Default: None).
        order_mode: Text for which orders are tried on each table tuple.
            Choose from: all, equality-only. (Default: all).

    Properties:
        * n
        * k
        * sat
        * unsat
        * limit
        * order_mode
    """
    __slots__ = ('_n', '_k', '_sat', '_unsat', '_limit', '_order_mode')

    def __init__(self, n, k, sat=None, unsat=None, limit=None, order_mode='all'):
        assert int(n) >= 1, 'n must be at least 1. Got: {}'.format(n)
        assert int(k) >= 1, 'k must be at least 1. Got: {}'.format(k)
        self._n = int(n)
        self._k = int(k)
        self._sat = self._check_names(sat or ())
        self._unsat = self._check_names(unsat or ())
        if limit is not None and int(limit) < 1:
            raise UsageError('limit must be at least 1. Got: {}'.format(limit))
        self._limit = None if limit is None else int(limit)
        if order_mode not in ORDER_MODES:
            raise UsageError('Order mode "{}" is not recognized. Choose from: {}'.format(
                order_mode, ', '.join(ORDER_MODES)))
        self._order_mode = order_mode

    @staticmethod
    def _check_names(names):
        names = tuple(names)
        for name in names:
            if name not in PREDICATES:
                raise UsageError('Predicate "{}" is not recognized. Choose from: '
                                 '{}'.format(name, ', '.join(PREDICATES)))
        return names

    @property
    def n(self):
        """Number of elements."""
        return self._n

    @property
    def k(self):
        """Number of operations."""
        return self._k

    @property
    def sat(self):
        """Tuple of predicate names that must hold."""
        return self._sat

    @property
    def unsat(self):
        """Tuple of predicate names that must fail."""
        return self._unsat

    @property
    def limit(self):
        """Largest number of hits or None."""
        return self._limit

    @property
    def order_mode(self):
        """Text for the order mode."""
        return self._order_mode

    def matches(self, structure):
        """Get a boolean for whether a structure meets every sat and unsat name."""
        return all(PREDICATES[p](structure) for p in self._sat) and \
            not any(PREDICATES[p](structure) for p in self._unsat)

    def to_dict(self):
        return {'type': 'SearchQuery', 'n': self._n, 'k': self._k,
                'sat': list(self._sat), 'unsat': list(self._unsat),
                'limit': self._limit, 'order_mode': self._order_mode}

    @classmethod
    def from_dict(cls, data):
        assert data['type'] == 'SearchQuery', \
            'Expected SearchQuery dictionary. Got {}.'.format(data['type'])
        return cls(data['n'], data['k'], data.get('sat'), data.get('unsat'),
                   data.get('limit'), data.get('order_mode', 'all'))

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        return 'SearchQuery: [n: {}] [k: {}] [sat: {}] [unsat: {}]'.format(
            self._n, self._k, ','.join(self._sat), ','.join(self._unsat))


class SearchHit(object):
    """A structure found by run_search together with its verdict.

    Properties:
        * structure
        * verdict
    """
    __slots__ = ('_structure', '_verdict')

    def __init__(self, structure, verdict):
        self._structure = structure
        self._verdict = verdict

    @property
    def structure(self):
        """The OrderedGammaStructure."""
        return self._structure

    @property
    def verdict(self):
        """The EquivalenceVerdict of the structure."""
        return self._verdict

    def to_dict(self):
        return {'structure': self._structure.to_dict(),
                'verdict': self._verdict.to_dict()}

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        return 'SearchHit: {} {}'.format(self._structure, self._verdict)


def _conflicts(tables):
    """Get a boolean for whether filled entries already break associativity.

    Entries equal to -1 are not filled yet. Every (rho, omega) pair of the
    stack is checked.
    """
    k, n = tables.shape[0], tables.shape[1]
    x = np.arange(n)[:, None, None]
    y = np.arange(n)[None, :, None]
    z = np.arange(n)[None, None, :]
    for rho in range(k):
        for omega in range(k):
            xy, yz = tables[rho][x, y], tables[omega][y, z]
            known = (xy >= 0) & (yz >= 0)
            lhs = tables[omega][np.where(known, xy, 0), z]
            rhs = tables[rho][x, np.where(known, yz, 0)]
            if np.any(known & (lhs >= 0) & (rhs >= 0) & (lhs != rhs)):
                return True
    return False


def associative_tables(n):
    """Get every associative n x n table in lexicographic order.

    Cells are filled in row-major order and a partial table is abandoned
    as soon as its filled cells break associativity.

    Returns:
        A list of numpy arrays of shape (n, n).
    """
    found = []
    table = -np.ones((1, n, n), dtype=np.int64)
    cells = [(x, y) for x in range(n) for y in range(n)]

    def fill(i):
        if i == len(cells):
            found.append(table[0].copy())
            return
        x, y = cells[i]
        for v in range(n):
            table[0, x, y] = v
            if not _conflicts(table):
                fill(i + 1)
        table[0, x, y] = -1

    fill(0)
    LOGGER.debug('Found %d associative tables with n=%d', len(found), n)
    return found


def _mixed_compatible(singles):
    """Get a boolean matrix where entry (i, j) means tables i and j associate
    in both mixed directions."""
    m = len(singles)
    compatible = np.zeros((m, m), dtype=bool)
    for i, j in itertools.product(range(m), range(m)):
        if j < i:
            compatible[i, j] = compatible[j, i]
            continue
        pair = np.stack([singles[i], singles[j]])
        compatible[i, j] = not _conflicts(pair)
    return compatible


def enumerate_tables(n, k, max_n=None):
    """Yield every Gamma-semigroup with n elements and k operations.

    Single tables are filtered for associativity first, then k-tuples are
    grown in lexicographic order keeping only tables that associate with
    every earlier one in both mixed directions.

    Args:
        n: Number of elements.
        k: Number of operations.
        max_n: Optional override of the table budget for this k. (Default: None).

    Yields:
        GammaStructures in lexicographic order of the flattened table tuple.

    Raises:
        UsageError when n or k is below 1 and BudgetError when n is beyond
        the table budget.
    """
    if n < 1 or k < 1:
        raise UsageError('n and k must be at least 1. Got: n={}, k={}'.format(n, k))
    budgets.check_tables(n, k, max_n)
    singles = associative_tables(n)
    compatible = _mixed_compatible(singles) if k > 1 else None

    def grow(chosen):
        if len(chosen) == k:
            yield GammaStructure([singles[i] for i in chosen])
            return
        for j in range(len(singles)):
            if all(compatible[i, j] for i in chosen):
                for structure in grow(chosen + (j,)):
                    yield structure

    count = 0
    for structure in grow(()):
        count += 1
        yield structure
    LOGGER.info('Enumerated %d structures with n=%d and k=%d', count, n, k)


def partial_orders(n):
    """Get every partial order on n elements, starting with equality.

    Each unordered pair {i, j} is either incomparable, i <= j or j <= i;
    combinations that break transitivity are dropped.
    """
    pairs = list(itertools.combinations(range(n), 2))
    orders = []
    for choice in itertools.product((0, 1, 2), repeat=len(pairs)):
        leq = np.eye(n, dtype=bool)
        for (i, j), c in zip(pairs, choice):
            if c == 1:
                leq[i, j] = True
            elif c == 2:
                leq[j, i] = True
        if validate_order(leq, n).is_valid:
            orders.append(OrderRelation(leq))
    return orders


def enumerate_orders(structure):
    """Yield every partial order compatible with all operations of a structure.

    Args:
        structure: A valid GammaStructure.

    Yields:
        OrderRelations, the equality order first.
    """
    for order in partial_orders(structure.n):
        if validate_compatibility(structure, order).is_valid:
            yield order


def _orders_for(structure, order_mode):
    if order_mode == 'equality-only':
        return [OrderRelation.equality(structure.n)]
    return list(enumerate_orders(structure))


def enumerate_ordered(n, k, order_mode='all', max_n=None):
    """Yield every OrderedGammaStructure with n elements and k operations."""
    for structure in enumerate_tables(n, k, max_n):
        for order in _orders_for(structure, order_mode):
            yield OrderedGammaStructure(structure, order)


def count_structures(n, k, orders=False, max_n=None):
    """Get the number of Gamma-semigroups, or of ordered ones when orders is True."""
    if not orders:
        return sum(1 for _ in enumerate_tables(n, k, max_n))
    return sum(1 for _ in enumerate_ordered(n, k, 'all', max_n))


def _reverify(structure, query):
    """Rebuild a structure from its serialized form and evaluate the query again."""
    fresh = OrderedGammaStructure.from_dict(structure.to_dict())
    if not fresh.is_valid:
        raise PoGammaError('Search emitted an invalid structure: {}'.format(
            structure.to_dict()))
    if not query.matches(fresh):
        raise PoGammaError('Search hit failed re-verification: {}'.format(
            structure.to_dict()))
    return fresh


def _search_partition(args):
    """Get the matching (tables, order pairs) of one first-row partition.

    args also carries the budget values of the calling process, which are
    applied before scanning.
    """
    query_data, budget_data, partition = args
    budgets.update(budget_data)
    query = SearchQuery.from_dict(query_data)
    hits = []
    for tables in partition:
        structure = GammaStructure(tables)
        for order in _orders_for(structure, query.order_mode):
            candidate = OrderedGammaStructure(structure, order)
            if query.matches(candidate):
                hits.append((tables, order.pairs()))
                if query.limit is not None and len(hits) >= query.limit:
                    return hits
    return hits


def _partitions(query, max_n=None):
    """Group enumerated table tuples by the first row of the first table."""
    groups = []
    for first_row, members in itertools.groupby(
            enumerate_tables(query.n, query.k, max_n),
            key=lambda s: s.rows[0][0]):
        groups.append([[[list(row) for row in tab] for tab in s.rows] for s in members])
        LOGGER.debug('Partition with first row %s collected', first_row)
    return groups


def run_search(query, workers=None, max_n=None):
    """Find structures where all sat predicates hold and all unsat ones fail.

    Args:
        query: A SearchQuery.
        workers: Optional number of processes. If None, the workers value of
            the budgets configuration is used. (Default: None).
        max_n: Optional override of the table budget. (Default: None).

    Returns:
        A list of at most query.limit SearchHits in enumeration order. Every
        hit is re-verified on a freshly constructed structure.
    """
    workers = budgets.workers if workers is None else workers
    partitions = _partitions(query, max_n)
    args = [(query.to_dict(), budgets.to_dict(), part) for part in partitions]
    if workers > 1 and len(partitions) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(_search_partition, args))
    else:
        results = []
        found = 0
        for arg in args:
            part_hits = _search_partition(arg)
            results.append(part_hits)
            found += len(part_hits)
            if query.limit is not None and found >= query.limit:
                break

    hits = []
    for tables, pairs in itertools.chain.from_iterable(results):
        if query.limit is not None and len(hits) >= query.limit:
            break
        structure = _reverify(OrderedGammaStructure.from_tables(tables, pairs), query)
        hits.append(SearchHit(structure, equivalence_verdict(structure)))
    LOGGER.info('%s returned %d hits', query, len(hits))
    return hits
