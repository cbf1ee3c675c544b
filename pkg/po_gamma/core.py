# coding=utf-8
# po-gamma: Verification and Enumeration of Ordered Gamma-Semigroups (AGPL)
# This file is part of po-gamma.
#
# Copyright (c) 2026, po-gamma developers.
# You should have received a copy of the GNU Affero General Public License
# along with po-gamma; If not, see <http://www.gnu.org/licenses/>.
#
# @license AGPL-3.0-or-later <https://spdx.org/licenses/AGPL-3.0-or-later>
"""Finite ordered Gamma-semigroups and the validators for their axioms.

A structure is a carrier of n elements together with k total binary operations
given as Cayley tables (one per member of Gamma). Elements and operations are
0-based indices; names only exist in the document layer.
"""
import logging
from collections import namedtuple

import numpy as np

from .errors import StructureError

LOGGER = logging.getLogger(__name__)

Violation = namedtuple('Violation', ('rule', 'location', 'message'))


class ValidationReport(object):
    """Every violation found by one of the validators.

    Args:
        subject: Text for what was validated (tables, order, compatibility).
        violations: A list of Violation tuples. (Default: None).

    Properties:
        * subject
        * violations
        * is_valid
    """
    __slots__ = ('_subject', '_violations')

    def __init__(self, subject, violations=None):
        self._subject = subject
        self._violations = tuple(violations) if violations else ()

    @property
    def subject(self):
        """Text for what was validated."""
        return self._subject

    @property
    def violations(self):
        """Tuple of Violation(rule, location, message)."""
        return self._violations

    @property
    def is_valid(self):
        """True when no violation was found."""
        return len(self._violations) == 0

    def locations(self, rule=None):
        """Get the location tuples of all violations, optionally of one rule."""
        return [v.location for v in self._violations if rule is None or v.rule == rule]

    def to_dict(self):
        return {
            'subject': self._subject,
            'valid': self.is_valid,
            'violations': [
                {'rule': v.rule, 'location': list(v.location), 'message': v.message}
                for v in self._violations]
        }

    def __bool__(self):
        return self.is_valid

    def __len__(self):
        return len(self._violations)

    def __iter__(self):
        return iter(self._violations)

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        return 'ValidationReport: {} [{} violations]'.format(
            self._subject, len(self._violations))


def _as_table_array(tables, n=None, k=None):
    """Convert nested table input into an integer array of shape (k, n, n)."""
    try:
        arr = np.array(tables, dtype=np.int64)
    except (TypeError, ValueError) as e:
        raise StructureError('Operation tables are not rectangular:\n\t{}'.format(e))
    if arr.ndim != 3 or arr.shape[1] != arr.shape[2]:
        raise StructureError(
            'Expected k tables of shape n x n. Got array of shape {}.'.format(arr.shape))
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise StructureError('A structure needs n >= 1 and k >= 1. '
                             'Got n={} and k={}.'.format(arr.shape[1], arr.shape[0]))
    if k is not None and arr.shape[0] != k:
        raise StructureError('Expected {} tables. Got {}.'.format(k, arr.shape[0]))
    if n is not None and arr.shape[1] != n:
        raise StructureError(
            'Expected tables of size {0} x {0}. Got {1} x {1}.'.format(n, arr.shape[1]))
    return arr


def _as_order_array(leq, n=None):
    try:
        arr = np.array(leq, dtype=bool)
    except (TypeError, ValueError) as e:
        raise StructureError('Order matrix is not rectangular:\n\t{}'.format(e))
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise StructureError(
            'Expected an n x n order matrix. Got shape {}.'.format(arr.shape))
    if n is not None and arr.shape[0] != n:
        raise StructureError(
            'Expected a {0} x {0} order matrix. Got {1} x {1}.'.format(n, arr.shape[0]))
    return arr


def validate_tables(tables, n, k):
    """Check closure and mixed associativity of k operation tables.

    Args:
        tables: Nested sequence (or array) of k tables, each n x n.
        n: Number of elements.
        k: Number of operations.

    Returns:
        A ValidationReport with a 'range' violation at (gamma, x, y) for every
        entry outside [0, n) and an 'associativity' violation at
        (rho, omega, x, y, z) for every triple where
        (x rho y) omega z != x rho (y omega z).
    """
    arr = _as_table_array(tables, n, k)
    violations = []
    in_range = (arr >= 0) & (arr < n)
    for g, x, y in np.argwhere(~in_range):
        violations.append(Violation(
            'range', (int(g), int(x), int(y)),
            'entry {} of table {} at ({}, {}) is not an element index'.format(
                int(arr[g, x, y]), int(g), int(x), int(y))))

    safe = np.where(in_range, arr, 0)
    r = np.arange(k)[:, None, None, None, None]
    w = np.arange(k)[None, :, None, None, None]
    x = np.arange(n)[None, None, :, None, None]
    y = np.arange(n)[None, None, None, :, None]
    z = np.arange(n)[None, None, None, None, :]
    xy, yz = safe[r, x, y], safe[w, y, z]
    lhs, rhs = safe[w, xy, z], safe[r, x, yz]
    defined = in_range[r, x, y] & in_range[w, y, z] & \
        in_range[w, xy, z] & in_range[r, x, yz]
    for loc in np.argwhere((lhs != rhs) & defined):
        rho, omega, a, b, c = (int(v) for v in loc)
        violations.append(Violation(
            'associativity', (rho, omega, a, b, c),
            '({0} op{3} {1}) op{4} {2} != {0} op{3} ({1} op{4} {2})'.format(
                a, b, c, rho, omega)))
    return ValidationReport('tables', violations)


def validate_order(leq, n):
    """Check that an n x n boolean matrix is a partial order.

    Args:
        leq: Nested sequence (or array) where leq[i][j] means i <= j.
        n: Number of elements.

    Returns:
        A ValidationReport with 'reflexivity' violations at (i,),
        'antisymmetry' violations at (i, j) with i < j and 'transitivity'
        violations at (i, j, l) where i <= j <= l but not i <= l.
    """
    arr = _as_order_array(leq, n)
    violations = []
    for i in range(n):
        if not arr[i, i]:
            violations.append(Violation('reflexivity', (i,), '{} <= {} is missing'.format(i, i)))
    for i in range(n):
        for j in range(i + 1, n):
            if arr[i, j] and arr[j, i]:
                violations.append(Violation(
                    'antisymmetry', (i, j), '{0} <= {1} and {1} <= {0}'.format(i, j)))
    for i in range(n):
        for j in range(n):
            if not arr[i, j]:
                continue
            for l in range(n):
                if arr[j, l] and not arr[i, l]:
                    violations.append(Violation(
                        'transitivity', (i, j, l),
                        '{0} <= {1} <= {2} but not {0} <= {2}'.format(i, j, l)))
    return ValidationReport('order', violations)


def validate_compatibility(structure, order):
    """Check that every operation is monotone on both sides.

    Args:
        structure: A GammaStructure.
        order: An OrderRelation on the same carrier.

    Returns:
        A ValidationReport with 'compatibility' violations at
        (a, b, c, gamma, side) where a <= b but a gamma c <= b gamma c fails
        (side 'right') or c gamma a <= c gamma b fails (side 'left').
    """
    if structure.n != order.n:
        raise StructureError('Order has {} elements but the structure has {}.'.format(
            order.n, structure.n))
    arr, leq = structure.tables, order.matrix
    violations = []
    for g in range(structure.k):
        tab = arr[g]
        # right[a, b, c] = (a g c <= b g c); left[a, b, c] = (c g a <= c g b)
        right = leq[tab[:, None, :], tab[None, :, :]]
        left = leq[tab.T[:, None, :], tab.T[None, :, :]]
        for side, ok in (('right', right), ('left', left)):
            for a, b, c in np.argwhere(leq[:, :, None] & ~ok):
                a, b, c = int(a), int(b), int(c)
                pair = (a, g, c, b, g, c) if side == 'right' else (c, g, a, c, g, b)
                violations.append(Violation(
                    'compatibility', (a, b, c, g, side),
                    '{} <= {} but not {} op{} {} <= {} op{} {}'.format(a, b, *pair)))
    return ValidationReport('compatibility', violations)


class GammaStructure(object):
    """A finite carrier with k total binary operations.

    The constructor only checks shapes. Use validate_tables (or the
    validate method) to check closure and mixed associativity.

    Args:
        tables: Nested sequence (or array) of k tables of shape n x n, where
            tables[g][x][y] is the element index of x g y.

    Properties:
        * n
        * k
        * tables
        * rows
    """
    __slots__ = ('_tables', '_rows')

    def __init__(self, tables):
        arr = _as_table_array(tables)
        arr.flags.writeable = False
        self._tables = arr
        self._rows = tuple(tuple(tuple(int(v) for v in row) for row in tab) for tab in arr)

    @property
    def n(self):
        """Number of elements."""
        return self._tables.shape[1]

    @property
    def k(self):
        """Number of operations."""
        return self._tables.shape[0]

    @property
    def tables(self):
        """Read-only integer array of shape (k, n, n)."""
        return self._tables

    @property
    def rows(self):
        """The tables as nested tuples for fast scalar lookups."""
        return self._rows

    def validate(self):
        """Get the ValidationReport of validate_tables for this structure."""
        return validate_tables(self._tables, self.n, self.k)

    def to_dict(self):
        return {'type': 'GammaStructure', 'tables': self._tables.tolist()}

    @classmethod
    def from_dict(cls, data):
        assert data['type'] == 'GammaStructure', \
            'Expected GammaStructure dictionary. Got {}.'.format(data['type'])
        return cls(data['tables'])

    def __key(self):
        return self._rows

    def __eq__(self, other):
        return isinstance(other, GammaStructure) and self.__key() == other.__key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.__key())

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        return 'GammaStructure: [n: {}] [k: {}]'.format(self.n, self.k)


class OrderRelation(object):
    """A partial order on n elements given as a boolean matrix.

    Args:
        leq: Nested sequence (or array) where leq[i][j] means i <= j.

    Properties:
        * n
        * matrix
        * down_sets
        * up_sets
    """
    __slots__ = ('_matrix', '_down', '_up')

    def __init__(self, leq):
        arr = _as_order_array(leq)
        arr.flags.writeable = False
        self._matrix = arr
        n = arr.shape[0]
        self._down = tuple(
            sum(1 << t for t in range(n) if arr[t, h]) for h in range(n))
        self._up = tuple(
            sum(1 << t for t in range(n) if arr[h, t]) for h in range(n))

    @classmethod
    def equality(cls, n):
        """Create the equality order on n elements."""
        return cls(np.eye(n, dtype=bool))

    @classmethod
    def from_pairs(cls, n, pairs=()):
        """Create an order from (lesser, greater) pairs; reflexive pairs are implied.

        No closure is applied; validate the result with validate_order.
        """
        arr = np.eye(n, dtype=bool)
        for lesser, greater in pairs:
            arr[lesser, greater] = True
        return cls(arr)

    @property
    def n(self):
        """Number of elements."""
        return self._matrix.shape[0]

    @property
    def matrix(self):
        """Read-only boolean array where matrix[i, j] means i <= j."""
        return self._matrix

    @property
    def down_sets(self):
        """Tuple of masks; down_sets[h] has a bit for every t <= h."""
        return self._down

    @property
    def up_sets(self):
        """Tuple of masks; up_sets[h] has a bit for every t >= h."""
        return self._up

    def leq(self, a, b):
        """Get a boolean for whether a <= b."""
        return bool(self._down[b] >> a & 1)

    def pairs(self):
        """Get the non-reflexive (lesser, greater) pairs in row-major order."""
        n = self.n
        return [(i, j) for i in range(n) for j in range(n)
                if i != j and self._matrix[i, j]]

    def validate(self):
        """Get the ValidationReport of validate_order for this relation."""
        return validate_order(self._matrix, self.n)

    def to_dict(self):
        return {'type': 'OrderRelation', 'n': self.n,
                'pairs': [list(p) for p in self.pairs()]}

    @classmethod
    def from_dict(cls, data):
        assert data['type'] == 'OrderRelation', \
            'Expected OrderRelation dictionary. Got {}.'.format(data['type'])
        return cls.from_pairs(data['n'], data['pairs'])

    def __key(self):
        return self._down

    def __eq__(self, other):
        return isinstance(other, OrderRelation) and self.__key() == other.__key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.__key())

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        return 'OrderRelation: [n: {}] [pairs: {}]'.format(self.n, self.pairs())


class OrderedGammaStructure(object):
    """A Gamma-semigroup together with a compatible partial order.

    Every predicate in po-gamma takes one of these as its first argument.
    The constructor checks that sizes agree; call validate for the axioms.

    Args:
        structure: A GammaStructure.
        order: An OrderRelation on the same number of elements. If None, the
            equality order is used. (Default: None).

    Properties:
        * structure
        * order
        * n
        * k
        * full
    """
    __slots__ = ('_structure', '_order', '_full')

    def __init__(self, structure, order=None):
        if order is None:
            order = OrderRelation.equality(structure.n)
        if structure.n != order.n:
            raise StructureError(
                'Order has {} elements but the structure has {}.'.format(
                    order.n, structure.n))
        self._structure = structure
        self._order = order
        self._full = (1 << structure.n) - 1

    @classmethod
    def from_tables(cls, tables, pairs=None):
        """Create a structure from nested tables and optional (lesser, greater) pairs."""
        structure = GammaStructure(tables)
        order = OrderRelation.from_pairs(structure.n, pairs or ())
        return cls(structure, order)

    @property
    def structure(self):
        """The underlying GammaStructure."""
        return self._structure

    @property
    def order(self):
        """The OrderRelation."""
        return self._order

    @property
    def n(self):
        """Number of elements."""
        return self._structure.n

    @property
    def k(self):
        """Number of operations."""
        return self._structure.k

    @property
    def full(self):
        """Mask of the whole carrier M."""
        return self._full

    def product(self, gamma, x, y):
        """Get the element index of x gamma y."""
        return self._structure.rows[gamma][x][y]

    def leq(self, a, b):
        """Get a boolean for whether a <= b."""
        return self._order.leq(a, b)

    def validate(self):
        """Run all three validators.

        Returns:
            A list of ValidationReports for the tables, the order and the
            compatibility of both. Compatibility is only checked when the
            first two are valid.
        """
        reports = [self._structure.validate(), self._order.validate()]
        if all(r.is_valid for r in reports):
            reports.append(validate_compatibility(self._structure, self._order))
        return reports

    @property
    def is_valid(self):
        """True when all three validators return empty reports."""
        reports = self.validate()
        return len(reports) == 3 and all(r.is_valid for r in reports)

    def to_dict(self):
        return {
            'type': 'OrderedGammaStructure',
            'structure': self._structure.to_dict(),
            'order': self._order.to_dict()
        }

    @classmethod
    def from_dict(cls, data):
        assert data['type'] == 'OrderedGammaStructure', \
            'Expected OrderedGammaStructure dictionary. Got {}.'.format(data['type'])
        return cls(GammaStructure.from_dict(data['structure']),
                   OrderRelation.from_dict(data['order']))

    def __key(self):
        return (self._structure, self._order)

    def __eq__(self, other):
        return isinstance(other, OrderedGammaStructure) and self.__key() == other.__key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.__key())

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        return 'OrderedGammaStructure: [n: {}] [k: {}] [order pairs: {}]'.format(
            self.n, self.k, self._order.pairs())
