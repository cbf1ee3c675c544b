# coding=utf-8
# po-gamma: Verification and Enumeration of Ordered Gamma-Semigroups (AGPL)
# This file is part of po-gamma.
#
# Copyright (c) 2026, po-gamma developers.
# You should have received a copy of the GNU Affero General Public License
# along with po-gamma; If not, see <http://www.gnu.org/licenses/>.
#
# @license AGPL-3.0-or-later <https://spdx.org/licenses/AGPL-3.0-or-later>
"""The relation N, its classes and the congruence checks used on it.

Two elements are N-related when they generate the same filter. Any other
equivalence relation can be checked with the same predicates by building an
EqRelation from its classes.
"""
import logging

from .errors import UsageError
from .subsets import elements
from .substructs import filter_generated

LOGGER = logging.getLogger(__name__)


class EqRelation(object):
    """An equivalence relation on n elements stored as a partition.

    Classes are numbered in the order of their least element, so two equal
    relations always produce identical class ids.

    Args:
        class_id: A list with the class index of every element.

    Properties:
        * n
        * class_id
        * classes
    """
    __slots__ = ('_class_id', '_classes')

    def __init__(self, class_id):
        relabel = {}
        normalized = []
        for c in class_id:
            if c not in relabel:
                relabel[c] = len(relabel)
            normalized.append(relabel[c])
        classes = [0] * len(relabel)
        for e, c in enumerate(normalized):
            classes[c] |= 1 << e
        self._class_id = tuple(normalized)
        self._classes = tuple(classes)

    @classmethod
    def from_classes(cls, n, classes):
        """Create a relation from masks (or element collections) that partition M."""
        class_id = [None] * n
        for i, cl in enumerate(classes):
            members = elements(cl) if isinstance(cl, int) else list(cl)
            if not members:
                raise UsageError('Class {} of the partition is empty.'.format(i))
            for e in members:
                if not 0 <= e < n:
                    raise UsageError('Element index must be in [0, {}). Got: {}'.format(
                        n, e))
                if class_id[e] is not None:
                    raise UsageError('Element {} is in more than one class.'.format(e))
                class_id[e] = i
        missing = [e for e, c in enumerate(class_id) if c is None]
        if missing:
            raise UsageError('Elements {} are not in any class.'.format(missing))
        return cls(class_id)

    @classmethod
    def identity(cls, n):
        """Create the relation in which every class is a singleton."""
        return cls(range(n))

    @classmethod
    def universal(cls, n):
        """Create the relation with a single class."""
        return cls([0] * n)

    @property
    def n(self):
        """Number of elements."""
        return len(self._class_id)

    @property
    def class_id(self):
        """Tuple with the class index of every element."""
        return self._class_id

    @property
    def classes(self):
        """Tuple of class masks ordered by least element."""
        return self._classes

    def related(self, a, b):
        """Get a boolean for whether a and b are in the same class."""
        return self._class_id[a] == self._class_id[b]

    def class_of(self, a):
        """Get the mask of the class containing a."""
        return self._classes[self._class_id[a]]

    def to_dict(self):
        return {'type': 'EqRelation', 'classes': [elements(c) for c in self._classes]}

    def __eq__(self, other):
        return isinstance(other, EqRelation) and self._class_id == other._class_id

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self._class_id)

    def __len__(self):
        return len(self._classes)

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        return 'EqRelation: [n: {}] [classes: {}]'.format(
            self.n, [elements(c) for c in self._classes])


def n_relation(structure):
    """Get the relation N, where a ~ b exactly when N(a) = N(b)."""
    filters = [filter_generated(structure, a) for a in range(structure.n)]
    return EqRelation(filters)


def n_classes_with_filters(structure):
    """Get each N-class together with the filter its members generate.

    Returns:
        A list of (class mask, filter mask) tuples ordered by least element.
    """
    filters = [filter_generated(structure, a) for a in range(structure.n)]
    relation = EqRelation(filters)
    return [(cl, filters[elements(cl)[0]]) for cl in relation.classes]


def congruence_failures(structure, rel):
    """Get (a, b, c, gamma, side) for every break of the congruence property.

    Only pairs a < b in the same class are reported.
    """
    if rel.n != structure.n:
        raise UsageError('Relation has {} elements but the structure has {}.'.format(
            rel.n, structure.n))
    ids = rel.class_id
    failures = []
    for gamma, tab in enumerate(structure.structure.rows):
        for a in range(structure.n):
            for b in range(a + 1, structure.n):
                if ids[a] != ids[b]:
                    continue
                for c in range(structure.n):
                    if ids[tab[a][c]] != ids[tab[b][c]]:
                        failures.append((a, b, c, gamma, 'right'))
                    if ids[tab[c][a]] != ids[tab[c][b]]:
                        failures.append((a, b, c, gamma, 'left'))
    return failures


def is_congruence(structure, rel):
    """Get a boolean for whether rel is compatible with every operation on both sides."""
    return not congruence_failures(structure, rel)


def is_semilattice_congruence(structure, rel):
    """Get a boolean for whether rel is a semilattice congruence.

    On top of being a congruence, a gamma b must be related to b gamma a and
    a must be related to a gamma a, for all a, b and gamma.
    """
    if not is_congruence(structure, rel):
        return False
    ids = rel.class_id
    for tab in structure.structure.rows:
        for a in range(structure.n):
            if ids[a] != ids[tab[a][a]]:
                LOGGER.debug('%d is not related to %d', a, tab[a][a])
                return False
            for b in range(a + 1, structure.n):
                if ids[tab[a][b]] != ids[tab[b][a]]:
                    LOGGER.debug('%d is not related to %d', tab[a][b], tab[b][a])
                    return False
    return True
