# coding=utf-8
# po-gamma: Verification and Enumeration of Ordered Gamma-Semigroups (AGPL)
# This file is part of po-gamma.
#
# Copyright (c) 2026, po-gamma developers.
# You should have received a copy of the GNU Affero General Public License
# along with po-gamma; If not, see <http://www.gnu.org/licenses/>.
#
# @license AGPL-3.0-or-later <https://spdx.org/licenses/AGPL-3.0-or-later>
"""Regular, left regular, right regular, completely regular and strongly
regular ordered Gamma-semigroups, with the witnesses that certify them.

Every witness search walks its candidates in lexicographic order of
(x, gamma, mu) and returns the first hit, so reports are reproducible.
"""
import logging
import itertools

from .config import budgets
from .errors import UsageError
from .subsets import principal_set, chain_product, down_closure, elements, \
    is_subset, singleton
from .substructs import is_subsemigroup

LOGGER = logging.getLogger(__name__)


class StrongWitness(object):
    """An element x and two operations certifying strong regularity of a.

    The witness holds when a <= a gamma x mu a and
    a gamma x = x gamma a = x mu a = a mu x.

    Args:
        a: Index of the certified element.
        x: Index of the witness element.
        gamma: Index of the first operation.
        mu: Index of the second operation.

    Properties:
        * a
        * x
        * gamma
        * mu
    """
    __slots__ = ('_a', '_x', '_gamma', '_mu')

    def __init__(self, a, x, gamma, mu):
        self._a = a
        self._x = x
        self._gamma = gamma
        self._mu = mu

    @property
    def a(self):
        """Index of the certified element."""
        return self._a

    @property
    def x(self):
        """Index of the witness element."""
        return self._x

    @property
    def gamma(self):
        """Index of the first operation."""
        return self._gamma

    @property
    def mu(self):
        """Index of the second operation."""
        return self._mu

    def holds(self, structure):
        """Get a boolean for whether this witness satisfies its defining conditions."""
        return is_strong_witness(structure, self._a, self._x, self._gamma, self._mu)

    def to_dict(self):
        return {'type': 'StrongWitness', 'a': self._a, 'x': self._x,
                'gamma': self._gamma, 'mu': self._mu}

    @classmethod
    def from_dict(cls, data):
        assert data['type'] == 'StrongWitness', \
            'Expected StrongWitness dictionary. Got {}.'.format(data['type'])
        return cls(data['a'], data['x'], data['gamma'], data['mu'])

    def __key(self):
        return (self._a, self._x, self._gamma, self._mu)

    def __eq__(self, other):
        return isinstance(other, StrongWitness) and self.__key() == other.__key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.__key())

    def __iter__(self):
        return iter(self.__key())

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        return 'StrongWitness: [a: {}] [x: {}] [gamma: {}] [mu: {}]'.format(*self.__key())


def _candidates(structure, T=None):
    """Yield (x, gamma, mu) in lexicographic order with x drawn from T."""
    xs = range(structure.n) if T is None else elements(T)
    ops = range(structure.k)
    return itertools.product(xs, ops, ops)


def is_strong_witness(structure, a, x, gamma, mu):
    """Get a boolean for whether (x, gamma, mu) certifies a as strongly regular."""
    p = structure.product
    a_gamma_x = p(gamma, a, x)
    return a_gamma_x == p(gamma, x, a) == p(mu, x, a) == p(mu, a, x) and \
        structure.leq(a, p(mu, a_gamma_x, a))


def is_c2_witness(structure, a, y, gamma, mu):
    """Get a boolean for whether (y, gamma, mu) satisfies the strengthened witness.

    Besides the strong witness conditions, y <= y mu a gamma y must hold.
    """
    p = structure.product
    return is_strong_witness(structure, a, y, gamma, mu) and \
        structure.leq(y, p(gamma, p(mu, y, a), y))


def upgrade_witness(structure, witness):
    """Turn a strong witness (x, gamma, mu) of a into y := x mu a gamma x.

    Args:
        structure: An OrderedGammaStructure.
        witness: A StrongWitness that holds.

    Returns:
        A StrongWitness (a, y, gamma, mu) which additionally satisfies
        y <= y mu a gamma y.
    """
    p = structure.product
    a, x, gamma, mu = witness
    y = p(gamma, p(mu, x, a), x)
    return StrongWitness(a, y, gamma, mu)


def regular_witness(structure, a):
    """Get the first (x, gamma, mu) with a <= a gamma x mu a, or None."""
    p = structure.product
    for x, gamma, mu in _candidates(structure):
        if structure.leq(a, p(mu, p(gamma, a, x), a)):
            return (x, gamma, mu)
    return None


def left_regular_witness(structure, a):
    """Get the first (x, gamma, mu) with a <= x gamma a mu a, or None."""
    p = structure.product
    for x, gamma, mu in _candidates(structure):
        if structure.leq(a, p(mu, p(gamma, x, a), a)):
            return (x, gamma, mu)
    return None


def right_regular_witness(structure, a):
    """Get the first (y, rho, xi) with a <= a rho a xi y, or None."""
    p = structure.product
    for y, rho, xi in _candidates(structure):
        if structure.leq(a, p(xi, p(rho, a, a), y)):
            return (y, rho, xi)
    return None


def in_regular_set(structure, a):
    """Get a boolean for whether a belongs to (a Gamma M Gamma a]."""
    a_mask = singleton(a)
    product = chain_product(structure, (a_mask, structure.full, a_mask))
    return bool(down_closure(structure, product) & a_mask)


def is_regular(structure):
    """Get a boolean for whether every element has a regular witness."""
    return all(regular_witness(structure, a) is not None for a in range(structure.n))


def is_left_regular(structure):
    """Get a boolean for whether a is in (M Gamma a Gamma a] for every a."""
    return all(principal_set(structure, '(MGaGa]', a) >> a & 1
               for a in range(structure.n))


def is_right_regular(structure):
    """Get a boolean for whether a is in (a Gamma a Gamma M] for every a."""
    return all(principal_set(structure, '(aGaGM]', a) >> a & 1
               for a in range(structure.n))


def is_completely_regular(structure):
    """Get a boolean for whether the structure is regular, left and right regular."""
    return is_regular(structure) and is_left_regular(structure) and \
        is_right_regular(structure)


def _subset_form(structure, factors_of):
    budgets.check_subset_scan(structure.n, 'regularity subset scan')
    for A in range(1, structure.full + 1):
        closure = down_closure(structure, chain_product(structure, factors_of(A)))
        if not is_subset(A, closure):
            return False
    return True


def is_regular_by_subsets(structure):
    """Get a boolean for whether A is inside (A Gamma M Gamma A] for every A."""
    return _subset_form(structure, lambda A: (A, structure.full, A))


def is_left_regular_by_subsets(structure):
    """Get a boolean for whether A is inside (M Gamma A Gamma A] for every A."""
    return _subset_form(structure, lambda A: (structure.full, A, A))


def is_right_regular_by_subsets(structure):
    """Get a boolean for whether A is inside (A Gamma A Gamma M] for every A."""
    return _subset_form(structure, lambda A: (A, A, structure.full))


def strong_witness(structure, a, T=None):
    """Get the lexicographically first strong witness of a with x in T.

    Args:
        structure: An OrderedGammaStructure.
        a: Index of the element to certify. It must belong to T.
        T: Optional mask that the witness element x is drawn from. If None,
            the whole carrier is used. (Default: None).

    Returns:
        A StrongWitness or None when no candidate works.
    """
    T = structure.full if T is None else T
    if not T >> a & 1:
        raise UsageError('Element {} is not in the subset {}.'.format(a, elements(T)))
    for x, gamma, mu in _candidates(structure, T):
        if is_strong_witness(structure, a, x, gamma, mu):
            return StrongWitness(a, x, gamma, mu)
    return None


def is_strongly_regular(structure):
    """Get a boolean for whether every element has a strong witness in M."""
    return all(strong_witness(structure, a) is not None for a in range(structure.n))


def is_strongly_regular_subsemigroup(structure, T):
    """Get a boolean for whether T is a strongly regular subsemigroup.

    Operations and the order are those of M restricted to T; witnesses must
    come from T.
    """
    if not is_subsemigroup(structure, T):
        return False
    for a in elements(T):
        if strong_witness(structure, a, T) is None:
            LOGGER.debug('No strong witness for %d inside %s', a, elements(T))
            return False
    return True


def witness_table(structure):
    """Get the witnesses of every regularity notion for each element.

    Returns:
        A list with one dictionary per element holding the keys element,
        regular, left_regular, right_regular and strong. Missing witnesses
        are None.
    """
    table = []
    for a in range(structure.n):
        strong = strong_witness(structure, a)
        table.append({
            'element': a,
            'regular': regular_witness(structure, a),
            'left_regular': left_regular_witness(structure, a),
            'right_regular': right_regular_witness(structure, a),
            'strong': None if strong is None else (strong.x, strong.gamma, strong.mu)
        })
    return table
