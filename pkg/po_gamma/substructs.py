# coding=utf-8
# po-gamma: Verification and Enumeration of Ordered Gamma-Semigroups (AGPL)
# This file is part of po-gamma.
#
# Copyright (c) 2026, po-gamma developers.
# You should have received a copy of the GNU Affero General Public License
# along with po-gamma; If not, see <http://www.gnu.org/licenses/>.
#
# @license AGPL-3.0-or-later <https://spdx.org/licenses/AGPL-3.0-or-later>
"""Subsemigroups, one-sided ideals, filters and semiprime subsets.

All predicates are total: the empty mask is never a substructure and simply
yields False.
"""
import logging

from .config import budgets
from .errors import UsageError
from .subsets import product_gamma, down_closure, up_closure, is_subset, \
    singleton

LOGGER = logging.getLogger(__name__)


def is_subsemigroup(structure, T):
    """Get a boolean for whether T is nonempty and T Gamma T is inside T."""
    return T != 0 and is_subset(product_gamma(structure, T, T), T)


def is_left_ideal(structure, A):
    """Get a boolean for whether A is a left ideal.

    A left ideal is nonempty, absorbs M Gamma A and is downward closed.
    """
    return A != 0 and is_subset(product_gamma(structure, structure.full, A), A) \
        and down_closure(structure, A) == A


def is_right_ideal(structure, A):
    """Get a boolean for whether A is a right ideal.

    A right ideal is nonempty, absorbs A Gamma M and is downward closed.
    """
    return A != 0 and is_subset(product_gamma(structure, A, structure.full), A) \
        and down_closure(structure, A) == A


def divisors(structure, F):
    """Get every x and y such that x gamma y lands in F for some gamma."""
    result = 0
    for rows in structure.structure.rows:
        for x, row in enumerate(rows):
            for y, v in enumerate(row):
                if F >> v & 1:
                    result |= (1 << x) | (1 << y)
    return result


def is_filter(structure, F):
    """Get a boolean for whether F is a filter.

    A filter is a subsemigroup that contains both factors of each of its
    products (a gamma b in F implies a, b in F) and is upward closed.
    """
    return is_subsemigroup(structure, F) and is_subset(divisors(structure, F), F) \
        and up_closure(structure, F) == F


def is_semiprime(structure, T):
    """Get a boolean for whether a Gamma a inside T implies a in T for every a."""
    for a in range(structure.n):
        a_mask = singleton(a)
        if not T & a_mask and is_subset(product_gamma(structure, a_mask, a_mask), T):
            return False
    return True


def is_semiprime_by_subsets(structure, T):
    """Get a boolean for whether A Gamma A inside T implies A inside T for every A.

    This is the subset form of is_semiprime and scans all 2^n subsets.
    """
    budgets.check_subset_scan(structure.n, 'semiprime subset scan')
    for A in range(1, structure.full + 1):
        if not is_subset(A, T) and is_subset(product_gamma(structure, A, A), T):
            return False
    return True


def filter_generated(structure, a):
    """Get N(a), the least filter containing the element a.

    The filter is built as a forward least fixpoint starting from {a}: each
    round adds all products, all divisors of members and everything above a
    member. Masks only grow, so the loop ends after at most n rounds.

    Args:
        structure: An OrderedGammaStructure.
        a: Index of the generating element.

    Returns:
        A mask of the filter.
    """
    if not 0 <= a < structure.n:
        raise UsageError('Element index must be in [0, {}). Got: {}'.format(
            structure.n, a))
    F = singleton(a)
    while True:
        grown = F | product_gamma(structure, F, F) | divisors(structure, F) | \
            up_closure(structure, F)
        if grown == F:
            return F
        F = grown


def filter_by_intersection(structure, a):
    """Get the intersection of all filters that contain the element a.

    M is always a filter, so the intersection is never empty.
    """
    result = structure.full
    for F in enumerate_substructures(structure, 'filter'):
        if F >> a & 1:
            result &= F
    return result


SUBSTRUCTURE_KINDS = {
    'left-ideal': is_left_ideal,
    'right-ideal': is_right_ideal,
    'filter': is_filter,
    'subsemigroup': is_subsemigroup
}


def enumerate_substructures(structure, kind, cap=None):
    """Get every nonempty subset of a given kind in ascending mask order.

    Args:
        structure: An OrderedGammaStructure.
        kind: Text for the kind of substructure. Choose from: left-ideal,
            right-ideal, filter, subsemigroup.
        cap: Optional largest n for the 2^n scan. If None, the subset_cap of
            the budgets configuration is used. (Default: None).

    Returns:
        A list of masks.
    """
    try:
        predicate = SUBSTRUCTURE_KINDS[kind]
    except KeyError:
        raise UsageError('Substructure kind "{}" is not recognized. Choose from: '
                         '{}'.format(kind, ', '.join(SUBSTRUCTURE_KINDS)))
    budgets.check_subset_scan(structure.n, '{} scan'.format(kind), cap)
    found = [T for T in range(1, structure.full + 1) if predicate(structure, T)]
    LOGGER.debug('Found %d %s subsets among %d candidates', len(found), kind,
                 structure.full)
    return found

