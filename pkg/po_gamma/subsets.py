# coding=utf-8
# po-gamma: Verification and Enumeration of Ordered Gamma-Semigroups (AGPL)
# This file is part of po-gamma.
#
# Copyright (c) 2026, po-gamma developers.
# You should have received a copy of the GNU Affero General Public License
# along with po-gamma; If not, see <http://www.gnu.org/licenses/>.
#
# @license AGPL-3.0-or-later <https://spdx.org/licenses/AGPL-3.0-or-later>
"""Subset algebra over a fixed OrderedGammaStructure.

Subsets of the carrier are plain integer bit masks: bit i is set when element
i belongs to the subset. A mask for a structure with n elements never has bits
at or above position n, so arbitrarily large n works without special casing.
"""
from .errors import UsageError

# pattern text -> (factors, closed). 'M' is the carrier, 'a' the element.
PRINCIPAL_PATTERNS = {
    '(MGa]': (('M', 'a'), True),
    '(aGM]': (('a', 'M'), True),
    '(MGaGM]': (('M', 'a', 'M'), True),
    '(MGaGa]': (('M', 'a', 'a'), True),
    '(aGaGM]': (('a', 'a', 'M'), True),
    'MGaGaGM': (('M', 'a', 'a', 'M'), False)
}


def full_mask(n):
    """Get the mask of an n-element carrier."""
    return (1 << n) - 1


def singleton(a):
    """Get the mask of {a}."""
    return 1 << a


def mask_of(elements):
    """Get the mask holding every element index in an iterable."""
    mask = 0
    for e in elements:
        mask |= 1 << e
    return mask


def elements(mask):
    """Get the element indices in a mask in ascending order."""
    result = []
    i = 0
    while mask:
        if mask & 1:
            result.append(i)
        mask >>= 1
        i += 1
    return result


def is_subset(A, B):
    """Get a boolean for whether A is a subset of B."""
    return A & ~B == 0


def product(structure, A, gamma, B):
    """Get the set { a gamma b : a in A, b in B } for a single operation.

    Args:
        structure: An OrderedGammaStructure.
        A: Mask of the left factor.
        gamma: Index of the operation.
        B: Mask of the right factor.

    Returns:
        A mask. Empty when A or B is empty.
    """
    if not 0 <= gamma < structure.k:
        raise UsageError('Operation index must be in [0, {}). Got: {}'.format(
            structure.k, gamma))
    rows = structure.structure.rows[gamma]
    right = elements(B)
    result = 0
    for a in elements(A):
        row = rows[a]
        for b in right:
            result |= 1 << row[b]
    return result


def product_gamma(structure, A, B):
    """Get A Gamma B, the union of product(A, gamma, B) over every gamma."""
    right = elements(B)
    result = 0
    for rows in structure.structure.rows:
        for a in elements(A):
            row = rows[a]
            for b in right:
                result |= 1 << row[b]
    return result


def down_closure(structure, H):
    """Get (H], every element below some member of H."""
    downs = structure.order.down_sets
    result = 0
    for h in elements(H):
        result |= downs[h]
    return result


def up_closure(structure, H):
    """Get [H), every element above some member of H."""
    ups = structure.order.up_sets
    result = 0
    for h in elements(H):
        result |= ups[h]
    return result


def chain_product(structure, factors):
    """Get F1 Gamma F2 Gamma ... Fm for a sequence of masks, left to right.

    Mixed associativity makes the bracketing irrelevant. When Python runs
    with assertions on, the right-to-left bracketing is computed as well and
    the two are compared.
    """
    factors = list(factors)
    result = factors[0]
    for f in factors[1:]:
        result = product_gamma(structure, result, f)
    if __debug__ and len(factors) > 2:
        other = factors[-1]
        for f in reversed(factors[:-1]):
            other = product_gamma(structure, f, other)
        assert other == result, 'Bracketing changed the product of {}: {} != {}. ' \
            'Is the structure associative?'.format(factors, result, other)
    return result


def principal_set(structure, pattern, a):
    """Get one of the principal subsets generated by an element.

    Args:
        structure: An OrderedGammaStructure.
        pattern: Text for the subset. Choose from the following ('G' stands
            for Gamma and may also be written as the Greek letter):
                * (MGa]
                * (aGM]
                * (MGaGM]
                * (MGaGa]
                * (aGaGM]
                * MGaGaGM
        a: Index of the generating element.

    Returns:
        A mask. The downward closure is applied exactly when the pattern is
        wrapped in '(' and ']'.
    """
    key = pattern.replace(u'Γ', 'G').replace(' ', '')
    try:
        factors, closed = PRINCIPAL_PATTERNS[key]
    except KeyError:
        raise UsageError('Principal set pattern "{}" is not recognized. Choose from: '
                         '{}'.format(pattern, ', '.join(PRINCIPAL_PATTERNS)))
    if not 0 <= a < structure.n:
        raise UsageError('Element index must be in [0, {}). Got: {}'.format(
            structure.n, a))
    masks = [structure.full if f == 'M' else 1 << a for f in factors]
    result = chain_product(structure, masks)
    return down_closure(structure, result) if closed else result
