# coding=utf-8
# po-gamma: Verification and Enumeration of Ordered Gamma-Semigroups (AGPL)
# This file is part of po-gamma.
#
# Copyright (c) 2026, po-gamma developers.
# You should have received a copy of the GNU Affero General Public License
# along with po-gamma; If not, see <http://www.gnu.org/licenses/>.
#
# @license AGPL-3.0-or-later <https://spdx.org/licenses/AGPL-3.0-or-later>
"""Eight characterizations (C1-C8) of strongly regular ordered Gamma-semigroups
and three further ones (K1-K3).

Each condition is decided by brute force over its own quantifiers and never
by calling another condition.
"""
import logging
import itertools

from .config import budgets
from .subsets import principal_set, product_gamma, down_closure, elements, \
    is_subset, singleton
from .substructs import enumerate_substructures, is_semiprime
from .nrel import n_classes_with_filters
from .regularity import strong_witness, is_strongly_regular_subsemigroup, \
    is_c2_witness, left_regular_witness, right_regular_witness

LOGGER = logging.getLogger(__name__)

CONDITION_IDS = ('C1', 'C2', 'C3', 'C4', 'C5', 'C6', 'C7', 'C8', 'K1', 'K2', 'K3')


def _fmt(mask):
    return '{' + ', '.join(str(e) for e in elements(mask)) + '}'


class ConditionReport(object):
    """The outcome of deciding one characterization.

    Args:
        condition: Text for the condition id (C1..C8, K1..K3).
        failures: A list of (element, reason) tuples. element is None when the
            failure concerns a subset rather than a single element.
        witnesses: A list of dictionaries with per-element certificates.

    Properties:
        * condition
        * holds
        * failures
        * witnesses
    """
    __slots__ = ('_condition', '_failures', '_witnesses')

    def __init__(self, condition, failures=None, witnesses=None):
        self._condition = condition
        self._failures = list(failures or [])
        self._witnesses = list(witnesses or [])

    @property
    def condition(self):
        """Text for the condition id."""
        return self._condition

    @property
    def holds(self):
        """True exactly when there are no failures."""
        return not self._failures

    @property
    def failures(self):
        """List of (element, reason) tuples."""
        return self._failures

    @property
    def witnesses(self):
        """List of certificate dictionaries."""
        return self._witnesses

    def fail(self, element, reason):
        self._failures.append((element, reason))

    def certify(self, **certificate):
        self._witnesses.append(certificate)

    def to_dict(self):
        return {
            'condition': self._condition,
            'holds': self.holds,
            'failures': [{'element': e, 'reason': r} for e, r in self._failures],
            'witnesses': self._witnesses
        }

    def to_text(self):
        """Get a human readable multi-line summary."""
        lines = ['{}: {}'.format(self._condition, 'holds' if self.holds else 'fails')]
        for element, reason in self._failures:
            prefix = '' if element is None else 'element {}: '.format(element)
            lines.append('    {}{}'.format(prefix, reason))
        return '\n'.join(lines)

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        return 'ConditionReport: {} [holds: {}] [failures: {}]'.format(
            self._condition, self.holds, len(self._failures))


class EquivalenceVerdict(object):
    """The eleven condition reports and whether they all agree.

    Args:
        reports: A list of ConditionReports in CONDITION_IDS order.

    Properties:
        * reports
        * flags
        * consistent
    """
    __slots__ = ('_reports',)

    def __init__(self, reports):
        self._reports = tuple(reports)

    @property
    def reports(self):
        """Tuple of ConditionReports."""
        return self._reports

    @property
    def flags(self):
        """Dictionary from condition id to its boolean outcome."""
        return {r.condition: r.holds for r in self._reports}

    @property
    def consistent(self):
        """True when every flag has the same value."""
        return len(set(r.holds for r in self._reports)) <= 1

    def report(self, condition):
        """Get the ConditionReport of one condition id."""
        for r in self._reports:
            if r.condition == condition:
                return r
        raise KeyError(condition)

    def to_dict(self):
        return {
            'flags': self.flags,
            'consistent': self.consistent,
            'reports': [r.to_dict() for r in self._reports]
        }

    def to_text(self):
        lines = [r.to_text() for r in self._reports]
        lines.append('consistent: {}'.format(self.consistent))
        return '\n'.join(lines)

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        return 'EquivalenceVerdict: [consistent: {}] [flags: {}]'.format(
            self.consistent, ''.join('1' if r.holds else '0' for r in self._reports))


def _principal_ideal(structure, a):
    return principal_set(structure, '(MGaGM]', a)


def _check_srs_of_principal_ideals(structure, report):
    """Record a failure for every a whose (M Gamma a Gamma M] is not strongly regular."""
    for a in range(structure.n):
        ideal = _principal_ideal(structure, a)
        if not is_strongly_regular_subsemigroup(structure, ideal):
            report.fail(a, '(MGaGM] = {} is not a strongly regular subsemigroup'.format(
                _fmt(ideal)))


def _check_strongly_regular(structure, condition):
    report = ConditionReport(condition)
    for a in range(structure.n):
        witness = strong_witness(structure, a)
        if witness is None:
            report.fail(a, 'no x, gamma, mu with a <= a gamma x mu a and '
                        'a gamma x = x gamma a = x mu a = a mu x')
        else:
            report.certify(element=a, x=witness.x, gamma=witness.gamma, mu=witness.mu)
    return report


def check_C1(structure):
    """M is strongly regular."""
    return _check_strongly_regular(structure, 'C1')


def check_C2(structure):
    """Every a has (y, gamma, mu) with a <= a gamma y mu a, y <= y mu a gamma y
    and a gamma y = y gamma a = y mu a = a mu y."""
    report = ConditionReport('C2')
    ops = range(structure.k)
    for a in range(structure.n):
        for y, gamma, mu in itertools.product(range(structure.n), ops, ops):
            if is_c2_witness(structure, a, y, gamma, mu):
                report.certify(element=a, y=y, gamma=gamma, mu=mu)
                break
        else:
            report.fail(a, 'no y, gamma, mu satisfying both inequalities and '
                        'the four-way product equality')
    return report


def check_C3(structure):
    """Every N-class is a strongly regular subsemigroup."""
    report = ConditionReport('C3')
    for cl, filt in n_classes_with_filters(structure):
        if is_strongly_regular_subsemigroup(structure, cl):
            report.certify(n_class=elements(cl), filter=elements(filt))
        else:
            report.fail(elements(cl)[0], 'N-class {} is not a strongly regular '
                        'subsemigroup'.format(_fmt(cl)))
    return report


def _semiprime_breaker(structure, T):
    """Get an a with a Gamma a inside T but a outside T, or None."""
    for a in range(structure.n):
        a_mask = singleton(a)
        if not T & a_mask and is_subset(product_gamma(structure, a_mask, a_mask), T):
            return a
    return None


def check_C4(structure):
    """Left and right ideals are semiprime and every (L Gamma R] is a strongly
    regular subsemigroup."""
    report = ConditionReport('C4')
    lefts = enumerate_substructures(structure, 'left-ideal')
    rights = enumerate_substructures(structure, 'right-ideal')
    for side, ideals in (('left', lefts), ('right', rights)):
        for ideal in ideals:
            if not is_semiprime(structure, ideal):
                a = _semiprime_breaker(structure, ideal)
                report.fail(a, '{} ideal {} is not semiprime: a Gamma a is inside it '
                            'but a is not'.format(side, _fmt(ideal)))
    for L, R in itertools.product(lefts, rights):
        closure = down_closure(structure, product_gamma(structure, L, R))
        if not is_strongly_regular_subsemigroup(structure, closure):
            report.fail(None, '(L Gamma R] = {} for L = {} and R = {} is not a '
                        'strongly regular subsemigroup'.format(
                            _fmt(closure), _fmt(L), _fmt(R)))
    report.certify(left_ideals=[elements(L) for L in lefts],
                   right_ideals=[elements(R) for R in rights])
    return report


def check_C5(structure):
    """M is left regular, right regular and every (M Gamma a Gamma M] is a
    strongly regular subsemigroup."""
    report = ConditionReport('C5')
    for a in range(structure.n):
        if not principal_set(structure, '(MGaGa]', a) >> a & 1:
            report.fail(a, 'a is not in (MGaGa]')
        if not principal_set(structure, '(aGaGM]', a) >> a & 1:
            report.fail(a, 'a is not in (aGaGM]')
    _check_srs_of_principal_ideals(structure, report)
    return report


def check_C6(structure):
    """Every a has e, e' in M Gamma a Gamma a Gamma M and rho, mu with
    e <= e rho e', a <= e mu a, a <= a rho e' and
    (M Gamma e Gamma M] = (M Gamma e' Gamma M] = (M Gamma a Gamma M]."""
    report = ConditionReport('C6')
    p, leq = structure.product, structure.leq
    ops = range(structure.k)
    for a in range(structure.n):
        span = principal_set(structure, 'MGaGaGM', a)
        candidates = elements(span)
        ideal = _principal_ideal(structure, a)
        same_ideal = [e for e in candidates if _principal_ideal(structure, e) == ideal]
        found = None
        for e, e_prime, rho, mu in itertools.product(same_ideal, same_ideal, ops, ops):
            if leq(e, p(rho, e, e_prime)) and leq(a, p(mu, e, a)) and \
                    leq(a, p(rho, a, e_prime)):
                found = (e, e_prime, rho, mu)
                break
        if found is None:
            report.fail(a, 'no e, e\' in MGaGaGM = {} and rho, mu meeting the '
                        'inequalities and ideal equalities'.format(_fmt(span)))
        else:
            e, e_prime, rho, mu = found
            report.certify(element=a, e=e, e_prime=e_prime, rho=rho, mu=mu)
    _check_srs_of_principal_ideals(structure, report)
    return report


def check_C7(structure):
    """Every a has e, e' in M and rho, mu with a <= e mu a and a <= a rho e'."""
    report = ConditionReport('C7')
    p, leq = structure.product, structure.leq
    ops = range(structure.k)
    elems = range(structure.n)
    for a in range(structure.n):
        for e, e_prime, rho, mu in itertools.product(elems, elems, ops, ops):
            if leq(a, p(mu, e, a)) and leq(a, p(rho, a, e_prime)):
                report.certify(element=a, e=e, e_prime=e_prime, rho=rho, mu=mu)
                break
        else:
            report.fail(a, 'no e, e\', rho, mu with a <= e mu a and a <= a rho e\'')
    _check_srs_of_principal_ideals(structure, report)
    return report


def check_C8(structure):
    """Every a lies in (M Gamma a] and in (a Gamma M]."""
    report = ConditionReport('C8')
    for a in range(structure.n):
        if not principal_set(structure, '(MGa]', a) >> a & 1:
            report.fail(a, 'a is not in (MGa]')
        if not principal_set(structure, '(aGM]', a) >> a & 1:
            report.fail(a, 'a is not in (aGM]')
    _check_srs_of_principal_ideals(structure, report)
    return report


def check_K1(structure):
    """M is strongly regular (the same statement as C1)."""
    return _check_strongly_regular(structure, 'K1')


def check_K2(structure):
    """With E := M Gamma a Gamma a Gamma M: E inside (E Gamma E], a in
    (E Gamma a], a in (a Gamma E] and (M Gamma E Gamma M] = (M Gamma a Gamma M]."""
    report = ConditionReport('K2')
    full = structure.full

    def closed(A, B):
        return down_closure(structure, product_gamma(structure, A, B))

    for a in range(structure.n):
        a_mask = singleton(a)
        E = principal_set(structure, 'MGaGaGM', a)
        if not is_subset(E, closed(E, E)):
            report.fail(a, 'E = {} is not inside (EGE]'.format(_fmt(E)))
        if not closed(E, a_mask) & a_mask:
            report.fail(a, 'a is not in (EGa]')
        if not closed(a_mask, E) & a_mask:
            report.fail(a, 'a is not in (aGE]')
        meet = down_closure(structure, product_gamma(
            structure, product_gamma(structure, full, E), full))
        if meet != _principal_ideal(structure, a):
            report.fail(a, '(MGEGM] = {} differs from (MGaGM]'.format(_fmt(meet)))
        report.certify(element=a, e_a=elements(E))
    _check_srs_of_principal_ideals(structure, report)
    return report


def check_K3(structure, exhaustive=False):
    """Every a has a subset E with a in (E Gamma a] and a in (a Gamma E].

    Args:
        structure: An OrderedGammaStructure.
        exhaustive: Set to True to search all 2^n subsets E instead of using
            E = M, which dominates every other choice because products and
            downward closures are monotone. Only allowed up to the
            k3_exhaustive_cap of the budgets configuration. (Default: False).
    """
    report = ConditionReport('K3')
    if exhaustive:
        budgets.check_subset_scan(structure.n, 'K3 subset search',
                                  budgets.k3_exhaustive_cap)
    for a in range(structure.n):
        a_mask = singleton(a)
        choices = range(1, structure.full + 1) if exhaustive else (structure.full,)
        for E in choices:
            if down_closure(structure, product_gamma(structure, E, a_mask)) & a_mask \
                    and down_closure(structure, product_gamma(structure, a_mask, E)) & a_mask:
                report.certify(element=a, e_a=elements(E))
                break
        else:
            report.fail(a, 'no subset E with a in (EGa] and a in (aGE]')
    _check_srs_of_principal_ideals(structure, report)
    return report


CHECKS = {
    'C1': check_C1, 'C2': check_C2, 'C3': check_C3, 'C4': check_C4,
    'C5': check_C5, 'C6': check_C6, 'C7': check_C7, 'C8': check_C8,
    'K1': check_K1, 'K2': check_K2, 'K3': check_K3
}


def check_condition(structure, condition, verify_k3=False):
    """Decide a single condition by its id."""
    if condition == 'K3':
        return check_K3(structure, exhaustive=verify_k3)
    return CHECKS[condition](structure)


def equivalence_verdict(structure, verify_k3=False):
    """Decide all eleven conditions and check that they agree.

    Args:
        structure: A valid OrderedGammaStructure.
        verify_k3: Set to True to decide K3 by the exhaustive subset search.
            (Default: False).

    Returns:
        An EquivalenceVerdict with reports in the fixed order C1..C8, K1..K3.
    """
    reports = [check_condition(structure, c, verify_k3) for c in CONDITION_IDS]
    verdict = EquivalenceVerdict(reports)
    if not verdict.consistent:
        LOGGER.warning('Inconsistent verdict %s for %s', verdict, structure.to_dict())
    return verdict


def construct_c6_witness(structure, a):
    """Build (e, e', rho, mu) for condition C6 from left and right regularity.

    With a <= x gamma a mu a and a <= a rho a xi y, the elements
    e := x gamma a rho a xi y and e' := x gamma a mu a xi y both lie in
    M Gamma a Gamma a Gamma M.

    Returns:
        A tuple (e, e_prime, rho, mu), or None when a is not both left and
        right regular.
    """
    left, right = left_regular_witness(structure, a), right_regular_witness(structure, a)
    if left is None or right is None:
        return None
    p = structure.product
    x, gamma, mu = left
    y, rho, xi = right
    x_gamma_a = p(gamma, x, a)
    e = p(xi, p(rho, x_gamma_a, a), y)
    e_prime = p(xi, p(mu, x_gamma_a, a), y)
    return (e, e_prime, rho, mu)


def principal_ideal_factors(structure, a):
    """Get a boolean for whether (M Gamma a Gamma M] = ((M Gamma a] Gamma (a Gamma M]]."""
    left = principal_set(structure, '(MGa]', a)
    right = principal_set(structure, '(aGM]', a)
    return down_closure(structure, product_gamma(structure, left, right)) == \
        _principal_ideal(structure, a)
