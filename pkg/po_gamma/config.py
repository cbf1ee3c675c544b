# coding=utf-8
# po-gamma: Verification and Enumeration of Ordered Gamma-Semigroups (AGPL)
# This file is part of po-gamma.
#
# Copyright (c) 2026, po-gamma developers.
# You should have received a copy of the GNU Affero General Public License
# along with po-gamma; If not, see <http://www.gnu.org/licenses/>.
#
# @license AGPL-3.0-or-later <https://spdx.org/licenses/AGPL-3.0-or-later>
"""Budgets and caps used by the exhaustive scans of po-gamma.

Values come from the defaults below, then from an optional config.json that
sits next to this module, then from environment variables. Import the
``budgets`` object rather than constructing a new Budgets.

Usage:

.. code-block:: python

    from po_gamma.config import budgets
    print(budgets.subset_cap)
    budgets.workers = 4
"""
import os
import json
import logging

from .errors import BudgetError

LOGGER = logging.getLogger(__name__)

_ENV_KEYS = {
    'subset_cap': 'PO_GAMMA_SUBSET_CAP',
    'k3_exhaustive_cap': 'PO_GAMMA_K3_EXHAUSTIVE_CAP',
    'workers': 'PO_GAMMA_WORKERS'
}


class Budgets(object):
    """Caps that keep exhaustive scans at desk scale.

    Args:
        config_file: Optional path to a JSON file with keys matching the
            properties below. If None, config.json next to this module is
            used when it exists. (Default: None).

    Properties:
        * subset_cap
        * table_budget
        * k3_exhaustive_cap
        * workers
        * config_file
    """
    __slots__ = ('_subset_cap', '_table_budget', '_k3_exhaustive_cap',
                 '_workers', '_config_file')

    DEFAULT_TABLE_BUDGET = {1: 4, 2: 3}

    def __init__(self, config_file=None):
        self._subset_cap = 16
        self._table_budget = dict(self.DEFAULT_TABLE_BUDGET)
        self._k3_exhaustive_cap = 4
        self._workers = 1
        if config_file is None:
            config_file = os.path.join(os.path.dirname(__file__), 'config.json')
        self._config_file = config_file
        self._load_config_file(config_file)
        self._load_environment()

    @property
    def subset_cap(self):
        """Largest element count for which 2^n substructure scans are run."""
        return self._subset_cap

    @subset_cap.setter
    def subset_cap(self, value):
        self._subset_cap = self._positive_int(value, 'subset_cap')

    @property
    def table_budget(self):
        """Dictionary from operation count k to the largest n enumerated.

        Operation counts above the largest key get n <= 2.
        """
        return self._table_budget

    @table_budget.setter
    def table_budget(self, value):
        assert isinstance(value, dict), 'table_budget must be a dictionary. ' \
            'Got {}.'.format(type(value))
        self._table_budget = {
            int(k): self._positive_int(n, 'table_budget[{}]'.format(k))
            for k, n in value.items()}

    @property
    def k3_exhaustive_cap(self):
        """Largest element count for the exhaustive subset search of K3."""
        return self._k3_exhaustive_cap

    @k3_exhaustive_cap.setter
    def k3_exhaustive_cap(self, value):
        self._k3_exhaustive_cap = self._positive_int(value, 'k3_exhaustive_cap')

    @property
    def workers(self):
        """Number of processes used by run_search. 1 runs in-process."""
        return self._workers

    @workers.setter
    def workers(self, value):
        self._workers = self._positive_int(value, 'workers')

    @property
    def config_file(self):
        """Path of the JSON file consulted at construction."""
        return self._config_file

    def max_elements(self, k):
        """Get the largest n that enumerate_tables accepts for k operations."""
        try:
            return self._table_budget[k]
        except KeyError:
            return 2 if k > max(self._table_budget) else max(self._table_budget.values())

    def check_subset_scan(self, n, what='substructure scan', cap=None):
        """Raise BudgetError if a 2^n scan over subsets exceeds the cap.

        The cap defaults to subset_cap.
        """
        cap = self._subset_cap if cap is None else cap
        if n > cap:
            raise BudgetError(
                'A {} over 2^{} subsets exceeds the subset cap of n <= {}.'.format(
                    what, n, cap))

    def check_tables(self, n, k, max_n=None):
        """Raise BudgetError if (n, k) is beyond the enumeration budget."""
        limit = self.max_elements(k) if max_n is None else max_n
        if n > limit:
            raise BudgetError(
                'Enumerating tables with n={} and k={} exceeds the budget of '
                'n <= {}. Use an explicit override to go further.'.format(n, k, limit))

    def _load_config_file(self, config_file):
        """Overwrite the defaults with any values found in the config file."""
        if not os.path.isfile(config_file):
            return
        with open(config_file) as inf:
            self.update(json.load(inf))
        LOGGER.debug('Loaded budgets from %s', config_file)

    def _load_environment(self):
        """Apply environment overrides, keeping the current value of bad ones."""
        for key, env_key in _ENV_KEYS.items():
            value = os.environ.get(env_key)
            if not value:
                continue
            try:
                setattr(self, key, value)
            except (ValueError, AssertionError) as e:
                LOGGER.warning('Ignoring %s=%s and keeping %s=%s: %s',
                               env_key, value, key, getattr(self, key), e)

    def to_dict(self):
        """Get the budget values as a dictionary that update() accepts."""
        return {
            'subset_cap': self._subset_cap,
            'table_budget': dict(self._table_budget),
            'k3_exhaustive_cap': self._k3_exhaustive_cap,
            'workers': self._workers
        }

    def update(self, data):
        """Set every budget named in a dictionary like the one of to_dict()."""
        for key in ('subset_cap', 'table_budget', 'k3_exhaustive_cap', 'workers'):
            if key in data:
                setattr(self, key, data[key])

    @staticmethod
    def _positive_int(value, name):
        try:
            value = int(value)
        except (TypeError, ValueError):
            raise ValueError('{} must be an integer. Got: {}'.format(name, value))
        assert value >= 1, '{} must be greater than 0. Got: {}'.format(name, value)
        return value

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        return 'Budgets: [subset_cap: {}] [table_budget: {}] ' \
            '[k3_exhaustive_cap: {}] [workers: {}]'.format(
                self.subset_cap, self.table_budget, self.k3_exhaustive_cap,
                self.workers)


budgets = Budgets()
