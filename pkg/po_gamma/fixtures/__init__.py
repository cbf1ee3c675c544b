# coding=utf-8
# po-gamma: Verification and Enumeration of Ordered Gamma-Semigroups (AGPL)
# This file is part of po-gamma.
#
# Copyright (c) 2026, po-gamma developers.
# You should have received a copy of the GNU Affero General Public License
# along with po-gamma; If not, see <http://www.gnu.org/licenses/>.
#
# @license AGPL-3.0-or-later <https://spdx.org/licenses/AGPL-3.0-or-later>
"""Small structures shipped with po-gamma as gamma-structure v1 documents.

* fix1: the one-element structure.
* fixp: two elements a, b with operations g (a xor-like table) and m (its
  complement), strongly regular under the equality order.
* fixc: the constant multiplication x g y = 0 on two elements.
* fixlz: the left-zero multiplication x g y = x with the chain 0 <= 1.
"""
import os

from ..errors import UsageError
from ..document import load_document

FIXTURES = ('fix1', 'fixp', 'fixc', 'fixlz')


def fixture_path(name):
    """Get the path of a packaged fixture by name."""
    name = name.lower().replace('-', '')
    if name not in FIXTURES:
        raise UsageError('Fixture "{}" is not recognized. Choose from: {}'.format(
            name, ', '.join(FIXTURES)))
    return os.path.join(os.path.dirname(__file__), '{}.gps'.format(name))


def load_fixture(name):
    """Get the StructureDocument of a packaged fixture."""
    return load_document(fixture_path(name))
