# coding=utf-8
# po-gamma: Verification and Enumeration of Ordered Gamma-Semigroups (AGPL)
# This file is part of po-gamma.
#
# Copyright (c) 2026, po-gamma developers.
# You should have received a copy of the GNU Affero General Public License
# along with po-gamma; If not, see <http://www.gnu.org/licenses/>.
#
# @license AGPL-3.0-or-later <https://spdx.org/licenses/AGPL-3.0-or-later>
"""po-gamma: verification and enumeration of finite ordered Gamma-semigroups.

Structures are built from operation tables and an order
(``po_gamma.core``), subsets are integer bitmasks (``po_gamma.subsets``) and
the characterizations of strong regularity live in ``po_gamma.theorem``.
"""
import logging

logging.getLogger(__name__).addHandler(logging.NullHandler())
