# po-gamma: Verification and Enumeration of Ordered Gamma-Semigroups (AGPL)
# This file is part of po-gamma.
#
# Copyright (c) 2026, po-gamma developers.
# You should have received a copy of the GNU Affero General Public License
# along with po-gamma; If not, see <http://www.gnu.org/licenses/>.
#
# @license AGPL-3.0-or-later <https://spdx.org/licenses/AGPL-3.0-or-later>

from po_gamma.cli import main

if __name__ == '__main__':
    main()
