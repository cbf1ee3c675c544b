# coding=utf-8
# po-gamma: Verification and Enumeration of Ordered Gamma-Semigroups (AGPL)
# This file is part of po-gamma.
#
# Copyright (c) 2026, po-gamma developers.
# You should have received a copy of the GNU Affero General Public License
# along with po-gamma; If not, see <http://www.gnu.org/licenses/>.
#
# @license AGPL-3.0-or-later <https://spdx.org/licenses/AGPL-3.0-or-later>
"""Exceptions raised by po-gamma.

Axiom violations are never raised; they are collected in a ValidationReport.
The classes below cover malformed input, bad arguments and exhausted budgets.
"""


class PoGammaError(Exception):
    """Base class for all po-gamma errors."""


class StructureError(PoGammaError, ValueError):
    """Tables or order matrices have the wrong shape or size."""


class UsageError(PoGammaError, ValueError):
    """An argument does not make sense for the structure it is used with."""


class BudgetError(PoGammaError, RuntimeError):
    """A configured resource cap would be exceeded."""


class ParseError(PoGammaError, ValueError):
    """A structure document could not be parsed.

    Args:
        message: Text describing the problem.
        line: 1-based line number of the offending token.
        column: 1-based column number of the offending token. (Default: 1).
        kind: Short text for the category of the problem. Choose from:
            lexical, duplicate-name, dimension, unknown-token, order.
            (Default: lexical).
    """

    def __init__(self, message, line, column=1, kind='lexical'):
        self.message = message
        self.line = line
        self.column = column
        self.kind = kind
        PoGammaError.__init__(self, '{}:{}: {}'.format(line, column, message))
