# coding=utf-8
# po-gamma: Verification and Enumeration of Ordered Gamma-Semigroups (AGPL)
# This file is part of po-gamma.
#
# Copyright (c) 2026, po-gamma developers.
# You should have received a copy of the GNU Affero General Public License
# along with po-gamma; If not, see <http://www.gnu.org/licenses/>.
#
# @license AGPL-3.0-or-later <https://spdx.org/licenses/AGPL-3.0-or-later>
"""Reading and writing the line-oriented ``gamma-structure v1`` text format.

A document names its elements and operations, gives one table per operation
and lists the order pairs. Example:

.. code-block:: text

    gamma-structure v1
    elements: a b
    gammas: g m
    table g:
    a b
    b a
    table m:
    b a
    a b
    order:
    a <= a
    b <= b

Everything after ``#`` on a line is a comment. Reflexive order pairs are
implied. Non-reflexive pairs are taken literally, so a missing transitive
pair is an error rather than something the parser fills in.
"""
import re
import logging

from .errors import ParseError
from .core import OrderedGammaStructure

LOGGER = logging.getLogger(__name__)

HEADER = ('gamma-structure', 'v1')
NAME = re.compile(r'^[A-Za-z0-9_]+$')
_TOKEN = re.compile(r'\S+')


class StructureDocument(object):
    """A parsed structure that keeps the names of elements and operations.

    Args:
        elements: A list of distinct element names.
        gammas: A list of distinct operation names.
        tables: A list with one table per operation. Each table is a list of
            n rows of n element indices.
        order_pairs: A list of non-reflexive (lesser, greater) index pairs.
            (Default: None).

    Properties:
        * elements
        * gammas
        * tables
        * order_pairs
        * n
        * k
    """
    __slots__ = ('_elements', '_gammas', '_tables', '_order_pairs')

    def __init__(self, elements, gammas, tables, order_pairs=None):
        self._elements = tuple(elements)
        self._gammas = tuple(gammas)
        self._tables = tuple(tuple(tuple(int(v) for v in row) for row in tab)
                             for tab in tables)
        pairs = set((int(a), int(b)) for a, b in (order_pairs or ()) if a != b)
        self._order_pairs = tuple(sorted(pairs))

    @classmethod
    def from_structure(cls, structure, elements=None, gammas=None):
        """Create a document from an OrderedGammaStructure.

        Args:
            structure: An OrderedGammaStructure.
            elements: Optional list of element names. If None, e0, e1 ...
                are used. (Default: None).
            gammas: Optional list of operation names. If None, g0, g1 ...
                are used. (Default: None).
        """
        elements = elements or ['e{}'.format(i) for i in range(structure.n)]
        gammas = gammas or ['g{}'.format(i) for i in range(structure.k)]
        return cls(elements, gammas, structure.structure.rows, structure.order.pairs())

    @property
    def elements(self):
        """Tuple of element names."""
        return self._elements

    @property
    def gammas(self):
        """Tuple of operation names."""
        return self._gammas

    @property
    def tables(self):
        """Tuple of tables of element indices."""
        return self._tables

    @property
    def order_pairs(self):
        """Sorted tuple of non-reflexive (lesser, greater) index pairs."""
        return self._order_pairs

    @property
    def n(self):
        return len(self._elements)

    @property
    def k(self):
        return len(self._gammas)

    def to_structure(self):
        """Get the OrderedGammaStructure described by this document."""
        return OrderedGammaStructure.from_tables(self._tables, self._order_pairs)

    def element_name(self, index):
        return self._elements[index]

    def gamma_name(self, index):
        return self._gammas[index]

    def to_text(self):
        """Get the canonical text of this document."""
        return format_document(self)

    def __key(self):
        return (self._elements, self._gammas, self._tables, self._order_pairs)

    def __eq__(self, other):
        return isinstance(other, StructureDocument) and self.__key() == other.__key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.__key())

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        return 'StructureDocument: [elements: {}] [gammas: {}]'.format(
            ' '.join(self._elements), ' '.join(self._gammas))


def _significant_lines(text):
    """Yield (line number, [(column, token)]) for lines with content."""
    for number, raw in enumerate(text.splitlines(), 1):
        content = raw.split('#', 1)[0]
        tokens = [(m.start() + 1, m.group()) for m in _TOKEN.finditer(content)]
        if tokens:
            yield number, tokens


def _names(number, tokens, label):
    """Read the names after an ``elements:`` or ``gammas:`` label."""
    column, first = tokens[0]
    if first != label:
        raise ParseError('Expected "{}". Got: "{}"'.format(label, first), number, column)
    names, seen = [], {}
    for column, token in tokens[1:]:
        if not NAME.match(token):
            raise ParseError('Name must use letters, digits or "_". Got: "{}"'.format(
                token), number, column)
        if token in seen:
            raise ParseError('Name "{}" is already used.'.format(token),
                             number, column, 'duplicate-name')
        seen[token] = len(names)
        names.append(token)
    if not names:
        raise ParseError('"{}" needs at least one name.'.format(label),
                         number, column, 'dimension')
    return names, seen


def _is_section(tokens):
    """Get a boolean for whether a line starts a table or the order section.

    Names never end with ":" so an element called table still reads as a row.
    """
    words = [t for _, t in tokens]
    return words == ['order:'] or \
        (len(words) == 2 and words[0] == 'table' and words[1].endswith(':'))


def _resolve(index, token, number, column, what):
    try:
        return index[token]
    except KeyError:
        raise ParseError('Unknown {} "{}".'.format(what, token),
                         number, column, 'unknown-token')


def _check_order(pairs, elements):
    """Raise a ParseError unless the listed pairs form a partial order."""
    listed = {(a, b): line for a, b, line in pairs}
    for (a, b), line in sorted(listed.items(), key=lambda item: item[1]):
        if (b, a) in listed:
            raise ParseError(
                'Order has both {0} <= {1} and {1} <= {0}.'.format(
                    elements[a], elements[b]), max(line, listed[(b, a)]), 1, 'order')
    for (a, b), line_ab in sorted(listed.items(), key=lambda item: item[1]):
        for (b2, c), line_bc in sorted(listed.items(), key=lambda item: item[1]):
            if b2 != b or c == a or (a, c) in listed:
                continue
            raise ParseError(
                'Order is not transitive: {0} <= {1} <= {2} but {0} <= {2} is not '
                'listed.'.format(elements[a], elements[b], elements[c]),
                max(line_ab, line_bc), 1, 'order')


def parse(text):
    """Parse a ``gamma-structure v1`` document.

    Args:
        text: The document text.

    Returns:
        A StructureDocument. Tables are not checked for associativity here;
        run the core validators on to_structure() for that.

    Raises:
        ParseError with the line and column of the first problem.
    """
    lines = list(_significant_lines(text))
    if not lines:
        raise ParseError('Document is empty.', 1)
    number, tokens = lines[0]
    if tuple(t for _, t in tokens) != HEADER:
        raise ParseError('Expected header "{}".'.format(' '.join(HEADER)), number,
                         tokens[0][0])
    if len(lines) < 3:
        last = lines[-1][0]
        raise ParseError('Expected "elements:" and "gammas:" lines.', last + 1)
    elements, element_index = _names(lines[1][0], lines[1][1], 'elements:')
    gammas, gamma_index = _names(lines[2][0], lines[2][1], 'gammas:')
    n = len(elements)

    tables = [None] * len(gammas)
    pairs = []
    i = 3
    while i < len(lines):
        number, tokens = lines[i]
        head = tokens[0][1]
        if head == 'table':
            if len(tokens) != 2 or not tokens[1][1].endswith(':'):
                raise ParseError('Expected "table <gamma>:".', number, tokens[0][0])
            column, token = tokens[1]
            g = _resolve(gamma_index, token[:-1], number, column, 'gamma')
            if tables[g] is not None:
                raise ParseError('Table of "{}" is given twice.'.format(token[:-1]),
                                 number, column, 'duplicate-name')
            rows = []
            for number, tokens in lines[i + 1:i + 1 + n]:
                if _is_section(tokens):
                    raise ParseError('Table of "{}" has {} rows, expected {}.'.format(
                        token[:-1], len(rows), n), number, tokens[0][0], 'dimension')
                if len(tokens) != n:
                    raise ParseError('Row has {} entries, expected {}.'.format(
                        len(tokens), n), number, tokens[0][0], 'dimension')
                rows.append([_resolve(element_index, t, number, c, 'element')
                             for c, t in tokens])
            if len(rows) != n:
                raise ParseError('Table of "{}" has {} rows, expected {}.'.format(
                    token[:-1], len(rows), n), number + 1, 1, 'dimension')
            tables[g] = rows
            i += n + 1
        elif head == 'order:' and len(tokens) == 1:
            for number, tokens in lines[i + 1:]:
                if len(tokens) != 3 or tokens[1][1] != '<=':
                    raise ParseError('Expected "<lesser> <= <greater>".', number,
                                     tokens[0][0])
                a = _resolve(element_index, tokens[0][1], number, tokens[0][0], 'element')
                b = _resolve(element_index, tokens[2][1], number, tokens[2][0], 'element')
                if a != b:
                    pairs.append((a, b, number))
            i = len(lines)
        else:
            raise ParseError('Expected "table <gamma>:" or "order:". Got: "{}"'.format(
                head), number, tokens[0][0])

    missing = [gammas[g] for g, tab in enumerate(tables) if tab is None]
    if missing:
        raise ParseError('No table given for {}.'.format(', '.join(missing)),
                         lines[-1][0], 1, 'dimension')
    _check_order(pairs, elements)
    LOGGER.debug('Parsed document with n=%d and k=%d', n, len(gammas))
    return StructureDocument(elements, gammas, tables, [(a, b) for a, b, _ in pairs])


def format_document(doc):
    """Get the canonical text of a StructureDocument.

    Every order pair is written, reflexive ones included, in row-major order.
    parse(format_document(doc)) == doc for every document.
    """
    names = doc.elements
    lines = [' '.join(HEADER),
             'elements: {}'.format(' '.join(names)),
             'gammas: {}'.format(' '.join(doc.gammas))]
    for gamma, tab in zip(doc.gammas, doc.tables):
        lines.append('table {}:'.format(gamma))
        lines.extend(' '.join(names[v] for v in row) for row in tab)
    lines.append('order:')
    pairs = set(doc.order_pairs)
    for a in range(doc.n):
        for b in range(doc.n):
            if a == b or (a, b) in pairs:
                lines.append('{} <= {}'.format(names[a], names[b]))
    return '\n'.join(lines) + '\n'


def load_document(path):
    """Read and parse a UTF-8 document file.

    Raises:
        ParseError of kind lexical at the first byte that is not UTF-8.
    """
    with open(path, 'rb') as inf:
        data = inf.read()
    try:
        text = data.decode('utf-8')
    except UnicodeDecodeError as e:
        head = data[:e.start]
        raise ParseError('Byte 0x{:02x} is not valid UTF-8.'.format(data[e.start]),
                         head.count(b'\n') + 1, e.start - head.rfind(b'\n'))
    return parse(text)
