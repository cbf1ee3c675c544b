# coding=utf-8
import pytest

from po_gamma.document import StructureDocument, parse, format_document, \
    load_document
from po_gamma.fixtures import FIXTURES, fixture_path, load_fixture
from po_gamma.core import OrderedGammaStructure
from po_gamma.errors import ParseError, UsageError

FIXP_TEXT = """gamma-structure v1
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
"""


def _error(text):
    with pytest.raises(ParseError) as info:
        parse(text)
    return info.value


def test_parse_fixp(fixp):
    """Test that the two-element document parses to its structure."""
    doc = parse(FIXP_TEXT)
    assert doc.elements == ('a', 'b')
    assert doc.gammas == ('g', 'm')
    assert doc.order_pairs == ()
    assert doc.to_structure() == fixp


def test_parse_comments_and_blank_lines():
    """Test that comments and blank lines are ignored."""
    text = '# header comment\n\n' + FIXP_TEXT.replace('table g:', 'table g:   # first')
    assert parse(text) == parse(FIXP_TEXT)


def test_parse_implied_reflexive_pairs(fixlz):
    """Test that reflexive pairs may be omitted."""
    text = 'gamma-structure v1\nelements: 0 1\ngammas: g\ntable g:\n0 0\n1 1\n' \
        'order:\n0 <= 1\n'
    doc = parse(text)
    assert doc.order_pairs == ((0, 1),)
    assert doc.to_structure() == fixlz


def test_parse_unknown_token():
    """Test that a table entry outside the elements is reported at its line."""
    error = _error(FIXP_TEXT.replace('b a\ntable m:', 'c a\ntable m:'))
    assert error.kind == 'unknown-token'
    assert (error.line, error.column) == (6, 1)
    assert str(error).startswith('6:1: ')


def test_parse_unknown_gamma():
    """Test that a table for an undeclared operation is an unknown token."""
    error = _error(FIXP_TEXT.replace('table m:', 'table q:'))
    assert error.kind == 'unknown-token'
    assert error.line == 7


def test_parse_duplicate_names():
    """Test duplicate element names and repeated tables."""
    assert _error(FIXP_TEXT.replace('elements: a b', 'elements: a a')).kind == \
        'duplicate-name'
    assert _error(FIXP_TEXT.replace('table m:', 'table g:')).kind == 'duplicate-name'


def test_parse_dimension_errors():
    """Test short rows, missing rows and missing tables."""
    error = _error(FIXP_TEXT.replace('a b\nb a\ntable m', 'a b\nb\ntable m'))
    assert (error.kind, error.line) == ('dimension', 6)
    error = _error(FIXP_TEXT.replace('a b\nb a\ntable m', 'a b\ntable m'))
    assert error.kind == 'dimension'
    text = 'gamma-structure v1\nelements: a b\ngammas: g m\ntable g:\na b\nb a\n'
    assert _error(text).kind == 'dimension'


def test_parse_lexical_errors():
    """Test a bad header, a bad name and a malformed order line."""
    assert _error('gamma-structure v2\n').line == 1
    assert _error(FIXP_TEXT.replace('elements: a b', 'elements: a b!')).column == 13
    error = _error(FIXP_TEXT.replace('a <= a', 'a < a'))
    assert (error.kind, error.line) == ('lexical', 11)
    assert _error('').kind == 'lexical'


def test_parse_order_errors():
    """Test antisymmetry and missing transitive pairs."""
    base = 'gamma-structure v1\nelements: x y z\ngammas: g\ntable g:\n' \
        'x x x\nx x x\nx x x\norder:\n'
    error = _error(base + 'x <= y\ny <= z\n')
    assert error.kind == 'order'
    assert 'x <= y <= z' in error.message
    assert error.line == 10
    error = _error(base + 'x <= y\ny <= x\n')
    assert error.kind == 'order'
    parse(base + 'x <= y\ny <= z\nx <= z\n')


def test_format_round_trip(fix1, fixp, fixc):
    """Test that parsing the canonical text gives back the document."""
    for structure in (fix1, fixp, fixc):
        doc = StructureDocument.from_structure(structure)
        text = format_document(doc)
        assert parse(text) == doc
        assert format_document(parse(text)) == text
    doc = parse(FIXP_TEXT)
    assert format_document(doc) == FIXP_TEXT


def test_from_structure_names(fixlz):
    """Test default and explicit names of a document built from a structure."""
    doc = StructureDocument.from_structure(fixlz)
    assert doc.elements == ('e0', 'e1')
    assert doc.gammas == ('g0',)
    named = StructureDocument.from_structure(fixlz, ['lo', 'hi'], ['left'])
    assert 'lo <= hi' in named.to_text()
    assert OrderedGammaStructure.from_dict(named.to_structure().to_dict()) == fixlz


def test_fixtures(fix1, fixp, fixc, fixlz):
    """Test that the packaged fixtures load to the test fixtures."""
    loaded = {name: load_fixture(name).to_structure() for name in FIXTURES}
    assert loaded == {'fix1': fix1, 'fixp': fixp, 'fixc': fixc, 'fixlz': fixlz}
    assert load_fixture('FIX-P').elements == ('a', 'b')
    assert fixture_path('fixp').endswith('fixp.gps')
    with pytest.raises(UsageError):
        fixture_path('fixq')


def test_element_named_table(fixc, fixlz):
    """Test that an element called table round-trips through the text format."""
    for structure in (fixc, fixlz):
        doc = StructureDocument.from_structure(structure, ['table', 'x'], ['g'])
        assert parse(format_document(doc)) == doc
    text = format_document(StructureDocument.from_structure(fixc, ['table', 'x']))
    assert 'table table' in text
    error = _error(text.replace('table table\ntable table\n', 'table table\n'))
    assert error.kind == 'dimension'


def test_load_document(tmp_path):
    """Test loading UTF-8 files and locating bytes that are not UTF-8."""
    path = tmp_path / 'fixp.gps'
    path.write_bytes(FIXP_TEXT.encode('utf-8'))
    assert load_document(str(path)) == parse(FIXP_TEXT)
    path.write_bytes(b'gamma-structure v1\nelements: a \xe9\n')
    with pytest.raises(ParseError) as info:
        load_document(str(path))
    assert (info.value.kind, info.value.line, info.value.column) == ('lexical', 2, 13)
