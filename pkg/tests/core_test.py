# coding=utf-8
import pytest
import numpy as np

from po_gamma.core import GammaStructure, OrderRelation, OrderedGammaStructure, \
    validate_tables, validate_order, validate_compatibility
from po_gamma.errors import StructureError


def test_validate_tables_fixtures():
    """Test that the packaged example tables are Gamma-semigroups."""
    assert validate_tables([[[0]]], 1, 1).is_valid
    assert validate_tables([[[0, 1], [1, 0]], [[1, 0], [0, 1]]], 2, 2).is_valid
    assert validate_tables([[[0, 0], [0, 0]]], 2, 1).is_valid


def test_validate_tables_associativity():
    """Test that every non-associative triple is reported in argwhere order."""
    report = validate_tables([[[1, 1], [0, 0]]], 2, 1)
    assert not report.is_valid
    assert len(report) == 8
    assert report.locations('associativity')[0] == (0, 0, 0, 0, 0)
    assert all(v.rule == 'associativity' for v in report)


def test_validate_tables_mixed():
    """Test that two associative tables can fail mixed associativity."""
    const0 = [[0, 0], [0, 0]]
    const1 = [[1, 1], [1, 1]]
    assert validate_tables([const0], 2, 1).is_valid
    assert validate_tables([const1], 2, 1).is_valid
    report = validate_tables([const0, const1], 2, 2)
    assert not report.is_valid
    rho_omega = set(loc[:2] for loc in report.locations())
    assert rho_omega == {(0, 1), (1, 0)}


def test_validate_tables_range():
    """Test that entries outside the carrier are reported, not raised."""
    report = validate_tables([[[0, 2], [1, 0]]], 2, 1)
    assert (0, 0, 1) in report.locations('range')


def test_validate_tables_shape():
    """Test that shape problems raise StructureError."""
    with pytest.raises(StructureError):
        validate_tables([[[0, 1], [1]]], 2, 1)
    with pytest.raises(StructureError):
        validate_tables([[[0, 1], [1, 0]]], 3, 1)
    with pytest.raises(StructureError):
        validate_tables([[[0, 1], [1, 0]]], 2, 2)
    with pytest.raises(StructureError):
        GammaStructure([[0, 1], [1, 0]])


def test_validate_order():
    """Test reflexivity, antisymmetry and transitivity violations."""
    assert validate_order(np.eye(3, dtype=bool), 3).is_valid
    leq = [[True, True], [True, True]]
    assert validate_order(leq, 2).locations('antisymmetry') == [(0, 1)]
    leq = [[False, False], [False, True]]
    assert validate_order(leq, 2).locations('reflexivity') == [(0,)]
    leq = [[True, True, False], [False, True, True], [False, False, True]]
    assert validate_order(leq, 3).locations('transitivity') == [(0, 1, 2)]


def test_validate_compatibility(fixc, fixlz):
    """Test compatibility on the constant and left-zero fixtures."""
    chain = OrderRelation.from_pairs(2, [(0, 1)])
    reverse = OrderRelation.from_pairs(2, [(1, 0)])
    assert validate_compatibility(fixc.structure, chain).is_valid
    for order in (OrderRelation.equality(2), chain, reverse):
        assert validate_compatibility(fixlz.structure, order).is_valid


def test_validate_compatibility_failure():
    """Test that a non-monotone table is reported at its only order pair."""
    right_zero = GammaStructure([[[0, 1], [0, 1]]])
    swap = GammaStructure([[[1, 0], [0, 1]]])
    report = validate_compatibility(swap, OrderRelation.from_pairs(2, [(0, 1)]))
    assert not report.is_valid
    assert all(loc[:2] == (0, 1) for loc in report.locations())
    assert validate_compatibility(
        right_zero, OrderRelation.from_pairs(2, [(1, 0)])).is_valid


def test_order_relation_sets():
    """Test down sets, up sets and pairs of a chain."""
    order = OrderRelation.from_pairs(3, [(0, 1), (0, 2), (1, 2)])
    assert order.down_sets == (0b001, 0b011, 0b111)
    assert order.up_sets == (0b111, 0b110, 0b100)
    assert order.leq(0, 2) and not order.leq(2, 0)
    assert order.pairs() == [(0, 1), (0, 2), (1, 2)]
    assert OrderRelation.from_dict(order.to_dict()) == order


def test_ordered_structure(fixp):
    """Test the properties and serialization of an ordered structure."""
    assert fixp.n == 2 and fixp.k == 2
    assert fixp.full == 0b11
    assert fixp.product(0, 0, 1) == 1
    assert fixp.product(1, 0, 0) == 1
    assert fixp.is_valid
    assert [r.subject for r in fixp.validate()] == ['tables', 'order', 'compatibility']
    assert OrderedGammaStructure.from_dict(fixp.to_dict()) == fixp
    assert hash(OrderedGammaStructure.from_dict(fixp.to_dict())) == hash(fixp)


def test_ordered_structure_invalid_order():
    """Test that compatibility is skipped when the order is not a partial order."""
    structure = GammaStructure([[[0, 0], [0, 0]]])
    order = OrderRelation([[True, True], [True, True]])
    reports = OrderedGammaStructure(structure, order).validate()
    assert len(reports) == 2
    assert not reports[1].is_valid


def test_ordered_structure_size_mismatch():
    """Test that an order of the wrong size raises StructureError."""
    with pytest.raises(StructureError):
        OrderedGammaStructure(GammaStructure([[[0]]]), OrderRelation.equality(2))


def test_tables_read_only(fixp):
    """Test that the table array cannot be changed in place."""
    with pytest.raises(ValueError):
        fixp.structure.tables[0, 0, 0] = 1


def test_validation_idempotent(small_sweep):
    """Test that validating a valid structure again gives empty reports."""
    for structure in small_sweep:
        for _ in range(2):
            reports = structure.validate()
            assert [len(r) for r in reports] == [0, 0, 0]
        n, k = structure.n, structure.k
        assert len(validate_tables(structure.structure.tables, n, k)) == 0
        assert len(validate_order(structure.order.matrix, n)) == 0
        assert len(validate_compatibility(structure.structure, structure.order)) == 0
