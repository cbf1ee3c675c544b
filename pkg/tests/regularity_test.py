# coding=utf-8
import pytest

from po_gamma.regularity import StrongWitness, is_strong_witness, is_c2_witness, \
    upgrade_witness, regular_witness, left_regular_witness, right_regular_witness, \
    in_regular_set, is_regular, is_left_regular, is_right_regular, \
    is_completely_regular, is_regular_by_subsets, is_left_regular_by_subsets, \
    is_right_regular_by_subsets, strong_witness, is_strongly_regular, \
    is_strongly_regular_subsemigroup, witness_table
from po_gamma.errors import UsageError

NOTIONS = (is_regular, is_left_regular, is_right_regular, is_completely_regular,
           is_strongly_regular)


def test_fixture_flags(fix1, fixp, fixc, fixlz):
    """Test the five regularity notions on the fixtures."""
    for structure in (fix1, fixp, fixlz):
        assert all(notion(structure) for notion in NOTIONS)
    assert not any(notion(fixc) for notion in NOTIONS)


def test_fixc_element_zero(fixc):
    """Test that only element 1 of the constant table lacks witnesses."""
    assert strong_witness(fixc, 0) == StrongWitness(0, 0, 0, 0)
    assert strong_witness(fixc, 1) is None
    assert in_regular_set(fixc, 0) and not in_regular_set(fixc, 1)


def test_fixp_witnesses(fixp):
    """Test the lexicographically first witnesses of the two-element fixture."""
    assert strong_witness(fixp, 0) == StrongWitness(0, 0, 0, 0)
    assert strong_witness(fixp, 1) == StrongWitness(1, 1, 0, 0)
    assert regular_witness(fixp, 0) == (0, 0, 0)
    assert regular_witness(fixp, 1) == (0, 0, 1)
    assert left_regular_witness(fixp, 1) == (0, 0, 1)
    assert right_regular_witness(fixp, 1) == (0, 0, 1)


def test_witness_table(fixp):
    """Test the witness table rows of the two-element fixture."""
    table = witness_table(fixp)
    assert [row['element'] for row in table] == [0, 1]
    assert table[1]['strong'] == (1, 0, 0)
    assert table[0]['regular'] == (0, 0, 0)


def test_strong_witness_object(fixp):
    """Test StrongWitness serialization and its holds check."""
    witness = StrongWitness(1, 1, 0, 0)
    assert witness.holds(fixp)
    assert not StrongWitness(1, 0, 0, 0).holds(fixp)
    assert StrongWitness.from_dict(witness.to_dict()) == witness
    assert tuple(witness) == (1, 1, 0, 0)
    assert is_strong_witness(fixp, 1, 1, 0, 0)


def test_strong_witness_outside_subset(fixp):
    """Test that an element outside T raises UsageError."""
    with pytest.raises(UsageError):
        strong_witness(fixp, 1, 0b01)


def test_strongly_regular_subsemigroup(fixp, fixc):
    """Test the subsemigroup form of strong regularity."""
    assert is_strongly_regular_subsemigroup(fixp, 0b11)
    assert not is_strongly_regular_subsemigroup(fixp, 0b01)
    assert is_strongly_regular_subsemigroup(fixc, 0b01)
    assert not is_strongly_regular_subsemigroup(fixc, 0b11)


def test_upgrade_witness(fixp):
    """Test that y := x mu a gamma x satisfies the strengthened conditions."""
    for a in range(fixp.n):
        upgraded = upgrade_witness(fixp, strong_witness(fixp, a))
        assert is_c2_witness(fixp, a, upgraded.x, upgraded.gamma, upgraded.mu)


def _assert_upgrade_and_implication(structure):
    if not is_strongly_regular(structure):
        return
    assert is_completely_regular(structure)
    for a in range(structure.n):
        upgraded = upgrade_witness(structure, strong_witness(structure, a))
        assert upgraded.holds(structure)
        assert is_c2_witness(structure, a, upgraded.x, upgraded.gamma, upgraded.mu)


def test_upgrade_witness_sweep(small_sweep):
    """Test the witness upgrade and complete regularity of strongly regular structures."""
    for structure in small_sweep:
        _assert_upgrade_and_implication(structure)


@pytest.mark.slow
def test_upgrade_witness_full(full_sweep):
    """Test the witness upgrade and complete regularity on the n <= 3, k <= 2 sweep."""
    for structure in full_sweep:
        _assert_upgrade_and_implication(structure)


def test_subset_forms_agree(small_sweep):
    """Test that the subset forms agree with the element forms."""
    for structure in small_sweep:
        assert is_regular(structure) == is_regular_by_subsets(structure)
        assert is_left_regular(structure) == is_left_regular_by_subsets(structure)
        assert is_right_regular(structure) == is_right_regular_by_subsets(structure)
        assert is_left_regular(structure) == all(
            left_regular_witness(structure, a) is not None for a in range(structure.n))
        assert is_right_regular(structure) == all(
            right_regular_witness(structure, a) is not None for a in range(structure.n))
