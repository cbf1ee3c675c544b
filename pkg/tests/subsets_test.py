# coding=utf-8
import itertools

import pytest
from hypothesis import given, settings, strategies as st

from po_gamma.subsets import full_mask, singleton, mask_of, elements, is_subset, \
    product, product_gamma, down_closure, up_closure, chain_product, principal_set, \
    PRINCIPAL_PATTERNS
from po_gamma.errors import UsageError


def test_mask_helpers():
    """Test conversions between masks and element lists."""
    assert full_mask(3) == 0b111
    assert singleton(2) == 0b100
    assert mask_of([0, 2]) == 0b101
    assert elements(0b101) == [0, 2]
    assert elements(0) == []
    assert is_subset(0b001, 0b011)
    assert not is_subset(0b100, 0b011)


def test_product_fixp(fixp):
    """Test single operation and Gamma products on the two-element fixture."""
    a, b = singleton(0), singleton(1)
    assert product(fixp, a, 0, a) == a
    assert product(fixp, a | b, 1, a | b) == a | b
    assert product_gamma(fixp, a, a) == a | b
    assert product(fixp, 0, 0, a | b) == 0


def test_product_bad_gamma(fixp):
    """Test that an operation index outside Gamma raises UsageError."""
    with pytest.raises(UsageError):
        product(fixp, 1, 2, 1)


def test_product_constant(fixc):
    """Test that the constant table collapses every product."""
    assert product_gamma(fixc, 0b11, 0b11) == 0b01


def test_closures(fixlz):
    """Test downward and upward closures on the chain 0 <= 1."""
    assert down_closure(fixlz, 0b10) == 0b11
    assert down_closure(fixlz, 0b01) == 0b01
    assert up_closure(fixlz, 0b01) == 0b11
    assert up_closure(fixlz, 0) == 0


def test_principal_sets(fix1, fixp, fixc):
    """Test the principal subsets of the fixtures."""
    for pattern in PRINCIPAL_PATTERNS:
        assert principal_set(fix1, pattern, 0) == 0b1
    assert principal_set(fixp, '(MGaGM]', 0) == 0b11
    assert principal_set(fixp, u'(MΓaΓM]', 1) == 0b11
    assert principal_set(fixc, '(MGaGM]', 1) == 0b01


def test_principal_set_chain_order(fixc_chain):
    """Test that 0 <= 1 adds nothing to (M Gamma 1 Gamma M] of the constant table."""
    assert principal_set(fixc_chain, '(MGaGM]', 1) == 0b01


def test_principal_set_errors(fixp):
    """Test unknown patterns and elements."""
    with pytest.raises(UsageError):
        principal_set(fixp, '(MGM]', 0)
    with pytest.raises(UsageError):
        principal_set(fixp, '(MGa]', 2)


def test_chain_product(chain3):
    """Test that a multi-factor product matches nested products."""
    factors = [0b110, 0b111, 0b100]
    expected = product_gamma(chain3, product_gamma(chain3, 0b110, 0b111), 0b100)
    assert chain_product(chain3, factors) == expected
    assert chain_product(chain3, [0b010]) == 0b010


def _assert_closure_identities(structure, A, B, C):
    down = lambda H: down_closure(structure, H)
    up = lambda H: up_closure(structure, H)
    p = lambda X, Y: product_gamma(structure, X, Y)
    M = structure.full
    assert down(M) == M
    assert is_subset(A, down(A)) and is_subset(A, up(A))
    assert down(down(A)) == down(A)
    assert up(up(A)) == up(A)
    assert down(A | B) == down(A) | down(B)
    assert up(A | B) == up(A) | up(B)
    assert is_subset(down(A & B), down(A))
    assert is_subset(p(A & B, C), p(A, C))
    assert is_subset(p(C, A & B), p(C, A))
    assert is_subset(p(down(A), down(B)), down(p(A, B)))
    closed = down(p(A, B))
    assert down(p(down(A), down(B))) == closed
    assert down(p(down(A), B)) == closed
    assert down(p(A, down(B))) == closed
    assert p(A | B, C) == p(A, C) | p(B, C)
    assert p(A, B | C) == p(A, B) | p(A, C)
    assert p(p(A, B), C) == p(A, p(B, C))


@settings(max_examples=1000, deadline=None)
@given(data=st.data())
def test_closure_identities(small_sweep, data):
    """Test the closure and product identities on random structures and masks."""
    structure = data.draw(st.sampled_from(small_sweep))
    masks = st.integers(min_value=0, max_value=structure.full)
    _assert_closure_identities(
        structure, data.draw(masks), data.draw(masks), data.draw(masks))


@pytest.mark.slow
def test_closure_identities_three_elements(full_sweep):
    """Test the identities on every mask triple of 60 structures with n = 3, k = 2."""
    pool = [s for s in full_sweep if (s.n, s.k) == (3, 2)]
    sample = pool[::len(pool) // 60][:60]
    assert len(sample) == 60
    for structure in sample:
        for A, B, C in itertools.product(range(8), repeat=3):
            _assert_closure_identities(structure, A, B, C)
