# coding=utf-8
import json
import logging

import pytest

from po_gamma.config import Budgets
from po_gamma.errors import BudgetError


def test_defaults(tmp_path):
    """Test the default budgets when no config file exists."""
    budgets = Budgets(str(tmp_path / 'missing.json'))
    assert budgets.subset_cap == 16
    assert budgets.table_budget == {1: 4, 2: 3}
    assert budgets.k3_exhaustive_cap == 4
    assert budgets.workers == 1
    assert budgets.max_elements(1) == 4
    assert budgets.max_elements(3) == 2


def test_config_file(tmp_path):
    """Test that a config file overrides the defaults."""
    path = tmp_path / 'config.json'
    path.write_text(json.dumps({'subset_cap': 8, 'table_budget': {'1': 5}}))
    budgets = Budgets(str(path))
    assert budgets.subset_cap == 8
    assert budgets.table_budget == {1: 5}
    assert budgets.config_file == str(path)


def test_environment(tmp_path, monkeypatch):
    """Test that environment variables take precedence over the file."""
    path = tmp_path / 'config.json'
    path.write_text(json.dumps({'workers': 2}))
    monkeypatch.setenv('PO_GAMMA_WORKERS', '3')
    assert Budgets(str(path)).workers == 3


def test_setters(tmp_path):
    """Test that setters validate their input."""
    budgets = Budgets(str(tmp_path / 'missing.json'))
    with pytest.raises(ValueError):
        budgets.workers = 'many'
    with pytest.raises(AssertionError):
        budgets.subset_cap = 0


def test_checks(tmp_path):
    """Test the budget checks."""
    budgets = Budgets(str(tmp_path / 'missing.json'))
    budgets.check_subset_scan(16)
    with pytest.raises(BudgetError):
        budgets.check_subset_scan(17)
    budgets.check_tables(3, 2)
    with pytest.raises(BudgetError):
        budgets.check_tables(4, 2)
    budgets.check_tables(4, 2, max_n=4)


def test_bad_environment_keeps_default(tmp_path, monkeypatch, caplog):
    """Test that a bad environment value logs a warning instead of raising."""
    monkeypatch.setenv('PO_GAMMA_WORKERS', '0')
    monkeypatch.setenv('PO_GAMMA_SUBSET_CAP', 'lots')
    with caplog.at_level(logging.WARNING, logger='po_gamma.config'):
        budgets = Budgets(str(tmp_path / 'missing.json'))
    assert budgets.workers == 1
    assert budgets.subset_cap == 16
    assert 'PO_GAMMA_WORKERS' in caplog.text
    assert 'PO_GAMMA_SUBSET_CAP' in caplog.text


def test_to_dict_update(tmp_path):
    """Test that update() restores the values of to_dict()."""
    budgets = Budgets(str(tmp_path / 'missing.json'))
    other = Budgets(str(tmp_path / 'missing.json'))
    other.update({'subset_cap': 5, 'table_budget': {1: 3}, 'workers': 2})
    assert other.to_dict() == {'subset_cap': 5, 'table_budget': {1: 3},
                               'k3_exhaustive_cap': 4, 'workers': 2}
    other.update(budgets.to_dict())
    assert other.to_dict() == budgets.to_dict()
