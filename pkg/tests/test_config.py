# test_config.py ---
#
# Filename: test_config.py
#
# Commentary:
#
# Budget layering: defaults, YAML file, environment, explicit overrides.
#
import os
from unittest import TestCase

import pytest

from polyzoo.config import DEFAULT_BUDGET, ENV_BUDGET, Budget
from polyzoo.errors import BudgetExceeded
from tests.conftest import DATA_DIR

BUDGET_FILE = os.path.join(DATA_DIR, 'budget.yml')


class TestBudget(TestCase):

    def test_check(self):
        budget = Budget(max_width=3)
        budget.check('max_width', 3)
        with self.assertRaises(BudgetExceeded) as ctx:
            budget.check('max_width', 4, "width of the decomposition")
        self.assertEqual((ctx.exception.key, ctx.exception.limit), ('max_width', 3))
        self.assertIn("width of the decomposition", str(ctx.exception))

    def test_updated(self):
        budget = DEFAULT_BUDGET.updated(max_nodes=10, max_k=None)
        self.assertEqual(budget.max_nodes, 10)
        self.assertEqual(budget.max_k, DEFAULT_BUDGET.max_k, "None leaves a value untouched")
        self.assertEqual(DEFAULT_BUDGET.updated(max_width="5").max_width, 5)
        with self.assertRaises(ValueError):
            DEFAULT_BUDGET.updated(max_colors=3)
        with self.assertRaises(ValueError):
            DEFAULT_BUDGET.updated(max_nodes=-1)

    def test_from_config(self):
        budget = Budget.from_config(BUDGET_FILE)
        self.assertEqual((budget.max_nodes, budget.max_width), (500, 6))
        self.assertEqual(budget.max_k, Budget().max_k)


def test_empty_config_keeps_base(tmp_path):
    path = tmp_path / "empty.yml"
    path.write_text("")
    base = Budget(max_k=5)
    assert Budget.from_config(path, base) == base


def test_malformed_config(tmp_path):
    path = tmp_path / "list.yml"
    path.write_text("- 1\n- 2\n")
    with pytest.raises(ValueError):
        Budget.from_config(path)


def test_env_inline():
    budget = Budget.from_env(environ={ENV_BUDGET: "max_nodes=1000, max_width=8"})
    assert (budget.max_nodes, budget.max_width) == (1000, 8)
    assert Budget.from_env(environ={}) == Budget()


def test_env_names_a_file():
    budget = Budget.from_env(Budget(max_k=7), environ={ENV_BUDGET: BUDGET_FILE})
    assert (budget.max_nodes, budget.max_width, budget.max_k) == (500, 6, 7)


@pytest.mark.parametrize("value", ["max_nodes", "max_nodes=x", "colors=3"])
def test_env_errors(value):
    with pytest.raises(ValueError):
        Budget.from_env(environ={ENV_BUDGET: value})


def test_layers_apply_in_order():
    from_file = Budget.from_config(BUDGET_FILE)
    from_env = Budget.from_env(from_file, environ={ENV_BUDGET: "max_width=9"})
    final = from_env.updated(max_nodes=42)
    assert (final.max_nodes, final.max_width) == (42, 9)

#
# test_config.py ends here
