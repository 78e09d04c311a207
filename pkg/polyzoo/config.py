# config.py ---
#
# Filename: config.py
#
# Commentary:
#
# Computation budgets. Defaults can be overridden by a YAML file, by the
# POLYZOO_BUDGET environment variable and finally by command line flags.
#
import os
import logging
from dataclasses import dataclass, fields, replace
from pathlib import Path

import yaml

from polyzoo.errors import BudgetExceeded

ENV_BUDGET = "POLYZOO_BUDGET"


@dataclass(frozen=True)
class Budget:
    max_nodes: int = 200_000
    max_assignments: int = 10 ** 7
    max_k: int = 64
    max_vars: int = 12
    max_width: int = 12
    max_naive_n: int = 10
    max_ryser_n: int = 24
    max_subset_edges: int = 16
    max_sachs_n: int = 8
    canonical_limit: int = 10

    def check(self, key, value, detail=""):
        """Raise BudgetExceeded if value is above the limit stored under key."""
        limit = getattr(self, key)
        if value > limit:
            raise BudgetExceeded(key, limit, detail)

    def updated(self, **overrides):
        """Returns a copy with the given (non-None) values replaced."""
        known = {f.name for f in fields(self)}
        changes = {}
        for key, value in overrides.items():
            if value is None:
                continue
            if key not in known:
                raise ValueError(f"Unknown budget key: {key}")
            if int(value) < 0:
                raise ValueError(f"Budget {key} must be nonnegative, got {value}")
            changes[key] = int(value)
        return replace(self, **changes)

    @classmethod
    def from_config(cls, config_path, base=None):
        """Loads budgets from a YAML file.

        Args:
            config_path (str): Path to a YAML file with a top-level ``budget`` mapping.
            base (Budget): Values not mentioned in the file are taken from here.

        Returns:
            Budget: The merged budget.
        """
        with open(config_path, 'r') as f:
            config = yaml.safe_load(f) or {}
        if not isinstance(config, dict):
            raise ValueError(f"Invalid budget configuration in {config_path}")
        section = config.get('budget', {}) or {}
        logging.debug(f"Budget overrides from {config_path}: {section}")
        return (base or cls()).updated(**section)

    @classmethod
    def from_env(cls, base=None, environ=None):
        """Applies the POLYZOO_BUDGET environment variable.

        The value is either the path of a YAML file understood by
        from_config, or an inline list such as ``max_nodes=1000,max_width=8``.
        """
        environ = os.environ if environ is None else environ
        base = base or cls()
        value = environ.get(ENV_BUDGET, "").strip()
        if not value:
            return base
        if Path(value).is_file():
            return cls.from_config(value, base)
        overrides = {}
        for item in value.split(','):
            if not item.strip():
                continue
            key, sep, number = item.partition('=')
            if not sep:
                raise ValueError(f"Malformed {ENV_BUDGET} entry: {item!r}")
            overrides[key.strip()] = number.strip()
        logging.debug(f"Budget overrides from {ENV_BUDGET}: {overrides}")
        return base.updated(**overrides)


DEFAULT_BUDGET = Budget()

# 
# config.py ends here
