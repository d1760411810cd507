"""
Pytest configuration and fixtures for palinword.

This module imports all fixtures from submodules for global test use.
"""

import sys
from pathlib import Path

from .fixtures_global.basic_fixtures import (
    create_test_constraints_file,
    create_test_morphism_file,
    temp_dir,
)
from .fixtures_global.config_fixtures import clean_environ, small_budget_config
from .fixtures_global.data_fixtures import (
    diagonalisation,
    gh_prefix,
    h_prefix,
    morphisms,
    t_prefix,
)

# Add tests directory to path for absolute imports
test_dir = Path(__file__).parent
if str(test_dir) not in sys.path:
    sys.path.insert(0, str(test_dir))

# Expose all fixtures for pytest discovery
__all__ = [
    "temp_dir",
    "create_test_constraints_file",
    "create_test_morphism_file",
    "clean_environ",
    "small_budget_config",
    "diagonalisation",
    "gh_prefix",
    "h_prefix",
    "morphisms",
    "t_prefix",
]
