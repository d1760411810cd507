"""Global test fixtures."""
