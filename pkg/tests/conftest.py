# Copyright 2025 Canonical Ltd.
# See LICENSE file for licensing details.

"""Fixtures for hypertree coloring tests."""

from pathlib import Path

import pytest

CORPUS_DIR = Path(__file__).resolve().parent.parent / "corpus"


def pytest_addoption(parser):
    """Add custom command-line options to pytest.

    Args:
        parser: The pytest command-line parser.
    """
    parser.addoption(
        "--run-slow",
        action="store_true",
        default=False,
        help="Run the slow exhaustive Ramsey enumeration over 2^21 colorings",
    )


def pytest_collection_modifyitems(config, items):
    """Skip tests marked slow unless --run-slow is given.

    Args:
        config: The pytest config.
        items: The collected tests.
    """
    if config.getoption("--run-slow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --run-slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(scope="session")
def corpus_dir() -> Path:
    """Return the bundled corpus directory."""
    return CORPUS_DIR
