"""Shared fixtures for the pdgp test suite.

Every test starts from default settings: PDGP_* variables are removed from
the environment (the CLI's ``--cap``/``--threads`` write them there) and the
settings cache is cleared before and after the test.
"""

import os

import pytest

from apps.pdgp.core.config import get_settings
from apps.pdgp.services import graphs
from apps.pdgp.services.chords import parse_word
from apps.pdgp.services.enumeration import clear_tally_cache


def _pdgp_env() -> dict[str, str]:
    return {k: v for k, v in os.environ.items() if k.startswith("PDGP_")}


@pytest.fixture(autouse=True)
def default_settings():
    """Isolate each test from PDGP_* environment overrides."""
    saved = _pdgp_env()
    for key in saved:
        del os.environ[key]
    get_settings.cache_clear()
    yield get_settings()
    for key in _pdgp_env():
        del os.environ[key]
    os.environ.update(saved)
    get_settings.cache_clear()
    clear_tally_cache()


@pytest.fixture()
def override_env(monkeypatch):
    """Set PDGP_* variables for one test and reload the settings."""

    def _set(**values: object) -> None:
        for key, value in values.items():
            monkeypatch.setenv(key, str(value))
        get_settings.cache_clear()

    return _set


# ---------------------------------------------------------------------------
# Small graphs and diagrams
# ---------------------------------------------------------------------------
@pytest.fixture()
def k2():
    return graphs.complete_graph(2)


@pytest.fixture()
def p3():
    """Path 0-1-2."""
    return graphs.path(3)


@pytest.fixture()
def k22():
    return graphs.complete_bipartite(2, 2)


@pytest.fixture()
def abab():
    return parse_word("ABAB")
