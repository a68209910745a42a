"""Shared pytest configuration: --runslow gate for long acceptance runs"""
import pytest

from commands.registry import CommandRegistry
from polyring.parser import parse_poly
from polyring.ring import RingSpec


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow tests")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def xy():
    return RingSpec(("x", "y"))


@pytest.fixture
def poly(xy):
    """Parse text in the ring x,y"""
    return lambda text: parse_poly(text, xy)


@pytest.fixture
def commands():
    CommandRegistry.discover_commands()
    return CommandRegistry
