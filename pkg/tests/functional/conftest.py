"""
Fixtures for koszulkit functional tests
"""
import logging
import sys

import pytest

from . import ACCEPTANCE, config as suite_config
from koszulkit.category import Interval
from koszulkit.lincat import linearize
from koszulkit.zoo import make_category

LOG = logging.getLogger(__name__)


def pytest_addoption(parser):
    """
    Set up some commandline options so we can specify what we want to test.
    """
    optiongroup = parser.getgroup("koszulkit", "Koszulkit test options")

    optiongroup.addoption(
        "--family",
        help="Family to run the acceptance tests on. Can be given more than once; "
        "defaults to every family.",
        choices=list(ACCEPTANCE),
        action="append",
        dest="families",
    )
    optiongroup.addoption(
        "--slow",
        help="Also run the tests marked slow (opposite categories, Yoneda comparisons).",
        action="store_true",
        default=False,
    )
    optiongroup.addoption(
        "--loglevel",
        help="Specify what level of logging to run the tests ",
        choices=["debug", "info", "warning", "error"],
        default="warning",
    )


def pytest_configure(config):
    """
    Set up the globals for this test run.
    """
    config.addinivalue_line("markers", "slow: long-running check, deselected unless --slow is given")
    if config.getoption("loglevel", None):
        logger = logging.getLogger()
        log_formatter = logging.Formatter("%(asctime)s:%(name)s:%(levelname)s: %(message)s")
        console_handler = logging.StreamHandler(sys.stdout)
        console_handler.setFormatter(log_formatter)
        logger.addHandler(console_handler)
        logger.setLevel(config.getoption("loglevel").upper())

    suite_config["families"] = config.getoption("families", None) or list(ACCEPTANCE)
    suite_config["slow"] = config.getoption("slow", False)


def pytest_collection_modifyitems(session, config, items):
    """
    Deselect tests marked with @pytest.mark.slow if --slow isn't given on cmdline.
    """
    slow = config.getoption("slow")
    for test_item in items[:]:
        if test_item.get_closest_marker("slow") and not slow:
            items.remove(test_item)


def pytest_generate_tests(metafunc):
    """
    Run every test taking ``family_name`` once per selected family.
    """
    if "family_name" in metafunc.fixturenames:
        names = suite_config["families"]
        metafunc.parametrize("family_name", names, ids=names, scope="module")


@pytest.fixture(scope="module")
def category(family_name):
    spec, _ = ACCEPTANCE[family_name]
    return make_category(spec)


@pytest.fixture(scope="module")
def interval(family_name):
    return Interval(*ACCEPTANCE[family_name][1])


@pytest.fixture(scope="module")
def lincat(category, interval):
    """
    Linearization shared by every test of a module, so its caches are too.
    """
    l = linearize(category, interval)
    LOG.info("acceptance run on %s", l.describe())
    return l
