"""
Shared fixtures: small linearizations and a category with a planted cubic relation.
"""
import pytest

from koszulkit.category import Interval
from koszulkit.groups import FiniteGroup
from koszulkit.lincat import LinCat, linearize
from koszulkit.linalg import ONE
from koszulkit.quadratic import PathQuotientLinCat
from koszulkit.zoo import make_category


class ChainLinCat(LinCat):
    """Path category of the chain lo -> lo+1 -> ... -> hi: every hom is one-dimensional."""

    def __init__(self, interval):
        super(ChainLinCat, self).__init__(interval)
        self._trivial = FiniteGroup.trivial()

    def group(self, x):
        return self._trivial

    def _dim(self, x, y):
        return 1

    def _compose(self, x, y, z, j, i):
        return {0: ONE}


@pytest.fixture
def fi():
    return make_category({"family": "FI"})


@pytest.fixture
def fi_3(fi):
    return linearize(fi, (0, 3))


@pytest.fixture
def chain():
    return ChainLinCat(Interval(0, 3))


@pytest.fixture
def cubic_quotient(chain):
    """The chain with its only degree-3 path killed: quadratic in no degree but 3."""
    return PathQuotientLinCat(chain, {(0, 3): [{0: ONE}]}, name="chain mod cubic path")
