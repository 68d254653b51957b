# coding=utf-8
"""
Unit tests for free covers, quadraticity and quadratic duals
"""
import pytest

from koszulkit.category import Interval
from koszulkit.exceptions import CategoryException, CheckFailedException
from koszulkit.koszulkit_warnings import KoszulkitWarning
from koszulkit.linalg import ONE, Matrix
from koszulkit.lincat import OppositeLinCat, linearize
from koszulkit.quadratic import (
    PathQuotientLinCat,
    dual_relations,
    free_cover,
    is_quadratic,
    is_quadratic_ex,
    quadratic_dual,
    relations_deg2,
    yoneda_dual_comparison,
)


@pytest.fixture
def fi_2(fi):
    return linearize(fi, Interval(0, 2))


class TestFreeCover(object):
    def test_shared(self, fi_3):
        assert free_cover(fi_3) is free_cover(fi_3)

    def test_dims(self, fi_3):
        cover = free_cover(fi_3)
        assert cover.dim(0, 1) == 1
        assert cover.dim(0, 2) == 2
        assert cover.dim(1, 3) == 6
        assert cover.dim(0, 3) == 6
        assert cover.dim(2, 1) == 0

    def test_pi_multiplies_paths(self, fi_2):
        cover = free_cover(fi_2)
        assert cover.pi(0, 2) == Matrix.from_rows([[1, 1]])
        assert cover.relations(0, 2).dim == 1

    def test_relations_deg2(self, fi_3):
        assert relations_deg2(fi_3, 1).dim == 3
        with pytest.raises(CategoryException):
            relations_deg2(fi_3, 2)


class TestIsQuadratic(object):
    def test_fi(self, fi_3):
        report = is_quadratic(fi_3)
        assert report.passed, report.witness
        assert "degree_3" in report

    def test_chain(self, chain):
        assert is_quadratic(chain).passed

    def test_planted_cubic_relation(self, cubic_quotient):
        report = is_quadratic(cubic_quotient)
        assert not report["degree_3"].passed
        assert report["degree_3"].witness == {"x": 0, "d": 3, "kernel_dim": 1, "generated_dim": 0}

    def test_ex_variant(self, cubic_quotient):
        with pytest.raises(CheckFailedException) as excinfo:
            is_quadratic_ex(cubic_quotient)
        assert excinfo.value.check_name == "is_quadratic"


class TestPathQuotient(object):
    def test_cubic_quotient(self, cubic_quotient):
        assert cubic_quotient.dim(0, 2) == 1
        assert cubic_quotient.dim(1, 3) == 1
        assert cubic_quotient.dim(0, 3) == 0
        assert cubic_quotient.compose(0, 1, 2, 0, 0) == {0: ONE}
        assert cubic_quotient.compose(0, 2, 3, 0, 0) == {}

    def test_no_relations(self, chain):
        free = PathQuotientLinCat(chain, {})
        assert all(free.dim(x, y) == 1 for x in range(4) for y in range(x, 4))
        assert free.describe().startswith("path quotient of")


class TestQuadraticDual(object):
    def test_fi(self, fi_2):
        dual = quadratic_dual(fi_2)
        assert isinstance(dual, OppositeLinCat)
        assert dual.quadratic
        assert dual.base.dim(0, 1) == 1
        assert dual.base.dim(0, 2) == 1
        assert dual_relations(dual)[0].dim == 1

    def test_non_quadratic_warns(self, cubic_quotient):
        with pytest.warns(KoszulkitWarning):
            dual = quadratic_dual(cubic_quotient)
        assert not dual.quadratic

    def test_yoneda_matches_dual(self, fi_3):
        comparison = yoneda_dual_comparison(fi_3, 3)
        assert comparison[(1, 2)] == (3, 3)
        for key, (yoneda, dual) in comparison.items():
            assert yoneda == dual, key
