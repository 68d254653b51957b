# coding=utf-8
"""
Unit tests for truncated graded linear categories
"""
from fractions import Fraction

import mock
import pytest

from koszulkit import defaults
from koszulkit.category import Interval
from koszulkit.exceptions import CategoryException, CheckFailedException
from koszulkit.lincat import (
    CombinatorialLinCat,
    essential_subcategory,
    linearize,
    opposite,
    same_structure,
    structure_constants,
    validate,
    validate_ex,
)
from koszulkit.linalg import ONE
from koszulkit.zoo import make_category


class ScaledLinCat(CombinatorialLinCat):
    """FI with one structure constant doubled."""

    def _compose(self, x, y, z, j, i):
        result = super(ScaledLinCat, self)._compose(x, y, z, j, i)
        if (x, y, z, j, i) == (0, 1, 2, 0, 0):
            return {k: 2 * v for k, v in result.items()}
        return result


class FlatLinCat(CombinatorialLinCat):
    """Puts a degree-0 basis element into hom(0, 1)."""

    def degrees(self, x, y):
        degrees = super(FlatLinCat, self).degrees(x, y)
        if (x, y) == (0, 1):
            return [0] * len(degrees)
        return degrees


class ShortcutLinCat(CombinatorialLinCat):
    """Gives hom(0, 2) degree 1."""

    def degrees(self, x, y):
        degrees = super(ShortcutLinCat, self).degrees(x, y)
        if (x, y) == (0, 2):
            return [1] * len(degrees)
        return degrees


class TestLinearize(object):
    def test_dims_and_degrees(self, fi_3):
        assert fi_3.dim(1, 3) == 3
        assert fi_3.dim(3, 1) == 0
        assert fi_3.dim(2, 2) == 2
        assert fi_3.degrees(1, 3) == [2] * 3
        assert fi_3.labels(0, 1) == ["0->1 [] []"]

    def test_group_composition(self, fi_3):
        group = fi_3.group(2)
        assert fi_3.compose(2, 2, 2, 1, 1) == {group.mult[1][1]: ONE}

    def test_composition_constants(self, fi_3):
        c = fi_3.category
        beta = c.hom(1, 2)[1]
        alpha = c.hom(0, 1)[0]
        k = c.index(c.compose(beta, alpha))
        assert fi_3.compose(0, 1, 2, 1, 0) == {k: Fraction(1)}

    def test_interval_outside_category(self):
        vi = make_category({"family": "VI", "q": 2})
        with pytest.raises(CategoryException):
            linearize(vi, (0, 4))

    def test_arrow_generators(self, fi_3):
        assert fi_3.arrow_generators(0) == [0]
        gens, expression = fi_3.arrow_data(1)
        assert gens == [0]
        assert sorted(expression) == [0, 1]
        for a, terms in expression.items():
            total = {}
            for coeff, g, r in terms:
                for k, v in fi_3.compose(1, 2, 2, g, gens[r]).items():
                    total[k] = total.get(k, 0) + coeff * v
            assert {k: v for k, v in total.items() if v} == {a: ONE}

    @pytest.mark.parametrize("method", ["factor_last", "factor_first"])
    def test_factorizations(self, fi_3, method):
        for k in range(fi_3.dim(0, 3)):
            if method == "factor_last":
                a, v = fi_3.factor_last(0, 3, k)
                product = fi_3.compose_vectors(0, 2, 3, {a: ONE}, v)
            else:
                v, a = fi_3.factor_first(0, 3, k)
                product = fi_3.compose_vectors(0, 1, 3, v, {a: ONE})
            assert product == {k: ONE}


class TestTruncation(object):
    def test_truncated(self, fi_3):
        sub = fi_3.truncated(1, 2)
        assert sub.interval == Interval(1, 2)
        assert sub.dim(1, 2) == fi_3.dim(1, 2)
        assert sub.category is fi_3.category
        assert sub is fi_3.truncated(1, 2)
        assert fi_3.truncated(0, 3) is fi_3

    def test_unknown_attributes_stay_local(self, fi_3):
        sub = fi_3.truncated(1, 2)
        with pytest.raises(AttributeError):
            sub.not_an_attribute

    def test_outside(self, fi_3):
        with pytest.raises(CategoryException):
            fi_3.truncated(0, 4)


class TestDerivedCategories(object):
    def test_opposite(self, fi_3):
        op = opposite(fi_3)
        assert op.dim(0, 1) == fi_3.dim(2, 3) == 6
        assert op.dim(0, 3) == 1
        assert op.group(1).order == 2
        assert opposite(op) is fi_3
        assert op.compose(0, 1, 2, 0, 1) == fi_3.compose(1, 2, 3, 1, 0)

    def test_opposite_validates(self, fi_3):
        report = validate(opposite(fi_3))
        assert report.passed, report.witness

    def test_essential(self, fi_3):
        ess = essential_subcategory(fi_3)
        assert essential_subcategory(ess) is ess
        assert ess.dim(3, 3) == 1
        assert ess.dim(1, 3) == 3
        assert ess.compose(1, 1, 3, 0, 0) == {0: ONE}
        assert validate(ess).passed

    def test_essential_prime_gamma(self):
        iv = Interval(0, 3)
        primed = linearize(make_category({"family": "FI_prime_gamma", "gamma": "cyclic:2"}), iv)
        colored = linearize(make_category({"family": "FI_gamma", "gamma": "cyclic:2"}), iv)
        assert not same_structure(primed, colored)
        assert same_structure(essential_subcategory(primed), essential_subcategory(colored))

    def test_structure_constants(self, fi):
        interval, dims, degrees, constants = structure_constants(linearize(fi, (0, 1)))
        assert interval == (0, 1)
        assert dims == {(0, 0): 1, (0, 1): 1, (1, 1): 1}
        assert degrees[(0, 1)] == (1,)
        assert constants[(0, 0, 1, 0, 0)] == ((0, ONE),)


class TestValidate(object):
    @pytest.mark.parametrize(
        "spec,iv",
        [
            ({"family": "FI"}, (0, 3)),
            ({"family": "FI_gamma", "gamma": "cyclic:2"}, (0, 2)),
            ({"family": "OI_d", "d": 2}, (0, 3)),
            ({"family": "OS_gamma_op", "gamma": "trivial"}, (1, 4)),
            ({"family": "VI", "q": 2}, (0, 2)),
        ],
        ids=["FI", "FI_Z2", "OI_2", "OS", "VI_2"],
    )
    def test_families_pass(self, spec, iv):
        report = validate(linearize(make_category(spec), iv))
        assert report.passed, report.witness
        assert not report.details["sampled"]
        for name in ("P1", "P4", "P5", "P6", "ASSOC", "E1", "E4"):
            assert report[name].passed

    def test_sampled_associativity(self, fi_3):
        with mock.patch.object(defaults, "ASSOCIATIVITY_LIMIT", 50):
            report = validate(fi_3)
        assert report.details["sampled"]
        assert report.details["associativity_triples"] > 50
        assert report.passed

    def test_planted_constant(self, fi):
        report = validate(ScaledLinCat(fi, Interval(0, 2)))
        assert not report.passed
        assert not report["ASSOC"].passed
        assert report.witness["condition"] == "ASSOC"

    def test_planted_degree(self, fi):
        report = validate(FlatLinCat(fi, Interval(0, 2)))
        assert not report["P3"].passed
        assert report["P3"].witness == {"hom": [0, 1], "basis": 0}

    def test_planted_long_arrow(self, fi):
        report = validate(ShortcutLinCat(fi, Interval(0, 3)))
        assert not report["P5"].passed
        assert report["P5"].witness == {"hom": [0, 2], "degree": 1}
        assert report["P3"].passed

    def test_ex_variant(self, fi, fi_3):
        assert validate_ex(fi_3).passed
        with pytest.raises(CheckFailedException) as excinfo:
            validate_ex(ScaledLinCat(fi, Interval(0, 2)))
        assert excinfo.value.check_name == "validate"
        assert "ASSOC" in str(excinfo.value)
