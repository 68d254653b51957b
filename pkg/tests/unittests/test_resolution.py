# coding=utf-8
"""
Unit tests for projective covers, minimal resolutions and Koszul certificates
"""
from math import factorial

import pytest

from koszulkit.category import Interval
from koszulkit.exceptions import CategoryException, CheckFailedException, ModuleException, WindowException
from koszulkit.linalg import ONE, Matrix
from koszulkit.lincat import linearize
from koszulkit.modules import (
    GradedModule,
    direct_sum,
    radical,
    regular_simple,
    representable,
    shift,
    submodule,
    top,
    zero_module,
)
from koszulkit.resolution import (
    betti_table,
    equivariant_section,
    essential_check,
    koszul_certificate,
    koszul_certificate_ex,
    minimal_resolution,
    module_certificate,
    projective_cover,
    yoneda_dims,
)
from koszulkit.zoo import make_category


@pytest.fixture
def mixed(fi_3):
    """S2 in degree 1 next to C(1, -): tops at (1, 0) and (2, 1)."""
    return direct_sum(shift(regular_simple(fi_3, 2), 1), representable(fi_3, 1))


class TestProjectiveCover(object):
    @pytest.mark.parametrize(
        "x,kernel",
        [
            (0, {(1, 1): 1, (2, 2): 1, (3, 3): 1}),
            (1, {(2, 1): 2, (3, 2): 3}),
            (2, {(3, 1): 6}),
            (3, {}),
        ],
        ids=["S0", "S1", "S2", "S3"],
    )
    def test_simple_kernels(self, fi_3, x, kernel):
        cover = projective_cover(regular_simple(fi_3, x))
        assert dict(cover.kernel.dims) == kernel
        assert [s.key() for s in cover.summands] == [(x, 0, fi_3.group(x).order)]

    def test_representable_is_projective(self, fi_3):
        cover = projective_cover(representable(fi_3, 1))
        assert cover.kernel.is_zero()
        assert dict(cover.module.dims) == {(1, 0): 1, (2, 1): 2, (3, 2): 3}

    def test_two_summands(self, mixed):
        cover = projective_cover(mixed)
        assert cover.signature() == [(1, 0, 1), (2, 1, 2)]
        assert dict(cover.module.dims) == {(1, 0): 1, (2, 1): 4, (3, 2): 9}
        assert dict(cover.kernel.dims) == {(3, 2): 6}
        assert cover.to_dict()["kernel_dims"] == {(3, 2): 6}

    def test_equivariant_section(self, fi_3, mixed):
        t = top(mixed)
        assert mixed.dim(2, 1) == 4
        assert radical(mixed).dim(2, 1) == 2
        assert t.dims[(2, 1)] == 2
        section = equivariant_section(mixed, t, 2, 1)
        swap = Matrix.from_rows([[0, 1], [1, 0]])
        assert t.group_action[(2, 1)] == [swap]
        assert mixed.group_matrix(2, 1, 1) * section == section * swap
        for b in range(2):
            assert t.project(2, 1, section.column(b)) == {b: ONE}

    def test_zero_module(self, fi_3):
        cover = projective_cover(zero_module(fi_3))
        assert cover.summands == []
        assert cover.kernel.is_zero()

    def test_invalid_module(self, fi):
        l = linearize(fi, Interval(0, 2))
        bad = GradedModule(l, {(2, 1): 1}, {(2, 1): [Matrix.from_rows([[2]])]}, name="bad")
        with pytest.raises(ModuleException) as excinfo:
            projective_cover(bad)
        assert excinfo.value.witness["condition"] == "GROUP"


class TestMinimalResolution(object):
    def test_stops_at_zero(self, fi_3):
        r = minimal_resolution(regular_simple(fi_3, 0), 5)
        assert len(r.steps) == 4
        assert r.length == 3
        assert dict(r.syzygy(2).dims) == {(2, 2): 1, (3, 3): 2}
        assert dict(r.syzygy(3).dims) == {(3, 3): 1}
        assert r.syzygy(7).is_zero()
        assert r.exact()

    def test_negative_depth(self, fi_3):
        with pytest.raises(ValueError):
            minimal_resolution(regular_simple(fi_3, 0), -1)

    def test_betti_s0(self, fi):
        r = minimal_resolution(regular_simple(linearize(fi, (0, 4)), 0), 4)
        table = betti_table(r)
        for n in range(5):
            assert table.entry(n, n, n) == 1
        assert table.entry(9, 0, 0) == 0

    def test_betti_s1(self, fi_3):
        table = betti_table(minimal_resolution(regular_simple(fi_3, 1), 2))
        assert table.entry(0, 1, 0) == 1
        assert table.entry(1, 2, 1) == 2
        assert table.entry(2, 3, 2) == 3
        assert table.to_dict()[2] == {(3, 2): 3}


class TestCertificates(object):
    @pytest.mark.parametrize("x", [0, 1, 2, 3])
    def test_fi_simples(self, fi_3, x):
        report = koszul_certificate(fi_3, x, 3 - x)
        assert report.passed, report.witness
        assert len(report.steps) == 4 - x
        assert report["exact"].passed

    def test_outside(self, fi_3):
        with pytest.raises(CategoryException):
            koszul_certificate(fi_3, 4, 0)

    def test_window(self, fi_3):
        with pytest.raises(WindowException) as excinfo:
            koszul_certificate(fi_3, 1, 3)
        assert excinfo.value.hi == 3
        assert "window" in str(excinfo.value)

    def test_planted_cubic_relation(self, cubic_quotient):
        report = koszul_certificate(cubic_quotient, 0, 3)
        assert report["degree_1"].passed
        assert not report["degree_2"].passed
        assert not report["position_2"].passed
        assert report.witness["condition"] == "degree_2"
        assert report.steps[2]["dims"] == {(3, 3): 1}

    def test_ex_variant(self, fi_3, cubic_quotient):
        assert koszul_certificate_ex(fi_3, 2, 1).passed
        with pytest.raises(CheckFailedException) as excinfo:
            koszul_certificate_ex(cubic_quotient, 0, 3)
        assert excinfo.value.check_name == "koszul_certificate"

    def test_module_certificate(self, fi_3):
        rep = representable(fi_3, 1)
        assert module_certificate(rep, 2).passed
        syzygy = submodule(rep, radical(rep))
        report = module_certificate(syzygy, 1)
        assert report.passed
        assert report.details["degree"] == 1
        assert module_certificate(zero_module(fi_3), 3).passed

    def test_module_certificate_window(self, fi_3):
        with pytest.raises(WindowException):
            module_certificate(representable(fi_3, 2), 2)


class TestYoneda(object):
    def test_fi(self, fi_3):
        table = yoneda_dims(fi_3, 3)
        for x in range(4):
            for n in range(4 - x):
                assert table[(x, x + n, n)] == factorial(x + n) // factorial(n)
        assert table[(0, 1, 0)] == 0
        assert (2, 3, 2) not in table

    def test_window(self, fi_3):
        with pytest.raises(WindowException):
            yoneda_dims(fi_3, 4)

    def test_nonlinear(self, cubic_quotient):
        with pytest.raises(ModuleException) as excinfo:
            yoneda_dims(cubic_quotient, 3)
        assert excinfo.value.witness == {"step": 2, "fiber": [3, 3]}


class TestEssentialCheck(object):
    def test_prime_gamma_against_colored(self):
        primed = make_category({"family": "FI_prime_gamma", "gamma": "cyclic:2"})
        colored = make_category({"family": "FI_gamma", "gamma": "cyclic:2"})
        report = essential_check(primed, colored, Interval(0, 3))
        assert report["identical"].passed
        assert report.passed, report.witness
        assert report.details["certificates"] == {x: [True, True] for x in range(4)}
