"""
Checks that involve two categories, or a category built to fail.
"""
from math import factorial

import pytest

from koszulkit.category import Interval
from koszulkit.genetic import verify_crucial_lemma
from koszulkit.lincat import essential_subcategory, linearize, opposite, same_structure
from koszulkit.modules import regular_simple
from koszulkit.quadratic import yoneda_dual_comparison
from koszulkit.resolution import essential_check, koszul_certificate, projective_cover, yoneda_dims
from koszulkit.zoo import make_category


class TestEssential(object):
    @pytest.mark.parametrize("gamma", ["cyclic:2", "cyclic:3"])
    def test_prime_gamma_shares_essential_part(self, gamma):
        primed = make_category({"family": "FI_prime_gamma", "gamma": gamma})
        colored = make_category({"family": "FI_gamma", "gamma": gamma})
        report = essential_check(primed, colored, Interval(0, 3))
        assert report["identical"].passed
        assert report.passed, report.witness

    def test_distinct_families_differ(self):
        iv = Interval(0, 3)
        fi = essential_subcategory(linearize(make_category({"family": "FI"}), iv))
        oi = essential_subcategory(linearize(make_category({"family": "OI_gamma", "gamma": "trivial"}), iv))
        assert not same_structure(fi, oi)


class TestEssentialCertificates(object):
    def test_essential_fi_is_koszul(self):
        ess = essential_subcategory(linearize(make_category({"family": "FI"}), Interval(0, 4)))
        for x in ess.objects():
            assert koszul_certificate(ess, x, ess.hi - x).passed


#: Families whose opposite resolutions, Yoneda comparison and syzygy splittings run
#: on every invocation, whatever --slow says.
ALWAYS = [
    ({"family": "FI"}, Interval(0, 4)),
    ({"family": "FI_gamma", "gamma": "cyclic:2"}, Interval(0, 4)),
]


@pytest.fixture(params=ALWAYS, ids=["FI", "FI_gamma"], scope="module")
def always_lincat(request):
    spec, iv = request.param
    return linearize(make_category(spec), iv)


class TestAlwaysRun(object):
    """Comparisons kept out of the slow marker for the two smallest families"""

    def test_opposite_simples(self, always_lincat):
        op = opposite(always_lincat)
        for x in op.objects():
            report = koszul_certificate(op, x, op.hi - x)
            assert report.passed, "S{} over the opposite: {}".format(x, report.witness)

    def test_yoneda_matches_dual(self, always_lincat):
        comparison = yoneda_dual_comparison(always_lincat, always_lincat.interval.width)
        mismatched = {k: v for k, v in comparison.items() if v[0] != v[1]}
        assert not mismatched, "Ext and dual dimensions differ at {}".format(sorted(mismatched))

    @pytest.mark.parametrize("y", [0, 1, 2], ids=["S0", "S1", "S2"])
    def test_syzygy_of_simple_splits(self, always_lincat, y):
        syzygy = projective_cover(regular_simple(always_lincat, y)).kernel
        report = verify_crucial_lemma(always_lincat, syzygy, y + 1)
        assert report.passed, report.witness
        assert report.details["split_dims"] == report.details["complement_dims"]


class TestFIExt(object):
    def test_hom_counts(self):
        l = linearize(make_category({"family": "FI"}), Interval(0, 4))
        table = yoneda_dims(l, 4)
        for x in l.objects():
            for n in range(0, l.hi - x + 1):
                assert table[(x, x + n, n)] == factorial(x + n) // factorial(n), (x, n)
