# coding=utf-8
"""
Unit tests for the sign twist and its comparison with the quadratic dual
"""
import random

import pytest

from koszulkit.category import CombMorphism, Interval
from koszulkit.exceptions import CategoryException, CheckFailedException
from koszulkit.linalg import ONE
from koszulkit.lincat import linearize, validate
from koszulkit.modules import direct_sum, quotient, representable, submodule_generated, validate_module
from koszulkit.twist import (
    check_twist_dual_iso,
    check_twist_dual_iso_ex,
    epsilon,
    mu_module,
    permutation_sign,
    same_module_data,
    tau_module,
    twist_category,
    twist_sign,
)
from koszulkit.zoo import make_category


TWISTABLE = [{"family": "FI"}, {"family": "FI_gamma", "gamma": "cyclic:2"}, {"family": "FI_d", "d": 2}]
TWISTABLE_IDS = ["FI", "FI_Z2", "FI_2"]


def _random_module(rng, l):
    """A sum of one or two representables, sometimes divided by a cyclic submodule."""
    m = direct_sum(*[representable(l, rng.randint(l.lo, l.hi - 1)) for _ in range(rng.randint(1, 2))])
    if rng.random() < 0.5:
        return m
    y, j = rng.choice(list(m.dims))
    vector = {i: ONE * rng.randint(-2, 2) for i in range(m.dim(y, j))}
    vector[rng.randrange(m.dim(y, j))] = ONE
    return quotient(m, submodule_generated(m, [(y, j, vector)]))


@pytest.fixture
def fi_z2():
    return make_category({"family": "FI_gamma", "gamma": "cyclic:2"})


@pytest.fixture
def fs():
    return make_category({"family": "FS_gamma_op", "gamma": "trivial"})


class TestSigns(object):
    @pytest.mark.parametrize(
        "sequence,sign", [((), 1), ((1, 2, 3), 1), ((2, 1, 3), -1), ((3, 1, 2), 1), ((4, 3, 2, 1), 1)]
    )
    def test_permutation_sign(self, sequence, sign):
        assert permutation_sign(sequence) == sign

    def test_twist_sign(self, fi):
        alpha = CombMorphism(0, 1, ((), ()))
        beta = CombMorphism(1, 2, ((2,), (0,)))
        assert twist_sign(fi, beta, alpha) == -1
        assert twist_sign(fi, fi.identity(1), alpha) == 1

    def test_epsilon_on_group(self, fi):
        identity, swap = fi.hom(2, 2)
        assert epsilon(fi, identity) == 1
        assert epsilon(fi, swap) == -1

    def test_no_rho(self, fs):
        with pytest.raises(CategoryException):
            twist_sign(fs, fs.identity(1), fs.identity(1))
        with pytest.raises(CategoryException):
            twist_category(fs, Interval(1, 3))

    def test_twist_is_a_category(self, fi):
        tw = twist_category(fi, (0, 3))
        assert tw.dim(1, 3) == 3
        report = validate(tw)
        assert report.passed, report.witness


class TestModuleEquivalence(object):
    def test_round_trip(self, fi_z2):
        l = linearize(fi_z2, Interval(0, 3))
        m = representable(l, 1)
        twisted = tau_module(m)
        assert twisted.lincat.sign is not None
        assert validate_module(twisted).passed
        assert same_module_data(mu_module(twisted), m)

    @pytest.mark.parametrize("spec", TWISTABLE, ids=TWISTABLE_IDS)
    @pytest.mark.parametrize("x", [0, 1, 2, 3])
    def test_representables_both_ways(self, spec, x):
        c = make_category(spec)
        iv = Interval(0, 3)
        m = representable(linearize(c, iv), x)
        twisted = tau_module(m)
        assert validate_module(twisted).passed
        assert same_module_data(mu_module(twisted), m)

        n = representable(twist_category(c, iv), x)
        untwisted = mu_module(n)
        assert validate_module(untwisted).passed
        assert same_module_data(tau_module(untwisted), n)

    @pytest.mark.parametrize("seed", range(20))
    def test_random_modules_both_ways(self, seed):
        rng = random.Random(seed)
        spec = rng.choice(TWISTABLE)
        c = make_category(spec)
        iv = Interval(0, 3)
        for l in (linearize(c, iv), twist_category(c, iv)):
            m = _random_module(rng, l)
            if l.sign is None:
                there, back = tau_module, mu_module
            else:
                there, back = mu_module, tau_module
            image = there(m)
            assert validate_module(image).passed, (seed, spec, dict(m.dims))
            assert same_module_data(back(image), m), (seed, spec, dict(m.dims))

    def test_wrong_side(self, fi_3):
        m = representable(fi_3, 0)
        with pytest.raises(CategoryException):
            mu_module(m)
        with pytest.raises(CategoryException):
            tau_module(tau_module(m))


class TestTwistDualIso(object):
    def test_fi(self, fi):
        report = check_twist_dual_iso(fi, (0, 3))
        assert report.passed, report.witness
        assert report.details["signs"]

    def test_unsigned_fails(self, fi):
        report = check_twist_dual_iso(fi, (0, 3), signs=False)
        assert not report["relations_0"].passed
        assert report.witness["condition"] == "relations_0"

    def test_ex_variant(self, fi):
        with pytest.raises(CheckFailedException):
            check_twist_dual_iso_ex(fi, (0, 3), signs=False)

    def test_family_without_rho(self, fs):
        with pytest.raises(CategoryException):
            check_twist_dual_iso(fs, (1, 3))
