# coding=utf-8
"""
Unit tests for the combinatorial category data model
"""
import pytest

from koszulkit.category import CombMorphism, Interval, compose_comb, enumerate_hom
from koszulkit.exceptions import CategoryException


def inj(x, y, images, colors=None):
    return CombMorphism(x, y, (tuple(images), tuple(colors or (0,) * x)))


class TestInterval(object):
    def test_objects(self):
        iv = Interval(1, 3)
        assert list(iv.objects()) == [1, 2, 3]
        assert iv.width == 2
        assert 2 in iv
        assert 4 not in iv
        assert str(iv) == "[1, 3]"

    def test_empty_rejected(self):
        with pytest.raises(CategoryException):
            Interval(3, 1)


class TestCombCategory(object):
    def test_identity_first(self, fi):
        homs = enumerate_hom(fi, 2, 2)
        assert homs[0] == fi.identity(2)
        assert len(homs) == 2

    def test_hom_below_diagonal_is_empty(self, fi):
        assert fi.hom(3, 1) == []

    def test_negative_object(self, fi):
        with pytest.raises(CategoryException):
            fi.hom(-1, 2)

    def test_index_of_foreign_morphism(self, fi):
        with pytest.raises(CategoryException):
            fi.index(inj(1, 2, [3]))
        assert not fi.contains(inj(1, 2, [3]))
        assert fi.contains(inj(1, 2, [2]))

    def test_compose(self, fi):
        alpha = inj(1, 2, [2])
        beta = inj(2, 3, [3, 1])
        assert compose_comb(fi, beta, alpha) == inj(1, 3, [1])

    def test_compose_mismatch(self, fi):
        with pytest.raises(CategoryException):
            fi.compose(inj(1, 2, [1]), inj(1, 3, [1]))

    def test_group_is_symmetric(self, fi):
        g = fi.group(3)
        assert g.order == 6
        assert not g.is_abelian()
        assert g.labels[0] == str(fi.identity(3))

    def test_unit_and_genetic_embedding(self, fi):
        assert fi.unit == fi.identity(1)
        assert fi.genetic_embed(inj(1, 2, [2])) == inj(2, 3, [1, 3])

    def test_brute_force_matches_closed_form(self, fi):
        for f in fi.hom(2, 4):
            found = fi.factorize_min(f)
            searched = fi.brute_force_factorization(f)
            assert found.z == searched.z
            assert fi.recompose(found) == f

    def test_string_form(self):
        assert str(inj(2, 3, [3, 1])) == "2->3 [3 1] [0 0]"
