# coding=utf-8
"""
Unit tests for rational conversions
"""
from fractions import Fraction

import pytest
from hypothesis import given, strategies

from koszulkit.conversions import (
    from_rational_string,
    to_dense,
    to_fraction,
    to_rational_string,
    vector_to_strings,
)


@pytest.mark.parametrize(
    "value,ret",
    [(3, Fraction(3)), (Fraction(1, 2), Fraction(1, 2)), ("3/4", Fraction(3, 4)), (" -3/6 ", Fraction(-1, 2))],
    ids=["int", "fraction", "string", "unreduced string"],
)
def test_to_fraction(value, ret):
    assert to_fraction(value) == ret


@pytest.mark.parametrize("value", [1.5, None, [1]], ids=["float", "none", "list"])
def test_to_fraction_rejects(value):
    with pytest.raises(TypeError):
        to_fraction(value)


def test_integers_keep_denominator():
    assert to_rational_string(2) == "2/1"
    assert to_rational_string(Fraction(-2, 4)) == "-1/2"


def test_bad_rational_string():
    with pytest.raises(ValueError):
        from_rational_string("one/2")


@given(strategies.fractions())
def test_rational_strings(value):
    assert from_rational_string(to_rational_string(value)) == value


def test_dense_and_sparse():
    assert to_dense({1: Fraction(2)}, 3) == [0, 2, 0]
    assert vector_to_strings({1: Fraction(1, 2)}, 3) == ["0/1", "1/2", "0/1"]
