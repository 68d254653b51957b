# coding=utf-8
"""
Testcases for string helpers
"""
import mock
import pytest
from hypothesis import given, strategies

from koszulkit.string_helpers import KSK_MAX_ARG_LENGTH, format_permutation, pformat_check_args


@pytest.mark.parametrize(
    "values,ret", [((2, 1, 3), "[2 1 3]"), ((), "[]"), ([5], "[5]")], ids=["three", "empty", "list"]
)
def test_format_permutation(values, ret):
    assert format_permutation(values) == ret


@pytest.mark.parametrize(
    "testargs,expected_result",
    [
        ({"x": 3, "depth": 2}, ["depth: 2", "x: 3"]),
        ({"signs": False}, ["signs: False"]),
        ({"name": "a" * 70}, ["name: " + "a" * KSK_MAX_ARG_LENGTH + "[...] (len: 70)"]),
        (
            {"gens": list(range(40))},
            ["gens: " + str(list(range(40)))[:KSK_MAX_ARG_LENGTH] + "[...] (len: 40)"],
        ),
    ],
    ids=["sorted", "bool", "long string", "long list"],
)
def test_pformat_check_args(testargs, expected_result):
    assert pformat_check_args(testargs) == expected_result


def test_describe_is_used():
    lincat = mock.Mock()
    lincat.describe.return_value = "linearization of FI on [0, 3]"
    assert pformat_check_args({"l": lincat}) == ["l: linearization of FI on [0, 3]"]


@given(strategies.text())
def test_fuzzed_arguments(text):
    # raises if a value could not be printed
    line, = pformat_check_args({"data": text})
    assert line.startswith("data: ")
