"""
Provide low-level conversions between the exact rational types used internally
and their string / list encodings.
"""
from fractions import Fraction

from six import integer_types, string_types


def to_fraction(value):
    """
    Convert an int, a Fraction or a ``"p/q"`` string into a :class:`~fractions.Fraction`.

    :param value: Value to convert
    :return: Fraction
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, integer_types):
        return Fraction(value)
    if isinstance(value, string_types):
        return from_rational_string(value)
    raise TypeError("Cannot convert {!r} to an exact rational".format(value))


def to_rational_string(value):
    """
    Convert a rational to its ``"p/q"`` string (integers keep the ``/1``).

    :param value: int or Fraction
    :return: str
    """
    value = to_fraction(value)
    return "{}/{}".format(value.numerator, value.denominator)


def from_rational_string(text):
    """
    Parse a ``"p/q"`` or ``"p"`` string.

    :param str text: String to parse
    :return: Fraction
    """
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def to_dense(vector, dim):
    """
    Convert a sparse ``{index: Fraction}`` vector into a list of length ``dim``.
    """
    out = [Fraction(0)] * dim
    for index, value in vector.items():
        out[index] = value
    return out


def vector_to_strings(vector, dim):
    """
    Dense ``"p/q"`` strings for a sparse vector; used in witnesses.
    """
    return [to_rational_string(v) for v in to_dense(vector, dim)]
