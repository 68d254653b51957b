"""
Constructors for the example categories.

To add a family:

    1. Create a new family class deriving from :py:class:`~koszulkit.zoo.helpers.Family`
       (or one of the shared bases such as
       :py:class:`~koszulkit.zoo.fi.InjectionFamily`).
    2. Set ``FAMILY`` and ``REQUIRED_PARAMS`` as class variables.

       .. code-block:: python

            class FIGammaFamily(InjectionFamily):
                FAMILY = "FI_gamma"
                REQUIRED_PARAMS = ["gamma"]

    3. Implement ``_enumerate``, ``_identity_payload``, ``_compose_payload`` and
       ``_tensor_payload``, and override ``factorize_min`` with the family's closed-form
       procedure (the default searches all factorizations).
    4. Register the class in ``FAMILY_LOOKUP``.

Categories are then built from a spec::

    >>> c = make_category({"family": "FI_gamma", "gamma": {"cyclic": 2}})
    >>> len(c.hom(1, 2))
    4
"""
import logging
from collections import namedtuple

from six import integer_types

from koszulkit import defaults
from koszulkit.category import Interval
from koszulkit.exceptions import CategoryException, CategorySpecException, GroupException
from koszulkit.groups import FiniteGroup
from .helpers import Family, tensor_morphisms, genetic_embed, rho, complement
from .fi import FIFamily, FIGammaFamily, FIPrimeGammaFamily, OIGammaFamily
from .fid import FIdFamily, OIdFamily
from .fs import FSGammaOpFamily, OSGammaOpFamily
from .vi import VIFamily
from .conditions import factorize_min, verify_c_conditions, verify_c_conditions_ex

LOG = logging.getLogger(__name__)

FAMILY_LOOKUP = {
    "FI": FIFamily,
    "FI_gamma": FIGammaFamily,
    "FI_prime_gamma": FIPrimeGammaFamily,
    "OI_gamma": OIGammaFamily,
    "FI_d": FIdFamily,
    "OI_d": OIdFamily,
    "FS_gamma_op": FSGammaOpFamily,
    "OS_gamma_op": OSGammaOpFamily,
    "VI": VIFamily,
}

#: Families that carry the functor rho to FI and so admit a twist.
RHO_FAMILIES = ("FI", "FI_gamma", "OI_gamma", "FI_d", "OI_d")


class CategorySpec(namedtuple("CategorySpec", ["family", "gamma", "d", "q", "interval", "allow_large"])):
    """
    Validated description of a zoo category.

    ``gamma`` is present iff the family needs a color group, ``d`` iff the family is
    FI_d or OI_d, ``q`` iff the family is VI. ``interval`` is optional.
    """

    __slots__ = ()

    def __new__(cls, family, gamma=None, d=None, q=None, interval=None, allow_large=False):
        family_cls = FAMILY_LOOKUP.get(family)
        if family_cls is None:
            raise CategorySpecException(
                "family", "unknown family {!r}, expected one of {}".format(family, sorted(FAMILY_LOOKUP))
            )
        required = set(family_cls.REQUIRED_PARAMS)
        for field, value in (("gamma", gamma), ("d", d), ("q", q)):
            if field in required and value is None:
                raise CategorySpecException(field, "required by family {}".format(family))
            if field not in required and value is not None:
                raise CategorySpecException(field, "not used by family {}".format(family))
        if gamma is not None and not isinstance(gamma, FiniteGroup):
            raise CategorySpecException("gamma", "expected a FiniteGroup, got {!r}".format(gamma))
        for field, value in (("d", d), ("q", q)):
            if value is not None and (not isinstance(value, integer_types) or value < 1):
                raise CategorySpecException(field, "expected a positive integer, got {!r}".format(value))
        if q is not None and q not in defaults.GF_TABLE_PRIMES:
            raise CategorySpecException("q", "expected a prime in {}, got {}".format(defaults.GF_TABLE_PRIMES, q))
        if interval is not None:
            try:
                lo, hi = interval
                interval = Interval(int(lo), int(hi))
            except (TypeError, ValueError) as exc:
                raise CategorySpecException("interval", "expected [lo, hi]: {}".format(exc))
            except CategoryException as exc:
                raise CategorySpecException("interval", str(exc))
            if lo < family_cls.MIN_OBJECT:
                raise CategorySpecException(
                    "interval", "objects of {} start at {}".format(family, family_cls.MIN_OBJECT)
                )
        return super(CategorySpec, cls).__new__(cls, family, gamma, d, q, interval, bool(allow_large))

    @classmethod
    def from_dict(cls, data):
        """
        Parse the JSON form ``{"family": ..., "gamma": {"cyclic": n} | {"table": [[...]]},
        "d": n, "q": n, "interval": [lo, hi]}``.
        """
        if not isinstance(data, dict):
            raise CategorySpecException("spec", "expected a JSON object")
        known = {"family", "gamma", "d", "q", "interval", "allow_large"}
        extra = sorted(set(data) - known)
        if extra:
            raise CategorySpecException(extra[0], "unknown field")
        if "family" not in data:
            raise CategorySpecException("family", "missing")
        return cls(
            data["family"],
            gamma=parse_gamma(data.get("gamma")),
            d=data.get("d"),
            q=data.get("q"),
            interval=data.get("interval"),
            allow_large=data.get("allow_large", False),
        )

    def params(self):
        out = {}
        for field in ("gamma", "d", "q"):
            value = getattr(self, field)
            if value is not None:
                out[field] = value
        if self.family == "VI" and self.allow_large:
            out["allow_large"] = True
        return out


def parse_gamma(value):
    """
    Parse a color group: a :class:`FiniteGroup`, ``{"cyclic": n}``, ``{"table": [[...]]}``,
    or the strings ``"cyclic:n"`` and ``"trivial"``.
    """
    if value is None or isinstance(value, FiniteGroup):
        return value
    try:
        if isinstance(value, dict):
            if set(value) == {"cyclic"}:
                return FiniteGroup.cyclic(int(value["cyclic"]))
            if set(value) == {"table"}:
                return FiniteGroup.from_table(value["table"])
        elif value == "trivial":
            return FiniteGroup.trivial()
        elif str(value).startswith("cyclic:"):
            return FiniteGroup.cyclic(int(str(value).split(":", 1)[1]))
    except (GroupException, ValueError, TypeError) as exc:
        raise CategorySpecException("gamma", str(exc))
    raise CategorySpecException("gamma", "expected {{'cyclic': n}} or {{'table': [...]}}, got {!r}".format(value))


def make_category(spec):
    """
    Build the category described by ``spec``.

    :param spec: :class:`CategorySpec` or its dictionary form
    :return: :class:`~koszulkit.zoo.helpers.Family` instance
    :raises CategorySpecException: naming the malformed field
    """
    if isinstance(spec, dict):
        spec = CategorySpec.from_dict(spec)
    LOG.debug("Building category %s", spec)
    return Family(spec.family, spec.params())
