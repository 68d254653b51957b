"""
Family base class, and helper functions for the monoidal structure and rho.
"""
import logging
import warnings

from koszulkit.category import CombCategory
from koszulkit.exceptions import CategorySpecException
from koszulkit.koszulkit_warnings import KoszulkitWarning
from koszulkit.lookup_dicts import FAMILY_NAME_LOOKUP

LOG = logging.getLogger(__name__)


class Family(CombCategory):
    """
    Base class for the zoo families.
    Checks for missing parameters, and dispatches ``Family(name, params)`` to the
    registered class for ``name``.
    """

    FAMILY = None
    REQUIRED_PARAMS = []
    OPTIONAL_PARAMS = []

    def __new__(cls, family=None, params=None):
        """
        Factory for families.
        """
        from . import FAMILY_LOOKUP

        if cls == Family:
            family_cls = FAMILY_LOOKUP.get(family)
            if family_cls is None:
                raise CategorySpecException(
                    "family", "unknown family {!r}, expected one of {}".format(family, sorted(FAMILY_LOOKUP))
                )
            return super(Family, cls).__new__(family_cls)
        return super(Family, cls).__new__(cls)

    def __init__(self, family=None, params=None):
        super(Family, self).__init__()
        self.family = family or self.FAMILY
        if params is None:
            params = {}
        self.params = params

        missing_params = [req for req in self.REQUIRED_PARAMS if params.get(req) is None]
        if missing_params:
            raise CategorySpecException(
                missing_params[0],
                "required by {}; missing:\n\t{}".format(self.family, "\n\t".join(missing_params)),
            )

        warnings.filterwarnings("always", r"^Found extra parameter.*", KoszulkitWarning)
        for param in params:
            if param not in self.REQUIRED_PARAMS and param not in self.OPTIONAL_PARAMS:
                warnings.warn(
                    "Found extra parameter while creating {}: {}. It will not be used.".format(
                        self.family, param
                    ),
                    KoszulkitWarning,
                )

    def describe(self):
        extras = ", ".join(
            "{}={}".format(k, v.describe() if hasattr(v, "describe") else v)
            for k, v in sorted(self.params.items())
            if v is not None
        )
        return "{}({})".format(self.family, extras) if extras else self.family

    def __repr__(self):
        return "{}({})".format(
            self.__class__.__name__, FAMILY_NAME_LOOKUP.get(self.family, self.family)
        )


def tensor_morphisms(c, a, b):
    """
    The monoidal product ``a (.) b`` of two morphisms of ``c``.

    :param CombCategory c: category with a monoidal structure
    :return: morphism ``a.source + b.source -> a.target + b.target``
    """
    return c.tensor(a, b)


def genetic_embed(c, a):
    """``a -> I (.) a``, the self-embedding shifting objects by one."""
    return c.genetic_embed(a)


def rho(c, a):
    """Underlying injection of ``a`` for the rho-equipped families."""
    return c.rho(a)


def complement(c, a):
    """``Delta`` of ``rho(a)``: the sorted complement of its image."""
    return c.complement(a)


def sorted_complement(f, y):
    """Sorted complement of the image of the injection tuple ``f`` in ``[y]``."""
    image = set(f)
    return tuple(r for r in range(1, y + 1) if r not in image)


def first_occurrence_standardize(values):
    """
    Relabel ``values`` by order of first occurrence.

    :return: (standardized tuple, tuple of original values in first-occurrence order)
    """
    order = []
    relabel = {}
    for v in values:
        if v not in relabel:
            order.append(v)
            relabel[v] = len(order)
    return tuple(relabel[v] for v in values), tuple(order)
