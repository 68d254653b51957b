"""
Data model for combinatorial EI categories of type A-infinity.

A :class:`CombCategory` enumerates hom-sets, composes morphisms and (when the family
has one) provides the monoidal product ``(.)`` and the functor rho to FI. Concrete
families live in :mod:`koszulkit.zoo`.

Objects are non-negative integers (positive for the surjection families); a morphism
``x -> y`` exists only for ``x <= y``.
"""
import logging
from collections import namedtuple

from .exceptions import CategoryException, check_dimension
from .groups import FiniteGroup
from .string_helpers import format_permutation

LOG = logging.getLogger(__name__)


class CombMorphism(namedtuple("CombMorphism", ["source", "target", "payload"])):
    """
    A morphism ``source -> target`` with a hashable, family-specific ``payload``.

    Payloads are tuples of ints, so sorting them gives a deterministic basis order.
    """

    __slots__ = ()

    def __str__(self):
        parts = []
        for part in self.payload:
            if isinstance(part, tuple) and part and isinstance(part[0], tuple):
                parts.append("/".join(format_permutation(row) for row in part))
            elif isinstance(part, tuple):
                parts.append(format_permutation(part))
            else:
                parts.append(str(part))
        return "{}->{} {}".format(self.source, self.target, " ".join(parts))


#: A minimal factorization ``f = (I (.) f2) o f1`` with ``f1: x -> 1+z``, ``f2: z -> y``.
Factorization = namedtuple("Factorization", ["z", "f1", "f2"])


class Interval(namedtuple("Interval", ["lo", "hi"])):
    """A finite convex set of objects ``lo..hi``."""

    __slots__ = ()

    def __new__(cls, lo, hi):
        if lo > hi:
            raise CategoryException("Interval [{}, {}] is empty".format(lo, hi))
        return super(Interval, cls).__new__(cls, lo, hi)

    @property
    def width(self):
        return self.hi - self.lo

    def objects(self):
        return range(self.lo, self.hi + 1)

    def __contains__(self, x):
        return self.lo <= x <= self.hi

    def __str__(self):
        return "[{}, {}]".format(self.lo, self.hi)


class CombCategory(object):
    """
    Base class of the combinatorial categories.

    Subclasses implement ``_enumerate(x, y)`` (payloads of ``hom(x, y)``),
    ``_identity_payload(x)`` and ``_compose_payload(beta, alpha)``; families with a
    monoidal structure implement ``_tensor_payload(a, b)``, and rho-equipped families
    ``_rho(payload)``.
    """

    family = None
    MIN_OBJECT = 0
    HAS_TENSOR = True
    HAS_RHO = False

    def __init__(self):
        self._homs = {}
        self._indices = {}
        self._groups = {}

    # ----- objects and hom-sets

    def max_object(self):
        """Largest object that may be queried, or None for no limit."""
        return None

    def check_object(self, x):
        if x < self.MIN_OBJECT:
            raise CategoryException(
                "Object {} is below the first object {} of {}".format(x, self.MIN_OBJECT, self.family)
            )
        limit = self.max_object()
        if limit is not None and x > limit:
            raise CategoryException(
                "Object {} exceeds the largest allowed object {} of {}".format(x, limit, self.family)
            )

    def check_interval(self, iv):
        self.check_object(iv.lo)
        self.check_object(iv.hi)

    def hom(self, x, y):
        """
        Sorted, duplicate-free list of morphisms ``x -> y``; the identity comes first.
        """
        self.check_object(x)
        self.check_object(y)
        if x > y:
            return []
        key = (x, y)
        if key not in self._homs:
            identity = self._identity_payload(x) if x == y else None
            payloads = sorted(set(self._enumerate(x, y)), key=lambda p: (p != identity, p))
            check_dimension("hom({}, {}) in {}".format(x, y, self.family), len(payloads))
            self._homs[key] = [CombMorphism(x, y, p) for p in payloads]
            self._indices[key] = {m.payload: i for i, m in enumerate(self._homs[key])}
            LOG.debug("%s: |hom(%s, %s)| = %s", self.family, x, y, len(payloads))
        return self._homs[key]

    def index(self, m):
        """Position of ``m`` in ``hom(m.source, m.target)``."""
        self.hom(m.source, m.target)
        try:
            return self._indices[(m.source, m.target)][m.payload]
        except KeyError:
            raise CategoryException("{} is not a morphism of {}".format(m, self.family))

    def contains(self, m):
        try:
            self.index(m)
        except CategoryException:
            return False
        return True

    def identity(self, x):
        self.check_object(x)
        return CombMorphism(x, x, self._identity_payload(x))

    def compose(self, beta, alpha):
        """
        ``beta o alpha``.

        :raises CategoryException: when ``alpha.target != beta.source``
        """
        if alpha.target != beta.source:
            raise CategoryException(
                "Cannot compose {} after {}: {} != {}".format(beta, alpha, beta.source, alpha.target)
            )
        return CombMorphism(alpha.source, beta.target, self._compose_payload(beta, alpha))

    # ----- monoidal structure

    def tensor(self, a, b):
        """The monoidal product ``a (.) b``; sources and targets add."""
        if not self.HAS_TENSOR:
            raise CategoryException("{} has no monoidal structure".format(self.family))
        return CombMorphism(a.source + b.source, a.target + b.target, self._tensor_payload(a, b))

    @property
    def unit(self):
        """The morphism ``I``: identity of object 1."""
        return self.identity(1)

    def genetic_embed(self, a):
        """``a -> I (.) a``."""
        return self.tensor(self.unit, a)

    # ----- groups

    def group(self, x):
        """``G_x = C(x, x)`` with elements indexed by position in ``hom(x, x)``."""
        if x not in self._groups:
            elements = self.hom(x, x)
            mult = [[self.index(self.compose(a, b)) for b in elements] for a in elements]
            self._groups[x] = FiniteGroup(mult, labels=[str(e) for e in elements], check=False)
        return self._groups[x]

    # ----- rho

    def rho(self, a):
        """Underlying injection of ``a`` as a tuple of images."""
        if not self.HAS_RHO:
            raise CategoryException("{} has no functor rho to FI".format(self.family))
        return self._rho(a.payload)

    def complement(self, a):
        """Sorted complement of the image of ``rho(a)`` in ``[a.target]``."""
        image = set(self.rho(a))
        return tuple(r for r in range(1, a.target + 1) if r not in image)

    # ----- factorizations

    def recompose(self, factorization):
        """``(I (.) f2) o f1``."""
        return self.compose(self.genetic_embed(factorization.f2), factorization.f1)

    def factorize_min(self, f):
        """
        Minimal factorization of ``f: x -> 1+y``. Families override this with their
        closed-form procedure; the default searches.
        """
        return self.brute_force_factorization(f)

    def brute_force_factorization(self, f, z=None):
        """
        Search for a factorization through the smallest possible ``z`` (or the given
        one); returns None when none exists.
        """
        x, y = f.source, f.target - 1
        if y < self.MIN_OBJECT:
            return None
        candidates = [z] if z is not None else [x - 1, x]
        for z_value in candidates:
            if z_value < self.MIN_OBJECT or z_value > y:
                continue
            for f2 in self.hom(z_value, y):
                lifted = self.genetic_embed(f2)
                for f1 in self.hom(x, 1 + z_value):
                    if self.compose(lifted, f1) == f:
                        return Factorization(z_value, f1, f2)
        return None

    def describe(self):
        return self.family

    def __repr__(self):
        return "{}()".format(self.__class__.__name__)


def enumerate_hom(c, x, y):
    """
    All morphisms ``x -> y`` of ``c``, identity first then by payload.

    :param CombCategory c: category
    :param int x: source
    :param int y: target
    :return: list of :class:`CombMorphism` (empty when ``x > y``)
    """
    return c.hom(x, y)


def compose_comb(c, beta, alpha):
    """
    Composite ``beta o alpha`` in ``c``.

    :raises CategoryException: on mismatched endpoints
    """
    return c.compose(beta, alpha)
