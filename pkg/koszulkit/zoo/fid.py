"""
Injections with colored complements: FI_d and OI_d.

A morphism ``x -> y`` has payload ``(f, delta)`` where ``f`` is an injection
``[x] -> [y]`` and ``delta`` assigns a color in ``[d]`` to each point of the complement
of the image, listed in increasing order of those points.
"""
import logging
from itertools import combinations, permutations, product

from koszulkit.category import CombMorphism, Factorization
from koszulkit.exceptions import CategorySpecException
from .helpers import Family, sorted_complement

LOG = logging.getLogger(__name__)


class ComplementColoredFamily(Family):
    """Base class of FI_d and OI_d."""

    REQUIRED_PARAMS = ["d"]
    HAS_RHO = True
    INCREASING = False

    def __init__(self, family=None, params=None):
        super(ComplementColoredFamily, self).__init__(family, params)
        self.d = self.params["d"]
        if self.d < 1:
            raise CategorySpecException("d", "must be at least 1, got {}".format(self.d))

    def _enumerate(self, x, y):
        injections = combinations if self.INCREASING else permutations
        colorings = list(product(range(1, self.d + 1), repeat=y - x))
        for f in injections(range(1, y + 1), x):
            for delta in colorings:
                yield (f, delta)

    def _identity_payload(self, x):
        return (tuple(range(1, x + 1)), ())

    def _compose_payload(self, beta, alpha):
        f1, delta1 = alpha.payload
        f2, delta2 = beta.payload
        f3 = tuple(f2[r - 1] for r in f1)
        colors = dict(zip(sorted_complement(f2, beta.target), delta2))
        for r, color in zip(sorted_complement(f1, alpha.target), delta1):
            colors[f2[r - 1]] = color
        return (f3, tuple(colors[m] for m in sorted(colors)))

    def _tensor_payload(self, a, b):
        f1, delta1 = a.payload
        f2, delta2 = b.payload
        return (f1 + tuple(v + a.target for v in f2), delta1 + delta2)

    def _rho(self, payload):
        return payload[0]

    def factorize_min(self, f):
        """
        Closed-form minimal factorization of ``f: x -> 1+y``: through ``z = x - 1`` when 1
        is in the image, otherwise through ``z = x`` with ``f1`` coloring the point 1.
        """
        x, y = f.source, f.target - 1
        images, delta = f.payload
        if 1 in images:
            m = images.index(1) + 1
            others = [r for r in range(1, x + 1) if r != m]
            f1_images = [None] * x
            f1_images[m - 1] = 1
            f2_images = [None] * (x - 1)
            for position, r in enumerate(others):
                f1_images[r - 1] = position + 2
                f2_images[position] = images[r - 1] - 1
            z = x - 1
            f1 = (tuple(f1_images), ())
            f2 = (tuple(f2_images), delta)
        else:
            z = x
            f1 = (tuple(r + 1 for r in range(1, x + 1)), delta[:1])
            f2 = (tuple(v - 1 for v in images), delta[1:])
        return Factorization(z, CombMorphism(x, 1 + z, f1), CombMorphism(z, y, f2))


class FIdFamily(ComplementColoredFamily):
    """Injections with ``d``-colored complements."""

    FAMILY = "FI_d"


class OIdFamily(ComplementColoredFamily):
    """Increasing injections with ``d``-colored complements."""

    FAMILY = "OI_d"
    INCREASING = True
