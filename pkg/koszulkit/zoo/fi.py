"""
Colored injections: FI, FI_G, FI'_G and OI_G.

A morphism ``x -> y`` has payload ``(f, c)``: ``f`` the tuple of images of an injection
``[x] -> [y]`` and ``c`` a tuple of color group elements, one per point of ``[x]``.
Composition is ``(f2, c2)(f1, c1) = (f2 f1, r -> c2(f1(r)) c1(r))``. FI is the case of
the trivial color group.
"""
import logging
from itertools import combinations, permutations, product

from koszulkit.category import CombMorphism, Factorization
from koszulkit.exceptions import CategorySpecException
from koszulkit.groups import FiniteGroup
from .helpers import Family

LOG = logging.getLogger(__name__)


class InjectionFamily(Family):
    """
    Injections colored by ``self.gamma``.
    """

    HAS_RHO = True
    INCREASING = False

    def __init__(self, family=None, params=None):
        super(InjectionFamily, self).__init__(family, params)
        self.gamma = self.params.get("gamma") or FiniteGroup.trivial()

    def _injections(self, x, y):
        if self.INCREASING:
            return combinations(range(1, y + 1), x)
        return permutations(range(1, y + 1), x)

    def _enumerate(self, x, y):
        colorings = list(product(range(self.gamma.order), repeat=x))
        for f in self._injections(x, y):
            for c in colorings:
                if self._allowed(f, c, y):
                    yield (f, c)

    def _allowed(self, f, c, y):
        return True

    def _identity_payload(self, x):
        return (tuple(range(1, x + 1)), (0,) * x)

    def _compose_payload(self, beta, alpha):
        f1, c1 = alpha.payload
        f2, c2 = beta.payload
        mul = self.gamma.mult
        f3 = tuple(f2[r - 1] for r in f1)
        c3 = tuple(mul[c2[f1[i] - 1]][c1[i]] for i in range(len(f1)))
        return (f3, c3)

    def _tensor_payload(self, a, b):
        f1, c1 = a.payload
        f2, c2 = b.payload
        return (f1 + tuple(v + a.target for v in f2), c1 + c2)

    def _rho(self, payload):
        return payload[0]

    def factorize_min(self, f):
        """
        Closed-form minimal factorization of ``f: x -> 1+y``.

        When some ``m`` has ``f(m) = 1`` the factorization goes through ``z = x - 1`` with
        ``f1`` a bijection sending ``m`` to 1; otherwise ``f1`` shifts ``[x]`` onto
        ``{2, ..., 1+x}`` and ``z = x``.
        """
        x, y = f.source, f.target - 1
        images, colors = f.payload
        ident = 0
        if 1 in images:
            m = images.index(1) + 1
            others = [r for r in range(1, x + 1) if r != m]
            f1_images = [None] * x
            f1_images[m - 1] = 1
            for position, r in enumerate(others):
                f1_images[r - 1] = position + 2
            c1 = tuple(colors[m - 1] if r == m else ident for r in range(1, x + 1))
            f2_images = [None] * (x - 1)
            c2 = [ident] * (x - 1)
            for r in others:
                slot = f1_images[r - 1] - 2
                f2_images[slot] = images[r - 1] - 1
                c2[slot] = colors[r - 1]
            z = x - 1
            f1 = (tuple(f1_images), c1)
            f2 = (tuple(f2_images), tuple(c2))
        else:
            z = x
            f1 = (tuple(r + 1 for r in range(1, x + 1)), (ident,) * x)
            f2 = (tuple(v - 1 for v in images), colors)
        return Factorization(z, CombMorphism(x, 1 + z, f1), CombMorphism(z, y, f2))


class FIFamily(InjectionFamily):
    """Finite sets and injections."""

    FAMILY = "FI"


class FIGammaFamily(InjectionFamily):
    """Injections with arbitrary colorings by a finite group."""

    FAMILY = "FI_gamma"
    REQUIRED_PARAMS = ["gamma"]


class OIGammaFamily(InjectionFamily):
    """Increasing colored injections."""

    FAMILY = "OI_gamma"
    REQUIRED_PARAMS = ["gamma"]
    INCREASING = True


class FIPrimeGammaFamily(InjectionFamily):
    """
    Colored injections whose colors multiply to the identity whenever ``f`` is a
    bijection. The color group must be abelian.
    """

    FAMILY = "FI_prime_gamma"
    REQUIRED_PARAMS = ["gamma"]
    HAS_RHO = False

    def __init__(self, family=None, params=None):
        super(FIPrimeGammaFamily, self).__init__(family, params)
        if not self.gamma.is_abelian():
            raise CategorySpecException("gamma", "FI_prime_gamma requires an abelian group")

    def _allowed(self, f, c, y):
        if len(f) != y:
            return True
        total = 0
        for color in c:
            total = self.gamma.mult[total][color]
        return total == 0

    def factorize_min(self, f):
        return self.brute_force_factorization(f)
