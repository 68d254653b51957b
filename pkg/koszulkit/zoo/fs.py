"""
Opposites of colored surjections: FS_G^op and OS_G^op.

Objects start at 1. A morphism ``x -> y`` (``x <= y``) of the opposite category is a
pair ``(f, c)`` with ``f: [y] -> [x]`` a surjection, given as the tuple of its values,
and ``c: [y] -> G``. Composing ``beta o alpha`` here is ``alpha beta`` among surjections:
``f3 = f_alpha f_beta`` and ``c3(r) = c_alpha(f_beta(r)) c_beta(r)``.
"""
import logging
from itertools import product

from koszulkit.category import CombMorphism, Factorization
from .helpers import Family, first_occurrence_standardize

LOG = logging.getLogger(__name__)


class SurjectionOpFamily(Family):
    """Base class of FS_G^op and OS_G^op."""

    REQUIRED_PARAMS = ["gamma"]
    MIN_OBJECT = 1
    ORDERED = False

    def __init__(self, family=None, params=None):
        super(SurjectionOpFamily, self).__init__(family, params)
        self.gamma = self.params["gamma"]

    def _surjections(self, x, y):
        for f in product(range(1, x + 1), repeat=y):
            if len(set(f)) != x:
                continue
            if self.ORDERED and first_occurrence_standardize(f)[0] != f:
                continue
            yield f

    def _enumerate(self, x, y):
        colorings = list(product(range(self.gamma.order), repeat=y))
        for f in self._surjections(x, y):
            for c in colorings:
                yield (f, c)

    def _identity_payload(self, x):
        return (tuple(range(1, x + 1)), (0,) * x)

    def _compose_payload(self, beta, alpha):
        f_alpha, c_alpha = alpha.payload
        f_beta, c_beta = beta.payload
        mul = self.gamma.mult
        f3 = tuple(f_alpha[s - 1] for s in f_beta)
        c3 = tuple(mul[c_alpha[s - 1]][c_beta[r]] for r, s in enumerate(f_beta))
        return (f3, c3)

    def _tensor_payload(self, a, b):
        f1, c1 = a.payload
        f2, c2 = b.payload
        return (f1 + tuple(v + a.source for v in f2), c1 + c2)

    def factorize_min(self, f):
        """
        Minimal factorization of ``f: x -> 1+y``, i.e. a surjection ``[1+y] -> [x]``.

        With ``m = f(1)``: when 1 is the only preimage of ``m`` the factorization goes
        through ``z = x - 1``; otherwise through ``z = x``, with ``f2`` the
        first-occurrence standardization of ``r -> f(r+1)``.
        """
        x, y = f.source, f.target - 1
        values, colors = f.payload
        m = values[0]
        ident = 0
        rest = values[1:]
        if m not in rest:
            z = x - 1
            f1_values = (m,) + tuple(v for v in range(1, x + 1) if v != m)
            position = {v: i + 1 for i, v in enumerate(f1_values)}
            f2_values = tuple(position[v] - 1 for v in rest)
        else:
            z = x
            f2_values, order = first_occurrence_standardize(rest)
            f1_values = (m,) + order
        c1 = (colors[0],) + (ident,) * z
        f1 = (f1_values, c1)
        f2 = (f2_values, tuple(colors[1:]))
        return Factorization(z, CombMorphism(x, 1 + z, f1), CombMorphism(z, y, f2))


class FSGammaOpFamily(SurjectionOpFamily):
    """Opposite of surjections colored by a finite group."""

    FAMILY = "FS_gamma_op"


class OSGammaOpFamily(SurjectionOpFamily):
    """Opposite of ordered colored surjections."""

    FAMILY = "OS_gamma_op"
    ORDERED = True
