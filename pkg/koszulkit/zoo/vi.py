"""
VI_q: injective linear maps ``F_q^x -> F_q^y``.

A morphism ``x -> y`` has payload ``(rows,)`` where ``rows`` is the ``y x x`` matrix as
a tuple of row tuples with entries in ``range(q)``.
"""
import logging
from itertools import product

import numpy as np

from koszulkit import defaults
from koszulkit.category import CombMorphism, Factorization
from koszulkit.exceptions import CategorySpecException
from koszulkit.linalg import gf_rank, gf_rref
from .helpers import Family

LOG = logging.getLogger(__name__)


def _as_array(rows, nrows, ncols):
    return np.array(rows, dtype=np.int64).reshape(nrows, ncols)


def _as_rows(array):
    return tuple(tuple(int(v) for v in row) for row in array.tolist())


class VIFamily(Family):
    """Injective linear maps over a prime field."""

    FAMILY = "VI"
    REQUIRED_PARAMS = ["q"]
    OPTIONAL_PARAMS = ["allow_large"]

    def __init__(self, family=None, params=None):
        super(VIFamily, self).__init__(family, params)
        self.q = self.params["q"]
        self.allow_large = bool(self.params.get("allow_large", False))
        if self.q not in defaults.GF_TABLE_PRIMES:
            raise CategorySpecException(
                "q", "must be a prime in {}, got {}".format(defaults.GF_TABLE_PRIMES, self.q)
            )
        if self.q not in defaults.VI_PRIMES and not self.allow_large:
            raise CategorySpecException(
                "q", "{} is outside {} (pass allow_large to override)".format(self.q, defaults.VI_PRIMES)
            )

    def max_object(self):
        return None if self.allow_large else defaults.VI_MAX_OBJECT

    def _enumerate(self, x, y):
        vectors = list(product(range(self.q), repeat=y))
        columns = []

        def extend(columns):
            if len(columns) == x:
                yield tuple(tuple(col[i] for col in columns) for i in range(y))
                return
            for v in vectors:
                candidate = columns + [v]
                if gf_rank([list(c) for c in candidate], self.q) == len(candidate):
                    for rows in extend(candidate):
                        yield rows

        for rows in extend(columns):
            yield (rows,)

    def _identity_payload(self, x):
        return (tuple(tuple(int(i == j) for j in range(x)) for i in range(x)),)

    def _compose_payload(self, beta, alpha):
        a = _as_array(alpha.payload[0], alpha.target, alpha.source)
        b = _as_array(beta.payload[0], beta.target, beta.source)
        return (_as_rows(np.dot(b, a) % self.q),)

    def _tensor_payload(self, a, b):
        top = _as_array(a.payload[0], a.target, a.source)
        bottom = _as_array(b.payload[0], b.target, b.source)
        block = np.zeros((a.target + b.target, a.source + b.source), dtype=np.int64)
        block[: a.target, : a.source] = top
        block[a.target :, a.source :] = bottom
        return (_as_rows(block),)

    def factorize_min(self, f):
        """
        Split ``f`` into its first row ``u`` and the remaining rows ``h``; ``z`` is the
        rank of ``h``, ``f2`` the pivot columns of ``h`` and ``f1`` stacks ``u`` on the
        nonzero rows of the reduced form of ``h``.
        """
        x, y = f.source, f.target - 1
        rows = f.payload[0]
        u = rows[0]
        h = rows[1:]
        if y and x:
            reduced, pivots = gf_rref([list(r) for r in h], self.q)
        else:
            reduced, pivots = np.zeros((y, x), dtype=np.int64), ()
        z = len(pivots)
        p = _as_rows(reduced[:z]) if z else ()
        f1_rows = (tuple(u),) + p
        f2_rows = tuple(tuple(row[j] for j in pivots) for row in h)
        return Factorization(z, CombMorphism(x, 1 + z, (f1_rows,)), CombMorphism(z, y, (f2_rows,)))
