"""
Truncated directed graded linear categories over the rationals.

A :class:`LinCat` on an interval ``[lo, hi]`` has, for ``x <= y``, a basis of
``hom(x, y)`` indexed ``0..dim(x, y)-1`` and structure constants
``compose(x, y, z, j, i)``: basis ``j`` of ``hom(y, z)`` after basis ``i`` of
``hom(x, y)``, as a sparse vector over ``hom(x, z)``. The degree-0 part at ``x`` is the
group algebra of ``group(x)``, basis element ``g`` being the group element ``g``.
"""
import logging
import random
from fractions import Fraction
from itertools import product

from . import defaults
from .category import Interval
from .exceptions import CategoryException, check_dimension, make_check_function
from .groups import FiniteGroup
from .linalg import EchelonBasis, ONE, vec_iadd
from .reports import ValidationReport

LOG = logging.getLogger(__name__)

#: Attributes of a linearization that its truncations expose as their own.
FORWARDED_ATTRIBUTES = ("category", "sign", "is_plain", "name", "morphism", "genetic_image")


class LinCat(object):
    """
    Base class of truncated graded linear categories.

    Subclasses implement ``group(x)``, ``_dim(x, y)`` for ``x < y`` and
    ``_compose(x, y, z, j, i)``.
    """

    def __init__(self, interval):
        self.interval = interval
        self._compose_cache = {}
        self._arrow_data = {}
        self._factor_last = {}
        self._factor_first = {}
        self._truncations = {}

    @property
    def lo(self):
        return self.interval.lo

    @property
    def hi(self):
        return self.interval.hi

    def objects(self):
        return self.interval.objects()

    def group(self, x):
        raise NotImplementedError

    def dim(self, x, y):
        """Dimension of ``hom(x, y)``; zero when ``x > y``."""
        if x > y:
            return 0
        if x == y:
            return self.group(x).order
        return self._dim(x, y)

    def degrees(self, x, y):
        """Degree of each basis element of ``hom(x, y)``."""
        return [y - x] * self.dim(x, y)

    def labels(self, x, y):
        return ["e{}".format(i) for i in range(self.dim(x, y))]

    def compose(self, x, y, z, j, i):
        """
        Basis ``j`` of ``hom(y, z)`` composed after basis ``i`` of ``hom(x, y)``.

        :return: sparse vector over ``hom(x, z)``. Do not mutate.
        """
        key = (x, y, z, j, i)
        result = self._compose_cache.get(key)
        if result is None:
            if x == y == z:
                result = {self.group(x).mult[j][i]: ONE}
            else:
                result = self._compose(x, y, z, j, i)
            self._compose_cache[key] = result
        return result

    def compose_vectors(self, x, y, z, u, v):
        """Bilinear extension of :meth:`compose` to sparse vectors."""
        out = {}
        for j, cu in u.items():
            for i, cv in v.items():
                vec_iadd(out, self.compose(x, y, z, j, i), cu * cv)
        return out

    # ----- degree-1 generators

    def arrow_data(self, y):
        """
        Generators of ``hom(y, y+1)`` as a left ``G_{y+1}``-module.

        :return: (list of generator basis indices, expression) where ``expression[a]``
            is a list of ``(coeff, g, r)`` with ``e_a = sum coeff * g o gen_r``
        """
        if y not in self._arrow_data:
            group = self.group(y + 1)
            gens = []
            expression = {}
            for a in range(self.dim(y, y + 1)):
                if a in expression:
                    continue
                r = len(gens)
                gens.append(a)
                expression[a] = [(ONE, 0, r)]
                for g in group.elements():
                    image = self.compose(y, y + 1, y + 1, g, a)
                    if len(image) == 1:
                        (target, coeff), = image.items()
                        if target not in expression:
                            expression[target] = [(ONE / coeff, g, r)]
            self._arrow_data[y] = (gens, expression)
            LOG.debug("hom(%s, %s): %s arrow generators", y, y + 1, len(gens))
        return self._arrow_data[y]

    def arrow_generators(self, y):
        return self.arrow_data(y)[0]

    def arrow_expression(self, y):
        return self.arrow_data(y)[1]

    # ----- factorizations of higher-degree basis elements

    def factor_last(self, x, z, k):
        """
        Write basis ``k`` of ``hom(x, z)``, ``z >= x + 2``, as ``a o v`` with ``a`` a
        basis element of ``hom(z-1, z)`` and ``v`` a vector over ``hom(x, z-1)``.

        :return: (a, v)
        """
        key = (x, z)
        if key not in self._factor_last:
            self._factor_last[key] = self._search_factors(x, z - 1, z, last=True)
        return self._factor_last[key][k]

    def factor_first(self, x, z, k):
        """
        Write basis ``k`` of ``hom(x, z)``, ``z >= x + 2``, as ``v o a`` with ``a`` a
        basis element of ``hom(x, x+1)`` and ``v`` a vector over ``hom(x+1, z)``.

        :return: (v, a)
        """
        key = (x, z)
        if key not in self._factor_first:
            self._factor_first[key] = self._search_factors(x, x + 1, z, last=False)
        return self._factor_first[key][k]

    def _search_factors(self, x, y, z, last):
        needed = self.dim(x, z)
        found = {}
        for j in range(self.dim(y, z)):
            for i in range(self.dim(x, y)):
                image = self.compose(x, y, z, j, i)
                if len(image) != 1:
                    continue
                (k, coeff), = image.items()
                if k in found:
                    continue
                if last:
                    found[k] = (j, {i: ONE / coeff})
                else:
                    found[k] = ({j: ONE / coeff}, i)
                if len(found) == needed:
                    return found
        missing = [k for k in range(needed) if k not in found]
        raise CategoryException(
            "hom({}, {}) basis elements {} are not composites through {}".format(x, z, missing, y)
        )

    # ----- sub-intervals

    def truncated(self, lo, hi):
        """Full subcategory on ``[lo, hi]``, cached so repeated calls return one object."""
        if (lo, hi) == (self.lo, self.hi):
            return self
        if lo < self.lo or hi > self.hi:
            raise CategoryException(
                "[{}, {}] is not inside the interval {}".format(lo, hi, self.interval)
            )
        key = (lo, hi)
        if key not in self._truncations:
            self._truncations[key] = TruncatedLinCat(self, Interval(lo, hi))
        return self._truncations[key]

    def describe(self):
        return "{} on {}".format(self.__class__.__name__, self.interval)

    def __repr__(self):
        return self.describe()


class CombinatorialLinCat(LinCat):
    """
    Linearization of a combinatorial category on an interval, optionally twisted by a
    sign function ``sign(beta, alpha)`` multiplying each structure constant.
    """

    def __init__(self, category, interval, sign=None, name=None):
        category.check_interval(interval)
        super(CombinatorialLinCat, self).__init__(interval)
        self.category = category
        self.sign = sign
        self.name = name or category.describe()
        for x in interval.objects():
            check_dimension("hom({}, {})".format(x, interval.hi), len(category.hom(x, interval.hi)))

    @property
    def is_plain(self):
        return self.sign is None

    def group(self, x):
        return self.category.group(x)

    def _dim(self, x, y):
        return len(self.category.hom(x, y))

    def labels(self, x, y):
        return [str(m) for m in self.category.hom(x, y)]

    def morphism(self, x, y, i):
        return self.category.hom(x, y)[i]

    def _compose(self, x, y, z, j, i):
        c = self.category
        beta = c.hom(y, z)[j]
        alpha = c.hom(x, y)[i]
        k = c.index(c.compose(beta, alpha))
        coeff = self.sign(beta, alpha) if self.sign is not None else 1
        return {k: Fraction(coeff)}

    def genetic_image(self, x, y, i):
        """Index in ``hom(x+1, y+1)`` of ``I (.) alpha`` for basis ``i`` of ``hom(x, y)``."""
        c = self.category
        return c.index(c.genetic_embed(c.hom(x, y)[i]))

    def describe(self):
        kind = "linearization" if self.sign is None else "twist"
        return "{} of {} on {}".format(kind, self.name, self.interval)


class OppositeLinCat(LinCat):
    """
    Opposite category with objects reflected, ``x -> lo + hi - x``, so that morphisms
    still go upward: ``hom_op(x, y) = hom(r(y), r(x))``.
    """

    def __init__(self, base):
        super(OppositeLinCat, self).__init__(base.interval)
        self.base = base
        self._groups = {}

    def reflect(self, x):
        return self.lo + self.hi - x

    def group(self, x):
        if x not in self._groups:
            self._groups[x] = self.base.group(self.reflect(x)).opposite()
        return self._groups[x]

    def _dim(self, x, y):
        return self.base.dim(self.reflect(y), self.reflect(x))

    def degrees(self, x, y):
        return self.base.degrees(self.reflect(y), self.reflect(x))

    def labels(self, x, y):
        return ["op({})".format(s) for s in self.base.labels(self.reflect(y), self.reflect(x))]

    def _compose(self, x, y, z, j, i):
        r = self.reflect
        return self.base.compose(r(z), r(y), r(x), i, j)

    def factor_last(self, x, z, k):
        r = self.reflect
        v, a = self.base.factor_first(r(z), r(x), k)
        return a, v

    def factor_first(self, x, z, k):
        r = self.reflect
        a, v = self.base.factor_last(r(z), r(x), k)
        return v, a

    def describe(self):
        return "opposite of ({})".format(self.base.describe())


class EssentialLinCat(LinCat):
    """Off-diagonal homs unchanged; each endomorphism algebra cut down to the identity."""

    def __init__(self, base):
        super(EssentialLinCat, self).__init__(base.interval)
        self.base = base
        self._trivial = FiniteGroup.trivial()

    def group(self, x):
        return self._trivial

    def _dim(self, x, y):
        return self.base.dim(x, y)

    def degrees(self, x, y):
        if x == y:
            return [0]
        return self.base.degrees(x, y)

    def labels(self, x, y):
        if x == y:
            return ["id{}".format(x)]
        return self.base.labels(x, y)

    def _compose(self, x, y, z, j, i):
        if x == y:
            return {j: ONE}
        if y == z:
            return {i: ONE}
        return self.base.compose(x, y, z, j, i)

    def factor_last(self, x, z, k):
        return self.base.factor_last(x, z, k)

    def factor_first(self, x, z, k):
        return self.base.factor_first(x, z, k)

    def describe(self):
        return "essential subcategory of ({})".format(self.base.describe())


class TruncatedLinCat(LinCat):
    """Full subcategory of ``base`` on a sub-interval."""

    def __init__(self, base, interval):
        super(TruncatedLinCat, self).__init__(interval)
        self.base = base

    def group(self, x):
        return self.base.group(x)

    def _dim(self, x, y):
        return self.base.dim(x, y)

    def degrees(self, x, y):
        return self.base.degrees(x, y)

    def labels(self, x, y):
        return self.base.labels(x, y)

    def compose(self, x, y, z, j, i):
        return self.base.compose(x, y, z, j, i)

    def arrow_data(self, y):
        return self.base.arrow_data(y)

    def factor_last(self, x, z, k):
        return self.base.factor_last(x, z, k)

    def factor_first(self, x, z, k):
        return self.base.factor_first(x, z, k)

    def truncated(self, lo, hi):
        return self.base.truncated(lo, hi)

    def __getattr__(self, name):
        if name in FORWARDED_ATTRIBUTES:
            return getattr(self.base, name)
        raise AttributeError(name)

    def describe(self):
        return "{} restricted to {}".format(self.base.describe(), self.interval)


def linearize(c, iv):
    """
    Linearization of ``c`` on ``iv``: basis of ``hom(x, y)`` is ``enumerate_hom(c, x, y)``,
    structure constants 0/1 from set-level composition, degrees ``y - x``.

    :param c: :class:`~koszulkit.category.CombCategory`
    :param iv: :class:`~koszulkit.category.Interval` or ``(lo, hi)``
    """
    if not isinstance(iv, Interval):
        iv = Interval(*iv)
    return CombinatorialLinCat(c, iv)


def opposite(l):
    """Opposite category; applying it twice returns the original object."""
    if isinstance(l, OppositeLinCat):
        return l.base
    return OppositeLinCat(l)


def essential_subcategory(l):
    """The subcategory with ``hom(x, x) = k`` and all other homs unchanged; idempotent."""
    if isinstance(l, EssentialLinCat):
        return l
    return EssentialLinCat(l)


def structure_constants(l):
    """
    All data of ``l``: interval, dimensions, degrees and structure constants on basis
    pairs. Two categories with equal results are identical.
    """
    dims = {}
    degrees = {}
    constants = {}
    for x in l.objects():
        for y in range(x, l.hi + 1):
            dims[(x, y)] = l.dim(x, y)
            degrees[(x, y)] = tuple(l.degrees(x, y))
    for x in l.objects():
        for y in range(x, l.hi + 1):
            for z in range(y, l.hi + 1):
                for j, i in product(range(dims[(y, z)]), range(dims[(x, y)])):
                    constants[(x, y, z, j, i)] = tuple(sorted(l.compose(x, y, z, j, i).items()))
    return tuple(l.interval), dims, degrees, constants


def same_structure(l1, l2):
    """True iff ``l1`` and ``l2`` have identical bases and structure constants."""
    return structure_constants(l1) == structure_constants(l2)


def _basis_triples(l):
    """(x, y, z, w) with at least one positive-degree step, with their triple counts."""
    quads = []
    for x in l.objects():
        for y in range(x, l.hi + 1):
            for z in range(y, l.hi + 1):
                for w in range(z, l.hi + 1):
                    if x == w:
                        continue
                    count = l.dim(z, w) * l.dim(y, z) * l.dim(x, y)
                    if count:
                        quads.append(((x, y, z, w), count))
    return quads


def _check_associativity(l, report):
    quads = _basis_triples(l)
    total = sum(count for _, count in quads)
    sampled = total > defaults.ASSOCIATIVITY_LIMIT
    report.details["associativity_triples"] = total
    report.details["sampled"] = sampled
    rng = random.Random(defaults.SAMPLE_SEED)

    def check(x, y, z, w, k, j, i):
        left = {}
        for m, c in l.compose(x, y, z, j, i).items():
            vec_iadd(left, l.compose(x, z, w, k, m), c)
        right = {}
        for m, c in l.compose(y, z, w, k, j).items():
            vec_iadd(right, l.compose(x, y, w, m, i), c)
        if left != right:
            report.add("ASSOC", False, {"objects": [x, y, z, w], "basis": [k, j, i]})
            return False
        return True

    if not sampled:
        for (x, y, z, w), _ in quads:
            for k, j, i in product(range(l.dim(z, w)), range(l.dim(y, z)), range(l.dim(x, y))):
                if not check(x, y, z, w, k, j, i):
                    return
    else:
        weights = [count for _, count in quads]
        for _ in range(defaults.ASSOCIATIVITY_LIMIT):
            (x, y, z, w), _count = rng.choices(quads, weights=weights)[0]
            k = rng.randrange(l.dim(z, w))
            j = rng.randrange(l.dim(y, z))
            i = rng.randrange(l.dim(x, y))
            if not check(x, y, z, w, k, j, i):
                return
    report.add("ASSOC", True)


def _check_combinatorial(l, report):
    c = l.category
    for x in l.objects():
        endos = c.hom(x, x)
        identity = c.identity(x)
        for a in endos:
            if not any(c.compose(b, a) == identity for b in endos):
                report.add("E1", False, {"endomorphism": str(a)})
                break
        for y in l.objects():
            homs = c.hom(x, y)
            if x > y and homs:
                report.add("E2", False, {"hom": [x, y]})
            if x <= y and not homs:
                report.add("E3", False, {"hom": [x, y]})
    for x in l.objects():
        for y in range(x + 1, l.hi + 1):
            for z in range(y + 1, l.hi + 1):
                composites = set()
                for beta in c.hom(y, z):
                    for alpha in c.hom(x, y):
                        composites.add(c.compose(beta, alpha))
                if len(composites) != len(c.hom(x, z)):
                    report.add(
                        "E4", False, {"objects": [x, y, z], "image": len(composites), "target": len(c.hom(x, z))}
                    )
    for name in ("E1", "E2", "E3", "E4"):
        report.add(name, True)


def validate(l):
    """
    Check the axioms of a truncated directed graded category on ``l``, and for
    linearizations of combinatorial categories the EI conditions as well.

    Associativity is checked on every basis triple with a positive-degree step up to
    ``defaults.ASSOCIATIVITY_LIMIT`` triples, and on a seeded sample above that.

    :param LinCat l: category to check
    :return: :class:`~koszulkit.reports.ValidationReport`
    """
    report = ValidationReport(l.describe())
    report.add("P1", all(l.dim(x, y) <= defaults.MAX_DIM for x in l.objects() for y in l.objects()))
    report.add("P8", l.lo <= l.hi)
    for x in l.objects():
        group = l.group(x)
        if l.dim(x, x) != group.order:
            report.add("P4", False, {"object": x})
        for g in group.elements():
            for h in group.elements():
                if l.compose(x, x, x, g, h) != {group.mult[g][h]: ONE}:
                    report.add("P4", False, {"object": x, "elements": [g, h]})
        for y in range(x, l.hi + 1):
            degrees = l.degrees(x, y)
            if any(d < 0 for d in degrees):
                report.add("P2", False, {"hom": [x, y], "degrees": degrees})
            if x < y and any(d == 0 for d in degrees):
                report.add("P3", False, {"hom": [x, y], "basis": degrees.index(0)})
            if x == y and any(d != 0 for d in degrees):
                report.add("P7", False, {"object": x, "degrees": degrees})
            if y > x + 1 and 1 in degrees:
                report.add("P5", False, {"hom": [x, y], "degree": 1})
        for z in range(x + 2, l.hi + 1):
            span = EchelonBasis(l.dim(x, z))
            for a in range(l.dim(z - 1, z)):
                for i in range(l.dim(x, z - 1)):
                    span.add(l.compose(x, z - 1, z, a, i))
            if len(span) != l.dim(x, z):
                report.add("P6", False, {"hom": [x, z], "spanned": len(span), "dim": l.dim(x, z)})
    for name in ("P2", "P3", "P4", "P5", "P6", "P7"):
        report.add(name, True)
    _check_associativity(l, report)
    if isinstance(l, CombinatorialLinCat) or hasattr(l, "category"):
        _check_combinatorial(l, report)
    LOG.info("validate(%s): %s", l.describe(), "passed" if report.passed else "failed")
    return report


validate_ex = make_check_function(validate)
