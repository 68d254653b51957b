"""
Minimal factorizations and brute-force verification of the monoidal conditions
(C1)-(C4) on small hom-sets.
"""
import logging
from collections import defaultdict

from koszulkit.exceptions import CategoryException, make_check_function
from koszulkit.reports import ConditionReport

LOG = logging.getLogger(__name__)


def factorize_min(c, f):
    """
    Minimal factorization ``f = (I (.) f2) o f1`` of ``f: x -> 1+y``.

    :param c: zoo category
    :param f: morphism into ``1 + y``
    :return: :class:`~koszulkit.category.Factorization` with ``z`` in ``{x - 1, x}``
    """
    if f.target - 1 < c.MIN_OBJECT:
        raise CategoryException("{} does not end in an object of the form 1+y".format(f))
    factorization = c.factorize_min(f)
    LOG.debug("factorize_min(%s) -> z=%s", f, factorization.z)
    return factorization


def factorization_buckets(c, x, y):
    """
    All factorizations ``(I (.) f2) o f1`` of morphisms ``x -> 1+y`` through
    ``z in {x - 1, x}``, bucketed by the composite.

    :return: dict morphism -> list of (z, f1, f2)
    """
    buckets = defaultdict(list)
    for z in (x - 1, x):
        if z < c.MIN_OBJECT or z > y:
            continue
        for f2 in c.hom(z, y):
            lifted = c.genetic_embed(f2)
            for f1 in c.hom(x, 1 + z):
                buckets[c.compose(lifted, f1)].append((z, f1, f2))
    return buckets


def _orbit(c, z, f1):
    return {c.compose(c.genetic_embed(g), f1) for g in c.hom(z, z)}


def _check_c1_c2(c, bound, report):
    last = bound - 1
    for x in range(c.MIN_OBJECT, last + 1):
        if c.genetic_embed(c.identity(x)) != c.identity(x + 1):
            report.add("C1", False, {"identity": str(c.identity(x))})
        for y in range(x, last + 1):
            homs = c.hom(x, y)
            images = set(c.genetic_embed(a) for a in homs)
            report.add("C2", len(images) == len(homs), {"hom": [x, y]})
            for w in range(y, last + 1):
                for beta in c.hom(y, w):
                    lifted_beta = c.genetic_embed(beta)
                    for alpha in homs:
                        composite = c.genetic_embed(c.compose(beta, alpha))
                        if composite != c.compose(lifted_beta, c.genetic_embed(alpha)):
                            report.add("C1", False, {"beta": str(beta), "alpha": str(alpha)})
    report.add("C1", True)
    report.add("C2", True)


def verify_c_conditions(c, bound):
    """
    Brute-force check of (C1)-(C4) on every hom-set between objects ``<= bound``.

    (C3) compares the family's ``factorize_min`` against an exhaustive search: it must
    find the minimal ``z``, recompose to ``f``; for that ``z`` the ``f2`` is unique
    given ``f1``, and the admissible ``f1`` form one orbit of ``G_z`` acting by
    ``g . f1 = (I (.) g) o f1``.

    :param c: zoo category
    :param int bound: largest object touched
    :return: :class:`~koszulkit.reports.ConditionReport`
    """
    report = ConditionReport(c.describe(), bound=bound)
    _check_c1_c2(c, bound, report)

    minimal_z = {}
    for y in range(c.MIN_OBJECT, bound):
        for x in range(c.MIN_OBJECT, 2 + y):
            buckets = factorization_buckets(c, x, y)
            for f in c.hom(x, 1 + y):
                entries = buckets.get(f, [])
                if not entries:
                    report.add("C3", False, {"no_factorization": str(f)})
                    continue
                z_min = min(e[0] for e in entries)
                minimal_z[f] = z_min
                found = factorize_min(c, f)
                if (
                    found.z != z_min
                    or not c.contains(found.f1)
                    or not c.contains(found.f2)
                    or c.recompose(found) != f
                ):
                    report.add(
                        "C3",
                        False,
                        {"morphism": str(f), "minimal_z": z_min, "returned": [found.z, str(found.f1), str(found.f2)]},
                    )
                    continue
                by_f1 = defaultdict(set)
                for z, f1, f2 in entries:
                    if z == z_min:
                        by_f1[f1].add(f2)
                for f1, f2s in by_f1.items():
                    if len(f2s) > 1:
                        report.add("C3", False, {"morphism": str(f), "f1": str(f1), "f2_choices": len(f2s)})
                if set(by_f1) != _orbit(c, z_min, found.f1):
                    report.add("C3", False, {"morphism": str(f), "f1_orbits": "more than one"})
    report.add("C3", True)

    for f, z_min in sorted(minimal_z.items()):
        x, y = f.source, f.target - 1
        if z_min != x:
            continue
        for w in range(y, bound):
            for f3 in c.hom(y, w):
                g = c.compose(c.genetic_embed(f3), f)
                if minimal_z.get(g, x) != x:
                    report.add("C4", False, {"morphism": str(f), "postcomposed_with": str(f3), "result": str(g)})
    report.add("C4", True)
    LOG.info("verify_c_conditions(%s, %s): %s", c.describe(), bound, "passed" if report.passed else "failed")
    return report


verify_c_conditions_ex = make_check_function(verify_c_conditions)
