"""
The sign twist of a category carrying a functor ``rho`` to FI, the module
equivalences between a category and its twist, and the comparison of the twist with
the quadratic dual.

A basis element of ``tw(x, y)`` is ``alpha (x) d_alpha`` where ``d_alpha`` is the
wedge of ``Delta = [y] - image(rho(alpha))`` in increasing order. Composition picks
up the sign of the permutation sorting ``rho(beta)(Delta_alpha)`` followed by
``Delta_beta``.
"""
import logging

from .category import Interval
from .exceptions import CategoryException, make_check_function
from .lincat import CombinatorialLinCat, linearize
from .linalg import annihilator
from .modules import GradedModule
from .quadratic import free_cover, quadratic_dual
from .reports import TwistReport
from .zoo import RHO_FAMILIES

LOG = logging.getLogger(__name__)


def permutation_sign(sequence):
    """Sign of the permutation sorting ``sequence`` (distinct values) ascending."""
    inversions = 0
    for i, a in enumerate(sequence):
        for b in sequence[i + 1:]:
            if a > b:
                inversions += 1
    return -1 if inversions % 2 else 1


def _require_rho(c):
    if not c.HAS_RHO:
        raise CategoryException("{} has no functor rho to FI, so no twist".format(c.describe()))


def twist_sign(c, beta, alpha):
    """
    Structure-constant sign of ``beta o alpha`` in the twist.

    :raises CategoryException: for families without rho
    """
    _require_rho(c)
    images = c.rho(beta)
    moved = [images[d - 1] for d in c.complement(alpha)]
    return permutation_sign(moved + list(c.complement(beta)))


def twist_category(c, iv):
    """The twist of ``c`` on ``iv``: the linearization with signed structure constants."""
    _require_rho(c)
    if not isinstance(iv, Interval):
        iv = Interval(*iv)
    return CombinatorialLinCat(c, iv, sign=lambda beta, alpha: twist_sign(c, beta, alpha), name=c.describe())


def epsilon(c, alpha):
    """
    Sign with ``rho(alpha)(1 ^ .. ^ x) ^ d_alpha = epsilon * (1 ^ .. ^ y)``; on ``G_x`` it is
    the sign of the underlying permutation.
    """
    _require_rho(c)
    return permutation_sign(list(c.rho(alpha)) + list(c.complement(alpha)))


def _rescale(m, target, name):
    """Copy of ``m`` over ``target`` with every generator action scaled by ``epsilon``."""
    c = target.category
    group_action = {}
    for (y, j), matrices in m.group_action.items():
        if not m.dim(y, j):
            continue
        group = target.group(y)
        group_action[(y, j)] = [
            mat.scale(epsilon(c, c.hom(y, y)[g])) for g, mat in zip(group.generators, matrices)
        ]
    arrow_action = {}
    for (y, j), matrices in m.arrow_action.items():
        gens = target.arrow_generators(y)
        arrow_action[(y, j)] = [mat.scale(epsilon(c, c.hom(y, y + 1)[a])) for a, mat in zip(gens, matrices)]
    return GradedModule(target, dict(m.dims), group_action, arrow_action, name=name)


def _combinatorial(l, twisted):
    c = getattr(l, "category", None)
    if c is None or (l.sign is not None) != twisted:
        kind = "twist" if twisted else "linearization"
        raise CategoryException("expected a module over a {}, got {}".format(kind, l.describe()))
    return c


def tau_module(m, target=None):
    """
    ``tau``: modules over the linearization to modules over the twist. The fiber at
    ``x`` is tensored with ``det(k^x)``; in the canonical bases the action of ``alpha`` is
    scaled by ``epsilon(alpha)``.
    """
    c = _combinatorial(m.lincat, twisted=False)
    if target is None:
        target = twist_category(c, m.lincat.interval)
    return _rescale(m, target, "tau({})".format(m.name))


def mu_module(n, target=None):
    """``mu``: the inverse of :func:`tau_module`."""
    c = _combinatorial(n.lincat, twisted=True)
    if target is None:
        target = linearize(c, n.lincat.interval)
    return _rescale(n, target, "mu({})".format(n.name))


def same_module_data(m1, m2):
    """Equal dims and equal generator matrices on every fiber."""
    if m1.dims != m2.dims:
        return False
    for key in m1.dims:
        if m1.group_action.get(key, []) != m2.group_action.get(key, []):
            return False
        if m1.arrow_action.get(key) != m2.arrow_action.get(key):
            return False
    return True


def check_twist_dual_iso(c, iv, signs=True):
    """
    Compare the degree-2 relations of the quadratic dual with the degree-2 kernel of the
    twisted composition, identifying each dual basis element ``alpha*`` with
    ``alpha (x) d_alpha``. With ``signs=False`` the plain linearization stands in for the
    twist.

    :return: :class:`~koszulkit.reports.TwistReport` with results ``relations_x`` and ``dims``
    :raises CategoryException: for families outside the rho-equipped ones
    """
    if c.family not in RHO_FAMILIES:
        raise CategoryException(
            "twist comparison needs one of {}, got {}".format(", ".join(RHO_FAMILIES), c.describe())
        )
    if not isinstance(iv, Interval):
        iv = Interval(*iv)
    l = linearize(c, iv)
    tw = twist_category(c, iv) if signs else linearize(c, iv)
    report = TwistReport("{} on {}".format(c.describe(), iv), signs=signs)
    cover = free_cover(l)
    twisted_cover = free_cover(tw)
    for x in range(iv.lo, iv.hi - 1):
        dual_relations = annihilator(cover.relations(x, 2))
        twisted_kernel = twisted_cover.relations(x, 2)
        equal = dual_relations == twisted_kernel
        report.add(
            "relations_{}".format(x),
            equal,
            {"x": x, "dual_dim": dual_relations.dim, "twist_kernel_dim": twisted_kernel.dim},
        )
    dual = quadratic_dual(l).base
    for x in iv.objects():
        for y in range(x + 1, iv.hi + 1):
            if dual.dim(x, y) != tw.dim(x, y):
                report.add("dims", False, {"hom": [x, y], "dual": dual.dim(x, y), "twist": tw.dim(x, y)})
    report.add("dims", True)
    LOG.info("check_twist_dual_iso(%s, signs=%s): %s", c.describe(), signs, report.passed)
    return report


check_twist_dual_iso_ex = make_check_function(check_twist_dual_iso)
