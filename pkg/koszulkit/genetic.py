"""
The self-embedding ``alpha -> I (.) alpha`` as a genetic functor: decomposition of
restricted representables and the splitting of restricted syzygies.

For ``x >= 1`` every ``f: x -> 1+y`` factors minimally as ``(I (.) f2) o f1`` with
``f1: x -> 1+z``, ``z in {x-1, x}``, unique up to ``G_z``. Choosing orbit
representatives ``beta_r`` (``z = x``) and ``gamma_s`` (``z = x-1``) gives

    Theta: C(x, -)^m (+) C(x-1, -)^n -> C(x, -) restricted,
           alpha in copy r -> (I (.) alpha) o beta_r
"""
import logging
from collections import OrderedDict

from .category import Interval
from .exceptions import CategoryException, GroupException, ModuleException, make_check_function
from .group_tensor import GroupTensor, character, group_matrices, tensor_dimension
from .linalg import ONE, ZERO, Matrix, Subspace, kernel_basis, rank, vec_iadd
from .modules import Top, generated_in_position, ini, restrict_genetic, submodule_generated
from .reports import DecompositionReport, LemmaReport
from .resolution import equivariant_section, projective_cover
from .zoo import factorize_min

LOG = logging.getLogger(__name__)


def orbit_reps(elements, action, group):
    """
    One representative per orbit, the least element of each.

    :param elements: sortable points
    :param action: callable ``(group element, point) -> point``
    :param group: :class:`~koszulkit.groups.FiniteGroup`
    :raises GroupException: if ``action`` is not a group action
    """
    points = sorted(elements)
    group.check_action(action, points)
    seen = set()
    reps = []
    for p in points:
        if p in seen:
            continue
        orbit = set(action(g, p) for g in group.elements())
        if not orbit <= set(points):
            raise GroupException("orbit of {} leaves the given elements".format(p))
        seen |= orbit
        reps.append(p)
    return reps


class DecompositionWitness(object):
    """
    Orbit representatives realizing the decomposition at ``x``; ``theta`` caches the
    matrix of ``Theta`` per object.
    """

    def __init__(self, category, x, beta_reps, gamma_reps):
        self.category = category
        self.x = x
        self.beta_reps = list(beta_reps)
        self.gamma_reps = list(gamma_reps)
        self.theta = {}

    @property
    def m(self):
        return len(self.beta_reps)

    @property
    def n(self):
        return len(self.gamma_reps)

    def theta_matrix(self, y):
        """``Theta`` at ``y``: columns are the copies of ``hom(x, y)`` then of ``hom(x-1, y)``."""
        if y not in self.theta:
            c = self.category
            x = self.x
            target = c.hom(x, 1 + y)
            columns = []
            for reps, source in ((self.beta_reps, x), (self.gamma_reps, x - 1)):
                for rep in reps:
                    for alpha in c.hom(source, y):
                        columns.append({c.index(c.compose(c.genetic_embed(alpha), rep)): ONE})
            self.theta[y] = Matrix.from_columns(columns, len(target))
        return self.theta[y]

    def to_dict(self):
        return OrderedDict(
            [
                ("x", self.x),
                ("m", self.m),
                ("n", self.n),
                ("beta_reps", [str(b) for b in self.beta_reps]),
                ("gamma_reps", [str(g) for g in self.gamma_reps]),
            ]
        )

    def __repr__(self):
        return "DecompositionWitness(x={}, m={}, n={})".format(self.x, self.m, self.n)


def _lifted_action(c, z):
    units = c.hom(z, z)
    return lambda g, f: c.compose(c.genetic_embed(units[g]), f)


def decomposition_numbers(c, x):
    """
    ``m_x`` and ``n_x``: orbits of ``G_x`` on the morphisms ``x -> 1+x`` not factoring
    through ``x - 1``, and of ``G_{x-1}`` on the morphisms ``x -> x`` that do.

    :return: :class:`DecompositionWitness`
    """
    if not c.HAS_TENSOR:
        raise CategoryException("{} has no monoidal structure".format(c.describe()))
    if x < c.MIN_OBJECT + 1:
        raise CategoryException("decomposition needs x >= {}".format(c.MIN_OBJECT + 1))
    primed = [f for f in c.hom(x, 1 + x) if factorize_min(c, f).z == x]
    through = [f for f in c.hom(x, x) if factorize_min(c, f).z == x - 1]
    beta_reps = orbit_reps(primed, _lifted_action(c, x), c.group(x))
    gamma_reps = orbit_reps(through, _lifted_action(c, x - 1), c.group(x - 1))
    witness = DecompositionWitness(c, x, beta_reps, gamma_reps)
    LOG.debug("decomposition of %s at %s: m=%s n=%s", c.describe(), x, witness.m, witness.n)
    return witness


def verify_theta(c, x, iv, witness=None):
    """
    ``Theta`` is square and invertible at every ``y`` with ``x - 1 <= y`` and ``1 + y`` in ``iv``.

    :return: :class:`~koszulkit.reports.DecompositionReport` with results ``theta_y``
    """
    if not isinstance(iv, Interval):
        iv = Interval(*iv)
    if witness is None:
        witness = decomposition_numbers(c, x)
    report = DecompositionReport("{} at {} on {}".format(c.describe(), x, iv), x=x, m=witness.m, n=witness.n)
    report.details["witness"] = witness.to_dict()
    for y in range(max(iv.lo, x - 1), iv.hi):
        theta = witness.theta_matrix(y)
        r = rank(theta)
        counts = [len(c.hom(x, 1 + y)), len(c.hom(x, y)), len(c.hom(x - 1, y))]
        report.add(
            "theta_{}".format(y),
            theta.rows == theta.cols == r,
            {"y": y, "rows": theta.rows, "cols": theta.cols, "rank": r},
        )
        report.add(
            "counts_{}".format(y),
            counts[0] == witness.m * counts[1] + witness.n * counts[2],
            {"y": y, "counts": counts, "m": witness.m, "n": witness.n},
        )
    LOG.info("verify_theta(%s, %s): %s", c.describe(), x, report.passed)
    return report


verify_theta_ex = make_check_function(verify_theta)


def _right_character(l, x, z):
    """Character of ``hom(x, z)`` as a right ``G_x``-module."""
    group = l.group(x)
    return [
        sum((l.compose(x, x, z, a, g).get(a, ZERO) for a in range(l.dim(x, z))), ZERO)
        for g in group.elements()
    ]


def _x_cover(l, n, top, x, j):
    """Tensors ``hom(x, z) (x)_{G_x} T`` for the top ``T`` at ``(x, j)`` and their maps into ``n``."""
    group = l.group(x)
    t = top.dims[(x, j)]
    section = equivariant_section(n, top, x, j)
    tensors, maps = OrderedDict(), OrderedDict()
    for z in range(x, l.hi + 1):
        tensor = GroupTensor(
            group,
            l.dim(x, z),
            lambda g, a, z=z: l.compose(x, x, z, a, g),
            t,
            top.group_action[(x, j)],
            what="cover of {} at ({}, {}) -> {}".format(n.name, x, j, z),
        )
        rows = n.dim(z, j + z - x)
        columns = [n.action(x, z, j, a).apply(section.column(b)) if rows else {} for a, b in tensor.basis]
        tensors[z] = tensor
        maps[z] = Matrix.from_columns(columns, rows)
    return tensors, maps, section


def _contractions(l, x, z, tensor, top_matrices, vector):
    """Vectors of ``T`` obtained by pairing the invariant lift of ``vector`` with the basis of ``hom(x, z)``."""
    group = l.group(x)
    out = {}
    for s, coeff in vector.items():
        a, b = tensor.basis[s]
        for g in group.elements():
            moved = top_matrices[group.inverse(g)].column(b)
            for c, w in l.compose(x, x, z, a, g).items():
                vec_iadd(out.setdefault(c, {}), moved, coeff * w)
    return [v for v in out.values() if v]


def _stable_complement(group, top_matrices, v_space, t):
    """A ``G``-stable complement of the ``G``-stable subspace ``v_space`` of Q^t."""
    total = [{} for _ in range(t)]
    for g in group.elements():
        inverse = top_matrices[group.inverse(g)]
        for i in range(t):
            moved = inverse.column(i)
            projected = dict(moved)
            vec_iadd(projected, v_space.reduce(moved), -ONE)
            vec_iadd(total[i], top_matrices[g].apply(projected), ONE / group.order)
    complement = []
    for i in range(t):
        v = {i: ONE}
        vec_iadd(v, total[i], -ONE)
        complement.append(v)
    return Subspace(t, complement)


def split_off_position(l, n, x):
    """
    Split ``n = S (+) image(cover of Q)`` with ``Q`` generated in position ``x``.

    ``S`` is generated by the tops away from ``x`` together with the part of the tops
    at ``x`` carrying relations modulo them; ``Q`` covers a ``G_x``-stable complement
    of that part.

    :return: (``S`` as a SubspaceFamily, ``{j: complement Subspace}``, ``{(z, k): Subspace}``
        of the complement inside each tensor, ``{j: (tensors, maps, section)}``)
    """
    top = Top(n)
    group = l.group(x)
    others = []
    for (y, j) in top.dims:
        if y != x:
            others.extend((y, j, column) for column in top.section(y, j).columns())
    rest = submodule_generated(n, others)

    related, complements, covers = OrderedDict(), OrderedDict(), OrderedDict()
    for (y, j), t in top.dims.items():
        if y != x:
            continue
        tensors, maps, section = _x_cover(l, n, top, x, j)
        top_matrices = group_matrices(group, top.group_action[(x, j)], t)
        spans = []
        for z, matrix in maps.items():
            space = rest.space(z, j + z - x)
            modulo = Matrix.from_columns(
                [space.quotient_coordinates(c) for c in matrix.columns()], matrix.rows - space.dim
            )
            for k in kernel_basis(modulo).vectors():
                spans.extend(_contractions(l, x, z, tensors[z], top_matrices, k))
        related[j] = Subspace(t, [g.apply(v) for g in top_matrices for v in spans])
        complements[j] = _stable_complement(group, top_matrices, related[j], t)
        covers[j] = (tensors, maps, section)
        LOG.debug("split_off_position(%s, %s): top (%s, %s) related %s", n.name, x, x, j, related[j].dim)

    gens = list(others)
    for j, v_space in related.items():
        section = covers[j][2]
        gens.extend((x, j, section.apply(v)) for v in v_space.vectors())
    kept = submodule_generated(n, gens)

    images = OrderedDict()
    for j, (tensors, _, _) in covers.items():
        for z, tensor in tensors.items():
            vectors = [
                tensor.project_vector({a: ONE}, u)
                for a in range(tensor.dim_a)
                for u in complements[j].vectors()
            ]
            space = Subspace(tensor.dim, vectors)
            if space.dim:
                images[(z, j + z - x)] = space
    return kept, complements, images, covers


def verify_crucial_lemma(l, m, x):
    """
    Split ``(Omega m)`` restricted as ``Omega(m restricted) (+) Q`` with ``Q`` projective
    and generated in position ``x``.

    The dimensions of ``Q`` come from the characters of the tops at ``x``. The split
    itself is built: the cover of a ``G_x``-stable complement in the tops at ``x`` maps
    into the restricted syzygy, and must be injective with image meeting the submodule
    generated by the remaining tops only in zero, the two together filling everything.

    :return: :class:`~koszulkit.reports.LemmaReport`
    :raises ModuleException: if ``m`` is not generated in position ``x`` or starts at the
        first object
    """
    if ini(m) < l.lo + 1 and not m.is_zero():
        raise ModuleException("module must vanish at the first object", {"ini": ini(m)})
    generated, witness = generated_in_position(m, x)
    if not generated:
        raise ModuleException("module is not generated in position {}".format(x), witness)

    restricted_syzygy = restrict_genetic(projective_cover(m).kernel)
    restricted = restrict_genetic(m)
    syzygy_of_restricted = projective_cover(restricted, check=False).kernel
    target = restricted.lincat
    report = LemmaReport("{} at {}".format(m.name, x), x=x)

    top_a = Top(restricted_syzygy)
    top_b = Top(syzygy_of_restricted)
    group = target.group(x)
    complement = OrderedDict()
    for key in sorted(set(top_a.dims) | set(top_b.dims)):
        y, j = key
        da, db = top_a.dims.get(key, 0), top_b.dims.get(key, 0)
        if y != x:
            if da != db:
                report.add("tops", False, {"fiber": [y, j], "restricted_syzygy": da, "syzygy_of_restricted": db})
            continue
        if da < db:
            report.add("tops", False, {"fiber": [y, j], "restricted_syzygy": da, "syzygy_of_restricted": db})
            continue
        chi_a = character(group, top_a.group_action.get(key, []), da) if da else [0] * group.order
        chi_b = character(group, top_b.group_action.get(key, []), db) if db else [0] * group.order
        if da > db:
            complement[j] = [a - b for a, b in zip(chi_a, chi_b)]
    report.add("tops", True)

    complement_dims = {}
    try:
        for j, chi in complement.items():
            for z in range(x, target.hi + 1):
                n = tensor_dimension(group, _right_character(target, x, z), chi)
                if n:
                    complement_dims[(z, j + z - x)] = n
    except ValueError as exc:
        report.add("dims", False, {"complement": str(exc)})
    report.details["complement_dims"] = OrderedDict(sorted(complement_dims.items()))

    keys = set(restricted_syzygy.dims) | set(syzygy_of_restricted.dims) | set(complement_dims)
    for key in sorted(keys):
        expected = syzygy_of_restricted.dim(*key) + complement_dims.get(key, 0)
        if restricted_syzygy.dim(*key) != expected:
            report.add("dims", False, {"fiber": list(key), "found": restricted_syzygy.dim(*key), "expected": expected})
    report.add("dims", True)

    kept, complements, images, covers = split_off_position(target, restricted_syzygy, x)
    split_dims = OrderedDict((key, space.dim) for key, space in sorted(images.items()))
    report.details["split_dims"] = split_dims
    for j, (_, maps, _) in covers.items():
        for z, matrix in maps.items():
            key = (z, j + z - x)
            space = kept.space(*key)
            q = images.get(key)
            found = [space.quotient_coordinates(matrix.apply(v)) for v in q.vectors()] if q else []
            injective = rank(Matrix.from_columns(found, restricted_syzygy.dim(*key) - space.dim)) == len(found)
            if not injective:
                report.add("split", False, {"fiber": list(key), "complement": len(found), "meets": "kernel or remaining tops"})
    for key in sorted(set(restricted_syzygy.dims) | set(images)):
        if kept.dim(*key) + split_dims.get(key, 0) != restricted_syzygy.dim(*key):
            report.add(
                "split",
                False,
                {"fiber": list(key), "kept": kept.dim(*key), "complement": split_dims.get(key, 0),
                 "total": restricted_syzygy.dim(*key)},
            )
    report.add("split", True)

    for j, space in complements.items():
        expected = top_a.dims.get((x, j), 0) - top_b.dims.get((x, j), 0)
        if space.dim != expected:
            report.add("complement", False, {"degree": j, "found": space.dim, "expected": expected})
    if dict(split_dims) != complement_dims:
        report.add("complement", False, {"found": dict(split_dims), "expected": complement_dims})
    kept_dims = {key: d for key, d in kept.dims().items() if d}
    if kept_dims != dict(syzygy_of_restricted.dims):
        report.add("complement", False, {"kept": kept_dims, "syzygy_of_restricted": dict(syzygy_of_restricted.dims)})
    report.add("complement", True)
    LOG.info("verify_crucial_lemma(%s, %s): %s", m.name, x, report.passed)
    return report


verify_crucial_lemma_ex = make_check_function(verify_crucial_lemma)
