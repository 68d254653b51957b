"""
Finite-dimensional graded modules over a :class:`~koszulkit.lincat.LinCat`.

A module stores, for every occupied fiber ``(y, j)`` (object ``y``, degree ``j``):

* ``dims[(y, j)]``, the dimension of ``M(y)_j``;
* ``group_action[(y, j)]``, one square Matrix per generator of ``G_y``;
* ``arrow_action[(y, j)]``, one Matrix ``M(y)_j -> M(y+1)_{j+1}`` per arrow generator of
  ``hom(y, y+1)`` (see :meth:`~koszulkit.lincat.LinCat.arrow_generators`).

Every other action is derived: a degree-1 basis element is ``g o generator`` up to a
scalar, and a higher-degree one factors through degree 1 by
:meth:`~koszulkit.lincat.LinCat.factor_last`. Matrices act on column vectors.
"""
import logging
from collections import OrderedDict, defaultdict

from six import integer_types

from .conversions import vector_to_strings
from .exceptions import CategoryException, ModuleException, check_dimension, make_check_function
from .group_tensor import group_matrices
from .linalg import ONE, EchelonBasis, Matrix, Subspace, block_diagonal, vec_iadd
from .reports import ModuleReport

LOG = logging.getLogger(__name__)

INFINITY = float("inf")


class GradedModule(object):
    """
    A graded module given by its generator actions.

    :param lincat: the category acted on
    :param dims: dict ``(object, degree) -> dimension``; zero entries are dropped
    :param group_action: dict ``(object, degree) -> [Matrix per generator of G_object]``
    :param arrow_action: dict ``(object, degree) -> [Matrix per arrow generator]``; a
        missing entry acts as zero
    :param str name: printable name
    """

    def __init__(self, lincat, dims, group_action=None, arrow_action=None, name=None):
        self.lincat = lincat
        self.dims = OrderedDict(sorted((k, v) for k, v in dims.items() if v))
        self.group_action = group_action or {}
        self.arrow_action = arrow_action or {}
        self.name = name or "module"
        self._group_cache = {}
        self._arrow_cache = {}
        self._action_cache = {}
        self._check_shapes()

    def _check_shapes(self):
        l = self.lincat
        for (y, j), n in self.dims.items():
            if y not in l.interval:
                raise ModuleException("fiber outside the interval {}".format(l.interval), {"fiber": [y, j]})
            check_dimension("module fiber ({}, {})".format(y, j), n)
            gens = l.group(y).generators
            matrices = self.group_action.get((y, j))
            if matrices is None:
                if gens:
                    raise ModuleException("missing group action", {"fiber": [y, j]})
                self.group_action[(y, j)] = []
                matrices = []
            if len(matrices) != len(gens) or any(m.shape != (n, n) for m in matrices):
                raise ModuleException("group action has the wrong shape", {"fiber": [y, j]})
        for (y, j), matrices in list(self.arrow_action.items()):
            source = self.dim(y, j)
            target = self.dim(y + 1, j + 1)
            if not source or not target:
                del self.arrow_action[(y, j)]
                continue
            if len(matrices) != len(l.arrow_generators(y)):
                raise ModuleException("one matrix per arrow generator expected", {"fiber": [y, j]})
            if any(m.shape != (target, source) for m in matrices):
                raise ModuleException("arrow action has the wrong shape", {"fiber": [y, j]})

    def dim(self, y, j):
        return self.dims.get((y, j), 0)

    def fibers(self):
        return list(self.dims)

    def degrees_at(self, y):
        return [j for (yy, j) in self.dims if yy == y]

    def total_dim(self):
        return sum(self.dims.values())

    def is_zero(self):
        return not self.dims

    def group_matrix(self, y, j, g):
        """Action of the element ``g`` of ``G_y`` on ``M(y)_j``."""
        key = (y, j)
        if not self.dim(y, j):
            return Matrix.zeros(0, 0)
        if key not in self._group_cache:
            self._group_cache[key] = group_matrices(
                self.lincat.group(y), self.group_action.get(key, []), self.dim(y, j)
            )
        return self._group_cache[key][g]

    def generator_matrix(self, y, j, r):
        """Action of arrow generator ``r`` of ``hom(y, y+1)`` on ``M(y)_j``."""
        matrices = self.arrow_action.get((y, j))
        if matrices is None:
            return Matrix.zeros(self.dim(y + 1, j + 1), self.dim(y, j))
        return matrices[r]

    def arrow_matrix(self, y, j, a):
        """Action of basis element ``a`` of ``hom(y, y+1)`` on ``M(y)_j``."""
        key = (y, j, a)
        if key not in self._arrow_cache:
            target, source = self.dim(y + 1, j + 1), self.dim(y, j)
            if not target or not source:
                result = Matrix.zeros(target, source)
            else:
                result = None
                for coeff, g, r in self.lincat.arrow_expression(y)[a]:
                    term = self.generator_matrix(y, j, r)
                    if g:
                        term = self.group_matrix(y + 1, j + 1, g) * term
                    term = term.scale(coeff) if coeff != ONE else term
                    result = term if result is None else result + term
            self._arrow_cache[key] = result
        return self._arrow_cache[key]

    def action(self, x, z, j, k):
        """
        Action of basis element ``k`` of ``hom(x, z)`` from ``M(x)_j`` to
        ``M(z)_{j + z - x}``.
        """
        key = (x, z, j, k)
        if key in self._action_cache:
            return self._action_cache[key]
        d = z - x
        if d == 0:
            result = self.group_matrix(x, j, k)
        elif d == 1:
            result = self.arrow_matrix(x, j, k)
        elif not self.dim(x, j) or not self.dim(z, j + d):
            result = Matrix.zeros(self.dim(z, j + d), self.dim(x, j))
        else:
            a, v = self.lincat.factor_last(x, z, k)
            inner = None
            for i, coeff in v.items():
                term = self.action(x, z - 1, j, i).scale(coeff)
                inner = term if inner is None else inner + term
            result = self.arrow_matrix(z - 1, j + d - 1, a) * inner
        self._action_cache[key] = result
        return result

    def act(self, x, z, j, u, v):
        """Apply the vector ``u`` over ``hom(x, z)`` to the vector ``v`` in ``M(x)_j``."""
        out = {}
        for k, coeff in u.items():
            vec_iadd(out, self.action(x, z, j, k).apply(v), coeff)
        return out

    def describe(self):
        return "{} over {} (dims {})".format(self.name, self.lincat.describe(), dict(self.dims))

    def __repr__(self):
        return "GradedModule({}, total_dim={})".format(self.name, self.total_dim())


class SubspaceFamily(object):
    """
    A subspace of every fiber of a module. Missing fibers are zero.

    :param module: the ambient module
    :param spaces: dict ``(object, degree) -> Subspace``
    """

    def __init__(self, module, spaces=None):
        self.module = module
        self.spaces = {k: s for k, s in (spaces or {}).items() if s.dim}

    def space(self, y, j):
        s = self.spaces.get((y, j))
        if s is None:
            s = Subspace(self.module.dim(y, j))
        return s

    def dim(self, y, j):
        s = self.spaces.get((y, j))
        return s.dim if s is not None else 0

    def dims(self):
        return OrderedDict(sorted((k, s.dim) for k, s in self.spaces.items()))

    def is_zero(self):
        return not self.spaces

    def is_everything(self):
        return all(self.dim(y, j) == n for (y, j), n in self.module.dims.items())

    def is_subfamily_of(self, other):
        return all(s.is_subspace_of(other.space(*k)) for k, s in self.spaces.items())

    def missing(self):
        """
        First fiber not filled, with a basis vector of the module outside the family.

        :return: witness dict or None
        """
        for (y, j), n in self.module.dims.items():
            space = self.space(y, j)
            if space.dim < n:
                free = space.free_coordinates[0]
                return {
                    "fiber": [y, j],
                    "dim": n,
                    "generated_dim": space.dim,
                    "vector": vector_to_strings({free: ONE}, n),
                }
        return None

    def __eq__(self, other):
        if not isinstance(other, SubspaceFamily):
            return NotImplemented
        keys = set(self.spaces) | set(other.spaces)
        return all(self.space(*k) == other.space(*k) for k in keys)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def __repr__(self):
        return "SubspaceFamily({})".format(dict(self.dims()))


def zero_module(l, name="zero"):
    return GradedModule(l, {}, name=name)


def representable(l, x, shift=0):
    """
    ``C(x, -)<shift>``: fiber at ``y`` is ``hom(x, y)`` in degree ``y - x + shift``,
    acted on by left composition.
    """
    if x not in l.interval:
        raise CategoryException("object {} is outside the interval {}".format(x, l.interval))
    dims = {}
    group_action = {}
    arrow_action = {}
    for y in range(x, l.hi + 1):
        j = y - x + shift
        n = l.dim(x, y)
        dims[(y, j)] = n
        group_action[(y, j)] = [
            Matrix.from_columns([l.compose(x, y, y, g, b) for b in range(n)], n)
            for g in l.group(y).generators
        ]
        if y < l.hi:
            target = l.dim(x, y + 1)
            arrow_action[(y, j)] = [
                Matrix.from_columns([l.compose(x, y, y + 1, a, b) for b in range(n)], target)
                for a in l.arrow_generators(y)
            ]
    name = "C({}, -)".format(x) + ("<{}>".format(shift) if shift else "")
    return GradedModule(l, dims, group_action, arrow_action, name=name)


def regular_simple(l, x):
    """The group algebra of ``G_x`` at ``(x, 0)``, left regular action, arrows zero."""
    if x not in l.interval:
        raise CategoryException("object {} is outside the interval {}".format(x, l.interval))
    group = l.group(x)
    n = group.order
    action = [Matrix.from_columns([{group.mult[g][b]: ONE} for b in range(n)], n) for g in group.generators]
    return GradedModule(l, {(x, 0): n}, {(x, 0): action}, name="S{}".format(x))


def _close(m, y, j, echelon, queue):
    """Close the span in ``echelon`` under the generators of ``G_y``."""
    matrices = m.group_action.get((y, j), [])
    while queue:
        v = queue.pop()
        for g in matrices:
            w = g.apply(v)
            if w and echelon.add(w):
                queue.append(w)
    return echelon


def _saturate(m, seeds):
    """Smallest action-closed family containing ``seeds`` (dict fiber -> vectors)."""
    l = m.lincat
    pending = defaultdict(list)
    for key, vectors in seeds.items():
        pending[key].extend(v for v in vectors if v)
    spaces = {}
    for y in l.objects():
        for j in sorted(jj for (yy, jj) in list(pending) if yy == y):
            n = m.dim(y, j)
            echelon = EchelonBasis(n)
            queue = [v for v in pending[(y, j)] if echelon.add(v)]
            _close(m, y, j, echelon, queue)
            if not len(echelon):
                continue
            spaces[(y, j)] = Subspace(n, echelon)
            if y < l.hi and m.dim(y + 1, j + 1):
                for row in echelon.rows():
                    for r in range(len(l.arrow_generators(y))):
                        w = m.generator_matrix(y, j, r).apply(row)
                        if w:
                            pending[(y + 1, j + 1)].append(w)
    return SubspaceFamily(m, spaces)


def submodule_generated(m, gens):
    """
    Smallest submodule containing ``gens``, by saturation in increasing object order.

    :param m: GradedModule
    :param gens: iterable of ``(object, degree, sparse vector)``
    :return: SubspaceFamily
    """
    seeds = defaultdict(list)
    for y, j, v in gens:
        if not m.dim(y, j) and v:
            raise ModuleException("generator outside the occupied fibers", {"fiber": [y, j]})
        seeds[(y, j)].append(v)
    return _saturate(m, seeds)


def fiber_generators(m, keys):
    """All basis vectors of the fibers ``keys`` as generator triples."""
    out = []
    for y, j in keys:
        out.extend((y, j, {b: ONE}) for b in range(m.dim(y, j)))
    return out


def radical(m):
    """Images of all degree-1 arrows, closed under the group actions."""
    l = m.lincat
    spaces = {}
    for (y, j), n in m.dims.items():
        if y == l.lo or not m.dim(y - 1, j - 1):
            continue
        echelon = EchelonBasis(n)
        queue = []
        for r in range(len(l.arrow_generators(y - 1))):
            for column in m.generator_matrix(y - 1, j - 1, r).columns():
                if column and echelon.add(column):
                    queue.append(column)
        _close(m, y, j, echelon, queue)
        spaces[(y, j)] = Subspace(n, echelon)
    return SubspaceFamily(m, spaces)


class Top(object):
    """
    ``m / radical(m)``, fiberwise, with the induced group actions.

    The basis of the top fiber at ``(y, j)`` is the free coordinates of the radical there.
    """

    def __init__(self, m, rad=None):
        self.module = m
        self.radical = rad if rad is not None else radical(m)
        self.dims = OrderedDict()
        self.group_action = {}
        l = m.lincat
        for (y, j), n in m.dims.items():
            space = self.radical.space(y, j)
            t = n - space.dim
            if not t:
                continue
            self.dims[(y, j)] = t
            free = space.free_coordinates
            self.group_action[(y, j)] = [
                Matrix.from_columns([space.quotient_coordinates(g.apply({f: ONE})) for f in free], t)
                for g in m.group_action.get((y, j), [])
            ]
            LOG.debug("top of %s at (%s, %s): dim %s", m.name, y, j, t)
        self.group = {y: l.group(y) for (y, _) in self.dims}

    def project(self, y, j, v):
        return self.radical.space(y, j).quotient_coordinates(v)

    def section(self, y, j):
        """The basis vectors of ``M(y)_j`` at the free coordinates, as columns."""
        space = self.radical.space(y, j)
        return Matrix.from_columns([{f: ONE} for f in space.free_coordinates], self.module.dim(y, j))

    def total_dim(self):
        return sum(self.dims.values())


def top(m):
    return Top(m)


def submodule(m, family, name=None):
    """
    The family as a module with the restricted actions, in the RREF bases of its
    subspaces.

    :raises ModuleException: if the family is not closed under the actions
    """
    l = m.lincat
    dims = {}
    group_action = {}
    arrow_action = {}

    def coordinates(space, v, witness):
        if not space.contains(v):
            raise ModuleException("subspace family is not closed under the actions", witness)
        return dict((k, c) for k, c in enumerate(space.coordinates(v)) if c)

    for (y, j), space in family.spaces.items():
        basis = space.vectors()
        dims[(y, j)] = space.dim
        group_action[(y, j)] = [
            Matrix.from_columns(
                [coordinates(space, g.apply(v), {"fiber": [y, j], "generator": pos}) for v in basis], space.dim
            )
            for pos, g in enumerate(m.group_action.get((y, j), []))
        ]
        if y < l.hi:
            target = family.space(y + 1, j + 1)
            matrices = []
            for r in range(len(l.arrow_generators(y))):
                columns = []
                for v in basis:
                    w = m.generator_matrix(y, j, r).apply(v) if m.dim(y + 1, j + 1) else {}
                    columns.append(coordinates(target, w, {"fiber": [y, j], "arrow": r}))
                matrices.append(Matrix.from_columns(columns, target.dim))
            arrow_action[(y, j)] = matrices
    return GradedModule(l, dims, group_action, arrow_action, name=name or "sub({})".format(m.name))


def quotient(m, s, name=None):
    """
    ``m / s`` with the induced actions, in the bases given by the free coordinates.

    :raises ModuleException: if ``s`` is not closed, with the offending fiber
    """
    l = m.lincat
    for (y, j), space in s.spaces.items():
        for pos, g in enumerate(m.group_action.get((y, j), [])):
            for v in space.vectors():
                if not space.contains(g.apply(v)):
                    raise ModuleException("subspace family is not closed", {"fiber": [y, j], "generator": pos})
        if y < l.hi:
            target = s.space(y + 1, j + 1)
            for r in range(len(l.arrow_generators(y))):
                for v in space.vectors():
                    w = m.generator_matrix(y, j, r).apply(v) if m.dim(y + 1, j + 1) else {}
                    if not target.contains(w):
                        raise ModuleException("subspace family is not closed", {"fiber": [y, j], "arrow": r})
    dims = {}
    group_action = {}
    arrow_action = {}
    for (y, j), n in m.dims.items():
        space = s.space(y, j)
        free = space.free_coordinates
        if not free:
            continue
        dims[(y, j)] = len(free)
        group_action[(y, j)] = [
            Matrix.from_columns([space.quotient_coordinates(g.apply({f: ONE})) for f in free], len(free))
            for g in m.group_action.get((y, j), [])
        ]
        if y < l.hi and m.dim(y + 1, j + 1):
            target = s.space(y + 1, j + 1)
            t = m.dim(y + 1, j + 1) - target.dim
            arrow_action[(y, j)] = [
                Matrix.from_columns(
                    [target.quotient_coordinates(m.generator_matrix(y, j, r).apply({f: ONE})) for f in free], t
                )
                for r in range(len(l.arrow_generators(y)))
            ]
    return GradedModule(l, dims, group_action, arrow_action, name=name or "{}/sub".format(m.name))


def direct_sum(*modules):
    """Direct sum over a common category; blocks follow argument order."""
    if not modules:
        raise ModuleException("direct_sum needs at least one module")
    l = modules[0].lincat
    if any(m.lincat is not l for m in modules):
        raise ModuleException("direct_sum of modules over different categories")
    keys = sorted(set(k for m in modules for k in m.dims))
    dims = {k: sum(m.dim(*k) for m in modules) for k in keys}
    group_action = {}
    arrow_action = {}
    for y, j in keys:
        parts = [m for m in modules]
        ngens = len(l.group(y).generators)
        group_action[(y, j)] = [
            block_diagonal([m.group_matrix(y, j, l.group(y).generators[pos]) for m in parts])
            for pos in range(ngens)
        ]
        if y < l.hi and dims.get((y + 1, j + 1)):
            arrow_action[(y, j)] = [
                block_diagonal([m.generator_matrix(y, j, r) for m in parts])
                for r in range(len(l.arrow_generators(y)))
            ]
    name = " + ".join(m.name for m in modules)
    return GradedModule(l, dims, group_action, arrow_action, name=name)


def shift(m, j):
    """``m<j>``: every fiber moves up ``j`` degrees."""
    if not isinstance(j, integer_types):
        raise TypeError("shift must be an integer")
    move = lambda d: {(y, i + j): v for (y, i), v in d.items()}
    return GradedModule(
        m.lincat,
        move(m.dims),
        move(m.group_action),
        move(m.arrow_action),
        name="{}<{}>".format(m.name, j),
    )


def restrict_genetic(m):
    """
    ``M o iota`` for the genetic embedding ``iota = I (.) -``: the fiber at ``(x, i)`` is
    ``M(x+1)_i`` and ``alpha`` acts as ``I (.) alpha``. Lives on ``[lo, hi - 1]``.

    :raises CategoryException: for categories without a monoidal structure or twisted ones
    """
    l = m.lincat
    category = getattr(l, "category", None)
    if category is None or not category.HAS_TENSOR or getattr(l, "sign", None) is not None:
        raise CategoryException("{} has no genetic embedding".format(l.describe()))
    if l.hi - 1 < l.lo:
        raise CategoryException("restriction needs an interval of width at least 1")
    target = l.truncated(l.lo, l.hi - 1)
    dims = {}
    group_action = {}
    arrow_action = {}
    for (y, i), n in m.dims.items():
        x = y - 1
        if x < l.lo:
            continue
        dims[(x, i)] = n
        group_action[(x, i)] = [
            m.group_matrix(y, i, l.genetic_image(x, x, g)) for g in target.group(x).generators
        ]
        if x < target.hi:
            arrow_action[(x, i)] = [
                m.arrow_matrix(y, i, l.genetic_image(x, x + 1, a)) for a in target.arrow_generators(x)
            ]
    return GradedModule(target, dims, group_action, arrow_action, name="{}|".format(m.name))


def ini(m):
    """Smallest occupied object, ``inf`` for the zero module."""
    if m.is_zero():
        return INFINITY
    return min(y for (y, _) in m.dims)


def generated_by(m, keys):
    """
    Whether the fibers ``keys`` generate ``m``.

    :return: (bool, witness or None)
    """
    family = submodule_generated(m, fiber_generators(m, keys))
    witness = family.missing()
    return witness is None, witness


def generated_in_degree(m, i):
    return generated_by(m, [k for k in m.dims if k[1] == i])


def generated_in_position(m, x):
    return generated_by(m, [k for k in m.dims if k[0] == x])


class GenerationReport(object):
    """
    For every occupied degree ``i`` (resp. object ``x``): do the fibers of degree
    ``<= i`` (resp. objects ``<= x``) generate the module.
    """

    def __init__(self, module, degrees, positions):
        self.module = module
        self.degrees = degrees
        self.positions = positions

    @property
    def min_degree(self):
        return min((i for i, ok in self.degrees.items() if ok), default=None)

    @property
    def min_position(self):
        return min((x for x, ok in self.positions.items() if ok), default=None)

    def to_dict(self):
        return OrderedDict(
            [
                ("module", self.module.name),
                ("generated_in_degrees_le", self.degrees),
                ("generated_in_positions_le", self.positions),
                ("min_degree", self.min_degree),
                ("min_position", self.min_position),
            ]
        )


def generation_report(m):
    degrees = OrderedDict()
    for i in sorted(set(j for (_, j) in m.dims)):
        degrees[i] = generated_by(m, [k for k in m.dims if k[1] <= i])[0]
    positions = OrderedDict()
    for x in sorted(set(y for (y, _) in m.dims)):
        positions[x] = generated_by(m, [k for k in m.dims if k[0] <= x])[0]
    return GenerationReport(m, degrees, positions)


def validate_module(m):
    """
    Check that the stored actions define a module: group relations, compatibility of
    arrows with both group actions, and vanishing of the degree-2 relations.

    :return: :class:`~koszulkit.reports.ModuleReport`
    """
    from .quadratic import free_cover

    l = m.lincat
    report = ModuleReport(m.name)
    for (y, j) in m.dims:
        group = l.group(y)
        for g in group.generators:
            for h in group.elements():
                if m.group_matrix(y, j, g) * m.group_matrix(y, j, h) != m.group_matrix(y, j, group.mult[g][h]):
                    report.add("GROUP", False, {"fiber": [y, j], "elements": [g, h]})
        if y >= l.hi or not m.dim(y + 1, j + 1):
            continue
        for a in range(l.dim(y, y + 1)):
            action = m.arrow_matrix(y, j, a)
            for h in l.group(y).generators:
                expected = _combine(m, y, j, l.compose(y, y, y + 1, a, h))
                if expected != action * m.group_matrix(y, j, h):
                    report.add("INTERTWINE", False, {"fiber": [y, j], "arrow": a, "right": h})
            for g in l.group(y + 1).generators:
                expected = _combine(m, y, j, l.compose(y, y + 1, y + 1, g, a))
                if expected != m.group_matrix(y + 1, j + 1, g) * action:
                    report.add("INTERTWINE", False, {"fiber": [y, j], "arrow": a, "left": g})
    cover = free_cover(l)
    for (x, j) in m.dims:
        if x + 2 > l.hi or not m.dim(x + 2, j + 2):
            continue
        for relation in cover.relations(x, 2).vectors():
            total = Matrix.zeros(m.dim(x + 2, j + 2), m.dim(x, j))
            for k, coeff in relation.items():
                a, b = cover.basis(x, x + 2)[k]
                total = total + (m.arrow_matrix(x + 1, j + 1, a) * m.arrow_matrix(x, j, b)).scale(coeff)
            if not total.is_zero():
                report.add("RELATIONS", False, {"fiber": [x, j], "relation": sorted(relation)})
                break
    for name in ("GROUP", "INTERTWINE", "RELATIONS"):
        report.add(name, True)
    return report


def _combine(m, y, j, vector):
    total = Matrix.zeros(m.dim(y + 1, j + 1), m.dim(y, j))
    for a, coeff in vector.items():
        total = total + m.arrow_matrix(y, j, a).scale(coeff)
    return total


validate_module_ex = make_check_function(validate_module)
