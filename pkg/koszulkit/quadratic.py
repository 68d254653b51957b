"""
Free covers, quadraticity and quadratic duals of truncated categories.

The free cover ``C^`` of ``l`` is the tensor category of the degree-1 part over the
degree-0 part:

    C^(x, x) = k G_x,   C^(x, x+1) = hom(x, x+1),
    C^(x, z) = hom(z-1, z) (x)_{k G_{z-1}} C^(x, z-1)

Each basis element of ``C^(x, z)``, ``z >= x + 2``, is a pure tensor ``(a, b)`` with
``a`` a basis element of ``hom(z-1, z)`` and ``b`` one of ``C^(x, z-1)``, so it is the
class of a path of degree-1 basis elements. ``pi: C^ -> l`` multiplies paths out.
"""
import logging
import warnings
import weakref

from .exceptions import CategoryException, check_dimension, make_check_function
from .group_tensor import GroupTensor, group_matrices
from .koszulkit_warnings import KoszulkitWarning
from .lincat import LinCat, OppositeLinCat
from .linalg import ONE, EchelonBasis, Matrix, Subspace, annihilator, kernel_basis, vec_iadd
from .reports import QuadraticReport

LOG = logging.getLogger(__name__)

_COVERS = weakref.WeakKeyDictionary()


class FreeCover(object):
    """
    The free cover of ``l``, built lazily fiber by fiber. Only the degree 0 and 1
    structure of ``l`` is used, except by :meth:`pi`.
    """

    def __init__(self, l):
        self.lincat = l
        self._tensors = {}
        self._left = {}
        self._left_all = {}
        self._right = {}
        self._right_group = {}
        self._pi = {}
        self._relations = {}

    @property
    def interval(self):
        return self.lincat.interval

    def dim(self, x, z):
        d = z - x
        if d < 0:
            return 0
        if d <= 1:
            return self.lincat.dim(x, z)
        return self.tensor(x, z).dim

    def tensor(self, x, z):
        """The :class:`~koszulkit.group_tensor.GroupTensor` realizing ``C^(x, z)``."""
        key = (x, z)
        if key not in self._tensors:
            l = self.lincat
            y = z - 1
            self._tensors[key] = GroupTensor(
                l.group(y),
                l.dim(y, z),
                lambda g, a: l.compose(y, y, z, a, g),
                self.dim(x, y),
                self.left_generators(x, y),
                what="free cover fiber ({}, {})".format(x, z),
            )
        return self._tensors[key]

    def basis(self, x, z):
        """Pure-tensor pairs ``(a, b)`` of the basis of ``C^(x, z)``, ``z >= x + 2``."""
        return self.tensor(x, z).basis

    def path(self, x, z, k):
        """Degree-1 basis indices of the path of basis ``k``, last arrow first."""
        if z - x == 1:
            return (k,)
        a, b = self.basis(x, z)[k]
        return (a,) + self.path(x, z - 1, b)

    def left_generators(self, x, z):
        """Matrices of the generators of ``G_z`` acting on ``C^(x, z)``."""
        key = (x, z)
        if key not in self._left:
            l = self.lincat
            n = self.dim(x, z)
            gens = l.group(z).generators
            if z - x <= 1:
                matrices = [Matrix.from_columns([l.compose(x, z, z, g, b) for b in range(n)], n) for g in gens]
            else:
                t = self.tensor(x, z)
                matrices = [
                    Matrix.from_columns(
                        [t.project_vector(l.compose(z - 1, z, z, g, a), {b: ONE}) for a, b in t.basis], n
                    )
                    for g in gens
                ]
            self._left[key] = matrices
        return self._left[key]

    def left_matrix(self, x, z, g):
        key = (x, z)
        if key not in self._left_all:
            self._left_all[key] = group_matrices(
                self.lincat.group(z), self.left_generators(x, z), self.dim(x, z)
            )
        return self._left_all[key][g]

    def left_mult(self, x, z, a, v):
        """``a o v`` for ``a`` a basis element of ``hom(z-1, z)`` and ``v`` over ``C^(x, z-1)``."""
        if z - 1 == x:
            out = {}
            for g, coeff in v.items():
                vec_iadd(out, self.lincat.compose(x, x, z, a, g), coeff)
            return out
        return self.tensor(x, z).project(a, v)

    def _right_basis(self, x, z, k, c):
        key = (x, z, k, c)
        if key not in self._right:
            l = self.lincat
            d = z - (x + 1)
            if d == 0:
                result = l.compose(x, x + 1, x + 1, k, c)
            elif d == 1:
                result = self.tensor(x, z).project_pair(k, c)
            else:
                a, b = self.basis(x + 1, z)[k]
                result = self.tensor(x, z).project(a, self._right_basis(x, z - 1, b, c))
            self._right[key] = result
        return self._right[key]

    def right_mult(self, x, z, w, c):
        """``w o c`` for ``w`` over ``C^(x+1, z)`` and ``c`` a basis element of ``hom(x, x+1)``."""
        out = {}
        for k, coeff in w.items():
            vec_iadd(out, self._right_basis(x, z, k, c), coeff)
        return out

    def _right_group_basis(self, x, z, k, h):
        key = (x, z, k, h)
        if key not in self._right_group:
            l = self.lincat
            d = z - x
            if d <= 1:
                result = l.compose(x, x, z, k, h)
            else:
                a, b = self.basis(x, z)[k]
                result = self.tensor(x, z).project(a, self._right_group_basis(x, z - 1, b, h))
            self._right_group[key] = result
        return self._right_group[key]

    def right_group(self, x, z, v, h):
        """``v o h`` for ``v`` over ``C^(x, z)`` and ``h`` in ``G_x``."""
        out = {}
        for k, coeff in v.items():
            vec_iadd(out, self._right_group_basis(x, z, k, h), coeff)
        return out

    def compose(self, x, y, z, u, v):
        """``u o v`` for ``u`` over ``C^(y, z)`` and ``v`` over ``C^(x, y)``."""
        if y == z:
            out = {}
            for g, coeff in u.items():
                vec_iadd(out, self.left_matrix(x, z, g).apply(v), coeff)
            return out
        if x == y:
            out = {}
            for h, coeff in v.items():
                vec_iadd(out, self.right_group(x, z, u, h), coeff)
            return out
        out = {}
        for k, coeff in u.items():
            if z - y == 1:
                vec_iadd(out, self.left_mult(x, z, k, v), coeff)
            else:
                a, b = self.basis(y, z)[k]
                inner = self.compose(x, y, z - 1, {b: ONE}, v)
                vec_iadd(out, self.left_mult(x, z, a, inner), coeff)
        return out

    def pi(self, x, z):
        """Matrix of ``pi: C^(x, z) -> hom(x, z)``."""
        key = (x, z)
        if key not in self._pi:
            l = self.lincat
            if z - x <= 1:
                result = Matrix.identity(l.dim(x, z))
            else:
                inner = self.pi(x, z - 1)
                columns = []
                for a, b in self.basis(x, z):
                    column = {}
                    for i, coeff in inner.column(b).items():
                        vec_iadd(column, l.compose(x, z - 1, z, a, i), coeff)
                    columns.append(column)
                result = Matrix.from_columns(columns, l.dim(x, z))
            self._pi[key] = result
        return self._pi[key]

    def relations(self, x, d):
        """``K(x, x+d)``: the kernel of ``pi`` in degree ``d``, as a Subspace."""
        key = (x, d)
        if key not in self._relations:
            self._relations[key] = kernel_basis(self.pi(x, x + d))
            LOG.debug(
                "relations at (%s, %s): %s of %s", x, x + d, self._relations[key].dim, self.dim(x, x + d)
            )
        return self._relations[key]


def free_cover(l):
    """The free cover of ``l``, shared between calls on the same object."""
    cover = _COVERS.get(l)
    if cover is None:
        cover = FreeCover(l)
        _COVERS[l] = cover
    return cover


def relations_deg2(l, x):
    """Kernel of ``pi`` on ``C^(x, x+2)``."""
    if x + 2 > l.hi or x < l.lo:
        raise CategoryException("relations at {} need x + 2 <= {}".format(x, l.hi))
    return free_cover(l).relations(x, 2)


def is_quadratic(l):
    """
    Check that the kernel of ``pi`` is generated in degree 2 as a bimodule:
    ``K_d = C^_1 K_{d-1} + K_{d-1} C^_1`` for every ``3 <= d <= width``.

    :return: :class:`~koszulkit.reports.QuadraticReport` with results ``degree_d``
    """
    cover = free_cover(l)
    report = QuadraticReport(l.describe())
    for d in range(3, l.interval.width + 1):
        name = "degree_{}".format(d)
        for x in range(l.lo, l.hi - d + 1):
            z = x + d
            kernel = cover.relations(x, d)
            generated = EchelonBasis(cover.dim(x, z))
            for v in cover.relations(x, d - 1).vectors():
                for a in range(l.dim(z - 1, z)):
                    generated.add(cover.left_mult(x, z, a, v))
            for v in cover.relations(x + 1, d - 1).vectors():
                for c in range(l.dim(x, x + 1)):
                    generated.add(cover.right_mult(x, z, v, c))
            generated = Subspace(cover.dim(x, z), generated)
            if generated != kernel:
                report.add(name, False, {"x": x, "d": d, "kernel_dim": kernel.dim, "generated_dim": generated.dim})
        report.add(name, True)
    LOG.info("is_quadratic(%s): %s", l.describe(), report.passed)
    return report


is_quadratic_ex = make_check_function(is_quadratic)


class PathQuotientLinCat(LinCat):
    """
    The free cover of the degree 0 and 1 parts of ``degree_one`` modulo the two-sided
    ideal generated by ``relations``.

    :param degree_one: LinCat supplying groups and degree-1 bimodules
    :param relations: dict ``(x, d) -> list of vectors`` over ``C^(x, x+d)``
    """

    def __init__(self, degree_one, relations, name=None):
        super(PathQuotientLinCat, self).__init__(degree_one.interval)
        self.free = free_cover(degree_one)
        self.relation_generators = dict(relations)
        self.name = name or "path quotient of ({})".format(degree_one.describe())
        self._ideal = {}

    def group(self, x):
        return self.free.lincat.group(x)

    def ideal(self, x, z):
        """The ideal in ``C^(x, z)``, closed on both sides under arrows and groups."""
        key = (x, z)
        if key not in self._ideal:
            free = self.free
            n = free.dim(x, z)
            d = z - x
            echelon = EchelonBasis(n)
            queue = [v for v in self.relation_generators.get((x, d), []) if echelon.add(v)]
            if d >= 3:
                for v in self.ideal(x, z - 1).vectors():
                    for a in range(self.free.lincat.dim(z - 1, z)):
                        w = free.left_mult(x, z, a, v)
                        if echelon.add(w):
                            queue.append(w)
                for v in self.ideal(x + 1, z).vectors():
                    for c in range(self.free.lincat.dim(x, x + 1)):
                        w = free.right_mult(x, z, v, c)
                        if echelon.add(w):
                            queue.append(w)
            left = free.left_generators(x, z) if d >= 1 else []
            right = self.group(x).generators if d >= 1 else []
            while queue:
                v = queue.pop()
                images = [m.apply(v) for m in left] + [free.right_group(x, z, v, h) for h in right]
                for w in images:
                    if echelon.add(w):
                        queue.append(w)
            self._ideal[key] = Subspace(n, echelon)
            check_dimension("path quotient ({}, {})".format(x, z), n - len(echelon))
        return self._ideal[key]

    def _dim(self, x, y):
        return self.free.dim(x, y) - self.ideal(x, y).dim

    def _lift(self, x, y, i):
        return {self.ideal(x, y).free_coordinates[i]: ONE}

    def _compose(self, x, y, z, j, i):
        w = self.free.compose(x, y, z, self._lift(y, z, j), self._lift(x, y, i))
        return self.ideal(x, z).quotient_coordinates(w)

    def labels(self, x, y):
        if x == y:
            return ["g{}".format(g) for g in range(self.dim(x, x))]
        free = self.ideal(x, y).free_coordinates
        return ["path{}".format(self.free.path(x, y, f)) for f in free]

    def factor_last(self, x, z, k):
        f = self.ideal(x, z).free_coordinates[k]
        a, b = self.free.basis(x, z)[f]
        return a, self.ideal(x, z - 1).quotient_coordinates({b: ONE})

    def factor_first(self, x, z, k):
        f = self.ideal(x, z).free_coordinates[k]
        path = self.free.path(x, z, f)
        v = {path[-2]: ONE}
        level = x + 2
        for a in reversed(path[:-2]):
            level += 1
            v = self.free.left_mult(x + 1, level, a, v)
        return self.ideal(x + 1, z).quotient_coordinates(v), path[-1]

    def describe(self):
        return "{} on {}".format(self.name, self.interval)


def quadratic_dual(l):
    """
    The quadratic dual: degree-1 part as in ``l``, degree-2 relations the annihilator of
    ``l``'s relations under the dot product of the free-cover bases, and objects reversed.

    The result is an :class:`~koszulkit.lincat.OppositeLinCat` over the path quotient;
    ``result.quadratic`` records whether ``l`` passed :func:`is_quadratic`.
    """
    report = is_quadratic(l)
    if not report.passed:
        warnings.warn(
            "quadratic_dual of a non-quadratic category {}: {}".format(l.describe(), report.witness),
            KoszulkitWarning,
        )
    cover = free_cover(l)
    relations = {}
    for x in range(l.lo, l.hi - 1):
        relations[(x, 2)] = annihilator(cover.relations(x, 2)).vectors()
    dual = PathQuotientLinCat(l, relations, name="dual of ({})".format(l.describe()))
    result = OppositeLinCat(dual)
    result.quadratic = report.passed
    return result


def dual_relations(dual):
    """Degree-2 relation spaces of a quadratic dual, keyed by ``x`` in the unreflected order."""
    base = dual.base if isinstance(dual, OppositeLinCat) else dual
    return {x: base.ideal(x, x + 2) for x in range(base.lo, base.hi - 1)}


def yoneda_dual_comparison(l, depth):
    """
    Compare ``dim Ext^n(S_x, S_{x+n}<n>)`` from minimal resolutions with
    ``dim hom(x, x+n)`` of the un-reflected quadratic dual.

    :return: dict ``(x, n) -> (yoneda dim, dual dim)``
    """
    from .resolution import yoneda_dims

    table = yoneda_dims(l, depth)
    dual = quadratic_dual(l).base
    out = {}
    for (x, y, n), value in sorted(table.items()):
        if y == x + n:
            out[(x, n)] = (value, dual.dim(x, y))
    return out
