"""
Tensor products over group algebras, ``A (x)_{kG} B``, as explicit quotient spaces.

``A`` is a right ``G``-module given by the action of the group generators on its
basis, ``B`` a left ``G``-module given by one matrix per generator (column ``b`` is
``g e_b``). The quotient of ``A (x) B`` by ``span{a g (x) v - a (x) g v}`` gets a basis of
pure tensors ``e_a (x) e_b``, so every basis element can be lifted back to a pair.

When the generators act on ``A`` by signed permutations (every linearized
combinatorial category), the quotient is computed one orbit at a time: for an orbit
with representative ``a0`` and stabilizer ``H`` it is ``B`` modulo
``span{h v - sign(h) v : h generating H}``. Otherwise the full relation space is
reduced.
"""
import logging
from fractions import Fraction

from .exceptions import check_dimension
from .linalg import ONE, ZERO, Matrix, Subspace, vec_iadd

LOG = logging.getLogger(__name__)


def trace(m):
    return sum((m[i, i] for i in range(min(m.rows, m.cols))), ZERO)


def group_matrices(group, generator_matrices, n):
    """
    Extend a representation from the generators to every element.

    :param group: :class:`~koszulkit.groups.FiniteGroup`
    :param generator_matrices: one ``n x n`` Matrix per entry of ``group.generators``
    :param int n: dimension
    :return: list of Matrix indexed by element
    """
    out = [None] * group.order
    for elem, parent, position in group.bfs_order():
        if parent is None:
            out[elem] = Matrix.identity(n)
        else:
            out[elem] = out[parent] * generator_matrices[position]
    return out


def character(group, generator_matrices, n):
    """Traces of a representation on every group element."""
    return [trace(m) for m in group_matrices(group, generator_matrices, n)]


def tensor_dimension(group, right_character, left_character):
    """
    ``dim A (x)_{kG} B`` from the characters of a right module ``A`` (trace of
    ``a -> a g``) and a left module ``B``, in characteristic 0.
    """
    total = sum(
        (Fraction(right_character[group.inverse(g)]) * left_character[g] for g in group.elements()),
        ZERO,
    )
    dim = total / group.order
    if dim.denominator != 1 or dim < 0:
        raise ValueError("Characters do not give a tensor dimension: {}".format(dim))
    return int(dim)


class GroupTensor(object):
    """
    ``A (x)_{kG} B`` with a basis of pure tensors.

    :param group: the group ``G``
    :param int dim_a: dimension of ``A``
    :param right_a: callable ``(g, a) -> sparse vector`` giving ``e_a g`` for a generator ``g``
    :param int dim_b: dimension of ``B``
    :param left_b: one Matrix per entry of ``group.generators`` acting on ``B``
    :param str what: description used in dimension errors
    """

    def __init__(self, group, dim_a, right_a, dim_b, left_b, what="tensor product"):
        self.group = group
        self.dim_a = dim_a
        self.dim_b = dim_b
        self.what = what
        self._left_b = list(left_b)
        self._left_all = None
        gens = group.generators
        images = [[right_a(g, a) for a in range(dim_a)] for g in gens]
        self.monomial = all(len(v) == 1 for row in images for v in row)
        if self.monomial:
            self._build_orbits(images)
        else:
            self._build_generic(images)
        check_dimension(what, self.dim)
        LOG.debug("%s: dim %s (A %s, B %s, monomial=%s)", what, self.dim, dim_a, dim_b, self.monomial)

    def left_matrix(self, g):
        """Action of the group element ``g`` on ``B``."""
        if self._left_all is None:
            self._left_all = group_matrices(self.group, self._left_b, self.dim_b)
        return self._left_all[g]

    def _build_orbits(self, images):
        group = self.group
        perms = [[next(iter(v.items())) for v in row] for row in images]
        table = [None] * group.order
        for elem, parent, position in group.bfs_order():
            if parent is None:
                table[elem] = [(a, ONE) for a in range(self.dim_a)]
            else:
                row = []
                for a1, s1 in table[parent]:
                    a2, s2 = perms[position][a1]
                    row.append((a2, s1 * s2))
                table[elem] = row

        self._transport = {}
        self._blocks = {}
        self.basis = []
        for a in range(self.dim_a):
            if a in self._transport:
                continue
            stabilizer = {}
            for g in group.elements():
                target, sign = table[g][a]
                if target not in self._transport:
                    self._transport[target] = (a, g, sign)
                if target == a:
                    stabilizer[g] = sign
            relations = []
            for h in _subgroup_generators(group, stabilizer):
                sigma = stabilizer[h]
                matrix = self.left_matrix(h)
                for b in range(self.dim_b):
                    v = dict(matrix.column(b))
                    vec_iadd(v, {b: ONE}, -sigma)
                    if v:
                        relations.append(v)
            space = Subspace(self.dim_b, relations)
            offset = len(self.basis)
            self._blocks[a] = (offset, space)
            self.basis.extend((a, b) for b in space.free_coordinates)
        self.dim = len(self.basis)

    def _build_generic(self, images):
        check_dimension(self.what + " (before quotient)", self.dim_a * self.dim_b)
        nb = self.dim_b
        relations = []
        for position, g in enumerate(self.group.generators):
            matrix = self._left_b[position]
            for a in range(self.dim_a):
                for b in range(nb):
                    v = {}
                    for a2, c in images[position][a].items():
                        vec_iadd(v, {a2 * nb + b: c})
                    for b2, c in matrix.column(b).items():
                        vec_iadd(v, {a * nb + b2: c}, -ONE)
                    if v:
                        relations.append(v)
        self._space = Subspace(self.dim_a * nb, relations)
        self.basis = [divmod(index, nb) for index in self._space.free_coordinates]
        self.dim = len(self.basis)

    def project(self, a, v):
        """Class of ``e_a (x) v`` for a sparse vector ``v`` over ``B``."""
        if not v:
            return {}
        if not self.monomial:
            nb = self.dim_b
            return self._space.quotient_coordinates({a * nb + b: c for b, c in v.items()})
        a0, g, sign = self._transport[a]
        offset, space = self._blocks[a0]
        moved = self.left_matrix(g).apply(v) if g else v
        coords = space.quotient_coordinates(moved)
        return {offset + k: c / sign for k, c in coords.items()}

    def project_pair(self, a, b):
        return self.project(a, {b: ONE})

    def project_vector(self, u, v):
        """Class of ``u (x) v`` for sparse vectors over ``A`` and ``B``."""
        out = {}
        for a, c in u.items():
            vec_iadd(out, self.project(a, v), c)
        return out

    def __repr__(self):
        return "GroupTensor({}, dim={})".format(self.what, self.dim)


def _subgroup_generators(group, elements):
    """Greedy generators of the subgroup formed by ``elements``."""
    gens = []
    span = {group.identity}
    for h in sorted(elements):
        if h not in span:
            gens.append(h)
            span = group.closure(gens)
    return gens
