"""
Finite groups given by multiplication tables.

Element 0 is always the identity. Groups are used for the endomorphism groups
``G_x = C(x, x)`` of combinatorial categories and for the color group of the
FI_G / FS_G families.
"""
import logging
from collections import deque
from itertools import product

from six.moves import range

from .exceptions import GroupException

LOG = logging.getLogger(__name__)


class FiniteGroup(object):
    """
    A finite group as a multiplication table over ``range(order)``.

    ``mult[a][b]`` is the index of ``a * b``. Construction validates the table unless
    ``check=False`` (used for tables derived from a category's own composition, which
    the category validator covers).
    """

    def __init__(self, mult, labels=None, check=True):
        """
        :param mult: square table of element indices, identity at index 0
        :param labels: optional printable label per element
        :param bool check: validate group axioms
        """
        self.mult = tuple(tuple(row) for row in mult)
        self.order = len(self.mult)
        self.labels = tuple(labels) if labels is not None else tuple(range(self.order))
        if check:
            self._validate()
        self.inv = self._inverses()
        self._generators = None

    def _validate(self):
        n = self.order
        if n == 0:
            raise GroupException("A group needs at least one element")
        for a, row in enumerate(self.mult):
            if len(row) != n:
                raise GroupException("Row {} has length {}, expected {}".format(a, len(row), n))
            if sorted(row) != list(range(n)):
                raise GroupException("Row {} is not a permutation of the elements".format(a))
        for b in range(n):
            if sorted(self.mult[a][b] for a in range(n)) != list(range(n)):
                raise GroupException("Column {} is not a permutation of the elements".format(b))
        for a in range(n):
            if self.mult[0][a] != a or self.mult[a][0] != a:
                raise GroupException("Element 0 is not the identity (fails at {})".format(a))
        mult = self.mult
        for a, b, c in product(range(n), repeat=3):
            if mult[mult[a][b]][c] != mult[a][mult[b][c]]:
                raise GroupException("Table is not associative at ({}, {}, {})".format(a, b, c))

    def _inverses(self):
        inv = [None] * self.order
        for a in range(self.order):
            for b in range(self.order):
                if self.mult[a][b] == 0:
                    inv[a] = b
                    break
            if inv[a] is None:
                raise GroupException("Element {} has no inverse".format(a))
        return tuple(inv)

    @classmethod
    def from_table(cls, table, labels=None):
        """
        Build from a user-supplied table, moving the identity to index 0 if needed.

        :param table: list of lists of element indices
        """
        n = len(table)
        identity = None
        for e in range(n):
            if list(table[e]) == list(range(n)) and [row[e] for row in table] == list(range(n)):
                identity = e
                break
        if identity is None:
            raise GroupException("Table has no identity element")
        if identity:
            swap = list(range(n))
            swap[0], swap[identity] = identity, 0
            table = [[swap[table[swap[a]][swap[b]]] for b in range(n)] for a in range(n)]
            if labels is not None:
                labels = [labels[swap[a]] for a in range(n)]
        return cls(table, labels=labels)

    @classmethod
    def cyclic(cls, n):
        """Z/n with element k standing for k mod n."""
        if n < 1:
            raise GroupException("Cyclic group order must be positive, got {}".format(n))
        return cls([[(a + b) % n for b in range(n)] for a in range(n)], check=False)

    @classmethod
    def trivial(cls):
        return cls([[0]], check=False)

    @property
    def identity(self):
        return 0

    def elements(self):
        return range(self.order)

    def mul(self, a, b):
        return self.mult[a][b]

    def inverse(self, a):
        return self.inv[a]

    def is_abelian(self):
        return all(
            self.mult[a][b] == self.mult[b][a] for a in range(self.order) for b in range(a)
        )

    def opposite(self):
        """The opposite group, ``a *op b = b * a``."""
        return FiniteGroup(
            [[self.mult[b][a] for b in range(self.order)] for a in range(self.order)],
            labels=self.labels,
            check=False,
        )

    def closure(self, elements):
        """Subgroup generated by ``elements``, as a set."""
        seen = {0}
        queue = deque([0])
        while queue:
            a = queue.popleft()
            for g in elements:
                b = self.mult[a][g]
                if b not in seen:
                    seen.add(b)
                    queue.append(b)
        return seen

    @property
    def generators(self):
        """Greedy generating set: an element is added when it lies outside the span so far."""
        if self._generators is None:
            gens = []
            span = {0}
            for a in range(1, self.order):
                if a not in span:
                    gens.append(a)
                    span = self.closure(gens)
            self._generators = tuple(gens)
        return self._generators

    def bfs_order(self):
        """Elements in breadth-first order with (parent, generator position) for each."""
        gens = self.generators
        order = [(0, None, None)]
        seen = {0}
        queue = deque([0])
        while queue:
            a = queue.popleft()
            for i, g in enumerate(gens):
                b = self.mult[a][g]
                if b not in seen:
                    seen.add(b)
                    order.append((b, a, i))
                    queue.append(b)
        return order

    def check_action(self, act, points, samples=None):
        """
        Spot-check that ``act(g, p)`` is a left action on ``points``.

        :param act: callable (element, point) -> point
        :param points: list of points
        :param samples: optional cap on the number of points checked
        :raises GroupException: with the offending (g, h, p)
        """
        checked = points if samples is None else points[:samples]
        gens = self.generators
        for p in checked:
            if act(0, p) != p:
                raise GroupException("Identity does not act trivially on {}".format(p))
            for g in gens:
                for h in gens:
                    if act(self.mult[g][h], p) != act(g, act(h, p)):
                        raise GroupException(
                            "Not a group action: ({}*{}).{} differs from {}.({}.{})".format(
                                g, h, p, g, h, p
                            )
                        )

    def describe(self):
        return "FiniteGroup(order={}, generators={})".format(self.order, list(self.generators))

    def __eq__(self, other):
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.mult == other.mult

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self.mult)

    def __repr__(self):
        return self.describe()
