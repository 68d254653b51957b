"""
Exact linear algebra over the rationals, plus rank over small prime fields.

Vectors are sparse dictionaries ``{index: Fraction}`` holding only nonzero entries.
:class:`Matrix` stores sparse rows of the same shape. Everything is exact: entries are
:class:`fractions.Fraction` (or ints, which compare and combine with them).

Example::

    >>> m = Matrix.from_rows([[1, 2], [2, 4]])
    >>> reduced, pivots = rref(m)
    >>> reduced.to_rows(), pivots
    ([[Fraction(1, 1), Fraction(2, 1)], [Fraction(0, 1), Fraction(0, 1)]], [0])
"""
import logging
from fractions import Fraction

import numpy as np

from .conversions import to_fraction
from .defaults import GF_TABLE_PRIMES

LOG = logging.getLogger(__name__)

ZERO = Fraction(0)
ONE = Fraction(1)

#: Multiplicative inverses mod p, index 0 unused.
GF_INVERSES = {p: [0] + [pow(a, p - 2, p) for a in range(1, p)] for p in GF_TABLE_PRIMES}


def vec_add(u, v, coeff=ONE):
    """Return ``u + coeff * v`` as a new sparse vector."""
    out = dict(u)
    if not coeff:
        return out
    for index, value in v.items():
        new = out.get(index, ZERO) + coeff * value
        if new:
            out[index] = new
        else:
            out.pop(index, None)
    return out


def vec_iadd(u, v, coeff=ONE):
    """In-place ``u += coeff * v``."""
    if not coeff:
        return u
    for index, value in v.items():
        new = u.get(index, ZERO) + coeff * value
        if new:
            u[index] = new
        else:
            u.pop(index, None)
    return u


def vec_scale(v, coeff):
    """Return ``coeff * v``."""
    if not coeff:
        return {}
    return {index: coeff * value for index, value in v.items()}


def dot(u, v):
    """Standard pairing of two sparse vectors."""
    if len(u) > len(v):
        u, v = v, u
    return sum((value * v[index] for index, value in u.items() if index in v), ZERO)


def unit(index):
    """Standard basis vector."""
    return {index: ONE}


class Matrix(object):
    """
    A ``rows`` x ``cols`` matrix over the rationals with sparse row storage.

    Matrices are treated as immutable values; every operation returns a new one.
    """

    __slots__ = ("rows", "cols", "_data", "_columns")

    def __init__(self, rows, cols, data=None):
        """
        :param int rows: Number of rows
        :param int cols: Number of columns
        :param data: Optional list of ``rows`` sparse row dictionaries
        """
        self.rows = rows
        self.cols = cols
        if data is None:
            data = [{} for _ in range(rows)]
        if len(data) != rows:
            raise ValueError("Expected {} rows, got {}".format(rows, len(data)))
        self._data = data
        self._columns = None

    @classmethod
    def from_rows(cls, rows, cols=None):
        """
        Build from a dense list of lists (entries int, Fraction or ``"p/q"``).

        :param rows: list of lists
        :param cols: column count, required when ``rows`` is empty
        """
        if cols is None:
            cols = len(rows[0]) if rows else 0
        data = []
        for row in rows:
            if len(row) != cols:
                raise ValueError("Ragged row of length {}, expected {}".format(len(row), cols))
            entries = {}
            for j, value in enumerate(row):
                value = to_fraction(value)
                if value:
                    entries[j] = value
            data.append(entries)
        return cls(len(rows), cols, data)

    @classmethod
    def from_columns(cls, columns, rows):
        """
        Build from a list of sparse column vectors.

        :param columns: list of ``{row: value}`` dictionaries
        :param int rows: number of rows
        """
        data = [{} for _ in range(rows)]
        for j, column in enumerate(columns):
            for i, value in column.items():
                if value:
                    data[i][j] = value
        return cls(rows, len(columns), data)

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols)

    @classmethod
    def identity(cls, n):
        return cls(n, n, [{i: ONE} for i in range(n)])

    @property
    def shape(self):
        return self.rows, self.cols

    @property
    def entries(self):
        """Row-major dense sequence of entries."""
        out = []
        for row in self._data:
            out.extend(row.get(j, ZERO) for j in range(self.cols))
        return out

    def __getitem__(self, key):
        i, j = key
        return self._data[i].get(j, ZERO)

    def row(self, i):
        """Sparse row ``i``. Do not mutate."""
        return self._data[i]

    def column(self, j):
        """Sparse column ``j``. Do not mutate."""
        return self.columns()[j]

    def columns(self):
        """All sparse columns, computed once."""
        if self._columns is None:
            columns = [{} for _ in range(self.cols)]
            for i, row in enumerate(self._data):
                for j, value in row.items():
                    columns[j][i] = value
            self._columns = columns
        return self._columns

    def to_rows(self):
        """Dense list of lists of Fractions."""
        return [[row.get(j, ZERO) for j in range(self.cols)] for row in self._data]

    def transpose(self):
        return Matrix(self.cols, self.rows, [dict(c) for c in self.columns()])

    def apply(self, vector):
        """Matrix times a sparse column vector."""
        out = {}
        columns = self.columns()
        for j, value in vector.items():
            vec_iadd(out, columns[j], value)
        return out

    def matmul(self, other):
        """Matrix product ``self * other``."""
        if self.cols != other.rows:
            raise ValueError(
                "Cannot multiply {}x{} by {}x{}".format(self.rows, self.cols, other.rows, other.cols)
            )
        data = []
        for row in self._data:
            out = {}
            for k, value in row.items():
                vec_iadd(out, other._data[k], value)
            data.append(out)
        return Matrix(self.rows, other.cols, data)

    __mul__ = matmul

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("Shape mismatch {} vs {}".format(self.shape, other.shape))
        return Matrix(self.rows, self.cols, [vec_add(a, b) for a, b in zip(self._data, other._data)])

    def __sub__(self, other):
        if self.shape != other.shape:
            raise ValueError("Shape mismatch {} vs {}".format(self.shape, other.shape))
        return Matrix(
            self.rows, self.cols, [vec_add(a, b, -ONE) for a, b in zip(self._data, other._data)]
        )

    def scale(self, coeff):
        coeff = to_fraction(coeff)
        return Matrix(self.rows, self.cols, [vec_scale(row, coeff) for row in self._data])

    def is_zero(self):
        return not any(self._data)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def __repr__(self):
        return "Matrix({}x{}, nnz={})".format(self.rows, self.cols, sum(len(r) for r in self._data))


def hstack(matrices, rows):
    """Concatenate matrices side by side; ``rows`` is needed when the list is empty."""
    data = [{} for _ in range(rows)]
    offset = 0
    for m in matrices:
        for i in range(rows):
            for j, value in m.row(i).items():
                data[i][offset + j] = value
        offset += m.cols
    return Matrix(rows, offset, data)


def vstack(matrices, cols):
    """Stack matrices vertically; ``cols`` is needed when the list is empty."""
    data = []
    for m in matrices:
        data.extend(dict(m.row(i)) for i in range(m.rows))
    return Matrix(len(data), cols, data)


def block_diagonal(matrices):
    """Block-diagonal sum."""
    rows = sum(m.rows for m in matrices)
    cols = sum(m.cols for m in matrices)
    data = []
    offset = 0
    for m in matrices:
        for i in range(m.rows):
            data.append({offset + j: v for j, v in m.row(i).items()})
        offset += m.cols
    return Matrix(rows, cols, data)


class EchelonBasis(object):
    """
    Incrementally maintained reduced row-echelon basis of a row space.

    Every stored row has a leading 1 at its pivot column and zeros at all other pivot
    columns, so the sorted rows are exactly the RREF of the span.
    """

    def __init__(self, ambient_dim, vectors=()):
        self.ambient_dim = ambient_dim
        self._rows = {}
        for v in vectors:
            self.add(v)

    def __len__(self):
        return len(self._rows)

    @property
    def pivots(self):
        return sorted(self._rows)

    def rows(self):
        """Basis rows in pivot order."""
        return [self._rows[p] for p in sorted(self._rows)]

    def reduce(self, vector):
        """Return ``vector`` minus its component along the pivots (a new dict)."""
        out = dict(vector)
        for p in [p for p in vector if p in self._rows]:
            coeff = out.get(p)
            if coeff:
                vec_iadd(out, self._rows[p], -coeff)
        return out

    def contains(self, vector):
        return not self.reduce(vector)

    def add(self, vector):
        """
        Add ``vector`` to the span.

        :return: True if the span grew.
        """
        residue = self.reduce(vector)
        if not residue:
            return False
        pivot = min(residue)
        lead = residue[pivot]
        if lead != ONE:
            residue = vec_scale(residue, ONE / lead)
        for row in self._rows.values():
            coeff = row.get(pivot)
            if coeff:
                vec_iadd(row, residue, -coeff)
        self._rows[pivot] = residue
        return True

    def coordinates(self, vector):
        """Coefficients of ``vector`` along the rows, in pivot order (assumes membership)."""
        return [vector.get(p, ZERO) for p in sorted(self._rows)]

    def copy(self):
        new = EchelonBasis(self.ambient_dim)
        new._rows = {p: dict(r) for p, r in self._rows.items()}
        return new


def rref(m):
    """
    Reduced row-echelon form.

    :param Matrix m: input
    :return: (reduced Matrix of the same shape, list of pivot columns)
    """
    basis = EchelonBasis(m.cols, (m.row(i) for i in range(m.rows)))
    rows = [dict(r) for r in basis.rows()]
    rows.extend({} for _ in range(m.rows - len(rows)))
    return Matrix(m.rows, m.cols, rows), basis.pivots


def rank(m):
    return len(EchelonBasis(m.cols, (m.row(i) for i in range(m.rows))))


class Subspace(object):
    """
    A subspace of Q^n, stored canonically by the RREF of a spanning set.

    Two subspaces are equal iff their ambient dimensions and RREF bases agree.
    """

    def __init__(self, ambient_dim, vectors=()):
        """
        :param int ambient_dim: n
        :param vectors: iterable of sparse vectors spanning the subspace
        """
        self.ambient_dim = ambient_dim
        self._echelon = vectors if isinstance(vectors, EchelonBasis) else EchelonBasis(
            ambient_dim, vectors
        )
        self._free_index = None

    @classmethod
    def full(cls, n):
        return cls(n, [unit(i) for i in range(n)])

    @property
    def dim(self):
        return len(self._echelon)

    @property
    def pivots(self):
        return self._echelon.pivots

    @property
    def free_coordinates(self):
        """Non-pivot coordinates: the canonical complement, in increasing order."""
        pivots = set(self._echelon.pivots)
        return [j for j in range(self.ambient_dim) if j not in pivots]

    def vectors(self):
        """RREF basis vectors. Do not mutate."""
        return self._echelon.rows()

    @property
    def basis(self):
        """Basis as a Matrix whose columns are the RREF rows."""
        return Matrix.from_columns(self.vectors(), self.ambient_dim)

    def contains(self, vector):
        return self._echelon.contains(vector)

    def reduce(self, vector):
        return self._echelon.reduce(vector)

    def coordinates(self, vector):
        return self._echelon.coordinates(vector)

    def quotient_coordinates(self, vector):
        """
        Coordinates of the class of ``vector`` in ambient / self, against the basis
        given by the free coordinates.
        """
        residue = self.reduce(vector)
        if self._free_index is None:
            self._free_index = {j: k for k, j in enumerate(self.free_coordinates)}
        return {self._free_index[j]: v for j, v in residue.items()}

    def is_subspace_of(self, other):
        return all(other.contains(v) for v in self.vectors())

    def __add__(self, other):
        echelon = self._echelon.copy()
        for v in other.vectors():
            echelon.add(v)
        return Subspace(self.ambient_dim, echelon)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.vectors() == other.vectors()

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def __repr__(self):
        return "Subspace(dim={} in {})".format(self.dim, self.ambient_dim)


def kernel_basis(m):
    """
    Kernel of ``m`` as a :class:`Subspace` of Q^cols.

    :param Matrix m: input
    :return: Subspace with dimension ``cols - rank(m)``
    """
    echelon = EchelonBasis(m.cols, (m.row(i) for i in range(m.rows)))
    pivots = echelon.pivots
    pivot_set = set(pivots)
    rows = echelon.rows()
    vectors = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = {free: ONE}
        for p, row in zip(pivots, rows):
            coeff = row.get(free)
            if coeff:
                v[p] = -coeff
        vectors.append(v)
    return Subspace(m.cols, vectors)


def solve(m, b):
    """
    Find some ``x`` with ``m x = b``.

    :param Matrix m: coefficient matrix
    :param b: right-hand side, a dense list or sparse dict of length ``m.rows``
    :return: sparse solution vector, or None when ``b`` is not in the column space
    """
    if isinstance(b, (list, tuple)):
        if len(b) != m.rows:
            raise ValueError("b has length {}, expected {}".format(len(b), m.rows))
        b = {i: to_fraction(v) for i, v in enumerate(b) if to_fraction(v)}
    augmented_col = m.cols
    echelon = EchelonBasis(m.cols + 1)
    for i in range(m.rows):
        row = dict(m.row(i))
        if b.get(i):
            row[augmented_col] = b[i]
        echelon.add(row)
    if augmented_col in echelon.pivots:
        return None
    solution = {}
    for p, row in zip(echelon.pivots, echelon.rows()):
        value = row.get(augmented_col)
        if value:
            solution[p] = value
    return solution


def annihilator(s):
    """
    ``{phi : phi . v = 0 for all v in s}`` under the standard dot pairing.

    :param Subspace s: input
    :return: Subspace of dimension ``ambient_dim - dim(s)``
    """
    return kernel_basis(Matrix(s.dim, s.ambient_dim, [dict(v) for v in s.vectors()]))


def _check_prime(p):
    if p not in GF_INVERSES:
        raise ValueError(
            "Unsupported field F_{}: primes with table arithmetic are {}".format(p, GF_TABLE_PRIMES)
        )


def gf_rref(m, p):
    """
    Reduced row-echelon form over F_p.

    :param m: array-like of integers
    :param int p: prime in ``GF_TABLE_PRIMES``
    :return: (numpy array in RREF, tuple of pivot columns)
    """
    _check_prime(p)
    inverses = GF_INVERSES[p]
    mat = np.array(m, dtype=np.int64).reshape(len(m), -1) % p if len(m) else np.zeros((0, 0), np.int64)
    rows, cols = mat.shape
    pivots = []
    row = 0
    for col in range(cols):
        pivot = None
        for r in range(row, rows):
            if mat[r, col]:
                pivot = r
                break
        if pivot is None:
            continue
        if pivot != row:
            mat[[row, pivot]] = mat[[pivot, row]]
        mat[row] = (mat[row] * inverses[int(mat[row, col])]) % p
        for r in range(rows):
            if r != row and mat[r, col]:
                mat[r] = (mat[r] - mat[r, col] * mat[row]) % p
        pivots.append(col)
        row += 1
        if row == rows:
            break
    return mat, tuple(pivots)


def gf_rank(m, p):
    """
    Rank over F_p.

    :param m: matrix as a list of rows of integers
    :param int p: prime, p <= 7
    """
    if not len(m):
        _check_prime(p)
        return 0
    return len(gf_rref(m, p)[1])
