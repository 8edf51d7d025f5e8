"""Dense exact matrices with a deterministic reduced row echelon form.

Row reduction always takes the first row with a nonzero entry in the
current column as pivot and normalizes it to 1, so echelon forms, ranks,
solution vectors, and nullspace bases are identical from run to run.
No floating point is used anywhere.
"""

from dataclasses import dataclass

from .errors import DimensionError, FieldMismatchError


def as_vector(field, dim, spec):
    """Coerce `spec` into a length-`dim` tuple of field scalars.

    Accepts a sequence of length dim, or a sparse {index: coeff} mapping.
    """
    if isinstance(spec, dict):
        out = [field.zero] * dim
        for k, v in spec.items():
            if not isinstance(k, int) or not 0 <= k < dim:
                raise DimensionError("component index %r outside 0..%d" % (k, dim - 1))
            out[k] = field.scalar(v)
        return tuple(out)
    vec = tuple(field.scalar(v) for v in spec)
    if len(vec) != dim:
        raise DimensionError("expected a vector of length %d, got %d" % (dim, len(vec)))
    return vec


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vneg(u):
    return tuple(-a for a in u)


def vscale(c, u):
    return tuple(c * a for a in u)


def vzero(field, n):
    return (field.zero,) * n


def is_zero_vec(u):
    return all(a == 0 for a in u)


def unit_vector(field, n, i):
    return tuple(field.one if j == i else field.zero for j in range(n))


class Matrix:
    """Immutable dense matrix over one field, stored row major."""

    __slots__ = ("field", "nrows", "ncols", "_e")

    def __init__(self, field, rows):
        data = []
        width = None
        count = 0
        for row in rows:
            row = tuple(field.scalar(v) for v in row)
            if width is None:
                width = len(row)
            elif len(row) != width:
                raise DimensionError("ragged rows: %d then %d" % (width, len(row)))
            data.extend(row)
            count += 1
        self.field = field
        self.nrows = count
        self.ncols = width if width is not None else 0
        self._e = tuple(data)

    @classmethod
    def identity(cls, field, n):
        return cls(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field, nrows, ncols):
        return cls(field, [[0] * ncols for _ in range(nrows)])

    @classmethod
    def from_cols(cls, field, cols):
        cols = [tuple(field.scalar(v) for v in c) for c in cols]
        if cols and any(len(c) != len(cols[0]) for c in cols):
            raise DimensionError("columns of unequal height")
        height = len(cols[0]) if cols else 0
        return cls(field, [[c[i] for c in cols] for i in range(height)])

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def entry(self, i, j):
        return self._e[i * self.ncols + j]

    def row(self, i):
        return self._e[i * self.ncols:(i + 1) * self.ncols]

    def col(self, j):
        return tuple(self._e[i * self.ncols + j] for i in range(self.nrows))

    def rows(self):
        return [self.row(i) for i in range(self.nrows)]

    def flat(self):
        return self._e

    def _check_compatible(self, other, need_shape):
        if not isinstance(other, Matrix):
            raise TypeError("expected a Matrix, got %r" % (other,))
        if self.field != other.field:
            raise FieldMismatchError("matrices over %s and %s" %
                                     (self.field.name, other.field.name))
        if need_shape and self.shape != other.shape:
            raise DimensionError("shape mismatch %r vs %r" % (self.shape, other.shape))

    def __add__(self, other):
        self._check_compatible(other, True)
        return Matrix(self.field, [vadd(self.row(i), other.row(i))
                                   for i in range(self.nrows)])

    def __sub__(self, other):
        self._check_compatible(other, True)
        return Matrix(self.field, [vsub(self.row(i), other.row(i))
                                   for i in range(self.nrows)])

    def __neg__(self):
        return Matrix(self.field, [vneg(self.row(i)) for i in range(self.nrows)])

    def scale(self, c):
        c = self.field.scalar(c)
        return Matrix(self.field, [vscale(c, self.row(i)) for i in range(self.nrows)])

    def __mul__(self, other):
        self._check_compatible(other, False)
        if self.ncols != other.nrows:
            raise DimensionError("cannot multiply %r by %r" % (self.shape, other.shape))
        cols = [other.col(j) for j in range(other.ncols)]
        out = []
        for i in range(self.nrows):
            r = self.row(i)
            out.append([_dot(r, c, self.field) for c in cols])
        return Matrix(self.field, out)

    def apply(self, v):
        if len(v) != self.ncols:
            raise DimensionError("vector length %d, matrix width %d" %
                                 (len(v), self.ncols))
        return tuple(_dot(self.row(i), v, self.field) for i in range(self.nrows))

    def transpose(self):
        return Matrix(self.field, [self.col(j) for j in range(self.ncols)])

    def trace(self):
        if self.nrows != self.ncols:
            raise DimensionError("trace of a non-square matrix")
        t = self.field.zero
        for i in range(self.nrows):
            t = t + self.entry(i, i)
        return t

    def power(self, k):
        if self.nrows != self.ncols:
            raise DimensionError("power of a non-square matrix")
        if k < 0:
            raise ValueError("negative power")
        acc = Matrix.identity(self.field, self.nrows)
        for _ in range(k):
            acc = acc * self
        return acc

    def is_zero(self):
        return all(v == 0 for v in self._e)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.field == other.field and self.shape == other.shape
                and self._e == other._e)

    def __hash__(self):
        return hash((self.field, self.shape, tuple(str(v) for v in self._e)))

    def __repr__(self):
        body = "; ".join(", ".join(str(v) for v in self.row(i))
                         for i in range(self.nrows))
        return "Matrix(%s, [%s])" % (self.field.name, body)


def _dot(u, v, field):
    acc = field.zero
    for a, b in zip(u, v, strict=True):
        acc = acc + a * b
    return acc


def rref(matrix):
    """Reduced row echelon form.  Returns (R, pivot_columns)."""
    rows = [list(matrix.row(i)) for i in range(matrix.nrows)]
    nrows, ncols = matrix.shape
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if rows[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = rows[r][c]
        rows[r] = [v / inv for v in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return Matrix(matrix.field, rows), tuple(pivots)


def rank(matrix):
    return len(rref(matrix)[1])


def _nullspace_from_rref(R, pivots, ncols):
    """Basis vectors ordered by ascending free column; free entry set to 1."""
    field = R.field
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [field.zero] * ncols
        v[f] = field.one
        for r, c in enumerate(pivots):
            v[c] = -R.entry(r, f)
        basis.append(tuple(v))
    return tuple(basis)


def nullspace(matrix):
    """Deterministic basis of the right kernel."""
    R, pivots = rref(matrix)
    return _nullspace_from_rref(R, pivots, matrix.ncols)


@dataclass(frozen=True)
class LinearSolution:
    """Solution set of A x = b: one particular solution (None when empty)
    plus a basis of the homogeneous kernel."""

    particular: tuple | None
    homogeneous: tuple

    @property
    def solvable(self):
        return self.particular is not None


def rref_solve(matrix, b):
    """Solve A x = b exactly.  Free variables are set to zero in the
    particular solution, so the output is deterministic."""
    if len(b) != matrix.nrows:
        raise DimensionError("rhs length %d, matrix height %d" %
                             (len(b), matrix.nrows))
    field = matrix.field
    b = tuple(field.scalar(v) for v in b)
    aug = Matrix(field, [tuple(matrix.row(i)) + (b[i],)
                         for i in range(matrix.nrows)])
    R, pivots = rref(aug)
    ncols = matrix.ncols
    a_pivots = tuple(c for c in pivots if c < ncols)
    homogeneous = _nullspace_from_rref(R, a_pivots, ncols)
    if any(c == ncols for c in pivots):
        return LinearSolution(None, homogeneous)
    x = [field.zero] * ncols
    for r, c in enumerate(a_pivots):
        x[c] = R.entry(r, ncols)
    return LinearSolution(tuple(x), homogeneous)


def inverse(matrix):
    """Exact inverse, or None when the matrix is singular."""
    if matrix.nrows != matrix.ncols:
        raise DimensionError("inverse of a non-square matrix")
    n = matrix.nrows
    field = matrix.field
    ident = Matrix.identity(field, n)
    aug = Matrix(field, [tuple(matrix.row(i)) + tuple(ident.row(i))
                         for i in range(n)])
    R, pivots = rref(aug)
    if tuple(range(n)) != pivots[:n] or len(pivots) != n:
        return None
    return Matrix(field, [R.row(i)[n:] for i in range(n)])


def coordinates_in_span(vectors, target, field):
    """Coefficients expressing `target` in the given spanning list, or None.

    Deterministic: free coefficients are zero.  An empty spanning list only
    matches the zero vector, giving the empty coefficient tuple.
    """
    target = tuple(field.scalar(v) for v in target)
    if not vectors:
        return () if is_zero_vec(target) else None
    sol = rref_solve(Matrix.from_cols(field, vectors), target)
    return sol.particular


def span_basis(field, ambient, vectors):
    """Canonical (RREF row) basis of the span of `vectors` in field^ambient."""
    vectors = [as_vector(field, ambient, v) for v in vectors]
    if not vectors:
        return ()
    R, pivots = rref(Matrix(field, vectors))
    return tuple(R.row(i) for i in range(len(pivots)))


def is_nilpotent_matrix(matrix):
    """Exact nilpotency test: some power up to the dimension vanishes."""
    if matrix.nrows != matrix.ncols:
        raise DimensionError("nilpotency of a non-square matrix")
    acc = matrix
    for _ in range(matrix.nrows):
        if acc.is_zero():
            return True
        acc = acc * matrix
    return matrix.nrows == 0


def commutator(a, b):
    return a * b - b * a


def flatten_matrix(matrix):
    """Row-major flattening, for treating operators as vectors."""
    return matrix.flat()


def matrix_from_flat(field, n, flat):
    return Matrix(field, [flat[i * n:(i + 1) * n] for i in range(n)])
