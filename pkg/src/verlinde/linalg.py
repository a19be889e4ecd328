"""Exact dense linear algebra over a FieldSpec: rref, kernels, solves, quotients.

Matrices are immutable-by-convention row-major grids of FieldElement sharing a
single field. Everything is plain Gauss-Jordan with zero skipping; target
dimensions are at most a few hundred.
"""

from .errors import ValidationError
from .fields import FieldSpec


class Matrix:
    __slots__ = ("rows", "cols", "entries", "spec")

    def __init__(self, spec, rows, cols, entries):
        if len(entries) != rows * cols:
            raise ValidationError("entry count %d != %d x %d" % (len(entries), rows, cols))
        self.spec = spec
        self.rows = rows
        self.cols = cols
        self.entries = list(entries)

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zeros(cls, spec, rows, cols):
        z = spec.zero()
        return cls(spec, rows, cols, [z] * (rows * cols))

    @classmethod
    def identity(cls, spec, n):
        z, o = spec.zero(), spec.one()
        e = [z] * (n * n)
        for i in range(n):
            e[i * n + i] = o
        return cls(spec, n, n, e)

    @classmethod
    def from_rows(cls, spec, rows):
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        ent = []
        for r in rows:
            if len(r) != ncols:
                raise ValidationError("ragged rows")
            ent.extend(spec.element(x) for x in r)
        return cls(spec, nrows, ncols, ent)

    @classmethod
    def from_columns(cls, spec, columns, nrows=None):
        if not columns:
            return cls.zeros(spec, nrows or 0, 0)
        nrows = len(columns[0])
        rows = [[columns[j][i] for j in range(len(columns))] for i in range(nrows)]
        return cls.from_rows(spec, rows)

    # -- access ---------------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j):
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __repr__(self):
        body = "; ".join(" ".join(x.token() for x in self.row(i)) for i in range(self.rows))
        return "Matrix(%dx%d over %r: %s)" % (self.rows, self.cols, self.spec, body)

    def is_zero(self):
        return all(x.is_zero() for x in self.entries)

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        self._check_shape(other)
        return Matrix(self.spec, self.rows, self.cols,
                      [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._check_shape(other)
        return Matrix(self.spec, self.rows, self.cols,
                      [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        return Matrix(self.spec, self.rows, self.cols, [-a for a in self.entries])

    def _check_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValidationError("shape mismatch %dx%d vs %dx%d"
                                  % (self.rows, self.cols, other.rows, other.cols))

    def scale(self, c):
        return Matrix(self.spec, self.rows, self.cols, [c * a for a in self.entries])

    def __mul__(self, other):
        if isinstance(other, list):
            return self.apply(other)
        if self.cols != other.rows:
            raise ValidationError("matmul shape mismatch")
        n, m, k = self.rows, other.cols, self.cols
        z = self.spec.zero()
        out = [z] * (n * m)
        oe, se = other.entries, self.entries
        for i in range(n):
            base = i * k
            for t in range(k):
                a = se[base + t]
                if a.is_zero():
                    continue
                ob = t * m
                rb = i * m
                for j in range(m):
                    b = oe[ob + j]
                    if not b.is_zero():
                        out[rb + j] = out[rb + j] + a * b
        return Matrix(self.spec, n, m, out)

    def apply(self, vec):
        """Matrix times coordinate vector (list of FieldElement)."""
        if len(vec) != self.cols:
            raise ValidationError("vector length %d != cols %d" % (len(vec), self.cols))
        z = self.spec.zero()
        out = [z] * self.rows
        e = self.entries
        for j, x in enumerate(vec):
            if x.is_zero():
                continue
            for i in range(self.rows):
                a = e[i * self.cols + j]
                if not a.is_zero():
                    out[i] = out[i] + a * x
        return out

    def transpose(self):
        return Matrix(self.spec, self.cols, self.rows,
                      [self.entries[i * self.cols + j]
                       for j in range(self.cols) for i in range(self.rows)])

    def augment(self, other):
        if self.rows != other.rows:
            raise ValidationError("augment row mismatch")
        rows = [self.row(i) + other.row(i) for i in range(self.rows)]
        return Matrix(self.spec, self.rows, self.cols + other.cols,
                      [x for r in rows for x in r])

    def trace(self):
        t = self.spec.zero()
        for i in range(min(self.rows, self.cols)):
            t = t + self.entries[i * self.cols + i]
        return t


def rref(m):
    """Reduced row-echelon form. Returns (R, pivot_columns, rank)."""
    spec = m.spec
    rows, cols = m.rows, m.cols
    a = [m.row(i) for i in range(rows)]
    pivots = []
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if not a[i][c].is_zero():
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = a[r][c].inverse()
        a[r] = [inv * x for x in a[r]]
        arow = a[r]
        for i in range(rows):
            if i != r:
                f = a[i][c]
                if not f.is_zero():
                    ai = a[i]
                    a[i] = [x - f * y for x, y in zip(ai, arow)]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    flat = [x for row in a for x in row]
    return Matrix(spec, rows, cols, flat), pivots, r


def rank(m):
    return rref(m)[2]


def kernel_basis(m):
    """Columns span the null space {v : m v = 0}; cols - rank of them."""
    R, pivots, rk = rref(m)
    spec = m.spec
    free = [j for j in range(m.cols) if j not in pivots]
    z, o = spec.zero(), spec.one()
    columns = []
    for f in free:
        v = [z] * m.cols
        v[f] = o
        for r, pc in enumerate(pivots):
            v[pc] = -R[r, f]
        columns.append(v)
    return Matrix.from_columns(spec, columns, nrows=m.cols)


def solve(m, b):
    """One exact solution of m x = b, or None if inconsistent."""
    if len(b) != m.rows:
        raise ValidationError("rhs length %d != rows %d" % (len(b), m.rows))
    spec = m.spec
    aug = m.augment(Matrix.from_columns(spec, [list(b)], nrows=m.rows))
    R, pivots, rk = rref(aug)
    if m.cols in pivots:
        return None
    z = spec.zero()
    x = [z] * m.cols
    for r, pc in enumerate(pivots):
        x[pc] = R[r, m.cols]
    return x


def solve_matrix(m, B):
    """Solve m X = B column by column; None if any column is inconsistent."""
    cols = []
    for j in range(B.cols):
        x = solve(m, B.column(j))
        if x is None:
            return None
        cols.append(x)
    return Matrix.from_columns(m.spec, cols, nrows=m.cols)


def inverse(m):
    if m.rows != m.cols:
        raise ValidationError("inverse of non-square matrix")
    R, pivots, rk = rref(m.augment(Matrix.identity(m.spec, m.rows)))
    if sum(1 for p in pivots if p < m.cols) < m.rows:
        raise ValidationError("singular matrix")
    ent = []
    for i in range(m.rows):
        ent.extend(R.row(i)[m.cols:])
    return Matrix(m.spec, m.rows, m.cols, ent)


def column_space_basis(m):
    """Subset of columns forming a basis of the column space."""
    _, pivots, _ = rref(m)
    return Matrix.from_columns(m.spec, [m.column(j) for j in pivots], nrows=m.rows)


def quotient_representatives(space_dim, subspace):
    """Complete `subspace` (columns) to a basis of k^space_dim.

    Returns (coset_basis, projection): coset_basis columns complete the
    subspace; projection maps any vector to its coordinates in the quotient,
    i.e. projection * subspace = 0 and projection * coset_basis = identity.
    """
    spec = subspace.spec
    if subspace.rows != space_dim:
        raise ValidationError("subspace not inside ambient space")
    sub = column_space_basis(subspace)
    d = sub.cols
    chosen = []
    current = sub
    for j in range(space_dim):
        z, o = spec.zero(), spec.one()
        v = [z] * space_dim
        v[j] = o
        cand = current.augment(Matrix.from_columns(spec, [v], nrows=space_dim))
        if rank(cand) > current.cols:
            chosen.append(v)
            current = cand
    coset = Matrix.from_columns(spec, chosen, nrows=space_dim)
    full = sub.augment(coset) if d else coset
    inv = inverse(full)
    proj_rows = [inv.row(i) for i in range(d, space_dim)]
    projection = Matrix(spec, space_dim - d, space_dim, [x for r in proj_rows for x in r])
    return coset, projection


def vec_add(a, b):
    return [x + y for x, y in zip(a, b)]


def vec_sub(a, b):
    return [x - y for x, y in zip(a, b)]


def vec_scale(c, a):
    return [c * x for x in a]


def vec_is_zero(a):
    return all(x.is_zero() for x in a)


def zero_vector(spec, n):
    z = spec.zero()
    return [z] * n


def basis_vector(spec, n, i):
    v = zero_vector(spec, n)
    v[i] = spec.one()
    return v


def kron(a, b):
    """Kronecker product, row-major blocks."""
    spec = a.spec
    rows, cols = a.rows * b.rows, a.cols * b.cols
    z = spec.zero()
    ent = [z] * (rows * cols)
    for i in range(a.rows):
        for j in range(a.cols):
            x = a[i, j]
            if x.is_zero():
                continue
            for k in range(b.rows):
                rbase = (i * b.rows + k) * cols + j * b.cols
                for l in range(b.cols):
                    y = b[k, l]
                    if not y.is_zero():
                        ent[rbase + l] = x * y
    return Matrix(spec, rows, cols, ent)
