"""Hochschild (co)chains of a structure algebra up to a degree bound.

Cochains are dense tables: a degree-p cochain stores one element of A for
every basis tuple (i_1, ..., i_p), flat big-endian index. The differential is
the classical one

  (d f)(a_1..a_{p+1}) = a_1 f(a_2..) + sum_j (-1)^j f(.., a_j a_{j+1}, ..)
                        + (-1)^{p+1} f(..a_p) a_{p+1},

the one for which the cup product f(..) g(..) is a strict chain map. Partial
compositions insert at 0-indexed slot i; the circle product, Gerstenhaber
bracket and commutation homotopy carry the signs

  f o g            = sum_i (-1)^{(q-1) i} f o_i g
  [f, g]           = -(-1)^{(p-1)(q-1)} f o g + g o f
  h(f (x) g)       = sum_i (-1)^{i + (p-1-i) q} f o_i g

with h d + d h = (swapped cup) - cup, exactly, in every degree.
"""

from itertools import product as iter_product

from .errors import DegreeOverflowError, ValidationError
from . import linalg
from .linalg import Matrix

DEFAULT_DEGREE_BOUND = 4


class Cochain:
    __slots__ = ("algebra", "degree", "table")

    def __init__(self, algebra, degree, table):
        n = algebra.dim
        if len(table) != n ** degree:
            raise ValidationError("table length %d != %d^%d" % (len(table), n, degree))
        self.algebra = algebra
        self.degree = degree
        self.table = table

    @classmethod
    def zero(cls, algebra, degree):
        n = algebra.dim
        return cls(algebra, degree,
                   [algebra.zero_vector() for _ in range(n ** degree)])

    @classmethod
    def from_element(cls, algebra, vec):
        return cls(algebra, 0, [list(vec)])

    @classmethod
    def identity(cls, algebra):
        """The identity 1-cochain a -> a."""
        return cls(algebra, 1, [algebra.basis_vector(i) for i in range(algebra.dim)])

    @classmethod
    def from_map(cls, algebra, degree, fn):
        """fn maps a basis-index tuple to an element vector."""
        n = algebra.dim
        return cls(algebra, degree,
                   [list(fn(t)) for t in iter_product(range(n), repeat=degree)])

    @classmethod
    def random(cls, algebra, degree, rng, span=3):
        spec = algebra.spec
        n = algebra.dim
        return cls(algebra, degree,
                   [[spec.random_element(rng, span) for _ in range(n)]
                    for _ in range(n ** degree)])

    def value(self, tup):
        n = self.algebra.dim
        flat = 0
        for t in tup:
            flat = flat * n + t
        return self.table[flat]

    def __eq__(self, other):
        return (isinstance(other, Cochain) and self.degree == other.degree
                and self.table == other.table)

    def is_zero(self):
        return all(linalg.vec_is_zero(v) for v in self.table)

    def __add__(self, other):
        if self.degree != other.degree:
            raise ValidationError("degree mismatch in cochain sum")
        return Cochain(self.algebra, self.degree,
                       [linalg.vec_add(a, b) for a, b in zip(self.table, other.table)])

    def __sub__(self, other):
        if self.degree != other.degree:
            raise ValidationError("degree mismatch in cochain difference")
        return Cochain(self.algebra, self.degree,
                       [linalg.vec_sub(a, b) for a, b in zip(self.table, other.table)])

    def __neg__(self):
        return self.scale(self.algebra.spec.from_int(-1))

    def scale(self, c):
        return Cochain(self.algebra, self.degree,
                       [linalg.vec_scale(c, v) for v in self.table])

    def flat(self):
        """All coordinates as one vector (for matrix-level (co)homology)."""
        return [x for v in self.table for x in v]

    def sparse_lines(self):
        """Deterministic sparse listing `(tuple) -> vector` for reports."""
        n = self.algebra.dim
        out = []
        for flat, tup in enumerate(iter_product(range(n), repeat=self.degree)):
            v = self.table[flat]
            if not linalg.vec_is_zero(v):
                out.append("(%s) -> (%s)" % (",".join(map(str, tup)),
                                             ",".join(x.token() for x in v)))
        return out

    def __repr__(self):
        return "Cochain(degree=%d over %s)" % (self.degree, self.algebra.name)


def _check_bound(degree, bound):
    if bound is not None and degree > bound:
        raise DegreeOverflowError(
            "resulting degree %d exceeds bound %d" % (degree, bound))


def differential(alpha, bound=DEFAULT_DEGREE_BOUND):
    """Hochschild differential, degree p -> p+1; d o d = 0."""
    A = alpha.algebra
    n = A.dim
    p = alpha.degree
    _check_bound(p + 1, bound)
    spec = A.spec
    zero = spec.zero()
    mult = A.mult
    at = alpha.table
    minus_one = spec.from_int(-1)

    if p == 0:
        z = at[0]
        table = [A.commutator(A.basis_vector(i), z) for i in range(n)]
        return Cochain(A, 1, table)

    npow = n ** p
    pw = [n ** (p - 1 - t) for t in range(p)]
    table = []
    for flat, args in enumerate(iter_product(range(n), repeat=p + 1)):
        acc = [zero] * n
        # a_1 . f(a_2 .. a_{p+1})
        val = at[flat % npow]
        mi = mult[args[0]]
        for j, vj in enumerate(val):
            if not vj.is_zero():
                for k, c in mi[j]:
                    acc[k] = acc[k] + vj * c
        # inner face maps, sign (-1)^j
        sign = spec.one()
        for j in range(1, p + 1):
            sign = sign * minus_one
            base = 0
            for t in range(j - 1):
                base += args[t] * pw[t]
            for t in range(j + 1, p + 1):
                base += args[t] * pw[t - 1]
            slot = pw[j - 1]
            for k, c in mult[args[j - 1]][args[j]]:
                sc = sign * c
                val = at[base + k * slot]
                for tt, vv in enumerate(val):
                    if not vv.is_zero():
                        acc[tt] = acc[tt] + sc * vv
        # f(a_1 .. a_p) . a_{p+1}, sign (-1)^{p+1}
        sign = sign * minus_one
        val = at[flat // n]
        last = args[p]
        for j, vj in enumerate(val):
            if not vj.is_zero():
                for k, c in mult[j][last]:
                    acc[k] = acc[k] + sign * vj * c
        table.append(acc)
    return Cochain(A, p + 1, table)


def cup(alpha, beta, bound=DEFAULT_DEGREE_BOUND):
    """(alpha cup beta)(a_1..a_{p+q}) = alpha(a_1..a_p) beta(a_{p+1}..a_{p+q})."""
    A = alpha.algebra
    p, q = alpha.degree, beta.degree
    _check_bound(p + q, bound)
    at, bt = alpha.table, beta.table
    table = []
    for L in range(len(at)):
        av = at[L]
        for R in range(len(bt)):
            table.append(A.multiply(av, bt[R]))
    return Cochain(A, p + q, table)


def circle_i(alpha, beta, i):
    """Insert beta into the (0-indexed) i-th slot of alpha; degree p+q-1."""
    A = alpha.algebra
    n = A.dim
    p, q = alpha.degree, beta.degree
    if not (0 <= i <= p - 1):
        raise ValidationError("slot %d out of range for degree %d" % (i, p))
    spec = A.spec
    zero = spec.zero()
    nl, nq, nr = n ** i, n ** q, n ** (p - 1 - i)
    at, bt = alpha.table, beta.table
    nonzeros = [[(k, c) for k, c in enumerate(bv) if not c.is_zero()] for bv in bt]
    table = []
    for L in range(nl):
        base_l = L * n
        for M in range(nq):
            nz = nonzeros[M]
            for R in range(nr):
                acc = [zero] * n
                for k, c in nz:
                    av = at[(base_l + k) * nr + R]
                    for t, x in enumerate(av):
                        if not x.is_zero():
                            acc[t] = acc[t] + c * x
                table.append(acc)
    return Cochain(A, p + q - 1, table)


def circle(alpha, beta):
    """Circle product: sum_i (-1)^{(q-1) i} alpha o_i beta.

    Empty (zero) when alpha has degree 0; a degree-0 beta is inserted as an
    element, with the sign read modulo 2.
    """
    A = alpha.algebra
    p, q = alpha.degree, beta.degree
    out = Cochain.zero(A, max(p + q - 1, 0))
    minus = A.spec.from_int(-1)
    for i in range(p):
        term = circle_i(alpha, beta, i)
        if ((q - 1) * i) % 2:
            term = term.scale(minus)
        out = out + term
    return out


def gerstenhaber_bracket(alpha, beta):
    """[alpha, beta] = -(-1)^{(p-1)(q-1)} alpha o beta + beta o alpha."""
    p, q = alpha.degree, beta.degree
    spec = alpha.algebra.spec
    sign = spec.from_int(-1 if ((p - 1) * (q - 1)) % 2 == 0 else 1)
    return circle(alpha, beta).scale(sign) + circle(beta, alpha)


def homotopy_h(alpha, beta):
    """h(alpha (x) beta) = sum_i (-1)^{i+(p-1-i)q} alpha o_i beta.

    Satisfies h(d a (x) b) + (-1)^p h(a (x) d b) + d h(a (x) b)
    = (-1)^{pq} b cup a - a cup b, exactly. Vanishes for p = 0.
    """
    A = alpha.algebra
    p, q = alpha.degree, beta.degree
    out = Cochain.zero(A, max(p + q - 1, 0))
    minus = A.spec.from_int(-1)
    for i in range(p):
        term = circle_i(alpha, beta, i)
        if (i + (p - 1 - i) * q) % 2:
            term = term.scale(minus)
        out = out + term
    return out


def homotopy_identity_defect(alpha, beta, bound=None):
    """h(da (x) b) + (-1)^p h(a (x) db) + d h(a (x) b)
    - (-1)^{pq} b cup a + a cup b; the zero cochain when the homotopy
    identity holds (it always should)."""
    A = alpha.algebra
    p, q = alpha.degree, beta.degree
    lhs = homotopy_h(differential(alpha, bound), beta)
    term2 = homotopy_h(alpha, differential(beta, bound))
    if p % 2:
        term2 = -term2
    if p >= 1:
        dh = differential(homotopy_h(alpha, beta), bound)
    else:
        dh = Cochain.zero(A, p + q)
    swap = cup(beta, alpha, bound)
    if (p * q) % 2:
        swap = -swap
    return lhs + term2 + dh - swap + cup(alpha, beta, bound)


def circle_sign_defect(alpha, beta):
    """sum_i (-1)^{i+(p-1-i)q} a o_i b - (-1)^{pq+q} a o b: zero iff the
    homotopy components resum to the circle product with the stated sign."""
    p, q = alpha.degree, beta.degree
    h = homotopy_h(alpha, beta)
    c = circle(alpha, beta)
    if (p * q + q) % 2:
        c = -c
    return h - c


# -- chains ----------------------------------------------------------------------

class Chain:
    """Degree-p Hochschild chain: a vector in A^(x)(p+1), flat big-endian."""

    __slots__ = ("algebra", "degree", "coords")

    def __init__(self, algebra, degree, coords):
        if len(coords) != algebra.dim ** (degree + 1):
            raise ValidationError("chain coordinate length mismatch")
        self.algebra = algebra
        self.degree = degree
        self.coords = coords

    @classmethod
    def zero(cls, algebra, degree):
        return cls(algebra, degree,
                   linalg.zero_vector(algebra.spec, algebra.dim ** (degree + 1)))

    @classmethod
    def from_tensor_terms(cls, algebra, degree, terms):
        """terms: iterable of (coefficient, basis index tuple of length p+1)."""
        out = cls.zero(algebra, degree)
        n = algebra.dim
        for c, tup in terms:
            flat = 0
            for t in tup:
                flat = flat * n + t
            out.coords[flat] = out.coords[flat] + algebra.spec.element(c)
        return out

    def __eq__(self, other):
        return (isinstance(other, Chain) and self.degree == other.degree
                and self.coords == other.coords)


def boundary(chain):
    """b(a_0 (x) ... (x) a_p) = sum_i (-1)^i a_0 (x) .. a_i a_{i+1} .. (x) a_p
    + (-1)^p a_p a_0 (x) a_1 (x) .. (x) a_{p-1}; b o b = 0."""
    A = chain.algebra
    n = A.dim
    p = chain.degree
    if p == 0:
        raise ValidationError("no boundary out of degree 0")
    spec = A.spec
    out = Chain.zero(A, p - 1)
    pw = [n ** (p - 1 - t) for t in range(p)]
    minus = spec.from_int(-1)
    for flat, args in enumerate(iter_product(range(n), repeat=p + 1)):
        c = chain.coords[flat]
        if c.is_zero():
            continue
        sign = spec.one()
        for i in range(p):
            base = 0
            for t in range(i):
                base += args[t] * pw[t]
            for t in range(i + 2, p + 1):
                base += args[t] * pw[t - 1]
            slot = pw[i]
            for k, v in A.mult[args[i]][args[i + 1]]:
                out.coords[base + k * slot] = out.coords[base + k * slot] + sign * c * v
            sign = sign * minus
        # wrap-around face, sign (-1)^p
        base = 0
        for t in range(1, p):
            base += args[t] * pw[t]
        for k, v in A.mult[args[p]][args[0]]:
            out.coords[base + k * pw[0]] = out.coords[base + k * pw[0]] + sign * c * v
    return out


# -- (co)homology ------------------------------------------------------------------

def _cochain_space_dim(A, p):
    return (A.dim ** p) * A.dim


def differential_matrix(A, p, bound=None):
    """Matrix of d: C^p -> C^(p+1) in flat coordinates."""
    _check_bound(p + 1, bound)
    n = A.dim
    dim_in = _cochain_space_dim(A, p)
    cols = []
    for t in range(dim_in):
        table = [A.zero_vector() for _ in range(n ** p)]
        table[t // n][t % n] = A.spec.one()
        cols.append(differential(Cochain(A, p, table), bound=None).flat())
    return Matrix.from_columns(A.spec, cols, nrows=_cochain_space_dim(A, p + 1))


def boundary_matrix(A, p):
    """Matrix of b: C_p -> C_(p-1) in flat coordinates."""
    n = A.dim
    dim_in = n ** (p + 1)
    cols = []
    for t in range(dim_in):
        coords = linalg.zero_vector(A.spec, dim_in)
        coords[t] = A.spec.one()
        cols.append(boundary(Chain(A, p, coords)).coords)
    return Matrix.from_columns(A.spec, cols, nrows=n ** p)


class QuotientSpace:
    """ker/im quotient with representative lifts and class membership."""

    def __init__(self, spec, kernel, image):
        self.spec = spec
        self.kernel = kernel  # columns span the cocycles
        if image.cols:
            img_in_ker = linalg.solve_matrix(kernel, image)
            if img_in_ker is None:
                raise ValidationError("image does not lie inside the kernel")
            img_in_ker = linalg.column_space_basis(img_in_ker)
        else:
            img_in_ker = Matrix.zeros(spec, kernel.cols, 0)
        self.image_coords = img_in_ker
        coset, proj = linalg.quotient_representatives(kernel.cols, img_in_ker)
        self.dimension = coset.cols
        self.representative_coords = (kernel * coset) if coset.cols else \
            Matrix.zeros(spec, kernel.rows, 0)
        self._proj = proj

    def class_coordinates(self, flat_vector):
        """Coordinates of the class of a cocycle; raises if not a cocycle."""
        coords = linalg.solve(self.kernel, flat_vector)
        if coords is None:
            raise ValidationError("vector is not a cocycle")
        return self._proj.apply(coords)

    def is_trivial_class(self, flat_vector):
        return linalg.vec_is_zero(self.class_coordinates(flat_vector))


def cohomology(A, p, bound=None):
    """(dimension, representative cochains, QuotientSpace) of HH^p."""
    dp = differential_matrix(A, p, bound)
    ker = linalg.kernel_basis(dp)
    if p == 0:
        img = Matrix.zeros(A.spec, _cochain_space_dim(A, 0), 0)
    else:
        img = linalg.column_space_basis(differential_matrix(A, p - 1, bound))
    space = QuotientSpace(A.spec, ker, img)
    n = A.dim
    reps = []
    for j in range(space.representative_coords.cols):
        flat = space.representative_coords.column(j)
        table = [flat[t * n:(t + 1) * n] for t in range(n ** p)]
        reps.append(Cochain(A, p, table))
    return space.dimension, reps, space


def homology(A, p):
    """(dimension, representative chains, QuotientSpace) of HH_p."""
    if p == 0:
        ker = Matrix.identity(A.spec, A.dim)
    else:
        ker = linalg.kernel_basis(boundary_matrix(A, p))
    img = linalg.column_space_basis(boundary_matrix(A, p + 1))
    space = QuotientSpace(A.spec, ker, img)
    reps = [Chain(A, p, space.representative_coords.column(j))
            for j in range(space.representative_coords.cols)]
    return space.dimension, reps, space
