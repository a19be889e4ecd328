"""Finite-dimensional associative unital algebras by structure constants.

Centers, commutator quotients, radicals, primitive idempotents, Cartan
matrices, blocks, modules with intertwiner spaces and Jordan-Hoelder
multiplicities. Everything is exact over a FieldSpec; structure constants are
kept sparsely (most catalog algebras are monomial).
"""

import random

from .errors import NonSplitError, UnsupportedRegimeError, ValidationError
from . import linalg
from .linalg import Matrix


class StructureAlgebra:
    """Associative unital algebra: e_i e_j = sum_k c[i][j][k] e_k.

    `mult[i][j]` is a list of (k, coeff) pairs with nonzero coeff.
    `generators`, when set, is a list of coordinate vectors generating A as a
    unital algebra; several operations use it to cut work.
    """

    def __init__(self, spec, dim, mult, unit, validate=True, generators=None,
                 basis_names=None, name=None):
        self.spec = spec
        self.dim = dim
        self.mult = mult
        self.unit = [spec.element(u) for u in unit]
        self.generators = generators
        self.basis_names = basis_names or ["e%d" % i for i in range(dim)]
        self.name = name
        self._radical = None
        self._center = None
        if validate:
            self._validate()

    @classmethod
    def from_structure_constants(cls, spec, dim, tensor, unit, **kw):
        """Dense c[i][j][k] input (entries coerced into the field)."""
        mult = []
        for i in range(dim):
            row = []
            for j in range(dim):
                terms = []
                for k in range(dim):
                    v = spec.element(tensor[i][j][k])
                    if not v.is_zero():
                        terms.append((k, v))
                row.append(terms)
            mult.append(row)
        return cls(spec, dim, mult, unit, **kw)

    @classmethod
    def from_sparse(cls, spec, dim, entries, unit, **kw):
        """entries: iterable of (i, j, k, value)."""
        mult = [[[] for _ in range(dim)] for _ in range(dim)]
        for i, j, k, v in entries:
            v = spec.element(v)
            if not v.is_zero():
                mult[i][j].append((k, v))
        return cls(spec, dim, mult, unit, **kw)

    def structure_constant(self, i, j, k):
        for kk, v in self.mult[i][j]:
            if kk == k:
                return v
        return self.spec.zero()

    def structure_tensor(self):
        z = self.spec.zero()
        c = [[[z] * self.dim for _ in range(self.dim)] for _ in range(self.dim)]
        for i in range(self.dim):
            for j in range(self.dim):
                for k, v in self.mult[i][j]:
                    c[i][j][k] = v
        return c

    def _validate(self):
        n = self.dim
        if len(self.unit) != n:
            raise ValidationError("unit vector has wrong length")
        # unit axiom on the basis
        for i in range(n):
            for vec, side in ((self.multiply(self.unit, self.basis_vector(i)), "left"),
                              (self.multiply(self.basis_vector(i), self.unit), "right")):
                if vec != self.basis_vector(i):
                    raise ValidationError("unit fails to act as %s identity on e%d" % (side, i))
        # associativity (e_i e_j) e_k = e_i (e_j e_k), expanded sparsely
        for i in range(n):
            mi = self.mult[i]
            for j in range(n):
                left = mi[j]
                for k in range(n):
                    acc = {}
                    for t, v in left:
                        for s, w in self.mult[t][k]:
                            acc[s] = acc.get(s, self.spec.zero()) + v * w
                    for t, v in self.mult[j][k]:
                        for s, w in mi[t]:
                            acc[s] = acc.get(s, self.spec.zero()) - v * w
                    for s, v in acc.items():
                        if not v.is_zero():
                            raise ValidationError(
                                "associativity fails at (e%d e%d) e%d" % (i, j, k))

    # -- element helpers -------------------------------------------------------

    def zero_vector(self):
        return linalg.zero_vector(self.spec, self.dim)

    def basis_vector(self, i):
        return linalg.basis_vector(self.spec, self.dim, i)

    def multiply(self, x, y):
        out = self.zero_vector()
        for i, xi in enumerate(x):
            if xi.is_zero():
                continue
            for j, yj in enumerate(y):
                if yj.is_zero():
                    continue
                c = xi * yj
                for k, v in self.mult[i][j]:
                    out[k] = out[k] + c * v
        return out

    def commutator(self, x, y):
        return linalg.vec_sub(self.multiply(x, y), self.multiply(y, x))

    def power(self, x, e):
        out = list(self.unit)
        for _ in range(e):
            out = self.multiply(out, x)
        return out

    def left_mult_matrix(self, x):
        cols = [self.multiply(x, self.basis_vector(j)) for j in range(self.dim)]
        return Matrix.from_columns(self.spec, cols, nrows=self.dim)

    def right_mult_matrix(self, x):
        cols = [self.multiply(self.basis_vector(j), x) for j in range(self.dim)]
        return Matrix.from_columns(self.spec, cols, nrows=self.dim)

    def is_commutative(self):
        for i in range(self.dim):
            for j in range(i):
                a = dict(self.mult[i][j])
                for k, v in self.mult[j][i]:
                    if a.pop(k, self.spec.zero()) != v:
                        return False
                if any(not v.is_zero() for v in a.values()):
                    return False
        return True

    def generator_vectors(self):
        if self.generators is not None:
            return self.generators
        return [self.basis_vector(i) for i in range(self.dim)]

    def __repr__(self):
        return "StructureAlgebra(%s, dim=%d over %r)" % (self.name or "?", self.dim, self.spec)


# -- standard constructions ----------------------------------------------------

def group_algebra(spec, group, name=None):
    """k[G] for a FiniteGroup; basis indexed by group elements."""
    n = group.order
    mult = [[[(group.table[i][j], spec.one())] for j in range(n)] for i in range(n)]
    unit = linalg.basis_vector(spec, n, group.identity)
    return StructureAlgebra(spec, n, mult, unit, validate=False,
                            basis_names=["g%d" % i for i in range(n)],
                            name=name or "k[G%d]" % n)


def function_algebra(spec, npoints, name=None):
    """k^n with pointwise product (delta functions as basis)."""
    mult = [[[(i, spec.one())] if i == j else [] for j in range(npoints)]
            for i in range(npoints)]
    unit = [spec.one()] * npoints
    return StructureAlgebra(spec, npoints, mult, unit, validate=False,
                            basis_names=["d%d" % i for i in range(npoints)],
                            name=name or "k^%d" % npoints)


def truncated_polynomial_algebra(spec, n, name=None):
    """k[t]/(t^n), basis 1, t, ..., t^(n-1)."""
    mult = [[[(i + j, spec.one())] if i + j < n else [] for j in range(n)]
            for i in range(n)]
    unit = linalg.basis_vector(spec, n, 0)
    return StructureAlgebra(spec, n, mult, unit, validate=False,
                            basis_names=["t^%d" % i for i in range(n)],
                            name=name or "k[t]/t^%d" % n)


def matrix_algebra(spec, d, name=None):
    """M_d(k) with matrix-unit basis E_{ab} at index a*d+b."""
    n = d * d
    mult = [[[] for _ in range(n)] for _ in range(n)]
    for a in range(d):
        for b in range(d):
            for c in range(d):
                for e in range(d):
                    if b == c:
                        mult[a * d + b][c * d + e] = [(a * d + e, spec.one())]
    unit = linalg.zero_vector(spec, n)
    for a in range(d):
        unit[a * d + a] = spec.one()
    return StructureAlgebra(spec, n, mult, unit, validate=False, name=name or "M%d" % d)


def tensor_product_algebra(A, B, name=None):
    """A (x) B with basis e_i (x) f_j at index i*B.dim + j."""
    if A.spec != B.spec:
        raise ValidationError("tensor factors over different fields")
    nb = B.dim
    n = A.dim * nb
    mult = [[[] for _ in range(n)] for _ in range(n)]
    for i in range(A.dim):
        for ii in range(A.dim):
            ta = A.mult[i][ii]
            if not ta:
                continue
            for j in range(nb):
                for jj in range(nb):
                    tb = B.mult[j][jj]
                    if not tb:
                        continue
                    terms = [(k * nb + l, v * w) for k, v in ta for l, w in tb]
                    mult[i * nb + j][ii * nb + jj] = terms
    unit = [A.unit[i] * B.unit[j] for i in range(A.dim) for j in range(nb)]
    return StructureAlgebra(A.spec, n, mult, unit, validate=False,
                            name=name or "(%s)x(%s)" % (A.name, B.name))


def opposite_algebra(A):
    mult = [[A.mult[j][i] for j in range(A.dim)] for i in range(A.dim)]
    return StructureAlgebra(A.spec, A.dim, mult, A.unit, validate=False,
                            name="(%s)^op" % A.name)


# -- subspace-style invariants ---------------------------------------------------

def center(A):
    """Basis (columns) of {z : z e_i = e_i z for all i}, via one kernel."""
    if A._center is not None:
        return A._center
    gens = A.generator_vectors()
    rows = []
    for g in gens:
        com = A.left_mult_matrix(g) - A.right_mult_matrix(g)
        rows.extend(com.row(i) for i in range(A.dim))
    stacked = Matrix(A.spec, len(rows), A.dim, [x for r in rows for x in r])
    A._center = linalg.kernel_basis(stacked)
    return A._center


def hh0(A):
    """Zeroth Hochschild homology data: ([A,A] basis, projection A -> A/[A,A])."""
    cols = []
    for i in range(A.dim):
        for j in range(i + 1, A.dim):
            c = A.commutator(A.basis_vector(i), A.basis_vector(j))
            if not linalg.vec_is_zero(c):
                cols.append(c)
    comm = linalg.column_space_basis(
        Matrix.from_columns(A.spec, cols, nrows=A.dim)) if cols else Matrix.zeros(A.spec, A.dim, 0)
    _, projection = linalg.quotient_representatives(A.dim, comm)
    return comm, projection


def radical(A):
    """Jacobson radical basis (columns).

    char 0: kernel of the trace form of the regular representation.
    char p: commutative algebras only, via iterated p-power (Frobenius) kernels.
    """
    if A._radical is not None:
        return A._radical
    p = A.spec.characteristic
    if p == 0:
        traces = []
        for k in range(A.dim):
            t = A.spec.zero()
            for i in range(A.dim):
                for kk, v in A.mult[k][i]:
                    if kk == i:
                        t = t + v
            traces.append(t)
        rows = []
        for i in range(A.dim):
            row = []
            for j in range(A.dim):
                s = A.spec.zero()
                for k, v in A.mult[i][j]:
                    if not traces[k].is_zero():
                        s = s + v * traces[k]
                row.append(s)
            rows.append(row)
        gram = Matrix.from_rows(A.spec, rows)
        A._radical = linalg.kernel_basis(gram)
        return A._radical
    if not A.is_commutative():
        raise UnsupportedRegimeError(
            "radical over a prime field is only supported for commutative algebras")
    frob_cols = [A.power(A.basis_vector(i), p) for i in range(A.dim)]
    F = Matrix.from_columns(A.spec, frob_cols, nrows=A.dim)
    Fm = F
    q = p
    while q < A.dim:
        Fm = F * Fm
        q *= p
    A._radical = linalg.kernel_basis(Fm)
    return A._radical


def is_semisimple(A):
    return radical(A).cols == 0


# -- quotient algebra ------------------------------------------------------------

def quotient_algebra(A, ideal):
    """A / (two-sided ideal spanned by `ideal` columns).

    Returns (Abar, projection matrix, lift matrix); lift sends Abar
    coordinates to representative elements of A.
    """
    coset, proj = linalg.quotient_representatives(A.dim, ideal)
    m = coset.cols
    lifts = coset.columns()
    mult = []
    for i in range(m):
        row = []
        for j in range(m):
            prod = proj.apply(A.multiply(lifts[i], lifts[j]))
            row.append([(k, v) for k, v in enumerate(prod) if not v.is_zero()])
        mult.append(row)
    unit = proj.apply(A.unit)
    Abar = StructureAlgebra(A.spec, m, mult, unit, validate=False,
                            name="(%s)/J" % (A.name,))
    return Abar, proj, coset


# -- modules ---------------------------------------------------------------------

class AlgebraModule:
    """Left module given by its action matrices rho(e_i)."""

    def __init__(self, algebra, dim, action, validate=False, name=None):
        self.algebra = algebra
        self.dim = dim
        self.action = action
        self.name = name
        if validate:
            self.validate()

    def validate(self):
        A = self.algebra
        if self.action[0].spec != A.spec:
            raise ValidationError("module field mismatch")
        ident = Matrix.identity(A.spec, self.dim)
        if self.rho(A.unit) != ident:
            raise ValidationError("unit does not act as identity")
        for i in range(A.dim):
            for j in range(A.dim):
                lhs = self.action[i] * self.action[j]
                rhs = Matrix.zeros(A.spec, self.dim, self.dim)
                for k, v in A.mult[i][j]:
                    rhs = rhs + self.action[k].scale(v)
                if lhs != rhs:
                    raise ValidationError("action fails at e%d e%d" % (i, j))

    def rho(self, x):
        out = Matrix.zeros(self.algebra.spec, self.dim, self.dim)
        for i, xi in enumerate(x):
            if not xi.is_zero():
                out = out + self.action[i].scale(xi)
        return out

    def character(self, x):
        t = self.algebra.spec.zero()
        for i, xi in enumerate(x):
            if not xi.is_zero():
                t = t + xi * self.action[i].trace()
        return t

    @classmethod
    def regular(cls, A, name=None):
        return cls(A, A.dim, [A.left_mult_matrix(A.basis_vector(i)) for i in range(A.dim)],
                   name=name or "regular(%s)" % A.name)

    def direct_sum(self, other):
        A = self.algebra
        n, m = self.dim, other.dim
        acts = []
        for i in range(A.dim):
            out = Matrix.zeros(A.spec, n + m, n + m)
            for r in range(n):
                for c in range(n):
                    out.entries[r * (n + m) + c] = self.action[i][r, c]
            for r in range(m):
                for c in range(m):
                    out.entries[(n + r) * (n + m) + (n + c)] = other.action[i][r, c]
            acts.append(out)
        return AlgebraModule(A, n + m, acts, name="%s(+)%s" % (self.name, other.name))

    def submodule(self, columns):
        """Module structure on the span of `columns` (must be invariant)."""
        A = self.algebra
        B = linalg.column_space_basis(Matrix.from_columns(A.spec, columns, nrows=self.dim))
        acts = []
        for i in range(A.dim):
            img = self.action[i] * B
            X = linalg.solve_matrix(B, img)
            if X is None:
                raise ValidationError("span is not invariant under the action")
            acts.append(X)
        return AlgebraModule(A, B.cols, acts, name="sub(%s)" % self.name), B

    def quotient_by(self, sub_columns):
        A = self.algebra
        sub = Matrix.from_columns(A.spec, sub_columns, nrows=self.dim) \
            if isinstance(sub_columns, list) else sub_columns
        coset, proj = linalg.quotient_representatives(self.dim, sub)
        acts = [proj * (self.action[i] * coset) for i in range(A.dim)]
        return AlgebraModule(A, coset.cols, acts, name="quot(%s)" % self.name), proj

    def __repr__(self):
        return "AlgebraModule(%s, dim=%d)" % (self.name or "?", self.dim)


def hom_space(M, N, generators=None):
    """Intertwiners {T : T rho_M = rho_N T}. Returns (dimension, basis of T's).

    Imposes one generator at a time on a shrinking solution space; the
    generating set defaults to the algebra's, falling back to the full basis.
    """
    if M.algebra is not N.algebra:
        raise ValidationError("modules over different algebras")
    A = M.algebra
    spec = A.spec
    nm = N.dim * M.dim
    if generators is None:
        generators = A.generator_vectors()

    def as_matrix(vec):
        return Matrix(spec, N.dim, M.dim, list(vec))

    basis = [linalg.basis_vector(spec, nm, t) for t in range(nm)]
    for g in generators:
        rn, rm = N.rho(g), M.rho(g)
        cols = []
        for vec in basis:
            T = as_matrix(vec)
            C = rn * T - T * rm
            cols.append(C.entries)
        cmat = Matrix.from_columns(spec, cols, nrows=nm)
        ker = linalg.kernel_basis(cmat)
        if ker.cols == 0:
            return 0, []
        new_basis = []
        for j in range(ker.cols):
            coeffs = ker.column(j)
            vec = linalg.zero_vector(spec, nm)
            for t, c in enumerate(coeffs):
                if not c.is_zero():
                    vec = linalg.vec_add(vec, linalg.vec_scale(c, basis[t]))
            new_basis.append(vec)
        basis = new_basis
    return len(basis), [as_matrix(v) for v in basis]


def radical_filtration(M):
    """[M, JM, J^2 M, ...] as column-space matrices, ending at 0."""
    A = M.algebra
    J = radical(A)
    layers = [Matrix.identity(A.spec, M.dim)]
    current = layers[0]
    jmats = [M.rho(J.column(t)) for t in range(J.cols)]
    while current.cols > 0:
        cols = []
        for jm in jmats:
            img = jm * current
            cols.extend(img.columns())
        nxt = linalg.column_space_basis(Matrix.from_columns(A.spec, cols, nrows=M.dim)) \
            if cols else Matrix.zeros(A.spec, M.dim, 0)
        layers.append(nxt)
        if nxt.cols == 0:
            break
        current = nxt
    return layers


def composition_multiplicities(M, simples):
    """Jordan-Hoelder multiplicity of each (split) simple in M,
    via the radical filtration (each layer is semisimple)."""
    A = M.algebra
    counts = [0] * len(simples)
    layers = radical_filtration(M)
    for t in range(len(layers) - 1):
        outer, inner = layers[t], layers[t + 1]
        if outer.cols == M.dim:
            sub, B = M, Matrix.identity(A.spec, M.dim)
        else:
            sub, B = M.submodule(outer.columns())
        if inner.cols:
            inner_coords = linalg.solve_matrix(B, inner)
            layer, _ = sub.quotient_by(inner_coords)
        else:
            layer = sub
        if layer.dim == 0:
            continue
        for s, S in enumerate(simples):
            d, _ = hom_space(S, layer)
            counts[s] += d
    return counts


# -- idempotents, Cartan matrix, blocks -------------------------------------------

def _newton_lift_idempotent(A, x, max_iter=64):
    """Lift an idempotent mod nilpotents to an exact one via e <- 3e^2 - 2e^3."""
    three = A.spec.from_int(3)
    two = A.spec.from_int(2)
    e = list(x)
    for _ in range(max_iter):
        e2 = A.multiply(e, e)
        if e2 == e:
            return e
        e3 = A.multiply(e2, e)
        e = linalg.vec_sub(linalg.vec_scale(three, e2), linalg.vec_scale(two, e3))
    raise ValidationError("idempotent lifting did not converge")


def _minimal_polynomial(A, unit_e, x):
    """Monic minimal polynomial of x relative to the corner unit e
    (powers e, x, x^2, ... until linearly dependent)."""
    spec = A.spec
    cur = list(unit_e)
    pows = [cur]
    while True:
        stacked = Matrix.from_columns(spec, pows, nrows=A.dim)
        if linalg.rank(stacked) < len(pows):
            break
        cur = A.multiply(cur, x)
        pows.append(cur)
    amat = Matrix.from_columns(spec, pows[:-1], nrows=A.dim)
    coeffs = linalg.solve(amat, pows[-1])
    # x^d = sum coeffs[i] x^i  =>  minpoly = x^d - sum coeffs[i] x^i
    d = len(pows) - 1
    poly = [-c for c in coeffs] + [spec.one()]
    return poly, d


def _rational_roots(spec, poly):
    """All roots in Q of an exact polynomial over Q (rational-root theorem)."""
    from fractions import Fraction

    den = 1
    for c in poly:
        den = den * c.den // __import__("math").gcd(den, c.den)
    ints = [c.num[0] * (den // c.den) for c in poly]
    while ints and ints[-1] == 0:
        ints.pop()
    if len(ints) <= 1:
        return []
    shift = 0
    while ints[shift] == 0:
        shift += 1
    roots = set()
    if shift:
        roots.add(Fraction(0))
        ints = ints[shift:]
    a0, an = abs(ints[0]), abs(ints[-1])

    def divisors(m):
        out = []
        d = 1
        while d * d <= m:
            if m % d == 0:
                out.extend((d, m // d))
            d += 1
        return sorted(set(out))

    for p in divisors(a0):
        for q in divisors(an):
            for sign in (1, -1):
                r = Fraction(sign * p, q)
                val = Fraction(0)
                for c in reversed(ints):
                    val = val * r + c
                if val == 0:
                    roots.add(r)
    return [spec.from_fraction(r) for r in sorted(roots)]


def _lagrange_idempotents(A, e, x, eigenvalues):
    """Spectral idempotents of x inside the corner with unit e."""
    outs = []
    for lam in eigenvalues:
        f = list(e)
        for mu in eigenvalues:
            if mu == lam:
                continue
            factor = linalg.vec_sub(x, linalg.vec_scale(mu, e))
            f = A.multiply(f, factor)
            f = linalg.vec_scale((lam - mu).inverse(), f)
        if not linalg.vec_is_zero(f):
            outs.append(f)
    return outs


def _split_commutative_frobenius(A):
    """Primitive idempotents of a commutative algebra over F_p via
    Frobenius-power stabilization and F_p-Lagrange interpolation."""
    spec = A.spec
    p = spec.characteristic
    powers = []
    for i in range(A.dim):
        x = A.basis_vector(i)
        m = 1
        while m < A.dim:
            x = A.power(x, p)
            m *= p
        powers.append(x)
    etale = linalg.column_space_basis(Matrix.from_columns(spec, powers, nrows=A.dim))
    scalars = [spec.from_int(c) for c in range(p)]
    idems = [list(A.unit)]
    for t in range(etale.cols):
        b = etale.column(t)
        refined = []
        for e in idems:
            x = A.multiply(e, b)
            parts = []
            for lam in scalars:
                f = list(e)
                for mu in scalars:
                    if mu == lam:
                        continue
                    f = A.multiply(f, linalg.vec_sub(x, linalg.vec_scale(mu, e)))
                    f = linalg.vec_scale((lam - mu).inverse(), f)
                if not linalg.vec_is_zero(f):
                    if A.multiply(f, f) != f:
                        raise NonSplitError(
                            "semisimple quotient does not split over F_%d" % p)
                    parts.append(f)
            refined.extend(parts)
        idems = refined
    return idems


def _split_commutative_rational(A, e_list):
    """Refine idempotents of a commutative semisimple algebra over Q by
    eigen-splitting multiplication operators (rational-root theorem)."""
    spec = A.spec
    if spec.kind != "rationals":
        raise UnsupportedRegimeError(
            "commutative eigen-splitting implemented over Q only; supply simple modules")
    idems = [list(e) for e in e_list]
    for i in range(A.dim):
        b = A.basis_vector(i)
        refined = []
        for e in idems:
            x = A.multiply(e, b)
            poly, deg = _minimal_polynomial(A, e, x)
            if deg <= 1:
                refined.append(e)
                continue
            roots = _rational_roots(spec, poly)
            if len(roots) < deg:
                raise NonSplitError(
                    "minimal polynomial of a central element does not split over Q")
            refined.extend(_lagrange_idempotents(A, e, x, roots))
        idems = refined
    return idems


def _subalgebra_on_columns(A, cols):
    """Structure constants of the (unital) subalgebra spanned by `cols`."""
    B = linalg.column_space_basis(Matrix.from_columns(A.spec, cols, nrows=A.dim))
    m = B.cols
    mult = []
    for i in range(m):
        row = []
        for j in range(m):
            prod = A.multiply(B.column(i), B.column(j))
            coeffs = linalg.solve(B, prod)
            if coeffs is None:
                raise ValidationError("span is not multiplicatively closed")
            row.append([(k, v) for k, v in enumerate(coeffs) if not v.is_zero()])
        mult.append(row)
    unit = linalg.solve(B, A.unit)
    if unit is None:
        raise ValidationError("unit not contained in subalgebra")
    sub = StructureAlgebra(A.spec, m, mult, unit, validate=False, name="sub(%s)" % A.name)
    return sub, B


def _split_block_noncommutative(A, z, rng):
    """Primitive idempotents of the (split simple) block zA, for char 0.

    Looks for an element of the block whose spectrum consists of d distinct
    rational eigenvalues; its Lagrange projectors are then rank one.
    """
    spec = A.spec
    block_cols = [A.multiply(z, A.basis_vector(j)) for j in range(A.dim)]
    B = linalg.column_space_basis(Matrix.from_columns(spec, block_cols, nrows=A.dim))
    dim_b = B.cols
    d = 1
    while d * d < dim_b:
        d += 1
    if d * d != dim_b:
        raise NonSplitError("block dimension %d is not a perfect square" % dim_b)
    if d == 1:
        return [list(z)]
    candidates = [B.column(j) for j in range(B.cols)]
    for _ in range(200):
        for y in candidates:
            y = A.multiply(A.multiply(z, y), z)
            poly, deg = _minimal_polynomial(A, z, y)
            if deg != d:
                continue
            roots = _rational_roots(spec, poly)
            if len(roots) == d:
                idems = _lagrange_idempotents(A, z, y, roots)
                if len(idems) == d:
                    return idems
        candidates = []
        for _ in range(4):
            y = linalg.zero_vector(spec, A.dim)
            for j in range(B.cols):
                c = spec.from_int(rng.randint(-3, 3))
                y = linalg.vec_add(y, linalg.vec_scale(c, B.column(j)))
            candidates.append(y)
    raise NonSplitError("no separating element with rational spectrum found in block")


def primitive_idempotents(A, simples=None):
    """Complete orthogonal primitive idempotent system of A.

    Routes (see module docs): known simple modules (split semisimple), the
    commutative Frobenius-power route in char p, and char-0 eigen-splitting
    with Newton lifting when the radical is nonzero.
    """
    spec = A.spec
    p = spec.characteristic

    if simples is not None:
        if radical(A).cols != 0:
            raise UnsupportedRegimeError(
                "simple-module route requires a semisimple algebra")
        if sum(S.dim * S.dim for S in simples) != A.dim:
            raise NonSplitError(
                "simple modules do not account for the full dimension "
                "(%d vs %d)" % (sum(S.dim * S.dim for S in simples), A.dim))
        idems = []
        for i, S in enumerate(simples):
            for r in range(S.dim):
                rows = []
                rhs = []
                for j, T in enumerate(simples):
                    for a in range(T.dim):
                        for b in range(T.dim):
                            rows.append([T.action[t][a, b] for t in range(A.dim)])
                            want = spec.one() if (j == i and a == r and b == r) else spec.zero()
                            rhs.append(want)
                sol = linalg.solve(Matrix.from_rows(spec, rows), rhs)
                if sol is None:
                    raise NonSplitError(
                        "simple modules do not realize a complete matrix decomposition")
                idems.append(sol)
        _verify_idempotent_system(A, idems)
        return idems

    if p > 0:
        if not A.is_commutative():
            raise UnsupportedRegimeError(
                "idempotents over a prime field need a commutative algebra "
                "or explicit simple modules")
        idems = _split_commutative_frobenius(A)
        _verify_idempotent_system(A, idems)
        return idems

    J = radical(A)
    if J.cols == 0:
        if A.is_commutative():
            idems = _split_commutative_rational(A, [A.unit])
        else:
            Z, _ = _subalgebra_on_columns(A, center(A).columns())
            z_idems_sub = _split_commutative_rational(Z, [Z.unit])
            Zb = linalg.column_space_basis(
                Matrix.from_columns(spec, center(A).columns(), nrows=A.dim))
            rng = random.Random(11)
            idems = []
            for zi in z_idems_sub:
                z = linalg.zero_vector(spec, A.dim)
                for t, c in enumerate(zi):
                    if not c.is_zero():
                        z = linalg.vec_add(z, linalg.vec_scale(c, Zb.column(t)))
                idems.extend(_split_block_noncommutative(A, z, rng))
        _verify_idempotent_system(A, idems)
        return idems

    # char 0, nonzero radical: split the semisimple quotient, then lift
    Abar, proj, coset = quotient_algebra(A, J)
    bar_idems = primitive_idempotents(Abar)
    lifted = []
    covered = A.zero_vector()
    for eb in bar_idems:
        rep = linalg.zero_vector(spec, A.dim)
        for t, c in enumerate(eb):
            if not c.is_zero():
                rep = linalg.vec_add(rep, linalg.vec_scale(c, coset.column(t)))
        rest = linalg.vec_sub(list(A.unit), covered)
        rep = A.multiply(A.multiply(rest, rep), rest)
        e = _newton_lift_idempotent(A, rep)
        lifted.append(e)
        covered = linalg.vec_add(covered, e)
    _verify_idempotent_system(A, lifted)
    return lifted


def _verify_idempotent_system(A, idems):
    total = A.zero_vector()
    for i, e in enumerate(idems):
        if A.multiply(e, e) != e:
            raise ValidationError("candidate %d is not idempotent" % i)
        total = linalg.vec_add(total, e)
        for j, f in enumerate(idems):
            if i != j and not linalg.vec_is_zero(A.multiply(e, f)):
                raise ValidationError("candidates %d,%d not orthogonal" % (i, j))
    if total != list(A.unit):
        raise ValidationError("idempotents do not sum to the unit")


def corner_dimension(A, e, f):
    """dim_k of e A f, as an integer."""
    cols = [A.multiply(A.multiply(e, A.basis_vector(i)), f) for i in range(A.dim)]
    return linalg.rank(Matrix.from_columns(A.spec, cols, nrows=A.dim))


def corner_dimension_table(A, idempotents):
    """All dims e_i A e_j at once; computes each left ideal basis e_i A only
    once, so large idempotent systems stay cheap."""
    left = []
    for e in idempotents:
        cols = [A.multiply(e, A.basis_vector(b)) for b in range(A.dim)]
        left.append(linalg.column_space_basis(
            Matrix.from_columns(A.spec, cols, nrows=A.dim)))
    table = []
    for Ei in left:
        row = []
        for f in idempotents:
            cols = [A.multiply(Ei.column(t), f) for t in range(Ei.cols)]
            if cols:
                row.append(linalg.rank(Matrix.from_columns(A.spec, cols, nrows=A.dim)))
            else:
                row.append(0)
        table.append(row)
    return table


def pim_classes(A, idempotents, simples=None):
    """Group a complete primitive idempotent system by isomorphism of the
    projectives A e_i. Returns a list of index lists."""
    n = len(idempotents)
    if simples is not None:
        owner = []
        for e in idempotents:
            hits = [j for j, S in enumerate(simples) if not S.rho(e).is_zero()]
            if len(hits) != 1:
                raise ValidationError("idempotent meets %d simples" % len(hits))
            owner.append(hits[0])
        groups = {}
        for i, o in enumerate(owner):
            groups.setdefault(o, []).append(i)
        return [groups[o] for o in sorted(groups)]
    if A.is_commutative():
        return [[i] for i in range(n)]
    if is_semisimple(A):
        # primitive idempotents of a split semisimple algebra are isomorphic
        # exactly when they meet: e A f != 0
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i in range(n):
            for j in range(i + 1, n):
                if corner_dimension(A, idempotents[i], idempotents[j]) != 0:
                    ri, rj = find(i), find(j)
                    if ri != rj:
                        parent[rj] = ri
        groups = {}
        for i in range(n):
            groups.setdefault(find(i), []).append(i)
        return [groups[r] for r in sorted(groups)]
    raise UnsupportedRegimeError(
        "isomorphism classification of projectives needs a commutative, "
        "semisimple, or simples-equipped algebra")


def cartan_matrix(A, idempotents=None, simples=None, classes=None):
    """Integer matrix Cartan[i][j] = dim e_i A e_j, one representative
    idempotent per isomorphism class of projective indecomposables."""
    if idempotents is None:
        idempotents = primitive_idempotents(A, simples=simples)
    if classes is None:
        classes = pim_classes(A, idempotents, simples=simples)
    reps = [idempotents[c[0]] for c in classes]
    n = len(reps)
    return [[corner_dimension(A, reps[i], reps[j]) for j in range(n)] for i in range(n)]


class BlockPartition:
    """Partition of projective-indecomposable indices into blocks."""

    def __init__(self, classes):
        self.classes = [sorted(c) for c in classes]
        self.classes.sort()

    def block_of(self, i):
        for t, c in enumerate(self.classes):
            if i in c:
                return t
        raise ValidationError("index %d not in partition" % i)

    def __len__(self):
        return len(self.classes)

    def __repr__(self):
        return "BlockPartition(%s)" % (self.classes,)


def blocks(A, cartan=None, idempotents=None, simples=None):
    """Transitive closure of the nonzero pattern of the Cartan matrix,
    as a partition of projective-indecomposable (iso-class) indices."""
    if cartan is None:
        cartan = cartan_matrix(A, idempotents, simples=simples)
    n = len(cartan)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(n):
        for j in range(n):
            if cartan[i][j] != 0 or cartan[j][i] != 0:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[rj] = ri
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return BlockPartition(list(groups.values()))


def block_units(A, idempotents, classes, partition):
    """Central idempotent of each block: the sum of all idempotents of the
    complete system whose class belongs to the block."""
    units = []
    for blk in partition.classes:
        u = A.zero_vector()
        for cls_index in blk:
            for i in classes[cls_index]:
                u = linalg.vec_add(u, idempotents[i])
        units.append(u)
    return units
