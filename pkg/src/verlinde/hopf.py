"""Hopf algebras with quasitriangular/ribbon data, in structure-constant form.

Integrals and cointegrals, the Drinfeld map D(f) = (f (x) id)(R21 R), the
Radford map realized through the cointegral, the S-transformation S = Psi o D
on class functions, internal characters, and the degree-zero
Gainutdinov-Runkel check.

The Radford-map convention is the plain left hit  Psi(a) = lambda_co <- a,
i.e. Psi(a)(b) = lambda_co(a b): of the four hit/antipode candidates it is the
one that is invertible on the catalog doubles and makes Psi o D equal to the
geometric torus-bundle permutation (locked by tests).
"""

from .errors import UnsupportedRegimeError, ValidationError
from . import linalg
from .linalg import Matrix, kron


class SparseTensor:
    """Element of A^(x)legs: dict from basis index tuples to coefficients."""

    def __init__(self, algebra, legs, data=None):
        self.algebra = algebra
        self.legs = legs
        self.data = {}
        if data:
            for key, c in data.items():
                if not c.is_zero():
                    self.data[key] = self.data.get(key, algebra.spec.zero()) + c

    def add_term(self, key, c):
        if c.is_zero():
            return
        cur = self.data.get(key)
        tot = c if cur is None else cur + c
        if tot.is_zero():
            self.data.pop(key, None)
        else:
            self.data[key] = tot

    def __eq__(self, other):
        return (isinstance(other, SparseTensor) and self.legs == other.legs
                and self.data == other.data)

    def multiply(self, other):
        """Componentwise product in A^(x)legs."""
        A = self.algebra
        out = SparseTensor(A, self.legs)
        for key1, c1 in self.data.items():
            for key2, c2 in other.data.items():
                c = c1 * c2
                partial = [((), c)]
                for leg in range(self.legs):
                    terms = A.mult[key1[leg]][key2[leg]]
                    if not terms:
                        partial = []
                        break
                    partial = [(pk + (k,), pc * v) for pk, pc in partial for k, v in terms]
                for pk, pc in partial:
                    out.add_term(pk, pc)
        return out

    def embed(self, legs, positions, unit_vector):
        """Place this tensor into `legs` slots at `positions`, unit elsewhere."""
        A = self.algebra
        unit_terms = [(i, c) for i, c in enumerate(unit_vector) if not c.is_zero()]
        out = SparseTensor(A, legs)
        free = [t for t in range(legs) if t not in positions]

        def fill(idx, key, coeff):
            if idx == len(free):
                out.add_term(tuple(key), coeff)
                return
            for i, c in unit_terms:
                key[free[idx]] = i
                fill(idx + 1, key, coeff * c)

        for tkey, c in self.data.items():
            key = [0] * legs
            for pos, t in zip(positions, tkey):
                key[pos] = t
            fill(0, key, c)
        return out

    def flip(self):
        out = SparseTensor(self.algebra, self.legs)
        for key, c in self.data.items():
            out.add_term(tuple(reversed(key)), c)
        return out

    def apply_map(self, matrix, leg):
        """Apply a linear endomorphism (matrix on coordinates) to one leg."""
        out = SparseTensor(self.algebra, self.legs)
        for key, c in self.data.items():
            col = matrix.column(key[leg])
            for i, v in enumerate(col):
                if not v.is_zero():
                    nk = key[:leg] + (i,) + key[leg + 1:]
                    out.add_term(nk, c * v)
        return out


class HopfAlgebraData:
    """Algebra plus coproduct/counit/antipode; all axioms checked on build.

    `coproduct[i]` lists (j, k, coeff) with Delta(e_i) = sum coeff e_j (x) e_k.
    """

    def __init__(self, algebra, coproduct, counit, antipode, validate=True):
        self.algebra = algebra
        self.coproduct = coproduct
        self.counit = [algebra.spec.element(c) for c in counit]
        self.antipode = antipode
        if validate:
            self._validate()

    def delta_tensor(self, x):
        A = self.algebra
        out = SparseTensor(A, 2)
        for i, c in enumerate(x):
            if c.is_zero():
                continue
            for j, k, v in self.coproduct[i]:
                out.add_term((j, k), c * v)
        return out

    def counit_value(self, x):
        out = self.algebra.spec.zero()
        for i, c in enumerate(x):
            if not c.is_zero():
                out = out + c * self.counit[i]
        return out

    def antipode_apply(self, x):
        return self.antipode.apply(x)

    def convolution(self, f, g):
        """Product on A* inherited from the coproduct."""
        spec = self.algebra.spec
        out = []
        for i in range(self.algebra.dim):
            acc = spec.zero()
            for j, k, v in self.coproduct[i]:
                fj, gk = f[j], g[k]
                if not fj.is_zero() and not gk.is_zero():
                    acc = acc + v * fj * gk
            out.append(acc)
        return out

    def is_involutive(self):
        return self.antipode * self.antipode == Matrix.identity(
            self.algebra.spec, self.algebra.dim)

    def _validate(self):
        A = self.algebra
        n = A.dim
        spec = A.spec
        # coassociativity
        for i in range(n):
            left, right = {}, {}
            for j, k, v in self.coproduct[i]:
                for a, b, w in self.coproduct[j]:
                    key = (a, b, k)
                    left[key] = left.get(key, spec.zero()) + v * w
                for a, b, w in self.coproduct[k]:
                    key = (j, a, b)
                    right[key] = right.get(key, spec.zero()) + v * w
            for key in set(left) | set(right):
                if left.get(key, spec.zero()) != right.get(key, spec.zero()):
                    raise ValidationError("coassociativity fails at e%d" % i)
        # counit axioms
        for i in range(n):
            lvec = A.zero_vector()
            rvec = A.zero_vector()
            for j, k, v in self.coproduct[i]:
                lvec[k] = lvec[k] + v * self.counit[j]
                rvec[j] = rvec[j] + v * self.counit[k]
            if lvec != A.basis_vector(i) or rvec != A.basis_vector(i):
                raise ValidationError("counit axiom fails at e%d" % i)
        # Delta and counit are algebra maps; Delta(1) = 1 (x) 1
        unit_tensor = SparseTensor(A, 2)
        for i, ci in enumerate(A.unit):
            for j, cj in enumerate(A.unit):
                unit_tensor.add_term((i, j), ci * cj)
        if self.delta_tensor(A.unit) != unit_tensor:
            raise ValidationError("Delta(1) != 1 (x) 1")
        if not (self.counit_value(A.unit) - spec.one()).is_zero():
            raise ValidationError("counit(1) != 1")
        for i in range(n):
            di = self.delta_tensor(A.basis_vector(i))
            for j in range(n):
                prod = A.multiply(A.basis_vector(i), A.basis_vector(j))
                lhs = self.delta_tensor(prod)
                rhs = di.multiply(self.delta_tensor(A.basis_vector(j)))
                if lhs != rhs:
                    raise ValidationError("Delta not multiplicative at (e%d,e%d)" % (i, j))
                ce = self.counit_value(prod)
                if ce != self.counit[i] * self.counit[j]:
                    raise ValidationError("counit not multiplicative at (e%d,e%d)" % (i, j))
        # antipode axiom
        for i in range(n):
            acc_l = A.zero_vector()
            acc_r = A.zero_vector()
            for j, k, v in self.coproduct[i]:
                sj = self.antipode.column(j)
                acc_l = linalg.vec_add(acc_l, linalg.vec_scale(
                    v, A.multiply(sj, A.basis_vector(k))))
                sk = self.antipode.column(k)
                acc_r = linalg.vec_add(acc_r, linalg.vec_scale(
                    v, A.multiply(A.basis_vector(j), sk)))
            want = linalg.vec_scale(self.counit[i], list(A.unit))
            if acc_l != want or acc_r != want:
                raise ValidationError("antipode axiom fails at e%d" % i)


class QuasiTriangularData:
    """R-matrix (as a 2-leg sparse tensor) and ribbon element."""

    def __init__(self, hopf, r_tensor, ribbon, validate=True):
        self.hopf = hopf
        self.r = r_tensor
        self.ribbon = ribbon
        self.r_inverse = None
        if validate:
            self._validate()

    def unit_tensor(self, legs):
        A = self.hopf.algebra
        one = SparseTensor(A, 1, {(i,): c for i, c in enumerate(A.unit)
                                  if not c.is_zero()})
        return one.embed(legs, [0], A.unit) if legs > 1 else one

    def _compute_r_inverse(self):
        A = self.hopf.algebra
        cand = self.r.apply_map(self.hopf.antipode, 0)
        unit2 = self.unit_tensor(2)
        if cand.multiply(self.r) == unit2 and self.r.multiply(cand) == unit2:
            return cand
        raise ValidationError("R is not invertible via (S (x) id) R")

    def _validate(self):
        hopf = self.hopf
        A = hopf.algebra
        self.r_inverse = self._compute_r_inverse()
        # Delta^op(a) R = R Delta(a)
        for i in range(A.dim):
            d = hopf.delta_tensor(A.basis_vector(i))
            if d.flip().multiply(self.r) != self.r.multiply(d):
                raise ValidationError("R does not intertwine Delta at e%d" % i)
        # hexagons: (Delta (x) id) R = R13 R23, (id (x) Delta) R = R13 R12
        r13 = self.r.embed(3, [0, 2], A.unit)
        r23 = self.r.embed(3, [1, 2], A.unit)
        r12 = self.r.embed(3, [0, 1], A.unit)
        lhs1 = SparseTensor(A, 3)
        lhs2 = SparseTensor(A, 3)
        for (i, j), c in self.r.data.items():
            for a, b, v in hopf.coproduct[i]:
                lhs1.add_term((a, b, j), c * v)
            for a, b, v in hopf.coproduct[j]:
                lhs2.add_term((i, a, b), c * v)
        if lhs1 != r13.multiply(r23):
            raise ValidationError("hexagon (Delta (x) id) R fails")
        if lhs2 != r13.multiply(r12):
            raise ValidationError("hexagon (id (x) Delta) R fails")
        # ribbon: central, invertible, counit 1
        v = self.ribbon
        for g in A.generator_vectors():
            if A.multiply(v, g) != A.multiply(g, v):
                raise ValidationError("ribbon element is not central")
        if linalg.solve(A.left_mult_matrix(v), list(A.unit)) is None:
            raise ValidationError("ribbon element is not invertible")
        if hopf.counit_value(v) != A.spec.one():
            raise ValidationError("counit of ribbon element is not 1")

    def yang_baxter_holds(self):
        A = self.hopf.algebra
        r12 = self.r.embed(3, [0, 1], A.unit)
        r13 = self.r.embed(3, [0, 2], A.unit)
        r23 = self.r.embed(3, [1, 2], A.unit)
        lhs = r12.multiply(r13).multiply(r23)
        rhs = r23.multiply(r13).multiply(r12)
        return lhs == rhs

    def drinfeld_element(self):
        """u = sum S(R'') R'."""
        A = self.hopf.algebra
        out = A.zero_vector()
        for (i, j), c in self.r.data.items():
            sj = self.hopf.antipode.column(j)
            out = linalg.vec_add(out, linalg.vec_scale(c, A.multiply(sj, A.basis_vector(i))))
        return out

    def monodromy(self):
        """R21 R as a 2-leg tensor."""
        return self.r.flip().multiply(self.r)


# -- integrals ---------------------------------------------------------------------

def integral(hopf):
    """Two-sided integral: a L = counit(a) L, normalized (first coord 1)."""
    A = hopf.algebra
    spec = A.spec
    rows = []
    for g in A.generator_vectors():
        eps = hopf.counit_value(g)
        m = A.left_mult_matrix(g)
        for i in range(A.dim):
            row = list(m.row(i))
            row[i] = row[i] - eps
            rows.append(row)
    ker = linalg.kernel_basis(Matrix(spec, len(rows), A.dim, [x for r in rows for x in r]))
    if ker.cols != 1:
        raise ValidationError("integral space has dimension %d, expected 1" % ker.cols)
    lam = ker.column(0)
    lead = next(x for x in lam if not x.is_zero())
    return linalg.vec_scale(lead.inverse(), lam)


def cointegral(hopf):
    """Right cointegral: (id (x) lam)Delta(a) = lam(a) 1, normalized."""
    A = hopf.algebra
    spec = A.spec
    rows = []
    for i in range(A.dim):
        for t in range(A.dim):
            row = [spec.zero()] * A.dim
            for j, k, v in hopf.coproduct[i]:
                if j == t:
                    row[k] = row[k] + v
            row[i] = row[i] - A.unit[t]
            rows.append(row)
    ker = linalg.kernel_basis(Matrix(spec, len(rows), A.dim, [x for r in rows for x in r]))
    if ker.cols != 1:
        raise ValidationError("cointegral space has dimension %d, expected 1" % ker.cols)
    lam = ker.column(0)
    lead = next(x for x in lam if not x.is_zero())
    return linalg.vec_scale(lead.inverse(), lam)


# -- the maps ----------------------------------------------------------------------

def drinfeld_matrix(hopf, qt):
    """Matrix of D: A* -> A, D(f) = (f (x) id)(R21 R), dual-basis coordinates in."""
    A = hopf.algebra
    spec = A.spec
    m = Matrix.zeros(spec, A.dim, A.dim)
    for (i, j), c in qt.monodromy().data.items():
        m.entries[j * A.dim + i] = m.entries[j * A.dim + i] + c
    return m


def drinfeld_map(hopf, qt, f):
    return drinfeld_matrix(hopf, qt).apply(list(f))


def radford_candidates(hopf, lam=None):
    """The four cointegral-hit candidates for Psi: A -> A*, as matrices.

    Keys: 'left' a -> lam(a .), 'right' a -> lam(. a),
    'left-antipode', 'right-antipode' precompose with S.
    """
    A = hopf.algebra
    if lam is None:
        lam = cointegral(hopf)
    n = A.dim
    gram = [[None] * n for _ in range(n)]
    for b in range(n):
        for c in range(n):
            prod = A.multiply(A.basis_vector(b), A.basis_vector(c))
            acc = A.spec.zero()
            for t, x in enumerate(prod):
                if not x.is_zero():
                    acc = acc + x * lam[t]
            gram[b][c] = acc
    left = Matrix.from_rows(A.spec, [[gram[b][c] for b in range(n)] for c in range(n)])
    right = Matrix.from_rows(A.spec, [[gram[c][b] for b in range(n)] for c in range(n)])
    s = hopf.antipode
    return {
        "left": left,
        "right": right,
        "left-antipode": left * s,
        "right-antipode": right * s,
    }


def radford_map(hopf, lam=None):
    """Psi: A -> A* (matrix), Psi(a)(b) = lambda_co(a b); raises with the
    failing rank if the candidate is not invertible."""
    psi = radford_candidates(hopf, lam)["left"]
    rk = linalg.rank(psi)
    if rk != hopf.algebra.dim:
        raise ValidationError(
            "Radford map candidate has rank %d < %d (non-unimodular input "
            "or wrong convention)" % (rk, hopf.algebra.dim))
    return psi


def class_function_space(hopf):
    """Columns = basis of {f in A*: f(ab) = f(b S^2(a))}."""
    A = hopf.algebra
    spec = A.spec
    s2 = hopf.antipode * hopf.antipode
    rows = []
    for i in range(A.dim):
        s2i = s2.column(i)
        for j in range(A.dim):
            lhs = A.multiply(A.basis_vector(i), A.basis_vector(j))
            rhs = A.multiply(A.basis_vector(j), s2i)
            rows.append(linalg.vec_sub(lhs, rhs))
    m = Matrix(spec, len(rows), A.dim, [x for r in rows for x in r])
    return linalg.kernel_basis(m)


def s_transform(hopf, qt):
    """S = Psi o D on A*, with its restriction to class functions.

    Returns (full matrix on A*, class-function basis, matrix on that basis).
    Raises if D fails to be injective on class functions (non-factorizable).
    """
    A = hopf.algebra
    dmat = drinfeld_matrix(hopf, qt)
    cf = class_function_space(hopf)
    if linalg.rank(dmat * cf) != cf.cols:
        raise ValidationError(
            "Drinfeld map is not injective on class functions (non-factorizable R)")
    psi = radford_map(hopf)
    full = psi * dmat
    restricted = linalg.solve_matrix(cf, full * cf)
    if restricted is None:
        raise ValidationError("S-transformation does not preserve class functions")
    return full, cf, restricted


def internal_character(hopf, module):
    """ch(M): a -> trace rho_M(a), as a covector; needs S^2 = id."""
    if not hopf.is_involutive():
        raise UnsupportedRegimeError(
            "internal characters implemented only for involutive antipode")
    A = hopf.algebra
    return [module.action[i].trace() for i in range(A.dim)]


def trivial_module(hopf):
    from .algebra import AlgebraModule

    A = hopf.algebra
    acts = [Matrix(A.spec, 1, 1, [hopf.counit[i]]) for i in range(A.dim)]
    return AlgebraModule(A, 1, acts, name="trivial")


def tensor_module(hopf, M, N, name=None):
    """M (x) N with action through the coproduct."""
    from .algebra import AlgebraModule

    A = hopf.algebra
    spec = A.spec
    dim = M.dim * N.dim
    acts = []
    for i in range(A.dim):
        out = Matrix.zeros(spec, dim, dim)
        for j, k, v in hopf.coproduct[i]:
            if M.action[j].is_zero() or N.action[k].is_zero():
                continue
            out = out + kron(M.action[j], N.action[k]).scale(v)
        acts.append(out)
    return AlgebraModule(A, dim, acts, name=name or "%s(x)%s" % (M.name, N.name))


def corgrv_check(hopf, qt, simples, fusion_tensor):
    """Exact Gainutdinov-Runkel identity on zeroth cohomology:

      S^-1( S(phi_i) . S(phi_j) ) = sum_l N_ij^l phi_l,   phi_i = Psi^-1(ch X_i)

    with S = D o Psi acting on C(I, A) and . the algebra product.
    fusion_tensor[i][j][l] are the (integer) Jordan-Hoelder multiplicities.
    Returns (passed, failures) where failures list (i, j, lhs, rhs).
    """
    A = hopf.algebra
    spec = A.spec
    psi = radford_map(hopf)
    dmat = drinfeld_matrix(hopf, qt)
    smat = dmat * psi  # action on the A-side
    sinv = linalg.inverse(smat)
    phis = []
    for M in simples:
        ch = internal_character(hopf, M)
        phi = linalg.solve(psi, ch)
        if phi is None:
            raise ValidationError("character is not in the image of the Radford map")
        phis.append(phi)
    s_phis = [smat.apply(phi) for phi in phis]
    failures = []
    for i in range(len(simples)):
        for j in range(len(simples)):
            prod = A.multiply(s_phis[i], s_phis[j])
            lhs = sinv.apply(prod)
            rhs = A.zero_vector()
            for l in range(len(simples)):
                mult = fusion_tensor[i][j][l]
                if mult:
                    rhs = linalg.vec_add(rhs, linalg.vec_scale(
                        spec.from_int(mult), phis[l]))
            if lhs != rhs:
                failures.append((i, j, lhs, rhs))
    return len(failures) == 0, failures
