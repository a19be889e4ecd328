"""Finite groups, Drinfeld doubles D(G), torus G-bundle orbits and the
geometric SL(2,Z) action, and the simple D(G)-modules.

Doubles use the standard presentation on the basis u_{g,x} = delta_g (x) x:

  u_{g,x} u_{h,y} = [g = x h x^-1] u_{g, xy}
  Delta(u_{g,x})  = sum_{ab=g} u_{a,x} (x) u_{b,x}
  S(u_{g,x})      = u_{x^-1 g^-1 x, x^-1}
  R               = sum_g u_{g,e} (x) (1 (x) g)
  ribbon v        = sum_g u_{g, g^-1}   (the Drinfeld u-element; S^2 = id here)

A commuting pair (a, b) is a G-bundle over the torus; the mapping class group
acts on pairs by precomposition of the classifying homomorphism Z^2 -> G, so
S: (a,b) -> (b, a^-1) and T: (a,b) -> (a, ab), and composites follow
action(M1 M2) = action(M2) o action(M1).
"""

from math import gcd

from .errors import CatalogGapError, UnsupportedRegimeError, ValidationError
from . import linalg
from .algebra import AlgebraModule, StructureAlgebra
from .hopf import HopfAlgebraData, QuasiTriangularData, SparseTensor
from .linalg import Matrix


class FiniteGroup:
    """Multiplication table group; element 0 is the identity."""

    def __init__(self, table, name=None, validate=True):
        self.order = len(table)
        self.table = [list(r) for r in table]
        self.name = name or "G%d" % self.order
        if validate:
            self._validate()
        self.identity = 0
        self.inverse = [next(j for j in range(self.order) if self.table[i][j] == 0)
                        for i in range(self.order)]
        self.nonabelian_irreps = {}

    def _validate(self):
        n = self.order
        for i in range(n):
            if self.table[0][i] != i or self.table[i][0] != i:
                raise ValidationError("element 0 is not an identity")
            if sorted(self.table[i]) != list(range(n)):
                raise ValidationError("row %d is not a permutation" % i)
            if not any(self.table[i][j] == 0 for j in range(n)):
                raise ValidationError("element %d has no inverse" % i)
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if self.table[self.table[i][j]][k] != self.table[i][self.table[j][k]]:
                        raise ValidationError("associativity fails at (%d,%d,%d)" % (i, j, k))

    def mul(self, i, j):
        return self.table[i][j]

    def conj(self, g, h):
        """g h g^-1."""
        return self.mul(self.mul(g, h), self.inverse[g])

    def power(self, g, e):
        if e < 0:
            return self.power(self.inverse[g], -e)
        out = 0
        for _ in range(e):
            out = self.mul(out, g)
        return out

    def element_order(self, g):
        o, x = 1, g
        while x != 0:
            x = self.mul(x, g)
            o += 1
        return o

    def exponent(self):
        m = 1
        for g in range(self.order):
            o = self.element_order(g)
            m = m * o // gcd(m, o)
        return m

    def is_abelian(self):
        return all(self.mul(i, j) == self.mul(j, i)
                   for i in range(self.order) for j in range(self.order))

    def conjugacy_classes(self):
        """Sorted classes, the identity class first."""
        seen = set()
        classes = []
        for g in range(self.order):
            if g in seen:
                continue
            cls = sorted({self.conj(x, g) for x in range(self.order)})
            seen.update(cls)
            classes.append(cls)
        return classes

    def centralizer(self, g):
        return [h for h in range(self.order) if self.mul(h, g) == self.mul(g, h)]

    def generating_set(self):
        gens = []
        generated = {0}
        for g in range(1, self.order):
            if g in generated:
                continue
            gens.append(g)
            frontier = set(generated) | {g}
            while True:
                new = {self.mul(a, b) for a in frontier for b in frontier} - frontier
                if not new:
                    break
                frontier |= new
            generated = frontier
            if len(generated) == self.order:
                break
        return gens

    def subgroup_closure(self, elems):
        cur = set(elems) | {0}
        while True:
            new = {self.mul(a, b) for a in cur for b in cur} - cur
            if not new:
                return sorted(cur)
            cur |= new

    @classmethod
    def cyclic(cls, n):
        return cls([[(i + j) % n for j in range(n)] for i in range(n)],
                   name="Z%d" % n, validate=False)

    @classmethod
    def product(cls, G, H):
        """Direct product; element (a, b) gets index a*|H| + b."""
        n, m = G.order, H.order
        table = [[G.mul(i // m, j // m) * m + H.mul(i % m, j % m)
                  for j in range(n * m)] for i in range(n * m)]
        return cls(table, name="%sx%s" % (G.name, H.name), validate=False)

    @classmethod
    def symmetric3(cls):
        """S_3 as permutations of {0,1,2}; identity first, order fixed."""
        perms = [(0, 1, 2), (1, 2, 0), (2, 0, 1), (0, 2, 1), (2, 1, 0), (1, 0, 2)]
        index = {p: i for i, p in enumerate(perms)}

        def compose(p, q):  # (p o q)(x) = p(q(x))
            return tuple(p[q[x]] for x in range(3))

        table = [[index[compose(p, q)] for q in perms] for p in perms]
        G = cls(table, name="S3", validate=False)
        G._perms = perms
        _attach_s3_irreps(G)
        return G


def _attach_s3_irreps(G):
    """Hardcoded irreps of the full S3 centralizer: trivial, sign, standard."""
    perms = G._perms

    def sign(p):
        s = 1
        for i in range(3):
            for j in range(i + 1, 3):
                if p[i] > p[j]:
                    s = -s
        return s

    def std_matrix(p, spec):
        # permutation action on {(x,y,z): x+y+z=0} in basis (1,-1,0), (0,1,-1)
        cols = []
        basis = [(1, -1, 0), (0, 1, -1)]
        amb = [[1, -1, 0], [0, 1, -1]]

        def perm_vec(v):
            out = [0, 0, 0]
            for i in range(3):
                out[p[i]] = v[i]
            return out

        for b in basis:
            w = perm_vec(b)
            # solve w = x*amb[0] + y*amb[1]: x = w[0], y = -w[2]
            cols.append([spec.from_int(w[0]), spec.from_int(-w[2])])
        return Matrix.from_columns(spec, cols, nrows=2)

    def build(spec):
        full = tuple(range(G.order))
        triv = {"dim": 1, "matrix": {g: Matrix(spec, 1, 1, [spec.one()])
                                     for g in range(G.order)}}
        sgn = {"dim": 1, "matrix": {g: Matrix(spec, 1, 1, [spec.from_int(sign(perms[g]))])
                                    for g in range(G.order)}}
        std = {"dim": 2, "matrix": {g: std_matrix(perms[g], spec)
                                    for g in range(G.order)}}
        return [triv, sgn, std]

    G.nonabelian_irreps[tuple(range(G.order))] = build


# -- commuting pairs and SL(2,Z) -----------------------------------------------------

class CommutingPairOrbit:
    """Orbit of a commuting pair under simultaneous conjugation."""

    def __init__(self, group, pairs):
        self.group = group
        self.pairs = sorted(pairs)
        self.representative = self.pairs[0]
        self.size = len(self.pairs)

    def __repr__(self):
        return "Orbit%r(size %d)" % (self.representative, self.size)


def commuting_pairs(G):
    return [(a, b) for a in range(G.order) for b in range(G.order)
            if G.mul(a, b) == G.mul(b, a)]


def pbun_orbits(G):
    """All commuting pairs, grouped into simultaneous-conjugation orbits."""
    seen = set()
    orbits = []
    for pair in commuting_pairs(G):
        if pair in seen:
            continue
        orbit = {(G.conj(g, pair[0]), G.conj(g, pair[1])) for g in range(G.order)}
        seen.update(orbit)
        orbits.append(CommutingPairOrbit(G, orbit))
    orbits.sort(key=lambda o: o.representative)
    return orbits


SL2Z_S = ((0, -1), (1, 0))
SL2Z_T = ((1, 1), (0, 1))


def sl2z_on_pair(G, mat, pair):
    """Pair as a homomorphism Z^2 -> G, precomposed with `mat` (det 1)."""
    (m11, m12), (m21, m22) = mat
    if m11 * m22 - m12 * m21 != 1:
        raise ValidationError("matrix determinant must be 1")
    a, b = pair

    def word(x, y):
        return G.mul(G.power(a, x), G.power(b, y))

    return (word(m11, m21), word(m12, m22))


def sl2z_action(G, mat, orbits):
    """Permutation of orbit indices induced by the matrix.

    Composites satisfy action(M1 M2) = action(M2) o action(M1).
    """
    index = {}
    for t, o in enumerate(orbits):
        for p in o.pairs:
            index[p] = t
    return [index[sl2z_on_pair(G, mat, o.representative)] for o in orbits]


def mat_mul(m1, m2):
    return tuple(tuple(sum(m1[i][k] * m2[k][j] for k in range(2)) for j in range(2))
                 for i in range(2))


# -- the double ---------------------------------------------------------------------

def double_basis_index(G, g, x):
    return g * G.order + x


def drinfeld_double(G, spec, validate=True):
    """(HopfAlgebraData, QuasiTriangularData) of D(G) over the given field."""
    n = G.order
    dim = n * n
    one = spec.one()
    mult = [[[] for _ in range(dim)] for _ in range(dim)]
    for g in range(n):
        for x in range(n):
            i = double_basis_index(G, g, x)
            for h in range(n):
                for y in range(n):
                    if g == G.conj(x, h):
                        mult[i][double_basis_index(G, h, y)] = \
                            [(double_basis_index(G, g, G.mul(x, y)), one)]
    unit = linalg.zero_vector(spec, dim)
    for g in range(n):
        unit[double_basis_index(G, g, 0)] = one
    generators = []
    for g in range(n):
        generators.append(linalg.basis_vector(spec, dim, double_basis_index(G, g, 0)))
    for s in G.generating_set():
        v = linalg.zero_vector(spec, dim)
        for h in range(n):
            v[double_basis_index(G, h, s)] = one
        generators.append(v)
    names = ["d%d|g%d" % (g, x) for g in range(n) for x in range(n)]
    A = StructureAlgebra(spec, dim, mult, unit, validate=validate,
                         generators=generators, basis_names=names,
                         name="D(%s)/%r" % (G.name, spec))

    coproduct = [[] for _ in range(dim)]
    for g in range(n):
        for x in range(n):
            i = double_basis_index(G, g, x)
            for a in range(n):
                b = G.mul(G.inverse[a], g)
                coproduct[i].append((double_basis_index(G, a, x),
                                     double_basis_index(G, b, x), one))
    counit = [one if g == 0 else spec.zero() for g in range(n) for x in range(n)]
    antipode_cols = []
    for g in range(n):
        for x in range(n):
            xi = G.inverse[x]
            target = double_basis_index(G, G.conj(xi, G.inverse[g]), xi)
            antipode_cols.append(linalg.basis_vector(spec, dim, target))
    antipode = Matrix.from_columns(spec, antipode_cols, nrows=dim)
    H = HopfAlgebraData(A, coproduct, counit, antipode, validate=validate)

    r = SparseTensor(A, 2)
    for g in range(n):
        for h in range(n):
            r.add_term((double_basis_index(G, g, 0), double_basis_index(G, h, g)), one)
    ribbon = linalg.zero_vector(spec, dim)
    for g in range(n):
        ribbon[double_basis_index(G, g, G.inverse[g])] = one
    qt = QuasiTriangularData(H, r, ribbon, validate=validate)
    return H, qt


# -- centralizer irreps and simple modules -------------------------------------------

def root_of_unity(spec, m):
    """A primitive m-th root of unity in the field, or None."""
    if m == 1:
        return spec.one()
    if m == 2:
        return spec.from_int(-1)
    if spec.kind != "cyclotomic":
        return None
    n = spec.n
    if n % m == 0:
        return spec.zeta() ** (n // m)
    if n % 2 == 1 and (2 * n) % m == 0:
        primitive_2n = -(spec.zeta())  # order 2n for odd n
        return primitive_2n ** ((2 * n) // m)
    return None


def abelian_characters(G, elems, spec):
    """All characters of the abelian subgroup `elems`, trivial first."""
    elems = list(elems)
    sub = set(elems)
    orders = {g: G.element_order(g) for g in elems}
    m = 1
    for o in orders.values():
        m = m * o // gcd(m, o)
    zeta = root_of_unity(spec, m)
    if zeta is None:
        raise UnsupportedRegimeError(
            "field %r has no primitive %d-th root of unity" % (spec, m))
    roots = [zeta ** t for t in range(m)]
    # greedy generating sequence of the subgroup
    gens = []
    generated = {0}
    for g in elems:
        if g in generated:
            continue
        gens.append(g)
        cur = set(generated) | {g}
        while True:
            new = {G.mul(a, b) for a in cur for b in cur} - cur
            if not new:
                break
            cur |= new
        generated = cur
        if len(generated) == len(elems):
            break

    chars = [{0: spec.one()}]
    covered = {0}
    for g in gens:
        # relative order of g over the covered subgroup
        o = 1
        x = g
        while x not in covered:
            x = G.mul(x, g)
            o += 1
        new_chars = []
        for chi in chars:
            target = chi[x]  # value forced for g^o (x = g^o in covered set)
            for val in roots:
                if val ** o == target:
                    ext = dict(chi)
                    # extend multiplicatively to cosets covered * g^t
                    for t in range(1, o):
                        gt = G.power(g, t)
                        for h in list(chi):
                            ext[G.mul(h, gt)] = chi[h] * val ** t
                    new_chars.append(ext)
        chars = new_chars
        covered = set(chars[0].keys())
    if len(chars) != len(elems):
        raise ValidationError("character count %d != |H| = %d" % (len(chars), len(elems)))
    for chi in chars:
        for a in elems:
            for b in elems:
                if chi[G.mul(a, b)] != chi[a] * chi[b]:
                    raise ValidationError("character fails multiplicativity")
    one = spec.one()
    chars.sort(key=lambda chi: tuple(chi[g].num + (chi[g].den,) for g in elems))
    chars.sort(key=lambda chi: 0 if all(chi[g] == one for g in elems) else 1)
    return chars


def centralizer_irreps(G, elems, spec):
    """Irreps of the centralizer subgroup as {dim, matrix: g -> Matrix}."""
    key = tuple(sorted(elems))
    if key in G.nonabelian_irreps:
        return G.nonabelian_irreps[key](spec)
    if all(G.mul(a, b) == G.mul(b, a) for a in elems for b in elems):
        chars = abelian_characters(G, elems, spec)
        return [{"dim": 1, "matrix": {g: Matrix(spec, 1, 1, [chi[g]]) for g in elems}}
                for chi in chars]
    raise CatalogGapError(
        "no irrep catalog for the nonabelian centralizer %r in %s" % (key, G.name))


def simple_modules_char0(G, spec, hopf=None):
    """One simple D(G)-module per (conjugacy class, centralizer irrep).

    The unit object (identity class, trivial irrep) comes first; module
    dimension is |class| * dim(irrep).
    """
    if spec.characteristic != 0:
        raise UnsupportedRegimeError("simple-module construction needs char 0")
    if hopf is None:
        hopf, _ = drinfeld_double(G, spec)
    A = hopf.algebra
    n = G.order
    simples = []
    for cls in G.conjugacy_classes():
        c = cls[0]
        cent = G.centralizer(c)
        transversal = {}
        for a in cls:
            transversal[a] = next(x for x in range(n) if G.conj(x, c) == a)
        irreps = centralizer_irreps(G, cent, spec)
        for chi_idx, irrep in enumerate(irreps):
            d = irrep["dim"]
            mdim = len(cls) * d
            pos = {a: t for t, a in enumerate(cls)}
            acts = []
            for g in range(n):
                for x in range(n):
                    mat = Matrix.zeros(spec, mdim, mdim)
                    for a in cls:
                        target = G.conj(x, a)
                        if target != g:
                            continue
                        z = G.mul(G.mul(G.inverse[transversal[target]], x), transversal[a])
                        block = irrep["matrix"][z]
                        rb, cb = pos[target] * d, pos[a] * d
                        for r in range(d):
                            for cc in range(d):
                                mat.entries[(rb + r) * mdim + (cb + cc)] = block[r, cc]
                    acts.append(mat)
            simples.append(AlgebraModule(A, mdim, acts,
                                         name="X(c%d,chi%d)" % (c, chi_idx)))
    return simples


def default_char0_field(G):
    """Smallest catalog field containing the roots of unity D(G)-simples need."""
    from .fields import cyclotomic_field, rationals

    m = G.exponent()
    if m <= 2:
        return rationals()
    if m % 4 == 2:
        return cyclotomic_field(m // 2)  # zeta_m lives in Q(zeta_{m/2}) here
    return cyclotomic_field(m)


def ribbon_scalar(module, ribbon):
    """Scalar by which the (central) ribbon element acts on a simple module."""
    mat = module.rho(ribbon)
    theta = mat[0, 0]
    spec = mat.spec
    for r in range(mat.rows):
        for c in range(mat.cols):
            want = theta if r == c else spec.zero()
            if mat[r, c] != want:
                raise ValidationError("ribbon does not act by a scalar")
    return theta


def smatrix_modular(G, spec=None, with_t=True):
    """Modular data of D(G) in char 0: the S-transformation Psi o D expressed
    in the internal-character basis of the simples, normalized so that
    S_00 = 1/|G| (then row 0 lists quantum dimension / |G|).

    Returns (ModularData, simples, hopf, qt).
    """
    from .fusion import ModularData
    from . import hopf as hopf_ops

    if spec is None:
        spec = default_char0_field(G)
    H, qt = drinfeld_double(G, spec)
    simples = simple_modules_char0(G, spec, hopf=H)
    chars = [hopf_ops.internal_character(H, M) for M in simples]
    B = Matrix.from_columns(spec, chars, nrows=H.algebra.dim)
    full, _, _ = hopf_ops.s_transform(H, qt)
    X = linalg.solve_matrix(B, full * B)
    if X is None:
        raise ValidationError("S-transformation does not preserve the character span")
    x00 = X[0, 0]
    if x00.is_zero():
        raise ValidationError("S-matrix normalization entry vanishes")
    scale = (spec.from_int(G.order) * x00).inverse()
    S = X.scale(scale)
    T = None
    if with_t:
        T = [ribbon_scalar(M, qt.ribbon) for M in simples]
    labels = [M.name for M in simples]
    return ModularData(labels, S, T), simples, H, qt


def simple_modules_modp(G, spec, hopf=None):
    """Simples of D(G) over F_p for an abelian p-group G: one per group
    element, one-dimensional, trivial group-part action."""
    p = spec.characteristic
    if p == 0 or not G.is_abelian():
        raise UnsupportedRegimeError("mod-p simples implemented for abelian p-groups")
    m = G.order
    while m % p == 0:
        m //= p
    if m != 1:
        raise UnsupportedRegimeError("group order is not a power of the characteristic")
    if hopf is None:
        hopf, _ = drinfeld_double(G, spec)
    A = hopf.algebra
    simples = []
    for g in range(G.order):
        acts = []
        for h in range(G.order):
            for y in range(G.order):
                val = spec.one() if h == g else spec.zero()
                acts.append(Matrix(spec, 1, 1, [val]))
        simples.append(AlgebraModule(A, 1, acts, name="X%d" % g))
    return simples
