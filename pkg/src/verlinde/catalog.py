"""Built-in named objects: groups, Frobenius algebras, Hopf data.

Catalog names resolve without any files so every check runs with zero setup;
a path ending in a known extension (or containing a separator) is read
through the file formats instead.
"""

from .errors import CatalogGapError, ValidationError
from . import doubles, linalg
from .algebra import (AlgebraModule, StructureAlgebra, group_algebra,
                      matrix_algebra, primitive_idempotents,
                      tensor_product_algebra, truncated_polynomial_algebra)
from .fields import FieldSpec, cyclotomic_field, prime_field, rationals
from .frobenius import FrobeniusAlgebra


def parse_field_token(token):
    """Field tokens: q | fp:<p> | cyc:<n>."""
    token = token.strip().lower()
    if token == "q":
        return rationals()
    if token.startswith("fp:"):
        return prime_field(int(token[3:]))
    if token.startswith("cyc:"):
        return cyclotomic_field(int(token[4:]))
    raise ValidationError("unknown field token %r (use q, fp:<p>, cyc:<n>)" % token)


def field_token(spec):
    if spec.kind == "rationals":
        return "q"
    if spec.kind == "prime-field":
        return "fp:%d" % spec.p
    return "cyc:%d" % spec.n


_GROUPS = {}


def group(name):
    name = name.lower()
    if name not in _GROUPS:
        if name == "s3":
            _GROUPS[name] = doubles.FiniteGroup.symmetric3()
        elif name == "z2xz2":
            _GROUPS[name] = doubles.FiniteGroup.product(
                doubles.FiniteGroup.cyclic(2), doubles.FiniteGroup.cyclic(2))
        elif name.startswith("z") and name[1:].isdigit():
            _GROUPS[name] = doubles.FiniteGroup.cyclic(int(name[1:]))
        else:
            raise CatalogGapError("unknown group %r" % name)
    return _GROUPS[name]


def group_names():
    return ["z2", "z3", "z4", "z5", "z6", "z2xz2", "s3"]


def _delta_identity_form(A, indices):
    form = linalg.zero_vector(A.spec, A.dim)
    for i in indices:
        form[i] = A.spec.one()
    return form


def _group_algebra_frobenius(spec, G):
    A = group_algebra(spec, G, name="k[%s]" % G.name)
    return FrobeniusAlgebra(A, _delta_identity_form(A, [G.identity]))


def _double_frobenius(G, spec):
    H, qt = doubles.drinfeld_double(G, spec)
    A = H.algebra
    form = linalg.zero_vector(spec, A.dim)
    for g in range(G.order):
        form[doubles.double_basis_index(G, g, 0)] = spec.one()
    return FrobeniusAlgebra(A, form), H, qt


def _truncated_frobenius(p):
    spec = prime_field(p)
    A = truncated_polynomial_algebra(spec, p)
    form = linalg.zero_vector(spec, p)
    form[p - 1] = spec.one()
    return FrobeniusAlgebra(A, form)


def frobenius_algebra(name):
    """Named symmetric Frobenius algebras of the catalog."""
    name = name.lower()
    Q = rationals()
    if name == "q-dual-numbers":
        A = truncated_polynomial_algebra(Q, 2, name="Q[x]/(x^2)")
        return FrobeniusAlgebra(A, [Q.zero(), Q.one()])
    if name.startswith("fp-truncated-"):
        return _truncated_frobenius(int(name.split("-")[-1]))
    if name == "fp-z2z2":
        spec = prime_field(2)
        B = group_algebra(spec, group("z2"))
        A = tensor_product_algebra(B, B, name="F2[Z2]xF2[Z2]")
        # identity (x) identity carries the form
        return FrobeniusAlgebra(A, _delta_identity_form(A, [0]))
    if name == "f2-z2":
        return _group_algebra_frobenius(prime_field(2), group("z2"))
    if name.startswith("q-"):
        return _group_algebra_frobenius(Q, group(name[2:]))
    if name == "m2-q":
        A = matrix_algebra(Q, 2)
        # trace form: lambda(E_ab) = [a == b]
        return FrobeniusAlgebra(A, _delta_identity_form(A, [0, 3]))
    if name.startswith("d-"):
        F, _, _ = double_context(name)
        return F
    raise CatalogGapError("unknown algebra %r" % name)


def algebra_names():
    return ["q-dual-numbers", "fp-truncated-2", "fp-truncated-3", "fp-truncated-5",
            "q-z2", "q-z3", "q-s3", "f2-z2", "fp-z2z2", "m2-q",
            "d-z2", "d-z3", "d-z4", "d-s3", "d-z2-char2", "d-z3-char3"]


_DOUBLES = {}


def double_context(name):
    """(FrobeniusAlgebra, HopfAlgebraData, QuasiTriangularData) for d-* names.

    d-<group> is char 0 over the default cyclotomic field; d-<group>-char<p>
    is over F_p.
    """
    name = name.lower()
    if name in _DOUBLES:
        return _DOUBLES[name]
    if not name.startswith("d-"):
        raise CatalogGapError("unknown double %r" % name)
    rest = name[2:]
    if "-char" in rest:
        gname, _, p = rest.partition("-char")
        spec = prime_field(int(p))
    else:
        gname = rest
        spec = doubles.default_char0_field(group(gname))
    G = group(gname)
    F, H, qt = _double_frobenius(G, spec)
    _DOUBLES[name] = (F, H, qt)
    return _DOUBLES[name]


def double_group_of(name):
    rest = name.lower()[2:]
    gname = rest.partition("-char")[0] if "-char" in rest else rest
    return group(gname)


def double_simples(name):
    """Simple modules matching the catalog double, char 0 or mod p."""
    F, H, qt = double_context(name)
    G = double_group_of(name)
    spec = H.algebra.spec
    if spec.characteristic == 0:
        return doubles.simple_modules_char0(G, spec, hopf=H)
    return doubles.simple_modules_modp(G, spec, hopf=H)


def double_k0_ingredients(name):
    """Everything fusion.k0_check needs, for a mod-p catalog double."""
    F, H, qt = double_context(name)
    G = double_group_of(name)
    A = H.algebra
    spec = A.spec
    simples = double_simples(name)
    idems = primitive_idempotents(A)

    def top_index(e):
        hits = [t for t, S in enumerate(simples) if not S.rho(e).is_zero()]
        if len(hits) != 1:
            raise ValidationError("projective cover has unclear top")
        return hits[0]

    idems = sorted(idems, key=top_index)
    reg = AlgebraModule.regular(A)
    pims = []
    for e in idems:
        cols = [A.multiply(A.basis_vector(b), e) for b in range(A.dim)]
        sub, _ = reg.submodule(cols)
        pims.append(sub)
    orbits = doubles.pbun_orbits(G)
    pair_elements = [linalg.basis_vector(
        spec, A.dim, doubles.double_basis_index(G, o.representative[0],
                                                o.representative[1]))
        for o in orbits]
    sperm = doubles.sl2z_action(G, doubles.SL2Z_S, orbits)
    return F, H, idems, pims, simples, pair_elements, sperm
