import random

import pytest

from verlinde import doubles as db
from verlinde import hopf as hp
from verlinde import linalg
from verlinde.algebra import AlgebraModule, center
from verlinde.catalog import double_context, double_simples, group
from verlinde.errors import UnsupportedRegimeError, ValidationError
from verlinde.fields import cyclotomic_field, prime_field, rationals
from verlinde.hopf import (HopfAlgebraData, QuasiTriangularData, SparseTensor,
                           class_function_space, cointegral, corgrv_check,
                           drinfeld_map, drinfeld_matrix, integral,
                           internal_character, radford_candidates, radford_map,
                           s_transform, tensor_module, trivial_module)
from verlinde.linalg import Matrix

Q = rationals()
F2 = prime_field(2)


def group_hopf(G, spec):
    """k[G] with its standard Hopf structure (grouplike basis)."""
    from verlinde.algebra import group_algebra

    A = group_algebra(spec, G)
    cop = [[(g, g, spec.one())] for g in range(G.order)]
    counit = [spec.one()] * G.order
    antipode = Matrix.from_columns(
        spec, [A.basis_vector(G.inverse[g]) for g in range(G.order)], nrows=G.order)
    return HopfAlgebraData(A, cop, counit, antipode)


def function_hopf(G, spec):
    """k^G with pointwise product and convolution coproduct."""
    from verlinde.algebra import function_algebra

    A = function_algebra(spec, G.order)
    cop = []
    for g in range(G.order):
        terms = []
        for a in range(G.order):
            b = G.mul(G.inverse[a], g)
            terms.append((a, b, spec.one()))
        cop.append(terms)
    counit = [spec.one() if g == 0 else spec.zero() for g in range(G.order)]
    antipode = Matrix.from_columns(
        spec, [A.basis_vector(G.inverse[g]) for g in range(G.order)], nrows=G.order)
    return HopfAlgebraData(A, cop, counit, antipode)


def test_hopf_axioms_validated_on_build():
    group_hopf(group("s3"), Q)
    function_hopf(group("z3"), Q)
    double_context("d-z2")


def test_corrupted_coproduct_rejected():
    G = group("z2")
    from verlinde.algebra import group_algebra

    A = group_algebra(Q, G)
    cop = [[(0, 0, Q.one())], [(1, 0, Q.one())]]  # not coassociative/counital
    counit = [Q.one(), Q.one()]
    antipode = Matrix.identity(Q, 2)
    with pytest.raises(ValidationError):
        HopfAlgebraData(A, cop, counit, antipode)


def test_corrupted_antipode_rejected():
    G = group("z3")
    H = group_hopf(G, Q)
    bad = Matrix.identity(Q, 3)  # identity is not the inverse map on Z3
    with pytest.raises(ValidationError):
        HopfAlgebraData(H.algebra, H.coproduct, H.counit, bad)


def test_integral_group_algebra():
    G = group("s3")
    H = group_hopf(G, Q)
    lam = integral(H)
    assert lam == [Q.one()] * 6  # sum of all group elements, normalized


def test_integral_function_algebra():
    G = group("z3")
    H = function_hopf(G, Q)
    lam = integral(H)
    assert lam == [Q.one(), Q.zero(), Q.zero()]  # delta at the identity


def test_integral_double_two_sided():
    for name in ("d-z2", "d-z2-char2"):
        F, H, qt = double_context(name)
        A = H.algebra
        lam = integral(H)
        for i in range(A.dim):
            b = A.basis_vector(i)
            eps = H.counit_value(b)
            assert A.multiply(b, lam) == linalg.vec_scale(eps, lam)
            assert A.multiply(lam, b) == linalg.vec_scale(eps, lam)


def test_cointegral_double():
    F, H, qt = double_context("d-z2")
    lam = cointegral(H)
    G = group("z2")
    expected = linalg.zero_vector(Q, 4)
    for g in range(2):
        expected[db.double_basis_index(G, g, 0)] = Q.one()
    assert lam == expected
    # defining property, both sides
    A = H.algebra
    for i in range(A.dim):
        acc = A.zero_vector()
        for j, k, v in H.coproduct[i]:
            acc = linalg.vec_add(acc, linalg.vec_scale(v * lam[k], A.basis_vector(j)))
        assert acc == linalg.vec_scale(lam[i], list(A.unit))


def test_integral_error_on_corrupted_input():
    # corrupted coproduct/counit data (validation skipped) produces an
    # integral space of the wrong dimension, which is reported explicitly
    from verlinde.algebra import function_algebra

    A = function_algebra(Q, 2)
    cop = [[(0, 0, Q.one())], [(1, 1, Q.one())]]
    counit = [Q.one(), Q.one()]
    antipode = Matrix.identity(Q, 2)
    H = HopfAlgebraData(A, cop, counit, antipode, validate=False)
    with pytest.raises(ValidationError):
        integral(H)


def test_drinfeld_map_trivial_r():
    F, H, qt = double_context("d-z2")
    A = H.algebra
    trivial = SparseTensor(A, 2)
    for i, ci in enumerate(A.unit):
        for j, cj in enumerate(A.unit):
            trivial.add_term((i, j), ci * cj)
    qt_trivial = QuasiTriangularData(H, trivial, list(A.unit), validate=True)
    f = [Q.from_int(k) for k in range(4)]
    out = drinfeld_map(H, qt_trivial, f)
    f_at_one = Q.zero()
    for i, c in enumerate(A.unit):
        f_at_one = f_at_one + c * f[i]
    assert out == linalg.vec_scale(f_at_one, list(A.unit))


def test_drinfeld_map_algebra_map_on_class_functions():
    for name in ("d-z2", "d-z3"):
        F, H, qt = double_context(name)
        cf = class_function_space(H)
        dmat = drinfeld_matrix(H, qt)
        A = H.algebra
        for i in range(cf.cols):
            for j in range(cf.cols):
                f = cf.column(i)
                g = cf.column(j)
                fg = H.convolution(f, g)
                lhs = dmat.apply(fg)
                rhs = A.multiply(dmat.apply(f), dmat.apply(g))
                assert lhs == rhs


def test_factorizability_rank():
    for name in ("d-z2", "d-z3"):
        F, H, qt = double_context(name)
        cf = class_function_space(H)
        dmat = drinfeld_matrix(H, qt)
        assert linalg.rank(dmat * cf) == cf.cols


def test_degenerate_r_makes_s_singular():
    F, H, qt = double_context("d-z2")
    A = H.algebra
    trivial = SparseTensor(A, 2)
    for i, ci in enumerate(A.unit):
        for j, cj in enumerate(A.unit):
            trivial.add_term((i, j), ci * cj)
    qt_trivial = QuasiTriangularData(H, trivial, list(A.unit))
    with pytest.raises(ValidationError):
        s_transform(H, qt_trivial)


def test_radford_one_dimensional():
    G = db.FiniteGroup.cyclic(1)
    H, qt = db.drinfeld_double(G, Q)
    psi = radford_map(H)
    assert psi == Matrix.identity(Q, 1)


def test_radford_invertible_both_characteristics():
    for name in ("d-z2", "d-z2-char2"):
        F, H, qt = double_context(name)
        psi = radford_map(H)
        assert linalg.rank(psi) == H.algebra.dim == 4 * 1 * 4 // 4


def test_radford_locked_convention():
    """Of the four hit candidates, the left hit passes both locked tests:
    invertibility and agreement of Psi o D with the geometric permutation."""
    for gname in ("z2", "z3"):
        name = "d-%s" % gname
        F, H, qt = double_context(name)
        G = group(gname)
        A = H.algebra
        spec = A.spec
        cands = radford_candidates(H)
        dmat = drinfeld_matrix(H, qt)
        geometric_ok = {}
        for key, psi in cands.items():
            if linalg.rank(psi) != A.dim:
                geometric_ok[key] = False
                continue
            smat = psi * dmat
            ok = True
            for a in range(G.order):
                for b in range(G.order):
                    if G.mul(a, b) != G.mul(b, a):
                        continue
                    f = linalg.basis_vector(spec, A.dim, db.double_basis_index(G, a, b))
                    want = linalg.basis_vector(
                        spec, A.dim, db.double_basis_index(G, b, G.inverse[a]))
                    if smat.apply(f) != want:
                        ok = False
                        break
                if not ok:
                    break
            geometric_ok[key] = ok
        assert geometric_ok["left"], gname


def test_s_transform_squares_to_conjugation():
    F, H, qt = double_context("d-z2")
    full, cf, scf = s_transform(H, qt)
    # on D(Z2) every element is self-inverse, so S^2 = id on class functions
    assert scf * scf == Matrix.identity(Q, cf.cols)


def test_s_transform_trivial_hopf():
    G = db.FiniteGroup.cyclic(1)
    H, qt = db.drinfeld_double(G, Q)
    full, cf, scf = s_transform(H, qt)
    assert scf == Matrix.identity(Q, 1)


def test_s_transform_matches_geometric_bundle_action():
    for gname in ("z2", "z3"):
        F, H, qt = double_context("d-%s" % gname)
        G = group(gname)
        A = H.algebra
        spec = A.spec
        full, _, _ = s_transform(H, qt)
        for a in range(G.order):
            for b in range(G.order):
                if G.mul(a, b) != G.mul(b, a):
                    continue
                f = linalg.basis_vector(spec, A.dim, db.double_basis_index(G, a, b))
                want = linalg.basis_vector(
                    spec, A.dim, db.double_basis_index(G, b, G.inverse[a]))
                assert full.apply(f) == want


def test_internal_character_trivial_module():
    F, H, qt = double_context("d-z2")
    ch = internal_character(H, trivial_module(H))
    assert ch == H.counit


def test_internal_character_regular_group_algebra():
    G = group("z2")
    H = group_hopf(G, Q)
    reg = AlgebraModule.regular(H.algebra)
    ch = internal_character(H, reg)
    assert ch == [Q.from_int(2), Q.zero()]


def test_internal_characters_modp_independent():
    F, H, qt = double_context("d-z2-char2")
    simples = double_simples("d-z2-char2")
    chars = [internal_character(H, M) for M in simples]
    B = Matrix.from_columns(H.algebra.spec, chars, nrows=H.algebra.dim)
    assert linalg.rank(B) == 2


def test_characters_are_class_functions_and_multiplicative():
    for name in ("d-z2", "d-z3", "d-z2-char2"):
        F, H, qt = double_context(name)
        simples = double_simples(name)
        cf = class_function_space(H)
        for M in simples:
            assert linalg.solve(cf, internal_character(H, M)) is not None
        for i, Mi in enumerate(simples):
            for j, Mj in enumerate(simples):
                tens = tensor_module(H, Mi, Mj)
                lhs = internal_character(H, tens)
                rhs = H.convolution(internal_character(H, Mi),
                                    internal_character(H, Mj))
                assert lhs == rhs


def test_class_functions_closed_under_convolution():
    for name in ("d-z2", "d-z2-char2"):
        F, H, qt = double_context(name)
        cf = class_function_space(H)
        for i in range(cf.cols):
            for j in range(cf.cols):
                prod = H.convolution(cf.column(i), cf.column(j))
                assert linalg.solve(cf, prod) is not None


def test_yang_baxter_catalog():
    for name in ("d-z2", "d-z3", "d-z2-char2", "d-z3-char3"):
        F, H, qt = double_context(name)
        assert qt.yang_baxter_holds()


def test_corgrv_unit_row():
    F, H, qt = double_context("d-z2")
    simples = double_simples("d-z2")
    from verlinde.fusion import fusion_oracle

    N = fusion_oracle(H, simples)
    for j in range(len(simples)):
        assert [N[0][j][l] for l in range(len(simples))] == \
            [1 if l == j else 0 for l in range(len(simples))]
    ok, failures = corgrv_check(H, qt, simples, N)
    assert ok


def test_corgrv_char_p():
    from verlinde.fusion import fusion_oracle

    for name in ("d-z2-char2", "d-z3-char3"):
        F, H, qt = double_context(name)
        simples = double_simples(name)
        N = fusion_oracle(H, simples)
        ok, failures = corgrv_check(H, qt, simples, N)
        assert ok, (name, failures)


def test_involutive_requirement_for_characters():
    # a Hopf algebra with S^2 != id is rejected by internal_character;
    # fabricate one by twisting the antipode of k[Z3] with a non-involution
    G = group("z3")
    H = group_hopf(G, Q)

    class Fake:
        algebra = H.algebra

        def is_involutive(self):
            return False

    with pytest.raises(UnsupportedRegimeError):
        internal_character(Fake(), AlgebraModule.regular(H.algebra))
