import random

import pytest

from verlinde import hochschild as hh
from verlinde import linalg
from verlinde.algebra import (center, group_algebra, hh0, matrix_algebra,
                              truncated_polynomial_algebra)
from verlinde.catalog import group
from verlinde.errors import DegreeOverflowError, ValidationError
from verlinde.fields import prime_field, rationals
from verlinde.hochschild import (Chain, Cochain, boundary, circle, circle_i,
                                 circle_sign_defect, cohomology, cup,
                                 differential, gerstenhaber_bracket, homology,
                                 homotopy_h, homotopy_identity_defect)

Q = rationals()
F3 = prime_field(3)


def dual_numbers():
    return truncated_polynomial_algebra(Q, 2)


def f3t3():
    return truncated_polynomial_algebra(F3, 3)


def derivation(A, images_of_t):
    """1-cochain D with D(t^k) = k t^(k-1) * img on k[t]/(t^n)."""
    spec = A.spec
    table = [A.zero_vector()]
    for k in range(1, A.dim):
        shift = A.zero_vector()
        shift[k - 1] = spec.from_int(k)
        table.append(A.multiply(shift, images_of_t))
    return Cochain(A, 1, table)


def test_degree0_differential_kernel_is_center():
    A = matrix_algebra(Q, 2)
    Z = center(A)
    for i in range(A.dim):
        z = differential(Cochain.from_element(A, A.basis_vector(i)))
        in_center = linalg.solve(Z, A.basis_vector(i)) is not None
        assert z.is_zero() == in_center


def test_differential_three_term_example():
    # alpha = (x -> 1) on Q[x]/(x^2): d(alpha)(x,x) = x*1 - alpha(0) + 1*x = 2x
    A = dual_numbers()
    alpha = Cochain(A, 1, [A.zero_vector(), A.basis_vector(0)])
    d = differential(alpha)
    assert d.value((1, 1)) == linalg.vec_scale(Q.from_int(2), A.basis_vector(1))


def test_d_squared_zero_random():
    rng = random.Random(31)
    for A in (dual_numbers(), f3t3()):
        for p in range(3):
            a = Cochain.random(A, p, rng)
            assert differential(differential(a)).is_zero()


def test_cup_degree_zero_is_product():
    A = f3t3()
    a = Cochain.from_element(A, A.basis_vector(1))
    b = Cochain.from_element(A, A.basis_vector(2))
    assert cup(a, b).table[0] == A.multiply(A.basis_vector(1), A.basis_vector(2))


def test_cup_with_unit_cochain():
    A = f3t3()
    rng = random.Random(32)
    one = Cochain.from_element(A, list(A.unit))
    b = Cochain.random(A, 2, rng)
    assert cup(one, b) == b
    assert cup(b, one) == b


def test_cup_one_cochain_example():
    A = dual_numbers()
    alpha = Cochain(A, 1, [A.zero_vector(), A.basis_vector(0)])
    c = cup(alpha, alpha)
    assert c.value((1, 1)) == A.basis_vector(0)


def test_cup_strict_chain_map():
    rng = random.Random(33)
    for A in (dual_numbers(), f3t3()):
        for p in range(3):
            for q in range(3):
                a = Cochain.random(A, p, rng)
                b = Cochain.random(A, q, rng)
                lhs = differential(cup(a, b, bound=None), bound=None)
                rhs = cup(differential(a, None), b, bound=None)
                term = cup(a, differential(b, None), bound=None)
                if p % 2:
                    term = -term
                assert lhs == rhs + term


def test_cup_strictly_associative():
    rng = random.Random(34)
    A = f3t3()
    a = Cochain.random(A, 1, rng)
    b = Cochain.random(A, 2, rng)
    c = Cochain.random(A, 1, rng)
    assert cup(cup(a, b, None), c, None) == cup(a, cup(b, c, None), None)


def test_circle_i_identity_cochain():
    A = f3t3()
    rng = random.Random(35)
    ident = Cochain.identity(A)
    b = Cochain.random(A, 2, rng)
    assert circle_i(ident, b, 0) == b


def test_circle_i_composition_of_one_cochains():
    A = f3t3()
    alpha = derivation(A, A.basis_vector(1))   # t -> t
    beta = derivation(A, A.basis_vector(0))    # t -> 1
    comp = circle_i(alpha, beta, 0)
    for k in range(A.dim):
        assert comp.value((k,)) == alpha_value_at(alpha, beta.value((k,)), A)


def alpha_value_at(alpha, vec, A):
    out = A.zero_vector()
    for i, c in enumerate(vec):
        if not c.is_zero():
            out = linalg.vec_add(out, linalg.vec_scale(c, alpha.value((i,))))
    return out


def test_circle_i_slot_range():
    A = f3t3()
    rng = random.Random(36)
    a = Cochain.random(A, 1, rng)
    b = Cochain.random(A, 1, rng)
    with pytest.raises(ValidationError):
        circle_i(a, b, 1)


def test_circle_degree_one_no_sign():
    A = f3t3()
    rng = random.Random(37)
    a = Cochain.random(A, 1, rng)
    b = Cochain.random(A, 2, rng)
    assert circle(a, b) == circle_i(a, b, 0)


def test_circle_sign_resummation():
    rng = random.Random(38)
    for A in (dual_numbers(), f3t3()):
        for p in range(4):
            for q in range(4):
                a = Cochain.random(A, p, rng)
                b = Cochain.random(A, q, rng)
                assert circle_sign_defect(a, b).is_zero()


def test_homotopy_vanishes_at_degree_zero():
    A = f3t3()
    rng = random.Random(39)
    a = Cochain.random(A, 0, rng)
    b = Cochain.random(A, 2, rng)
    assert homotopy_h(a, b).is_zero()


def test_homotopy_identity_exact():
    rng = random.Random(40)
    for A in (dual_numbers(), f3t3()):
        for p in range(3):
            for q in range(3):
                a = Cochain.random(A, p, rng)
                b = Cochain.random(A, q, rng)
                assert homotopy_identity_defect(a, b).is_zero()


def test_homotopy_of_cocycles_bounds_commutativity_defect():
    # for cocycles, d h(a (x) b) = (-1)^{pq} b cup a - a cup b
    A = f3t3()
    alpha = derivation(A, A.basis_vector(0))
    beta = derivation(A, A.basis_vector(1))
    assert differential(alpha).is_zero() and differential(beta).is_zero()
    lhs = differential(homotopy_h(alpha, beta), None)
    rhs = -cup(beta, alpha) - cup(alpha, beta)
    assert lhs == rhs


def test_bracket_graded_antisymmetry():
    rng = random.Random(41)
    A = f3t3()
    for p in range(1, 4):
        for q in range(1, 4):
            a = Cochain.random(A, p, rng)
            b = Cochain.random(A, q, rng)
            lhs = gerstenhaber_bracket(a, b)
            rhs = gerstenhaber_bracket(b, a)
            sign = A.spec.from_int(-1 if ((p - 1) * (q - 1)) % 2 == 0 else 1)
            assert lhs == rhs.scale(sign)


def test_bracket_square_odd_degree_zero():
    rng = random.Random(42)
    A = f3t3()
    a = Cochain.random(A, 1, rng)
    assert gerstenhaber_bracket(a, a).is_zero()
    c = Cochain.random(A, 3, rng)
    assert gerstenhaber_bracket(c, c).is_zero()


def test_bracket_with_identity_cochain_vanishes():
    A = f3t3()
    rng = random.Random(43)
    ident = Cochain.identity(A)
    b = Cochain.random(A, 1, rng)
    assert gerstenhaber_bracket(ident, b).is_zero()


def test_bracket_derivations_f3():
    # alpha = (t -> 1), beta = (t -> t): [alpha, beta] = -alpha (nonzero in HH^1)
    A = f3t3()
    alpha = derivation(A, A.basis_vector(0))
    beta = derivation(A, A.basis_vector(1))
    br = gerstenhaber_bracket(alpha, beta)
    assert br == -alpha
    dim1, reps, space = cohomology(A, 1)
    assert not linalg.vec_is_zero(space.class_coordinates(br.flat()))


def test_bracket_matches_negated_derivation_oracle():
    from verlinde.fusion import derivation_bracket_oracle

    A = f3t3()
    rng = random.Random(44)
    for _ in range(6):
        f = [A.spec.random_element(rng, 2) for _ in range(A.dim)]
        g = [A.spec.random_element(rng, 2) for _ in range(A.dim)]
        df, dg, dfg = derivation_bracket_oracle(A, f, g)
        assert gerstenhaber_bracket(df, dg) == -dfg


def test_pre_lie_symmetry():
    # (a o b) o c - a o (b o c) is graded symmetric in (b, c)
    rng = random.Random(45)
    A = dual_numbers()
    for p in range(1, 3):
        for q in range(1, 3):
            for r in range(1, 3):
                a = Cochain.random(A, p, rng)
                b = Cochain.random(A, q, rng)
                c = Cochain.random(A, r, rng)
                lhs = circle(circle(a, b), c) - circle(a, circle(b, c))
                rhs = circle(circle(a, c), b) - circle(a, circle(c, b))
                if ((q - 1) * (r - 1)) % 2:
                    rhs = -rhs
                assert lhs == rhs


def random_cocycle(A, p, rng):
    dp = hh.differential_matrix(A, p)
    ker = linalg.kernel_basis(dp)
    vec = linalg.zero_vector(A.spec, ker.rows)
    for j in range(ker.cols):
        c = A.spec.from_int(rng.randint(-2, 2))
        vec = linalg.vec_add(vec, linalg.vec_scale(c, ker.column(j)))
    n = A.dim
    table = [vec[t * n:(t + 1) * n] for t in range(n ** p)]
    return Cochain(A, p, table)


def test_bracket_derives_cup_on_cohomology():
    # [a, b cup c] - (-1)^{(p-1)r} [a,b] cup c - b cup [a,c] is a coboundary
    A = dual_numbers()
    rng = random.Random(46)
    for p, q, r in ((1, 1, 1), (1, 1, 2), (2, 1, 1)):
        for _ in range(4):
            a = random_cocycle(A, p, rng)
            b = random_cocycle(A, q, rng)
            c = random_cocycle(A, r, rng)
            lhs = gerstenhaber_bracket(a, cup(b, c, None))
            t1 = cup(gerstenhaber_bracket(a, b), c, None)
            if ((p - 1) * r) % 2:
                t1 = -t1
            t2 = cup(b, gerstenhaber_bracket(a, c), None)
            defect = lhs - t1 - t2
            deg = defect.degree
            _, _, space = cohomology(A, deg)
            assert space.is_trivial_class(defect.flat())


def test_cohomology_degree_zero_is_center():
    for A in (matrix_algebra(Q, 2), f3t3()):
        dim0, reps, _ = cohomology(A, 0)
        assert dim0 == center(A).cols


def test_cohomology_hh1_truncated():
    for p in (2, 3):
        A = truncated_polynomial_algebra(prime_field(p), p)
        dim1, _, _ = cohomology(A, 1)
        assert dim1 == p


def test_homology_degree_zero_is_commutator_quotient():
    for A in (matrix_algebra(Q, 2), group_algebra(Q, group("s3"))):
        dim0, reps, _ = homology(A, 0)
        comm, proj = hh0(A)
        assert dim0 == proj.rows


def test_chain_boundary_squares_to_zero():
    rng = random.Random(47)
    A = f3t3()
    for p in (2, 3):
        coords = [A.spec.random_element(rng, 2) for _ in range(A.dim ** (p + 1))]
        ch = Chain(A, p, coords)
        assert linalg.vec_is_zero(boundary(boundary(ch)).coords)


def test_degree_bound_overflow():
    A = dual_numbers()
    rng = random.Random(48)
    a = Cochain.random(A, 4, rng)
    with pytest.raises(DegreeOverflowError):
        differential(a)  # default bound 4
    b = Cochain.random(A, 2, rng)
    with pytest.raises(DegreeOverflowError):
        cup(a, b)
    assert differential(a, bound=5).degree == 5
