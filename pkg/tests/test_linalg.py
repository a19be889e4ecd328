import random

import pytest

from verlinde import linalg
from verlinde.errors import ValidationError
from verlinde.fields import cyclotomic_field, prime_field, rationals
from verlinde.linalg import Matrix


def mk(spec, rows):
    return Matrix.from_rows(spec, [[spec.from_int(x) for x in r] for r in rows])


def test_rref_identity():
    Q = rationals()
    m = Matrix.identity(Q, 2)
    R, piv, rk = linalg.rref(m)
    assert R == m and rk == 2 and piv == [0, 1]


def test_rref_rank_one():
    Q = rationals()
    R, piv, rk = linalg.rref(mk(Q, [[1, 2], [2, 4]]))
    assert rk == 1
    assert R == mk(Q, [[1, 2], [0, 0]])


def test_rref_mod2():
    F2 = prime_field(2)
    R, piv, rk = linalg.rref(mk(F2, [[1, 1], [1, 1]]))
    assert rk == 1
    assert R == mk(F2, [[1, 1], [0, 0]])


def test_rref_idempotent_random():
    rng = random.Random(9)
    for spec in (rationals(), prime_field(3), cyclotomic_field(4)):
        for _ in range(15):
            m = Matrix.from_rows(spec, [[spec.random_element(rng) for _ in range(4)]
                                        for _ in range(3)])
            R, _, _ = linalg.rref(m)
            R2, _, _ = linalg.rref(R)
            assert R == R2


def test_kernel_examples():
    Q = rationals()
    assert linalg.kernel_basis(Matrix.identity(Q, 3)).cols == 0
    K = linalg.kernel_basis(mk(Q, [[1, 1]]))
    assert K.cols == 1
    v = K.column(0)
    assert v[0] == -v[1] and not v[0].is_zero()
    F2 = prime_field(2)
    K2 = linalg.kernel_basis(mk(F2, [[1, 1], [1, 1]]))
    assert K2.cols == 1
    assert K2.column(0) == [F2.one(), F2.one()]


def test_rank_nullity_random():
    rng = random.Random(10)
    for spec in (rationals(), prime_field(2), prime_field(5), cyclotomic_field(3)):
        for _ in range(20):
            rows = rng.randint(1, 5)
            cols = rng.randint(1, 5)
            m = Matrix.from_rows(spec, [[spec.random_element(rng, 2) for _ in range(cols)]
                                        for _ in range(rows)])
            assert linalg.rank(m) + linalg.kernel_basis(m).cols == cols
            K = linalg.kernel_basis(m)
            for j in range(K.cols):
                assert linalg.vec_is_zero(m.apply(K.column(j)))


def test_solve_examples():
    Q = rationals()
    b = [Q.from_int(3), Q.from_int(-1)]
    assert linalg.solve(Matrix.identity(Q, 2), b) == b
    x = linalg.solve(mk(Q, [[2]]), [Q.one()])
    assert x == [Q.from_fraction(1, 2)]
    assert linalg.solve(mk(Q, [[1, 1], [1, 1]]), [Q.one(), Q.zero()]) is None


def test_solve_satisfies_system_random():
    rng = random.Random(11)
    for spec in (rationals(), prime_field(3)):
        for _ in range(20):
            m = Matrix.from_rows(spec, [[spec.random_element(rng, 2) for _ in range(3)]
                                        for _ in range(4)])
            x0 = [spec.random_element(rng, 2) for _ in range(3)]
            b = m.apply(x0)
            x = linalg.solve(m, b)
            assert x is not None and m.apply(x) == b


def test_solve_dimension_mismatch():
    Q = rationals()
    with pytest.raises(ValidationError):
        linalg.solve(Matrix.identity(Q, 2), [Q.one()])


def test_inverse():
    Q = rationals()
    m = mk(Q, [[1, 2], [3, 5]])
    assert linalg.inverse(m) * m == Matrix.identity(Q, 2)
    with pytest.raises(ValidationError):
        linalg.inverse(mk(Q, [[1, 2], [2, 4]]))


def test_quotient_full_space():
    Q = rationals()
    sub = Matrix.identity(Q, 3)
    coset, proj = linalg.quotient_representatives(3, sub)
    assert coset.cols == 0 and proj.rows == 0


def test_quotient_zero_subspace():
    Q = rationals()
    sub = Matrix.zeros(Q, 3, 0)
    coset, proj = linalg.quotient_representatives(3, sub)
    assert coset.cols == 3 and proj.rows == 3
    assert proj * coset == Matrix.identity(Q, 3)


def test_quotient_kills_subspace():
    Q = rationals()
    sub = Matrix.from_columns(Q, [[Q.one(), Q.one()]], nrows=2)
    coset, proj = linalg.quotient_representatives(2, sub)
    assert coset.cols == 1 and proj.rows == 1
    assert linalg.vec_is_zero(proj.apply([Q.one(), Q.one()]))
    assert proj.apply(coset.column(0)) == [Q.one()]


def test_kron_mixed_product():
    Q = rationals()
    a = mk(Q, [[1, 2], [0, 1]])
    b = mk(Q, [[0, 1], [1, 0]])
    c = mk(Q, [[2, 0], [1, 1]])
    d = mk(Q, [[1, 1], [0, 2]])
    assert linalg.kron(a * c, b * d) == linalg.kron(a, b) * linalg.kron(c, d)
