import random

import pytest

from verlinde import doubles as db
from verlinde import linalg
from verlinde.catalog import double_context, double_simples, group
from verlinde.doubles import (CommutingPairOrbit, FiniteGroup, abelian_characters,
                              centralizer_irreps, commuting_pairs, drinfeld_double,
                              mat_mul, pbun_orbits, simple_modules_char0,
                              simple_modules_modp, sl2z_action, sl2z_on_pair,
                              smatrix_modular, SL2Z_S, SL2Z_T)
from verlinde.errors import CatalogGapError, UnsupportedRegimeError, ValidationError
from verlinde.fields import cyclotomic_field, prime_field, rationals
from verlinde.linalg import Matrix

Q = rationals()


def test_group_validation():
    FiniteGroup([[0, 1], [1, 0]])
    with pytest.raises(ValidationError):
        FiniteGroup([[0, 1], [0, 1]])
    with pytest.raises(ValidationError):
        FiniteGroup([[1, 0], [0, 1]])  # 0 not the identity


def test_s3_structure():
    G = group("s3")
    assert not G.is_abelian()
    classes = G.conjugacy_classes()
    assert [len(c) for c in classes] == [1, 2, 3]
    assert classes[0] == [0]
    assert len(G.centralizer(0)) == 6
    assert G.exponent() == 6


def test_pbun_orbit_counts():
    assert len(pbun_orbits(FiniteGroup.cyclic(1))) == 1
    orbits = pbun_orbits(group("z2"))
    assert len(orbits) == 4 and all(o.size == 1 for o in orbits)
    assert len(pbun_orbits(group("s3"))) == 8
    assert len(pbun_orbits(group("z3"))) == 9


def test_simple_count_equals_orbit_count():
    for name in ("z2", "z3", "z4", "s3"):
        G = group(name)
        simples = double_simples("d-%s" % name)
        assert len(simples) == len(pbun_orbits(G))


def test_sl2z_identity():
    G = group("s3")
    orbits = pbun_orbits(G)
    ident = ((1, 0), (0, 1))
    assert sl2z_action(G, ident, orbits) == list(range(len(orbits)))


def test_sl2z_concrete_formulas():
    G = group("z3")
    a, b = 1, 2
    assert sl2z_on_pair(G, SL2Z_S, (a, b)) == (b, G.inverse[a])
    assert sl2z_on_pair(G, SL2Z_T, (a, b)) == (a, G.mul(a, b))


def test_sl2z_swaps_z2_orbits():
    G = group("z2")
    orbits = pbun_orbits(G)
    reps = [o.representative for o in orbits]
    perm = sl2z_action(G, SL2Z_S, orbits)
    mapped = {reps[i]: reps[perm[i]] for i in range(len(reps))}
    assert mapped[(0, 1)] == (1, 0) and mapped[(1, 0)] == (0, 1)
    assert mapped[(0, 0)] == (0, 0) and mapped[(1, 1)] == (1, 1)


def test_sl2z_relations():
    for name in ("z2", "z3", "s3"):
        G = group(name)
        orbits = pbun_orbits(G)
        s = sl2z_action(G, SL2Z_S, orbits)
        t = sl2z_action(G, SL2Z_T, orbits)

        def compose(p1, p2):  # apply p1 then p2
            return [p2[p1[i]] for i in range(len(p1))]

        ident = list(range(len(orbits)))
        s2 = compose(s, s)
        assert compose(s2, s2) == ident          # S^4 = id
        st = compose(s, t)                        # action(ST) = act(T) o act(S)
        assert compose(compose(st, st), st) == s2  # (ST)^3 = S^2


def test_sl2z_composition_rule():
    # action(M1 M2) = action(M2) o action(M1) for random words in S, T
    rng = random.Random(71)
    G = group("s3")
    orbits = pbun_orbits(G)

    def act(mat):
        return sl2z_action(G, mat, orbits)

    def compose(p1, p2):
        return [p2[p1[i]] for i in range(len(p1))]

    mats = [SL2Z_S, SL2Z_T]
    for _ in range(12):
        m1 = mats[rng.randrange(2)]
        m2 = mats[rng.randrange(2)]
        for _ in range(rng.randrange(3)):
            m1 = mat_mul(m1, mats[rng.randrange(2)])
        prod = mat_mul(m1, m2)
        assert act(prod) == compose(act(m1), act(m2))


def test_sl2z_rejects_wrong_determinant():
    G = group("z2")
    with pytest.raises(ValidationError):
        sl2z_on_pair(G, ((1, 0), (0, 2)), (0, 0))


def test_double_of_trivial_group():
    G = FiniteGroup.cyclic(1)
    H, qt = drinfeld_double(G, Q)
    assert H.algebra.dim == 1
    assert qt.r.data == {(0, 0): Q.one()}


def test_double_z2_properties():
    F, H, qt = double_context("d-z2")
    A = H.algebra
    assert A.dim == 4
    assert A.is_commutative()
    # cocommutative: Delta = flip о Delta
    for i in range(A.dim):
        d = H.delta_tensor(A.basis_vector(i))
        assert d == d.flip()
    assert qt.r.data != qt.unit_tensor(2).data  # nontrivial R


def test_double_s3_axioms():
    G = group("s3")
    spec = cyclotomic_field(3)
    H, qt = drinfeld_double(G, spec, validate=True)  # all axioms checked
    assert H.algebra.dim == 36
    assert qt.yang_baxter_holds()


def test_simples_z2():
    simples = double_simples("d-z2")
    assert [M.dim for M in simples] == [1, 1, 1, 1]
    for M in simples:
        M.validate()


def test_simples_z3_count():
    simples = double_simples("d-z3")
    assert len(simples) == 9 and all(M.dim == 1 for M in simples)


def test_simples_s3_dimensions():
    simples = double_simples("d-s3")
    assert sorted(M.dim for M in simples) == [1, 1, 2, 2, 2, 2, 3, 3]
    assert sum(M.dim ** 2 for M in simples) == 36
    simples[0].validate()
    simples[-1].validate()


def test_first_simple_is_unit_object():
    from verlinde.hopf import internal_character, trivial_module

    for name in ("d-z2", "d-s3"):
        F, H, qt = double_context(name)
        simples = double_simples(name)
        assert internal_character(H, simples[0]) == \
            internal_character(H, trivial_module(H))


def test_modp_simples():
    simples = double_simples("d-z2-char2")
    assert len(simples) == 2 and all(M.dim == 1 for M in simples)
    for M in simples:
        M.validate()
    with pytest.raises(UnsupportedRegimeError):
        simple_modules_modp(group("z3"), prime_field(2))


def test_abelian_characters_orthogonality():
    G = group("z4")
    spec = cyclotomic_field(4)
    chars = abelian_characters(G, list(range(4)), spec)
    assert len(chars) == 4
    for i, chi in enumerate(chars):
        for j, psi in enumerate(chars):
            acc = spec.zero()
            for g in range(4):
                acc = acc + chi[g] * psi[G.inverse[g]]
            want = spec.from_int(4 if i == j else 0)
            assert acc == want


def test_character_field_requirement():
    with pytest.raises(UnsupportedRegimeError):
        abelian_characters(group("z3"), [0, 1, 2], Q)


def test_centralizer_irreps_s3_homomorphism():
    G = group("s3")
    irreps = centralizer_irreps(G, list(range(6)), Q)
    assert [r["dim"] for r in irreps] == [1, 1, 2]
    std = irreps[2]["matrix"]
    for a in range(6):
        for b in range(6):
            assert std[a] * std[b] == std[G.mul(a, b)]


def test_catalog_gap_for_unknown_nonabelian_centralizer():
    # a bare S3 table without attached irreps cannot build its simples
    G = FiniteGroup(group("s3").table)
    with pytest.raises(CatalogGapError):
        simple_modules_char0(G, cyclotomic_field(3))


def test_smatrix_trivial_group():
    md, simples, H, qt = smatrix_modular(FiniteGroup.cyclic(1), Q)
    assert md.rank == 1 and md.smatrix[0, 0].is_one()


def test_smatrix_z2_entries():
    md, simples, H, qt = smatrix_modular(group("z2"), Q)
    half = Q.from_fraction(1, 2)
    for i in range(4):
        for j in range(4):
            assert md.smatrix[i, j] in (half, -half)
    s2 = md.smatrix * md.smatrix
    assert s2 == Matrix.identity(Q, 4)  # charge conjugation is trivial here


def test_smatrix_squares_to_permutation():
    for name in ("z3", "s3"):
        md, simples, H, qt = smatrix_modular(group(name))
        s2 = md.smatrix * md.smatrix
        spec = md.smatrix.spec
        for i in range(md.rank):
            ones = [j for j in range(md.rank) if s2[i, j] == spec.one()]
            zeros = [j for j in range(md.rank) if s2[i, j].is_zero()]
            assert len(ones) == 1 and len(zeros) == md.rank - 1


def test_smatrix_z3_unitary_up_to_conjugation():
    md, simples, H, qt = smatrix_modular(group("z3"))
    S = md.smatrix
    spec = S.spec
    n = md.rank
    conj = Matrix(spec, n, n, [S[j, i].galois_conjugate(-1)
                               for i in range(n) for j in range(n)])
    assert S * conj == Matrix.identity(spec, n)


def test_smatrix_row_zero_is_quantum_dimensions():
    md, simples, H, qt = smatrix_modular(group("s3"))
    spec = md.smatrix.spec
    order = spec.from_int(6)
    for i, M in enumerate(simples):
        assert md.smatrix[0, i] * order == spec.from_int(M.dim)
        assert md.smatrix[i, 0] == md.smatrix[0, i]


def test_smatrix_bundle_basis_is_geometric_permutation():
    from verlinde.hopf import internal_character, s_transform

    for name in ("z2", "z3", "s3"):
        G = group(name)
        md, simples, H, qt = smatrix_modular(G)
        spec = H.algebra.spec
        chars = [internal_character(H, M) for M in simples]
        orbits = pbun_orbits(G)
        # evaluation matrix: rows = orbits, cols = simples
        B = Matrix.from_rows(spec, [
            [chars[i][db.double_basis_index(G, o.representative[0],
                                            o.representative[1])]
             for i in range(len(simples))] for o in orbits])
        full, _, _ = s_transform(H, qt)
        X = linalg.solve_matrix(
            Matrix.from_columns(spec, chars, nrows=H.algebra.dim),
            full * Matrix.from_columns(spec, chars, nrows=H.algebra.dim))
        perm = sl2z_action(G, SL2Z_S, orbits)
        P = Matrix.zeros(spec, len(orbits), len(orbits))
        for o, im in enumerate(perm):
            P.entries[im * len(orbits) + o] = spec.one()
        assert B * X == P * B


def test_ribbon_scalars():
    md, simples, H, qt = smatrix_modular(group("z3"))
    assert md.tdiagonal[0].is_one()
    for M, theta in zip(simples, md.tdiagonal):
        assert M.rho(qt.ribbon) == Matrix.identity(md.smatrix.spec, M.dim).scale(theta)


def test_ribbon_axioms_on_catalog():
    for name in ("d-z2", "d-z3", "d-z2-char2"):
        F, H, qt = double_context(name)
        A = H.algebra
        u = qt.drinfeld_element()
        v = qt.ribbon
        su = H.antipode.apply(u)
        assert A.multiply(v, v) == A.multiply(u, su)  # v^2 = u S(u)
        assert H.antipode.apply(v) == v
        dv = H.delta_tensor(v)
        from verlinde.hopf import SparseTensor

        vxv = SparseTensor(A, 2)
        for i, ci in enumerate(v):
            if ci.is_zero():
                continue
            for j, cj in enumerate(v):
                if not cj.is_zero():
                    vxv.add_term((i, j), ci * cj)
        assert qt.monodromy().multiply(dv) == vxv  # Delta v = (R21 R)^-1 (v x v)
