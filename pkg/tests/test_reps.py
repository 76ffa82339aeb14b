import itertools

import pytest

from modext import groups, reps
from modext.errors import DomainViolation, NotIndecomposable
from modext.linalg import field, mat_identity, mat_inverse, mat_key, mat_mul


def s3_setup():
    G = groups.symmetric_group(3)
    perms = sorted(itertools.permutations(range(3)))
    idx = {p: i for i, p in enumerate(perms)}
    a3 = groups.generated_subgroup(G, [idx[(1, 2, 0)]])
    return G, idx, a3


def char_rep(L, F, gen, value):
    """1-dim representation sending gen to [value]."""
    return reps.rep_from_generators(L, F, {gen: ((F.from_int(value),),)})


def jordan_rep_c4():
    """C4 with L = <g^2>, theta(g^2) the 2x2 Jordan block over GF(2)."""
    G = groups.cyclic_group(4)
    L = groups.generated_subgroup(G, [2])
    F = field(2)
    N1 = ((F.one, F.one), (F.zero, F.one))
    theta = reps.rep_from_generators(L, F, {2: N1})
    return G, L, F, theta


def test_twist_trivial_cases():
    G, idx, a3 = s3_setup()
    F = field(7)
    theta = char_rep(a3, F, idx[(1, 2, 0)], 2)
    assert reps.twist(theta, G.identity).images == theta.images
    C6 = groups.cyclic_group(6)
    L = groups.generated_subgroup(C6, [2])
    chi = char_rep(L, field(7), 2, 2)
    for x in C6.elements():
        assert reps.twist(chi, x).images == chi.images


def test_twist_s3():
    G, idx, a3 = s3_setup()
    F = field(7)
    theta = char_rep(a3, F, idx[(1, 2, 0)], 2)
    tw = reps.twist(theta, idx[(1, 0, 2)])
    assert tw.images[idx[(1, 2, 0)]] == ((F.from_int(4),),)


def test_twist_domain_violation():
    G, idx, _ = s3_setup()
    t = groups.generated_subgroup(G, [idx[(1, 0, 2)]])
    theta = char_rep(t, field(3), idx[(1, 0, 2)], 2)
    with pytest.raises(DomainViolation):
        reps.twist(theta, idx[(1, 2, 0)])
    # restricted twist lands on the intersection subgroup
    tw = reps.twist_restricted(theta, idx[(1, 2, 0)])
    assert tw.group.elements == (G.identity,)


def test_intertwiner_space():
    G, idx, a3 = s3_setup()
    F = field(7)
    triv = reps.trivial_representation(a3, F)
    basis = reps.intertwiner_space(triv, triv)
    assert len(basis) == 1

    th1 = char_rep(a3, F, idx[(1, 2, 0)], 2)
    th2 = char_rep(a3, F, idx[(1, 2, 0)], 4)
    assert reps.intertwiner_space(th1, th2) == []

    G4, L, F2, theta = jordan_rep_c4()
    basis = reps.intertwiner_space(theta, theta)
    assert len(basis) == 2
    # span contains the nilpotent N = [[0,1],[0,0]]
    N = ((F2.zero, F2.one), (F2.zero, F2.zero))
    keys = {mat_key(F2, b) for b in basis}
    span = set()
    for c1 in F2.elements():
        for c2 in F2.elements():
            A = tuple(
                tuple(
                    F2.add(F2.mul(c1, basis[0][i][j]), F2.mul(c2, basis[1][i][j]))
                    for j in range(2)
                )
                for i in range(2)
            )
            span.add(A)
    assert N in span and mat_identity(F2, 2) in span


def test_find_isomorphism_swap():
    G, idx, a3 = s3_setup()
    F = field(7)
    g = idx[(1, 2, 0)]
    d24 = reps.rep_from_generators(
        a3, F, {g: ((F.from_int(2), F.zero), (F.zero, F.from_int(4)))}
    )
    d42 = reps.rep_from_generators(
        a3, F, {g: ((F.from_int(4), F.zero), (F.zero, F.from_int(2)))}
    )
    T = reps.find_isomorphism(d24, d42)
    assert T is not None
    # T theta1 = theta2 T and T is antidiagonal
    assert mat_mul(F, T, d24.images[g]) == mat_mul(F, d42.images[g], T)
    assert F.is_zero(T[0][0]) and F.is_zero(T[1][1])
    assert reps.find_isomorphism(d24, d24) is not None
    th1 = char_rep(a3, F, g, 2)
    th2 = char_rep(a3, F, g, 4)
    assert reps.find_isomorphism(th1, th2) is None


def test_stability_witness():
    # trivial representation is always stable
    G, idx, a3 = s3_setup()
    F = field(7)
    triv = reps.trivial_representation(a3, F)
    w = reps.stability_witness(triv)
    assert w is not None
    assert all(w[g] == mat_identity(F, 1) for g in G.elements())

    # the nontrivial character of A3 is not S3-stable
    theta = char_rep(a3, F, idx[(1, 2, 0)], 2)
    table, failing = reps.witness_with_failure(theta)
    assert table is None
    assert failing is not None and failing not in a3

    # abelian ambient group: always stable, and normalized
    G4, L, F2, theta = jordan_rep_c4()
    w = reps.stability_witness(theta)
    assert w is not None
    assert w[1] == mat_identity(F2, 2)  # f(g) can be I
    for g in G4.elements():
        for l in L.elements:
            assert w[G4.mul[g][l]] == mat_mul(F2, w[g], theta.images[l])


def test_endomorphism_algebra():
    G, idx, a3 = s3_setup()
    F = field(7)
    triv = reps.trivial_representation(a3, F, dim=2)
    E = reps.endomorphism_algebra(triv)
    assert E.dim == 4

    g = idx[(1, 2, 0)]
    d24 = reps.rep_from_generators(
        a3, F, {g: ((F.from_int(2), F.zero), (F.zero, F.from_int(4)))}
    )
    E2 = reps.endomorphism_algebra(d24)
    assert E2.dim == 2
    for B in E2.basis:
        assert F.is_zero(B[0][1]) and F.is_zero(B[1][0])

    _, _, F2, theta = jordan_rep_c4()
    E3 = reps.endomorphism_algebra(theta)
    assert E3.dim == 2
    # every basis element commutes with every image
    for B in E3.basis:
        for l in theta.group.elements:
            assert mat_mul(F2, B, theta.images[l]) == mat_mul(F2, theta.images[l], B)


def test_radical_chain_examples():
    _, _, F2, theta = jordan_rep_c4()
    E = reps.endomorphism_algebra(theta)
    rad = reps.radical_chain(E)
    assert rad.local
    assert rad.dim_j == 1
    assert rad.nilpotency == 2  # J^2 = 0
    assert rad.residue_degree == 1

    G, idx, a3 = s3_setup()
    F = field(7)
    triv2 = reps.trivial_representation(a3, F, dim=2)
    rad2 = reps.radical_chain(reps.endomorphism_algebra(triv2))
    assert not rad2.local
    assert rad2.dim_j == 0  # full matrix algebra is semisimple

    one = reps.trivial_representation(a3, F, dim=1)
    rad3 = reps.radical_chain(reps.endomorphism_algebra(one))
    assert rad3.local and rad3.dim_j == 0 and rad3.residue_degree == 1


def test_radical_is_ideal_and_units():
    from modext.linalg import Subspace

    _, _, F2, theta = jordan_rep_c4()
    E = reps.endomorphism_algebra(theta)
    rad = reps.radical_chain(E)
    n = theta.dim
    I = mat_identity(F2, n)
    sub = Subspace(F2, n * n, [reps._flatten(x) for x in rad.j_bases[0]])
    for j in rad.j_bases[0]:
        assert reps.mat_is_nilpotent(F2, j, n)
        plus = tuple(tuple(F2.add(I[a][b], j[a][b]) for b in range(n)) for a in range(n))
        assert mat_inverse(F2, plus) is not None
        for b in E.basis:
            for prod in (mat_mul(F2, b, j), mat_mul(F2, j, b)):
                assert sub.contains(reps._flatten(prod))


def test_is_indecomposable():
    _, _, F2, theta = jordan_rep_c4()
    assert reps.is_indecomposable(theta)

    G, idx, a3 = s3_setup()
    F = field(7)
    g = idx[(1, 2, 0)]
    d24 = reps.rep_from_generators(
        a3, F, {g: ((F.from_int(2), F.zero), (F.zero, F.from_int(4)))}
    )
    assert not reps.is_indecomposable(d24)
    assert reps.is_indecomposable(char_rep(a3, F, g, 2))


def test_aut_chain_1dim_gf7():
    G, idx, a3 = s3_setup()
    F = field(7)
    theta = char_rep(a3, F, idx[(1, 2, 0)], 2)
    chain = reps.aut_chain(theta)
    assert chain.k == 1
    assert chain.quotient(1).factors == (6,)
    assert chain.h_order() == 6
    H = chain.enumerate_H()
    assert len(H) == 6
    # section and projection are inverse
    q = chain.quotient(1)
    for a in range(6):
        assert q.project(q.section((a,))) == (a,)
    assert q.section((0,)) == mat_identity(F, 1)


def test_aut_chain_jordan_gf2():
    _, _, F2, theta = jordan_rep_c4()
    chain = reps.aut_chain(theta)
    # q^r - 1 = 1, so the unit level collapses onto 1+J
    assert chain.k == 1
    assert chain.quotient(1).factors == (2,)
    H = chain.enumerate_H()
    assert len(H) == 2
    q = chain.quotient(1)
    for a in range(2):
        assert q.project(q.section((a,))) == (a,)


def test_aut_chain_j3_gf2():
    """Regular unipotent 3x3 over GF(2): chain of length 3 with quotients
    trivial-top, Z/2, Z/2."""
    G = groups.cyclic_group(4)
    L = groups.generated_subgroup(G, [1])  # L = G = C4
    F = field(2)
    M = (
        (F.one, F.one, F.zero),
        (F.zero, F.one, F.one),
        (F.zero, F.zero, F.one),
    )
    theta = reps.rep_from_generators(L, F, {1: M})
    E = reps.endomorphism_algebra(theta)
    assert E.dim == 3
    rad = reps.radical_chain(E)
    assert rad.local and rad.dim_j == 2 and rad.nilpotency == 3
    chain = reps.aut_chain(theta)
    assert chain.k == 2
    assert chain.quotient(1).factors == (2,)
    assert chain.quotient(2).factors == (2,)
    assert chain.h_order() == 4


def test_aut_chain_units_count():
    # |Aut| = (q^r - 1) q^dim(J) for indecomposable reps
    cases = []
    _, _, F2, theta = jordan_rep_c4()
    cases.append(theta)
    G, idx, a3 = s3_setup()
    cases.append(char_rep(a3, field(7), idx[(1, 2, 0)], 2))
    for th in cases:
        E = reps.endomorphism_algebra(th)
        rad = reps.radical_chain(E)
        q = th.field.q
        expected = (q**rad.residue_degree - 1) * q**rad.dim_j
        assert rad.units_count == expected
        chain = reps.aut_chain(th)
        assert chain.h_order() == expected
        assert len(chain.enumerate_H()) == expected


def test_aut_chain_conjugation_stability():
    # conjugation by any unit of E preserves each 1+J^m
    _, _, F2, theta = jordan_rep_c4()
    chain = reps.aut_chain(theta)
    for u in chain.enumerate_H():
        ui = mat_inverse(F2, u)
        for m in range(chain.k + 1):
            for h in chain.level_generators(m):
                conj = mat_mul(F2, mat_mul(F2, u, h), ui)
                assert chain.level_contains(m, conj)


def test_derived_chain_abelian_H():
    G, idx, a3 = s3_setup()
    F = field(7)
    g = idx[(1, 2, 0)]
    d24 = reps.rep_from_generators(
        a3, F, {g: ((F.from_int(2), F.zero), (F.zero, F.from_int(4)))}
    )
    with pytest.raises(NotIndecomposable):
        reps.aut_chain(d24, series="radical")
    chain = reps.aut_chain(d24, series="derived")
    assert chain.k == 1  # H = (GF(7)^x)^2 is abelian
    assert chain.h_order() == 36
    assert chain.quotient(1).factors == (6, 6)
    q = chain.quotient(1)
    for coords in itertools.product(range(6), repeat=2):
        assert q.project(q.section(coords)) == coords


def test_derived_chain_gl2_gf2():
    # trivial 2-dim rep over GF(2): H = GL_2(2) of order 6, soluble
    G = groups.cyclic_group(2)
    L = groups.generated_subgroup(G, [1])
    F = field(2)
    triv = reps.trivial_representation(L, F, dim=2)
    chain = reps.aut_chain(triv, series="derived")
    assert chain.h_order() == 6
    assert chain.k == 2  # GL_2(2) ~ S3: quotients C2, C3
    assert chain.quotient(1).factors == (2,)
    assert chain.quotient(2).factors == (3,)
    assert chain.two_step_abelian() is False  # S3 itself is not abelian


def test_two_step_flag_radical():
    _, _, F2, theta = jordan_rep_c4()
    chain = reps.aut_chain(theta)
    assert chain.two_step_abelian() is True
