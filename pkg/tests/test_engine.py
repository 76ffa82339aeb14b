import pytest

from modext import engine, groups, oracle, reps
from modext.errors import NotNormal
from modext.linalg import field, mat_mul


def assert_sound(report):
    """Every emitted class is a homomorphism extending theta."""
    theta = report.theta
    G = theta.group.parent
    F = theta.field
    for m in report.classes:
        assert m.is_homomorphism()
        for l in theta.group.elements:
            assert m.table[l] == theta.images[l]


def engine_matches_oracle(theta, series="radical"):
    report = engine.enumerate_extensions(theta, series=series)
    G = theta.group.parent
    L = theta.group
    F = theta.field
    tables = oracle.brute_extensions(G, L, theta)
    H = oracle.brute_aut_group(theta)
    classes = oracle.conjugacy_dedup(tables, H, F)
    assert len(report.classes) == len(classes)
    # class membership: each engine class table appears in a distinct orbit
    import modext.linalg as la

    orbit_sets = []
    for members in classes:
        orbit = set()
        for h in H:
            hi = la.mat_inverse(F, h)
            orbit.add(tuple(tuple(mat_mul(F, mat_mul(F, h, M), hi)) for M in tables[members[0]]))
        orbit_sets.append({tuple(t) for t in orbit})
    hit = set()
    for m in report.classes:
        key = tuple(tuple(M) for M in m.table)
        found = [i for i, o in enumerate(orbit_sets) if tuple(key) in {tuple(x) for x in o}]
        assert len(found) == 1
        assert found[0] not in hit
        hit.add(found[0])
    return report


def test_c4_obstructed(c4_c2_gf3):
    G, L, F, theta = c4_c2_gf3
    report = engine_matches_oracle(theta)
    assert len(report.classes) == 0
    assert report.status == "complete"
    assert report.fast_not_exists
    assert engine.existence_test(report) == "not-exists"
    assert not report.root.obstruction_zero


def test_klein_two_extensions(klein_gf3):
    G, L, F, theta = klein_gf3
    report = engine_matches_oracle(theta)
    assert len(report.classes) == 2
    assert report.root.h1_order == 2
    assert engine.existence_test(report) == "exists"
    u = engine.uniqueness_report(report)
    assert u["classification"] == "non-unique"
    assert u["branching_levels"] == [0]
    assert_sound(report)


def test_s3_diag_unique(s3_diag24):
    G, L, F, theta = s3_diag24
    report = engine_matches_oracle(theta)
    assert len(report.classes) == 1
    assert report.series == "derived"
    assert report.series_fallback
    u = engine.uniqueness_report(report)
    assert u["classification"] == "unique"
    assert u["branching_levels"] == []
    assert_sound(report)


def test_s3_trivial_two_classes(s3_trivial_gf7):
    G, L, F, theta = s3_trivial_gf7
    report = engine_matches_oracle(theta)
    assert len(report.classes) == 2
    assert_sound(report)


def test_jordan_gf2_obstructed(c4_c2_jordan):
    G, L, F, theta = c4_c2_jordan
    report = engine_matches_oracle(theta)
    assert len(report.classes) == 0
    assert engine.existence_test(report) == "not-exists"


def test_not_stable_report(s3_a3):
    G, idx, a3 = s3_a3
    F = field(7)
    theta = reps.rep_from_generators(a3, F, {idx[(1, 2, 0)]: ((F.from_int(2),),)})
    report = engine.enumerate_extensions(theta)
    assert report.status == "aborted"
    assert report.reason == "not_stable"
    assert report.failing_twist is not None
    assert report.classes == []
    assert engine.existence_test(report) == "not-exists"
    # the oracle agrees: no extension exists
    assert oracle.brute_extensions(G, a3, theta) == []


def test_L_equals_G(s3_diag24):
    G, L, F, theta = s3_diag24
    full = groups.full_subgroup(G)
    # restrict to L = G: the only extension is theta itself
    tables = oracle.brute_extensions(G, full, restrict_full(theta, full))
    assert len(tables) == 1


def restrict_full(theta, full):
    # theta only defined on A3; build a representation on all of S3 first
    report = engine.enumerate_extensions(theta)
    m = report.classes[0]
    return reps.Representation(
        full, theta.field, theta.dim, {g: m.table[g] for g in full.elements}, validate=False
    )


def test_enumerate_requires_normal(s3_a3):
    G, idx, a3 = s3_a3
    t = groups.generated_subgroup(G, [idx[(1, 0, 2)]])
    theta = reps.trivial_representation(t, field(3))
    with pytest.raises(NotNormal):
        engine.enumerate_extensions(theta)


def test_stable_by_conjugation_s3(s3_a3):
    G, idx, a3 = s3_a3
    t = groups.generated_subgroup(G, [idx[(1, 0, 2)]])
    F = field(3)
    theta = reps.rep_from_generators(t, F, {idx[(1, 0, 2)]: ((F.from_int(2),),)})
    report, failing = engine.stable_by_conjugation(theta)
    assert failing is None
    assert report.core_subgroup == (G.identity,)
    assert len(report.classes) == 1  # only the sign character extends theta
    m = report.classes[0]
    assert m.is_homomorphism()
    assert m.table[idx[(1, 0, 2)]] == ((F.from_int(2),),)
    # brute force over all maps S3 -> GF(3)^x fixing theta on L
    count = 0
    import itertools

    others = [g for g in G.elements() if g not in t._elemset]
    for combo in itertools.product([1, 2], repeat=len(others)):
        table = {g: ((F.from_int(v),),) for g, v in zip(others, combo)}
        table.update({g: theta.images[g] for g in t.elements})
        ok = all(
            mat_mul(F, table[x], table[y]) == table[G.mul[x][y]]
            for x in G.elements()
            for y in G.elements()
        )
        count += ok
    assert count == 1


def test_stable_by_conjugation_normal_case_matches(klein_gf3):
    G, L, F, theta = klein_gf3
    direct = engine.enumerate_extensions(theta)
    via_core, failing = engine.stable_by_conjugation(theta)
    assert failing is None
    assert via_core.core_subgroup == L.elements
    assert len(via_core.classes) == len(direct.classes)
    assert sorted(tuple(m.table) for m in via_core.classes) == sorted(
        tuple(m.table) for m in direct.classes
    )


def test_stable_by_conjugation_failure():
    # S3 with L = <(12)> and theta of dim 2 distinguishing conjugates:
    # use the regular-ish rep theta((12)) = diag(1, 2) over GF(7); the
    # intersection L cap L^g is trivial for g outside L, so stability holds
    # trivially; to force a failure use L = A3 with a non-stable character
    # (normal subgroup: condition reduces to plain stability).
    import itertools

    G = groups.symmetric_group(3)
    perms = sorted(itertools.permutations(range(3)))
    idx = {p: i for i, p in enumerate(perms)}
    a3 = groups.generated_subgroup(G, [idx[(1, 2, 0)]])
    F = field(7)
    theta = reps.rep_from_generators(a3, F, {idx[(1, 2, 0)]: ((F.from_int(2),),)})
    report, failing = engine.stable_by_conjugation(theta)
    assert report is None
    assert failing is not None


def test_brick_fast_path(c4_c2_gf3, s3_trivial_gf7):
    # dim E = 1: the tree has depth exactly 1
    for G, L, F, theta in (c4_c2_gf3,):
        report = engine.enumerate_extensions(theta)
        assert report.chain_length == 1
    G, L, F, theta = s3_trivial_gf7
    report = engine.enumerate_extensions(theta)
    assert report.chain_length == 1


def test_determinism(klein_gf3, s3_diag24):
    for _, _, _, theta in (klein_gf3, s3_diag24):
        r1 = engine.enumerate_extensions(theta)
        r2 = engine.enumerate_extensions(theta)
        assert [m.table for m in r1.classes] == [m.table for m in r2.classes]
        assert r1.traces == r2.traces
        assert r1.level_orders() == r2.level_orders()


def test_report_level_orders(klein_gf3):
    G, L, F, theta = klein_gf3
    report = engine.enumerate_extensions(theta)
    orders = report.level_orders()
    assert orders[0]["h1"] == [2]
    # H^2(C2xC2, C2; Z/2) has order 4 (oracle-confirmed); the witness's
    # obstruction class is the zero one
    assert orders[0]["h2"] == [4]
    assert report.root.obstruction_zero
