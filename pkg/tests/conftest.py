"""Shared instance builders for the test suite."""

import itertools

import pytest

from modext import groups, reps
from modext.linalg import field


def s3_with_index():
    G = groups.symmetric_group(3)
    perms = sorted(itertools.permutations(range(3)))
    idx = {p: i for i, p in enumerate(perms)}
    return G, idx


def build_char(L, F, gen, value):
    return reps.rep_from_generators(L, F, {gen: ((F.from_int(value),),)})


@pytest.fixture(scope="session")
def s3_a3():
    G, idx = s3_with_index()
    a3 = groups.generated_subgroup(G, [idx[(1, 2, 0)]])
    return G, idx, a3


@pytest.fixture(scope="session")
def c4_c2_gf3():
    """C4, L = <g^2>, theta(g^2) = [2] over GF(3): no extension exists."""
    G = groups.cyclic_group(4)
    L = groups.generated_subgroup(G, [2])
    F = field(3)
    return G, L, F, build_char(L, F, 2, 2)


@pytest.fixture(scope="session")
def klein_gf3():
    """C2xC2, L = first factor, theta(a) = [2] over GF(3): two extensions."""
    G = groups.direct_product(groups.cyclic_group(2), groups.cyclic_group(2))
    L = groups.generated_subgroup(G, [2])
    F = field(3)
    return G, L, F, build_char(L, F, 2, 2)


@pytest.fixture(scope="session")
def c4_c2_jordan():
    """C4, L = <g^2>, theta(g^2) the Jordan block over GF(2): no extension."""
    G = groups.cyclic_group(4)
    L = groups.generated_subgroup(G, [2])
    F = field(2)
    theta = reps.rep_from_generators(
        L, F, {2: ((F.one, F.one), (F.zero, F.one))}
    )
    return G, L, F, theta


@pytest.fixture(scope="session")
def s3_diag24():
    """S3, L = A3, theta = diag(2,4) over GF(7): one extension class."""
    G, idx = s3_with_index()
    a3 = groups.generated_subgroup(G, [idx[(1, 2, 0)]])
    F = field(7)
    g = idx[(1, 2, 0)]
    theta = reps.rep_from_generators(
        a3, F, {g: ((F.from_int(2), F.zero), (F.zero, F.from_int(4)))}
    )
    return G, a3, F, theta


@pytest.fixture(scope="session")
def s3_trivial_gf7():
    G, idx = s3_with_index()
    a3 = groups.generated_subgroup(G, [idx[(1, 2, 0)]])
    return G, a3, field(7), reps.trivial_representation(a3, field(7))
