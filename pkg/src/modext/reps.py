"""Representations of a subgroup over GF(q) and their automorphism chains.

A representation is a table l -> invertible n x n matrix over GF(q) for l
in a subgroup L of an ambient group G.  From its endomorphism algebra E we
build the subnormal chain of the unit group H used by the extension
engine: the radical chain H > 1+J > 1+J^2 > ... for indecomposable
representations, or the derived series of an explicitly enumerated H
otherwise.  Each chain level comes with its abelian quotient, a
set-theoretic section, and a projection.
"""

from __future__ import annotations

import itertools

from .errors import BudgetExceeded, DomainViolation, NotIndecomposable, NotSoluble
from .groups import SubgroupRef, coset_system, subgroup
from .linalg import (
    GF,
    OrderedBasis,
    Subspace,
    mat_identity,
    mat_inverse,
    mat_key,
    mat_mul,
    mat_pow,
    mat_scale,
    mat_solve,
    mat_sub,
)

DEFAULT_ALGEBRA_BUDGET = 1 << 20
DEFAULT_H_BUDGET = 1 << 13


def _flatten(A):
    return tuple(x for row in A for x in row)


def _unflatten(vec, n):
    return tuple(tuple(vec[i * n + j] for j in range(n)) for i in range(n))


class Representation:
    """Homomorphism table L -> GL_n(q)."""

    def __init__(self, group: SubgroupRef, field: GF, dim: int, images, validate=True):
        self.group = group
        self.field = field
        self.dim = dim
        self.images = dict(images)
        if validate:
            self._validate()

    def _validate(self):
        L = self.group
        G = L.parent
        F = self.field
        I = mat_identity(F, self.dim)
        for l in L.elements:
            if l not in self.images:
                raise ValueError(f"missing image for element {l}")
            A = self.images[l]
            if len(A) != self.dim or any(len(row) != self.dim for row in A):
                raise ValueError(f"image of {l} has wrong shape")
        if self.images[G.identity] != I:
            raise ValueError("identity must map to the identity matrix")
        for a in L.elements:
            for b in L.elements:
                if mat_mul(F, self.images[a], self.images[b]) != self.images[G.mul[a][b]]:
                    raise ValueError(f"not multiplicative at pair ({a}, {b})")
        # invertibility follows: images[l] * images[l^-1] = I

    def image(self, l):
        return self.images[l]

    def __eq__(self, other):
        return (
            isinstance(other, Representation)
            and self.group.elements == other.group.elements
            and self.field == other.field
            and self.dim == other.dim
            and self.images == other.images
        )

    def __repr__(self):
        return f"Representation(dim={self.dim}, |L|={self.group.order}, q={self.field.q})"


def representation(L: SubgroupRef, F: GF, images) -> Representation:
    imgs = {l: tuple(tuple(F.element(x) for x in row) for row in A) for l, A in images.items()}
    dim = len(next(iter(imgs.values())))
    return Representation(L, F, dim, imgs)


def trivial_representation(L: SubgroupRef, F: GF, dim: int = 1) -> Representation:
    I = mat_identity(F, dim)
    return Representation(L, F, dim, {l: I for l in L.elements}, validate=False)


def rep_from_generators(L: SubgroupRef, F: GF, gen_images) -> Representation:
    """Extend images on a generating set multiplicatively over all of L."""
    G = L.parent
    dim = len(next(iter(gen_images.values())))
    images = {G.identity: mat_identity(F, dim)}
    frontier = [G.identity]
    while frontier:
        l = frontier.pop()
        for g, A in gen_images.items():
            m = G.mul[l][g]
            prod = mat_mul(F, images[l], A)
            if m in images:
                if images[m] != prod:
                    raise ValueError(f"generator images are inconsistent at element {m}")
            else:
                images[m] = prod
                frontier.append(m)
    if set(images) != set(L.elements):
        raise ValueError("generators do not generate the subgroup")
    rep = Representation(L, F, dim, images)
    return rep


def restrict(theta: Representation, D: SubgroupRef) -> Representation:
    if not set(D.elements) <= set(theta.group.elements):
        raise DomainViolation("restriction target is not inside the domain")
    return Representation(
        D, theta.field, theta.dim, {l: theta.images[l] for l in D.elements}, validate=False
    )


def twist(theta: Representation, x: int) -> Representation:
    """theta^x(l) = theta(x l x^-1); requires x to normalize L."""
    L = theta.group
    G = L.parent
    images = {}
    for l in L.elements:
        c = G.conjugate(x, l)
        if c not in L._elemset:
            raise DomainViolation(f"element {x} does not normalize the subgroup")
        images[l] = theta.images[c]
    return Representation(L, theta.field, theta.dim, images, validate=False)


def twist_restricted(theta: Representation, x: int) -> Representation:
    """The twist by x on the subgroup L intersect x^-1 L x."""
    L = theta.group
    G = L.parent
    dom = [l for l in L.elements if G.conjugate(x, l) in L._elemset]
    D = subgroup(G, dom)
    images = {l: theta.images[G.conjugate(x, l)] for l in D.elements}
    return Representation(D, theta.field, theta.dim, images, validate=False)


def intertwiner_space(theta1: Representation, theta2: Representation):
    """Basis of {T : T theta1(l) = theta2(l) T for all l}."""
    if (
        theta1.group.elements != theta2.group.elements
        or theta1.field != theta2.field
        or theta1.dim != theta2.dim
    ):
        raise DomainViolation("intertwiners need matching group, field and dimension")
    F = theta1.field
    n = theta1.dim
    rows = []
    for l in theta1.group.elements:
        A = theta1.images[l]  # T*A - B*T = 0
        B = theta2.images[l]
        for i in range(n):
            for j in range(n):
                row = [F.zero] * (n * n)
                for a in range(n):
                    row[i * n + a] = F.add(row[i * n + a], A[a][j])
                for b in range(n):
                    row[b * n + j] = F.sub(row[b * n + j], B[i][b])
                rows.append(tuple(row))
    if not rows:
        return [mat_identity(F, n)]
    zero_b = tuple(() for _ in rows)
    _, null = mat_solve(F, tuple(rows), zero_b)
    return [_unflatten(v, n) for v in null]


def find_isomorphism(theta1: Representation, theta2: Representation, budget=DEFAULT_ALGEBRA_BUDGET):
    """An invertible intertwiner theta1 -> theta2, or None.

    Scans basis elements first, then the whole intertwiner space in a fixed
    coefficient order, so the choice is reproducible.
    """
    F = theta1.field
    basis = intertwiner_space(theta1, theta2)
    if not basis:
        return None
    for T in basis:
        if mat_inverse(F, T) is not None:
            return T
    total = F.q ** len(basis)
    if total > budget:
        raise BudgetExceeded("intertwiner scan", total, budget)
    elems = list(F.elements())
    n = theta1.dim
    s = len(basis)
    flat = [_flatten(T) for T in basis]
    for code in range(total):
        v = code
        acc = [F.zero] * (n * n)
        for i in range(s):
            c = elems[v % F.q]
            v //= F.q
            if not F.is_zero(c):
                fi = flat[i]
                acc = [F.add(x, F.mul(c, y)) for x, y in zip(acc, fi)]
        T = _unflatten(acc, n)
        if mat_inverse(F, T) is not None:
            return T
    return None


def witness_with_failure(theta: Representation):
    """Normalized stability witness table, or the failing twist element.

    Returns (table, None) when stable, (None, x) when the twist by x is
    not isomorphic to theta.  The table satisfies f(t*l) = f(t) theta(l)
    over the coset transversal, with f = theta on L.  Twists are compared
    over L intersected with its conjugate, which is all of L whenever L is
    normal and otherwise matches the stable-by-conjugation setting.
    """
    L = theta.group
    G = L.parent
    F = theta.field
    cs = coset_system(G, L)
    reps_iso = {G.identity: mat_identity(F, theta.dim)}
    for t in cs.transversal[1:]:
        tw = twist_restricted(theta, t)
        T = find_isomorphism(restrict(theta, tw.group), tw)
        if T is None:
            return None, t
        reps_iso[t] = T
    table = [None] * G.order
    for g in range(G.order):
        t, l = cs.decompose(g)
        table[g] = mat_mul(F, reps_iso[t], theta.images[l])
    return tuple(table), None


def stability_witness(theta: Representation):
    table, _ = witness_with_failure(theta)
    return table


# ---------------------------------------------------------------------------
# endomorphism algebra and radical


class EndAlgebra:
    """The commutant algebra E = End(V) of a representation."""

    def __init__(self, rep: Representation, basis):
        self.rep = rep
        self.field = rep.field
        self.n = rep.dim
        self.basis = list(basis)
        self.dim = len(self.basis)
        self._ob = OrderedBasis(self.field, self.n * self.n, [_flatten(b) for b in self.basis])

    def contains(self, A):
        return self._ob.contains(_flatten(A))

    def coordinates(self, A):
        return self._ob.coordinates(_flatten(A))

    def from_coordinates(self, coeffs):
        F = self.field
        acc = [F.zero] * (self.n * self.n)
        for c, b in zip(coeffs, self.basis):
            if not F.is_zero(c):
                fb = _flatten(b)
                acc = [F.add(x, F.mul(c, y)) for x, y in zip(acc, fb)]
        return _unflatten(acc, self.n)

    def size(self):
        return self.field.q**self.dim

    def elements(self, budget=DEFAULT_ALGEBRA_BUDGET):
        if self.size() > budget:
            raise BudgetExceeded("algebra enumeration", self.size(), budget)
        F = self.field
        elems = list(F.elements())
        for code in range(self.size()):
            v = code
            coeffs = []
            for _ in range(self.dim):
                coeffs.append(elems[v % F.q])
                v //= F.q
            yield self.from_coordinates(coeffs)


def endomorphism_algebra(theta: Representation) -> EndAlgebra:
    return EndAlgebra(theta, intertwiner_space(theta, theta))


class RadicalData:
    """Radical filtration of E: J, J^2, ..., locality and residue degree."""

    def __init__(self, E, local, units_count, j_bases, residue_degree):
        self.E = E
        self.local = local
        self.units_count = units_count
        self.j_bases = j_bases  # bases of J^1, J^2, ..., last one empty
        self.nilpotency = len(j_bases)  # minimal k with J^k = 0
        self.residue_degree = residue_degree

    @property
    def dim_j(self):
        return len(self.j_bases[0]) if self.j_bases else 0


def radical_chain(E: EndAlgebra, budget=DEFAULT_ALGEBRA_BUDGET) -> RadicalData:
    """Jacobson radical powers by exhaustive enumeration of E.

    For local E the radical is exactly the set of nilpotent elements; in
    general it is the set of x whose right multiples are all nilpotent.
    """
    F = E.field
    n = E.n
    nil = []
    nil_set = set()
    units = 0
    all_elems = list(E.elements(budget))
    for A in all_elems:
        if mat_is_nilpotent(F, A, n):
            nil.append(A)
            nil_set.add(A)
        elif mat_inverse(F, A) is not None:
            units += 1
    local = units + len(nil) == len(all_elems)
    if local:
        j_elems = nil
    else:
        j_elems = [
            x
            for x in nil
            if all(mat_mul(F, x, a) in nil_set for a in all_elems)
        ]
    jsub = Subspace(F, n * n)
    j_basis = []
    for A in sorted(j_elems, key=lambda A: mat_key(F, A)):
        if jsub.add(_flatten(A)):
            j_basis.append(A)
    # powers J^m: span of products of a J-basis with a J^(m-1)-basis
    j_bases = [j_basis]
    current = j_basis
    while current:
        nxt_sub = Subspace(F, n * n)
        nxt = []
        for a in j_basis:
            for b in current:
                prod = mat_mul(F, a, b)
                if nxt_sub.add(_flatten(prod)):
                    nxt.append(prod)
        j_bases.append(nxt)
        current = nxt
    if not j_basis:
        j_bases = [[]]
    r = E.dim - len(j_basis)
    return RadicalData(E, local, units, j_bases, r)


def mat_is_nilpotent(F, A, n):
    P = A
    for _ in range(max(1, n.bit_length())):
        if all(F.is_zero(x) for row in P for x in row):
            return True
        P = mat_mul(F, P, P)
    return all(F.is_zero(x) for row in P for x in row)


def is_indecomposable(theta: Representation, rad: RadicalData | None = None) -> bool:
    """E/J is a division algebra iff E is local: units = E minus J."""
    if rad is None:
        rad = radical_chain(endomorphism_algebra(theta))
    q = theta.field.q
    return rad.units_count == q**rad.E.dim - q**rad.dim_j


# ---------------------------------------------------------------------------
# the automorphism chain


class ChainQuotient:
    """One abelian quotient H_{m-1}/H_m with section and projection."""

    def __init__(self, factors, section, project):
        self.factors = tuple(int(d) for d in factors)
        self._section = section
        self._project = project

    def section(self, coords):
        return self._section(tuple(int(c) % d for c, d in zip(coords, self.factors)))

    def project(self, mat):
        return self._project(mat)

    @property
    def size(self):
        out = 1
        for d in self.factors:
            out *= d
        return out

    def zero(self):
        return (0,) * len(self.factors)


class AutChain:
    """Subnormal chain H = H_0 > H_1 > ... > H_k = 1 with abelian quotients.

    kind is 'radical' (H_m = 1 + J^m) or 'derived' (commutator series of an
    explicitly enumerated H).
    """

    def __init__(self, rep, E, kind, quotients, level_contains, level_generators, h_order, enumerate_h):
        self.rep = rep
        self.E = E
        self.field = rep.field
        self.n = rep.dim
        self.kind = kind
        self.quotients = quotients  # list of ChainQuotient, index m-1 for Q_m
        self._level_contains = level_contains
        self._level_generators = level_generators
        self._h_order = h_order
        self._enumerate_h = enumerate_h

    @property
    def k(self):
        return len(self.quotients)

    def quotient(self, m) -> ChainQuotient:
        """Q_m = H_{m-1}/H_m for m in 1..k."""
        return self.quotients[m - 1]

    def level_contains(self, m, mat):
        return self._level_contains(m, mat)

    def level_generators(self, m):
        return self._level_generators(m)

    def h_order(self):
        return self._h_order()

    def enumerate_H(self, budget=DEFAULT_H_BUDGET):
        order = self.h_order()
        if order > budget:
            raise BudgetExceeded("H enumeration", order, budget)
        return self._enumerate_h()

    def two_step_abelian(self):
        """Whether all two-step quotients H_{m-1}/H_{m+1} are abelian."""
        F = self.field
        for m in range(1, self.k):
            gens = self.level_generators(m - 1)
            for i, a in enumerate(gens):
                ai = mat_inverse(F, a)
                for b in gens[i + 1 :]:
                    bi = mat_inverse(F, b)
                    comm = mat_mul(F, mat_mul(F, a, b), mat_mul(F, ai, bi))
                    if not self.level_contains(m + 1, comm):
                        return False
        return True


def _radical_autchain(theta, E, rad, budget):
    F = theta.field
    n = theta.dim
    q = F.q
    p, e = F.p, F.e
    r = rad.residue_degree
    top_order = q**r - 1

    jsubs = []  # Subspace for J^1..J^(nilpotency), last is zero space
    for basis in rad.j_bases:
        jsubs.append(Subspace(F, n * n, [_flatten(b) for b in basis]))

    I = mat_identity(F, n)

    # complement splittings J^m = (basis of J^(m+1)) + lifts
    def complement_lifts(m):
        ob = OrderedBasis(F, n * n, [_flatten(b) for b in rad.j_bases[m]])
        lifts = []
        for b in rad.j_bases[m - 1]:
            if ob.add(_flatten(b)):
                lifts.append(b)
        return ob, lifts

    # specs: 'U' for the unit level, ints m for 1+J^m
    specs = (["U"] if top_order > 1 else []) + list(range(1, rad.nilpotency + 1))

    def contains_spec(spec, mat):
        if spec == "U":
            return E.contains(mat) and mat_inverse(F, mat) is not None
        return jsubs[spec - 1].contains(_flatten(mat_sub(F, mat, I)))

    # the unit-level quotient needs a canonical generator of (E/J)^x
    unit_data = {}
    if top_order > 1:
        ob_e = OrderedBasis(F, n * n, [_flatten(b) for b in rad.j_bases[0]])
        comp = []
        for b in E.basis:
            if ob_e.add(_flatten(b)):
                comp.append(b)
        dim_j = rad.dim_j

        def coset_key(mat):
            coords = ob_e.coordinates(_flatten(mat))
            return tuple(F.to_int(c) for c in coords[dim_j:])

        gen = None
        for A in sorted(E.elements(budget), key=lambda A: mat_key(F, A)):
            if mat_inverse(F, A) is None:
                continue
            # multiplicative order of the image of A in E/J
            key_i = coset_key(I)
            P = A
            o = 1
            while coset_key(P) != key_i:
                P = mat_mul(F, P, A)
                o += 1
            if o == top_order:
                gen = A
                break
        assert gen is not None, "unit group of a finite field quotient is cyclic"
        powers = [I]
        for _ in range(top_order - 1):
            powers.append(mat_mul(F, powers[-1], gen))
        dlog = {coset_key(P): a for a, P in enumerate(powers)}
        unit_data = {"gen": gen, "powers": powers, "dlog": dlog, "key": coset_key}

    quotients = []
    for i in range(1, len(specs)):
        lo, hi = specs[i - 1], specs[i]
        if lo == "U":
            powers = unit_data["powers"]
            dlog = unit_data["dlog"]
            key_fn = unit_data["key"]
            quotients.append(
                ChainQuotient(
                    (top_order,),
                    lambda coords, powers=powers: powers[coords[0]],
                    lambda mat, dlog=dlog, key_fn=key_fn: (dlog[key_fn(mat)],),
                )
            )
        else:
            m = lo  # quotient (1+J^m)/(1+J^(m+1))
            ob, lifts = complement_lifts(m)
            d = len(lifts)
            x_powers = [F.one]
            if e > 1:
                x = F.element([0, 1] + [0] * (e - 2))
                for _ in range(e - 1):
                    x_powers.append(F.mul(x_powers[-1], x))
            scaled = [
                [mat_scale(F, xp, c) for xp in x_powers] for c in lifts
            ]

            def section(coords, scaled=scaled, d=d):
                acc = I
                for j in range(d):
                    for t in range(e):
                        a = coords[j * e + t]
                        if a:
                            term = scaled[j][t]
                            acc = tuple(
                                tuple(
                                    F.add(acc[u][v], F.mul(F.from_int(a), term[u][v]))
                                    for v in range(n)
                                )
                                for u in range(n)
                            )
                return acc

            def project(mat, ob=ob, m=m, d=d):
                coords = ob.coordinates(_flatten(mat_sub(F, mat, I)))
                lift_coords = coords[len(rad.j_bases[m]) :]
                out = []
                for c in lift_coords:
                    out.extend(int(x) for x in c)
                return tuple(out)

            quotients.append(ChainQuotient((p,) * (d * e), section, project))

    def level_contains(m, mat):
        return contains_spec(specs[m], mat)

    def level_generators(m):
        spec = specs[m]
        if spec == "U":
            gens = [unit_data["gen"]] if top_order > 1 else []
            return gens + [
                tuple(tuple(F.add(I[u][v], b[u][v]) for v in range(n)) for u in range(n))
                for b in rad.j_bases[0]
            ]
        return [
            tuple(tuple(F.add(I[u][v], b[u][v]) for v in range(n)) for u in range(n))
            for b in rad.j_bases[spec - 1]
        ]

    def h_order():
        return top_order * q**rad.dim_j

    def enumerate_h():
        elems_f = list(F.elements())
        # all I + j for j in J
        j_elems = []
        dim_j = rad.dim_j
        for code in range(q**dim_j):
            v = code
            acc = [F.zero] * (n * n)
            for bidx in range(dim_j):
                c = elems_f[v % q]
                v //= q
                if not F.is_zero(c):
                    fb = _flatten(rad.j_bases[0][bidx])
                    acc = [F.add(x, F.mul(c, y)) for x, y in zip(acc, fb)]
            mat = _unflatten(acc, n)
            j_elems.append(
                tuple(tuple(F.add(I[u][v2], mat[u][v2]) for v2 in range(n)) for u in range(n))
            )
        if top_order > 1:
            powers = unit_data["powers"]
        else:
            powers = [I]
        out = []
        for P in powers:
            for U1 in j_elems:
                out.append(mat_mul(F, P, U1))
        out.sort(key=lambda A: mat_key(F, A))
        return out

    return AutChain(theta, E, "radical", quotients, level_contains, level_generators, h_order, enumerate_h)


def _matgroup_closure(F, gens, cap=None):
    I = mat_identity(F, len(gens[0]) if gens else 1)
    elems = {I}
    frontier = [I]
    gens = list(gens)
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = mat_mul(F, x, g)
            if y not in elems:
                elems.add(y)
                frontier.append(y)
                if cap is not None and len(elems) > cap:
                    raise BudgetExceeded("matrix group closure", len(elems), cap)
    return elems


def _derived_subgroup(F, elems):
    inv = {A: mat_inverse(F, A) for A in elems}
    comms = set()
    for a in elems:
        for b in elems:
            comms.add(mat_mul(F, mat_mul(F, a, b), mat_mul(F, inv[a], inv[b])))
    return _matgroup_closure(F, sorted(comms, key=lambda A: mat_key(F, A)))


def _greedy_generators(F, elems):
    n = len(next(iter(elems)))
    I = mat_identity(F, n)
    gens = []
    have = {I}
    for A in sorted(elems, key=lambda A: mat_key(F, A)):
        if A not in have:
            gens.append(A)
            have = _matgroup_closure(F, gens)
            if len(have) == len(elems):
                break
    return gens


def _abelian_basis(elems, mul, identity, key):
    """Generators with orders d_1 >= d_2 >= ..., d_{i+1} | d_i, whose cyclic
    spans decompose the (abelian) group as a direct sum."""
    if len(elems) == 1:
        return []

    def order_of(x):
        o, y = 1, x
        while y != identity:
            y = mul(y, x)
            o += 1
        return o

    def power(x, k):
        y = identity
        for _ in range(k):
            y = mul(y, x)
        return y

    orders = {x: order_of(x) for x in elems}
    m = max(orders.values())
    x = min((a for a in elems if orders[a] == m), key=key)
    powers = [identity]
    for _ in range(m - 1):
        powers.append(mul(powers[-1], x))
    power_index = {pw: i for i, pw in enumerate(powers)}

    rep_of = {}
    q_elems = []
    for y in sorted(elems, key=key):
        if y in rep_of:
            continue
        q_elems.append(y)
        for pw in powers:
            rep_of[mul(y, pw)] = y

    def q_mul(a, b):
        return rep_of[mul(a, b)]

    sub = _abelian_basis(q_elems, q_mul, rep_of[identity], key)
    out = [(x, m)]
    for y, my in sub:
        z = power(y, my)  # lies in <x>
        c = power_index[z]
        assert c % my == 0
        adj = mul(y, powers[(m - c // my) % m])
        out.append((adj, my))
    return out


def _derived_autchain(theta, E, budget_algebra, budget_h):
    F = theta.field
    n = theta.dim
    units = [A for A in E.elements(budget_algebra) if mat_inverse(F, A) is not None]
    if len(units) > budget_h:
        raise BudgetExceeded("derived series H", len(units), budget_h)
    levels = [frozenset(units)]
    while len(levels[-1]) > 1:
        nxt = frozenset(_derived_subgroup(F, levels[-1]))
        if nxt == levels[-1]:
            raise NotSoluble("derived series of H does not terminate")
        levels.append(nxt)

    key = lambda A: mat_key(F, A)
    I = mat_identity(F, n)
    quotients = []
    for i in range(1, len(levels)):
        hi_set = levels[i]
        lo_set = levels[i - 1]
        hi_sorted = sorted(hi_set, key=key)
        rep_of = {}
        q_elems = []
        for h in sorted(lo_set, key=key):
            if h in rep_of:
                continue
            q_elems.append(h)
            for s in hi_sorted:
                rep_of[mat_mul(F, h, s)] = h

        def q_mul(a, b, rep_of=rep_of):
            return rep_of[mat_mul(F, a, b)]

        basis = _abelian_basis(q_elems, q_mul, rep_of[I], key)
        basis.reverse()  # ascending invariant factors d_1 | d_2 | ...
        factors = tuple(d for _, d in basis)
        gens = [g for g, _ in basis]

        def section(coords, gens=gens):
            acc = I
            for g, c in zip(gens, coords):
                acc = mat_mul(F, acc, mat_pow(F, g, c))
            return acc

        dlog = {}
        ranges = [range(d) for d in factors]
        for coords in itertools.product(*ranges):
            mat = section(coords)
            r = rep_of[mat]
            assert r not in dlog, "abelian decomposition is not a direct sum"
            dlog[r] = tuple(coords)

        def project(mat, rep_of=rep_of, dlog=dlog):
            return dlog[rep_of[mat]]

        quotients.append(ChainQuotient(factors, section, project))

    def level_contains(m, mat):
        return mat in levels[m]

    gens_cache = {}

    def level_generators(m):
        if m not in gens_cache:
            gens_cache[m] = _greedy_generators(F, levels[m]) if len(levels[m]) > 1 else []
        return gens_cache[m]

    def h_order():
        return len(levels[0])

    def enumerate_h():
        return sorted(levels[0], key=key)

    return AutChain(theta, E, "derived", quotients, level_contains, level_generators, h_order, enumerate_h)


def aut_chain(
    theta: Representation,
    series: str = "radical",
    algebra_budget=DEFAULT_ALGEBRA_BUDGET,
    h_budget=DEFAULT_H_BUDGET,
    E: EndAlgebra | None = None,
    rad: RadicalData | None = None,
) -> AutChain:
    """Build the subnormal chain of H = Aut(theta).

    'radical' requires an indecomposable representation and uses
    H_m = 1 + J^m; 'derived' enumerates H and uses its commutator series.
    """
    if E is None:
        E = endomorphism_algebra(theta)
    if series == "radical":
        if rad is None:
            rad = radical_chain(E, algebra_budget)
        if not is_indecomposable(theta, rad):
            raise NotIndecomposable("radical chain needs an indecomposable representation")
        return _radical_autchain(theta, E, rad, algebra_budget)
    if series == "derived":
        return _derived_autchain(theta, E, algebra_budget, h_budget)
    raise ValueError(f"unknown series {series!r}")
