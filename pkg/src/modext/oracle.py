"""Independent brute-force ground truth.

Nothing here calls the solver-based paths: matrices are scanned wholesale
for intertwiners and commutants, homomorphisms are checked pairwise, and
cohomology comes from enumerating cochain tables directly.  The one
mathematical fact shared with the engine is the candidate-space reduction
for extensions: any extension value at a transversal representative t is
an invertible intertwiner theta -> theta^t, hence lies in the coset
w(t) * H of any fixed witness value w(t).  That is a theorem, not a
heuristic: two invertible intertwiners differ by an automorphism.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import BudgetExceeded, NotNormal
from .groups import GroupTable, SubgroupRef, coset_system, is_normal
from .linalg import GF, mat_inverse, mat_mul


@dataclass
class OracleBudget:
    max_h: int = 1 << 13
    max_candidates: int = 1 << 20
    max_cochain_space: int = 1 << 22


DEFAULT_BUDGET = OracleBudget()


def _all_matrices(F: GF, n):
    cells = list(F.elements())
    for combo in itertools.product(cells, repeat=n * n):
        yield tuple(tuple(combo[i * n + j] for j in range(n)) for i in range(n))


def brute_aut_group(theta, budget=DEFAULT_BUDGET):
    """All invertible matrices commuting with every theta(l), by full scan."""
    F = theta.field
    n = theta.dim
    if F.q ** (n * n) > budget.max_candidates:
        raise BudgetExceeded("matrix scan", F.q ** (n * n), budget.max_candidates)
    out = []
    images = [theta.images[l] for l in theta.group.elements]
    for T in _all_matrices(F, n):
        if any(mat_mul(F, T, M) != mat_mul(F, M, T) for M in images):
            continue
        if mat_inverse(F, T) is None:
            continue
        out.append(T)
        if len(out) > budget.max_h:
            raise BudgetExceeded("automorphism group", len(out), budget.max_h)
    return out


def _brute_witness_value(theta, t, budget):
    """First invertible T with T theta(l) = theta(t l t^-1) T, or None."""
    F = theta.field
    n = theta.dim
    G = theta.group.parent
    pairs = [(theta.images[l], theta.images[G.conjugate(t, l)]) for l in theta.group.elements]
    for T in _all_matrices(F, n):
        if mat_inverse(F, T) is None:
            continue
        if all(mat_mul(F, T, A) == mat_mul(F, B, T) for A, B in pairs):
            return T
    return None


def brute_extensions(G: GroupTable, L: SubgroupRef, theta, budget=DEFAULT_BUDGET):
    """All homomorphism tables G -> GL_n(q) restricting to theta, no dedup.

    Enumerates Theta(t) over w(t)*H per non-identity transversal rep t and
    keeps the assignments that are homomorphisms on all of G x G.
    """
    if not is_normal(G, L):
        raise NotNormal(None, None)
    F = theta.field
    cs = coset_system(G, L)
    H = brute_aut_group(theta, budget)
    reps_t = list(cs.transversal[1:])
    cosets = []
    for t in reps_t:
        w = _brute_witness_value(theta, t, budget)
        if w is None:
            return []  # not stable: no extension can exist
        cosets.append([mat_mul(F, w, h) for h in H])
    total = 1
    for c in cosets:
        total *= len(c)
    if total > budget.max_candidates:
        raise BudgetExceeded("extension candidates", total, budget.max_candidates)

    out = []
    order = G.order
    for assignment in itertools.product(*cosets):
        table = [None] * order
        for l in theta.group.elements:
            table[l] = theta.images[l]
        for t, T in zip(reps_t, assignment):
            for l in theta.group.elements:
                table[G.mul[t][l]] = mat_mul(F, T, theta.images[l])
        ok = True
        for x in range(order):
            tx = table[x]
            for y in range(order):
                if mat_mul(F, tx, table[y]) != table[G.mul[x][y]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(tuple(table))
    return out


def conjugacy_dedup(tables, H, F: GF):
    """Partition extension tables under simultaneous conjugation by H."""
    classes = []
    seen = {}
    for idx, table in enumerate(tables):
        if idx in seen:
            continue
        members = [idx]
        seen[idx] = True
        orbit = set()
        for h in H:
            hi = mat_inverse(F, h)
            conj = tuple(mat_mul(F, mat_mul(F, h, M), hi) for M in table)
            orbit.add(conj)
        for jdx in range(idx + 1, len(tables)):
            if jdx not in seen and tables[jdx] in orbit:
                seen[jdx] = True
                members.append(jdx)
        classes.append(members)
    return classes


# ---------------------------------------------------------------------------
# brute-force cohomology of the normalized relative complex


def _stored_tuples(G, L, degree):
    lset = L._elemset
    ident = G.identity
    out = []
    for tup in itertools.product(range(G.order), repeat=degree):
        if any(t == ident for t in tup):
            continue
        if all(t in lset for t in tup):
            continue
        out.append(tup)
    return out


def _invariants(A, L):
    out = []
    for vec in A.elements():
        if all(A.act(l, vec) == vec for l in L.elements):
            out.append(vec)
    return out


def brute_cohomology(n, G: GroupTable, L: SubgroupRef, A, budget=DEFAULT_BUDGET):
    """(order, representative tables) of H^n(G, L; A) by direct enumeration.

    Degree 1 scans the whole cochain space; degree 2 enumerates cocycles by
    depth-first search with constraint propagation over the cocycle
    identities, then quotients by the enumerated coboundaries.
    """
    if n == 1:
        return _brute_h1(G, L, A, budget)
    if n == 2:
        return _brute_h2(G, L, A, budget)
    raise ValueError("brute cohomology computes degrees 1 and 2")


def _value_list(A):
    return list(A.elements())


def _eval_d1(G, A, table, g, h):
    """d(gamma)(g,h) with gamma a dict tuple->vector (missing = 0)."""
    zero = A.zero
    out = A.act(g, table.get((h,), zero))
    out = A.sub(out, table.get((G.mul[g][h],), zero))
    return A.add(out, table.get((g,), zero))


def _brute_h1(G, L, A, budget):
    coords = _stored_tuples(G, L, 1)
    values = _value_list(A)
    space_size = len(values) ** len(coords)
    if space_size > budget.max_cochain_space:
        raise BudgetExceeded("1-cochain enumeration", space_size, budget.max_cochain_space)

    cocycles = []
    for combo in itertools.product(values, repeat=len(coords)):
        table = dict(zip(coords, combo))
        ok = True
        for g in G.elements():
            for h in G.elements():
                if any(_eval_d1(G, A, table, g, h)):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            cocycles.append(combo)

    coboundaries = set()
    for a in _invariants(A, L):
        db = tuple(A.sub(A.act(g, a), a) for (g,) in coords)
        coboundaries.add(db)
    reps = []
    for z in cocycles:
        if all(
            tuple(A.sub(u, v) for u, v in zip(z, r)) not in coboundaries for r in reps
        ):
            reps.append(z)
    assert len(cocycles) == len(reps) * len(coboundaries)
    return len(reps), [dict(zip(coords, r)) for r in reps]


def _module_tables(A):
    """Integer-encoded module arithmetic: values become indices 0..|A|-1."""
    values = _value_list(A)
    vindex = {v: i for i, v in enumerate(values)}
    nv = len(values)
    add = [
        [vindex[A.add(values[i], values[j])] for j in range(nv)] for i in range(nv)
    ]
    neg = [vindex[A.reduce(tuple(-x for x in values[i]))] for i in range(nv)]
    act = {
        g: [vindex[A.act(g, values[i])] for i in range(nv)] for g in A.G.elements()
    }
    zero = vindex[A.zero]
    return values, vindex, add, neg, act, zero


def _brute_h2(G, L, A, budget):
    coords = _stored_tuples(G, L, 2)
    index = {t: i for i, t in enumerate(coords)}
    values, vindex, add, neg, act, zero = _module_tables(A)
    nv = len(values)
    ident = [i for i in range(nv)]

    # constraints: one per triple, terms as (coord, value-permutation)
    constraints = []
    for g in G.elements():
        for h in G.elements():
            for kk in G.elements():
                terms = []
                for tup, perm in (
                    ((h, kk), act[g]),
                    ((G.mul[g][h], kk), neg),
                    ((g, G.mul[h][kk]), ident),
                    ((g, h), neg),
                ):
                    i = index.get(tup)
                    if i is not None:
                        terms.append((i, perm))
                if terms:
                    constraints.append(terms)
    touching = [[] for _ in coords]
    for ci, terms in enumerate(constraints):
        for i in {i for i, _ in terms}:
            touching[i].append(ci)

    unassigned = [len({i for i, _ in terms}) for terms in constraints]
    assign = [None] * len(coords)

    def solve_single(ci):
        """(coord, candidate values) for the lone unassigned coordinate."""
        base = zero
        ui = None
        uperms = []
        for i, perm in constraints[ci]:
            v = assign[i]
            if v is None:
                ui = i
                uperms.append(perm)
            else:
                base = add[base][perm[v]]
        sols = []
        for v in range(nv):
            acc = base
            for perm in uperms:
                acc = add[acc][perm[v]]
            if acc == zero:
                sols.append(v)
        return ui, sols

    def assign_coord(ui, v, trail, queue):
        """Set a coordinate, verify completed constraints, queue forcings.

        All counters are updated even on failure so that undo() restores a
        consistent state.
        """
        assign[ui] = v
        trail.append(ui)
        ok = True
        for cj in touching[ui]:
            c = unassigned[cj] = unassigned[cj] - 1
            if c == 0 and ok:
                acc = zero
                for i, perm in constraints[cj]:
                    acc = add[acc][perm[assign[i]]]
                if acc != zero:
                    ok = False
            elif c == 1:
                queue.append(cj)
        return ok

    def propagate(queue, trail):
        pos = 0
        while pos < len(queue):
            ci = queue[pos]
            pos += 1
            if unassigned[ci] != 1:
                continue
            ui, sols = solve_single(ci)
            if not sols:
                return False
            if len(sols) == 1:
                if not assign_coord(ui, sols[0], trail, queue):
                    return False
        return True

    def undo(trail):
        while trail:
            ui = trail.pop()
            assign[ui] = None
            for cj in touching[ui]:
                unassigned[cj] += 1

    results = []
    ncoords = len(coords)

    def dfs(start):
        free = -1
        for i in range(start, ncoords):
            if assign[i] is None:
                free = i
                break
        if free < 0:
            results.append(tuple(assign))
            if len(results) > budget.max_cochain_space:
                raise BudgetExceeded(
                    "2-cocycle enumeration", len(results), budget.max_cochain_space
                )
            return
        for v in range(nv):
            trail = []
            queue = []
            if assign_coord(free, v, trail, queue) and propagate(queue, trail):
                dfs(free + 1)
            undo(trail)

    trail0 = []
    queue0 = [ci for ci in range(len(constraints)) if unassigned[ci] <= 1]
    ok0 = True
    for ci in list(queue0):
        if unassigned[ci] == 0:
            acc = zero
            for i, perm in constraints[ci]:
                acc = add[acc][perm[assign[i]]]
            if acc != zero:
                ok0 = False
                break
    if ok0 and propagate([ci for ci in queue0 if unassigned[ci] == 1], trail0):
        dfs(0)
    cocycles = results

    # coboundaries: differentials of the whole 1-cochain space
    coords1 = _stored_tuples(G, L, 1)
    index1 = {t: i for i, t in enumerate(coords1)}
    c1_size = nv ** len(coords1)
    if c1_size > budget.max_cochain_space:
        raise BudgetExceeded("1-cochain scan", c1_size, budget.max_cochain_space)
    # term structure of d1 at each stored pair
    d1_terms = []
    for g, h in coords:
        terms = []
        for tup, perm in (
            ((h,), act[g]),
            ((G.mul[g][h],), neg),
            ((g,), ident),
        ):
            i = index1.get(tup)
            if i is not None:
                terms.append((i, perm))
        d1_terms.append(terms)
    coboundaries = set()
    for combo in itertools.product(range(nv), repeat=len(coords1)):
        db = []
        for terms in d1_terms:
            acc = zero
            for i, perm in terms:
                acc = add[acc][perm[combo[i]]]
            db.append(acc)
        coboundaries.add(tuple(db))

    classified = set()
    reps = []
    for z in cocycles:
        if z in classified:
            continue
        reps.append(z)
        for b in coboundaries:
            classified.add(tuple(add[u][v] for u, v in zip(z, b)))
    assert len(cocycles) == len(reps) * len(coboundaries)
    return len(reps), [
        {t: values[r[i]] for i, t in enumerate(coords)} for r in reps
    ]
