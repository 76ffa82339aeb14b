"""Weak (L,H)-morphs as finite tables over a chain level.

A morph at level m is a table f: G -> GL_n(q) restricting to theta on L
whose multiplicative defect f(x)f(y)f(xy)^-1 lies in the chain subgroup
H_m.  Level 0 morphs are stability witnesses; level k morphs are genuine
homomorphisms.  The obstruction to raising the level lives in the relative
H^2 of the next chain quotient, and relative 1-cocycles act on morphs of a
fixed level.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cohomology import ActionModule, Cochain, CochainSpace, RelComplex, ZeroCochain
from .errors import (
    CertificateInvalid,
    DefectEscapesLevel,
    IllDefinedAction,
    NotACocycle,
)
from .groups import GroupTable, SubgroupRef, coset_system, trivial_subgroup
from .linalg import mat_inverse, mat_mul
from .reps import DEFAULT_H_BUDGET, AutChain, Representation


class WeakMorph:
    """Table G -> GL_n(q) with defect in the chain level subgroup H_level."""

    def __init__(self, G: GroupTable, L: SubgroupRef, theta: Representation, chain: AutChain, level: int, table):
        self.G = G
        self.L = L
        self.theta = theta
        self.chain = chain
        self.level = level
        self.table = tuple(table)
        self._inv = None

    def value(self, g):
        return self.table[g]

    def inverse(self, g):
        if self._inv is None:
            F = self.chain.field
            self._inv = tuple(mat_inverse(F, A) for A in self.table)
        return self._inv[g]

    def at_level(self, level):
        return WeakMorph(self.G, self.L, self.theta, self.chain, level, self.table)

    def is_homomorphism(self):
        F = self.chain.field
        for x in self.G.elements():
            for y in self.G.elements():
                if mat_mul(F, self.table[x], self.table[y]) != self.table[self.G.mul[x][y]]:
                    return False
        return True


def defect(f: WeakMorph, x, y):
    F = f.chain.field
    return mat_mul(F, mat_mul(F, f.table[x], f.table[y]), f.inverse(f.G.mul[x][y]))


@dataclass
class MorphDiagnostics:
    ok: bool
    failures: list = field(default_factory=list)
    centralizes: bool = True  # the full-morph condition f(L) <= C_K(H)

    def first_failure(self):
        return self.failures[0] if self.failures else None


def check_weak_morph(f: WeakMorph) -> MorphDiagnostics:
    """Validate the weak-morph conditions and the chain-level defect.

    Checks: restriction to theta on L, defect contained in H_level,
    conjugation stability of every chain level under all f-values, and
    (recorded, not failing) whether f(L) centralizes H.
    """
    F = f.chain.field
    failures = []
    for l in f.L.elements:
        if f.table[l] != f.theta.images[l]:
            failures.append(("restriction", l))
            break
    out = None
    for x in f.G.elements():
        for y in f.G.elements():
            if not f.chain.level_contains(f.level, defect(f, x, y)):
                out = ("defect", (x, y))
                break
        if out:
            break
    if out:
        failures.append(out)
    # conjugation by f(x) must preserve H and each chain level
    stable = True
    for m in range(f.chain.k + 1):
        gens = f.chain.level_generators(m)
        for x in f.G.elements():
            fx, fxi = f.table[x], f.inverse(x)
            for h in gens:
                if not f.chain.level_contains(m, mat_mul(F, mat_mul(F, fx, h), fxi)):
                    failures.append(("normalizes" if m == 0 else "chain_stable", (x, m)))
                    stable = False
                    break
            if not stable:
                break
        if not stable:
            break
    centralizes = True
    hgens = f.chain.level_generators(0)
    for l in f.L.elements:
        tl = f.theta.images[l]
        for h in hgens:
            if mat_mul(F, tl, h) != mat_mul(F, h, tl):
                centralizes = False
                break
        if not centralizes:
            break
    return MorphDiagnostics(ok=not failures, failures=failures, centralizes=centralizes)


def induced_action(f: WeakMorph, quotient_index=None) -> ActionModule:
    """The G-action on the chain quotient Q_j by conjugation with f-values.

    Defaults to j = f.level + 1, the quotient housing f's obstruction.
    Inner conjugation acts trivially on the abelian quotient, so the result
    only depends on the equivalence class of f.
    """
    j = f.level + 1 if quotient_index is None else quotient_index
    if not 1 <= j <= f.chain.k:
        raise ValueError(f"quotient index {j} outside 1..{f.chain.k}")
    q = f.chain.quotient(j)
    F = f.chain.field
    k = len(q.factors)
    action = {}
    for x in f.G.elements():
        fx, fxi = f.table[x], f.inverse(x)
        cols = []
        for i in range(k):
            e = tuple(1 if t == i else 0 for t in range(k))
            conj = mat_mul(F, mat_mul(F, fx, q.section(e)), fxi)
            if not f.chain.level_contains(j - 1, conj):
                raise IllDefinedAction(f"conjugation by f({x}) escapes the level")
            cols.append(q.project(conj))
        action[x] = tuple(tuple(cols[j2][i] for j2 in range(k)) for i in range(k))
    A = ActionModule(f.G, q.factors, action, validate=True)
    # exhaustive section-independence check: the matrix action must agree
    # with projected conjugation on every quotient element
    for x in f.G.elements():
        fx, fxi = f.table[x], f.inverse(x)
        for vec in A.elements():
            conj = mat_mul(F, mat_mul(F, fx, q.section(vec)), fxi)
            if A.act(x, vec) != q.project(conj):
                raise IllDefinedAction(
                    f"action of {x} depends on the section choice"
                )
    return A


@dataclass
class ObstructionClass:
    cocycle: Cochain
    module: ActionModule
    is_zero: bool
    certificate: Cochain | None  # relative 1-cochain with d(cert) = cocycle


def obstruction(f: WeakMorph, action: ActionModule | None = None) -> ObstructionClass:
    """The class of the defect cocycle in H^2(G, L; Q_{level+1})."""
    if f.level >= f.chain.k:
        raise ValueError("morph is already at the top level; no obstruction left")
    j = f.level + 1
    q = f.chain.quotient(j)
    if action is None:
        action = induced_action(f, j)
    space = CochainSpace(f.G, f.L, action, 2, relative=True)
    vals = []
    for x, y in space.tuples:
        d = defect(f, x, y)
        if not f.chain.level_contains(f.level, d):
            raise DefectEscapesLevel((x, y))
        vals.extend(q.project(d))
    cocycle = space.from_values(vals)
    comp = RelComplex(f.G, f.L, action)
    if not comp.is_cocycle(cocycle):
        raise NotACocycle("defect table is not closed; chain action is inconsistent")
    cert = comp.solve_coboundary(cocycle)
    return ObstructionClass(cocycle=cocycle, module=action, is_zero=cert is not None, certificate=cert)


def z1_act(gamma: Cochain, f: WeakMorph) -> WeakMorph:
    """Twist a level-m morph by a relative 1-cocycle valued in Q_m."""
    m = f.level
    if m < 1:
        raise ValueError("z1_act needs a morph above level 0")
    q = f.chain.quotient(m)
    if gamma.space.A.factors != q.factors:
        raise ValueError("cocycle module does not match the chain quotient")
    comp = RelComplex(f.G, f.L, gamma.space.A)
    if not comp.is_cocycle(gamma):
        raise NotACocycle("z1_act needs a closed relative 1-cochain")
    F = f.chain.field
    table = [mat_mul(F, q.section(gamma.value((x,))), f.table[x]) for x in f.G.elements()]
    return WeakMorph(f.G, f.L, f.theta, f.chain, m, table)


def lift(f: WeakMorph, certificate) -> WeakMorph:
    """Raise the level: g(x) = section(alpha(x))^-1 f(x) with d(alpha) = f#."""
    j = f.level + 1
    q = f.chain.quotient(j)
    F = f.chain.field
    if isinstance(certificate, ZeroCochain):
        raise CertificateInvalid("certificate must be a degree-1 cochain")
    table = []
    for x in f.G.elements():
        a = certificate.value((x,))
        s = mat_inverse(F, q.section(a))
        table.append(mat_mul(F, s, f.table[x]))
    g = WeakMorph(f.G, f.L, f.theta, f.chain, j, table)
    for x in f.G.elements():
        for y in f.G.elements():
            if not f.chain.level_contains(j, defect(g, x, y)):
                raise CertificateInvalid(
                    f"certificate does not kill the defect at pair ({x}, {y})"
                )
    return g


def equivalent_mod(f: WeakMorph, g: WeakMorph, level: int) -> bool:
    """Pointwise ratio f(x) g(x)^-1 lies in H_level."""
    F = f.chain.field
    for x in f.G.elements():
        if not f.chain.level_contains(level, mat_mul(F, f.table[x], g.inverse(x))):
            return False
    return True


def conjugacy_equiv(f: WeakMorph, g: WeakMorph, level: int, budget=DEFAULT_H_BUDGET):
    """An h in H with [theta(L), h] in H_level and h g h^-1 = f mod H_level."""
    F = f.chain.field
    theta = f.theta
    for h in f.chain.enumerate_H(budget):
        hi = mat_inverse(F, h)
        ok = True
        for l in f.L.elements:
            tl = theta.images[l]
            comm = mat_mul(F, mat_mul(F, tl, h), mat_mul(F, mat_inverse(F, tl), hi))
            if not f.chain.level_contains(level, comm):
                ok = False
                break
        if not ok:
            continue
        for x in f.G.elements():
            conj = mat_mul(F, mat_mul(F, h, g.table[x]), hi)
            if not f.chain.level_contains(level, mat_mul(F, conj, f.inverse(x))):
                ok = False
                break
        if ok:
            return h
    return None


def normalize(f: WeakMorph, cosets=None) -> WeakMorph:
    """Rebuild f from its transversal values: f'(t l) = f(t) theta(l)."""
    if cosets is None:
        cosets = coset_system(f.G, f.L)
    F = f.chain.field
    table = [None] * f.G.order
    for g in f.G.elements():
        t, l = cosets.decompose(g)
        table[g] = mat_mul(F, f.table[t], f.theta.images[l])
    return WeakMorph(f.G, f.L, f.theta, f.chain, f.level, table)


def is_normalized(f: WeakMorph, cosets=None) -> bool:
    if cosets is None:
        cosets = coset_system(f.G, f.L)
    F = f.chain.field
    for g in f.G.elements():
        t, l = cosets.decompose(g)
        if f.table[g] != mat_mul(F, f.table[t], f.theta.images[l]):
            return False
    return True


def descend_obstruction(f: WeakMorph, obs: ObstructionClass, projection, Q: GroupTable, transversal):
    """The quotient-level cocycle eta with inflation(eta) = f#.

    Requires a normalized morph: the defect cocycle is then constant on
    cosets of L x L, so eta(xL, yL) = f#(x, y) is well defined.
    """
    A = obs.module
    if not A.is_trivial_on(f.L.elements):
        raise ValueError("descent needs an L-trivial action")
    Aq = A.quotient_module(Q, transversal)
    space = CochainSpace(Q, trivial_subgroup(Q), Aq, 2, relative=False)
    vals = []
    for a, b in space.tuples:
        x, y = transversal[a], transversal[b]
        vals.extend(obs.cocycle.value((x, y)))
    eta = space.from_values(vals)
    # well-definedness: the cocycle must be constant on L x L cosets
    for x in f.G.elements():
        for y in f.G.elements():
            if obs.cocycle.value((x, y)) != eta.value((projection[x], projection[y])):
                raise ValueError("defect cocycle is not constant on L x L cosets")
    if not RelComplex(Q, trivial_subgroup(Q), Aq).is_cocycle(eta):
        raise NotACocycle("descended table is not closed")
    return eta, Aq
