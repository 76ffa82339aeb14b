"""The branching enumeration of all extensions of theta to the full group.

Starting from a stability witness (level 0), each step computes the
obstruction of the current morph in the relative H^2 of the next chain
quotient; a nonzero class kills the branch, a zero class lifts one level
and the branch splits over the relative H^1 classes.  Morphs that reach
the top level are homomorphisms; deduplication by H-conjugacy turns them
into extension classes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cohomology import RelComplex
from .errors import BudgetExceeded, NotNormal, NotSoluble
from .groups import core_subgroup, coset_system, is_normal, subgroup
from .linalg import mat_inverse, mat_mul
from .morphs import (
    WeakMorph,
    check_weak_morph,
    conjugacy_equiv,
    induced_action,
    lift,
    obstruction,
    z1_act,
)
from .reps import (
    DEFAULT_ALGEBRA_BUDGET,
    DEFAULT_H_BUDGET,
    aut_chain,
    endomorphism_algebra,
    find_isomorphism,
    is_indecomposable,
    radical_chain,
    restrict,
    twist_restricted,
    witness_with_failure,
)


@dataclass
class EngineBudget:
    algebra: int = DEFAULT_ALGEBRA_BUDGET
    h: int = DEFAULT_H_BUDGET
    cochain_dim: int = 1 << 14  # cap on stored cochain coordinates


@dataclass
class BranchNode:
    level: int
    morph: WeakMorph
    choice: tuple | None = None  # H^1 class coords picked from the parent
    h2_order: int | None = None
    h1_order: int | None = None
    obstruction_zero: bool | None = None
    terminated: bool = False
    children: list = field(default_factory=list)


@dataclass
class ExtensionReport:
    theta: object
    series: str | None = None
    series_fallback: bool = False
    status: str = "complete"  # complete | aborted
    reason: str | None = None  # not_stable | not_soluble | budget | chain_not_stable
    failing_twist: int | None = None
    detail: str | None = None
    chain_length: int | None = None
    h_order: int | None = None
    root: BranchNode | None = None
    raw: list = field(default_factory=list)  # surviving final morphs
    traces: list = field(default_factory=list)
    classes: list = field(default_factory=list)  # deduped class representatives
    equivalence: list = field(default_factory=list)  # pairwise conjugacy over raw
    two_step_abelian: bool | None = None
    fast_exists: bool = False
    fast_not_exists: bool = False
    core_subgroup: tuple | None = None  # set when driven through the normal core

    def extension_tables(self):
        return [m.table for m in self.classes]

    def level_orders(self):
        """Aggregated (h1, h2) orders seen per level across branches."""
        out = {}

        def visit(node):
            if node.h2_order is not None:
                d = out.setdefault(node.level, {"h1": set(), "h2": set()})
                d["h2"].add(node.h2_order)
                if node.h1_order is not None:
                    d["h1"].add(node.h1_order)
            for ch in node.children:
                visit(ch)

        if self.root is not None:
            visit(self.root)
        return {
            lvl: {"h1": sorted(v["h1"]), "h2": sorted(v["h2"])}
            for lvl, v in sorted(out.items())
        }


def _build_chain(theta_chain, series, budget):
    """Chain for the requested series, falling back to the derived series
    for decomposable representations."""
    E = endomorphism_algebra(theta_chain)
    if series == "derived":
        return aut_chain(theta_chain, "derived", budget.algebra, budget.h, E=E), "derived", False
    rad = radical_chain(E, budget.algebra)
    if is_indecomposable(theta_chain, rad):
        return (
            aut_chain(theta_chain, "radical", budget.algebra, budget.h, E=E, rad=rad),
            "radical",
            False,
        )
    return aut_chain(theta_chain, "derived", budget.algebra, budget.h, E=E), "derived", True


def _walk(report, chain, node, prefix_trace, prefix_fast, prefix_single, budget):
    f = node.morph
    m = f.level
    G, L = f.G, f.L
    if m == chain.k:
        assert f.is_homomorphism()
        report.raw.append(f)
        report.traces.append(tuple(prefix_trace))
        if prefix_fast:
            report.fast_exists = True
        return
    action = induced_action(f, m + 1)
    comp = RelComplex(G, L, action)
    if comp.space(2).dim > budget.cochain_dim:
        raise BudgetExceeded("cochain space", comp.space(2).dim, budget.cochain_dim)
    obs = obstruction(f, action)
    node.h2_order = comp.cohomology(2).order
    node.obstruction_zero = obs.is_zero
    if not obs.is_zero:
        node.terminated = True
        if prefix_single:
            report.fast_not_exists = True
        return
    lifted = lift(f, obs.certificate)
    h1 = comp.cohomology(1)
    node.h1_order = h1.order
    for coords, gamma in h1.classes():
        child_morph = lifted if not any(coords) else z1_act(gamma, lifted)
        child = BranchNode(level=m + 1, morph=child_morph, choice=coords)
        node.children.append(child)
        step = (m, node.h2_order, node.h1_order, coords)
        _walk(
            report,
            chain,
            child,
            prefix_trace + [step],
            prefix_fast and node.h2_order == 1,
            prefix_single and h1.order == 1,
            budget,
        )


def _dedup(report, chain, budget):
    raw = report.raw
    n = len(raw)
    eq = [[i == j for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            h = conjugacy_equiv(raw[i], raw[j], chain.k, budget.h)
            eq[i][j] = eq[j][i] = h is not None
    report.equivalence = eq
    chosen = []
    for i in range(n):
        if not any(eq[i][j] for j in chosen):
            chosen.append(i)
    # canonical member per class: the lexicographically least table
    from .linalg import mat_key

    F = chain.field
    classes = []
    for i in chosen:
        members = [raw[j] for j in range(n) if eq[i][j]]
        members.sort(key=lambda mph: tuple(mat_key(F, M) for M in mph.table))
        classes.append(members[0])
    report.classes = classes


def _run_engine(G, L, theta, theta_chain, series, budget) -> ExtensionReport:
    report = ExtensionReport(theta=theta)
    table, failing = witness_with_failure(theta)
    if table is None:
        report.status = "aborted"
        report.reason = "not_stable"
        report.failing_twist = failing
        return report
    try:
        chain, used, fallback = _build_chain(theta_chain, series, budget)
    except NotSoluble as exc:
        report.status = "aborted"
        report.reason = "not_soluble"
        report.detail = str(exc)
        return report
    except BudgetExceeded as exc:
        report.status = "aborted"
        report.reason = "budget"
        report.detail = str(exc)
        return report
    report.series = used
    report.series_fallback = fallback
    report.chain_length = chain.k
    report.h_order = chain.h_order()
    report.two_step_abelian = chain.two_step_abelian()

    f0 = WeakMorph(G, L, theta, chain, 0, table)
    diag = check_weak_morph(f0)
    if not diag.ok:
        report.status = "aborted"
        report.reason = "chain_not_stable"
        report.detail = str(diag.first_failure())
        return report

    report.root = BranchNode(level=0, morph=f0)
    try:
        _walk(report, chain, report.root, [], True, True, budget)
        _dedup(report, chain, budget)
    except BudgetExceeded as exc:
        report.status = "aborted"
        report.reason = "budget"
        report.detail = str(exc)
    return report


def enumerate_extensions(theta, series="radical", budget: EngineBudget | None = None) -> ExtensionReport:
    """All extensions of theta to the parent group, up to H-conjugacy.

    Requires the subgroup to be normal; use stable_by_conjugation for the
    general entry point.
    """
    budget = budget or EngineBudget()
    L = theta.group
    G = L.parent
    if not is_normal(G, L):
        raise NotNormal(None, None)
    return _run_engine(G, L, theta, theta, series, budget)


def stable_by_conjugation(theta, series="radical", budget: EngineBudget | None = None):
    """Entry point for a not-necessarily-normal subgroup.

    Computes the normal core P of L, checks the stability-by-conjugation
    condition (theta isomorphic to each twist over the intersection with
    the conjugated subgroup), and runs the engine with the chain built
    from the restriction of theta to P, keeping morphs pinned to theta on
    all of L.  Returns (report, None) on success, (None, g) with a failing
    group element otherwise.
    """
    budget = budget or EngineBudget()
    L = theta.group
    G = L.parent
    for g in G.elements():
        tw = twist_restricted(theta, g)
        base = restrict(theta, tw.group)
        if find_isomorphism(base, tw) is None:
            return None, g
    P = core_subgroup(G, L)
    theta_p = restrict(theta, P)
    report = _run_engine(G, L, theta, theta_p, series, budget)
    report.core_subgroup = P.elements
    return report, None


def existence_test(report: ExtensionReport) -> str:
    """Tri-state existence answer from a (possibly partial) report."""
    if report.classes:
        return "exists"
    if report.status == "aborted" and report.reason == "budget":
        return "unknown-budget"
    return "not-exists"


def uniqueness_report(report: ExtensionReport) -> dict:
    """Classify a completed report and name the branching levels."""
    count = len(report.classes)
    branching = [
        lvl for lvl, d in report.level_orders().items() if any(o > 1 for o in d["h1"])
    ]
    return {
        "classification": "none" if count == 0 else ("unique" if count == 1 else "non-unique"),
        "class_count": count,
        "branching_levels": branching,
        "two_step_abelian": report.two_step_abelian,
        # when a two-step quotient is nonabelian the action may differ
        # between branches, so cross-branch module identifications are
        # not certified
        "rho_stable_across_branches": report.two_step_abelian,
    }
