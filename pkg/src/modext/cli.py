"""Batch command line: validate / stability / aut-chain / cohomology /
extend / verify over JSON instance files.

Exit codes: 0 success, 1 mathematical negative (not stable, no extension,
verification mismatch), 2 input error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import engine, instances, morphs, oracle, reps
from .cohomology import RelComplex, h1_representatives
from .engine import EngineBudget
from .errors import BudgetExceeded, InstanceError, ModextError, NotSoluble
from .groups import is_normal
from .instances import _emit_matrix, load_instance, normalize_instance
from .linalg import mat_key
from .oracle import OracleBudget

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


def _render_value(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_render_value(x) for x in v) + "]"
    return str(v)


def _is_matrix(v):
    return (
        isinstance(v, (list, tuple))
        and v
        and all(isinstance(r, (list, tuple)) for r in v)
    )


def render_text(report, out):
    """Flat deterministic key/value lines with indented matrix blocks."""
    for key, val in report.items():
        if _is_matrix(val):
            out.write(f"{key}:\n")
            for row in val:
                cells = [
                    ",".join(str(c) for c in x) if isinstance(x, (list, tuple)) else str(x)
                    for x in row
                ]
                out.write("  " + " ".join(cells) + "\n")
        elif isinstance(val, dict):
            for k2, v2 in val.items():
                render_text({f"{key}.{k2}": v2}, out)
        else:
            out.write(f"{key}: {_render_value(val)}\n")


def emit(report, args, out=None):
    out = out if out is not None else sys.stdout
    if args.json:
        out.write(json.dumps(report, indent=2) + "\n")
    else:
        render_text(report, out)


def _budgets(inst, args):
    opts = dict(inst.options)
    if args.series:
        opts["series"] = args.series
    if args.budget_h:
        opts["budget_h"] = args.budget_h
    if args.budget_cochains:
        opts["budget_cochains"] = args.budget_cochains
    eng = EngineBudget(h=opts["budget_h"], cochain_dim=opts["budget_cochains"])
    orc = OracleBudget(
        max_h=opts["budget_h"], max_cochain_space=opts["budget_cochains"]
    )
    return opts, eng, orc


def cmd_validate(inst, args):
    report = normalize_instance(inst)
    sys.stdout.write(json.dumps(report, indent=None if args.json else 2) + "\n")
    return EXIT_OK


def cmd_stability(inst, args):
    table, failing = reps.witness_with_failure(inst.representation)
    report = {"command": "stability", "stable": table is not None}
    if table is None:
        report["failing_twist"] = failing
        emit(report, args)
        return EXIT_NEGATIVE
    F = inst.field
    for g in inst.group.elements():
        report[f"witness.g{g}"] = _emit_matrix(F, table[g])
    emit(report, args)
    return EXIT_OK


def cmd_aut_chain(inst, args):
    opts, eng, _ = _budgets(inst, args)
    theta = inst.representation
    chain, used, fallback = engine._build_chain(theta, opts["series"], eng)
    report = {
        "command": "aut-chain",
        "series": used,
        "series_fallback": fallback,
        "h_order": chain.h_order(),
        "levels": chain.k,
    }
    if used == "radical":
        rad = reps.radical_chain(reps.endomorphism_algebra(theta), eng.algebra)
        report["dim_E"] = rad.E.dim
        report["residue_degree"] = rad.residue_degree
        report["dim_j_powers"] = [len(b) for b in rad.j_bases]
    for m in range(1, chain.k + 1):
        report[f"quotient.{m}.factors"] = list(chain.quotient(m).factors)
    report["two_step_abelian"] = chain.two_step_abelian()
    emit(report, args)
    return EXIT_OK


def cmd_cohomology(inst, args):
    if inst.module is None:
        raise InstanceError("the cohomology command needs a 'module' entry")
    n = args.n
    comp = RelComplex(inst.group, inst.subgroup, inst.module)
    if comp.space(n).dim > inst.options["budget_cochains"]:
        raise BudgetExceeded("cochain space", comp.space(n).dim, inst.options["budget_cochains"])
    res = comp.cohomology(n)
    report = {
        "command": "cohomology",
        "degree": n,
        "invariant_factors": list(res.factors),
        "order": res.order,
        "representative_count": len(res.representatives),
    }
    for i, rep in enumerate(res.representatives):
        entries = {}
        for tup in rep.space.tuples:
            v = rep.value(tup)
            if any(v):
                entries[",".join(map(str, tup))] = list(v)
        report[f"representative.{i}"] = entries
    emit(report, args)
    return EXIT_OK


def _extension_report_dict(inst, report):
    F = inst.field
    out = {
        "command": "extend",
        "status": report.status,
        "stable": report.reason != "not_stable",
    }
    if report.reason:
        out["reason"] = report.reason
    if report.failing_twist is not None:
        out["failing_twist"] = report.failing_twist
    if report.detail:
        out["detail"] = report.detail
    if report.core_subgroup is not None:
        out["core_subgroup"] = list(report.core_subgroup)
    if report.series:
        out.update(
            {
                "series": report.series,
                "series_fallback": report.series_fallback,
                "chain_levels": report.chain_length,
                "h_order": report.h_order,
                "two_step_abelian": report.two_step_abelian,
            }
        )
    out["class_count"] = len(report.classes)
    out["raw_count"] = len(report.raw)
    for lvl, d in report.level_orders().items():
        out[f"level.{lvl}.h1_orders"] = d["h1"]
        out[f"level.{lvl}.h2_orders"] = d["h2"]
    out["existence"] = engine.existence_test(report)
    if report.status == "complete":
        uniq = engine.uniqueness_report(report)
        out["classification"] = uniq["classification"]
        out["branching_levels"] = uniq["branching_levels"]
    for i, m in enumerate(report.classes):
        for g in inst.group.elements():
            out[f"extension.{i}.g{g}"] = _emit_matrix(F, m.table[g])
    for i, trace in enumerate(report.traces):
        out[f"trace.{i}"] = [
            {"level": t[0], "h2_order": t[1], "h1_order": t[2], "choice": list(t[3])}
            for t in trace
        ]
    if report.equivalence:
        out["equivalence"] = [[int(x) for x in row] for row in report.equivalence]
    return out


def _run_extend(inst, opts, eng):
    theta = inst.representation
    if is_normal(inst.group, inst.subgroup):
        return engine.enumerate_extensions(theta, series=opts["series"], budget=eng)
    report, failing = engine.stable_by_conjugation(theta, series=opts["series"], budget=eng)
    if report is None:
        rep = engine.ExtensionReport(theta=theta)
        rep.status = "aborted"
        rep.reason = "not_stable"
        rep.failing_twist = failing
        return rep
    return report


def cmd_extend(inst, args):
    opts, eng, _ = _budgets(inst, args)
    report = _run_extend(inst, opts, eng)
    emit(_extension_report_dict(inst, report), args)
    if report.status == "aborted" and report.reason == "budget":
        return EXIT_BUDGET
    return EXIT_OK if report.classes else EXIT_NEGATIVE


def _verify_morph_properties(eng_report, rng, rounds):
    """Randomized exact-sequence spot checks over the instance's morph tree.

    Perturbs tree morphs inside their level by arbitrary relative
    1-cochains and re-checks: the defect table is a closed relative
    2-cochain, lifting works exactly when the obstruction class vanishes
    (with the lift staying in the same lower-level class), and no nonzero
    1-cocycle class fixes a morph at its level.
    """
    from .cohomology import CochainSpace
    from .linalg import mat_mul as _mm
    from .morphs import equivalent_mod, induced_action, lift, obstruction, z1_act

    checked = failures = 0
    root = eng_report.root
    if root is None:
        return checked, failures
    chain = root.morph.chain
    by_level = {}

    def visit(node):
        by_level.setdefault(node.level, []).append(node.morph)
        for ch in node.children:
            visit(ch)

    visit(root)
    levels = sorted(lvl for lvl in by_level if lvl < chain.k)
    if not levels:
        return checked, failures
    for _ in range(rounds):
        lvl = rng.choice(levels)
        f = rng.choice(by_level[lvl])
        action = induced_action(f, lvl + 1)
        q = chain.quotient(lvl + 1)
        space = CochainSpace(f.G, f.L, action, 1, relative=True)
        pert = space.from_values([rng.randrange(m) for m in space.moduli])
        table = [
            _mm(chain.field, q.section(pert.value((x,))), f.table[x])
            for x in f.G.elements()
        ]
        g = morphs.WeakMorph(f.G, f.L, f.theta, chain, lvl, table)
        checked += 1
        try:
            obs = obstruction(g, induced_action(g, lvl + 1))
        except ModextError:
            failures += 1
            continue
        if obs.is_zero:
            try:
                lifted = lift(g, obs.certificate)
            except ModextError:
                failures += 1
                continue
            if not equivalent_mod(lifted, g, lvl):
                failures += 1
        if lvl >= 1:
            act_here = induced_action(g, lvl)
            comp = RelComplex(f.G, f.L, act_here)
            for coeffs, gamma in comp.cohomology(1).classes():
                if not any(coeffs):
                    continue
                acted = z1_act(gamma, g)
                if equivalent_mod(acted, g, lvl):
                    failures += 1
                break  # one nonzero class per round is enough
    return checked, failures


def cmd_verify(inst, args):
    opts, eng, orc = _budgets(inst, args)
    theta = inst.representation
    G, L, F = inst.group, inst.subgroup, inst.field
    report = {"command": "verify"}
    ok = True
    eng_report = None

    if is_normal(G, L):
        eng_report = engine.enumerate_extensions(theta, series=opts["series"], budget=eng)
        tables = oracle.brute_extensions(G, L, theta, orc)
        H = oracle.brute_aut_group(theta, orc)
        classes = oracle.conjugacy_dedup(tables, H, F)
        agree = len(eng_report.classes) == len(classes)
        if agree:
            matched = set()
            for m in eng_report.classes:
                found = None
                for ci, members in enumerate(classes):
                    if ci in matched:
                        continue
                    rep_table = tables[members[0]]
                    if morphs.conjugacy_equiv(
                        m,
                        morphs.WeakMorph(G, L, theta, m.chain, m.chain.k, rep_table),
                        m.chain.k,
                        orc.max_h,
                    ):
                        found = ci
                        break
                if found is None:
                    agree = False
                    break
                matched.add(found)
        report["extensions.engine_classes"] = len(eng_report.classes)
        report["extensions.oracle_raw"] = len(tables)
        report["extensions.oracle_classes"] = len(classes)
        report["extensions.agree"] = agree
        ok = ok and agree
    else:
        report["extensions.skipped"] = "subgroup not normal; oracle needs normality"

    A = inst.module
    if A is None:
        from .cohomology import trivial_module

        A = trivial_module(G, [2])
        report["cohomology.module"] = "default Z/2 trivial"
    comp = RelComplex(G, L, A)
    for n in (1, 2):
        solver = comp.cohomology(n)
        order, _ = oracle.brute_cohomology(n, G, L, A, orc)
        report[f"cohomology.h{n}.solver"] = solver.order
        report[f"cohomology.h{n}.oracle"] = order
        agree = solver.order == order
        report[f"cohomology.h{n}.agree"] = agree
        ok = ok and agree

    if eng_report is not None and eng_report.root is not None:
        rng = random.Random(args.seed)
        checked, failed = _verify_morph_properties(eng_report, rng, rounds=12)
        report["morph_checks.rounds"] = checked
        report["morph_checks.failures"] = failed
        ok = ok and failed == 0

    report["pass"] = ok
    emit(report, args)
    return EXIT_OK if ok else EXIT_NEGATIVE


def build_parser():
    ap = argparse.ArgumentParser(
        prog="modext",
        description="decide and enumerate extensions of a subgroup representation",
    )
    ap.add_argument("command", choices=["validate", "stability", "aut-chain", "cohomology", "extend", "verify"])
    ap.add_argument("instance", help="path to a JSON instance file")
    ap.add_argument("--json", action="store_true", help="emit the report as JSON")
    ap.add_argument("--series", choices=["radical", "derived"], default=None)
    ap.add_argument("--budget-H", dest="budget_h", type=int, default=None)
    ap.add_argument("--budget-cochains", dest="budget_cochains", type=int, default=None)
    ap.add_argument("--seed", type=int, default=0, help="seed for randomized verify rounds")
    ap.add_argument("--n", type=int, choices=[1, 2], default=2, help="cohomology degree")
    return ap


COMMANDS = {
    "validate": cmd_validate,
    "stability": cmd_stability,
    "aut-chain": cmd_aut_chain,
    "cohomology": cmd_cohomology,
    "extend": cmd_extend,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        inst = load_instance(args.instance)
        return COMMANDS[args.command](inst, args)
    except InstanceError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except NotSoluble as exc:
        print(f"not soluble: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    except ModextError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
