"""Instance files: JSON descriptions of (group, subgroup, field, rep).

The group is either an explicit multiplication table or a named
constructor: "cyclic:n", "dihedral:n" (order 2n), "sym:n",
"quaternion:8", or a direct product joined with "*", e.g.
"cyclic:2*cyclic:4".  Representations list a matrix per subgroup
generator (or per element); matrix entries are ints for prime fields and
length-e coefficient lists over GF(p^e).  Raw tables may place the
identity anywhere; parsing relabels it to index 0 and remaps the
subgroup and representation accordingly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import groups
from .cohomology import ActionModule
from .errors import InstanceError, ModextError
from .linalg import field
from .reps import Representation, rep_from_generators

DEFAULT_OPTIONS = {
    "series": "radical",
    "budget_h": 1 << 13,
    "budget_cochains": 1 << 14,
}


@dataclass
class Instance:
    group: groups.GroupTable
    subgroup: groups.SubgroupRef
    field: object
    representation: Representation
    module: ActionModule | None
    options: dict


def named_group(spec: str) -> groups.GroupTable:
    parts = [p.strip() for p in spec.split("*")]
    built = []
    for part in parts:
        if ":" not in part:
            raise InstanceError(f"bad group name {part!r}")
        kind, _, arg = part.partition(":")
        try:
            n = int(arg)
        except ValueError as exc:
            raise InstanceError(f"bad group parameter in {part!r}") from exc
        if kind == "cyclic":
            built.append(groups.cyclic_group(n))
        elif kind == "dihedral":
            built.append(groups.dihedral_group(n))
        elif kind == "sym":
            if n > 5:
                raise InstanceError("sym:n supported for n <= 5")
            built.append(groups.symmetric_group(n))
        elif kind == "quaternion":
            if n != 8:
                raise InstanceError("only quaternion:8 is available")
            built.append(groups.quaternion_group())
        else:
            raise InstanceError(f"unknown group kind {kind!r}")
    G = built[0]
    for other in built[1:]:
        G = groups.direct_product(G, other)
    return G


def _parse_group(data):
    if isinstance(data, str):
        return named_group(data), None
    if not isinstance(data, dict) or "mul" not in data:
        raise InstanceError("group must be a name or an object with a 'mul' table")
    raw = data["mul"]
    n = len(raw)
    if "order" in data and data["order"] != n:
        raise InstanceError("declared order does not match the table")
    # locate the identity so subgroup/representation labels can be remapped
    ident = None
    for e in range(n):
        try:
            if all(raw[e][g] == g and raw[g][e] == g for g in range(n)):
                ident = e
                break
        except (TypeError, IndexError) as exc:
            raise InstanceError("malformed multiplication table") from exc
    relabel = None
    if ident not in (None, 0):
        perm = list(range(n))
        perm[0], perm[ident] = ident, 0
        raw = [[perm[raw[perm[a]][perm[b]]] for b in range(n)] for a in range(n)]
        relabel = perm
    try:
        return groups.build_group([list(r) for r in raw]), relabel
    except ModextError:
        raise
    except Exception as exc:
        raise InstanceError(f"invalid group table: {exc}") from exc


def _parse_field(data):
    if not isinstance(data, dict) or "p" not in data:
        raise InstanceError("field must give at least the prime p")
    p = int(data["p"])
    e = int(data.get("e", 1))
    modulus = data.get("modulus")
    try:
        return field(p, e, modulus)
    except ValueError as exc:
        raise InstanceError(f"invalid field: {exc}") from exc


def _parse_entry(F, entry):
    if isinstance(entry, int):
        return F.from_int(entry)
    if isinstance(entry, (list, tuple)):
        if len(entry) != F.e:
            raise InstanceError(
                f"field element {entry!r} needs {F.e} coefficients"
            )
        return F.element(entry)
    raise InstanceError(f"bad field element {entry!r}")


def _parse_matrix(F, rows):
    if not isinstance(rows, (list, tuple)) or not rows:
        raise InstanceError(f"bad matrix {rows!r}")
    n = len(rows)
    out = []
    for row in rows:
        if len(row) != n:
            raise InstanceError("representation matrices must be square")
        out.append(tuple(_parse_entry(F, x) for x in row))
    return tuple(out)


def _emit_entry(F, x):
    return F.to_int(x) if F.e == 1 else list(x)


def _emit_matrix(F, M):
    return [[_emit_entry(F, x) for x in row] for row in M]


def parse_instance(data: dict) -> Instance:
    if not isinstance(data, dict):
        raise InstanceError("instance must be a JSON object")
    for key in ("group", "subgroup", "field", "representation"):
        if key not in data:
            raise InstanceError(f"instance is missing {key!r}")
    G, relabel = _parse_group(data["group"])

    def remap(x):
        x = int(x)
        if not 0 <= x < G.order:
            raise InstanceError(f"element {x} out of range")
        return relabel[x] if relabel else x

    try:
        L = groups.subgroup(G, [remap(x) for x in data["subgroup"]])
    except ModextError as exc:
        raise InstanceError(f"invalid subgroup: {exc}") from exc
    F = _parse_field(data["field"])

    rep_data = data["representation"]
    if not isinstance(rep_data, dict) or "images" not in rep_data:
        raise InstanceError("representation must give an 'images' object")
    gen_images = {}
    for key, rows in rep_data["images"].items():
        gen_images[remap(key)] = _parse_matrix(F, rows)
    dims = {len(M) for M in gen_images.values()}
    if len(dims) != 1:
        raise InstanceError("representation matrices disagree in size")
    if "dim" in rep_data and int(rep_data["dim"]) not in dims:
        raise InstanceError("declared dim does not match the matrices")
    for g in gen_images:
        if g not in L._elemset:
            raise InstanceError(f"representation key {g} is outside the subgroup")
    try:
        theta = rep_from_generators(L, F, gen_images)
    except ValueError as exc:
        raise InstanceError(f"invalid representation: {exc}") from exc

    module = None
    if "module" in data and data["module"] is not None:
        mdata = data["module"]
        if "factors" not in mdata:
            raise InstanceError("module needs invariant factors")
        factors = [int(d) for d in mdata["factors"]]
        action = mdata.get("action", "trivial")
        try:
            if action == "trivial":
                module = ActionModule(G, factors)
            else:
                k = len(factors)
                table = {}
                for key, M in action.items():
                    table[remap(key)] = tuple(tuple(int(x) for x in row) for row in M)
                missing = [g for g in G.elements() if g not in table]
                if missing:
                    raise InstanceError(f"module action is missing element {missing[0]}")
                module = ActionModule(G, factors, table)
        except ValueError as exc:
            raise InstanceError(f"invalid module: {exc}") from exc

    options = dict(DEFAULT_OPTIONS)
    for key, val in (data.get("options") or {}).items():
        if key not in DEFAULT_OPTIONS:
            raise InstanceError(f"unknown option {key!r}")
        options[key] = val
    if options["series"] not in ("radical", "derived"):
        raise InstanceError("series must be 'radical' or 'derived'")
    return Instance(G, L, F, theta, module, options)


def load_instance(path) -> Instance:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InstanceError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InstanceError(f"{path} is not valid JSON: {exc}") from exc
    return parse_instance(data)


def normalize_instance(inst: Instance) -> dict:
    """Canonical re-emittable form: explicit table, per-element images."""
    G, L, F = inst.group, inst.subgroup, inst.field
    out = {
        "group": {"order": G.order, "mul": [list(row) for row in G.mul]},
        "subgroup": list(L.elements),
        "field": {"p": F.p, "e": F.e, "modulus": list(F.modulus)},
        "representation": {
            "dim": inst.representation.dim,
            "images": {
                str(l): _emit_matrix(F, inst.representation.images[l])
                for l in L.elements
            },
        },
    }
    if inst.module is not None:
        A = inst.module
        out["module"] = {
            "factors": list(A.factors),
            "action": {
                str(g): [list(row) for row in A.action[g]] for g in G.elements()
            },
        }
    out["options"] = dict(inst.options)
    return out
