"""Finite groups as explicit multiplication tables.

Elements are integers 0..order-1 and index 0 is always the identity
(build_group relabels if the raw table has its identity elsewhere).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import NoIdentity, NoInverse, NotASubgroup, NotAssociative, NotNormal


@dataclass(frozen=True)
class GroupTable:
    order: int
    mul: tuple  # tuple of tuples of element indices
    identity: int
    inv: tuple
    name: str = field(default="", compare=False)

    def elements(self):
        return range(self.order)

    def multiply(self, a, b):
        return self.mul[a][b]

    def inverse(self, a):
        return self.inv[a]

    def conjugate(self, x, l):
        """x * l * x^-1."""
        return self.mul[self.mul[x][l]][self.inv[x]]

    def element_order(self, a):
        n, x = 1, a
        while x != self.identity:
            x = self.mul[x][a]
            n += 1
        return n

    def is_abelian(self):
        return all(
            self.mul[a][b] == self.mul[b][a]
            for a in range(self.order)
            for b in range(a + 1, self.order)
        )


@dataclass(frozen=True)
class SubgroupRef:
    parent: GroupTable
    elements: tuple  # sorted element indices

    def __contains__(self, g):
        return g in self._elemset

    @property
    def _elemset(self):
        # cached on first use; object.__setattr__ because frozen
        s = self.__dict__.get("_elemset_cache")
        if s is None:
            s = frozenset(self.elements)
            object.__setattr__(self, "_elemset_cache", s)
        return s

    @property
    def order(self):
        return len(self.elements)


@dataclass(frozen=True)
class CosetSystem:
    subgroup: SubgroupRef
    transversal: tuple  # representatives, identity first
    coset_of: tuple  # element -> representative
    rep_index: tuple  # element -> index of its representative in transversal

    def decompose(self, g):
        """Return (t, l) with g = t*l, t the representative of gL."""
        G = self.subgroup.parent
        t = self.coset_of[g]
        return t, G.mul[G.inv[t]][g]


def build_group(mul_table, name=""):
    """Validate a raw square table and return a GroupTable.

    Relabels elements so that the identity is index 0.
    """
    n = len(mul_table)
    if n == 0:
        raise NoIdentity("(empty table)")
    for row in mul_table:
        if len(row) != n:
            raise NoIdentity(f"(table is not square: row of length {len(row)})")
        for v in row:
            if not isinstance(v, int) or not 0 <= v < n:
                raise NoIdentity(f"(entry {v!r} out of range)")

    # every row and column must be a permutation for inverses to exist
    full = set(range(n))
    identity = None
    for e in range(n):
        if all(mul_table[e][g] == g for g in range(n)) and all(
            mul_table[g][e] == g for g in range(n)
        ):
            identity = e
            break
    if identity is None:
        raise NoIdentity()

    for g in range(n):
        if set(mul_table[g]) != full:
            raise NoInverse(g)
        if {mul_table[h][g] for h in range(n)} != full:
            raise NoInverse(g)

    for a in range(n):
        for b in range(n):
            ab = mul_table[a][b]
            for c in range(n):
                if mul_table[ab][c] != mul_table[a][mul_table[b][c]]:
                    raise NotAssociative((a, b, c))

    if identity != 0:
        # swap labels 0 <-> identity
        perm = list(range(n))
        perm[0], perm[identity] = identity, 0
        inv_perm = perm  # a transposition is its own inverse
        mul_table = [
            [inv_perm[mul_table[perm[a]][perm[b]]] for b in range(n)] for a in range(n)
        ]
        identity = 0

    mul = tuple(tuple(row) for row in mul_table)
    inv = [None] * n
    for g in range(n):
        for h in range(n):
            if mul[g][h] == identity:
                inv[g] = h
                break
        if inv[g] is None or mul[inv[g]][g] != identity:
            raise NoInverse(g)
    return GroupTable(order=n, mul=mul, identity=identity, inv=tuple(inv), name=name)


def subgroup(G: GroupTable, elems) -> SubgroupRef:
    """Validate a list of element indices as a subgroup of G."""
    elems = sorted(set(elems))
    eset = set(elems)
    if G.identity not in eset:
        raise NotASubgroup("missing identity")
    for a in elems:
        if not 0 <= a < G.order:
            raise NotASubgroup(f"element {a} out of range")
        if G.inv[a] not in eset:
            raise NotASubgroup(f"inverse of {a} missing")
        for b in elems:
            if G.mul[a][b] not in eset:
                raise NotASubgroup(f"product {a}*{b} escapes")
    return SubgroupRef(parent=G, elements=tuple(elems))


def generated_subgroup(G: GroupTable, gens) -> SubgroupRef:
    seen = {G.identity}
    frontier = [G.identity]
    gens = list(gens)
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = G.mul[x][g]
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return subgroup(G, seen)


def trivial_subgroup(G: GroupTable) -> SubgroupRef:
    return SubgroupRef(parent=G, elements=(G.identity,))


def full_subgroup(G: GroupTable) -> SubgroupRef:
    return SubgroupRef(parent=G, elements=tuple(range(G.order)))


def is_normal(G: GroupTable, L: SubgroupRef) -> bool:
    eset = L._elemset
    for g in G.elements():
        for l in L.elements:
            if G.conjugate(g, l) not in eset:
                return False
    return True


def core_subgroup(G: GroupTable, L: SubgroupRef) -> SubgroupRef:
    """The largest normal subgroup of G inside L: intersection of all conjugates."""
    core = set(L.elements)
    for g in G.elements():
        gi = G.inv[g]
        conj = {G.mul[G.mul[gi][l]][g] for l in L.elements}  # g^-1 L g
        core &= conj
        if len(core) == 1:
            break
    return subgroup(G, core)


def coset_system(G: GroupTable, L: SubgroupRef) -> CosetSystem:
    """Cosets gL, identity representative first, remaining reps in element order."""
    coset_of = [None] * G.order
    transversal = []
    rep_index = [None] * G.order
    for g in G.elements():
        if coset_of[g] is None:
            idx = len(transversal)
            transversal.append(g)
            for l in L.elements:
                h = G.mul[g][l]
                coset_of[h] = g
                rep_index[h] = idx
    assert transversal[0] == G.identity
    return CosetSystem(
        subgroup=L,
        transversal=tuple(transversal),
        coset_of=tuple(coset_of),
        rep_index=tuple(rep_index),
    )


def quotient_group(G: GroupTable, L: SubgroupRef):
    """Quotient group on coset representatives plus the projection table.

    Returns (Q, projection) where projection[g] is the index in Q of gL.
    """
    for g in G.elements():
        for l in L.elements:
            if G.conjugate(g, l) not in L._elemset:
                raise NotNormal(g, l)
    cs = coset_system(G, L)
    k = len(cs.transversal)
    mul = [
        [cs.rep_index[G.mul[cs.transversal[a]][cs.transversal[b]]] for b in range(k)]
        for a in range(k)
    ]
    Q = build_group(mul, name=f"{G.name}/{L.order}" if G.name else "")
    return Q, tuple(cs.rep_index)


def conjugate(G: GroupTable, x, l):
    return G.conjugate(x, l)


def subgroup_table(L: SubgroupRef):
    """L as a standalone GroupTable plus the list mapping new -> old indices.

    The identity keeps index 0 since parent identity is 0 and elements are
    sorted.
    """
    elems = list(L.elements)
    pos = {e: i for i, e in enumerate(elems)}
    G = L.parent
    mul = [[pos[G.mul[a][b]] for b in elems] for a in elems]
    return build_group(mul), elems


# ---------------------------------------------------------------------------
# named constructors


def cyclic_group(n: int) -> GroupTable:
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return build_group(table, name=f"C{n}")


def dihedral_group(n: int) -> GroupTable:
    """Dihedral group of order 2n; element 2*i is r^i, 2*i+1 is r^i*s."""
    if n < 1:
        raise ValueError("dihedral_group needs n >= 1")
    order = 2 * n

    def mul(a, b):
        i, si = divmod(a, 2)
        j, sj = divmod(b, 2)
        # (r^i s^si)(r^j s^sj): s r^j = r^-j s
        k = (i + j) % n if si == 0 else (i - j) % n
        return 2 * k + (si ^ sj)

    table = [[mul(a, b) for b in range(order)] for a in range(order)]
    return build_group(table, name=f"D{n}")


def symmetric_group(n: int) -> GroupTable:
    """Symmetric group on n points; composition (s*t)(i) = s(t(i))."""
    perms = sorted(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [
        [index[tuple(s[t[i]] for i in range(n))] for t in perms] for s in perms
    ]
    return build_group(table, name=f"S{n}")


def quaternion_group() -> GroupTable:
    """Q8 with elements 1,-1,i,-i,j,-j,k,-k in that order."""
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    base = {"1": (1, "1"), "-1": (-1, "1")}

    def parse(s):
        return (-1, s[1:]) if s.startswith("-") else (1, s)

    prod = {
        ("1", "1"): (1, "1"),
        ("1", "i"): (1, "i"),
        ("1", "j"): (1, "j"),
        ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"),
        ("j", "1"): (1, "j"),
        ("k", "1"): (1, "k"),
        ("i", "i"): (-1, "1"),
        ("j", "j"): (-1, "1"),
        ("k", "k"): (-1, "1"),
        ("i", "j"): (1, "k"),
        ("j", "k"): (1, "i"),
        ("k", "i"): (1, "j"),
        ("j", "i"): (-1, "k"),
        ("k", "j"): (-1, "i"),
        ("i", "k"): (-1, "j"),
    }

    def mul(a, b):
        sa, xa = parse(names[a])
        sb, xb = parse(names[b])
        s, x = prod[(xa, xb)]
        s *= sa * sb
        return names.index(x if s == 1 else "-" + x)

    table = [[mul(a, b) for b in range(8)] for a in range(8)]
    return build_group(table, name="Q8")


def direct_product(G: GroupTable, H: GroupTable) -> GroupTable:
    """Direct product; element a*|H|+b encodes the pair (a, b)."""
    n, m = G.order, H.order
    table = [
        [G.mul[a // m][b // m] * m + H.mul[a % m][b % m] for b in range(n * m)]
        for a in range(n * m)
    ]
    name = f"{G.name}x{H.name}" if G.name and H.name else ""
    return build_group(table, name=name)


def all_subgroups(G: GroupTable):
    """All subgroups of G, exhaustively (desk scale only)."""
    found = {(G.identity,)}
    frontier = [(G.identity,)]
    while frontier:
        elems = frontier.pop()
        for g in G.elements():
            if g in elems:
                continue
            bigger = generated_subgroup(G, set(elems) | {g}).elements
            if bigger not in found:
                found.add(bigger)
                frontier.append(bigger)
    return [subgroup(G, e) for e in sorted(found, key=lambda e: (len(e), e))]


def normal_subgroups(G: GroupTable):
    return [L for L in all_subgroups(G) if is_normal(G, L)]
