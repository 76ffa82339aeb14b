"""Exact arithmetic: GF(p^e), matrices over it, and integer matrices.

Field elements are length-e tuples of ints in [0, p) (coefficients of
1, x, ..., x^(e-1) modulo the field's irreducible polynomial).  Matrices
over a field are tuples of tuples of elements, so everything is hashable.

The integer side provides Smith normal form and a congruence solver
``solve_congruence`` obtained by lifting M x = b (mod moduli) to the
integer system [M | diag(moduli)] and column-reducing it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# polynomials over GF(p), used only for modulus construction/validation


def _poly_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_divmod(a, b, p):
    a = _poly_trim(a)
    db = len(b) - 1
    lb_inv = pow(b[-1], p - 2, p)
    q = [0] * max(0, len(a) - db)
    while a and len(a) - 1 >= db:
        d = len(a) - 1 - db
        coeff = (a[-1] * lb_inv) % p
        q[d] = coeff
        for i, bi in enumerate(b):
            a[d + i] = (a[d + i] - coeff * bi) % p
        a = _poly_trim(a)
    return q, a


def _poly_is_irreducible(mod, p):
    """Trial division by all monic polynomials of degree 1..deg/2."""
    deg = len(mod) - 1
    if deg < 1 or mod[-1] != 1:
        return False
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            divisor = list(tail) + [1]
            _, rem = _poly_divmod(list(mod), divisor, p)
            if not rem:
                return False
    return True


def default_modulus(p: int, e: int):
    """Smallest monic irreducible of degree e over GF(p).

    Smallest in the base-p encoding c0 + c1*p + ... of the low
    coefficients; fixed so that GF(p^e) is reproducible across runs.
    """
    if e == 1:
        return (0,)
    for code in range(p**e):
        tail = []
        v = code
        for _ in range(e):
            tail.append(v % p)
            v //= p
        mod = tail + [1]
        if _poly_is_irreducible(mod, p):
            return tuple(tail)
    raise ValueError(f"no irreducible polynomial of degree {e} over GF({p})")


@dataclass(frozen=True)
class GF:
    """Finite field GF(p^e) with an explicit monic irreducible modulus.

    ``modulus`` holds the e low coefficients (m0, ..., m_{e-1}) of
    x^e + m_{e-1} x^{e-1} + ... + m0.
    """

    p: int
    e: int
    modulus: tuple

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.e < 1:
            raise ValueError("extension degree must be positive")
        if len(self.modulus) != self.e:
            raise ValueError("modulus must list e coefficients")
        if self.e > 1 and not _poly_is_irreducible(list(self.modulus) + [1], self.p):
            raise ValueError("modulus polynomial is reducible")

    @property
    def q(self):
        return self.p**self.e

    @property
    def zero(self):
        return (0,) * self.e

    @property
    def one(self):
        return (1,) + (0,) * (self.e - 1)

    def element(self, coeffs):
        c = tuple(int(x) % self.p for x in coeffs)
        if len(c) != self.e:
            raise ValueError(f"element needs {self.e} coefficients")
        return c

    def from_int(self, v: int):
        """Decode base-p digits; for prime fields this is v mod p."""
        if self.e == 1:
            return (v % self.p,)
        v %= self.q
        digits = []
        for _ in range(self.e):
            digits.append(v % self.p)
            v //= self.p
        return tuple(digits)

    def to_int(self, a) -> int:
        v = 0
        for c in reversed(a):
            v = v * self.p + c
        return v

    def elements(self):
        for v in range(self.q):
            yield self.from_int(v)

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def mul(self, a, b):
        p, e = self.p, self.e
        if e == 1:
            return ((a[0] * b[0]) % p,)
        out = [0] * (2 * e - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] = (out[i + j] + ai * bj) % p
        # reduce modulo x^e + m_{e-1} x^{e-1} + ... + m0
        for k in range(2 * e - 2, e - 1, -1):
            c = out[k]
            if c:
                out[k] = 0
                for j, mj in enumerate(self.modulus):
                    out[k - e + j] = (out[k - e + j] - c * mj) % p
        return tuple(out[:e])

    def is_zero(self, a):
        return all(c == 0 for c in a)

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero in GF")
        return self.pow(a, self.q - 2)

    def pow(self, a, n: int):
        if self.is_zero(a):
            if n == 0:
                return self.one
            if n < 0:
                raise ZeroDivisionError("negative power of zero in GF")
            return self.zero
        n %= self.q - 1
        result = self.one
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result


_field_cache = {}


def field(p: int, e: int = 1, modulus=None) -> GF:
    key = (p, e, tuple(modulus) if modulus is not None else None)
    F = _field_cache.get(key)
    if F is None:
        F = GF(p, e, tuple(modulus) if modulus is not None else default_modulus(p, e))
        _field_cache[key] = F
    return F


# ---------------------------------------------------------------------------
# matrices over GF(q): tuples of tuples of field elements


def mat_zero(F: GF, rows, cols=None):
    cols = rows if cols is None else cols
    return tuple((F.zero,) * cols for _ in range(rows))


def mat_identity(F: GF, n):
    return tuple(
        tuple(F.one if i == j else F.zero for j in range(n)) for i in range(n)
    )


def mat_add(F: GF, A, B):
    return tuple(tuple(F.add(a, b) for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_sub(F: GF, A, B):
    return tuple(tuple(F.sub(a, b) for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_scale(F: GF, c, A):
    return tuple(tuple(F.mul(c, a) for a in row) for row in A)


def mat_mul(F: GF, A, B):
    n, m = len(A), len(B[0])
    k = len(B)
    Bt = list(zip(*B))
    out = []
    for i in range(n):
        Ai = A[i]
        row = []
        for j in range(m):
            Bj = Bt[j]
            acc = F.zero
            for t in range(k):
                acc = F.add(acc, F.mul(Ai[t], Bj[t]))
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_pow(F: GF, A, n: int):
    result = mat_identity(F, len(A))
    base = A
    while n:
        if n & 1:
            result = mat_mul(F, result, base)
        base = mat_mul(F, base, base)
        n >>= 1
    return result


def mat_key(F: GF, A):
    """Canonical ordering key: flattened base-p integer encoding."""
    return tuple(F.to_int(a) for row in A for a in row)


def mat_is_zero(F: GF, A):
    return all(F.is_zero(a) for row in A for a in row)


def _gauss(F: GF, M):
    """Row-reduce a list-of-lists matrix in place; return pivot columns."""
    rows, cols = len(M), len(M[0]) if M else 0
    pivots = []
    r = 0
    for c in range(cols):
        pr = None
        for i in range(r, rows):
            if not F.is_zero(M[i][c]):
                pr = i
                break
        if pr is None:
            continue
        M[r], M[pr] = M[pr], M[r]
        inv = F.inv(M[r][c])
        M[r] = [F.mul(inv, x) for x in M[r]]
        for i in range(rows):
            if i != r and not F.is_zero(M[i][c]):
                f = M[i][c]
                M[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return pivots


def mat_solve(F: GF, M, B):
    """Solve M X = B over GF(q).

    Returns (particular, nullspace) where particular is a cols(M) x cols(B)
    matrix or None when inconsistent, and nullspace is a basis (list of
    length-cols(M) tuples) of the kernel of M.
    """
    rows = len(M)
    cols = len(M[0]) if rows else 0
    bcols = len(B[0]) if B and len(B) and len(B[0]) else 0
    aug = [list(M[i]) + list(B[i]) for i in range(rows)] if rows else []
    pivots = _gauss(F, aug) if rows else []
    pivot_of_col = {}
    consistent = True
    for r, c in enumerate(pivots):
        if c < cols:
            pivot_of_col[c] = r
        else:
            consistent = False

    particular = None
    if consistent:
        particular = [[F.zero] * bcols for _ in range(cols)]
        for c, r in pivot_of_col.items():
            for j in range(bcols):
                particular[c][j] = aug[r][cols + j]
        particular = tuple(tuple(row) for row in particular)

    nullspace = []
    for fc in range(cols):
        if fc in pivot_of_col:
            continue
        vec = [F.zero] * cols
        vec[fc] = F.one
        for c, r in pivot_of_col.items():
            vec[c] = F.neg(aug[r][fc])
        nullspace.append(tuple(vec))
    return particular, nullspace


def mat_inverse(F: GF, A):
    """Inverse of a square matrix, or None when singular."""
    n = len(A)
    aug = [
        list(A[i]) + [F.one if j == i else F.zero for j in range(n)]
        for i in range(n)
    ]
    pivots = _gauss(F, aug)
    if len(pivots) < n or any(c >= n for c in pivots):
        return None
    return tuple(tuple(aug[i][n:]) for i in range(n))


def mat_rank(F: GF, A):
    if not A:
        return 0
    M = [list(row) for row in A]
    return len(_gauss(F, M))


# ---------------------------------------------------------------------------
# subspaces of GF(q)^n, kept as echelonized bases


class Subspace:
    """Echelonized basis of a subspace of GF(q)^n."""

    def __init__(self, F: GF, n: int, vectors=()):
        self.F = F
        self.n = n
        self.rows = []  # echelon rows, sorted by pivot
        self.pivots = []
        for v in vectors:
            self.add(v)

    def reduce(self, vec):
        """Reduce vec against the basis; returns the residual as a list."""
        F = self.F
        v = list(vec)
        for row, pc in zip(self.rows, self.pivots):
            c = v[pc]
            if not F.is_zero(c):
                v = [F.sub(x, F.mul(c, y)) for x, y in zip(v, row)]
        return v

    def add(self, vec):
        """Insert vec; returns True when it enlarged the subspace."""
        F = self.F
        v = self.reduce(vec)
        for c in range(self.n):
            if not F.is_zero(v[c]):
                inv = F.inv(v[c])
                v = [F.mul(inv, x) for x in v]
                pos = 0
                while pos < len(self.pivots) and self.pivots[pos] < c:
                    pos += 1
                self.rows.insert(pos, v)
                self.pivots.insert(pos, c)
                return True
        return False

    def contains(self, vec):
        return all(self.F.is_zero(c) for c in self.reduce(vec))

    def coordinates(self, vec):
        """Coefficients of vec over the echelon basis, or None."""
        F = self.F
        v = list(vec)
        coeffs = []
        for row, pc in zip(self.rows, self.pivots):
            c = v[pc]
            coeffs.append(c)
            if not F.is_zero(c):
                v = [F.sub(x, F.mul(c, y)) for x, y in zip(v, row)]
        if any(not F.is_zero(c) for c in v):
            return None
        return coeffs

    def basis_vectors(self):
        return [tuple(r) for r in self.rows]

    @property
    def dim(self):
        return len(self.rows)


class OrderedBasis:
    """Independent vectors with coordinate extraction in the given order.

    Unlike Subspace, coordinates() expresses vectors over the vectors as
    supplied, not over internal echelon rows.  Rows are kept fully reduced
    (each pivot column appears in exactly one row), so a single reduction
    pass is exact.
    """

    def __init__(self, F: GF, n: int, vectors=()):
        self.F = F
        self.n = n
        self.vectors = []
        self._rows = []  # fully reduced rows, row i has pivot _pivots[i]
        self._pivots = []
        self._exprs = []  # row i = sum_j exprs[i][j] * vectors[j]
        for v in vectors:
            if not self.add(v):
                raise ValueError("vectors are not independent")

    def _reduce(self, vec):
        F = self.F
        v = list(vec)
        coeff = [F.zero] * len(self._rows)
        for i, (row, pc) in enumerate(zip(self._rows, self._pivots)):
            c = v[pc]
            if not F.is_zero(c):
                coeff[i] = c
                v = [F.sub(x, F.mul(c, y)) for x, y in zip(v, row)]
        return v, coeff

    def add(self, vec):
        F = self.F
        v, coeff = self._reduce(vec)
        if all(F.is_zero(c) for c in v):
            return False
        lead = next(c for c in range(self.n) if not F.is_zero(v[c]))
        inv = F.inv(v[lead])
        row = [F.mul(inv, x) for x in v]
        # v = vec - sum_i coeff_i * row_i, so
        # row = inv*vec - sum_i inv*coeff_i * row_i
        expr = [F.zero] * (len(self.vectors) + 1)
        expr[-1] = inv
        for i, c in enumerate(coeff):
            if not F.is_zero(c):
                for j, pj in enumerate(self._exprs[i]):
                    expr[j] = F.sub(expr[j], F.mul(inv, F.mul(c, pj)))
        for e in self._exprs:
            e.append(F.zero)
        # eliminate the new pivot from existing rows to keep full reduction
        for i, old in enumerate(self._rows):
            c = old[lead]
            if not F.is_zero(c):
                self._rows[i] = [F.sub(x, F.mul(c, y)) for x, y in zip(old, row)]
                self._exprs[i] = [
                    F.sub(x, F.mul(c, y)) for x, y in zip(self._exprs[i], expr)
                ]
        self.vectors.append(tuple(vec))
        self._rows.append(row)
        self._pivots.append(lead)
        self._exprs.append(expr)
        return True

    def coordinates(self, vec):
        """Coefficients over the supplied vectors, or None."""
        F = self.F
        v, coeff = self._reduce(vec)
        if any(not F.is_zero(c) for c in v):
            return None
        out = [F.zero] * len(self.vectors)
        for i, c in enumerate(coeff):
            if not F.is_zero(c):
                for j, pj in enumerate(self._exprs[i]):
                    out[j] = F.add(out[j], F.mul(c, pj))
        return out

    def contains(self, vec):
        v, _ = self._reduce(vec)
        return all(self.F.is_zero(c) for c in v)

    @property
    def dim(self):
        return len(self.vectors)


# ---------------------------------------------------------------------------
# integer matrices: Smith normal form


def smith_normal_form(M):
    """Smith normal form: returns (U, S, V) with S = U*M*V.

    S is diagonal with nonnegative entries d1 | d2 | ...; U and V are
    unimodular.  All matrices are lists of lists of Python ints.
    """
    rows = len(M)
    cols = len(M[0]) if rows else 0
    S = [[int(x) for x in row] for row in M]
    U = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    V = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]

    def swap_rows(i, j):
        if i != j:
            S[i], S[j] = S[j], S[i]
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        if i != j:
            for row in S:
                row[i], row[j] = row[j], row[i]
            for row in V:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, c):
        S[dst] = [x + c * y for x, y in zip(S[dst], S[src])]
        U[dst] = [x + c * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, c):
        for row in S:
            row[dst] += c * row[src]
        for row in V:
            row[dst] += c * row[src]

    def negate_col(j):
        for row in S:
            row[j] = -row[j]
        for row in V:
            row[j] = -row[j]

    def clear(t):
        """Diagonalize position t over the trailing submatrix."""
        # move an entry of minimal absolute value into (t, t)
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = abs(S[i][j])
                if v and (best is None or v < best[0]):
                    best = (v, i, j)
        if best is None:
            return False
        swap_rows(t, best[1])
        swap_cols(t, best[2])
        while True:
            for i in range(t + 1, rows):
                if S[i][t]:
                    q = S[i][t] // S[t][t]
                    add_row(i, t, -q)
                    if S[i][t]:
                        swap_rows(t, i)
            if any(S[i][t] for i in range(t + 1, rows)):
                continue
            for j in range(t + 1, cols):
                if S[t][j]:
                    q = S[t][j] // S[t][t]
                    add_col(j, t, -q)
                    if S[t][j]:
                        swap_cols(t, j)
            if any(S[t][j] for j in range(t + 1, cols)) or any(
                S[i][t] for i in range(t + 1, rows)
            ):
                continue
            break
        if S[t][t] < 0:
            negate_col(t)
        return True

    rank = 0
    for t in range(min(rows, cols)):
        if not clear(t):
            break
        rank += 1

    # enforce the divisibility chain d1 | d2 | ...
    done = False
    while not done:
        done = True
        for t in range(rank - 1):
            a, b = S[t][t], S[t + 1][t + 1]
            if b % a != 0:
                add_col(t, t + 1, 1)  # brings b into column t at row t+1
                clear(t)
                clear(t + 1)
                done = False
                break
    return U, S, V


def snf_diagonal(S):
    return [S[i][i] for i in range(min(len(S), len(S[0]) if S else 0))]


def unimodular_inverse(U):
    """Exact inverse of a unimodular integer matrix."""
    Us, S, Vs = smith_normal_form(U)
    n = len(U)
    d = snf_diagonal(S)
    if len(d) != n or any(x != 1 for x in d):
        raise ValueError("matrix is not unimodular")
    # Us * U * Vs = I  =>  U^-1 = Vs * Us
    return [
        [sum(Vs[i][k] * Us[k][j] for k in range(n)) for j in range(n)]
        for i in range(n)
    ]


# ---------------------------------------------------------------------------
# sparse column reduction, shared by the congruence solver and lattice tools


def _column_reduce(columns, exprs, num_rows):
    """Echelonize integer columns (dicts row->value) by unimodular column ops.

    Mutates columns and exprs in place.  Returns (pivots, zero_idx): pivots
    maps a row index to its pivot column index; zero_idx lists columns that
    were reduced to zero.
    """
    by_row = [set() for _ in range(num_rows)]
    for idx, col in enumerate(columns):
        for r in col:
            by_row[r].add(idx)

    def addmul(dst, src, c):
        col_d, col_s = columns[dst], columns[src]
        for r, v in col_s.items():
            nv = col_d.get(r, 0) + c * v
            if nv:
                if r not in col_d:
                    by_row[r].add(dst)
                col_d[r] = nv
            elif r in col_d:
                del col_d[r]
                by_row[r].discard(dst)
        e_d, e_s = exprs[dst], exprs[src]
        for k, v in e_s.items():
            nv = e_d.get(k, 0) + c * v
            if nv:
                e_d[k] = nv
            elif k in e_d:
                del e_d[k]

    def negate(j):
        columns[j] = {k: -v for k, v in columns[j].items()}
        exprs[j] = {k: -v for k, v in exprs[j].items()}

    pivots = {}
    retired = set()
    for r in range(num_rows):
        while True:
            active = sorted(
                (j for j in by_row[r] if j not in retired),
                key=lambda j: (abs(columns[j][r]), j),
            )
            if len(active) <= 1:
                break
            piv = active[0]
            pv = columns[piv][r]
            for j in active[1:]:
                q = columns[j][r] // pv
                if q:
                    addmul(j, piv, -q)
        active = [j for j in by_row[r] if j not in retired]
        if active:
            piv = active[0]
            if columns[piv][r] < 0:
                negate(piv)
            pivots[r] = piv
            retired.add(piv)
    zero_idx = [
        j for j in range(len(columns)) if j not in retired and not columns[j]
    ]
    return pivots, zero_idx


def solve_congruence(M, b, moduli):
    """Solve M x = b (mod moduli), row-wise.

    M: list of integer rows; b: list of ints; moduli: positive int per row.
    Returns (particular, kernel_gens): particular is an integer vector or
    None when the system is inconsistent; kernel_gens generate the full
    lattice of integer solutions of M x = 0 (mod moduli).
    """
    rows = len(M)
    cols = len(M[0]) if rows else 0
    if rows != len(b) or rows != len(moduli):
        raise ValueError("shape mismatch in solve_congruence")

    # reduce each row modulo its modulus (symmetric residues), drop rows that
    # become trivial, and dedupe repeated constraints
    inconsistent = False
    seen = {}
    red_rows, red_b, red_m = [], [], []
    for i in range(rows):
        m = moduli[i]
        if m < 1:
            raise ValueError("moduli must be >= 1")
        row = []
        for x in M[i]:
            v = x % m
            row.append(v - m if v > m // 2 else v)
        bi = b[i] % m
        bi = bi - m if bi > m // 2 else bi
        if not any(row):
            if bi % m != 0:
                inconsistent = True
            continue
        key = (m, tuple(row))
        if key in seen:
            if (seen[key] - bi) % m != 0:
                inconsistent = True
            continue
        seen[key] = bi
        red_rows.append(row)
        red_b.append(bi)
        red_m.append(m)

    n_eff = len(red_rows)
    columns = []
    exprs = []
    for j in range(cols):
        col = {}
        for i in range(n_eff):
            v = red_rows[i][j]
            if v:
                col[i] = v
        columns.append(col)
        exprs.append({j: 1})
    for i in range(n_eff):
        columns.append({i: red_m[i]})
        exprs.append({})

    pivots, zero_idx = _column_reduce(columns, exprs, n_eff)

    kernel = []
    for j in zero_idx:
        vec = [0] * cols
        for k, v in exprs[j].items():
            vec[k] = v
        if any(vec):
            kernel.append(vec)

    if inconsistent:
        return None, kernel

    residual = list(red_b)
    sol = [0] * cols
    for r in range(n_eff):
        v = residual[r]
        if v == 0:
            continue
        piv = pivots.get(r)
        if piv is None:
            return None, kernel
        pv = columns[piv][r]
        if v % pv != 0:
            return None, kernel
        q = v // pv
        for rr, vv in columns[piv].items():
            residual[rr] -= q * vv
        for k, vv in exprs[piv].items():
            sol[k] += q * vv
    if any(residual):
        return None, kernel
    return sol, kernel


def lattice_basis(vectors, dim):
    """Echelonized basis of the integer lattice spanned by the vectors.

    Basis vectors come out with strictly increasing leading indices and
    positive leading entries.
    """
    columns = [{r: int(v[r]) for r in range(dim) if v[r]} for v in vectors]
    exprs = [{} for _ in columns]
    pivots, _ = _column_reduce(columns, exprs, dim)
    basis = []
    for r in sorted(pivots):
        col = columns[pivots[r]]
        vec = [0] * dim
        for k, v in col.items():
            vec[k] = v
        basis.append(vec)
    return basis


def lattice_solve(basis, target):
    """Coefficients expressing target over an echelonized lattice basis.

    Returns the coefficient list or None when target is outside the lattice.
    """
    leads = []
    for vec in basis:
        for i, v in enumerate(vec):
            if v:
                leads.append((i, v))
                break
    residual = list(target)
    coeffs = [0] * len(basis)
    for k, (lead, lv) in enumerate(leads):
        v = residual[lead]
        if v == 0:
            continue
        if v % lv != 0:
            return None
        q = v // lv
        coeffs[k] = q
        vec = basis[k]
        for i in range(lead, len(residual)):
            residual[i] -= q * vec[i]
    if any(residual):
        return None
    return coeffs


def lattice_index(basis):
    """Index [Z^n : L] of a full-rank echelonized lattice basis."""
    idx = 1
    for vec in basis:
        for v in vec:
            if v:
                idx *= abs(v)
                break
    return idx
