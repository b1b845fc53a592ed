"""Exact rational and integer linear algebra.

Matrices are dense, row-major lists of lists.  Rational entries are
``fractions.Fraction``; integer matrices use plain ``int``.  Everything is
exact: no floating point enters this module.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

MatQ = list[list[Fraction]]
MatZ = list[list[int]]
VecQ = list[Fraction]
VecZ = list[int]


def identity(n: int) -> MatZ:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(m: int, n: int) -> MatZ:
    return [[0] * n for _ in range(m)]


def mat_mul(A: Sequence[Sequence], B: Sequence[Sequence]) -> list[list]:
    if not A:
        return []
    m, k, n = len(A), len(B), len(B[0]) if B else 0
    return [[sum(A[i][t] * B[t][j] for t in range(k)) for j in range(n)]
            for i in range(m)]


def mat_sub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_vec(A, v):
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def to_fractions(A: Sequence[Sequence]) -> MatQ:
    return [[Fraction(x) for x in row] for row in A]


def _integerize_rows(A: Sequence[Sequence[Fraction]]) -> MatZ:
    """Scale each row by the lcm of denominators; preserves rank and kernel."""
    out = []
    for row in A:
        row = [Fraction(x) for x in row]
        scale = 1
        for x in row:
            scale = scale * x.denominator // gcd(scale, x.denominator)
        out.append([int(x * scale) for x in row])
    return out


def rank(M: Sequence[Sequence]) -> int:
    """Rank via fraction-free (Bareiss) elimination on an integerized copy."""
    A = _integerize_rows(M)
    m = len(A)
    n = len(A[0]) if m else 0
    r = 0
    prev = 1
    for c in range(n):
        piv = next((i for i in range(r, m) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        for i in range(r + 1, m):
            for j in range(c + 1, n):
                A[i][j] = (A[r][c] * A[i][j] - A[i][c] * A[r][j]) // prev
            A[i][c] = 0
        prev = A[r][c]
        r += 1
        if r == m:
            break
    return r


def rref(M: Sequence[Sequence]) -> tuple[MatQ, list[int]]:
    """Reduced row echelon form over Q; returns (R, pivot_columns)."""
    A = to_fractions(M)
    m = len(A)
    n = len(A[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = A[r][c]
        A[r] = [x / inv for x in A[r]]
        for i in range(m):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return A, pivots


def clear_denominators(v: VecQ) -> VecZ:
    """Scale to integral entries with content 1 and positive leading entry."""
    scale = 1
    for x in v:
        scale = scale * x.denominator // gcd(scale, x.denominator)
    w = [int(x * scale) for x in v]
    g = 0
    for x in w:
        g = gcd(g, abs(x))
    if g > 1:
        w = [x // g for x in w]
    lead = next((x for x in w if x != 0), 0)
    if lead < 0:
        w = [-x for x in w]
    return w


def kernel_basis(M: Sequence[Sequence]) -> list[VecZ]:
    """Basis of the right kernel of M over Q, as content-1 integer vectors.

    Free variables are taken in increasing column order, so the output is
    deterministic.
    """
    m = len(M)
    n = len(M[0]) if m else 0
    R, pivots = rref(M)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -R[r][fc]
        basis.append(clear_denominators(v))
    return basis


def kernel_dim(M: Sequence[Sequence]) -> int:
    n = len(M[0]) if M else 0
    return n - rank(M)


def det(M: Sequence[Sequence]) -> Fraction:
    A = to_fractions(M)
    n = len(A)
    sign = 1
    result = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if A[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            sign = -sign
        result *= A[c][c]
        inv = A[c][c]
        for i in range(c + 1, n):
            if A[i][c] != 0:
                f = A[i][c] / inv
                A[i] = [x - f * y for x, y in zip(A[i], A[c])]
    return sign * result


# --- Smith normal form ------------------------------------------------------

def smith_normal_form(A: Sequence[Sequence[int]]) -> tuple[MatZ, MatZ, MatZ]:
    """Return unimodular (U, D, V) with U*A*V = D, D diagonal, d_i | d_{i+1},
    d_i >= 0."""
    D = [list(map(int, row)) for row in A]
    m = len(D)
    n = len(D[0]) if m else 0
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):  # row dst += q * row src
        D[dst] = [a + q * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, q):
        for row in D:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    def negate_row(i):
        D[i] = [-x for x in D[i]]
        U[i] = [-x for x in U[i]]

    t = 0
    while t < min(m, n):
        # find a nonzero pivot in the remaining block
        piv = None
        for i in range(t, m):
            for j in range(t, n):
                if D[i][j] != 0:
                    if piv is None or abs(D[i][j]) < abs(D[piv[0]][piv[1]]):
                        piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            # clear column t
            dirty = False
            for i in range(t + 1, m):
                if D[i][t] != 0:
                    q = D[i][t] // D[t][t]
                    add_row(t, i, -q)
                    if D[i][t] != 0:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, n):
                if D[t][j] != 0:
                    q = D[t][j] // D[t][t]
                    add_col(t, j, -q)
                    if D[t][j] != 0:
                        swap_cols(t, j)
                        dirty = True
            if not dirty:
                break
        # make the pivot divide every remaining entry
        fixed = True
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if D[i][j] % D[t][t] != 0:
                    add_row(i, t, 1)
                    fixed = False
                    break
            if not fixed:
                break
        if fixed:
            if D[t][t] < 0:
                negate_row(t)
            t += 1
    return U, D, V


def invariant_factors(A: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero diagonal entries of the Smith normal form, in order."""
    _, D, _ = smith_normal_form(A)
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))
            if D[i][i] != 0]


def left_kernel_basis_int(A: Sequence[Sequence[int]]) -> list[VecZ]:
    """Basis of {c in Z^m : c^T A = 0}, from the unimodular row transform."""
    U, D, _ = smith_normal_form(A)
    m = len(D)
    n = len(D[0]) if m else 0
    out = []
    for i in range(m):
        if i >= n or D[i][i] == 0:
            out.append(list(U[i]))
    return out


def solve_left_int(A: Sequence[Sequence[int]], b: Sequence[int]) -> VecZ | None:
    """One integer solution c of c^T A = b, or None if there is none."""
    U, D, V = smith_normal_form(A)
    m = len(D)
    n = len(D[0]) if m else 0
    # c^T A = b  <=>  (c^T U^-1) D = b V  with y^T = c^T U^-1
    bv = [sum(b[j] * V[j][k] for j in range(n)) for k in range(n)]
    y = [0] * m
    for i in range(min(m, n)):
        d = D[i][i]
        if d == 0:
            if bv[i] != 0:
                return None
        else:
            if bv[i] % d != 0:
                return None
            y[i] = bv[i] // d
    for i in range(min(m, n), n):
        if bv[i] != 0:
            return None
    return [sum(y[i] * U[i][j] for i in range(m)) for j in range(m)]


# --- exterior square --------------------------------------------------------

def pair_basis(n: int) -> list[tuple[int, int]]:
    """Lexicographic list of pairs (i, j), 1 <= i < j <= n, used everywhere
    a wedge-square basis is needed."""
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def pair_index(n: int) -> dict[tuple[int, int], int]:
    return {p: k for k, p in enumerate(pair_basis(n))}


def exterior_square(A: Sequence[Sequence]) -> list[list]:
    """Induced map on the wedge square; entry ((i,j),(k,l)) is the 2x2 minor
    A[ik]A[jl] - A[il]A[jk] (1-based pairs, lexicographic order)."""
    n = len(A)
    if any(len(row) != n for row in A):
        raise ValueError("exterior_square needs a square matrix")
    pairs = pair_basis(n)
    out = []
    for (i, j) in pairs:
        row = []
        for (k, l) in pairs:
            row.append(A[i - 1][k - 1] * A[j - 1][l - 1]
                       - A[i - 1][l - 1] * A[j - 1][k - 1])
        out.append(row)
    return out


def is_symplectic(A: Sequence[Sequence[int]]) -> bool:
    """True iff A^T J A = J with J = [[0, I], [-I, 0]]; requires even size."""
    n = len(A)
    if n % 2 != 0 or any(len(row) != n for row in A):
        raise ValueError("is_symplectic needs an even-dimensional square matrix")
    l = n // 2
    J = zeros(n, n)
    for i in range(l):
        J[i][l + i] = 1
        J[l + i][i] = -1
    At = [list(col) for col in zip(*A)]
    return mat_mul(mat_mul(At, J), A) == J


def is_unimodular(A: Sequence[Sequence[int]]) -> bool:
    return abs(det(A)) == 1
