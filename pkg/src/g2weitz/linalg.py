"""Exact linear algebra over the rationals.

Matrices are lists of rows, entries are ``fractions.Fraction``.  Everything
here is textbook Gaussian elimination; sizes in this package never exceed a
few dozen rows, so no pivot-size cleverness is needed.
"""

from fractions import Fraction

Q0 = Fraction(0)
Q1 = Fraction(1)


def mat(rows):
    """Copy a nested sequence into a Fraction matrix."""
    return [[Fraction(x) for x in row] for row in rows]


def zeros(n, m):
    return [[Q0] * m for _ in range(n)]


def identity(n):
    return [[Q1 if i == j else Q0 for j in range(n)] for i in range(n)]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c, a):
    c = Fraction(c)
    return [[c * x for x in row] for row in a]


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    assert len(a[0]) == k
    out = zeros(n, m)
    for i in range(n):
        ai = a[i]
        for j in range(m):
            out[i][j] = sum((ai[l] * b[l][j] for l in range(k)), Q0)
    return out


def mat_vec(a, v):
    return [sum((row[j] * v[j] for j in range(len(v))), Q0) for row in a]


def transpose(a):
    return [list(col) for col in zip(*a)]


def is_zero_matrix(a):
    return all(x == 0 for row in a for x in row)


def mat_eq(a, b):
    return len(a) == len(b) and all(ra == rb for ra, rb in zip(a, b))


def rref(a):
    """Reduced row echelon form; returns (rref_matrix, pivot_columns)."""
    m = [row[:] for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = Q1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a):
    return len(rref(a)[1])


def solve(a, b):
    """Solve a x = b exactly.

    Accepts overdetermined but consistent systems; free variables are set to
    zero.  Raises ``ValueError`` on inconsistency.
    """
    rows = len(a)
    aug = [a[i][:] + [Fraction(b[i])] for i in range(rows)]
    red, pivots = rref(aug)
    cols = len(a[0])
    if cols in pivots:
        raise ValueError("inconsistent linear system")
    x = [Q0] * cols
    for r, c in enumerate(pivots):
        x[c] = red[r][cols]
    # Verify: guards the free-variable choice on underdetermined systems.
    for i in range(rows):
        if sum((a[i][j] * x[j] for j in range(cols)), Q0) != b[i]:
            raise ValueError("inconsistent linear system")
    return x


def nullspace(a):
    """Basis of the right kernel of a."""
    red, pivots = rref(a)
    cols = len(a[0]) if a else 0
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Q0] * cols
        v[f] = Q1
        for r, c in enumerate(pivots):
            v[c] = -red[r][f]
        basis.append(v)
    return basis


def det(a):
    """Determinant by fraction-free-ish elimination (small matrices)."""
    n = len(a)
    m = [row[:] for row in a]
    sign = Q1
    d = Q1
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot is None:
            return Q0
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            sign = -sign
        d *= m[c][c]
        inv = Q1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return sign * d
