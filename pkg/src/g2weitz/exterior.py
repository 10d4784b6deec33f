"""Exterior algebra with exact rational coefficients.

Forms live on an oriented inner-product space of dimension 3..9 whose
declared frame is orthonormal; the metric is the identity in that frame and
the volume form is e^{1...n}.  A k-form is a sparse table from strictly
increasing index tuples to nonzero Fractions; sign bookkeeping happens once,
at construction, by sorting indices with parity.
"""

from fractions import Fraction

MAX_DIM = 9
MIN_DIM = 3

Q0 = Fraction(0)


def _sort_with_parity(indices):
    """Sort an index tuple, returning (sorted_tuple, sign); sign 0 on repeats."""
    idx = list(indices)
    sign = 1
    # insertion sort, counting swaps
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(idx, idx[1:]):
        if a == b:
            return tuple(idx), 0
    return tuple(idx), sign


class Vector:
    """Element of the n-dimensional frame space, components in Q."""

    __slots__ = ("dim", "components")

    def __init__(self, components):
        self.components = tuple(Fraction(c) for c in components)
        self.dim = len(self.components)

    @classmethod
    def zero(cls, dim):
        return cls([0] * dim)

    @classmethod
    def basis(cls, dim, i):
        if not 1 <= i <= dim:
            raise ValueError(f"basis index {i} out of range 1..{dim}")
        return cls([1 if j == i else 0 for j in range(1, dim + 1)])

    def __getitem__(self, i):
        """Component along e_i, 1-based."""
        return self.components[i - 1]

    def __add__(self, other):
        self._check(other)
        return Vector([a + b for a, b in zip(self.components, other.components)])

    def __sub__(self, other):
        self._check(other)
        return Vector([a - b for a, b in zip(self.components, other.components)])

    def __neg__(self):
        return Vector([-a for a in self.components])

    def __rmul__(self, c):
        return Vector([Fraction(c) * a for a in self.components])

    def __eq__(self, other):
        return isinstance(other, Vector) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def dot(self, other):
        self._check(other)
        return sum((a * b for a, b in zip(self.components, other.components)), Q0)

    def norm_sq(self):
        return self.dot(self)

    def is_zero(self):
        return all(c == 0 for c in self.components)

    def _check(self, other):
        if not isinstance(other, Vector) or other.dim != self.dim:
            raise ValueError("vector dimension mismatch")

    def __repr__(self):
        return f"Vector({list(self.components)})"


class KForm:
    """Alternating k-form, stored canonically (sorted tuples, no zeros)."""

    __slots__ = ("dim", "degree", "coeffs")

    def __init__(self, dim, degree, coeffs=None):
        if not MIN_DIM <= dim <= MAX_DIM:
            raise ValueError(f"dimension {dim} outside {MIN_DIM}..{MAX_DIM}")
        if not 0 <= degree <= dim:
            raise ValueError(f"degree {degree} outside 0..{dim}")
        self.dim = dim
        self.degree = degree
        table = {}
        for idx, c in (coeffs or {}).items():
            c = Fraction(c)
            if c == 0:
                continue
            if len(idx) != degree:
                raise ValueError(f"index tuple {idx} has wrong length for degree {degree}")
            if any(not 1 <= i <= dim for i in idx):
                raise ValueError(f"index tuple {idx} out of range 1..{dim}")
            key, sign = _sort_with_parity(idx)
            if sign == 0:
                continue
            prev = table.get(key, Q0)
            val = prev + sign * c
            if val == 0:
                table.pop(key, None)
            else:
                table[key] = val
        self.coeffs = table

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, dim, degree):
        return cls(dim, degree, {})

    @classmethod
    def basis(cls, dim, indices, coeff=1):
        return cls(dim, len(indices), {tuple(indices): Fraction(coeff)})

    @classmethod
    def volume(cls, dim):
        return cls.basis(dim, tuple(range(1, dim + 1)))

    # -- coefficient access --------------------------------------------------

    def __getitem__(self, indices):
        """Fully antisymmetric component lookup; arbitrary index order."""
        key, sign = _sort_with_parity(indices)
        if sign == 0:
            return Q0
        return sign * self.coeffs.get(key, Q0)

    def terms(self):
        """Canonically ordered (indices, coefficient) pairs."""
        return sorted(self.coeffs.items())

    def is_zero(self):
        return not self.coeffs

    # -- vector space structure ----------------------------------------------

    def __add__(self, other):
        self._check_same(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            v = out.get(k, Q0) + c
            if v == 0:
                out.pop(k, None)
            else:
                out[k] = v
        return KForm(self.dim, self.degree, out)

    def __sub__(self, other):
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def __rmul__(self, c):
        c = Fraction(c)
        return KForm(self.dim, self.degree, {k: c * v for k, v in self.coeffs.items()})

    def __eq__(self, other):
        return (
            isinstance(other, KForm)
            and self.dim == other.dim
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.dim, self.degree, tuple(sorted(self.coeffs.items()))))

    def __repr__(self):
        from .notation import print_form

        return f"KForm({self.dim}, {self.degree}, {print_form(self)!r})"

    def _check_same(self, other):
        if not isinstance(other, KForm) or other.dim != self.dim or other.degree != self.degree:
            raise ValueError("form dimension/degree mismatch")

    # -- evaluation ----------------------------------------------------------

    def __call__(self, *vectors):
        """Evaluate on k vectors (fully antisymmetric multilinear extension)."""
        if len(vectors) != self.degree:
            raise ValueError(f"expected {self.degree} vectors, got {len(vectors)}")
        for v in vectors:
            if v.dim != self.dim:
                raise ValueError("vector dimension mismatch")
        if self.degree == 0:
            return self.coeffs.get((), Q0)
        total = Q0
        for idx, c in self.coeffs.items():
            # det of the k x k minor picked out by idx
            total += c * _minor_det(vectors, idx)
        return total


def _minor_det(vectors, idx):
    k = len(idx)
    rows = [[vectors[j][idx[r]] for j in range(k)] for r in range(k)]
    if k == 1:
        return rows[0][0]
    if k == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    from .linalg import det

    return det(rows)


# -- operations --------------------------------------------------------------


def wedge(a, b):
    """Exterior product a ^ b."""
    if a.dim != b.dim:
        raise ValueError("wedge: dimension mismatch")
    deg = a.degree + b.degree
    if deg > a.dim:
        # identically zero; report it as the zero top-degree form
        return KForm.zero(a.dim, a.dim)
    out = {}
    for ia, ca in a.coeffs.items():
        sa = set(ia)
        for ib, cb in b.coeffs.items():
            if sa.intersection(ib):
                continue
            key, sign = _sort_with_parity(ia + ib)
            v = out.get(key, Q0) + sign * ca * cb
            if v == 0:
                out.pop(key, None)
            else:
                out[key] = v
    return KForm(a.dim, deg, out)


def interior(v, a):
    """Interior product v -| a (contraction into the first slot)."""
    if v.dim != a.dim:
        raise ValueError("interior: dimension mismatch")
    if a.degree == 0:
        raise ValueError("interior: cannot contract a 0-form")
    out = {}
    for idx, c in a.coeffs.items():
        for pos, i in enumerate(idx):
            comp = v[i]
            if comp == 0:
                continue
            key = idx[:pos] + idx[pos + 1 :]
            sign = -1 if pos % 2 else 1
            val = out.get(key, Q0) + sign * comp * c
            if val == 0:
                out.pop(key, None)
            else:
                out[key] = val
    return KForm(a.dim, a.degree - 1, out)


def hodge(a):
    """Hodge star for the orthonormal frame and orientation e^{1...n}."""
    n = a.dim
    full = tuple(range(1, n + 1))
    out = {}
    for idx, c in a.coeffs.items():
        comp = tuple(i for i in full if i not in idx)
        _, sign = _sort_with_parity(idx + comp)
        out[comp] = sign * c
    return KForm(n, n - a.degree, out)


def form_inner(a, b):
    """Pointwise inner product; satisfies a ^ *b = <a,b> vol."""
    if a.dim != b.dim or a.degree != b.degree:
        raise ValueError("form_inner: dimension/degree mismatch")
    total = Q0
    for idx, c in a.coeffs.items():
        other = b.coeffs.get(idx)
        if other is not None:
            total += c * other
    return total


def sharp(a):
    """Metric dual of a 1-form as a Vector (identity metric)."""
    if a.degree != 1:
        raise ValueError("sharp expects a 1-form")
    return Vector([a.coeffs.get((i,), Q0) for i in range(1, a.dim + 1)])


def flat(v):
    """Metric dual of a Vector as a 1-form."""
    return KForm(v.dim, 1, {(i,): v[i] for i in range(1, v.dim + 1)})


def pullback(a, matrix):
    """Pullback of a by the linear map with the given column-action matrix.

    ``matrix`` acts on basis vectors by e_j  ->  sum_i matrix[i][j] e_i
    (entries indexed from zero), and (pullback a)(v_1,...,v_k) = a(Av_1,...,Av_k).
    """
    n = a.dim
    images = [Vector([matrix[i][j] for i in range(n)]) for j in range(n)]
    out = {}
    from itertools import combinations

    for idx in combinations(range(1, n + 1), a.degree):
        val = a(*[images[i - 1] for i in idx])
        if val != 0:
            out[idx] = val
    return KForm(n, a.degree, out)
