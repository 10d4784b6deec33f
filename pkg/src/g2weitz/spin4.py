"""Spin algebra in dimension four over the Gaussian rationals.

The Clifford multiplication on the positive half-spinor space is generated
by four 2x2 matrices with entries in {0, +-1, +-i}; every statement checked
here is exact matrix arithmetic.  The induced action of 2-forms is

    rho(v ^ v') s = -gamma(v)* gamma(v') s,

which kills the anti-self-dual forms and is injective on the self-dual ones.
"""

from fractions import Fraction

from .exterior import KForm, Vector
from . import linalg

Q0 = Fraction(0)
Q1 = Fraction(1)


class ComplexRational:
    """Gaussian rational a + b i with exact arithmetic."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def __add__(self, other):
        other = _try_coerce(other)
        if other is None:
            return NotImplemented
        return ComplexRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        other = _try_coerce(other)
        if other is None:
            return NotImplemented
        return ComplexRational(self.re - other.re, self.im - other.im)

    def __mul__(self, other):
        other = _try_coerce(other)
        if other is None:
            return NotImplemented
        return ComplexRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __radd__ = __add__
    __rmul__ = __mul__

    def __neg__(self):
        return ComplexRational(-self.re, -self.im)

    def conj(self):
        return ComplexRational(self.re, -self.im)

    def __eq__(self, other):
        other = _try_coerce(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def __repr__(self):
        return f"({self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i)"


def _try_coerce(x):
    if isinstance(x, ComplexRational):
        return x
    if isinstance(x, (int, Fraction)):
        return ComplexRational(Fraction(x))
    return None


def _coerce(x):
    c = _try_coerce(x)
    if c is None:
        raise TypeError(f"cannot treat {type(x).__name__} as a Gaussian rational")
    return c


CR0 = ComplexRational(0)
CR1 = ComplexRational(1)
CRI = ComplexRational(0, 1)


class SpinMatrix:
    """2x2 matrix over the Gaussian rationals."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        self.entries = tuple(tuple(_coerce(x) for x in row) for row in entries)
        if len(self.entries) != 2 or any(len(r) != 2 for r in self.entries):
            raise ValueError("SpinMatrix must be 2x2")

    @classmethod
    def zero(cls):
        return cls([[0, 0], [0, 0]])

    @classmethod
    def identity(cls):
        return cls([[1, 0], [0, 1]])

    def __add__(self, other):
        return SpinMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)]
        )

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, c):
        c = _coerce(c)
        return SpinMatrix([[c * x for x in row] for row in self.entries])

    def __matmul__(self, other):
        a, b = self.entries, other.entries
        return SpinMatrix(
            [
                [
                    a[i][0] * b[0][j] + a[i][1] * b[1][j]
                    for j in range(2)
                ]
                for i in range(2)
            ]
        )

    def adjoint(self):
        """Hermitian adjoint (conjugate transpose)."""
        a = self.entries
        return SpinMatrix([[a[0][0].conj(), a[1][0].conj()], [a[0][1].conj(), a[1][1].conj()]])

    def trace(self):
        return self.entries[0][0] + self.entries[1][1]

    def is_zero(self):
        return all(x.is_zero() for row in self.entries for x in row)

    def __eq__(self, other):
        return isinstance(other, SpinMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"SpinMatrix({self.entries!r})"


_GAMMA = {
    1: SpinMatrix([[CR1, CR0], [CR0, CR1]]),
    2: SpinMatrix([[CRI, CR0], [CR0, -CRI]]),
    3: SpinMatrix([[CR0, -CR1], [CR1, CR0]]),
    4: SpinMatrix([[CR0, CRI], [CRI, CR0]]),
}


def gamma(v):
    """Clifford multiplication S+ -> S- for a basis index or a dim-4 Vector."""
    if isinstance(v, int):
        if v not in _GAMMA:
            raise ValueError(f"gamma index {v} out of range 1..4")
        return _GAMMA[v]
    if not isinstance(v, Vector) or v.dim != 4:
        raise ValueError("gamma expects a basis index 1..4 or a dim-4 Vector")
    out = SpinMatrix.zero()
    for i in range(1, 5):
        c = v[i]
        if c != 0:
            out = out + ComplexRational(c) * _GAMMA[i]
    return out


def rho(beta):
    """Action of a 2-form on S+:  rho(v ^ v') = -gamma(v)* gamma(v')."""
    if not isinstance(beta, KForm) or beta.degree != 2 or beta.dim != 4:
        raise ValueError("rho expects a 2-form on a 4-dimensional space")
    out = SpinMatrix.zero()
    for (i, j), c in beta.coeffs.items():
        out = out + ComplexRational(-c) * (_GAMMA[i].adjoint() @ _GAMMA[j])
    return out


def clifford_check(v):
    """Exact check of gamma(v)* gamma(v) = |v|^2 Id."""
    if not isinstance(v, Vector) or v.dim != 4:
        raise ValueError("clifford_check expects a dim-4 Vector")
    g = gamma(v)
    norm = ComplexRational(v.norm_sq())
    return g.adjoint() @ g == norm * SpinMatrix.identity()


def anti_self_dual_basis():
    """The standard spanning set of anti-self-dual 2-forms on R^4."""
    return [
        KForm(4, 2, {(1, 2): 1, (3, 4): -1}),
        KForm(4, 2, {(1, 4): 1, (2, 3): -1}),
        KForm(4, 2, {(1, 3): 1, (4, 2): -1}),
    ]


def self_dual_basis():
    return [
        KForm(4, 2, {(1, 2): 1, (3, 4): 1}),
        KForm(4, 2, {(1, 4): 1, (2, 3): 1}),
        KForm(4, 2, {(1, 3): 1, (4, 2): 1}),
    ]


def _matrix_to_real_column(m):
    col = []
    for row in m.entries:
        for x in row:
            col.append(x.re)
            col.append(x.im)
    return col


def rho_rank_on_self_dual():
    """Rank over Q of rho restricted to the self-dual 3-space."""
    cols = [_matrix_to_real_column(rho(b)) for b in self_dual_basis()]
    return linalg.rank(linalg.transpose(cols))
