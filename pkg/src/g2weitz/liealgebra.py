"""Left-invariant geometry from structure constants.

A Lie algebra is given by its structure constants c_{ij}^k = <[e_i,e_j], e_k>
in a frame declared orthonormal and oriented.  The coframe differentials are

    (d e^k)(e_i, e_j) = -c_{ij}^k,

the Levi-Civita connection of the left-invariant metric is Milnor's

    Gamma_{ij}^k = 1/2 (a_{ijk} - a_{jki} + a_{kij}),   a_{ijk} = c_{ij}^k,

with nabla_{e_i} e_j = Gamma_{ij}^k e_k, and the curvature operator is
R(u,v) = [nabla_u, nabla_v] - nabla_{[u,v]}.  Coefficient functions of
invariant tensors are constant, so covariant derivatives reduce to
Gamma-contractions throughout.
"""

from fractions import Fraction
from itertools import combinations

from .exterior import KForm, Vector

Q0 = Fraction(0)
HALF = Fraction(1, 2)


class LieAlgebraStructure:
    """Structure constants of a metric Lie algebra in an orthonormal frame."""

    def __init__(self, dim, constants):
        """constants maps (i, j, k) with i < j to c_{ij}^k; other keys rejected."""
        self.dim = dim
        self._c = {}
        for (i, j, k), v in constants.items():
            v = Fraction(v)
            if v == 0:
                continue
            if not (1 <= i <= dim and 1 <= j <= dim and 1 <= k <= dim):
                raise ValueError(f"structure constant index {(i, j, k)} out of range")
            if i >= j:
                raise ValueError("store structure constants with i < j only")
            self._c[(i, j, k)] = v

    @classmethod
    def abelian(cls, dim):
        return cls(dim, {})

    @classmethod
    def from_structure_forms(cls, differentials):
        """Build from the coframe differentials d e^1, ..., d e^n."""
        dim = len(differentials)
        constants = {}
        for k, dk in enumerate(differentials, start=1):
            if dk.dim != dim or dk.degree != 2:
                raise ValueError("structure forms must be 2-forms matching the dimension")
            for (i, j), coeff in dk.coeffs.items():
                constants[(i, j, k)] = constants.get((i, j, k), Q0) - coeff
        return cls(dim, {k: v for k, v in constants.items() if v != 0})

    def c(self, i, j, k):
        """c_{ij}^k with antisymmetry in (i, j)."""
        if i == j:
            return Q0
        if i < j:
            return self._c.get((i, j, k), Q0)
        return -self._c.get((j, i, k), Q0)

    def bracket(self, u, v):
        """[u, v] for Vectors in the invariant frame."""
        n = self.dim
        out = [Q0] * n
        for (i, j, k), cijk in self._c.items():
            coeff = u[i] * v[j] - u[j] * v[i]
            if coeff != 0:
                out[k - 1] += cijk * coeff
        return Vector(out)

    def nonzero_constants(self):
        return dict(sorted(self._c.items()))


def jacobi_check(L):
    """True iff the Jacobi identity holds on all basis triples."""
    n = L.dim
    for i, j, k in combinations(range(1, n + 1), 3):
        for l in range(1, n + 1):
            total = Q0
            for m in range(1, n + 1):
                total += (
                    L.c(j, k, m) * L.c(i, m, l)
                    + L.c(k, i, m) * L.c(j, m, l)
                    + L.c(i, j, m) * L.c(k, m, l)
                )
            if total != 0:
                return False
    return True


def ce_differential(L, alpha):
    """Chevalley-Eilenberg differential of an invariant form.

    (d alpha)(x_0..x_k) = sum_{i<j} (-1)^{i+j} alpha([x_i,x_j], x_0..^i..^j..x_k).
    """
    if alpha.dim != L.dim:
        raise ValueError("form dimension does not match the algebra")
    n = L.dim
    k = alpha.degree
    if k >= n:
        return KForm.zero(n, n)
    out = {}
    for idx in combinations(range(1, n + 1), k + 1):
        total = Q0
        for a in range(k + 1):
            for b in range(a + 1, k + 1):
                rest = tuple(idx[r] for r in range(k + 1) if r != a and r != b)
                sign = 1 if (a + b) % 2 == 0 else -1
                # alpha([e_ia, e_ib], rest): expand the bracket
                for m in range(1, n + 1):
                    cm = L.c(idx[a], idx[b], m)
                    if cm != 0:
                        val = alpha[(m,) + rest]
                        if val != 0:
                            total += sign * cm * val
        if total != 0:
            out[idx] = total
    return KForm(n, k + 1, out)


class ChristoffelTable:
    """Levi-Civita coefficients Gamma_{ij}^k of the left-invariant metric."""

    def __init__(self, dim, gamma):
        self.dim = dim
        self._g = {k: Fraction(v) for k, v in gamma.items() if v != 0}

    def gamma(self, i, j, k):
        return self._g.get((i, j, k), Q0)

    def nabla_basis(self, i, j):
        """nabla_{e_i} e_j as a Vector."""
        return Vector([self.gamma(i, j, k) for k in range(1, self.dim + 1)])

    def nabla(self, x, v):
        """nabla_x v for invariant Vector fields (constant coefficients)."""
        n = self.dim
        out = [Q0] * n
        for (i, j, k), g in self._g.items():
            coeff = x[i] * v[j]
            if coeff != 0:
                out[k - 1] += g * coeff
        return Vector(out)

    def nonzero_symbols(self):
        return dict(sorted(self._g.items()))


def christoffel(L):
    """Milnor's formula for the connection coefficients."""
    if not jacobi_check(L):
        raise ValueError("structure constants violate the Jacobi identity")
    n = L.dim
    gamma = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                v = HALF * (L.c(i, j, k) - L.c(j, k, i) + L.c(k, i, j))
                if v != 0:
                    gamma[(i, j, k)] = v
    return ChristoffelTable(n, gamma)


class CurvatureTensor:
    """Curvature operator components R(e_i,e_j)e_k = sum_m R_{ijk}^m e_m."""

    def __init__(self, dim, components):
        self.dim = dim
        self._r = {k: v for k, v in components.items() if v != 0}

    def component(self, i, j, k, m):
        return self._r.get((i, j, k, m), Q0)

    def apply_basis(self, i, j, k):
        return Vector([self.component(i, j, k, m) for m in range(1, self.dim + 1)])

    def apply(self, u, v, w):
        """R(u,v)w by multilinearity."""
        n = self.dim
        out = [Q0] * n
        for (i, j, k, m), r in self._r.items():
            coeff = u[i] * v[j] * w[k]
            if coeff != 0:
                out[m - 1] += r * coeff
        return Vector(out)

    def pair_component(self, i, j, k, l):
        """R_{ijkl} = <R(e_i,e_j)e_k, e_l> (orthonormal frame)."""
        return self.component(i, j, k, l)


def curvature(L, G):
    """R(e_i,e_j)e_k from the connection table.

    Components are Gamma_{jk}^l Gamma_{il}^m - Gamma_{ik}^l Gamma_{jl}^m
    - (Gamma_{ij}^l - Gamma_{ji}^l) Gamma_{lk}^m.
    """
    n = L.dim
    comps = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            for k in range(1, n + 1):
                for m in range(1, n + 1):
                    total = Q0
                    for l in range(1, n + 1):
                        total += G.gamma(j, k, l) * G.gamma(i, l, m)
                        total -= G.gamma(i, k, l) * G.gamma(j, l, m)
                        total -= (G.gamma(i, j, l) - G.gamma(j, i, l)) * G.gamma(l, k, m)
                    if total != 0:
                        comps[(i, j, k, m)] = total
    return CurvatureTensor(n, comps)


def nabla_invariant_tensor(G, t2):
    """Covariant derivative of an invariant bilinear form.

    (nabla_i T)_{kl} = -Gamma_{ik}^m T_{ml} - Gamma_{il}^m T_{km}; returns a
    dict (i, k, l) -> Fraction with zero entries omitted.
    """
    n = G.dim
    out = {}
    for i in range(1, n + 1):
        for k in range(1, n + 1):
            for l in range(1, n + 1):
                total = Q0
                for m in range(1, n + 1):
                    gm = G.gamma(i, k, m)
                    if gm != 0:
                        total -= gm * t2[m - 1][l - 1]
                    gm = G.gamma(i, l, m)
                    if gm != 0:
                        total -= gm * t2[k - 1][m - 1]
                if total != 0:
                    out[(i, k, l)] = total
    return out


def scalar_curvature(R, indices):
    """k = sum_{i,j in indices} <R(e_i,e_j)e_j, e_i>.

    With this sign the round unit 3-sphere has k = 6.  For a sub-frame the
    value is the ambient sectional sum over the chosen directions, which for
    totally geodesic submanifolds coincides with the intrinsic scalar
    curvature by the Gauss equation.
    """
    total = Q0
    for i in indices:
        for j in indices:
            total += R.pair_component(i, j, j, i)
    return total
