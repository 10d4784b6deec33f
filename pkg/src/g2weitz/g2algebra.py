"""Pointwise calculus of a G2-structure in an orthonormal frame.

A structure is a 3-form phi on a 7-dimensional oriented inner-product space
that satisfies the metric compatibility relation

    (u -| phi) ^ (v -| phi) ^ phi = s * 6 <u,v> e^{1...7},   s = +1 or -1.

s = +1 is the "plus" sign convention, s = -1 the "minus" one; both are
admitted so that structure forms arising from product constructions can be
analysed without reordering the frame.  The companion objects are

    psi   = *phi                   (Hodge star of the standard orientation),
    u x v = phi(u, v, .)#          (cross product),
    chi   = psi(., ., ., .)#       (associator).

All decompositions of 2- and 3-forms are computed by exact linear solves
against their defining membership conditions.
"""

from fractions import Fraction
from itertools import combinations

from . import linalg
from .exterior import KForm, Vector, form_inner, hodge, interior, pullback, wedge

Q0 = Fraction(0)

DIM = 7

PHI_PLUS_TERMS = {
    (1, 2, 3): 1,
    (1, 4, 5): 1,
    (1, 6, 7): 1,
    (2, 4, 6): 1,
    (2, 5, 7): -1,
    (3, 4, 7): -1,
    (3, 5, 6): -1,
}

PHI_MINUS_TERMS = {
    (5, 6, 7): 1,
    (1, 2, 5): 1,
    (1, 3, 6): 1,
    (2, 4, 6): 1,
    (1, 4, 7): 1,
    (3, 4, 5): -1,
    (2, 3, 7): -1,
}

# Orientation-reversing frame map relating the two model forms:
# e5,e6,e7 -> e1,e2,e3 and e1,e2,e3,e4 -> e4,e5,e6,-e7 (column action).
CONVENTION_SWAP = [
    [0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 1],
    [1, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, -1, 0, 0, 0],
]


def metric_compat_check(phi):
    """Return the convention sign s, or None if phi is not compatible."""
    if phi.dim != DIM or phi.degree != 3:
        return None
    vol = KForm.volume(DIM)
    contractions = [interior(Vector.basis(DIM, i), phi) for i in range(1, DIM + 1)]
    sign = None
    for i in range(DIM):
        for j in range(i, DIM):
            w = wedge(wedge(contractions[i], contractions[j]), phi)
            expected_zero = i != j
            if expected_zero:
                if not w.is_zero():
                    return None
                continue
            c = form_inner(w, vol)
            if w != c * vol:
                return None
            if c == 6:
                s = 1
            elif c == -6:
                s = -1
            else:
                return None
            if sign is None:
                sign = s
            elif sign != s:
                return None
    return sign


class G2Data:
    """A compatible 3-form, its dual 4-form, and the convention sign."""

    __slots__ = ("phi", "psi", "convention", "sign", "_cross_table", "_chi_table")

    def __init__(self, phi, convention, sign):
        self.phi = phi
        self.psi = hodge(phi)
        self.convention = convention
        self.sign = sign
        self._cross_table = None
        self._chi_table = None

    @classmethod
    def from_phi(cls, phi):
        s = metric_compat_check(phi)
        if s is None:
            raise ValueError("3-form fails the metric compatibility relation")
        return cls(phi, "plus" if s == 1 else "minus", s)

    def cross_basis(self, i, j):
        """Cached e_i x e_j."""
        if self._cross_table is None:
            self._cross_table = {}
            for a in range(1, DIM + 1):
                for b in range(1, DIM + 1):
                    self._cross_table[(a, b)] = Vector(
                        [self.phi[(a, b, k)] for k in range(1, DIM + 1)]
                    )
        return self._cross_table[(i, j)]

    def chi_basis(self, i, j, k):
        """Cached chi(e_i, e_j, e_k)."""
        if self._chi_table is None:
            self._chi_table = {}
            for idx in combinations(range(1, DIM + 1), 3):
                v = Vector([self.psi[idx + (m,)] for m in range(1, DIM + 1)])
                self._chi_table[idx] = v
        key, parity = _sorted_key(i, j, k)
        if parity == 0:
            return Vector.zero(DIM)
        base = self._chi_table[key]
        return base if parity == 1 else -base


def _sorted_key(*idx):
    from .exterior import _sort_with_parity

    return _sort_with_parity(idx)


def model_phi(convention="plus"):
    """The model structure in either sign convention."""
    if convention == "plus":
        phi = KForm(DIM, 3, PHI_PLUS_TERMS)
        return G2Data(phi, "plus", 1)
    if convention == "minus":
        phi = KForm(DIM, 3, PHI_MINUS_TERMS)
        return G2Data(phi, "minus", -1)
    raise ValueError(f"unknown convention {convention!r}")


def cross(u, v, g2):
    """Cross product u x v determined by phi(u,v,w) = <u x v, w>."""
    if u.dim != DIM or v.dim != DIM:
        raise ValueError("cross expects dim-7 vectors")
    out = [Q0] * DIM
    for (a, b, c), coeff in g2.phi.coeffs.items():
        ua, ub, uc = u[a], u[b], u[c]
        va, vb, vc = v[a], v[b], v[c]
        # expand phi-term on (u, v, e_k) for k in {a,b,c}
        out[c - 1] += coeff * (ua * vb - ub * va)
        out[a - 1] += coeff * (ub * vc - uc * vb)
        out[b - 1] += coeff * (uc * va - ua * vc)
    return Vector(out)


def associator(u, v, w, g2):
    """Associator chi(u,v,w), the metric dual of psi(u,v,w,.)."""
    tmp = interior(w, interior(v, interior(u, g2.psi)))
    return Vector([tmp.coeffs.get((k,), Q0) for k in range(1, DIM + 1)])


def associator_cross_expression(u, v, w, g2):
    """The cross-product expression for chi in the structure's convention."""
    uvw = cross(u, cross(v, w, g2), g2)
    base = (-1) * uvw - u.dot(v) * w + u.dot(w) * v
    return base if g2.sign == 1 else (-1) * base


def project_two_forms(beta, g2):
    """Split a 2-form into its 7- and 14-dimensional pieces.

    beta7 lies in span{X -| phi}, beta14 wedges to zero against psi; the
    seven coefficients of beta7 are found by an exact solve in Omega^6.
    """
    if beta.dim != DIM or beta.degree != 2:
        raise ValueError("project_two_forms expects a 2-form in dimension 7")
    generators = [interior(Vector.basis(DIM, i), g2.phi) for i in range(1, DIM + 1)]
    six_keys = list(combinations(range(1, DIM + 1), 6))
    cols = []
    for gen in generators:
        w = wedge(gen, g2.psi)
        cols.append([w.coeffs.get(k, Q0) for k in six_keys])
    target_w = wedge(beta, g2.psi)
    target = [target_w.coeffs.get(k, Q0) for k in six_keys]
    x = linalg.solve(linalg.transpose(cols), target)
    beta7 = KForm.zero(DIM, 2)
    for xi, gen in zip(x, generators):
        beta7 = beta7 + xi * gen
    beta14 = beta - beta7
    return beta7, beta14


def project_three_forms(eta, g2):
    """Split a 3-form into the 1-, 7- and 27-dimensional pieces."""
    if eta.dim != DIM or eta.degree != 3:
        raise ValueError("project_three_forms expects a 3-form in dimension 7")
    phi = g2.phi
    eta1 = Fraction(form_inner(eta, phi), form_inner(phi, phi)) * phi
    generators = [interior(Vector.basis(DIM, i), g2.psi) for i in range(1, DIM + 1)]
    gram = [[form_inner(a, b) for b in generators] for a in generators]
    rhs = [form_inner(eta, b) for b in generators]
    x = linalg.solve(gram, rhs)
    eta7 = KForm.zero(DIM, 3)
    for xi, gen in zip(x, generators):
        eta7 = eta7 + xi * gen
    eta27 = eta - eta1 - eta7
    return eta1, eta7, eta27


def symmetric_traceless_basis():
    """Basis of symmetric traceless 7x7 matrices (27 elements)."""
    basis = []
    for i in range(DIM - 1):
        m = linalg.zeros(DIM, DIM)
        m[i][i] = Fraction(1)
        m[DIM - 1][DIM - 1] = Fraction(-1)
        basis.append(m)
    for i in range(DIM):
        for j in range(i + 1, DIM):
            m = linalg.zeros(DIM, DIM)
            m[i][j] = Fraction(1)
            m[j][i] = Fraction(1)
            basis.append(m)
    return basis


def symmetric_to_three_form(h, g2):
    """The 3-form with components sum_l h_al phi_lbc + h_bl phi_lca + h_cl phi_lab."""
    phi = g2.phi
    out = {}
    for a, b, c in combinations(range(1, DIM + 1), 3):
        val = Q0
        for l in range(1, DIM + 1):
            val += (
                h[a - 1][l - 1] * phi[(l, b, c)]
                + h[b - 1][l - 1] * phi[(l, c, a)]
                + h[c - 1][l - 1] * phi[(l, a, b)]
            )
        if val != 0:
            out[(a, b, c)] = val
    return KForm(DIM, 3, out)


def three_form_to_symmetric(eta, g2):
    """Recover the symmetric traceless matrix parametrising a 27-piece 3-form.

    Raises ValueError when eta is not in the 27-dimensional module.
    """
    basis = symmetric_traceless_basis()
    keys = list(combinations(range(1, DIM + 1), 3))
    cols = []
    for m in basis:
        f = symmetric_to_three_form(m, g2)
        cols.append([f.coeffs.get(k, Q0) for k in keys])
    target = [eta.coeffs.get(k, Q0) for k in keys]
    x = linalg.solve(linalg.transpose(cols), target)
    h = linalg.zeros(DIM, DIM)
    for xi, m in zip(x, basis):
        h = linalg.mat_add(h, linalg.mat_scale(xi, m))
    return h


def model_identities(g2):
    """Exact contraction identities of psi against itself.

    Returns a dict with the full four-fold contraction (168 for any
    compatible structure) and the 7x7 triple-contraction matrix (24 g).
    """
    psi = g2.psi
    rng = range(1, DIM + 1)
    full = Q0
    for key, c in psi.coeffs.items():
        # each sorted coefficient contributes 4! identical squares
        full += 24 * c * c
    triple = linalg.zeros(DIM, DIM)
    for r in rng:
        for a in rng:
            total = Q0
            for s, t, u in combinations(rng, 3):
                total += 6 * psi[(r, s, t, u)] * psi[(a, s, t, u)]
            triple[r - 1][a - 1] = total
    return {"full_contraction": full, "triple_contraction": triple}


def convention_relation_check():
    """Pulling back the plus model by the swap matrix gives the minus model."""
    plus = KForm(DIM, 3, PHI_PLUS_TERMS)
    minus = KForm(DIM, 3, PHI_MINUS_TERMS)
    return pullback(plus, CONVENTION_SWAP) == minus
