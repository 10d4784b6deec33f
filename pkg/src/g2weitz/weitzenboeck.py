"""Dirac-type operators on normal sections and their Weitzenbock identity.

Operators act on first-order jets of normal sections: a value (four
components in the adapted normal frame) together with the three covariant
derivatives along the oriented tangent frame.  On a Lie group all invariant
sections are closed under every operator here, so each operator also has a
4x4 rational matrix avatar obtained by feeding it the connection-induced
jets of the invariant basis sections; second-order compositions are matrix
products of first-order avatars.

The central identity, checked exactly by weitzenboeck_residual, is

    DA^2 = nabla*nabla + curvterm + P1 + P2 + P3,

where curvterm = -sum_{i<j} (t_i x t_j) x Rperp(t_i,t_j) sigma is built
directly from the normal curvature and P1, P2, P3 are the first-order
torsion corrections.
"""

from fractions import Fraction

from . import linalg
from .associative import (
    DefectTensorData,
    defect_sum_matrix,
    normal_projection,
    op_B,
    partial_ricci,
    shape_data,
)
from .exterior import Vector
from .g2algebra import DIM, cross

Q0 = Fraction(0)
Q1 = Fraction(1)


class NormalJet:
    """Value and first covariant derivatives of a normal section."""

    __slots__ = ("value", "derivs")

    def __init__(self, value, derivs):
        self.value = [Fraction(x) for x in value]
        self.derivs = [[Fraction(x) for x in row] for row in derivs]
        if len(self.value) != 4 or len(self.derivs) != 3 or any(len(r) != 4 for r in self.derivs):
            raise ValueError("a normal jet has a 4-vector value and a 3x4 derivative table")

    @classmethod
    def zero(cls):
        return cls([0] * 4, [[0] * 4 for _ in range(3)])


def ambient(frame, coeffs):
    """Normal-frame coefficients as an ambient Vector."""
    out = [Q0] * DIM
    for c, k in zip(coeffs, frame.normal):
        out[k - 1] = c
    return Vector(out)


def normal_coeffs(frame, v):
    """Ambient Vector to normal-frame coefficients (tangent part dropped)."""
    return [v[k] for k in frame.normal]


def _t_bilinear(T, x, y):
    """T(x, y) for ambient Vectors."""
    total = Q0
    for i in range(1, DIM + 1):
        xi = x[i]
        if xi == 0:
            continue
        row = T[i - 1]
        for j in range(1, DIM + 1):
            yj = y[j]
            if yj != 0:
                total += xi * row[j - 1] * yj
    return total


def dirac_plain(jet, frame, g2):
    """D sigma = sum_i t_i x nabla_i sigma."""
    t = frame.tangent_vectors()
    out = Vector.zero(DIM)
    for i in range(3):
        out = out + cross(t[i], ambient(frame, jet.derivs[i]), g2)
    return out


def fueter_dirac(jet, T, frame, g2):
    """DA sigma = D sigma + sum_k T(sigma, eta_k) eta_k."""
    sigma = ambient(frame, jet.value)
    out = dirac_plain(jet, frame, g2)
    for k in frame.normal:
        c = _t_bilinear(T, sigma, Vector.basis(DIM, k))
        if c != 0:
            out = out + c * Vector.basis(DIM, k)
    return out


def p1(jet, T, frame, g2):
    """First torsion correction.

    sum_{i,j} T(t_i,t_i) t_j x nabla_j sigma - T(t_j,t_i) t_j x nabla_i sigma
    - 2 sum_{(i,j,k) even} C(t_i,t_j) nabla_k sigma, with C the antisymmetric
    part of T restricted to the oriented tangent frame.
    """
    t = frame.tangent_vectors()
    derivs = [ambient(frame, row) for row in jet.derivs]
    trace = sum((_t_bilinear(T, ti, ti) for ti in t), Q0)
    out = Vector.zero(DIM)
    if trace != 0:
        for j in range(3):
            out = out + trace * cross(t[j], derivs[j], g2)
    for j in range(3):
        for i in range(3):
            tji = _t_bilinear(T, t[j], t[i])
            if tji != 0:
                out = out - tji * cross(t[j], derivs[i], g2)
    for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        c = Fraction(1, 2) * (_t_bilinear(T, t[i], t[j]) - _t_bilinear(T, t[j], t[i]))
        if c != 0:
            out = out - 2 * c * derivs[k]
    return out


def p2(jet, T, nablaT, frame, g2):
    """Second torsion correction.

    sum_{i,l} ((nabla_i T)(sigma, eta_l) + T(nabla_i sigma, eta_l)) t_i x eta_l.
    """
    t = frame.tangent_vectors()
    sigma = ambient(frame, jet.value)
    out = Vector.zero(DIM)
    for i in range(3):
        deriv = ambient(frame, jet.derivs[i])
        for l in frame.normal:
            el = Vector.basis(DIM, l)
            coeff = _t_bilinear(T, deriv, el) + _nabla_t(nablaT, t[i], sigma, l)
            if coeff != 0:
                out = out + coeff * cross(t[i], el, g2)
    return out


def _nabla_t(nablaT, x, y, l):
    """(nabla_x T)(y, e_l) from the rank-3 derivative table."""
    total = Q0
    for (i, k, m), v in nablaT.items():
        if m != l:
            continue
        c = x[i] * y[k]
        if c != 0:
            total += c * v
    return total


def p3(jet, T, frame, g2):
    """Third torsion correction.

    sum_{k,l} (T(sigma, eta_l) + sum_i phi(t_i, nabla_i sigma, eta_l)) T_{lk} eta_k.
    """
    t = frame.tangent_vectors()
    sigma = ambient(frame, jet.value)
    out = Vector.zero(DIM)
    for l in frame.normal:
        el = Vector.basis(DIM, l)
        bracket = _t_bilinear(T, sigma, el)
        for i in range(3):
            bracket += g2.phi(t[i], ambient(frame, jet.derivs[i]), el)
        if bracket == 0:
            continue
        for k in frame.normal:
            tlk = T[l - 1][k - 1]
            if tlk != 0:
                out = out + bracket * tlk * Vector.basis(DIM, k)
    return out


# -- invariant-section machinery ---------------------------------------------


class InvariantGeometry:
    """All matrix avatars for one (algebra, structure, frame, torsion) tuple."""

    def __init__(self, L, G, g2, frame, T):
        from .liealgebra import curvature, nabla_invariant_tensor

        self.L, self.G, self.g2, self.frame, self.T = L, G, g2, frame, T
        self.nablaT = nabla_invariant_tensor(G, T)
        self.R = curvature(L, G)
        self.t = frame.tangent_vectors()

    def deriv_matrix(self, direction):
        """Matrix of sigma -> (nabla_direction sigma)^perp on invariant sections."""
        cols = []
        for k in self.frame.normal:
            cov = self.G.nabla(direction, Vector.basis(DIM, k))
            cols.append(normal_coeffs(self.frame, cov))
        return linalg.transpose(cols)

    def jet_of(self, k):
        """Connection-induced jet of the invariant basis section eta_k."""
        value = [Q1 if m == k else Q0 for m in self.frame.normal]
        derivs = []
        for ti in self.t:
            cov = self.G.nabla(ti, Vector.basis(DIM, k))
            derivs.append(normal_coeffs(self.frame, cov))
        return NormalJet(value, derivs)

    def matrix_of_jet_op(self, op):
        cols = []
        for k in self.frame.normal:
            out = op(self.jet_of(k))
            cols.append(normal_coeffs(self.frame, out))
        return linalg.transpose(cols)

    def matrix_of_vector_op(self, op):
        cols = []
        for k in self.frame.normal:
            out = op(Vector.basis(DIM, k))
            cols.append(normal_coeffs(self.frame, out))
        return linalg.transpose(cols)

    def cross_matrix(self, v):
        """Matrix of sigma -> (v x sigma)^perp on invariant sections."""
        return self.matrix_of_vector_op(
            lambda sigma: normal_projection(self.frame, cross(v, sigma, self.g2))
        )

    def laplacian_matrix(self):
        """nabla*nabla = -sum_i nabla_i nabla_i + nabla_{(nabla_i t_i)^T}."""
        out = linalg.zeros(4, 4)
        correction = Vector.zero(DIM)
        for ti in self.t:
            m = self.deriv_matrix(ti)
            out = linalg.mat_sub(out, linalg.mat_mul(m, m))
            cov = self.G.nabla(ti, ti)
            tangential = Vector.zero(DIM)
            for tj in self.t:
                tangential = tangential + cov.dot(tj) * tj
            correction = correction + tangential
        if not correction.is_zero():
            out = linalg.mat_add(out, self.deriv_matrix(correction))
        return out

    def normal_curvature_matrix(self, u, v):
        """Rperp(u, v) = [nabla_u, nabla_v] - nabla_{[u,v]} on invariant sections."""
        mu, mv = self.deriv_matrix(u), self.deriv_matrix(v)
        out = linalg.mat_sub(linalg.mat_mul(mu, mv), linalg.mat_mul(mv, mu))
        br = self.L.bracket(u, v)
        if not br.is_zero():
            out = linalg.mat_sub(out, self.deriv_matrix(br))
        return out

    def curvature_term_matrix(self):
        """-sum_{i<j} (t_i x t_j) x Rperp(t_i, t_j) sigma."""
        out = linalg.zeros(4, 4)
        for i in range(3):
            for j in range(i + 1, 3):
                tij = cross(self.t[i], self.t[j], self.g2)
                rp = self.normal_curvature_matrix(self.t[i], self.t[j])
                out = linalg.mat_sub(out, linalg.mat_mul(self.cross_matrix(tij), rp))
        return out


OPERATOR_IDS = (
    "Dplain",
    "DA",
    "P1",
    "P2",
    "P3",
    "J",
    "Dc",
    "nabla7",
    "lapl",
    "curvterm",
    "ricciPartial",
    "opB",
)


def invariant_matrix(L, G, g2, frame, T, op_id):
    """4x4 matrix of the named operator on invariant normal sections."""
    geo = InvariantGeometry(L, G, g2, frame, T)
    return _matrix(geo, op_id)


def _matrix(geo, op_id):
    frame, g2, T = geo.frame, geo.g2, geo.T
    if op_id == "Dplain":
        return geo.matrix_of_jet_op(lambda jet: dirac_plain(jet, frame, g2))
    if op_id == "DA":
        return geo.matrix_of_jet_op(lambda jet: fueter_dirac(jet, T, frame, g2))
    if op_id == "P1":
        return geo.matrix_of_jet_op(lambda jet: p1(jet, T, frame, g2))
    if op_id == "P2":
        return geo.matrix_of_jet_op(lambda jet: p2(jet, T, geo.nablaT, frame, g2))
    if op_id == "P3":
        return geo.matrix_of_jet_op(lambda jet: p3(jet, T, frame, g2))
    if op_id == "J":
        return geo.cross_matrix(Vector.basis(DIM, frame.tangent[2]))
    if op_id == "nabla7":
        return geo.deriv_matrix(Vector.basis(DIM, frame.tangent[2]))
    if op_id == "Dc":
        d = _matrix(geo, "Dplain")
        return linalg.mat_sub(d, linalg.mat_mul(_matrix(geo, "J"), _matrix(geo, "nabla7")))
    if op_id == "lapl":
        return geo.laplacian_matrix()
    if op_id == "curvterm":
        return geo.curvature_term_matrix()
    if op_id == "ricciPartial":
        return geo.matrix_of_vector_op(lambda sigma: partial_ricci(geo.R, frame, sigma))
    if op_id == "opB":
        S, B = shape_data(geo.L, geo.G, frame)
        return geo.matrix_of_vector_op(lambda sigma: op_B(S, B, g2, frame, sigma))
    raise ValueError(f"unknown operator id {op_id!r}")


def all_invariant_matrices(L, G, g2, frame, T):
    geo = InvariantGeometry(L, G, g2, frame, T)
    return {op_id: _matrix(geo, op_id) for op_id in OPERATOR_IDS}


def weitzenboeck_residual(L, G, g2, frame, T):
    """DA.DA - (lapl + curvterm + P1 + P2 + P3); zero when the identity holds."""
    geo = InvariantGeometry(L, G, g2, frame, T)
    da = _matrix(geo, "DA")
    rhs = _matrix(geo, "lapl")
    for op_id in ("curvterm", "P1", "P2", "P3"):
        rhs = linalg.mat_add(rhs, _matrix(geo, op_id))
    return linalg.mat_sub(linalg.mat_mul(da, da), rhs)


def curvature_term_decomposition_residual(L, G, g2, frame, T):
    """curvterm - (ricciPartial + opB - defect-sum); zero when the
    alternative expression for the curvature term holds."""
    geo = InvariantGeometry(L, G, g2, frame, T)
    data = DefectTensorData(L, G, g2, T)
    rhs = linalg.mat_add(_matrix(geo, "ricciPartial"), _matrix(geo, "opB"))
    rhs = linalg.mat_sub(rhs, defect_sum_matrix(data, frame))
    return linalg.mat_sub(_matrix(geo, "curvterm"), rhs)


def nearly_parallel_torsion(tau0):
    """T = tau0/4 g."""
    q = Fraction(tau0) / 4
    return [[q if i == j else Q0 for j in range(DIM)] for i in range(DIM)]


def nearly_parallel_identity(jet, tau0, g2, frame):
    """Residual of (P1 + P2 + P3) - tau0 D - tau0^2/16 on a free jet.

    Torsion data is the nearly parallel one, T = tau0/4 g with nabla T = 0;
    the residual vanishes identically in the jet and in tau0.
    """
    tau0 = Fraction(tau0)
    T = nearly_parallel_torsion(tau0)
    total = p1(jet, T, frame, g2)
    total = total + p2(jet, T, {}, frame, g2)
    total = total + p3(jet, T, frame, g2)
    total = total - tau0 * dirac_plain(jet, frame, g2)
    total = total - (tau0 * tau0 / 16) * ambient(frame, jet.value)
    return total


def nearly_parallel_defect_sum(tau0, g2, frame):
    """Matrix of the cyclic defect sum under T = tau0/4 g, nabla T = 0."""
    T = nearly_parallel_torsion(tau0)

    class _Data:
        pass

    data = _Data()
    data.g2 = g2
    data.T = T
    from .associative import _nabla_psi_from_torsion

    data.nabla_psi = _nabla_psi_from_torsion(g2, T)
    data.nabla_T = {}
    data.nabla_T_entry = lambda i, k, l: Q0
    return defect_sum_matrix(data, frame)


def support_identity(L, G, g2, frame, T):
    """Matrix of Dc J + J Dc - 4 Id on invariant sections."""
    geo = InvariantGeometry(L, G, g2, frame, T)
    dc = _matrix(geo, "Dc")
    j = _matrix(geo, "J")
    anti = linalg.mat_add(linalg.mat_mul(dc, j), linalg.mat_mul(j, dc))
    return linalg.mat_sub(anti, linalg.mat_scale(4, linalg.identity(4)))


def rigidity_criterion_np(k_scalar, tau0, f_minus_lower):
    """Nearly parallel rigidity test: bound >= -(k/4 - 3 tau0^2 / 16)."""
    k_scalar, tau0, f_minus_lower = map(Fraction, (k_scalar, tau0, f_minus_lower))
    return f_minus_lower >= -(k_scalar / 4 - Fraction(3, 16) * tau0 * tau0)


def lcc_certificate(L, G, g2, frame, T):
    """Kernel certificate for the twisted Dirac operator on invariant sections.

    Reports the quoted first-order identity
    DA^2 = lapl + 11/4 Id + 2 J D - 3 nabla_7 together with its honest
    counterpart solved from the computed matrices, the coefficient obtained
    after substituting D sigma = -1/2 J sigma on the kernel, and the exact
    kernel of the DA matrix.
    """
    geo = InvariantGeometry(L, G, g2, frame, T)
    da = _matrix(geo, "DA")
    lapl = _matrix(geo, "lapl")
    dplain = _matrix(geo, "Dplain")
    j = _matrix(geo, "J")
    n7 = _matrix(geo, "nabla7")
    da2 = linalg.mat_mul(da, da)
    jd = linalg.mat_mul(j, dplain)

    quoted_rhs = linalg.mat_add(lapl, linalg.mat_scale(Fraction(11, 4), linalg.identity(4)))
    quoted_rhs = linalg.mat_add(quoted_rhs, linalg.mat_scale(2, jd))
    quoted_rhs = linalg.mat_sub(quoted_rhs, linalg.mat_scale(3, n7))
    quoted_residual = linalg.mat_sub(da2, quoted_rhs)

    # solve DA^2 - lapl - 2 J D + 3 nabla7 = c Id when proportional to Id
    delta = linalg.mat_sub(da2, lapl)
    delta = linalg.mat_sub(delta, linalg.mat_scale(2, jd))
    delta = linalg.mat_add(delta, linalg.mat_scale(3, n7))
    constant = delta[0][0]
    if not linalg.mat_eq(delta, linalg.mat_scale(constant, linalg.identity(4))):
        constant = None

    # torsion part of DA; substitution D = -1/2 J on the kernel needs it to be J/2
    torsion_part = linalg.mat_sub(da, dplain)
    substitution_valid = linalg.mat_eq(torsion_part, linalg.mat_scale(Fraction(1, 2), j))

    kernel = linalg.nullspace(da)
    degenerate = all(x == 0 for row in T for x in row)
    return {
        "quoted_identity_residual": quoted_residual,
        "quoted_identity_holds": linalg.is_zero_matrix(quoted_residual),
        "quoted_constant": Fraction(11, 4),
        "assembled_constant": constant,
        "substitution_valid": substitution_valid,
        "quoted_rigidity_coefficient": Fraction(15, 4),
        "assembled_rigidity_coefficient": None if constant is None else constant + 1,
        "kernel_dimension": len(kernel),
        "kernel_basis": kernel,
        "torsion_degenerate": degenerate,
    }
