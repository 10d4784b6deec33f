"""Intrinsic torsion of an invariant G2-structure.

The four torsion forms are the components of the coframe differentials in
the irreducible decomposition,

    d phi = tau0 psi + 3 tau1 ^ phi + *tau3,
    d psi = 4 tau1 ^ psi + *tau2,

with tau2 in the 14-module and tau3 in the 27-module.  The full torsion
tensor is assembled two independent ways: once from the forms via

    T = tau0/4 g - h(tau3) + m(tau1) - 1/2 m(tau2),

where m(tau1)_{ab} = (tau1)_l phi_{lab}, m(tau2)_{ab} = (tau2)_{ab} and
h(tau3) is the symmetric matrix parametrising tau3, and once by solving

    nabla_l phi_{abc} = T_{lm} psi_{mabc}

for T with nabla taken from the connection table.  Agreement of the two is
the module's built-in oracle.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Optional

from . import linalg
from .exterior import KForm, hodge, wedge, form_inner
from .g2algebra import DIM, three_form_to_symmetric, project_three_forms, project_two_forms
from .liealgebra import ce_differential

Q0 = Fraction(0)


class FGLabel(Enum):
    TORSION_FREE = "torsion_free"
    NEARLY_PARALLEL = "nearly_parallel"
    LOCALLY_CONFORMAL_CALIBRATED = "locally_conformal_calibrated"
    GENERIC = "generic"


@dataclass
class TorsionData:
    tau0: Fraction
    tau1: KForm
    tau2: KForm
    tau3: KForm
    T: Optional[list] = None


@dataclass
class FGClass:
    label: FGLabel
    witness: TorsionData


class TorsionExtractionError(ValueError):
    """Raised when (d phi, d psi) are not consistent with a G2-structure."""


def nabla_invariant_form(G, l, alpha):
    """nabla_{e_l} of an invariant form, by Gamma-contraction on each slot."""
    n = alpha.dim
    k = alpha.degree
    out = {}
    for idx in combinations(range(1, n + 1), k):
        total = Q0
        for pos in range(k):
            for m in range(1, n + 1):
                g = G.gamma(l, idx[pos], m)
                if g != 0:
                    val = alpha[idx[:pos] + (m,) + idx[pos + 1 :]]
                    if val != 0:
                        total -= g * val
        if total != 0:
            out[idx] = total
    return KForm(n, k, out)


def torsion_forms(L, g2):
    """Extract (tau0, tau1, tau2, tau3) from the structure equations.

    tau1 is recovered twice, from the 7-components of d phi and of d psi; a
    mismatch (or a membership failure of tau2/tau3) signals that the input
    is not the invariant structure of a G2-compatible frame and raises
    TorsionExtractionError.
    """
    phi, psi = g2.phi, g2.psi
    dphi = ce_differential(L, phi)
    dpsi = ce_differential(L, psi)

    tau0 = Fraction(form_inner(dphi, psi), 7)

    # 7-component of d phi through the Hodge transport of the 3-form split
    _, part7, _ = project_three_forms(hodge(dphi), g2)
    dphi7 = hodge(part7)
    tau1 = _solve_one_form(lambda a: 3 * wedge(a, phi), dphi7, "tau1 from d phi")

    beta7, _ = project_two_forms(hodge(dpsi), g2)
    dpsi7 = hodge(beta7)
    tau1_bis = _solve_one_form(lambda a: 4 * wedge(a, psi), dpsi7, "tau1 from d psi")
    if tau1 != tau1_bis:
        raise TorsionExtractionError(
            f"inconsistent tau1: d phi gives {tau1!r}, d psi gives {tau1_bis!r}"
        )

    tau3 = hodge(dphi - tau0 * psi - 3 * wedge(tau1, phi))
    part1, part7, _ = project_three_forms(tau3, g2)
    if not (part1.is_zero() and part7.is_zero()):
        raise TorsionExtractionError("tau3 is not in the 27-dimensional module")

    tau2 = hodge(dpsi - 4 * wedge(tau1, psi))
    if not wedge(tau2, psi).is_zero():
        raise TorsionExtractionError("tau2 is not in the 14-dimensional module")

    # exact reassembly of both defining equations
    if dphi != tau0 * psi + 3 * wedge(tau1, phi) + hodge(tau3):
        raise TorsionExtractionError("d phi does not reassemble from the torsion forms")
    if dpsi != 4 * wedge(tau1, psi) + hodge(tau2):
        raise TorsionExtractionError("d psi does not reassemble from the torsion forms")

    return TorsionData(tau0=tau0, tau1=tau1, tau2=tau2, tau3=tau3)


def _solve_one_form(image, target, what):
    """Solve image(a) = target for a 1-form a; image is linear and injective."""
    dim = target.dim
    keys = list(combinations(range(1, dim + 1), target.degree))
    cols = []
    for i in range(1, dim + 1):
        f = image(KForm.basis(dim, (i,)))
        cols.append([f.coeffs.get(k, Q0) for k in keys])
    rhs = [target.coeffs.get(k, Q0) for k in keys]
    try:
        x = linalg.solve(linalg.transpose(cols), rhs)
    except ValueError as exc:
        raise TorsionExtractionError(f"{what}: {exc}") from exc
    return KForm(dim, 1, {(i,): c for i, c in enumerate(x, start=1)})


def full_torsion_from_forms(td, g2):
    """Assemble T from the four torsion forms."""
    phi = g2.phi
    n = DIM
    t = linalg.zeros(n, n)
    quarter_tau0 = td.tau0 / 4
    h = None
    if not td.tau3.is_zero():
        h = three_form_to_symmetric(td.tau3, g2)
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            val = Q0
            if a == b:
                val += quarter_tau0
            if h is not None:
                val -= h[a - 1][b - 1]
            # tau1 as a 2-form through phi
            for l in range(1, n + 1):
                c = td.tau1[(l,)]
                if c != 0:
                    val += c * phi[(l, a, b)]
            val -= Fraction(1, 2) * td.tau2[(a, b)]
            if val != 0:
                t[a - 1][b - 1] = val
    return t


def full_torsion_from_nabla_phi(L, G, g2):
    """Recover T from nabla phi; independent oracle for the forms route."""
    phi, psi = g2.phi, g2.psi
    n = DIM
    keys = list(combinations(range(1, n + 1), 3))
    cols = []
    for m in range(1, n + 1):
        cols.append([psi[(m,) + k] for k in keys])
    matrix = linalg.transpose(cols)
    t = linalg.zeros(n, n)
    for l in range(1, n + 1):
        np_l = nabla_invariant_form(G, l, phi)
        rhs = [np_l.coeffs.get(k, Q0) for k in keys]
        try:
            row = linalg.solve(matrix, rhs)
        except ValueError as exc:
            raise TorsionExtractionError(
                f"nabla_{l} phi is not a psi-contraction: {exc}"
            ) from exc
        t[l - 1] = row
    return t


def classify(td):
    """Fernandez-Gray class from the vanishing pattern of the torsion forms."""
    z0 = td.tau0 == 0
    z1 = td.tau1.is_zero()
    z2 = td.tau2.is_zero()
    z3 = td.tau3.is_zero()
    if z0 and z1 and z2 and z3:
        label = FGLabel.TORSION_FREE
    elif not z0 and z1 and z2 and z3:
        label = FGLabel.NEARLY_PARALLEL
    elif z0 and z3:
        label = FGLabel.LOCALLY_CONFORMAL_CALIBRATED
    else:
        label = FGLabel.GENERIC
    return FGClass(label=label, witness=td)


def nabla_psi_check(L, G, g2, T):
    """Exact check of nabla_l psi_{rstu} = -T_{lr} phi_{stu} + T_{ls} phi_{rtu}
    - T_{lt} phi_{rsu} + T_{lu} phi_{rst} for all index combinations."""
    phi, psi = g2.phi, g2.psi
    n = DIM
    for l in range(1, n + 1):
        np_l = nabla_invariant_form(G, l, psi)
        for r, s, t, u in combinations(range(1, n + 1), 4):
            lhs = np_l[(r, s, t, u)]
            rhs = (
                -T[l - 1][r - 1] * phi[(s, t, u)]
                + T[l - 1][s - 1] * phi[(r, t, u)]
                - T[l - 1][t - 1] * phi[(r, s, u)]
                + T[l - 1][u - 1] * phi[(r, s, t)]
            )
            if lhs != rhs:
                return False
    return True


def nabla_psi_table(G, g2):
    """All nabla_l psi as forms, indexed by l (used by the curvature-defect tensor)."""
    return {l: nabla_invariant_form(G, l, g2.psi) for l in range(1, DIM + 1)}
