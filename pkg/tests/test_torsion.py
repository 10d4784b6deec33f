from fractions import Fraction

from g2weitz import linalg
from g2weitz.exterior import KForm, hodge, wedge
from g2weitz.notation import parse_form
from g2weitz.torsion import (
    FGLabel,
    TorsionData,
    classify,
    full_torsion_from_forms,
    full_torsion_from_nabla_phi,
    nabla_psi_check,
    torsion_forms,
)

SOLV_T = [
    [0, Fraction(1, 2), 0, 0, 0, 0, 0],
    [Fraction(-1, 2), 0, 0, 0, 0, 0, 0],
    [0, 0, 0, Fraction(1, 2), 0, 0, 0],
    [0, 0, Fraction(-1, 2), 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 2, 0],
    [0, 0, 0, 0, -2, 0, 0],
    [0, 0, 0, 0, 0, 0, 0],
]


def test_flat_torsion_vanishes(flat):
    td = flat.td
    assert td.tau0 == 0
    assert td.tau1.is_zero() and td.tau2.is_zero() and td.tau3.is_zero()
    assert linalg.is_zero_matrix(flat.T)
    assert classify(td).label is FGLabel.TORSION_FREE


def test_solvmanifold_torsion_forms(solv):
    td = solv.td
    assert td.tau0 == 0
    assert td.tau3.is_zero()
    assert td.tau1 == parse_form("-1/3*e7", 7)
    assert td.tau2 == parse_form("-5/3*e12-5/3*e34-10/3*e56", 7)
    assert classify(td).label is FGLabel.LOCALLY_CONFORMAL_CALIBRATED


def test_solvmanifold_full_torsion(solv):
    assert linalg.mat_eq(solv.T, linalg.mat(SOLV_T))
    # row 7 vanishes
    assert all(x == 0 for x in solv.T[6])


def test_oracle_equivalence_on_all_geometries(flat, n28, solv):
    for geo in (flat, n28, solv):
        other = full_torsion_from_nabla_phi(geo.L, geo.G, geo.g2)
        assert linalg.mat_eq(geo.T, other)
        assert nabla_psi_check(geo.L, geo.G, geo.g2, geo.T)


def test_nabla_psi_check_rejects_transposed_torsion(solv):
    transposed = linalg.transpose(solv.T)
    assert not nabla_psi_check(solv.L, solv.G, solv.g2, transposed)


def test_coupled_product_torsion(n28):
    td = n28.td
    assert td.tau0 == 0
    assert td.tau3.is_zero()
    assert td.tau1 == parse_form("1/3*e7", 7)
    assert classify(td).label is FGLabel.LOCALLY_CONFORMAL_CALIBRATED


def test_reassembly_of_defining_equations(solv):
    from g2weitz.liealgebra import ce_differential

    td, g2 = solv.td, solv.g2
    dphi = ce_differential(solv.L, g2.phi)
    dpsi = ce_differential(solv.L, g2.psi)
    assert dphi == td.tau0 * g2.psi + 3 * wedge(td.tau1, g2.phi) + hodge(td.tau3)
    assert dpsi == 4 * wedge(td.tau1, g2.psi) + hodge(td.tau2)


def test_nearly_parallel_assembled_torsion(flat):
    c = Fraction(4)
    td = TorsionData(
        tau0=c,
        tau1=KForm.zero(7, 1),
        tau2=KForm.zero(7, 2),
        tau3=KForm.zero(7, 3),
    )
    T = full_torsion_from_forms(td, flat.g2)
    assert linalg.mat_eq(T, linalg.mat_scale(c / 4, linalg.identity(7)))
    assert classify(td).label is FGLabel.NEARLY_PARALLEL


def test_classify_branches(flat):
    zero1, zero2, zero3 = KForm.zero(7, 1), KForm.zero(7, 2), KForm.zero(7, 3)
    td = TorsionData(Fraction(0), zero1, zero2, zero3)
    assert classify(td).label is FGLabel.TORSION_FREE
    td = TorsionData(Fraction(2), parse_form("e7", 7), zero2, zero3)
    assert classify(td).label is FGLabel.GENERIC
    td = TorsionData(Fraction(0), parse_form("e7", 7), zero2, zero3)
    assert classify(td).label is FGLabel.LOCALLY_CONFORMAL_CALIBRATED
    assert classify(td).witness is td


def test_tau2_membership(solv):
    assert wedge(solv.td.tau2, solv.g2.psi).is_zero()


def test_tau1_two_form_avatar(solv):
    # contribution of tau1 to T through phi: (tau1)_l phi_{lab}
    g2, td = solv.g2, solv.td
    expected = KForm.zero(7, 2)
    for l in range(1, 8):
        c = td.tau1[(l,)]
        if c:
            from g2weitz.exterior import Vector, interior

            expected = expected + c * interior(Vector.basis(7, l), g2.phi)
    t_from_tau1 = [[expected[(a, b)] for b in range(1, 8)] for a in range(1, 8)]
    half_tau2 = [[Fraction(1, 2) * td.tau2[(a, b)] for b in range(1, 8)] for a in range(1, 8)]
    assert linalg.mat_eq(solv.T, linalg.mat_sub(t_from_tau1, half_tau2))
