from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from g2weitz.exterior import KForm, Vector, form_inner, hodge, interior, wedge
from g2weitz.g2algebra import PHI_PLUS_TERMS

PHI = KForm(7, 3, PHI_PLUS_TERMS)
PSI = hodge(PHI)

PSI_TERMS = {
    (4, 5, 6, 7): 1,
    (2, 3, 6, 7): 1,
    (2, 3, 4, 5): 1,
    (1, 3, 5, 7): 1,
    (1, 3, 4, 6): -1,
    (1, 2, 5, 6): -1,
    (1, 2, 4, 7): -1,
}


def brute_wedge_top(a, b):
    """Independent top-degree wedge: explicit parity count on term pairs."""
    total = Fraction(0)
    for ia, ca in a.coeffs.items():
        for ib, cb in b.coeffs.items():
            if set(ia) & set(ib):
                continue
            perm = list(ia + ib)
            sign = 1
            for i in range(len(perm)):
                for j in range(i + 1, len(perm)):
                    if perm[i] > perm[j]:
                        sign = -sign
            total += sign * ca * cb
    return total


def rational_forms(dim, degree):
    keys = list(combinations(range(1, dim + 1), degree))
    coeff = st.fractions(
        min_value=Fraction(-4), max_value=Fraction(4), max_denominator=5
    )
    return st.lists(coeff, min_size=len(keys), max_size=len(keys)).map(
        lambda cs: KForm(dim, degree, dict(zip(keys, cs)))
    )


def test_wedge_basis_cases():
    e1, e2 = KForm.basis(7, (1,)), KForm.basis(7, (2,))
    assert wedge(e1, e2) == KForm.basis(7, (1, 2))
    e12 = KForm.basis(7, (1, 2))
    assert wedge(e12, e12).is_zero()


def test_phi_wedge_psi_is_seven_volumes():
    w = wedge(PHI, PSI)
    assert w == KForm.basis(7, tuple(range(1, 8)), 7)
    # independent brute-force expansion of all 7x7 term pairs
    assert brute_wedge_top(PHI, PSI) == 7


def test_interior_examples():
    e123 = KForm.basis(7, (1, 2, 3))
    assert interior(Vector.basis(7, 1), e123) == KForm.basis(7, (2, 3))
    assert interior(Vector.basis(7, 4), e123).is_zero()
    assert interior(Vector.basis(7, 1), PHI) == KForm(
        7, 2, {(2, 3): 1, (4, 5): 1, (6, 7): 1}
    )


def test_interior_squares_to_zero(rng):
    from conftest import random_fraction

    v = Vector([random_fraction(rng) for _ in range(7)])
    a = KForm(
        7,
        3,
        {k: random_fraction(rng) for k in combinations(range(1, 8), 3)},
    )
    assert interior(v, interior(v, a)).is_zero()


def test_interior_rejects_zero_forms():
    zero_form = KForm(7, 0, {(): 5})
    with pytest.raises(ValueError):
        interior(Vector.basis(7, 1), zero_form)


def test_hodge_model_form():
    assert PSI == KForm(7, 4, PSI_TERMS)


def test_hodge_of_one_is_volume():
    one = KForm(5, 0, {(): 1})
    assert hodge(one) == KForm.volume(5)


def test_hodge_square_sign_rule(rng):
    from conftest import random_fraction

    for dim in range(3, 8):
        for degree in range(0, dim + 1):
            coeffs = {
                k: random_fraction(rng) for k in combinations(range(1, dim + 1), degree)
            }
            a = KForm(dim, degree, coeffs)
            sign = (-1) ** (degree * (dim - degree))
            assert hodge(hodge(a)) == sign * a


def test_form_inner_examples():
    e12 = KForm.basis(7, (1, 2))
    e13 = KForm.basis(7, (1, 3))
    assert form_inner(e12, e12) == 1
    assert form_inner(e12, e13) == 0
    assert form_inner(PHI, PHI) == 7
    assert sum(c * c for c in PHI.coeffs.values()) == 7


def test_form_inner_defining_relation(rng):
    from conftest import random_fraction

    for _ in range(5):
        a = KForm(7, 3, {k: random_fraction(rng) for k in combinations(range(1, 8), 3)})
        b = KForm(7, 3, {k: random_fraction(rng) for k in combinations(range(1, 8), 3)})
        assert wedge(a, hodge(b)) == form_inner(a, b) * KForm.volume(7)


@settings(max_examples=40, deadline=None)
@given(rational_forms(6, 2), rational_forms(6, 3))
def test_wedge_graded_anticommutative(a, b):
    assert wedge(a, b) == (-1) ** (a.degree * b.degree) * wedge(b, a)


@settings(max_examples=40, deadline=None)
@given(
    st.lists(
        st.fractions(min_value=Fraction(-3), max_value=Fraction(3), max_denominator=4),
        min_size=6,
        max_size=6,
    ),
    rational_forms(6, 2),
    rational_forms(6, 2),
)
def test_interior_is_an_antiderivation(comps, a, b):
    v = Vector(comps)
    lhs = interior(v, wedge(a, b))
    rhs = wedge(interior(v, a), b) + (-1) ** a.degree * wedge(a, interior(v, b))
    assert lhs == rhs


@settings(max_examples=40, deadline=None)
@given(rational_forms(7, 3), rational_forms(7, 3))
def test_hodge_is_an_isometry(a, b):
    assert form_inner(hodge(a), hodge(b)) == form_inner(a, b)


@settings(max_examples=40, deadline=None)
@given(rational_forms(5, 2), rational_forms(5, 2))
def test_results_stay_canonical(a, b):
    for out in (a + b, a - b, wedge(a, b), hodge(a), 3 * a):
        assert all(c != 0 for c in out.coeffs.values())
        assert all(idx == tuple(sorted(idx)) for idx in out.coeffs)


def test_unsorted_indices_normalise_with_parity():
    assert KForm.basis(7, (3, 1)) == -KForm.basis(7, (1, 3))
    assert KForm.basis(7, (2, 2)).is_zero()


def test_dimension_guards():
    with pytest.raises(ValueError):
        KForm(10, 1, {})
    with pytest.raises(ValueError):
        KForm(7, 8, {})
    with pytest.raises(ValueError):
        wedge(KForm.basis(7, (1,)), KForm.basis(6, (1,)))
    with pytest.raises(ValueError):
        form_inner(KForm.basis(7, (1,)), KForm.basis(7, (1, 2)))


def test_evaluation_is_antisymmetric():
    u, v, w = Vector.basis(7, 1), Vector.basis(7, 2), Vector.basis(7, 3)
    assert PHI(u, v, w) == 1
    assert PHI(v, u, w) == -1
    assert PHI(u, u, w) == 0
    assert PHI(u + v, v, w) == 1
