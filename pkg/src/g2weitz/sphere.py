"""Exact spectral bookkeeping for the twisted Dirac operator on the round 3-sphere.

The normal bundle of the associative 3-sphere is trivialised by parallel
sections, so the squared operator D^2 = nabla*nabla + 1 acts diagonally on
products of Laplace eigenfunctions with the parallel frame.  Everything here
is integer arithmetic: Laplace eigenvalues k(k+2) with multiplicity (k+1)^2,
D^2 eigenvalues (k+1)^2 with multiplicity 4(k+1)^2, and the signed Dirac
multiplicities in the two sign conventions,

    plus:   lambda+_0 = 0,  lambda+_k = k+2,    lambda+_{-k} = -k,
    minus:  lambda-_0 = 0,  lambda-_{-k} = -k-2, lambda-_k = k,

with m(lambda+_{-k}) = m(lambda-_k) = 2(k+1)(k+2) and
m(lambda+_k) = m(lambda-_{-k}) = 2k(k+1).
"""

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class SpectrumRow:
    k: int
    eigenvalue: Fraction
    multiplicity: int
    convention: str


def laplace_row(k):
    """(eigenvalue, multiplicity) of the Laplace operator on functions."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return k * (k + 2), (k + 1) ** 2


def dirac_square_row(k):
    """(eigenvalue, multiplicity) of D^2 on normal sections."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return (k + 1) ** 2, 4 * (k + 1) ** 2


def multiplicity_negative_branch(k):
    """m(lambda+_{-k}) = m(lambda-_k) = 2(k+1)(k+2)."""
    return 2 * (k + 1) * (k + 2)


def multiplicity_positive_branch(k):
    """m(lambda+_k) = m(lambda-_{-k}) = 2k(k+1)."""
    return 2 * k * (k + 1)


def dirac_multiplicity(k, convention="plus"):
    """The pair of signed spectrum rows at level k.

    Returns (negative-branch row, positive-branch row); at k = 0 the
    positive branch carries multiplicity zero and the eigenvalue 0 of the
    plus convention has total multiplicity 4.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if convention == "plus":
        ev_neg, ev_pos = Fraction(-k), Fraction(k + 2)
    elif convention == "minus":
        ev_neg, ev_pos = Fraction(-k - 2), Fraction(k)
    else:
        raise ValueError(f"unknown convention {convention!r}")
    if convention == "plus":
        neg = SpectrumRow(k, ev_neg, multiplicity_negative_branch(k), convention)
        pos = SpectrumRow(k, ev_pos, multiplicity_positive_branch(k), convention)
    else:
        # in the minus bookkeeping the 2(k+1)(k+2) branch sits at +k
        neg = SpectrumRow(k, ev_neg, multiplicity_positive_branch(k), convention)
        pos = SpectrumRow(k, ev_pos, multiplicity_negative_branch(k), convention)
    return neg, pos


def multiplicity_recursion_check(kmax):
    """Re-derive the closed form through the shifted-operator recursion.

    The recursion m(k+1) = 4(k+2)^2 - m(k) with base m(0) = 4 must
    reproduce 2(k+1)(k+2) for all k <= kmax.
    """
    if kmax < 1:
        raise ValueError("kmax must be at least 1")
    m = 4
    if m != multiplicity_negative_branch(0):
        return False
    for k in range(kmax):
        m = 4 * (k + 2) ** 2 - m
        if m != multiplicity_negative_branch(k + 1):
            return False
    return True


def deformation_dimension():
    """dim ker of the twisted Dirac operator: the multiplicity at lambda+_{-1}."""
    return multiplicity_negative_branch(1)
