import random
from fractions import Fraction

import pytest

from g2weitz.associative import check_associative
from g2weitz.geometry import bundled_path, load_geometry
from g2weitz.liealgebra import christoffel, curvature
from g2weitz.torsion import full_torsion_from_forms, torsion_forms


class Geometry:
    """A fully analysed bundled geometry, shared across test modules."""

    def __init__(self, name):
        self.L, self.g2, self.span = load_geometry(bundled_path(name))
        self.G = christoffel(self.L)
        self.R = curvature(self.L, self.G)
        self.td = torsion_forms(self.L, self.g2)
        self.T = full_torsion_from_forms(self.td, self.g2)
        self.td.T = self.T
        self.frame = check_associative(self.L, self.g2, self.span)


@pytest.fixture(scope="session")
def flat():
    return Geometry("flat_r7.json")


@pytest.fixture(scope="session")
def n28():
    return Geometry("n28_times_r.json")


@pytest.fixture(scope="session")
def solv():
    return Geometry("solv_s.json")


@pytest.fixture()
def rng():
    return random.Random(20240517)


def random_fraction(rng, span=6, den=4):
    return Fraction(rng.randint(-span, span), rng.randint(1, den))
