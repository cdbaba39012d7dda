import pytest

from agraph.monomials import MonomialIdeal, minimalize, monomials_of_degree

# the running example: the cube of the maximal ideal in three variables,
# its canonical move source/target, and the frozen successor generators
CUBIC_GENS = list(monomials_of_degree(3, 3))

SUCCESSOR_GENS = [
    (4, 0, 0), (2, 1, 0), (2, 0, 1), (1, 2, 0),
    (1, 1, 1), (0, 3, 0), (0, 2, 1), (0, 0, 2),
]

SUCCESSOR_STANDARD = {
    (0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (2, 0, 0),
    (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (3, 0, 0),
}

SUCCESSOR_SOCLE = {(3, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1)}


@pytest.fixture
def cubic_ideal() -> MonomialIdeal:
    return minimalize(3, CUBIC_GENS)


@pytest.fixture
def successor_ideal() -> MonomialIdeal:
    return minimalize(3, SUCCESSOR_GENS)
