"""Shared fixtures: the worked 5x5 example and random-matrix helpers."""

import random
from fractions import Fraction

import pytest

from eigencert.charpoly import SquareMatrix
from eigencert.numerics import EXACT, float_backend

# 5x5 example used throughout: three real eigenvalues (~1.733, ~2.935,
# ~4.997) and one complex pair; its exact characteristic polynomial and
# every certification verdict are frozen in the tests.
WORKED_ROWS = [
    ["1.25", "1", "0.75", "0.5", "0.25"],
    ["1", "0", "0", "0", "0"],
    ["-1", "1", "0", "0", "0"],
    ["0", "0", "1", "3", "0"],
    ["0", "0", "0", "0.5", "5"],
]

WORKED_CHARPOLY = (
    Fraction(-71, 8),
    Fraction(-5, 8),
    Fraction(-17),
    Fraction(99, 4),
    Fraction(-37, 4),
    Fraction(1),
)


@pytest.fixture(scope="session")
def worked_exact():
    return SquareMatrix.from_rows(WORKED_ROWS, EXACT)


@pytest.fixture(scope="session")
def worked_float():
    return SquareMatrix.from_rows(WORKED_ROWS, float_backend(256))


def random_rational_matrix(rng: random.Random, n: int, bound: int = 5, max_den: int = 16):
    """n x n exact matrix, entries in [-bound, bound], denominators <= max_den."""
    rows = []
    for _ in range(n):
        row = []
        for _ in range(n):
            den = rng.randint(1, max_den)
            num = rng.randint(-bound * den, bound * den)
            row.append(Fraction(num, den))
        rows.append(row)
    return SquareMatrix.from_rows(rows, EXACT)


def to_float_matrix(m: SquareMatrix, bits: int = 256) -> SquareMatrix:
    fb = float_backend(bits)
    return SquareMatrix.from_rows(
        [[fb.convert(v) for v in row] for row in m.rows], fb
    )
