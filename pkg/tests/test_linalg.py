from fractions import Fraction

import pytest
import sympy

from liebasis_lib.lie.linalg import EchelonBasis, bareiss_rank, mat_vec


def test_echelon_accepts_only_independent_vectors():
    echelon = EchelonBasis()
    assert echelon.add([1, 2, 0])
    assert echelon.add([0, 1, 1])
    assert not echelon.add([2, 5, 1])
    assert not echelon.add([0, 0, 0])
    assert echelon.rank == 2
    assert echelon.is_independent([0, 0, 1])


def test_echelon_express():
    echelon = EchelonBasis()
    echelon.add([1, 1, 0])
    echelon.add([0, 1, 1])
    assert echelon.express([1, 3, 2]) == [Fraction(1), Fraction(2)]
    assert echelon.express([1, 0, 0]) is None


def test_echelon_with_fractions():
    echelon = EchelonBasis()
    echelon.add([Fraction(1, 3), Fraction(2, 3)])
    assert not echelon.add([1, 2])
    assert echelon.express([1, 2]) == [Fraction(3)]


@pytest.mark.parametrize("matrix", [
    [[1, 2], [2, 4]],
    [[0, 0], [0, 0]],
    [[0, 1, 2], [1, 0, 3], [1, 1, 5]],
    [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -1, 2, -1], [0, 0, -1, 2]],
    [[Fraction(1, 2), 1, 0], [1, 2, 0], [0, 0, Fraction(-3, 7)]],
    [[0, 0, 1], [0, 0, 2], [0, 1, 0]],
])
def test_bareiss_rank_matches_sympy(matrix):
    assert bareiss_rank(matrix) == sympy.Matrix(matrix).rank()


def test_bareiss_rank_empty():
    assert bareiss_rank([]) == 0


def test_mat_vec():
    columns = [[1, 0, 2], [0, 3, 0]]
    assert mat_vec(columns, [2, 1], 3) == [2, 3, 4]
