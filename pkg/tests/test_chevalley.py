"""
Structure constants of the Chevalley basis.
"""

import itertools
import random

import pytest

from liebasis_lib.lie.chevalley import bracket, build_chevalley, string_length_below
from liebasis_lib.lie.rootdata import build_root_system

TYPES = [("A", 2), ("A", 3), ("B", 2), ("C", 3), ("G", 2)]


def _elements(rs):
    return (
        [("e", k) for k in range(rs.num_positive)]
        + [("f", k) for k in range(rs.num_positive)]
        + [("h", i) for i in range(rs.rank)]
    )


def _bracket_combination(cb, x, combination):
    result = {}
    for element, coefficient in combination.items():
        for target, value in bracket(cb, x, element).items():
            result[target] = result.get(target, 0) + coefficient * value
    return {k: v for k, v in result.items() if v}


def _jacobi_sum(cb, x, y, z):
    total = {}
    for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
        for target, value in _bracket_combination(cb, a, bracket(cb, b, c)).items():
            total[target] = total.get(target, 0) + value
    return {k: v for k, v in total.items() if v}


@pytest.mark.parametrize("family, rank", TYPES)
def test_structure_constants_are_antisymmetric(family, rank):
    cb = build_chevalley(build_root_system(family, rank))
    for (alpha, beta), value in cb.nconst.items():
        assert cb.nconst[(beta, alpha)] == -value


@pytest.mark.parametrize("family, rank", TYPES)
def test_structure_constants_have_chevalley_magnitude(family, rank):
    # |N[alpha, beta]| = p + 1, p the length of the beta-string below beta
    rs = build_root_system(family, rank)
    cb = build_chevalley(rs)
    assert cb.nconst
    for (alpha, beta), value in cb.nconst.items():
        assert abs(value) == string_length_below(rs, alpha, beta) + 1


@pytest.mark.parametrize("family, rank", TYPES)
def test_jacobi_identity(family, rank):
    rs = build_root_system(family, rank)
    cb = build_chevalley(rs)
    for x, y, z in itertools.combinations(_elements(rs), 3):
        assert not _jacobi_sum(cb, x, y, z), (x, y, z)


@pytest.mark.parametrize("family", ["A", "B"])
def test_jacobi_identity_sampled_in_rank_four(family):
    rs = build_root_system(family, 4)
    cb = build_chevalley(rs)
    triples = list(itertools.combinations(_elements(rs), 3))
    for x, y, z in random.Random(4).sample(triples, 400):
        assert not _jacobi_sum(cb, x, y, z), (x, y, z)


def test_e_f_bracket_is_coroot(b2):
    cb = build_chevalley(b2)
    # long root alpha_1 + 2 alpha_2: coroot alpha_1^vee + alpha_2^vee
    k = b2.root_index[(1, 2)]
    assert bracket(cb, ("e", k), ("f", k)) == {("h", 0): 1, ("h", 1): 1}
    # short root alpha_1 + alpha_2: coroot 2 alpha_1^vee + alpha_2^vee
    k = b2.root_index[(1, 1)]
    assert bracket(cb, ("e", k), ("f", k)) == {("h", 0): 2, ("h", 1): 1}
    assert bracket(cb, ("f", k), ("e", k)) == {("h", 0): -2, ("h", 1): -1}


def test_cartan_action(a2):
    cb = build_chevalley(a2)
    assert bracket(cb, ("h", 0), ("e", 0)) == {("e", 0): 2}
    assert bracket(cb, ("h", 0), ("f", 1)) == {("f", 1): 1}
    assert bracket(cb, ("e", 1), ("h", 0)) == {("e", 1): 1}
    assert bracket(cb, ("h", 0), ("h", 1)) == {}


def test_extraspecial_pairs(a3, g2):
    cb = build_chevalley(a3)
    assert cb.extraspecial[:3] == (None, None, None)
    assert cb.extraspecial[3] == (0, 1)
    assert cb.extraspecial[5] == (0, 4)
    cb = build_chevalley(g2)
    assert cb.nconst[((1, 0), (0, 1))] == 1
    assert abs(cb.nconst[((1, 0), (2, 1))]) == 3


@pytest.mark.parametrize("family, rank", [("A", 3), ("B", 2), ("G", 2)])
def test_flipped_signs_transform_structure_constants(family, rank):
    rs = build_root_system(family, rank)
    base = build_chevalley(rs)
    flipped = frozenset({rs.num_positive - 1, 0})
    other = build_chevalley(rs, flipped)
    assert other.signs[0] == -1 and other.signs[1] == 1

    def sign(root):
        key = root if all(c >= 0 for c in root) else tuple(-c for c in root)
        return other.signs[rs.root_index[key]]

    for (alpha, beta), value in base.nconst.items():
        total = tuple(a + b for a, b in zip(alpha, beta))
        assert other.nconst[(alpha, beta)] == value * sign(alpha) * sign(beta) * sign(total)


def test_f_bracket(a2):
    cb = build_chevalley(a2)
    index, n = cb.f_bracket(0, 1)
    assert index == 2
    assert n == cb.nconst[((-1, 0), (0, -1))]
    assert cb.f_bracket(0, 0) is None
