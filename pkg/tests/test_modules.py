"""
Verma module, contravariant form and the two realizations of V(lambda).
"""

import functools
from fractions import Fraction

import pytest
import sympy

from liebasis_lib.bases.essential import EssentialEngine, exponent_weight
from liebasis_lib.bases.sequences import build_preset, seq_from_indices
from liebasis_lib.errors import RootSystemError
from liebasis_lib.lie.chevalley import build_chevalley
from liebasis_lib.lie.linalg import EchelonBasis
from liebasis_lib.lie.modules import (
    SequenceWeightSpace,
    VermaVector,
    apply_e,
    apply_f,
    contravariant_form,
    contravariant_gram,
    image_map,
    irreducible_module,
    monomial_vector,
    rank_filter,
    verma_module,
)
from liebasis_lib.lie.rootdata import build_root_system, freudenthal_multiplicities, weyl_dimension


@pytest.mark.parametrize("n", range(5))
def test_sl2_commutation_identity(a1, n):
    # e f^k v = k (<lambda, alpha^vee> - k + 1) f^(k-1) v
    cb = build_chevalley(a1)
    for k in range(1, n + 3):
        vector = monomial_vector(cb, [0], [k], (n,))
        raised = apply_e(cb, (1,), vector, (n,))
        coefficient = k * (n - k + 1)
        assert raised.weight == (n - 2 * k + 2,)
        assert dict(raised.entries) == ({(k - 1,): Fraction(coefficient)} if coefficient else {})


def test_pbw_straightening_in_sl3(a2):
    # f_{a2} f_{a1} = f_{a1} f_{a2} + [f_{a2}, f_{a1}], f_{a1} leftmost in PBW order
    cb = build_chevalley(a2)
    v = VermaVector.highest(a2, (1, 1))
    lowered = apply_f(cb, (1, 0), apply_f(cb, (0, 1), v))
    assert dict(lowered.entries) == {(1, 1, 0): 1}
    lowered = apply_f(cb, (0, 1), apply_f(cb, (1, 0), v))
    _, n = cb.f_bracket(1, 0)
    assert dict(lowered.entries) == {(1, 1, 0): 1, (0, 0, 1): n}
    assert lowered.weight == (0, 0)


@pytest.mark.parametrize("family, rank, weight", [
    ("A", 2, (1, 1)), ("A", 2, (2, 0)), ("B", 2, (1, 0)), ("B", 2, (0, 1)), ("G", 2, (1, 0)),
])
def test_gram_rank_is_weight_multiplicity(family, rank, weight):
    rs = build_root_system(family, rank)
    cb = build_chevalley(rs)
    for mu, multiplicity in freudenthal_multiplicities(rs, weight).items():
        assert contravariant_gram(rs, cb, weight, mu).rank == multiplicity, mu


def test_gram_matrix_is_symmetric_and_matches_sympy_rank(b2):
    cb = build_chevalley(b2)
    ctx = contravariant_gram(b2, cb, (1, 1), (-1, 1))
    gram = ctx.gram
    size = len(ctx.pbw_basis)
    assert all(gram[i][j] == gram[j][i] for i in range(size) for j in range(size))
    assert ctx.rank == sympy.Matrix(gram).rank()


def test_verma_weight_space_basis_is_kostant_partition(a2):
    cb = build_chevalley(a2)
    ctx = contravariant_gram(a2, cb, (1, 1), (-1, -1))
    assert sorted(ctx.pbw_basis) == sorted([(2, 2, 0), (1, 1, 1), (0, 0, 2)])


def test_contravariant_form_adjunction(a2):
    # <f_beta x, y> = <x, e_beta y>
    cb = build_chevalley(a2)
    weight = (1, 1)
    for root in a2.positive_roots:
        for a in [(0, 0, 0), (1, 0, 0), (0, 1, 0)]:
            x = monomial_vector(cb, [0, 1, 2], a, weight)
            fx = apply_f(cb, root, x)
            for b in [(1, 1, 0), (0, 0, 1), (2, 0, 0), (0, 1, 1), (1, 0, 1)]:
                y = monomial_vector(cb, [0, 1, 2], b, weight)
                if y.weight != fx.weight:
                    continue
                assert contravariant_form(cb, weight, fx, y) == contravariant_form(
                    cb, weight, x, apply_e(cb, root, y, weight)
                )


def test_contravariant_form_is_symmetric(g2):
    cb = build_chevalley(g2)
    weight = (1, 0)
    x = monomial_vector(cb, [0, 2], [1, 1], weight)
    y = monomial_vector(cb, [3], [1], weight)
    assert x.weight == y.weight
    assert contravariant_form(cb, weight, x, y) == contravariant_form(cb, weight, y, x)
    assert contravariant_form(cb, weight, VermaVector.highest(g2, weight), VermaVector.highest(g2, weight)) == 1


def test_rank_filter(a2):
    cb = build_chevalley(a2)
    weight = (1, 1)
    ctx = contravariant_gram(a2, cb, weight, (0, 0))
    vectors = [monomial_vector(cb, [0, 1, 2], k, weight) for k in [(1, 1, 0), (0, 0, 1), (1, 1, 0)]]
    assert rank_filter(ctx, vectors) == [True, True, False]
    with pytest.raises(RootSystemError):
        rank_filter(ctx, [VermaVector.highest(a2, weight)])


def test_rank_filter_on_exponent_vectors(a2):
    # S = (a1, a1 + a2, a2); the zero weight space of V(rho) has dimension 2
    sequence = seq_from_indices(a2, [1, 3, 2])
    weight = (1, 1)
    space = SequenceWeightSpace(
        (0, 0),
        image_map(build_chevalley(a2), weight, sequence.indices),
        functools.partial(exponent_weight, a2, sequence, weight),
    )
    assert rank_filter(space, [(1, 0, 1), (0, 1, 0), (1, 0, 1)]) == [True, True, False]
    assert rank_filter(space, [(1, 0, 1), (0, 1, 0)], limit=1) == [True]
    echelon = EchelonBasis()
    assert rank_filter(space, [(0, 1, 0)], echelon) == [True]
    assert rank_filter(space, [(0, 1, 0), (1, 0, 1)], echelon) == [False, True]
    assert echelon.rank == 2
    with pytest.raises(RootSystemError):
        rank_filter(space, [(1, 0, 0)])


@pytest.mark.parametrize("family, rank, weight", [
    ("A", 2, (1, 2)), ("B", 2, (1, 1)), ("C", 2, (0, 2)), ("G", 2, (1, 0)),
])
def test_gram_ranks_on_every_weight_space_the_engine_visits(family, rank, weight):
    rs = build_root_system(family, rank)
    sequence, order = build_preset(rs, "string")
    engine = EssentialEngine(rs, sequence, order, backend="verma")
    assert engine.essential_direct(weight).dimension == weyl_dimension(rs, weight)
    multiplicities = freudenthal_multiplicities(rs, weight)
    visited = verma_module(engine.cb, weight).weight_spaces()
    assert set(multiplicities) <= {ctx.weight for ctx in visited}
    for ctx in visited:
        assert ctx.rank == multiplicities.get(ctx.weight, 0), ctx.weight


def test_irreducible_image_kills_the_radical(a1):
    # f^3 v vanishes in V(2 varpi) but not in M(2 varpi)
    cb = build_chevalley(a1)
    module = irreducible_module(cb, (2,))
    vector = monomial_vector(cb, [0], [3], (2,))
    assert not vector.is_zero
    assert module.image(vector) == ()
    assert any(module.sequence_image((0,), (2,)))
    assert module.sequence_image((0,), (3,)) == ()


@pytest.mark.parametrize("family, rank, weight", [("A", 2, (2, 1)), ("B", 2, (1, 1)), ("G", 2, (1, 0))])
def test_backends_agree_on_ranks(family, rank, weight):
    rs = build_root_system(family, rank)
    cb = build_chevalley(rs)
    sequence = tuple(range(rs.num_positive))
    irreducible = image_map(cb, weight, sequence, "irreducible")
    verma = image_map(cb, weight, sequence, "verma")
    for mu in freudenthal_multiplicities(rs, weight):
        ctx = contravariant_gram(rs, cb, weight, mu)
        ranks = []
        for oracle in (irreducible, verma):
            echelon = EchelonBasis()
            for monomial in ctx.pbw_basis:
                echelon.add(oracle(monomial))
            ranks.append(echelon.rank)
        assert ranks[0] == ranks[1] == ctx.rank, mu


@pytest.mark.parametrize("family, rank, weight", [("A", 2, (2, 1)), ("B", 2, (1, 1))])
def test_flipped_basis_gives_same_ranks(family, rank, weight):
    rs = build_root_system(family, rank)
    sequence = tuple(range(rs.num_positive))
    maps = [
        image_map(build_chevalley(rs), weight, sequence),
        image_map(build_chevalley(rs, frozenset({0, rs.num_positive - 1})), weight, sequence),
    ]
    cb = build_chevalley(rs)
    for mu in freudenthal_multiplicities(rs, weight):
        ctx = contravariant_gram(rs, cb, weight, mu)
        flags = []
        for oracle in maps:
            echelon = EchelonBasis()
            flags.append([echelon.add(oracle(m)) for m in ctx.pbw_basis])
        assert flags[0] == flags[1]


def test_monomial_vector_length_mismatch(a2):
    with pytest.raises(RootSystemError):
        monomial_vector(build_chevalley(a2), [0, 1], [1], (1, 1))


def test_unknown_backend(a2):
    with pytest.raises(RootSystemError):
        image_map(build_chevalley(a2), (1, 1), (0, 1, 2), backend="sparse")


def test_apply_f_rejects_non_roots(a2):
    with pytest.raises(RootSystemError):
        apply_f(build_chevalley(a2), (2, 0), VermaVector.highest(a2, (1, 1)))
