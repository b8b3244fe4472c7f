"""
Kodaira truncation, reduced words of w0 and the generator census.
"""

import pytest

from liebasis_lib.bases.monoid import (
    commutation_normal_form,
    count_reduced_words,
    generator_census,
    kodaira,
    reduced_words_w0,
)
from liebasis_lib.bases.orders import MonomialOrderSpec
from liebasis_lib.bases.sequences import seq_from_indices
from liebasis_lib.errors import BudgetExceededError, RootSystemError
from liebasis_lib.lie.rootdata import build_root_system, is_reduced, weyl_dimension


def test_kodaira_sl2(a1):
    sequence = seq_from_indices(a1, [1])
    result = kodaira(a1, sequence, MonomialOrderSpec(), (1,), 3)
    assert result.complete
    assert result.counts == [2, 0, 0]
    assert [entry.dimension for entry in result.degrees] == [2, 3, 4]


def test_kodaira_degrees_have_weyl_dimensions(b2):
    sequence = seq_from_indices(b2, [1, 2, 3, 4])
    result = kodaira(b2, sequence, MonomialOrderSpec("lex"), (0, 1), 3)
    for entry in result.degrees:
        assert entry.dimension == weyl_dimension(b2, (0, entry.k))
    assert result.counts[0] == weyl_dimension(b2, (0, 1))
    document = result.to_dict()
    assert document["counts"] == result.counts
    assert len(document["degrees"]) == 3


def test_kodaira_rejects_degree_zero(a1):
    with pytest.raises(RootSystemError):
        kodaira(a1, seq_from_indices(a1, [1]), MonomialOrderSpec(), (1,), 0)


def test_kodaira_budget_gives_a_partial_result(a2):
    sequence = seq_from_indices(a2, [3, 2, 1])
    result = kodaira(a2, sequence, MonomialOrderSpec(), (1, 0), 4, budget=1)
    assert not result.complete
    assert result.message
    assert len(result.degrees) < 4


@pytest.mark.slow
def test_kodaira_g2(g2):
    sequence = seq_from_indices(g2, [1, 2, 3, 4, 5, 6])
    result = kodaira(g2, sequence, MonomialOrderSpec("invlex"), (1, 0), 6)
    assert result.counts == [7, 5, 14, 7, 12, 8]


@pytest.mark.parametrize("family, rank, words", [("A", 1, 1), ("A", 2, 2), ("A", 3, 16), ("B", 2, 2), ("G", 2, 2)])
def test_count_reduced_words(family, rank, words):
    assert count_reduced_words(build_root_system(family, rank)) == words


def test_commutation_classes(a1, a2, a3):
    assert reduced_words_w0(a1) == [(1,)]
    assert reduced_words_w0(a2) == [(1, 2, 1), (2, 1, 2)]
    words = reduced_words_w0(a3)
    assert len(words) == 8
    assert len(set(words)) == 8
    for word in words:
        assert len(word) == a3.num_positive
        assert is_reduced(a3, word)
        assert commutation_normal_form(a3, word) == word


def test_commutation_normal_form(a3):
    assert commutation_normal_form(a3, (3, 1)) == (1, 3)
    assert commutation_normal_form(a3, (2, 1)) == (2, 1)
    assert commutation_normal_form(a3, (3, 1, 2, 3, 2, 1)) == (1, 3, 2, 3, 2, 1)


def test_census_sl2(a1):
    result = generator_census(a1)
    assert result.weight == (2,)
    assert result.classes == 1
    entry = result.entries[0]
    assert entry.word == (1,)
    assert entry.generators == (((1,), 2),)
    assert result.table == ((("fundamentals",), 1),)


def test_census_sl3(a2):
    result = generator_census(a2, threads=2)
    assert result.classes == 2
    assert result.reduced_words == 2
    assert sum(n for _, n in result.table) == 2
    for entry in result.entries:
        assert sum(a * mu[0] for mu, a in entry.generators) == 2
        assert {(1, 0), (0, 1)} <= set(entry.new_weights)
    document = result.to_dict()
    assert [w["word"] for w in document["words"]] == [[1, 2, 1], [2, 1, 2]]


@pytest.mark.slow
def test_census_sl4(a3):
    result = generator_census(a3)
    assert result.classes == 8
    fundamentals = {(1, 0, 0), (0, 1, 0), (0, 0, 1)}
    for entry in result.entries:
        assert fundamentals <= set(entry.new_weights)


def test_census_refuses_large_ranks():
    with pytest.raises(BudgetExceededError) as excinfo:
        generator_census(build_root_system("A", 5))
    assert excinfo.value.size == 5
    assert "292864" in str(excinfo.value)


def test_census_word_cap(a3, monkeypatch):
    monkeypatch.setenv("LIEBASIS_CENSUS_MAX_WORDS", "10")
    with pytest.raises(BudgetExceededError) as excinfo:
        reduced_words_w0(a3)
    assert excinfo.value.size == 16
    assert len(reduced_words_w0(a3, long_run=True)) == 8
