# liebasis_lib/bases/monoid.py
"""
Generators of the truncated monoid of a Kodaira embedding and the census of
Minkowski generators over the reduced words of w0.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from ..config import get_census_max_rank, get_census_max_words, get_thread_count
from ..errors import BudgetExceededError, RootSystemError
from ..lie.rootdata import (
    RootSystemData,
    Weight,
    WeylWord,
    check_weight,
    check_word,
    reflect_weight,
    weyl_group_order,
)
from .essential import EssentialEngine, EssentialSet, Exponent, Generators, minkowski_sum
from .orders import MonomialOrderSpec
from .sequences import BirationalSequence, seq_string

logger = logging.getLogger(__name__)

# Above this |W| the reduced-word count is too slow to quote in a refusal.
ESTIMATE_MAX_GROUP_ORDER = 10 ** 5


# --- Kodaira truncation ------------------------------------------------------

@dataclass(frozen=True)
class KodairaDegree:
    """es(k lambda) and the exponents first needed in degree k."""

    k: int
    exponents: FrozenSet[Exponent]
    new: FrozenSet[Exponent]

    @property
    def dimension(self) -> int:
        return len(self.exponents)


@dataclass(frozen=True)
class KodairaResult:
    """
    Attributes:
        weight: lambda.
        sequence: The birational sequence.
        order: The monomial order.
        degree: The requested truncation degree d.
        degrees: One entry per completed degree 1..d.
        complete: False when a budget stopped the run early.
        message: Why the run stopped early, if it did.
    """

    weight: Weight
    sequence: BirationalSequence
    order: MonomialOrderSpec
    degree: int
    degrees: Tuple[KodairaDegree, ...]
    complete: bool = True
    message: Optional[str] = None

    @property
    def counts(self) -> List[int]:
        return [len(entry.new) for entry in self.degrees]

    def to_dict(self) -> dict:
        return {
            "weight": list(self.weight),
            "degree": self.degree,
            "complete": self.complete,
            "counts": self.counts,
            "degrees": [
                {
                    "k": entry.k,
                    "dimension": entry.dimension,
                    "new": [list(x) for x in sorted(entry.new, key=lambda x: (sum(x), x))],
                    "monomials": [list(x) for x in sorted(entry.exponents, key=lambda x: (sum(x), x))],
                }
                for entry in self.degrees
            ],
        }


def kodaira(rs: RootSystemData, sequence: BirationalSequence, order: MonomialOrderSpec,
            highest_weight: Sequence[int], degree: int, engine: Optional[EssentialEngine] = None,
            **engine_options) -> KodairaResult:
    """
    es(S, >, k lambda) for k = 1..d and the generators new in each degree:

        new_k = es(k lambda) minus the union over l of es(l lambda) + es((k - l) lambda).

    A budget error ends the run after the last completed degree; the result
    is then flagged incomplete.

    Raises:
        RootSystemError: If degree < 1 or lambda is not dominant.
    """
    if degree < 1:
        raise RootSystemError(f"Degree must be at least 1, got {degree}.")
    highest_weight = check_weight(rs, highest_weight)
    engine = engine or EssentialEngine(rs, sequence, order, **engine_options)
    by_degree: Dict[int, FrozenSet[Exponent]] = {}
    degrees: List[KodairaDegree] = []
    for k in range(1, degree + 1):
        weight = tuple(k * c for c in highest_weight)
        try:
            exponents = engine.compute_basis(weight).exponents
        except BudgetExceededError as e:
            logger.warning("Kodaira run stopped at degree %d: %s", k, e)
            return KodairaResult(highest_weight, sequence, order, degree, tuple(degrees),
                                 complete=False, message=str(e))
        reachable = set()
        for low in range(1, k // 2 + 1):
            reachable |= minkowski_sum(by_degree[low], by_degree[k - low])
        by_degree[k] = exponents
        degrees.append(KodairaDegree(k, exponents, frozenset(exponents - reachable)))
        logger.info("Degree %d: %d monomials, %d new.", k, len(exponents), len(degrees[-1].new))
    return KodairaResult(highest_weight, sequence, order, degree, tuple(degrees))


# --- Reduced words of w0 -----------------------------------------------------

def _commutes(rs: RootSystemData, a: int, b: int) -> bool:
    """Letters are 1-based."""
    return a != b and rs.cartan[a - 1][b - 1] == 0


def count_reduced_words(rs: RootSystemData) -> int:
    """Number of reduced words of w0, by counting descending paths from -rho to rho."""
    counts: Dict[Weight, int] = {}
    top = (1,) * rs.rank

    def paths(weight: Weight) -> int:
        if weight == top:
            return 1
        cached = counts.get(weight)
        if cached is not None:
            return cached
        total = sum(paths(reflect_weight(rs, weight, i)) for i, c in enumerate(weight) if c < 0)
        counts[weight] = total
        return total

    return paths(tuple(-1 for _ in range(rs.rank)))


def commutation_normal_form(rs: RootSystemData, word: Sequence[int]) -> WeylWord:
    """The lexicographically smallest word reachable by swapping adjacent commuting letters."""
    remaining = list(check_word(rs, word))
    result = []
    while remaining:
        movable = [
            position for position, letter in enumerate(remaining)
            if all(_commutes(rs, letter, earlier) for earlier in remaining[:position])
        ]
        position = min(movable, key=lambda p: remaining[p])
        result.append(remaining.pop(position))
    return tuple(result)


def _census_guard(rs: RootSystemData, long_run: bool) -> int:
    """Raises unless the enumeration fits the configured caps; returns the word-count estimate."""
    if long_run:
        return count_reduced_words(rs)
    max_rank = get_census_max_rank()
    if rs.rank > max_rank:
        order = weyl_group_order(rs)
        if order <= ESTIMATE_MAX_GROUP_ORDER:
            estimate = count_reduced_words(rs)
            size = f"{estimate} reduced words for w0 (at most that many commutation classes)"
        else:
            size = f"a Weyl group of order {order}, too large to count the reduced words of w0"
        raise BudgetExceededError(
            f"{rs.name} has rank {rs.rank} > {max_rank} and {size}; pass --long-run (or raise "
            f"LIEBASIS_CENSUS_MAX_RANK) to enumerate its reduced words.",
            size=rs.rank, cap=max_rank,
        )
    estimate = count_reduced_words(rs)
    max_words = get_census_max_words()
    if estimate > max_words:
        raise BudgetExceededError(
            f"{rs.name} has {estimate} reduced words for w0 (at most that many commutation classes), "
            f"more than {max_words}; pass --long-run to continue.",
            size=estimate, cap=max_words,
        )
    return estimate


def reduced_words_w0(rs: RootSystemData, long_run: bool = False) -> List[WeylWord]:
    """
    One reduced word of w0 per commutation class: the lexicographically smallest.

    Words are grown letter by letter from -rho (a letter may be appended when
    the current coordinate is negative); a prefix is dropped as soon as its last
    letter could move left past a larger letter it commutes with.

    Raises:
        BudgetExceededError: If the rank or the word-count estimate exceeds the caps.
    """
    _census_guard(rs, long_run)
    words: List[WeylWord] = []
    letters: List[int] = []

    def grow(weight: Weight) -> None:
        if all(c > 0 for c in weight):
            words.append(tuple(letters))
            return
        for i, c in enumerate(weight):
            if c >= 0:
                continue
            letter = i + 1
            violated = False
            for earlier in reversed(letters):
                if not _commutes(rs, letter, earlier):
                    break
                if earlier > letter:
                    violated = True
                    break
            if violated:
                continue
            letters.append(letter)
            grow(reflect_weight(rs, weight, i))
            letters.pop()

    grow(tuple(-1 for _ in range(rs.rank)))
    logger.debug("%s: %d commutation classes of reduced words for w0.", rs.name, len(words))
    return words


# --- Census ------------------------------------------------------------------

@dataclass(frozen=True)
class CensusEntry:
    word: WeylWord
    generators: Generators
    new_weights: Tuple[Weight, ...]
    fully_decomposed: bool


@dataclass(frozen=True)
class CensusResult:
    """
    Attributes:
        weight: lambda (2 rho by default).
        entries: One per commutation-class representative, in enumeration order.
        table: (labels, frequency) pairs over the needed weights, fundamental
            weights grouped as 'fundamentals' when all of them occur.
        reduced_words: Number of reduced words of w0.
    """

    weight: Weight
    entries: Tuple[CensusEntry, ...]
    table: Tuple[Tuple[Tuple[str, ...], int], ...]
    reduced_words: int = 0

    @property
    def classes(self) -> int:
        return len(self.entries)

    def to_dict(self) -> dict:
        return {
            "weight": list(self.weight),
            "classes": self.classes,
            "reduced_words": self.reduced_words,
            "words": [
                {
                    "word": list(entry.word),
                    "generators": [{"weight": list(mu), "multiplicity": a} for mu, a in entry.generators],
                    "needed": [list(mu) for mu in entry.new_weights],
                }
                for entry in self.entries
            ],
            "table": [{"generators": list(labels), "frequency": n} for labels, n in self.table],
        }


def _label(weights: Sequence[Weight], rank: int) -> Tuple[str, ...]:
    fundamentals = {tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)}
    present = set(weights)
    labels = []
    rest = list(weights)
    if fundamentals <= present:
        labels.append("fundamentals")
        rest = [w for w in weights if w not in fundamentals]
    labels.extend("(" + ",".join(str(c) for c in w) + ")" for w in rest)
    return tuple(labels)


def _census_word(rs: RootSystemData, word: WeylWord, highest_weight: Weight, order: Optional[MonomialOrderSpec],
                 engine_options: dict) -> CensusEntry:
    sequence, default_order = seq_string(rs, word)
    engine = EssentialEngine(rs, sequence, order or default_order, **engine_options)
    es: EssentialSet = engine.compute_basis(highest_weight)
    return CensusEntry(word, es.generators, es.new_weights, es.fully_decomposed)


def generator_census(rs: RootSystemData, highest_weight: Optional[Sequence[int]] = None,
                     order: Optional[MonomialOrderSpec] = None, threads: Optional[int] = None,
                     long_run: bool = False, **engine_options) -> CensusResult:
    """
    Runs compute_basis with the string sequence of every commutation-class
    representative of w0 and tabulates the weights each one needs.

    Args:
        rs: The root system.
        highest_weight: lambda; defaults to 2 rho.
        order: Defaults to neglex, the string preset's order.
        threads: Worker threads; defaults to LIEBASIS_THREADS.
        long_run: Lift the rank and word-count caps.
    """
    highest_weight = check_weight(rs, highest_weight if highest_weight is not None else (2,) * rs.rank)
    estimate = _census_guard(rs, long_run)
    words = reduced_words_w0(rs, long_run=True)
    threads = threads or get_thread_count()
    logger.info("Census of %s at %s: %d classes on %d thread(s).", rs.name, highest_weight, len(words), threads)

    def run(word: WeylWord) -> CensusEntry:
        return _census_word(rs, word, highest_weight, order, engine_options)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            entries = tuple(pool.map(run, words))
    else:
        entries = tuple(run(word) for word in words)

    frequencies: Dict[Tuple[str, ...], int] = {}
    for entry in entries:
        labels = _label(entry.new_weights, rs.rank)
        frequencies[labels] = frequencies.get(labels, 0) + 1
    table = tuple(sorted(frequencies.items(), key=lambda item: (-item[1], item[0])))
    return CensusResult(highest_weight, entries, table, estimate)
