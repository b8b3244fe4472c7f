# liebasis_lib/bases/essential.py
"""
Essential monomial bases es(S, >, lambda).

An exponent k is essential when f^k v_lambda is not in the span of the
f^m v_lambda with m < k. Per weight space, the essential exponents are found
by sorting the candidate exponents ascending and keeping those that raise the
rank in V(lambda)_mu.

compute_basis uses es(mu1) + es(mu2) being contained in es(mu1 + mu2): it
unions the Minkowski sums over all dominant splits of lambda and only runs the
linear algebra on weight spaces the union leaves short. Seeding those weight
spaces with the collected exponents gives exactly the same set as the direct
computation.
"""

import functools
import itertools
import logging
import threading
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from ..config import get_candidate_budget
from ..errors import InternalConsistencyError, NotBirationalError, OrderError
from ..lie.chevalley import ChevalleyBasis, build_chevalley
from ..lie.linalg import EchelonBasis
from ..lie.modules import SequenceWeightSpace, image_map, rank_filter
from ..lie.rootdata import (
    RootSystemData,
    Weight,
    check_weight,
    dominant_decompositions,
    freudenthal_multiplicities,
    root_difference,
    root_partitions,
    weyl_dimension,
)
from .orders import MonomialOrderSpec, format_order, sort_ascending
from .sequences import BirationalSequence

logger = logging.getLogger(__name__)

Exponent = Tuple[int, ...]
Generators = Tuple[Tuple[Weight, int], ...]


@dataclass(frozen=True)
class EssentialSet:
    """
    es(S, >, lambda) together with its Minkowski decomposition.

    Attributes:
        weight: lambda in fundamental-weight coordinates.
        sequence: The birational sequence S.
        order: The monomial order.
        exponents: The essential exponents.
        generators: (mu, a) with sum a*mu = lambda; when fully_decomposed,
            es(lambda) is the Minkowski sum of a copies of each es(mu).
            Otherwise lambda itself is the only generator.
        fully_decomposed: Whether the decomposition above is exact.
        new_weights: Weights of the recursion (lambda included) whose
            essential set is not one Minkowski sum of smaller pieces, i.e.
            the weights that appear as their own generator.
        visited: Every weight computed on the way to lambda, lambda excluded.
    """

    weight: Weight
    sequence: BirationalSequence
    order: MonomialOrderSpec
    exponents: FrozenSet[Exponent]
    generators: Generators
    fully_decomposed: bool
    new_weights: Tuple[Weight, ...] = field(default=())
    visited: Tuple[Weight, ...] = field(default=())

    @property
    def dimension(self) -> int:
        return len(self.exponents)

    def sorted_exponents(self) -> List[Exponent]:
        """Exponents by total degree, then lexicographically."""
        return sorted(self.exponents, key=lambda k: (sum(k), k))

    def by_degree(self) -> Dict[int, List[Exponent]]:
        grouped: Dict[int, List[Exponent]] = {}
        for k in self.sorted_exponents():
            grouped.setdefault(sum(k), []).append(k)
        return grouped

    def to_dict(self, rs: RootSystemData) -> dict:
        """The JSON document of an essential basis."""
        return {
            "family": rs.family,
            "rank": rs.rank,
            "weight": list(self.weight),
            "sequence": [list(root) for root in self.sequence.roots],
            "order": format_order(self.order),
            "dimension": self.dimension,
            "monomials": [list(k) for k in self.sorted_exponents()],
            "generators": [{"weight": list(mu), "multiplicity": a} for mu, a in self.generators],
        }


def exponent_weight(rs: RootSystemData, sequence: BirationalSequence,
                    highest_weight: Sequence[int], exponents: Sequence[int]) -> Weight:
    """lambda - sum k_j beta_j in fundamental-weight coordinates."""
    weight = list(highest_weight)
    for index, power in zip(sequence.indices, exponents):
        if power:
            for i, c in enumerate(rs.root_fw[index]):
                weight[i] -= power * c
    return tuple(weight)


def candidate_exponents(rs: RootSystemData, sequence: BirationalSequence, highest_weight: Sequence[int],
                        weight: Sequence[int], budget: Optional[int] = None) -> List[Exponent]:
    """
    All k in N^M with sum k_j beta_j = lambda - mu.

    Raises:
        BudgetExceededError: If more than `budget` candidates exist.
    """
    target = root_difference(rs, highest_weight, weight)
    if target is None:
        return []
    return root_partitions(sequence.roots, target, budget)


def minkowski_sum(a: Iterable[Sequence[int]], b: Iterable[Sequence[int]]) -> FrozenSet[Exponent]:
    """
    {x + y : x in a, y in b}.

    Raises:
        OrderError: If the exponent vectors have different lengths.
    """
    a = [tuple(x) for x in a]
    b = [tuple(y) for y in b]
    lengths = {len(v) for v in itertools.chain(a, b)}
    if len(lengths) > 1:
        raise OrderError(f"Minkowski sum of exponent vectors with lengths {sorted(lengths)}.")
    return frozenset(tuple(p + q for p, q in zip(x, y)) for x in a for y in b)


def _generator_key(generators: Generators) -> Tuple:
    """Graded lexicographic key on the weight list, largest weights first."""
    expanded = [(sum(mu), mu) for mu, a in generators for _ in range(a)]
    return tuple(sorted(expanded, reverse=True))


def _merge_generators(first: Generators, second: Generators) -> Generators:
    counts: Counter = Counter()
    for mu, a in itertools.chain(first, second):
        counts[mu] += a
    return tuple(sorted(counts.items(), key=lambda item: (-sum(item[0]), tuple(-c for c in item[0]))))


class EssentialEngine:
    """
    Computes essential sets for a fixed (root system, sequence, order).

    Results are memoized per highest weight, so one engine can serve a whole
    Kodaira run. The memo is safe to share between threads.

    Args:
        rs: The root system.
        sequence: The birational sequence S.
        order: The monomial order.
        budget: Cap on candidate exponents per weight space. Defaults to
            ESSENTIAL_BUDGET from the environment.
        cb: Chevalley basis to realize the modules with.
        early_exit: Stop unioning Minkowski sums as soon as they fill es(lambda).
        backend: 'irreducible' (default) or 'verma', see liebasis_lib.lie.modules.
        threads: Worker threads for the weight spaces of one module.
    """

    def __init__(self, rs: RootSystemData, sequence: BirationalSequence, order: MonomialOrderSpec,
                 budget: Optional[int] = None, cb: Optional[ChevalleyBasis] = None,
                 early_exit: bool = False, backend: str = "irreducible", threads: int = 1):
        if order.weights is not None and len(order.weights) != len(sequence):
            raise OrderError(
                f"Order {format_order(order)} has {len(order.weights)} weights for a sequence of length {len(sequence)}."
            )
        self.rs = rs
        self.sequence = sequence
        self.order = order
        self.budget = budget if budget is not None else get_candidate_budget()
        self.cb = cb if cb is not None else build_chevalley(rs)
        self.early_exit = early_exit
        self.backend = backend
        self.threads = max(1, threads)
        self._memo: Dict[Weight, EssentialSet] = {}
        self._lock = threading.Lock()

    # --- weight spaces ---

    def _fill_weight_space(self, highest_weight: Weight, space: SequenceWeightSpace, multiplicity: int,
                           seeds: Sequence[Exponent]) -> List[Exponent]:
        """Seeds first (each must be independent), then candidates ascending until the space is full."""
        weight = space.weight
        echelon = EchelonBasis()
        seed_flags = rank_filter(space, seeds, echelon)
        if not all(seed_flags):
            k = seeds[seed_flags.index(False)]
            raise InternalConsistencyError(
                f"Exponent {k} from a Minkowski sum is dependent in weight space {weight} of V{highest_weight}."
            )
        chosen: List[Exponent] = list(seeds)
        if len(chosen) < multiplicity:
            seeded = set(seeds)
            candidates = candidate_exponents(self.rs, self.sequence, highest_weight, weight, self.budget)
            pool = [k for k in sort_ascending(self.order, candidates) if k not in seeded]
            flags = rank_filter(space, pool, echelon, limit=multiplicity - len(chosen))
            chosen.extend(k for k, accepted in zip(pool, flags) if accepted)
        if len(chosen) < multiplicity:
            raise NotBirationalError(
                f"Only {len(chosen)} of {multiplicity} monomials found in weight space {weight} of "
                f"V{highest_weight}: the sequence is probably not birational.",
                weight=weight, found=len(chosen), expected=multiplicity,
            )
        return chosen

    def _complete(self, highest_weight: Weight, collected: Set[Exponent]) -> Set[Exponent]:
        """Fills every weight space where the collected exponents fall short."""
        multiplicities = freudenthal_multiplicities(self.rs, highest_weight)
        per_weight: Dict[Weight, List[Exponent]] = {}
        for k in collected:
            per_weight.setdefault(exponent_weight(self.rs, self.sequence, highest_weight, k), []).append(k)
        image = image_map(self.cb, highest_weight, self.sequence.indices, self.backend)
        weight_of = functools.partial(exponent_weight, self.rs, self.sequence, highest_weight)
        jobs = []
        for weight, multiplicity in multiplicities.items():
            present = per_weight.get(weight, [])
            if len(present) > multiplicity:
                raise InternalConsistencyError(
                    f"{len(present)} exponents collected in weight space {weight} of multiplicity {multiplicity}."
                )
            if len(present) < multiplicity:
                jobs.append((SequenceWeightSpace(weight, image, weight_of), multiplicity,
                             sort_ascending(self.order, present)))

        def fill(job) -> List[Exponent]:
            space, multiplicity, seeds = job
            filled = self._fill_weight_space(highest_weight, space, multiplicity, seeds)
            logger.debug("Weight space %s of V%s: %d seeded, %d found.",
                         space.weight, highest_weight, len(seeds), len(filled) - len(seeds))
            return filled

        if self.threads > 1 and len(jobs) > 1:
            with ThreadPoolExecutor(max_workers=self.threads) as pool:
                fills = list(pool.map(fill, jobs))
        else:
            fills = [fill(job) for job in jobs]
        result = set(collected)
        for filled in fills:
            result.update(filled)
        return result

    # --- public API ---

    def essential_direct(self, highest_weight: Sequence[int]) -> EssentialSet:
        """
        es(S, >, lambda) by the rank filter on every weight space, without Minkowski sums.

        Raises:
            NotBirationalError: If some weight space cannot be filled.
            BudgetExceededError: If a weight space has too many candidates.
        """
        highest_weight = check_weight(self.rs, highest_weight)
        exponents = self._complete(highest_weight, set())
        generators: Generators = ((highest_weight, 1),) if any(highest_weight) else ()
        return EssentialSet(
            weight=highest_weight,
            sequence=self.sequence,
            order=self.order,
            exponents=frozenset(exponents),
            generators=generators,
            fully_decomposed=not dominant_decompositions(highest_weight),
            new_weights=(highest_weight,) if any(highest_weight) else (),
        )

    def compute_basis(self, highest_weight: Sequence[int]) -> EssentialSet:
        """
        es(S, >, lambda) through Minkowski sums of smaller weights.

        Returns the same exponents as essential_direct, plus the generator
        decomposition minimal in the graded lexicographic order.

        Raises:
            NotBirationalError: If some weight space cannot be filled.
            BudgetExceededError: If a weight space has too many candidates.
            InternalConsistencyError: If a Minkowski-collected exponent is rejected.
        """
        highest_weight = check_weight(self.rs, highest_weight)
        cached = self._memo.get(highest_weight)
        if cached is not None:
            return cached

        dimension = weyl_dimension(self.rs, highest_weight)
        splits = dominant_decompositions(highest_weight)
        collected: Set[Exponent] = set()
        full_splits: List[Tuple[EssentialSet, EssentialSet]] = []
        visited: Set[Weight] = set()
        new_weights: Set[Weight] = set()
        for first, second in splits:
            es_first = self.compute_basis(first)
            es_second = self.compute_basis(second)
            for part in (es_first, es_second):
                visited.add(part.weight)
                visited.update(part.visited)
                new_weights.update(part.new_weights)
            summed = minkowski_sum(es_first.exponents, es_second.exponents)
            collected |= summed
            if len(summed) == dimension:
                full_splits.append((es_first, es_second))
            if len(collected) > dimension:
                raise InternalConsistencyError(
                    f"Minkowski sums give {len(collected)} exponents for V{highest_weight} of dimension {dimension}."
                )
            if self.early_exit and len(collected) == dimension:
                break

        if len(collected) < dimension:
            logger.info("V%s: Minkowski sums give %d of %d monomials, solving the rest.",
                        highest_weight, len(collected), dimension)
            collected = self._complete(highest_weight, collected)
        else:
            logger.debug("V%s: covered by Minkowski sums.", highest_weight)

        if full_splits:
            generators = min(
                (_merge_generators(a.generators, b.generators) for a, b in full_splits),
                key=_generator_key,
            )
            fully_decomposed = True
        else:
            generators = ((highest_weight, 1),) if any(highest_weight) else ()
            fully_decomposed = not splits
            if any(highest_weight):
                new_weights.add(highest_weight)

        result = EssentialSet(
            weight=highest_weight,
            sequence=self.sequence,
            order=self.order,
            exponents=frozenset(collected),
            generators=generators,
            fully_decomposed=fully_decomposed,
            new_weights=tuple(sorted(new_weights, key=lambda w: (sum(w), w))),
            visited=tuple(sorted(visited, key=lambda w: (sum(w), w))),
        )
        with self._lock:
            return self._memo.setdefault(highest_weight, result)


def essential_direct(rs: RootSystemData, sequence: BirationalSequence, order: MonomialOrderSpec,
                     highest_weight: Sequence[int], **engine_options) -> EssentialSet:
    return EssentialEngine(rs, sequence, order, **engine_options).essential_direct(highest_weight)


def compute_basis(rs: RootSystemData, sequence: BirationalSequence, order: MonomialOrderSpec,
                  highest_weight: Sequence[int], **engine_options) -> EssentialSet:
    return EssentialEngine(rs, sequence, order, **engine_options).compute_basis(highest_weight)
