# liebasis_lib/lie/modules.py
"""
Module backend: the Verma module M(lambda) on PBW monomials, its contravariant
form, and the irreducible quotient V(lambda) used as the rank oracle.

PBW monomials are exponent tuples a over the canonical positive-root
enumeration and stand for f_{g_1}^{a_1} ... f_{g_N}^{a_N} v_lambda, the
leftmost factor having the smallest index. Because the canonical enumeration
is ordered by height, the commutator of two f's always lands on a root of
larger index, which is what makes left multiplication terminate.

Two realizations of V(lambda) are available:
- "irreducible": explicit matrices of every f_beta on the weight spaces of
  V(lambda) (HighestWeightModule plus extraspecial-pair commutators);
- "verma": rows of the contravariant Gram matrix, i.e. M(lambda) modulo the
  radical of the form.
Both give the same ranks; the first is much faster and is the default.
"""

import functools
import logging
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from ..errors import RootSystemError
from .chevalley import ChevalleyBasis
from .highest_weight import HighestWeightModule
from .linalg import EchelonBasis, bareiss_rank, mat_vec
from .rootdata import RootSystemData, Weight, check_weight, root_difference, root_partitions

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]
Combination = Dict[Monomial, Fraction]
Vector = Tuple[Fraction, ...]

BACKENDS = ("irreducible", "verma")


def _bump(monomial: Monomial, position: int, step: int) -> Monomial:
    return monomial[:position] + (monomial[position] + step,) + monomial[position + 1:]


def _accumulate(target: Combination, monomial: Monomial, value) -> None:
    updated = target.get(monomial, 0) + value
    if updated:
        target[monomial] = updated
    else:
        target.pop(monomial, None)


@dataclass(frozen=True)
class VermaVector:
    """
    A homogeneous vector of M(lambda): PBW monomial -> exact rational coefficient.

    Attributes:
        weight: Weight of every monomial, in fundamental-weight coordinates.
        entries: Nonzero coefficients keyed by exponent tuples of length N.
    """

    weight: Weight
    entries: Mapping[Monomial, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {m: Fraction(c) for m, c in self.entries.items() if c}
        object.__setattr__(self, "entries", cleaned)

    @property
    def is_zero(self) -> bool:
        return not self.entries

    @classmethod
    def highest(cls, rs: RootSystemData, highest_weight: Sequence[int]) -> "VermaVector":
        return cls(tuple(highest_weight), {(0,) * rs.num_positive: Fraction(1)})


def monomial_weight(rs: RootSystemData, highest_weight: Sequence[int], monomial: Monomial) -> Weight:
    """lambda - sum a_k beta_k in fundamental-weight coordinates."""
    weight = list(highest_weight)
    for k, a in enumerate(monomial):
        if a:
            for i, c in enumerate(rs.root_fw[k]):
                weight[i] -= a * c
    return tuple(weight)


# --- U(n-) -------------------------------------------------------------------

class PBWAlgebra:
    """Left multiplication by f_k on PBW monomials of U(n-), memoized."""

    def __init__(self, cb: ChevalleyBasis):
        self.cb = cb
        self._memo: Dict[Tuple[int, Monomial], Combination] = {}
        self._lock = threading.Lock()

    def left_multiply(self, k: int, monomial: Monomial) -> Combination:
        key = (k, monomial)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        first = next((p for p, a in enumerate(monomial) if a), None)
        if first is None or first >= k:
            result = {_bump(monomial, k, +1): Fraction(1)}
        else:
            # f_k f_j X = f_j (f_k X) + [f_k, f_j] X, and f_j stays leftmost
            rest = _bump(monomial, first, -1)
            result: Combination = {}
            for m, c in self.left_multiply(k, rest).items():
                _accumulate(result, _bump(m, first, +1), c)
            commutator = self.cb.f_bracket(k, first)
            if commutator is not None:
                target, n = commutator
                for m, c in self.left_multiply(target, rest).items():
                    _accumulate(result, m, n * c)
        with self._lock:
            self._memo.setdefault(key, result)
        return result


@functools.lru_cache(maxsize=None)
def pbw_algebra(cb: ChevalleyBasis) -> PBWAlgebra:
    return PBWAlgebra(cb)


# --- M(lambda) ---------------------------------------------------------------

@dataclass
class WeightSpaceContext:
    """
    The weight space M(lambda)_mu with its contravariant Gram matrix.

    gram and rank are computed on first access.
    """

    highest_weight: Weight
    weight: Weight
    pbw_basis: List[Monomial]
    module: "VermaModule" = field(repr=False)

    @functools.cached_property
    def index(self) -> Dict[Monomial, int]:
        return {m: i for i, m in enumerate(self.pbw_basis)}

    @functools.cached_property
    def gram(self) -> List[List[Fraction]]:
        size = len(self.pbw_basis)
        matrix = [[Fraction(0)] * size for _ in range(size)]
        for i, a in enumerate(self.pbw_basis):
            for j in range(i, size):
                value = self.module.monomial_pairing(a, self.pbw_basis[j])
                matrix[i][j] = value
                matrix[j][i] = value
        return matrix

    @functools.cached_property
    def rank(self) -> int:
        return bareiss_rank(self.gram)

    def row(self, vector: VermaVector) -> List[Fraction]:
        """The rank-filter row of a vector: its Gram row, after a weight check."""
        if vector.weight != self.weight:
            raise RootSystemError(f"Vector of weight {vector.weight} offered to weight space {self.weight}.")
        return self.gram_row(vector)

    def gram_row(self, vector: VermaVector) -> List[Fraction]:
        """Pairings of the vector with every PBW basis vector of the space."""
        row = [Fraction(0)] * len(self.pbw_basis)
        for monomial, coefficient in vector.entries.items():
            for j, x in enumerate(self.gram[self.index[monomial]]):
                if x:
                    row[j] += coefficient * x
        return row


class VermaModule:
    """M(lambda) for a fixed Chevalley basis, with memoized raising and pairings."""

    def __init__(self, cb: ChevalleyBasis, highest_weight: Sequence[int]):
        self.cb = cb
        self.rs = cb.rs
        self.highest_weight = check_weight(cb.rs, highest_weight)
        self.pbw = pbw_algebra(cb)
        self._raise_memo: Dict[Tuple[int, Monomial], Combination] = {}
        self._pair_memo: Dict[Tuple[Monomial, Monomial], Fraction] = {}
        self._contexts: Dict[Weight, WeightSpaceContext] = {}
        self._lock = threading.Lock()

    def weight_of(self, monomial: Monomial) -> Weight:
        return monomial_weight(self.rs, self.highest_weight, monomial)

    def raise_monomial(self, k: int, monomial: Monomial) -> Combination:
        """e_k f^a v_lambda in PBW normal form."""
        key = (k, monomial)
        cached = self._raise_memo.get(key)
        if cached is not None:
            return cached
        result: Combination = {}
        first = next((p for p, a in enumerate(monomial) if a), None)
        if first is not None:
            rest = _bump(monomial, first, -1)
            # e_k f_j X = f_j (e_k X) + [e_k, f_j] X
            for m, c in self.raise_monomial(k, rest).items():
                for m2, c2 in self.pbw.left_multiply(first, m).items():
                    _accumulate(result, m2, c * c2)
            alpha = self.rs.positive_roots[k]
            gamma = self.rs.positive_roots[first]
            if k == first:
                coroot = self.rs.coroot_coefficients(alpha)
                scalar = sum(c * w for c, w in zip(coroot, self.weight_of(rest)))
                if scalar:
                    _accumulate(result, rest, Fraction(scalar))
            else:
                difference = tuple(a - g for a, g in zip(alpha, gamma))
                n = self.cb.structure_constant(alpha, tuple(-g for g in gamma))
                if n and difference in self.rs.root_index:
                    for m, c in self.raise_monomial(self.rs.root_index[difference], rest).items():
                        _accumulate(result, m, n * c)
                elif n:
                    lowered = self.rs.root_index[tuple(-d for d in difference)]
                    for m, c in self.pbw.left_multiply(lowered, rest).items():
                        _accumulate(result, m, n * c)
        with self._lock:
            self._raise_memo.setdefault(key, result)
        return result

    def monomial_pairing(self, a: Monomial, b: Monomial) -> Fraction:
        """<f^a v, f^b v>: the v_lambda coefficient of e_{g_N}^{a_N} ... e_{g_1}^{a_1} f^b v."""
        key = (a, b)
        cached = self._pair_memo.get(key)
        if cached is not None:
            return cached
        if self.weight_of(a) != self.weight_of(b):
            return Fraction(0)
        current: Combination = {b: Fraction(1)}
        for k, power in enumerate(a):
            for _ in range(power):
                raised: Combination = {}
                for m, c in current.items():
                    for m2, c2 in self.raise_monomial(k, m).items():
                        _accumulate(raised, m2, c * c2)
                current = raised
        value = current.get((0,) * self.rs.num_positive, Fraction(0))
        with self._lock:
            self._pair_memo[key] = value
            self._pair_memo[(b, a)] = value
        return value

    def context(self, weight: Sequence[int]) -> WeightSpaceContext:
        weight = tuple(weight)
        cached = self._contexts.get(weight)
        if cached is not None:
            return cached
        target = root_difference(self.rs, self.highest_weight, weight)
        if target is None:
            raise RootSystemError(f"{weight} is not below the highest weight {self.highest_weight}.")
        basis = root_partitions(self.rs.positive_roots, target)
        ctx = WeightSpaceContext(self.highest_weight, weight, basis, self)
        with self._lock:
            return self._contexts.setdefault(weight, ctx)

    def weight_spaces(self) -> List[WeightSpaceContext]:
        """Every weight space built so far, highest first."""
        with self._lock:
            contexts = list(self._contexts.values())
        return sorted(contexts, key=lambda ctx: ctx.weight, reverse=True)


@functools.lru_cache(maxsize=None)
def verma_module(cb: ChevalleyBasis, highest_weight: Weight) -> VermaModule:
    return VermaModule(cb, highest_weight)


def _root_index(rs: RootSystemData, root: Sequence[int]) -> int:
    index = rs.root_index.get(tuple(root))
    if index is None:
        raise RootSystemError(f"{tuple(root)} is not a positive root of {rs.name}.")
    return index


def apply_f(cb: ChevalleyBasis, root: Sequence[int], vector: VermaVector) -> VermaVector:
    """f_root . vector, straightened into PBW normal order."""
    rs = cb.rs
    k = _root_index(rs, root)
    pbw = pbw_algebra(cb)
    result: Combination = {}
    for monomial, coefficient in vector.entries.items():
        for m, c in pbw.left_multiply(k, monomial).items():
            _accumulate(result, m, coefficient * c)
    weight = tuple(w - r for w, r in zip(vector.weight, rs.root_fw[k]))
    return VermaVector(weight, result)


def apply_e(cb: ChevalleyBasis, root: Sequence[int], vector: VermaVector,
            highest_weight: Sequence[int]) -> VermaVector:
    """e_root . vector in M(highest_weight)."""
    rs = cb.rs
    k = _root_index(rs, root)
    module = verma_module(cb, check_weight(rs, highest_weight))
    result: Combination = {}
    for monomial, coefficient in vector.entries.items():
        for m, c in module.raise_monomial(k, monomial).items():
            _accumulate(result, m, coefficient * c)
    weight = tuple(w + r for w, r in zip(vector.weight, rs.root_fw[k]))
    return VermaVector(weight, result)


def contravariant_form(cb: ChevalleyBasis, highest_weight: Sequence[int],
                       x: VermaVector, y: VermaVector) -> Fraction:
    """<x, y> with <f_beta u, w> = <u, e_beta w> and <v_lambda, v_lambda> = 1."""
    if x.weight != y.weight:
        return Fraction(0)
    module = verma_module(cb, check_weight(cb.rs, highest_weight))
    total = Fraction(0)
    for a, ca in x.entries.items():
        for b, cb_ in y.entries.items():
            total += ca * cb_ * module.monomial_pairing(a, b)
    return total


def contravariant_gram(rs: RootSystemData, cb: ChevalleyBasis,
                       highest_weight: Sequence[int], weight: Sequence[int]) -> WeightSpaceContext:
    """The weight space M(lambda)_mu with its (lazily computed) Gram matrix."""
    if cb.rs != rs:
        raise RootSystemError(f"Chevalley basis of {cb.rs.name} used with {rs.name}.")
    return verma_module(cb, check_weight(rs, highest_weight)).context(weight)


def monomial_vector(cb: ChevalleyBasis, sequence_indices: Sequence[int],
                    exponents: Sequence[int], highest_weight: Sequence[int]) -> VermaVector:
    """
    f_{b_1}^{k_1} ... f_{b_M}^{k_M} v_lambda, applying f_{b_M} first.

    Args:
        cb: The Chevalley basis.
        sequence_indices: 0-based canonical indices of the sequence roots, or
            a BirationalSequence.
        exponents: k, one entry per sequence position.
        highest_weight: lambda.
    """
    sequence_indices = tuple(getattr(sequence_indices, "indices", sequence_indices))
    if len(sequence_indices) != len(exponents):
        raise RootSystemError(
            f"Exponent vector of length {len(exponents)} for a sequence of length {len(sequence_indices)}."
        )
    rs = cb.rs
    vector = VermaVector.highest(rs, check_weight(rs, highest_weight))
    for index, power in zip(reversed(sequence_indices), reversed(exponents)):
        for _ in range(power):
            vector = apply_f(cb, rs.positive_roots[index], vector)
    return vector


@dataclass
class SequenceWeightSpace:
    """
    V(lambda)_mu seen through an image map: the row of an exponent vector k is
    the coordinate vector of f^k v_lambda returned by image_map.
    """

    weight: Weight
    image: Callable[[Tuple[int, ...]], Sequence[Fraction]] = field(repr=False)
    weight_of: Callable[[Tuple[int, ...]], Weight] = field(repr=False)

    def row(self, exponents: Sequence[int]) -> Sequence[Fraction]:
        exponents = tuple(exponents)
        weight = self.weight_of(exponents)
        if weight != self.weight:
            raise RootSystemError(f"Exponent {exponents} of weight {weight} offered to weight space {self.weight}.")
        return self.image(exponents)


def rank_filter(ctx, vectors: Iterable, echelon: Optional[EchelonBasis] = None,
                limit: Optional[int] = None) -> List[bool]:
    """
    Marks the vectors that raise the rank in V(lambda)_mu, in the given order.

    Args:
        ctx: The weight space; a WeightSpaceContext (Verma vectors, rows of
            the Gram matrix) or a SequenceWeightSpace (exponent vectors).
        vectors: Vectors of that weight space, in the order to try them.
        echelon: Rows already accepted; extended in place.
        limit: Stop consuming vectors once this many have been accepted.

    Returns:
        One flag per vector consumed.

    Raises:
        RootSystemError: If a vector does not lie in the weight space of ctx.
    """
    echelon = echelon if echelon is not None else EchelonBasis()
    flags: List[bool] = []
    accepted = 0
    for vector in vectors:
        if limit is not None and accepted >= limit:
            break
        flag = echelon.add(ctx.row(vector))
        flags.append(flag)
        accepted += flag
    return flags


# --- V(lambda) ---------------------------------------------------------------

class IrreducibleModule:
    """
    V(lambda) with every f_beta (beta > 0) acting on weight-space coordinates.

    The simple f_i come from HighestWeightModule; for a non-simple root with
    extraspecial pair (a, b), f_{a+b} = [f_a, f_b] / N[-a, -b].
    """

    def __init__(self, cb: ChevalleyBasis, highest_weight: Sequence[int]):
        self.cb = cb
        self.rs = cb.rs
        self.realization = HighestWeightModule(cb.rs, highest_weight)
        self.highest_weight = self.realization.highest_weight
        self._columns: Dict[Tuple[int, Weight], Optional[List[Vector]]] = {}
        self._images: Dict[Tuple[Tuple[int, ...], int, Tuple[int, ...]], Tuple[Weight, Optional[Vector]]] = {}
        self._lock = threading.Lock()

    @property
    def dims(self) -> Dict[Weight, int]:
        return self.realization.dims

    def multiplicity(self, weight: Sequence[int]) -> int:
        return self.dims.get(tuple(weight), 0)

    def _shift(self, weight: Weight, k: int) -> Weight:
        return tuple(w - r for w, r in zip(weight, self.rs.root_fw[k]))

    def lowering_columns(self, k: int, weight: Weight) -> Optional[List[Vector]]:
        """Columns of f_k : V_weight -> V_{weight - beta_k}, or None if it is zero."""
        key = (k, weight)
        if key in self._columns:
            return self._columns[key]
        target = self._shift(weight, k)
        columns: Optional[List[Vector]] = None
        if weight in self.dims and target in self.dims:
            pair = self.cb.extraspecial[k]
            if pair is None:
                simple = self.rs.positive_roots[k].index(1)
                raw = self.realization.lower_matrix(simple, weight)
                sign = self.cb.signs[k]
                if raw is not None:
                    columns = [tuple(sign * x for x in column) for column in raw]
            else:
                a, b = pair
                _, n = self.cb.f_bracket(a, b)
                size = self.dims[target]
                columns = []
                for s in range(self.dims[weight]):
                    unit = tuple(Fraction(1) if t == s else Fraction(0) for t in range(self.dims[weight]))
                    ab = self._lower_path((b, a), weight, unit)
                    ba = self._lower_path((a, b), weight, unit)
                    columns.append(tuple((x - y) / n for x, y in zip(ab or (0,) * size, ba or (0,) * size)))
                if not any(any(column) for column in columns):
                    columns = None
        with self._lock:
            self._columns[key] = columns
        return columns

    def _lower_path(self, path: Sequence[int], weight: Weight, vector: Vector) -> Optional[Vector]:
        """Applies f_{path[0]} first, then f_{path[1]}, and so on."""
        current: Optional[Vector] = vector
        for k in path:
            if current is None:
                return None
            current = self.lower(k, weight, current)
            weight = self._shift(weight, k)
        return current

    def lower(self, k: int, weight: Weight, vector: Sequence) -> Optional[Vector]:
        """f_k applied to a vector of V_weight; None when the result is zero by weight."""
        columns = self.lowering_columns(k, weight)
        if columns is None:
            return None
        return tuple(mat_vec(columns, vector, self.dims[self._shift(weight, k)]))

    def highest_vector(self) -> Vector:
        return (Fraction(1),)

    def image(self, vector: VermaVector) -> Vector:
        """Coordinates in V(lambda)_mu of the image of a vector of M(lambda)_mu."""
        size = self.multiplicity(vector.weight)
        total = [Fraction(0)] * size
        for monomial, coefficient in vector.entries.items():
            path = [k for k in range(len(monomial) - 1, -1, -1) for _ in range(monomial[k])]
            result = self._lower_path(path, self.highest_weight, self.highest_vector())
            if result is not None:
                for r, x in enumerate(result):
                    total[r] += coefficient * x
        return tuple(total)

    def sequence_image(self, sequence_indices: Tuple[int, ...], exponents: Tuple[int, ...]) -> Vector:
        """
        Coordinates of f_{b_1}^{k_1} ... f_{b_M}^{k_M} v_lambda in its weight space.

        Suffix products are memoized, since candidate exponents of one weight
        space share most of their tails.
        """
        weight, vector = self._suffix_image(tuple(sequence_indices), 0, tuple(exponents))
        if vector is None:
            return (Fraction(0),) * self.multiplicity(weight)
        return vector

    def _suffix_image(self, sequence: Tuple[int, ...], position: int,
                      exponents: Tuple[int, ...]) -> Tuple[Weight, Optional[Vector]]:
        if position == len(sequence):
            return self.highest_weight, self.highest_vector()
        key = (sequence, position, exponents[position:])
        cached = self._images.get(key)
        if cached is not None:
            return cached
        weight, vector = self._suffix_image(sequence, position + 1, exponents)
        k = sequence[position]
        for _ in range(exponents[position]):
            if vector is not None:
                vector = self.lower(k, weight, vector)
                if vector is not None and not any(vector):
                    vector = None
            weight = self._shift(weight, k)
        result = (weight, vector)
        with self._lock:
            self._images[key] = result
        return result


@functools.lru_cache(maxsize=None)
def irreducible_module(cb: ChevalleyBasis, highest_weight: Weight) -> IrreducibleModule:
    return IrreducibleModule(cb, highest_weight)


def image_map(cb: ChevalleyBasis, highest_weight: Weight, sequence_indices: Sequence[int],
              backend: str = "irreducible") -> Callable[[Tuple[int, ...]], Sequence[Fraction]]:
    """
    Returns k -> a coordinate vector of f^k v_lambda such that linear
    independence of the results is independence in V(lambda).

    Raises:
        RootSystemError: If the backend is unknown.
    """
    sequence = tuple(sequence_indices)
    if backend == "irreducible":
        module = irreducible_module(cb, tuple(highest_weight))
        return lambda exponents: module.sequence_image(sequence, tuple(exponents))
    if backend == "verma":
        verma = verma_module(cb, tuple(highest_weight))

        def gram_row(exponents):
            vector = monomial_vector(cb, sequence, exponents, highest_weight)
            return verma.context(vector.weight).gram_row(vector)

        return gram_row
    raise RootSystemError(f"Unknown module backend '{backend}'. Choose from {', '.join(BACKENDS)}.")
