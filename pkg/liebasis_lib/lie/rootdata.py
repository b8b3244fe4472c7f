# liebasis_lib/lie/rootdata.py
"""
Root systems of the simple complex Lie algebras of types A-G.

This module provides the Cartan data every other part of liebasis works with:
positive roots in a canonical enumeration, Weyl group words, conversions
between fundamental-weight and simple-root coordinates, and the Weyl
dimension and Freudenthal multiplicity formulas.

Conventions:
- Simple roots follow the Bourbaki numbering (G2: alpha_1 short).
- cartan[i][j] = <alpha_j, alpha_i^vee>.
- Roots are stored as coefficient vectors over the simple roots, weights as
  integer coefficient vectors over the fundamental weights.
- Weyl group letters are 1-based, exactly as they are printed.
"""

import functools
import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import sympy

from ..errors import BudgetExceededError, InternalConsistencyError, RootSystemError

logger = logging.getLogger(__name__)

Weight = Tuple[int, ...]
RootVector = Tuple[int, ...]
WeylWord = Tuple[int, ...]

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")

# Classical |R+| per family, used to validate the generated root systems.
_POSITIVE_ROOT_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


def validate_cartan_type(family: str, rank: int) -> str:
    """
    Checks that (family, rank) names a simple Lie algebra.

    Args:
        family: One of the letters A-G (case-insensitive).
        rank: The rank of the Lie algebra.

    Returns:
        The normalized (upper-case) family letter.

    Raises:
        RootSystemError: If the pair is not a valid Cartan type.
    """
    fam = str(family).strip().upper()
    if fam not in FAMILIES:
        raise RootSystemError(f"Unknown Cartan type '{family}'. Choose from {', '.join(FAMILIES)}.")
    if not isinstance(rank, int) or rank < 1:
        raise RootSystemError(f"Rank must be a positive integer, got {rank!r}.")
    valid = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 4,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }[fam]
    if not valid:
        raise RootSystemError(f"There is no simple Lie algebra of type {fam}{rank}.")
    return fam


def cartan_matrix(family: str, rank: int) -> Tuple[Tuple[int, ...], ...]:
    """Returns the Cartan matrix of the given type in Bourbaki numbering."""
    fam = validate_cartan_type(family, rank)
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def link(i: int, j: int, a_ij: int = -1, a_ji: int = -1) -> None:
        a[i][j] = a_ij
        a[j][i] = a_ji

    if fam == "A":
        for i in range(rank - 1):
            link(i, i + 1)
    elif fam == "B":
        for i in range(rank - 2):
            link(i, i + 1)
        link(rank - 2, rank - 1, -1, -2)  # alpha_n short
    elif fam == "C":
        for i in range(rank - 2):
            link(i, i + 1)
        link(rank - 2, rank - 1, -2, -1)  # alpha_n long
    elif fam == "D":
        for i in range(rank - 2):
            link(i, i + 1)
        link(rank - 3, rank - 1)
    elif fam == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, rank - 1):
            link(i, i + 1)
    elif fam == "F":
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    elif fam == "G":
        link(0, 1, -3, -1)  # alpha_1 short
    return tuple(tuple(row) for row in a)


def _symmetrizer(cartan: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    # d_i a_ij = d_j a_ji; d_i = (alpha_i, alpha_i) / 2 with the short roots at 1.
    rank = len(cartan)
    d: List[Optional[Fraction]] = [None] * rank
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(rank):
            if j != i and cartan[i][j] != 0 and d[j] is None:
                d[j] = d[i] * cartan[i][j] / cartan[j][i]
                stack.append(j)
    denominators = math.lcm(*(x.denominator for x in d))
    scaled = [int(x * denominators) for x in d]
    common = math.gcd(*scaled)
    return tuple(x // common for x in scaled)


def _generate_positive_roots(cartan: Sequence[Sequence[int]]) -> List[RootVector]:
    """Closes the simple roots under root strings, height by height."""
    rank = len(cartan)
    simple = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    found = set(simple)
    layer = list(simple)
    roots = list(simple)
    while layer:
        next_layer = set()
        for beta in layer:
            for i in range(rank):
                p = 0
                current = list(beta)
                while True:
                    current[i] -= 1
                    if tuple(current) in found:
                        p += 1
                    else:
                        break
                pairing = sum(cartan[i][j] * beta[j] for j in range(rank))
                if p - pairing > 0:
                    raised = list(beta)
                    raised[i] += 1
                    next_layer.add(tuple(raised))
        layer = sorted(next_layer)
        found.update(layer)
        roots.extend(layer)
    return roots


def canonical_root_key(root: RootVector) -> Tuple:
    """Ascending height, then descending lexicographic on the coefficients."""
    return (sum(root), tuple(-c for c in root))


@dataclass(frozen=True)
class RootSystemData:
    """
    Immutable Cartan data of a simple Lie algebra.

    Attributes:
        family: Cartan family letter.
        rank: Number of simple roots.
        cartan: Cartan matrix, cartan[i][j] = <alpha_j, alpha_i^vee>.
        positive_roots: Positive roots in simple-root coordinates, canonical order.
        heights: Heights of positive_roots.
        symmetrizer: d_i = (alpha_i, alpha_i)/2, short roots normalized to 1.
        root_fw: positive_roots converted to fundamental-weight coordinates.
    """

    family: str
    rank: int
    cartan: Tuple[Tuple[int, ...], ...]
    positive_roots: Tuple[RootVector, ...]
    heights: Tuple[int, ...]
    symmetrizer: Tuple[int, ...]
    root_fw: Tuple[Weight, ...]

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def num_positive(self) -> int:
        return len(self.positive_roots)

    @functools.cached_property
    def root_index(self) -> Dict[RootVector, int]:
        """Maps a positive root to its 0-based canonical index."""
        return {root: k for k, root in enumerate(self.positive_roots)}

    @functools.cached_property
    def simple_root_fw(self) -> Tuple[Weight, ...]:
        # alpha_i in fundamental weights is column i of the Cartan matrix
        return tuple(tuple(self.cartan[k][i] for k in range(self.rank)) for i in range(self.rank))

    @functools.cached_property
    def inverse_cartan(self) -> Tuple[Tuple[Fraction, ...], ...]:
        inverse = sympy.Matrix(self.cartan).inv()
        return tuple(
            tuple(Fraction(int(inverse[i, j].p), int(inverse[i, j].q)) for j in range(self.rank))
            for i in range(self.rank)
        )

    @functools.cached_property
    def roots_with_negatives(self) -> frozenset:
        return frozenset(self.positive_roots) | frozenset(tuple(-c for c in r) for r in self.positive_roots)

    def is_root(self, vector: Sequence[int]) -> bool:
        return tuple(vector) in self.roots_with_negatives

    def pairing(self, root: Sequence[int], i: int) -> int:
        """<root, alpha_i^vee> for a vector in simple-root coordinates (0-based i)."""
        return sum(self.cartan[i][j] * root[j] for j in range(self.rank))

    def root_norm2(self, root: Sequence[int]) -> int:
        """(root, root) with (alpha_i, alpha_i) = 2 d_i."""
        return sum(
            root[i] * root[j] * self.symmetrizer[i] * self.cartan[i][j]
            for i in range(self.rank) for j in range(self.rank)
        )

    def coroot_coefficients(self, root: Sequence[int]) -> Tuple[int, ...]:
        """Coefficients of root^vee over the simple coroots."""
        half_norm = self.root_norm2(root) // 2
        coefficients = []
        for i in range(self.rank):
            value = Fraction(root[i] * self.symmetrizer[i], half_norm)
            if value.denominator != 1:
                raise InternalConsistencyError(f"Coroot of {root} is not integral over simple coroots.")
            coefficients.append(int(value))
        return tuple(coefficients)

    def weight_root_product(self, weight: Sequence[int], root: Sequence[int]) -> int:
        """(weight, root) for weight in fw coordinates and root in simple-root coordinates."""
        return sum(self.symmetrizer[j] * weight[j] * root[j] for j in range(self.rank))

    def weight_inner(self, weight_a: Sequence[int], weight_b: Sequence[int]) -> Fraction:
        """Symmetric form on weights, both given in fundamental-weight coordinates."""
        coords_b = to_simple_root_coords(self, weight_b)
        return sum((self.symmetrizer[j] * weight_a[j] * coords_b[j] for j in range(self.rank)), Fraction(0))


@functools.lru_cache(maxsize=None)
def build_root_system(family: str, rank: int) -> RootSystemData:
    """
    Constructs the root system of type (family, rank).

    Positive roots are generated by closing the simple roots under root strings
    (p - <beta, alpha_i^vee> > 0 means beta + alpha_i is a root) and then sorted
    by ascending height, descending lexicographic coefficients within a height.

    Raises:
        RootSystemError: If (family, rank) is not a valid simple type.
    """
    fam = validate_cartan_type(family, rank)
    cartan = cartan_matrix(fam, rank)
    roots = sorted(_generate_positive_roots(cartan), key=canonical_root_key)
    expected = _POSITIVE_ROOT_COUNTS[fam](rank)
    if len(roots) != expected:
        raise InternalConsistencyError(f"{fam}{rank}: generated {len(roots)} positive roots, expected {expected}.")
    root_fw = tuple(
        tuple(sum(cartan[i][j] * root[j] for j in range(rank)) for i in range(rank)) for root in roots
    )
    logger.debug("Built root system %s%d with %d positive roots.", fam, rank, len(roots))
    return RootSystemData(
        family=fam,
        rank=rank,
        cartan=cartan,
        positive_roots=tuple(roots),
        heights=tuple(sum(root) for root in roots),
        symmetrizer=_symmetrizer(cartan),
        root_fw=root_fw,
    )


# --- Weights -----------------------------------------------------------------

def check_weight(rs: RootSystemData, weight: Sequence[int], dominant: bool = True) -> Weight:
    """Validates the length (and optionally dominance) of a weight."""
    weight = tuple(int(c) for c in weight)
    if len(weight) != rs.rank:
        raise RootSystemError(f"Weight {weight} has {len(weight)} coordinates, {rs.name} needs {rs.rank}.")
    if dominant and any(c < 0 for c in weight):
        raise RootSystemError(f"Weight {weight} is not dominant integral.")
    return weight


def is_dominant(weight: Sequence[int]) -> bool:
    return all(c >= 0 for c in weight)


def to_simple_root_coords(rs: RootSystemData, weight: Sequence[int]) -> Tuple[Fraction, ...]:
    """Converts fundamental-weight coordinates to (rational) simple-root coordinates."""
    inverse = rs.inverse_cartan
    return tuple(sum((inverse[i][j] * weight[j] for j in range(rs.rank)), Fraction(0)) for i in range(rs.rank))


def root_difference(rs: RootSystemData, upper: Sequence[int], lower: Sequence[int]) -> Optional[RootVector]:
    """upper - lower in simple-root coordinates if it is an N-combination of simple roots, else None."""
    diff = [u - l for u, l in zip(upper, lower)]
    coords = to_simple_root_coords(rs, diff)
    if any(c.denominator != 1 or c < 0 for c in coords):
        return None
    return tuple(int(c) for c in coords)


def weight_depth(rs: RootSystemData, highest: Sequence[int], weight: Sequence[int]) -> int:
    """Height of highest - weight (the number of simple lowerings needed)."""
    diff = root_difference(rs, highest, weight)
    if diff is None:
        raise RootSystemError(f"{tuple(weight)} is not below {tuple(highest)}.")
    return sum(diff)


def reflect_weight(rs: RootSystemData, weight: Sequence[int], i: int) -> Weight:
    """s_i(weight) in fundamental-weight coordinates (0-based i)."""
    c = weight[i]
    return tuple(weight[k] - c * rs.cartan[k][i] for k in range(rs.rank))


def reflect_root(rs: RootSystemData, root: Sequence[int], i: int) -> RootVector:
    """s_i(root) in simple-root coordinates (0-based i)."""
    result = list(root)
    result[i] -= rs.pairing(root, i)
    return tuple(result)


def dominant_conjugate(rs: RootSystemData, weight: Sequence[int]) -> Weight:
    current = tuple(weight)
    while True:
        negative = next((i for i, c in enumerate(current) if c < 0), None)
        if negative is None:
            return current
        current = reflect_weight(rs, current, negative)


def is_weight_of(rs: RootSystemData, highest: Sequence[int], weight: Sequence[int]) -> bool:
    """True iff weight occurs in V(highest): its dominant conjugate lies below highest."""
    return root_difference(rs, highest, dominant_conjugate(rs, weight)) is not None


def weyl_orbit(rs: RootSystemData, weight: Sequence[int]) -> List[Weight]:
    start = tuple(weight)
    seen = {start}
    stack = [start]
    while stack:
        current = stack.pop()
        for i in range(rs.rank):
            image = reflect_weight(rs, current, i)
            if image not in seen:
                seen.add(image)
                stack.append(image)
    return sorted(seen, reverse=True)


def weyl_dimension(rs: RootSystemData, highest: Sequence[int]) -> int:
    """
    dim V(lambda) = prod over beta > 0 of (lambda + rho, beta) / (rho, beta).

    Raises:
        RootSystemError: If the weight is not dominant integral.
    """
    highest = check_weight(rs, highest)
    shifted = tuple(c + 1 for c in highest)
    rho = (1,) * rs.rank
    value = Fraction(1)
    for root in rs.positive_roots:
        value *= Fraction(rs.weight_root_product(shifted, root), rs.weight_root_product(rho, root))
    if value.denominator != 1:
        raise InternalConsistencyError(f"Weyl dimension of {highest} is not an integer: {value}.")
    return int(value)


def dominant_weights_below(rs: RootSystemData, highest: Sequence[int]) -> List[Weight]:
    """All dominant weights of V(highest), ascending by depth."""
    highest = check_weight(rs, highest)
    seen = {highest}
    queue = [highest]
    while queue:
        current = queue.pop()
        for fw in rs.root_fw:
            lowered = tuple(c - r for c, r in zip(current, fw))
            if is_dominant(lowered) and lowered not in seen:
                seen.add(lowered)
                queue.append(lowered)
    return sorted(seen, key=lambda w: (weight_depth(rs, highest, w), tuple(-c for c in w)))


def freudenthal_multiplicities(rs: RootSystemData, highest: Sequence[int]) -> Dict[Weight, int]:
    """
    Weight multiplicities of V(highest) by Freudenthal's recursion.

    Multiplicities are computed on dominant weights and spread over Weyl orbits.
    The result is ordered by depth below the highest weight.
    """
    highest = check_weight(rs, highest)
    rho = (1,) * rs.rank
    top = rs.weight_inner(tuple(h + 1 for h in highest), tuple(h + 1 for h in highest))
    dominant_mult: Dict[Weight, int] = {}
    for weight in dominant_weights_below(rs, highest):
        if weight == highest:
            dominant_mult[weight] = 1
            continue
        numerator = 0
        for root, fw in zip(rs.positive_roots, rs.root_fw):
            k = 1
            while True:
                shifted = tuple(w + k * f for w, f in zip(weight, fw))
                if not is_weight_of(rs, highest, shifted):
                    break
                numerator += dominant_mult[dominant_conjugate(rs, shifted)] * rs.weight_root_product(shifted, root)
                k += 1
        shifted_weight = tuple(w + r for w, r in zip(weight, rho))
        denominator = top - rs.weight_inner(shifted_weight, shifted_weight)
        value = Fraction(2 * numerator) / denominator
        if value.denominator != 1:
            raise InternalConsistencyError(f"Freudenthal recursion gave {value} at weight {weight}.")
        dominant_mult[weight] = int(value)

    multiplicities: Dict[Weight, int] = {}
    for weight, mult in dominant_mult.items():
        for image in weyl_orbit(rs, weight):
            multiplicities[image] = mult
    ordered = sorted(multiplicities, key=lambda w: (weight_depth(rs, highest, w), tuple(-c for c in w)))
    return {w: multiplicities[w] for w in ordered}


def dominant_decompositions(highest: Sequence[int]) -> List[Tuple[Weight, Weight]]:
    """
    All unordered splits highest = mu1 + mu2 into nonzero dominant weights.

    Each pair is returned once with mu1 >= mu2 lexicographically.
    """
    highest = tuple(highest)
    pairs = []
    for first in itertools.product(*(range(c + 1) for c in highest)):
        second = tuple(h - f for h, f in zip(highest, first))
        if any(first) and any(second) and first >= second:
            pairs.append((tuple(first), second))
    return sorted(pairs, reverse=True)


# --- Weyl group words --------------------------------------------------------

def check_word(rs: RootSystemData, word: Sequence[int]) -> WeylWord:
    word = tuple(int(letter) for letter in word)
    bad = [letter for letter in word if not 1 <= letter <= rs.rank]
    if bad:
        raise RootSystemError(f"Letters {bad} are outside 1..{rs.rank} for {rs.name}.")
    return word


def longest_word(rs: RootSystemData) -> WeylWord:
    """
    A reduced word for w0 by greedy descent.

    Starting from -rho, repeatedly reflect at the smallest index with a negative
    coordinate until rho is reached; the letters read in order form w0.
    """
    current = (-1,) * rs.rank
    letters = []
    while True:
        negative = next((i for i, c in enumerate(current) if c < 0), None)
        if negative is None:
            break
        letters.append(negative + 1)
        current = reflect_weight(rs, current, negative)
    if len(letters) != rs.num_positive:
        raise InternalConsistencyError(f"Greedy descent gave a word of length {len(letters)} for {rs.name}.")
    return tuple(letters)


def gelfand_tsetlin_word(rs: RootSystemData) -> WeylWord:
    """The reduced word (1..n)(1..n-1)...(1 2)(1) of w0 in type A_n."""
    if rs.family != "A":
        raise RootSystemError(f"The Gelfand-Tsetlin word is defined for type A only, not {rs.name}.")
    letters: List[int] = []
    for top in range(rs.rank, 0, -1):
        letters.extend(range(1, top + 1))
    return tuple(letters)


def roots_along_word(rs: RootSystemData, word: Sequence[int]) -> List[RootVector]:
    """
    beta_k = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k}) for a reduced word.

    Raises:
        RootSystemError: If some beta_k is negative, i.e. the word is not reduced.
    """
    word = check_word(rs, word)
    result = []
    for k, letter in enumerate(word):
        root = tuple(1 if j == letter - 1 else 0 for j in range(rs.rank))
        for previous in reversed(word[:k]):
            root = reflect_root(rs, root, previous - 1)
        if any(c < 0 for c in root):
            raise RootSystemError(f"Word {word} is not reduced (position {k + 1} gives {root}).")
        result.append(root)
    return result


def is_reduced(rs: RootSystemData, word: Sequence[int]) -> bool:
    try:
        roots_along_word(rs, word)
    except RootSystemError:
        return False
    return True


def weyl_group_order(rs: RootSystemData) -> int:
    n = rs.rank
    return {
        "A": lambda: math.factorial(n + 1),
        "B": lambda: 2 ** n * math.factorial(n),
        "C": lambda: 2 ** n * math.factorial(n),
        "D": lambda: 2 ** (n - 1) * math.factorial(n),
        "E": lambda: {6: 51840, 7: 2903040, 8: 696729600}[n],
        "F": lambda: 1152,
        "G": lambda: 12,
    }[rs.family]()


# --- Lattice decompositions --------------------------------------------------

def root_partitions(
    roots: Sequence[Sequence[int]],
    target: Sequence[int],
    budget: Optional[int] = None,
) -> List[Tuple[int, ...]]:
    """
    All k in N^M with sum_j k_j roots[j] = target (simple-root coordinates).

    Bounded depth-first search: k_j never exceeds remaining[c] // roots[j][c] on
    the support of roots[j], and branches whose remainder cannot be covered by
    the later roots are cut.

    Raises:
        BudgetExceededError: If more than `budget` solutions exist.
    """
    roots = [tuple(r) for r in roots]
    target = tuple(target)
    size = len(roots)
    if any(c < 0 for c in target):
        return []
    covered_after = [frozenset()] * (size + 1)
    for j in range(size - 1, -1, -1):
        covered_after[j] = covered_after[j + 1] | {c for c, x in enumerate(roots[j]) if x}
    solutions: List[Tuple[int, ...]] = []
    exponents = [0] * size

    def search(j: int, remaining: Tuple[int, ...]) -> None:
        if not any(remaining):
            solutions.append(tuple(exponents))
            if budget is not None and len(solutions) > budget:
                raise BudgetExceededError(
                    f"More than {budget} exponent vectors solve the target {target}; "
                    f"raise ESSENTIAL_BUDGET to continue.",
                    size=len(solutions), cap=budget,
                )
            return
        if j == size:
            return
        if any(x > 0 and c not in covered_after[j] for c, x in enumerate(remaining)):
            return
        root = roots[j]
        bound = min(remaining[c] // x for c, x in enumerate(root) if x > 0)
        for n in range(bound, -1, -1):
            exponents[j] = n
            search(j + 1, tuple(r - n * x for r, x in zip(remaining, root)))
        exponents[j] = 0

    search(0, target)
    return solutions
