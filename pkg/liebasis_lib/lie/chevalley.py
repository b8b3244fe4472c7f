# liebasis_lib/lie/chevalley.py
"""
Chevalley basis structure constants and the bracket of basis elements.

Root vectors are fixed by extraspecial pairs relative to the canonical root
enumeration: for a non-simple positive root xi, alpha is the first root in the
enumeration with xi - alpha a positive root, beta = xi - alpha, and

    e_xi = [e_alpha, e_beta] / (p + 1),    f_xi = -[f_alpha, f_beta] / (p + 1),

with p the largest integer such that beta - p*alpha is a root. Brackets are
evaluated as commutators of matrices in the smallest fundamental module, which
is faithful, and read off as multiples of the root vectors.

Basis elements are written ("e", k), ("f", k) for the k-th positive root
(0-based, canonical enumeration) and ("h", i) for the simple coroots.
"""

import functools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Mapping, Optional, Tuple

from ..errors import InternalConsistencyError
from .highest_weight import HighestWeightModule
from .rootdata import RootSystemData, RootVector, weyl_dimension

logger = logging.getLogger(__name__)

BasisElement = Tuple[str, int]
SparseMatrix = Dict[int, Dict[int, Fraction]]


# --- Sparse matrices ---------------------------------------------------------

def _mat_mul(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    result: SparseMatrix = {}
    for r, row in a.items():
        acc: Dict[int, Fraction] = {}
        for k, x in row.items():
            for c, y in b.get(k, {}).items():
                acc[c] = acc.get(c, 0) + x * y
        acc = {c: v for c, v in acc.items() if v}
        if acc:
            result[r] = acc
    return result


def _mat_comb(a: SparseMatrix, b: SparseMatrix, ca, cb) -> SparseMatrix:
    result: SparseMatrix = {}
    for source, coefficient in ((a, ca), (b, cb)):
        for r, row in source.items():
            target = result.setdefault(r, {})
            for c, x in row.items():
                target[c] = target.get(c, 0) + coefficient * x
    return {r: {c: x for c, x in row.items() if x} for r, row in result.items() if any(row.values())}


def _commutator(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    return _mat_comb(_mat_mul(a, b), _mat_mul(b, a), 1, -1)


def _ratio(a: SparseMatrix, b: SparseMatrix) -> Fraction:
    """The scalar c with a = c * b."""
    r = next(iter(b))
    c = next(iter(b[r]))
    scalar = Fraction(a.get(r, {}).get(c, 0)) / b[r][c]
    if _mat_comb(a, b, 1, -scalar):
        raise InternalConsistencyError("Commutator is not a multiple of the expected root vector.")
    return scalar


def _module_matrices(module: HighestWeightModule):
    offsets = {}
    position = 0
    for weight in module.weights():
        offsets[weight] = position
        position += module.dims[weight]
    rank = module.rs.rank

    def globalize(i, columns_of, shift):
        result: SparseMatrix = {}
        for weight in module.weights():
            columns = columns_of(i, weight)
            if not columns:
                continue
            target = tuple(w + shift * a for w, a in zip(weight, module.rs.simple_root_fw[i]))
            if target not in offsets:
                continue
            for k, column in enumerate(columns):
                for r, x in enumerate(column):
                    if x:
                        result.setdefault(offsets[target] + r, {})[offsets[weight] + k] = Fraction(x)
        return result

    raising, lowering = [], []
    for i in range(rank):
        raising.append(globalize(i, module.raise_matrix, +1))
        lowering.append(globalize(i, module.lower_matrix, -1))
    return raising, lowering


# --- Chevalley basis ---------------------------------------------------------

@dataclass(frozen=True, eq=False)
class ChevalleyBasis:
    """
    Structure constants of a Chevalley basis.

    Attributes:
        rs: The root system.
        extraspecial: Per positive root, (alpha, beta) indices of its extraspecial
            pair, or None for simple roots.
        signs: Per positive root, +1 or -1; -1 negates both e and f of that root
            relative to the extraspecial convention.
        nconst: N[alpha, beta] for signed roots (simple-root coordinates) whose
            sum is a root: [e_alpha, e_beta] = N e_{alpha+beta}, e_{-gamma} = f_gamma.
    """

    rs: RootSystemData
    extraspecial: Tuple[Optional[Tuple[int, int]], ...]
    signs: Tuple[int, ...]
    nconst: Mapping[Tuple[RootVector, RootVector], int]

    def structure_constant(self, alpha: RootVector, beta: RootVector) -> int:
        return self.nconst.get((tuple(alpha), tuple(beta)), 0)

    def signed_root(self, element: BasisElement) -> RootVector:
        kind, k = element
        root = self.rs.positive_roots[k]
        return root if kind == "e" else tuple(-c for c in root)

    def element_for_root(self, root: RootVector) -> BasisElement:
        if all(c >= 0 for c in root):
            return ("e", self.rs.root_index[tuple(root)])
        return ("f", self.rs.root_index[tuple(-c for c in root)])

    def f_bracket(self, a: int, b: int) -> Optional[Tuple[int, int]]:
        """[f_a, f_b] as (index, coefficient), or None when it vanishes."""
        total = tuple(x + y for x, y in zip(self.rs.positive_roots[a], self.rs.positive_roots[b]))
        index = self.rs.root_index.get(total)
        if index is None:
            return None
        negatives = (self.signed_root(("f", a)), self.signed_root(("f", b)))
        return index, self.nconst[negatives]


def string_length_below(rs: RootSystemData, alpha: RootVector, beta: RootVector) -> int:
    """Largest p >= 0 such that beta - p*alpha is a root."""
    p = 0
    while rs.is_root(tuple(b - (p + 1) * a for a, b in zip(alpha, beta))):
        p += 1
    return p


def _extraspecial_pairs(rs: RootSystemData) -> Tuple[Optional[Tuple[int, int]], ...]:
    pairs = []
    for xi in rs.positive_roots:
        if sum(xi) == 1:
            pairs.append(None)
            continue
        for a, alpha in enumerate(rs.positive_roots):
            rest = tuple(x - y for x, y in zip(xi, alpha))
            if rest in rs.root_index:
                pairs.append((a, rs.root_index[rest]))
                break
    return tuple(pairs)


def _faithful_module(rs: RootSystemData) -> HighestWeightModule:
    fundamentals = [tuple(1 if j == i else 0 for j in range(rs.rank)) for i in range(rs.rank)]
    smallest = min(fundamentals, key=lambda w: (weyl_dimension(rs, w), tuple(-c for c in w)))
    return HighestWeightModule(rs, smallest)


@functools.lru_cache(maxsize=None)
def build_chevalley(rs: RootSystemData, flipped: FrozenSet[int] = frozenset()) -> ChevalleyBasis:
    """
    Computes the structure constants N[alpha, beta] of the Chevalley basis.

    Args:
        rs: The root system.
        flipped: 0-based indices of positive roots whose e and f are negated.
            Any choice gives a Chevalley basis; essential sets do not depend on it.

    Returns:
        The ChevalleyBasis, cached per (rs, flipped).
    """
    pairs = _extraspecial_pairs(rs)
    module = _faithful_module(rs)
    raising, lowering = _module_matrices(module)
    roots = rs.positive_roots
    e_mats, f_mats = [], []
    for k, root in enumerate(roots):
        if pairs[k] is None:
            i = root.index(1)
            e_mats.append(raising[i])
            f_mats.append(lowering[i])
            continue
        a, b = pairs[k]
        scale = Fraction(1, string_length_below(rs, roots[a], roots[b]) + 1)
        e_mats.append(_mat_comb(_commutator(e_mats[a], e_mats[b]), {}, scale, 0))
        f_mats.append(_mat_comb(_commutator(f_mats[a], f_mats[b]), {}, -scale, 0))

    def matrix_of(signed: RootVector) -> SparseMatrix:
        if all(c >= 0 for c in signed):
            return e_mats[rs.root_index[signed]]
        return f_mats[rs.root_index[tuple(-c for c in signed)]]

    signs = tuple(-1 if k in flipped else 1 for k in range(len(roots)))

    def sign_of(signed: RootVector) -> int:
        key = signed if all(c >= 0 for c in signed) else tuple(-c for c in signed)
        return signs[rs.root_index[key]]

    signed_roots = list(roots) + [tuple(-c for c in r) for r in roots]
    nconst: Dict[Tuple[RootVector, RootVector], int] = {}
    for alpha in signed_roots:
        for beta in signed_roots:
            total = tuple(x + y for x, y in zip(alpha, beta))
            if (alpha, beta) in nconst or not rs.is_root(total):
                continue
            value = _ratio(_commutator(matrix_of(alpha), matrix_of(beta)), matrix_of(total))
            if value.denominator != 1:
                raise InternalConsistencyError(f"N[{alpha}, {beta}] = {value} is not an integer.")
            value = int(value) * sign_of(alpha) * sign_of(beta) * sign_of(total)
            nconst[(alpha, beta)] = value
            nconst[(beta, alpha)] = -value
    logger.debug("Computed %d structure constants for %s.", len(nconst), rs.name)
    return ChevalleyBasis(rs=rs, extraspecial=pairs, signs=signs, nconst=nconst)


def bracket(cb: ChevalleyBasis, x: BasisElement, y: BasisElement) -> Dict[BasisElement, int]:
    """
    [x, y] for Chevalley basis elements, as an integer combination of basis elements.

    Relations: [h_i, e_b] = <b, alpha_i^vee> e_b, [h_i, f_b] = -<b, alpha_i^vee> f_b,
    [e_a, f_a] = h_a written over the simple coroots, and
    [x_alpha, x_beta] = N[alpha, beta] x_{alpha+beta} when alpha + beta is a root.
    """
    rs = cb.rs
    kind_x, index_x = x
    kind_y, index_y = y
    if kind_x == "h" and kind_y == "h":
        return {}
    if kind_x == "h":
        value = rs.pairing(rs.positive_roots[index_y], index_x)
        value = value if kind_y == "e" else -value
        return {y: value} if value else {}
    if kind_y == "h":
        return {element: -c for element, c in bracket(cb, y, x).items()}
    alpha = cb.signed_root(x)
    beta = cb.signed_root(y)
    total = tuple(a + b for a, b in zip(alpha, beta))
    if not any(total):
        coroot = rs.coroot_coefficients(rs.positive_roots[index_x])
        sign = 1 if kind_x == "e" else -1
        return {("h", i): sign * c for i, c in enumerate(coroot) if c}
    if not rs.is_root(total):
        return {}
    return {cb.element_for_root(total): cb.structure_constant(alpha, beta)}
