# liebasis_lib/lie/highest_weight.py
"""
Explicit realization of the irreducible module V(lambda) by its simple
generators e_i, f_i, built weight space by weight space.

Below the highest weight a vector of V(lambda) is zero iff every e_i kills it,
so a vector x of weight nu is recorded by its "signature", the tuple of
coordinates of e_i x in the weight spaces nu + alpha_i. Lowering a basis vector
b with f_j gives

    e_i f_j b = f_j (e_i b) + delta_ij <wt(b), alpha_i^vee> b,

where f_j (e_i b) lives one level up and is already known. A maximal
independent set of signatures is kept as the basis of V(lambda)_nu, and each
f_j b is written in it.
"""

import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .linalg import EchelonBasis, mat_vec
from .rootdata import RootSystemData, Weight, check_weight

logger = logging.getLogger(__name__)

Vector = Tuple[Fraction, ...]


class HighestWeightModule:
    """
    V(lambda) on weight-space coordinates.

    Attributes:
        rs: The ambient root system.
        highest_weight: lambda in fundamental-weight coordinates.
        dims: Weight -> dimension of the weight space (only weights of V(lambda)).
        levels: Weights grouped by depth below lambda.
    """

    def __init__(self, rs: RootSystemData, highest_weight: Sequence[int]):
        self.rs = rs
        self.highest_weight: Weight = check_weight(rs, highest_weight)
        self.dims: Dict[Weight, int] = {}
        self.levels: List[List[Weight]] = []
        # (i, weight) -> columns of e_i : V_weight -> V_{weight + alpha_i}
        self._raise_cols: Dict[Tuple[int, Weight], List[Vector]] = {}
        # (j, weight) -> columns of f_j : V_weight -> V_{weight - alpha_j}
        self._lower_cols: Dict[Tuple[int, Weight], List[Vector]] = {}
        self._build()

    @property
    def dimension(self) -> int:
        return sum(self.dims.values())

    def weights(self) -> List[Weight]:
        return [w for level in self.levels for w in level]

    def _shift(self, weight: Weight, i: int, sign: int) -> Weight:
        alpha = self.rs.simple_root_fw[i]
        return tuple(w + sign * a for w, a in zip(weight, alpha))

    def raise_(self, i: int, weight: Weight, vector: Sequence) -> Optional[Vector]:
        """e_i applied to a vector of V_weight; None when the target weight space is zero."""
        target = self._shift(weight, i, +1)
        columns = self._raise_cols.get((i, weight))
        if columns is None or target not in self.dims:
            return None
        return tuple(mat_vec(columns, vector, self.dims[target]))

    def lower(self, j: int, weight: Weight, vector: Sequence) -> Optional[Vector]:
        """f_j applied to a vector of V_weight; None when the target weight space is zero."""
        target = self._shift(weight, j, -1)
        columns = self._lower_cols.get((j, weight))
        if columns is None or target not in self.dims:
            return None
        return tuple(mat_vec(columns, vector, self.dims[target]))

    def lower_matrix(self, j: int, weight: Weight) -> Optional[List[Vector]]:
        return self._lower_cols.get((j, weight))

    def raise_matrix(self, i: int, weight: Weight) -> Optional[List[Vector]]:
        return self._raise_cols.get((i, weight))

    def _signature_parts(self, target: Weight, j: int, k: int, uppers: List[int]) -> List[Vector]:
        """Signature of f_j b_k, where b_k is basis vector k of V_{target + alpha_j}."""
        source = self._shift(target, j, +1)
        unit = tuple(Fraction(1) if s == k else Fraction(0) for s in range(self.dims[source]))
        parts = []
        for i in uppers:
            size = self.dims[self._shift(target, i, +1)]
            part = [Fraction(0)] * size
            raised = self.raise_(i, source, unit)
            if raised is not None:
                lowered = self.lower(j, self._shift(source, i, +1), raised)
                if lowered is not None:
                    part = list(lowered)
            if i == j:
                part[k] += source[i]
            parts.append(tuple(part))
        return parts

    def _build(self) -> None:
        rank = self.rs.rank
        top = self.highest_weight
        self.dims[top] = 1
        self.levels.append([top])
        while True:
            candidates = sorted(
                {self._shift(w, j, -1) for w in self.levels[-1] for j in range(rank)},
                reverse=True,
            )
            next_level: List[Weight] = []
            for target in candidates:
                spanning = [
                    (j, k)
                    for j in range(rank)
                    if self._shift(target, j, +1) in self.dims
                    for k in range(self.dims[self._shift(target, j, +1)])
                ]
                uppers = [i for i in range(rank) if self._shift(target, i, +1) in self.dims]
                parts = [self._signature_parts(target, j, k, uppers) for j, k in spanning]
                flat = [tuple(x for part in p for x in part) for p in parts]
                echelon = EchelonBasis()
                basis = [idx for idx, sig in enumerate(flat) if echelon.add(sig)]
                if not basis:
                    continue
                self.dims[target] = len(basis)
                for pos, i in enumerate(uppers):
                    self._raise_cols[(i, target)] = [parts[idx][pos] for idx in basis]
                for idx, (j, k) in enumerate(spanning):
                    source = self._shift(target, j, +1)
                    columns = self._lower_cols.setdefault((j, source), [None] * self.dims[source])
                    columns[k] = tuple(echelon.express(flat[idx]))
                next_level.append(target)
            if not next_level:
                break
            self.levels.append(next_level)
        logger.debug(
            "Realized V%s of %s: %d weights, dimension %d.",
            self.highest_weight, self.rs.name, len(self.dims), self.dimension,
        )
