# liebasis_lib/lie/linalg.py
"""
Exact rational linear algebra used by the module backend.

Vectors are dense sequences (of int or Fraction); internally the echelon rows
are kept sparse as {column: Fraction}.
"""

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

SparseRow = Dict[int, Fraction]


def _sparse(vector: Sequence) -> SparseRow:
    return {c: Fraction(x) for c, x in enumerate(vector) if x != 0}


class EchelonBasis:
    """
    Incrementally maintained row echelon form over Q.

    Every accepted vector gets a serial number (0, 1, ...). Each stored row is
    reduced against all earlier rows and remembers how it is written in terms
    of the accepted vectors, so any vector in the span can be expressed in the
    accepted ones.
    """

    def __init__(self) -> None:
        self._rows: List[Tuple[int, SparseRow, SparseRow]] = []  # (pivot, row, combination)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def _reduce(self, vector: Sequence) -> Tuple[SparseRow, SparseRow]:
        residual = _sparse(vector)
        used: SparseRow = {}
        for pivot, row, combination in self._rows:
            value = residual.get(pivot)
            if not value:
                continue
            factor = value / row[pivot]
            for c, x in row.items():
                updated = residual.get(c, 0) - factor * x
                if updated:
                    residual[c] = updated
                else:
                    residual.pop(c, None)
            for k, x in combination.items():
                updated = used.get(k, 0) + factor * x
                if updated:
                    used[k] = updated
                else:
                    used.pop(k, None)
        return residual, used

    def is_independent(self, vector: Sequence) -> bool:
        residual, _ = self._reduce(vector)
        return bool(residual)

    def add(self, vector: Sequence) -> bool:
        """Adds the vector if it is independent of the accepted ones; returns whether it was."""
        residual, used = self._reduce(vector)
        if not residual:
            return False
        serial = self.rank
        combination = {k: -x for k, x in used.items()}
        combination[serial] = Fraction(1)
        self._rows.append((min(residual), residual, combination))
        return True

    def express(self, vector: Sequence) -> Optional[List[Fraction]]:
        """Coordinates of the vector over the accepted vectors, or None if outside their span."""
        residual, used = self._reduce(vector)
        if residual:
            return None
        return [used.get(k, Fraction(0)) for k in range(self.rank)]


def bareiss_rank(matrix: Sequence[Sequence]) -> int:
    """Rank of an exact matrix by fraction-free (Bareiss) elimination."""
    rows = [[Fraction(x) for x in row] for row in matrix]
    if not rows or not rows[0]:
        return 0
    n_rows, n_cols = len(rows), len(rows[0])
    rank = 0
    previous = Fraction(1)
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank][col]
        for r in range(rank + 1, n_rows):
            factor = rows[r][col]
            for c in range(col, n_cols):
                rows[r][c] = (p * rows[r][c] - factor * rows[rank][c]) / previous
        previous = p
        rank += 1
        if rank == n_rows:
            break
    return rank


def mat_vec(columns: Sequence[Sequence], vector: Sequence, size: int) -> List[Fraction]:
    """Applies a matrix given by its columns to a dense vector."""
    result = [Fraction(0)] * size
    for coefficient, column in zip(vector, columns):
        if coefficient:
            for r, x in enumerate(column):
                if x:
                    result[r] += coefficient * x
    return result
