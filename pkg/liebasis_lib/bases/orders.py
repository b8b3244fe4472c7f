# liebasis_lib/bases/orders.py
"""
Monomial orders on exponent vectors.

Every order is a strict total order on N^M; compare() returns -1, 0 or 1.
The engine only ever compares exponents of equal weight, hence of equal
(weighted) degree, so no well-ordering questions arise.
"""

import functools
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from ..errors import OrderError

ORDER_KINDS = ("lex", "invlex", "neglex", "deglex", "degrevlex", "wdegrevlex")
DEFAULT_ORDER = "degrevlex"

Exponent = Tuple[int, ...]


@dataclass(frozen=True)
class MonomialOrderSpec:
    """
    A named monomial order.

    Attributes:
        kind: One of ORDER_KINDS.
        weights: Positive per-variable weights; required for wdegrevlex only.
    """

    kind: str = DEFAULT_ORDER
    weights: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if self.kind not in ORDER_KINDS:
            raise OrderError(f"Unknown monomial order '{self.kind}'. Choose from {', '.join(ORDER_KINDS)}.")
        if self.kind == "wdegrevlex":
            if not self.weights:
                raise OrderError("wdegrevlex needs per-variable weights, e.g. 'wdegrevlex:1,2,1'.")
            if any(int(w) <= 0 for w in self.weights):
                raise OrderError(f"wdegrevlex weights must be positive, got {self.weights}.")
            object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        elif self.weights is not None:
            raise OrderError(f"Order '{self.kind}' does not take weights.")

    def __str__(self) -> str:
        return format_order(self)


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def _first_nonzero(differences: Iterable[int]) -> int:
    return next((d for d in differences if d), 0)


def compare(spec: MonomialOrderSpec, a: Sequence[int], b: Sequence[int]) -> int:
    """
    Compares two exponent vectors under the order.

    Returns:
        -1 if a < b, 0 if a == b, 1 if a > b.

    Raises:
        OrderError: On a length mismatch between a, b and the weights.
    """
    if len(a) != len(b):
        raise OrderError(f"Cannot compare exponent vectors of lengths {len(a)} and {len(b)}.")
    kind = spec.kind
    diff = [x - y for x, y in zip(a, b)]
    if kind == "lex":
        return _sign(_first_nonzero(diff))
    if kind == "neglex":
        return -_sign(_first_nonzero(diff))
    if kind == "invlex":
        return _sign(_first_nonzero(reversed(diff)))
    if kind == "deglex":
        degree = sum(diff)
        return _sign(degree) if degree else _sign(_first_nonzero(diff))
    if kind == "wdegrevlex":
        if len(spec.weights) != len(a):
            raise OrderError(f"wdegrevlex has {len(spec.weights)} weights for vectors of length {len(a)}.")
        degree = sum(w * d for w, d in zip(spec.weights, diff))
    else:
        degree = sum(diff)
    if degree:
        return _sign(degree)
    # reverse lexicographic tie-break: a negative last difference makes a greater
    return -_sign(_first_nonzero(reversed(diff)))


def sort_key(spec: MonomialOrderSpec):
    return functools.cmp_to_key(lambda a, b: compare(spec, a, b))


def sort_ascending(spec: MonomialOrderSpec, vectors: Iterable[Sequence[int]]) -> List[Exponent]:
    return sorted((tuple(v) for v in vectors), key=sort_key(spec))


def min_of(spec: MonomialOrderSpec, vectors: Iterable[Sequence[int]]) -> Exponent:
    """
    The smallest exponent vector under the order.

    Raises:
        OrderError: If the collection is empty.
    """
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        raise OrderError("Cannot take the minimum of an empty set of exponent vectors.")
    return min(vectors, key=sort_key(spec))


def parse_order(text: str) -> MonomialOrderSpec:
    """
    Parses the CLI spelling of an order: 'lex', ..., 'wdegrevlex:1,2,1'.

    Raises:
        OrderError: If the name or the weights are malformed.
    """
    text = text.strip()
    name, _, weights = text.partition(":")
    name = name.strip().lower()
    if not weights:
        return MonomialOrderSpec(name)
    try:
        parsed = tuple(int(w.strip()) for w in weights.split(","))
    except ValueError:
        raise OrderError(f"Invalid weights in order '{text}'. Use comma-separated integers.")
    return MonomialOrderSpec(name, parsed)


def format_order(spec: MonomialOrderSpec) -> str:
    if spec.weights:
        return f"{spec.kind}:{','.join(str(w) for w in spec.weights)}"
    return spec.kind
