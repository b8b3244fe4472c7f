# liebasis_lib/bases/sequences.py
"""
Birational sequences of positive roots and the named presets.

Sequences are not checked for birationality; the essential engine notices a
non-birational sequence when some weight space cannot be filled.
"""

import json
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from ..errors import RootSystemError, SequenceError
from ..lie.rootdata import (
    RootSystemData,
    RootVector,
    WeylWord,
    check_word,
    gelfand_tsetlin_word,
    is_reduced,
    longest_word,
    roots_along_word,
)
from .orders import MonomialOrderSpec

ORIGINS = ("custom", "fflv", "string", "lusztig", "nz", "pbw")

FFLV_TIE_RULE = "within a height: reversed canonical enumeration"


@dataclass(frozen=True)
class BirationalSequence:
    """
    An ordered list of positive roots (repetitions allowed).

    Attributes:
        roots: Simple-root coefficient vectors.
        indices: 0-based canonical indices of the roots.
        origin: Which preset built the sequence, or 'custom'.
        weights: Per-position weights attached by the Lusztig preset.
        word: The Weyl group word a preset was built from, if any.
        notes: Free-form metadata (tie rules, short or non-reduced words).
    """

    roots: Tuple[RootVector, ...]
    indices: Tuple[int, ...]
    origin: str = "custom"
    weights: Optional[Tuple[int, ...]] = None
    word: Optional[WeylWord] = None
    notes: Tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.origin not in ORIGINS:
            raise SequenceError(f"Unknown sequence origin '{self.origin}'. Choose from {', '.join(ORIGINS)}.")

    def __len__(self) -> int:
        return len(self.roots)

    @property
    def one_based(self) -> Tuple[int, ...]:
        return tuple(i + 1 for i in self.indices)


def format_root(coeffs: Sequence[int]) -> str:
    """'α1 + α2', '2α1 + α2', '3α1 + 2α2'."""
    terms = []
    for i, c in enumerate(coeffs):
        if c:
            terms.append(f"{'' if c == 1 else c}α{i + 1}")
    return " + ".join(terms) if terms else "0"


def operators_listing(rs: RootSystemData) -> List[Tuple[int, RootVector]]:
    """The positive roots with their 1-based operator indices, in canonical order."""
    return [(k + 1, root) for k, root in enumerate(rs.positive_roots)]


def seq_from_indices(rs: RootSystemData, indices: Sequence[int]) -> BirationalSequence:
    """
    Builds a sequence from 1-based operator indices.

    Raises:
        SequenceError: If an index is outside 1..N.
    """
    resolved = []
    for position, index in enumerate(indices, start=1):
        if not isinstance(index, int) or not 1 <= index <= rs.num_positive:
            raise SequenceError(
                f"Entry {position} ({index!r}) is not an operator index of {rs.name}; use 1..{rs.num_positive}."
            )
        resolved.append(index - 1)
    return BirationalSequence(
        roots=tuple(rs.positive_roots[k] for k in resolved),
        indices=tuple(resolved),
    )


def seq_from_coeffs(rs: RootSystemData, vectors: Sequence[Sequence[int]]) -> BirationalSequence:
    """
    Builds a sequence from coefficient vectors over the simple roots.

    Raises:
        SequenceError: If a vector is not a positive root.
    """
    resolved = []
    for position, vector in enumerate(vectors, start=1):
        key = tuple(vector)
        if key not in rs.root_index:
            raise SequenceError(f"Entry {position} {list(key)} is not a positive root of {rs.name}.")
        resolved.append(rs.root_index[key])
    return BirationalSequence(
        roots=tuple(rs.positive_roots[k] for k in resolved),
        indices=tuple(resolved),
    )


def parse_sequence(rs: RootSystemData, text: str) -> BirationalSequence:
    """
    Parses '1,2,3,4,1,5,8,2,6,3' (operator indices) or '[[1,0],[0,1]]'
    (coefficient vectors).

    Raises:
        SequenceError: If the text is malformed or names no positive root.
    """
    text = text.strip()
    if text.startswith("["):
        try:
            vectors = json.loads(text)
        except json.JSONDecodeError as e:
            raise SequenceError(f"Could not parse sequence '{text}': {e}")
        if not isinstance(vectors, list) or not all(isinstance(v, list) for v in vectors):
            raise SequenceError(f"Expected a list of coefficient vectors, got '{text}'.")
        return seq_from_coeffs(rs, vectors)
    try:
        indices = [int(part.strip()) for part in text.split(",") if part.strip()]
    except ValueError:
        raise SequenceError(f"Invalid sequence '{text}'. Use comma-separated operator indices.")
    if not indices:
        raise SequenceError("The sequence is empty.")
    return seq_from_indices(rs, indices)


def _resolve_word(rs: RootSystemData, word: Optional[Sequence[int]]) -> Tuple[WeylWord, Tuple[str, ...]]:
    word = longest_word(rs) if word is None else check_word(rs, word)
    notes = []
    if len(word) < rs.num_positive:
        notes.append(f"word of length {len(word)} is shorter than N = {rs.num_positive}")
    if not is_reduced(rs, word):
        notes.append("word is not reduced")
    return word, tuple(notes)


def seq_fflv(rs: RootSystemData) -> Tuple[BirationalSequence, MonomialOrderSpec]:
    """All positive roots by descending height (a good enumeration), with degrevlex."""
    indices = tuple(reversed(range(rs.num_positive)))
    sequence = BirationalSequence(
        roots=tuple(rs.positive_roots[k] for k in indices),
        indices=indices,
        origin="fflv",
        notes=(FFLV_TIE_RULE,),
    )
    return sequence, MonomialOrderSpec("degrevlex")


def seq_string(rs: RootSystemData, word: Optional[Sequence[int]] = None) -> Tuple[BirationalSequence, MonomialOrderSpec]:
    """(α_{i1}, ..., α_{iN}) for a reduced word, with neglex. Defaults to the canonical w0 word."""
    word, notes = _resolve_word(rs, word)
    indices = tuple(letter - 1 for letter in word)
    sequence = BirationalSequence(
        roots=tuple(rs.positive_roots[k] for k in indices),
        indices=indices,
        origin="string",
        word=word,
        notes=notes,
    )
    return sequence, MonomialOrderSpec("neglex")


def seq_nz(rs: RootSystemData, word: Optional[Sequence[int]] = None) -> Tuple[BirationalSequence, MonomialOrderSpec]:
    """The string sequence paired with degrevlex."""
    sequence, _ = seq_string(rs, word)
    return BirationalSequence(
        roots=sequence.roots,
        indices=sequence.indices,
        origin="nz",
        word=sequence.word,
        notes=sequence.notes,
    ), MonomialOrderSpec("degrevlex")


def seq_lusztig(rs: RootSystemData, word: Optional[Sequence[int]] = None) -> Tuple[BirationalSequence, MonomialOrderSpec]:
    """
    The roots along a reduced word, weighted by their heights, with wdegrevlex.

    Raises:
        RootSystemError: If the word is not reduced.
    """
    word, notes = _resolve_word(rs, word)
    roots = tuple(roots_along_word(rs, word))
    weights = tuple(sum(root) for root in roots)
    sequence = BirationalSequence(
        roots=roots,
        indices=tuple(rs.root_index[root] for root in roots),
        origin="lusztig",
        weights=weights,
        word=word,
        notes=notes,
    )
    return sequence, MonomialOrderSpec("wdegrevlex", weights)


def seq_pbw(rs: RootSystemData) -> Tuple[BirationalSequence, MonomialOrderSpec]:
    """All positive roots in canonical order (simple roots first), with deglex."""
    indices = tuple(range(rs.num_positive))
    return BirationalSequence(
        roots=rs.positive_roots,
        indices=indices,
        origin="pbw",
    ), MonomialOrderSpec("deglex")


PRESETS = {
    "fflv": lambda rs, word=None: seq_fflv(rs),
    "string": seq_string,
    "lusztig": seq_lusztig,
    "nz": seq_nz,
    "pbw": lambda rs, word=None: seq_pbw(rs),
}


def build_preset(rs: RootSystemData, name: str, word: Optional[Sequence[int]] = None
                 ) -> Tuple[BirationalSequence, MonomialOrderSpec]:
    """
    Dispatches to one of the named presets.

    Raises:
        SequenceError: If the preset name is unknown.
    """
    builder = PRESETS.get(name.strip().lower())
    if builder is None:
        raise SequenceError(f"Unknown preset '{name}'. Choose from {', '.join(PRESETS)}.")
    return builder(rs, word)


def is_good_enumeration(rs: RootSystemData, sequence: BirationalSequence) -> bool:
    """True iff gamma_j - gamma_i is never a positive root for i < j."""
    roots = sequence.roots
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            if tuple(b - a for a, b in zip(roots[i], roots[j])) in rs.root_index:
                return False
    return True


def parse_word(rs: RootSystemData, text: Optional[str]) -> Optional[WeylWord]:
    """
    Parses '1,2,1' into a word; 'gt' selects the Gelfand-Tsetlin word, None the default.

    Raises:
        RootSystemError: If a letter is malformed or out of range.
    """
    if text is None or not text.strip():
        return None
    if text.strip().lower() == "gt":
        return gelfand_tsetlin_word(rs)
    try:
        letters = [int(part.strip()) for part in text.split(",") if part.strip()]
    except ValueError:
        raise RootSystemError(f"Invalid word '{text}'. Use comma-separated letters in 1..{rs.rank}.")
    return check_word(rs, letters)
