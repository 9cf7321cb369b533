"""Orbit composition, primality and factorization of MSS-sequences.

The composition ``compose(inner, outer)`` repeats the inner sequence's
body once per symbol of the outer sequence, separating the copies by the
outer letters; the letters are written verbatim when the inner sequence
holds an even number of Rs and flipped (R <-> L) when odd.  The result
has period ``len(inner) * len(outer)`` and is again shift-maximal.
Non-primary sequences are exactly the composites, so factoring scans the
proper divisors of the period for a repeating stem.

``factor_once`` returns the factorization with the shortest inner
sequence; the scan order makes the result deterministic.  Uniqueness
holds only for special families, so ``factor_all`` exposes every
divisor-aligned factorization.

Two shape tests identify composites directly from the block form:
``check_stem_shape`` for sequences whose interior blocks all extend the
final block by one letter, and ``factor_interleaved_core`` for sequences
whose head groups interleave copies of the short core ``R L^(q-1)``.
Both are accelerators; the divisor scan stays the ground truth.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .errors import NotMssError, RunLengthError, ShapeError
from .sequences import AdmissibleSeq, SeqLike, as_sequence, is_shift_maximal
from .structure import block_decompose

__all__ = [
    "Parity",
    "r_parity",
    "compose",
    "factor_once",
    "factor_all",
    "is_primary",
    "FactorTree",
    "factor_tree",
    "check_stem_shape",
    "factor_interleaved_core",
]


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"


_FLIP = {"R": "L", "L": "R"}


def r_parity(seq: SeqLike) -> Parity:
    """Parity of the number of R symbols (the terminal C never counts)."""
    s = as_sequence(seq)
    return Parity.ODD if s.symbols.count("R") % 2 else Parity.EVEN


def compose(inner: SeqLike, outer: SeqLike) -> AdmissibleSeq:
    """Compose two admissible sequences; period multiplies.

    >>> compose("RC", "RC").symbols
    'RLRC'
    """
    a = as_sequence(inner)
    b = as_sequence(outer)
    stem = a.body
    flip = r_parity(a) is Parity.ODD
    parts = []
    for y in b.body:
        parts.append(stem)
        parts.append(_FLIP[y] if flip else y)
    parts.append(stem)
    parts.append("C")
    out = AdmissibleSeq("".join(parts))
    assert out.period == a.period * b.period
    return out


def _split_at(word: str, h: int) -> Optional[tuple[str, str]]:
    """Try to read ``word`` as stem-and-letters with inner period h.

    Returns (inner, outer) symbol strings when the stem repeats in every
    h-aligned slot and both recovered sequences are shift-maximal."""
    p = len(word)
    s = p // h
    stem = word[: h - 1]
    for j in range(1, s):
        if word[j * h : (j + 1) * h - 1] != stem:
            return None
    inner = stem + "C"
    if not is_shift_maximal(inner):
        return None
    flip = inner.count("R") % 2 == 1
    letters = [word[(j + 1) * h - 1] for j in range(s - 1)]
    outer = "".join(_FLIP[z] if flip else z for z in letters) + "C"
    if not is_shift_maximal(outer):
        return None
    return inner, outer


def factor_once(seq: SeqLike) -> Optional[tuple[AdmissibleSeq, AdmissibleSeq]]:
    """One factorization with the shortest inner sequence, or None if primary.

    Raises :class:`NotMssError` unless the input is shift-maximal.
    """
    s = as_sequence(seq)
    if not is_shift_maximal(s):
        raise NotMssError(f"{s} is not an MSS-sequence")
    p = s.period
    for h in range(2, p):
        if p % h:
            continue
        split = _split_at(s.symbols, h)
        if split is not None:
            inner, outer = AdmissibleSeq(split[0]), AdmissibleSeq(split[1])
            assert compose(inner, outer).symbols == s.symbols
            return inner, outer
    return None


def factor_all(seq: SeqLike) -> list[tuple[AdmissibleSeq, AdmissibleSeq]]:
    """Every divisor-aligned factorization, shortest inner sequence first."""
    s = as_sequence(seq)
    if not is_shift_maximal(s):
        raise NotMssError(f"{s} is not an MSS-sequence")
    out = []
    for h in range(2, s.period):
        if s.period % h:
            continue
        split = _split_at(s.symbols, h)
        if split is not None:
            pair = (AdmissibleSeq(split[0]), AdmissibleSeq(split[1]))
            assert compose(*pair).symbols == s.symbols
            out.append(pair)
    return out


def is_primary(seq: SeqLike) -> bool:
    """True iff the sequence admits no factorization."""
    return factor_once(seq) is None


@dataclass(frozen=True)
class FactorTree:
    """Binary factorization tree; leaves are primary sequences."""

    node: AdmissibleSeq
    children: Optional[tuple["FactorTree", "FactorTree"]] = None

    @property
    def is_leaf(self) -> bool:
        return self.children is None

    def leaves(self) -> list[AdmissibleSeq]:
        if self.children is None:
            return [self.node]
        left, right = self.children
        return left.leaves() + right.leaves()

    def to_dict(self) -> dict:
        return {
            "sequence": self.node.symbols,
            "children": None
            if self.children is None
            else [c.to_dict() for c in self.children],
        }


def factor_tree(seq: SeqLike) -> FactorTree:
    """Factor recursively until every leaf is primary."""
    s = as_sequence(seq)
    split = factor_once(s)
    if split is None:
        return FactorTree(s)
    inner, outer = split
    return FactorTree(s, (factor_tree(inner), factor_tree(outer)))


def check_stem_shape(seq: SeqLike) -> bool:
    """Pattern test for composites hiding in a uniform block form.

    True when the sequence parses into single-copy head groups whose
    interior blocks each equal the final block plus one trailing letter,
    the first two added letters being L then R, and the final block does
    not end in ``R L^(q-1)``.  On shift-maximal input a hit implies the
    sequence is non-primary, with inner factor head-group + final block.
    """
    s = as_sequence(seq)
    if not s.symbols.startswith("R"):
        return False
    try:
        form = block_decompose(s)
    except RunLengthError:
        return False
    runs = form.runs
    if len(runs) < 2 or any(n != 1 for n, _ in runs):
        return False
    stem = runs[-1][1]
    if stem == "":
        return False
    added = []
    for _, block in runs[:-1]:
        if len(block) != len(stem) + 1 or not block.startswith(stem):
            return False
        added.append(block[-1])
    if added[0] != "L":
        return False
    if len(added) >= 2 and added[1] != "R":
        return False
    if form.q >= 1 and stem.endswith("R" + "L" * (form.q - 1)):
        return False
    return True


def factor_interleaved_core(seq: SeqLike) -> tuple[AdmissibleSeq, AdmissibleSeq]:
    """Factor a sequence whose head groups interleave the core ``R L^(q-1)``.

    Expected form: head ``R L^q``, then alternating groups of
    ``R L^(q-1) R`` and ``R L^q`` units, closed by ``R L^(q-1) C``; the
    first R-unit group must be the longest and the first L-unit group
    nonempty.  Returns (core sequence, outer sequence).  Raises
    :class:`ShapeError` on any mismatch, including an R-unit group longer
    than the first, which would force an over-long L-run into the outer
    factor.
    """
    s = as_sequence(seq)
    word = s.symbols
    body = s.body
    if not body.startswith("R"):
        raise ShapeError(f"{s}: must start with R")
    q = 0
    while 1 + q < len(body) and body[1 + q] == "L":
        q += 1
    if q < 1:
        raise ShapeError(f"{s}: needs a head run of at least one L")
    core = "R" + "L" * (q - 1)
    if not word.endswith(core + "C"):
        raise ShapeError(f"{s}: must end with {core}C")

    # Slice the body after the head into core-plus-letter units.
    letters = []
    i = q + 1
    while i < len(body):
        if body[i : i + q] != core:
            raise ShapeError(f"{s}: core misaligned at offset {i}")
        i += q
        if i < len(body):
            letters.append(body[i])
            i += 1
        # the final core reaches the end of the body exactly
    if i != len(body):
        raise ShapeError(f"{s}: trailing symbols do not fit the core grid")

    groups: list[tuple[str, int]] = []
    for ch in letters:
        if groups and groups[-1][0] == ch:
            groups[-1] = (ch, groups[-1][1] + 1)
        else:
            groups.append((ch, 1))
    if not groups or groups[0][0] != "R":
        raise ShapeError(f"{s}: first unit group must extend the core with R")
    r_groups = [n for ch, n in groups if ch == "R"]
    l_groups = [n for ch, n in groups if ch == "L"]
    if not l_groups:
        raise ShapeError(f"{s}: needs at least one full head group after the first")
    if any(n > r_groups[0] for n in r_groups):
        raise ShapeError(
            f"{s}: a later R-unit group exceeds the first; the outer factor "
            f"would carry an over-long L-run"
        )

    inner = AdmissibleSeq(core + "C")
    # The core holds exactly one R, so recovered letters always flip.
    h = q + 1
    count = s.period // h
    outer_letters = [_FLIP[word[(j + 1) * h - 1]] for j in range(count - 1)]
    outer = AdmissibleSeq("".join(outer_letters) + "C")
    assert compose(inner, outer).symbols == word
    return inner, outer
