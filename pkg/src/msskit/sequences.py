"""Symbolic itineraries of unimodal maps and their ordering.

A finite itinerary is a word over the alphabet {L, C, R}: L and R code
points left and right of the critical point, C codes the critical point
itself.  An *admissible sequence* is a word of Ls and Rs closed by exactly
one C in the final position; it describes one period of a superstable
orbit.  Throughout the package:

* plain ``str`` values hold raw words (suffixes, interior blocks);
* :class:`AdmissibleSeq` wraps a validated, C-terminated sequence and is
  the currency every higher-level module trades in.

Comparisons use the parity-lexicographic order: L < C < R, with the
comparison at the first differing position reversed whenever the common
prefix contains an odd number of Rs.  A sequence is *shift-maximal* when
no proper right shift exceeds it in this order; shift-maximality is the
operational test for being an MSS-sequence.

Two equivalent shift-maximality tests are provided on purpose.  The
symbol-level test applies the order directly.  The sign-level test
rewrites a word into a +-1/0 sequence in which R flips a running sign, L
copies it and C maps to 0; right shifts are then compared numerically
after zero padding.  Keeping both routes independent lets each act as an
oracle for the other.

Input text may compress letter runs as ``RL^4RC``; see
:func:`parse_sequence`.
"""

from __future__ import annotations

import enum
import functools
import re
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .errors import NotAdmissibleError

__all__ = [
    "Ordering",
    "AdmissibleSeq",
    "parse_sequence",
    "expand_exponents",
    "compress_exponents",
    "as_sequence",
    "r_count_before",
    "sign_sequence",
    "decode_signs",
    "shift",
    "parity_lex_cmp",
    "is_shift_maximal",
    "is_shift_maximal_signs",
    "max_l_run",
    "sort_parity_lex",
]

_SYMBOL_RANK = {"L": 0, "C": 1, "R": 2}

_TOKEN_RE = re.compile(r"([RLC])(?:\^(\d+))?")


class Ordering(enum.IntEnum):
    """Result of a parity-lexicographic comparison."""

    LESS = -1
    EQUAL = 0
    GREATER = 1


def expand_exponents(text: str) -> str:
    """Expand run notation: ``'RL^2RC'`` -> ``'RLLRC'``.

    Grammar: a sequence of letters R/L/C, each optionally followed by
    ``^k`` with k a positive decimal integer.
    """
    pos = 0
    out = []
    for match in _TOKEN_RE.finditer(text):
        if match.start() != pos:
            raise NotAdmissibleError(f"cannot parse {text!r} at offset {pos}")
        letter, exp = match.groups()
        count = int(exp) if exp is not None else 1
        if count < 1:
            raise NotAdmissibleError(f"exponent must be positive in {text!r}")
        out.append(letter * count)
        pos = match.end()
    if pos != len(text):
        raise NotAdmissibleError(f"cannot parse {text!r} at offset {pos}")
    return "".join(out)


def compress_exponents(word: str) -> str:
    """Inverse of :func:`expand_exponents`: collapse letter runs of length >= 2."""
    out = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        run = j - i
        out.append(word[i] if run == 1 else f"{word[i]}^{run}")
        i = j
    return "".join(out)


@dataclass(frozen=True)
class AdmissibleSeq:
    """A word of Rs and Ls closed by exactly one C at the final position.

    Minimum length is 2 ("RC"); the period-1 word "C" is handled as a
    degenerate special case by the locator only and is rejected here.
    """

    symbols: str

    def __post_init__(self):
        s = self.symbols
        if len(s) < 2:
            raise NotAdmissibleError(f"{s!r}: admissible sequences have length >= 2")
        if s[-1] != "C":
            raise NotAdmissibleError(f"{s!r}: must end with C")
        body = s[:-1]
        if any(ch not in "RL" for ch in body):
            raise NotAdmissibleError(f"{s!r}: interior symbols must be R or L")

    @classmethod
    def parse(cls, text: str) -> "AdmissibleSeq":
        return cls(expand_exponents(text))

    @property
    def period(self) -> int:
        return len(self.symbols)

    @property
    def body(self) -> str:
        """Symbols without the terminal C."""
        return self.symbols[:-1]

    def compressed(self) -> str:
        return compress_exponents(self.symbols)

    def __str__(self) -> str:
        return self.symbols

    def __len__(self) -> int:
        return len(self.symbols)


SeqLike = Union[AdmissibleSeq, str]


def parse_sequence(text: str) -> AdmissibleSeq:
    """Parse text (run notation allowed) into an :class:`AdmissibleSeq`."""
    return AdmissibleSeq.parse(text)


def as_sequence(seq: SeqLike) -> AdmissibleSeq:
    """Coerce a str (run notation allowed) or pass through an AdmissibleSeq."""
    if isinstance(seq, AdmissibleSeq):
        return seq
    return AdmissibleSeq.parse(seq)


def r_count_before(seq: SeqLike, i: int) -> int:
    """Number of R symbols strictly before 1-based position ``i``.

    >>> r_count_before("RLLRC", 1)
    0
    >>> r_count_before("RLLRC", 5)
    2
    """
    word = seq.symbols if isinstance(seq, AdmissibleSeq) else seq
    if not 1 <= i <= len(word):
        raise ValueError(f"position {i} out of range 1..{len(word)}")
    return word.count("R", 0, i - 1)


def sign_sequence(seq: SeqLike) -> tuple[int, ...]:
    """Numeric encoding of a word: R flips a running +-1 sign, L copies it, C is 0.

    Entry i is +1 when the symbol agrees with the orientation induced by
    the number of preceding Rs (an even count keeps R positive), -1 when
    it opposes it.  The encoding is injective on words and
    order-preserving with respect to :func:`parity_lex_cmp`.
    """
    word = seq.symbols if isinstance(seq, AdmissibleSeq) else seq
    out = []
    beta = 0
    for ch in word:
        if ch == "C":
            out.append(0)
        elif ch == "R":
            out.append(1 if beta % 2 == 0 else -1)
            beta += 1
        elif ch == "L":
            out.append(-1 if beta % 2 == 0 else 1)
        else:
            raise NotAdmissibleError(f"invalid symbol {ch!r}")
    return tuple(out)


def decode_signs(entries: Sequence[int]) -> str:
    """Inverse of :func:`sign_sequence`."""
    beta = 0
    out = []
    for a in entries:
        if a == 0:
            out.append("C")
            continue
        sign_r = 1 if beta % 2 == 0 else -1
        if a == sign_r:
            out.append("R")
            beta += 1
        elif a == -sign_r:
            out.append("L")
        else:
            raise ValueError(f"sign entries must be in {{-1, 0, +1}}, got {a!r}")
    return "".join(out)


def shift(seq: SeqLike, k: int) -> str:
    """Right shift: drop the first ``k`` symbols, 0 <= k <= period.

    Returns a plain word; no padding happens at symbol level (zero padding
    belongs to the sign-level comparison only).
    """
    word = seq.symbols if isinstance(seq, AdmissibleSeq) else seq
    if not 0 <= k <= len(word):
        raise ValueError(f"shift {k} out of range 0..{len(word)}")
    return word[k:]


def parity_lex_cmp(a: SeqLike, b: SeqLike) -> Ordering:
    """Parity-lexicographic comparison over the common span of two words.

    L < C < R at the first differing position; the verdict is reversed
    when the common prefix holds an odd number of Rs.  If one word runs
    out with no difference seen, the result is EQUAL: for admissible
    sequences this cannot hide a real tie because a shorter sequence ends
    in C where a longer one still carries L or R.
    """
    wa = a.symbols if isinstance(a, AdmissibleSeq) else a
    wb = b.symbols if isinstance(b, AdmissibleSeq) else b
    r_parity = 0
    for x, y in zip(wa, wb):
        if x != y:
            diff = _SYMBOL_RANK[x] - _SYMBOL_RANK[y]
            if r_parity:
                diff = -diff
            return Ordering.LESS if diff < 0 else Ordering.GREATER
        if x == "R":
            r_parity ^= 1
    return Ordering.EQUAL


def is_shift_maximal(seq: SeqLike) -> bool:
    """Direct test: no proper right shift exceeds the sequence.

    The empty shift (k = period) is vacuously dominated and skipped.
    """
    word = as_sequence(seq).symbols
    p = len(word)
    for k in range(1, p):
        if parity_lex_cmp(word[k:], word) is Ordering.GREATER:
            return False
    return True


def is_shift_maximal_signs(seq: SeqLike) -> bool:
    """Sign-level shift-maximality test; agrees with :func:`is_shift_maximal`.

    For each shift the zero-padded sign sequence is compared against the
    full one.  Of the two signed copies of a shifted sequence, the one
    starting with -1 is dominated outright because the sequence itself
    starts with +1; only the copy normalized to start with +1 needs the
    positional comparison.  Requires a sequence starting with R.
    """
    s = as_sequence(seq)
    if not s.symbols.startswith("R"):
        raise NotAdmissibleError(f"{s}: sign-level test requires a leading R")
    lam = sign_sequence(s)
    p = len(lam)
    for k in range(1, p):
        first = lam[k]
        if first == 0:
            continue  # all-zero tail, strictly below
        for i in range(p):
            a = first * lam[k + i] if k + i < p else 0
            if a != lam[i]:
                if a > lam[i]:
                    return False
                break
    return True


def max_l_run(word: str) -> int:
    """Length of the longest run of consecutive Ls."""
    best = cur = 0
    for ch in word:
        if ch == "L":
            cur += 1
            if cur > best:
                best = cur
        else:
            cur = 0
    return best


def sort_parity_lex(items: Iterable[SeqLike]) -> list:
    """Sort words or sequences into increasing parity-lexicographic order."""
    return sorted(items, key=functools.cmp_to_key(parity_lex_cmp))
