"""Construction and enumeration of MSS-sequences.

Three generators live here.

``enumerate_blocks`` builds the interior blocks directly, by tiling a row
of boxes: write ``m = j*q + rem`` for q = max_run + 1, give each full
tile of q boxes at least one R, and constrain the first R of a tile to
sit no later than the previous tile's last R, which caps every L-run at
q-1 without ever scanning a rejected word.

``enumerate_mss_structured`` assembles candidate sequences from head
groups and interior blocks and keeps the ones the structured test
accepts.  ``enumerate_mss_bruteforce`` filters the full candidate space
``R {L,R}^(p-2) C`` with the direct shift-maximality test and serves as
the oracle the structured path is validated against (practical up to
p around 22).

``derive_later_blocks`` produces, for a fixed first interior block, the
blocks that may legally follow it in longer sequences: exactly the words
whose sign sequence first departs upward from the comparison template
built from the first block and one head group.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from .errors import NotAdmissibleError
from .sequences import (
    AdmissibleSeq,
    decode_signs,
    is_shift_maximal,
    max_l_run,
    parity_lex_cmp,
    sign_sequence,
)
from .structure import is_mss_structured

__all__ = [
    "PeriodEnumeration",
    "enumerate_blocks",
    "derive_later_blocks",
    "enumerate_mss_structured",
    "enumerate_mss_bruteforce",
]


@dataclass(frozen=True)
class PeriodEnumeration:
    """All MSS-sequences of one period, in increasing parity-lex order."""

    period: int
    sequences: tuple[AdmissibleSeq, ...]

    def __iter__(self):
        return iter(self.sequences)

    def __len__(self) -> int:
        return len(self.sequences)

    def words(self) -> list[str]:
        return [s.symbols for s in self.sequences]


def enumerate_blocks(length: int, max_run: int) -> list[str]:
    """All words of the given length starting with R whose L-runs stay
    at or below ``max_run``, in plain lexicographic order.

    length 0 yields the empty list: an absent block is not a block.
    """
    if length < 0:
        raise ValueError("length must be >= 0")
    if max_run < 0:
        raise ValueError("max_run must be >= 0")
    return list(_blocks_cached(length, max_run))


@functools.lru_cache(maxsize=None)
def _blocks_cached(length: int, max_run: int) -> tuple[str, ...]:
    if length == 0:
        return ()
    q = max_run + 1
    tiles, rem = divmod(length, q)
    if tiles == 0:
        # The whole row is shorter than one tile: R then anything.
        return tuple(sorted("R" + "".join(t) for t in itertools.product("RL", repeat=length - 1)))

    found: set[str] = set()

    def tile_variants(first_lo: int, first_hi: int, width: int):
        """Fillings of one width-q tile with first R in [first_lo, first_hi]
        and anything between first and last R.  Yields (word, last_r_pos)."""
        for f in range(first_lo, first_hi + 1):
            for l in range(f, width + 1):
                if l == f:
                    yield "L" * (f - 1) + "R" + "L" * (width - l), l
                else:
                    for mid in itertools.product("RL", repeat=l - f - 1):
                        yield "L" * (f - 1) + "R" + "".join(mid) + "R" + "L" * (width - l), l

    def build(i: int, prev_last: int, acc: str):
        if i > tiles:
            if rem == 0:
                found.add(acc)
            elif prev_last >= rem + 1:
                # Even an all-L remainder stays within the run bound.
                for t in itertools.product("RL", repeat=rem):
                    found.add(acc + "".join(t))
            else:
                for word, _ in tile_variants(1, prev_last, rem):
                    found.add(acc + word)
            return
        lo, hi = (1, 1) if i == 1 else (1, prev_last)
        for word, last in tile_variants(lo, hi, q):
            build(i + 1, last, acc + word)

    build(1, 0, "")
    return tuple(sorted(found))


def derive_later_blocks(q: int, first_block: str, max_len: int) -> list[str]:
    """Blocks admissible after ``first_block`` in a sequence with head run q.

    The comparison template is the sign sequence of ``first_block`` plus
    one head group.  A later block must branch upward off that template:
    at some -1 entry preceded by at most q-1 consecutive +1s, replace the
    -1 by +1 and continue with any letters.  Results are capped at
    ``max_len`` symbols and filtered to respect the q-1 run bound, which
    also covers the splice at the branch point.

    >>> derive_later_blocks(2, "R", 2)
    ['RL']
    """
    if q < 1:
        raise ValueError("head run q must be >= 1")
    if not first_block.startswith("R") or max_l_run(first_block) > q - 1:
        raise NotAdmissibleError(
            f"{first_block!r} is not an interior block for head run {q}"
        )
    template = sign_sequence(first_block + "R" + "L" * q)
    out: set[str] = set()
    for j in range(2, len(template) + 1):  # 1-based branch position
        if template[j - 1] != -1:
            continue
        ones = 0
        t = j - 2
        while t >= 0 and template[t] == 1:
            ones += 1
            t -= 1
        if ones > q - 1:
            continue  # branching here would splice an over-long L-run
        prefix = decode_signs(template[: j - 1] + (1,))
        if len(prefix) > max_len:
            continue
        for tail_len in range(0, max_len - len(prefix) + 1):
            for tail in itertools.product("RL", repeat=tail_len):
                word = prefix + "".join(tail)
                if max_l_run(word) <= q - 1:
                    out.add(word)
    return sorted(out)


def _positive_compositions(total: int, parts: int):
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _positive_compositions(total - first, parts - 1):
            yield (first,) + rest


def _assemble(q: int, exponents: tuple[int, ...], blocks: tuple[str, ...]) -> str:
    head = "R" + "L" * q
    parts = [head, blocks[0]]
    for n, s in zip(exponents, blocks[1:]):
        parts.append(head * n)
        parts.append(s)
    parts.append("C")
    return "".join(parts)


def enumerate_mss_structured(p: int) -> PeriodEnumeration:
    """All MSS-sequences of period p via structured candidate assembly.

    Candidates are built per head run q: the bare ``R L^(p-2) C`` family,
    then for each group count the exponent vectors and interior-block
    choices that reach period p, each candidate filtered through the
    structured test.  Output is sorted in parity-lex order.
    """
    if p < 2:
        raise ValueError("period must be >= 2")
    accepted: list[str] = ["R" + "L" * (p - 2) + "C"]
    body_len = p - 1
    for q in range(1, p - 2):
        unit = q + 1
        max_groups = (body_len - unit) // (unit + 1) + 1
        for r in range(1, max_groups + 1):
            if r == 1:
                m = body_len - unit
                for s1 in _blocks_cached(m, q - 1):
                    word = "R" + "L" * q + s1 + "C"
                    if is_mss_structured(word).is_mss:
                        accepted.append(word)
                continue
            exp_budget = (body_len - r) // unit - 1  # total extra head copies
            if exp_budget < r - 1:
                continue
            for exponents in itertools.product(range(1, exp_budget - r + 3), repeat=r - 1):
                copies = 1 + sum(exponents)
                m_total = body_len - unit * copies
                if m_total < r:
                    continue
                for lens in _positive_compositions(m_total, r):
                    for blocks in itertools.product(
                        *(_blocks_cached(m, q - 1) for m in lens)
                    ):
                        word = _assemble(q, exponents, blocks)
                        if is_mss_structured(word).is_mss:
                            accepted.append(word)
    ordered = sorted(accepted, key=functools.cmp_to_key(parity_lex_cmp))
    return PeriodEnumeration(p, tuple(AdmissibleSeq(w) for w in ordered))


def _bruteforce_words(p: int, prefix: str = "") -> list[str]:
    """Shift-maximal words among R + prefix + {L,R}^k + C."""
    free = p - 2 - len(prefix)
    out = []
    for mid in itertools.product("RL", repeat=free):
        word = "R" + prefix + "".join(mid) + "C"
        if is_shift_maximal(word):
            out.append(word)
    return out


def _bruteforce_chunk(args: tuple[int, str]) -> list[str]:
    return _bruteforce_words(*args)


def enumerate_mss_bruteforce(p: int, workers: int = 1) -> PeriodEnumeration:
    """Oracle enumeration: filter every candidate word of period p.

    ``workers`` > 1 splits the candidate space by a fixed two-symbol
    prefix and merges deterministically; output is identical to the
    sequential run.
    """
    if p < 2:
        raise ValueError("period must be >= 2")
    if workers > 1 and p >= 8:
        prefixes = ["".join(t) for t in itertools.product("RL", repeat=2)]
        jobs = [(p, pre) for pre in prefixes]
        import multiprocessing

        with multiprocessing.Pool(min(workers, len(jobs))) as pool:
            chunks = pool.map(_bruteforce_chunk, jobs)
        words = [w for chunk in chunks for w in chunk]
    else:
        words = _bruteforce_words(p)
    ordered = sorted(words, key=functools.cmp_to_key(parity_lex_cmp))
    return PeriodEnumeration(p, tuple(AdmissibleSeq(w) for w in ordered))
