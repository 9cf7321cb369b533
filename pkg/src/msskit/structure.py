"""Canonical block form and the structured shift-maximality test.

Every MSS candidate starts ``R L^q`` and never lets more than ``q`` Ls
follow an R, so it splits uniquely into head groups ``(RL^q)^n`` joined
by interior blocks: words that start with R and keep their L-runs at or
below q-1.  :func:`block_decompose` produces that parse and
:func:`is_mss_structured` decides shift-maximality from it without
enumerating all shifts.

The structured test needs to examine one shift per group beyond the
first: the shift landing on the last ``RL^q`` copy of the group.  Every
other shift is dominated for free (it starts with a strictly shorter
climb than the head, or inside an interior block, or on an earlier copy
whose continuation is an entire extra head group).  Each examined shift
is settled by comparing zero-padded sign sequences, which is exact; the
group-level comparison and exponent-parity rules are evaluated alongside
as a cross-check and any disagreement raises, rather than silently
preferring one route.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import NotAdmissibleError, RunLengthError
from .sequences import AdmissibleSeq, SeqLike, as_sequence, sign_sequence

__all__ = [
    "RULE_RUN_BOUND",
    "RULE_HEAD_EXPONENT",
    "RULE_EMPTY_TAIL",
    "RULE_BLOCK_ORDER",
    "RULE_EXPONENT_PARITY",
    "BlockForm",
    "StructuredVerdict",
    "RuleDisagreement",
    "block_decompose",
    "check_run_bound",
    "check_block_constraints",
    "is_mss_structured",
]

RULE_RUN_BOUND = "run-bound"            # an L-run outgrows the head run
RULE_HEAD_EXPONENT = "head-exponent"    # leading head group repeated
RULE_EMPTY_TAIL = "empty-tail-block"    # final interior block missing
RULE_BLOCK_ORDER = "block-order"        # interior-block comparison fails
RULE_EXPONENT_PARITY = "exponent-parity"  # head-group exponent rule fails


class RuleDisagreement(RuntimeError):
    """Group-level rule and positional sign comparison disagreed.

    This is a consistency alarm, not a user error: the positional
    comparison is exact, so a disagreement means the group-level rules
    were applied outside their hypotheses.
    """


@dataclass(frozen=True)
class BlockForm:
    """Parse of a sequence into head groups and interior blocks.

    ``runs`` holds pairs ``(n_i, S_i)``: n_i copies of ``RL^q`` followed
    by the interior block S_i.  Adjacent head groups merge into one
    exponent, so S_i is empty only in the final position.
    """

    q: int
    runs: tuple[tuple[int, str], ...]

    def reassemble(self) -> AdmissibleSeq:
        head = "R" + "L" * self.q
        return AdmissibleSeq(
            "".join(head * n + s for n, s in self.runs) + "C"
        )

    @property
    def group_count(self) -> int:
        return len(self.runs)


def block_decompose(seq: SeqLike) -> BlockForm:
    """Unique head-group parse of an admissible sequence starting with R.

    Raises :class:`RunLengthError` when an L-run exceeds the head run q
    (no canonical form exists, and the word is not shift-maximal).
    """
    s = as_sequence(seq)
    body = s.body
    if not body.startswith("R"):
        raise NotAdmissibleError(f"{s}: block form requires a leading R")
    q = 0
    while 1 + q < len(body) and body[1 + q] == "L":
        q += 1

    head_marker = object()
    items: list = []
    i = 0
    while i < len(body):
        # body[i] == 'R' here: each pass consumes one R and its L-run
        j = i + 1
        while j < len(body) and body[j] == "L":
            j += 1
        run = j - i - 1
        if run > q:
            raise RunLengthError(
                f"{s}: L-run of {run} after position {i} exceeds head run {q}", i
            )
        if run == q:
            items.append(head_marker)
        else:
            items.append(body[i:j])
        i = j

    runs: list[tuple[int, str]] = []
    idx = 0
    while idx < len(items):
        n = 0
        while idx < len(items) and items[idx] is head_marker:
            n += 1
            idx += 1
        chunk: list[str] = []
        while idx < len(items) and items[idx] is not head_marker:
            chunk.append(items[idx])
            idx += 1
        runs.append((n, "".join(chunk)))

    form = BlockForm(q, tuple(runs))
    assert form.reassemble().symbols == s.symbols
    return form


def check_run_bound(seq: SeqLike) -> bool:
    """True iff no R is followed by more Ls than the head run allows."""
    try:
        block_decompose(seq)
    except RunLengthError:
        return False
    return True


def check_block_constraints(form: BlockForm) -> bool:
    """Necessary conditions on a block form: single leading head group and
    a nonempty final interior block whenever there are two or more groups."""
    if form.runs[0][0] >= 2:
        return False
    if form.group_count >= 2 and form.runs[-1][1] == "":
        return False
    return True


@dataclass(frozen=True)
class StructuredVerdict:
    """Outcome of the structured test, with the first failing shift when negative."""

    is_mss: bool
    failing_shift: Optional[int] = None
    failing_rule: Optional[str] = None


def _group_offsets(form: BlockForm) -> list[int]:
    """0-based start offset of the last head-group copy in each group."""
    unit = form.q + 1
    offsets = []
    pos = 0
    for n, s in form.runs:
        offsets.append(pos + (n - 1) * unit)
        pos += n * unit + len(s)
    return offsets


def _padded_sign_shift_less(lam: tuple[int, ...], k: int) -> bool:
    """Exact verdict for the shift at offset k: True when it stays below."""
    first = lam[k]
    p = len(lam)
    for i in range(p):
        a = first * lam[k + i] if k + i < p else 0
        if a != lam[i]:
            return a < lam[i]
    raise AssertionError("a proper shift always differs before exhaustion")


def _group_rule(form: BlockForm, k: int):
    """Classify the critical shift for group k+1 and, when the group-level
    hypotheses fully apply, predict its verdict.

    Returns ``(rule, predicted)`` with ``predicted`` None when the rules
    are inconclusive for this shift (comparison runs off the examined
    span, or the tail runs out with every group equal, which resolves at
    the symbol where the tail's C meets the continuation).
    """
    q = form.q
    nvals = [n for n, _ in form.runs]
    svals = [s for _, s in form.runs]
    r = len(svals)
    for j in range(1, r - k + 1):
        s_head, s_tail = svals[j - 1], svals[k + j - 1]
        if s_head != s_tail:
            # First diverging interior block: compare the head block
            # extended by one head group against the tail block, under
            # the orientation of the prefix before the head block.
            beta = sum(nvals[:j]) + sum(s.count("R") for s in svals[: j - 1])
            sign = 1 if beta % 2 == 0 else -1
            ext = sign_sequence(s_head + "R" + "L" * q)
            other = sign_sequence(s_tail)
            for x, y in zip(ext, other):
                if x != y:
                    return RULE_BLOCK_ORDER, (sign * x) > (sign * y)
            return RULE_BLOCK_ORDER, None
        if j < r - k and nvals[k + j] != nvals[j]:
            # First diverging exponent: the parity rule below decides.
            beta = sum(nvals[:j]) + sum(s.count("R") for s in svals[:j])
            n_head, n_tail = nvals[j], nvals[k + j]
            if beta % 2 == 0:
                ok = (n_tail > n_head and n_head % 2 == 1) or (
                    n_tail < n_head and n_tail % 2 == 0
                )
            else:
                ok = (n_tail > n_head and n_head % 2 == 0) or (
                    n_tail < n_head and n_tail % 2 == 1
                )
            return RULE_EXPONENT_PARITY, ok
    return RULE_BLOCK_ORDER, None


def is_mss_structured(seq: SeqLike, strict_rules: bool = True) -> StructuredVerdict:
    """Structured shift-maximality test over the block form.

    Filter order: run bound, head-exponent and empty-tail constraints,
    immediate accept for a single group, then one comparison per critical
    shift.  ``strict_rules`` keeps the group-level cross-check armed; it
    has never fired on exhaustive runs and exists to surface any future
    inconsistency instead of masking it.
    """
    s = as_sequence(seq)
    if not s.symbols.startswith("R"):
        raise NotAdmissibleError(f"{s}: MSS candidates start with R")
    try:
        form = block_decompose(s)
    except RunLengthError as err:
        return StructuredVerdict(False, failing_shift=err.position, failing_rule=RULE_RUN_BOUND)

    q = form.q
    n1 = form.runs[0][0]
    if n1 >= 2:
        return StructuredVerdict(
            False, failing_shift=(n1 - 1) * (q + 1), failing_rule=RULE_HEAD_EXPONENT
        )
    r = form.group_count
    if r >= 2 and form.runs[-1][1] == "":
        return StructuredVerdict(
            False, failing_shift=s.period - (q + 2), failing_rule=RULE_EMPTY_TAIL
        )
    if r == 1:
        return StructuredVerdict(True)

    lam = sign_sequence(s)
    offsets = _group_offsets(form)
    for k in range(1, r):
        shift_at = offsets[k]
        below = _padded_sign_shift_less(lam, shift_at)
        rule, predicted = _group_rule(form, k)
        if strict_rules and predicted is not None and predicted != below:
            raise RuleDisagreement(
                f"{s}: shift {shift_at} classified {rule} predicted "
                f"{'pass' if predicted else 'fail'} but comparison says "
                f"{'pass' if below else 'fail'}"
            )
        if not below:
            return StructuredVerdict(False, failing_shift=shift_at, failing_rule=rule)
    return StructuredVerdict(True)
