"""Shared brute-force oracles, kept independent of the library internals."""

import itertools

import pytest

RANK = {"L": 0, "C": 1, "R": 2}


def brute_parity_lex_less(a: str, b: str) -> int:
    """Independent parity-lex comparison: -1, 0, +1."""
    rs = 0
    for x, y in zip(a, b):
        if x != y:
            d = RANK[x] - RANK[y]
            if rs % 2:
                d = -d
            return -1 if d < 0 else 1
        if x == "R":
            rs += 1
    return 0


def brute_shift_maximal(word: str) -> bool:
    """Definitional test, written independently of msskit.sequences."""
    return all(
        brute_parity_lex_less(word[k:], word) <= 0 for k in range(1, len(word))
    )


def all_candidates(p: int):
    """Every admissible word R{L,R}^(p-2)C."""
    for mid in itertools.product("RL", repeat=p - 2):
        yield "R" + "".join(mid) + "C"


def brute_blocks(m: int, max_run: int) -> list[str]:
    """Filter enumeration of interior blocks."""
    if m == 0:
        return []
    out = []
    for tail in itertools.product("RL", repeat=m - 1):
        word = "R" + "".join(tail)
        run = best = 0
        for ch in word:
            run = run + 1 if ch == "L" else 0
            best = max(best, run)
        if best <= max_run:
            out.append(word)
    return sorted(out)


@pytest.fixture(scope="session")
def brute_mss_by_period():
    """Oracle MSS lists keyed by period, computed once per session."""
    table = {}
    for p in range(2, 15):
        table[p] = [w for w in all_candidates(p) if brute_shift_maximal(w)]
    return table
