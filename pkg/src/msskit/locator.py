"""Numerical location of superstable parameters in the logistic family.

The family is f_r(x) = r x (1 - x) on [0, 1] with critical point 1/2; it
satisfies the round-top concave conditions, and by universality the order
in which symbol sequences appear matches any other conforming family.  A
sequence of period p is realized at the parameter r* where the critical
orbit returns: f_r*^p(1/2) = 1/2.

``locate`` bisects on r inside [3, 4], steering by the parity-lex
comparison between the critical itinerary and the target word; once the
first p-1 symbols match, the sign of f^p(1/2) - 1/2, read through the
prefix orientation, keeps steering until the residual drops below
tolerance.

Arithmetic runs in mpmath extended precision.  Near r = 4 the residual
responds to parameter changes at a rate of order 4^p, so with p = 7 or 8
one double-precision ulp in r already moves the residual by about 1e-13;
float64 bisection cannot certify residuals at that tolerance (measured:
best achievable 1.04e-13 for R L^5 C), while 30 significant digits leave
orders of magnitude of headroom.  Located parameters are therefore
reported as mpmath floats; cast with float() for display.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import mpmath
from mpmath import mpf

from .errors import LocateError, NotMssError
from .sequences import SeqLike, as_sequence, is_shift_maximal, sort_parity_lex

__all__ = [
    "MapParam",
    "LocatedSequence",
    "itinerary",
    "locate",
    "verify_order",
    "order_report",
]

_DEFAULT_EPS = 1e-12
_DEFAULT_TOL = 1e-13
_DEFAULT_DPS = 30
_MAX_ITER = 200

_RANK = {"L": 0, "C": 1, "R": 2}


@dataclass(frozen=True)
class MapParam:
    """Logistic parameter; the critical point sits at 1/2 and maps to r/4."""

    r: float

    def __post_init__(self):
        if not 0 < self.r <= 4:
            raise ValueError(f"parameter {self.r} outside (0, 4]")

    def __call__(self, x):
        return self.r * x * (1 - x)


Param = Union[MapParam, float, mpf]


def _param_value(r: Param):
    return r.r if isinstance(r, MapParam) else r


def itinerary(r: Param, steps: int, eps: float = _DEFAULT_EPS) -> str:
    """Symbol word of the critical orbit: step i classifies f^i(1/2).

    Points within ``eps`` of 1/2 read as C; the dead band keeps the
    terminal step of a located orbit classified as C despite rounding.

    >>> itinerary(2.0, 1)
    'C'
    >>> itinerary(4.0, 2)
    'RL'
    """
    if steps < 1:
        raise ValueError("steps must be >= 1")
    if eps < 0:
        raise ValueError("eps must be >= 0")
    rv = _param_value(r)
    if not 0 < rv <= 4:
        raise ValueError(f"parameter {rv} outside (0, 4]")
    half = rv * 0 + 0.5  # stays mpf when r is mpf
    x = half
    out = []
    for _ in range(steps):
        x = rv * x * (1 - x)
        d = x - half
        if abs(d) <= eps:
            out.append("C")
        elif d > 0:
            out.append("R")
        else:
            out.append("L")
    return "".join(out)


@dataclass(frozen=True)
class LocatedSequence:
    """A sequence with its superstable parameter.

    ``r_star`` is an mpmath float; ``residual`` is |f^p(1/2) - 1/2| at
    r_star, evaluated at working precision.
    """

    sequence: str
    r_star: mpf
    residual: float
    iterations: int


_BELOW, _ABOVE, _MATCHED = -1, 1, 0


def _probe(r: mpf, prefix: str, eps: mpf):
    """Compare the critical itinerary at r against the target prefix.

    Returns (verdict, gap): verdict _BELOW/_ABOVE from the first symbol
    difference, or _MATCHED when all prefix symbols agree, in which case
    ``gap`` carries f^p(1/2) - 1/2 for the final steering and residual.
    A dead-band hit before the prefix ends is undecidable here and reads
    as _BELOW: superstable points of shorter period are isolated, so the
    search escapes upward.
    """
    half = r * 0 + 0.5  # exact, and inherits r's arithmetic context
    x = half
    r_parity = 0
    for want in prefix:
        x = r * x * (1 - x)
        d = x - half
        if abs(d) <= eps:
            return _BELOW, None
        got = "R" if d > 0 else "L"
        if got != want:
            diff = _RANK[got] - _RANK[want]
            if r_parity:
                diff = -diff
            return (_BELOW, None) if diff < 0 else (_ABOVE, None)
        if got == "R":
            r_parity ^= 1
    x = r * x * (1 - x)
    return _MATCHED, x - half


def locate(
    seq: Union[SeqLike, str],
    tol: float = _DEFAULT_TOL,
    eps: float = _DEFAULT_EPS,
    max_iter: int = _MAX_ITER,
    dps: int = _DEFAULT_DPS,
) -> LocatedSequence:
    """Find the parameter whose critical orbit realizes ``seq``.

    The input must be an MSS-sequence; the degenerate period-1 word "C"
    maps to r = 2 directly.  Raises :class:`LocateError` when the
    bisection budget runs out before the residual drops below ``tol``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    text = seq.symbols if not isinstance(seq, str) else seq
    if text == "C":
        return LocatedSequence("C", mpf(2), 0.0, 0)
    s = as_sequence(seq)
    if not s.symbols.startswith("R") or not is_shift_maximal(s):
        raise NotMssError(f"{s} is not an MSS-sequence")
    prefix = s.body
    # A private arithmetic context keeps concurrent locate calls independent.
    ctx = mpmath.ctx_mp.MPContext()
    ctx.dps = dps
    lo, hi = ctx.mpf(3), ctx.mpf(4)
    eps_mp = ctx.mpf(eps)
    tol_mp = ctx.mpf(tol)
    for iteration in range(1, max_iter + 1):
        mid = (lo + hi) / 2
        verdict, gap = _probe(mid, prefix, eps_mp)
        if verdict == _MATCHED:
            if abs(gap) < tol_mp:
                # classify the closing step with the wider of the two
                # bands so a loose tol still reads as C
                word = itinerary(mid, s.period, max(eps, tol))
                if word != s.symbols:
                    raise LocateError(
                        f"{s}: residual converged but itinerary reads {word}"
                    )
                return LocatedSequence(s.symbols, mid, float(abs(gap)), iteration)
            # steer by the symbol the orbit would print at step p
            sym = "R" if gap > 0 else "L"
            diff = _RANK[sym] - _RANK["C"]
            if prefix.count("R") % 2:
                diff = -diff
            verdict = _BELOW if diff < 0 else _ABOVE
        if verdict == _BELOW:
            lo = mid
        else:
            hi = mid
    raise LocateError(f"{s}: no convergence within {max_iter} bisection steps")


def order_report(pmax: int, tol: float = _DEFAULT_TOL) -> list[LocatedSequence]:
    """Locate every MSS-sequence of period 2..pmax, in parity-lex order."""
    from .generators import enumerate_mss_structured

    if pmax < 2:
        raise ValueError("pmax must be >= 2")
    seqs = []
    for p in range(2, pmax + 1):
        seqs.extend(enumerate_mss_structured(p).words())
    ordered = sort_parity_lex(seqs)
    return [locate(w, tol=tol) for w in ordered]


def verify_order(pmax: int, tol: float = _DEFAULT_TOL) -> bool:
    """Check that parameter order equals parity-lex order up to period pmax.

    Locates every sequence and verifies the parameters increase strictly
    along the parity-lex sort.  Sized for pmax <= 12 (379 sequences, a few
    seconds); larger values work but scale with the sequence count.
    """
    rows = order_report(pmax, tol=tol)
    return all(a.r_star < b.r_star for a, b in zip(rows, rows[1:]))
