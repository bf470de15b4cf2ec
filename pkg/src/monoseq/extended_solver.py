"""The insert-anywhere game on a dense order, played on permutation patterns.

When the mover may choose the position as well as the value of the new
element, boards are point sets in general position in the plane, and by
density only the pattern (a permutation) matters.  Moves extend a
permutation of length m by one point in any of the (m+1)^2 slots; the game
ends once there are ``a`` increasing or ``d`` decreasing points, completing
mover wins (normal play).  The safe-slot search and the greedy monotone
decompositions make the no-forced-suicide argument concrete, and the
parity rule gives the game's closed-form outcome.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import ResourceLimitError
from .order_core import Outcome

Perm = tuple[int, ...]


def lis(perm: Perm) -> int:
    """Longest increasing subsequence length."""
    best: list[int] = []
    for v in perm:
        lo, hi = 0, len(best)
        while lo < hi:
            mid = (lo + hi) // 2
            if best[mid] < v:
                lo = mid + 1
            else:
                hi = mid
        if lo == len(best):
            best.append(v)
        else:
            best[lo] = v
    return len(best)


def lds(perm: Perm) -> int:
    """Longest decreasing subsequence length."""
    return lis(tuple(-v for v in perm))


def insert_at(perm: Perm, index: int, value: int) -> Perm:
    """Insert a point at 1-based position ``index`` with 1-based value rank
    ``value``; existing ranks at or above the value shift up."""
    m = len(perm)
    if not 1 <= index <= m + 1:
        raise ValueError(f"index {index} out of range for length {m}")
    if not 1 <= value <= m + 1:
        raise ValueError(f"value rank {value} out of range for length {m}")
    shifted = [v + 1 if v >= value else v for v in perm]
    shifted.insert(index - 1, value)
    return tuple(shifted)


def extensions(perm: Perm) -> tuple[Perm, ...]:
    """All distinct one-point extensions, sorted.

    The (m+1)^2 slot choices can repeat patterns; results are deduplicated.
    """
    m = len(perm)
    out = {
        insert_at(perm, i, v)
        for i in range(1, m + 2)
        for v in range(1, m + 2)
    }
    return tuple(sorted(out))


@dataclass(frozen=True)
class Decomposition:
    """Disjoint monotone index subsequences covering a permutation."""

    parts: tuple[tuple[int, ...], ...]
    direction: str  # "increasing" or "decreasing"

    def part_values(self, perm: Perm) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(perm[i] for i in part) for part in self.parts)


def greedy_increasing_decomposition(perm: Perm, cap: Optional[int] = None) -> Decomposition:
    """Partition into increasing subsequences by the first-fit greedy scan.

    Each element goes to the first part whose last value is smaller (and,
    when ``cap`` is given, whose length is below the cap); otherwise a new
    part opens.  Without a binding cap the number of parts equals the
    longest decreasing subsequence.
    """
    parts: list[list[int]] = []
    lasts: list[int] = []
    for idx, v in enumerate(perm):
        for p, last in enumerate(lasts):
            if last < v and (cap is None or len(parts[p]) < cap):
                parts[p].append(idx)
                lasts[p] = v
                break
        else:
            parts.append([idx])
            lasts.append(v)
    return Decomposition(tuple(tuple(p) for p in parts), "increasing")


def greedy_decreasing_decomposition(perm: Perm, cap: Optional[int] = None) -> Decomposition:
    """Mirror of greedy_increasing_decomposition: decreasing parts, and
    without a binding cap the part count equals the longest increasing
    subsequence."""
    parts: list[list[int]] = []
    lasts: list[int] = []
    for idx, v in enumerate(perm):
        for p, last in enumerate(lasts):
            if last > v and (cap is None or len(parts[p]) < cap):
                parts[p].append(idx)
                lasts[p] = v
                break
        else:
            parts.append([idx])
            lasts.append(v)
    return Decomposition(tuple(tuple(p) for p in parts), "decreasing")


def safe_slot(perm: Perm, r: int, s: int) -> Optional[tuple[int, int]]:
    """First slot whose insertion keeps LIS <= r and LDS <= s, scanning
    index-major with value ranks ascending; None when no slot is safe.

    Whenever the permutation has fewer than r*s points with LIS <= r and
    LDS <= s, a safe slot is guaranteed to exist.
    """
    m = len(perm)
    for i in range(1, m + 2):
        for v in range(1, m + 2):
            child = insert_at(perm, i, v)
            if lis(child) <= r and lds(child) <= s:
                return i, v
    return None


def parity_outcome(a: int, d: int) -> Outcome:
    """Closed form for the insert-anywhere game: N iff a*d is odd."""
    if a < 2 or d < 2:
        raise ValueError("critical lengths must be at least 2")
    return Outcome.N if (a * d) % 2 == 1 else Outcome.P


_N, _P = 0, 1
_OUT = (Outcome.N, Outcome.P)


def _symmetry_variants(perm: Perm, symmetric: bool) -> Iterator[Perm]:
    m = len(perm)
    yield perm
    rc = tuple(m + 1 - v for v in reversed(perm))
    yield rc
    if symmetric:
        # Reversal and complementation swap LIS and LDS, so they are
        # symmetries only when a = d.
        yield perm[::-1]
        yield tuple(m + 1 - v for v in perm)


def _solve_extended_types(a: int, d: int, size_cap: int) -> dict[Perm, int]:
    if a < 2 or d < 2:
        raise ValueError("critical lengths must be at least 2")
    if (a - 1) * (d - 1) > size_cap:
        raise ResourceLimitError(
            "size_cap",
            size_cap,
            f"(a-1)(d-1) = {(a - 1) * (d - 1)} patterns grow beyond the cap",
        )
    symmetric = a == d
    memo: dict[Perm, int] = {}

    def value(perm: Perm) -> int:
        canon = min(_symmetry_variants(perm, symmetric))
        v = memo.get(canon)
        if v is not None:
            return v
        has_p = False
        for child in extensions(perm):
            if lis(child) >= a or lds(child) >= d:
                # Terminal move: the mover wins outright.
                has_p = True
                break
            if value(child) == _P:
                has_p = True
                break
        t = _N if has_p else _P
        memo[canon] = t
        return t

    value(())
    return memo


def solve_extended(a: int, d: int, *, size_cap: int = 12) -> Outcome:
    """Exact outcome of the empty insert-anywhere position.

    Refuses (a-1)(d-1) > size_cap (default 12): the pattern space beyond
    length 13 is not desk scale.  Raise the cap explicitly to go further.
    """
    types = _solve_extended_types(a, d, size_cap)
    return _OUT[types[()]]


def principal_variation(a: int, d: int, *, size_cap: int = 12) -> list[Perm]:
    """One optimal line from the empty position to a terminal pattern.

    The winner plays the first winning move in sorted order; the loser
    plays the first non-suicidal move when one exists (a suicidal move
    reaches a non-terminal pattern with a-1 increasing or d-1 decreasing
    points), otherwise the first move.
    """
    types = _solve_extended_types(a, d, size_cap)
    symmetric = a == d

    def typed(perm: Perm) -> int:
        return types[min(_symmetry_variants(perm, symmetric))]

    def terminal(perm: Perm) -> bool:
        return lis(perm) >= a or lds(perm) >= d

    def suicidal(child: Perm) -> bool:
        return not terminal(child) and (lis(child) >= a - 1 or lds(child) >= d - 1)

    line = [()]
    current: Perm = ()
    while not terminal(current):
        children = extensions(current)
        if typed(current) == _N:
            nxt = next(c for c in children if terminal(c) or typed(c) == _P)
        else:
            safe = [c for c in children if not terminal(c) and not suicidal(c)]
            nxt = safe[0] if safe else children[0]
        line.append(nxt)
        current = nxt
    return line
