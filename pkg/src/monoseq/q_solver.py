"""Solver for play on a dense linear order, working purely on colour words.

On a dense deck the outcome of a board is determined by its colour word:
the moves available from a word are exactly the insert-a-purple operations,
every one of which is realizable by density.  A word is terminal once it
carries ``a`` reddish or ``d`` bluish letters; in normal play the mover who
produced it wins.

Besides the exact solver this module carries the P-position certificates
for d = 4 and d = 5 and their checkers, a duality check between normal and
misere play, and the computational side of the strategy-stealing argument
for the symmetric game.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bumping import (
    bluish,
    insert_purple,
    is_admissible,
    pack_word,
    reddish,
    reverse_complement,
    unpack_word,
)
from .errors import InvariantError
from .order_core import GameParams, Mode, Outcome


@dataclass(frozen=True)
class QPosition:
    """A dense-order position: an admissible word plus its letter counts."""

    word: str
    reddish: int
    bluish: int

    @classmethod
    def from_word(cls, word: str) -> "QPosition":
        if not is_admissible(word):
            raise ValueError(f"word not admissible: {word!r}")
        return cls(word, reddish(word), bluish(word))


def colour_children(word: str) -> tuple[str, ...]:
    """All words reachable from this one in a single move, deduplicated.

    Children appear in insertion-position order; distinct positions can
    yield the same child.
    """
    if not is_admissible(word):
        raise ValueError(f"word not admissible: {word!r}")
    out: list[str] = []
    seen: set[str] = set()
    for pos in range(len(word) + 1):
        child = insert_purple(word, pos)
        if child not in seen:
            seen.add(child)
            out.append(child)
    return tuple(out)


def is_terminal_q(word: str, params: GameParams) -> bool:
    """True iff the word carries a reddish or d bluish letters."""
    if not is_admissible(word):
        raise ValueError(f"word not admissible: {word!r}")
    return reddish(word) >= params.a or bluish(word) >= params.d


# Children and letter counts cached on packed words, shared across solves.
_CHILDREN: dict[int, tuple[int, ...]] = {}
_COUNTS: dict[int, tuple[int, int]] = {}


def _counts(packed: int) -> tuple[int, int]:
    c = _COUNTS.get(packed)
    if c is None:
        word = unpack_word(packed)
        c = (reddish(word), bluish(word))
        _COUNTS[packed] = c
    return c


def _children(packed: int) -> tuple[int, ...]:
    kids = _CHILDREN.get(packed)
    if kids is None:
        word = unpack_word(packed)
        out: list[int] = []
        seen: set[int] = set()
        for pos in range(len(word) + 1):
            child = pack_word(insert_purple(word, pos))
            if child not in seen:
                seen.add(child)
                out.append(child)
        kids = tuple(out)
        _CHILDREN[packed] = kids
    return kids


_N, _P = 0, 1
_OUT = (Outcome.N, Outcome.P)


def _typed_ints(params: GameParams) -> dict[int, int]:
    """Type every word reachable in play of (a, d, Q), keyed packed.

    The reachable non-terminal graph must be acyclic and every play is
    bounded by (a-1)(d-1)+1 moves; both are asserted and violations raise
    rather than loop.
    """
    a, d = params.a, params.d
    terminal = _N if params.mode is Mode.MISERE else _P
    depth_limit = (a - 1) * (d - 1) + 1
    types: dict[int, int] = {}
    on_stack: set[int] = set()

    def visit(packed: int, depth: int) -> int:
        t = types.get(packed)
        if t is not None:
            return t
        r, b = _counts(packed)
        if r >= a or b >= d:
            types[packed] = terminal
            return terminal
        if packed in on_stack:
            raise InvariantError(
                "cycle among non-terminal colour words; this contradicts the "
                "Erdos-Szekeres bound on play length"
            )
        if depth > depth_limit:
            raise InvariantError(
                f"search depth exceeded the play-length bound {depth_limit}"
            )
        on_stack.add(packed)
        has_p = False
        for child in _children(packed):
            if visit(child, depth + 1) == _P:
                has_p = True
                # No cutoff: type the full reachable graph.
        on_stack.discard(packed)
        t = _N if has_p else _P
        types[packed] = t
        return t

    visit(pack_word(""), 0)
    return types


def solve_q(params: GameParams) -> Outcome:
    """Exact outcome of the empty board of (a, d, Q).

    Never D: a dense order has no infinite antichain, so no draws exist.
    """
    return _OUT[_typed_ints(params)[pack_word("")]]


def typed_reachable_graph(params: GameParams) -> dict[str, Outcome]:
    """Every word reachable in play, mapped to its outcome type."""
    return {unpack_word(p): _OUT[t] for p, t in _typed_ints(params).items()}


def reachable_words(params: GameParams) -> tuple[str, ...]:
    """All words reachable in play of (a, d, Q), in BFS discovery order.

    Non-terminal words are expanded; terminal words appear as leaves.
    """
    a, d = params.a, params.d
    start = pack_word("")
    seen = {start}
    order = [start]
    queue = [start]
    while queue:
        nxt: list[int] = []
        for packed in queue:
            r, b = _counts(packed)
            if r >= a or b >= d:
                continue
            for child in _children(packed):
                if child not in seen:
                    seen.add(child)
                    order.append(child)
                    nxt.append(child)
        queue = nxt
    return tuple(unpack_word(p) for p in order)


def duality_check(a: int, d: int) -> bool:
    """Check W_normal(a, d, Q) = W_misere(a-1, d-1, Q).

    Winning the normal game forbids ever reaching a-1 ascending or d-1
    descending yourself while punishing an opponent who does, which is
    exactly the misere game one size down.
    """
    if a < 3 or d < 3:
        raise ValueError("duality_check needs a, d >= 3")
    normal = solve_q(GameParams(a, d, Mode.NORMAL))
    misere = solve_q(GameParams(a - 1, d - 1, Mode.MISERE))
    return normal is misere


def p4_set(a: int) -> set[str]:
    """The non-terminal P-positions of (a, 4, Q):
    {P, R^(a-3) P B} together with R^i P P for 0 <= i <= a-5.
    """
    if a < 4:
        raise ValueError("p4_set needs a >= 4")
    out = {"P", "R" * (a - 3) + "PB"}
    for i in range(a - 4):
        out.add("R" * i + "PP")
    return out


def p5_set(a: int) -> set[str]:
    """A sufficient set of P-positions for (a, 5, Q):
    {P, RPB} together with R^i PRPB and R^i RPBP for 0 <= i <= a-6,
    plus R^(a-5) P^3 and R^(a-3) P B^2.
    """
    if a < 5:
        raise ValueError("p5_set needs a >= 5")
    out = {"P", "RPB"}
    for i in range(a - 5):
        out.add("R" * i + "PRPB")
        out.add("R" * i + "RPBP")
    out.add("R" * (a - 5) + "PPP")
    out.add("R" * (a - 3) + "PBB")
    return out


def verify_exact_pset(pset: set[str], params: GameParams) -> bool:
    """Certify a set as exactly the non-terminal P-positions.

    Over every position reachable in play: a non-terminal position outside
    the set must have a child in the set or a terminal child, and a member
    must have no such child.
    """
    a, d = params.a, params.d
    for word in reachable_words(params):
        if reddish(word) >= a or bluish(word) >= d:
            continue
        witness = any(
            child in pset or reddish(child) >= a or bluish(child) >= d
            for child in colour_children(word)
        )
        if (word in pset) == witness:
            return False
    return True


def verify_sufficient_pset(pset: set[str], params: GameParams) -> bool:
    """Certify a set as sufficient P-positions.

    Three conditions: the word P is in the set; for every member w and
    every child v of w, v has a child that is terminal (an immediate win
    for the mover) or in the set; and no member has a terminal child.
    """
    a, d = params.a, params.d

    def terminal(word: str) -> bool:
        return reddish(word) >= a or bluish(word) >= d

    if "P" not in pset:
        return False
    for w in pset:
        if any(terminal(v) for v in colour_children(w)):
            return False
        for v in colour_children(w):
            if not any(terminal(u) or u in pset for u in colour_children(v)):
                return False
    return True


def verify_strategy_stealing_case(a: int) -> bool:
    """Computational counterpart of the strategy-stealing argument for
    (a, a, Q): the empty word must be N, the word RPB must be P, RPB's
    children must be exactly {RPP, RRPB, RPBB, PPB}, and the two
    order-reversal partners PBP and PRP must share a type.
    """
    if a < 4:
        raise ValueError("verify_strategy_stealing_case needs a >= 4")
    graph = typed_reachable_graph(GameParams(a, a, Mode.NORMAL))
    if set(colour_children("RPB")) != {"RPP", "RRPB", "RPBB", "PPB"}:
        return False
    return (
        graph[""] is Outcome.N
        and graph["RPB"] is Outcome.P
        and graph["PBP"] is graph["PRP"]
    )


def position_symmetry_holds(params: GameParams) -> bool:
    """Every reachable word has the same type as its reverse-complement.

    Meaningful for a = d, where order reversal is a game symmetry.
    """
    graph = typed_reachable_graph(params)
    return all(graph.get(reverse_complement(w)) is graph[w] for w in graph)


def solve_q_forbidden(params: GameParams) -> Outcome:
    """Outcome of the suicide-forbidden variant of (a, d, Q), normal play.

    A move to a non-terminal word with a-1 reddish or d-1 bluish letters is
    forbidden unless every move is such; a player forced to make one loses
    to the opponent's immediate win.  The variant has the same outcome as
    the ordinary game; it exists for cross-validation.
    """
    if params.mode is not Mode.NORMAL:
        raise ValueError("the suicide-forbidden variant is a normal-play device")
    a, d = params.a, params.d
    memo: dict[int, int] = {}

    def value(packed: int) -> int:
        v = memo.get(packed)
        if v is not None:
            return v
        r, b = _counts(packed)
        if r >= a - 1 or b >= d - 1:
            # The mover completes a critical sequence at once (insert at the
            # far end past everything reddish, or below everything bluish).
            memo[packed] = _N
            return _N
        allowed = []
        for child in _children(packed):
            cr, cb = _counts(child)
            if cr < a - 1 and cb < d - 1:
                allowed.append(child)
        if not allowed:
            # Forced to move suicidally; the opponent wins immediately.
            memo[packed] = _P
            return _P
        t = _N if any(value(c) == _P for c in allowed) else _P
        memo[packed] = t
        return t

    return _OUT[value(pack_word(""))]
