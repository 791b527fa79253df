"""Bounded breadth-first equivalence search over the move graph.

The move graph is infinite, so the search is bounded by a maximum number
of moves and a maximum token length; states are deduplicated on canonical
form.  A hit comes with a replayable trace.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .diagram import DlDiagram, canonicalize, degree
from .moves import ALL_KINDS, MoveInstance, MoveTrace, apply, enumerate_moves
from .projection import essential_count


@dataclass(frozen=True)
class SearchResult:
    found: bool
    trace: MoveTrace | None
    explored: int
    max_moves: int
    max_len: int


def bfs_search(
    start: DlDiagram,
    target: DlDiagram,
    max_moves: int = 8,
    max_len: int = 24,
    kinds: frozenset[str] | set[str] = ALL_KINDS,
    check_invariants: bool = True,
) -> SearchResult:
    """Search for a move sequence taking ``start`` to ``target``.

    Short-circuits on an invariant mismatch (degree, essential count)
    without exploring.  Deterministic for fixed parameters.
    """
    if check_invariants:
        if degree(start) != degree(target) or essential_count(start) != essential_count(
            target
        ):
            return SearchResult(False, None, 0, max_moves, max_len)

    goal = canonicalize(target).tokens
    start_key = canonicalize(start).tokens
    if start_key == goal:
        return SearchResult(True, MoveTrace(start, ()), 1, max_moves, max_len)

    seen = {start_key}
    queue: deque[tuple[DlDiagram, tuple[MoveInstance, ...]]] = deque([(start, ())])
    explored = 1
    while queue:
        d, path = queue.popleft()
        if len(path) >= max_moves:
            continue
        for m in enumerate_moves(d, kinds):
            nxt = apply(d, m)
            if len(nxt.tokens) > max_len:
                continue
            key = canonicalize(nxt).tokens
            if key in seen:
                continue
            seen.add(key)
            explored += 1
            new_path = path + (m,)
            if key == goal:
                return SearchResult(True, MoveTrace(start, new_path), explored, max_moves, max_len)
            queue.append((nxt, new_path))
    return SearchResult(False, None, explored, max_moves, max_len)
