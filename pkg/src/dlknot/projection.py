"""Winding-parity projection, double-line elimination, and essential sets.

Three layers on top of the move engine:

* ``parity_projection`` normalizes every crossing's winding parity to 0 by
  inserting compensating double-line pairs (with a crossing change first at
  crossings of negative parity).  Defined on degree-0 diagrams only.
* ``eliminate_double_lines`` removes every double line from a degree-0
  diagram whose parities all lie in {0, -1}, emitting a replayable trace
  that uses only the crossing change, crossing sliding and pair-cancel
  moves.
* ``important_subsets`` / ``essential_count`` / ``essential_diagram``
  compute the important and essential double-line subsets: an important
  subset is one whose removal leaves a degree-0 diagram with all parities
  in {0, -1}; an essential subset is an important subset of minimal size.
  The minimal size is an equivalence invariant.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import moves
from .diagram import (
    OVER,
    UNDER,
    DlDiagram,
    DoubleLine,
    Passage,
    Token,
    degree,
    raw_winding_sum,
)
from .moves import (
    CROSSING_CHANGE,
    CROSSING_SLIDING,
    DL_PAIR_CANCEL,
    MoveInstance,
    MoveTrace,
    mk,
)


class ProjectionError(ValueError):
    """Raised when a projection precondition fails."""


def _raw_parities(d: DlDiagram) -> dict[int, int]:
    return {cid: raw_winding_sum(d, cid) for cid in d.crossing_ids}


def parity_projection(d: DlDiagram) -> DlDiagram:
    """Normalize all winding parities of a degree-0 diagram to 0.

    A crossing of parity i >= 0 receives i plus-lines right before its
    Under passage and i minus-lines right after; a crossing of parity
    i < 0 is first crossing-changed (parity becomes -i-1) and then treated
    the same way.  Idempotent under canonical equality.
    """
    if degree(d) != 0:
        raise ProjectionError(f"parity projection needs degree 0, got {degree(d)}")
    parities = _raw_parities(d)
    out: list[Token] = []
    for t in d.tokens:
        if not isinstance(t, Passage):
            out.append(t)
            continue
        p = parities[t.crossing_id]
        if p >= 0:
            if t.role == UNDER and p > 0:
                out.extend([DoubleLine(1)] * p)
                out.append(t)
                out.extend([DoubleLine(-1)] * p)
            else:
                out.append(t)
        else:
            flipped = Passage(t.crossing_id, UNDER if t.role != UNDER else OVER, -t.sign)
            pad = (-p - 1) + 1  # crossing-change pair plus -p-1 compensating pairs
            if flipped.role == UNDER:
                out.extend([DoubleLine(1)] * pad)
                out.append(flipped)
                out.extend([DoubleLine(-1)] * pad)
            else:
                out.append(flipped)
    return DlDiagram(tuple(out))


def strip_double_lines(d: DlDiagram) -> DlDiagram:
    """Delete every double-line token (the base virtual diagram)."""
    return DlDiagram(tuple(t for t in d.tokens if not isinstance(t, DoubleLine)))


@dataclass(frozen=True)
class EliminationCertificate:
    """A trace removing all double lines, plus the resulting diagram."""

    trace: MoveTrace
    result: DlDiagram


class _Builder:
    """Applies moves to a live diagram while recording the trace."""

    def __init__(self, start: DlDiagram):
        self.start = start
        self.current = start
        self.steps: list[MoveInstance] = []

    def do(self, m: MoveInstance) -> None:
        self.current = moves.apply(self.current, m)
        self.steps.append(m)

    def cancel_sweep(self) -> None:
        """Cancel adjacent opposite-sign pairs, leftmost first, to exhaustion."""
        while True:
            tokens = self.current.tokens
            n = len(tokens)
            for pos in range(n):
                a, b = tokens[pos], tokens[(pos + 1) % n]
                if isinstance(a, DoubleLine) and isinstance(b, DoubleLine) and a.sign == -b.sign:
                    if n == 2 and pos == 1:
                        continue
                    self.do(mk(DL_PAIR_CANCEL, pos=pos))
                    break
            else:
                return

    def trace(self) -> MoveTrace:
        return MoveTrace(self.start, tuple(self.steps))


def _arc_sum_before(d: DlDiagram, cid: int, role: str) -> int:
    """Sum of double-line signs on the arc entering the given passage."""
    i = d.passage_index(cid, role)
    n = len(d.tokens)
    total = 0
    j = (i - 1) % n
    while j != i:
        t = d.tokens[j]
        if isinstance(t, Passage):
            break
        total += t.sign
        j = (j - 1) % n
    return total


def eliminate_double_lines(d: DlDiagram) -> EliminationCertificate:
    """Remove all double lines from a degree-0 diagram with parities in {0,-1}.

    Implements the two-step sliding walk: crossing-change every parity -1
    crossing, then traverse the knot from a base crossing, pushing each
    arc's accumulated double-line sum forward with crossing sliding moves
    and cancelling pairs as they meet.  The emitted trace uses only
    CrossingChange, CrossingSliding and DlPairCancel5 and replays to the
    double-line-free result.
    """
    deg = degree(d)
    if deg != 0:
        raise ProjectionError(f"elimination needs degree 0, got {deg}")
    parities = _raw_parities(d)
    for cid in d.crossing_ids:
        if parities[cid] not in (0, -1):
            raise ProjectionError(
                f"crossing {cid} has winding parity {parities[cid]}, expected 0 or -1"
            )

    b = _Builder(d)
    for cid in d.crossing_ids:
        if parities[cid] == -1:
            b.do(mk(CROSSING_CHANGE, crossing_id=cid, chirality=1))
    b.cancel_sweep()

    if b.current.crossing_count == 0:
        # No passages: remaining double lines sum to 0 and are mutually
        # adjacent, so the sweep has already emptied them.
        assert b.current.double_line_count == 0
        return EliminationCertificate(b.trace(), b.current)

    # Fixed passage order: the walk starts right after the Under passage of
    # the first crossing appearing in token order.  Passages never move
    # relative to each other during sliding and cancelling.
    tokens = b.current.tokens
    first_cid = next(t.crossing_id for t in tokens if isinstance(t, Passage))
    anchor = b.current.passage_index(first_cid, UNDER)
    n = len(tokens)
    passage_seq: list[tuple[int, str]] = []
    for off in range(1, n + 1):
        t = tokens[(anchor + off) % n]
        if isinstance(t, Passage):
            passage_seq.append((t.crossing_id, t.role))
    # passage_seq ends with the anchor Under passage itself.

    visited = {first_cid}
    for cid, role in passage_seq[:-1]:
        acc = _arc_sum_before(b.current, cid, role)
        if cid not in visited:
            visited.add(cid)
            while acc != 0:
                s = -1 if acc > 0 else 1
                b.do(mk(CROSSING_SLIDING, crossing_id=cid, direction=s))
                b.cancel_sweep()
                acc = _arc_sum_before(b.current, cid, role)
        elif acc != 0:
            raise AssertionError(
                f"revisited crossing {cid} with dirty arc (sum {acc}); "
                "elimination invariant violated"
            )
    b.cancel_sweep()
    assert b.current.double_line_count == 0, "double lines left after elimination walk"
    return EliminationCertificate(b.trace(), b.current)


@dataclass(frozen=True)
class EssentialReport:
    """One important double-line subset and the residual parity profile."""

    subset: tuple[int, ...]
    cardinality: int
    residual_parities: tuple[int, ...]
    is_essential: bool

    def to_dict(self) -> dict:
        return {
            "subset": list(self.subset),
            "cardinality": self.cardinality,
            "residual_parities": list(self.residual_parities),
            "essential": self.is_essential,
        }


def _double_positions(d: DlDiagram) -> list[int]:
    return [i for i, t in enumerate(d.tokens) if isinstance(t, DoubleLine)]


def _delete_positions(d: DlDiagram, subset: tuple[int, ...]) -> DlDiagram:
    drop = set(subset)
    return DlDiagram(tuple(t for i, t in enumerate(d.tokens) if i not in drop))


def _residual_parities_if_important(d: DlDiagram, subset: tuple[int, ...]) -> tuple[int, ...] | None:
    residual = _delete_positions(d, subset)
    if degree(residual) != 0:
        return None
    vals = tuple(sorted(raw_winding_sum(residual, cid) for cid in residual.crossing_ids))
    if any(v not in (0, -1) for v in vals):
        return None
    return vals


def _subsets_of_size(d: DlDiagram, k: int):
    """Candidate subsets of k double-line positions whose sign sum can match
    the degree, in lexicographic order of the merged position tuple."""
    deg = degree(d)
    plus = [i for i in _double_positions(d) if d.tokens[i].sign > 0]
    minus = [i for i in _double_positions(d) if d.tokens[i].sign < 0]
    if (k + deg) % 2 != 0:
        return
    p_cnt = (k + deg) // 2
    m_cnt = k - p_cnt
    if not (0 <= p_cnt <= len(plus) and 0 <= m_cnt <= len(minus)):
        return
    merged = []
    for ps in itertools.combinations(plus, p_cnt):
        for ms in itertools.combinations(minus, m_cnt):
            merged.append(tuple(sorted(ps + ms)))
    merged.sort()
    yield from merged


def important_subsets(d: DlDiagram, limit: int | None = None) -> list[EssentialReport]:
    """All important double-line subsets, sorted by cardinality.

    The full double-line set is always important, so the list is never
    empty.  ``limit`` caps the number of reports returned.
    """
    total = len(_double_positions(d))
    reports: list[EssentialReport] = []
    kmin: int | None = None
    for k in range(total + 1):
        for subset in _subsets_of_size(d, k):
            vals = _residual_parities_if_important(d, subset)
            if vals is None:
                continue
            if kmin is None:
                kmin = k
            reports.append(EssentialReport(subset, k, vals, k == kmin))
            if limit is not None and len(reports) >= limit:
                return reports
    return reports


def essential_count(d: DlDiagram) -> int:
    """Minimum cardinality over all important subsets (exact search).

    Interchangeable double lines (same sign, same set of winding intervals)
    are grouped into classes, so block-shaped diagrams stay cheap.
    """
    deg = degree(d)
    positions = _double_positions(d)
    cids = d.crossing_ids
    membership: dict[int, frozenset[int]] = {}
    for cid in cids:
        u = d.passage_index(cid, UNDER)
        n = len(d.tokens)
        inside = set()
        j = (u + 1) % n
        while True:
            t = d.tokens[j]
            if isinstance(t, Passage) and t.crossing_id == cid:
                break
            if isinstance(t, DoubleLine):
                inside.add(j)
            j = (j + 1) % n
        membership[cid] = frozenset(inside)

    classes: dict[tuple, int] = {}
    for i in positions:
        sig = (
            frozenset(c for c in cids if i in membership[c]),
            d.tokens[i].sign,
        )
        classes[sig] = classes.get(sig, 0) + 1
    class_list = sorted(
        ((sig, size) for sig, size in classes.items()),
        key=lambda item: (-item[1], sorted(item[0][0]), item[0][1]),
    )
    raw = {cid: raw_winding_sum(d, cid) for cid in cids}
    # Removing a subset S leaves parity raw[c] - sum(S within gamma_c), which
    # must land in {0, -1}; the removed total must equal the degree.
    targets = {cid: (raw[cid] - 0, raw[cid] + 1) for cid in cids}

    ncls = len(class_list)
    # Suffix capacity per crossing: how much +/- weight remains from class i on.
    suf_plus = [[0] * len(cids) for _ in range(ncls + 1)]
    suf_minus = [[0] * len(cids) for _ in range(ncls + 1)]
    suf_plus_all = [0] * (ncls + 1)
    suf_minus_all = [0] * (ncls + 1)
    cid_index = {cid: ix for ix, cid in enumerate(cids)}
    for i in range(ncls - 1, -1, -1):
        (members, sign), size = class_list[i]
        for ix in range(len(cids)):
            suf_plus[i][ix] = suf_plus[i + 1][ix]
            suf_minus[i][ix] = suf_minus[i + 1][ix]
        suf_plus_all[i] = suf_plus_all[i + 1]
        suf_minus_all[i] = suf_minus_all[i + 1]
        for cid in members:
            ix = cid_index[cid]
            if sign > 0:
                suf_plus[i][ix] += size
            else:
                suf_minus[i][ix] += size
        if sign > 0:
            suf_plus_all[i] += size
        else:
            suf_minus_all[i] += size

    def feasible(k: int) -> bool:
        # DFS over per-class removal counts with interval pruning.
        cur = [0] * len(cids)

        def rec(i: int, remaining: int, total_sign: int) -> bool:
            # Prune per crossing and on the global sign sum.
            for ix in range(len(cids)):
                lo = cur[ix] - min(suf_minus[i][ix], remaining)
                hi = cur[ix] + min(suf_plus[i][ix], remaining)
                t0, t1 = targets[cids[ix]]
                if hi < t0 or lo > t1:
                    return False
            lo = total_sign - min(suf_minus_all[i], remaining)
            hi = total_sign + min(suf_plus_all[i], remaining)
            if not lo <= deg <= hi:
                return False
            if i == ncls:
                return remaining == 0 and total_sign == deg and all(
                    targets[cids[ix]][0] <= cur[ix] <= targets[cids[ix]][1]
                    and cur[ix] in targets[cids[ix]]
                    for ix in range(len(cids))
                )
            (members, sign), size = class_list[i]
            idxs = [cid_index[c] for c in members]
            for x in range(min(size, remaining), -1, -1):
                for ix in idxs:
                    cur[ix] += sign * x
                if rec(i + 1, remaining - x, total_sign + sign * x):
                    return True
                for ix in idxs:
                    cur[ix] -= sign * x
            return False

        return rec(0, k, 0)

    start = abs(deg) if (abs(deg) + deg) % 2 == 0 else abs(deg) + 1
    for k in range(start, len(positions) + 1):
        if (k + deg) % 2 != 0:
            continue
        if feasible(k):
            return k
    # The full set is always important.
    return len(positions)


def _first_essential_subset(d: DlDiagram) -> tuple[int, ...]:
    kmin = essential_count(d)
    for subset in _subsets_of_size(d, kmin):
        if _residual_parities_if_important(d, subset) is not None:
            return subset
    raise AssertionError("essential_count reported an infeasible cardinality")


def essential_diagram(d: DlDiagram) -> tuple[DlDiagram, MoveTrace]:
    """An equivalent diagram whose double lines are one essential subset,
    plus the canonical pairs at residual parity -1 crossings.

    Returns the diagram together with the elimination trace certifying
    that the non-essential double lines can be removed.
    """
    dll = _first_essential_subset(d)
    residual = _delete_positions(d, dll)
    cert = eliminate_double_lines(residual)
    neg = {
        cid for cid in residual.crossing_ids if raw_winding_sum(residual, cid) == -1
    }
    keep = set(dll)
    out: list[Token] = []
    for i, t in enumerate(d.tokens):
        if isinstance(t, DoubleLine):
            if i in keep:
                out.append(t)
            continue
        if t.crossing_id in neg:
            flipped = Passage(t.crossing_id, UNDER if t.role != UNDER else OVER, -t.sign)
            if flipped.role == UNDER:
                out.extend([DoubleLine(1), flipped, DoubleLine(-1)])
            else:
                out.append(flipped)
        else:
            out.append(t)
    return DlDiagram(tuple(out)), cert.trace
