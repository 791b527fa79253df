"""The move calculus on token sequences.

Implements the local moves for diagrams with double lines: the three
Reidemeister moves, sliding a double line past a crossing, creation and
cancellation of an adjacent opposite-sign double-line pair, and the two
derived moves (crossing change, crossing sliding).  Every move is a
``MoveInstance``: a kind plus a fully-parameterized site, so applications
are replayable and invertible.

Position conventions: sites index into the current token tuple; adjacency
is cyclic, so the pair ``(len-1, 0)`` is adjacent.  Insertion positions
mean "insert before the token currently at that index".
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .diagram import (
    OVER,
    UNDER,
    DlDiagram,
    DoubleLine,
    Passage,
    Token,
    parse,
    serialize,
)

R1_ADD = "R1Add"
R1_REMOVE = "R1Remove"
R2_ADD = "R2Add"
R2_REMOVE = "R2Remove"
R3 = "R3"
DL_SLIDE = "DlSlide4"
DL_PAIR_ADD = "DlPairAdd5"
DL_PAIR_CANCEL = "DlPairCancel5"
CROSSING_CHANGE = "CrossingChange"
CROSSING_SLIDING = "CrossingSliding"

ALL_KINDS = frozenset(
    {
        R1_ADD,
        R1_REMOVE,
        R2_ADD,
        R2_REMOVE,
        R3,
        DL_SLIDE,
        DL_PAIR_ADD,
        DL_PAIR_CANCEL,
        CROSSING_CHANGE,
        CROSSING_SLIDING,
    }
)


class MoveError(ValueError):
    """Raised when a move instance does not match its site."""


@dataclass(frozen=True)
class MoveInstance:
    """A fully-parameterized applicable move: kind plus site parameters."""

    kind: str
    params: tuple[tuple[str, int | str], ...]

    def __getitem__(self, key: str) -> int | str:
        for k, v in self.params:
            if k == key:
                return v
        raise MoveError(f"{self.kind} is missing parameter {key!r}")

    def to_line(self) -> str:
        parts = [self.kind] + [f"{k}={v}" for k, v in self.params]
        return " ".join(parts)

    @classmethod
    def from_line(cls, line: str) -> "MoveInstance":
        words = line.split()
        if not words or words[0] not in ALL_KINDS:
            raise MoveError(f"bad move line {line!r}")
        params = []
        for w in words[1:]:
            if "=" not in w:
                raise MoveError(f"bad move parameter {w!r}")
            k, v = w.split("=", 1)
            try:
                params.append((k, int(v)))
            except ValueError:
                params.append((k, v))
        return mk(words[0], **dict(params))


def mk(kind: str, **params: int | str) -> MoveInstance:
    return MoveInstance(kind, tuple(sorted(params.items())))


def _fresh_id(tokens: tuple[Token, ...]) -> int:
    ids = [t.crossing_id for t in tokens if isinstance(t, Passage)]
    return max(ids, default=0) + 1


def _cyc(tokens: tuple[Token, ...], i: int) -> Token:
    return tokens[i % len(tokens)]


def _delete_cyclic(tokens: tuple[Token, ...], positions: list[int]) -> tuple[Token, ...]:
    n = len(tokens)
    drop = {p % n for p in positions}
    return tuple(t for i, t in enumerate(tokens) if i not in drop)


def _passage_positions(tokens: tuple[Token, ...], cid: int) -> tuple[int, int]:
    """(under_pos, over_pos) of crossing ``cid``."""
    u = o = -1
    for i, t in enumerate(tokens):
        if isinstance(t, Passage) and t.crossing_id == cid:
            if t.role == UNDER:
                u = i
            else:
                o = i
    if u < 0 or o < 0:
        raise MoveError(f"unknown crossing id {cid}")
    return u, o


def _check_pos(m: MoveInstance, key: str, n: int, allow_end: bool = False) -> int:
    pos = m[key]
    if not isinstance(pos, int):
        raise MoveError(f"{key} must be an integer")
    hi = n if allow_end else n - 1
    if n == 0:
        if pos != 0:
            raise MoveError(f"{key}={pos} out of range for empty diagram")
        return 0
    if not 0 <= pos <= max(hi, 0):
        raise MoveError(f"{key}={pos} out of range")
    return pos


def apply(d: DlDiagram, m: MoveInstance) -> DlDiagram:
    """Apply a move instance; raise MoveError on pattern mismatch."""
    tokens = d.tokens
    n = len(tokens)

    if m.kind == R1_ADD:
        pos = _check_pos(m, "pos", n, allow_end=True)
        order, sign = m["order"], m["sign"]
        if order not in ("UO", "OU") or sign not in (1, -1):
            raise MoveError("bad R1Add parameters")
        cid = _fresh_id(tokens)
        roles = (UNDER, OVER) if order == "UO" else (OVER, UNDER)
        pair = (Passage(cid, roles[0], sign), Passage(cid, roles[1], sign))
        return DlDiagram(tokens[:pos] + pair + tokens[pos:])

    if m.kind == R1_REMOVE:
        pos = _check_pos(m, "pos", n)
        a, b = _cyc(tokens, pos), _cyc(tokens, pos + 1)
        if not (
            isinstance(a, Passage)
            and isinstance(b, Passage)
            and a.crossing_id == b.crossing_id
        ):
            raise MoveError("R1Remove: no kink pair at site")
        return DlDiagram(_delete_cyclic(tokens, [pos, pos + 1]))

    if m.kind == R2_ADD:
        pos1 = _check_pos(m, "pos1", n, allow_end=True)
        pos2 = _check_pos(m, "pos2", n, allow_end=True)
        role, eps = m["role"], m["eps"]
        if role not in (OVER, UNDER) or eps not in (1, -1):
            raise MoveError("bad R2Add parameters")
        rr = UNDER if role == OVER else OVER
        base = _fresh_id(tokens)
        a, b = base, base + 1
        block1 = (Passage(a, role, eps), Passage(b, role, -eps))
        block2 = (Passage(b, rr, -eps), Passage(a, rr, eps))
        out = list(tokens)
        if pos1 <= pos2:
            out[pos2:pos2] = block2
            out[pos1:pos1] = block1
        else:
            out[pos1:pos1] = block1
            out[pos2:pos2] = block2
        return DlDiagram(tuple(out))

    if m.kind == R2_REMOVE:
        pos1 = _check_pos(m, "pos1", n)
        pos2 = _check_pos(m, "pos2", n)
        p = [_cyc(tokens, pos1), _cyc(tokens, pos1 + 1), _cyc(tokens, pos2), _cyc(tokens, pos2 + 1)]
        if not all(isinstance(t, Passage) for t in p):
            raise MoveError("R2Remove: site tokens are not passages")
        x, y, y2, x2 = p
        if len({pos1 % n, (pos1 + 1) % n, pos2 % n, (pos2 + 1) % n}) != 4:
            raise MoveError("R2Remove: overlapping sites")
        if not (
            x.crossing_id != y.crossing_id
            and x.role == y.role
            and x2.role == y2.role
            and x.role != x2.role
            and x2.crossing_id == x.crossing_id
            and y2.crossing_id == y.crossing_id
            and x.sign == -y.sign
        ):
            raise MoveError("R2Remove: pattern mismatch")
        return DlDiagram(_delete_cyclic(tokens, [pos1, pos1 + 1, pos2, pos2 + 1]))

    if m.kind == R3:
        sites = [m["pos1"], m["pos2"], m["pos3"]]
        _validate_r3(tokens, sites)
        out = list(tokens)
        for p in sites:
            i, j = p % n, (p + 1) % n
            out[i], out[j] = out[j], out[i]
        return DlDiagram(tuple(out))

    if m.kind == DL_SLIDE:
        pos = _check_pos(m, "pos", n)
        a, b = _cyc(tokens, pos), _cyc(tokens, pos + 1)
        if isinstance(a, DoubleLine) == isinstance(b, DoubleLine):
            raise MoveError("DlSlide4: need one passage and one double line")
        out = list(tokens)
        i, j = pos % n, (pos + 1) % n
        out[i], out[j] = out[j], out[i]
        return DlDiagram(tuple(out))

    if m.kind == DL_PAIR_ADD:
        pos = _check_pos(m, "pos", n, allow_end=True)
        sign = m["sign"]
        if sign not in (1, -1):
            raise MoveError("bad DlPairAdd5 sign")
        pair = (DoubleLine(sign), DoubleLine(-sign))
        return DlDiagram(tokens[:pos] + pair + tokens[pos:])

    if m.kind == DL_PAIR_CANCEL:
        pos = _check_pos(m, "pos", n)
        a, b = _cyc(tokens, pos), _cyc(tokens, pos + 1)
        if not (isinstance(a, DoubleLine) and isinstance(b, DoubleLine) and a.sign == -b.sign):
            raise MoveError("DlPairCancel5: no adjacent opposite pair at site")
        return DlDiagram(_delete_cyclic(tokens, [pos, pos + 1]))

    if m.kind == CROSSING_CHANGE:
        cid = m["crossing_id"]
        chirality = m["chirality"] if _has(m, "chirality") else 1
        if chirality not in (1, -1):
            raise MoveError("bad CrossingChange chirality")
        return DlDiagram(_crossing_change(tokens, cid, chirality))

    if m.kind == CROSSING_SLIDING:
        cid = m["crossing_id"]
        s = m["direction"]
        if s not in (1, -1):
            raise MoveError("bad CrossingSliding direction")
        return DlDiagram(_crossing_sliding(tokens, cid, s))

    raise MoveError(f"unknown move kind {m.kind!r}")


def _has(m: MoveInstance, key: str) -> bool:
    return any(k == key for k, _ in m.params)


def _crossing_change(tokens: tuple[Token, ...], cid: int, chirality: int) -> tuple[Token, ...]:
    u, o = _passage_positions(tokens, cid)
    out: list[Token] = []
    # Roles swap and the crossing sign flips; one inserted +/- pair hugs the
    # new Under (chirality +1) or the new Over (chirality -1).
    for i, t in enumerate(tokens):
        if isinstance(t, Passage) and t.crossing_id == cid:
            flipped = Passage(cid, UNDER if t.role == OVER else OVER, -t.sign)
            if chirality == 1 and flipped.role == UNDER:
                out.extend([DoubleLine(1), flipped, DoubleLine(-1)])
            elif chirality == -1 and flipped.role == OVER:
                out.extend([DoubleLine(-1), flipped, DoubleLine(1)])
            else:
                out.append(flipped)
        else:
            out.append(t)
    return tuple(out)


def _crossing_sliding(tokens: tuple[Token, ...], cid: int, s: int) -> tuple[Token, ...]:
    out: list[Token] = []
    for t in tokens:
        if isinstance(t, Passage) and t.crossing_id == cid:
            out.extend([DoubleLine(s), t, DoubleLine(-s)])
        else:
            out.append(t)
    return tuple(out)


def _validate_r3(tokens: tuple[Token, ...], sites: list[int]) -> None:
    n = len(tokens)
    if n < 6:
        raise MoveError("R3: diagram too small")
    positions = []
    for p in sites:
        if not isinstance(p, int) or not 0 <= p < n:
            raise MoveError("R3: site out of range")
        positions.extend([p % n, (p + 1) % n])
    if len(set(positions)) != 6:
        raise MoveError("R3: overlapping sites")
    pairs = []
    for p in sites:
        a, b = _cyc(tokens, p), _cyc(tokens, p + 1)
        if not (isinstance(a, Passage) and isinstance(b, Passage)):
            raise MoveError("R3: site tokens are not adjacent passages")
        pairs.append((a, b))
    ids: dict[int, list[int]] = {}
    for idx, (a, b) in enumerate(pairs):
        for t in (a, b):
            ids.setdefault(t.crossing_id, []).append(idx)
    if len(ids) != 3:
        raise MoveError("R3: need exactly three crossings")
    for cid, where in ids.items():
        if len(where) != 2 or where[0] == where[1]:
            raise MoveError("R3: each crossing must span two distinct sites")
    signatures = sorted(tuple(sorted((a.role, b.role))) for a, b in pairs)
    if signatures != [("O", "O"), ("O", "U"), ("U", "U")]:
        raise MoveError("R3: over/under pattern mismatch")


def enumerate_moves(d: DlDiagram, kinds: frozenset[str] | set[str] = ALL_KINDS) -> list[MoveInstance]:
    """All applicable instances of the requested kinds, in deterministic order."""
    tokens = d.tokens
    n = len(tokens)
    out: list[MoveInstance] = []
    ins_positions = range(max(n, 1))

    for kind in sorted(kinds):
        if kind == R1_ADD:
            for pos in ins_positions:
                for order in ("OU", "UO"):
                    for sign in (1, -1):
                        out.append(mk(R1_ADD, pos=pos, order=order, sign=sign))
        elif kind == R1_REMOVE:
            for pos in range(n):
                a, b = _cyc(tokens, pos), _cyc(tokens, pos + 1)
                if (
                    isinstance(a, Passage)
                    and isinstance(b, Passage)
                    and a.crossing_id == b.crossing_id
                ):
                    if n == 2 and pos == 1:
                        continue  # same kink as pos 0 on a 2-token word
                    out.append(mk(R1_REMOVE, pos=pos))
        elif kind == R2_ADD:
            for pos1 in ins_positions:
                for pos2 in ins_positions:
                    for role in ("O", "U"):
                        for eps in (1, -1):
                            out.append(mk(R2_ADD, pos1=pos1, pos2=pos2, role=role, eps=eps))
        elif kind == R2_REMOVE:
            for pos1 in range(n):
                for pos2 in range(pos1 + 1, n):
                    cand = mk(R2_REMOVE, pos1=pos1, pos2=pos2)
                    if _matches(d, cand):
                        out.append(cand)
        elif kind == R3:
            adj = [
                p
                for p in range(n)
                if isinstance(_cyc(tokens, p), Passage) and isinstance(_cyc(tokens, p + 1), Passage)
            ]
            for i in range(len(adj)):
                for j in range(i + 1, len(adj)):
                    for k in range(j + 1, len(adj)):
                        cand = mk(R3, pos1=adj[i], pos2=adj[j], pos3=adj[k])
                        if _matches(d, cand):
                            out.append(cand)
        elif kind == DL_SLIDE:
            for pos in range(n):
                a, b = _cyc(tokens, pos), _cyc(tokens, pos + 1)
                if isinstance(a, DoubleLine) != isinstance(b, DoubleLine):
                    out.append(mk(DL_SLIDE, pos=pos))
        elif kind == DL_PAIR_ADD:
            for pos in ins_positions:
                for sign in (1, -1):
                    out.append(mk(DL_PAIR_ADD, pos=pos, sign=sign))
        elif kind == DL_PAIR_CANCEL:
            for pos in range(n):
                a, b = _cyc(tokens, pos), _cyc(tokens, pos + 1)
                if isinstance(a, DoubleLine) and isinstance(b, DoubleLine) and a.sign == -b.sign:
                    if n == 2 and pos == 1:
                        continue  # same pair as pos 0 on a 2-token word
                    out.append(mk(DL_PAIR_CANCEL, pos=pos))
        elif kind == CROSSING_CHANGE:
            for cid in d.crossing_ids:
                for chirality in (1, -1):
                    out.append(mk(CROSSING_CHANGE, crossing_id=cid, chirality=chirality))
        elif kind == CROSSING_SLIDING:
            for cid in d.crossing_ids:
                for s in (1, -1):
                    out.append(mk(CROSSING_SLIDING, crossing_id=cid, direction=s))
        else:
            raise MoveError(f"unknown move kind {kind!r}")
    return out


def _matches(d: DlDiagram, m: MoveInstance) -> bool:
    try:
        apply(d, m)
        return True
    except MoveError:
        return False


def _find_passage(tokens: tuple[Token, ...], cid: int, role: str) -> int:
    for i, t in enumerate(tokens):
        if isinstance(t, Passage) and t.crossing_id == cid and t.role == role:
            return i
    raise MoveError(f"no passage {role}{cid}")


def invert(m: MoveInstance, context: DlDiagram) -> list[MoveInstance]:
    """A move sequence undoing ``m``: applying it to ``apply(context, m)``
    restores ``context`` (up to canonical equality for the composite kinds)."""
    after = apply(context, m)
    n_after = len(after.tokens)

    if m.kind == R1_ADD:
        return [mk(R1_REMOVE, pos=m["pos"])]
    if m.kind == R1_REMOVE:
        n = len(context.tokens)
        pos = m["pos"] % n
        a = context.tokens[pos]
        b = _cyc(context.tokens, pos + 1)
        assert isinstance(a, Passage) and isinstance(b, Passage)
        order = "UO" if a.role == UNDER else "OU"
        # A pair wrapping the end of the word is re-appended at the end,
        # which restores the original up to rotation.
        ins = pos if (pos + 1) % n != 0 else n_after
        return [mk(R1_ADD, pos=ins, order=order, sign=a.sign)]
    if m.kind == R2_ADD:
        pos1, pos2 = m["pos1"], m["pos2"]
        if pos1 <= pos2:
            return [mk(R2_REMOVE, pos1=pos1, pos2=pos2 + 2)]
        return [mk(R2_REMOVE, pos1=pos1 + 2, pos2=pos2)]
    if m.kind == R2_REMOVE:
        n = len(context.tokens)
        pos1, pos2 = m["pos1"] % n, m["pos2"] % n
        first = context.tokens[pos1]
        assert isinstance(first, Passage)
        # Insertion indices into the reduced word.
        removed = sorted([pos1, (pos1 + 1) % n, pos2, (pos2 + 1) % n])
        shift1 = sum(1 for r in removed if r < pos1)
        shift2 = sum(1 for r in removed if r < pos2)
        return [
            mk(
                R2_ADD,
                pos1=pos1 - shift1,
                pos2=pos2 - shift2,
                role=first.role,
                eps=first.sign,
            )
        ]
    if m.kind == R3:
        return [m]
    if m.kind == DL_SLIDE:
        return [m]
    if m.kind == DL_PAIR_ADD:
        return [mk(DL_PAIR_CANCEL, pos=m["pos"])]
    if m.kind == DL_PAIR_CANCEL:
        n = len(context.tokens)
        pos = m["pos"] % n
        a = context.tokens[pos]
        assert isinstance(a, DoubleLine)
        ins = pos if (pos + 1) % n != 0 else n_after
        return [mk(DL_PAIR_ADD, pos=ins, sign=a.sign)]
    if m.kind == CROSSING_CHANGE:
        cid = m["crossing_id"]
        chirality = m["chirality"] if _has(m, "chirality") else 1
        steps = [mk(CROSSING_CHANGE, crossing_id=cid, chirality=-chirality)]
        cur = apply(after, steps[0])
        # The two chirality variants hug the same passage slot with opposite
        # pairs: the leftovers sit immediately before and after it.
        anchor_role = OVER if chirality == 1 else UNDER
        more, _ = _hug_cancels(cur, cid, anchor_role)
        return steps + more
    if m.kind == CROSSING_SLIDING:
        cid = m["crossing_id"]
        s = m["direction"]
        steps = [mk(CROSSING_SLIDING, crossing_id=cid, direction=-s)]
        cur = apply(after, steps[0])
        for role in (UNDER, OVER):
            more, cur = _hug_cancels(cur, cid, role)
            steps.extend(more)
        return steps
    raise MoveError(f"unknown move kind {m.kind!r}")


def _cancel_pair_at(d: DlDiagram, pos: int) -> MoveInstance:
    a, b = _cyc(d.tokens, pos), _cyc(d.tokens, pos + 1)
    if not (
        isinstance(a, DoubleLine) and isinstance(b, DoubleLine) and a.sign == -b.sign
    ):
        raise MoveError("no cancellable pair at expected site")
    return mk(DL_PAIR_CANCEL, pos=pos % len(d.tokens))


def _hug_cancels(
    d: DlDiagram, cid: int, role: str
) -> tuple[list[MoveInstance], DlDiagram]:
    """Cancel the opposite pairs immediately before and after a passage.

    A move pair and its undo leave the pattern D D P D D around the
    passage; the two pairs sit at fixed offsets, so the cancel sites are
    positional, not searched.
    """
    steps = []
    cur = d
    idx = _find_passage(cur.tokens, cid, role)
    c1 = _cancel_pair_at(cur, (idx - 2) % len(cur.tokens))
    steps.append(c1)
    cur = apply(cur, c1)
    idx = _find_passage(cur.tokens, cid, role)
    c2 = _cancel_pair_at(cur, (idx + 1) % len(cur.tokens))
    steps.append(c2)
    cur = apply(cur, c2)
    return steps, cur


class ReplayError(ValueError):
    def __init__(self, index: int, cause: MoveError):
        super().__init__(f"step {index} not applicable: {cause}")
        self.index = index


@dataclass(frozen=True)
class MoveTrace:
    """A replayable certificate: a start diagram and a move sequence."""

    start: DlDiagram
    steps: tuple[MoveInstance, ...]

    def to_text(self) -> str:
        lines = [serialize(self.start)]
        lines.extend(step.to_line() for step in self.steps)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "MoveTrace":
        lines = text.splitlines()
        if not lines:
            raise MoveError("empty trace file")
        start = parse(lines[0])
        steps = tuple(MoveInstance.from_line(ln) for ln in lines[1:] if ln.strip())
        return cls(start, steps)

    def to_json(self) -> str:
        return json.dumps(
            {
                "start": serialize(self.start),
                "steps": [
                    {"kind": s.kind, "params": dict(s.params)} for s in self.steps
                ],
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "MoveTrace":
        data = json.loads(text)
        steps = tuple(mk(s["kind"], **s["params"]) for s in data["steps"])
        return cls(parse(data["start"]), steps)


def replay(trace: MoveTrace) -> DlDiagram:
    """Replay a trace from its start diagram; report the first bad step."""
    d = trace.start
    for i, step in enumerate(trace.steps):
        try:
            d = apply(d, step)
        except MoveError as e:
            raise ReplayError(i, e) from e
    return d
