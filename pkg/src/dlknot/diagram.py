"""Token-sequence representation of oriented knot diagrams with double lines.

A diagram is a cyclic word whose letters are either classical-crossing
passages (an id, an over/under role and a crossing sign) or signed double
lines.  The word is an abstract Gauss code: virtual crossings and detour
moves never appear because they act trivially on the code.

The two basic invariants live here as well: the degree (sum of double-line
signs) and the winding parity of each crossing.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

OVER = "O"
UNDER = "U"

_PASSAGE_RE = re.compile(r"([OU])([0-9]+)([+-])")
_DOUBLE_RE = re.compile(r"D([+-])")


class DiagramError(ValueError):
    """Raised on malformed diagram text or broken pairing invariants."""


@dataclass(frozen=True)
class Passage:
    """One visit to a classical crossing: id, Over/Under role, crossing sign."""

    crossing_id: int
    role: str  # OVER or UNDER
    sign: int  # +1 or -1


@dataclass(frozen=True)
class DoubleLine:
    """A signed double-line decoration on the strand."""

    sign: int  # +1 or -1


Token = Passage | DoubleLine


def _sign_char(s: int) -> str:
    return "+" if s > 0 else "-"


def token_to_text(t: Token) -> str:
    if isinstance(t, DoubleLine):
        return "D" + _sign_char(t.sign)
    return t.role + str(t.crossing_id) + _sign_char(t.sign)


@dataclass(frozen=True)
class DlDiagram:
    """An oriented knot diagram with double lines, as a cyclic token word.

    The empty word is the trivial knot diagram.  Instances are immutable;
    all operations on them are pure functions.
    """

    tokens: tuple[Token, ...]

    def __post_init__(self) -> None:
        _validate(self.tokens)

    @property
    def crossing_ids(self) -> tuple[int, ...]:
        return tuple(sorted({t.crossing_id for t in self.tokens if isinstance(t, Passage)}))

    @property
    def crossing_count(self) -> int:
        return len(self.crossing_ids)

    @property
    def double_line_count(self) -> int:
        return sum(1 for t in self.tokens if isinstance(t, DoubleLine))

    def passage_index(self, crossing_id: int, role: str) -> int:
        """Position of the given passage token, or raise DiagramError."""
        for i, t in enumerate(self.tokens):
            if isinstance(t, Passage) and t.crossing_id == crossing_id and t.role == role:
                return i
        raise DiagramError(f"no passage {role}{crossing_id} in diagram")

    def __str__(self) -> str:
        return serialize(self)


def _validate(tokens: tuple[Token, ...]) -> None:
    seen: dict[int, list[Passage]] = {}
    for t in tokens:
        if isinstance(t, Passage):
            if t.crossing_id < 1:
                raise DiagramError(f"crossing id must be positive, got {t.crossing_id}")
            if t.role not in (OVER, UNDER):
                raise DiagramError(f"bad role {t.role!r}")
            if t.sign not in (1, -1):
                raise DiagramError(f"bad crossing sign {t.sign}")
            seen.setdefault(t.crossing_id, []).append(t)
        elif isinstance(t, DoubleLine):
            if t.sign not in (1, -1):
                raise DiagramError(f"bad double-line sign {t.sign}")
        else:
            raise DiagramError(f"unknown token {t!r}")
    for cid, ps in seen.items():
        if len(ps) != 2:
            raise DiagramError(f"crossing id {cid} appears {len(ps)} times, expected 2")
        roles = {p.role for p in ps}
        if roles != {OVER, UNDER}:
            raise DiagramError(f"crossing id {cid} must appear once Over and once Under")
        if ps[0].sign != ps[1].sign:
            raise DiagramError(f"crossing id {cid} has mismatched crossing signs")


def parse(text: str) -> DlDiagram:
    """Parse whitespace-separated diagram text into a diagram.

    Grammar: Passage = ("O"|"U") id ("+"|"-"), DoubleLine = "D" ("+"|"-").
    Crossing ids are relabeled to order of first occurrence, so parsing
    round-trips with :func:`serialize` up to rotation and relabeling.
    """
    tokens: list[Token] = []
    for word in text.split():
        m = _PASSAGE_RE.fullmatch(word)
        if m:
            role, cid, sc = m.group(1), int(m.group(2)), m.group(3)
            tokens.append(Passage(cid, role, 1 if sc == "+" else -1))
            continue
        m = _DOUBLE_RE.fullmatch(word)
        if m:
            tokens.append(DoubleLine(1 if m.group(1) == "+" else -1))
            continue
        raise DiagramError(f"malformed token {word!r}")
    return DlDiagram(tuple(_relabel_first_occurrence(tokens)))


def _relabel_first_occurrence(tokens: Iterable[Token]) -> Iterator[Token]:
    mapping: dict[int, int] = {}
    for t in tokens:
        if isinstance(t, Passage):
            new = mapping.setdefault(t.crossing_id, len(mapping) + 1)
            yield Passage(new, t.role, t.sign)
        else:
            yield t


def serialize(d: DlDiagram) -> str:
    """Inverse of :func:`parse`: a textual form of the token word."""
    return " ".join(token_to_text(t) for t in d.tokens)


def _token_key(t: Token) -> tuple:
    # Double lines sort before passages; Under before Over, then smaller id,
    # then '+' before '-'.
    if isinstance(t, DoubleLine):
        return (0, 0 if t.sign > 0 else 1)
    return (1, 0 if t.role == UNDER else 1, t.crossing_id, 0 if t.sign > 0 else 1)


def canonicalize(d: DlDiagram) -> DlDiagram:
    """The minimal representative of the rotation/relabeling orbit of ``d``.

    Two diagrams have equal canonical forms iff they differ only by a
    cyclic rotation of the word and a renaming of crossing ids.
    """
    n = len(d.tokens)
    if n == 0:
        return d
    best: tuple[Token, ...] | None = None
    best_key: tuple | None = None
    for r in range(n):
        rot = d.tokens[r:] + d.tokens[:r]
        cand = tuple(_relabel_first_occurrence(rot))
        key = tuple(_token_key(t) for t in cand)
        if best_key is None or key < best_key:
            best, best_key = cand, key
    assert best is not None
    return DlDiagram(best)


def canonically_equal(a: DlDiagram, b: DlDiagram) -> bool:
    return canonicalize(a).tokens == canonicalize(b).tokens


def degree(d: DlDiagram) -> int:
    """Sum of the signs of all double lines."""
    return sum(t.sign for t in d.tokens if isinstance(t, DoubleLine))


@dataclass(frozen=True, order=True)
class WindingParity:
    """A winding parity value: an integer mod ``modulus`` (0 means plain Z)."""

    value: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 0:
            raise DiagramError("modulus must be non-negative")
        if self.modulus > 0 and not 0 <= self.value < self.modulus:
            raise DiagramError("value out of range for modulus")


def raw_winding_sum(d: DlDiagram, crossing_id: int) -> int:
    """Integer sum of double-line signs strictly between the Under and Over
    passage of ``crossing_id``, following the traversal from the Under side."""
    start = d.passage_index(crossing_id, UNDER)
    n = len(d.tokens)
    total = 0
    i = (start + 1) % n
    while True:
        t = d.tokens[i]
        if isinstance(t, Passage) and t.crossing_id == crossing_id:
            break
        if isinstance(t, DoubleLine):
            total += t.sign
        i = (i + 1) % n
    return total


def winding_parity(d: DlDiagram, crossing_id: int) -> WindingParity:
    """The winding parity of a crossing, valued in Z_{|degree|} (Z if degree 0)."""
    raw = raw_winding_sum(d, crossing_id)
    deg = degree(d)
    if deg == 0:
        return WindingParity(raw, 0)
    m = abs(deg)
    return WindingParity(raw % m, m)


def parity_profile(d: DlDiagram) -> tuple[WindingParity, ...]:
    """Multiset (as a sorted tuple) of winding parities over all crossings."""
    return tuple(sorted(winding_parity(d, cid) for cid in d.crossing_ids))


def invariant_record(d: DlDiagram) -> dict:
    """JSON-ready record of the cheap invariants of a diagram."""
    return {
        "degree": degree(d),
        "parities": [
            {"value": p.value, "modulus": p.modulus} for p in parity_profile(d)
        ],
        "crossings": d.crossing_count,
        "double_lines": d.double_line_count,
    }
