"""The one-crossing knot catalog.

A one-crossing diagram is written as a pair of integers (m, n) with a
crossing sign: the arc from the under-passage to the over-passage carries
a block of |m| double lines of sign sgn(m), the complementary arc a block
of |n| lines of sign sgn(n).  Its degree is m + n and the winding parity
of the single crossing is m.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import (
    OVER,
    UNDER,
    DlDiagram,
    DoubleLine,
    Passage,
    degree,
    parity_profile,
)
from .projection import essential_count


@dataclass(frozen=True)
class OneCrossing:
    """Parameters of a one-crossing diagram: block sums m, n and crossing sign."""

    m: int
    n: int
    eps: int

    def realize(self) -> DlDiagram:
        return one_crossing(self.m, self.n, self.eps)


def _block(m: int) -> list[DoubleLine]:
    sign = 1 if m > 0 else -1
    return [DoubleLine(sign)] * abs(m)


def one_crossing(m: int, n: int, eps: int = 1) -> DlDiagram:
    """The diagram U, |m| signed lines, O, |n| signed lines, crossing sign eps."""
    tokens = [Passage(1, UNDER, eps)] + _block(m) + [Passage(1, OVER, eps)] + _block(n)
    return DlDiagram(tuple(tokens))


def partner(m: int, n: int, eps: int) -> OneCrossing:
    """The equivalent one-crossing diagram obtained by a crossing change:
    (m, n) with sign eps becomes (n-1, m+1) with sign -eps."""
    return OneCrossing(n - 1, m + 1, -eps)


def essential_count_closed_form(m: int, n: int) -> int:
    """Closed-form essential double-line count of the (m, n) diagram.

    |m| + |n| in general; two fewer when m <= -1 and n > 0, where trading
    one minus-line on the under arc against one plus-line on the other arc
    leaves the crossing at parity -1.
    """
    if m <= -1 and n > 0:
        return abs(m) + abs(n) - 2
    return abs(m) + abs(n)


def invariant_key(m: int, n: int, eps: int) -> tuple:
    """A comparable record of the computable invariants of (m, n)_eps,
    symmetrized over the crossing-change partner."""
    def record(c: OneCrossing) -> tuple:
        d = c.realize()
        return (degree(d), parity_profile(d), essential_count(d))

    own = record(OneCrossing(m, n, eps))
    other = record(partner(m, n, eps))
    return tuple(sorted([own, other]))


def degree_k_family(k: int) -> list[OneCrossing]:
    """Representatives of the pairwise-distinct nontrivial one-crossing
    knots of degree k >= 3 among (m, k-m) for m = 0..k-1.

    Diagrams whose symmetrized invariant records agree are conservatively
    merged into one class.
    """
    if k < 3:
        raise ValueError("degree_k_family needs k >= 3")
    seen: dict[tuple, OneCrossing] = {}
    for m in range(k):
        cand = OneCrossing(m, k - m, 1)
        key = invariant_key(cand.m, cand.n, cand.eps)
        if key not in seen:
            seen[key] = cand
    # Degree k != 0 already rules out the trivial knot.
    return list(seen.values())


def stretch_family(m: int, k: int, s_max: int) -> list[tuple[OneCrossing, int]]:
    """The family (m+sk, k-sk-m) for s = 0..s_max with essential counts.

    For m not divisible by k the counts strictly increase with s >= 1, so
    the family members are pairwise inequivalent knots of degree k.
    """
    if k < 3:
        raise ValueError("stretch_family needs k >= 3")
    if m % k == 0:
        raise ValueError("stretch_family needs m not divisible by k")
    if s_max < 1:
        raise ValueError("stretch_family needs s_max >= 1")
    out = []
    for s in range(s_max + 1):
        c = OneCrossing(m + s * k, k - s * k - m, 1)
        out.append((c, essential_count_closed_form(c.m, c.n)))
    return out


def family_rows(k: int) -> list[dict]:
    """JSON/TSV-ready rows for the degree-k family table."""
    rows = []
    for c in degree_k_family(k):
        d = c.realize()
        rows.append(
            {
                "m": c.m,
                "n": c.n,
                "eps": c.eps,
                "degree": degree(d),
                "parities": [
                    {"value": p.value, "modulus": p.modulus} for p in parity_profile(d)
                ],
                "essential_count": essential_count(d),
            }
        )
    return rows
