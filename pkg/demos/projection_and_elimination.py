"""Normalizing parities and removing double lines with a replayable trace.

For degree-0 diagrams the parity projection rewrites every crossing to
parity 0 by inserting compensating line pairs (changing crossings where
the parity is negative).  Once all parities lie in {0, -1}, every double
line can be eliminated by crossing changes, crossing slides, and
adjacent-pair cancellations; the eliminator emits the full move list so
the claim can be replayed and checked independently.
"""

import dlknot as dl


def main():
    d = dl.parse("U1+ D- O1+ D+ U2+ O2+")
    print("input:          ", dl.serialize(d))
    print("parities:       ", [p.value for p in dl.parity_profile(d)])

    p = dl.parity_projection(d)
    print("projected:      ", dl.serialize(p))
    print("parities now:   ", [w.value for w in dl.parity_profile(p)])
    print("idempotent:     ", dl.canonically_equal(dl.parity_projection(p), p))
    print()

    cert = dl.eliminate_double_lines(d)
    print("eliminated:     ", dl.serialize(cert.result))
    print("moves used:")
    for step in cert.trace.steps:
        print("   ", step.to_line())
    replayed = dl.replay(cert.trace)
    print("replay matches: ", dl.canonically_equal(replayed, cert.result))
    print()

    # Deleting lines outright is a different (non-move) operation:
    print("stripped:       ", dl.serialize(dl.strip_double_lines(d)))


if __name__ == "__main__":
    main()
