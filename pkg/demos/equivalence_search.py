"""Bounded breadth-first search over the move graph.

The search explores canonical forms outward from a start diagram until
it reaches the target or exhausts the move/length bounds.  Degree and
essential count are compared first, so provably distinct diagrams are
rejected without exploring.
"""

import dlknot as dl


def main():
    start = dl.one_crossing(1, -1, 1)
    target = dl.one_crossing(-2, 2, -1)
    print("start: ", dl.serialize(start))
    print("target:", dl.serialize(target))
    result = dl.bfs_search(start, target, max_moves=12, max_len=16)
    print("found:", result.found, f"(explored {result.explored} diagrams)")
    for step in result.trace.steps:
        print("  ", step.to_line())
    print("replay matches target:",
          dl.canonically_equal(dl.replay(result.trace), target))
    print()

    # An invariant mismatch short-circuits instantly.
    other = dl.one_crossing(1, 2, 1)
    miss = dl.bfs_search(start, other)
    print("degree 0 vs 3:", miss.found, f"(explored {miss.explored})")


if __name__ == "__main__":
    main()
