"""A walking tour of the basic invariants.

Diagrams are cyclic words of passage tokens (U/O + crossing id + sign)
and signed double-line tokens.  The degree counts the signed double
lines; each crossing additionally carries a winding parity read off the
arc from its under-passage to its over-passage.
"""

import dlknot as dl


def show(label, text):
    d = dl.parse(text)
    print(f"{label}: {text}")
    print(f"  degree          = {dl.degree(d)}")
    for cid in sorted(d.crossing_ids):
        p = dl.winding_parity(d, cid)
        mod = f" (mod {p.modulus})" if p.modulus else ""
        print(f"  parity of {cid}     = {p.value}{mod}")
    print(f"  essential count = {dl.essential_count(d)}")
    print()


def main():
    show("bare unknot kink", "U1+ O1+")
    show("degree-3 one-crossing knot", dl.serialize(dl.one_crossing(2, 1, 1)))
    show("degree-0, parity -1", "U1+ D- O1+ D+")
    show("two crossings sharing lines", "U1+ D+ O1+ D- U2+ O2+")

    # Canonical forms identify rotations and relabelings of the same word.
    a, b = dl.parse("O1+ D+ U1+"), dl.parse("U3+ O3+ D+")
    print("rotation/relabel identified:", dl.canonically_equal(a, b))


if __name__ == "__main__":
    main()
