"""Smoke tests for the python module against the build-tree extension."""

import sys

import l6n1


def expect(cond, msg):
    if not cond:
        print("FAIL:", msg)
        sys.exit(1)


def main():
    p1 = l6n1.p1()
    info = l6n1.check(p1)
    expect(info["vertices"] == 6, "p1 has six crossings")
    expect(info["pairwise_crossing"], "p1 is pairwise crossing")
    expect(info["type_counts"] == (2, 2, 2, 0), "p1 vertex types")

    reduced = l6n1.reduce(p1)
    expect(reduced["steps"] == 0, "p1 is already irreducible")
    expect(reduced["irreducible_class"] == "Krupp", "p1 classifies as Krupp")

    rnd = l6n1.random_projection(11, seed=4)
    expect(l6n1.check(rnd)["vertices"] == 11, "random projection size")
    reduced = l6n1.reduce(rnd)
    expect(reduced["irreducible_class"] in ("Krupp", "NonKrupp"), "random reduces")

    diagram = l6n1.resolve(rnd)
    verdict = l6n1.verify(diagram)
    expect(verdict["is_l6n1"], "resolved diagram verifies")
    expect(verdict["abs_linking_profile"] == [1, 1, 1], "linking profile")

    inv = l6n1.invariants(l6n1.reference_diagram())
    expect(abs(inv["writhe"]) == 6, "reference writhe")

    classes = l6n1.enumerate(6, pairwise_crossing=True)
    expect(len(classes) == 2, "two six-crossing classes")

    try:
        l6n1.resolve(l6n1.random_projection(5, seed=1))
        expect(False, "five crossings must be rejected")
    except l6n1.L6n1Error:
        pass

    print("python smoke tests passed")


if __name__ == "__main__":
    main()
