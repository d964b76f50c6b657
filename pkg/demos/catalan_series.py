"""The Catalan equation over signed tropical numbers, tails included.

The generating series of the Catalan numbers satisfies 1 - C + x C^2 = 0.
Viewing the equation as a quadratic in C over the signed tropical idyll
(sign plus rational valuation), it keeps two roots: one of valuation 0
(the series' constant term survives) and one of valuation -1 (the pole a
meromorphic inverse would have).

The valuation -1 root is the interesting one computationally. Its only
division witnesses carry a coefficient whose valuation sits strictly above
the minimum of its defining sum, i.e. the witness lives in the tail of a
sum set, where the dominant terms have already cancelled. A search through
dominant terms alone misses it; the level pool used by divide_once finds it.
"""

from idylls import (
    Polynomial,
    divide_once,
    factor_check,
    multiplicity,
    root_candidates,
    signed_tropical,
)

TR = signed_tropical()


def main() -> int:
    f = Polynomial(TR, [TR.elem(1, 0), TR.elem(-1, 0), TR.elem(1, 1)])
    print(f"quadratic: {f}")

    found = {}
    for a in root_candidates(f):
        if a.is_zero:
            continue
        m, chain = multiplicity(f, a)
        if m:
            assert chain.verify()
            found[TR.format_element(a)] = m
            print(f"root {TR.format_element(a)}: multiplicity {m}")
    assert found == {"1^0": 1, "1^-1": 1}

    deep = TR.elem(1, -1)
    dominant_only = divide_once(f, deep, tails="none")
    full = divide_once(f, deep, tails="auto")
    print(f"\nwitnesses at 1^-1 using dominant terms only: {len(dominant_only)}")
    print(f"witnesses at 1^-1 with tail candidates:       {len(full)}")
    assert dominant_only == [] and full
    for g in full:
        assert factor_check(f, deep, g)
        print(f"  quotient {g}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
