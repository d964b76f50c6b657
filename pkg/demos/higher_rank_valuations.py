"""Rank-two valuations resolved one coordinate at a time.

With values in Q^2 ordered lexicographically, a polynomial's initial form
can be computed in rounds: minimize the first coordinate of
v(c_i) + i * gamma, keep the survivors, drop that coordinate, repeat. Each
round lands in a tropical extension of one rank less, and the last round
lands in the two-element Krasner idyll where only the support matters.

The quartic below, probed at the point of value (1, 1), shrinks from five
terms to four to three, and the final three-term form has multiplicity 2.
"""

from idylls import (
    Polynomial,
    initial_form_rounds,
    krasner,
    mult_closed_form,
    multiplicity,
    tropical,
)

T2 = tropical(2)
T = tropical()
K = krasner()


def main() -> int:
    levels = [(3, 3), (2, 2), (1, 1), (0, 1), (0, 0)]
    h = Polynomial(T2, [T2.elem(1, lv) for lv in levels])
    print(f"rank-2 quartic: {h}")

    rounds = initial_form_rounds(h, (1, 1))
    for k, r in enumerate(rounds, start=1):
        print(f"round {k}: {r}    over {r.idyll.name}")
    assert rounds[0] == Polynomial(T, [T.elem(1, v) for v in (3, 2, 1, 1)])
    assert rounds[-1] == Polynomial(K, [1, 1, 1])

    a = T2.elem(1, (1, 1))
    m, chain = multiplicity(h, a)
    assert m == 2 and chain.verify()
    assert mult_closed_form(h, a) == 2
    print(f"multiplicity at {T2.format_element(a)}: {m}")
    print(f"chain: {chain}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
