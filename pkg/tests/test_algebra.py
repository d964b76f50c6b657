"""Nullity rules, sum sets, and axioms across the idyll catalog."""

import itertools
from fractions import Fraction

import pytest

from idylls.algebra import (
    PHASE_ZERO,
    FormalSum,
    Idyll,
    ParseError,
    SumSet,
    UnsupportedOperationError,
    check_idyll_axioms,
    f1pm,
    finite_field,
    krasner,
    oag_idyll,
    phase_idyll,
    quotient_hyperfield,
    rational_field,
    sign_idyll,
    sign_of_rational,
    padic_valuation,
)
from idylls.oag import INFINITY, oag

K = krasner()
S = sign_idyll()
P = phase_idyll()
F = f1pm()
Q = rational_field()
F5 = finite_field(5)


# -- Krasner ---------------------------------------------------------------


def test_krasner_null_iff_not_singleton():
    assert K.is_null([])
    assert not K.is_null([1])
    assert K.is_null([1, 1])
    assert K.is_null([1, 1, 1, 1, 1])


def test_krasner_epsilon_is_one():
    assert K.epsilon == 1
    assert K.mul(K.epsilon, K.epsilon) == K.one


# -- sign ------------------------------------------------------------------


def test_sign_null_iff_both_signs_present():
    assert S.is_null([1, -1])
    assert S.is_null([1, 1, -1])
    assert not S.is_null([1, 1])
    assert not S.is_null([-1])
    assert S.is_null([])


def test_sign_sum_set():
    assert set(S.sum_set(1, -1).core) == {0, 1, -1}
    assert set(S.sum_set(1, 1).core) == {1}
    assert set(S.sum_set(1, 0).core) == {1}


def test_sign_of_rational():
    assert sign_of_rational(Fraction(7, 3)) == 1
    assert sign_of_rational(Fraction(-2)) == -1
    assert sign_of_rational(Fraction(0)) == 0


# -- plus-minus-one partial structure ----------------------------------------


def test_f1pm_null_needs_balanced_signs():
    assert F.is_null([1, -1])
    assert F.is_null([1, 1, -1, -1])
    assert not F.is_null([1, 1, -1])


def test_f1pm_is_not_whole():
    assert not F.is_whole
    assert len(F.sum_set(1, 1).core) == 0  # nothing completes 1 + 1


# -- rational and finite fields ----------------------------------------------


def test_field_null_is_literal_vanishing():
    assert Q.is_null([Fraction(1, 2), Fraction(1, 2), Fraction(-1)])
    assert not Q.is_null([Fraction(1), Fraction(1)])
    assert F5.is_null([2, 3])
    assert F5.is_null([1, 4])
    assert not F5.is_null([1, 1])


def test_field_sum_set_is_a_singleton():
    assert set(Q.sum_set(Fraction(2), Fraction(3)).core) == {Fraction(5)}
    assert set(F5.sum_set(2, 4).core) == {1}


def test_padic_valuation():
    assert padic_valuation(Fraction(72), 2) == oag(3)
    assert padic_valuation(Fraction(72), 3) == oag(2)
    assert padic_valuation(Fraction(5, 8), 2) == oag(-3)
    assert padic_valuation(Fraction(0), 2) == INFINITY


# -- quotient hyperfields ----------------------------------------------------


def test_quotient_gf5_squares():
    H = quotient_hyperfield(5, (1, 4))
    one = H.class_of(1)
    two = H.class_of(2)
    assert H.epsilon == one  # -1 = 4 lies in the subgroup
    assert H.is_null([one, one])  # 1 + 4 = 0 with representatives
    assert not H.is_null([one, one, one])  # no triple of reps sums to 0 mod 5
    assert H.is_null([one, two, two])  # 1 + 2 + 2 = 5


def test_quotient_gf7_squares():
    H = quotient_hyperfield(7, (1, 2, 4))
    assert H.format_element(H.epsilon) == "[3]"
    assert H.is_null([H.class_of(1), H.class_of(3)])


def test_quotient_rejects_non_subgroup():
    with pytest.raises(ValueError):
        quotient_hyperfield(5, (1, 2))  # 2*2=4 not in the set


# -- value-group idylls (min-plus) -------------------------------------------


def test_oag_null_iff_min_twice():
    G = oag_idyll(1)
    assert G.is_null([oag(1), oag(1), oag(5)])
    assert not G.is_null([oag(1), oag(2), oag(2)])
    assert G.is_null([INFINITY])  # the zero element alone is a null sum
    assert not G.is_null([oag(0)])


def test_oag_rank2_null_uses_lex_min():
    G = oag_idyll(2)
    assert G.is_null([oag(1, 2), oag(1, 2), oag(1, 3)])
    assert G.is_null([oag(1, 3), oag(1, 3)])
    # lex-min (0,5) appears once, even though (1,0) repeats
    assert not G.is_null([oag(0, 5), oag(1, 0), oag(1, 0)])


def test_oag_sum_set_has_a_tail_on_ties():
    G = oag_idyll(1)
    s = G.sum_set(oag(2), oag(2))
    assert oag(2) in s.core
    assert s.tail_above == oag(2)
    assert oag(3) in s  # tail membership
    assert oag(1) not in s
    t = G.sum_set(oag(1), oag(4))
    assert set(t.core) == {oag(1)} and t.tail_above is None


def test_oag_multiplication_is_addition():
    G = oag_idyll(2)
    assert G.mul(oag(1, 2), oag(3, 4)) == oag(4, 6)
    assert G.inv(oag(1, -2)) == oag(-1, 2)
    assert G.mul(oag(5, 1), INFINITY) == INFINITY


# -- phases: exact convex-position oracle over Q(adjoin sqrt 3) ---------------


class Root3:
    """a + b*sqrt(3) with exact rational a, b."""

    __slots__ = ("a", "b")

    def __init__(self, a, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    def __add__(self, o):
        return Root3(self.a + o.a, self.b + o.b)

    def __sub__(self, o):
        return Root3(self.a - o.a, self.b - o.b)

    def __mul__(self, o):
        return Root3(self.a * o.a + 3 * self.b * o.b, self.a * o.b + self.b * o.a)

    def __neg__(self):
        return Root3(-self.a, -self.b)

    def sign(self):
        if self.a == 0 and self.b == 0:
            return 0
        if self.a >= 0 and self.b >= 0:
            return 1
        if self.a <= 0 and self.b <= 0:
            return -1
        # mixed signs: compare a^2 against 3 b^2
        if self.a > 0:
            return 1 if self.a * self.a > 3 * self.b * self.b else -1
        return 1 if self.a * self.a < 3 * self.b * self.b else -1

    def is_zero(self):
        return self.a == 0 and self.b == 0


HALF = Fraction(1, 2)
# cos and sin at multiples of a twelfth of a turn
_COS = {
    0: Root3(1),
    1: Root3(0, HALF),
    2: Root3(HALF),
    3: Root3(0),
    4: Root3(-HALF),
    5: Root3(0, -HALF),
    6: Root3(-1),
}
for _k in range(7, 12):
    _COS[_k] = _COS[12 - _k]
_SIN = {k: _COS[(k - 3) % 12] for k in range(12)}


def _twelfth_point(k):
    return (_COS[k % 12], _SIN[k % 12])


def _cross(p, q):
    return p[0] * q[1] - p[1] * q[0]


def _dot(p, q):
    return p[0] * q[0] + p[1] * q[1]


def hull_interior_oracle(ks):
    """0 in the relative interior of the hull of the chosen unit vectors."""
    pts = []
    for k in sorted(set(k % 12 for k in ks)):
        pts.append(_twelfth_point(k))
    if not pts:
        return False
    if len(pts) == 1:
        return False
    if all(_cross(p, q).is_zero() for p, q in itertools.combinations(pts, 2)):
        # collinear directions: need both ends of the line
        return any(_dot(p, q).sign() < 0 for p, q in itertools.combinations(pts, 2))
    for p in pts:
        for n in ((-p[1], p[0]), (p[1], -p[0])):
            if all(_dot(n, q).sign() >= 0 for q in pts):
                return False  # a closed half-plane holds every point
    return True


def test_phase_null_matches_hull_oracle_on_twelfth_roots():
    checked = 0
    for size in range(1, 6):
        for ks in itertools.combinations(range(12), size):
            expected = hull_interior_oracle(ks)
            s = FormalSum(P, [Fraction(k, 12) for k in ks])
            assert P.is_null(s) == expected, f"angles {ks}"
            checked += 1
    assert checked == 12 + 66 + 220 + 495 + 792


def test_phase_pinned_examples():
    third = [Fraction(0), Fraction(1, 3), Fraction(2, 3)]
    assert P.is_null(FormalSum(P, third))
    quarter = [Fraction(0), Fraction(1, 4), Fraction(1, 2)]
    assert not P.is_null(FormalSum(P, quarter))
    assert P.is_null(FormalSum(P, [Fraction(0), Fraction(1, 2)]))


def test_phase_zero_terms_are_dropped():
    assert P.is_null(FormalSum(P, [PHASE_ZERO]))
    assert P.is_null(FormalSum(P, [Fraction(0), PHASE_ZERO, Fraction(1, 2)]))
    assert not P.is_null(FormalSum(P, [Fraction(0), PHASE_ZERO]))


def test_phase_multiplication_adds_angles():
    assert P.mul(Fraction(1, 3), Fraction(5, 6)) == Fraction(1, 6)
    assert P.mul(Fraction(1, 4), PHASE_ZERO) == PHASE_ZERO
    assert P.inv(Fraction(1, 3)) == Fraction(2, 3)


# -- formal sums and parsing --------------------------------------------------


def test_formal_sum_rejects_foreign_terms():
    from idylls.algebra import ForeignElementError

    with pytest.raises(ForeignElementError):
        FormalSum(S, [1, 2])


def test_parse_format_round_trip_catalog():
    cases = [
        (K, ["0", "1"]),
        (S, ["0", "1", "-1"]),
        (Q, ["0", "7", "-3/4"]),
        (F5, ["0", "1", "4"]),
    ]
    for B, texts in cases:
        for t in texts:
            x = B.parse_element(t)
            assert B.parse_element(B.format_element(x)) == x


def test_parse_errors_are_uniform():
    for B, bad in [(K, "2"), (S, "5"), (F5, "x"), (Q, "1..2")]:
        with pytest.raises(ParseError):
            B.parse_element(bad)


# -- sum-set container semantics ----------------------------------------------


def test_sum_set_iteration_hits_core_only():
    G = oag_idyll(1)
    s = G.sum_set(oag(0), oag(0))
    assert set(iter(s)) == set(s.core)
    assert oag(99) in s  # but the tail still answers membership


# -- axiom harness -------------------------------------------------------------


CATALOG = [K, S, F, P, Q, F5, quotient_hyperfield(5, (1, 4)), oag_idyll(1), oag_idyll(2)]


@pytest.mark.parametrize("B", CATALOG, ids=lambda b: b.name)
def test_axiom_harness_passes(B):
    assert check_idyll_axioms(B, max_len=4) == []


def test_axiom_harness_flags_a_missing_epsilon():
    class Lopsided(Idyll):
        """1 + 1 is declared non-null and there is no other unit."""

        def __init__(self):
            self.name = "lopsided"
            self.kind = "lopsided"
            self.zero = 0
            self.one = 1
            self.epsilon = 1
            self.elements = (0, 1)
            self.is_whole = False
            self.is_pasture_backed = False

        def contains(self, x):
            return x in (0, 1)

        def is_zero(self, x):
            return x == 0

        def mul(self, a, b):
            return a * b

        def inv(self, a):
            return 1

        def format_element(self, x):
            return str(x)

        def sort_key(self, x):
            return x

        def null_terms(self, terms):
            return len(terms) == 0

    violations = check_idyll_axioms(Lopsided())
    assert any("no epsilon" in v for v in violations)
