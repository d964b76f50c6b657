"""Polynomial containers, evaluation sums, and the division predicate."""

from fractions import Fraction

import pytest

from idylls.algebra import (
    ForeignElementError,
    FormalSum,
    StructuralError,
    krasner,
    rational_field,
    sign_idyll,
)
from idylls.extension import signed_tropical, tropical
from idylls.poly import (
    Polynomial,
    eval_sum,
    factor_check,
    monomial_substitute,
)

K = krasner()
S = sign_idyll()
Q = rational_field()
T = tropical()
TR = signed_tropical()


def test_trailing_zeros_are_stripped():
    f = Polynomial(S, [1, -1, 0, 0])
    assert f.degree == 1
    assert f.coeffs == (1, -1)


def test_zero_polynomial():
    z = Polynomial(S, [])
    assert z.is_zero and z.degree == -1
    assert Polynomial(S, [0, 0]).is_zero


def test_coeff_out_of_range_is_zero():
    f = Polynomial(S, [1, -1])
    assert f.coeff(5) == 0
    assert f.coeff(0) == 1


def test_support_skips_zero_coefficients():
    f = Polynomial(S, [1, 0, -1, 0, 1])
    assert f.support == (0, 2, 4)


def test_foreign_coefficients_are_rejected():
    with pytest.raises(ForeignElementError):
        Polynomial(S, [1, 2])


def test_equality_and_hash():
    a = Polynomial(S, [1, -1])
    b = Polynomial(S, [1, -1, 0])
    assert a == b and hash(a) == hash(b)
    assert a != Polynomial(S, [1, 1])


def test_str_uses_idyll_formatting():
    f = Polynomial(S, [1, -1, 1])
    assert str(f) == "1 + -1*x + 1*x^2"
    g = Polynomial(T, [T.elem(1, 2), T.zero, T.elem(1, 0)])
    assert str(g) == "2 + 0*x^2"  # zero coefficients stay silent


def test_scale_and_map():
    f = Polynomial(S, [1, -1, 1])
    assert f.scale(-1).coeffs == (-1, 1, -1)
    doubled = Polynomial(Q, [Fraction(1), Fraction(2)]).scale(Fraction(2))
    assert doubled.coeffs == (Fraction(2), Fraction(4))


def test_shift_down():
    f = Polynomial(S, [0, 0, 1, -1])
    assert f.shift_down(2).coeffs == (1, -1)
    with pytest.raises(StructuralError):
        Polynomial(S, [1, 1]).shift_down(1)


def test_eval_sum_collects_monomial_values():
    f = Polynomial(Q, [Fraction(-6), Fraction(1), Fraction(1)])
    s = eval_sum(f, Fraction(2))
    assert isinstance(s, FormalSum)
    assert Q.is_null(s)  # -6 + 2 + 4 = 0
    assert not Q.is_null(eval_sum(f, Fraction(1)))


def test_monomial_substitute_scales_by_powers():
    f = Polynomial(TR, [TR.elem(1, 0), TR.elem(-1, 0), TR.elem(1, 1)])
    a = TR.elem(1, -1)
    h = monomial_substitute(f, a)
    assert h.coeffs == (TR.elem(1, 0), TR.elem(-1, -1), TR.elem(1, -1))
    with pytest.raises(StructuralError):
        monomial_substitute(f, TR.zero)


# -- the division predicate -----------------------------------------------------


def test_factor_check_field_sanity():
    # (x - 2)(x + 3) = x^2 + x - 6 over the rationals
    f = Polynomial(Q, [Fraction(-6), Fraction(1), Fraction(1)])
    g = Polynomial(Q, [Fraction(3), Fraction(1)])
    assert factor_check(f, Fraction(2), g)
    assert not factor_check(f, Fraction(1), g)


def test_factor_check_padding_covers_degree_gap():
    # deg g + 1 can exceed deg f; the high constraints must still hold
    f = Polynomial(S, [1, 1])
    g_bad = Polynomial(S, [1, 1, 1])
    assert not factor_check(f, 1, g_bad)


def test_factor_check_support_gap_run():
    # x^m + ... + x^n against the all-ones quotient, with unit root
    for m, n in [(0, 3), (1, 4), (1, 3)]:
        coeffs = [0] * m + [1] * (n - m + 1)
        f = Polynomial(K, coeffs)
        g = Polynomial(K, [0] * m + [1] * (n - m))
        assert factor_check(f, 1, g), (m, n)


def test_factor_check_alternating_sign_runs():
    f = Polynomial(S, [1, -1, 1, -1, -1, -1, 1])
    g = Polynomial(S, [1, -1, 1, -1, -1, 1])
    assert factor_check(f, -1, g)  # root -1, quotient flips parity


def test_factor_check_sign_negative_root_second_shape():
    f = Polynomial(S, [1, 1, 1, -1, 1, -1])
    g = Polynomial(S, [-1, -1, -1, 1, -1])
    assert factor_check(f, 1, g)


def test_factor_check_rejects_wrong_quotient():
    f = Polynomial(S, [1, -1, 1, -1, -1, -1, 1])
    g = Polynomial(S, [1, -1, 1, -1, -1, -1])
    assert not factor_check(f, -1, g)


def test_factor_check_extension_example():
    # 0 + 1x + 0x^2 + 0x^3 over min-plus has a root of level 1
    f = Polynomial(T, [T.elem(1, 2), T.elem(1, 1), T.elem(1, 0), T.elem(1, 0)])
    g = Polynomial(T, [T.elem(1, 1), T.elem(1, 0), T.elem(1, 0)])
    assert factor_check(f, T.elem(1, 1), g)


def test_factor_check_requires_matching_idylls():
    f = Polynomial(S, [1, 1])
    g = Polynomial(K, [1])
    with pytest.raises(StructuralError):
        factor_check(f, 1, g)
