"""Root multiplicities: search engine, closed forms, and factorization lifting.

Multiplicity of a root is the length of a longest chain of one-step
divisions f -> g1 -> g2 -> ... where each step witnesses a factorization
through `factor_check`. The search engine enumerates all quotients degree by
degree; the closed forms shortcut the answer for idylls where the chain
structure is understood. Over a tropical extension the two are tied together
by initial forms, and `lift_factorization` upgrades any base-level witness
to an extension-level witness with the prescribed initial form.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    FiniteFieldIdyll,
    ForeignElementError,
    FormalSum,
    KrasnerIdyll,
    OagIdyll,
    RationalFieldIdyll,
    SignIdyll,
    StructuralError,
    SumSet,
    UnsupportedOperationError,
)
from .extension import EXT_ZERO, ExtElement, ExtensionDescriptor
from .newton import _as_extension_poly, initial_form_at
from .oag import (
    INFINITY,
    OagValue,
    oag_add,
    oag_cmp,
    oag_div,
    oag_scale,
    oag_sub,
    oag_zero,
)
from .poly import Polynomial, eval_sum, factor_check, monomial_substitute

DEFAULT_SEARCH_CAP = 100_000


class SearchCapExceeded(RuntimeError):
    """The division search visited more states than the configured cap."""


def _effective_cap(cap=None) -> int:
    if cap is not None:
        return cap
    env = os.environ.get("IDYLL_SEARCH_CAP")
    if env:
        return int(env)
    return DEFAULT_SEARCH_CAP


class _Budget:
    __slots__ = ("remaining", "cap")

    def __init__(self, cap: int):
        self.cap = cap
        self.remaining = cap

    def spend(self, amount: int = 1):
        self.remaining -= amount
        if self.remaining < 0:
            raise SearchCapExceeded(
                f"division search exceeded {self.cap} states; "
                "raise the cap or set IDYLL_SEARCH_CAP"
            )


@dataclass(frozen=True)
class FactorizationChain:
    """A witnessed chain f -> quotients[0] -> quotients[1] -> ..."""

    poly: Polynomial
    root: object
    quotients: tuple

    @property
    def length(self) -> int:
        return len(self.quotients)

    def verify(self) -> bool:
        cur = self.poly
        for g in self.quotients:
            if not factor_check(cur, self.root, g):
                return False
            cur = g
        return True

    def __repr__(self):
        steps = " -> ".join(str(g) for g in (self.poly,) + self.quotients)
        return f"FactorizationChain[{self.length}]({steps})"


def is_root(f: Polynomial, a) -> bool:
    """Does f factor as (x - a) * g for some g?

    Over whole idylls this is equivalent to eval_sum(f, a) being null, which
    is what gets tested; otherwise a witness search runs.
    """
    B = f.idyll
    if not B.contains(a):
        raise ForeignElementError(f"{a!r} is not an element of {B.name}")
    if f.is_zero:
        return True
    if B.is_whole:
        return B.is_null(eval_sum(f, a))
    return bool(divide_once(f, a))


def divide_once(f: Polynomial, a, tails: str = "auto", cap: int = None) -> list:
    """All quotients g with factor_check(f, a, g).

    Per-step choices range over the cores of the sum sets plus, where a sum
    set has an infinite tail, a finite pool of tail candidates. tails="auto"
    (the default) draws that pool from the shifted coefficient levels and
    their midpoints, which suffices for every witness: a tail coefficient
    that matters must eventually tie a coefficient level from below, and a
    self-cancelling run only needs some level strictly between two coefficient
    levels. tails="grid" uses the larger `quotient_level_grid` pool instead;
    tails="none" disables tail branching (sound but incomplete).
    """
    B = f.idyll
    if not B.contains(a):
        raise ForeignElementError(f"{a!r} is not an element of {B.name}")
    if f.is_zero:
        return [f]
    n = f.degree
    if n == 0:
        return []
    if tails not in ("auto", "grid", "none"):
        raise ValueError(f"unknown tails mode {tails!r}")
    budget = _Budget(_effective_cap(cap))
    pools = None

    def tail_candidates(position):
        nonlocal pools
        if tails == "none":
            return []
        if pools is None:
            if tails == "grid":
                flat = _grid_pool(f, a)
                pools = [flat] * n
            else:
                pools = _auto_tail_pools(f, a)
        return pools[position]

    def choices(s: SumSet, position):
        out = list(s.core)
        if s.tail_above is not None:
            for x in tail_candidates(position):
                if x not in s.core and oag_cmp(s.tail_val(x), s.tail_above) > 0:
                    out.append(x)
        return out

    results = []

    def descend(i, d_i, suffix):
        budget.spend()
        if i == 0:
            if B.is_null(FormalSum(B, [f.coeff(0), B.mul(a, d_i)])):
                results.append(suffix)
            return
        for d_prev in choices(B.sum_set(f.coeff(i), B.mul(a, d_i)), i - 1):
            descend(i - 1, d_prev, (d_prev,) + suffix)

    for d_top in choices(B.sum_set(f.coeff(n), B.zero), n - 1):
        descend(n - 1, d_top, (d_top,))

    polys = {Polynomial(B, coeffs) for coeffs in results}
    return sorted(polys, key=lambda g: tuple(B.sort_key(c) for c in g.coeffs))


def _with_midpoints(levels: list) -> list:
    out = list(levels)
    for x, y in zip(levels, levels[1:]):
        out.append(oag_div(oag_add(x, y), 2))
    return sorted(set(out), key=lambda g: g.coords)


def _auto_tail_pools(f: Polynomial, a) -> list:
    """Per-position tail candidates: shifted support levels and midpoints."""
    B = f.idyll
    n = f.degree
    if isinstance(B, ExtensionDescriptor):
        if B.base.elements is None:
            raise UnsupportedOperationError(
                "tail branching needs a finite unit group; "
                f"{B.base.name} has infinitely many units"
            )
        units = [u for u in B.base.elements if not B.base.is_zero(u)]
        gamma = a.level
        shifted = sorted(
            {oag_add(f.coeffs[i].level, oag_scale(gamma, i)) for i in f.support},
            key=lambda g: g.coords,
        )
        levels = _with_midpoints(shifted)
        pools = []
        for j in range(n):
            shift = oag_scale(gamma, j + 1)
            pools.append(
                [ExtElement(u, oag_sub(t, shift)) for t in levels for u in units]
            )
        return pools
    if isinstance(B, OagIdyll):
        shifted = sorted(
            {oag_add(f.coeffs[i], oag_scale(a, i)) for i in f.support},
            key=lambda g: g.coords,
        )
        levels = _with_midpoints(shifted)
        return [
            [oag_sub(t, oag_scale(a, j + 1)) for t in levels] for j in range(n)
        ]
    # finite idylls scan their whole carrier, so sum sets never have tails
    return [[] for _ in range(n)]


def _grid_pool(f: Polynomial, a) -> list:
    B = f.idyll
    if not isinstance(B, ExtensionDescriptor):
        return []
    if B.base.elements is None:
        raise UnsupportedOperationError(
            "grid tails need a finite base to enumerate units"
        )
    if a.is_zero:
        return []
    units = [u for u in B.base.elements if not B.base.is_zero(u)]
    return [
        ExtElement(u, g) for g in quotient_level_grid(f, a) for u in units
    ]


def quotient_level_grid(f: Polynomial, a: ExtElement) -> list:
    """Finite level set guaranteed to contain all quotient coefficient levels.

    Quotient levels are reachable from the shifted support levels
    w_i = v(c_i) + i*v(a) by adding a nonnegative difference of two of them
    and subtracting (j+1)*v(a) for the coefficient position j.
    """
    E = f.idyll
    g1 = a.level
    shifted = [
        oag_add(f.coeffs[i].level, oag_scale(g1, i)) for i in f.support
    ]
    diffs = {oag_zero(E.rank)}
    for w1 in shifted:
        for w2 in shifted:
            d = oag_sub(w2, w1)
            if oag_cmp(d, oag_zero(E.rank)) >= 0:
                diffs.add(d)
    grid = set()
    for w in shifted:
        for d in diffs:
            for j in range(max(f.degree, 1)):
                grid.add(oag_sub(oag_add(w, d), oag_scale(g1, j + 1)))
    return sorted(grid, key=lambda g: g.coords)


def multiplicity(f: Polynomial, a, cap: int = None) -> tuple:
    """Longest division chain at a, by exhaustive search: (count, chain)."""
    B = f.idyll
    if not B.contains(a):
        raise ForeignElementError(f"{a!r} is not an element of {B.name}")
    if f.is_zero:
        raise StructuralError("the zero polynomial has no multiplicity")
    if B.is_zero(a):
        k = f.support[0]
        quotients = tuple(f.shift_down(j) for j in range(1, k + 1))
        return k, FactorizationChain(f, a, quotients)
    budget_cap = _effective_cap(cap)
    memo = {}

    def longest(poly):
        key = poly.coeffs
        if key in memo:
            return memo[key]
        memo[key] = (0, ())
        best = (0, ())
        for g in divide_once(poly, a, cap=budget_cap):
            m, suffix = longest(g)
            if 1 + m > best[0]:
                best = (1 + m, (g,) + suffix)
        memo[key] = best
        return best

    m, quotients = longest(f)
    return m, FactorizationChain(f, a, quotients)


# ---------------------------------------------------------------------------
# closed forms


def _sign_changes(f: Polynomial) -> int:
    seq = [f.coeffs[i] for i in f.support]
    return sum(1 for x, y in zip(seq, seq[1:]) if x != y)


def _field_add(B, x, y):
    if isinstance(B, FiniteFieldIdyll):
        return (x + y) % B.p
    return x + y


def _field_division_count(f: Polynomial, a) -> int:
    B = f.idyll
    count = 0
    cur = list(f.coeffs)
    while cur:
        quot = [B.zero] * (len(cur) - 1)
        acc = B.zero
        for i in range(len(cur) - 1, 0, -1):
            acc = _field_add(B, cur[i], B.mul(a, acc))
            quot[i - 1] = acc
        rem = _field_add(B, cur[0], B.mul(a, acc))
        if not B.is_zero(rem):
            break
        count += 1
        cur = quot
    return count


def mult_closed_form(f: Polynomial, a) -> int:
    """Multiplicity via the structure theory, without search.

    Dispatch: order of vanishing at 0; support width for trivial units; sign
    changes for signed coefficients; exact division for fields; lex argmin
    width for pure value groups; initial form recursion for split extensions.
    """
    B = f.idyll
    if not B.contains(a):
        raise ForeignElementError(f"{a!r} is not an element of {B.name}")
    if f.is_zero:
        raise StructuralError("the zero polynomial has no multiplicity")
    if B.is_zero(a):
        return f.support[0]
    if isinstance(B, KrasnerIdyll):
        return f.support[-1] - f.support[0]
    if isinstance(B, SignIdyll):
        return _sign_changes(f if a == 1 else monomial_substitute(f, -1))
    if isinstance(B, (RationalFieldIdyll, FiniteFieldIdyll)):
        return _field_division_count(f, a)
    if isinstance(B, OagIdyll):
        idx = _oag_argmin(f, a)
        return idx[-1] - idx[0]
    if isinstance(B, ExtensionDescriptor):
        if not B.is_split:
            raise UnsupportedOperationError(
                "closed form needs a split extension"
            )
        P, _ = initial_form_at(f, a)
        return mult_closed_form(P, a.unit)
    raise UnsupportedOperationError(f"no closed form for {B.name}")


def _oag_argmin(f: Polynomial, a: OagValue) -> list:
    best = None
    idx = []
    for i in f.support:
        val = oag_add(f.coeffs[i], oag_scale(a, i))
        c = -1 if best is None else oag_cmp(val, best)
        if c < 0:
            best = val
            idx = [i]
        elif c == 0:
            idx.append(i)
    return idx


# ---------------------------------------------------------------------------
# lifting


def lift_factorization(f: Polynomial, a: ExtElement, g: Polynomial) -> Polynomial:
    """Lift a base-level division witness for the initial form of f at a.

    Given factor_check(P, u, g) over the base, where (P, g0) is the initial
    form of f at a = (u, g1), produce gt over the extension with
    factor_check(f, a, gt) and initial form exactly (g, g0 - g1) at a. Works
    for split extensions over whole bases.

    The construction normalizes f to F = f(a x) / (1, g0), whose minimal
    levels sit at level 0 with units matching P twisted by powers of u. The
    quotient of F at the point (1, 0) is then assembled in three zones:
    prescribed level-0 units from g across the span of P, a left run solved
    upward from the constant term, interior gaps and the right run solved
    downward from the top. All synthesized entries sit at strictly positive
    levels, so they never disturb the minimal layer.
    """
    E = f.idyll
    if not isinstance(E, ExtensionDescriptor):
        raise StructuralError("lifting needs an extension idyll")
    if not E.is_split:
        raise UnsupportedOperationError("lifting needs a split extension")
    if not E.base.is_whole:
        raise UnsupportedOperationError("lifting needs a whole base")
    if a.is_zero:
        raise StructuralError("lifting needs a nonzero point")
    if f.is_zero or f.degree < 1:
        raise StructuralError("lifting needs a polynomial of positive degree")
    if g.idyll != E.base:
        raise StructuralError("the witness must live over the base idyll")
    base = E.base
    u = a.unit
    P, g0 = initial_form_at(f, a)
    if not factor_check(P, u, g):
        raise StructuralError("the witness does not divide the initial form")

    n = f.degree
    zero_level = oag_zero(E.rank)
    h = monomial_substitute(f, a)
    r = ExtElement(base.one, g0)
    r_inv = E.inv(r)
    F = h.scale(r_inv)
    level0 = [i for i in F.support if F.coeffs[i].level == zero_level]
    i0, i1 = level0[0], level0[-1]

    # prescribed middle: normalized units of g at level 0
    d = [None] * n
    for i in range(i0, i1):
        gi = g.coeff(i)
        if not base.is_zero(gi):
            d[i] = ExtElement(base.mul(base.power(u, i + 1), gi), zero_level)

    def pick(s: SumSet) -> ExtElement:
        return min(s.core, key=E.sort_key)

    # left run, solved upward; each choice keeps factor_check at its index
    prev = EXT_ZERO
    for i in range(0, i0):
        prev = pick(E.third_summands(F.coeff(i), E.mul(E.epsilon, prev)))
        d[i] = prev

    # interior gaps, solved downward from a zero seed
    i = i0
    while i < i1:
        if d[i] is not None:
            i += 1
            continue
        q = i
        while q + 1 < i1 and d[q + 1] is None:
            q += 1
        d[q] = EXT_ZERO
        for j in range(q, i, -1):
            d[j - 1] = pick(E.sum_set(F.coeff(j), d[j]))
        i = q + 1

    # right run, solved downward from the leading coefficient
    if i1 <= n - 1:
        d[n - 1] = pick(E.sum_set(F.coeff(n), EXT_ZERO))
        for j in range(n - 1, i1, -1):
            d[j - 1] = pick(E.sum_set(F.coeff(j), d[j]))

    # undo the normalization: gt_j = a^(-j-1) * r * d_j
    coeffs = []
    for j in range(n):
        shift = E.mul(E.power(a, -(j + 1)), r)
        coeffs.append(E.mul(shift, d[j]))
    gt = Polynomial(E, coeffs)

    if not factor_check(f, a, gt):
        raise StructuralError("lift failed its own factorization check")
    Q, q0 = initial_form_at(gt, a)
    if Q != g or q0 != oag_sub(g0, a.level):
        raise StructuralError("lift failed to match the prescribed initial form")
    return gt


# ---------------------------------------------------------------------------
# root candidates and the degree bound


def _divisors(m: int) -> list:
    m = abs(m)
    out = []
    for d in range(1, math.isqrt(m) + 1):
        if m % d == 0:
            out.append(d)
            out.append(m // d)
    return sorted(set(out))


def _rational_candidates(f: Polynomial) -> list:
    k = f.support[0]
    coeffs = [f.coeffs[i] for i in range(k, f.degree + 1)]
    scale = math.lcm(*(c.denominator for c in coeffs if c != 0))
    ints = [int(c * scale) for c in coeffs]
    lead = ints[-1]
    const = ints[0]
    cands = set()
    for p in _divisors(const):
        for q in _divisors(lead):
            cands.add(Fraction(p, q))
            cands.add(Fraction(-p, q))
    if k > 0:
        cands.add(Fraction(0))
    return sorted(cands)


def _extension_candidate_levels(f: Polynomial) -> list:
    E = f.idyll
    support = f.support
    vals = {i: f.coeffs[i].level for i in support}
    levels = set()
    for ai, i in enumerate(support):
        for j in support[ai + 1 :]:
            gamma = oag_div(oag_sub(vals[i], vals[j]), j - i)
            best = None
            hits = 0
            for k in support:
                val = oag_add(vals[k], oag_scale(gamma, k))
                c = -1 if best is None else oag_cmp(val, best)
                if c < 0:
                    best = val
                    hits = 1
                elif c == 0:
                    hits += 1
            if hits >= 2:
                levels.add(gamma)
    return sorted(levels, key=lambda g: g.coords)


def root_candidates(f: Polynomial) -> list:
    """A finite superset of the roots of f, ready for multiplicity testing.

    Finite idylls enumerate their carrier. Extensions take every level at
    which the minimum of v(c_i) + i*level is attained twice, paired with
    every base unit. The rational field uses the classical integer root
    sieve on cleared denominators.
    """
    B = f.idyll
    if f.is_zero:
        raise StructuralError("every element is a root of the zero polynomial")
    if isinstance(B, OagIdyll):
        f = _as_extension_poly(f)
        levels = _extension_candidate_levels(f)
        out = [g for g in levels]
        if 0 not in f.support:
            out.append(INFINITY)
        return out
    if isinstance(B, ExtensionDescriptor):
        if B.base.elements is None:
            raise UnsupportedOperationError(
                f"cannot enumerate units of {B.base.name}"
            )
        units = [u for u in B.base.elements if not B.base.is_zero(u)]
        cands = [
            ExtElement(u, g)
            for g in _extension_candidate_levels(f)
            for u in units
        ]
        if 0 not in f.support:
            cands.append(EXT_ZERO)
        return cands
    if isinstance(B, RationalFieldIdyll):
        return _rational_candidates(f)
    if B.elements is not None:
        return list(B.elements)
    raise UnsupportedOperationError(f"cannot enumerate candidates over {B.name}")


def degree_bound_check(f: Polynomial, cap: int = None) -> tuple:
    """Sum of search multiplicities over all candidates vs the degree."""
    if f.is_zero:
        raise StructuralError("the zero polynomial has no degree bound")
    total = 0
    for a in root_candidates(f):
        m, _ = multiplicity(f, a, cap=cap)
        total += m
    return total, f.degree, total <= f.degree
