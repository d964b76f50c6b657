"""Tropical extensions: units from a base idyll graded by a value group.

An extension element is a pair (unit, level): a nonzero base element tagged
with a finite value-group level, or the dedicated zero. A formal sum over the
extension is null exactly when the sub-sum of its minimal-level terms is null
in the base, so every additive verdict is decided at the bottom layer and
higher-level terms are inert junk.

Split extensions multiply levelwise; an optional 2-cocycle twists the unit of
each product, which realizes arbitrary abelian extensions of the value group
by the base units. The layering construction builds the same hypersum out of
four valuation cases and is kept as an independent implementation so the
axiom harness can cross-validate the two.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .algebra import (
    ForeignElementError,
    FormalSum,
    Idyll,
    ParseError,
    StructuralError,
    SumSet,
    UnsupportedOperationError,
    krasner,
    sign_idyll,
)
from .oag import (
    INFINITY,
    OagValue,
    format_oag_value,
    oag_add,
    oag_cmp,
    oag_neg,
    oag_zero,
    parse_oag_value,
)


@dataclass(frozen=True)
class ExtElement:
    """(unit, level) with a nonzero base unit, or the zero (None, None)."""

    unit: object = None
    level: Optional[OagValue] = None

    @property
    def is_zero(self) -> bool:
        return self.unit is None

    def __repr__(self):
        if self.is_zero:
            return "ExtElement(0)"
        return f"ExtElement({self.unit!r}, {format_oag_value(self.level)})"


EXT_ZERO = ExtElement()


class ExtensionDescriptor(Idyll):
    """An idyll of base units graded by a rank-n value group.

    ``cocycle`` is a map (level, level) -> base unit twisting multiplication;
    None means the split (untwisted) extension. The null rule — restrict to
    minimal-level terms, read their units in the base — is independent of the
    cocycle, because dividing by the unit-1 representative of the minimal
    level returns exactly the stored units.
    """

    def __init__(self, base: Idyll, rank: int = 1, cocycle=None, name: str = None):
        if isinstance(base, ExtensionDescriptor):
            # collapse towers: units of an extension are again (unit, level)
            raise StructuralError(
                "use a higher-rank extension instead of an extension tower"
            )
        if rank < 0:
            raise ValueError("rank must be nonnegative")
        self.base = base
        self.rank = rank
        self.cocycle = cocycle
        if name is None:
            if base.kind == "krasner":
                name = "trop" if rank == 1 else f"trop:rank-{rank}"
            elif base.kind == "sign":
                name = "trop-real" if rank == 1 else f"trop-real:rank-{rank}"
            else:
                name = f"ext:{base.name}:{rank}"
        self.name = name
        self.kind = "extension"
        self.zero = EXT_ZERO
        self._zero_level = oag_zero(rank)
        self.one = ExtElement(base.one, self._zero_level)
        self.epsilon = ExtElement(base.epsilon, self._zero_level)
        self.elements = None
        self.is_whole = base.is_whole
        self.is_pasture_backed = base.is_pasture_backed
        # Krasner units are trivial, so literals read as valuations there
        self.valuation_literals = base.kind == "krasner"
        self.minus_means_epsilon = not self.valuation_literals

    def _key(self):
        return (self.kind, self.base._key(), self.rank, id(self.cocycle) if self.cocycle else None)

    @property
    def is_split(self) -> bool:
        return self.cocycle is None

    def _sigma(self, g1: OagValue, g2: OagValue):
        if self.cocycle is None:
            return self.base.one
        return self.cocycle(g1, g2)

    # -- element plumbing ---------------------------------------------------

    def elem(self, unit, level=0) -> ExtElement:
        """Build an element from a base unit and a flexible level argument."""
        if self.base.is_zero(unit):
            return EXT_ZERO
        if not isinstance(level, OagValue):
            if isinstance(level, tuple):
                level = OagValue(tuple(Fraction(c) for c in level))
            else:
                level = OagValue((Fraction(level),))
        if level.is_infinite or level.rank != self.rank:
            raise StructuralError(f"level {format_oag_value(level)} has wrong rank")
        if not self.base.contains(unit):
            raise ForeignElementError(f"{unit!r} is not a unit of {self.base.name}")
        return ExtElement(unit, level)

    def contains(self, x):
        if not isinstance(x, ExtElement):
            return False
        if x.is_zero:
            return True
        return (
            not x.level.is_infinite
            and x.level.rank == self.rank
            and self.base.contains(x.unit)
            and not self.base.is_zero(x.unit)
        )

    def is_zero(self, x):
        return x.is_zero

    def mul(self, a: ExtElement, b: ExtElement) -> ExtElement:
        if a.is_zero or b.is_zero:
            return EXT_ZERO
        u = self.base.mul(a.unit, b.unit)
        u = self.base.mul(u, self._sigma(a.level, b.level))
        return ExtElement(u, oag_add(a.level, b.level))

    def inv(self, a: ExtElement) -> ExtElement:
        if a.is_zero:
            raise ZeroDivisionError("0 is not a unit")
        neg = oag_neg(a.level)
        w = self.base.inv(self.base.mul(a.unit, self._sigma(a.level, neg)))
        return ExtElement(w, neg)

    def valuation(self, a: ExtElement) -> OagValue:
        return INFINITY if a.is_zero else a.level

    def lc(self, a: ExtElement):
        """Leading coefficient with its torsor level tag: (unit, level)."""
        if a.is_zero:
            return (self.base.zero, INFINITY)
        return (a.unit, a.level)

    def ev0(self, a: ExtElement):
        """Evaluate the grading parameter at zero: unit at level 0, else 0.

        Only defined on nonnegative levels (the subring of integral elements).
        """
        if a.is_zero:
            return self.base.zero
        if oag_cmp(a.level, self._zero_level) < 0:
            raise StructuralError("ev0 needs a nonnegative level")
        if a.level == self._zero_level:
            return a.unit
        return self.base.zero

    def sort_key(self, x):
        if x.is_zero:
            return (1,)
        return (0, x.level.coords, self.base.sort_key(x.unit))

    def format_element(self, x):
        if x.is_zero:
            return "inf" if self.valuation_literals else "0"
        if self.valuation_literals:
            # trivial units: the level is the whole story
            return format_oag_value(x.level)
        return f"{self.base.format_element(x.unit)}^{format_oag_value(x.level)}"

    def parse_element(self, text):
        t = text.strip()
        if t in ("0", "inf") and not self.valuation_literals:
            return EXT_ZERO
        if t == "inf":
            return EXT_ZERO
        if "^" in t:
            unit_text, level_text = t.split("^", 1)
            unit = self.base.parse_element(unit_text)
            if self.base.is_zero(unit):
                raise ParseError(f"zero unit in {text!r}")
            try:
                level = parse_oag_value(level_text, rank=self.rank)
            except (ValueError, ZeroDivisionError) as e:
                raise ParseError(f"bad level in {text!r}: {e}") from None
            return ExtElement(unit, level)
        if self.valuation_literals:
            try:
                level = parse_oag_value(t, rank=self.rank)
            except (ValueError, ZeroDivisionError) as e:
                raise ParseError(f"not a valuation literal: {text!r} ({e})") from None
            return ExtElement(self.base.one, level)
        unit = self.base.parse_element(t)
        if self.base.is_zero(unit):
            return EXT_ZERO
        return ExtElement(unit, self._zero_level)

    # -- additive structure --------------------------------------------------

    def null_terms(self, terms):
        if not terms:
            return True
        min_level = terms[0].level
        for t in terms[1:]:
            if oag_cmp(t.level, min_level) < 0:
                min_level = t.level
        units = [t.unit for t in terms if oag_cmp(t.level, min_level) == 0]
        return self.base.null_terms(units)

    def sum_set(self, a: ExtElement, b: ExtElement) -> SumSet:
        if a.is_zero and b.is_zero:
            return SumSet(frozenset({EXT_ZERO}))
        if a.is_zero or b.is_zero:
            low, level = (b, b.level) if a.is_zero else (a, a.level)
            ws = self._base_sum_set(low.unit, self.base.zero)
            return SumSet(frozenset(ExtElement(w, level) for w in ws.core))
        c = oag_cmp(a.level, b.level)
        if c != 0:
            low = a if c < 0 else b
            ws = self._base_sum_set(low.unit, self.base.zero)
            return SumSet(frozenset(ExtElement(w, low.level) for w in ws.core))
        ws = self._base_sum_set(a.unit, b.unit)
        core = set()
        tail_above = None
        for w in ws.core:
            if self.base.is_zero(w):
                core.add(EXT_ZERO)
                tail_above = a.level
            else:
                core.add(ExtElement(w, a.level))
        return SumSet(frozenset(core), tail_above, self.valuation if tail_above is not None else None)

    def _base_sum_set(self, u, w) -> SumSet:
        s = self.base.sum_set(u, w)
        if s.tail_above is not None:
            raise UnsupportedOperationError(
                f"base idyll {self.base.name} has infinite sum sets; "
                "model this as a single higher-rank extension instead"
            )
        return s

    # -- layering construction (kept independent of sum_set) -----------------

    def layering_hypersum(self, y: ExtElement, z: ExtElement) -> SumSet:
        """Hypersum assembled from the four valuation cases.

        Requires a hyperfield base (whole and pasture-backed): lower level
        wins outright; at equal levels the base hypersum decides, and if it
        contains zero every strictly higher element joins.
        """
        if not (self.base.is_whole and self.base.is_pasture_backed):
            raise UnsupportedOperationError("layering needs a hyperfield base")
        if y.is_zero and z.is_zero:
            return SumSet(frozenset({EXT_ZERO}))
        if y.is_zero:
            return SumSet(frozenset({z}))
        if z.is_zero:
            return SumSet(frozenset({y}))
        c = oag_cmp(y.level, z.level)
        if c < 0:
            return SumSet(frozenset({y}))
        if c > 0:
            return SumSet(frozenset({z}))
        level = y.level
        ws = self._base_sum_set(y.unit, z.unit)
        level_part = frozenset(
            ExtElement(w, level) for w in ws.core if not self.base.is_zero(w)
        )
        if any(self.base.is_zero(w) for w in ws.core):
            return SumSet(level_part | {EXT_ZERO}, tail_above=level, tail_val=self.valuation)
        return SumSet(level_part)

    # -- sampling -------------------------------------------------------------

    def sample_elements(self, rng: random.Random, count: int = 8):
        if self.base.elements is not None:
            units = [u for u in self.base.elements if not self.base.is_zero(u)]
        else:
            units = [
                u
                for u in self.base.sample_elements(rng)
                if not self.base.is_zero(u)
            ][:4]
        span = [Fraction(k) for k in (-1, 0, 1, 2)]
        levels = [
            OagValue(coords) for coords in itertools.product(span, repeat=self.rank)
        ]
        if len(levels) > 16:
            levels = levels[:16]
        pool = [EXT_ZERO]
        for u in units:
            for lv in levels:
                pool.append(ExtElement(u, lv))
        return tuple(pool)


# ---------------------------------------------------------------------------
# factories


def trop_extension(
    base: Idyll, rank: int = 1, cocycle=None, name: str = None
) -> ExtensionDescriptor:
    """Extension of ``base`` by a rank-n rational value group."""
    if cocycle is None and name is None:
        return _split_cached(base, rank)
    return ExtensionDescriptor(base, rank, cocycle, name)


@lru_cache(maxsize=None)
def _split_cached(base: Idyll, rank: int) -> ExtensionDescriptor:
    return ExtensionDescriptor(base, rank)


def tropical(rank: int = 1) -> ExtensionDescriptor:
    """Min-valuation tropical numbers: trivial units over a rank-n group."""
    return trop_extension(krasner(), rank)


def signed_tropical(rank: int = 1) -> ExtensionDescriptor:
    """Signed tropical numbers: +/- units over a rank-n group."""
    return trop_extension(sign_idyll(), rank)


# ---------------------------------------------------------------------------
# free-function forms of the method surface


def ext_mul(E: ExtensionDescriptor, a: ExtElement, b: ExtElement) -> ExtElement:
    for x in (a, b):
        if not E.contains(x):
            raise ForeignElementError(f"{x!r} is not an element of {E.name}")
    return E.mul(a, b)


def valuation(E: ExtensionDescriptor, a: ExtElement) -> OagValue:
    return E.valuation(a)


def lc(E: ExtensionDescriptor, a: ExtElement):
    return E.lc(a)


def ext_is_null(E: ExtensionDescriptor, s) -> bool:
    if not isinstance(s, FormalSum):
        s = FormalSum(E, s)
    return E.is_null(s)


def ev0(E: ExtensionDescriptor, a: ExtElement):
    return E.ev0(a)


def layering_hypersum(E: ExtensionDescriptor, y: ExtElement, z: ExtElement) -> SumSet:
    return E.layering_hypersum(y, z)


# ---------------------------------------------------------------------------
# axiom harness


def check_extension_axioms(
    E: ExtensionDescriptor, samples: int = 1000, seed: int = 0
) -> list:
    """Verify the extension axioms on sampled elements; returns violations.

    Covers: the exact unit sequence (embedding, valuation, cocycle identity,
    group laws), fullness of the base inside the extension, inertness of
    higher-level terms, and — for hyperfield bases — agreement between the
    layering hypersum and the null-ideal rule.
    """
    rng = random.Random(seed)
    violations = []
    base = E.base
    pool = list(E.sample_elements(rng))
    nonzero = [x for x in pool if not x.is_zero]
    if base.elements is not None:
        base_units = [u for u in base.elements if not base.is_zero(u)]
    else:
        base_units = [u for u in base.sample_elements(rng) if not base.is_zero(u)][:6]
    levels = sorted({x.level for x in nonzero}, key=lambda g: g.coords)

    # (i) exactness and group structure
    for u in base_units:
        e = ExtElement(u, E._zero_level)
        if E.valuation(e) != E._zero_level:
            violations.append("embedded base unit does not sit at level 0")
    for g in levels:
        if E.valuation(ExtElement(base.one, g)) != g:
            violations.append("valuation is not surjective onto sampled levels")
    for x in nonzero:
        if E.valuation(x) == E._zero_level and not base.contains(x.unit):
            violations.append("level-0 element is not an embedded base unit")
    for _ in range(samples):
        g1, g2, g3 = (rng.choice(levels) for _ in range(3))
        lhs = base.mul(E._sigma(g1, g2), E._sigma(oag_add(g1, g2), g3))
        rhs = base.mul(E._sigma(g2, g3), E._sigma(g1, oag_add(g2, g3)))
        if lhs != rhs:
            violations.append("cocycle identity fails: multiplication not associative")
            break
    for g in levels:
        if E._sigma(E._zero_level, g) != base.one or E._sigma(g, E._zero_level) != base.one:
            violations.append("cocycle is not normalized at level 0")
            break
    for _ in range(min(samples, 200)):
        a, b, c = (rng.choice(nonzero) for _ in range(3))
        if E.mul(E.mul(a, b), c) != E.mul(a, E.mul(b, c)):
            violations.append("extension multiplication is not associative")
            break
    for x in nonzero[: min(len(nonzero), 50)]:
        if E.mul(x, E.inv(x)) != E.one:
            violations.append(f"inverse failed for {E.format_element(x)}")
            break

    # (ii) fullness: base sums keep their verdict inside the extension
    for _ in range(samples):
        n = rng.randint(0, 4)
        s = [rng.choice(base_units) for _ in range(n)]
        embedded = [ExtElement(u, E._zero_level) for u in s]
        if base.is_null(s) != E.is_null(embedded):
            violations.append(f"fullness fails on base sum {s!r}")
            break

    # (iii) higher-level terms never change a verdict
    for _ in range(samples):
        n = rng.randint(1, 4)
        s = [rng.choice(nonzero) for _ in range(n)]
        verdict = E.is_null(s)
        min_level = min((x.level for x in s), key=lambda g: g.coords)
        bump = OagValue(tuple(c + 1 for c in min_level.coords))
        junk = ExtElement(rng.choice(base_units), bump)
        if E.is_null(s + [junk]) != verdict:
            violations.append("appending a higher-level term changed a verdict")
            break

    # (iv) layering agrees with the null rule (hyperfield bases)
    if base.is_whole and base.is_pasture_backed:
        for _ in range(samples):
            y, z, x = (rng.choice(pool) for _ in range(3))
            in_layering = x in E.layering_hypersum(y, z)
            in_null = E.is_null([y, z, E.mul(E.epsilon, x)])
            if in_layering != in_null:
                violations.append(
                    "layering hypersum disagrees with the null rule on "
                    f"({E.format_element(y)}, {E.format_element(z)}, {E.format_element(x)})"
                )
                break

    return violations
