"""Idyll catalog: monoid arithmetic plus null-ideal membership.

An idyll is a commutative monoid-with-zero whose nonzero elements form a
group, together with a proper ideal of formal sums (the "null ideal")
declaring which sums vanish. Every additive question in this package reduces
to one predicate: is this multiset of elements null?

This module implements the standard small idylls (Krasner, signs, phases, the
two-element partial field), rational and finite prime fields, quotient
hyperfields GF(p)/G, value-group idylls of any rank, exact sign and p-adic
coefficient maps, and an axiom-checking harness used by tests and the CLI.

Elements are plain values interpreted by their owning descriptor: small ints
for the finite idylls and prime-field residues, Fraction for rationals and
phase angles (fractions of a full turn), QuotientClass for coset classes,
OagValue for value-group idylls, ExtElement for tropical extensions. Each
descriptor knows its own zero; formal sums drop zeros on construction.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional

from .oag import (
    INFINITY,
    OagValue,
    ParseError,
    format_oag_value,
    format_rational,
    oag_add,
    oag_cmp,
    oag_neg,
    oag_zero,
    parse_oag_value,
)

# Any value interpretable by some descriptor; see the module docstring.
MonoidElement = object


class StructuralError(ValueError):
    """An operation mixed elements or descriptors that do not belong together."""


class ForeignElementError(StructuralError):
    """An element was handed to a descriptor that does not contain it."""


class UnsupportedOperationError(RuntimeError):
    """The descriptor has no finite enumeration and no closed form for this op."""


# parsing failures share one exception type across the value and element layers


class _PhaseZero:
    """Dedicated zero of the phase idyll (angles occupy every Fraction)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "PHASE_ZERO"


PHASE_ZERO = _PhaseZero()


@dataclass(frozen=True)
class QuotientClass:
    """A multiplicative coset of a subgroup of GF(p)^x, or the zero class {0}."""

    p: int
    reps: frozenset

    @property
    def rep(self) -> int:
        return min(self.reps)

    def __repr__(self):
        return f"[{self.rep} mod {self.p}]"


@dataclass(frozen=True)
class SumSet:
    """The set {c : a + b - c is null}, possibly with an infinite upper tail.

    ``core`` is the finite part. Over a tropical extension the set can also
    contain every element of valuation strictly above ``tail_above``; base
    idylls always have ``tail_above=None``. Iteration yields only the core;
    membership honors the tail.
    """

    core: frozenset
    tail_above: Optional[OagValue] = None
    tail_val: Optional[object] = None  # element -> OagValue, used for the tail test

    def __contains__(self, x) -> bool:
        if x in self.core:
            return True
        if self.tail_above is not None:
            return oag_cmp(self.tail_val(x), self.tail_above) > 0
        return False

    def __iter__(self):
        return iter(self.core)

    def __len__(self):
        return len(self.core)

    def __bool__(self):
        return bool(self.core) or self.tail_above is not None

    def __eq__(self, other):
        if isinstance(other, SumSet):
            return self.core == other.core and self.tail_above == other.tail_above
        if isinstance(other, (set, frozenset)):
            return self.tail_above is None and self.core == frozenset(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.core, self.tail_above))


class FormalSum:
    """A finite multiset of elements of one idyll, zeros dropped.

    Multiset semantics matter: 1 + 1 is not 1. The empty sum plays the role
    of zero and is always null.
    """

    __slots__ = ("idyll", "terms")

    def __init__(self, idyll: "Idyll", terms: Iterable):
        kept = []
        for t in terms:
            if not idyll.contains(t):
                raise ForeignElementError(f"{t!r} is not an element of {idyll.name}")
            if not idyll.is_zero(t):
                kept.append(t)
        kept.sort(key=idyll.sort_key)
        object.__setattr__(self, "idyll", idyll)
        object.__setattr__(self, "terms", tuple(kept))

    def __setattr__(self, *a):
        raise AttributeError("FormalSum is immutable")

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, FormalSum)
            and self.idyll == other.idyll
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.idyll, self.terms))

    def __repr__(self):
        body = " + ".join(self.idyll.format_element(t) for t in self.terms) or "0"
        return f"<{body} over {self.idyll.name}>"

    def scale(self, u) -> "FormalSum":
        return FormalSum(self.idyll, [self.idyll.mul(u, t) for t in self.terms])

    def concat(self, other: "FormalSum") -> "FormalSum":
        if self.idyll != other.idyll:
            raise StructuralError("cannot concatenate sums over different idylls")
        return FormalSum(self.idyll, self.terms + other.terms)


class Idyll:
    """Base descriptor. Subclasses fill in the attributes in ``__init__``.

    Required attributes: name, kind, zero, one, epsilon, elements (tuple or
    None for infinite carriers), is_whole, is_pasture_backed,
    minus_means_epsilon (polynomial-grammar hint: whether a leading '-'
    multiplies the coefficient by epsilon, or binds into a valuation literal).
    """

    name: str
    kind: str
    elements: Optional[tuple]
    is_whole: bool
    is_pasture_backed: bool
    minus_means_epsilon: bool = True

    # -- identity ---------------------------------------------------------

    def _key(self):
        return (self.kind,)

    def __eq__(self, other):
        return isinstance(other, Idyll) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"<idyll {self.name}>"

    # -- monoid interface (subclasses override) ---------------------------

    def contains(self, x) -> bool:
        raise NotImplementedError

    def is_zero(self, x) -> bool:
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def power(self, a, n: int):
        """a^n for n in Z (negative n inverts; a must be a unit then)."""
        if n < 0:
            a = self.inv(a)
            n = -n
        result = self.one
        for _ in range(n):
            result = self.mul(result, a)
        return result

    def sort_key(self, x):
        raise NotImplementedError

    def format_element(self, x) -> str:
        raise NotImplementedError

    def parse_element(self, text: str):
        raise NotImplementedError

    # -- additive structure ------------------------------------------------

    def null_terms(self, terms) -> bool:
        """Null test on an already-validated, zero-free sequence of terms."""
        raise NotImplementedError

    def is_null(self, s) -> bool:
        """Null-ideal membership for a FormalSum or any iterable of elements."""
        if isinstance(s, FormalSum):
            if s.idyll != self:
                raise StructuralError(f"sum over {s.idyll.name} tested in {self.name}")
            return self.null_terms(s.terms)
        terms = [t for t in s if not self.is_zero(t)]
        return self.null_terms(terms)

    def sum_set(self, a, b) -> SumSet:
        """{c : a + b - c is null}. Finite carriers scan; closed forms override."""
        if self.elements is None:
            raise UnsupportedOperationError(
                f"{self.name} has no finite enumeration and no sum-set closed form"
            )
        eps = self.epsilon
        core = frozenset(
            c for c in self.elements if self.is_null([a, b, self.mul(eps, c)])
        )
        return SumSet(core)

    def third_summands(self, a, b) -> SumSet:
        """{c : a + b + c is null} — the sum set scaled by epsilon."""
        s = self.sum_set(a, b)
        core = frozenset(self.mul(self.epsilon, c) for c in s.core)
        return SumSet(core, s.tail_above, s.tail_val)

    # -- sampling for the axiom harness -------------------------------------

    def sample_elements(self, rng: random.Random, count: int = 8) -> tuple:
        """A small deterministic-ish pool for infinite carriers."""
        raise UnsupportedOperationError(f"{self.name} provides no sample pool")


# ---------------------------------------------------------------------------
# finite small idylls


class KrasnerIdyll(Idyll):
    """Two elements {0, 1}; every sum of two or more ones is null."""

    def __init__(self):
        self.name = "krasner"
        self.kind = "krasner"
        self.zero = 0
        self.one = 1
        self.epsilon = 1
        self.elements = (0, 1)
        self.is_whole = True
        self.is_pasture_backed = True
        self.minus_means_epsilon = True

    def contains(self, x):
        return isinstance(x, int) and not isinstance(x, bool) and x in (0, 1)

    def is_zero(self, x):
        return x == 0

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 is not a unit")
        return 1

    def sort_key(self, x):
        return (1,) if x == 0 else (0,)

    def format_element(self, x):
        return str(x)

    def parse_element(self, text):
        t = text.strip()
        if t in ("0", "1"):
            return int(t)
        if t in ("+1", "-1"):  # epsilon is 1, so -1 means 1
            return 1
        raise ParseError(f"not a Krasner element: {text!r}")

    def null_terms(self, terms):
        return len(terms) != 1


class SignIdyll(Idyll):
    """{0, +1, -1}; a sum is null iff both signs occur (or it is empty)."""

    def __init__(self):
        self.name = "sign"
        self.kind = "sign"
        self.zero = 0
        self.one = 1
        self.epsilon = -1
        self.elements = (0, 1, -1)
        self.is_whole = True
        self.is_pasture_backed = True

    def contains(self, x):
        return isinstance(x, int) and not isinstance(x, bool) and x in (-1, 0, 1)

    def is_zero(self, x):
        return x == 0

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 is not a unit")
        return a

    def sort_key(self, x):
        return (1,) if x == 0 else (0, 0 if x == 1 else 1)

    def format_element(self, x):
        return str(x)

    def parse_element(self, text):
        t = text.strip().lstrip("+")
        try:
            v = int(t)
        except ValueError:
            raise ParseError(f"not a sign element: {text!r}") from None
        if v in (-1, 0, 1):
            return v
        raise ParseError(f"not a sign element: {text!r}")

    def null_terms(self, terms):
        if not terms:
            return True
        return 1 in terms and -1 in terms


class PartialFieldIdyll(Idyll):
    """The two-unit partial field {0, ±1}: null sums pair off +1 with -1.

    Not whole: 1 + 1 has an empty sum set, so addition is only partial.
    """

    def __init__(self):
        self.name = "f1pm"
        self.kind = "f1pm"
        self.zero = 0
        self.one = 1
        self.epsilon = -1
        self.elements = (0, 1, -1)
        self.is_whole = False
        self.is_pasture_backed = True

    def contains(self, x):
        return isinstance(x, int) and not isinstance(x, bool) and x in (-1, 0, 1)

    def is_zero(self, x):
        return x == 0

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 is not a unit")
        return a

    def sort_key(self, x):
        return (1,) if x == 0 else (0, 0 if x == 1 else 1)

    def format_element(self, x):
        return str(x)

    def parse_element(self, text):
        t = text.strip().lstrip("+")
        try:
            v = int(t)
        except ValueError:
            raise ParseError(f"not a unit-pair element: {text!r}") from None
        if v in (-1, 0, 1):
            return v
        raise ParseError(f"not a unit-pair element: {text!r}")

    def null_terms(self, terms):
        return sum(1 for t in terms if t == 1) == sum(1 for t in terms if t == -1)


class PhaseIdyll(Idyll):
    """Unit circle plus zero; angles are exact rationals in [0,1) (full turns).

    A sum is null iff the origin lies in the relative interior of the convex
    hull of the unit vectors: either two antipodal directions with everything
    on that one line, or directions spreading around the circle with every
    circular gap strictly below half a turn.
    """

    def __init__(self):
        self.name = "phase"
        self.kind = "phase"
        self.zero = PHASE_ZERO
        self.one = Fraction(0)
        self.epsilon = Fraction(1, 2)
        self.elements = None
        self.is_whole = True
        self.is_pasture_backed = True

    def contains(self, x):
        if x is PHASE_ZERO:
            return True
        return isinstance(x, Fraction) and 0 <= x < 1

    def is_zero(self, x):
        return x is PHASE_ZERO

    def mul(self, a, b):
        if a is PHASE_ZERO or b is PHASE_ZERO:
            return PHASE_ZERO
        return (a + b) % 1

    def inv(self, a):
        if a is PHASE_ZERO:
            raise ZeroDivisionError("0 is not a unit")
        return (-a) % 1

    def sort_key(self, x):
        return (1,) if x is PHASE_ZERO else (0, x)

    def format_element(self, x):
        if x is PHASE_ZERO:
            return "0"
        if x == 0:
            return "1"
        return format_rational(x)

    def parse_element(self, text):
        t = text.strip()
        if t == "0":
            return PHASE_ZERO
        try:
            q = Fraction(t)
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"not a phase literal: {text!r}") from None
        return q % 1

    def null_terms(self, terms):
        if not terms:
            return True
        distinct = sorted(set(terms))
        if len(distinct) == 1:
            return False
        half = Fraction(1, 2)
        base = distinct[0]
        offsets = {(a - base) % 1 for a in distinct}
        if offsets <= {Fraction(0), half}:
            # one line through the origin; interior needs both directions
            return half in offsets
        gaps = [b - a for a, b in zip(distinct, distinct[1:])]
        gaps.append(1 - (distinct[-1] - distinct[0]))
        return max(gaps) < half

    def sum_set(self, a, b):
        raise UnsupportedOperationError(
            "phase sums form infinite arcs; the phase idyll supports root "
            "detection only"
        )

    def sample_elements(self, rng, count=8):
        return (PHASE_ZERO,) + tuple(Fraction(k, 12) for k in range(12))


# ---------------------------------------------------------------------------
# fields


class RationalFieldIdyll(Idyll):
    """The rationals as an idyll: a formal sum is null iff it sums to zero."""

    def __init__(self):
        self.name = "field:Q"
        self.kind = "field-q"
        self.zero = Fraction(0)
        self.one = Fraction(1)
        self.epsilon = Fraction(-1)
        self.elements = None
        self.is_whole = True
        self.is_pasture_backed = True

    def contains(self, x):
        return isinstance(x, (int, Fraction)) and not isinstance(x, bool)

    def is_zero(self, x):
        return x == 0

    def mul(self, a, b):
        return Fraction(a) * Fraction(b)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 is not a unit")
        return 1 / Fraction(a)

    def sort_key(self, x):
        return (1,) if x == 0 else (0, Fraction(x))

    def format_element(self, x):
        return format_rational(Fraction(x))

    def parse_element(self, text):
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"not a rational: {text!r}") from None

    def null_terms(self, terms):
        return sum(terms, Fraction(0)) == 0

    def sum_set(self, a, b):
        return SumSet(frozenset({Fraction(a) + Fraction(b)}))

    def sample_elements(self, rng, count=8):
        pool = [Fraction(n, d) for n in range(-3, 4) for d in (1, 2, 3)]
        return tuple(sorted(set(pool)))


class FiniteFieldIdyll(Idyll):
    """GF(p) for a prime p, residues 0..p-1; null iff the sum is 0 mod p."""

    def __init__(self, p: int):
        _require_prime(p)
        self.p = p
        self.name = f"field:GF({p})"
        self.kind = "field-gf"
        self.zero = 0
        self.one = 1 % p
        self.epsilon = (p - 1) % p
        self.elements = tuple(range(p))
        self.is_whole = True
        self.is_pasture_backed = True

    def _key(self):
        return (self.kind, self.p)

    def contains(self, x):
        return isinstance(x, int) and not isinstance(x, bool) and 0 <= x < self.p

    def is_zero(self, x):
        return x == 0

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 is not a unit")
        return pow(a, -1, self.p)

    def sort_key(self, x):
        return (1,) if x == 0 else (0, x)

    def format_element(self, x):
        return str(x)

    def parse_element(self, text):
        try:
            return int(text.strip()) % self.p
        except ValueError:
            raise ParseError(f"not a GF({self.p}) residue: {text!r}") from None

    def null_terms(self, terms):
        return sum(terms) % self.p == 0

    def sum_set(self, a, b):
        return SumSet(frozenset({(a + b) % self.p}))


# ---------------------------------------------------------------------------
# quotient hyperfields GF(p)/G


class QuotientIdyll(Idyll):
    """Cosets of a subgroup G of GF(p)^x, plus zero.

    A sum of classes is null iff some choice of representatives sums to 0
    mod p; decided exactly by a reachable-sums sweep over residues.
    """

    def __init__(self, p: int, subgroup: frozenset):
        _require_prime(p)
        g = frozenset(int(x) % p for x in subgroup)
        if not g or 0 in g:
            raise StructuralError("subgroup must consist of nonzero residues")
        if 1 not in g or any((a * b) % p not in g for a in g for b in g):
            raise StructuralError(f"{sorted(g)} is not a subgroup of GF({p})^x")
        self.p = p
        self.subgroup = g
        classes = {}
        for r in range(1, p):
            cls = frozenset((r * h) % p for h in g)
            classes[r] = QuotientClass(p, cls)
        classes[0] = QuotientClass(p, frozenset({0}))
        self._class_of = classes
        self.name = "quot:GF(%d)/{%s}" % (p, ",".join(str(x) for x in sorted(g)))
        self.kind = "quotient"
        self.zero = classes[0]
        self.one = classes[1]
        self.epsilon = classes[p - 1]
        self.elements = tuple(
            sorted(set(classes.values()), key=lambda c: (c.reps != frozenset({0}), c.rep))
        )
        self.is_whole = True
        self.is_pasture_backed = True

    def _key(self):
        return (self.kind, self.p, self.subgroup)

    def class_of(self, residue: int) -> QuotientClass:
        return self._class_of[residue % self.p]

    def contains(self, x):
        return isinstance(x, QuotientClass) and x.p == self.p and x in self.elements

    def is_zero(self, x):
        return x.reps == frozenset({0})

    def mul(self, a, b):
        return self.class_of(a.rep * b.rep)

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("0 is not a unit")
        return self.class_of(pow(a.rep, -1, self.p))

    def sort_key(self, x):
        return (1,) if self.is_zero(x) else (0, x.rep)

    def format_element(self, x):
        return "0" if self.is_zero(x) else f"[{x.rep}]"

    def parse_element(self, text):
        t = text.strip()
        if t.startswith("[") and t.endswith("]"):
            t = t[1:-1]
        try:
            return self.class_of(int(t))
        except ValueError:
            raise ParseError(f"not a class of {self.name}: {text!r}") from None

    def null_terms(self, terms):
        reachable = {0}
        for t in terms:
            reachable = {(r + x) % self.p for r in reachable for x in t.reps}
        return 0 in reachable


# ---------------------------------------------------------------------------
# value-group idylls


class OagIdyll(Idyll):
    """A rank-n value group as an idyll: carrier = vectors plus inf.

    Written additively: the monoid unit is the zero vector, the absorbing
    element is inf, "multiplication" is vector addition. A sum is null iff
    its lexicographic minimum occurs at least twice.
    """

    def __init__(self, rank: int):
        if rank < 0:
            raise ValueError("rank must be nonnegative")
        self.rank = rank
        self.name = f"oag:rank-{rank}"
        self.kind = "oag"
        self.zero = INFINITY
        self.one = oag_zero(rank)
        self.epsilon = oag_zero(rank)
        self.elements = None
        self.is_whole = True
        self.is_pasture_backed = True
        self.minus_means_epsilon = False

    def _key(self):
        return (self.kind, self.rank)

    def contains(self, x):
        return isinstance(x, OagValue) and (x.is_infinite or x.rank == self.rank)

    def is_zero(self, x):
        return x.is_infinite

    def mul(self, a, b):
        return oag_add(a, b)

    def inv(self, a):
        if a.is_infinite:
            raise ZeroDivisionError("inf is not a unit")
        return oag_neg(a)

    def sort_key(self, x):
        return (1,) if x.is_infinite else (0, x.coords)

    def format_element(self, x):
        return format_oag_value(x)

    def parse_element(self, text):
        try:
            return parse_oag_value(text, rank=None if text.strip() == "inf" else self.rank)
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"not a rank-{self.rank} value: {text!r} ({e})") from None

    def null_terms(self, terms):
        if not terms:
            return True
        lowest = terms[0]
        count = 1
        for t in terms[1:]:
            c = oag_cmp(t, lowest)
            if c < 0:
                lowest, count = t, 1
            elif c == 0:
                count += 1
        return count >= 2

    def sum_set(self, a, b):
        if a.is_infinite and b.is_infinite:
            return SumSet(frozenset({INFINITY}))
        if a.is_infinite:
            return SumSet(frozenset({b}))
        if b.is_infinite:
            return SumSet(frozenset({a}))
        c = oag_cmp(a, b)
        if c != 0:
            return SumSet(frozenset({a if c < 0 else b}))
        # equal minima already cancel: any value strictly above joins, and inf
        return SumSet(frozenset({a, INFINITY}), tail_above=a, tail_val=lambda x: x)

    def sample_elements(self, rng, count=8):
        pool = [INFINITY]
        span = [Fraction(k) for k in (-2, -1, 0, 1, 2)]
        for coords in itertools.product(span, repeat=self.rank):
            pool.append(OagValue(coords))
            if len(pool) > 40:
                break
        return tuple(pool)


# ---------------------------------------------------------------------------
# factories (cached so descriptor identity is stable across call sites)


@lru_cache(maxsize=None)
def krasner() -> KrasnerIdyll:
    return KrasnerIdyll()


@lru_cache(maxsize=None)
def sign_idyll() -> SignIdyll:
    return SignIdyll()


@lru_cache(maxsize=None)
def f1pm() -> PartialFieldIdyll:
    return PartialFieldIdyll()


@lru_cache(maxsize=None)
def phase_idyll() -> PhaseIdyll:
    return PhaseIdyll()


@lru_cache(maxsize=None)
def rational_field() -> RationalFieldIdyll:
    return RationalFieldIdyll()


@lru_cache(maxsize=None)
def finite_field(p: int) -> FiniteFieldIdyll:
    return FiniteFieldIdyll(p)


@lru_cache(maxsize=None)
def oag_idyll(rank: int) -> OagIdyll:
    return OagIdyll(rank)


@lru_cache(maxsize=None)
def _quotient_cached(p: int, subgroup: frozenset) -> QuotientIdyll:
    return QuotientIdyll(p, subgroup)


def quotient_hyperfield(p: int, subgroup) -> QuotientIdyll:
    """The idyll on GF(p)/G for a subgroup G of the units of GF(p)."""
    return _quotient_cached(p, frozenset(int(x) for x in subgroup))


def _require_prime(p: int) -> None:
    if not isinstance(p, int) or p < 2:
        raise ValueError(f"{p!r} is not a prime")
    d = 2
    while d * d <= p:
        if p % d == 0:
            raise ValueError(f"{p} is not a prime")
        d += 1


# ---------------------------------------------------------------------------
# free-function forms of the method surface


def is_null(B: Idyll, s) -> bool:
    """Null-ideal membership. Accepts a FormalSum or an iterable of elements."""
    if not isinstance(s, FormalSum):
        s = FormalSum(B, s)
    return B.is_null(s)


def is_null_phase(s) -> bool:
    """Null test for a sum of phases (exact convex-position test)."""
    P = phase_idyll()
    if not isinstance(s, FormalSum):
        s = FormalSum(P, s)
    return P.is_null(s)


def sum_set(B: Idyll, a, b) -> SumSet:
    """{c : a + b - c is null}; exact, possibly with an infinite upper tail."""
    for x in (a, b):
        if not B.contains(x):
            raise ForeignElementError(f"{x!r} is not an element of {B.name}")
    return B.sum_set(a, b)


def sign_of_rational(q) -> int:
    """The sign idyll image of a rational: -1, 0 or 1."""
    q = Fraction(q)
    if q == 0:
        return 0
    return 1 if q > 0 else -1


def padic_valuation(q, p: int) -> OagValue:
    """Exact p-adic valuation of a rational as a rank-1 value; v(0) = inf."""
    _require_prime(p)
    q = Fraction(q)
    if q == 0:
        return INFINITY
    v = 0
    n = q.numerator
    while n % p == 0:
        n //= p
        v += 1
    d = q.denominator
    while d % p == 0:
        d //= p
        v -= 1
    return OagValue((Fraction(v),))


# ---------------------------------------------------------------------------
# axiom harness


def _element_pool(B: Idyll, rng: random.Random):
    if B.elements is not None:
        return tuple(B.elements), True
    return tuple(B.sample_elements(rng)), False


def check_idyll_axioms(B: Idyll, max_len: int = 4, seed: int = 0) -> list:
    """Verify the idyll axioms; returns a list of violation strings.

    Finite carriers are checked exhaustively (sums up to ``max_len``);
    infinite carriers are checked on a deterministic sample pool, which makes
    the run a sound refutation but only a spot check of universals.
    """
    rng = random.Random(seed)
    violations = []
    pool, exhaustive = _element_pool(B, rng)
    units = [x for x in pool if not B.is_zero(x)]

    if B.is_zero(B.one):
        violations.append("zero equals one")
    if not B.is_null([]):
        violations.append("empty sum is not null")

    # group structure of the units
    for a in units:
        for b in units:
            ab = B.mul(a, b)
            if B.is_zero(ab):
                violations.append(
                    f"unit product hit zero: {B.format_element(a)}*{B.format_element(b)}"
                )
            if exhaustive and ab not in pool:
                violations.append(f"product left the carrier: {B.format_element(ab)}")
            if ab != B.mul(b, a):
                violations.append("multiplication is not commutative")
        if B.mul(B.one, a) != a:
            violations.append(f"1*{B.format_element(a)} != {B.format_element(a)}")
        try:
            if B.mul(B.inv(a), a) != B.one:
                violations.append(f"inverse failed for {B.format_element(a)}")
        except ZeroDivisionError:
            violations.append(f"no inverse for unit {B.format_element(a)}")
    triples = list(itertools.product(units, repeat=3))
    if len(triples) > 1000:
        triples = [tuple(rng.choice(units) for _ in range(3)) for _ in range(1000)]
    for a, b, c in triples:
        if B.mul(B.mul(a, b), c) != B.mul(a, B.mul(b, c)):
            violations.append("multiplication is not associative")
            break

    # distinguished weak inverse: exists, squares to one, unique when checkable
    eps = getattr(B, "epsilon", None)
    eps_ok = (
        eps is not None
        and B.contains(eps)
        and not B.is_zero(eps)
        and B.mul(eps, eps) == B.one
        and B.is_null([B.one, eps])
    )
    if not eps_ok:
        violations.append("no epsilon: no declared unit e with e*e = 1 and 1 + e null")
    else:
        for e in units:
            if e != eps and B.mul(e, e) == B.one and B.is_null([B.one, e]):
                violations.append(
                    f"epsilon is not unique: {B.format_element(e)} also works"
                )

    # properness: no nonzero singleton is null
    for a in units:
        if B.is_null([a]):
            violations.append(f"singleton {B.format_element(a)} is null")

    # ideal closure on sums up to max_len (unit scaling and additivity)
    null_sums = []
    for length in range(1, max_len + 1):
        for combo in itertools.combinations_with_replacement(units, length):
            if B.is_null(combo):
                null_sums.append(combo)
    if not exhaustive and len(null_sums) > 200:
        null_sums = null_sums[:200]
    for s in null_sums:
        for u in units:
            scaled = [B.mul(u, t) for t in s]
            if not B.is_null(scaled):
                violations.append(
                    f"null sum lost nullity under scaling by {B.format_element(u)}"
                )
                break
    for s in null_sums:
        for t in null_sums:
            if len(s) + len(t) > max_len + 2:
                continue
            if not B.is_null(list(s) + list(t)):
                violations.append("sum of two null sums is not null")
                break

    return violations
