"""Newton polygons and initial forms for polynomials with valued coefficients.

The polygon of f = sum c_i x^i is the lower convex hull of the support
points (i, v(c_i)). Its edge of slope -g collects exactly the indices where
v(c_i) + i*g is minimal, and the units sitting at those indices form the
initial form of f at level g: a polynomial over the base idyll that controls
root multiplicity at every root of level g.

For higher-rank value groups the hull picture is replaced by lexicographic
argmin, computed either in one step or coordinate by coordinate
(`initial_form_rounds`); both give the same index set.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .algebra import Idyll, OagIdyll, StructuralError, krasner
from .extension import ExtElement, ExtensionDescriptor, trop_extension
from .oag import (
    OagValue,
    format_rational,
    oag_add,
    oag_cmp,
    oag_project_head,
    oag_scale,
)
from .poly import Polynomial


@dataclass(frozen=True)
class Edge:
    """One segment of the lower hull; width is its horizontal span."""

    slope: Fraction
    start: tuple
    end: tuple

    @property
    def width(self) -> int:
        return self.end[0] - self.start[0]


@dataclass(frozen=True)
class NewtonPolygon:
    points: tuple
    vertices: tuple
    edges: tuple

    def edge_of_slope(self, slope) -> Edge:
        """The edge with the given slope; a width-0 vertex edge if absent.

        The degenerate case anchors at the unique hull point supporting a
        line of that slope from below.
        """
        slope = Fraction(slope)
        for e in self.edges:
            if e.slope == slope:
                return e
        best = min(self.points, key=lambda p: (p[1] - slope * p[0], p[0]))
        return Edge(slope, best, best)

    @property
    def edge_slopes(self) -> tuple:
        return tuple(e.slope for e in self.edges)

    def to_json(self) -> dict:
        return {
            "points": [[i, format_rational(v)] for i, v in self.points],
            "hull": [[i, format_rational(v)] for i, v in self.vertices],
            "edges": [
                {
                    "slope": format_rational(e.slope),
                    "width": e.width,
                    "start": [e.start[0], format_rational(e.start[1])],
                    "end": [e.end[0], format_rational(e.end[1])],
                }
                for e in self.edges
            ],
        }


def _as_extension_poly(f: Polynomial) -> Polynomial:
    """View a polynomial with pure-valuation coefficients as tropical."""
    B = f.idyll
    if isinstance(B, ExtensionDescriptor):
        return f
    if isinstance(B, OagIdyll):
        E = trop_extension(krasner(), B.rank)
        return Polynomial(
            E,
            [ExtElement() if B.is_zero(c) else ExtElement(1, c) for c in f.coeffs],
        )
    raise StructuralError(f"{B.name} carries no valuation levels")


def _cross(o, a, b) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def newton_polygon(f: Polynomial) -> NewtonPolygon:
    """Lower hull of the rank-1 support points of f. Exact arithmetic."""
    f = _as_extension_poly(f)
    E = f.idyll
    if E.rank != 1:
        raise StructuralError("newton polygon needs a rank-1 value group")
    if f.is_zero:
        raise StructuralError("the zero polynomial has no newton polygon")
    pts = tuple((i, f.coeffs[i].level.coords[0]) for i in f.support)
    hull = []
    for p in pts:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    edges = tuple(
        Edge(
            Fraction(b[1] - a[1], b[0] - a[0]),
            a,
            b,
        )
        for a, b in zip(hull, hull[1:])
    )
    return NewtonPolygon(pts, tuple(hull), edges)


# ---------------------------------------------------------------------------
# initial forms


def _level_of(E: ExtensionDescriptor, gamma) -> OagValue:
    if isinstance(gamma, OagValue):
        if gamma.is_infinite or gamma.rank != E.rank:
            raise StructuralError("level has the wrong rank")
        return gamma
    if isinstance(gamma, tuple):
        return OagValue(tuple(Fraction(c) for c in gamma))
    return OagValue((Fraction(gamma),))


def _argmin_levels(f: Polynomial, gamma: OagValue):
    """Indices minimizing v(c_i) + i*gamma, with the minimum itself."""
    best = None
    idx = []
    for i in f.support:
        val = oag_add(f.coeffs[i].level, oag_scale(gamma, i))
        c = -1 if best is None else oag_cmp(val, best)
        if c < 0:
            best = val
            idx = [i]
        elif c == 0:
            idx.append(i)
    return idx, best


def initial_form_split(f: Polynomial, gamma) -> tuple:
    """Initial form at level gamma: (base polynomial of units, min value).

    The returned polynomial keeps each minimal coefficient's unit at its
    original degree; no unit twist is applied, so roots of level gamma
    correspond to base roots at their own unit.
    """
    f = _as_extension_poly(f)
    E = f.idyll
    if f.is_zero:
        raise StructuralError("the zero polynomial has no initial form")
    gamma = _level_of(E, gamma)
    idx, g0 = _argmin_levels(f, gamma)
    base = E.base
    coeffs = [base.zero] * (max(idx) + 1)
    for i in idx:
        coeffs[i] = f.coeffs[i].unit
    return Polynomial(base, coeffs), g0


def initial_form_at(f: Polynomial, a: ExtElement) -> tuple:
    """Initial form at the level of a nonzero element a."""
    if a.is_zero:
        raise StructuralError("initial forms need a nonzero point")
    return initial_form_split(f, a.level)


def initial_form_rounds(f: Polynomial, gamma) -> list:
    """Head-coordinate initial forms, one value-group coordinate at a time.

    Round k keeps the indices minimizing the k-th coordinate of
    v(c_i) + i*gamma among the survivors and drops that coordinate from the
    remaining levels. The last round lands in the base idyll. The surviving
    index set equals the one-step lexicographic argmin.
    """
    f = _as_extension_poly(f)
    E = f.idyll
    if not E.is_split:
        raise StructuralError("projection rounds need a split extension")
    if f.is_zero:
        raise StructuralError("the zero polynomial has no initial form")
    gamma = _level_of(E, gamma)
    rounds = []
    while True:
        if E.rank == 1:
            P, _ = initial_form_split(f, gamma.coords[0])
            rounds.append(P)
            return rounds
        shifted = {
            i: oag_add(f.coeffs[i].level, oag_scale(gamma, i)) for i in f.support
        }
        heads = {i: v.coords[0] for i, v in shifted.items()}
        m = min(heads.values())
        idx = [i for i in f.support if heads[i] == m]
        E2 = trop_extension(E.base, E.rank - 1)
        coeffs = [E2.zero] * (max(idx) + 1)
        for i in idx:
            _, tail = oag_project_head(f.coeffs[i].level)
            coeffs[i] = ExtElement(f.coeffs[i].unit, tail)
        f = Polynomial(E2, coeffs)
        rounds.append(f)
        _, gamma = oag_project_head(gamma)
        E = E2


def initial_form_recursive(f: Polynomial, gamma) -> Polynomial:
    """The base-idyll polynomial reached after all projection rounds."""
    return initial_form_rounds(f, gamma)[-1]


# ---------------------------------------------------------------------------
# rendering


def _y_grid(values):
    # distinct y levels, top row first
    return sorted(set(values), reverse=True)


def render_polygon(polygon: NewtonPolygon, format: str = "ascii") -> str:
    if format == "json":
        return json.dumps(polygon.to_json(), indent=2)
    if format == "svg":
        return _render_svg(polygon)
    if format != "ascii":
        raise ValueError(f"unknown format {format!r}")
    return _render_ascii(polygon)


def _render_ascii(polygon: NewtonPolygon) -> str:
    pts = set(polygon.points)
    verts = set(polygon.vertices)
    ys = _y_grid([p[1] for p in polygon.points])
    max_i = max(p[0] for p in polygon.points)
    label_w = max(len(format_rational(y)) for y in ys)
    lines = []
    for y in ys:
        row = []
        for i in range(max_i + 1):
            if (i, y) in verts:
                row.append("*")
            elif (i, y) in pts:
                row.append("o")
            else:
                row.append(".")
        lines.append(f"{format_rational(y):>{label_w}} | " + " ".join(row))
    axis = " " * label_w + " +" + "-" * (2 * max_i + 2)
    ticks = " " * label_w + "   " + " ".join(str(i % 10) for i in range(max_i + 1))
    lines.append(axis)
    lines.append(ticks)
    for e in polygon.edges:
        lines.append(
            f"edge: slope {format_rational(e.slope)}, width {e.width}, "
            f"({e.start[0]}, {format_rational(e.start[1])}) -> "
            f"({e.end[0]}, {format_rational(e.end[1])})"
        )
    return "\n".join(lines)


def _render_svg(polygon: NewtonPolygon) -> str:
    xs = [p[0] for p in polygon.points]
    ys = [p[1] for p in polygon.points]
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(ys), max(ys)
    scale = 40
    pad = 20

    def sx(x):
        return pad + float(x - x_lo) * scale

    def sy(y):
        # svg y axis points down; flip so larger valuations sit higher
        return pad + float(y_hi - y) * scale

    w = sx(x_hi) + pad
    h = sy(y_lo) + pad
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {w:g} {h:g}">'
    ]
    hull = " ".join(f"{sx(i):g},{sy(v):g}" for i, v in polygon.vertices)
    parts.append(
        f'<polyline points="{hull}" fill="none" stroke="black" stroke-width="2"/>'
    )
    for i, v in polygon.points:
        r = 5 if (i, v) in set(polygon.vertices) else 3
        parts.append(f'<circle cx="{sx(i):g}" cy="{sy(v):g}" r="{r}" fill="black"/>')
        parts.append(
            f'<text x="{sx(i) + 6:g}" y="{sy(v) - 6:g}" font-size="12">'
            f"({i}, {format_rational(v)})</text>"
        )
    parts.append("</svg>")
    return "\n".join(parts)
