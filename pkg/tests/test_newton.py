"""Lower hulls, initial forms, and the higher-rank recursion."""

import json
import random
import xml.etree.ElementTree as ET
from fractions import Fraction

import pytest

from idylls.algebra import StructuralError, krasner, oag_idyll, sign_idyll
from idylls.extension import signed_tropical, trop_extension, tropical
from idylls.newton import (
    initial_form_at,
    initial_form_recursive,
    initial_form_rounds,
    initial_form_split,
    newton_polygon,
    render_polygon,
)
from idylls.oag import INFINITY, oag, oag_add, oag_cmp, oag_scale
from idylls.poly import Polynomial

T = tropical()
TR = signed_tropical()
K = krasner()
S = sign_idyll()


def _trop(levels):
    E = T
    return Polynomial(E, [E.zero if v is None else E.elem(1, v) for v in levels])


QUINTIC = _trop([2, 1, 0, 0, 2, 1])


def test_quintic_hull_vertices_and_edges():
    p = newton_polygon(QUINTIC)
    assert [(i, v) for i, v in p.vertices] == [
        (0, Fraction(2)),
        (2, Fraction(0)),
        (3, Fraction(0)),
        (5, Fraction(1)),
    ]
    assert [e.slope for e in p.edges] == [Fraction(-1), Fraction(0), Fraction(1, 2)]
    assert [e.width for e in p.edges] == [2, 1, 2]


def test_edge_widths_cover_the_support_span():
    p = newton_polygon(QUINTIC)
    assert sum(e.width for e in p.edges) == 5


def test_slopes_strictly_increase():
    rng = random.Random(1)
    for _ in range(200):
        levels = [
            None if rng.random() < 0.3 else Fraction(rng.randrange(-4, 5), rng.choice([1, 2]))
            for _ in range(rng.randrange(1, 9))
        ]
        if all(v is None for v in levels):
            continue
        f = _trop(levels)
        p = newton_polygon(f)
        slopes = [e.slope for e in p.edges]
        assert slopes == sorted(slopes)
        assert len(set(slopes)) == len(slopes)
        assert sum(e.width for e in p.edges) == f.support[-1] - f.support[0]


def test_edge_of_slope_degenerates_to_a_vertex():
    p = newton_polygon(QUINTIC)
    e = p.edge_of_slope(Fraction(1, 4))
    assert e.width == 0
    assert e.start == e.end == (3, Fraction(0))


def test_initial_supports_of_the_quintic():
    assert initial_form_split(QUINTIC, 1)[0].support == (0, 1, 2)
    assert initial_form_split(QUINTIC, 0)[0].support == (2, 3)
    assert initial_form_split(QUINTIC, Fraction(-1, 2))[0].support == (3, 5)


def test_initial_form_returns_base_units_and_offset():
    f = Polynomial(TR, [TR.elem(1, 0), TR.elem(-1, 0), TR.elem(1, 1)])
    P0, off0 = initial_form_split(f, 0)
    assert P0.idyll is sign_idyll()
    assert P0.coeffs == (1, -1)
    assert off0 == oag(0)
    P1, off1 = initial_form_split(f, -1)
    assert P1.support == (1, 2)
    assert P1.coeffs[1:] == (-1, 1)
    assert off1 == oag(-1)


def test_initial_form_at_uses_the_root_level():
    f = Polynomial(TR, [TR.elem(1, 0), TR.elem(-1, 0), TR.elem(1, 1)])
    P, off = initial_form_at(f, TR.elem(1, -1))
    assert P.support == (1, 2)
    with pytest.raises(StructuralError):
        initial_form_at(f, TR.zero)


def test_hull_argmin_duality():
    """Points on the supporting line of slope -s are exactly the argmin of
    v(c_i) + i*s, for every edge slope and for probes between edges."""
    rng = random.Random(9)
    for _ in range(150):
        levels = [
            None if rng.random() < 0.25 else Fraction(rng.randrange(-5, 6), rng.choice([1, 2, 3]))
            for _ in range(rng.randrange(2, 9))
        ]
        if sum(v is not None for v in levels) < 1:
            continue
        f = _trop(levels)
        p = newton_polygon(f)
        probes = [-e.slope for e in p.edges]
        probes += [-(e.slope + Fraction(1, 7)) for e in p.edges]
        probes += [Fraction(3), Fraction(-3)]
        for s in probes:
            vals = {i: levels[i] + i * s for i in f.support}
            m = min(vals.values())
            argmin = {i for i, v in vals.items() if v == m}
            # geometric side: support points on the minimal supporting line
            line = {i for i in f.support if vals[i] == m}
            hull_min = min(v + i * s for i, v in p.points)
            geo = {i for i, v in p.points if v + i * s == hull_min}
            assert argmin == geo == line


def test_value_group_polynomials_get_unit_one():
    G = oag_idyll(1)
    f = Polynomial(G, [oag(2), oag(1), oag(0), oag(0)])
    p = newton_polygon(f)
    assert [e.slope for e in p.edges] == [Fraction(-1), Fraction(0)]
    assert [e.width for e in p.edges] == [2, 1]


def test_rank2_rounds_resolve_one_coordinate_at_a_time():
    T2 = tropical(2)
    f = Polynomial(
        T2,
        [
            T2.elem(1, (3, 3)),
            T2.elem(1, (2, 2)),
            T2.elem(1, (1, 1)),
            T2.elem(1, (0, 1)),
            T2.elem(1, (0, 0)),
        ],
    )
    rounds = initial_form_rounds(f, (1, 1))
    assert rounds[0].support == (0, 1, 2, 3)
    assert rounds[-1].support == (0, 1, 2)
    assert rounds[-1].idyll is krasner()


def test_rounds_agree_with_single_lex_argmin():
    rng = random.Random(21)
    for rank in (2, 3):
        E = tropical(rank)
        for _ in range(500):
            n = rng.randrange(1, 7)
            coeffs = []
            for i in range(n + 1):
                if rng.random() < 0.2 and i < n:
                    coeffs.append(E.zero)
                else:
                    lv = tuple(rng.randrange(-3, 4) for _ in range(rank))
                    coeffs.append(E.elem(1, lv))
            f = Polynomial(E, coeffs)
            if f.degree < 0:
                continue
            gamma = tuple(rng.randrange(-2, 3) for _ in range(rank))
            g = oag(*gamma)
            shifted = {
                i: oag_add(E.valuation(f.coeffs[i]), oag_scale(g, i))
                for i in f.support
            }
            best = min(shifted.values(), key=lambda v: v.coords)
            argmin = tuple(
                sorted(i for i, v in shifted.items() if oag_cmp(v, best) == 0)
            )
            final = initial_form_recursive(f, gamma)
            assert final.support == argmin
            rounds = initial_form_rounds(f, gamma)
            supports = [r.support for r in rounds]
            # each round refines the previous one
            for a, b in zip(supports, supports[1:]):
                assert set(b) <= set(a)
            assert supports[-1] == argmin


def test_rounds_reject_twisted_extensions():
    def sigma(g1, g2):
        return -1 if g1.coords[0] % 2 else 1

    E = trop_extension(sign_idyll(), 2, cocycle=sigma, name="twisted-2")
    f = Polynomial(E, [E.elem(1, (0, 0)), E.elem(1, (0, 0))])
    with pytest.raises(StructuralError):
        initial_form_rounds(f, (0, 0))


# -- rendering -------------------------------------------------------------------


def test_ascii_render_marks_vertices():
    art = render_polygon(newton_polygon(QUINTIC))
    assert "*" in art
    assert "slope -1" in art or "-1" in art


def test_svg_render_is_well_formed():
    svg = render_polygon(newton_polygon(QUINTIC), format="svg")
    root = ET.fromstring(svg)
    assert root.tag.endswith("svg")
    assert any(child.tag.endswith("polyline") for child in root)


def test_json_render_schema():
    blob = json.loads(render_polygon(newton_polygon(QUINTIC), format="json"))
    assert set(blob) == {"points", "hull", "edges"}
    assert blob["hull"][0] == [0, "2"]
    assert blob["edges"][0]["slope"] == "-1"
    assert blob["edges"][0]["width"] == 2


def test_unknown_render_format():
    with pytest.raises(ValueError):
        render_polygon(newton_polygon(QUINTIC), format="png")
