import xml.etree.ElementTree as ET

import pytest
from hypothesis import given

from helpers import FIGURE_EIGHT, RIGHT_TREFOIL, LEFT_TREFOIL, UNLINK2, binary_trees, weighted_trees
from thompson_links import diagram as dg
from thompson_links.invariants import bracket, component_count, invariant_report
from thompson_links.laurent import LaurentPolynomial
from thompson_links.trees import full_binary_tree, parse_tree, right_vine


def normalized(d):
    return invariant_report(d).normalized


# -- Jones construction ---------------------------------------------------------


def test_half_tangle_boundary_points():
    t = dg.half_tangle("((.,.),.)")
    assert [float(p) for p in t.positions] == [0, 1, 1.5, 2, 2.5, 3]
    assert t.crossing_count == 2


def test_caret_gives_two_unlinked_circles():
    d = dg.link_from_positive("(.,.)")
    assert d.crossing_count == 2
    assert component_count(d) == 2
    assert set(normalized(d)) == {UNLINK2}


def test_x0_is_an_unknot():
    d = dg.link_from_positive("((.,.),.)")
    assert (d.crossing_count, component_count(d)) == (4, 1)
    assert normalized(d) == (LaurentPolynomial.constant(1),)


def test_pair_leaf_counts_must_agree():
    with pytest.raises(dg.DiagramError):
        dg.link_from_pair("(.,.)", "((.,.),.)")


@given(binary_trees(min_leaves=2, max_leaves=9))
def test_jones_diagrams_are_planar_with_2n_minus_2_crossings(t):
    d = dg.link_from_positive(t)
    d.validate()
    assert d.crossing_count == 2 * (t.leaf_count - 1)


def test_right_vine_gives_the_identity_unlink():
    n = 5
    d = dg.link_from_pair(right_vine(n), right_vine(n))
    assert component_count(d) == n


# -- arborescent tangles ------------------------------------------------------------


@pytest.mark.parametrize(
    "wtree, crossings, value",
    [
        ("(-3)", 3, RIGHT_TREFOIL),
        ("(3)", 3, LEFT_TREFOIL),
        ("(-1 (-2))", 3, LEFT_TREFOIL),
        ("(-2 (-2))", 4, FIGURE_EIGHT),
        ("(1)", 1, LaurentPolynomial.constant(1)),
    ],
)
def test_arborescent_fixtures(wtree, crossings, value):
    d = dg.arborescent_link(wtree)
    assert d.crossing_count == crossings
    assert normalized(d) == (value,)


def test_zero_tangle_closes_to_two_circles():
    d = dg.arborescent_link("(0)")
    assert d.crossing_count == 0 and d.free_loops == 2


def test_twist_counts_crossings():
    for w in range(-4, 5):
        assert dg.twist(w).crossing_count == abs(w)


@given(weighted_trees())
def test_arborescent_tangles_are_planar_boxes(t):
    tangle = dg.arborescent_tangle(t)
    assert tangle.positions == dg.BOX
    tangle.validate()
    assert tangle.crossing_count == sum(abs(w) for w in t.weights())


def test_reflect_is_an_involution():
    t = dg.arborescent_tangle("(2 (1) (-1))")
    twice = dg.reflect(dg.reflect(t))
    assert twice == t


def test_denominator_closure_of_integer_tangle_is_unknot():
    # n half twists in a row close vertically to a kinked unknot
    d = dg.close_denominator(dg.twist(3))
    assert component_count(d) == 1
    assert normalized(d) == (LaurentPolynomial.constant(1),)


# -- simplification ------------------------------------------------------------------


@pytest.mark.parametrize("depth", [1, 2, 3, 4])
def test_full_trees_simplify_to_two_circles(depth):
    d = dg.link_from_positive(full_binary_tree(depth))
    reduced, factor = dg.simplify(d)
    assert (reduced.crossing_count, reduced.free_loops) == (0, 2)
    if d.crossing_count <= 14:
        assert bracket(d) == factor * bracket(reduced)


@given(binary_trees(min_leaves=2, max_leaves=7))
def test_simplify_factor_is_a_framing_monomial(t):
    d = dg.link_from_positive(t)
    reduced, factor = dg.simplify(d)
    (e, c), = factor.terms.items()
    assert e % 3 == 0 and c == (-1) ** (e // 3)
    assert bracket(d) == factor * bracket(reduced)
    assert component_count(reduced) == component_count(d)


def test_simplify_rejects_tangles():
    with pytest.raises(dg.DiagramError):
        dg.simplify(dg.twist(2))


# -- codecs ----------------------------------------------------------------------------


def test_pd_text_for_the_trefoil():
    text = dg.to_pd(dg.arborescent_link("(-3)"))
    assert text.splitlines() == ["X[1,2,3,4]", "X[2,5,6,3]", "X[5,1,4,6]"]


@given(binary_trees(min_leaves=2, max_leaves=8))
def test_pd_round_trip_preserves_the_bracket(t):
    d = dg.link_from_positive(t)
    back = dg.parse_pd(dg.to_pd(d))
    assert back.crossing_count == d.crossing_count
    assert bracket(back) == bracket(d)


def test_pd_free_loops_and_wrapper():
    d = dg.parse_pd("PD[X[1,2,3,4], X[2,5,6,3], X[5,1,4,6], U[2]]")
    assert d.free_loops == 2
    assert dg.to_pd(dg.unknot(2)) == "U[2]\n"


@pytest.mark.parametrize("text", ["X[1,2,3]", "X[1,2,3,4]", "Y[1]", "X[a,b,c,d]", "U[-1]"])
def test_bad_pd_is_rejected(text):
    with pytest.raises(dg.DiagramError):
        dg.parse_pd(text)


def test_gauss_code_of_the_trefoil_alternates():
    code = dg.to_gauss(dg.arborescent_link("(-3)")).split()
    signs = [int(v) > 0 for v in code]
    assert len(code) == 6
    assert all(a != b for a, b in zip(signs, signs[1:]))


@given(binary_trees(min_leaves=1, max_leaves=8))
def test_json_round_trip(t):
    d = dg.link_from_positive(t)
    assert dg.from_json(dg.to_json(d)) == d


def test_json_round_trip_of_a_box_tangle():
    t = dg.arborescent_tangle("(-1 (2))")
    assert dg.from_json(dg.to_json(t)) == t


def test_export_rejects_unknown_format():
    with pytest.raises(ValueError):
        dg.export(dg.unknot(), "png")


@pytest.mark.parametrize("d", [
    dg.arborescent_link("(-3)"),
    dg.link_from_positive(full_binary_tree(3)),
    dg.unknot(2),
    dg.link_from_positive(parse_tree("((.,.),.)")),
])
def test_svg_is_well_formed(d):
    root = ET.fromstring(dg.to_svg(d))
    assert root.tag.endswith("svg")
    paths = [el for el in root.iter() if el.tag.endswith("path")]
    assert len(paths) >= d.crossing_count


def _arcs(tangle):
    """Pairs of boundary points joined by a strand (straight through every crossing)."""
    ends = {}
    for ci, x in enumerate(tangle.crossings):
        for s, label in enumerate(x):
            ends.setdefault(label, []).append((ci, s))
    where = {label: p for p, label in tangle.boundary}
    out = set()
    for start, label in tangle.boundary:
        prev = None
        while True:
            (ci, s), = [e for e in ends.get(label, []) if e != prev] or [(None, None)]
            if ci is None:
                break
            prev = (ci, (s + 2) % 4)
            label = tangle.crossings[ci][(s + 2) % 4]
            if label in where:
                break
        out.add(tuple(sorted((start, where[label]))))
    return out


def test_worked_half_tangle():
    from fractions import Fraction as Q

    t = dg.half_tangle("(.,((.,.),.))")
    assert t.crossing_count == 3
    assert _arcs(t) == {(0, Q(3, 2)), (1, Q(7, 2)), (2, 3), (Q(5, 2), 4)}


def test_caret_half_tangle():
    from fractions import Fraction as Q

    t = dg.half_tangle("(.,.)")
    assert _arcs(t) == {(0, Q(3, 2)), (1, 2)}
    # the leaf strand {1, 2} sits in the over slots
    (x,) = t.crossings
    assert {x[1], x[3]} == {t.boundary_label(Q(1)), t.boundary_label(Q(2))}


@given(binary_trees(min_leaves=1, max_leaves=6))
def test_a_pair_of_equal_trees_is_an_unlink(t):
    d = dg.link_from_pair(t, t)
    n = t.leaf_count
    assert component_count(d) == n
    assert set(normalized(d)) == {LaurentPolynomial({2: -1, -2: -1}) ** (n - 1)}
