"""
Arborescent tangles
===================

A weighted plane tree describes a tangle: each vertex is a row of twists,
and the tangles of its children are reflected and added on the right.  On
paths this is a continued fraction, so the closures are two-bridge links.
"""

from fractions import Fraction

from thompson_links import diagram as dg
from thompson_links.invariants import invariant_report, same_link_evidence
from thompson_links.weighted import parse_weighted


def fraction(t):
    return t.weight + sum(1 / fraction(c) for c in t.children) if t.children else Fraction(t.weight)


# Both trefoils from one- and two-vertex trees.
for text in ["(-3)", "(-1 (-2))", "(3)"]:
    t = parse_weighted(text)
    link = dg.arborescent_link(t)
    value, = invariant_report(link).normalized
    print(f"{text:12s} fraction {str(fraction(t)):5s} crossings {link.crossing_count}  V = {value}")

# The figure-eight knot is amphichiral: its value is symmetric under A <-> 1/A.
f8 = dg.arborescent_link("(-2 (-2))")
value, = invariant_report(f8).normalized
print("figure-eight:", value, "| symmetric:", value == value.mirror())

# Trees with equal fractions close to the same link.
print("(3) vs (-1 (-2)):", same_link_evidence(dg.arborescent_link("(3)"), dg.arborescent_link("(-1 (-2))")))
print("(3) vs (-3):     ", same_link_evidence(dg.arborescent_link("(3)"), dg.arborescent_link("(-3)")))

# Branching gives genuinely arborescent (Montesinos-like) links.
t = parse_weighted("(-1 (2) (3) (-2))")
r = invariant_report(dg.arborescent_link(t))
print(t, "->", r.component_count, "component(s),", r.crossing_count, "crossings")
print(dg.to_pd(dg.arborescent_link(t)), end="")
