"""
Links from positive elements
============================

Each tree gives a tangle in the upper half plane; gluing it to the tangle
of the right vine in the lower half plane closes it into a link.  Here we
run a small census and look for the first knots that are not unknots.
"""

import os
from pathlib import Path

from thompson_links import diagram as dg
from thompson_links.cli import census
from thompson_links.invariants import invariant_report
from thompson_links.trees import full_binary_tree

out = Path(os.environ.get("DEMO_OUTPUT", Path(__file__).with_name("_output")))
out.mkdir(exist_ok=True)

# The caret closes up to two overlapping circles.
caret = dg.link_from_positive("(.,.)")
print("caret:", caret.crossing_count, "crossings,", invariant_report(caret).component_count, "components")

# Every tree with n leaves gives 2(n - 1) crossings.  In the census the
# diagrams are simplified first, so the invariant stays cheap.
for n in range(2, 8):
    rows = census(n)
    classes = {(k, str(norm)) for _, k, _, norm in rows}
    print(f"{n} leaves: {len(rows):3d} trees, {len(classes)} invariant classes")

# Full binary trees are a family of 2-component unlinks.
for depth in range(1, 5):
    d = dg.link_from_positive(full_binary_tree(depth))
    r = invariant_report(d)
    print(f"full tree, {2 ** depth:2d} leaves: {d.crossing_count:2d} crossings ->", set(map(str, r.normalized)))

# Small knots first show up at 8, 10 and 11 leaves.
knots = {
    "left trefoil": "(((.,.),((.,.),((.,.),.))),.)",
    "right trefoil": "(((.,.),(((.,.),((.,.),.)),.)),.)",
    "figure-eight": "((((.,.),((.,.),.)),((.,.),((.,.),.))),.)",
}
for name, tree in knots.items():
    d = dg.link_from_positive(tree)
    value, = invariant_report(d).normalized
    print(f"{name:15s} {d.crossing_count} crossings  V = {value}")

(out / "left_trefoil.svg").write_text(dg.to_svg(dg.link_from_positive(knots["left trefoil"])))
print("picture written to", out / "left_trefoil.svg")
