"""Hypothesis strategies and small fixtures shared by the test modules."""

import random

from hypothesis import strategies as st

from thompson_links.laurent import LaurentPolynomial
from thompson_links.trees import LEAF, PlaneBinaryTree, random_tree
from thompson_links.weighted import WeightedPlaneTree

LEFT_TREFOIL = LaurentPolynomial({16: -1, 12: 1, 4: 1})  # V(t) = 1/t + 1/t^3 - 1/t^4 at t = A^-4
RIGHT_TREFOIL = LEFT_TREFOIL.mirror()
FIGURE_EIGHT = LaurentPolynomial({8: 1, 4: -1, 0: 1, -4: -1, -8: 1})
UNLINK2 = LaurentPolynomial({2: -1, -2: -1})

polys = st.dictionaries(st.integers(-12, 12), st.integers(-5, 5), max_size=5).map(LaurentPolynomial)


def _binary(max_leaves):
    return st.recursive(
        st.just(LEAF),
        lambda inner: st.tuples(inner, inner).map(lambda p: PlaneBinaryTree.node(*p)),
        max_leaves=max_leaves,
    )


def binary_trees(min_leaves=1, max_leaves=12):
    return _binary(max_leaves).filter(lambda t: min_leaves <= t.leaf_count <= max_leaves)


def seeded_trees(lo, hi):
    """Trees grown from a drawn seed; handy when a size range must be hit exactly."""
    return st.tuples(st.integers(lo, hi), st.integers(0, 2**32)).map(
        lambda p: random_tree(p[0], random.Random(p[1]))
    )


def weighted_trees(weights=st.integers(-4, 4), max_leaves=8):
    return st.recursive(
        weights.map(WeightedPlaneTree),
        lambda inner: st.tuples(weights, st.lists(inner, min_size=1, max_size=3)).map(
            lambda p: WeightedPlaneTree(p[0], tuple(p[1]))
        ),
        max_leaves=max_leaves,
    )


# -- Reidemeister move pairs --------------------------------------------------

_KINKS = {0: lambda a, k, b: (k, k, a, b), 1: lambda a, k, b: (a, k, k, b),
          2: lambda a, k, b: (a, b, k, k), 3: lambda a, k, b: (k, a, b, k)}


def add_kink(d, label, joined_slot):
    """Put a curl on edge ``label``: a new crossing whose slots ``joined_slot`` and
    ``joined_slot + 1`` are joined by a small loop."""
    from thompson_links.diagram import LinkDiagram

    fresh = max(d.labels()) + 1
    k, b = fresh, fresh + 1
    crossings = [list(x) for x in d.crossings]
    # re-route the second end of the edge through the curl
    seen = 0
    for x in crossings:
        for s, v in enumerate(x):
            if v == label:
                seen += 1
                if seen == 2:
                    x[s] = b
    crossings.append(list(_KINKS[joined_slot](label, k, b)))
    return LinkDiagram(tuple(map(tuple, crossings)), (), d.free_loops)


def arborescent_with_bigon(tree, target):
    """Closure of ``tree`` with a cancelling +1/-1 pair added to the twist row at path ``target``."""
    from thompson_links import diagram as dg

    def build(v, path):
        out = dg.twist(v.weight)
        if path == target:
            out = dg.tangle_sum(out, dg.tangle_sum(dg.crossing_tangle(1), dg.crossing_tangle(-1)))
        for i, c in enumerate(v.children):
            out = dg.tangle_sum(out, dg.reflect(build(c, path + (i,))))
        return out

    return dg.close_numerator(build(tree, ()))
