"""
From trees to bipartite trees and back
======================================

Positive Thompson links are exactly the closures of bipartite trees:
weights alternate -1, +1 along edges, the root and leaves are -1, and
every +1 vertex has degree two.  This script runs both translations and
confirms the links agree on the bracket fingerprint.
"""

import random

from thompson_links import diagram as dg
from thompson_links.invariants import same_link_evidence
from thompson_links.trees import random_tree
from thompson_links.weighted import (
    bipartite_to_thompson,
    is_bipartite,
    positive_to_bipartite,
    random_bipartite,
    thompson_to_bipartite,
    thompson_to_weighted,
)

rng = random.Random(7)

# Growing a binary tree caret by caret grows a weighted tree alongside it.
tree = random_tree(6, rng)
print("binary tree:   ", tree)
print("weighted tree: ", thompson_to_weighted(tree))
b = thompson_to_bipartite(tree)
print("bipartite tree:", b, "| bipartite:", is_bipartite(b))
print("same link?", same_link_evidence(dg.link_from_positive(tree), dg.arborescent_link(b)))

# The reverse direction wraps the bipartite tree in a few extra vertices
# and reads off the carets.
b = random_bipartite(9, rng)
t = bipartite_to_thompson(b)
print()
print("bipartite tree:", b)
print("binary tree:   ", t)
print("same link?", same_link_evidence(dg.arborescent_link(b), dg.link_from_positive(t)))

# Any tree with positive weights can be rewritten into a bipartite one.
# Edges get (1, -1, 1) inserted, large weights are spread over new leaves,
# and dangling +1 leaves get vanishing caps.
print()
for text in ["(1)", "(3)", "(2 (1) (3))"]:
    b = positive_to_bipartite(text)
    verdict = same_link_evidence(dg.arborescent_link(text), dg.arborescent_link(b))
    print(f"{text:12s} -> {len(b):2d} vertices, {verdict}")
print("(2) becomes", positive_to_bipartite("(2)"))
