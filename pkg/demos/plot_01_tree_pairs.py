"""
Tree pairs and the group F
==========================

Elements of Thompson's group F are pairs of plane binary trees with the
same number of leaves.  This script builds a few, multiplies them and
checks the defining relations.
"""

from thompson_links.trees import (
    add_caret,
    generator,
    inverse,
    is_positive,
    multiply,
    parse_tree,
    reduce_pair,
    word_to_element,
)

# Trees are written with "." for a leaf and "(left,right)" for a caret.
t = parse_tree("((.,.),(.,.))")
print("tree", t, "has", t.leaf_count, "leaves")

# The generator x_0 has a left vine on top and a right vine below.
x0, x1, x2 = generator(0), generator(1), generator(2)
print("x0 =", x0)
print("x1 =", x1)

# Adding the same caret to both trees does not change the element;
# reduction finds and removes such opposing carets.
top, bottom = add_caret(x1.top, 2), add_caret(x1.bottom, 2)
print("inflated x1:", top, "/", bottom, "->", reduce_pair(top, bottom))

# With the product matching g.bottom against h.top, the relations read
# x_j x_i = x_i x_(j+1) for i < j.
print("x1 x0 == x0 x2:", multiply(x1, x0) == multiply(x0, x2))

# F+ is the monoid of positive words; its elements have right-vine bottoms.
g = word_to_element([(0, 1), (2, 1), (1, -1)])
print("x0 x2 x1^-1 =", g, "positive:", is_positive(g))
print("times x1:", multiply(g, x1), "positive:", is_positive(multiply(g, x1)))
print("x0^-1 positive:", is_positive(inverse(x0)))
