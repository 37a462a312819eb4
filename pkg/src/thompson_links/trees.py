"""Plane binary trees and the Thompson group F as reduced tree pairs.

Trees are immutable.  Leaves are numbered ``1..n`` from left to right.

Composition convention
----------------------
A pair ``ThompsonElement(top, bottom)`` is read as the map sending the
subdivision encoded by ``bottom`` onto the one encoded by ``top``.
``multiply(g, h)`` matches ``g.bottom`` against ``h.top``, i.e.
``g * h = (g.top / T) * (T / h.bottom) = g.top / h.bottom``.  With this order
the defining relations read ``x_j * x_i == x_i * x_(j+1)`` for ``i < j``.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence


class TreeSyntaxError(ValueError):
    """Malformed tree text.  ``offset`` is the byte offset of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


@dataclass(frozen=True)
class PlaneBinaryTree:
    """A rooted plane binary tree: either a leaf or a node with two children."""

    children: tuple["PlaneBinaryTree", ...] = ()
    leaf_count: int = field(default=1, compare=False, repr=False)

    def __post_init__(self):
        if self.children:
            if len(self.children) != 2:
                raise ValueError("internal nodes need exactly two children")
            object.__setattr__(self, "leaf_count", self.children[0].leaf_count + self.children[1].leaf_count)
        else:
            object.__setattr__(self, "leaf_count", 1)

    @classmethod
    def node(cls, left: "PlaneBinaryTree", right: "PlaneBinaryTree") -> "PlaneBinaryTree":
        return cls((left, right))

    @property
    def is_leaf(self) -> bool:
        return not self.children

    @property
    def left(self) -> "PlaneBinaryTree":
        return self.children[0]

    @property
    def right(self) -> "PlaneBinaryTree":
        return self.children[1]

    def __str__(self) -> str:
        return serialize_tree(self)

    def __repr__(self) -> str:
        return f"PlaneBinaryTree({serialize_tree(self)!r})"


LEAF = PlaneBinaryTree()
CARET = PlaneBinaryTree.node(LEAF, LEAF)


def parse_tree(text: str) -> PlaneBinaryTree:
    """Parse the grammar ``tree := "." | "(" tree "," tree ")"``.

    Whitespace is not allowed; the grammar is byte-exact so that
    ``serialize_tree(parse_tree(s)) == s``.
    """
    pos = 0

    def walk() -> PlaneBinaryTree:
        nonlocal pos
        if pos >= len(text):
            raise TreeSyntaxError("unexpected end of input (unbalanced parentheses?)", pos)
        ch = text[pos]
        if ch == ".":
            pos += 1
            return LEAF
        if ch != "(":
            raise TreeSyntaxError(f"expected '.' or '(' but found {ch!r}", pos)
        pos += 1
        left = walk()
        if pos >= len(text) or text[pos] != ",":
            raise TreeSyntaxError("expected ','", pos)
        pos += 1
        right = walk()
        if pos >= len(text) or text[pos] != ")":
            raise TreeSyntaxError("expected ')' (unbalanced parentheses)", pos)
        pos += 1
        return PlaneBinaryTree.node(left, right)

    tree = walk()
    if pos != len(text):
        raise TreeSyntaxError("trailing characters", pos)
    return tree


def serialize_tree(tree: PlaneBinaryTree) -> str:
    if tree.is_leaf:
        return "."
    return f"({serialize_tree(tree.left)},{serialize_tree(tree.right)})"


def as_tree(tree: PlaneBinaryTree | str) -> PlaneBinaryTree:
    return parse_tree(tree) if isinstance(tree, str) else tree


def add_caret(tree: PlaneBinaryTree, leaf_index: int) -> PlaneBinaryTree:
    """Replace leaf ``leaf_index`` (1-based) by a caret."""
    if not 1 <= leaf_index <= tree.leaf_count:
        raise IndexError(f"leaf index {leaf_index} out of range 1..{tree.leaf_count}")
    if tree.is_leaf:
        return CARET
    nl = tree.left.leaf_count
    if leaf_index <= nl:
        return PlaneBinaryTree.node(add_caret(tree.left, leaf_index), tree.right)
    return PlaneBinaryTree.node(tree.left, add_caret(tree.right, leaf_index - nl))


def remove_caret(tree: PlaneBinaryTree, leaf_index: int) -> PlaneBinaryTree:
    """Collapse the caret on leaves ``leaf_index, leaf_index + 1`` into one leaf."""
    if tree.is_leaf:
        raise ValueError("no caret to remove")
    if tree.leaf_count == 2 and leaf_index == 1 and tree.left.is_leaf and tree.right.is_leaf:
        return LEAF
    nl = tree.left.leaf_count
    if leaf_index + 1 <= nl:
        return PlaneBinaryTree.node(remove_caret(tree.left, leaf_index), tree.right)
    if leaf_index > nl:
        return PlaneBinaryTree.node(tree.left, remove_caret(tree.right, leaf_index - nl))
    raise ValueError(f"leaves {leaf_index}, {leaf_index + 1} are not a caret")


def caret_positions(tree: PlaneBinaryTree) -> list[int]:
    """Indices ``i`` such that leaves ``i`` and ``i+1`` are siblings."""
    out: list[int] = []

    def walk(t: PlaneBinaryTree, offset: int) -> None:
        if t.is_leaf:
            return
        if t.left.is_leaf and t.right.is_leaf:
            out.append(offset + 1)
            return
        walk(t.left, offset)
        walk(t.right, offset + t.left.leaf_count)

    walk(tree, 0)
    return out


def right_vine(n: int) -> PlaneBinaryTree:
    """Tree with ``n`` leaves whose every left child is a leaf."""
    if n < 1:
        raise ValueError("a tree has at least one leaf")
    tree = LEAF
    for _ in range(n - 1):
        tree = PlaneBinaryTree.node(LEAF, tree)
    return tree


def left_vine(n: int) -> PlaneBinaryTree:
    if n < 1:
        raise ValueError("a tree has at least one leaf")
    tree = LEAF
    for _ in range(n - 1):
        tree = PlaneBinaryTree.node(tree, LEAF)
    return tree


def full_binary_tree(depth: int) -> PlaneBinaryTree:
    """Complete binary tree with ``2**depth`` leaves."""
    tree = LEAF
    for _ in range(depth):
        tree = PlaneBinaryTree.node(tree, tree)
    return tree


def is_right_vine(tree: PlaneBinaryTree) -> bool:
    while not tree.is_leaf:
        if not tree.left.is_leaf:
            return False
        tree = tree.right
    return True


@lru_cache(maxsize=None)
def _enumerate(n: int) -> tuple[PlaneBinaryTree, ...]:
    if n == 1:
        return (LEAF,)
    out = []
    for k in range(1, n):
        for left in _enumerate(k):
            for right in _enumerate(n - k):
                out.append(PlaneBinaryTree.node(left, right))
    return tuple(out)


def enumerate_trees(n: int) -> list[PlaneBinaryTree]:
    """All plane binary trees with ``n`` leaves, in a fixed deterministic order.

    The order is by size of the left subtree, then recursively.  There are
    ``Catalan(n - 1)`` of them.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    return list(_enumerate(n))


def random_tree(n: int, rng: random.Random) -> PlaneBinaryTree:
    """Random tree with ``n`` leaves grown by uniform caret additions."""
    tree = LEAF
    for _ in range(n - 1):
        tree = add_caret(tree, rng.randint(1, tree.leaf_count))
    return tree


# -- Thompson group --------------------------------------------------------


@dataclass(frozen=True)
class ThompsonElement:
    """An element of F stored as a pair of trees with equal leaf counts.

    Instances built through :func:`reduce_pair` (and every group operation
    here) are canonical: they share no opposing caret.
    """

    top: PlaneBinaryTree
    bottom: PlaneBinaryTree

    def __post_init__(self):
        if self.top.leaf_count != self.bottom.leaf_count:
            raise ValueError(
                f"leaf counts differ: {self.top.leaf_count} vs {self.bottom.leaf_count}"
            )

    @property
    def leaf_count(self) -> int:
        return self.top.leaf_count

    @property
    def is_canonical(self) -> bool:
        return not set(caret_positions(self.top)) & set(caret_positions(self.bottom))

    def __mul__(self, other: "ThompsonElement") -> "ThompsonElement":
        return multiply(self, other)

    def __invert__(self) -> "ThompsonElement":
        return inverse(self)

    def to_json(self) -> str:
        return json.dumps({"top": serialize_tree(self.top), "bottom": serialize_tree(self.bottom)})

    @classmethod
    def from_json(cls, text: str) -> "ThompsonElement":
        data = json.loads(text)
        return cls(parse_tree(data["top"]), parse_tree(data["bottom"]))

    def __str__(self) -> str:
        return f"{serialize_tree(self.top)} / {serialize_tree(self.bottom)}"


def common_carets(top: PlaneBinaryTree, bottom: PlaneBinaryTree) -> list[int]:
    return sorted(set(caret_positions(top)) & set(caret_positions(bottom)))


def reduce_pair(top: PlaneBinaryTree, bottom: PlaneBinaryTree, choose=None) -> ThompsonElement:
    """Delete opposing carets until none remain.

    ``choose`` picks which common caret to delete next (default: leftmost);
    it exists so tests can check that every deletion order gives the same
    result.
    """
    if top.leaf_count != bottom.leaf_count:
        raise ValueError(f"leaf counts differ: {top.leaf_count} vs {bottom.leaf_count}")
    while True:
        common = common_carets(top, bottom)
        if not common:
            return ThompsonElement(top, bottom)
        i = common[0] if choose is None else choose(common)
        top, bottom = remove_caret(top, i), remove_caret(bottom, i)


def identity() -> ThompsonElement:
    return ThompsonElement(LEAF, LEAF)


def _union(a: PlaneBinaryTree, b: PlaneBinaryTree) -> PlaneBinaryTree:
    # common refinement of the two dyadic subdivisions
    if a.is_leaf:
        return b
    if b.is_leaf:
        return a
    return PlaneBinaryTree.node(_union(a.left, b.left), _union(a.right, b.right))


def _pieces(coarse: PlaneBinaryTree, fine: PlaneBinaryTree) -> list[PlaneBinaryTree]:
    """Subtrees of ``fine`` hanging below each leaf of ``coarse``."""
    if coarse.is_leaf:
        return [fine]
    if fine.is_leaf:
        raise ValueError("fine tree does not refine coarse tree")
    return _pieces(coarse.left, fine.left) + _pieces(coarse.right, fine.right)


def _graft(tree: PlaneBinaryTree, pieces: Sequence[PlaneBinaryTree]) -> PlaneBinaryTree:
    it = iter(pieces)

    def walk(t: PlaneBinaryTree) -> PlaneBinaryTree:
        if t.is_leaf:
            return next(it)
        return PlaneBinaryTree.node(walk(t.left), walk(t.right))

    return walk(tree)


def expand_pair(top: PlaneBinaryTree, bottom: PlaneBinaryTree, new_bottom: PlaneBinaryTree):
    """Add opposing carets to ``(top, bottom)`` until the bottom is ``new_bottom``."""
    return _graft(top, _pieces(bottom, new_bottom)), new_bottom


def multiply(g: ThompsonElement, h: ThompsonElement) -> ThompsonElement:
    """Group product ``g * h`` (``g.bottom`` is matched with ``h.top``)."""
    middle = _union(g.bottom, h.top)
    top, _ = expand_pair(g.top, g.bottom, middle)
    bottom, _ = expand_pair(h.bottom, h.top, middle)
    return reduce_pair(top, bottom)


def inverse(g: ThompsonElement) -> ThompsonElement:
    return ThompsonElement(g.bottom, g.top)


def generator(i: int) -> ThompsonElement:
    """The standard generator ``x_i`` (``i + 3`` leaves, right-vine bottom)."""
    if i < 0:
        raise ValueError("generator index must be >= 0")
    top = add_caret(right_vine(i + 2), i + 1)
    return ThompsonElement(top, right_vine(i + 3))


def is_positive(g: ThompsonElement) -> bool:
    """Membership in the monoid F+ (reduced bottom tree is a right vine)."""
    g = reduce_pair(g.top, g.bottom)
    return is_right_vine(g.bottom)


def positive_element(top: PlaneBinaryTree) -> ThompsonElement:
    """The element ``top / right_vine`` of F+, reduced."""
    return reduce_pair(top, right_vine(top.leaf_count))


def word_to_element(word: Sequence[tuple[int, int]]) -> ThompsonElement:
    """Evaluate a word given as ``[(index, +1 | -1), ...]``."""
    g = identity()
    for i, e in word:
        x = generator(i)
        g = multiply(g, x if e > 0 else inverse(x))
    return g


def iter_words(alphabet: Sequence[tuple[int, int]], max_length: int) -> Iterator[tuple]:
    frontier: list[tuple] = [()]
    yield ()
    for _ in range(max_length):
        nxt = []
        for w in frontier:
            for letter in alphabet:
                nw = w + (letter,)
                nxt.append(nw)
                yield nw
        frontier = nxt
