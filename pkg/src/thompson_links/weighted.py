"""Weighted rooted plane trees and the translations between tree families.

A vertex is addressed by its *path*: the tuple of child indices leading
to it from the root, so ``()`` is the root and ``(0, 2)`` is the third
child of the first child.

Text grammar: ``wtree := "(" integer { " " wtree } ")"``, e.g. ``"(-1 (-2))"``.
"""

from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass
from typing import Iterator, Sequence

Path = tuple[int, ...]


class WeightedSyntaxError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class MoveError(ValueError):
    """A rewrite move was applied where its pattern does not match."""


@dataclass(frozen=True)
class WeightedPlaneTree:
    weight: int
    children: tuple["WeightedPlaneTree", ...] = ()

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def __str__(self) -> str:
        return serialize_weighted(self)

    def __repr__(self) -> str:
        return f"WeightedPlaneTree({serialize_weighted(self)!r})"

    def __len__(self) -> int:
        return 1 + sum(len(c) for c in self.children)

    def at(self, path: Path) -> "WeightedPlaneTree":
        node = self
        for i in path:
            node = node.children[i]
        return node

    def replace(self, path: Path, new: "WeightedPlaneTree") -> "WeightedPlaneTree":
        if not path:
            return new
        i, rest = path[0], path[1:]
        kids = list(self.children)
        kids[i] = kids[i].replace(rest, new)
        return WeightedPlaneTree(self.weight, tuple(kids))

    def with_weight(self, weight: int) -> "WeightedPlaneTree":
        return WeightedPlaneTree(weight, self.children)

    def with_children(self, children: Sequence["WeightedPlaneTree"]) -> "WeightedPlaneTree":
        return WeightedPlaneTree(self.weight, tuple(children))

    def paths(self) -> Iterator[Path]:
        """All vertex paths in preorder."""
        yield ()
        for i, c in enumerate(self.children):
            for p in c.paths():
                yield (i,) + p

    def edges(self) -> Iterator[tuple[Path, Path]]:
        for p in self.paths():
            for i in range(len(self.at(p).children)):
                yield p, p + (i,)

    def degree(self, path: Path) -> int:
        return len(self.at(path).children) + (1 if path else 0)

    def weights(self) -> list[int]:
        return [self.at(p).weight for p in self.paths()]

    def negate(self) -> "WeightedPlaneTree":
        return WeightedPlaneTree(-self.weight, tuple(c.negate() for c in self.children))

    def to_nested(self) -> list:
        return [self.weight, [c.to_nested() for c in self.children]]

    @classmethod
    def from_nested(cls, data) -> "WeightedPlaneTree":
        weight, kids = data
        if isinstance(weight, bool) or not isinstance(weight, int):
            raise ValueError(f"weight must be an integer, got {weight!r}")
        return cls(weight, tuple(cls.from_nested(k) for k in kids))

    def to_json(self) -> str:
        return json.dumps({"weights": self.to_nested()})

    @classmethod
    def from_json(cls, text: str) -> "WeightedPlaneTree":
        return cls.from_nested(json.loads(text)["weights"])


def path_tree(weights: Sequence[int], below: Sequence["WeightedPlaneTree"] = ()) -> WeightedPlaneTree:
    """A single path, root first, with ``below`` hanging from its last vertex."""
    if not weights:
        raise ValueError("a path needs at least one vertex")
    node = WeightedPlaneTree(weights[-1], tuple(below))
    for w in reversed(weights[:-1]):
        node = WeightedPlaneTree(w, (node,))
    return node


_TOKEN = re.compile(r"\s*(\(|\)|-?\d+)")


def parse_weighted(text: str) -> WeightedPlaneTree:
    if not text.strip():
        raise WeightedSyntaxError("empty input", 0)
    tokens: list[tuple[str, int]] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            rest = text[pos:]
            if not rest.strip():
                break
            bad = pos + len(rest) - len(rest.lstrip())
            raise WeightedSyntaxError(f"unexpected character {text[bad]!r}", bad)
        tokens.append((m.group(1), m.start(1)))
        pos = m.end()
    idx = 0

    def node() -> WeightedPlaneTree:
        nonlocal idx
        if idx >= len(tokens) or tokens[idx][0] != "(":
            raise WeightedSyntaxError("expected '('", tokens[idx][1] if idx < len(tokens) else len(text))
        idx += 1
        if idx >= len(tokens) or tokens[idx][0] in "()":
            raise WeightedSyntaxError("expected a weight", tokens[idx][1] if idx < len(tokens) else len(text))
        weight = int(tokens[idx][0])
        idx += 1
        kids = []
        while idx < len(tokens) and tokens[idx][0] == "(":
            kids.append(node())
        if idx >= len(tokens) or tokens[idx][0] != ")":
            raise WeightedSyntaxError("expected ')'", tokens[idx][1] if idx < len(tokens) else len(text))
        idx += 1
        return WeightedPlaneTree(weight, tuple(kids))

    tree = node()
    if idx != len(tokens):
        raise WeightedSyntaxError("trailing input", tokens[idx][1])
    return tree


def serialize_weighted(t: WeightedPlaneTree) -> str:
    parts = [str(t.weight)] + [serialize_weighted(c) for c in t.children]
    return "(" + " ".join(parts) + ")"


def as_weighted(t: WeightedPlaneTree | str) -> WeightedPlaneTree:
    return parse_weighted(t) if isinstance(t, str) else t


# -- predicates ----------------------------------------------------------------


def is_bipartite(t: WeightedPlaneTree) -> bool:
    """Weights in {+1, -1}, alternating along edges, root and leaves -1, +1 vertices of degree 2."""
    if t.weight != -1:
        return False

    def ok(node: WeightedPlaneTree, has_parent: bool) -> bool:
        if node.weight not in (1, -1):
            return False
        if node.is_leaf and node.weight != -1:
            return False
        if node.weight == 1 and len(node.children) + has_parent != 2:
            return False
        return all(c.weight == -node.weight and ok(c, True) for c in node.children)

    return ok(t, False)


def is_thompson_weighted(t: WeightedPlaneTree) -> bool:
    """Two adjacent zeros, one of them the root; other weights +-1; +1 vertices of degree 2."""
    zeros = [p for p in t.paths() if t.at(p).weight == 0]
    if len(zeros) != 2 or () not in zeros or len([p for p in zeros if len(p) == 1]) != 1:
        return False
    for p in t.paths():
        w = t.at(p).weight
        if w not in (0, 1, -1):
            return False
        if w == 1 and t.degree(p) != 2:
            return False
    return True


# -- binary trees to weighted trees ------------------------------------------------


class _Node:
    __slots__ = ("weight", "children", "parent")

    def __init__(self, weight: int, parent: "_Node | None" = None):
        self.weight = weight
        self.children: list[_Node] = []
        self.parent = parent

    def freeze(self) -> WeightedPlaneTree:
        return WeightedPlaneTree(self.weight, tuple(c.freeze() for c in self.children))


def thompson_to_weighted(tree) -> WeightedPlaneTree:
    """Weighted tree of a positive element, built caret by caret.

    Every caret ``u`` of the binary tree owns a pair of vertices ``(p_u, m_u)``
    of weights ``(+1, -1)``, ``m_u`` hanging below ``p_u``; the root caret owns
    the two zeros, with the non-root zero playing ``m``.  Adding a caret below
    a leaf of ``u`` hangs a new pair
      * at ``m_u`` when the leaf is a left child,
      * at the vertex ``p_u`` hangs from when it is an inner right child,
      * at the root when it is the right-most leaf.
    New pairs are appended after existing children.  The zero-rooted result
    represents the Jones link under the *denominator* closure
    (:func:`thompson_links.diagram.denominator_link`).
    """
    from thompson_links.trees import as_tree

    tree = as_tree(tree)
    if tree.leaf_count < 2:
        raise ValueError("need at least two leaves")
    root = _Node(0)
    star = _Node(0, root)
    root.children.append(star)

    def hang(at: _Node) -> tuple[_Node, _Node]:
        p = _Node(1, at)
        m = _Node(-1, p)
        p.children.append(m)
        at.children.append(p)
        return p, m

    # caret history: preorder, each caret added below the leaf it replaces
    def grow(t, pair: tuple[_Node, _Node], spine: bool) -> None:
        p, m = pair
        if not t.left.is_leaf:
            grow(t.left, hang(m), False)
        if not t.right.is_leaf:
            at = root if spine else p.parent
            grow(t.right, hang(at), spine)

    grow(tree, (root, star), True)
    return root.freeze()


def weighted_to_thompson(t: WeightedPlaneTree):
    """Inverse of :func:`thompson_to_weighted`."""
    from thompson_links.trees import LEAF, PlaneBinaryTree

    if t.weight != 0 or not t.children or t.children[0].weight != 0:
        raise MoveError("not a two-zero Thompson tree")

    def pair_of(p: WeightedPlaneTree) -> WeightedPlaneTree:
        if p.weight != 1 or len(p.children) != 1 or p.children[0].weight != -1:
            raise MoveError(f"expected a (+1, -1) pair, got {p}")
        return p.children[0]

    def chain(pairs: Sequence[WeightedPlaneTree]) -> PlaneBinaryTree:
        # pairs hanging at one vertex: the first is a left child, each next one
        # the right child of the previous
        out = LEAF
        for p in reversed(pairs):
            m = pair_of(p)
            out = PlaneBinaryTree.node(chain(m.children), out)
        return out

    star = t.children[0]
    rest = t.children[1:]
    return PlaneBinaryTree.node(chain(star.children), chain(rest))


# -- rewrite moves ----------------------------------------------------------------

TAIL_CAP = path_tree([1, -1, 1, -1])  # a +1 leaf followed by a vanishing (-1, 1, -1) tail


def tail_paths(t: WeightedPlaneTree) -> list[Path]:
    """Paths of the removable tails: pendant paths ``(e, -e, e)`` with ``e = +-1``.

    The returned path points at the first vertex of the tail.
    """
    out = []
    for p in t.paths():
        if not p:
            continue
        a = t.at(p)
        if a.weight not in (1, -1) or len(a.children) != 1:
            continue
        b = a.children[0]
        if b.weight != -a.weight or len(b.children) != 1:
            continue
        c = b.children[0]
        if c.weight == a.weight and c.is_leaf:
            out.append(p)
    return out


def tail_reduce(t: WeightedPlaneTree, path: Path) -> WeightedPlaneTree:
    """Delete the pendant tail ``(e, -e, e)`` starting at ``path``."""
    t = as_weighted(t)
    if path not in tail_paths(t):
        raise MoveError(f"no (+-1, -+1, +-1) tail starts at {path}")
    parent = t.at(path[:-1])
    kids = parent.children[: path[-1]] + parent.children[path[-1] + 1 :]
    return t.replace(path[:-1], parent.with_children(kids))


def subdivide_edge(t: WeightedPlaneTree, child: Path, sign: int = -1, compensate: bool = True) -> WeightedPlaneTree:
    """Insert the path ``(sign, -sign, sign)`` into the edge above ``child``.

    On its own the insertion turns the lower subtree's fraction ``x`` into
    ``-x``, that is, it mirrors that part of the link.  With ``compensate``
    the lower subtree is negated as well, so the link is unchanged.
    """
    t = as_weighted(t)
    if not child:
        raise MoveError("the root has no edge above it")
    try:
        below = t.at(child)
    except IndexError:
        raise MoveError(f"no vertex at {child}") from None
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if compensate:
        below = below.negate()
    return t.replace(child, path_tree([sign, -sign, sign], [below]))


def expand_vertex(t: WeightedPlaneTree, path: Path) -> WeightedPlaneTree:
    """Trade a weight ``a >= 1`` for ``-1`` plus ``a + 1`` new +1 leaves.

    Every neighbour of the vertex must have weight +1.  The new leaves go
    *before* the existing children, right next to the vertex's own crossing,
    so that the crossings cancel by Reidemeister II moves.
    """
    t = as_weighted(t)
    v = t.at(path)
    a = v.weight
    if a < 1:
        raise MoveError(f"expand needs weight >= 1, got {a}")
    if path and t.at(path[:-1]).weight != 1:
        raise MoveError("parent must have weight +1")
    if any(c.weight != 1 for c in v.children):
        raise MoveError("children must have weight +1")
    leaves = tuple(WeightedPlaneTree(1) for _ in range(a + 1))
    return t.replace(path, WeightedPlaneTree(-1, leaves + v.children))


# a rational tangle of fraction -1 built from bipartite pieces: 1 + 1/(-1 + 1/(1 + 1/(-1 + 1 + 1)))
_MINUS_ONE = path_tree([1, -1, 1, -1], [WeightedPlaneTree(1), WeightedPlaneTree(1)])


def _negative_gadget(a: int, children: tuple[WeightedPlaneTree, ...]) -> WeightedPlaneTree:
    # -a = -1 + (a - 1) * (-1)
    return WeightedPlaneTree(-1, tuple(_MINUS_ONE for _ in range(a - 1)) + children)


def cap_positive_leaves(t: WeightedPlaneTree) -> WeightedPlaneTree:
    """Hang a vanishing ``(-1, 1, -1)`` tail below every +1 leaf."""
    if t.is_leaf:
        return TAIL_CAP if t.weight == 1 else t
    return t.with_children([cap_positive_leaves(c) for c in t.children])


def positive_to_bipartite(t) -> WeightedPlaneTree:
    """Bipartite tree with the same closure as a tree of positive weights.

    Every edge is subdivided by ``(1, -1, 1)`` with compensation, which leaves
    the original vertices with weights ``(-1)^depth * a``.  Positive ones are
    expanded; a negative ``-a`` becomes ``-1`` plus ``a - 1`` copies of a
    bipartite rational piece of fraction ``-1``.  Finally the +1 leaves get
    vanishing tails.  A single vertex ``(k)`` comes out as ``-1`` with
    ``k + 1`` capped +1 branches.
    """
    t = as_weighted(t)
    bad = [w for w in t.weights() if w < 1]
    if bad:
        raise ValueError(f"all weights must be >= 1, got {bad[0]}")

    def build(v: WeightedPlaneTree, depth: int) -> WeightedPlaneTree:
        kids = tuple(path_tree([1, -1, 1], [build(c, depth + 1)]) for c in v.children)
        if depth % 2 == 0:
            leaves = tuple(WeightedPlaneTree(1) for _ in range(v.weight + 1))
            return WeightedPlaneTree(-1, leaves + kids)
        return _negative_gadget(v.weight, kids)

    return cap_positive_leaves(build(t, 0))


# -- Thompson trees and bipartite trees -------------------------------------------------


def caret_graft(tree):
    """``T -> (((T, .), .), .)``: three carets stacked on the left, link unchanged."""
    from thompson_links.trees import LEAF, PlaneBinaryTree, as_tree

    out = as_tree(tree)
    for _ in range(3):
        out = PlaneBinaryTree.node(out, LEAF)
    return out


def thompson_to_bipartite(tree) -> WeightedPlaneTree:
    """Bipartite tree whose numerator closure is the Jones link of ``tree``.

    After the graft the weighted tree starts ``0, 0, +1, -1, ...`` with both
    zeros of degree at most 2; the subtree at that first ``-1`` is bipartite
    and closes to the same link.
    """
    t = thompson_to_weighted(caret_graft(tree))
    b = t.at((0, 0, 0))
    if len(t.children) != 1 or len(t.children[0].children) != 1 or not is_bipartite(b):
        raise AssertionError(f"unexpected shape after graft: {t}")
    return b


def bipartite_to_thompson(t):
    """A binary tree whose positive link is the closure of bipartite ``t``.

    The bipartite tree is extended upwards by ``+1, 0, 0`` and the caret rules
    are run backwards.
    """
    t = as_weighted(t)
    if not is_bipartite(t):
        raise ValueError(f"not bipartite: {t}")
    return weighted_to_thompson(path_tree([0, 0, 1], [t]))


# -- random trees for tests and demos --------------------------------------------------


def random_plane_tree(n: int, rng: random.Random) -> WeightedPlaneTree:
    """Shape of a random plane tree with ``n`` vertices, all weights 0."""
    if n < 1:
        raise ValueError("need at least one vertex")
    nodes = [_Node(0)]
    for _ in range(n - 1):
        parent = rng.choice(nodes)
        child = _Node(0, parent)
        parent.children.insert(rng.randint(0, len(parent.children)), child)
        nodes.append(child)
    return nodes[0].freeze()


def random_bipartite(max_vertices: int, rng: random.Random) -> WeightedPlaneTree:
    """Random bipartite tree with at most ``max_vertices`` vertices (odd sizes only)."""
    budget = rng.randint(0, (max_vertices - 1) // 2)
    root = _Node(-1)
    minus = [root]
    for _ in range(budget):
        at = rng.choice(minus)
        p = _Node(1, at)
        m = _Node(-1, p)
        p.children.append(m)
        at.children.insert(rng.randint(0, len(at.children)), p)
        minus.append(m)
    return root.freeze()


def random_positive(max_vertices: int, max_total: int, rng: random.Random) -> WeightedPlaneTree:
    """Random tree with weights >= 1 and total weight at most ``max_total``."""
    n = rng.randint(1, min(max_vertices, max_total))
    shape = random_plane_tree(n, rng)
    extra = rng.randint(0, max_total - n)
    weights = [1] * n
    for _ in range(extra):
        weights[rng.randrange(n)] += 1
    it = iter(weights)

    def fill(v: WeightedPlaneTree) -> WeightedPlaneTree:
        w = next(it)
        return WeightedPlaneTree(w, tuple(fill(c) for c in v.children))

    return fill(shape)
