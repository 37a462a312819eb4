"""Planar diagram IR, Jones' tree-pair construction and arborescent tangles.

A diagram is a list of crossings plus boundary endpoints.  Each crossing
is a 4-tuple of edge labels listed counterclockwise, starting at an end of
the *under* strand, so slots 0/2 are the understrand and slots 1/3 the
overstrand (the usual ``X[a,b,c,d]`` planar-diagram convention).  Every
label occurs exactly twice among crossing slots and boundary points.
Crossingless closed components are kept as a count, ``free_loops``.

Box tangles use boundary positions ``"NW", "NE", "SE", "SW"`` (listed in
cyclic order).  Half-plane tangles from binary trees use points of the
x-axis, stored as :class:`fractions.Fraction`.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterable, Sequence

from thompson_links.trees import PlaneBinaryTree, as_tree, right_vine

Position = Hashable


class DiagramError(ValueError):
    pass


@dataclass(frozen=True)
class TangleDiagram:
    crossings: tuple[tuple[int, int, int, int], ...]
    boundary: tuple[tuple[Position, int], ...] = ()
    free_loops: int = 0

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def is_closed(self) -> bool:
        return not self.boundary

    def boundary_label(self, position: Position) -> int:
        for p, label in self.boundary:
            if p == position:
                return label
        raise KeyError(position)

    @property
    def positions(self) -> tuple[Position, ...]:
        return tuple(p for p, _ in self.boundary)

    def labels(self) -> set[int]:
        out = {label for x in self.crossings for label in x}
        out.update(label for _, label in self.boundary)
        return out

    def mirror(self) -> "TangleDiagram":
        """Swap over and under at every crossing."""
        return TangleDiagram(tuple(x[1:] + x[:1] for x in self.crossings), self.boundary, self.free_loops)

    def validate(self) -> None:
        """Check label multiplicities and the Euler formula of the embedding."""
        counts: dict[int, int] = {}
        for x in self.crossings:
            if len(x) != 4:
                raise DiagramError("crossings need four slots")
            for label in x:
                counts[label] = counts.get(label, 0) + 1
        for _, label in self.boundary:
            counts[label] = counts.get(label, 0) + 1
        bad = {k: v for k, v in counts.items() if v != 2}
        if bad:
            raise DiagramError(f"labels not used exactly twice: {bad}")
        if len({p for p, _ in self.boundary}) != len(self.boundary):
            raise DiagramError("duplicate boundary position")
        check_planar(self)

    def to_dict(self) -> dict:
        return {
            "crossings": [list(x) for x in self.crossings],
            "boundary": [[_position_to_json(p), label] for p, label in self.boundary],
            "free_loops": self.free_loops,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "TangleDiagram":
        boundary = tuple((_position_from_json(p), int(label)) for p, label in data.get("boundary", []))
        kind = LinkDiagram if not boundary else TangleDiagram
        return kind(
            tuple(tuple(int(v) for v in x) for x in data["crossings"]),
            boundary,
            int(data.get("free_loops", 0)),
        )


class LinkDiagram(TangleDiagram):
    """A closed diagram (no boundary points)."""

    def __post_init__(self):
        if self.boundary:
            raise DiagramError("a link diagram has no boundary points")


def _position_to_json(p):
    if isinstance(p, Fraction):
        return str(p)
    return p


def _position_from_json(p):
    if isinstance(p, str) and p in ("NW", "NE", "SE", "SW"):
        return p
    return Fraction(p)


def as_link(d: TangleDiagram) -> LinkDiagram:
    if isinstance(d, LinkDiagram):
        return d
    return LinkDiagram(d.crossings, d.boundary, d.free_loops)


def check_planar(d: TangleDiagram) -> None:
    """Euler check ``V - E + F = 2`` on every component of the 4-valent graph.

    Boundary points are capped off in adjacent pairs (boundary order is the
    cyclic order around the disk), which is planar iff the tangle is.
    """
    crossings = [list(x) for x in d.crossings]
    bpos = [label for _, label in d.boundary]
    if len(bpos) % 2:
        raise DiagramError("odd number of boundary points")
    # caps become 2-valent vertices so the face structure stays honest
    vertices = crossings + [[a, b] for a, b in zip(bpos[0::2], bpos[1::2])]
    ends: dict[int, list[tuple[int, int]]] = {}
    for v, slots in enumerate(vertices):
        for s, label in enumerate(slots):
            ends.setdefault(label, []).append((v, s))
    if any(len(e) != 2 for e in ends.values()):
        raise DiagramError("dangling edge end")

    def partner(dart):
        a, b = ends[vertices[dart[0]][dart[1]]]
        return b if a == dart else a

    seen: set[tuple[int, int]] = set()
    comp = list(range(len(vertices)))

    def find(x):
        while comp[x] != x:
            comp[x] = comp[comp[x]]
            x = comp[x]
        return x

    for a, b in ends.values():
        comp[find(a[0])] = find(b[0])
    faces: dict[int, int] = {}
    for v, slots in enumerate(vertices):
        for s in range(len(slots)):
            if (v, s) in seen:
                continue
            dart = (v, s)
            while dart not in seen:
                seen.add(dart)
                w, t = partner(dart)
                dart = (w, (t + 1) % len(vertices[w]))
            r = find(v)
            faces[r] = faces.get(r, 0) + 1
    verts: dict[int, int] = {}
    edges: dict[int, int] = {}
    for v, slots in enumerate(vertices):
        r = find(v)
        verts[r] = verts.get(r, 0) + 1
        edges[r] = edges.get(r, 0) + len(slots)
    for r in verts:
        if verts[r] - edges[r] // 2 + faces[r] != 2:
            raise DiagramError("diagram is not planar (Euler characteristic mismatch)")


# -- construction machinery -------------------------------------------------


class _Builder:
    """Mutable scratch space: crossings, boundary points, label unions."""

    def __init__(self):
        self.crossings: list[list[int]] = []
        self.boundary: dict[Position, int] = {}
        self.free_loops = 0
        self._parent: dict[int, int] = {}
        self._next = 0

    def label(self) -> int:
        self._next += 1
        self._parent[self._next] = self._next
        return self._next

    def find(self, x: int) -> int:
        while self._parent[x] != x:
            self._parent[x] = self._parent[self._parent[x]]
            x = self._parent[x]
        return x

    def add(self, d: TangleDiagram, rename=lambda p: p) -> None:
        table: dict[int, int] = {}

        def fresh(label: int) -> int:
            if label not in table:
                table[label] = self.label()
            return table[label]

        for x in d.crossings:
            self.crossings.append([fresh(label) for label in x])
        for p, label in d.boundary:
            q = rename(p)
            if q in self.boundary:
                raise DiagramError(f"boundary position {q!r} already used")
            self.boundary[q] = fresh(label)
        self.free_loops += d.free_loops

    def glue(self, p: Position, q: Position) -> None:
        a, b = self.find(self.boundary.pop(p)), self.find(self.boundary.pop(q))
        if a == b:
            # the arc joining p and q had no crossings: it closes into a loop
            self.free_loops += 1
        else:
            self._parent[b] = a

    def rename(self, mapping: dict) -> None:
        self.boundary = {mapping.get(p, p): label for p, label in self.boundary.items()}

    def finish(self, order: Sequence[Position] | None = None) -> TangleDiagram:
        """Freeze with dense labels ``1..m`` assigned in traversal order."""
        dense: dict[int, int] = {}

        def name(label: int) -> int:
            r = self.find(label)
            if r not in dense:
                dense[r] = len(dense) + 1
            return dense[r]

        crossings = tuple(tuple(name(label) for label in x) for x in self.crossings)
        keys = list(order) if order is not None else list(self.boundary)
        if set(keys) != set(self.boundary):
            raise DiagramError("boundary order does not match boundary points")
        boundary = tuple((p, name(self.boundary[p])) for p in keys)
        cls = LinkDiagram if not boundary else TangleDiagram
        return cls(crossings, boundary, self.free_loops)


def relabel(d: TangleDiagram) -> TangleDiagram:
    b = _Builder()
    b.add(d)
    return b.finish([p for p, _ in d.boundary])


def disjoint_union(*diagrams: TangleDiagram) -> LinkDiagram:
    b = _Builder()
    for d in diagrams:
        if not d.is_closed:
            raise DiagramError("disjoint union is only defined for closed diagrams")
        b.add(d)
    return b.finish()


def unknot(loops: int = 1) -> LinkDiagram:
    return LinkDiagram((), (), loops)


# -- Jones construction ------------------------------------------------------


def _half_int(k: int) -> Fraction:
    return Fraction(2 * k + 1, 2)


def axis_points(n: int) -> list[Fraction]:
    """Boundary points of a half-plane tangle with ``n`` leaves: 0, 1, 3/2, ..., n."""
    pts = [Fraction(0)]
    for k in range(1, n + 1):
        pts.append(Fraction(k))
        if k < n:
            pts.append(_half_int(k))
    return pts


def half_tangle(tree: PlaneBinaryTree | str, side: str = "upper") -> TangleDiagram:
    """The tangle of one tree of a pair, sitting in the upper or lower half-plane.

    Leaves sit at ``1..n``.  Every internal vertex ``v`` sends an extra edge
    to the axis at the half-integer between its left and right subtrees and
    becomes a crossing; the strand {parent edge, extra edge} passes under the
    strand {left edge, right edge}.  The root edge reaches the axis at 0.
    The lower tangle is the reflection of this picture in the axis with the
    same strands passing under.
    """
    tree = as_tree(tree)
    if side not in ("upper", "lower"):
        raise ValueError("side must be 'upper' or 'lower'")
    b = _Builder()
    leaf_no = 0

    def walk(t: PlaneBinaryTree, parent_edge: int) -> None:
        nonlocal leaf_no
        if t.is_leaf:
            leaf_no += 1
            b.boundary[Fraction(leaf_no)] = parent_edge
            return
        left, right, drop = b.label(), b.label(), b.label()
        walk(t.left, left)
        b.boundary[Fraction(2 * leaf_no + 1, 2)] = drop
        walk(t.right, right)
        if side == "upper":
            # counterclockwise: parent (N), left (SW), drop (S), right (SE)
            b.crossings.append([parent_edge, left, drop, right])
        else:
            # counterclockwise: parent (S), right (NE), drop (N), left (NW)
            b.crossings.append([parent_edge, right, drop, left])

    stem = b.label()
    b.boundary[Fraction(0)] = stem
    walk(tree, stem)
    return b.finish(axis_points(tree.leaf_count))


def glue_halves(upper: TangleDiagram, lower: TangleDiagram) -> LinkDiagram:
    if sorted(upper.positions) != sorted(lower.positions):
        raise DiagramError("half tangles have different boundary points")
    b = _Builder()
    b.add(upper, lambda p: ("u", p))
    b.add(lower, lambda p: ("l", p))
    for p in upper.positions:
        b.glue(("u", p), ("l", p))
    return b.finish()


def link_from_pair(top: PlaneBinaryTree | str, bottom: PlaneBinaryTree | str) -> LinkDiagram:
    top, bottom = as_tree(top), as_tree(bottom)
    if top.leaf_count != bottom.leaf_count:
        raise DiagramError(f"leaf counts differ: {top.leaf_count} vs {bottom.leaf_count}")
    return glue_halves(half_tangle(top, "upper"), half_tangle(bottom, "lower"))


def link_from_positive(tree: PlaneBinaryTree | str) -> LinkDiagram:
    """Jones' link of the positive element ``tree / right_vine``."""
    tree = as_tree(tree)
    return link_from_pair(tree, right_vine(tree.leaf_count))


# -- arborescent tangles -------------------------------------------------------

BOX = ("NW", "NE", "SE", "SW")


def _box(crossings, corners: dict[str, int], free_loops: int = 0) -> TangleDiagram:
    return TangleDiagram(tuple(tuple(x) for x in crossings), tuple((p, corners[p]) for p in BOX), free_loops)


def zero_tangle() -> TangleDiagram:
    """Two horizontal arcs, NW-NE and SW-SE."""
    return _box((), {"NW": 1, "NE": 1, "SW": 2, "SE": 2})


def infinity_tangle() -> TangleDiagram:
    """Two vertical arcs, NW-SW and NE-SE."""
    return _box((), {"NW": 1, "SW": 1, "NE": 2, "SE": 2})


def crossing_tangle(sign: int) -> TangleDiagram:
    """One crossing; for ``sign=+1`` the SW-NE strand is on top."""
    nw, ne, se, sw = 1, 2, 3, 4
    if sign > 0:
        x = (nw, sw, se, ne)
    elif sign < 0:
        x = (sw, se, ne, nw)
    else:
        raise ValueError("sign must be nonzero")
    return _box((x,), {"NW": nw, "NE": ne, "SE": se, "SW": sw})


def tangle_sum(a: TangleDiagram, b: TangleDiagram) -> TangleDiagram:
    """Place ``b`` to the right of ``a``."""
    bld = _Builder()
    bld.add(a, lambda p: ("a", p))
    bld.add(b, lambda p: ("b", p))
    bld.glue(("a", "NE"), ("b", "NW"))
    bld.glue(("a", "SE"), ("b", "SW"))
    bld.rename({("a", "NW"): "NW", ("a", "SW"): "SW", ("b", "NE"): "NE", ("b", "SE"): "SE"})
    return bld.finish(BOX)


def reflect(t: TangleDiagram) -> TangleDiagram:
    """Reflect in the SW-NE diagonal, which inverts the rational fraction."""
    swap = {"NW": "SE", "SE": "NW", "NE": "NE", "SW": "SW"}
    crossings = tuple((x[0], x[3], x[2], x[1]) for x in t.crossings)
    corners = {swap[p]: label for p, label in t.boundary}
    return _box(crossings, corners, t.free_loops)


def twist(w: int) -> TangleDiagram:
    """A row of ``|w|`` crossings of sign ``w``; ``twist(0)`` is the zero tangle."""
    out = zero_tangle()
    for _ in range(abs(w)):
        out = tangle_sum(out, crossing_tangle(1 if w > 0 else -1))
    return out


def arborescent_tangle(tree) -> TangleDiagram:
    """Tangle of a weighted plane tree.

    A vertex of weight ``w`` is a row of ``|w|`` crossings followed, left to
    right, by its children's tangles reflected across the diagonal.  On
    rational tangles this is the continued fraction ``w + sum(1/child)``.
    """
    from thompson_links.weighted import as_weighted

    tree = as_weighted(tree)
    out = twist(tree.weight)
    for child in tree.children:
        out = tangle_sum(out, reflect(arborescent_tangle(child)))
    return out


def close_numerator(t: TangleDiagram) -> LinkDiagram:
    """Join NW to NE and SW to SE; a row of three crossings closes to a trefoil."""
    if sorted(map(str, t.positions)) != sorted(BOX):
        raise DiagramError("numerator closure needs exactly the four box corners")
    bld = _Builder()
    bld.add(t)
    bld.glue("NW", "NE")
    bld.glue("SW", "SE")
    return bld.finish()


def close_denominator(t: TangleDiagram) -> LinkDiagram:
    """Join NW to SW and NE to SE."""
    return close_numerator(reflect(t))


def arborescent_link(tree) -> LinkDiagram:
    return close_numerator(arborescent_tangle(tree))


def denominator_link(tree) -> LinkDiagram:
    return close_denominator(arborescent_tangle(tree))


# -- Reidemeister I / II simplification ----------------------------------------------


def _excise(crossings: list[tuple[int, ...]], free_loops: int, remove: set[int]):
    """Drop crossings, letting both strands of each pass straight through."""
    parent: dict[int, int] = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in remove:
        a, b, c, d = crossings[i]
        parent[find(a)] = find(c)
        parent[find(b)] = find(d)
    kept = [x for i, x in enumerate(crossings) if i not in remove]
    used = {find(label) for x in kept for label in x}
    touched = {find(label) for i in remove for label in crossings[i]}
    free_loops += len(touched - used)
    # merge each class onto one label; every class met by kept crossings has exactly two ends there
    return [tuple(find(label) for label in x) for x in kept], free_loops


def _find_kink(crossings) -> tuple[int, int] | None:
    for ci, x in enumerate(crossings):
        for i in range(4):
            if x[i] == x[(i + 1) % 4]:
                return ci, i
    return None


def _find_bigon(crossings) -> tuple[int, int] | None:
    ends: dict[int, list[tuple[int, int]]] = {}
    for ci, x in enumerate(crossings):
        for s, label in enumerate(x):
            ends.setdefault(label, []).append((ci, s))

    def partner(ci, s):
        a, b = ends[crossings[ci][s]]
        return b if a == (ci, s) else a

    for ci in range(len(crossings)):
        for s in range(4):
            cj, t = partner(ci, s)
            if cj == ci:
                continue
            # walk the face: (ci, s) -> (cj, t), turn to (cj, t+1), back to ci?
            ck, u = partner(cj, (t + 1) % 4)
            if ck == ci and (u + 1) % 4 == s and s % 2 == t % 2:
                return ci, cj
    return None


def simplify(d: TangleDiagram) -> tuple[TangleDiagram, "LaurentPolynomial"]:
    """Greedy Reidemeister I/II fixpoint.

    Returns ``(reduced, factor)`` with ``bracket(d) == factor * bracket(reduced)``.
    A kink between slots ``i, i+1`` contributes ``-A^3`` for even ``i`` and
    ``-A^-3`` for odd ``i``; bigons whose strands are over resp. under at both
    corners are removed with factor 1.
    """
    from thompson_links.laurent import ONE, LaurentPolynomial

    if not d.is_closed:
        raise DiagramError("simplify works on closed diagrams")
    crossings = [tuple(x) for x in d.crossings]
    loops = d.free_loops
    factor = ONE
    while True:
        kink = _find_kink(crossings)
        if kink is not None:
            ci, i = kink
            factor = factor * LaurentPolynomial.monomial(3 if i % 2 == 0 else -3, -1)
            crossings, loops = _excise(crossings, loops, {ci})
            continue
        bigon = _find_bigon(crossings)
        if bigon is not None:
            crossings, loops = _excise(crossings, loops, set(bigon))
            continue
        break
    return relabel(LinkDiagram(tuple(crossings), (), loops)), factor


# -- export ------------------------------------------------------------------------------


def _incoming_under(d: TangleDiagram) -> list[tuple[int, int, int, int]]:
    from thompson_links.invariants import orientation

    entered, _ = orientation(d)
    out = []
    for ci, x in enumerate(d.crossings):
        out.append(x if entered[(ci, 0)] else x[2:] + x[:2])
    return out


def to_pd(d: TangleDiagram) -> str:
    """``X[a,b,c,d]`` lines, starting at the incoming understrand; ``U[k]`` for ``k`` free loops."""
    if not d.is_closed:
        raise DiagramError("pd export needs a closed diagram")
    lines = [f"X[{a},{b},{c},{e}]" for a, b, c, e in _incoming_under(d)]
    if d.free_loops:
        lines.append(f"U[{d.free_loops}]")
    return "\n".join(lines) + "\n"


_PD_ITEM = re.compile(r"([XU])\[([^\]]*)\]")


def parse_pd(text: str) -> LinkDiagram:
    """Inverse of :func:`to_pd`; also accepts a ``PD[...]`` wrapper and commas between items."""
    crossings = []
    loops = 0
    stripped = _PD_ITEM.sub("", text)
    leftover = re.sub(r"PD\[|\]|,|\s", "", stripped)
    if leftover:
        raise DiagramError(f"unrecognised pd text: {leftover[:20]!r}")
    for kind, body in _PD_ITEM.findall(text):
        values = [v.strip() for v in body.split(",") if v.strip()]
        try:
            nums = [int(v) for v in values]
        except ValueError:
            raise DiagramError(f"non-integer label in {kind}[{body}]") from None
        if kind == "X":
            if len(nums) != 4:
                raise DiagramError(f"X needs four labels, got {body!r}")
            crossings.append(tuple(nums))
        else:
            if len(nums) != 1 or nums[0] < 0:
                raise DiagramError(f"bad loop count {body!r}")
            loops += nums[0]
    d = LinkDiagram(tuple(crossings), (), loops)
    d.validate()
    return d


def to_gauss(d: TangleDiagram) -> str:
    """One line per component: crossing numbers (1-based), negative when passing under."""
    from thompson_links.invariants import walk_components

    if not d.is_closed:
        raise DiagramError("gauss code needs a closed diagram")
    lines = []
    for walk in walk_components(d):
        lines.append(" ".join(str(ci + 1 if s % 2 else -(ci + 1)) for ci, s in walk))
    lines.extend("()" for _ in range(d.free_loops))
    return "\n".join(lines) + "\n"


def to_json(d: TangleDiagram) -> str:
    return json.dumps(d.to_dict(), sort_keys=True)


def from_json(text: str) -> TangleDiagram:
    return TangleDiagram.from_dict(json.loads(text))


def export(d: TangleDiagram, fmt: str) -> str:
    if fmt == "pd":
        return to_pd(d)
    if fmt == "gauss":
        return to_gauss(d)
    if fmt == "json":
        return to_json(d) + "\n"
    if fmt == "svg":
        return to_svg(d)
    raise ValueError(f"unsupported format {fmt!r}")


# -- svg -----------------------------------------------------------------------------


def _layout(d: TangleDiagram) -> tuple[dict, dict, dict]:
    """Straight-line planar layout of the 4-valent graph, every edge subdivided twice.

    Returns positions and, per label, the two subdivision nodes ordered to
    match the label's two ends.
    """
    import networkx as nx

    ends: dict[int, list[tuple[int, int]]] = {}
    for ci, x in enumerate(d.crossings):
        for s, label in enumerate(x):
            ends.setdefault(label, []).append((ci, s))
    emb = nx.PlanarEmbedding()
    near: dict[tuple[int, int], tuple] = {}
    mids: dict[int, tuple] = {}
    for label in sorted(ends):
        (c1, s1), (c2, s2) = ends[label]
        e0, e1 = ("e", label, 0), ("e", label, 1)
        near[(c1, s1)] = e0
        near[(c2, s2)] = e1
        mids[label] = (e0, e1)
        emb.add_half_edge(e0, ("x", c1))
        emb.add_half_edge(e0, e1, cw=("x", c1))
        emb.add_half_edge(e1, e0)
        emb.add_half_edge(e1, ("x", c2), cw=e0)
    for ci in range(len(d.crossings)):
        prev = None
        for s in range(4):
            # counterclockwise slot order
            emb.add_half_edge(("x", ci), near[(ci, s)], **({} if prev is None else {"cw": prev}))
            prev = near[(ci, s)]
    emb.check_structure()
    pos: dict = {}
    offset = 0.0
    for comp in sorted(nx.connected_components(emb.to_undirected()), key=lambda c: min(str(v) for v in c)):
        raw = _tutte(emb, comp)
        # the drawing may come out reflected; make slot order counterclockwise
        ci = min(v[1] for v in comp if v[0] == "x")
        cx, cy = raw[("x", ci)]
        angles = [math.atan2(raw[near[(ci, s)]][1] - cy, raw[near[(ci, s)]][0] - cx) for s in range(4)]
        turn = sum((angles[(s + 1) % 4] - angles[s]) % (2 * math.pi) for s in range(4))
        flip = turn > 2 * math.pi + 1e-9
        xs = [p[0] for p in raw.values()]
        for v, (x, y) in raw.items():
            pos[v] = (offset + (max(xs) - x if flip else x - min(xs)), y)
        offset += max(xs) - min(xs) + 1
    return pos, mids, near


def _tutte(emb, comp, sweeps: int = 400) -> dict:
    """Barycentric embedding: longest face on a circle, the rest relaxed to neighbour means."""
    seen = set()
    outer: list = []
    for v in sorted(comp, key=str):
        for w in sorted(emb.neighbors(v), key=str):
            if (v, w) in seen:
                continue
            face = emb.traverse_face(v, w, mark_half_edges=seen)
            if len(face) > len(outer):
                outer = face
    radius = max(2.0, len(outer) / 4)
    pos = {v: (0.0, 0.0) for v in comp}
    for k, v in enumerate(outer):
        a = 2 * math.pi * k / len(outer)
        pos[v] = (radius * (1 + math.cos(a)), radius * (1 + math.sin(a)))
    fixed = set(outer)
    inner = sorted((v for v in comp if v not in fixed), key=str)
    for v in inner:
        pos[v] = (radius, radius)
    for _ in range(sweeps):
        for v in inner:
            nbrs = list(emb.neighbors(v))
            pos[v] = (sum(pos[w][0] for w in nbrs) / len(nbrs), sum(pos[w][1] for w in nbrs) / len(nbrs))
    return pos


def to_svg(d: TangleDiagram, scale: float = 36.0) -> str:
    """Static SVG 1.1: arcs as cubic curves, overstrands drawn with a halo gap."""
    if not d.is_closed:
        raise DiagramError("svg export needs a closed diagram")
    pos, mids, near = _layout(d) if d.crossings else ({}, {}, {})
    loops_x = (max(p[0] for p in pos.values()) + 1) if pos else 0
    width = (loops_x + 2 * d.free_loops + 1) * scale
    height = (max((p[1] for p in pos.values()), default=1) + 2) * scale

    def pt(v) -> tuple[float, float]:
        x, y = pos[v]
        return ((x + 1) * scale, height - (y + 1) * scale)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.0f}" height="{height:.0f}">',
        '<g fill="none" stroke="black" stroke-width="2.5" stroke-linecap="round">',
    ]
    ends: dict[int, list[int]] = {}
    for ci, x in enumerate(d.crossings):
        for label in x:
            ends.setdefault(label, []).append(ci)
    for label in sorted(mids):
        e0, e1 = mids[label]
        c1, c2 = ends[label]
        p0, p1, p2, p3 = pt(("x", c1)), pt(e0), pt(e1), pt(("x", c2))
        out.append(
            f'<path d="M {p0[0]:.1f} {p0[1]:.1f} C {p1[0]:.1f} {p1[1]:.1f} '
            f'{p2[0]:.1f} {p2[1]:.1f} {p3[0]:.1f} {p3[1]:.1f}"/>'
        )
    r = 0.3 * scale
    for ci in range(len(d.crossings)):
        cx, cy = pt(("x", ci))
        seg = []
        for s in (1, 3):
            nx_, ny_ = pt(near[(ci, s)])
            length = math.hypot(nx_ - cx, ny_ - cy) or 1.0
            seg.append((cx + r * (nx_ - cx) / length, cy + r * (ny_ - cy) / length))
        (ax, ay), (bx, by) = seg
        line = f'M {ax:.1f} {ay:.1f} L {cx:.1f} {cy:.1f} L {bx:.1f} {by:.1f}'
        out.append(f'<path d="{line}" stroke="white" stroke-width="9"/>')
        out.append(f'<path d="{line}"/>')
    for k in range(d.free_loops):
        out.append(f'<circle cx="{(loops_x + 2 * k + 1) * scale:.1f}" cy="{height / 2:.1f}" r="{0.7 * scale:.1f}"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
