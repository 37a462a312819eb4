"""Kauffman bracket engine and Reidemeister-invariant link fingerprints.

Smoothing convention: at a crossing ``(a, b, c, d)`` (understrand ``a-c``)
the A-smoothing joins ``a-b`` and ``c-d``, the B-smoothing joins ``a-d`` and
``b-c``.  The bracket is normalised so that the crossingless unknot has
value 1, and a kink on slots ``(0, 1)`` or ``(2, 3)`` multiplies it by
``-A^3`` (such a kink is a positive crossing, so ``(-A^3)^(-writhe) <L>``
is invariant).
"""

from __future__ import annotations

import enum
import json
import os
from collections import Counter
from dataclasses import dataclass, field
from itertools import product

from thompson_links.diagram import DiagramError, TangleDiagram
from thompson_links.laurent import LOOP, ONE, ZERO, LaurentPolynomial

STATE_SUM_GUARD = int(os.environ.get("THOMPSON_LINKS_STATE_SUM_GUARD", "24"))


class GuardExceeded(RuntimeError):
    """The requested strategy refuses a diagram this large."""


def _require_closed(d: TangleDiagram) -> None:
    if not d.is_closed:
        raise DiagramError("invariants need a closed diagram")


def _loop_power(k: int) -> LaurentPolynomial:
    return LOOP ** k


# -- bracket ---------------------------------------------------------------


def _state_sum(d: TangleDiagram) -> LaurentPolynomial:
    c = len(d.crossings)
    labels = sorted(d.labels())
    index = {label: i for i, label in enumerate(labels)}
    coeffs: Counter = Counter()
    for state in product((0, 1), repeat=c):
        parent = list(range(len(labels)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            parent[find(index[x])] = find(index[y])

        a_count = 0
        for (p, q, r, s), smoothing in zip(d.crossings, state):
            if smoothing == 0:
                a_count += 1
                union(p, q)
                union(r, s)
            else:
                union(p, s)
                union(q, r)
        loops = len({find(i) for i in range(len(labels))}) + d.free_loops
        coeffs[(a_count - (c - a_count), loops)] += 1
    total = ZERO
    for (exp, loops), mult in coeffs.items():
        total = total + _loop_power(loops - 1).shift(exp) * mult
    return total


def _order_crossings(d: TangleDiagram) -> list[int]:
    # greedy sweep: always take the crossing sharing most labels with the open frontier
    remaining = list(range(len(d.crossings)))
    open_labels: set[int] = set()
    order: list[int] = []
    while remaining:
        best = max(
            remaining,
            key=lambda i: (sum(1 for label in d.crossings[i] if label in open_labels), -i),
        )
        remaining.remove(best)
        order.append(best)
        for label in d.crossings[best]:
            if label in open_labels:
                open_labels.discard(label)
            else:
                open_labels.add(label)
    return order


def _contract(d: TangleDiagram) -> LaurentPolynomial:
    """Sweep crossings, keeping a weighted sum over pairings of open ends.

    A state is a perfect matching of the currently open labels (labels met
    once so far), together with a flag recording whether a closed loop has
    already been produced; the first loop is free, every later one costs a
    factor ``d = -A^2 - A^-2``.
    """
    states: dict[tuple[frozenset, bool], LaurentPolynomial] = {(frozenset(), False): ONE}
    for i in _order_crossings(d):
        p, q, r, s = d.crossings[i]
        nxt: dict[tuple[frozenset, bool], LaurentPolynomial] = {}
        for (pairing, looped), weight in states.items():
            for shift, arcs in ((1, ((p, q), (r, s))), (-1, ((p, s), (q, r)))):
                match = dict()
                for u, v in pairing:
                    match[u] = v
                    match[v] = u
                w = weight.shift(shift)
                closed = looped
                for u, v in arcs:
                    if u == v:
                        # both ends of an edge at this crossing, joined directly
                        if closed:
                            w = w * LOOP
                        closed = True
                        continue
                    if match.get(u) == v:
                        del match[u], match[v]
                        if closed:
                            w = w * LOOP
                        closed = True
                        continue
                    far_u = match.pop(u) if u in match else u
                    if far_u != u:
                        del match[far_u]
                    far_v = match.pop(v) if v in match else v
                    if far_v != v:
                        del match[far_v]
                    match[far_u] = far_v
                    match[far_v] = far_u
                key = (frozenset(frozenset((a, b)) for a, b in match.items() if a < b), closed)
                nxt[key] = nxt.get(key, ZERO) + w
        states = {k: v for k, v in nxt.items() if not v.is_zero()}
    total = ZERO
    for (pairing, looped), weight in states.items():
        if pairing:
            raise DiagramError("contraction left open ends; diagram is not closed")
        total = total + weight
    if not d.crossings:
        if d.free_loops == 0:
            raise DiagramError("the empty diagram has no normalised bracket")
        return _loop_power(d.free_loops - 1)
    return total * _loop_power(d.free_loops)


def bracket(d: TangleDiagram, strategy: str = "contract", guard: int | None = None) -> LaurentPolynomial:
    """Kauffman bracket of a closed diagram (unknot = 1).

    ``strategy="state_sum"`` enumerates all ``2**c`` smoothings and refuses
    diagrams above ``guard`` crossings (default 24, overridable through the
    ``THOMPSON_LINKS_STATE_SUM_GUARD`` environment variable).
    ``strategy="contract"`` is the frontier sweep and agrees exactly.
    """
    _require_closed(d)
    if not d.crossings and d.free_loops == 0:
        raise DiagramError("the empty diagram has no normalised bracket")
    if strategy == "state_sum":
        limit = STATE_SUM_GUARD if guard is None else guard
        if len(d.crossings) > limit:
            raise GuardExceeded(f"{len(d.crossings)} crossings exceeds state-sum guard {limit}")
        return _state_sum(d)
    if strategy == "contract":
        return _contract(d)
    raise ValueError(f"unknown strategy {strategy!r}")


# -- components and orientations --------------------------------------------


def _strand_classes(d: TangleDiagram) -> tuple[dict[int, int], int]:
    labels = sorted(d.labels())
    parent = {label: label for label in labels}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p, q, r, s in d.crossings:
        parent[find(p)] = find(r)
        parent[find(q)] = find(s)
    roots = {label: find(label) for label in labels}
    return roots, len(set(roots.values()))


def component_count(d: TangleDiagram) -> int:
    _require_closed(d)
    _, k = _strand_classes(d)
    return k + d.free_loops


def walk_components(d: TangleDiagram) -> list[list[tuple[int, int]]]:
    """Traverse every component that has crossings.

    Each walk is the list of ``(crossing, entry_slot)`` visits in order.  The
    starting direction is deterministic: the first visit enters the lowest
    numbered crossing on the component through slot 0 or 1.
    """
    ends: dict[int, list[tuple[int, int]]] = {}
    for ci, x in enumerate(d.crossings):
        for s, label in enumerate(x):
            ends.setdefault(label, []).append((ci, s))
    seen: set[tuple[int, int]] = set()
    walks = []
    for ci in range(len(d.crossings)):
        for s0 in (0, 1):
            if (ci, s0) in seen:
                continue
            walk = []
            cur = (ci, s0)
            while cur not in seen:
                c, s = cur
                out = (s + 2) % 4
                seen.add((c, s))
                seen.add((c, out))
                walk.append((c, s))
                a, b = ends[d.crossings[c][out]]
                cur = b if a == (c, out) else a
            walks.append(walk)
    return walks


def orientation(d: TangleDiagram) -> tuple[dict[tuple[int, int], bool], dict[tuple[int, int], int]]:
    """For each crossing slot: whether the walk enters there, and its component id."""
    entered: dict[tuple[int, int], bool] = {}
    comp_of: dict[tuple[int, int], int] = {}
    for k, walk in enumerate(walk_components(d)):
        for c, s in walk:
            entered[(c, s)] = True
            entered[(c, (s + 2) % 4)] = False
            comp_of[(c, s)] = comp_of[(c, (s + 2) % 4)] = k
    return entered, comp_of


def _orient(d: TangleDiagram) -> tuple[list[int], list[tuple[int, int]]]:
    """Base crossing signs and, per crossing, the component ids of under- and overstrand."""
    entered, comp_of = orientation(d)
    signs = []
    owners = []
    for ci in range(len(d.crossings)):
        signs.append(1 if entered[(ci, 0)] == entered[(ci, 3)] else -1)
        owners.append((comp_of[(ci, 0)], comp_of[(ci, 1)]))
    return signs, owners


def writhes(d: TangleDiagram) -> list[int]:
    """Writhe for each orientation class (components up to global reversal)."""
    _require_closed(d)
    if not d.crossings:
        return [0] * 2 ** max(0, d.free_loops - 1)
    signs, owners = _orient(d)
    n_comp = 1 + max(max(o) for o in owners)
    out = []
    # free loops carry no crossings; flipping one repeats the whole list
    for flips in product((0, 1), repeat=n_comp - 1):
        flip = (0,) + flips
        w = 0
        for sgn, (u, o) in zip(signs, owners):
            w += sgn if flip[u] == flip[o] else -sgn
        out.append(w)
    return out * 2 ** d.free_loops


def normalized_invariant(d: TangleDiagram, strategy: str = "contract",
                         value: LaurentPolynomial | None = None) -> tuple[LaurentPolynomial, ...]:
    """Sorted multiset of ``(-A^3)^(-w) <L>`` over orientation classes."""
    br = bracket(d, strategy) if value is None else value
    vals = []
    for w in writhes(d):
        factor = LaurentPolynomial.monomial(-3 * w, -1 if w % 2 else 1)
        vals.append(br * factor)
    return tuple(sorted(vals))


# -- reports and verdicts ------------------------------------------------------


@dataclass(frozen=True)
class InvariantReport:
    component_count: int
    bracket: LaurentPolynomial
    normalized: tuple[LaurentPolynomial, ...]
    crossing_count: int

    def fingerprint(self) -> tuple:
        return (self.component_count, self.normalized)

    def to_dict(self) -> dict:
        return {
            "component_count": self.component_count,
            "crossing_count": self.crossing_count,
            "bracket": self.bracket.to_list(),
            "normalized": [v.to_list() for v in self.normalized],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "InvariantReport":
        return cls(
            int(data["component_count"]),
            LaurentPolynomial.from_list(data["bracket"]),
            tuple(LaurentPolynomial.from_list(v) for v in data["normalized"]),
            int(data["crossing_count"]),
        )


def invariant_report(d: TangleDiagram, strategy: str = "contract", simplify_first: bool = True) -> InvariantReport:
    from thompson_links.diagram import simplify

    _require_closed(d)
    if simplify_first:
        reduced, factor = simplify(d)
        br = bracket(reduced, strategy) * factor
    else:
        br = bracket(d, strategy)
    return InvariantReport(component_count(d), br, normalized_invariant(d, value=br), d.crossing_count)


class Verdict(enum.Enum):
    DISTINCT = "Distinct"
    CONSISTENT_WITH = "ConsistentWith"

    def __str__(self) -> str:
        return self.value


def same_link_evidence(left: TangleDiagram, right: TangleDiagram, strategy: str = "contract") -> Verdict:
    """Compare two closed diagrams.

    ``DISTINCT`` is a proof that the links differ.  ``CONSISTENT_WITH`` only
    says the component count and normalised bracket multiset agree: that is
    evidence of isotopy, not a certificate.
    """
    a = invariant_report(left, strategy)
    b = invariant_report(right, strategy)
    return Verdict.CONSISTENT_WITH if a.fingerprint() == b.fingerprint() else Verdict.DISTINCT
