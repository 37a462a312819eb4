"""Command line interface: ``python -m thompson_links <command> ...``.

Exit codes: 0 success, 2 unparsable input, 3 state-sum guard exceeded,
4 internal invariant violation.  With ``--json`` every command prints one
JSON document matching ``schema/cli-output.schema.json``; errors then go to
stderr as ``{"error": {"category": ..., "message": ...}}``.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from thompson_links import diagram as dg
from thompson_links import invariants as inv
from thompson_links import trees as tr
from thompson_links import weighted as wt

EXIT_OK, EXIT_PARSE, EXIT_GUARD, EXIT_INTERNAL = 0, 2, 3, 4


class ParseFailure(Exception):
    pass


def _read(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    try:
        with open(source, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseFailure(f"cannot read {source}: {exc.strerror}") from None


def _tree(text: str) -> tr.PlaneBinaryTree:
    try:
        return tr.parse_tree(text)
    except tr.TreeSyntaxError as exc:
        raise ParseFailure(f"tree {text!r}: {exc}") from None


def _wtree(text: str) -> wt.WeightedPlaneTree:
    try:
        return wt.parse_weighted(text)
    except wt.WeightedSyntaxError as exc:
        raise ParseFailure(f"weighted tree {text!r}: {exc}") from None


def _pd(text: str) -> dg.LinkDiagram:
    try:
        return dg.parse_pd(text)
    except dg.DiagramError as exc:
        raise ParseFailure(f"pd: {exc}") from None


def diagram_from_spec(spec: str) -> dg.LinkDiagram:
    """Resolve ``kind:payload`` into a link diagram.

    Kinds: ``positive:<tree>``, ``pair:<top>/<bottom>``, ``arbor:<wtree>``,
    ``bipartite-of:<tree>`` (closure of the bipartite translation),
    ``thompson-of:<wtree>`` (positive link of the backward translation),
    ``pd:<file>``.
    """
    kind, sep, payload = spec.partition(":")
    if not sep:
        raise ParseFailure(f"spec {spec!r} lacks a kind prefix")
    if kind == "positive":
        return dg.link_from_positive(_tree(payload))
    if kind == "pair":
        top, slash, bottom = payload.partition("/")
        if not slash:
            raise ParseFailure("pair spec needs top/bottom")
        try:
            return dg.link_from_pair(_tree(top), _tree(bottom))
        except dg.DiagramError as exc:
            raise ParseFailure(str(exc)) from None
    if kind == "arbor":
        return dg.arborescent_link(_wtree(payload))
    if kind == "bipartite-of":
        return dg.arborescent_link(wt.thompson_to_bipartite(_tree(payload)))
    if kind == "thompson-of":
        b = _wtree(payload)
        if not wt.is_bipartite(b):
            raise ParseFailure(f"{payload!r} is not bipartite")
        return dg.link_from_positive(wt.bipartite_to_thompson(b))
    if kind == "pd":
        return _pd(_read(payload))
    raise ParseFailure(f"unknown spec kind {kind!r}")


def _show_multiset(polys) -> str:
    counts: dict[str, int] = {}
    for v in polys:
        counts[str(v)] = counts.get(str(v), 0) + 1
    return " | ".join(text if n == 1 else f"{text} (x{n})" for text, n in counts.items())


def _report_text(r: inv.InvariantReport) -> str:
    lines = [
        f"components: {r.component_count}",
        f"crossings: {r.crossing_count}",
        f"bracket: {r.bracket}",
    ]
    lines.append(f"normalized: {_show_multiset(r.normalized)}")
    return "\n".join(lines) + "\n"


def _emit_diagram(d: dg.LinkDiagram, fmt: str, command: str) -> tuple[str, dict]:
    return dg.export(d, fmt), {"command": command, "format": fmt, "diagram": d.to_dict()}


def _census_row(tree_text: str, strategy: str) -> tuple[str, int, int, list]:
    d = dg.link_from_positive(tr.parse_tree(tree_text))
    r = inv.invariant_report(d, strategy)
    return tree_text, r.component_count, r.crossing_count, [v.to_list() for v in r.normalized]


def census(leaves: int, workers: int = 1, strategy: str = "contract") -> list[tuple[str, int, int, list]]:
    """Invariant of every positive link with ``leaves`` leaves, in enumeration order."""
    texts = [str(t) for t in tr.enumerate_trees(leaves)]
    if workers <= 1:
        return [_census_row(t, strategy) for t in texts]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_census_row, texts, [strategy] * len(texts), chunksize=64))


def _census_output(rows, group_by: str) -> tuple[str, dict]:
    if group_by == "none":
        text = "".join(
            f"{t}\t{k}\t{_show_multiset(map(inv.LaurentPolynomial.from_list, norm))}\n"
            for t, k, _, norm in rows
        )
        return text, {"command": "census", "rows": [
            {"tree": t, "component_count": k, "crossing_count": c, "normalized": norm} for t, k, c, norm in rows
        ]}
    classes: dict[tuple, list[str]] = {}
    for t, k, _, norm in rows:
        classes.setdefault((k, json.dumps(norm)), []).append(t)
    ordered = sorted(classes.items(), key=lambda kv: (kv[0][0], kv[0][1]))
    lines, payload = [], []
    for (k, norm_json), members in ordered:
        norm = json.loads(norm_json)
        shown = _show_multiset(map(inv.LaurentPolynomial.from_list, norm))
        lines.append(f"{len(members)}\t{k}\t{shown}\t{' '.join(members)}\n")
        payload.append({"component_count": k, "normalized": norm, "count": len(members), "trees": members})
    return "".join(lines), {"command": "census", "classes": payload}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="thompson_links", description="Thompson links and arborescent tangles.")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True)
    formats = ("pd", "gauss", "json", "svg")

    s = sub.add_parser("link", help="Jones link of a tree pair")
    s.add_argument("--tree", required=True)
    s.add_argument("--bottom", help="bottom tree (default: right vine)")
    s.add_argument("--format", choices=formats, default="pd")

    s = sub.add_parser("arbor", help="numerator closure of an arborescent tangle")
    s.add_argument("--wtree", required=True)
    s.add_argument("--format", choices=formats, default="pd")

    s = sub.add_parser("to-bipartite", help="binary tree -> bipartite weighted tree")
    s.add_argument("--tree", required=True)
    s = sub.add_parser("from-bipartite", help="bipartite weighted tree -> binary tree")
    s.add_argument("--wtree", required=True)
    s = sub.add_parser("pos-to-bipartite", help="positive weighted tree -> bipartite weighted tree")
    s.add_argument("--wtree", required=True)

    s = sub.add_parser("invariant", help="invariant report of a pd diagram")
    s.add_argument("--pd", default="-", help="file, or - for stdin")
    s.add_argument("--strategy", choices=("contract", "state_sum"), default="contract")
    s.add_argument("--no-simplify", action="store_true")

    s = sub.add_parser("check", help="compare two links")
    s.add_argument("--left", required=True)
    s.add_argument("--right", required=True)
    s.add_argument("--strategy", choices=("contract", "state_sum"), default="contract")

    s = sub.add_parser("census", help="invariants of all positive links with n leaves")
    s.add_argument("--leaves", type=int, required=True)
    s.add_argument("--group-by", choices=("invariant", "none"), default="invariant")
    s.add_argument("--workers", type=int, default=1)

    s = sub.add_parser("render", help="write an svg picture")
    s.add_argument("--svg", required=True, help="output file, or - for stdout")
    src = s.add_mutually_exclusive_group(required=True)
    src.add_argument("--tree")
    src.add_argument("--wtree")
    src.add_argument("--spec")
    return p


def _run(args) -> tuple[str, dict]:
    c = args.command
    if c == "link":
        top = _tree(args.tree)
        if args.bottom is None:
            d = dg.link_from_positive(top)
        else:
            try:
                d = dg.link_from_pair(top, _tree(args.bottom))
            except dg.DiagramError as exc:
                raise ParseFailure(str(exc)) from None
        return _emit_diagram(d, args.format, c)
    if c == "arbor":
        return _emit_diagram(dg.arborescent_link(_wtree(args.wtree)), args.format, c)
    if c == "to-bipartite":
        b = wt.thompson_to_bipartite(_tree(args.tree))
        return f"{b}\n", {"command": c, "wtree": str(b), "weights": b.to_nested()}
    if c == "from-bipartite":
        b = _wtree(args.wtree)
        if not wt.is_bipartite(b):
            raise ParseFailure(f"{args.wtree!r} is not bipartite")
        t = wt.bipartite_to_thompson(b)
        return f"{t}\n", {"command": c, "tree": str(t)}
    if c == "pos-to-bipartite":
        t = _wtree(args.wtree)
        try:
            b = wt.positive_to_bipartite(t)
        except ValueError as exc:
            raise ParseFailure(str(exc)) from None
        return f"{b}\n", {"command": c, "wtree": str(b), "weights": b.to_nested()}
    if c == "invariant":
        d = _pd(_read(args.pd))
        r = inv.invariant_report(d, args.strategy, simplify_first=not args.no_simplify)
        return _report_text(r), {"command": c, "report": r.to_dict()}
    if c == "check":
        left, right = diagram_from_spec(args.left), diagram_from_spec(args.right)
        verdict = inv.same_link_evidence(left, right, args.strategy)
        return f"{verdict}\n", {"command": c, "verdict": str(verdict)}
    if c == "census":
        if args.leaves < 1:
            raise ParseFailure("--leaves must be at least 1")
        return _census_output(census(args.leaves, args.workers), args.group_by)
    if c == "render":
        if args.tree is not None:
            d = dg.link_from_positive(_tree(args.tree))
        elif args.wtree is not None:
            d = dg.arborescent_link(_wtree(args.wtree))
        else:
            d = diagram_from_spec(args.spec)
        svg = dg.to_svg(d)
        if args.svg == "-":
            return svg, {"command": c, "svg": svg}
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(svg)
        return f"wrote {args.svg}\n", {"command": c, "path": args.svg}
    raise AssertionError(c)


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    category, code = None, EXIT_OK
    try:
        text, payload = _run(args)
    except ParseFailure as exc:
        category, code, message = "parse", EXIT_PARSE, str(exc)
    except inv.GuardExceeded as exc:
        category, code, message = "guard", EXIT_GUARD, str(exc)
    except Exception as exc:  # anything else is a bug somewhere below
        category, code, message = "internal", EXIT_INTERNAL, f"{type(exc).__name__}: {exc}"
    if category is not None:
        if args.json:
            stderr.write(json.dumps({"error": {"category": category, "message": message}}) + "\n")
        else:
            stderr.write(f"error[{category}]: {message}\n")
        return code
    if args.json:
        stdout.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        stdout.write(text)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
