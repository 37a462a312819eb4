import io
import json
import os
import subprocess
import sys
import xml.etree.ElementTree as ET
from importlib import resources

import jsonschema
import pytest

from thompson_links import cli
from thompson_links import diagram as dg

SCHEMA = json.loads(resources.files("thompson_links").joinpath("schema/cli-output.schema.json").read_text())


def run(*argv, stdin=None):
    out, err = io.StringIO(), io.StringIO()
    old = sys.stdin
    if stdin is not None:
        sys.stdin = io.StringIO(stdin)
    try:
        code = cli.run(list(argv), out, err)
    finally:
        sys.stdin = old
    return code, out.getvalue(), err.getvalue()


def run_json(*argv, stdin=None):
    code, out, err = run("--json", *argv, stdin=stdin)
    assert code == 0, err
    payload = json.loads(out)
    jsonschema.validate(payload, SCHEMA)
    return payload


def test_schema_is_itself_valid():
    jsonschema.Draft202012Validator.check_schema(SCHEMA)


def test_arbor_pipes_into_invariant():
    code, pd, _ = run("arbor", "--wtree", "(-3)")
    assert code == 0
    code, out, _ = run("invariant", stdin=pd)
    assert code == 0
    assert out.splitlines() == [
        "components: 1",
        "crossings: 3",
        "bracket: -A^5 - A^-3 + A^-7",
        "normalized: A^-4 + A^-12 - A^-16",
    ]


def test_real_pipe_between_processes(tmp_path):
    env = dict(os.environ)
    first = subprocess.run([sys.executable, "-m", "thompson_links", "arbor", "--wtree", "(-3)"],
                           capture_output=True, text=True, check=True, env=env)
    second = subprocess.run([sys.executable, "-m", "thompson_links", "invariant", "--pd", "-"],
                            input=first.stdout, capture_output=True, text=True, check=True, env=env)
    assert "components: 1" in second.stdout and "crossings: 3" in second.stdout


def test_invariant_reads_files(tmp_path):
    path = tmp_path / "trefoil.pd"
    path.write_text(dg.to_pd(dg.arborescent_link("(3)")))
    payload = run_json("invariant", "--pd", str(path), "--strategy", "state_sum")
    assert payload["report"]["component_count"] == 1
    assert payload["report"]["normalized"] == [[[16, -1], [12, 1], [4, 1]]]


def test_check_forward_translation():
    code, out, _ = run("check", "--left", "positive:((.,.),.)", "--right", "bipartite-of:((.,.),.)")
    assert (code, out) == (0, "ConsistentWith\n")
    assert run_json("check", "--left", "arbor:(-3)", "--right", "arbor:(3)")["verdict"] == "Distinct"


@pytest.mark.parametrize("spec", [
    "positive:(.,(.,.))",
    "pair:((.,.),.)/(.,(.,.))",
    "arbor:(2 (1))",
    "bipartite-of:(.,.)",
    "thompson-of:(-1 (1 (-1)))",
])
def test_check_accepts_every_spec_kind(spec):
    assert run_json("check", "--left", spec, "--right", spec)["verdict"] == "ConsistentWith"


def test_census_four_leaves():
    payload = run_json("census", "--leaves", "4")
    classes = payload["classes"]
    assert sum(c["count"] for c in classes) == 5
    unlink = [c for c in classes if c["component_count"] == 2]
    assert unlink and "((.,.),(.,.))" in unlink[0]["trees"]
    rows = run_json("census", "--leaves", "4", "--group-by", "none")["rows"]
    assert [r["tree"] for r in rows] == ["(.,(.,(.,.)))", "(.,((.,.),.))", "((.,.),(.,.))", "((.,(.,.)),.)", "(((.,.),.),.)"]


def test_census_is_worker_independent():
    outputs = {run("census", "--leaves", "6", "--workers", str(w))[1] for w in (1, 2, 3)}
    assert len(outputs) == 1


@pytest.mark.parametrize("argv", [
    ("link", "--tree", "((.,.),.)"),
    ("link", "--tree", "((.,.),.)", "--bottom", "(.,(.,.))", "--format", "gauss"),
    ("link", "--tree", "(.,.)", "--format", "svg"),
    ("arbor", "--wtree", "(-1 (-2))", "--format", "json"),
    ("to-bipartite", "--tree", "((.,.),.)"),
    ("from-bipartite", "--wtree", "(-1 (1 (-1)))"),
    ("pos-to-bipartite", "--wtree", "(2 (1))"),
    ("census", "--leaves", "3"),
    ("render", "--svg", "-", "--wtree", "(-3)"),
])
def test_json_output_matches_schema(argv):
    run_json(*argv)


def test_invariant_json_matches_schema():
    run_json("invariant", stdin=dg.to_pd(dg.link_from_positive("((.,.),(.,.))")))


def test_translations_round_trip_through_text():
    code, b, _ = run("to-bipartite", "--tree", "((.,.),(.,.))")
    assert code == 0
    code, t, _ = run("from-bipartite", "--wtree", b.strip())
    assert code == 0
    code, verdict, _ = run("check", "--left", f"arbor:{b.strip()}", "--right", f"positive:{t.strip()}")
    assert verdict == "ConsistentWith\n"


def test_link_default_bottom_is_the_vine():
    assert run("link", "--tree", "((.,.),.)")[1] == run("link", "--tree", "((.,.),.)", "--bottom", "(.,(.,.))")[1]


def test_render_writes_a_file(tmp_path):
    out = tmp_path / "k.svg"
    code, text, _ = run("render", "--svg", str(out), "--spec", "arbor:(-2 (-2))")
    assert code == 0
    assert ET.parse(out).getroot().tag.endswith("svg")


# -- errors -------------------------------------------------------------------------------------


@pytest.mark.parametrize("argv", [
    ("link", "--tree", "((.,.)"),
    ("link", "--tree", "(.,.)", "--bottom", "((.,.),.)"),
    ("arbor", "--wtree", "(x)"),
    ("from-bipartite", "--wtree", "(2)"),
    ("pos-to-bipartite", "--wtree", "(0)"),
    ("check", "--left", "knot:3_1", "--right", "arbor:(3)"),
    ("check", "--left", "arbor:(3)", "--right", "pd:/nonexistent/file.pd"),
    ("census", "--leaves", "0"),
    ("census",),
    ("frobnicate",),
])
def test_parse_errors_exit_2(argv):
    code, out, err = run(*argv)
    assert code == cli.EXIT_PARSE
    assert out == ""


def test_bad_pd_on_stdin():
    code, _, err = run("--json", "invariant", stdin="X[1,2,3]")
    assert code == 2
    assert json.loads(err)["error"]["category"] == "parse"


def test_guard_exit_3():
    env = dict(os.environ, THOMPSON_LINKS_STATE_SUM_GUARD="2")
    pd = dg.to_pd(dg.arborescent_link("(-3)"))
    proc = subprocess.run(
        [sys.executable, "-m", "thompson_links", "--json", "invariant", "--strategy", "state_sum", "--no-simplify"],
        input=pd, capture_output=True, text=True, env=env,
    )
    assert proc.returncode == cli.EXIT_GUARD
    assert json.loads(proc.stderr)["error"]["category"] == "guard"


def test_internal_errors_exit_4(monkeypatch):
    def broken(*_):
        raise AssertionError("invariant violated")

    monkeypatch.setattr(cli.wt, "thompson_to_bipartite", broken)
    code, _, err = run("to-bipartite", "--tree", "((.,.),.)")
    assert code == cli.EXIT_INTERNAL
    assert err.startswith("error[internal]")


def test_help_exits_cleanly():
    code, _, _ = run("--help")
    assert code == 0
