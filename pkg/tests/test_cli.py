import io
import json

from crossmin import fixtures
from crossmin.cli import BAD_INPUT, FALSE, OK, run
from crossmin.diagram import Diagram, isomorphic


def call(*argv):
    buf = io.StringIO()
    code = run(list(argv), buf)
    text = buf.getvalue()
    assert text.endswith("\n") and text.count("\n") == 1
    return code, json.loads(text), text


def test_validate_fixture_and_file(tmp_path):
    code, out, _ = call("validate", "--fixture", "trefoil3")
    assert code == OK and out == {"valid": True, "violations": []}
    path = tmp_path / "t.json"
    path.write_text(json.dumps(fixtures.load("trefoil3").to_json()))
    assert call("validate", str(path))[0] == OK


def test_invalid_diagram_gives_false(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"nodes": [{"id": 0, "kind": "crossing", "rotation": [0, 1, 2, 3],
                                           "over": [0, 2]}],
                                "pairing": [[0, 2], [1, 3]]}))
    code, out, _ = call("validate", str(path))
    assert code == FALSE and not out["valid"] and out["violations"]


def test_unusable_input_exits_2(tmp_path):
    code, out, _ = call("validate", str(tmp_path / "missing.json"))
    assert code == BAD_INPUT and out["error"] == "InputError"
    junk = tmp_path / "junk.json"
    junk.write_text("{not json")
    assert call("certify", str(junk))[0] == BAD_INPUT
    assert call("certify", "--fixture", "nope")[0] == BAD_INPUT
    assert call("certify")[0] == BAD_INPUT
    assert run(["frobnicate"], io.StringIO()) == BAD_INPUT


def test_certify_routes():
    code, out, _ = call("certify", "--fixture", "trefoil3")
    assert code == OK and out["claim"] == 3 and out["route"] == "AdequateLink"
    code, out, _ = call("certify", "--fixture", "kink1")
    assert code == FALSE and out["certificate"] is False
    code, out, _ = call("certify", "--fixture", "fig7")
    assert code == OK and out["method"].startswith("uncrossed-edge:")
    code, out, _ = call("certify", "--fixture", "fig10")
    assert code == FALSE and "even_valent" in out["reason"]


def test_output_is_byte_stable():
    a = call("certify", "--fixture", "fig7")[2]
    b = call("certify", "--fixture", "fig7")[2]
    assert a == b
    s1 = call("search", "--fixture", "fig4L", "--budget", "50", "--trace")[2]
    s2 = call("search", "--fixture", "fig4L", "--budget", "50", "--trace")[2]
    assert s1 == s2


def test_resolve_counts_circles():
    _, out, _ = call("resolve", "--fixture", "hopf2", "--kind", "A")
    _, out2, _ = call("resolve", "--fixture", "hopf2", "--kind", "A-1")
    assert out["nCircles"] + out2["nCircles"] == 4


def test_check_flags():
    code, out, _ = call("check", "--fixture", "fig8-4")
    assert code == OK and set(out) == {"reduced", "alternating", "adequate"}
    code, out, _ = call("check", "--fixture", "fig4L", "--reduced")
    assert code == FALSE and "witness" in out["reduced"]
    code, out, _ = call("check", "--fixture", "fig10", "--adams")
    assert code == FALSE and out["adams"]["alternating"] is True


def test_double_round_trips():
    code, out, _ = call("double", "--fixture", "fig5G")
    assert code == OK and out["crossings"] == 8 == 2 * out["tangleCrossings"]
    link = Diagram.from_json(out["link"])
    assert link.crossing_count() == 8


def test_search_reports_best():
    code, out, _ = call("search", "--fixture", "kink1", "--budget", "100", "--seeds", "2")
    assert code == OK and out["best"] == 0 and out["reduced"] and len(out["runs"]) == 2


def test_compose_fixture():
    code, out, _ = call("compose", "--fixture", "fig8", "--certify")
    assert code == OK and out["crossings"] == 13 and out["certificate"]["claim"] == 13


def test_compose_needs_inputs():
    assert call("compose")[0] == BAD_INPUT


def test_fixtures_listing():
    code, out, _ = call("fixtures")
    assert code == OK and "trefoil3" in out["fixtures"]
    code, out, _ = call("fixtures", "hopf2")
    assert isomorphic(Diagram.from_json(out["diagram"]), fixtures.load("hopf2"))
