import json
import shutil

import pytest

from crossmin import fixtures
from crossmin.diagram import validate


def test_every_fixture_matches_its_checksum():
    for name in fixtures.names():
        assert fixtures.load_raw(name)["name"] == name


def test_expected_fixtures_exist():
    want = {"unknot0", "kink1", "hopf2", "trefoil3", "fig8-4", "theta", "onecrossing",
            "fig4L", "fig5G", "fig5G-prime", "fig7", "fig9adams", "fig10", "fig11s2",
            "kinoshita5", "K6", "fig8-framework"}
    assert want <= set(fixtures.names())


def test_aliases():
    assert fixtures.load("K₆").crossing_count() == 3
    assert validate(fixtures.load("fig5G′")).ok
    assert validate(fixtures.load("fig5G'")).ok


def test_unknown_names_are_refused():
    with pytest.raises(fixtures.UnknownFixture):
        fixtures.load("fig99")
    with pytest.raises(fixtures.UnknownFixture):
        fixtures.load("fig8-framework")  # a framework, not a single diagram


def test_tampering_is_detected(tmp_path):
    for p in fixtures.DATA.glob("*.json"):
        shutil.copy(p, tmp_path / p.name)
    path = tmp_path / "trefoil3.json"
    obj = json.loads(path.read_text())
    obj["diagram"]["nodes"][0]["over"] = [1, 3] if obj["diagram"]["nodes"][0]["over"] == [0, 2] else [0, 2]
    path.write_text(json.dumps(obj, sort_keys=True, indent=1) + "\n")
    with pytest.raises(fixtures.ChecksumMismatch):
        fixtures.load("trefoil3", tmp_path)
    assert fixtures.load("hopf2", tmp_path).crossing_count() == 2


def test_write_records_checksum(tmp_path):
    fixtures.write("tiny", {"name": "tiny", "diagram": fixtures.load("unknot0").to_json()}, tmp_path)
    assert fixtures.names(tmp_path) == ["tiny"]
    assert fixtures.load("tiny", tmp_path).free_loops == 1


@pytest.mark.parametrize("name,count", [("unknot0", 0), ("kink1", 1), ("hopf2", 2),
                                        ("trefoil3", 3), ("fig8-4", 4), ("onecrossing", 1),
                                        ("K6", 3), ("fig5G", 4)])
def test_crossing_counts(name, count):
    assert fixtures.load(name).crossing_count() == count
