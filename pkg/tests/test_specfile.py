import json

import pytest

from graphprod import (
    GraphProductError,
    load_spec,
    parse_spec,
    save_spec,
    spec_to_data,
)
from conftest import G510_DATA, GEX_DATA, cyclic


def test_parse_spec_shape(gex):
    assert gex.vertices == ("a", "b", "c")
    assert gex.group(2).order == 3
    assert gex.limit("states") == 10**6
    assert gex.limit("oracle-cap") == 8


def test_limits_override():
    data = dict(GEX_DATA)
    data["limits"] = {"states": 44}
    spec = parse_spec(data)
    assert spec.limit("states") == 44
    assert spec.limit("oracle-cap") == 8  # untouched default


@pytest.mark.parametrize(
    "data",
    [
        {},
        {"vertices": [], "edges": []},
        {"vertices": "a", "edges": []},
        {"vertices": [{"name": "a"}], "edges": []},
        {"vertices": [{"name": "a", "group": cyclic(2)}], "edges": [["a"]]},
        {"vertices": [{"name": "a", "group": cyclic(2)}], "edges": [["a", "b"]]},
        {"vertices": [{"name": "a", "group": cyclic(2)}], "edges": [],
         "limits": {"states": "many"}},
    ],
)
def test_parse_spec_rejects_malformed(data):
    with pytest.raises(GraphProductError):
        parse_spec(data)


def test_unknown_limit_name(gex):
    with pytest.raises(KeyError):
        gex.limit("gas")


def test_roundtrip_through_file(tmp_path, g510):
    path = tmp_path / "spec.json"
    save_spec(g510, path)
    again = load_spec(path)
    assert spec_to_data(again) == spec_to_data(g510)
    assert again.vertices == ("a", "b", "c", "e")
    # table groups serialize by element name
    raw = json.loads(path.read_text())
    cgroup = raw["vertices"][2]["group"]
    assert cgroup["kind"] == "table"
    assert cgroup["elements"][0] == "1"
    assert all(isinstance(x, str) for x in cgroup["table"][3])


def test_spec_to_data_omits_empty_limits(gex):
    assert "limits" not in spec_to_data(gex)
    assert spec_to_data(gex)["edges"] == [["a", "c"], ["b", "c"]]


def test_load_spec_bad_file(tmp_path):
    with pytest.raises(GraphProductError):
        load_spec(tmp_path / "missing.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(GraphProductError):
        load_spec(bad)


def test_parse_spec_roundtrip_preserves_limits():
    data = dict(G510_DATA)
    data["limits"] = {"states": 123, "oracle-cap": 5}
    spec = parse_spec(data)
    assert spec_to_data(spec)["limits"] == {"states": 123, "oracle-cap": 5}
