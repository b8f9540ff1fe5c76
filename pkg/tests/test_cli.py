"""CLI grammar, payload schemas, rendering, and exit codes."""

import json
from pathlib import Path

import jsonschema
import pytest

import kkcliques.cli as cli
from kkcliques.cli import main, run
from kkcliques.designs import builtin_design, shadow_of_design
from kkcliques.errors import InternalCheckError
from kkcliques.families import from_json_obj, to_text

SCHEMA_DIR = Path(cli.__file__).parent / "schemas"


def check_schema(payload, name):
    schema = json.loads((SCHEMA_DIR / f"{name}.schema.json").read_text())
    jsonschema.validate(payload, schema)


def test_cascade_examples():
    r = run(["cascade", "7", "3"])
    assert r.exit_status == 0
    assert r.payload == {"entries": [4, 3], "level": 3}
    check_schema(r.payload, "cascade")
    r = run(["cascade", "0", "3"])
    assert r.payload == {"entries": [], "level": 3}


def test_bound_edge_example():
    r = run(["bound", "edge", "12", "1", "2", "3", "3"])
    assert r.exit_status == 0
    assert r.payload["value"] == "8"
    assert r.payload["x"] == "4"
    assert r.payload["equality_possible"] == "yes"
    check_schema(r.payload, "bound")


def test_bound_variants_validate():
    for argv in (["bound", "vertex", "13", "2", "3", "4", "2"],
                 ["bound", "clique", "8", "1", "2", "3", "4", "3"],
                 ["bound", "graph", "8", "3", "4", "4"]):
        r = run(argv)
        assert r.exit_status == 0
        check_schema(r.payload, "bound")


def test_colex_count_levels():
    r = run(["colex", "count", "9", "3"])       # default level = s: edge identity
    assert r.payload["kind"] == "cliques" and r.payload["value"] == "9"
    check_schema(r.payload, "count")
    r = run(["colex", "count", "9", "3", "4"])
    assert r.payload["kind"] == "cliques" and r.payload["value"] == "3"
    r = run(["colex", "count", "9", "3", "2"])
    assert r.payload["kind"] == "shadow" and r.payload["value"] == "10"


def test_colex_segment_payload():
    r = run(["colex", "segment", "7", "3"])
    assert r.exit_status == 0
    check_schema(r.payload, "segment")
    H = from_json_obj(r.payload["family"])
    assert len(H.edges) == 7 and H.s == 3


def test_verdict_payloads():
    for argv in (["jumping", "shadow", "10", "3", "2"],
                 ["jumping", "clique", "6", "3", "4", "9"],
                 ["unique", "colex", "9", "3", "2", "9"],
                 ["unique", "clique", "7", "3", "4", "5"]):
        r = run(argv)
        assert r.exit_status == 0
        assert r.payload["verdict"] is True
        check_schema(r.payload, "verdict")


def test_jung_payload():
    r = run(["jung", "2", "3", "10"])
    assert r.payload["qualifying"] == ["1", "2", "3", "5", "6", "9", "10"]
    check_schema(r.payload, "jung")


def test_construct_and_round_trip(tmp_path):
    out = tmp_path / "shadow.json"
    status = main(["construct", "disjoint(2,4)", "--shadow", "3", "--out", str(out)])
    assert status == 0
    payload = json.loads(out.read_text())
    check_schema(payload, "construct")
    H = from_json_obj(payload["family"])
    assert H.edges == shadow_of_design(builtin_design("disjoint(2,4)"), 3).edges


def test_recognize_round_trip(tmp_path):
    H = shadow_of_design(builtin_design("disjoint(2,4)"), 3)
    f = tmp_path / "family.txt"
    f.write_text(to_text(H))
    r = run(["recognize", str(f), "1", "4"])
    assert r.exit_status == 0 and r.payload["ok"] is True
    assert r.payload["blocks"] == [(1, 2, 3, 4), (5, 6, 7, 8)]
    assert r.payload["certificate"] == "steiner"
    check_schema(json.loads(json.dumps(r.payload)), "recognize")


def test_recognize_failure_witness(tmp_path):
    r = run(["colex", "segment", "7", "3"])
    f = tmp_path / "c7.txt"
    f.write_text(to_text(from_json_obj(r.payload["family"])))
    r = run(["recognize", str(f), "1", "4"])
    assert r.exit_status == 0 and r.payload["ok"] is False
    assert r.payload["witness"] == [1]
    assert r.payload["blocks"] is None


def test_search_payload():
    r = run(["search", "5", "2", "3", "--edges", "7"])
    assert r.exit_status == 0
    assert r.payload["optimum"] == "4" and r.payload["class_count"] == 1
    check_schema(json.loads(json.dumps(r.payload)), "search")


def test_verify_payloads():
    r = run(["verify", "kkt", "4", "2"])
    assert r.exit_status == 0 and r.payload["ok"] is True
    check_schema(r.payload, "verify")
    r = run(["verify", "uniqueness", "4", "2"])
    assert r.payload["ok"] is True
    r = run(["verify", "equality"])
    assert r.payload["ok"] is True and len(r.payload["rows"]) == 23


def test_domain_error_exit_1(tmp_path):
    r = run(["bound", "edge", "5", "1", "2", "2", "3"])  # t = s
    assert r.exit_status == 1
    assert r.payload["error"] == "ValueError"
    check_schema(r.payload, "error")
    r = run(["recognize", str(tmp_path / "missing.txt"), "1", "4"])
    assert r.exit_status == 1
    assert r.payload["error"] == "FileNotFoundError"
    r = run(["recognize", __file__, "2", "3"])  # unparseable family file
    assert r.exit_status == 1


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["cascade", "7"])           # missing S
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        run(["unknown-command"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_internal_check_exit_3(monkeypatch):
    def boom(m, s):
        raise InternalCheckError("forced for testing")
    monkeypatch.setattr(cli, "cascade_of", boom)
    r = run(["cascade", "7", "3"])
    assert r.exit_status == 3
    assert r.payload["error"] == "InternalCheckError"
    check_schema(r.payload, "error")


def test_main_renders_formats(capsys):
    assert main(["cascade", "7", "3"]) == 0
    out = capsys.readouterr().out
    assert json.loads(out) == {"entries": [4, 3], "level": 3}
    assert main(["cascade", "7", "3", "--format", "table"]) == 0
    out = capsys.readouterr().out
    assert "entries" in out and "4 3" in out
    assert main(["--format", "csv", "cascade", "7", "3"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "key,value"


def test_flag_position_equivalent(capsys):
    main(["cascade", "9", "4", "--format", "json"])
    after = capsys.readouterr().out
    main(["--format", "json", "cascade", "9", "4"])
    before = capsys.readouterr().out
    assert after == before


def test_json_output_deterministic(capsys):
    main(["bound", "vertex", "13", "2", "3", "4", "2"])
    first = capsys.readouterr().out
    main(["bound", "vertex", "13", "2", "3", "4", "2"])
    assert capsys.readouterr().out == first
    keys = list(json.loads(first))
    assert keys == sorted(keys)
