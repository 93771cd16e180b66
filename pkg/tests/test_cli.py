import json

import pytest

from sonet.cli import main

NETS = "nets"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_validate_reports_ok(capsys):
    code, out, _ = run(capsys, "validate", f"{NETS}/AN1.sonet.json")
    assert code == 0
    assert "ok" in out


def test_validate_reports_violations_with_exit_one(capsys, tmp_path):
    path = tmp_path / "bad.sonet.json"
    path.write_text(json.dumps({
        "kind": "acyclic", "places": ["p"], "transitions": ["t"],
        "arcs": [["p", "t"]]}))
    code, out, _ = run(capsys, "validate", str(path))
    assert code == 1
    assert "transition-without-post" in out


def test_fixture_names_work_as_net_arguments(capsys):
    code, out, _ = run(capsys, "classify", "BD1")
    assert code == 0
    assert out.strip() == "backward-deterministic"
    code, out, _ = run(capsys, "classify", "fixture:CS1")
    assert out.strip() == "general"


def test_missing_inputs_exit_with_usage_error(capsys):
    code, _, err = run(capsys, "classify", "no-such-thing")
    assert code == 2
    assert "no such file or fixture" in err


def test_enabled_lists_steps(capsys):
    code, out, _ = run(capsys, "enabled", "CS1", "--format", "json")
    assert code == 0
    body = json.loads(out)
    assert {"step": ["c", "e"], "enabled": True} in body["steps"]


def test_enabled_flags_phase_blocked_steps(capsys):
    code, out, _ = run(capsys, "enabled", "BSA0")
    assert code == 0
    assert "{a}  (disabled: target_phase)" in out


def test_fire_prints_the_next_marking(capsys):
    code, out, _ = run(capsys, "fire", "AN1", "--step", "a")
    assert code == 0
    assert out.strip() == "{p2,p3}"


def test_fire_refuses_disabled_steps(capsys):
    code, _, err = run(capsys, "fire", "AN1", "--step", "b")
    assert code == 1
    assert "not enabled" in err


def test_run_replays_semicolon_sequences(capsys):
    code, out, _ = run(capsys, "run", "BSA0",
                       "--steps", "g,k;h,l;c,m;j;d")
    assert code == 0
    assert out.strip().splitlines()[-1] == "{p5,r10,r11}"


def test_run_json_contains_markings_and_steps(capsys):
    code, out, _ = run(capsys, "run", "CS1", "--steps", "a,e;b",
                       "--format", "json")
    body = json.loads(out)
    assert body["markings"][1] == ["p2", "p6", "q1"]
    assert body["steps"] == [["a", "e"], ["b"]]


def test_reach_and_finreach(capsys):
    code, out, _ = run(capsys, "finreach", "CS1")
    assert code == 0
    assert out.splitlines() == ["{p4,p6,q1}", "{p4,p7}"]
    code, out, _ = run(capsys, "reach", "BD1", "--format", "json")
    assert ["p1"] in json.loads(out)["reach"]


def test_maxsseq_lists_sequences(capsys):
    code, out, _ = run(capsys, "maxsseq", "CS1")
    assert code == 0
    assert len(out.strip().splitlines()) == 7


def test_wellformed_verdicts_and_exit_codes(capsys):
    code, out, _ = run(capsys, "wellformed", "BD1")
    assert code == 0
    assert out.strip() == "ok"
    code, out, _ = run(capsys, "wellformed", f"{NETS}/W1.sonet.json")
    assert code == 1
    assert "witness: {a} {b}" in out
    assert "place: p3" in out


def test_wellformed_unknown_exits_with_bound_code(capsys):
    code, out, _ = run(capsys, "wellformed", "BD1", "--bound", "2")
    assert code == 3
    assert "unknown" in out


def test_causes_reports_both_relations(capsys):
    code, out, _ = run(capsys, "causes", "W1", "--transition", "c")
    assert code == 0
    assert "causes: {}" in out
    assert "graph predecessors: {a,b}" in out


def test_scenarios_and_maximal(capsys):
    code, out, _ = run(capsys, "scenarios", "AN1", "--format", "json")
    assert json.loads(out)["count"] == 7
    code, out, _ = run(capsys, "scenarios", "AN1", "--maximal")
    assert "2 scenarios" in out
    code, out, _ = run(capsys, "scenarios", "BSA0", "--format", "json")
    assert json.loads(out)["count"] == 5


def test_syncycles_partition(capsys):
    code, out, _ = run(capsys, "syncycles", "CS1")
    assert code == 0
    assert out.splitlines() == ["{a}", "{b}", "{c}", "{e}", "{d,f}"]


def test_project_restricts_to_components(capsys):
    code, out, _ = run(capsys, "project", "CS1", "--component", "1",
                       "--steps", "a,e;b")
    assert out.strip() == "{a} {b}"
    code, out, _ = run(capsys, "project", "CS1", "--component", "2",
                       "--steps", "a;b", "--mixed")
    assert out.strip() == "{p5}"


def test_phases_prints_the_markings(capsys):
    code, out, _ = run(capsys, "phases", "BSA0", "--place", "p4")
    assert code == 0
    assert out.strip() == "{r11,r9}"


def test_bsa_check_summarises(capsys):
    code, out, _ = run(capsys, "bsa-check", "BSA0", "--format", "json")
    body = json.loads(out)
    assert body["scenarios"] == 5
    assert body["maximal_scenarios"] == 2
    assert body["well_formed"] == "not-ok"
    assert code == 1


def test_export_dot_writes_files(capsys, tmp_path):
    target = tmp_path / "out.dot"
    code, out, _ = run(capsys, "export-dot", "AN1", "--out", str(target))
    assert code == 0
    assert target.read_text().startswith("digraph")
    code, out, _ = run(capsys, "export-dot", "AN1")
    assert out.startswith("digraph")


def test_wrong_kind_arguments_exit_with_usage_error(capsys):
    code, _, err = run(capsys, "phases", "AN1", "--place", "p1")
    assert code == 2
    code, _, err = run(capsys, "causes", "CS1", "--transition", "a")
    assert code == 2
    code, _, err = run(capsys, "syncycles", "AN1")
    assert code == 2


def test_argparse_usage_errors_exit_with_two(capsys):
    with pytest.raises(SystemExit) as err:
        main(["enabled"])
    assert err.value.code == 2
