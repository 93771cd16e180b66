import json
import pathlib

import jsonschema
import pytest
from hypothesis import given, settings

from sonet import DocumentError, NetDocument, UnknownNode, \
    ValidationError, document_for, export_dot, fixture, fixture_names, \
    load, parse, save, serialize

from .strategies import acyclic_nets

HERE = pathlib.Path(__file__).resolve().parent.parent
SCHEMA = json.loads(
    (HERE / "src" / "sonet" / "schema" / "sonet.schema.json").read_text())


def test_every_fixture_round_trips_byte_stably():
    for name in fixture_names():
        doc = document_for(fixture(name))
        text = serialize(doc)
        again = parse(text)
        assert again == doc, name
        assert serialize(again) == text, name


def test_serialized_fixtures_validate_against_the_schema():
    for name in fixture_names():
        body = json.loads(serialize(document_for(fixture(name))))
        jsonschema.validate(body, SCHEMA)


def test_checked_in_documents_match_the_fixtures():
    for name in fixture_names():
        path = HERE / "nets" / f"{name}.sonet.json"
        assert path.exists(), path
        assert load(str(path)) == document_for(fixture(name)), name


def test_two_level_documents_keep_lower_upper_beta_order():
    text = serialize(document_for(fixture("BSA0")))
    keys = list(json.loads(text).keys())
    assert keys == ["kind", "lower", "upper", "beta"]


def test_node_lists_and_arcs_are_sorted():
    body = json.loads(serialize(document_for(fixture("AN1"))))
    assert body["places"] == sorted(body["places"])
    assert body["arcs"] == sorted(body["arcs"])


def test_syntax_errors_carry_line_and_column():
    with pytest.raises(DocumentError) as err:
        parse('{"kind": "acyclic",\n  "places": [}')
    assert err.value.code == "syntax"
    assert err.value.line == 2
    assert err.value.col is not None


def test_unknown_kinds_are_rejected():
    with pytest.raises(DocumentError) as err:
        parse('{"kind": "petri"}')
    assert err.value.code == "unknown-kind"


def test_duplicate_identifiers_are_rejected():
    body = {"kind": "acyclic", "places": ["p", "p"],
            "transitions": ["t"], "arcs": [["p", "t"], ["t", "p"]]}
    with pytest.raises(DocumentError) as err:
        parse(json.dumps(body))
    assert err.value.code == "duplicate-id"
    body = {"kind": "acyclic", "places": ["p"], "transitions": ["p"],
            "arcs": []}
    with pytest.raises(DocumentError) as err:
        parse(json.dumps(body))
    assert err.value.code == "duplicate-id"


def test_duplicates_across_components_are_rejected():
    body = {"kind": "csa",
            "components": [
                {"places": ["p1", "p2"], "transitions": ["a"],
                 "arcs": [["p1", "a"], ["a", "p2"]]},
                {"places": ["p1", "p3"], "transitions": ["b"],
                 "arcs": [["p1", "b"], ["b", "p3"]]}],
            "buffers": [], "buffer_arcs": []}
    with pytest.raises(DocumentError) as err:
        parse(json.dumps(body))
    assert err.value.code == "duplicate-id"


def test_structural_rules_are_still_checked():
    body = {"kind": "acyclic", "places": ["p"], "transitions": ["t"],
            "arcs": [["p", "t"]]}
    with pytest.raises(ValidationError):
        parse(json.dumps(body))


def test_markings_persist_and_must_name_known_nodes():
    doc = document_for(fixture("AN1"),
                       marking=frozenset({"p2", "p3"}))
    again = parse(serialize(doc))
    assert again.marking == frozenset({"p2", "p3"})
    assert again.initial_marking() == frozenset({"p2", "p3"})
    bad = json.loads(serialize(doc))
    bad["marking"] = ["zz"]
    with pytest.raises(UnknownNode):
        parse(json.dumps(bad))


def test_layout_hints_round_trip_but_stay_optional():
    doc = document_for(fixture("AN1"), layout={"p1": (0.0, 1.5)})
    again = parse(serialize(doc))
    assert again.layout == {"p1": (0.0, 1.5)}
    assert parse(serialize(document_for(fixture("AN1")))).layout == {}


def test_save_and_load_are_inverse(tmp_path):
    doc = document_for(fixture("CS1"))
    path = tmp_path / "cs1.sonet.json"
    save(doc, str(path))
    assert load(str(path)) == doc


@settings(max_examples=50)
@given(acyclic_nets())
def test_random_documents_round_trip(net):
    doc = document_for(net)
    body = json.loads(serialize(doc))
    jsonschema.validate(body, SCHEMA)
    assert parse(serialize(doc)) == doc


def test_dot_export_shapes_and_marks():
    dot = export_dot(document_for(fixture("AN1")))
    assert '"p1" [shape=circle, label="p1\\n●"]' in dot
    assert '"a" [shape=box, label="a"]' in dot
    assert '"p1" -> "a";' in dot


def test_dot_export_for_communication_nets():
    dot = export_dot(document_for(fixture("CS1")))
    assert dot.count("subgraph") == 2
    assert "style=dashed" in dot
    assert '"q1"' in dot


def test_dot_export_for_two_level_nets():
    dot = export_dot(document_for(fixture("BSA0")))
    assert dot.count("subgraph") == 2
    assert "style=dotted" in dot
    assert '"r1" -> "p1" [style=dotted, dir=none];' in dot


def test_dot_export_accepts_an_explicit_marking_and_highlight():
    doc = document_for(fixture("AN1"))
    dot = export_dot(doc, marking=frozenset({"p2"}),
                     highlight_scenario=frozenset({"a"}))
    assert '"p2" [shape=circle, label="p2\\n●"]' in dot
    assert "color=blue" in dot


def test_documents_refuse_non_nets():
    with pytest.raises(DocumentError):
        document_for("not a net")


def test_document_defaults_to_the_initial_marking():
    doc = document_for(fixture("BD1"))
    assert isinstance(doc, NetDocument)
    assert doc.initial_marking() == frozenset({"p1"})
