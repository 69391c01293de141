import json

import jsonschema
import pytest

from ihtools import corpus
from ihtools.documents import (DocumentError, _schema, complex_from_document, complex_to_document,
                               corpus_document, load_complex, load_map, parse_json)
from ihtools.homology import betti_numbers
from ihtools.stratify import canonical_stratification

SQUARE_PINCH = {
    "name": "cone-pair",
    "vertices": ["n", "s", "a", "b", "c"],
    "maximal_simplices": [["n", "a", "b"], ["n", "b", "c"], ["n", "a", "c"],
                          ["s", "a", "b"], ["s", "b", "c"], ["s", "a", "c"]],
    "subcomplexes": {"top": [["n", "a", "b"], ["n", "b", "c"], ["n", "a", "c"]]},
    "stratification": [{"codim": 2, "simplices": [["n"], ["s"]]}],
}


def test_parse_and_stratification():
    lc = complex_from_document(SQUARE_PINCH)
    assert betti_numbers(lc.complex) == (1, 0, 1)
    s = lc.stratification()
    assert s.vertex_sets[2] == {"n", "s"}


@pytest.mark.parametrize("name", corpus.SPACES)
def test_round_trip(name):
    k = corpus.build(name).complex
    doc = complex_to_document(k, name)
    jsonschema.validate(doc, _schema("complex.schema.json"))
    back = complex_from_document(json.loads(json.dumps(doc))).complex
    assert back.f_vector() == k.f_vector()
    assert betti_numbers(back) == betti_numbers(k)
    assert set(back.subcomplexes) == set(k.subcomplexes)


def test_stratification_round_trip():
    k = corpus.susp_torus()
    s = canonical_stratification(k)
    doc = complex_to_document(k, "st", stratification=s)
    assert [e["codim"] for e in doc["stratification"]] == [3]
    s2 = complex_from_document(doc).stratification()
    assert s2.vertex_sets == {c: frozenset(str(v) for v in vs) for c, vs in s.vertex_sets.items()}


def test_json_syntax_error_has_position():
    with pytest.raises(DocumentError) as exc:
        parse_json('{"name": "x",\n "vertices": [}', "doc.json")
    assert exc.value.invariant == "json-syntax"
    assert "line 2" in str(exc.value)


@pytest.mark.parametrize("mutate,invariant", [
    (lambda d: d["maximal_simplices"].append(["n", "zz"]), "vertices-declared"),
    (lambda d: d["maximal_simplices"].append(["n", "n"]), "no-repeated-vertex"),
    (lambda d: d["stratification"].append({"codim": 2, "simplices": [["a"]]}), "codims-increasing"),
    (lambda d: d.update(components=["nope"]), "components-named"),
    (lambda d: d.update(vertices=["n", "n"]), "schema"),
    (lambda d: d.pop("name"), "schema"),
    (lambda d: d.update(colour="red"), "schema"),
])
def test_named_invariants(mutate, invariant):
    doc = json.loads(json.dumps(SQUARE_PINCH))
    mutate(doc)
    with pytest.raises(DocumentError) as exc:
        complex_from_document(doc)
    assert exc.value.invariant == invariant


def test_bad_stratification_reported():
    doc = json.loads(json.dumps(SQUARE_PINCH))
    doc["stratification"] = [{"codim": 2, "simplices": [["n", "a"]]}]
    with pytest.raises(DocumentError) as exc:
        complex_from_document(doc).stratification()
    assert exc.value.invariant == "stratification"


def test_load_by_corpus_name_and_missing():
    assert load_complex("glued_spheres").complex.f_vector() == corpus.glued_spheres().f_vector()
    with pytest.raises(DocumentError) as exc:
        load_complex("no_such_space")
    assert exc.value.invariant == "exists"


def test_map_documents(tmp_path):
    doc = corpus_document("normalization_map")
    jsonschema.validate(doc, _schema("map.schema.json"))
    path = tmp_path / "f.json"
    path.write_text(json.dumps(doc))
    lm = load_map(str(path))
    assert lm.label == "algebraic-model"
    assert lm.map.codomain.f_vector() == (11, 30, 20)
    bad = dict(doc, vertex_map={**doc["vertex_map"], "1": "11"})
    path.write_text(json.dumps(bad))
    with pytest.raises(DocumentError) as exc:
        load_map(str(path))
    assert exc.value.invariant == "valid-map"


def test_relative_references(tmp_path):
    (tmp_path / "sub").mkdir()
    (tmp_path / "sub" / "x.json").write_text(json.dumps(corpus_document("circle")))
    (tmp_path / "sub" / "m.json").write_text(json.dumps(
        {"domain": "x.json", "codomain": "x.json", "vertex_map": {"0": "1", "1": "2", "2": "0"}}))
    lm = load_map(str(tmp_path / "sub" / "m.json"))
    assert lm.label == "unlabeled"
