import json

import jsonschema
import pytest

from torickit.catalog import cp_fan, hirzebruch_fan
from torickit.document import (
    FanDocument,
    document_from_fan,
    document_to_obj,
    fan_document_from_obj,
    fan_from_document,
    load_fan_file,
    poly_tuple_from_obj,
    poly_tuple_to_obj,
)
from torickit.errors import DocumentError
from torickit.gaussian import gaussian, poly_from_roots
from torickit.holmap import PolyTuple
from torickit.schemas import FAN_DOCUMENT_SCHEMA, POLY_TUPLE_SCHEMA


class TestFanDocuments:
    def test_roundtrip(self):
        fan = hirzebruch_fan(2)
        doc = document_from_fan(fan, "h2")
        obj = document_to_obj(doc)
        jsonschema.validate(obj, FAN_DOCUMENT_SCHEMA)
        assert fan_from_document(fan_document_from_obj(obj)) == fan
        assert fan_document_from_obj(obj) == doc

    def test_one_based_indices(self):
        doc = document_from_fan(hirzebruch_fan(1))
        assert sorted(doc.maximal_cones) == [(1, 2), (1, 4), (2, 3), (3, 4)]

    def test_rejects_bad_documents(self):
        good = document_to_obj(document_from_fan(cp_fan(2)))
        for mutate in [
            lambda o: o.pop("dimension"),
            lambda o: o.update(schema_version=99),
            lambda o: o.update(generators=[]),
            lambda o: o.update(generators=[[1], [0, 1], [-1, -1]]),
            lambda o: o.update(maximal_cones=[[0, 1]]),
            lambda o: o.update(maximal_cones=[[1, 1]]),
            lambda o: o.update(maximal_cones=[[1, 99]]),
            lambda o: o.update(name=17),
        ]:
            broken = json.loads(json.dumps(good))
            mutate(broken)
            with pytest.raises(DocumentError):
                fan_document_from_obj(broken)

    def test_load_missing_file(self, tmp_path):
        with pytest.raises(DocumentError):
            load_fan_file(tmp_path / "nope.json")

    def test_load_bad_json(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        with pytest.raises(DocumentError):
            load_fan_file(path)


class TestPolyTupleDocuments:
    def test_roundtrip(self):
        tup = PolyTuple.from_polys(
            [
                poly_from_roots([(gaussian("1/2", "-2/3"), 1), (gaussian(4), 1)]),
                poly_from_roots([(gaussian(-1), 1)]),
            ]
        )
        obj = poly_tuple_to_obj(tup)
        jsonschema.validate(obj, POLY_TUPLE_SCHEMA)
        assert poly_tuple_from_obj(obj) == tup

    def test_leading_one_is_implicit(self):
        obj = {"schema_version": 1, "polynomials": [[["-1", "0"]]]}
        tup = poly_tuple_from_obj(obj)
        assert tup.degrees == (1,)
        assert tup.polys[0] == poly_from_roots([(gaussian(1), 1)])

    def test_rejects_bad_tuples(self):
        for obj in [
            {"schema_version": 1, "polynomials": []},
            {"schema_version": 1, "polynomials": [[]]},
            {"schema_version": 1, "polynomials": [[["x", "0"]]]},
            {"schema_version": 1, "polynomials": [[["1/0", "0"]]]},
            {"schema_version": 1, "polynomials": [[["1", "0", "2"]]]},
            {"schema_version": 2, "polynomials": [[["1", "0"]]]},
        ]:
            with pytest.raises(DocumentError):
                poly_tuple_from_obj(obj)


class TestBundledCatalogFile:
    def test_every_catalog_entry_validates_against_the_schema(self):
        from importlib import resources

        raw = json.loads(
            resources.files("torickit.data").joinpath("catalog.json").read_text("utf-8")
        )
        assert isinstance(raw, list) and raw
        for obj in raw:
            jsonschema.validate(obj, FAN_DOCUMENT_SCHEMA)
            for item in obj["expected"].values():
                assert set(item) == {"value", "source"}
