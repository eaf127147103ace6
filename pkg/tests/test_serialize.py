import json
import math

import pytest

from gsv.serialize import canonical_json


def test_plain_document():
    doc = {"n": 3, "A": [1, 0, 3], "ok": True, "none": None, "s": "x"}
    text = canonical_json(doc)
    assert text == '{"n":3,"A":[1,0,3],"ok":true,"none":null,"s":"x"}'
    assert json.loads(text) == doc


def test_preserves_insertion_order():
    assert canonical_json({"b": 1, "a": 2}) == '{"b":1,"a":2}'


def test_float_formatting_is_reproducible():
    p = 1.0 - 2.0 ** (-1.0 / 3.0)
    a = canonical_json({"p": p})
    b = canonical_json({"p": p})
    assert a == b
    # shortest-round-trip digits: parsing gives back the exact double
    assert json.loads(a)["p"] == p


def test_integral_floats_render_without_a_point():
    assert canonical_json([1, 1.0]) == "[1,1]"
    assert json.loads(canonical_json([2.5])) == [2.5]


def test_rejects_non_finite():
    for bad in (math.nan, math.inf, -math.inf):
        with pytest.raises(ValueError):
            canonical_json({"x": bad})


def test_rejects_unknown_types():
    with pytest.raises(TypeError):
        canonical_json({"x": {1, 2}})


def test_nested_structures():
    doc = {"rows": [[0, 1], [1, 0]], "meta": {"deep": [{"k": 0.5}]}}
    assert json.loads(canonical_json(doc)) == doc
