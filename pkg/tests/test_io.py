import json

import pytest
from hypothesis import given, strategies as st

from wreathkit.errors import SchemaError
from wreathkit.fixtures import beck_fixtures, extension_fixtures
from wreathkit.groups import make_group
from wreathkit.io import (
    beck_to_json,
    build_beck,
    build_extension,
    build_group,
    build_lie_extension,
    extension_to_json,
    group_to_json,
    lie_extension_to_json,
    parse_input,
    parse_text,
    validate,
)
from wreathkit.lie.fixtures import lie_fixtures

Z4_DOC = {"A": "Z2", "G": "Z4", "B": "Z2", "k": [0, 2], "f": [0, 1, 0, 1]}


def test_valid_extension_document():
    doc = validate(Z4_DOC, "extension")
    assert doc.kind == "extension"
    E = build_extension(doc)
    assert E.G.order == 4 and E.k.map == (0, 2)


def test_missing_field_is_named():
    bad = dict(Z4_DOC)
    del bad["f"]
    with pytest.raises(SchemaError) as exc:
        validate(bad, "extension")
    assert exc.value.witness == "$.f"
    assert "'f'" in str(exc.value)


def test_nested_error_path():
    bad = dict(Z4_DOC, G={"table": [[0, 1], [1, "x"]]})
    with pytest.raises(SchemaError) as exc:
        validate(bad, "extension")
    assert exc.value.witness == "$.G.table[1][1]"


def test_non_json_rejected(tmp_path):
    p = tmp_path / "junk.json"
    p.write_bytes(b"\x00\xffnot json")
    with pytest.raises(SchemaError):
        parse_input(p, "extension")
    with pytest.raises(SchemaError):
        parse_text("{", "extension")
    with pytest.raises(SchemaError):
        parse_input(tmp_path / "missing.json", "extension")


def test_group_shorthand_and_permutations():
    assert build_group("Z5").order == 5
    G = build_group(parse_text('{"permutations": [[1, 2, 0], [1, 0, 2]]}', "group").data)
    assert G.order == 6
    with pytest.raises(SchemaError):
        validate({"name": "nothing"}, "group")


@pytest.mark.parametrize("name", list(extension_fixtures()))
def test_extension_round_trip(name):
    E = extension_fixtures()[name]
    text = json.dumps(extension_to_json(E))
    F = build_extension(parse_text(text, "extension"))
    assert F.G.table == E.G.table and F.A.table == E.A.table and F.B.table == E.B.table
    assert F.k.map == E.k.map and F.f.map == E.f.map


def test_beck_round_trip():
    for mod in beck_fixtures(3):
        again = build_beck(parse_text(json.dumps(beck_to_json(mod)), "beck"))
        assert again.rho == mod.rho and again.M.table == mod.M.table


@pytest.mark.parametrize("name", list(lie_fixtures()))
def test_lie_round_trip(name):
    E = lie_fixtures()[name].ext
    again = build_lie_extension(parse_text(json.dumps(lie_extension_to_json(E)), "lie-extension"))
    assert again.G.c == E.G.c and again.k.matrix == E.k.matrix and again.f.matrix == E.f.matrix


def test_lie_rationals_accepted():
    doc = {"name": "r", "dim": 2, "brackets": [[0, 1, ["1/2", 0]]]}
    validate(doc, "lie")
    with pytest.raises(SchemaError):
        validate({"dim": 2, "brackets": [[0, 1, ["half", 0]]]}, "lie")


@given(st.lists(st.permutations(range(4)), min_size=1, max_size=2))
def test_table_round_trip_is_bit_exact(perms):
    G = make_group(permutations=[list(p) for p in perms])
    again = build_group(json.loads(json.dumps(group_to_json(G))))
    assert again.table == G.table
