import json

import pytest

from domdodom import io, make_family
from domdodom.constructions import design10, fano


def test_json_shape(fano_family):
    doc = json.loads(io.dumps_family(fano_family))
    assert doc["n"] == 7 and doc["k"] == 3
    assert doc["sets"][0] == [1, 2, 3]
    assert all(s == sorted(s) for s in doc["sets"])


@pytest.mark.parametrize("F", [fano(), design10(), make_family(5, 3, [])])
def test_roundtrips(F, tmp_path):
    assert io.loads_family(io.dumps_family(F)) == F
    assert io.family_from_text(io.family_to_text(F)) == F
    io.write_family(F, tmp_path / "f.json")
    io.write_family(F, tmp_path / "f.txt", fmt="text")
    assert io.read_family(tmp_path / "f.json") == F
    assert io.read_family(tmp_path / "f.txt") == F


def test_text_format():
    F = make_family(4, 2, [[3, 4], [1, 2]])
    assert io.family_to_text(F) == "4 2\n1,2\n3,4\n"
    assert io.family_from_text("# comment\n4 2\n\n3, 4\n1,2\n") == F


def test_json_input_is_canonicalised():
    F = io.loads_family('{"n": 4, "k": 2, "sets": [[4, 3], [2, 1], [1, 2]]}')
    assert F.as_lists() == [[1, 2], [3, 4]]


def test_bad_documents():
    with pytest.raises(ValueError):
        io.loads_family('{"n": 4}')
    with pytest.raises(ValueError):
        io.family_from_text("")
