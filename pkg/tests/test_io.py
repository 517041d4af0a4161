import json
from fractions import Fraction

import pytest

from helpers import S, arrangement
from tropblade import io
from tropblade.bladecomplex import beta_to_L
from tropblade.errors import SizeError
from tropblade.separation import boundary_collection, w0
from tropblade.tropical import PluckerVector, d_vector


def test_collection_round_trip():
    B = boundary_collection(w0(6, 3), 6)
    data = io.collection_to_json(B)
    assert data["level"] == [6] and data["k"] == 2
    assert io.collection_from_json(json.loads(json.dumps(data))).sets == B.sets


def test_collection_errors():
    with pytest.raises(io.FormatError):
        io.collection_from_json({"sets": [[1, 2]]})


def test_arrangement_round_trip():
    arr = arrangement({"13": Fraction(1, 3), "24": -2}, 4)
    data = io.arrangement_to_json(arr)
    assert data["terms"] == [{"set": [1, 3], "weight": "1/3"}, {"set": [2, 4], "weight": "-2"}]
    assert io.arrangement_from_json(data) == arr


def test_arrangement_errors():
    with pytest.raises(SizeError):
        io.arrangement_from_json({"n": 5, "terms": [{"set": [1, 2]}, {"set": [1, 2, 3]}]})
    with pytest.raises(io.FormatError):
        io.arrangement_from_json({"n": 5, "terms": []})
    with pytest.raises(io.FormatError):
        io.arrangement_from_json({"n": 5, "terms": [{"set": [1, 2], "weight": "x"}]})
    assert io.arrangement_from_json({"n": 5, "terms": []}, size=2).is_zero()


def test_plucker_round_trip():
    p = d_vector(S("135", 6)) * Fraction(1, 2)
    data = io.plucker_to_json(p)
    assert data["entries"]["1,3,5"] == "0" and data["entries"]["2,4,6"] == "3/2"
    assert io.plucker_from_json(data) == p
    with pytest.raises(SizeError):
        io.plucker_from_json({"n": 4, "k": 2, "entries": {"1,2,3": "0"}})
    with pytest.raises(SizeError):
        io.plucker_from_json({"n": 4, "k": 2, "entries": {"1,2": "0"}})
    with pytest.raises(io.FormatError):
        io.plucker_from_json({"n": 4, "entries": {}})


def test_lvector_json():
    data = io.lvector_to_json(beta_to_L(arrangement({"13": 1}, 4)))
    assert data["coefficients"]["1,4"] == "3/4"
    assert len(data["frozen"]) == 4


def test_cells_json():
    from tropblade.blades import multisplit_cells

    data = io.cells_to_json(S("13", 4), multisplit_cells(S("13", 4)))
    assert data["blade"] == [1, 3] and len(data["cells"]) == 2


def test_load_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(io.FormatError):
        io.load(str(bad))
    with pytest.raises(io.FormatError):
        io.load(str(tmp_path / "missing.json"))


def test_parse_fraction():
    assert io.parse_fraction("3/6") == Fraction(1, 2)
    assert io.parse_fraction(2) == 2
    with pytest.raises(io.FormatError):
        io.parse_fraction("1/0")
    assert PluckerVector.zero(4, 2) == io.plucker_from_json(io.plucker_to_json(PluckerVector.zero(4, 2)))
