import json
import math

import pytest

from nevlab.errors import PreconditionError
from nevlab.scenario import Scenario, TargetSpec, load_scenario, scenario_from_dict

GOOD = {
    "n": 1,
    "curve": ["z", "1"],
    "targets": [{"form": "x0", "degree": 1}, {"form": "x1", "degree": 1}],
    "epsilon": "1/2",
    "r_grid": [2, 4],
}


def test_load_roundtrip(tmp_path):
    path = tmp_path / "s.json"
    path.write_text(json.dumps(GOOD))
    s = load_scenario(path)
    assert s.n == 1 and len(s.targets) == 2 and s.epsilon == "1/2"
    assert s.parsed_curve().n == 1
    assert [f.degree for f in s.parsed_targets()] == [1, 1]


def test_unknown_keys_rejected():
    with pytest.raises(PreconditionError, match="unknown scenario keys"):
        scenario_from_dict({**GOOD, "M_overide": 3})


def test_missing_required_key():
    bad = dict(GOOD)
    del bad["curve"]
    with pytest.raises(PreconditionError, match="missing required key"):
        scenario_from_dict(bad)


def test_grid_must_ascend():
    with pytest.raises(PreconditionError):
        scenario_from_dict({**GOOD, "r_grid": [4, 2]})
    with pytest.raises(PreconditionError):
        scenario_from_dict({**GOOD, "r_grid": [-1, 2]})


def test_component_count():
    with pytest.raises(PreconditionError):
        scenario_from_dict({**GOOD, "curve": ["z"]})


def test_declared_degree_checked():
    s = scenario_from_dict({**GOOD, "targets": [
        {"form": "x0^2", "degree": 1}, {"form": "x1", "degree": 1}]})
    with pytest.raises(PreconditionError, match="degree"):
        s.parsed_targets()


def test_m_override_inf():
    s = scenario_from_dict({**GOOD, "M_override": "inf"})
    assert s.m_override == math.inf
    s2 = scenario_from_dict({**GOOD, "M_override": 3})
    assert s2.m_override == 3
    with pytest.raises(PreconditionError):
        scenario_from_dict({**GOOD, "M_override": "many"})


def test_bad_json_file(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    with pytest.raises(PreconditionError, match="not valid JSON"):
        load_scenario(path)


def test_direct_construction_validates():
    with pytest.raises(PreconditionError):
        Scenario(n=1, curve=("z", "1"), targets=(TargetSpec("x0", 0),),
                 r_grid=(1.0,))
