# Copyright 2026 The Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import pytest

import mdbst


def path_instance():
    return {
        "vertices": [0, 1, 2],
        "edges": [
            {"id": 0, "u": 0, "v": 1, "cost": 1},
            {"id": 1, "u": 1, "v": 2, "cost": "3/2"},
        ],
        "constraints": {
            "0": {"kind": "free"},
            "1": {"kind": "uniform", "rank": 2},
            "2": {"kind": "free"},
        },
    }


def test_solve_path():
    result = mdbst.solve(path_instance(), verify=True)
    assert result["status"] == "optimal"
    assert result["tree"] == [0, 1]
    assert mdbst.rational(result["cost"]) == mdbst.rational("5/2")
    assert all(v == 0 for v in result["violations"].values())
    assert result["verification"]["all_pass"]


def test_generate_solve_roundtrip():
    for kind in ("uniform-deg", "partition", "laminar"):
        inst = mdbst.generate(kind, 6, 9, seed=5)
        assert inst["metadata"]["feasible_by_construction"]
        result = mdbst.solve(inst, verify=True, debug_asserts=True)
        assert result["status"] == "optimal"
        assert result["verification"]["all_pass"]
        assert max(result["violations"].values()) <= 8


def test_generate_deterministic():
    a = mdbst.generate("partition", 5, 8, seed=11)
    b = mdbst.generate("partition", 5, 8, seed=11)
    assert a == b


def test_infeasible():
    inst = {
        "vertices": [0, 1, 2, 3],
        "edges": [
            {"id": 0, "u": 0, "v": 1, "cost": 1},
            {"id": 1, "u": 0, "v": 2, "cost": 1},
            {"id": 2, "u": 0, "v": 3, "cost": 1},
        ],
        "constraints": {
            "0": {"kind": "uniform", "rank": 1},
            "1": {"kind": "free"},
            "2": {"kind": "free"},
            "3": {"kind": "free"},
        },
    }
    assert mdbst.solve(inst)["status"] == "infeasible"
    assert mdbst.brute_force_opt(inst) is None


def test_cost_below_brute_force():
    inst = mdbst.generate("laminar", 6, 10, seed=3)
    result = mdbst.solve(inst)
    opt = mdbst.brute_force_opt(inst)
    assert opt is not None
    assert mdbst.rational(result["cost"]) <= opt


def test_parse_errors():
    with pytest.raises(mdbst.DomainError):
        mdbst.solve({"vertices": [0], "edges": [], "constraints": {}})
    with pytest.raises(mdbst.DomainError):
        mdbst.generate("ring", 5, 6)
