# Copyright 2026 The aosbenders Authors
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


import math

import numpy as np
import pytest

import aosbenders as ab


def test_solve_lp_with_duals():
    sol = ab.solve_lp(c=[-1, -2], A=[[1, 3], [1, 1]], senses=["<=", "<="], b=[7, 4],
                      lower=[0, 0])
    assert sol["status"] == "optimal"
    np.testing.assert_allclose(sol["x"], [2.5, 1.5])
    assert sol["objective"] == pytest.approx(-5.5)
    # Strong duality: b'y equals the optimum.
    assert float(np.dot([7, 4], sol["duals"])) == pytest.approx(-5.5)


def test_solve_lp_statuses():
    assert ab.solve_lp([1], [[1]], [">="], [2], upper=[1])["status"] == "infeasible"
    assert ab.solve_lp([-1], np.zeros((0, 1)), [], [])["status"] == "unbounded"


def test_enumerate_vertices():
    out = ab.enumerate_vertices(c=[1, 1], A=np.zeros((0, 2)), senses=[], b=[], tau=1.0,
                                upper=[1, 1])
    assert out["exhausted"]
    assert sorted(map(tuple, np.round(out["points"], 9))) == [(0, 0), (0, 1), (1, 0)]


def test_farmer_problem():
    p = ab.Problem.farmer(1)
    assert p.name == "farmer-1"
    assert p.num_x == 3
    assert p.labels == ["wheat", "corn", "beets"]
    assert p.evaluate_Q([0, 0, 0])["value"] == pytest.approx(98000)
    b = p.solve_benders()
    assert b["converged"]
    assert b["z_star"] == pytest.approx(-118600)
    np.testing.assert_allclose(b["x_star"], [120, 80, 300], atol=1e-6)
    assert p.solve_ef()["z_star"] == pytest.approx(-118600)
    ok, value = p.certify([120, 80, 300], -118600)
    assert ok and value == pytest.approx(-118600)


def test_cut_supports_Q():
    p = ab.Problem.farmer(3)
    q = p.evaluate_Q([100, 100, 100])
    for x in ([100, 100, 100], [200, 50, 250], [0, 0, 0]):
        cut = q["alpha"] + float(np.dot(q["beta"], x))
        assert cut <= p.evaluate_Q(x)["value"] + 1e-6


def test_run_farmer():
    r = ab.run(ab.farmer_config(1), tol="rel:0.01", k=10)
    assert r["tolerance"]["tau"] == -117414
    assert len(r["candidates"]) == 6
    assert len(r["certified"]) == 6
    assert r["problem"]["kind"] == "farmer"


def test_run_interdiction():
    r = ab.run(ab.reference_graph(2), stage="second")
    assert r["objective_scale"] == -1
    assert r["benders"]["z_star"] == 7
    assert sorted(c["interdicted"] for c in r["certified"]) == [
        ["c->d", "d->t"], ["s->c", "c->d"]]
    assert [c["true_objective"] for c in r["rejected"]] == [5]
    paths = {a["path"] for s in r["second_stage"] for a in s["alternatives"]}
    assert paths == {"s->a->c->d->t", "s->b->c->d->t", "s->c->d->e->t", "s->c->d->f->t"}


def test_problem_json_round_trip():
    p = ab.Problem.mxsp(3)
    q = ab.Problem.from_json(p.to_json())
    assert q.to_json() == p.to_json()
    assert ab.run(q)["benders"]["z_star"] == ab.run(p)["benders"]["z_star"]


def test_abs_value_instance():
    p = ab.Problem.abs_value()
    for x in (-1.0, -0.25, 0.0, 0.5):
        assert p.evaluate_Q([x])["value"] == pytest.approx(abs(x))
    r = ab.run(p)
    assert r["benders"]["z_star"] == 0
    assert r["certified"][0]["x"] == [0]


def test_errors():
    with pytest.raises(ab.InputError, match="unknown field"):
        ab.run({"g": {"coeffs": [1]}, "bogus": 1})
    with pytest.raises(ab.InputError):
        ab.run("{not json")
    with pytest.raises(ab.InputError):
        ab.run(ab.Problem.farmer(1), tol="within:1")
    with pytest.raises(ab.InputError):
        ab.Problem.farmer(2)
    with pytest.raises(ab.SolverError):
        ab.run(ab.Problem.farmer(3), iter_limit=2)
    with pytest.raises(ab.ModelError):
        ab.run({"nodes": ["s", "a", "t"], "s": "s", "t": "t",
                "arcs": [{"from": "s", "to": "a"}]})
    with pytest.raises(ab.InputError, match="dimension"):
        ab.Problem.farmer(1).evaluate_Q([1, 2])
    # The Python base classes still catch them.
    assert issubclass(ab.InputError, ValueError)
    assert issubclass(ab.SolverError, RuntimeError)
    assert issubclass(ab.PreconditionError, ValueError)
    assert math.isfinite(ab.Problem.mxsp(1).first_stage_cost([0] * 11))
