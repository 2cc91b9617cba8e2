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

"""Alternative optimal solutions for two-stage problems solved by Benders."""

import json

from ._core import (
    InputError,
    ModelError,
    PreconditionError,
    Problem,
    SolverError,
    enumerate_vertices,
    farmer_config_json,
    reference_graph_json,
    solve_lp,
)
from ._core import run as _run

__all__ = [
    "InputError",
    "ModelError",
    "PreconditionError",
    "Problem",
    "SolverError",
    "enumerate_vertices",
    "farmer_config",
    "reference_graph",
    "run",
    "solve_lp",
]


def run(problem, tol="abs:0", k=10, stage="first", benders_tol=1e-6,
        iter_limit=500):
    """Runs the full pipeline and returns the report as a dict.

    `problem` is a Problem, a JSON string, or a dict holding a two-stage
    problem, an interdiction graph or a farmer configuration.
    """
    if isinstance(problem, Problem):
        text = problem.to_json()
    elif isinstance(problem, str):
        text = problem
    else:
        text = json.dumps(problem)
    return _run(text, tol, k, stage, benders_tol, iter_limit)


def reference_graph(budget=1.0):
    return json.loads(reference_graph_json(budget))


def farmer_config(scenarios=1):
    return json.loads(farmer_config_json(scenarios))
