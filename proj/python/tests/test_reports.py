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


"""Reports from the command-line tool and bundled data against the schemas."""

import json
import os
import pathlib
import subprocess

import jsonschema
import pytest

import aosbenders as ab

SCHEMAS = pathlib.Path(os.environ.get(
    "AOSBENDERS_SCHEMAS", pathlib.Path(__file__).resolve().parents[2] / "schemas"))
DATA = pathlib.Path(os.environ.get(
    "AOSBENDERS_DATA", pathlib.Path(__file__).resolve().parents[2] / "data"))
CLI = os.environ.get("AOSBENDERS_CLI")


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


def validator(name):
    s = schema(name)
    jsonschema.Draft202012Validator.check_schema(s)
    return jsonschema.Draft202012Validator(s)


@pytest.mark.parametrize("file,name", [
    ("farmer1_problem.json", "two_stage_problem"),
    ("abs_value.json", "two_stage_problem"),
    ("mxsp_problem.json", "two_stage_problem"),
    ("reference_graph.json", "graph"),
    ("farmer3_config.json", "farmer_config"),
])
def test_bundled_data_validates(file, name):
    validator(name).validate(json.loads((DATA / file).read_text()))


def test_python_reports_validate():
    v = validator("report")
    v.validate(ab.run(ab.Problem.farmer(3), tol="rel:0.5", k=100, stage="ef"))
    v.validate(ab.run(ab.reference_graph(3), stage="second"))
    v.validate(ab.run(ab.Problem.abs_value(), stage="ef"))


def test_schema_rejects_what_the_parser_rejects():
    doc = json.loads((DATA / "farmer1_problem.json").read_text())
    doc["scenarios"][0]["senes"] = []
    with pytest.raises(jsonschema.ValidationError):
        validator("two_stage_problem").validate(doc)
    with pytest.raises(ab.InputError):
        ab.run(doc)


@pytest.mark.skipif(CLI is None, reason="AOSBENDERS_CLI not set")
@pytest.mark.parametrize("args", [
    ["farmer", "--scenarios", "1", "--tol", "abs:0"],
    ["farmer", "--scenarios", "3", "--tol", "rel:0.01", "--k", "50", "--stage", "ef"],
    ["mxsp", "--budget", "3", "--stage", "second"],
    ["solve", str(DATA / "abs_value.json"), "--stage", "ef"],
    ["solve", str(DATA / "mxsp_problem.json")],
])
def test_cli_reports_validate(args):
    out = subprocess.run([CLI, *args], check=True, capture_output=True, text=True).stdout
    validator("report").validate(json.loads(out))


@pytest.mark.skipif(CLI is None, reason="AOSBENDERS_CLI not set")
def test_cli_and_binding_agree():
    out = subprocess.run([CLI, "mxsp", "--budget", "2", "--stage", "ef"], check=True,
                         capture_output=True, text=True).stdout
    cli = json.loads(out)
    py = ab.run(ab.reference_graph(2), stage="ef")
    for key in ("benders", "tolerance", "candidates", "certified", "rejected",
                "second_stage", "extensive_form"):
        assert cli[key] == py[key], key
