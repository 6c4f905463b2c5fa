# Copyright 2026 The luzin Authors
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

"""Validates shipped scenarios and produced artifacts against docs/schemas."""

import json
import pathlib
import sys

import jsonschema

root = pathlib.Path(sys.argv[1])
run_dirs = [pathlib.Path(p) for p in sys.argv[2:]]
schemas = {
    name: json.loads((root / "docs" / "schemas" / f"{name}.schema.json").read_text())
    for name in ("scenario", "stage_dump", "verdict")
}
for schema in schemas.values():
    jsonschema.Draft202012Validator.check_schema(schema)


def check(schema, path):
    jsonschema.Draft202012Validator(schemas[schema]).validate(json.loads(path.read_text()))
    print(f"ok  {schema}  {path}")


for path in sorted((root / "scenarios").glob("*.json")):
    if path.name == "malformed.json":
        continue
    check("stage_dump" if path.name == "tampered_dump.json" else "scenario", path)
for run in run_dirs:
    dumps = sorted(run.glob("stage_*.json"))
    if not dumps:
        sys.exit(f"no stage dumps in {run}")
    for path in dumps:
        check("stage_dump", path)
    check("verdict", run / "verdict.json")
