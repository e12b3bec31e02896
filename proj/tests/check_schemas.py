# Copyright 2026 The cartesian-codes Authors.
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
"""Runs the command-line tool and validates each JSON output against its schema."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
from referencing import Registry, Resource

CASES = [
    ("params", ["params", "--q", "9", "--sets", "full*4", "--d", "3"]),
    ("params", ["params", "--q", "5", "--sets", "{1,2},subgroup:4", "--d", "0"]),
    ("table", ["table", "--torus", "2,5,9", "--dmax", "13", "--format", "json"]),
    ("table", ["table", "--q", "4", "--sets", "full,units", "--dmax", "6", "--format", "json"]),
    ("verify", ["verify", "--q", "3", "--sets", "full,full", "--dall"]),
    ("verify", ["verify", "--q", "9", "--sets", "full*4", "--d", "3", "--max-words", "1000"]),
    ("construct", ["construct", "--degrees", "2,5,9"]),
    ("construct", ["construct", "--degrees", "3,3", "--allow-prime-powers"]),
]


def main():
    cli, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    schemas = {p.name: json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
    registry = Registry().with_resources((name, Resource.from_contents(s)) for name, s in schemas.items())

    def check(kind, args):
        out = subprocess.run([cli] + args, capture_output=True, text=True, check=True).stdout
        validator = jsonschema.Draft202012Validator(schemas[kind + ".schema.json"], registry=registry)
        errors = list(validator.iter_errors(json.loads(out)))
        for e in errors:
            print(f"{kind} {' '.join(args)}: {e.message}")
        return not errors

    ok = all([check(kind, args) for kind, args in CASES])
    with tempfile.TemporaryDirectory() as tmp:
        ok = check("matrix", ["matrix", "--q", "2", "--sets", "full,full", "--d", "1",
                              "--out", str(pathlib.Path(tmp) / "m.txt")]) and ok
    print("all outputs valid" if ok else "schema violations found")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
