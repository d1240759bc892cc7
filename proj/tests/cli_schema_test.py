# Copyright 2026 The liemap Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ==============================================================================
"""Runs every liemap subcommand, validates output against its schema, checks exit codes and
byte-identical reruns.

usage: cli_schema_test.py LIEMAP SCHEMA_DIR FIXTURE_DIR
"""

import json
import os
import subprocess
import sys
import tempfile

import jsonschema

LIEMAP, SCHEMAS, FIXTURES = (os.path.abspath(a) for a in sys.argv[1:4])
# Run from an empty directory so @file and --fixtures fall back to the shipped fixtures.
WORKDIR = tempfile.mkdtemp(prefix="liemap-cli-")

# (schema, args, expected exit code)
CASES = [
    ("roots", ["roots", "--algebra", "G2"], 0),
    ("algebra", ["algebra", "--type", "B", "--rank", "2", "--field", "F7", "--print-structure"], 0),
    ("parse", ["parse", "--poly", "[X,[Y,X]] - 2*[Y,X]"], 0),
    ("identity", ["identity", "--poly", "@filippov.lie", "--field", "Q", "--mode", "exact"], 0),
    ("identity", ["identity", "--poly", "@razmyslov.lie", "--mode", "randomized", "--seed", "5"], 0),
    ("identity", ["identity", "--poly", "[[X,Y],Y]", "--expect", "identity"], 1),
    ("witness", ["witness", "--realization", "sl3", "--fixtures", "paper-a2"], 0),
    ("witness", ["witness", "--realization", "so5", "--fixtures", "paper-b2"], 0),
    ("witness-search", ["witness-search", "--realization", "sl3", "--poly", "[X,Y]", "--budget", "100"], 0),
    ("engel-solve", ["engel-solve", "--algebra", "A2", "--field", "F5", "--m", "2", "--seed", "3"], 0),
    ("engel-solve", ["engel-solve", "--algebra", "B2", "--field", "Q", "--coeffs", "1,1",
                     "--target", '{"basis":"chevalley","coeffs":[1,2,0,1,0,0,3,0,0,1]}'], 0),
    ("scan", ["scan", "--poly", "[[X1,X2],X2]", "--algebra", "A1", "--field", "F3", "--mode", "exhaustive"], 0),
    ("scan", ["scan", "--poly", "[X,Y]", "--algebra", "A2", "--field", "F3", "--mode", "sampled",
              "--samples", "5000", "--workers", "3"], 0),
    ("central-probe", ["central-probe", "--algebra", "A2", "--field", "F3", "--m-from", "1", "--m-to", "3",
                       "--workers", "4"], 0),
    ("example48", ["example48"], 0),
    ("error", ["parse", "--poly", "[X,"], 2),
    ("error", ["engel-solve", "--algebra", "A2", "--field", "F3", "--m", "2",
               "--target", '{"coeffs":[1,2,0,0,0,0,0,0]}'], 1),
    ("error", ["central-probe", "--algebra", "A2", "--field", "F3", "--budget", "10"], 1),
    (None, ["no-such-command"], 2),
    (None, ["identity", "--poly", "@missing-file.lie"], 2),
]


def load_schema(name):
    with open(os.path.join(SCHEMAS, name + ".schema.json")) as f:
        return json.load(f)


def run(args):
    return subprocess.run([LIEMAP] + args, capture_output=True, cwd=WORKDIR)


def main():
    failures = 0
    for schema, args, code in CASES:
        first = run(args)
        second = run(args)
        label = " ".join(args)
        problems = []
        if first.returncode != code:
            problems.append(f"exit {first.returncode}, expected {code}")
        if first.stdout != second.stdout:
            problems.append("output differs between runs")
        if schema is not None:
            try:
                doc = json.loads(first.stdout)
                jsonschema.validate(doc, load_schema(schema))
            except (ValueError, jsonschema.ValidationError) as e:
                problems.append(f"schema {schema}: {str(e).splitlines()[0]}")
        status = "ok" if not problems else "FAIL " + "; ".join(problems)
        print(f"{status:6} {label}")
        failures += bool(problems)
    # Worker count must not change scan output.
    base = ["scan", "--poly", "[[X,Y],Y]", "--algebra", "A1", "--field", "F5"]
    outs = {run(base + ["--workers", str(w)]).stdout for w in (1, 2, 5)}
    print(("ok    " if len(outs) == 1 else "FAIL  ") + "scan output independent of --workers")
    failures += len(outs) != 1
    print(f"{failures} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
