"""Validate every JSON document the CLI emits against schemas/."""

import json
import pathlib
import subprocess
import sys

import jsonschema
import referencing

exe, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])

resources = []
for path in schema_dir.glob("*.schema.json"):
    doc = json.loads(path.read_text())
    resources.append((doc["$id"], referencing.Resource.from_contents(doc)))
registry = referencing.Registry().with_resources(resources)


def validator(name):
    schema = json.loads((schema_dir / name).read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    return jsonschema.Draft202012Validator(schema, registry=registry)


def run(*args):
    out = subprocess.run([exe, *args], check=True, capture_output=True, text=True).stdout
    return out


def check(name, doc):
    errors = list(validator(name).iter_errors(doc))
    if errors:
        print(f"{name}: {errors[0].message}", file=sys.stderr)
        sys.exit(1)


def each(name, docs):
    for doc in docs:
        check(name, doc)


toda = '{"Q":[0,1,2],"W":[1,2,1]}'
check("orbit.schema.json", json.loads(run("evolve", "--bbs", "0100110", "-t", "5", "--format", "json")))
check("orbit.schema.json", json.loads(run("evolve", "--toda", toda, "-t", "3", "--format", "json")))
for c in (["8", "3", "0"], ["7", "3", "1", "0"], ["20", "7", "2", "0"], ["13", "6", "3", "1", "0"]):
    check("curve.schema.json", json.loads(run("curve", *c)))
check("toda_state.schema.json", json.loads(run("map", "beta", "--bbs", "1010001", "--format", "json")))
check("toda_state.schema.json", json.loads(run("map", "shift", "--toda", toda, "--format", "json")))
check("bbs_state.schema.json", json.loads(run("map", "rho", "--toda", toda, "--format", "json")))
check("psi_result.schema.json", json.loads(run("map", "psi", "--toda", toda, "--format", "json")))
check("jac_point.schema.json", json.loads(run("map", "pi", "--bbs", "0100110", "--format", "json")))
check("jac_point.schema.json", json.loads(run("map", "nu", "-C", "7", "3", "1", "0", "--format", "json")))
each("toda_state.schema.json", json.loads(run("enumerate", "toda", "-C", "7", "3", "1", "0", "--format", "json")))
each("bbs_state.schema.json", json.loads(run("enumerate", "bbs", "-L", "7", "--lambda", "1", "2", "--format", "json")))
for line in run("verify", "all", "--trials", "50", "--timing").splitlines():
    check("check_report.schema.json", json.loads(line))
check("rational.schema.json", "3/4")
check("conserved_vector.schema.json", {"C": ["7", "3", "1", "0"]})
print("all CLI JSON output validates")
