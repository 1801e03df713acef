"""Runs gmt-chains and validates each JSON document against schemas/v1."""

import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

tool, schemas, fixtures, data = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3]), pathlib.Path(sys.argv[4])

resources = []
for p in schemas.glob("*.schema.json"):
    doc = json.loads(p.read_text())
    resources.append((doc["$id"], Resource.from_contents(doc)))
registry = Registry().with_resources(resources)
base = json.loads((schemas / "chain.schema.json").read_text())["$id"].rsplit("/", 1)[0] + "/"


def check(schema, args, status=0):
    run = subprocess.run([tool, *map(str, args)], capture_output=True, text=True)
    if run.returncode != status:
        sys.exit(f"{args}: exit {run.returncode}, wanted {status}\n{run.stdout}{run.stderr}")
    validator = jsonschema.Draft202012Validator({"$ref": base + schema}, registry=registry)
    errors = list(validator.iter_errors(json.loads(run.stdout)))
    if errors:
        sys.exit(f"{args}: {errors[0].message} at {list(errors[0].absolute_path)}")
    print(f"ok  {schema:28} {' '.join(map(str, args))}")


for f in sorted(fixtures.glob("*.json")):
    doc = json.loads(f.read_text())
    jsonschema.Draft202012Validator({"$ref": base + "chain.schema.json"}, registry=registry).validate(doc)
    jsonschema.Draft202012Validator({"$ref": base + "group.schema.json"}, registry=registry).validate(doc["group"])
print("ok  fixtures")

sq = fixtures / "unit_square.json"
check("chain.schema.json", ["boundary", fixtures / "tetrahedron.json"])
check("chain.schema.json", ["push", sq, "--map-file", data / "scale_map.json"])
check("chain.schema.json", ["reduce-mod", sq, "--d", "3"])
check("cut.schema.json", ["cut", sq, "--f", "1,0", "--y", "1/2"])
check("decomposition.schema.json", ["flatnorm", fixtures / "unit_square_loop.json"])
check("decomposition.schema.json", ["flatnorm", "--integral", sq])
check("mass.schema.json", ["mass", fixtures / "triangle.json"])
check("constancy.schema.json", ["constancy", sq])
check("smith.schema.json", ["snf", data / "matrix.json"])
check("tensor.schema.json", ["tensor-check", "--matrix", "6", "--d", "4"])
check("tensor.schema.json", ["tensor-check", "--hom", data / "doubling.json", "--d-max", "4"])
check("report.schema.json", ["verify", "mod-d", "--seed", "7", "--cases", "20"])
check("error.schema.json", ["boundary", data / "point.json"], status=3)
check("error.schema.json", ["boundary", data / "truncated.json"], status=2)
