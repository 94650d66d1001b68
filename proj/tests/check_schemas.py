"""Validates CLI outputs and the shipped fixtures against docs/schemas."""
import json
import pathlib
import subprocess
import sys

from jsonschema import Draft202012Validator
from referencing import Registry, Resource

binary, schema_dir, data_dir = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])

registry = Registry()
schemas = {}
for path in schema_dir.glob("*.schema.json"):
    contents = json.loads(path.read_text())
    Draft202012Validator.check_schema(contents)
    schemas[path.name] = contents
    registry = registry.with_resource(path.name, Resource.from_contents(contents))


def validate(schema, instance, what):
    validator = Draft202012Validator(schemas[schema], registry=registry)
    errors = sorted(validator.iter_errors(instance), key=lambda e: list(e.path))
    for e in errors:
        print(f"{what}: {'/'.join(map(str, e.path))}: {e.message}")
    return not errors


def run(*args, expect=0):
    proc = subprocess.run([binary, *args], capture_output=True, text=True)
    if proc.returncode != expect:
        print(f"{' '.join(args)}: exit {proc.returncode}, expected {expect}\n{proc.stderr}")
        sys.exit(1)
    return json.loads(proc.stdout)


ok = True
for name in ["a5_dihedral.json", "a5_split.json", "a5_tuple4_datum.json", "a5_tampered.json"]:
    ok &= validate("datum.schema.json", json.loads((data_dir / name).read_text()), name)
for name in ["a5_tuple3.json", "a5_tuple4.json", "psl27_tuple3.json"]:
    ok &= validate("tuple.schema.json", json.loads((data_dir / name).read_text()), name)

for name in ["a5_dihedral.json", "a5_split.json"]:
    ok &= validate("report.schema.json", run("analyze", str(data_dir / name)), "analyze " + name)
ok &= validate("report.schema.json",
               run("analyze", str(data_dir / "a5_tuple4_datum.json"), "--stabilizer-point", "0"),
               "analyze --stabilizer-point")
ok &= validate("report.schema.json", run("analyze", str(data_dir / "a5_tampered.json"), expect=2), "analyze tampered")
for name in ["a5_tuple3.json", "a5_tuple4.json", "psl27_tuple3.json"]:
    ok &= validate("degenerations.schema.json", run("degenerate", str(data_dir / name)), "degenerate " + name)
ok &= validate("verify.schema.json", run("verify-examples", "--json"), "verify-examples")

print("all outputs validate" if ok else "schema violations found")
sys.exit(0 if ok else 1)
