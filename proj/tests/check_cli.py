"""Runs the metab binary end to end: JSON outputs against the shipped schemas,
exit codes, and byte-identical experiment CSV across thread counts.

usage: check_cli.py METAB SCHEMA_DIR FIXTURE_DIR
"""

import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

metab, schema_dir, fixture_dir = (pathlib.Path(a) for a in sys.argv[1:4])

schemas = {}
for path in schema_dir.glob("*.schema.json"):
    doc = json.loads(path.read_text())
    schemas[doc["$id"]] = doc
registry = Registry().with_resources((k, Resource.from_contents(v)) for k, v in schemas.items())

failures = []


def run(*args):
    return subprocess.run([str(metab), *args], capture_output=True, text=True)


def check_json(schema_id, *args):
    p = run(*args, "--format", "json")
    if p.returncode != 0:
        failures.append(f"{args}: exit {p.returncode}: {p.stderr.strip()}")
        return None
    doc = json.loads(p.stdout)
    validator = jsonschema.Draft7Validator(schemas[schema_id], registry=registry)
    errors = sorted(validator.iter_errors(doc), key=str)
    for e in errors:
        failures.append(f"{args}: {schema_id}: {e.message} at {list(e.absolute_path)}")
    return doc


def check_exit(expected, *args):
    p = run(*args)
    if p.returncode != expected:
        failures.append(f"{args}: exit {p.returncode}, expected {expected}")


for name in ("bs13", "two_bs", "two_commutators"):
    doc = check_json("structure_report.schema.json", "analyze", str(fixture_dir / f"{name}.txt"))
    stored = json.loads((fixture_dir / f"{name}.json").read_text())
    if doc is not None and doc != stored:
        failures.append(f"analyze {name}: differs from stored report")
    check_json("normalized_presentation.schema.json", "normalize", str(fixture_dir / f"{name}.txt"))

for text in ("< a | >", "< a, b | a^2, b^3, [a,b] a >", "< x, y, z | x^4 y^6 z^-2, [x,y]^3 x >"):
    check_json("structure_report.schema.json", "analyze", text)
    check_json("normalized_presentation.schema.json", "normalize", text)

check_json("smith.schema.json", "snf", "[[2,4],[4,4]]", "--minors")
check_json("smith.schema.json", "snf", '[["123456789012345678901234567890", 3], [0, 5]]')
check_json("smith.schema.json", "snf", '{"rows": 0, "cols": 2, "entries": []}')
check_json("experiment.schema.json", "experiment", "--n", "2", "--m", "2", "--lengths", "4,16",
           "--trials", "200", "--seed", "9")
doc = check_json("exact_prob.schema.json", "exact-prob", "1", "1", "2")
if doc is not None and doc["probability"] != "1/2":
    failures.append(f"exact-prob 1 1 2 gave {doc['probability']}")

check_exit(0, "exact-prob", "1", "1", "2")
check_exit(1)
check_exit(1, "bogus")
check_exit(1, "analyze", "< a | >", "--format", "csv")
check_exit(1, "experiment", "--lengths", "0,4")
check_exit(2, "analyze", "< a | b >")
check_exit(2, "analyze", str(fixture_dir / "missing.txt"))
check_exit(2, "snf", "[[1, 2], [3]]")
check_exit(3, "exact-prob", "3", "3", "11")
check_exit(3, "analyze", "< a, b | a^40 b^41 >", "--limit-word-length", "20")

csv_args = ("experiment", "--n", "2", "--m", "2", "--lengths", "4,16,64", "--trials", "500",
            "--seed", "77", "--format", "csv")
outputs = {run(*csv_args, "--threads", t).stdout for t in ("1", "1", "4", "16")}
if len(outputs) != 1:
    failures.append("experiment CSV differs across runs or thread counts")

for f in failures:
    print("FAIL:", f)
print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
