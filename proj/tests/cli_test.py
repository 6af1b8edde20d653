"""Runs every CLI subcommand, validates output against schemas/, checks exit codes and reruns."""
import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema
from referencing import Registry, Resource

BIN = Path(sys.argv[1])
SCHEMAS = Path(sys.argv[2])

registry = Registry()
validators = {}
for path in sorted(SCHEMAS.glob("*.schema.json")):
    doc = json.loads(path.read_text())
    jsonschema.Draft202012Validator.check_schema(doc)
    registry = registry.with_resource(doc["$id"], Resource.from_contents(doc))
for path in sorted(SCHEMAS.glob("*.schema.json")):
    doc = json.loads(path.read_text())
    validators[path.name.removesuffix(".schema.json")] = jsonschema.Draft202012Validator(doc, registry=registry)

failures = []


def check(cond, what):
    if not cond:
        failures.append(what)
        print("FAIL", what)


def run(args, expect):
    proc = subprocess.run([str(BIN), *args], capture_output=True, text=True)
    check(proc.returncode == expect, f"{args[0]} exit {proc.returncode} != {expect}: {proc.stderr.strip()}")
    return proc


def run_json(args, expect, kind):
    proc = run(args, expect)
    try:
        doc = json.loads(proc.stdout)
    except json.JSONDecodeError as e:
        check(False, f"{args[0]} output is not JSON: {e}")
        return None
    check(doc.get("kind") == kind, f"{args[0]} kind {doc.get('kind')} != {kind}")
    validator = validators.get(doc.get("kind"))
    check(validator is not None, f"no schema for {doc.get('kind')}")
    if validator:
        errors = sorted(validator.iter_errors(doc), key=str)
        check(not errors, f"{args[0]} schema: {errors[:1]}")
    again = run(args, expect)
    check(again.stdout == proc.stdout, f"{args[0]} rerun differs")
    return doc


def element(tag, terms):
    return {"algebra": tag, "mode": "exact", "terms": [{"irrep": u, "re": c} for u, c in terms]}


with tempfile.TemporaryDirectory() as tmp:
    tmp = Path(tmp)

    def write(name, doc):
        path = tmp / name
        path.write_text(json.dumps(doc))
        for schema in ("element", "matrix"):
            if schema == "element" and "entries" in doc:
                continue
            errors = list(validators[schema].iter_errors(doc))
            check(not errors, f"input {name} against {schema}: {errors[:1]}")
        return str(path)

    lap = write("lap.json", element("group:Z", [(-1, "-1"), (0, "2"), (1, "-1")]))
    diff = write("diff.json", element("group:Z", [(0, "1"), (1, "-1")]))
    zd = write("zd.json", element("group:ZxZ/2", [([0, 0], "1"), ([0, 1], "-1")]))
    ha = write("ha.json", element("group:heisenberg", [([0, 0, 0], "1"), ([1, 0, 0], "-1")]))
    hs = write("hs.json", element("group:heisenberg", [([0, 0, 0], "1"), ([0, 1, 0], "-1")]))
    za = write("za.json", element("group:Z^2", [([0, 0], "1"), ([1, 0], "-1")]))
    zs = write("zs.json", element("group:Z^2", [([0, 0], "1"), ([0, 1], "-1")]))
    mat = write("mat.json", {"n": 2, "entries": [
        [element("group:Z", [(0, "1")]), element("group:Z", [])],
        [element("group:Z", []), element("group:Z", [(0, "1"), (1, "-1")])]]})

    cert = run_json(["folner", "--ring", "su2", "--S", "1", "--epsilon", "1/2", "--max-radius", "64"], 0,
                    "folner_certificate")
    if cert:
        check(cert["radius"] == 11 and 2 * cert["boundary_weight"] < cert["window_weight"], "su2 certificate")
    run_json(["folner", "--ring", "group:Z^2", "--S", "generators", "--epsilon", "1/10", "--max-radius", "40"], 0,
             "folner_certificate")
    run_json(["folner", "--ring", "group:Z", "--S", "[1]", "--epsilon", "1/100", "--max-radius", "5"], 2,
             "folner_exhaustion")
    run_json(["profile", "--ring", "su2", "--S", "1", "--max-radius", "12", "--format", "json"], 0,
             "isoperimetric_profile")
    csv = run(["profile", "--ring", "group:Z", "--S", "1", "--max-radius", "3"], 0).stdout.splitlines()
    check(csv[0] == "radius,weight,boundary,symmetric_boundary,ratio,ratio_decimal", "csv header")
    check(csv[2].startswith("1,3,1,2,2/3,"), f"csv row {csv[2]}")

    est = run_json(["kernel-dim", "--ring", "group:Z", "--matrix", lap, "--window", "20"], 0, "dimension_estimate")
    if est:
        check((est["lower"], est["upper"]) == ("0", "2/41"), "laplacian bracket")
    est = run_json(["kernel-dim", "--ring", "group:Z", "--matrix", mat, "--window", "10", "--side", "left"], 0,
                   "dimension_estimate")
    if est:
        check(est["n"] == 2 and est["lower"] == "0", "matrix estimate")

    c = run_json(["zero-divisor", "--element", zd, "--max-radius", "2"], 0, "zero_divisor_certificate")
    if c:
        check(c["verification"]["product_terms"] == 0, "a b = 0")
    run_json(["zero-divisor", "--element", diff, "--max-radius", "10"], 2, "zero_divisor_not_found")
    run_json(["ore-pair", "--a", ha, "--s", hs, "--max-radius", "16"], 0, "ore_pair")
    run_json(["ore-pair", "--a", za, "--s", zs, "--max-radius", "2"], 2, "ore_exhaustion")

    tower = run_json(["tower", "--ring", "group:Z", "--moduli", "3,9,27,81", "--matrix", diff, "--window", "10",
                      "--haar", diff], 0, "tower_report")
    if tower:
        check([l["quotient_dim"] for l in tower["levels"]] == ["1/3", "1/9", "1/27", "1/81"], "tower dims")
        check(tower["identities_hold"], "tower identities")
    run_json(["check-axioms", "--ring", "finite:S3"], 0, "axiom_report")
    run_json(["check-axioms", "--ring", "su2", "--labels", "0,1,2,3"], 0, "axiom_report")

    out = tmp / "out.json"
    run(["kernel-dim", "--ring", "group:Z", "--matrix", lap, "--window", "5", "--out", str(out)], 0)
    check(out.exists() and json.loads(out.read_text())["upper"] == "2/11", "--out file")

    bad = tmp / "bad.json"
    bad.write_text('{"algebra": "group:Z", "terms": [{"irrep": 0, "row": 2, "re": "1"}]}')
    proc = run(["zero-divisor", "--element", str(bad)], 1)
    check("row" in proc.stderr, "row diagnostic")
    bad.write_text('{"algebra": "group:Z",\n "terms": [,]}')
    proc = run(["zero-divisor", "--element", str(bad)], 1)
    check("line 2" in proc.stderr, f"line diagnostic: {proc.stderr.strip()}")
    run(["folner", "--ring", "su2", "--S", "1", "--epsilon", "0.5", "--max-radius", "4"], 1)
    run(["folner", "--ring", "nope", "--S", "1", "--epsilon", "1/2", "--max-radius", "4"], 1)
    run(["no-such-command"], 1)

print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
