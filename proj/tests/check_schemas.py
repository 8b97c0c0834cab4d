"""Runs the CLI binary and validates every JSON artifact against the shipped schemas."""

import json
import os
import subprocess
import sys
import tempfile

import jsonschema

BIN, SCHEMAS = sys.argv[1], sys.argv[2]


def schema(name):
    with open(os.path.join(SCHEMAS, name)) as f:
        return json.load(f)


def run(*args, expect=0):
    p = subprocess.run([BIN, *args], capture_output=True, text=True)
    if p.returncode != expect:
        sys.exit(f"{args}: exit {p.returncode}, expected {expect}\n{p.stderr}")
    return p


def load(path):
    with open(path) as f:
        return json.load(f)


def check(doc, name):
    jsonschema.validate(doc, schema(name), cls=jsonschema.Draft202012Validator)


with tempfile.TemporaryDirectory() as d:
    graph = os.path.join(d, "g.col")
    run("gen", "planted", "90", "3", "0.3", "--seed", "2", "--out", graph)
    check(load(graph + ".manifest.json"), "manifest.schema.json")

    out = os.path.join(d, "solve.json")
    run("solve", graph, "--vectors", "--out", out)
    check(load(out), "solve.schema.json")
    check(load(out + ".manifest.json"), "manifest.schema.json")
    run("solve", graph, "--strict", "--out", out)
    check(load(out), "solve.schema.json")

    out = os.path.join(d, "theta.json")
    run("theta", graph, "--out", out)
    check(load(out), "theta.schema.json")

    out = os.path.join(d, "col.txt")
    for method in ("hyperplane", "projection", "auto"):
        run("color", graph, "--method", method, "--out", out)
        check(load(out + ".stats.json"), "coloring_stats.schema.json")
        check(load(out + ".manifest.json"), "manifest.schema.json")

    for args in (["8", "4", "1", "--weighted"], ["12", "6", "1", "--weighted", "--emit-vectors"], ["4", "2", "1"],
                 ["200", "100", "3"]):
        out = os.path.join(d, "kb.json")
        run("kneser-bounds", *args, "--out", out)
        check(load(out), "kneser_bounds.schema.json")
        check(load(out + ".manifest.json"), "manifest.schema.json")

    suite = {"methods": ["hyperplane", "projection"],
             "instances": [{"name": "a", "planted": {"n": 50, "k": 3, "p": 0.3}},
                           {"name": "b", "kneser": {"m": 5, "r": 2, "t": 1}, "seed": 4},
                           {"name": "c", "dimacs": "g.col"}]}
    check(suite, "bench_suite.schema.json")
    spath = os.path.join(d, "suite.json")
    with open(spath, "w") as f:
        json.dump(suite, f)
    out = os.path.join(d, "bench.csv")
    run("bench", spath, "--out", out)
    check(load(out + ".manifest.json"), "manifest.schema.json")
    import csv
    with open(out, newline="") as f:
        raw = f.read()
    assert raw.endswith("\r\n") and "\n" not in raw.replace("\r\n", ""), "records must end in CRLF"
    rows = list(csv.reader(raw.splitlines()))
    assert len(rows) == 7 and len(rows[0]) == 11, rows

    # Failing runs still leave a valid manifest.
    mpath = os.path.join(d, "fail.json")
    run("kneser-bounds", "4", "2", "1", "--weighted", "--manifest", mpath, expect=1)
    check(load(mpath), "manifest.schema.json")
    run("replay", out + ".manifest.json", "--check")

print("all schema checks passed")
