"""End-to-end checks of the ordcone executable: outputs and exit codes.

usage: cli_test.py <ordcone binary> <data dir>
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

BIN = sys.argv[1]
DATA = Path(sys.argv[2])
FIG1A = str(DATA / "fig1a.json")
FIG1B = str(DATA / "fig1b.json")

failures = []


def run(*args):
    return subprocess.run([BIN, *args], capture_output=True, text=True)


def expect(name, cond, detail=""):
    print(("ok   " if cond else "FAIL ") + name + ("" if cond else f"  {detail}"))
    if not cond:
        failures.append(name)


def route(graph, s, t, *extra):
    return run("--json", "route", "--graph", graph, "-s", s, "-t", t, "--K", "2", *extra)


r = route(FIG1A, "6", "1", "--omega", "1", "--gamma", "0")
expect("route fig1a exit", r.returncode == 0, r.stderr)
doc = json.loads(r.stdout)
vectors = sorted(tuple(x["count_vector"]) for x in doc["routes"])
expect("route fig1a vectors", vectors == [("0", "1"), ("9", "0")], vectors)

r = route(FIG1A, "6", "1", "--omega", "1", "--gamma", "1/8")
expect("route fig1a gamma 1/8", [x["count_vector"] for x in json.loads(r.stdout)["routes"]] == [["0", "1"]])

r = route(FIG1B, "6", "10", "--omega", "2")
expect("route fig1b omega 2", [x["count_vector"] for x in json.loads(r.stdout)["routes"]] == [["6", "0"]])

r = route(FIG1A, "6", "nope")
expect("unknown node exits 1", r.returncode == 1 and "nope" in r.stderr, r.stderr)

r = route(FIG1A, "1", "6")
expect("unreachable target is empty", r.returncode == 0 and json.loads(r.stdout)["routes"] == [])

r = route(FIG1A, "6", "1", "--omega", "3", "--gamma", "1/2")
expect("infeasible weights exit 2", r.returncode == 2, r.returncode)

r = run("--strict", "cone", "--K", "2", "--omega", "2", "--gamma", "1/2")
expect("strict degenerate exits 2", r.returncode == 2, r.returncode)

r = run("--json", "cone", "--K", "2", "--omega", "2", "--gamma", "1/2")
expect("degenerate merges", r.returncode == 0 and "merge" in r.stdout, r.stderr)

r = run("cone", "--K", "3", "--omega", "1", "--omega-vec", "1,1")
expect("conflicting weight options exit 1", r.returncode == 1, r.returncode)

r = run("--cap", "1", "route", "--graph", FIG1A, "-s", "6", "-t", "1", "--K", "2", "--mode", "all_paths")
expect("cap overflow exits 3", r.returncode == 3, r.returncode)

r = run("dominates", "--K", "2", "--omega", "1", "--y1", "1,0", "--y2", "0,1")
expect("dominates", r.returncode == 0 and "dominates: yes" in r.stdout, r.stdout)
r = run("dominates", "--K", "2", "--omega", "1", "--y1", "0,1", "--y2", "1,0")
expect("does not dominate", r.returncode == 0 and "violated facet: (0, 1)" in r.stdout, r.stdout)

r = run("bogus")
expect("unknown subcommand exits 1", r.returncode == 1, r.returncode)

with tempfile.TemporaryDirectory() as tmp:
    res = str(Path(tmp) / "r.json")
    filtered = str(Path(tmp) / "f.json")
    run("route", "--graph", FIG1A, "-s", "6", "-t", "1", "--K", "2", "-o", res)
    r = run("filter", res, "-o", filtered, "--K", "2")
    expect("filter round trip", r.returncode == 0 and Path(res).read_text() == Path(filtered).read_text(), r.stderr)

    r = run("export-geojson", "--result", res, "--graph", FIG1A)
    fc = json.loads(r.stdout)
    expect("geojson features", fc["type"] == "FeatureCollection" and len(fc["features"]) == 2)

    points = Path(tmp) / "p.json"
    points.write_text(json.dumps({"points": [{"id": "a", "vector": ["2", "0"]}, {"id": "b", "vector": ["0", "1"]},
                                             {"id": "c", "vector": ["2", "1"]}]}))
    r = run("--json", "filter", str(points), "--K", "2", "--omega", "1")
    expect("points filter", r.returncode == 0 and '"c"' not in r.stdout, r.stdout)

sweep = ("sweep", "--graph", FIG1A, "-s", "6", "-t", "1", "--omega-grid", "1,2,3", "--gamma-grid", "0,1/8,1/4",
         "--no-timing")
a, b = run(*sweep, "--threads", "1"), run(*sweep, "--threads", "4")
lines = a.stdout.strip().splitlines()
expect("sweep rows", a.returncode == 0 and len(lines) == 10 and lines[0].startswith("omega,gamma"), a.stdout)
expect("sweep deterministic across threads", a.stdout == b.stdout)

r = run("verify", "--K", "2", "--graph", FIG1A, "-s", "6", "-t", "1")
expect("verify passes", r.returncode == 0 and "FAIL" not in r.stdout, r.stdout)
r = run("verify", "--K", "4", "--omega", "1", "--gamma", "1/3", "--debug-corrupt-facet", "0")
expect("verify negative control exits 4", r.returncode == 4 and "FAIL" in r.stdout, r.stdout)

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
