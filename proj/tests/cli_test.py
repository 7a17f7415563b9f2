"""End-to-end checks of the phaseprob command line."""
import json
import os
import re
import subprocess
import sys
import xml.etree.ElementTree as ET

EXE, WORK = sys.argv[1], sys.argv[2]
os.makedirs(WORK, exist_ok=True)
failures = []


def run(*args, env=None):
    full_env = dict(os.environ, **(env or {}))
    return subprocess.run([EXE, *args], capture_output=True, text=True, env=full_env)


def check(name, cond, detail=""):
    print(("ok   " if cond else "FAIL ") + name)
    if not cond:
        failures.append(name)
        if detail:
            print("     " + detail.replace("\n", "\n     "))


r = run("classify", "--degree", "1", "--coeffs", "1,0,0,-1")
check("classify saddle", r.returncode == 0 and r.stdout.splitlines()[0] == "L1 (i=-1, l=2)", r.stdout + r.stderr)

r = run("classify", "--degree", "3", "--coeffs", "1,0,0,-1,1,1,0,0")
check("classify C9", r.returncode == 0 and r.stdout.splitlines()[0] == "C9 (i=1, l=0)", r.stdout + r.stderr)
check("odd degree reports stability", "global stability:" in r.stdout, r.stdout)

r = run("classify", "--degree", "2", "--coeffs", "1,0,0,0,0,1")
check("ill-posed quadratic exits 3", r.returncode == 3 and "λμ=0" in r.stdout, r.stdout + r.stderr)

r = run("classify", "--degree", "2", "--coeffs", "1,0,0,0,0,1", "--oracle-fallback")
check("oracle fallback classifies", r.returncode == 0 and r.stdout.startswith("Q2 (i=0, l=3)"), r.stdout + r.stderr)

r = run("classify", "--coeffs", "1,2,0,0,-1,1", "--format", "json")
doc = json.loads(r.stdout) if r.returncode == 0 else {}
check("classify json", doc.get("label") == "Q2" and doc.get("index") == 0 and doc.get("status") == "classified",
      r.stdout + r.stderr)

for args in (["classify", "--coeffs", "1,x,0,1"],
             ["classify", "--degree", "2", "--coeffs", "1,0,0,-1"],
             ["classify", "--coeffs", "1,2,3"],
             ["classify", "--bogus"],
             ["estimate", "--samples", "1.5"],
             ["estimate", "--samples", "0"],
             ["estimate", "--format", "xml"],
             ["lambda", "--degree", "0"],
             []):
    r = run(*args)
    check("usage error exits 2: " + " ".join(args), r.returncode == 2, r.stdout + r.stderr)

r = run("--help")
check("help exits 0", r.returncode == 0 and "classify" in r.stdout)

for n, expect in ((1, "1.4142135624"), (2, "1.6434336698"), (3, "1.8122478867"), (10, "2.4355178400")):
    r = run("lambda", "--degree", str(n))
    check(f"lambda {n}", r.returncode == 0 and r.stdout.strip() == expect, r.stdout + r.stderr)

a, b = os.path.join(WORK, "a.json"), os.path.join(WORK, "b.json")
for path, parts in ((a, "1"), (b, "3")):
    r = run("estimate", "--degree", "2", "--samples", "2e4", "--seed", "42", "--out", path,
            env={"PHASEPROB_PARTITIONS": parts})
    check("estimate writes " + os.path.basename(path), r.returncode == 0 and os.path.exists(path), r.stderr)
r = run("estimate", "--degree", "2", "--samples", "2e4", "--seed", "42", "--partitions", "1",
        "--out", os.path.join(WORK, "c.json"), env={"PHASEPROB_PARTITIONS": "3"})
with open(a, "rb") as fa, open(os.path.join(WORK, "c.json"), "rb") as fc:
    check("identical flags give byte-identical JSON", fa.read() == fc.read())
ja, jb = json.load(open(a)), json.load(open(b))
check("partition flag overrides the environment", ja["partitions"] == 1 and jb["partitions"] == 3)
ja.pop("partitions"), jb.pop("partitions")
check("report independent of partition count", ja == jb)
check("report schema", ja["schema"] == "phaseprob.estimate/1" and ja["samples"] == 20000 and ja["seed"] == 42
      and [row["label"] for row in ja["labels"]] == ["Q1", "Q2", "Q3", "Q4", "Q5"] and ja["repeller"] is None
      and "wall_seconds" not in ja)
total = sum(row["frequency"] for row in ja["labels"]) + ja["degenerate"]["fraction"] + ja["unrealized"]["fraction"]
check("frequencies sum to one", abs(total - 1) < 1e-12, str(total))

r = run("estimate", "--degree", "2", "--samples", "2e4", "--timing")
check("timing adds wall_seconds", r.returncode == 0 and "wall_seconds" in json.loads(r.stdout))

r = run("estimate", "--degree", "1", "--samples", "1e4", "--format", "csv")
lines = r.stdout.splitlines()
check("csv report", r.returncode == 0 and lines[0] == "label,count,frequency,stderr"
      and [l.split(",")[0] for l in lines[1:]] == ["L1", "L2", "L3"], r.stdout)

r = run("estimate", "--degree", "3", "--samples", "1e5", "--out", os.path.join(WORK, "d3.json"))
zs = [float(z) for z in re.findall(r"z ([+-][0-9.]+)", r.stdout)]
check("degree 3 relation z-scores below 4", r.returncode == 0 and len(zs) >= 6 and all(abs(z) < 4 for z in zs),
      r.stdout + r.stderr)

for n in (2, 3):
    r = run("selfcheck", "--degree", str(n), "--samples", "1e4")
    check(f"selfcheck degree {n}", r.returncode == 0 and "0 mismatches" in r.stdout and "PASS" in r.stdout,
          r.stdout + r.stderr)


def svg_lines(coeffs):
    path = os.path.join(WORK, "field.svg")
    r = run("svg", "--coeffs", coeffs, "--out", path)
    if r.returncode != 0:
        return None, r.stderr
    root = ET.parse(path).getroot()
    ok = root.tag.endswith("svg") and root.get("version") == "1.1"
    return ok, [e for e in root.iter() if e.tag.endswith("line") and e.get("class") == "invariant"]


ok, inv = svg_lines("1,0,0,-1")
check("saddle svg has two line overlays", ok and len(inv) == 2, str(inv))
ok, inv = svg_lines("1,0,0,-1,1,1,0,0")
check("k^4+1 svg has no line overlays", ok and len(inv) == 0, str(inv))
ok, inv = svg_lines("1,0,-1,-6,12,-6")
check("three-line quadratic svg", ok and len(inv) == 3, str(inv))

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
