"""Exit codes, determinism and CSV/JSON agreement of the billiard CLI."""

import csv
import io
import json
import os
import subprocess
import sys
import tempfile

BIN = sys.argv[1]
failures = []


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("BILLIARD_MAX_WORDS", None)
    full_env.update(env or {})
    return subprocess.run([BIN, *args], capture_output=True, text=True, env=full_env)


def check(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


def rows_csv(text):
    return list(csv.DictReader(io.StringIO(text)))


def numeric(v):
    if v is None or v == "":
        return None
    if isinstance(v, (int, float)):
        return v
    try:
        return int(v)
    except ValueError:
        try:
            return float(v)
        except ValueError:
            return v


r = run("complexity", "--polygon", "square", "--max-n", "3")
check(r.returncode == 0 and r.stdout == "n,p,s\n1,4,8\n2,12,16\n3,28,\n", "complexity square table")

r = run("complexity", "--polygon", "equilateral", "--max-n", "1")
check(r.returncode == 0 and rows_csv(r.stdout)[0]["p"] == "3", "complexity equilateral p(1)=3")

with tempfile.TemporaryDirectory() as tmp:
    bad = os.path.join(tmp, "bad.poly")
    with open(bad, "w") as f:
        f.write("QFIELD 0\nV 0 0\nV 2 0\nV 2 1\nV 1 1\nV 1 2\nV 0 2\n")
    r = run("complexity", "--polygon-file", bad)
    check(r.returncode == 2 and "non-convex" in r.stderr, "non-convex file exits 2")

    quad = os.path.join(tmp, "quad.poly")
    with open(quad, "w") as f:
        f.write("# generic quadrilateral\nQFIELD 0\nV 0 0\nV 7/2 0\nV 5 3\nV 1 4\n")
    r = run("verify", "--polygon-file", quad, "--max-n", "10")
    check(r.returncode == 0 and "PASS" in r.stderr, "verify quadrilateral file")

    out = os.path.join(tmp, "out.csv")
    r = run("diagonals", "--polygon", "square", "--max-links", "2", "--out", out)
    with open(out) as f:
        check(r.returncode == 0 and r.stdout == "" and f.read().startswith("j,"), "--out writes the file")

r = run("complexity", "--polygon", "square", "--polygon-file", "x")
check(r.returncode == 2, "--polygon and --polygon-file exclude each other")
r = run("complexity", "--polygon", "nonagon")
check(r.returncode == 2, "unknown catalog name exits 2")
r = run("complexity", "--polygon", "square", "--max-n", "0")
check(r.returncode == 2, "--max-n 0 exits 2")

for name in ["square", "equilateral"]:
    r = run("verify", "--polygon", name, "--max-n", "12")
    check(r.returncode == 0 and "FAIL" not in r.stdout, f"verify {name} passes")

r = run("asymptotics", "--case", "square", "--max-n", "10000", "--tol", "0.01")
last = rows_csv(r.stdout)[-1]
check(r.returncode == 0 and last["n"] == "10000" and abs(int(last["count"]) / 1e12 - 0.405) < 0.001,
      "asymptotics square passes at 10^4")
r = run("asymptotics", "--case", "equilateral", "--max-n", "10000", "--tol", "0.01")
check(r.returncode == 0, "asymptotics equilateral passes")
r = run("asymptotics", "--case", "square", "--max-n", "100", "--tol", "0.001")
check(r.returncode == 1, "asymptotics beyond tolerance exits 1")
r = run("asymptotics", "--case", "hexagon")
check(r.returncode == 2, "unknown case exits 2")

r = run("diagonals", "--polygon", "square", "--max-links", "2")
rows = rows_csv(r.stdout)
check([x["exact_links"] for x in rows] == ["4", "4", "8"] and rows[-1]["Nc_cumulative"] == "16",
      "diagonal counts of the square")
r = run("diagonals", "--polygon", "square", "--max-links", "2", "--list")
rows = rows_csv(r.stdout)
check(len(rows) == 12 and rows[1]["word"] == "1" and rows[1]["end_x"] == "2/1", "diagonal listing")

r = run("bispecial", "--polygon", "square", "--n", "1")
rows = rows_csv(r.stdout)
check(len(rows) == 4 and all((x["m_l"], x["m_r"], x["m_b"], x["gd"], x["lemma"]) == ("3", "3", "7", "2", "OK")
                             for x in rows), "bispecial square n=1")
r = run("bispecial", "--polygon", "square", "--n", "0")
rows = rows_csv(r.stdout)
check(len(rows) == 1 and (rows[0]["word"], rows[0]["m_b"], rows[0]["gd"], rows[0]["lemma"]) == ("", "12", "4", "OK"),
      "bispecial square n=0")

r = run("complexity", "--polygon", "square", "--max-n", "12", env={"BILLIARD_MAX_WORDS": "100"})
check(r.returncode == 3, "word cap exits 3")

for args in [["complexity", "--polygon", "random-quad", "--seed", "5", "--max-n", "8"],
             ["verify", "--polygon", "half-equilateral", "--max-n", "8"],
             ["asymptotics", "--case", "right-isosceles", "--max-n", "2000"],
             ["diagonals", "--polygon", "right-isosceles", "--max-links", "5"],
             ["diagonals", "--polygon", "equilateral", "--max-links", "4", "--list"],
             ["bispecial", "--polygon", "random-quad", "--n", "3"]]:
    a, b = run(*args), run(*args)
    j = run(*args, "--format", "json")
    check(a.stdout == b.stdout and a.returncode == b.returncode, "deterministic: " + " ".join(args))
    csv_rows = [{k: numeric(v) for k, v in row.items()} for row in rows_csv(a.stdout)]
    json_rows = [{k: numeric(v) for k, v in row.items()} for row in json.loads(j.stdout)["rows"]]
    check(csv_rows == json_rows and len(csv_rows) > 0, "csv equals json: " + " ".join(args))

print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
