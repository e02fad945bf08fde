"""End-to-end checks of the liealg command line tool."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

BIN = sys.argv[1]
failures = []


def run(*args, stdin=None):
    p = subprocess.run([BIN, *args], input=stdin, capture_output=True, text=True)
    return p.returncode, p.stdout, p.stderr


def expect(cond, what):
    if not cond:
        failures.append(what)
        print("FAIL", what)


tmp = Path(tempfile.mkdtemp())


def write(name, obj):
    path = tmp / name
    path.write_text(json.dumps(obj))
    return str(path)


h3 = write("h3.json", {"dim": 3, "brackets": [{"i": 1, "j": 2, "coeffs": ["0", "0", "1"]}]})
code, out, _ = run("validate", h3)
expect(code == 0 and out.strip() == "ok", "validate h3 prints ok")

bad = write("bad.json", {"dim": 3, "brackets": [{"i": 1, "j": 2, "coeffs": ["1", "0", "0"]},
                                                 {"i": 1, "j": 3, "coeffs": ["0", "1", "0"]}]})
code, out, _ = run("validate", bad, "--format", "text")
expect(code == 1 and "(1, 2, 3)" in out, "validate reports the violating triple")
code, _, _ = run("classify", bad)
expect(code == 1, "classify rejects a Jacobi violation with exit 1")

code, out, _ = run("gen", "aff_c")
affc = write("affc.json", json.loads(out))
code, out, _ = run("classify", affc)
expect(code == 0 and json.loads(out)["family"] == "G4_2_4_AffC", "classify aff(C)")

code, _, err = run("classify", h3)
expect(code == 2 and "DerivedDimNot2" in err, "Heisenberg is outside the class (exit 2)")
code, _, _ = run("codim2", affc)
expect(code == 2, "codim2 with dim A_G = 2 is unsupported (exit 2)")
code, _, _ = run("classify", "-", stdin="{not json")
expect(code == 1, "malformed JSON exits 1")
code, _, _ = run("classify", str(tmp / "missing.json"))
expect(code == 1, "missing file exits 1")

# classify, regenerate from the reported label, classify again: a fixed point
for family, params, d in [("G3_2_1", {"lambda": "-2"}, 1), ("G3_2_3", {"j": "3"}, 0), ("G4_2_3", {"lambda": "0"}, 2),
                          ("G6p2k_2_2", {"k": 1}, 0), ("AffR_plus_Heis", {"m": 2}, 1), ("G4_2_2", {}, 0)]:
    code, out, _ = run("gen", family, "--params", json.dumps(params), "--abelian-ext", str(d), "--scramble", "11")
    first = json.loads(run("classify", "-", stdin=out)[1])
    regen = run("gen", first["family"], "--params", json.dumps(first["params"]), "--abelian-ext", str(first["abelian_ext"]))[1]
    second = json.loads(run("classify", "-", stdin=regen)[1])
    # orientation and phi describe the input's trace sign (X3 -> -X3 flips it); they are not invariants
    inv = lambda p: {k: v for k, v in p.items() if k not in ("orientation", "phi")}
    expect(first["family"] == family and inv(first["params"]) == inv(second["params"]) and first["family"] == second["family"],
           f"classify/gen fixed point for {family}")
    expect(json.loads(regen) == second["canonical"], f"canonical output matches gen for {family}")

# stdin input and algebra output are bit-exact
code, out, _ = run("gen", "G3_2_1", "--params", '{"lambda":"1/2"}')
expect(out.strip() == '{"dim":3,"brackets":[{"i":1,"j":3,"coeffs":["-1","0","0"]},{"i":2,"j":3,"coeffs":["0","-1/2","0"]}]}',
       "gen output format")

a = write("a.json", [["1", "0"], ["0", "2"]])
b = write("b.json", [["1", "0"], ["0", "1/2"]])
c = write("c.json", [["1", "0"], ["0", "3"]])
code, out, _ = run("propsim", a, b, "--witness")
v = json.loads(out)
expect(v["equivalent"] and v["c"] == "1/2" and v["mode"] == "exact" and "C" in v, "propsim diag(1,2) ~ diag(1,1/2)")
code, out, _ = run("propsim", a, c)
expect(json.loads(out) == {"equivalent": False, "mode": "exact", "c": None}, "propsim diag(1,2) vs diag(1,3)")

n1 = write("n1.json", [["0", "1", "0"], ["0", "0", "1"], ["0", "0", "0"]])
n2 = write("n2.json", [["0", "2", "0"], ["0", "0", "5"], ["0", "0", "0"]])
l1 = write("l1.json", [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "0"]])
code, out, _ = run("codim2-iso", n1, n2, "--witness")
v = json.loads(out)
expect(v["isomorphic"] and v["verified"] and "M_f" in v, "codim2-iso of proportional structure matrices")
code, out, _ = run("codim2-iso", n1, l1)
expect(not json.loads(out)["isomorphic"], "codim2-iso across block shapes")

code, out, _ = run("table", "--format", "text")
expect(code == 0 and "aff(C)" in out and "G6p2k_2_2" in out, "table lists the families")

small = ["sweep", "--seed", "3", "--scrambles", "2", "--fuzz", "50", "--odd-dim-scrambles", "50"]
code1, out1, _ = run(*small)
code2, out2, _ = run(*small, "--jobs", "2")
expect(code1 == 0 and json.loads(out1)["passed"], "small sweep passes")
expect(out1 == out2, "sweep report is byte identical across runs and job counts")

print(f"{len(failures)} CLI check(s) failed" if failures else "all CLI checks passed")
sys.exit(1 if failures else 0)
