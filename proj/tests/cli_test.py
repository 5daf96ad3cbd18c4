"""Runs the satake CLI, validates every --json output against schemas/ and
checks exit codes, determinism and a few known values."""
import json
import os
import subprocess
import sys

import jsonschema

CLI, SCHEMAS = sys.argv[1], sys.argv[2]
failures = []


def run(args, env=None):
    full_env = {k: v for k, v in os.environ.items() if not k.startswith("SATAKE_")}
    full_env.update(env or {})
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=full_env, timeout=600)


def expect(cond, what):
    if not cond:
        failures.append(what)
        print("FAIL", what)


def check_json(command, args, code=0, env=None):
    first = run([command, *args, "--json"], env)
    second = run([command, *args, "--json"], env)
    label = " ".join([command, *args])
    expect(first.returncode == code, f"{label}: exit {first.returncode}, expected {code}\n{first.stderr}")
    expect(first.stdout == second.stdout, f"{label}: output not deterministic")
    try:
        doc = json.loads(first.stdout)
    except json.JSONDecodeError as e:
        expect(False, f"{label}: invalid JSON ({e})")
        return None
    with open(os.path.join(SCHEMAS, f"{command}.schema.json")) as f:
        schema = json.load(f)
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError as e:
        expect(False, f"{label}: schema violation: {e.message}")
    return doc


for group in ["GL(1)", "GL(2)", "GL(3)", "SL(2)", "SL(3)", "PGL(2)", "PGL(3)", "Sp(4)", "torus(1)", "GL(2)xSL(2)"]:
    check_json("describe", ["--group", group])
    check_json("satake-table", ["--group", group, "--bound", "3"])
    check_json("parity", ["--group", group, "--bound", "4"])

doc = check_json("describe", ["--group", "PGL(2)"])
expect(doc and doc["dual"]["name"] == "SL(2)" and not doc["epsilon_trivial"], "PGL(2) dual and epsilon")
expect(doc and doc["g1_structure"] == "Ĝ₁ = GL₂", "PGL(2) modified dual group")

doc = check_json("hecke-mul", ["--group", "SL(3)", "s1*s1", "s0*s2*s0", "t[1,-1]"])
doc = check_json("hecke-mul", ["--group", "PGL(2)", "s*s", "--assoc", "50", "--seed", "4"])
expect(doc and doc["associativity"]["passed"], "associativity through the CLI")
sq = run(["hecke-mul", "--group", "PGL(2)", "s*s"]).stdout
expect("q*T[e] + (-1 + q)*T[s1]" in sq, "T_s^2 text output")

doc = check_json("ic-convolve", ["--group", "GL(2)", "--mu", "1,0", "--lam", "1,0"])
expect(doc and [(r["nu"], r["twist"]) for r in doc["rows"]] == [([1, 1], -1), ([2, 0], 0)], "GL(2) std x std")
check_json("ic-convolve", ["--group", "Sp(4)", "--mu", "1,1", "--n", "2", "--lam", "1,0", "--m", "-1"])

doc = check_json("satake-table", ["--group", "PGL(2)", "--bound", "4"])
expect(doc and doc["rows"][-1]["n"] == -1 and doc["rows"][-1]["scalar_ring"] == "Z[q]", "twisted unit row")
signed = check_json("satake-table", ["--group", "PGL(2)", "--bound", "3", "--signed-trace"])
expect(signed and signed["sign_convention"] == "signed", "signed convention flag")
env_signed = run(["satake-table", "--json"], {"SATAKE_SIGNED_TRACE": "1", "SATAKE_BOUND": "3"})
expect(env_signed.stdout == run(["satake-table", "--bound", "3", "--signed-trace", "--json"]).stdout,
       "environment overrides")

doc = check_json("verify", ["--group", "PGL(2)", "--bound", "6"])
expect(doc and doc["passed"], "verify PGL(2)")
doc = check_json("verify", ["--group", "PGL(2)", "--bound", "6", "--inject-fault", "q-analog"], code=1)
expect(doc and not doc["passed"], "q-analog fault is detected")
check_json("verify", ["--group", "SL(3)", "--bound", "4"])

bad = run(["describe", "--group", "XX(3)"])
expect(bad.returncode != 0 and "error" in bad.stderr, "unknown group is rejected")
bad = run(["ic-convolve", "--group", "SL(3)", "--mu", "0,1", "--lam", "0"])
expect(bad.returncode != 0, "non-dominant input is rejected")

print(f"{'FAIL' if failures else 'PASS'}: {len(failures)} CLI checks failed")
sys.exit(1 if failures else 0)
