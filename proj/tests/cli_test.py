"""End-to-end checks of the command-line interface (binary path in $PROBKIT_CLI)."""

import json
import os
import subprocess
import sys
import tempfile

CLI = os.environ["PROBKIT_CLI"]
failures = []


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def check(name, cond, detail=""):
    status = "ok" if cond else "FAIL"
    print(f"  [{status}] {name} {detail if not cond else ''}")
    if not cond:
        failures.append(name)


# expectation with a closed-form law
r = run("expect", "--dist", '{"family":"binomial","n":10,"p":0.3}')
check("expect exit code", r.returncode == 0, r.stderr)
payload = json.loads(r.stdout)
check("expect value", abs(payload["value"] - 3.0) < 1e-9, r.stdout)
check("expect carries method", payload["method"] == "enumeration")
check("expect carries error bound", "truncation_error" in payload)

# measure of a half line under the normal law
r = run("measure", "--dist", '{"family":"normal01"}', "--set", '[["-inf",0]]')
check("measure exit code", r.returncode == 0, r.stderr)
check("measure value", abs(json.loads(r.stdout)["value"] - 0.5) < 1e-12, r.stdout)

# bracket probability form
r = run("measure", "--dist", '{"family":"bernoulli","p":0.3}', "--bracket", "[]",
        "--from", "1", "--to", "1")
check("measure bracket", abs(json.loads(r.stdout)["value"] - 0.7) < 1e-12, r.stdout)

# integration against a discrete law is exact and converged
r = run("integrate", "--f", '{"poly":[0,1]}', "--dist", '{"family":"bernoulli","p":0.3}',
        "--from", "-1", "--to", "2")
check("integrate exit code", r.returncode == 0, r.stderr)
check("integrate value", abs(json.loads(r.stdout)["value"] - 0.7) < 1e-12, r.stdout)

# verify a single inequality case
r = run("verify", "--case", '{"id":"markov","dist":{"family":"exponential1"},"a":2.0}')
check("verify exit code", r.returncode == 0, r.stderr)
check("verify report passes", json.loads(r.stdout)["pass"] is True, r.stdout)

# malformed JSON is a usage error (exit 2) with a diagnostic
r = run("expect", "--dist", '{"family":"binomial","n":10')
check("malformed spec exit code", r.returncode == 2, str(r.returncode))
check("malformed spec diagnostic", "--dist" in r.stderr and "error" in r.stderr, r.stderr)

# unknown family is a usage error too
r = run("expect", "--dist", '{"family":"weibull"}')
check("unknown family exit code", r.returncode == 2, str(r.returncode))

# demo scenarios emit gap trajectories
r = run("demo", "--name", "dct-counterexample")
check("demo exit code", r.returncode == 0, r.stderr)
payload = json.loads(r.stdout)
check("demo gap trajectory", abs(payload["entries"][-1]["gap_n"] - 1.0) <= 1e-6, r.stdout)

r = run("demo", "--name", "dirichlet")
check("dirichlet demo unconverged", json.loads(r.stdout)["converged"] is False, r.stdout)

# determinism: identical argv (including seed) produces byte-identical files
with tempfile.TemporaryDirectory() as tmp:
    cfg = os.path.join(tmp, "cases.json")
    with open(cfg, "w") as fh:
        json.dump([
            {"id": "markov", "dist": {"family": "exponential1"}, "a": 2.0, "mode": "mc", "trials": 20000},
            {"id": "normal_tail", "eps": 2.0, "form": "one_sided"},
            {"id": "slln", "p": 0.5, "schedule": [100, 1000]},
        ], fh)
    out1 = os.path.join(tmp, "a.jsonl")
    out2 = os.path.join(tmp, "b.jsonl")
    r1 = run("suite", "--config", cfg, "--seed", "42", "--out", out1)
    r2 = run("suite", "--config", cfg, "--seed", "42", "--out", out2)
    check("suite exit code", r1.returncode == 0, r1.stderr)
    with open(out1, "rb") as fh:
        b1 = fh.read()
    with open(out2, "rb") as fh:
        b2 = fh.read()
    check("suite determinism", b1 == b2)
    check("suite emits one report per case", len(b1.strip().split(b"\n")) == 3)

    csv_out = os.path.join(tmp, "a.csv")
    r3 = run("suite", "--config", cfg, "--seed", "42", "--format", "csv", "--out", csv_out)
    with open(csv_out) as fh:
        header = fh.readline().strip()
    check("csv header", header == "inequality_id,bound,reference,slack,pass", header)

print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
