"""Exit-code and golden-file tests for the bcfa command-line tool."""

import argparse
import json
import subprocess
import sys
import tempfile
from fractions import Fraction
from pathlib import Path

failures = []


def check(name, ok, detail=""):
    print(("PASS " if ok else "FAIL ") + name + (f": {detail}" if detail and not ok else ""))
    if not ok:
        failures.append(name)


def run(*cmd):
    return subprocess.run([str(c) for c in cmd], capture_output=True, text=True)


def without_timestamp(report):
    report = dict(report)
    report.pop("timestamp", None)
    return report


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--cli", required=True)
    parser.add_argument("--mutant", required=True)
    parser.add_argument("--data", required=True, type=Path)
    args = parser.parse_args()
    cli, data = args.cli, args.data
    golden = data.parent / "golden"

    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)

        # verify
        r = run(cli, "verify", "--suite", "algebra", "--seed", "7", "--cases", "1000")
        check("verify algebra exits 0", r.returncode == 0, r.stdout + r.stderr)
        for suite in ["order", "metric", "linear", "convex", "separation", "theorems"]:
            r = run(cli, "verify", "--suite", suite, "--seed", "3", "--cases", "100")
            check(f"verify {suite} exits 0", r.returncode == 0, r.stdout + r.stderr)
        r = run(cli, "verify", "--suite", "all", "--seed", "5", "--cases", "60", "--backend", "float")
        check("verify all float exits 0", r.returncode == 0, r.stdout + r.stderr)
        r = run(cli, "verify", "--suite", "bogus")
        check("verify bogus suite exits 2", r.returncode == 2, str(r.returncode))
        r = run(cli, "verify", "--backend", "quad")
        check("verify bogus backend exits 2", r.returncode == 2, str(r.returncode))
        r = run(cli, "verify", "--cases", "many")
        check("verify non-numeric cases exits 2", r.returncode == 2, str(r.returncode))
        r = run(cli, "frobnicate")
        check("unknown subcommand exits 2", r.returncode == 2, str(r.returncode))

        reports = []
        for k in range(2):
            path = tmp / f"report{k}.json"
            r = run(cli, "verify", "--suite", "all", "--seed", "11", "--cases", "100", "--report", path, "--format", "json")
            check(f"verify all run {k} exits 0", r.returncode == 0, r.stdout + r.stderr)
            reports.append(json.loads(path.read_text()))
        check("reports are deterministic modulo timestamp",
              without_timestamp(reports[0]) == without_timestamp(reports[1]))
        rep = reports[0]
        check("report fields", all(k in rep for k in ["suite", "seed", "backend", "cases_run", "failures", "timestamp"])
              and rep["seed"] == 11 and rep["backend"] == "exact" and rep["failures"] == [])

        r = run(args.mutant, "verify", "--suite", "all", "--seed", "7", "--cases", "200", "--format", "json")
        check("mutant build exits 1", r.returncode == 1, str(r.returncode))
        if r.returncode == 1:
            rep = json.loads(r.stdout)
            ring = {"mul-identity", "mul-associative", "distributive", "w-product"}
            check("mutant report names a ring-law failure", any(f["check"] in ring for f in rep["failures"]))

        # separate
        out = tmp / "cert.json"
        r = run(cli, "separate", data / "separate_1d.json", "-o", out)
        check("separate example exits 0", r.returncode == 0, r.stderr)
        if r.returncode == 0:
            cert = json.loads(out.read_text())
            coeff = cert["f"]["coeffs"][0]
            ratio = {k: Fraction(str(cert["gamma"][k])) / Fraction(str(coeff[k])) for k in ("e1", "e2")}
            check("separate level is 2e1 + 3e2 for the identity direction",
                  ratio == {"e1": 2, "e2": 3}, json.dumps(cert["gamma"]))
            check("separate matches golden file", cert == json.loads((golden / "separate_1d.json").read_text()))
            check("certificate checks carry sides", {c["side"] for c in cert["checks"]} == {"A", "B"})
        r = run(cli, "separate", data / "separate_overlap.json", "-o", out)
        check("separate overlap exits 1", r.returncode == 1, str(r.returncode))
        if r.returncode == 1:
            witness = json.loads(out.read_text())
            check("overlap witness record", witness["error"] == "NotDisjointError" and witness["component"] == 1
                  and witness["witness"] == ["1/2"], json.dumps(witness))
        r = run(cli, "separate", data / "malformed.json")
        check("separate malformed JSON exits 2", r.returncode == 2, str(r.returncode))
        r = run(cli, "separate", data / "missing_key.json")
        check("separate missing key exits 2", r.returncode == 2, str(r.returncode))
        r = run(cli, "separate", data / "does_not_exist.json")
        check("separate missing file exits 2", r.returncode == 2, str(r.returncode))

        # gauge
        r = run(cli, "gauge", data / "unit_box.json", data / "point_2_3.json")
        check("gauge unit box prints 2 3", r.returncode == 0 and r.stdout.strip() == "2 3", r.stdout + r.stderr)
        r = run(cli, "gauge", data / "unit_box.json", data / "point_0.json")
        check("gauge at 0 prints 0 0", r.returncode == 0 and r.stdout.strip() == "0 0", r.stdout + r.stderr)
        r = run(cli, "gauge", data / "unit_box.json", data / "point_decimal.json")
        check("gauge reads decimals exactly", r.returncode == 0 and r.stdout.strip() == "1/4 7/3", r.stdout + r.stderr)
        r = run(cli, "gauge", data / "unit_box.json", data / "point_decimal.json", "--backend", "float")
        vals = r.stdout.split()
        check("gauge float prints decimals", r.returncode == 0 and len(vals) == 2
              and abs(float(vals[0]) - 0.25) < 1e-12 and abs(float(vals[1]) - 7 / 3) < 1e-12, r.stdout + r.stderr)
        r = run(cli, "gauge", data / "shifted_box.json", data / "point_2_3.json")
        check("gauge non-absorbing exits 1", r.returncode == 1, str(r.returncode))
        r = run(cli, "gauge", data / "malformed.json", data / "point_2_3.json")
        check("gauge malformed exits 2", r.returncode == 2, str(r.returncode))

    print(f"{len(failures)} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
