#!/usr/bin/env python3
"""Exit-code and determinism contract checks for the contactgeo CLI.

Usage: cli_checks.py <path-to-contactgeo> <fixtures-dir>
"""

import json
import subprocess
import sys
import tempfile
import os

FAILURES = []


def run(args, **kw):
    return subprocess.run(args, capture_output=True, text=True, **kw)


def expect(code, args, label):
    r = run(args)
    if r.returncode != code:
        FAILURES.append(f"{label}: expected exit {code}, got {r.returncode}\n"
                        f"  stdout: {r.stdout[:400]}\n  stderr: {r.stderr[:400]}")
    return r


def main():
    cli = sys.argv[1]
    fixtures = sys.argv[2]
    example = os.path.join(fixtures, "example_sasakian_r3.json")
    flat = os.path.join(fixtures, "flat_r3.json")

    with tempfile.TemporaryDirectory() as tmp:
        # verify: all identities pass on the bundled example, fail on the
        # non-contact control
        expect(0, [cli, "verify", example], "verify example")
        expect(1, [cli, "verify", flat], "verify flat")

        # soliton: document defaults, flag overrides, failure case
        expect(0, [cli, "soliton", example], "soliton defaults")
        r = expect(0, [cli, "soliton", example, "--lambda", "6", "--mu", "0"], "soliton 6 0")
        if "YES" not in r.stdout:
            FAILURES.append("soliton 6 0: expected YES in output")
        r = expect(1, [cli, "soliton", example, "--lambda", "1", "--mu", "0"], "soliton 1 0")
        if "residual" not in r.stdout:
            FAILURES.append("soliton 1 0: expected a residual print")
        expect(2, [cli, "soliton", flat], "soliton without a vector block")

        # gradient soliton with a constant potential
        expect(0, [cli, "gradient-soliton", example, "--potential", "0",
                   "--lambda", "2", "--mu", "-4"], "gradient soliton 2 -4")
        expect(1, [cli, "gradient-soliton", example, "--potential", "0",
                   "--lambda", "2", "--mu", "-3"], "gradient soliton 2 -3")

        # classify
        expect(0, [cli, "classify", example], "classify example")
        expect(1, [cli, "classify", flat], "classify flat")

        # theorems: no violations on the example
        expect(0, [cli, "theorems", example], "theorems example")

        # curvature prints and exits 0
        r = expect(0, [cli, "curvature", example], "curvature")
        if "1/64" not in r.stdout:
            FAILURES.append("curvature: expected det g = 1/64 in output")

        # deform: parameter validation and output document quality
        out = os.path.join(tmp, "deformed.json")
        expect(2, [cli, "deform", example, "--t", "0", "--out", out], "deform t=0")
        expect(0, [cli, "deform", example, "--t", "3", "--out", out], "deform t=3")
        expect(0, [cli, "verify", out], "verify deformed")
        expect(0, [cli, "classify", out], "classify deformed")

        # example emission round trips through verify
        emitted = os.path.join(tmp, "emitted.json")
        expect(0, [cli, "example", "--epsilon", "-1", "--lambda", "-2", "--mu", "-4",
                   "--out", emitted], "example emission")
        expect(0, [cli, "verify", emitted], "verify emitted")
        expect(0, [cli, "soliton", emitted], "soliton emitted (timelike Killing)")

        # parse errors exit 2 with a located diagnostic
        bad = os.path.join(tmp, "bad.json")
        with open(example) as f:
            doc = json.load(f)
        doc["metric"][0][0] = "sin(x)"
        with open(bad, "w") as f:
            json.dump(doc, f)
        r = expect(2, [cli, "verify", bad], "parse error for sin(x)")
        if "metric[0][0]" not in r.stderr:
            FAILURES.append("parse error: missing field path in diagnostic")

        doc["metric"][0][0] = "1/4"  # asymmetric now: [0][0] no longer matches... restore
        with open(example) as f:
            doc = json.load(f)
        doc["metric"][0][1] = "7"
        with open(bad, "w") as f:
            json.dump(doc, f)
        expect(2, [cli, "verify", bad], "asymmetric metric rejected")

        # usage errors
        expect(2, [cli], "no subcommand")
        expect(2, [cli, "bogus"], "unknown subcommand")
        expect(2, [cli, "deform", example, "--t", "2"], "deform without --out")
        expect(0, [cli, "--help"], "help exits 0")

        # machine-readable output is byte-identical across runs
        for args in ([cli, "verify", example, "--format", "json"],
                     [cli, "classify", example, "--format", "json"],
                     [cli, "theorems", example, "--format", "json"],
                     [cli, "soliton", example, "--format", "json"]):
            a = run(args).stdout
            b = run(args).stdout
            if a != b:
                FAILURES.append(f"nondeterministic output: {' '.join(args)}")
            json.loads(a)  # and it parses

        # json verdict content
        r = run([cli, "soliton", example, "--format", "json"])
        verdict = json.loads(r.stdout)["verdict"]
        if not (verdict["is_soliton"] and not verdict["potential_is_killing"]
                and verdict["lie_phi_vanishes"]):
            FAILURES.append("json soliton verdict flags are wrong")

    if FAILURES:
        print("CLI contract failures:")
        for f in FAILURES:
            print(" -", f)
        return 1
    print("all CLI contract checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
