#!/usr/bin/env python3
"""Validate every subcommand's JSON report against the published schema."""
import json
import subprocess
import sys
import tempfile

import jsonschema

RUNS = [
    ["resultants", "--degree", "3"],
    ["resultants", "--degree", "1"],
    ["verify", "--degree", "3"],
    ["verify", "--degree", "4", "--order", "lex", "--certificates"],
    ["theorem", "--degree", "2"],
    ["theorem", "--degree", "3"],
    ["regseq", "--degree", "3"],
    ["ace", "--degree", "5", "--level", "4", "--seed", "7"],
    ["ace", "--degree", "6", "--level", "5"],
    ["interlace", "--count", "0"],
    ["interlace", "--count", "40"],
]


def main():
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as fh:
        schema = json.load(fh)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    with tempfile.TemporaryDirectory() as cache:
        for args in RUNS:
            cmd = [binary, *args, "--format", "json", "--cache-dir", cache]
            proc = subprocess.run(cmd, capture_output=True, text=True)
            label = " ".join(args)
            if proc.returncode != 0:
                print(f"FAIL {label}: exit {proc.returncode}\n{proc.stderr}")
                failures += 1
                continue
            report = json.loads(proc.stdout)
            errors = sorted(validator.iter_errors(report), key=lambda e: list(e.path))
            if errors:
                failures += 1
                for err in errors:
                    print(f"FAIL {label}: {'/'.join(map(str, err.path))}: {err.message}")
            else:
                print(f"ok   {label}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
