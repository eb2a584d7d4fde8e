"""Run the coble CLI and validate each certificate against the JSON schema."""
import json
import subprocess
import sys

import jsonschema

COMMANDS = [
    ["invariants", "dim", "--degree", "6"],
    ["invariants", "basis", "--degree", "3"],
    ["coble", "check"],
    ["nu", "charts"],
    ["nu", "kernel"],
    ["hesse", "dual", "--lambda", "2", "--oracle-prime", "31"],
    ["enum", "degree-dual"],
    ["enum", "verlinde", "--kmax", "8"],
    ["enum", "quadric-count"],
    ["enum", "zagier", "--h", "2"],
    ["prym", "check"],
    ["prym", "genus", "--n", "5", "--g", "3"],
]


def main(binary, schema_path):
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    poly = {"$ref": "#/$defs/polynomial", "$defs": schema["$defs"]}
    failures = 0
    for args in COMMANDS:
        runs = [subprocess.run([binary, *args], capture_output=True, text=True) for _ in range(2)]
        if runs[0].returncode != 0:
            print("FAIL exit", runs[0].returncode, args, runs[0].stderr)
            failures += 1
            continue
        certs = [json.loads(r.stdout) for r in runs]
        try:
            jsonschema.validate(certs[0], schema)
        except jsonschema.ValidationError as e:
            print("FAIL schema", args, e.message)
            failures += 1
            continue
        if certs[0]["artifact_hash"] != certs[1]["artifact_hash"]:
            print("FAIL nondeterministic hash", args)
            failures += 1
        out = certs[0]["outputs"]
        for key in ("F_beta", "sextic"):
            if key in out:
                jsonschema.validate(out[key], poly)
        print("ok", " ".join(args))
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1], sys.argv[2]))
