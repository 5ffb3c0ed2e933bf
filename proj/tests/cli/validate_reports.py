"""Runs scenarios through the CLI and validates every JSON report against the schema."""
import json
import subprocess
import sys

import jsonschema

exe, schema_path, scenario_dir = sys.argv[1:4]
schema = json.load(open(schema_path))
jsonschema.Draft202012Validator.check_schema(schema)
validator = jsonschema.Draft202012Validator(schema)

suites = subprocess.run([exe, "list-suites"], check=True, capture_output=True, text=True).stdout.split()
targets = suites + [f"{scenario_dir}/broken-hecke.json", f"{scenario_dir}/orbit-sums.json"]
for target in targets:
    proc = subprocess.run([exe, "run", target, "--format", "json"], capture_output=True, text=True)
    report = json.loads(proc.stdout)
    errors = sorted(validator.iter_errors(report), key=str)
    for e in errors:
        print(f"{target}: {e.message} at {list(e.path)}")
    if errors:
        sys.exit(1)
    print(f"{target}: valid ({report['status']})")
