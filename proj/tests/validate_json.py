"""Runs walg with --json and validates its output against docs/report.schema.json."""
import json
import subprocess
import sys

import jsonschema

schema_path, walg, *args = sys.argv[1:]
with open(schema_path) as f:
    schema = json.load(f)
out = subprocess.run([walg, "--json", *args], capture_output=True, text=True)
if out.returncode != 0:
    sys.exit(f"walg exited with {out.returncode}: {out.stderr}")
jsonschema.validate(json.loads(out.stdout), schema)
print("valid")
