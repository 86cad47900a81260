#!/usr/bin/env python3
"""Validates CLI report output against the published schema."""
import json
import subprocess
import sys

import jsonschema

cli, schema_path, data = sys.argv[1], sys.argv[2], sys.argv[3]
schema = json.load(open(schema_path))
commands = [
    ["validate", "--space", f"{data}/path5.json"],
    ["validate", "--space", f"{data}/triangle_breach.json"],
    ["transform", "--space", f"{data}/path5.json", "--max-eps", "2", "--exact"],
    ["lebesgue", "--space", f"{data}/path5.json", "--cover", f"{data}/path5_cover.json"],
    ["nerve", "--space", f"{data}/path5.json", "--cover", f"{data}/path5_cover.json"],
    ["extend-mcshane", "--space", f"{data}/path5.json", "--map", f"{data}/path5_endpoints_map.json"],
    ["dim", "--space", f"{data}/path5.json", "--C", "2", "--scales", "1,2"],
    ["dim0", "--space", f"{data}/two_clusters.json", "--C", "2", "--scales", "1"],
    ["hyperbolize", "--space", f"{data}/path5.json", "--n", "1", "--C", "2"],
]
for cmd in commands:
    proc = subprocess.run([cli] + cmd, capture_output=True, text=True)
    if proc.returncode == 2:
        print("parse error on", cmd, proc.stderr)
        sys.exit(1)
    report = json.loads(proc.stdout)
    jsonschema.validate(report, schema)
print(f"{len(commands)} reports validate against the schema")
