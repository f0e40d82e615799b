#!/usr/bin/env python3
"""Run a klr command and validate its JSON output against a schema.

usage: validate_output.py SCHEMA_DIR SCHEMA_FILE [--expect-exit N] -- COMMAND...
"""

import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource


def load_registry(schema_dir):
    resources = []
    for path in sorted(pathlib.Path(schema_dir).glob("*.json")):
        doc = json.loads(path.read_text())
        resources.append((path.name, Resource.from_contents(doc)))
    return Registry().with_resources(resources)


def main(argv):
    if "--" not in argv:
        print(__doc__, file=sys.stderr)
        return 2
    sep = argv.index("--")
    head, cmd = argv[1:sep], argv[sep + 1:]
    schema_dir, schema_file = head[0], head[1]
    expect = 0
    if "--expect-exit" in head:
        expect = int(head[head.index("--expect-exit") + 1])

    proc = subprocess.run(cmd, capture_output=True, text=True)
    if proc.returncode != expect:
        print(f"exit code {proc.returncode}, expected {expect}\n{proc.stderr}", file=sys.stderr)
        return 1
    try:
        doc = json.loads(proc.stdout)
    except json.JSONDecodeError as e:
        print(f"output is not JSON: {e}", file=sys.stderr)
        return 1

    registry = load_registry(schema_dir)
    schema = registry.contents(schema_file)
    validator = jsonschema.Draft202012Validator(schema, registry=registry)
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
    for e in errors[:10]:
        print(f"{list(e.path)}: {e.message}", file=sys.stderr)
    if errors:
        return 1
    print(f"{schema_file}: valid ({len(doc.get('instances', []))} instances)")
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
