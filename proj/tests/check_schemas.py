"""Runs every JSON-emitting subcommand on small inputs and validates the
output against the schema files shipped in tools/schema/."""

import json
import pathlib
import subprocess
import sys

import jsonschema

RUNS = {
    "spectrum": ["--M", "3", "--A", "0,2", "--k", "3", "--perturb", "1e-4"],
    "fup": ["--M", "5", "--A", "0,2", "--kmax", "3"],
    "special": ["--M-max", "8"],
    "fuglede": ["--M-max", "6"],
    "weyl": ["--M", "4", "--A", "1,2", "--k", "2..3"],
    "cutoff-compare": ["--M", "4", "--A", "1,2", "--k", "3", "--taus", "0.05,0.2", "--sharp"],
    "energy": ["--M", "3", "--A", "0,2", "--k", "2"],
    "propagate": ["--M", "3", "--A", "0,2", "--k", "4"],
}
EXTRA = [
    ("spectrum", ["--M", "4", "--A", "0,1,2,3", "--k", "2", "--sharp"]),
    ("fuglede", ["--M", "6", "--A", "0,1,3"]),
    ("energy", ["--M", "4", "--A", "2"]),
]


def main() -> int:
    binary, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    failures = 0
    for command, args in list(RUNS.items()) + EXTRA:
        schema = json.loads((schema_dir / f"{command}.schema.json").read_text())
        jsonschema.Draft202012Validator.check_schema(schema)
        out = subprocess.run([binary, command, *args], capture_output=True, text=True, check=False)
        if out.returncode != 0:
            print(f"FAIL {command} {args}: exit {out.returncode}: {out.stderr.strip()}")
            failures += 1
            continue
        try:
            jsonschema.validate(json.loads(out.stdout), schema, cls=jsonschema.Draft202012Validator)
            print(f"ok   {command} {' '.join(args)}")
        except jsonschema.ValidationError as err:
            print(f"FAIL {command} {args}: {err.message}")
            failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
