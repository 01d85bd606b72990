"""Validates qaff JSON output against the report schema."""
import json
import subprocess
import sys

import jsonschema

CASES = [
    ("cartan", ["cartan", "--type", "E6"]),
    ("cartan", ["cartan", "--type", "G2"]),
    ("weyl_factor", ["weyl", "factor", "--type", "A2", "--r", "1"]),
    ("weyl_factor", ["weyl", "factor", "--type", "G2", "--r", "2"]),
    ("weyl_inversions", ["weyl", "inversions", "--type", "C2", "--r", "1"]),
    ("character", ["character", "--type", "B3", "--r", "2", "--depth", "4"]),
    ("character", ["character", "--type", "A2", "--r", "1", "--depth", "3", "--method", "pbw"]),
    ("rootvec", ["rootvec", "--type", "C3", "--root", "2,2,1"]),
    ("rootvec", ["rootvec", "--type", "D4", "--root", "1,1,1,1", "--order", "module", "--r", "1"]),
    ("serre_check", ["serre-check", "--type", "C2", "--r", "2", "--sign", "pos", "--depth", "3"]),
    ("ell_weight", ["ell-weight", "--type", "A3", "--r", "2", "--kmax", "3"]),
    ("ell_weight", ["ell-weight", "--type", "B3", "--r", "1", "--sign", "pos"]),
    ("closure", ["closure", "--type", "D4", "--r", "1", "--depth", "2"]),
]


def main() -> int:
    exe, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as fh:
        schema = json.load(fh)
    jsonschema.Draft202012Validator.check_schema(schema)
    failed = 0
    for name, args in CASES:
        proc = subprocess.run([exe, *args], capture_output=True, text=True)
        if proc.returncode != 0:
            print(f"FAIL {' '.join(args)}: exit {proc.returncode}: {proc.stderr.strip()}")
            failed += 1
            continue
        doc = json.loads(proc.stdout)
        sub = {"$ref": f"#/$defs/{name}", "$defs": schema["$defs"]}
        try:
            jsonschema.validate(doc, sub, cls=jsonschema.Draft202012Validator)
            jsonschema.validate(doc, schema, cls=jsonschema.Draft202012Validator)
        except jsonschema.ValidationError as err:
            print(f"FAIL {' '.join(args)}: {err.message}")
            failed += 1
            continue
        print(f"ok   {' '.join(args)}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
