"""Run ncdb with --json across its subcommands and validate every output."""
import json
import pathlib
import subprocess
import sys

import jsonschema

ncdb, schema_path, specs = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])
schema = json.loads(schema_path.read_text())
jsonschema.Draft202012Validator.check_schema(schema)
validator = jsonschema.Draft202012Validator(schema)

runs = [
    (["verify", specs / "mdbII.ndb", "--max-degree", "2"], 0),
    (["verify", specs / "corrupted.ndb", "--max-degree", "2", "--all-witnesses"], 1),
    (["verify", specs / "kontsevich.ndb", "--max-degree", "2"], 0),
    (["jacobi", specs / "kontsevich_laurent.ndb", "--max-degree", "2"], 0),
    (["h0skew", specs / "corrupted.ndb", "--max-degree", "2"], 1),
    (["localize", specs / "kontsevich.ndb", "--all"], 0),
    (["rep", specs / "mdbI.ndb", "--size", "2", "--points", "2", "--max-degree", "2"], 0),
    (["rep", specs / "corrupted.ndb", "--size", "2", "--points", "1", "--max-degree", "2"], 1),
    (["classify", "cl1"], 0),
    (["classify", "cl3a"], 0),
    (["classify", "cl3b"], 0),
]

failures = 0
for args, want in runs:
    cmd = [ncdb] + [str(a) for a in args] + ["--json"]
    proc = subprocess.run(cmd, capture_output=True, text=True)
    label = " ".join(str(a) for a in args)
    try:
        doc = json.loads(proc.stdout)
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
    except json.JSONDecodeError as e:
        errors = [e]
    ok = proc.returncode == want and not errors
    if proc.returncode != want:
        print(f"{label}: exit {proc.returncode}, wanted {want}\n{proc.stderr}")
    for e in errors[:3]:
        print(f"{label}: {getattr(e, 'message', e)}")
    if ok and doc["passed"] != (want == 0):
        print(f"{label}: passed flag disagrees with the exit code")
        ok = False
    print(("ok   " if ok else "FAIL ") + label)
    failures += not ok

sys.exit(1 if failures else 0)
