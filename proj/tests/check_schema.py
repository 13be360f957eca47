#!/usr/bin/env python3
"""Run rrk subcommands and validate each stdout summary against the schema.

usage: check_schema.py RRK SCHEMA DATA_DIR WORK_DIR
"""
import json
import os
import subprocess
import sys

import jsonschema


def main():
    rrk, schema_path, data, work = sys.argv[1:5]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    out = os.path.join(work, "schema_check")
    os.makedirs(out, exist_ok=True)
    ch = "a=0.1,b=4,P1=1,P2=1"
    fme = ["fme", "--input", f"{data}/binning_scheme.ineq", "--eliminate", "Rp1c",
           "--subst", "R2=R2c+R2p+R2pb", "--relations", f"{data}/chain.rel"]
    cases = [
        (["bounds", "--channel", ch, "--alpha", "0.3"], 0),
        (["bounds", "--channel", ch, "--region", "OUT_BASIC,IN_BINNING,IN_TIMEDIV,IN_GAPSCHEME"], 0),
        (["frontier", "--channel", ch, "--alpha-points", "51", "--out", f"{out}/f.csv", "--svg", f"{out}/f.svg"], 0),
        (["regimes", "--res", "5", "--out", f"{out}/r.csv"], 0),
        (["gap", "--channel", "a=2,b=4,P1=10,P2=10", "--alpha-points", "51"], 0),
        (fme + ["--expect", f"{data}/innerbound.ineq", "--oracle", "100"], 0),
        (fme + ["--expect", f"{data}/ratesharing_step4.ineq"], 2),
        (["dm-eval", "--channel", f"{data}/xor_channel.json", "--dist", f"{data}/uniform_x1x2.json",
          "--region", "OUTER_THM1,SEMIDET_CAP", "--condition", "SEMIDET,VSI"], 0),
        (["bounds", "--channel", "a=1,b=-1,P1=1,P2=1"], 2),
        (["bounds", "--bogus"], 2),
        (["nonsense"], 2),
    ]
    failed = 0
    for args, want in cases:
        p = subprocess.run([rrk] + args, capture_output=True, text=True)
        label = " ".join(args[:1] + args[1:3])
        try:
            doc = json.loads(p.stdout)
            validator.validate(doc)
            ok = p.returncode == want and doc["exit_code"] == p.returncode
            why = f"exit {p.returncode}, wanted {want}"
        except (json.JSONDecodeError, jsonschema.ValidationError) as e:
            ok, why = False, str(e).splitlines()[0]
        print(f"{'ok  ' if ok else 'FAIL'} {label}: {why}")
        failed += not ok
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
