#!/usr/bin/env python3
"""Runs the eqdeg CLI and checks exit code, output and report schema.

  run_cli.py expect --exit N [--match RE]... [--json PATH] [--csv-header PATH] -- CMD...
  run_cli.py same-results --variant ARGS... -- CMD...
  run_cli.py schema-rejects -- REPORT.json

With `expect`, a --json path is validated against docs/report.schema.json.
With `same-results`, CMD is run once per variant (extra global flags, split on
spaces) and the "results" objects of the JSON reports must be identical.
"""

import argparse
import json
import os
import re
import subprocess
import sys
import tempfile

import jsonschema

SCHEMA = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "docs", "report.schema.json")


def validate(path):
    with open(SCHEMA) as f:
        schema = json.load(f)
    with open(path) as f:
        report = json.load(f)
    jsonschema.validate(report, schema)
    return report


def fail(msg):
    print("FAIL:", msg)
    sys.exit(1)


def expect(args, cmd):
    proc = subprocess.run(cmd, capture_output=True, text=True)
    sys.stdout.write(proc.stdout)
    sys.stdout.write(proc.stderr)
    if proc.returncode != args.exit:
        fail(f"exit code {proc.returncode}, expected {args.exit}")
    for pattern in args.match or []:
        if not re.search(pattern, proc.stdout + proc.stderr, re.MULTILINE):
            fail(f"output does not match {pattern!r}")
    if args.json:
        validate(args.json)
    if args.no_json and os.path.exists(args.no_json):
        fail(f"{args.no_json} was written by a failing run")
    if args.csv_header:
        with open(args.csv_header) as f:
            header = f.readline().strip()
        if header != "ell,n,value,exact,witness_count":
            fail(f"unexpected CSV header {header!r}")


def same_results(args, cmd):
    payloads = []
    with tempfile.TemporaryDirectory() as tmp:
        for i, variant in enumerate(args.variant):
            path = os.path.join(tmp, f"r{i}.json")
            full = [cmd[0]] + variant.split() + ["--json", path] + cmd[1:]
            proc = subprocess.run(full, capture_output=True, text=True)
            if proc.returncode != 0:
                fail(f"{' '.join(full)} exited {proc.returncode}: {proc.stderr}")
            payloads.append(json.dumps(validate(path)["results"], sort_keys=True))
    for variant, payload in zip(args.variant[1:], payloads[1:]):
        if payload != payloads[0]:
            fail(f"results differ for variant {variant!r}")
    print(f"identical results across {len(payloads)} runs")


def schema_rejects(path):
    """Each mutilated copy of a valid report must fail validation."""
    with open(SCHEMA) as f:
        schema = json.load(f)
    with open(path) as f:
        report = json.load(f)
    jsonschema.validate(report, schema)
    broken = []
    for key in ["command", "version", "params", "results", "wall_ms"]:
        r = json.loads(json.dumps(report))
        del r[key]
        broken.append((f"missing {key}", r))
    r = json.loads(json.dumps(report))
    del r["results"]["classes_enumerated"]
    broken.append(("payload without classes_enumerated", r))
    r = json.loads(json.dumps(report))
    r["results"]["witnesses"] = ["not graph6 \u0001"]
    broken.append(("bad witness string", r))
    r = json.loads(json.dumps(report))
    r["params"]["input_digest"] = "xyz"
    broken.append(("bad digest", r))
    for name, doc in broken:
        try:
            jsonschema.validate(doc, schema)
        except jsonschema.ValidationError:
            continue
        fail(f"schema accepted a report with {name}")
    print(f"schema rejected all {len(broken)} broken reports")


def main():
    argv = sys.argv[1:]
    if "--" not in argv:
        fail("missing -- before the command")
    split = argv.index("--")
    own, cmd = argv[:split], argv[split + 1:]
    parser = argparse.ArgumentParser()
    sub = parser.add_subparsers(dest="mode", required=True)
    e = sub.add_parser("expect")
    e.add_argument("--exit", type=int, default=0)
    e.add_argument("--match", action="append")
    e.add_argument("--json")
    e.add_argument("--no-json")
    e.add_argument("--csv-header")
    s = sub.add_parser("same-results")
    s.add_argument("--variant", action="append", required=True)
    sub.add_parser("schema-rejects")
    args = parser.parse_args(own)
    if args.mode == "expect":
        if args.json and os.path.exists(args.json):
            os.remove(args.json)
        if args.no_json and os.path.exists(args.no_json):
            os.remove(args.no_json)
        expect(args, cmd)
    elif args.mode == "same-results":
        same_results(args, cmd)
    else:
        schema_rejects(cmd[0])


if __name__ == "__main__":
    main()
