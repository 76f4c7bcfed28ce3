"""Runs super-o on a fixed set of queries and validates every JSON answer
against the shipped schema. Each query runs twice; outputs must match byte
for byte.

usage: validate_schema.py <super-o> <schema.json>
"""

import json
import subprocess
import sys

import jsonschema

QUERIES = [
    (0, ["hom", "--algebra", "pe(2)", "--from", "-1,1", "--to", "0,0"]),
    (0, ["hom", "--algebra", "gl(3)", "--from", "-2,0,2", "--to", "0,0,0"]),
    (0, ["socle", "--algebra", "pe(2)", "--top", "0,0", "--sub", "-1,1"]),
    (0, ["socle", "--algebra", "pe(2)", "--top", "1,0", "--sub", "-1,2"]),
    (0, ["socle", "--algebra", "pe(2)", "--top", "1,0", "--sub", "1,0"]),
    (0, ["socle", "--algebra", "gl(3)", "--top", "0,0,0", "--sub", "-2,0,2"]),
    (0, ["ext1", "--algebra", "pe(2)", "--simple", "1,0", "--verma", "-1,2"]),
    (1, ["ext1", "--algebra", "pe(2)", "--simple", "-1,1", "--verma", "-1,2"]),
    (0, ["typical", "--algebra", "pe(2)", "--weight", "0,0"]),
    (0, ["typical", "--algebra", "osp(2|4)", "--weight", "1 | 2,0"]),
    (0, ["typical", "--algebra", "gl(2|1)", "--weight", "1,0 | 3"]),
    (0, ["pd", "--algebra", "pe(2)", "--kind", "verma", "--weight", "0,0", "--levi", ""]),
    (0, ["pd", "--algebra", "pe(2)", "--kind", "injective-envelope", "--weight", "2,0"]),
    (0, ["pd", "--algebra", "osp(2|2)", "--kind", "verma", "--weight", "3 | 1"]),
    (0, ["pd", "--algebra", "pe(3)", "--kind", "costandard", "--weight", "2,1,0", "--measure", "id"]),
    (0, ["findim", "--algebra", "pe(3)", "--levi", "s1"]),
    (0, ["findim", "--algebra", "pe(3)", "--levi", "s1", "--weight", "1,1,0"]),
    (0, ["block-eq", "--algebra", "pe(2)", "--weight", "0,0", "--other", "1,1"]),
    (0, ["lambda-plus", "--algebra", "pe(2)", "--weight", "1,0"]),
    (0, ["bigrassmannian", "--algebra", "gl(3)", "--element", "231"]),
    (1, ["socle", "--algebra", "osp(2|2)", "--top", "0 | 0", "--sub", "0 | 0"]),
    (0, ["oracle", "verify", "pe2-example"]),
]


def main():
    cli, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for expected, args in QUERIES:
        runs = [subprocess.run([cli, *args], capture_output=True, text=True) for _ in range(2)]
        label = " ".join(args)
        if runs[0].stdout != runs[1].stdout:
            print(f"FAIL {label}: output differs between runs")
            failures += 1
            continue
        if runs[0].returncode != expected:
            print(f"FAIL {label}: exit {runs[0].returncode}, expected {expected}; {runs[0].stderr.strip()}")
            failures += 1
            continue
        errors = list(validator.iter_errors(json.loads(runs[0].stdout)))
        if errors:
            print(f"FAIL {label}: {errors[0].message}")
            failures += 1
            continue
        print(f"ok   {label}")
    usage = subprocess.run([cli, "hom", "--algebra", "pe(2)"], capture_output=True, text=True)
    if usage.returncode != 2:
        print(f"FAIL missing options: exit {usage.returncode}, expected 2")
        failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
