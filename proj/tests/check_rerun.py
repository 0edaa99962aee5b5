#!/usr/bin/env python3
"""Runs the same job config twice and checks that every numeric result field
byte-reproduces (deterministic quadrature, fixed panel order)."""
import json
import subprocess
import sys


def results(cli, cfg, workers):
    out = subprocess.run([cli, "run", cfg], capture_output=True, text=True,
                         env={"EDGECONE_WORKERS": workers, "PATH": "/usr/bin:/bin"})
    if out.returncode != 0:
        print(out.stderr)
        sys.exit(1)
    return json.dumps(json.loads(out.stdout)["results"], sort_keys=True)


def main():
    cli, cfg = sys.argv[1], sys.argv[2]
    a = results(cli, cfg, "1")
    b = results(cli, cfg, "2")
    c = results(cli, cfg, "4")
    if a != b or a != c:
        print("results differ across reruns / worker counts")
        sys.exit(1)
    print("reruns byte-reproduce the result rows")


if __name__ == "__main__":
    main()
