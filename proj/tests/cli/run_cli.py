#!/usr/bin/env python3
"""Runs one CLI invocation and checks its exit code and output.

usage: run_cli.py --exit N [--stdout REGEX]... [--stderr REGEX] -- BINARY ARGS...
"""
import argparse
import re
import subprocess
import sys


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--exit", type=int, required=True)
    ap.add_argument("--stdout", action="append", default=[])
    ap.add_argument("--not-stdout", action="append", default=[])
    ap.add_argument("--stderr", action="append", default=[])
    ap.add_argument("cmd", nargs=argparse.REMAINDER)
    a = ap.parse_args()
    cmd = a.cmd[1:] if a.cmd and a.cmd[0] == "--" else a.cmd
    p = subprocess.run(cmd, capture_output=True, text=True, env={"NO_COLOR": "1", "PATH": "/usr/bin:/bin"})
    ok = True
    if p.returncode != a.exit:
        print(f"exit code {p.returncode}, expected {a.exit}")
        ok = False
    for pat in a.stdout:
        if not re.search(pat, p.stdout, re.M):
            print(f"stdout lacks /{pat}/")
            ok = False
    for pat in a.not_stdout:
        if re.search(pat, p.stdout, re.M):
            print(f"stdout unexpectedly matches /{pat}/")
            ok = False
    for pat in a.stderr:
        if not re.search(pat, p.stderr, re.M):
            print(f"stderr lacks /{pat}/")
            ok = False
    if not ok:
        print("--- stdout\n" + p.stdout[-4000:] + "--- stderr\n" + p.stderr[-4000:])
    sys.exit(0 if ok else 1)


if __name__ == "__main__":
    main()
