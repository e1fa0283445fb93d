#!/usr/bin/env python3
"""Interrupted-and-resumed scans must print exactly what an uninterrupted run
prints; damaged or foreign checkpoints must be refused."""
import pathlib
import subprocess
import sys
import tempfile

BIN = sys.argv[1]
ENV = {"NO_COLOR": "1", "PATH": "/usr/bin:/bin"}
failures = []


def run(*args, cache=None, env_cache=None):
    env = dict(ENV)
    if env_cache:
        env["CACHE_DIR"] = env_cache
    cmd = [BIN, *args] + (["--cache-dir", cache] if cache else [])
    return subprocess.run(cmd, capture_output=True, text=True, env=env)


def check(cond, what):
    if not cond:
        failures.append(what)
    print(("ok   " if cond else "FAIL ") + what)


for kind, rng in (("cubic", "-1..260"), ("sextic", "-40..40")):
    for fmt in ("json", "text", "csv"):
        base = run("scan", kind, "--range", rng, "--format", fmt)
        check(base.returncode == 0, f"{kind}/{fmt}: uninterrupted run exits 0")
        with tempfile.TemporaryDirectory() as d:
            # three interruptions at different row counts, then finish
            for stop in ("5", "17", "3"):
                p = run("scan", kind, "--range", rng, "--format", fmt, "--checkpoint-interval", "4",
                        "--stop-after-rows", stop, cache=d)
                check(p.returncode == 0, f"{kind}/{fmt}: partial run (+{stop} rows) exits 0")
            final = run("scan", kind, "--range", rng, "--format", fmt, "--checkpoint-interval", "4", cache=d)
            check(final.returncode == 0, f"{kind}/{fmt}: resumed run exits 0")
            check(final.stdout == base.stdout, f"{kind}/{fmt}: resumed output byte-identical")
            again = run("scan", kind, "--range", rng, "--format", fmt, env_cache=d)
            check(again.stdout == base.stdout, f"{kind}/{fmt}: replay from finished checkpoint via CACHE_DIR")

    par = run("scan", kind, "--range", rng, "--format", "json", "--jobs", "4")
    check(par.stdout == run("scan", kind, "--range", rng, "--format", "json").stdout,
          f"{kind}: output independent of --jobs")

with tempfile.TemporaryDirectory() as d:
    run("scan", "cubic", "--range", "-1..120", "--stop-after-rows", "30", cache=d)
    ck = next(pathlib.Path(d).glob("*.ckpt.jsonl"))
    good = ck.read_text()

    ck.write_text(good.replace('"version":"sextic-1.0"', '"version":"other-0"'))
    p = run("scan", "cubic", "--range", "-1..120", cache=d)
    check(p.returncode == 2 and "different scan" in p.stderr, "foreign version tag refused (exit 2)")

    lines = good.splitlines(keepends=True)
    damaged = {
        "truncated": "".join(lines[:-1]) if len(lines) > 2 else good[: len(good) // 2],
        "garbage": good[:40] + "\x00\x01garbage\n",
        "bad progress": good.replace('"last_row":', '"last_row":"x","was":'),
        "empty": "",
    }
    for name, text in damaged.items():
        ck.write_text(text)
        p = run("scan", "cubic", "--range", "-1..120", cache=d)
        check(p.returncode == 3, f"{name} checkpoint gives exit 3 (got {p.returncode})")

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
