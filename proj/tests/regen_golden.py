#!/usr/bin/env python3
"""Regenerate tests/golden from tests/data/examples.json.

Usage: tests/regen_golden.py path/to/pkr
"""
import json
import pathlib
import subprocess
import sys

here = pathlib.Path(__file__).resolve().parent
data = here / "data"
golden = here / "golden"


def main() -> int:
    pkr = sys.argv[1]
    examples = json.loads((data / "examples.json").read_text())["examples"]
    golden.mkdir(exist_ok=True)
    for ex in examples:
        args = [a.replace("{data}", str(data)) for a in ex["args"]]
        run = subprocess.run([pkr, *args], capture_output=True, text=True)
        if run.returncode != ex["exit"]:
            print(f"{ex['name']}: exit {run.returncode}, expected {ex['exit']}")
            print(run.stderr)
            return 1
        (golden / f"{ex['name']}.json").write_text(run.stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())
