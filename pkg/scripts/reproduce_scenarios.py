#!/usr/bin/env python3
"""Run the bundled moving-blocks scenarios and print their outcome tables."""

from pathlib import Path

from qbplan.cli import main


def run() -> int:
    scenarios = Path(__file__).resolve().parent.parent / "scenarios"
    for path in sorted(scenarios.glob("*.qbd")):
        print(f"== {path.name}")
        code = main(["simulate", str(path)])
        print(f"exit code: {code}")
        print()
    return 0


if __name__ == "__main__":
    raise SystemExit(run())
