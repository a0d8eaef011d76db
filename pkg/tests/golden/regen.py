"""Regenerate the expected outputs for the golden CLI cases.

Run from anywhere:  python3 tests/golden/regen.py

Overwrites golden/expected/. Review the diff before committing; these files
freeze the CLI's observable behavior, so a change here is a change of
contract, not a test fix.
"""

import pathlib
import subprocess
import sys

TESTS_DIR = pathlib.Path(__file__).resolve().parent.parent
sys.path.insert(0, str(TESTS_DIR))

from golden_cases import CASES  # noqa: E402

EXPECTED = TESTS_DIR / "golden" / "expected"


def main() -> int:
    EXPECTED.mkdir(exist_ok=True)
    for stale in EXPECTED.iterdir():
        stale.unlink()
    bad = 0
    for name, argv, want_code in CASES:
        proc = subprocess.run(
            [sys.executable, "-m", "hypertree_lab.cli", *argv],
            cwd=TESTS_DIR,
            capture_output=True,
        )
        if proc.returncode != want_code:
            print(f"{name}: exit {proc.returncode}, expected {want_code}")
            bad += 1
            continue
        if proc.stdout:
            (EXPECTED / f"{name}.out").write_bytes(proc.stdout)
        if proc.stderr:
            (EXPECTED / f"{name}.err").write_bytes(proc.stderr)
        print(f"{name}: ok (exit {want_code})")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
