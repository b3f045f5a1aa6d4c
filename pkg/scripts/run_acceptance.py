"""Run the acceptance suite and print only its per-criterion summary."""
import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]

if __name__ == "__main__":
    proc = subprocess.run(
        [sys.executable, "-m", "pytest", "-q", "-p", "no:cacheprovider", str(ROOT / "tests" / "test_acceptance.py")],
        cwd=ROOT, capture_output=True, text=True,
    )
    lines = proc.stdout.splitlines()
    start = next((i for i, l in enumerate(lines) if "acceptance criteria" in l), None)
    print("\n".join(lines[start:] if start is not None else lines))
    sys.exit(proc.returncode)
