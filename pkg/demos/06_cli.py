"""
The lefrank command line
========================

Every verb prints a short text report, or JSON with --json.  Exit codes:
0 success, 1 negative verdict, 2 malformed input, 3 internal error.
"""
import subprocess
import sys
import tempfile
from pathlib import Path


def lefrank(*args):
    proc = subprocess.run([sys.executable, "-m", "lefrank.cli", *args], capture_output=True, text=True)
    print("$ lefrank " + " ".join(args) + "   [exit %d]" % proc.returncode)
    print(proc.stdout.rstrip() or proc.stderr.rstrip())
    print()
    return proc.stdout


with tempfile.TemporaryDirectory() as tmp:
    ring = str(Path(tmp) / "kt.ring.json")
    lie = Path(tmp) / "kt.lie.json"
    # export a Lie algebra from the catalog, then its cohomology ring
    lefrank("catalog", "list")
    lie.write_text(lefrank("catalog", "get", "kodaira-thurston"))
    Path(ring).write_text(lefrank("ce", str(lie)))
    lefrank("lefschetz", ring, "--class", "omega")
    lefrank("filtration", ring, "--class", "omega")
    lefrank("certify", ring, "--class", "omega", "--base-betti", "1,0,1")
    lefrank("blowup", ring, "--class", "omega", "--ambient", "5", "--codim", "6")
    # a missing file is malformed input
    lefrank("validate", str(lie.with_suffix(".missing")))
