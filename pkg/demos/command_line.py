"""
Driving the command line from Python
====================================

Everything the library does is also reachable through the ``tensorframes``
command.  This script writes two frame files to a scratch directory and
runs a few subcommands on them.
"""

import tempfile
from pathlib import Path

from tensorframes import Frame, mercedes_frame
from tensorframes.cli import main
from tensorframes.fileio import dump

work = Path(tempfile.mkdtemp())
dump(Frame([[1, 0], [0, 1], [0, 1]]), work / "e1e2e2.json")
dump(mercedes_frame(), work / "mercedes.json")
dump([1, 1j], work / "x.json")

main(["analyze", str(work / "e1e2e2.json")])
main(["dual", str(work / "e1e2e2.json"), "-o", str(work / "dual.json")])
main(["tensor", str(work / "e1e2e2.json"), str(work / "mercedes.json"), "-o", str(work / "product.json")])
main(["reconstruct", str(work / "mercedes.json"), str(work / "x.json")])

code = main(["verify", "--trials", "3", "--seed", "1", str(work / "mercedes.json")])
print("verify exit code", code)
print(sorted(p.name for p in work.iterdir()))
