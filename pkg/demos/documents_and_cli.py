"""
The JSON document format and the command line
=============================================

Complexes travel as JSON documents: cells listed per dimension and
one record per face assignment.  Serialization is canonical, so a
parse followed by a serialize gives back the exact bytes.  The same
operations are scripted here through the command line interface.
"""

import subprocess
import sys
import tempfile
from pathlib import Path

from precubical import (
    generate,
    globular_decomposition,
    parse,
    serialize,
    standard_cube,
)

# A document for the square, short enough to read whole.
text = serialize(standard_cube(2))
print(text)

# Round trip: parse the text back and serialize again.
print(f"byte-identical round trip: {serialize(parse(text)) == text}")

# Named generators cover the usual suspects.
for family, param in [("circle", None), ("torus", 2), ("interval", 3)]:
    K = generate(family, param)
    label = family if param is None else f"{family} {param}"
    print(f"{label}: counts {K.cell_counts()}")

# The globular decomposition attaches one directed cell per cube of
# positive dimension, with corner vertices as endpoints.
decomposition = globular_decomposition(standard_cube(2))
for cell in decomposition.cells():
    print(f"globe from {cell.cube.label}: {cell.source} -> {cell.target}")

# The CLI wraps the same library.  Write a document, then ask for
# reports; every command prints deterministic JSON.
with tempfile.TemporaryDirectory() as tmp:
    doc = Path(tmp) / "torus.json"
    doc.write_text(serialize(generate("torus", 2)), encoding="utf-8")

    for argv in (
        ["info", str(doc)],
        ["homology", str(doc)],
        ["order", str(doc)],
    ):
        proc = subprocess.run(
            [sys.executable, "-m", "precubical.cli", *argv],
            capture_output=True, text=True, check=True,
        )
        print(f"$ precubical {' '.join(argv)}")
        print(proc.stdout)
