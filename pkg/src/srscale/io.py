"""Whitespace matrix file format.

Header line "rows cols", then ``rows`` lines of ``cols`` decimal
literals (scientific notation accepted).  Serialization uses 17
significant digits so parse(serialize(M)) is entrywise exact.
"""

import numpy as np

from .errors import ParseError


def read_matrix(path):
    """Read a matrix file, raising ParseError with line/column diagnostics."""
    try:
        with open(path, "r", encoding="ascii") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    lines = [ln for ln in lines if ln.strip() != ""]
    if not lines:
        raise ParseError("empty matrix file", line=1)
    header = lines[0].split()
    if len(header) != 2:
        raise ParseError(f"header must be 'rows cols', got {lines[0]!r}", line=1)
    try:
        rows, cols = int(header[0]), int(header[1])
    except ValueError:
        raise ParseError(f"non-integer header {lines[0]!r}", line=1) from None
    if rows < 1 or cols < 1:
        raise ParseError(f"dimensions must be positive, got {rows}x{cols}", line=1)
    if len(lines) - 1 != rows:
        raise ParseError(f"expected {rows} data lines, found {len(lines) - 1}",
                         line=len(lines))
    out = np.empty((rows, cols))
    for i, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != cols:
            raise ParseError(f"expected {cols} entries, found {len(parts)}", line=i)
        for j, tok in enumerate(parts):
            try:
                out[i - 2, j] = float(tok)
            except ValueError:
                raise ParseError(f"invalid number {tok!r}", line=i, column=j + 1) from None
    if not np.all(np.isfinite(out)):
        raise ParseError("matrix entries must be finite")
    return out


def write_matrix(path, m):
    """Write a matrix file with 17 significant digits per entry."""
    m = np.atleast_2d(np.asarray(m, dtype=np.float64))
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"{m.shape[0]} {m.shape[1]}\n")
        for row in m:
            fh.write(" ".join(format(x, ".17g") for x in row) + "\n")
