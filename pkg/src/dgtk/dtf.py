"""The digraph text format (DTF).

A DTF document is ASCII/UTF-8 text: optional comment lines starting with
'#', a header line "n <count>", then one arc per line "<u> <v>" with
0-based vertex ids separated by a single space.  Writing is canonical
(sorted arcs, trailing newline), so parse(write(d)) == d.
"""
from __future__ import annotations

from dgtk.digraph import Digraph


class DtfParseError(ValueError):
    """Malformed DTF input; carries the 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no
        self.message = message


def write_dtf(d: Digraph, comments: tuple[str, ...] = ()) -> str:
    """Serialize a digraph; extra comment lines are emitted before the header."""
    lines = [f"# {c}" for c in comments]
    lines.append(f"n {d.n}")
    lines.extend(f"{u} {v}" for u, v in sorted(d.arcs))
    return "\n".join(lines) + "\n"


def parse_dtf(text: str) -> Digraph:
    """Parse a DTF document; raises DtfParseError with the offending line."""
    n: int | None = None
    arcs: set[tuple[int, int]] = set()
    for line_no, line in enumerate(text.splitlines(), start=1):
        if line.startswith("#"):
            continue
        if not line.strip():
            raise DtfParseError(line_no, "blank line")
        tokens = line.split()
        if n is None:
            if len(tokens) != 2 or tokens[0] != "n" or not tokens[1].isdigit():
                raise DtfParseError(line_no, f"malformed header {line!r}, expected 'n <count>'")
            n = int(tokens[1])
            continue
        if len(tokens) != 2 or not tokens[0].isdigit() or not tokens[1].isdigit():
            raise DtfParseError(line_no, f"malformed arc line {line!r}, expected '<u> <v>'")
        u, v = int(tokens[0]), int(tokens[1])
        if u >= n or v >= n:
            raise DtfParseError(line_no, f"vertex out of range in arc ({u}, {v}) with n={n}")
        if u == v:
            raise DtfParseError(line_no, f"loop at vertex {u}")
        if (u, v) in arcs:
            raise DtfParseError(line_no, f"duplicate arc ({u}, {v})")
        arcs.add((u, v))
    if n is None:
        raise DtfParseError(1, "missing header 'n <count>'")
    return Digraph(n, arcs)
