"""Text stream files: header ``n k mode``, then ``+ u v`` / ``- u v`` / ``?``.

Parsing and emission round-trip byte-exactly; a validating mode replays
the updates through a ShadowGraph and rejects semantic violations.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..core import (DELETE, INSERT, Edge, InvalidStream, ShadowGraph,
                    StreamUpdate)

MODES = ("psa", "pdpsa", "dpsa", "fvs")

QUERY = "?"  # query marker in the event list


class ParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass
class StreamFile:
    n: int
    k: int
    mode: str
    events: list  # StreamUpdate | QUERY


def parse_stream(text: str, validate: bool = False) -> StreamFile:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ParseError(1, "missing header")
    head = lines[0].split()
    if len(head) != 3:
        raise ParseError(1, f"bad header {lines[0]!r}")
    try:
        n, k = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError(1, f"bad header {lines[0]!r}") from None
    mode = head[2]
    if mode not in MODES:
        raise ParseError(1, f"unknown mode {mode!r}")
    if n < 1 or k < 0:
        raise ParseError(1, "need n >= 1 and k >= 0")

    shadow = ShadowGraph(n) if validate else None
    events: list = []
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if parts == [QUERY]:
            events.append(QUERY)
            continue
        if len(parts) != 3 or parts[0] not in (INSERT, DELETE):
            raise ParseError(lineno, f"bad update {line!r}")
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise ParseError(lineno, f"bad update {line!r}") from None
        if not (1 <= u <= n and 1 <= v <= n) or u == v:
            raise ParseError(lineno, f"bad endpoints {line!r}")
        upd = StreamUpdate(parts[0], Edge(u, v))
        if shadow is not None:
            try:
                shadow.apply(upd)
            except InvalidStream as exc:
                raise InvalidStream(f"line {lineno}: {exc}") from None
        events.append(upd)
    return StreamFile(n, k, mode, events)


def emit_stream(sf: StreamFile) -> str:
    out = [f"{sf.n} {sf.k} {sf.mode}"]
    for ev in sf.events:
        if ev == QUERY:
            out.append(QUERY)
        else:
            out.append(f"{ev.op} {ev.edge.u} {ev.edge.v}")
    return "\n".join(out) + "\n"
