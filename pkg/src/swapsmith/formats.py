"""Line-oriented text formats for graphs, swap traces and game records.

Graph file::

    n 5
    0 1 1
    2 3 2

one line per nonzero pair ``u v m`` with ``u <= v``, sorted; a loop is
``v v m``. Trace file::

    fingerprint <sha256 hex of the starting graph file>
    swap v1 v2 v3 v4

A game record is a trace with a ``devil u v`` line before each swap and a
closing ``outcome ...`` line. Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

from pathlib import Path

from .multigraph import LoopyMultigraph, Swap, SwapTrace


class FormatError(ValueError):
    pass


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def format_graph(g: LoopyMultigraph) -> str:
    out = [f"n {g.n}"]
    out.extend(f"{u} {v} {m}" for (u, v), m in g.pairs())
    return "\n".join(out) + "\n"


def parse_graph(text: str) -> LoopyMultigraph:
    g = None
    seen = set()
    for lineno, tok in _lines(text):
        if g is None:
            if len(tok) != 2 or tok[0] != "n":
                raise FormatError(f"line {lineno}: expected 'n <count>'")
            g = LoopyMultigraph(_int(tok[1], lineno))
            continue
        if len(tok) != 3:
            raise FormatError(f"line {lineno}: expected 'u v m'")
        u, v, m = (_int(t, lineno) for t in tok)
        if u > v or m < 1:
            raise FormatError(f"line {lineno}: need u <= v and m >= 1")
        if (u, v) in seen:
            raise FormatError(f"line {lineno}: duplicate pair {u} {v}")
        if not (0 <= u < g.n and 0 <= v < g.n):
            raise FormatError(f"line {lineno}: vertex out of range")
        seen.add((u, v))
        g.add_edge(u, v, m)
    if g is None:
        raise FormatError("empty graph file")
    return g


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"line {lineno}: not an integer: {tok!r}") from None


def format_trace(trace: SwapTrace) -> str:
    out = [f"fingerprint {trace.fingerprint}"]
    out.extend("swap {} {} {} {}".format(*s) for s in trace.swaps)
    return "\n".join(out) + "\n"


def parse_trace(text: str) -> SwapTrace:
    """Parse a trace or a game record (``devil``/``outcome`` lines are skipped)."""
    trace = None
    for lineno, tok in _lines(text):
        head = tok[0]
        if trace is None:
            if head != "fingerprint" or len(tok) != 2:
                raise FormatError(f"line {lineno}: expected 'fingerprint <hex>'")
            trace = SwapTrace(tok[1])
        elif head == "swap" and len(tok) == 5:
            trace.swaps.append(Swap(*(_int(t, lineno) for t in tok[1:])))
        elif head in ("devil", "outcome"):
            continue
        else:
            raise FormatError(f"line {lineno}: unrecognised line")
    if trace is None:
        raise FormatError("empty trace file")
    return trace


def read_graph(path) -> LoopyMultigraph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def write_graph(path, g: LoopyMultigraph) -> None:
    Path(path).write_text(format_graph(g), encoding="utf-8")


def read_trace(path) -> SwapTrace:
    return parse_trace(Path(path).read_text(encoding="utf-8"))


def write_trace(path, trace: SwapTrace) -> None:
    Path(path).write_text(format_trace(trace), encoding="utf-8")


def format_sample_stream(graphs) -> str:
    """Concatenate graphs with ``--- sample k`` separators."""
    return "".join(f"--- sample {k}\n{format_graph(g)}" for k, g in enumerate(graphs))


def parse_sample_stream(text: str) -> list[LoopyMultigraph]:
    chunks, cur = [], None
    for raw in text.splitlines():
        if raw.startswith("--- sample"):
            if cur is not None:
                chunks.append(cur)
            cur = []
        elif cur is not None:
            cur.append(raw)
    if cur is not None:
        chunks.append(cur)
    return [parse_graph("\n".join(c)) for c in chunks]
