"""Readers and writers for the .pcg, .pce and .svs text formats.

.pcg  ``pcg <n>`` then one ``u v`` edge per line (several graphs may follow
      one another in a stream)
.pce  ``pce <n> <k>`` then one ``+-`` string per vertex
.svs  one ``+-0`` string per line

In every format ``#`` starts a comment and blank lines are ignored.
"""

from __future__ import annotations

from pathlib import Path

from .errors import FormatError, InvalidGraph
from .graph import Graph, PartialCube, embed_partial_cube
from .signs import SignSystem


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _ints(no: int, parts: list[str]) -> list[int]:
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise FormatError(f"line {no}: expected integers") from None


def _finish_graph(no: int, n: int, edges: list) -> Graph:
    try:
        g = Graph(n, frozenset(edges))
    except InvalidGraph as e:
        raise FormatError(f"graph starting at line {no}: {e}") from None
    if len(g.edges) != len(edges):
        raise FormatError(f"graph starting at line {no}: duplicate edge")
    if n == 0:
        raise FormatError(f"graph starting at line {no}: empty graph")
    return g


def read_pcg(text: str) -> list[Graph]:
    graphs = []
    cur = None
    for no, line in _lines(text):
        parts = line.split()
        if parts[0] == "pcg":
            if cur is not None:
                graphs.append(_finish_graph(*cur))
            if len(parts) != 2:
                raise FormatError(f"line {no}: header must be 'pcg <n>'")
            (n,) = _ints(no, parts[1:])
            cur = (no, n, [])
            continue
        if cur is None:
            raise FormatError(f"line {no}: missing 'pcg <n>' header")
        if len(parts) != 2:
            raise FormatError(f"line {no}: expected 'u v'")
        u, v = _ints(no, parts)
        cur[2].append((u, v))
    if cur is None:
        raise FormatError("no graph found")
    graphs.append(_finish_graph(*cur))
    return graphs


def write_pcg(g: Graph | PartialCube) -> str:
    if isinstance(g, PartialCube):
        n, edges = g.n, g.edges
    else:
        n, edges = g.vertex_count, g.sorted_edges
    return "".join([f"pcg {n}\n"] + [f"{u} {v}\n" for u, v in edges])


def read_pce(text: str) -> list[PartialCube]:
    out = []
    lines = list(_lines(text))
    i = 0
    if not lines:
        raise FormatError("no graph found")
    while i < len(lines):
        no, line = lines[i]
        parts = line.split()
        if parts[0] != "pce" or len(parts) != 3:
            raise FormatError(f"line {no}: header must be 'pce <n> <k>'")
        n, k = _ints(no, parts[1:])
        rows = [l for _, l in lines[i + 1:i + 1 + n]]
        if len(rows) != n:
            raise FormatError(f"line {no}: expected {n} vertex lines")
        for r in rows:
            if len(r) != k or set(r) - {"+", "-"}:
                raise FormatError(f"graph at line {no}: bad vertex line {r!r}")
        try:
            out.append(PartialCube.from_strings(rows))
        except InvalidGraph as e:
            raise FormatError(f"graph at line {no}: {e}") from None
        i += n + 1
    return out


def write_pce(pc: PartialCube) -> str:
    return "".join([f"pce {pc.n} {pc.k}\n"] + [pc.vector(v) + "\n" for v in range(pc.n)])


def read_svs(text: str) -> SignSystem:
    rows = []
    seen = set()
    for no, line in _lines(text):
        if set(line) - set("+-0"):
            raise FormatError(f"line {no}: sign vectors use only '+', '-', '0'")
        if rows and len(line) != len(rows[0]):
            raise FormatError(f"line {no}: length {len(line)} differs from {len(rows[0])}")
        if line in seen:
            raise FormatError(f"line {no}: duplicate vector {line}")
        seen.add(line)
        rows.append(line)
    if not rows:
        raise FormatError("empty sign system")
    return SignSystem.from_strings(rows)


def write_svs(L: SignSystem) -> str:
    return "".join(s + "\n" for s in L.strings())


def load_partial_cubes(path: str | Path) -> list[PartialCube]:
    """Read a .pcg (embedding each graph) or .pce file."""
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as e:
        raise FormatError(f"cannot read {p}: {e.strerror}") from None
    if p.suffix == ".pce":
        return read_pce(text)
    if p.suffix == ".pcg":
        return [embed_partial_cube(g) for g in read_pcg(text)]
    raise FormatError(f"unknown graph file type {p.suffix!r} (use .pcg or .pce)")


def load_system(path: str | Path) -> SignSystem:
    p = Path(path)
    try:
        return read_svs(p.read_text())
    except OSError as e:
        raise FormatError(f"cannot read {p}: {e.strerror}") from None
