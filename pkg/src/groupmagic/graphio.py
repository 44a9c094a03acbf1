"""Edge-list files, the constructor DSL, and product expressions.

Edge-list format::

    # comment
    n 4
    0 1
    1 2

Expressions (used by every CLI command that takes a graph)::

    expr  := atom | NAME '(' args ')'
    atom  := cycle:N | path:N | complete:N | empty:N | kpartite:N,N,... | <file path>
    tensor(e,e[,e...])   lex(e,e)    embed(e)
    hjoin(e;e,e,...)     corona(e;e,e,...)    inflate(e;r1,r2,...)
"""

from __future__ import annotations

import re
from pathlib import Path

from . import graph as gr
from .graph import Graph, GraphError


class GraphParseError(GraphError):
    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


def parse_edge_list(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "n":
                raise GraphParseError(f"line {lineno}: expected 'n <count>', got {raw!r}")
            n = _int(fields[1], lineno)
            continue
        if len(fields) != 2:
            raise GraphParseError(f"line {lineno}: expected 'u v', got {raw!r}")
        edges.append((_int(fields[0], lineno), _int(fields[1], lineno)))
    if n is None:
        raise GraphParseError("missing 'n <count>' header")
    return gr.build(n, edges)


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphParseError(f"line {lineno}: {tok!r} is not an integer") from None


def format_edge_list(G: Graph) -> str:
    lines = [f"n {G.n}"]
    lines.extend(f"{u} {v}" for u, v in G.edges)
    return "\n".join(lines) + "\n"


def read_edge_list(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def write_edge_list(G: Graph, path: str | Path) -> None:
    Path(path).write_text(format_edge_list(G))


_ATOMS = {
    "cycle": gr.cycle,
    "path": gr.path,
    "complete": gr.complete,
    "empty": gr.empty,
}

_DSL = re.compile(r"([A-Za-z]+):(\d+(?:,\d+)*)")
_NAME = re.compile(r"[A-Za-z]+\(")
_PATH = re.compile(r"[^\s(),;]+")
_INT = re.compile(r"\d+")


def dsl_graph(name: str, args: list[int]) -> Graph:
    name = name.lower()
    if name == "kpartite":
        return gr.complete_multipartite(args)
    if name not in _ATOMS:
        raise GraphParseError(f"unknown constructor {name!r}")
    if len(args) != 1:
        raise GraphParseError(f"{name} takes exactly one argument")
    return _ATOMS[name](args[0])


class _Parser:
    def __init__(self, text: str, base: Path | None):
        self.text = text
        self.pos = 0
        self.base = base

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, ch: str):
        self.skip()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            found = self.text[self.pos] if self.pos < len(self.text) else "end of input"
            raise GraphParseError(f"expected {ch!r}, found {found!r}", self.pos)
        self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expr(self) -> Graph:
        self.skip()
        start = self.pos
        m = _NAME.match(self.text, self.pos)
        if m:
            name = m.group(0)[:-1].lower()
            self.pos = m.end()
            return self.call(name, start)
        m = _DSL.match(self.text, self.pos)
        if m and m.group(1).lower() in (*_ATOMS, "kpartite"):
            self.pos = m.end()
            args = [int(x) for x in m.group(2).split(",")]
            return dsl_graph(m.group(1), args)
        m = _PATH.match(self.text, self.pos)
        if not m:
            raise GraphParseError("expected a graph", self.pos)
        self.pos = m.end()
        path = Path(m.group(0))
        if self.base is not None and not path.is_absolute():
            path = self.base / path
        if not path.exists():
            raise GraphParseError(f"unknown graph atom or missing file {m.group(0)!r}", start)
        return read_edge_list(path)

    def expr_list(self) -> list[Graph]:
        items = [self.expr()]
        while self.peek() == ",":
            self.pos += 1
            items.append(self.expr())
        return items

    def int_list(self) -> list[int]:
        out = []
        while True:
            self.skip()
            m = _INT.match(self.text, self.pos)
            if not m:
                raise GraphParseError("expected an integer", self.pos)
            out.append(int(m.group(0)))
            self.pos = m.end()
            if self.peek() != ",":
                return out
            self.pos += 1

    def call(self, name: str, start: int) -> Graph:
        """Parse the arguments of ``name(`` through ``)``, then build."""
        if name in ("tensor", "lex"):
            args = self.expr_list()
            self.expect(")")
            if name == "lex":
                if len(args) != 2:
                    raise GraphParseError("lex takes two graphs", start)
                return gr.lexicographic(*args)
            if len(args) < 2:
                raise GraphParseError("tensor takes at least two graphs", start)
            return gr.tensor(*args)
        if name == "embed":
            arg = self.expr()
            self.expect(")")
            return gr.embed_in_gvm(arg)
        if name in ("hjoin", "corona", "inflate"):
            head = self.expr()
            self.expect(";")
            if name == "inflate":
                counts = self.int_list()
                self.expect(")")
                return gr.inflate(head, counts)
            parts = self.expr_list()
            self.expect(")")
            if name == "hjoin":
                return gr.h_join(head, parts)
            return gr.generalized_corona(head, parts)
        raise GraphParseError(f"unknown operation {name!r}", start)


def parse_graph(text: str, base: Path | None = None) -> Graph:
    """Parse a constructor atom, file path, or product expression."""
    p = _Parser(text, base)
    G = p.expr()
    p.skip()
    if p.pos != len(text):
        raise GraphParseError(f"unexpected trailing input {text[p.pos:]!r}", p.pos)
    return G
