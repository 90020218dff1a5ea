"""Program text format, result serialization and trace output.

Grammar::

    rule := atom (":-" body)? "."
    body := lit ("," lit)*
    lit  := atom | "not" WS+ atom
    atom := [A-Za-z_][A-Za-z0-9_]*

``%`` starts a comment running to the end of the line. ``not`` is reserved.
"""

from __future__ import annotations

import json
import re
from typing import IO, Iterator, Union

from .core import Program, ProgramBuilder, WfsResult

# sentinel pf-set {s} in trace output; no pf-set is ever empty
SENTINEL_NAMES: list[str] = []

_TOKEN = re.compile(
    r"(?P<ws>[ \t\r\n]+)|(?P<comment>%[^\n]*)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<arrow>:-)|(?P<comma>,)|(?P<dot>\.)"
)


class ParseError(ValueError):
    def __init__(self, line_no: int, column: int, message: str):
        super().__init__(f"line {line_no}, column {column}: {message}")
        self.line_no = line_no
        self.column = column
        self.message = message


def _tokens(text: str) -> Iterator[tuple[str, str, int, int]]:
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(line, pos - line_start + 1, f"unexpected character {text[pos]!r}")
        kind = m.lastgroup
        if kind not in ("ws", "comment"):
            yield kind, m.group(), line, pos - line_start + 1
        else:
            chunk = m.group()
            newlines = chunk.count("\n")
            if newlines:
                line += newlines
                line_start = pos + chunk.rfind("\n") + 1
        pos = m.end()
    yield "eof", "", line, pos - line_start + 1


def parse(text: Union[str, bytes]) -> Program:
    """Parse program text into a :class:`Program`."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    builder = ProgramBuilder()
    toks = _tokens(text)

    def atom(tok, what):
        kind, value, line, col = tok
        if kind == "eof":
            raise ParseError(line, col, f"unterminated rule: expected {what}")
        if kind != "ident":
            raise ParseError(line, col, f"expected {what}, found {value!r}")
        if value == "not":
            raise ParseError(line, col, "'not' is reserved and cannot be used as an atom")
        return value

    for tok in toks:
        if tok[0] == "eof":
            break
        head = atom(tok, "rule head")
        pos: list[str] = []
        neg: list[str] = []
        kind, value, line, col = next(toks)
        if kind == "arrow":
            while True:
                tok = next(toks)
                if tok[0] == "ident" and tok[1] == "not":
                    neg.append(atom(next(toks), "atom after 'not'"))
                else:
                    pos.append(atom(tok, "body literal"))
                kind, value, line, col = next(toks)
                if kind == "comma":
                    continue
                break
        if kind == "eof":
            raise ParseError(line, col, "unterminated rule: expected '.'")
        if kind != "dot":
            raise ParseError(line, col, f"expected '.', found {value!r}")
        builder.add(head, pos, neg)
    return builder.build()


def format_program(p: Program) -> str:
    """Canonical text of ``p``: one rule per line, positive literals first."""
    names = p.names
    lines = []
    for r in p.rules:
        body = [names[a] for a in r.pos_body] + ["not " + names[a] for a in r.neg_body]
        if body:
            lines.append(f"{names[r.head]} :- {', '.join(body)}.")
        else:
            lines.append(f"{names[r.head]}.")
    return "".join(line + "\n" for line in lines)


def serialize_result(r: WfsResult, format: str = "text") -> str:
    named = r.named()
    if format == "text":
        return "".join(
            f"{key}:{''.join(' ' + n for n in named[key])}\n" for key in ("true", "false", "unknown")
        )
    if format == "json":
        return json.dumps(named, separators=(",", ":"))
    raise ValueError(f"unknown result format {format!r}")


class TraceWriter:
    """Callable trace hook writing JSON lines with sorted atom names.

    Events arrive as dicts whose set-valued fields hold atom ids; ``None``
    stands for the sentinel pf-set and is written as an empty list.
    """

    def __init__(self, stream: IO[str], names: tuple[str, ...]):
        self.stream = stream
        self.names = names

    def _names(self, atoms):
        if atoms is None:
            return SENTINEL_NAMES
        return sorted(self.names[a] for a in atoms)

    def __call__(self, event: dict) -> None:
        out = {}
        for key, value in event.items():
            if key in ("event", "i", "rule"):
                out[key] = value
            else:
                out[key] = self._names(value)
        self.stream.write(json.dumps(out, separators=(",", ":")) + "\n")
