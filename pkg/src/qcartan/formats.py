"""Line-oriented text formats for matrices, bigraphs and witnesses.

Documents::

    matrix 2          bigraph 3
    2 -1              1 2 dotted
    -1 2              1 3 solid

``#`` starts a comment and ``;`` may stand in for a newline, which lets a
whole document sit on one line. Witness files list ``T <s> <r>`` steps in
application order, then ``M`` and the accumulated matrix rows, then ``C``
and the rows of the resulting matrix.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from . import intmat
from .core import Bigraph, LineStyle, QuasiCartanMatrix, bigraph_to_matrix
from .errors import (
    DiagonalNotTwo,
    DimensionMismatch,
    FormatSyntaxError,
    InvalidMatrix,
    NotSymmetric,
    VertexOutOfRange,
)
from .flation import FlationStep, FlationWitness


@dataclass(frozen=True)
class InputDocument:
    kind: Literal["matrix", "bigraph"]
    payload: QuasiCartanMatrix | Bigraph

    def matrix(self) -> QuasiCartanMatrix:
        return self.payload if self.kind == "matrix" else bigraph_to_matrix(self.payload)


def _logical_lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        for part in raw.split("#", 1)[0].split(";"):
            part = part.strip()
            if part:
                yield number, part.split()


def _int(token: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise FormatSyntaxError(f"expected an integer, got {token!r}", line) from None


def parse_input(text: str) -> InputDocument:
    lines = list(_logical_lines(text))
    if not lines:
        raise FormatSyntaxError("empty document")
    line, head = lines[0]
    if len(head) != 2 or head[0] not in ("matrix", "bigraph"):
        raise FormatSyntaxError("expected 'matrix <n>' or 'bigraph <n>'", line)
    n = _int(head[1], line)
    if n < 1:
        raise FormatSyntaxError("size must be positive", line)
    body = lines[1:]
    if head[0] == "matrix":
        if len(body) != n:
            raise DimensionMismatch(f"expected {n} rows, found {len(body)}", body[-1][0] if body else line)
        rows = []
        for line, tokens in body:
            if len(tokens) != n:
                raise DimensionMismatch(f"expected {n} entries, found {len(tokens)}", line)
            rows.append([_int(t, line) for t in tokens])
        for i, (line, _) in enumerate(body):
            if rows[i][i] != 2:
                raise DiagonalNotTwo(f"diagonal entry {i + 1} is {rows[i][i]}", line)
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise NotSymmetric(f"entry ({i + 1},{j + 1}) differs from ({j + 1},{i + 1})", line)
        return InputDocument("matrix", QuasiCartanMatrix(intmat.as_matrix(rows)))
    edges = []
    for line, tokens in body:
        if len(tokens) != 3:
            raise FormatSyntaxError("expected '<u> <v> solid|dotted'", line)
        u, v = _int(tokens[0], line), _int(tokens[1], line)
        try:
            style = LineStyle(tokens[2])
        except ValueError:
            raise FormatSyntaxError(f"unknown line style {tokens[2]!r}", line) from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise VertexOutOfRange(f"vertex outside 1..{n}", line)
        if u >= v:
            raise FormatSyntaxError("edges are written with u < v", line)
        edges.append((u, v, style))
    return InputDocument("bigraph", Bigraph(n, tuple(edges)))


def serialize(doc: InputDocument | QuasiCartanMatrix | Bigraph) -> str:
    payload = doc.payload if isinstance(doc, InputDocument) else doc
    if isinstance(payload, QuasiCartanMatrix):
        return f"matrix {payload.n}\n{payload}\n"
    out = [f"bigraph {payload.n}"] + [f"{u} {v} {s}" for u, v, s in payload.edges]
    return "\n".join(out) + "\n"


def one_line(doc: InputDocument | QuasiCartanMatrix | Bigraph) -> str:
    return "; ".join(serialize(doc).strip().splitlines())


def format_matrix_rows(m) -> list[str]:
    return [" ".join(str(x) for x in row) for row in m]


def format_witness(w: FlationWitness, canonical: QuasiCartanMatrix | None = None) -> str:
    out = [str(step) for step in w.steps]
    out.append("M")
    out += format_matrix_rows(w.accumulated)
    if canonical is not None:
        out.append("C")
        out += format_matrix_rows(canonical.entries)
    return "\n".join(out) + "\n"


@dataclass(frozen=True)
class WitnessFile:
    steps: tuple[FlationStep, ...]
    accumulated: intmat.IntMatrix | None
    canonical: QuasiCartanMatrix | None


def parse_witness(text: str) -> WitnessFile:
    steps = []
    sections: dict[str, list[list[int]]] = {}
    current = None
    for line, tokens in _logical_lines(text):
        if tokens[0] == "T":
            if current is not None or len(tokens) != 3:
                raise FormatSyntaxError("steps must come first as 'T <s> <r>'", line)
            try:
                steps.append(FlationStep(_int(tokens[1], line), _int(tokens[2], line)))
            except ValueError as exc:
                raise FormatSyntaxError(str(exc), line) from None
        elif tokens in (["M"], ["C"]):
            current = tokens[0]
            if current in sections:
                raise FormatSyntaxError(f"section {current} repeated", line)
            sections[current] = []
        elif current is not None:
            sections[current].append([_int(t, line) for t in tokens])
        else:
            raise FormatSyntaxError(f"unexpected {' '.join(tokens)!r}", line)
    acc = intmat.as_matrix(sections["M"]) if "M" in sections else None
    canonical = None
    if "C" in sections:
        try:
            canonical = QuasiCartanMatrix(intmat.as_matrix(sections["C"]))
        except InvalidMatrix as exc:
            raise FormatSyntaxError(f"section C: {exc}") from None
    return WitnessFile(tuple(steps), acc, canonical)


def to_dot(g: Bigraph, name: str = "G") -> str:
    out = [f"graph {name} {{"]
    out += [f"  {v};" for v in g.vertices]
    for u, v, s in g.edges:
        out.append(f"  {u} -- {v}{' [style=dashed]' if s is LineStyle.DOTTED else ''};")
    out.append("}")
    return "\n".join(out) + "\n"
