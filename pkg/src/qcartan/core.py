"""Quasi-Cartan matrices, signed bigraphs and the conversions between them.

Vertices are the integers ``1..n`` everywhere. A matrix entry ``A[i, j]``
is read with 1-based indices so it lines up with vertex labels.
"""
from __future__ import annotations

import enum
import re
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from . import intmat
from .errors import InvalidBigraph, InvalidMatrix, InvalidRank, NotSimple


class LineStyle(enum.Enum):
    SOLID = "solid"
    DOTTED = "dotted"

    @property
    def opposite(self) -> "LineStyle":
        return LineStyle.DOTTED if self is LineStyle.SOLID else LineStyle.SOLID

    @property
    def sign(self) -> int:
        """Sign of the matrix entry encoded by one edge of this style."""
        return 1 if self is LineStyle.DOTTED else -1

    @classmethod
    def from_sign(cls, value: int) -> "LineStyle":
        if value == 0:
            raise ValueError("zero entry has no line style")
        return cls.DOTTED if value > 0 else cls.SOLID

    @classmethod
    def parse(cls, value: "LineStyle | str") -> "LineStyle":
        return value if isinstance(value, cls) else cls(str(value).lower())

    def __str__(self) -> str:
        return self.value


SOLID = LineStyle.SOLID
DOTTED = LineStyle.DOTTED

Edge = tuple[int, int, LineStyle]


@dataclass(frozen=True)
class QuasiCartanMatrix:
    """Symmetric integer matrix with every diagonal entry equal to 2."""

    entries: intmat.IntMatrix

    def __post_init__(self):
        rows = intmat.as_matrix(self.entries)
        n = len(rows)
        if n < 1:
            raise InvalidMatrix("a quasi-Cartan matrix needs at least one row")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise InvalidMatrix(f"row {i + 1} has {len(row)} entries, expected {n}")
            if row[i] != 2:
                raise InvalidMatrix(f"diagonal entry ({i + 1},{i + 1}) is {row[i]}, expected 2")
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise InvalidMatrix(f"entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) differ")
        object.__setattr__(self, "entries", rows)

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(key)
        return self.entries[i - 1][j - 1]

    @classmethod
    def diagonal(cls, n: int) -> "QuasiCartanMatrix":
        return cls(tuple(tuple(2 if i == j else 0 for j in range(n)) for i in range(n)))

    def is_cartan(self) -> bool:
        """Off-diagonal entries are all <= 0 (positive definiteness not checked)."""
        return all(x <= 0 for i, row in enumerate(self.entries) for j, x in enumerate(row) if i != j)

    def max_offdiagonal(self) -> int:
        return max((abs(x) for i, row in enumerate(self.entries) for j, x in enumerate(row) if i != j),
                   default=0)

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.entries)


@dataclass(frozen=True)
class Bigraph:
    """A graph on ``1..n`` whose edges carry a :class:`LineStyle`.

    ``edges`` is a multiset, stored as a sorted tuple of ``(u, v, style)``
    with ``u < v``; two bigraphs are equal iff their edge multisets are.
    """

    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise InvalidBigraph("negative vertex count")
        norm = []
        for u, v, style in self.edges:
            style = LineStyle.parse(style)
            u, v = int(u), int(v)
            if u == v:
                raise InvalidBigraph(f"loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise InvalidBigraph(f"edge ({u},{v}) outside 1..{self.n}")
            if u > v:
                u, v = v, u
            norm.append((u, v, style))
        norm.sort(key=lambda e: (e[0], e[1], e[2].value))
        object.__setattr__(self, "edges", tuple(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int, LineStyle | str]]) -> "Bigraph":
        return cls(n, tuple(edges))

    @classmethod
    def from_spec(cls, n: int, text: str) -> "Bigraph":
        """Compact literal: ``"1-2 2~3"`` gives solid {1,2} and dotted {2,3}."""
        edges = []
        for tok in text.split():
            m = re.fullmatch(r"(\d+)([-~])(\d+)", tok)
            if not m:
                raise InvalidBigraph(f"bad edge token {tok!r}")
            style = SOLID if m.group(2) == "-" else DOTTED
            edges.append((int(m.group(1)), int(m.group(3)), style))
        return cls(n, tuple(edges))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def _multiplicity(self) -> Counter:
        return Counter(self.edges)

    def is_simple(self) -> bool:
        pairs = [(u, v) for u, v, _ in self.edges]
        return len(pairs) == len(set(pairs))

    def require_simple(self) -> None:
        if not self.is_simple():
            raise NotSimple("bigraph has parallel edges")

    @cached_property
    def signs(self) -> dict[int, dict[int, int]]:
        """Adjacency map ``v -> {neighbour: net matrix entry}`` (zero entries dropped)."""
        adj: dict[int, dict[int, int]] = {v: {} for v in self.vertices}
        for u, v, style in self.edges:
            adj[u][v] = adj[u].get(v, 0) + style.sign
            adj[v][u] = adj[v].get(u, 0) + style.sign
        for v in adj:
            adj[v] = {w: x for w, x in adj[v].items() if x != 0}
        return adj

    def style(self, u: int, v: int) -> LineStyle | None:
        """Style of the edge ``{u, v}`` in a simple bigraph, ``None`` if absent."""
        x = self.signs[u].get(v, 0)
        if x == 0:
            return None
        if abs(x) != 1:
            raise NotSimple(f"pair ({u},{v}) carries {abs(x)} edges")
        return LineStyle.from_sign(x)

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.signs[v])

    def degree(self, v: int) -> int:
        return len(self.signs[v])

    def components(self) -> list[list[int]]:
        seen: set[int] = set()
        comps = []
        for start in self.vertices:
            if start in seen:
                continue
            seen.add(start)
            stack, comp = [start], []
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self.signs[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def subgraph(self, vertices: Iterable[int]) -> tuple["Bigraph", tuple[int, ...]]:
        """Induced subgraph relabelled to ``1..k``; ``labels[i-1]`` is the old name of ``i``."""
        labels = tuple(sorted(set(vertices)))
        index = {v: i + 1 for i, v in enumerate(labels)}
        edges = tuple((index[u], index[v], s) for u, v, s in self.edges if u in index and v in index)
        return Bigraph(len(labels), edges), labels

    def relabel(self, mapping: dict[int, int], n: int | None = None) -> "Bigraph":
        """Rename vertices by ``mapping`` (identity where absent)."""
        n = self.n if n is None else n
        return Bigraph(n, tuple((mapping.get(u, u), mapping.get(v, v), s) for u, v, s in self.edges))

    def to_spec(self) -> str:
        return " ".join(f"{u}{'-' if s is SOLID else '~'}{v}" for u, v, s in self.edges)

    def __repr__(self) -> str:
        return f"Bigraph({self.n}, {self.to_spec()!r})"


@dataclass(frozen=True, order=True)
class DynkinType:
    family: str
    rank: int = field(compare=True)

    def __post_init__(self):
        family = str(self.family).upper()
        object.__setattr__(self, "family", family)
        if family == "A" and self.rank >= 1:
            return
        if family == "D" and self.rank >= 4:
            return
        if family == "E" and self.rank in (6, 7, 8):
            return
        raise InvalidRank(f"no Dynkin diagram {family}{self.rank}")

    @classmethod
    def parse(cls, text: str) -> "DynkinType":
        m = re.fullmatch(r"\s*([ADEade])_?(\d+)\s*", text)
        if not m:
            raise InvalidRank(f"cannot parse Dynkin type {text!r}")
        return cls(m.group(1), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def matrix_to_bigraph(a: QuasiCartanMatrix) -> Bigraph:
    edges = []
    for i in range(a.n):
        for j in range(i + 1, a.n):
            x = a.entries[i][j]
            if x:
                style = LineStyle.from_sign(x)
                edges.extend([(i + 1, j + 1, style)] * abs(x))
    return Bigraph(a.n, tuple(edges))


def bigraph_to_matrix(g: Bigraph) -> QuasiCartanMatrix:
    """Each edge contributes its sign; opposite parallel edges net out."""
    rows = [[2 if i == j else 0 for j in range(g.n)] for i in range(g.n)]
    for u, v, style in g.edges:
        rows[u - 1][v - 1] += style.sign
        rows[v - 1][u - 1] += style.sign
    return QuasiCartanMatrix(tuple(map(tuple, rows)))


def simplify(g: Bigraph) -> Bigraph:
    """Erase solid/dotted parallel pairs until each pair keeps one style."""
    net: Counter = Counter()
    for u, v, style in g.edges:
        net[(u, v)] += style.sign
    edges = []
    for (u, v), x in net.items():
        if x:
            edges.extend([(u, v, LineStyle.from_sign(x))] * abs(x))
    return Bigraph(g.n, tuple(edges))


def is_positive_definite(a: QuasiCartanMatrix | Bigraph) -> bool:
    """Sylvester's criterion in exact integer arithmetic."""
    if isinstance(a, Bigraph):
        a = bigraph_to_matrix(a)
    return intmat.leading_minors_positive(a.entries)


def block_diagonal(blocks: Sequence[QuasiCartanMatrix]) -> QuasiCartanMatrix:
    n = sum(b.n for b in blocks)
    rows = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i in range(b.n):
            for j in range(b.n):
                rows[off + i][off + j] = b.entries[i][j]
        off += b.n
    return QuasiCartanMatrix(tuple(map(tuple, rows)))


def permute(a: QuasiCartanMatrix, labels: Sequence[int]) -> QuasiCartanMatrix:
    """``P^T a P`` where position ``k`` of the result is vertex ``labels[k-1]`` of ``a``."""
    return QuasiCartanMatrix(tuple(tuple(a.entries[u - 1][v - 1] for v in labels) for u in labels))
