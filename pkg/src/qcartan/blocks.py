"""Block trees, complete two-part blocks and the type-A characterization.

A connected simple bigraph has Dynkin type A_n exactly when every block
is a complete bigraph ``F[X, Y]`` (solid between the parts, dotted inside
each part) and every cut vertex lies in exactly two blocks.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .core import SOLID, Bigraph, bigraph_to_matrix
from .errors import InvariantViolation, NotAType, NotComplete, NotTwoColorable
from .flation import FlationStep, FlationWitness, apply_sequence, flate_graph

Adjacency = dict[int, dict[int, int]]


def biconnected(adj: Adjacency, vertices: Iterable[int]) -> tuple[list[frozenset], set[int]]:
    """Blocks (as vertex sets) and cut vertices, by iterative Hopcroft-Tarjan.

    Isolated vertices come out as singleton blocks.
    """
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    blocks: list[frozenset] = []
    cuts: set[int] = set()
    t = 0
    for root in vertices:
        if root in disc:
            continue
        disc[root] = low[root] = t
        t += 1
        if not adj[root]:
            blocks.append(frozenset((root,)))
            continue
        root_children = 0
        stack = [(root, 0, iter(adj[root]))]
        edges: list[tuple[int, int]] = []
        while stack:
            v, parent, it = stack[-1]
            for w in it:
                if w == parent:
                    continue
                if w not in disc:
                    disc[w] = low[w] = t
                    t += 1
                    edges.append((v, w))
                    stack.append((w, v, iter(adj[w])))
                    break
                if disc[w] < disc[v]:
                    if disc[w] < low[v]:
                        low[v] = disc[w]
                    edges.append((v, w))
            else:
                stack.pop()
                if not stack:
                    break
                p = stack[-1][0]
                if low[v] < low[p]:
                    low[p] = low[v]
                if low[v] >= disc[p]:
                    comp: set[int] = set()
                    while True:
                        e = edges.pop()
                        comp.update(e)
                        if e == (p, v):
                            break
                    blocks.append(frozenset(comp))
                    if p == root:
                        root_children += 1
                    else:
                        cuts.add(p)
        if root_children > 1:
            cuts.add(root)
    return blocks, cuts


@dataclass(frozen=True)
class BlockTree:
    """Bipartite tree of blocks and separation vertices.

    ``tree_edges`` holds ``(block index, separator)`` pairs.
    """

    blocks: tuple[frozenset, ...]
    separators: tuple[int, ...]
    tree_edges: tuple[tuple[int, int], ...]

    def degree(self, separator: int) -> int:
        return sum(1 for _, s in self.tree_edges if s == separator)

    def block_degree(self, index: int) -> int:
        return sum(1 for b, _ in self.tree_edges if b == index)

    def leaves(self) -> list[int]:
        return [i for i in range(len(self.blocks)) if self.block_degree(i) == 1]


def block_tree(g: Bigraph) -> BlockTree:
    g.require_simple()
    raw, cuts = biconnected(g.signs, g.vertices)
    blocks = tuple(sorted(raw, key=lambda b: sorted(b)))
    seps = tuple(sorted(cuts))
    tree_edges = tuple((i, s) for i, b in enumerate(blocks) for s in seps if s in b)
    return BlockTree(blocks, seps, tree_edges)


@dataclass(frozen=True)
class FDecomposition:
    X: frozenset
    Y: frozenset

    def part_of(self, v: int) -> str:
        return "X" if v in self.X else "Y"


def f_parts(adj: Adjacency, vertices: Iterable[int]) -> tuple[frozenset, frozenset] | str:
    """Split ``vertices`` into ``(X, Y)`` or return why it is no ``F[X, Y]``.

    X holds the smallest vertex.
    """
    verts = sorted(vertices)
    first = verts[0]
    x = {first}
    for v in verts[1:]:
        sign = adj[first].get(v, 0)
        if sign == 1:
            x.add(v)
        elif sign != -1:
            return "not-complete"
    for i, u in enumerate(verts):
        nb = adj[u]
        for v in verts[i + 1:]:
            sign = nb.get(v, 0)
            if sign not in (1, -1):
                return "not-complete"
            # dotted inside a part, solid across
            if (sign == 1) != ((u in x) == (v in x)):
                return "not-two-colorable"
    return frozenset(x), frozenset(verts) - x


def recognize_F(block: Bigraph) -> FDecomposition:
    block.require_simple()
    found = f_parts(block.signs, block.vertices)
    if found == "not-complete":
        raise NotComplete("block is not a complete graph")
    if found == "not-two-colorable":
        raise NotTwoColorable("line styles admit no solid-across / dotted-within split")
    return FDecomposition(*found)


def a_type_blocks(adj: Adjacency, vertices: list[int]):
    """``(blocks, cuts)`` when the graph on ``vertices`` is an A-block tree, else None."""
    blocks, cuts = biconnected(adj, vertices)
    count = dict.fromkeys(cuts, 0)
    for b in blocks:
        for c in cuts:
            if c in b:
                count[c] += 1
    # a block-cut forest is one tree iff edges = nodes - 1
    if sum(count.values()) != len(blocks) + len(cuts) - 1:
        return None
    if any(k != 2 for k in count.values()):
        return None
    for b in blocks:
        if isinstance(f_parts(adj, b), str):
            return None
    return blocks, cuts


def is_A_block_tree(g: Bigraph) -> bool:
    if not g.is_simple():
        return False
    verts = list(g.vertices)
    if not verts or not g.is_connected():
        return False
    return a_type_blocks(g.signs, verts) is not None


def classify_A(g: Bigraph) -> bool:
    """True iff ``g`` has Dynkin type A_n, n = number of vertices."""
    return is_A_block_tree(g)


def separator_route(g: Bigraph, x: int, y: int) -> list[int]:
    """Separators met on the route from ``x`` to ``y`` in the vertex-block incidence tree."""
    blocks, cuts = biconnected(g.signs, g.vertices)
    nodes: dict = {}
    for i, b in enumerate(blocks):
        for v in b:
            nodes.setdefault(("v", v), []).append(("b", i))
            nodes.setdefault(("b", i), []).append(("v", v))
    start, goal = ("v", x), ("v", y)
    prev = {start: None}
    queue = deque([start])
    while queue:
        node = queue.popleft()
        if node == goal:
            break
        for nxt in nodes.get(node, ()):
            if nxt not in prev:
                prev[nxt] = node
                queue.append(nxt)
    if goal not in prev:
        raise NotAType(f"{x} and {y} are not connected")
    route = []
    node = prev[goal]
    while node != start:
        if node[0] == "v":
            route.append(node[1])
        node = prev[node]
    route.reverse()
    assert all(v in cuts for v in route)
    return route


class Reduction(NamedTuple):
    """A witness taking the input to a canonical diagram.

    Vertex ``labels[k-1]`` of the reduced bigraph plays the role of
    vertex ``k`` of the standard diagram.
    """

    witness: FlationWitness
    labels: tuple[int, ...]
    result: Bigraph


def _linearization(x: list[int], y: list[int]) -> list[FlationStep]:
    # T(x_m,x_{m-1}) ... T(x_2,x_1) T(y_1,y_2) ... T(y_{m'-1},y_{m'}), rightmost first
    steps = [FlationStep(y[j - 1], y[j]) for j in range(len(y) - 1, 0, -1)]
    steps += [FlationStep(x[i], x[i - 1]) for i in range(1, len(x))]
    return steps


def reduce_to_An(g: Bigraph) -> Reduction:
    if not is_A_block_tree(g):
        raise NotAType("bigraph is not an A-block tree")
    steps: list[FlationStep] = []
    cur = g
    while True:
        bt = block_tree(cur)
        if len(bt.blocks) == 1:
            break
        leaf = min(bt.leaves(), key=lambda i: min(bt.blocks[i]))
        (s,) = [sep for i, sep in bt.tree_edges if i == leaf]
        for v in sorted(bt.blocks[leaf] - {s}):
            step = FlationStep(s, v)
            cur = flate_graph(cur, step)
            steps.append(step)
    x, y = f_parts(cur.signs, cur.vertices)
    tail = _linearization(sorted(x), sorted(y))
    for step in tail:
        cur = flate_graph(cur, step)
    steps += tail
    labels = tuple(sorted(x)) + tuple(sorted(y))
    expected = Bigraph(g.n, tuple((labels[k], labels[k + 1], SOLID) for k in range(g.n - 1)))
    if cur != expected:
        raise InvariantViolation(f"reduction ended at {cur!r}, not a path")
    result, witness = apply_sequence(bigraph_to_matrix(g), steps)
    assert result == bigraph_to_matrix(cur)
    return Reduction(witness, labels, cur)
