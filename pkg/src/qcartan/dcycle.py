"""D-cycle gluings and the type-D characterization.

A connected bigraph on n >= 4 vertices has type D_n iff it is obtained
from an A_{n+1} bigraph ``J`` by identifying two non-separating vertices
``u``, ``v`` at distance >= 2 whose shortest path carries an odd number
of dotted edges. :func:`recognize_D` searches for such a ``J`` by
splitting one vertex of ``G``; :func:`decomposition_from_split` turns a
hit into a D-cycle gluing and :func:`reduce_to_Dn` walks that gluing down
to the standard D_n diagram.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .blocks import Adjacency, Reduction, a_type_blocks, biconnected, classify_A
from .core import (
    DOTTED,
    SOLID,
    Bigraph,
    LineStyle,
    bigraph_to_matrix,
    matrix_to_bigraph,
    simplify,
)
from .errors import (
    EmptySide,
    InvalidDecomposition,
    InvalidWitness,
    InvariantViolation,
    NotAType,
    VerticesAdjacent,
)
from .flation import FlationStep, apply_sequence, flate_graph
from .inflations import canonical_cartan


@dataclass(frozen=True)
class DCycleGluing:
    """Cycle ``x_1 .. x_h`` plus one A-type piece per cycle edge.

    Piece ``i`` (0-based) contains the edge ``{x_i, x_{i+1}}`` with style
    ``cycle_styles[i]``. Every piece lives on the ambient vertex range
    ``1..n``; its vertex set is the set of vertices its edges touch.
    """

    cycle_vertices: tuple[int, ...]
    cycle_styles: tuple[LineStyle, ...]
    pieces: tuple[Bigraph, ...]

    @property
    def h(self) -> int:
        return len(self.cycle_vertices)

    @property
    def n(self) -> int:
        return self.pieces[0].n

    def piece_vertices(self, i: int) -> frozenset:
        return frozenset(v for e in self.pieces[i].edges for v in e[:2])

    def edge(self, i: int) -> tuple[int, int]:
        return self.cycle_vertices[i], self.cycle_vertices[(i + 1) % self.h]

    def validate(self) -> None:
        h = self.h
        if h < 2:
            raise InvariantViolation("cycle needs at least two vertices")
        if len(self.cycle_styles) != h or len(self.pieces) != h:
            raise InvariantViolation("one style and one piece per cycle edge")
        if len(set(self.cycle_vertices)) != h:
            raise InvariantViolation("cycle vertices repeat")
        if len({p.n for p in self.pieces}) != 1:
            raise InvariantViolation("pieces live on different vertex ranges")
        if sum(1 for s in self.cycle_styles if s is DOTTED) % 2 != 1:
            raise InvariantViolation("cycle must carry an odd number of dotted edges")
        verts = [self.piece_vertices(i) for i in range(h)]
        for i, piece in enumerate(self.pieces):
            a, b = self.edge(i)
            if not piece.is_simple():
                raise InvariantViolation(f"piece {i + 1} is not simple")
            if piece.style(a, b) is not self.cycle_styles[i]:
                raise InvariantViolation(f"piece {i + 1} lacks edge ({a},{b}) with style {self.cycle_styles[i]}")
            compact, labels = piece.subgraph(verts[i])
            if not classify_A(compact):
                raise InvariantViolation(f"piece {i + 1} is not of type A")
            _, cuts = biconnected(compact.signs, compact.vertices)
            if labels.index(a) + 1 in cuts or labels.index(b) + 1 in cuts:
                raise InvariantViolation(f"cycle vertex separates piece {i + 1}")
        for i in range(h):
            for j in range(i + 1, h):
                common = verts[i] & verts[j]
                if h == 2:
                    want = set(self.cycle_vertices)
                elif j == i + 1:
                    want = {self.cycle_vertices[j]}
                elif (i, j) == (0, h - 1):
                    want = {self.cycle_vertices[0]}
                else:
                    want = set()
                if common != want:
                    raise InvariantViolation(f"pieces {i + 1} and {j + 1} share {sorted(common)}")
        covered = frozenset().union(*verts)
        if covered != frozenset(range(1, self.n + 1)):
            raise InvariantViolation(f"vertices {sorted(set(range(1, self.n + 1)) - covered)} lie in no piece")


def glue(d: DCycleGluing) -> Bigraph:
    d.validate()
    return simplify(Bigraph(d.n, tuple(e for p in d.pieces for e in p.edges)))


def identify_vertices(j: Bigraph, u: int, v: int) -> Bigraph:
    """Merge nonadjacent ``u`` and ``v``.

    The merged vertex keeps the label ``min(u, v)``; labels above
    ``max(u, v)`` shift down by one.
    """
    if u == v:
        raise ValueError("identify needs two distinct vertices")
    if any({a, b} == {u, v} for a, b, _ in j.edges):
        raise VerticesAdjacent(f"{u} and {v} are adjacent")
    keep, drop = min(u, v), max(u, v)
    mapping = {w: (keep if w == drop else w - 1 if w > drop else w) for w in j.vertices}
    merged = Bigraph(j.n - 1, tuple((mapping[a], mapping[b], s) for a, b, s in j.edges))
    return simplify(merged)


def split_vertex(
    g: Bigraph,
    w: int,
    partition: tuple[Iterable[int], Iterable[int]],
    shared: tuple[int, LineStyle] | None = None,
) -> Bigraph:
    """Split ``w`` into ``u = w`` and a new vertex ``v = n + 1``.

    ``partition`` splits the neighbours of ``w``: ``u`` keeps the first
    side, ``v`` takes the second. ``shared = (a, style)`` additionally
    joins ``a`` to ``u`` with ``style`` and to ``v`` with the opposite
    style, a pair that cancels again on identification.
    """
    g.require_simple()
    side1, side2 = frozenset(partition[0]), frozenset(partition[1])
    nbrs = frozenset(g.signs[w])
    if side1 & side2 or side1 | side2 != nbrs:
        raise ValueError(f"{sorted(side1)} | {sorted(side2)} does not partition the neighbours of {w}")
    v = g.n + 1
    edges = []
    for a, b, s in g.edges:
        if w in (a, b) and (b if a == w else a) in side2:
            edges.append((v, b if a == w else a, s))
        else:
            edges.append((a, b, s))
    if shared is not None:
        a, style = shared[0], LineStyle.parse(shared[1])
        if a == w or a in nbrs:
            raise ValueError(f"shared vertex {a} must be a non-neighbour of {w}")
        edges += [(w, a, style), (v, a, style.opposite)]
    if (not side1 and shared is None) or (not side2 and shared is None):
        raise EmptySide(f"splitting {w} leaves a side without edges")
    return Bigraph(g.n + 1, tuple(edges))


def _bfs_paths(adj: Adjacency, x: int, y: int):
    """``(distance, number of shortest paths, one shortest path)`` from x to y."""
    dist = {x: 0}
    count = {x: 1}
    parent = {x: None}
    queue = deque([x])
    while queue:
        a = queue.popleft()
        if a == y:
            break
        for b in adj[a]:
            if b not in dist:
                dist[b] = dist[a] + 1
                count[b] = count[a]
                parent[b] = a
                queue.append(b)
            elif dist[b] == dist[a] + 1:
                count[b] += count[a]
    if y not in dist:
        return None, 0, None
    path = [y]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return dist[y], count[y], path[::-1]


def shortest_path_A(g: Bigraph, x: int, y: int) -> tuple[int, ...]:
    if x == y:
        raise ValueError("endpoints must differ")
    if not classify_A(g):
        raise NotAType("shortest paths are only unique in type A bigraphs")
    _, count, path = _bfs_paths(g.signs, x, y)
    if count != 1:
        raise InvariantViolation(f"{count} shortest paths between {x} and {y}")
    return tuple(path)


@dataclass(frozen=True)
class SplitWitness:
    """``G = J/{u, v}`` where ``J`` splits ``w`` (see :func:`split_vertex`)."""

    w: int
    partition: tuple[frozenset, frozenset]
    shared: tuple[int, LineStyle] | None
    J: Bigraph
    u: int
    v: int


def _dotted_count(adj: Adjacency, path) -> int:
    return sum(1 for a, b in zip(path, path[1:]) if adj[a][b] == 1)


def _check_split(jadj: Adjacency, verts: list[int], u: int, v: int) -> bool:
    d, count, path = _bfs_paths(jadj, u, v)
    if d is None or d < 2 or count != 1 or _dotted_count(jadj, path) % 2 == 0:
        return False
    found = a_type_blocks(jadj, verts)
    return found is not None and u not in found[1] and v not in found[1]


def _candidate_splits(g: Bigraph):
    """Every ``(w, side1, side2, shared)`` worth testing, in search order.

    Sides are unordered, so plain splits keep the lowest neighbour on
    side 1; with a shared neighbour ``u`` always takes the solid edge.
    """
    adj = g.signs
    for w in g.vertices:
        nbrs = sorted(adj[w])
        k = len(nbrs)
        for mask in range(1 << (k - 1)) if k else ():
            side2 = frozenset(nbrs[i + 1] for i in range(k - 1) if mask >> i & 1)
            side1 = frozenset(nbrs) - side2
            if side2:
                yield w, side1, side2, None
        for a in g.vertices:
            if a == w or a in adj[w]:
                continue
            for mask in range(1 << k):
                side2 = frozenset(nbrs[i] for i in range(k) if mask >> i & 1)
                yield w, frozenset(nbrs) - side2, side2, (a, SOLID)


def _split_adjacency(adj: Adjacency, n: int, w, side2, shared) -> Adjacency:
    v = n + 1
    jadj = dict(adj)
    jadj[w] = {b: x for b, x in adj[w].items() if b not in side2}
    jadj[v] = {b: adj[w][b] for b in side2}
    for b in side2:
        row = dict(adj[b])
        row[v] = row.pop(w)
        jadj[b] = row
    if shared is not None:
        a, style = shared
        jadj[w][a] = style.sign
        jadj[v][a] = -style.sign
        row = dict(jadj[a])
        row[w] = style.sign
        row[v] = -style.sign
        jadj[a] = row
    return jadj


def recognize_D(g: Bigraph) -> SplitWitness | None:
    """Find a vertex split certifying type D_n, or ``None`` if there is none."""
    g.require_simple()
    if g.n < 4 or not g.is_connected():
        return None
    adj = g.signs
    verts = list(range(1, g.n + 2))
    for w, side1, side2, shared in _candidate_splits(g):
        jadj = _split_adjacency(adj, g.n, w, side2, shared)
        if _check_split(jadj, verts, w, g.n + 1):
            j = split_vertex(g, w, (side1, side2), shared)
            return SplitWitness(w, (side1, side2), shared, j, w, g.n + 1)
    return None


def is_D_type(g: Bigraph) -> bool:
    return recognize_D(g) is not None


def check_split_witness(g: Bigraph, sw: SplitWitness) -> tuple[int, ...]:
    """Validate the four identification conditions; return the u..v path in ``J``."""
    j, u, v = sw.J, sw.u, sw.v
    if j.n != g.n + 1:
        raise InvalidWitness("J must have one more vertex than G")
    if u == v or any({a, b} == {u, v} for a, b, _ in j.edges):
        raise InvalidWitness(f"{u} and {v} are adjacent in J")
    if not classify_A(j):
        raise InvalidWitness("J is not of type A")
    _, cuts = biconnected(j.signs, j.vertices)
    if u in cuts or v in cuts:
        raise InvalidWitness("an identified vertex separates J")
    path = shortest_path_A(j, u, v)
    if len(path) < 3:
        raise InvalidWitness("identified vertices are adjacent")
    if _dotted_count(j.signs, path) % 2 == 0:
        raise InvalidWitness("shortest path has an even number of dotted edges")
    if identify_vertices(j, u, v) != g:
        raise InvalidWitness("J/{u,v} is not G")
    return path


def _normalize(cycle: list[int], styles: list[LineStyle], pieces: list[Bigraph]):
    h = len(cycle)
    k = cycle.index(min(cycle))
    cycle, styles, pieces = cycle[k:] + cycle[:k], styles[k:] + styles[:k], pieces[k:] + pieces[:k]
    flip = styles[0] is not DOTTED if h == 2 else cycle[-1] < cycle[1]
    if flip:
        idx = [(-i - 1) % h for i in range(h)]
        cycle = [cycle[0]] + cycle[:0:-1]
        styles = [styles[i] for i in idx]
        pieces = [pieces[i] for i in idx]
    return cycle, styles, pieces


def decomposition_from_split(g: Bigraph, sw: SplitWitness) -> DCycleGluing:
    path = check_split_witness(g, sw)
    j, u, v = sw.J, sw.u, sw.v
    keep, drop = min(u, v), max(u, v)
    to_g = {w: (keep if w == drop else w - 1 if w > drop else w) for w in j.vertices}
    h = len(path) - 1
    remaining = set(j.vertices)
    parts = []
    for i in range(h - 1):
        sep = path[i + 1]
        comp, stack = {path[i]}, [path[i]]
        while stack:
            a = stack.pop()
            for b in j.signs[a]:
                if b in remaining and b != sep and b not in comp:
                    comp.add(b)
                    stack.append(b)
        parts.append(comp | {sep})
        remaining -= comp
    parts.append(remaining)
    pieces = []
    for part in parts:
        edges = tuple((to_g[a], to_g[b], s) for a, b, s in j.edges if a in part and b in part)
        pieces.append(Bigraph(g.n, edges))
    cycle = [to_g[x] for x in path[:-1]]
    styles = [LineStyle.from_sign(j.signs[a][b]) for a, b in zip(path, path[1:])]
    cycle, styles, pieces = _normalize(cycle, styles, pieces)
    d = DCycleGluing(tuple(cycle), tuple(styles), tuple(pieces))
    try:
        glued = glue(d)
    except InvariantViolation as exc:
        raise InvalidWitness(f"split does not peel into a D-cycle gluing: {exc}") from exc
    if glued != g:
        raise InvalidWitness("peeled gluing does not reproduce G")
    return d


def split_from_gluing(d: DCycleGluing) -> SplitWitness:
    """Cut the cycle open at ``x_1``: ``x_1`` stays in the first piece, a new
    vertex ``n + 1`` replaces it in the last one."""
    d.validate()
    x1, new = d.cycle_vertices[0], d.n + 1
    edges = [e for p in d.pieces[:-1] for e in p.edges]
    edges += [(new if a == x1 else a, new if b == x1 else b, s) for a, b, s in d.pieces[-1].edges]
    j = Bigraph(d.n + 1, tuple(edges))
    side1 = frozenset(j.signs[x1])
    side2 = frozenset(j.signs[new])
    common = side1 & side2
    shared = None
    if common:
        (a,) = common
        shared = (a, LineStyle.from_sign(j.signs[x1][a]))
    return SplitWitness(x1, (side1 - common, side2 - common), shared, j, x1, new)


def _cycle_graph(g: Bigraph, cycle: list[int]) -> bool:
    h = len(cycle)
    pairs = {frozenset((cycle[i], cycle[(i + 1) % h])) for i in range(h)}
    return g.is_simple() and {frozenset(e[:2]) for e in g.edges} == pairs and len(g.edges) == h


def reduce_to_Dn(g: Bigraph, d: DCycleGluing) -> Reduction:
    try:
        glued = glue(d)
    except InvariantViolation as exc:
        raise InvalidDecomposition(str(exc)) from exc
    if glued != g:
        raise InvalidDecomposition("gluing does not reproduce the bigraph")
    if g.n < 4:
        raise InvalidDecomposition("type D needs at least four vertices")
    cycle = list(d.cycle_vertices)
    pieces = list(d.pieces)
    cur = g
    steps: list[FlationStep] = []

    def apply(step):
        nonlocal cur
        cur = flate_graph(cur, step)
        steps.append(step)

    # grow the cycle until every vertex lies on it
    while len(cycle) < g.n:
        on_cycle = set(cycle)
        for i, piece in enumerate(pieces):
            x = cycle[i]
            off = sorted(s for s in piece.signs[x] if s not in on_cycle)
            if off:
                break
        else:
            raise InvariantViolation("no piece can grow the cycle")
        s, nxt = off[0], cycle[(i + 1) % len(cycle)]
        step = FlationStep(s, x)
        apply(step)
        piece = flate_graph(piece, step)
        inner = {a for e in piece.edges for a in e[:2]} - {s}
        sides = []
        for start in (x, nxt):
            comp, stack = {start}, [start]
            while stack:
                a = stack.pop()
                for b in piece.signs[a]:
                    if b in inner and b not in comp:
                        comp.add(b)
                        stack.append(b)
            sides.append(comp)
        if sides[0] & sides[1] or sides[0] | sides[1] != inner:
            raise InvariantViolation(f"T({s},{x}) did not split the piece at {s}")
        halves = [Bigraph(g.n, tuple(e for e in piece.edges if set(e[:2]) <= side | {s})) for side in sides]
        cycle.insert(i + 1, s)
        pieces[i:i + 1] = halves
        styles = tuple(p.style(cycle[k], cycle[(k + 1) % len(cycle)]) for k, p in enumerate(pieces))
        step_d = DCycleGluing(tuple(cycle), styles, tuple(pieces))
        try:
            if glue(step_d) != cur:
                raise InvariantViolation("gluing drifted from the bigraph")
        except InvariantViolation as exc:
            raise InvariantViolation(f"cycle growth at T({s},{x}): {exc}") from exc

    n = g.n
    if not _cycle_graph(cur, cycle):
        raise InvariantViolation("cycle growth did not end on a cycle bigraph")
    x = [None] + cycle + [cycle[0]]  # 1-based, x[n+1] = x[1]
    # push the dotted edges round to {x_n, x_1}
    for i in range(2, n + 1):
        if cur.style(x[i - 1], x[i]) is DOTTED:
            apply(FlationStep(x[i], x[i - 1]))
            apply(FlationStep(x[i], x[i + 1]))
    # fan: T(x_3,x_1) ... T(x_n,x_1) applied right to left
    for k in range(n, 2, -1):
        apply(FlationStep(x[k], x[1]))
    labels = tuple(cycle)
    target = matrix_to_bigraph(canonical_cartan(f"D{n}")).relabel({k + 1: labels[k] for k in range(n)})
    if cur != target:
        raise InvariantViolation(f"reduction ended at {cur!r}, not D{n}")
    result, witness = apply_sequence(bigraph_to_matrix(g), steps)
    assert result == bigraph_to_matrix(cur)
    return Reduction(witness, labels, cur)
