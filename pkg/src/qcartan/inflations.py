"""The classical inflations method and Dynkin diagram recognition.

This is the reference classifier: flip positive off-diagonal entries one
at a time until a Cartan matrix remains, then read the diagram shape.
The structural recognizers in :mod:`qcartan.blocks` and
:mod:`qcartan.dcycle` are tested against it.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from . import intmat
from .core import (
    Bigraph,
    DynkinType,
    QuasiCartanMatrix,
    block_diagonal,
    is_positive_definite,
    matrix_to_bigraph,
    permute,
)
from .errors import (
    EntryOutOfRange,
    GuardExceeded,
    InvalidRank,
    NotADynkinDiagram,
    NotPositiveDefinite,
)
from .flation import FlationStep, FlationWitness, apply_sequence, flate_matrix


@dataclass(frozen=True)
class ClassificationResult:
    """Dynkin types of the components plus the congruence that proves them.

    ``witness`` maps the input matrix onto ``canonical``; position ``k`` of
    the standard block-diagonal matrix is vertex ``permutation[k-1]`` of
    ``canonical``. ``methods`` records which recognizer settled each
    component.
    """

    types: tuple[DynkinType, ...]
    witness: FlationWitness
    canonical: QuasiCartanMatrix
    permutation: tuple[int, ...]
    methods: tuple[str, ...] = ()

    def standard(self) -> QuasiCartanMatrix:
        return block_diagonal([canonical_cartan(t) for t in self.types])


def canonical_cartan(t: DynkinType | str) -> QuasiCartanMatrix:
    """Standard Cartan matrix of a Dynkin type.

    A_n is the path 1..n. D_n joins 1 and 2 to 3, then runs the path 3..n.
    E_n is the path 1..n-1 with vertex n hanging off vertex 3.
    """
    if isinstance(t, str):
        t = DynkinType.parse(t)
    n = t.rank
    if t.family == "A":
        edges = [(i, i + 1) for i in range(1, n)]
    elif t.family == "D":
        edges = [(1, 3), (2, 3)] + [(i, i + 1) for i in range(3, n)]
    elif t.family == "E":
        edges = [(i, i + 1) for i in range(1, n - 1)] + [(3, n)]
    else:  # pragma: no cover - DynkinType validates the family
        raise InvalidRank(str(t))
    rows = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for u, v in edges:
        rows[u - 1][v - 1] = rows[v - 1][u - 1] = -1
    return QuasiCartanMatrix(tuple(map(tuple, rows)))


def _arm(adj, start, prev):
    arm = [start]
    while True:
        nxt = [w for w in adj[arm[-1]] if w != prev]
        if not nxt:
            return arm
        prev = arm[-1]
        arm.append(nxt[0])


def _recognize_component(g: Bigraph, comp: list[int]) -> tuple[DynkinType, list[int]]:
    adj = {v: [w for w in g.signs[v]] for v in comp}
    for v in comp:
        for w, x in g.signs[v].items():
            if x != -1:
                raise NotADynkinDiagram(f"edge ({v},{w}) is not a single solid edge")
    n = len(comp)
    n_edges = sum(len(a) for a in adj.values()) // 2
    if n_edges != n - 1:
        raise NotADynkinDiagram(f"component {comp} is not a tree")
    branch = [v for v in comp if len(adj[v]) >= 3]
    if not branch:
        if n == 1:
            return DynkinType("A", 1), comp[:]
        ends = [v for v in comp if len(adj[v]) == 1]
        return DynkinType("A", n), _arm(adj, min(ends), None)
    if len(branch) > 1 or len(adj[branch[0]]) > 3:
        raise NotADynkinDiagram(f"component {comp} has a bad branch point")
    c = branch[0]
    arms = sorted((_arm(adj, w, c) for w in adj[c]), key=lambda a: (len(a), a[0]))
    lengths = tuple(len(a) for a in arms)
    if lengths[:2] == (1, 1):
        order = [arms[0][0], arms[1][0], c] + arms[2]
        return DynkinType("D", n), order
    if lengths in ((1, 2, 2), (1, 2, 3), (1, 2, 4)):
        left, right = arms[1], arms[2]
        order = [left[1], left[0], c] + right + [arms[0][0]]
        return DynkinType("E", n), order
    raise NotADynkinDiagram(f"arm lengths {lengths} match no Dynkin diagram")


def recognize_diagram_labels(g: Bigraph) -> list[tuple[DynkinType, list[int]]]:
    """Per component (by smallest vertex): its type and the standard vertex order."""
    return [_recognize_component(g, comp) for comp in g.components()]


def recognize_diagram(g: Bigraph) -> tuple[DynkinType, ...]:
    return tuple(t for t, _ in recognize_diagram_labels(g))


def check_inflatable(a: QuasiCartanMatrix) -> None:
    if a.max_offdiagonal() >= 2:
        raise EntryOutOfRange("an off-diagonal entry has magnitude >= 2")
    if not is_positive_definite(a):
        raise NotPositiveDefinite("matrix is not positive definite")


def _pivot(a: QuasiCartanMatrix, order: str):
    pairs = ((s, r) for s in range(a.n) for r in range(s + 1, a.n))
    if order == "revlex":
        pairs = reversed(list(pairs))
    for s, r in pairs:
        if a.entries[s][r] == 1:
            return s + 1, r + 1
    return None


def inflations_method(a: QuasiCartanMatrix, order: Literal["lex", "revlex"] = "lex") -> ClassificationResult:
    check_inflatable(a)
    guard = 4 * a.n ** 3
    steps = []
    current = a
    while (pivot := _pivot(current, order)) is not None:
        if len(steps) >= guard:
            raise GuardExceeded(f"inflations did not stop after {guard} steps")
        step = FlationStep(*pivot)
        current = flate_matrix(current, step)
        steps.append(step)
    canonical, witness = apply_sequence(a, steps)
    assert canonical == current
    found = recognize_diagram_labels(matrix_to_bigraph(canonical))
    types = tuple(t for t, _ in found)
    perm = tuple(v for _, labels in found for v in labels)
    return ClassificationResult(types, witness, canonical, perm, ("inflations",) * len(types))


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = "ok"

    def __bool__(self) -> bool:
        return self.ok


def verify_witness(a_in: QuasiCartanMatrix, a_out: QuasiCartanMatrix, w: FlationWitness) -> Verdict:
    """Check ``w`` proves ``a_in`` and ``a_out`` Z-equivalent, step product included."""
    n = a_in.n
    if a_out.n != n or w.n != n or any(len(row) != n for row in w.accumulated):
        return Verdict(False, "dimension")
    if not intmat.is_unimodular(w.accumulated):
        return Verdict(False, "not-unimodular")
    if intmat.congruence(w.accumulated, a_in.entries) != a_out.entries:
        return Verdict(False, "congruence")
    try:
        replayed, again = apply_sequence(a_in, w.steps)
    except Exception as exc:  # any replay failure means the steps are bogus
        return Verdict(False, f"replay: {exc}")
    if again.accumulated != w.accumulated:
        return Verdict(False, "step-product")
    if replayed != a_out:
        return Verdict(False, "replay-result")
    return Verdict(True)


def standard_form_ok(result: ClassificationResult) -> bool:
    return permute(result.canonical, result.permutation) == result.standard()
