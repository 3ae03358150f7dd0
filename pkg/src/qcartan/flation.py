"""The elementary transformation ``T(s, r)`` on matrices and on bigraphs.

At matrix level ``T(s, r)`` is the congruence ``A -> E^T A E`` with
``E = 1 + sigma * e_s e_r^T`` and ``sigma = -A[s, r]``. At graph level it
is the local edge rewriting around ``r``; the two are kept as separate
code paths so that each can check the other.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, TypeVar, overload

from . import intmat
from .core import Bigraph, LineStyle, QuasiCartanMatrix
from .errors import InvalidStep, NotSimple, SequenceStepError

# re-check every closed-form update against the full product (O(n^3) per step)
DEBUG_CONGRUENCE = False


@dataclass(frozen=True)
class FlationStep:
    s: int
    r: int

    def __post_init__(self):
        if self.s == self.r:
            raise InvalidStep(f"T({self.s},{self.r}) needs two distinct vertices")

    def check(self, n: int) -> None:
        if not (1 <= self.s <= n and 1 <= self.r <= n):
            raise InvalidStep(f"T({self.s},{self.r}) outside 1..{n}")

    def __iter__(self):
        return iter((self.s, self.r))

    def __str__(self) -> str:
        return f"T {self.s} {self.r}"


def as_step(step: FlationStep | tuple[int, int]) -> FlationStep:
    return step if isinstance(step, FlationStep) else FlationStep(*step)


@dataclass(frozen=True)
class FlationWitness:
    """Steps in application order and the product of their elementary matrices."""

    steps: tuple[FlationStep, ...]
    accumulated: intmat.IntMatrix

    @classmethod
    def identity(cls, n: int) -> "FlationWitness":
        return cls((), intmat.identity(n))

    @property
    def n(self) -> int:
        return len(self.accumulated)

    def __len__(self) -> int:
        return len(self.steps)


def elementary_matrix(n: int, s: int, r: int, sigma: int) -> intmat.IntMatrix:
    if s == r:
        raise InvalidStep("s == r would not give a determinant-one matrix")
    if not (1 <= s <= n and 1 <= r <= n):
        raise InvalidStep(f"({s},{r}) outside 1..{n}")
    rows = [list(row) for row in intmat.identity(n)]
    rows[s - 1][r - 1] = sigma
    return intmat.as_matrix(rows)


def flate_matrix(a: QuasiCartanMatrix, step: FlationStep | tuple[int, int]) -> QuasiCartanMatrix:
    step = as_step(step)
    step.check(a.n)
    s, r = step.s - 1, step.r - 1
    a_sr = a.entries[s][r]
    if abs(a_sr) >= 2:
        raise InvalidStep(f"|A[{step.s},{step.r}]| = {abs(a_sr)} is outside the simple regime")
    if a_sr == 0:
        return a
    sigma = -a_sr
    rows = [list(row) for row in a.entries]
    for i in range(a.n):
        if i == r:
            continue
        value = a.entries[i][r] + sigma * a.entries[i][s]
        rows[i][r] = value
        rows[r][i] = value
    rows[r][r] = 2
    result = QuasiCartanMatrix(tuple(map(tuple, rows)))
    if DEBUG_CONGRUENCE:
        e = elementary_matrix(a.n, step.s, step.r, sigma)
        assert intmat.congruence(e, a.entries) == result.entries, (a, step)
    return result


def flate_graph(g: Bigraph, step: FlationStep | tuple[int, int]) -> Bigraph:
    """Rewrite ``g`` edge by edge.

    For a positive definite input the result is again simple; otherwise
    two parallel edges of one style may appear, mirroring an entry of
    magnitude 2 in the matrix.
    """
    step = as_step(step)
    step.check(g.n)
    g.require_simple()
    s, r = step.s, step.r
    sr = g.style(s, r)
    if sr is None:
        return g
    styles: dict[tuple[int, int], list[LineStyle]] = defaultdict(list)
    for u, v, style in g.edges:
        styles[(u, v)].append(style)
    key = lambda u, v: (u, v) if u < v else (v, u)
    styles[key(s, r)] = [sr.opposite]
    for i in g.neighbors(s):
        if i == r:
            continue
        i_s = g.style(i, s)
        added = i_s if sr is LineStyle.SOLID else i_s.opposite
        pair = styles[key(i, r)]
        # cancel against an opposite parallel edge on {i, r}
        if added.opposite in pair:
            pair.remove(added.opposite)
        else:
            pair.append(added)
    edges = [(u, v, st) for (u, v), pair in styles.items() for st in pair]
    return Bigraph(g.n, tuple(edges))


T = TypeVar("T", Bigraph, QuasiCartanMatrix)


def _sigma(obj, s: int, r: int) -> int:
    if isinstance(obj, Bigraph):
        style = obj.style(s, r)
        return 0 if style is None else -style.sign
    return -obj[s, r]


def _push(acc: list[list[int]], s: int, r: int, sigma: int) -> None:
    # acc <- acc * (1 + sigma e_s e_r^T): column r += sigma * column s
    if sigma:
        for row in acc:
            row[r - 1] += sigma * row[s - 1]


@overload
def apply_sequence(obj: Bigraph, steps: Iterable) -> tuple[Bigraph, FlationWitness]: ...
@overload
def apply_sequence(obj: QuasiCartanMatrix, steps: Iterable) -> tuple[QuasiCartanMatrix, FlationWitness]: ...


def apply_sequence(obj, steps):
    """Apply steps left to right; the witness satisfies ``M^T A_in M = A_out``."""
    n = obj.n
    acc = [list(row) for row in intmat.identity(n)]
    done = []
    for index, step in enumerate(steps):
        try:
            step = as_step(step)
            step.check(n)
            sigma = _sigma(obj, step.s, step.r)
            obj = flate_graph(obj, step) if isinstance(obj, Bigraph) else flate_matrix(obj, step)
        except (InvalidStep, NotSimple) as exc:
            raise SequenceStepError(index, step, exc) from exc
        _push(acc, step.s, step.r, sigma)
        done.append(step)
    return obj, FlationWitness(tuple(done), intmat.as_matrix(acc))
