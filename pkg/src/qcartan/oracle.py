"""Independent checking machinery: exhaustive enumeration, seeded flation
walks and differential runs of the structural recognizers against the
inflations method."""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Literal

from .blocks import biconnected, classify_A
from .core import DOTTED, SOLID, Bigraph, DynkinType, bigraph_to_matrix, is_positive_definite, matrix_to_bigraph
from .dcycle import DCycleGluing, recognize_D
from .errors import TooLarge
from .flation import FlationStep, FlationWitness, apply_sequence
from .inflations import canonical_cartan, inflations_method

MAX_ENUMERATION = 7
_MASK = (1 << 64) - 1


class SplitMix64:
    """64-bit SplitMix generator.

    Written out rather than taken from :mod:`random` so a seed names the
    same walk in any language.
    """

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, k: int) -> int:
        return self.next() % k

    def step(self, n: int) -> FlationStep:
        s = 1 + self.below(n)
        r = 1 + self.below(n - 1)
        if r >= s:
            r += 1
        return FlationStep(s, r)


@dataclass(frozen=True)
class EnumerationSpec:
    n: int
    connectivity: Literal["all", "connected_only"] = "all"
    filter: Literal["none", "positive_definite_only"] = "none"

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.connectivity not in ("all", "connected_only"):
            raise ValueError(self.connectivity)
        if self.filter not in ("none", "positive_definite_only"):
            raise ValueError(self.filter)


def enumerate_bigraphs(spec: EnumerationSpec) -> Iterator[Bigraph]:
    """All simple signed graphs on ``1..n``, pairs in lexicographic order,
    each pair cycling through absent / solid / dotted."""
    if spec.n > MAX_ENUMERATION:
        raise TooLarge(f"enumeration is capped at n = {MAX_ENUMERATION}")
    pairs = list(itertools.combinations(range(1, spec.n + 1), 2))
    choices = (None, SOLID, DOTTED)
    for assignment in itertools.product(choices, repeat=len(pairs)):
        g = Bigraph(spec.n, tuple((u, v, s) for (u, v), s in zip(pairs, assignment) if s is not None))
        if spec.connectivity == "connected_only" and not g.is_connected():
            continue
        if spec.filter == "positive_definite_only" and not is_positive_definite(g):
            continue
        yield g


@dataclass(frozen=True)
class WalkSpec:
    base: DynkinType
    steps: int
    seed: int


def random_walk(spec: WalkSpec) -> tuple[Bigraph, FlationWitness]:
    """Apply ``spec.steps`` random flations to the standard diagram.

    The witness maps the standard Cartan matrix onto the returned graph.
    Steps on nonadjacent pairs are kept; they act as the identity.
    """
    base = spec.base if isinstance(spec.base, DynkinType) else DynkinType.parse(spec.base)
    rng = SplitMix64(spec.seed)
    steps = [rng.step(base.rank) for _ in range(spec.steps)] if base.rank > 1 else []
    g, witness = apply_sequence(matrix_to_bigraph(canonical_cartan(base)), steps)
    return g, witness


def random_gluing(seed: int, max_h: int = 5, max_piece: int = 4, min_n: int = 4) -> DCycleGluing:
    """A valid D-cycle gluing assembled from random A-type pieces."""
    rng = SplitMix64(seed)
    while True:
        h = 2 + rng.below(max_h - 1)
        raw = []
        while len(raw) < h:
            size = 2 + rng.below(max_piece - 1)
            g, _ = random_walk(WalkSpec(DynkinType("A", size), 3 * size, rng.next()))
            _, cuts = biconnected(g.signs, g.vertices)
            ends = [(a, b, s) for a, b, s in g.edges if a not in cuts and b not in cuts]
            if ends:
                a, b, s = ends[rng.below(len(ends))]
                if rng.below(2):
                    a, b = b, a
                raw.append((g, a, b, s))
        if sum(1 for *_, s in raw if s is DOTTED) % 2 == 0:
            continue
        n = h + sum(g.n - 2 for g, *_ in raw)
        if n < min_n:
            continue
        # shuffle the labels so the cycle does not always sit on 1..h
        order = list(range(1, n + 1))
        for i in range(n - 1, 0, -1):
            k = rng.below(i + 1)
            order[i], order[k] = order[k], order[i]
        cycle = order[:h]
        fresh = iter(order[h:])
        pieces = []
        for i, (g, a, b, s) in enumerate(raw):
            mapping = {a: cycle[i], b: cycle[(i + 1) % h]}
            for v in g.vertices:
                if v not in mapping:
                    mapping[v] = next(fresh)
            pieces.append(g.relabel(mapping, n))
        styles = tuple(s for *_, s in raw)
        d = DCycleGluing(tuple(cycle), styles, tuple(pieces))
        d.validate()
        return d


@dataclass
class DiffReport:
    n: int
    checked: int = 0
    positive_definite: int = 0
    types: Counter = field(default_factory=Counter)
    disagreements: list[tuple[Bigraph, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def lines(self) -> list[str]:
        from .formats import one_line

        return [f"{one_line(g)}  # {why}" for g, why in self.disagreements]


def differential_test(spec: EnumerationSpec) -> DiffReport:
    """Compare ``classify_A`` / ``recognize_D`` with the inflations method
    on every enumerated connected graph."""
    if spec.n > MAX_ENUMERATION:
        raise TooLarge(f"enumeration is capped at n = {MAX_ENUMERATION}")
    report = DiffReport(spec.n)
    n = spec.n
    for g in enumerate_bigraphs(spec):
        if not g.is_connected():
            continue
        report.checked += 1
        a_type = classify_A(g)
        d_type = n >= 4 and recognize_D(g) is not None
        if is_positive_definite(g):
            report.positive_definite += 1
            (t,) = inflations_method(bigraph_to_matrix(g)).types
            report.types[str(t)] += 1
            if a_type != (t.family == "A"):
                report.disagreements.append((g, f"classify_A={a_type} inflations={t}"))
            if n >= 4 and d_type != (t.family == "D"):
                report.disagreements.append((g, f"recognize_D={d_type} inflations={t}"))
        else:
            report.types["not-pd"] += 1
            if a_type:
                report.disagreements.append((g, "classify_A holds but matrix is not positive definite"))
            if d_type:
                report.disagreements.append((g, "recognize_D holds but matrix is not positive definite"))
    return report
