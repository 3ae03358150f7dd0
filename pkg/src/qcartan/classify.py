"""Top-level classification: structural recognizers first, inflations last."""
from __future__ import annotations

from .blocks import classify_A, reduce_to_An
from .core import Bigraph, DynkinType, QuasiCartanMatrix, bigraph_to_matrix, matrix_to_bigraph, permute
from .dcycle import decomposition_from_split, recognize_D, reduce_to_Dn
from .errors import InvariantViolation
from .flation import FlationStep, apply_sequence
from .inflations import ClassificationResult, check_inflatable, inflations_method


def _component(sub: Bigraph, structural: bool) -> tuple[DynkinType, list[FlationStep], tuple[int, ...], str]:
    n = sub.n
    if structural and classify_A(sub):
        red = reduce_to_An(sub)
        return DynkinType("A", n), list(red.witness.steps), red.labels, "A-block-tree"
    if structural and n >= 4:
        split = recognize_D(sub)
        if split is not None:
            red = reduce_to_Dn(sub, decomposition_from_split(sub, split))
            return DynkinType("D", n), list(red.witness.steps), red.labels, "D-cycle"
    res = inflations_method(bigraph_to_matrix(sub))
    (t,) = res.types
    return t, list(res.witness.steps), res.permutation, "inflations"


def classify(g: Bigraph | QuasiCartanMatrix, structural: bool = True) -> ClassificationResult:
    """Classify every connected component of ``g``.

    Components of type A or D are reduced with the block-tree and
    D-cycle constructions; anything else (the E family) goes through the
    inflations method. ``structural=False`` forces inflations everywhere.
    """
    a = g if isinstance(g, QuasiCartanMatrix) else bigraph_to_matrix(g)
    check_inflatable(a)
    g = matrix_to_bigraph(a)
    types, steps, perm, methods = [], [], [], []
    for comp in g.components():
        sub, labels = g.subgraph(comp)
        t, sub_steps, sub_perm, how = _component(sub, structural)
        types.append(t)
        methods.append(how)
        steps += [FlationStep(labels[s.s - 1], labels[s.r - 1]) for s in sub_steps]
        perm += [labels[v - 1] for v in sub_perm]
    canonical, witness = apply_sequence(a, steps)
    result = ClassificationResult(tuple(types), witness, canonical, tuple(perm), tuple(methods))
    if permute(canonical, result.permutation) != result.standard():
        raise InvariantViolation("classification does not land on the standard diagram")
    return result
