import itertools

import pytest
from hypothesis import given, strategies as st

from qcartan import intmat
from qcartan.core import Bigraph, QuasiCartanMatrix, bigraph_to_matrix, is_positive_definite
from qcartan.errors import InvalidStep, NotSimple, SequenceStepError
from qcartan.flation import (
    FlationStep,
    FlationWitness,
    apply_sequence,
    elementary_matrix,
    flate_graph,
    flate_matrix,
)

from conftest import bigraphs, strict_congruence


def test_elementary_matrix_examples():
    assert elementary_matrix(2, 1, 2, 1) == ((1, 1), (0, 1))
    assert elementary_matrix(2, 1, 2, 0) == intmat.identity(2)
    assert elementary_matrix(3, 3, 1, -1) == ((1, 0, 0), (0, 1, 0), (-1, 0, 1))


def test_step_validation():
    with pytest.raises(InvalidStep):
        FlationStep(2, 2)
    with pytest.raises(InvalidStep):
        FlationStep(1, 4).check(3)
    assert str(FlationStep(3, 1)) == "T 3 1"


def test_flate_matrix_dotted_pair():
    a = QuasiCartanMatrix(((2, 1), (1, 2)))
    e = elementary_matrix(2, 1, 2, -1)
    assert intmat.congruence(e, a.entries) == ((2, -1), (-1, 2))
    assert flate_matrix(a, (1, 2)).entries == ((2, -1), (-1, 2))


def test_flate_matrix_zero_entry_is_identity():
    a = bigraph_to_matrix(Bigraph.from_spec(3, "1-2 2~3"))
    assert flate_matrix(a, (1, 3)) == a
    assert flate_graph(Bigraph.from_spec(3, "1-2 2~3"), (1, 3)) == Bigraph.from_spec(3, "1-2 2~3")


def test_flate_matrix_rejects_large_entry():
    with pytest.raises(InvalidStep):
        flate_matrix(QuasiCartanMatrix(((2, -2), (-2, 2))), (1, 2))


def test_two_block_golden(two_block, two_block_flated):
    assert flate_graph(two_block, (1, 2)) == two_block_flated
    with strict_congruence():
        assert flate_matrix(bigraph_to_matrix(two_block), (1, 2)) == bigraph_to_matrix(two_block_flated)


@given(bigraphs(min_n=2), st.data())
def test_graph_and_matrix_paths_agree(g, data):
    s, r = data.draw(st.sampled_from(list(itertools.permutations(g.vertices, 2))))
    with strict_congruence():
        assert bigraph_to_matrix(flate_graph(g, (s, r))) == flate_matrix(bigraph_to_matrix(g), (s, r))


@given(bigraphs(min_n=2), st.data())
def test_step_is_an_involution(g, data):
    s, r = data.draw(st.sampled_from(list(itertools.permutations(g.vertices, 2))))
    once = flate_graph(g, (s, r))
    if once.is_simple():
        assert flate_graph(once, (s, r)) == g
    else:
        # a magnitude-2 entry appeared, so the graph rule no longer applies
        assert not is_positive_definite(g)
        with pytest.raises(NotSimple):
            flate_graph(once, (s, r))
    a = bigraph_to_matrix(g)
    assert flate_matrix(flate_matrix(a, (s, r)), (s, r)) == a


@given(bigraphs(min_n=2), st.lists(st.tuples(st.integers(1, 6), st.integers(1, 6)), max_size=8))
def test_sequence_witness_is_a_congruence(g, raw):
    steps = [(s, r) for s, r in raw if s != r and s <= g.n and r <= g.n]
    a = bigraph_to_matrix(g)
    try:
        out, w = apply_sequence(a, steps)
    except SequenceStepError as exc:
        assert isinstance(exc.cause, InvalidStep)
        return
    assert intmat.congruence(w.accumulated, a.entries) == out.entries
    assert intmat.is_unimodular(w.accumulated)
    assert is_positive_definite(out) == is_positive_definite(a)


def test_apply_sequence_examples():
    g = Bigraph.from_spec(3, "1-2 2~3")
    out, w = apply_sequence(g, [])
    assert out == g and w == FlationWitness.identity(3)
    out, w = apply_sequence(g, [(2, 3), (2, 3)])
    assert out == g and w.accumulated == intmat.identity(3)
    # F[{1,2},{3}] linearized into the A_3 path
    tri = Bigraph.from_spec(3, "1~2 1-3 2-3")
    out, _ = apply_sequence(tri, [(2, 1)])
    assert out == Bigraph.from_spec(3, "1-2 2-3")


def test_apply_sequence_reports_failing_index():
    a = QuasiCartanMatrix(((2, 1, 0), (1, 2, -1), (0, -1, 2)))
    with pytest.raises(SequenceStepError) as info:
        apply_sequence(a, [(1, 2), (3, 5)])
    assert info.value.index == 1
