import itertools

import pytest
from hypothesis import given, settings, strategies as st

from qcartan import intmat
from qcartan.core import Bigraph, DynkinType, QuasiCartanMatrix, bigraph_to_matrix, is_positive_definite
from qcartan.errors import EntryOutOfRange, NotADynkinDiagram, NotPositiveDefinite
from qcartan.flation import FlationStep, FlationWitness, flate_matrix
from qcartan.inflations import (
    canonical_cartan,
    check_inflatable,
    inflations_method,
    recognize_diagram,
    standard_form_ok,
    verify_witness,
)
from qcartan.oracle import EnumerationSpec, enumerate_bigraphs

from conftest import bigraphs

ALL_TYPES = [f"A{n}" for n in range(1, 9)] + [f"D{n}" for n in range(4, 9)] + ["E6", "E7", "E8"]

PD_UP_TO_5 = [
    g
    for n in range(1, 6)
    for g in enumerate_bigraphs(EnumerationSpec(n, filter="positive_definite_only"))
    if n < 5 or g.is_connected()
]


def test_canonical_examples():
    assert canonical_cartan("A1").entries == ((2,),)
    assert canonical_cartan("A3").entries == ((2, -1, 0), (-1, 2, -1), (0, -1, 2))
    d4 = canonical_cartan("D4")
    assert [(i, j) for i in range(1, 5) for j in range(i + 1, 5) if d4[i, j]] == [(1, 3), (2, 3), (3, 4)]
    assert all(d4[i, j] in (0, -1) for i in range(1, 5) for j in range(1, 5) if i != j)


@pytest.mark.parametrize("name", ALL_TYPES)
def test_canonical_matrices_are_positive_definite_fixed_points(name):
    a = canonical_cartan(name)
    assert is_positive_definite(a) and a.is_cartan()
    res = inflations_method(a)
    assert res.types == (DynkinType.parse(name),)
    assert res.witness.steps == () and res.canonical == a
    assert standard_form_ok(res)


@pytest.mark.parametrize("name,det", [("A5", 6), ("D6", 4), ("E6", 3), ("E7", 2), ("E8", 1)])
def test_canonical_determinants(name, det):
    # classical Cartan determinants: A_n -> n+1, D_n -> 4, E_n -> 9-n
    assert intmat.det(canonical_cartan(name).entries) == det


def test_recognize_diagram_examples():
    assert recognize_diagram(Bigraph.from_spec(5, "1-2 2-3 3-4 4-5")) == (DynkinType("A", 5),)
    assert recognize_diagram(Bigraph.from_spec(4, "1-2 1-3 1-4")) == (DynkinType("D", 4),)
    assert recognize_diagram(Bigraph.from_spec(6, "1-2 1-3 3-4 1-5 5-6")) == (DynkinType("E", 6),)
    assert recognize_diagram(Bigraph.from_spec(5, "1-2 3-4 4-5")) == (DynkinType("A", 2), DynkinType("A", 3))
    with pytest.raises(NotADynkinDiagram):
        recognize_diagram(Bigraph.from_spec(5, "1-2 1-3 1-4 1-5"))
    with pytest.raises(NotADynkinDiagram):
        recognize_diagram(Bigraph.from_spec(2, "1~2"))


def test_inflations_examples(two_block):
    res = inflations_method(QuasiCartanMatrix(((2, 1), (1, 2))))
    assert res.witness.steps == (FlationStep(1, 2),)
    assert res.canonical.entries == ((2, -1), (-1, 2))
    assert res.types == (DynkinType("A", 2),)
    assert inflations_method(bigraph_to_matrix(two_block)).types == (DynkinType("A", 6),)


def test_rejects_non_positive_definite():
    with pytest.raises(NotPositiveDefinite):
        inflations_method(QuasiCartanMatrix(((2, -1, -1), (-1, 2, -1), (-1, -1, 2))))
    with pytest.raises(EntryOutOfRange):
        check_inflatable(QuasiCartanMatrix(((2, 2), (2, 2))))


def test_selection_independence():
    for g in PD_UP_TO_5:
        a = bigraph_to_matrix(g)
        lex, rev = inflations_method(a), inflations_method(a, order="revlex")
        assert sorted(lex.types) == sorted(rev.types), g
        assert sum(t.rank for t in lex.types) == g.n


@settings(max_examples=60)
@given(st.sampled_from(PD_UP_TO_5), st.data())
def test_classification_invariant_under_flation(g, data):
    a = bigraph_to_matrix(g)
    if g.n < 2:
        return
    s, r = data.draw(st.sampled_from(list(itertools.permutations(g.vertices, 2))))
    assert sorted(inflations_method(flate_matrix(a, (s, r))).types) == sorted(inflations_method(a).types)


@settings(max_examples=60)
@given(bigraphs(max_n=7))
def test_witness_round_trip(g):
    a = bigraph_to_matrix(g)
    if not is_positive_definite(a):
        return
    res = inflations_method(a)
    assert verify_witness(a, res.canonical, res.witness)
    assert standard_form_ok(res)
    assert sum(t.rank for t in res.types) == g.n


def test_verify_witness_examples():
    a = canonical_cartan("D5")
    assert verify_witness(a, a, FlationWitness.identity(5))
    a = QuasiCartanMatrix(((2, 1), (1, 2)))
    res = inflations_method(a)
    assert verify_witness(a, canonical_cartan("A2"), res.witness)


def test_verify_witness_rejects_corruption(two_block):
    a = bigraph_to_matrix(two_block)
    res = inflations_method(a)
    steps = list(res.witness.steps)
    s, r = steps[0]
    steps[0] = FlationStep(s, r % 6 + 1 if r % 6 + 1 != s else (r + 1) % 6 + 1)
    forged = FlationWitness(tuple(steps), res.witness.accumulated)
    verdict = verify_witness(a, res.canonical, forged)
    assert not verdict and verdict.reason != "ok"
    bad_m = [list(row) for row in res.witness.accumulated]
    bad_m[0][0] += 1
    assert not verify_witness(a, res.canonical, FlationWitness(res.witness.steps, intmat.as_matrix(bad_m)))
    assert not verify_witness(a, canonical_cartan("A5"), res.witness)
