import itertools

import pytest
from hypothesis import given, strategies as st

from qcartan import intmat
from qcartan.core import (
    DOTTED,
    SOLID,
    Bigraph,
    DynkinType,
    LineStyle,
    QuasiCartanMatrix,
    bigraph_to_matrix,
    block_diagonal,
    is_positive_definite,
    matrix_to_bigraph,
    permute,
    simplify,
)
from qcartan.errors import InvalidMatrix, InvalidRank, NotSimple

from conftest import bigraphs, leibniz_det, matrix_rows


def test_line_style_signs():
    assert SOLID.sign == -1 and DOTTED.sign == 1
    assert SOLID.opposite is DOTTED and DOTTED.opposite is SOLID
    assert LineStyle.from_sign(3) is DOTTED
    assert LineStyle.parse("solid") is SOLID


def test_matrix_rejects_bad_diagonal_and_asymmetry():
    with pytest.raises(InvalidMatrix):
        QuasiCartanMatrix(((2, -1), (-1, 3)))
    with pytest.raises(InvalidMatrix):
        QuasiCartanMatrix(((2, -1), (0, 2)))
    with pytest.raises(InvalidMatrix):
        QuasiCartanMatrix(((2, 0, 0), (0, 2, 0)))


def test_matrix_to_bigraph_examples():
    assert matrix_to_bigraph(QuasiCartanMatrix(((2, -1), (-1, 2)))).edges == ((1, 2, SOLID),)
    assert matrix_to_bigraph(QuasiCartanMatrix(((2, 1), (1, 2)))).edges == ((1, 2, DOTTED),)
    assert matrix_to_bigraph(QuasiCartanMatrix.diagonal(3)).edges == ()


def test_bigraph_to_matrix_examples(two_block):
    assert bigraph_to_matrix(Bigraph.from_spec(2, "1-2")).entries == ((2, -1), (-1, 2))
    assert bigraph_to_matrix(Bigraph(4, ())) == QuasiCartanMatrix.diagonal(4)
    a = bigraph_to_matrix(two_block)
    for u, v, s in two_block.edges:
        assert a[u, v] == a[v, u] == s.sign
    assert sum(1 for i in range(1, 7) for j in range(i + 1, 7) if a[i, j]) == 9


def test_simplify_examples():
    assert simplify(Bigraph.from_edges(2, [(1, 2, SOLID), (1, 2, DOTTED)])).edges == ()
    twin = Bigraph.from_edges(2, [(1, 2, SOLID), (1, 2, SOLID)])
    assert simplify(twin) == twin
    assert not twin.is_simple()
    with pytest.raises(NotSimple):
        twin.require_simple()
    one = Bigraph.from_spec(2, "1~2")
    assert simplify(one) == one


def test_positive_definite_examples():
    assert is_positive_definite(QuasiCartanMatrix(((2, -1), (-1, 2))))
    assert intmat.leading_principal_minors(((2, -1), (-1, 2))) == [2, 3]
    triangle = QuasiCartanMatrix(((2, -1, -1), (-1, 2, -1), (-1, -1, 2)))
    assert not is_positive_definite(triangle)
    assert intmat.det(triangle.entries) == 0
    for n in range(1, 6):
        assert is_positive_definite(QuasiCartanMatrix.diagonal(n))


@pytest.mark.parametrize("c", [2, -2, 3, -5])
def test_large_entry_never_positive_definite(c):
    assert not is_positive_definite(QuasiCartanMatrix(((2, c), (c, 2))))


@given(bigraphs(max_n=5))
def test_bareiss_matches_permutation_expansion(g):
    rows = matrix_rows(g)
    assert intmat.det(rows) == leibniz_det(rows)
    minors = [leibniz_det([r[:k] for r in rows[:k]]) for k in range(1, g.n + 1)]
    assert intmat.leading_principal_minors(rows) == minors
    assert is_positive_definite(g) == all(m > 0 for m in minors)


@given(bigraphs())
def test_matrix_bigraph_round_trip(g):
    a = bigraph_to_matrix(g)
    assert matrix_to_bigraph(a) == g
    assert bigraph_to_matrix(matrix_to_bigraph(a)) == a


@given(bigraphs(), st.randoms(use_true_random=False))
def test_positive_definite_invariant_under_relabeling(g, rnd):
    labels = list(g.vertices)
    rnd.shuffle(labels)
    assert is_positive_definite(permute(bigraph_to_matrix(g), labels)) == is_positive_definite(g)


def test_components_and_subgraph():
    g = Bigraph.from_spec(5, "1-3 3~5 2-4")
    assert sorted(map(sorted, g.components())) == [[1, 3, 5], [2, 4]]
    assert not g.is_connected()
    sub, labels = g.subgraph([1, 3, 5])
    assert labels == (1, 3, 5) and sub.to_spec() == "1-2 2~3"


def test_block_diagonal():
    a = block_diagonal([QuasiCartanMatrix(((2, 1), (1, 2))), QuasiCartanMatrix.diagonal(1)])
    assert a.entries == ((2, 1, 0), (1, 2, 0), (0, 0, 2))


def test_dynkin_type_parse_and_ranges():
    assert DynkinType.parse("D5") == DynkinType("D", 5)
    assert str(DynkinType("E", 7)) == "E7"
    for bad in [("D", 3), ("E", 5), ("E", 9), ("A", 0), ("B", 3)]:
        with pytest.raises(InvalidRank):
            DynkinType(*bad)


@given(st.lists(st.tuples(st.integers(1, 4), st.integers(1, 4), st.sampled_from([SOLID, DOTTED])), max_size=10))
def test_simplify_idempotent(raw):
    g = Bigraph.from_edges(4, [(u, v, s) for u, v, s in raw if u != v])
    once = simplify(g)
    assert simplify(once) == once
    assert bigraph_to_matrix(once) == bigraph_to_matrix(g)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_large_entries_exclude_positive_definiteness(n):


    pairs = list(itertools.combinations(range(n), 2))
    for values in itertools.product(range(-2, 3), repeat=len(pairs)):
        if max(map(abs, values)) < 2:
            continue
        rows = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for (i, j), x in zip(pairs, values):
            rows[i][j] = rows[j][i] = x
        assert not is_positive_definite(QuasiCartanMatrix(rows))
